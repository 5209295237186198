//! Human-readable rendering of maps and descriptors: one affine formula
//! per piece, with exact m-adic literals throughout.

use trm_core::conjugacy::TorsionDescriptor;
use trm_core::{MAdic, PLCircleMap, PLSegmentMap};

/// "m^k x + c" with the power folded away when it is trivial.
fn affine_formula(m: u32, k: i64, c: &MAdic) -> String {
    let scale = match k {
        0 => String::new(),
        1 => format!("{m} "),
        _ => format!("{m}^{k} "),
    };
    let x = format!("{scale}x");
    if c.is_zero() {
        return x;
    }
    if c.signum() < 0 {
        return format!("{x} - {}", c.neg().render(m));
    }
    format!("{x} + {}", c.render(m))
}

fn piece_lines(f: &PLSegmentMap, out: &mut String) {
    let m = f.base();
    let nodes = f.nodes();
    for (i, k) in f.slopes().iter().enumerate() {
        let lo = &nodes[i];
        let hi = &nodes[i + 1];
        // y = m^k (x - lo.x) + lo.y, expanded to m^k x + c.
        let c = lo.y.sub(&lo.x.mul_pow(*k, m), m);
        let close = if i + 1 == f.piece_count() { "]" } else { ")" };
        out.push_str(&format!(
            "  on [{}, {}{close}: x -> {}\n",
            lo.x.render(m),
            hi.x.render(m),
            affine_formula(m, *k, &c),
        ));
    }
}

pub fn segment_map(f: &PLSegmentMap) -> String {
    let m = f.base();
    let (a, c) = f.domain();
    let (a2, c2) = f.codomain();
    let mut out = format!(
        "segment map [{}, {}] -> [{}, {}], base {m}, {} piece(s)\n",
        a.render(m),
        c.render(m),
        a2.render(m),
        c2.render(m),
        f.piece_count(),
    );
    piece_lines(f, &mut out);
    out.pop();
    out
}

pub fn circle_map(f: &PLCircleMap) -> String {
    let m = f.base();
    let mut out = format!(
        "circle map S_{} -> S_{}, base {m}, {} piece(s), f(0) = {}\n",
        f.r_src().render(m),
        f.r_tgt().render(m),
        f.piece_count(),
        f.offset().render(m),
    );
    out.push_str("lift on one period:\n");
    piece_lines(f.lift(), &mut out);
    out.pop();
    out
}

pub fn descriptor(d: &TorsionDescriptor) -> String {
    format!("conjugacy invariant: {}", d.render())
}
