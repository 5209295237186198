//! Finite-order elements of T_{r,m}: existence, admissible first points,
//! and explicit construction.
//!
//! T_{r,m} has an element of order q exactly when gcd(m-1, q) divides r.
//! The construction realizes rotation number 1/q by cutting the circle at a
//! q-point orbit 0 < a < x_2 < ... < x_{q-1} < r, mapping each orbit
//! interval onto the next by an interval witness, and closing the cycle
//! with the inverse of the accumulated composite, so f^q = id holds by
//! construction rather than by approximation.

use num_bigint::BigInt;
use std::cmp::Ordering;

use crate::arith::gcd_u64;
use crate::bieri_strebel::interval_witness;
use crate::error::{Error, Result};
use crate::madic::MAdic;
use crate::plmap::{GroupParams, PLCircleMap, PLSegmentMap};

/// gcd(m-1, q) | r, the exact existence criterion for order-q elements.
pub fn torsion_exists(params: &GroupParams, q: u32) -> bool {
    if q == 0 {
        return false;
    }
    let d = gcd_u64(u64::from(params.m() - 1), u64::from(q));
    u64::from(params.r()) % d == 0
}

/// Is a an admissible first point for an order-q element with rotation
/// number 1/q, i.e. a in (0, r) with r - q a in (m-1)Z[1/m]?
pub fn is_admissible(params: &GroupParams, q: u32, a: &MAdic) -> Result<bool> {
    if q < 2 {
        return Err(Error::InvalidArgument(
            "admissibility concerns orders q >= 2".into(),
        ));
    }
    let m = params.m();
    let r = params.circumference();
    if a.signum() <= 0 || a.compare(&r, m) != Ordering::Less {
        return Err(Error::InvalidArgument(format!(
            "a = {} must lie strictly between 0 and r = {}",
            a.render(m),
            r.render(m)
        )));
    }
    Ok(defect_of(params, q, a).in_ideal(m))
}

/// r - q a, the quantity whose ideal membership decides admissibility.
fn defect_of(params: &GroupParams, q: u32, a: &MAdic) -> MAdic {
    let m = params.m();
    params
        .circumference()
        .sub(&a.mul_int(&BigInt::from(q), m), m)
}

/// Residues N mod (m-1) of canonical numerators of admissible first points;
/// empty exactly when no order-q element exists. Because every power of m
/// is 1 mod (m-1), the residue of a = N/m^s is well defined and
/// admissibility of a depends only on it: r - q a is in the ideal iff
/// q N = r mod (m-1).
pub fn realizable_residues(params: &GroupParams, q: u32) -> Vec<u32> {
    let span = params.m() - 1;
    (0..span)
        .filter(|n| (u64::from(q) * u64::from(*n)) % u64::from(span) == u64::from(params.r()) % u64::from(span))
        .collect()
}

/// The least admissible a, scanning exponents then numerators: the first
/// canonical N/m^s with s minimal, then N minimal. Exists whenever
/// torsion_exists holds (s <= 1 always suffices).
pub fn default_admissible_a(params: &GroupParams, q: u32) -> Result<MAdic> {
    least_admissible(params, q, None)
}

/// The least admissible a whose canonical numerator has the given residue
/// mod (m-1).
pub fn admissible_a_with_residue(params: &GroupParams, q: u32, residue: u32) -> Result<MAdic> {
    let span = params.m() - 1;
    if residue >= span && !(span == 1 && residue == 0) {
        return Err(Error::InvalidArgument(format!(
            "residue {residue} is outside [0, {}]",
            span.saturating_sub(1)
        )));
    }
    if !realizable_residues(params, q).contains(&residue) {
        return Err(Error::ResidueNotRealizable(residue, span));
    }
    least_admissible(params, q, Some(residue))
}

fn least_admissible(params: &GroupParams, q: u32, residue: Option<u32>) -> Result<MAdic> {
    if q < 2 {
        return Err(Error::InvalidArgument(
            "construction concerns orders q >= 2".into(),
        ));
    }
    if !torsion_exists(params, q) {
        let d = gcd_u64(u64::from(params.m() - 1), u64::from(q)) as u32;
        return Err(Error::NoTorsion {
            r: params.r(),
            m: params.m(),
            q,
            d,
        });
    }
    let m = params.m();
    let span = u64::from(m - 1);
    let r = u64::from(params.r());
    for s in 0..=1u32 {
        let bound = r * u64::from(m).pow(s);
        for n in 1..bound {
            if s > 0 && n % u64::from(m) == 0 {
                continue; // not canonical at this exponent
            }
            let fits = match residue {
                Some(res) => n % span == u64::from(res) % span,
                None => (u64::from(q) * n) % span == r % span,
            };
            if fits {
                return Ok(MAdic::normalize(BigInt::from(n), i64::from(s), m));
            }
        }
    }
    unreachable!("a realizable residue always yields an admissible a with s <= 1")
}

/// Order-q element f of T_{r,m} with rotation number 1/q and f(0) = a, for
/// an admissible a.
pub fn construct_torsion(params: &GroupParams, q: u32, a: &MAdic) -> Result<PLCircleMap> {
    if q < 2 {
        return Err(Error::InvalidArgument(
            "construction concerns orders q >= 2; order 1 is the identity".into(),
        ));
    }
    let m = params.m();
    let r = params.circumference();
    if a.signum() <= 0 || a.compare(&r, m) != Ordering::Less {
        return Err(Error::NotAdmissible(
            a.render(m),
            format!("a must lie strictly between 0 and r = {}", r.render(m)),
        ));
    }
    if !defect_of(params, q, a).in_ideal(m) {
        return Err(Error::NotAdmissible(
            a.render(m),
            format!(
                "r - q a = {} is not in (m-1)Z[1/m] for m = {m}",
                defect_of(params, q, a).render(m)
            ),
        ));
    }

    // Orbit lengths: l_0 = a is forced. Give the q-2 middle intervals the
    // length a / m^e, which is congruent to a mod the ideal; the last
    // interval absorbs the rest, and its congruence to a is exactly the
    // admissibility of a. e is the least exponent keeping the last length
    // positive, so small a gives the uniform layout at e = 0.
    let mut lengths = vec![a.clone()];
    if q >= 3 {
        let mut e = 0i64;
        let qm2 = BigInt::from(q - 2);
        let rest = r.sub(a, m);
        loop {
            let middle = a.mul_pow(-e, m);
            let tail = rest.sub(&middle.mul_int(&qm2, m), m);
            if tail.signum() > 0 {
                for _ in 0..q - 2 {
                    lengths.push(middle.clone());
                }
                lengths.push(tail);
                break;
            }
            e += 1;
        }
    } else {
        lengths.push(r.sub(a, m));
    }

    // Orbit points x_0 = 0 < x_1 = a < ... < x_{q-1} < x_q = r.
    let mut xs = vec![MAdic::zero()];
    for l in &lengths {
        xs.push(xs.last().expect("nonempty").add(l, m));
    }
    debug_assert_eq!(xs.last(), Some(&r));

    // Interval witnesses w_i: I_i -> I_{i+1}, then close the cycle with the
    // deck-shifted inverse of their composite, which forces lift^q = x + r.
    let mut pieces: Vec<PLSegmentMap> = Vec::with_capacity(usize::try_from(q).expect("small q"));
    let mut around: Option<PLSegmentMap> = None;
    for i in 0..(q as usize) - 1 {
        let w = interval_witness(&xs[i], &xs[i + 1], &xs[i + 1], &xs[i + 2], m)?;
        around = Some(match around {
            None => w.clone(),
            Some(acc) => w.compose(&acc)?,
        });
        pieces.push(w);
    }
    let around = around.expect("q >= 2 gives at least one witness");
    pieces.push(around.inverse().translate(&MAdic::zero(), &r));

    let lift = PLSegmentMap::concat(&pieces)?;
    PLCircleMap::from_lift(r.clone(), r, lift)
}

/// Order-q element with rotation number p/q (p coprime to q), built as the
/// p-th power of a rotation-number-1/q element at the default admissible
/// first point.
pub fn construct_torsion_with_rotation(
    params: &GroupParams,
    q: u32,
    p: u32,
) -> Result<PLCircleMap> {
    if q == 0 {
        return Err(Error::InvalidArgument("order q must be positive".into()));
    }
    if gcd_u64(u64::from(p), u64::from(q)) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    if !torsion_exists(params, q) {
        let d = gcd_u64(u64::from(params.m() - 1), u64::from(q)) as u32;
        return Err(Error::NoTorsion {
            r: params.r(),
            m: params.m(),
            q,
            d,
        });
    }
    if q == 1 {
        return PLCircleMap::identity(params.m(), &params.circumference());
    }
    let a = default_admissible_a(params, q)?;
    let f = construct_torsion(params, q, &a)?;
    f.power(i64::from(p))
}
