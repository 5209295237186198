use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::madic::MAdic;

/// Breakpoint of the graph: the map sends x to y.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Node {
    pub x: MAdic,
    pub y: MAdic,
}

/// Increasing PL homeomorphism between closed intervals, with breakpoints and
/// images in Z[1/m] and every slope an exact power of m.
///
/// Invariants, enforced by every constructor:
/// - at least two nodes, strictly increasing in both coordinates;
/// - the slope of piece i is exactly m^(slopes[i]);
/// - adjacent pieces carry distinct exponents (collinear breakpoints are
///   merged away), so structural equality coincides with equality of maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLSegmentMap {
    m: u32,
    nodes: Vec<Node>,
    slopes: Vec<i64>,
}

/// j >= 0 with a = b * m^j, for positive a, b; None if no such power exists.
fn pow_quotient(a: &BigInt, b: &BigInt, m: u32) -> Option<i64> {
    let (q, rem) = a.div_rem(b);
    if !rem.is_zero() {
        return None;
    }
    let mb = BigInt::from(m);
    let mut q = q;
    let mut j = 0i64;
    while q > BigInt::one() {
        let (q2, rem) = q.div_rem(&mb);
        if !rem.is_zero() {
            return None;
        }
        q = q2;
        j += 1;
    }
    if q.is_one() { Some(j) } else { None }
}

/// Exponent k with dy/dx = m^k, for positive m-adic dx, dy.
pub(crate) fn slope_exponent(dx: &MAdic, dy: &MAdic, m: u32) -> Option<i64> {
    if dx.signum() <= 0 || dy.signum() <= 0 {
        return None;
    }
    // dy/dx = (ny/nx) * m^(sx - sy); the unit parts must differ by a power
    // of m as integers.
    let base = i64::from(dx.exponent()) - i64::from(dy.exponent());
    if dy.numerator() >= dx.numerator() {
        pow_quotient(dy.numerator(), dx.numerator(), m).map(|j| base + j)
    } else {
        pow_quotient(dx.numerator(), dy.numerator(), m).map(|j| base - j)
    }
}

impl PLSegmentMap {
    fn build(m: u32, pts: Vec<(MAdic, MAdic)>, declared: Option<&[i64]>) -> Result<PLSegmentMap> {
        if m < 2 {
            return Err(Error::InvalidMap("base m must be at least 2".into()));
        }
        if pts.len() < 2 {
            return Err(Error::InvalidMap("a segment map needs at least two nodes".into()));
        }
        if let Some(ks) = declared
            && ks.len() != pts.len() - 1
        {
            return Err(Error::InvalidMap(format!(
                "{} slope exponents declared for {} pieces",
                ks.len(),
                pts.len() - 1
            )));
        }
        let mut nodes: Vec<Node> = Vec::with_capacity(pts.len());
        let mut slopes: Vec<i64> = Vec::with_capacity(pts.len() - 1);
        let mut iter = pts.into_iter();
        let (x0, y0) = iter.next().expect("nonempty");
        nodes.push(Node { x: x0, y: y0 });
        for (i, (x, y)) in iter.enumerate() {
            let prev = nodes.last().expect("nonempty");
            if prev.x.compare(&x, m) != Ordering::Less {
                return Err(Error::InvalidMap(format!(
                    "breakpoints are not strictly increasing at piece {i}: {} then {}",
                    prev.x.render(m),
                    x.render(m)
                )));
            }
            if prev.y.compare(&y, m) != Ordering::Less {
                return Err(Error::InvalidMap(format!(
                    "images are not strictly increasing at piece {i}: {} then {}",
                    prev.y.render(m),
                    y.render(m)
                )));
            }
            let dx = x.sub(&prev.x, m);
            let dy = y.sub(&prev.y, m);
            let Some(k) = slope_exponent(&dx, &dy, m) else {
                return Err(Error::InvalidMap(format!(
                    "slope {}/{} on piece {i} is not a power of m = {m}",
                    dy.render(m),
                    dx.render(m)
                )));
            };
            if let Some(ks) = declared
                && ks[i] != k
            {
                return Err(Error::InvalidMap(format!(
                    "declared slope exponent {} on piece {i} does not match derived {k}",
                    ks[i]
                )));
            }
            if slopes.last() == Some(&k) {
                // Collinear continuation: extend the current piece.
                *nodes.last_mut().expect("nonempty") = Node { x, y };
            } else {
                nodes.push(Node { x, y });
                slopes.push(k);
            }
        }
        Ok(PLSegmentMap { m, nodes, slopes })
    }

    /// Build from breakpoint/image pairs; slopes are derived and collinear
    /// nodes merged.
    pub fn from_nodes(m: u32, pts: Vec<(MAdic, MAdic)>) -> Result<PLSegmentMap> {
        Self::build(m, pts, None)
    }

    /// Like [`PLSegmentMap::from_nodes`] but cross-checks a declared slope
    /// exponent per input piece against the derived one.
    pub fn from_nodes_with_slopes(
        m: u32,
        pts: Vec<(MAdic, MAdic)>,
        declared: &[i64],
    ) -> Result<PLSegmentMap> {
        Self::build(m, pts, Some(declared))
    }

    pub fn identity(m: u32, a: MAdic, c: MAdic) -> Result<PLSegmentMap> {
        let ya = a.clone();
        let yc = c.clone();
        Self::from_nodes(m, vec![(a, ya), (c, yc)])
    }

    /// x maps to x + dy on [a, c].
    pub fn translation(m: u32, a: MAdic, c: MAdic, dy: &MAdic) -> Result<PLSegmentMap> {
        let ya = a.add(dy, m);
        let yc = c.add(dy, m);
        Self::from_nodes(m, vec![(a, ya), (c, yc)])
    }

    /// x maps to y0 + m^k (x - a) on [a, c].
    pub fn affine(m: u32, a: MAdic, c: MAdic, y0: MAdic, k: i64) -> Result<PLSegmentMap> {
        let yc = y0.add(&c.sub(&a, m).mul_pow(k, m), m);
        Self::from_nodes(m, vec![(a, y0), (c, yc)])
    }

    pub fn base(&self) -> u32 {
        self.m
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn slopes(&self) -> &[i64] {
        &self.slopes
    }

    pub fn piece_count(&self) -> usize {
        self.slopes.len()
    }

    pub fn domain(&self) -> (&MAdic, &MAdic) {
        (&self.nodes[0].x, &self.nodes[self.nodes.len() - 1].x)
    }

    pub fn codomain(&self) -> (&MAdic, &MAdic) {
        (&self.nodes[0].y, &self.nodes[self.nodes.len() - 1].y)
    }

    fn piece_index_for(&self, pos: &MAdic, xs: bool) -> Result<usize> {
        fn coord(nd: &Node, xs: bool) -> &MAdic {
            if xs { &nd.x } else { &nd.y }
        }
        let (lo, hi) = (
            coord(&self.nodes[0], xs),
            coord(&self.nodes[self.nodes.len() - 1], xs),
        );
        if pos.compare(lo, self.m) == Ordering::Less || pos.compare(hi, self.m) == Ordering::Greater {
            return Err(Error::OutOfDomain(pos.render(self.m)));
        }
        let idx = self
            .nodes
            .partition_point(|nd| coord(nd, xs).compare(pos, self.m) != Ordering::Greater);
        Ok(idx.clamp(1, self.nodes.len() - 1) - 1)
    }

    pub fn evaluate(&self, x: &MAdic) -> Result<MAdic> {
        let i = self.piece_index_for(x, true)?;
        let nd = &self.nodes[i];
        Ok(nd.y.add(&x.sub(&nd.x, self.m).mul_pow(self.slopes[i], self.m), self.m))
    }

    /// Preimage of y under this (strictly increasing) map.
    pub fn invert_point(&self, y: &MAdic) -> Result<MAdic> {
        let i = self.piece_index_for(y, false)?;
        let nd = &self.nodes[i];
        Ok(nd.x.add(&y.sub(&nd.y, self.m).mul_pow(-self.slopes[i], self.m), self.m))
    }

    pub fn inverse(&self) -> PLSegmentMap {
        // Swapping coordinates keeps both monotonicity and the merged form;
        // slopes negate piecewise.
        PLSegmentMap {
            m: self.m,
            nodes: self
                .nodes
                .iter()
                .map(|nd| Node {
                    x: nd.y.clone(),
                    y: nd.x.clone(),
                })
                .collect(),
            slopes: self.slopes.iter().map(|k| -k).collect(),
        }
    }

    /// self after inner: (self.compose(g))(x) = self(g(x)).
    pub fn compose(&self, inner: &PLSegmentMap) -> Result<PLSegmentMap> {
        if self.m != inner.m {
            return Err(Error::BaseMismatch(inner.m, self.m));
        }
        let (ga, gc) = inner.codomain();
        let (fa, fc) = self.domain();
        if ga != fa || gc != fc {
            return Err(Error::DomainMismatch(format!(
                "inner codomain [{}, {}] differs from outer domain [{}, {}]",
                ga.render(self.m),
                gc.render(self.m),
                fa.render(self.m),
                fc.render(self.m)
            )));
        }
        let mut xs: Vec<MAdic> = inner.nodes.iter().map(|nd| nd.x.clone()).collect();
        for nd in &self.nodes {
            // Outer breakpoints live in the inner codomain; pull them back.
            xs.push(inner.invert_point(&nd.x)?);
        }
        let m = self.m;
        xs.sort_by(|a, b| a.compare(b, m));
        xs.dedup();
        let mut pts = Vec::with_capacity(xs.len());
        for x in xs {
            let z = self.evaluate(&inner.evaluate(&x)?)?;
            pts.push((x, z));
        }
        Self::from_nodes(m, pts)
    }

    /// Shift the graph: domain by dx, images by dy.
    pub fn translate(&self, dx: &MAdic, dy: &MAdic) -> PLSegmentMap {
        PLSegmentMap {
            m: self.m,
            nodes: self
                .nodes
                .iter()
                .map(|nd| Node {
                    x: nd.x.add(dx, self.m),
                    y: nd.y.add(dy, self.m),
                })
                .collect(),
            slopes: self.slopes.clone(),
        }
    }

    /// The restriction to [lo, hi], a sub-interval of the domain.
    pub fn restrict(&self, lo: &MAdic, hi: &MAdic) -> Result<PLSegmentMap> {
        if lo.compare(hi, self.m) != Ordering::Less {
            return Err(Error::InvalidArgument(format!(
                "restriction needs lo < hi, got [{}, {}]",
                lo.render(self.m),
                hi.render(self.m)
            )));
        }
        let mut pts = vec![(lo.clone(), self.evaluate(lo)?)];
        for nd in &self.nodes {
            if nd.x.compare(lo, self.m) == Ordering::Greater
                && nd.x.compare(hi, self.m) == Ordering::Less
            {
                pts.push((nd.x.clone(), nd.y.clone()));
            }
        }
        pts.push((hi.clone(), self.evaluate(hi)?));
        Self::from_nodes(self.m, pts)
    }

    /// Glue consecutive segment maps into one; endpoints must match exactly
    /// in both coordinates.
    pub fn concat(parts: &[PLSegmentMap]) -> Result<PLSegmentMap> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidArgument("nothing to concatenate".into()));
        };
        let m = first.m;
        let mut pts: Vec<(MAdic, MAdic)> = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            if part.m != m {
                return Err(Error::BaseMismatch(m, part.m));
            }
            let mut iter = part.nodes.iter();
            if let Some(last) = pts.last() {
                let start = iter.next().expect("segment maps have nodes");
                if start.x != last.0 || start.y != last.1 {
                    return Err(Error::InvalidMap(format!(
                        "gluing mismatch between parts {} and {i}: ({}, {}) then ({}, {})",
                        i - 1,
                        last.0.render(m),
                        last.1.render(m),
                        start.x.render(m),
                        start.y.render(m)
                    )));
                }
            }
            pts.extend(iter.map(|nd| (nd.x.clone(), nd.y.clone())));
        }
        Self::from_nodes(m, pts)
    }

    /// Re-derive every invariant from the stored data. Empty means valid;
    /// library-built maps always are, so this doubles as a test oracle.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let m = self.m;
        if m < 2 {
            out.push("base m is below 2".into());
            return out;
        }
        if self.nodes.len() < 2 {
            out.push("fewer than two nodes".into());
            return out;
        }
        if self.slopes.len() != self.nodes.len() - 1 {
            out.push(format!(
                "{} slope exponents for {} pieces",
                self.slopes.len(),
                self.nodes.len() - 1
            ));
            return out;
        }
        for i in 0..self.nodes.len() - 1 {
            let (a, b) = (&self.nodes[i], &self.nodes[i + 1]);
            if a.x.compare(&b.x, m) != Ordering::Less {
                out.push(format!("breakpoints not strictly increasing at piece {i}"));
                continue;
            }
            if a.y.compare(&b.y, m) != Ordering::Less {
                out.push(format!("images not strictly increasing at piece {i}"));
                continue;
            }
            let dx = b.x.sub(&a.x, m);
            let dy = b.y.sub(&a.y, m);
            match slope_exponent(&dx, &dy, m) {
                Some(k) if k == self.slopes[i] => {}
                Some(k) => out.push(format!(
                    "stored slope exponent {} on piece {i} differs from derived {k}",
                    self.slopes[i]
                )),
                None => out.push(format!("slope on piece {i} is not a power of m = {m}")),
            }
            if i > 0 && self.slopes[i - 1] == self.slopes[i] {
                out.push(format!("pieces {} and {i} are collinear but unmerged", i - 1));
            }
        }
        out
    }
}
