use std::cmp::Ordering;

use num_traits::{ToPrimitive, Zero};

use super::segment::PLSegmentMap;
use super::{OrderBudget, RotationNumber};
use crate::error::{Error, Result};
use crate::madic::MAdic;

/// Orientation-preserving PL homeomorphism from the circle of circumference
/// r_src to the circle of circumference r_tgt (both circles are R/rZ with
/// the m-adic structure).
///
/// The map is stored through its canonical lift on the fundamental domain
/// [0, r_src]: an increasing segment map spanning exactly one target
/// circumference, with the offset f(0) normalized into [0, r_tgt). Together
/// with the merged form of the lift this makes structural equality agree
/// with equality of circle maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLCircleMap {
    r_src: MAdic,
    r_tgt: MAdic,
    lift: PLSegmentMap,
}

impl PLCircleMap {
    /// Wrap a lift into a circle map, normalizing the offset by a deck
    /// translation if needed.
    pub fn from_lift(r_src: MAdic, r_tgt: MAdic, lift: PLSegmentMap) -> Result<PLCircleMap> {
        let m = lift.base();
        if r_src.signum() <= 0 || r_tgt.signum() <= 0 {
            return Err(Error::InvalidMap("circumference must be positive".into()));
        }
        let (d0, d1) = lift.domain();
        if !d0.is_zero() || d1 != &r_src {
            return Err(Error::InvalidMap(format!(
                "lift domain [{}, {}] is not [0, {}]",
                d0.render(m),
                d1.render(m),
                r_src.render(m)
            )));
        }
        let (c0, c1) = lift.codomain();
        if c1.sub(c0, m) != r_tgt {
            return Err(Error::InvalidMap(format!(
                "lift spans {}, not one target circumference {}",
                c1.sub(c0, m).render(m),
                r_tgt.render(m)
            )));
        }
        let k = c0.floor_div(&r_tgt, m);
        let lift = if k.is_zero() {
            lift
        } else {
            lift.translate(&MAdic::zero(), &r_tgt.mul_int(&k, m).neg())
        };
        Ok(PLCircleMap { r_src, r_tgt, lift })
    }

    pub fn identity(m: u32, r: &MAdic) -> Result<PLCircleMap> {
        let lift = PLSegmentMap::identity(m, MAdic::zero(), r.clone())?;
        Self::from_lift(r.clone(), r.clone(), lift)
    }

    /// Rotation by t on the circle of circumference r.
    pub fn rotation(m: u32, r: &MAdic, t: &MAdic) -> Result<PLCircleMap> {
        let t = t.rem_mod(r, m);
        let lift = PLSegmentMap::translation(m, MAdic::zero(), r.clone(), &t)?;
        Self::from_lift(r.clone(), r.clone(), lift)
    }

    pub fn base(&self) -> u32 {
        self.lift.base()
    }

    pub fn r_src(&self) -> &MAdic {
        &self.r_src
    }

    pub fn r_tgt(&self) -> &MAdic {
        &self.r_tgt
    }

    pub fn lift(&self) -> &PLSegmentMap {
        &self.lift
    }

    /// f(0), already normalized into [0, r_tgt).
    pub fn offset(&self) -> &MAdic {
        self.lift.codomain().0
    }

    pub fn piece_count(&self) -> usize {
        self.lift.piece_count()
    }

    pub fn is_group_element(&self) -> bool {
        self.r_src == self.r_tgt
    }

    pub fn is_identity(&self) -> bool {
        self.is_group_element()
            && self.offset().is_zero()
            && self.lift.piece_count() == 1
            && self.lift.slopes()[0] == 0
    }

    /// Evaluate as a map of circles: the argument is reduced mod r_src and
    /// the value mod r_tgt.
    pub fn evaluate(&self, x: &MAdic) -> MAdic {
        let m = self.base();
        let x = x.rem_mod(&self.r_src, m);
        let y = self.lift.evaluate(&x).expect("reduced point is in the fundamental domain");
        y.rem_mod(&self.r_tgt, m)
    }

    /// Evaluate the canonical lift at any real m-adic point, using the
    /// equivariance lift(x + r_src) = lift(x) + r_tgt.
    pub fn lift_eval(&self, x: &MAdic) -> MAdic {
        let m = self.base();
        let j = x.floor_div(&self.r_src, m);
        let base = x.sub(&self.r_src.mul_int(&j, m), m);
        let y = self.lift.evaluate(&base).expect("reduced point is in the fundamental domain");
        y.add(&self.r_tgt.mul_int(&j, m), m)
    }

    /// self after inner: circles must chain exactly.
    pub fn compose(&self, inner: &PLCircleMap) -> Result<PLCircleMap> {
        let m = self.base();
        if m != inner.base() {
            return Err(Error::BaseMismatch(inner.base(), m));
        }
        if self.r_src != inner.r_tgt {
            return Err(Error::CircleMismatch(format!(
                "inner map lands on S_{} but outer map starts on S_{}",
                inner.r_tgt.render(m),
                self.r_src.render(m)
            )));
        }
        let mid = &self.r_src;
        let tg = inner.offset().clone();
        // Breakpoints of the composite: inner's own, plus the pullbacks of
        // the outer breakpoints (shifted by one deck translation as needed
        // to land in the window [tg, tg + mid] covered by inner's lift).
        let mut xs: Vec<MAdic> = inner.lift.nodes().iter().map(|nd| nd.x.clone()).collect();
        for nd in self.lift.nodes() {
            let b = &nd.x;
            match b.compare(&tg, m) {
                Ordering::Greater => xs.push(inner.lift.invert_point(b)?),
                Ordering::Less => xs.push(inner.lift.invert_point(&b.add(mid, m))?),
                Ordering::Equal => {}
            }
        }
        xs.sort_by(|a, b| a.compare(b, m));
        xs.dedup();
        let mut pts = Vec::with_capacity(xs.len());
        for x in xs {
            let y = inner.lift.evaluate(&x)?;
            // Extend the outer lift over [tg, tg + mid].
            let z = if y.compare(mid, m) != Ordering::Greater {
                self.lift.evaluate(&y)?
            } else {
                self.lift.evaluate(&y.sub(mid, m))?.add(&self.r_tgt, m)
            };
            pts.push((x, z));
        }
        let lift = PLSegmentMap::from_nodes(m, pts)?;
        Self::from_lift(inner.r_src.clone(), self.r_tgt.clone(), lift)
    }

    pub fn inverse(&self) -> PLCircleMap {
        let m = self.base();
        let t = self.offset().clone();
        let w = self.lift.inverse();
        let lift = if t.is_zero() {
            w
        } else {
            // w is defined on [t, t + r_tgt]; rebase the part beyond r_tgt
            // by one deck translation so the inverse lift covers [0, r_tgt].
            let hi = t.add(&self.r_tgt, m);
            let part1 = w
                .restrict(&self.r_tgt, &hi)
                .expect("offset is interior, so the window splits")
                .translate(&self.r_tgt.neg(), &self.r_src.neg());
            let part2 = w
                .restrict(&t, &self.r_tgt)
                .expect("offset is interior, so the window splits");
            PLSegmentMap::concat(&[part1, part2]).expect("deck translation glues continuously")
        };
        Self::from_lift(self.r_tgt.clone(), self.r_src.clone(), lift)
            .expect("inverse of a valid circle map is valid")
    }

    /// n-th power of a group element.
    pub fn power(&self, n: i64) -> Result<PLCircleMap> {
        let m = self.base();
        if !self.is_group_element() {
            return Err(Error::NotGroupElement(
                self.r_src.render(m),
                self.r_tgt.render(m),
            ));
        }
        let mut result = Self::identity(m, &self.r_src)?;
        if n == 0 {
            return Ok(result);
        }
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        loop {
            if e & 1 == 1 {
                result = base.compose(&result)?;
            }
            e >>= 1;
            if e == 0 {
                return Ok(result);
            }
            base = base.compose(&base)?;
        }
    }

    /// Transport along h: the conjugate h . self . h^{-1}, a group element
    /// over h's target circle. self must be a group element on h's source.
    pub fn conjugate_by(&self, h: &PLCircleMap) -> Result<PLCircleMap> {
        let m = self.base();
        if !self.is_group_element() {
            return Err(Error::NotGroupElement(
                self.r_src.render(m),
                self.r_tgt.render(m),
            ));
        }
        h.compose(self)?.compose(&h.inverse())
    }

    /// Least k >= 1 with f^k = id, or None when the budget runs out.
    pub fn order(&self, budget: &OrderBudget) -> Result<Option<u32>> {
        let m = self.base();
        if !self.is_group_element() {
            return Err(Error::NotGroupElement(
                self.r_src.render(m),
                self.r_tgt.render(m),
            ));
        }
        let mut g = self.clone();
        for k in 1..=budget.max_iterations {
            if g.is_identity() {
                return Ok(Some(k));
            }
            if g.piece_count() > budget.max_pieces {
                return Ok(None);
            }
            g = self.compose(&g)?;
        }
        Ok(None)
    }

    /// Exact rotation number of a finite-order element: the order q is found
    /// first, then the winding p of the canonical lift over q steps.
    pub fn rotation_number(&self, budget: &OrderBudget) -> Result<RotationNumber> {
        let m = self.base();
        let q = self
            .order(budget)?
            .ok_or(Error::OrderNotFound(budget.max_iterations))?;
        let mut x = MAdic::zero();
        for _ in 0..q {
            x = self.lift_eval(&x);
        }
        // f^q = id forces lift^q(0) = p * r for an integer winding p.
        let p = x.floor_div(&self.r_src, m);
        assert!(
            x == self.r_src.mul_int(&p, m),
            "lift of a finite-order element winds an integer number of turns"
        );
        let p = p.to_u64().expect("winding of a torsion element is in [0, q)");
        Ok(RotationNumber::new(p, u64::from(q)))
    }

    /// The branch of the map over [lo, hi], a sub-interval of the source
    /// fundamental domain, rebased so its starting value lies in [0, r_tgt).
    pub fn restrict(&self, lo: &MAdic, hi: &MAdic) -> Result<PLSegmentMap> {
        let m = self.base();
        if lo.signum() < 0 || hi.compare(&self.r_src, m) == Ordering::Greater {
            return Err(Error::OutOfDomain(format!(
                "[{}, {}] is not inside [0, {}]",
                lo.render(m),
                hi.render(m),
                self.r_src.render(m)
            )));
        }
        let seg = self.lift.restrict(lo, hi)?;
        let j = seg.codomain().0.floor_div(&self.r_tgt, m);
        if j.is_zero() {
            Ok(seg)
        } else {
            Ok(seg.translate(&MAdic::zero(), &self.r_tgt.mul_int(&j, m).neg()))
        }
    }

    /// Re-derive every invariant from the stored data; empty means valid.
    pub fn violations(&self) -> Vec<String> {
        let m = self.base();
        let mut out = self.lift.violations();
        if self.r_src.signum() <= 0 {
            out.push("source circumference is not positive".into());
        }
        if self.r_tgt.signum() <= 0 {
            out.push("target circumference is not positive".into());
        }
        let (d0, d1) = self.lift.domain();
        if !d0.is_zero() || d1 != &self.r_src {
            out.push("lift domain is not [0, r_src]".into());
        }
        let (c0, c1) = self.lift.codomain();
        if c1.sub(c0, m) != self.r_tgt {
            out.push("lift does not span one target circumference".into());
        }
        if c0.signum() < 0 || c0.compare(&self.r_tgt, m) != Ordering::Less {
            out.push("offset f(0) is not normalized into [0, r_tgt)".into());
        }
        out
    }
}
