//! Equivalence of m-adic intervals under PL maps with power-of-m slopes.
//!
//! Two nondegenerate intervals with endpoints in Z[1/m] admit a PL
//! homeomorphism between them with slopes in m^Z and breakpoints in Z[1/m]
//! exactly when their lengths differ by an element of the ideal
//! (m-1) Z[1/m]. Sufficiency is witnessed constructively here; necessity is
//! the identity
//!
//!   len(dst) - len(src) = sum over pieces of (m^k - 1) * piece_width,
//!
//! every summand of which lies in the ideal (see [`piecewise_defect`]).
//! For m = 2 the ideal is all of Z[1/2], so any two dyadic intervals are
//! equivalent.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::madic::MAdic;
use crate::plmap::{PLCircleMap, PLSegmentMap};

/// Are the intervals of these two (positive) lengths PL_m-equivalent?
pub fn equivalent_lengths(len_src: &MAdic, len_dst: &MAdic, m: u32) -> Result<bool> {
    if len_src.signum() <= 0 || len_dst.signum() <= 0 {
        return Err(Error::InvalidArgument(
            "interval lengths must be positive".into(),
        ));
    }
    Ok(len_dst.sub(len_src, m).in_ideal(m))
}

/// Witness on normalized intervals: [0, b] onto [0, b2] with 0 < b < b2
/// equivalent. At most two pieces directly, or a composition of two such
/// maps when the required fold does not fit inside [0, b].
fn stretch(b: &MAdic, b2: &MAdic, m: u32) -> PLSegmentMap {
    let gain = b2.sub(b, m);
    let fold = gain
        .div_int_exact(&BigInt::from(m - 1), m)
        .expect("equivalence was checked by the caller");
    if fold.compare(b, m) == Ordering::Less {
        // One fold: identity on [0, b - fold], slope m on the last piece of
        // width fold, which gains exactly (m-1) * fold in length.
        let knee = b.sub(&fold, m);
        PLSegmentMap::from_nodes(
            m,
            vec![
                (MAdic::zero(), MAdic::zero()),
                (knee.clone(), knee),
                (b.clone(), b2.clone()),
            ],
        )
        .expect("fold lies strictly inside the interval")
    } else {
        // The fold is too wide; shrink it below b, fold once, then recover
        // the remaining factor m^p on the stretched tail.
        let mut p = 1i64;
        while fold.mul_pow(-p, m).compare(b, m) != Ordering::Less {
            p += 1;
        }
        let small = fold.mul_pow(-p, m);
        let gain0 = small.mul_int(&BigInt::from(m - 1), m);
        let mid = b.add(&gain0, m);
        let knee = b.sub(&small, m);
        let f0 = PLSegmentMap::from_nodes(
            m,
            vec![
                (MAdic::zero(), MAdic::zero()),
                (knee.clone(), knee),
                (b.clone(), mid.clone()),
            ],
        )
        .expect("shrunk fold lies strictly inside the interval");
        let f1 = PLSegmentMap::from_nodes(
            m,
            vec![
                (MAdic::zero(), MAdic::zero()),
                (b.clone(), b.clone()),
                (mid, b2.clone()),
            ],
        )
        .expect("tail stretch by m^p is a valid piece");
        f1.compose(&f0).expect("stages chain on [0, b]")
    }
}

/// Constructive witness [a, c] onto [a2, c2], or a refusal when the lengths
/// are not equivalent.
pub fn interval_witness(
    a: &MAdic,
    c: &MAdic,
    a2: &MAdic,
    c2: &MAdic,
    m: u32,
) -> Result<PLSegmentMap> {
    if a.compare(c, m) != Ordering::Less || a2.compare(c2, m) != Ordering::Less {
        return Err(Error::InvalidArgument(format!(
            "intervals must be nondegenerate: [{}, {}] and [{}, {}]",
            a.render(m),
            c.render(m),
            a2.render(m),
            c2.render(m)
        )));
    }
    let l1 = c.sub(a, m);
    let l2 = c2.sub(a2, m);
    if !equivalent_lengths(&l1, &l2, m)? {
        return Err(Error::NotEquivalent(format!(
            "length difference {} is not in (m-1)Z[1/m] for m = {m}",
            l2.sub(&l1, m).render(m)
        )));
    }
    let core = match l1.compare(&l2, m) {
        Ordering::Equal => {
            return PLSegmentMap::translation(m, a.clone(), c.clone(), &a2.sub(a, m));
        }
        Ordering::Less => stretch(&l1, &l2, m),
        Ordering::Greater => stretch(&l2, &l1, m).inverse(),
    };
    Ok(core.translate(a, a2))
}

/// Witness circle map S_c onto S_c2, or a refusal when the circumferences
/// are not congruent mod the ideal.
pub fn circle_witness(c: &MAdic, c2: &MAdic, m: u32) -> Result<PLCircleMap> {
    if c.signum() <= 0 || c2.signum() <= 0 {
        return Err(Error::InvalidArgument(
            "circumferences must be positive".into(),
        ));
    }
    if !c2.sub(c, m).in_ideal(m) {
        return Err(Error::CongruenceFails(format!(
            "{} and {} differ by {}, which is not in (m-1)Z[1/m] for m = {m}",
            c.render(m),
            c2.render(m),
            c2.sub(c, m).render(m)
        )));
    }
    let lift = if c == c2 {
        PLSegmentMap::identity(m, MAdic::zero(), c.clone())?
    } else {
        interval_witness(&MAdic::zero(), c, &MAdic::zero(), c2, m)?
    };
    PLCircleMap::from_lift(c.clone(), c2.clone(), lift)
}

/// The slope-length defect sum((m^k - 1) * width) over the pieces. For any
/// valid segment map this equals len(codomain) - len(domain), certifying
/// that no witness can exist between non-equivalent intervals: each summand
/// lies in (m-1)Z[1/m].
pub fn piecewise_defect(w: &PLSegmentMap) -> MAdic {
    let m = w.base();
    let mut acc = MAdic::zero();
    let nodes = w.nodes();
    for (i, k) in w.slopes().iter().enumerate() {
        let width = nodes[i + 1].x.sub(&nodes[i].x, m);
        let factor = MAdic::pow_of(m, *k).sub(&MAdic::one(), m);
        acc = acc.add(&factor.mul(&width, m), m);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn md(n: i64, s: i64, m: u32) -> MAdic {
        MAdic::normalize(n, s, m)
    }

    #[test]
    fn equivalence_examples() {
        // Any two dyadic lengths are equivalent.
        assert!(equivalent_lengths(&md(1, 3, 2), &MAdic::from_int(50), 2).unwrap());
        // m = 3: difference must have even numerator.
        assert!(!equivalent_lengths(&MAdic::one(), &MAdic::from_int(2), 3).unwrap());
        assert!(equivalent_lengths(&md(1, 1, 3), &md(5, 1, 3), 3).unwrap());
        assert!(equivalent_lengths(&MAdic::one(), &MAdic::from_int(3), 3).unwrap());
        assert!(equivalent_lengths(&MAdic::one(), &MAdic::one(), 5).unwrap());
        assert!(equivalent_lengths(&MAdic::one(), &MAdic::from_int(5), 5).unwrap());
        assert!(!equivalent_lengths(&MAdic::one(), &MAdic::from_int(2), 5).unwrap());
        assert!(equivalent_lengths(&MAdic::zero(), &MAdic::one(), 2).is_err());
    }

    #[test]
    fn witness_translation_when_lengths_match() {
        let w = interval_witness(
            &MAdic::zero(),
            &MAdic::one(),
            &MAdic::from_int(5),
            &MAdic::from_int(6),
            2,
        )
        .unwrap();
        assert_eq!(w.piece_count(), 1);
        assert_eq!(w.slopes(), &[0]);
        assert_eq!(w.evaluate(&md(1, 1, 2)).unwrap(), md(11, 1, 2));
    }

    #[test]
    fn witness_single_fold() {
        // [0,1] -> [0,3/2] at m = 2: fold width 1/2 fits.
        let w = interval_witness(&MAdic::zero(), &MAdic::one(), &MAdic::zero(), &md(3, 1, 2), 2)
            .unwrap();
        let expect = PLSegmentMap::from_nodes(
            2,
            vec![
                (MAdic::zero(), MAdic::zero()),
                (md(1, 1, 2), md(1, 1, 2)),
                (MAdic::one(), md(3, 1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(w, expect);
        assert_eq!(w.slopes(), &[0, 1]);
    }

    #[test]
    fn witness_composite_fold() {
        // [0,1] -> [0,4] at m = 2: fold width 3 needs two shrinks (p = 2).
        let w = interval_witness(
            &MAdic::zero(),
            &MAdic::one(),
            &MAdic::zero(),
            &MAdic::from_int(4),
            2,
        )
        .unwrap();
        let expect = PLSegmentMap::from_nodes(
            2,
            vec![
                (MAdic::zero(), MAdic::zero()),
                (md(1, 2, 2), md(1, 2, 2)),
                (md(5, 3, 2), MAdic::one()),
                (MAdic::one(), MAdic::from_int(4)),
            ],
        )
        .unwrap();
        assert_eq!(w, expect);
        assert_eq!(w.slopes(), &[0, 1, 3]);
        assert_eq!(w.evaluate(&md(3, 2, 2)).unwrap(), MAdic::from_int(2));

        // Shrinking direction is the exact inverse.
        let back = interval_witness(
            &MAdic::zero(),
            &MAdic::from_int(4),
            &MAdic::zero(),
            &MAdic::one(),
            2,
        )
        .unwrap();
        assert_eq!(back, w.inverse());

        // m = 3, [0,1] -> [0,3]: fold width 1 does not fit, one shrink.
        let w3 = interval_witness(
            &MAdic::zero(),
            &MAdic::one(),
            &MAdic::zero(),
            &MAdic::from_int(3),
            3,
        )
        .unwrap();
        let expect3 = PLSegmentMap::from_nodes(
            3,
            vec![
                (MAdic::zero(), MAdic::zero()),
                (md(2, 1, 3), md(2, 1, 3)),
                (md(7, 2, 3), MAdic::one()),
                (MAdic::one(), MAdic::from_int(3)),
            ],
        )
        .unwrap();
        assert_eq!(w3, expect3);
        assert_eq!(w3.slopes(), &[0, 1, 2]);
        assert_eq!(w3.evaluate(&md(8, 2, 3)).unwrap(), MAdic::from_int(2));
    }

    #[test]
    fn witness_refuses_non_equivalent() {
        let err = interval_witness(
            &MAdic::zero(),
            &MAdic::one(),
            &MAdic::zero(),
            &MAdic::from_int(2),
            3,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotEquivalent(_)));
        assert_eq!(err.reason(), "not-equivalent");
    }

    #[test]
    fn witness_on_offset_intervals() {
        let w = interval_witness(&md(1, 1, 2), &MAdic::one(), &md(1, 2, 2), &md(3, 2, 2), 2)
            .unwrap();
        assert_eq!(w.domain(), (&md(1, 1, 2), &MAdic::one()));
        assert_eq!(w.codomain(), (&md(1, 2, 2), &md(3, 2, 2)));
        assert!(w.violations().is_empty());
    }

    #[test]
    fn circle_witness_cases() {
        let w = circle_witness(&MAdic::from_int(3), &MAdic::from_int(3), 2).unwrap();
        assert!(w.is_identity());

        let w12 = circle_witness(&MAdic::one(), &MAdic::from_int(2), 2).unwrap();
        assert!(w12.violations().is_empty());
        assert!(w12.compose(&w12.inverse()).unwrap().is_identity());
        assert!(w12.inverse().compose(&w12).unwrap().is_identity());

        let w13 = circle_witness(&MAdic::one(), &MAdic::from_int(3), 3).unwrap();
        assert!(w13.violations().is_empty());

        let err = circle_witness(&MAdic::one(), &MAdic::from_int(2), 3).unwrap_err();
        assert!(matches!(err, Error::CongruenceFails(_)));
    }

    #[test]
    fn transported_rotation_keeps_order() {
        // S_3 carries the rotation by 1 of order 3; 3 = 1 mod 2, so it can
        // be transported into T_{1,3}, which therefore has an order-3
        // element even though S_1 itself has no integer rotation of order 3.
        let r3 = MAdic::from_int(3);
        let rot = PLCircleMap::rotation(3, &r3, &MAdic::one()).unwrap();
        let h = circle_witness(&r3, &MAdic::one(), 3).unwrap();
        let f = rot.conjugate_by(&h).unwrap();
        assert_eq!(f.r_src(), &MAdic::one());
        assert!(f.is_group_element());
        assert!(f.violations().is_empty());
        let budget = crate::plmap::OrderBudget::default();
        assert_eq!(f.order(&budget).unwrap(), Some(3));
        assert_eq!(
            f.rotation_number(&budget).unwrap(),
            crate::plmap::RotationNumber::new(1, 3)
        );
        assert!(f.power(3).unwrap().is_identity());
    }

    #[test]
    fn defect_identity_on_witnesses() {
        let cases = [
            (MAdic::one(), MAdic::from_int(4), 2u32),
            (MAdic::one(), md(3, 1, 2), 2),
            (md(1, 3, 2), MAdic::from_int(50), 2),
            (MAdic::one(), MAdic::from_int(3), 3),
            (md(5, 1, 3), md(1, 1, 3), 3),
            (MAdic::from_int(2), MAdic::from_int(10), 5),
        ];
        for (l1, l2, m) in cases {
            let w = interval_witness(&MAdic::zero(), &l1, &MAdic::zero(), &l2, m).unwrap();
            let defect = piecewise_defect(&w);
            assert_eq!(defect, l2.sub(&l1, m), "defect equals length gain");
            assert!(defect.in_ideal(m), "defect always lies in the ideal");
        }
    }

    proptest! {
        /// Sufficiency, constructively: any two lengths differing by an
        /// ideal element admit a verified witness.
        #[test]
        fn witness_works_on_random_equivalent_pairs(
            m in prop_oneof![Just(2u32), Just(3), Just(5)],
            base in (1i64..400, 0i64..5),
            delta in (-60i64..60, 0i64..5),
        ) {
            let l1 = MAdic::normalize(base.0, base.1, m);
            let step = MAdic::normalize(delta.0, delta.1, m)
                .mul_int(&BigInt::from(m - 1), m);
            let l2 = l1.add(&step, m);
            prop_assume!(l2.signum() > 0);
            let w = interval_witness(&MAdic::zero(), &l1, &MAdic::zero(), &l2, m).unwrap();
            prop_assert!(w.violations().is_empty());
            prop_assert_eq!(w.domain(), (&MAdic::zero(), &l1));
            prop_assert_eq!(w.codomain(), (&MAdic::zero(), &l2));
            prop_assert_eq!(piecewise_defect(&w), l2.sub(&l1, m));
        }

        /// Necessity: the defect identity pins the length difference of any
        /// segment map into the ideal, so equivalence exactly matches the
        /// ideal test.
        #[test]
        fn ideal_test_matches_defect_on_maps(
            m in prop_oneof![Just(2u32), Just(3), Just(5)],
            base in (1i64..100, 0i64..4),
            delta in (-40i64..40, 0i64..4),
        ) {
            let l1 = MAdic::normalize(base.0, base.1, m);
            let step = MAdic::normalize(delta.0, delta.1, m)
                .mul_int(&BigInt::from(m - 1), m);
            let l2 = l1.add(&step, m);
            prop_assume!(l2.signum() > 0);
            let w = interval_witness(&MAdic::zero(), &l1, &MAdic::zero(), &l2, m).unwrap();
            let d = piecewise_defect(&w);
            prop_assert!(d.in_ideal(m));
            prop_assert!(equivalent_lengths(&l1, &l2, m).unwrap());
        }
    }
}
