//! The conjugacy problem for finite-order elements of T_{r,m}.
//!
//! A torsion element f of order q has rotation number p/q with p coprime to
//! q. Taking u with u p = 1 mod q, the power g = f^u has rotation number
//! 1/q, and g(0) = N / m^s determines the residue N mod (m-1). The triple
//!
//!   (order, rotation number, residue)
//!
//! is a complete conjugacy invariant: it is constant on conjugacy classes
//! (conjugating by any PL_m map changes g(0) by an element of the ideal
//! (m-1)Z[1/m], by the slope-length defect identity), and when two elements
//! share the triple an explicit conjugator is assembled here by
//! transporting the orbit intervals of one onto the other. Counting the
//! realizable triples gives the class count phi(q) * gcd(m-1, q).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{euler_phi, gcd_u64, mod_inverse};
use crate::bieri_strebel::interval_witness;
use crate::error::{Error, Result};
use crate::madic::MAdic;
use crate::plmap::{GroupParams, OrderBudget, PLCircleMap, PLSegmentMap, RotationNumber};
use crate::torsion::{
    admissible_a_with_residue, construct_torsion, realizable_residues, torsion_exists,
};

/// Complete conjugacy invariant of a finite-order element.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct TorsionDescriptor {
    pub order: u32,
    pub rotation: RotationNumber,
    pub residue: u32,
}

impl TorsionDescriptor {
    pub fn identity() -> TorsionDescriptor {
        TorsionDescriptor {
            order: 1,
            rotation: RotationNumber::zero(),
            residue: 0,
        }
    }

    pub fn render(&self) -> String {
        format!(
            "(order {}, rotation {}, residue {})",
            self.order,
            self.rotation.render(),
            self.residue
        )
    }
}

fn require_member(params: &GroupParams, f: &PLCircleMap) -> Result<()> {
    if !params.contains(f) {
        return Err(Error::InvalidArgument(format!(
            "map is not an element of {}",
            params.label()
        )));
    }
    Ok(())
}

/// (order, rotation number, power normalized to rotation number 1/q).
fn torsion_data(
    f: &PLCircleMap,
    params: &GroupParams,
    budget: &OrderBudget,
) -> Result<(u32, RotationNumber, PLCircleMap)> {
    require_member(params, f)?;
    let q = f
        .order(budget)?
        .ok_or(Error::OrderNotFound(budget.max_iterations))?;
    if q == 1 {
        return Ok((1, RotationNumber::zero(), f.clone()));
    }
    let rho = f.rotation_number(budget)?;
    assert_eq!(
        rho.denominator(),
        u64::from(q),
        "the rotation number of an order-q element has denominator exactly q"
    );
    let u = mod_inverse(rho.numerator(), u64::from(q))
        .expect("rotation numerator is coprime to the order");
    let g = f.power(i64::try_from(u).expect("order fits i64"))?;
    Ok((q, rho, g))
}

/// The power f^u with rotation number 1/q, where u inverts the rotation
/// numerator mod q. Because u p = 1 mod q, f is recovered as g^p, so f and
/// g generate the same cyclic group and are simultaneously conjugated.
pub fn normalize_power(
    f: &PLCircleMap,
    params: &GroupParams,
    budget: &OrderBudget,
) -> Result<PLCircleMap> {
    Ok(torsion_data(f, params, budget)?.2)
}

fn descriptor_of(params: &GroupParams, q: u32, rho: RotationNumber, g: &PLCircleMap) -> TorsionDescriptor {
    if q == 1 {
        return TorsionDescriptor::identity();
    }
    let span = BigInt::from(params.m() - 1);
    let residue = g
        .offset()
        .numerator()
        .mod_floor(&span)
        .to_u32()
        .expect("residue lies in [0, m-2]");
    TorsionDescriptor {
        order: q,
        rotation: rho,
        residue,
    }
}

/// The complete invariant (order, rotation number, residue of g(0)).
pub fn descriptor(
    f: &PLCircleMap,
    params: &GroupParams,
    budget: &OrderBudget,
) -> Result<TorsionDescriptor> {
    let (q, rho, g) = torsion_data(f, params, budget)?;
    Ok(descriptor_of(params, q, rho, &g))
}

/// Conjugacy test by comparing descriptors.
pub fn are_conjugate(
    f1: &PLCircleMap,
    f2: &PLCircleMap,
    params: &GroupParams,
    budget: &OrderBudget,
) -> Result<bool> {
    Ok(descriptor(f1, params, budget)? == descriptor(f2, params, budget)?)
}

/// The orbit of 0 under a rotation-number-1/q torsion element, in circle
/// order: [0, g(0), ..., g^{q-1}(0), r]. For rotation number 1/q the
/// iterates appear in increasing circle order.
fn orbit_points(g: &PLCircleMap, q: u32, params: &GroupParams) -> Vec<MAdic> {
    let mut pts = vec![MAdic::zero()];
    for _ in 1..q {
        let next = g.evaluate(pts.last().expect("nonempty"));
        pts.push(next);
    }
    pts.push(params.circumference());
    pts
}

/// Explicit h with h f1 h^{-1} = f2, or a descriptor-mismatch refusal.
///
/// The conjugator is assembled on the normalized powers g_i = f_i^u: the
/// orbit intervals of g_1 are transported onto those of g_2 by
/// h|J_i = g_2^i . h_0 . g_1^{-i}, where h_0 matches the two first
/// intervals (their lengths differ by an ideal element exactly because the
/// residues agree). The same h conjugates f_1 = g_1^p to f_2 = g_2^p.
pub fn conjugating_witness(
    f1: &PLCircleMap,
    f2: &PLCircleMap,
    params: &GroupParams,
    budget: &OrderBudget,
) -> Result<PLCircleMap> {
    let (q1, rho1, g1) = torsion_data(f1, params, budget)?;
    let (q2, rho2, g2) = torsion_data(f2, params, budget)?;
    let d1 = descriptor_of(params, q1, rho1, &g1);
    let d2 = descriptor_of(params, q2, rho2, &g2);
    if d1 != d2 {
        return Err(Error::DescriptorMismatch(format!(
            "{} vs {}",
            d1.render(),
            d2.render()
        )));
    }
    let m = params.m();
    let r = params.circumference();
    if d1.order == 1 {
        return PLCircleMap::identity(m, &r);
    }
    let q = d1.order as usize;
    let u = orbit_points(&g1, d1.order, params);
    let v = orbit_points(&g2, d2.order, params);
    let h0 = interval_witness(&MAdic::zero(), &u[1], &MAdic::zero(), &v[1], m)?;
    let g1_inv = g1.inverse();
    let mut back = PLCircleMap::identity(m, &r)?; // g1^{-i}
    let mut fwd = PLCircleMap::identity(m, &r)?; // g2^{i}
    let mut pieces: Vec<PLSegmentMap> = Vec::with_capacity(q);
    for i in 0..q {
        if i > 0 {
            back = g1_inv.compose(&back)?;
            fwd = g2.compose(&fwd)?;
        }
        let s1 = back.restrict(&u[i], &u[i + 1])?;
        let s2 = h0.compose(&s1)?;
        let s3 = fwd.restrict(&MAdic::zero(), &v[1])?;
        pieces.push(s3.compose(&s2)?);
    }
    let lift = PLSegmentMap::concat(&pieces)?;
    PLCircleMap::from_lift(r.clone(), r, lift)
}

/// A finite-order element in standard form: conjugated onto an exact
/// rotation of a (usually different) circle.
#[derive(Clone, Debug)]
pub struct RotationForm {
    /// h with h f h^{-1} the rotation; maps S_r to the standard circle.
    pub witness: PLCircleMap,
    /// Circumference q * N of the standard circle, where g(0) = N / m^s.
    pub circumference: MAdic,
    /// Rotation amount of h f h^{-1} on the standard circle.
    pub rotation: MAdic,
}

/// Conjugate f onto an exact rotation: g = f^u is sent to the rotation by
/// N on the circle of circumference q N via H|J_i = (+iN) . H_1 . g^{-i},
/// with H_1 the pure stretch x -> m^s x on [0, g(0)]. f itself then maps to
/// the rotation by p N.
pub fn conjugate_to_rotation(
    f: &PLCircleMap,
    params: &GroupParams,
    budget: &OrderBudget,
) -> Result<RotationForm> {
    let (q, rho, g) = torsion_data(f, params, budget)?;
    let m = params.m();
    let r = params.circumference();
    if q == 1 {
        return Ok(RotationForm {
            witness: PLCircleMap::identity(m, &r)?,
            circumference: r,
            rotation: MAdic::zero(),
        });
    }
    let a = g.offset().clone();
    let n_a = MAdic::from_int(a.numerator().clone());
    let s_a = i64::from(a.exponent());
    let circ = n_a.mul_int(&BigInt::from(q), m);
    let u = orbit_points(&g, q, params);
    let h1 = PLSegmentMap::affine(m, MAdic::zero(), a.clone(), MAdic::zero(), s_a)?;
    let g_inv = g.inverse();
    let mut back = PLCircleMap::identity(m, &r)?;
    let mut pieces: Vec<PLSegmentMap> = Vec::with_capacity(q as usize);
    for i in 0..q as usize {
        if i > 0 {
            back = g_inv.compose(&back)?;
        }
        let s1 = back.restrict(&u[i], &u[i + 1])?;
        let s2 = h1.compose(&s1)?;
        let shift = n_a.mul_int(&BigInt::from(i), m);
        pieces.push(s2.translate(&MAdic::zero(), &shift));
    }
    let lift = PLSegmentMap::concat(&pieces)?;
    let witness = PLCircleMap::from_lift(r, circ.clone(), lift)?;
    let rotation = n_a
        .mul_int(&BigInt::from(rho.numerator()), m)
        .rem_mod(&circ, m);
    Ok(RotationForm {
        witness,
        circumference: circ,
        rotation,
    })
}

/// Number of conjugacy classes of order-q elements: phi(q) * gcd(m-1, q)
/// when gcd(m-1, q) divides r, and 0 otherwise.
pub fn count_classes(params: &GroupParams, q: u32) -> u64 {
    if q == 0 {
        return 0;
    }
    let d = gcd_u64(u64::from(params.m() - 1), u64::from(q));
    if u64::from(params.r()) % d != 0 {
        return 0;
    }
    euler_phi(u64::from(q)) * d
}

/// Classes sharing one fixed rotation number p/q: gcd(m-1, q) of them.
pub fn count_classes_per_rotation(params: &GroupParams, q: u32) -> u64 {
    if q == 0 {
        return 0;
    }
    let d = gcd_u64(u64::from(params.m() - 1), u64::from(q));
    if u64::from(params.r()) % d != 0 { 0 } else { d }
}

/// One representative per conjugacy class of order-q elements with rotation
/// number p/q: the standard constructions at each realizable residue,
/// raised to the p-th power.
pub fn class_representatives(
    params: &GroupParams,
    q: u32,
    p: u32,
) -> Result<Vec<PLCircleMap>> {
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
        return Ok(vec![PLCircleMap::identity(
            params.m(),
            &params.circumference(),
        )?]);
    }
    let mut reps = Vec::new();
    for residue in realizable_residues(params, q) {
        let a = admissible_a_with_residue(params, q, residue)?;
        let f = construct_torsion(params, q, &a)?;
        reps.push(f.power(i64::from(p))?);
    }
    Ok(reps)
}

/// Orders q <= q_max at which the group has no elements: exactly the q
/// with gcd(m-1, q) not dividing r.
pub fn order_obstructions(params: &GroupParams, q_max: u32) -> Vec<u32> {
    (2..=q_max).filter(|q| !torsion_exists(params, *q)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MorphismVerdict {
    /// The source has elements of an order the target lacks; since an
    /// injective morphism preserves orders, none exists.
    NoInjectiveMorphism { witness_order: u32 },
    /// Order spectra agree up to the cap, but the groups have different
    /// numbers of order-q conjugacy classes; no isomorphism exists.
    NoIsomorphism {
        witness_order: u32,
        source_classes: u64,
        target_classes: u64,
    },
    /// The torsion comparison detects nothing up to the cap.
    NoObstructionFound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub verdict: MorphismVerdict,
    pub scanned_up_to: u32,
    /// When the source is the simple group T = T_{1,2} and an injectivity
    /// obstruction was found, every morphism is trivial.
    pub trivial_morphisms_only: bool,
    pub premise: Option<String>,
}

/// Compare the torsion of two groups, scanning orders 2..=q_max, first for
/// orders missing from the target (killing injectivity), then for class
/// count differences (killing isomorphy).
pub fn morphism_obstruction(
    src: &GroupParams,
    tgt: &GroupParams,
    q_max: u32,
) -> MorphismReport {
    for q in 2..=q_max {
        if torsion_exists(src, q) && !torsion_exists(tgt, q) {
            let simple_source = src.r() == 1 && src.m() == 2;
            return MorphismReport {
                verdict: MorphismVerdict::NoInjectiveMorphism { witness_order: q },
                scanned_up_to: q_max,
                trivial_morphisms_only: simple_source,
                premise: simple_source.then(|| {
                    "T = T_{1,2} is simple, so a morphism from T is injective or trivial; \
                     with injectivity excluded, only the trivial morphism remains"
                        .to_string()
                }),
            };
        }
    }
    for q in 2..=q_max {
        let source_classes = count_classes(src, q);
        let target_classes = count_classes(tgt, q);
        if source_classes != target_classes {
            return MorphismReport {
                verdict: MorphismVerdict::NoIsomorphism {
                    witness_order: q,
                    source_classes,
                    target_classes,
                },
                scanned_up_to: q_max,
                trivial_morphisms_only: false,
                premise: None,
            };
        }
    }
    MorphismReport {
        verdict: MorphismVerdict::NoObstructionFound,
        scanned_up_to: q_max,
        trivial_morphisms_only: false,
        premise: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torsion::default_admissible_a;

    fn md(n: i64, s: i64, m: u32) -> MAdic {
        MAdic::normalize(n, s, m)
    }

    fn gp(r: u32, m: u32) -> GroupParams {
        GroupParams::new(r, m).unwrap()
    }

    fn budget() -> OrderBudget {
        OrderBudget::default()
    }

    #[test]
    fn descriptor_examples() {
        let t12 = gp(1, 2);
        let id = PLCircleMap::identity(2, &t12.circumference()).unwrap();
        assert_eq!(
            descriptor(&id, &t12, &budget()).unwrap(),
            TorsionDescriptor::identity()
        );

        let half = PLCircleMap::rotation(2, &MAdic::one(), &md(1, 1, 2)).unwrap();
        assert_eq!(
            descriptor(&half, &t12, &budget()).unwrap(),
            TorsionDescriptor {
                order: 2,
                rotation: RotationNumber::new(1, 2),
                residue: 0
            }
        );

        let t23 = gp(2, 3);
        let rot1 = PLCircleMap::rotation(3, &t23.circumference(), &MAdic::one()).unwrap();
        assert_eq!(
            descriptor(&rot1, &t23, &budget()).unwrap(),
            TorsionDescriptor {
                order: 2,
                rotation: RotationNumber::new(1, 2),
                residue: 1
            }
        );

        let f0 = construct_torsion(&t23, 2, &md(2, 1, 3)).unwrap();
        assert_eq!(
            descriptor(&f0, &t23, &budget()).unwrap(),
            TorsionDescriptor {
                order: 2,
                rotation: RotationNumber::new(1, 2),
                residue: 0
            }
        );

        // Wrong group is a usage error.
        assert!(descriptor(&half, &t23, &budget()).is_err());
    }

    #[test]
    fn descriptor_of_powers_shares_residue() {
        // (f^p)^u = f whenever u p = 1 mod q, so all coprime powers carry
        // the same residue and differ only in rotation number.
        let t23 = gp(2, 3);
        let f = construct_torsion(&t23, 4, &default_admissible_a(&t23, 4).unwrap()).unwrap();
        let base = descriptor(&f, &t23, &budget()).unwrap();
        for p in [1i64, 3] {
            let d = descriptor(&f.power(p).unwrap(), &t23, &budget()).unwrap();
            assert_eq!(d.order, 4);
            assert_eq!(d.rotation, RotationNumber::new(p as u64, 4));
            assert_eq!(d.residue, base.residue);
        }
    }

    #[test]
    fn normalize_power_recovers_unit_rotation() {
        let t12 = gp(1, 2);
        let f = construct_torsion(&t12, 5, &md(1, 1, 2)).unwrap();
        let f3 = f.power(3).unwrap();
        assert_eq!(
            f3.rotation_number(&budget()).unwrap(),
            RotationNumber::new(3, 5)
        );
        let g = normalize_power(&f3, &t12, &budget()).unwrap();
        assert_eq!(
            g.rotation_number(&budget()).unwrap(),
            RotationNumber::new(1, 5)
        );
        // u = 2 inverts 3 mod 5, and (f^3)^2 = f^6 = f.
        assert_eq!(g, f);
    }

    #[test]
    fn conjugates_share_descriptor_and_witness_verifies() {
        let t23 = gp(2, 3);
        let f = construct_torsion(&t23, 2, &MAdic::one()).unwrap();
        // Conjugate by a rotation that is itself in T_{2,3}.
        let h = PLCircleMap::rotation(3, &t23.circumference(), &md(1, 1, 3)).unwrap();
        let f2 = f.conjugate_by(&h).unwrap();
        assert!(are_conjugate(&f, &f2, &t23, &budget()).unwrap());
        let w = conjugating_witness(&f, &f2, &t23, &budget()).unwrap();
        assert!(w.violations().is_empty());
        assert!(t23.contains(&w));
        assert_eq!(f.conjugate_by(&w).unwrap(), f2);
    }

    #[test]
    fn witness_joins_different_first_points() {
        let t12 = gp(1, 2);
        let f1 = construct_torsion(&t12, 3, &md(1, 2, 2)).unwrap();
        let f2 = construct_torsion(&t12, 3, &md(1, 1, 2)).unwrap();
        assert_ne!(f1, f2);
        assert!(are_conjugate(&f1, &f2, &t12, &budget()).unwrap());
        let w = conjugating_witness(&f1, &f2, &t12, &budget()).unwrap();
        assert_eq!(f1.conjugate_by(&w).unwrap(), f2);

        // The same witness machinery works on the non-unit powers.
        let w2 = conjugating_witness(
            &f1.power(2).unwrap(),
            &f2.power(2).unwrap(),
            &t12,
            &budget(),
        )
        .unwrap();
        assert_eq!(
            f1.power(2).unwrap().conjugate_by(&w2).unwrap(),
            f2.power(2).unwrap()
        );
    }

    #[test]
    fn witness_refuses_distinct_classes() {
        let t23 = gp(2, 3);
        let reps = class_representatives(&t23, 2, 1).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(!are_conjugate(&reps[0], &reps[1], &t23, &budget()).unwrap());
        let err = conjugating_witness(&reps[0], &reps[1], &t23, &budget()).unwrap_err();
        assert!(matches!(err, Error::DescriptorMismatch(_)));
        assert_eq!(err.reason(), "descriptor-mismatch");

        // Distinct rotation numbers are refused too.
        let f = construct_torsion(&gp(1, 2), 3, &md(1, 2, 2)).unwrap();
        let err = conjugating_witness(&f, &f.power(2).unwrap(), &gp(1, 2), &budget()).unwrap_err();
        assert!(matches!(err, Error::DescriptorMismatch(_)));
    }

    #[test]
    fn rotation_form_examples() {
        let t12 = gp(1, 2);
        let f = construct_torsion(&t12, 3, &md(1, 2, 2)).unwrap();
        let form = conjugate_to_rotation(&f, &t12, &budget()).unwrap();
        // g(0) = 1/4 has numerator 1, so the standard circle has
        // circumference 3 and f becomes the integer rotation by 1.
        assert_eq!(form.circumference, MAdic::from_int(3));
        assert_eq!(form.rotation, MAdic::one());
        let std_rot =
            PLCircleMap::rotation(2, &form.circumference, &form.rotation).unwrap();
        assert_eq!(f.conjugate_by(&form.witness).unwrap(), std_rot);

        let t23 = gp(2, 3);
        let f2 = construct_torsion(&t23, 2, &md(2, 1, 3)).unwrap();
        let form2 = conjugate_to_rotation(&f2, &t23, &budget()).unwrap();
        assert_eq!(form2.circumference, MAdic::from_int(4));
        assert_eq!(form2.rotation, MAdic::from_int(2));
        assert_eq!(
            f2.conjugate_by(&form2.witness).unwrap(),
            PLCircleMap::rotation(3, &MAdic::from_int(4), &MAdic::from_int(2)).unwrap()
        );
        // The standard circumference is congruent to r mod (m-1).
        assert!(form2
            .circumference
            .sub(&t23.circumference(), 3)
            .in_ideal(3));

        // A non-unit rotation number scales the rotation amount.
        let f3 = construct_torsion(&t12, 5, &md(1, 1, 2)).unwrap().power(3).unwrap();
        let form3 = conjugate_to_rotation(&f3, &t12, &budget()).unwrap();
        assert_eq!(form3.circumference, MAdic::from_int(5));
        assert_eq!(form3.rotation, MAdic::from_int(3));
        assert_eq!(
            f3.conjugate_by(&form3.witness).unwrap(),
            PLCircleMap::rotation(2, &MAdic::from_int(5), &MAdic::from_int(3)).unwrap()
        );

        let id = PLCircleMap::identity(2, &t12.circumference()).unwrap();
        let form_id = conjugate_to_rotation(&id, &t12, &budget()).unwrap();
        assert_eq!(form_id.circumference, MAdic::one());
        assert!(form_id.rotation.is_zero());
    }

    #[test]
    fn class_count_spot_values() {
        assert_eq!(count_classes(&gp(1, 3), 2), 0);
        assert_eq!(count_classes(&gp(2, 3), 2), 2);
        assert_eq!(count_classes(&gp(3, 4), 6), 6);
        for q in 2..=8u32 {
            assert_eq!(count_classes(&gp(1, 2), q), euler_phi(u64::from(q)));
        }
        assert_eq!(count_classes(&gp(4, 5), 8), 16);
        assert_eq!(count_classes(&gp(1, 2), 1), 1);
        assert_eq!(count_classes_per_rotation(&gp(2, 3), 2), 2);
        assert_eq!(count_classes_per_rotation(&gp(1, 3), 2), 0);
        assert_eq!(count_classes_per_rotation(&gp(3, 4), 6), 3);
    }

    #[test]
    fn representatives_hit_every_class_once() {
        let t23 = gp(2, 3);
        let reps = class_representatives(&t23, 2, 1).unwrap();
        let descriptors: Vec<_> = reps
            .iter()
            .map(|f| descriptor(f, &t23, &budget()).unwrap())
            .collect();
        assert_eq!(descriptors.len(), 2);
        assert_eq!(descriptors[0].residue, 0);
        assert_eq!(descriptors[1].residue, 1);
        assert!(descriptors.iter().all(|d| d.order == 2));

        let t34 = gp(3, 4);
        let reps = class_representatives(&t34, 6, 5).unwrap();
        assert_eq!(reps.len(), 3);
        let descriptors: Vec<_> = reps
            .iter()
            .map(|f| descriptor(f, &t34, &budget()).unwrap())
            .collect();
        for (i, d) in descriptors.iter().enumerate() {
            assert_eq!(d.order, 6);
            assert_eq!(d.rotation, RotationNumber::new(5, 6));
            assert_eq!(d.residue, i as u32);
        }

        assert_eq!(class_representatives(&gp(1, 2), 4, 3).unwrap().len(), 1);
        assert!(matches!(
            class_representatives(&gp(1, 3), 2, 1),
            Err(Error::NoTorsion { .. })
        ));
        assert!(matches!(
            class_representatives(&gp(1, 2), 4, 2),
            Err(Error::NotCoprime(2, 4))
        ));
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(
            order_obstructions(&gp(1, 3), 20),
            vec![2, 4, 6, 8, 10, 12, 14, 16, 18, 20]
        );
        assert_eq!(order_obstructions(&gp(1, 2), 20), Vec::<u32>::new());
        assert_eq!(order_obstructions(&gp(2, 3), 20), Vec::<u32>::new());
        assert_eq!(order_obstructions(&gp(3, 4), 20), Vec::<u32>::new());
        assert_eq!(order_obstructions(&gp(4, 5), 20), Vec::<u32>::new());
        assert_eq!(order_obstructions(&gp(2, 4), 10), vec![3, 6, 9]);
    }

    #[test]
    fn morphism_examples() {
        let rep = morphism_obstruction(&gp(2, 3), &gp(1, 3), 20);
        assert_eq!(
            rep.verdict,
            MorphismVerdict::NoInjectiveMorphism { witness_order: 2 }
        );
        assert!(!rep.trivial_morphisms_only);

        let rep = morphism_obstruction(&gp(1, 2), &gp(1, 3), 20);
        assert_eq!(
            rep.verdict,
            MorphismVerdict::NoInjectiveMorphism { witness_order: 2 }
        );
        assert!(rep.trivial_morphisms_only);
        assert!(rep.premise.is_some());

        let rep = morphism_obstruction(&gp(1, 3), &gp(1, 4), 20);
        assert_eq!(
            rep.verdict,
            MorphismVerdict::NoInjectiveMorphism { witness_order: 3 }
        );

        let rep = morphism_obstruction(&gp(1, 2), &gp(2, 3), 20);
        assert_eq!(
            rep.verdict,
            MorphismVerdict::NoIsomorphism {
                witness_order: 2,
                source_classes: 1,
                target_classes: 2
            }
        );

        let rep = morphism_obstruction(&gp(1, 2), &gp(3, 4), 20);
        assert_eq!(
            rep.verdict,
            MorphismVerdict::NoIsomorphism {
                witness_order: 3,
                source_classes: 2,
                target_classes: 6
            }
        );

        let rep = morphism_obstruction(&gp(1, 3), &gp(1, 3), 20);
        assert_eq!(rep.verdict, MorphismVerdict::NoObstructionFound);
    }
}
