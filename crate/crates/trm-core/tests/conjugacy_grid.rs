//! Exhaustive sweep of the conjugacy machinery over a parameter grid.
//!
//! For every group T_{r,m} with r <= 2, m <= 4 and every order q <= 5:
//! the predicted class count is realized by explicit representatives, the
//! representatives are pairwise non-conjugate, and every representative
//! survives a barrage of random conjugations with its descriptor intact
//! and an exactly-verified witness back to the base point.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trm_core::conjugacy::{
    are_conjugate, class_representatives, conjugating_witness, count_classes, descriptor,
};
use trm_core::oracle::random_element_with;
use trm_core::torsion::torsion_exists;
use trm_core::{Error, GroupParams, OrderBudget};

fn coprimes(q: u32) -> Vec<u32> {
    (1..q.max(2))
        .filter(|p| num_integer::gcd(u64::from(*p), u64::from(q)) == 1)
        .collect()
}

#[test]
fn grid_counts_and_witnesses() {
    let budget = OrderBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for r in 1..=2u32 {
        for m in 2..=4u32 {
            let params = GroupParams::new(r, m).unwrap();
            for q in 2..=5u32 {
                if !torsion_exists(&params, q) {
                    assert_eq!(count_classes(&params, q), 0, "({r},{m},{q})");
                    assert!(matches!(
                        class_representatives(&params, q, 1),
                        Err(Error::NoTorsion { .. })
                    ));
                    continue;
                }
                let mut all_reps = Vec::new();
                for p in coprimes(q) {
                    all_reps.extend(class_representatives(&params, q, p).unwrap());
                }
                assert_eq!(
                    all_reps.len() as u64,
                    count_classes(&params, q),
                    "({r},{m},{q})"
                );

                // Pairwise non-conjugate, with pairwise distinct descriptors.
                let descriptors: Vec<_> = all_reps
                    .iter()
                    .map(|f| descriptor(f, &params, &budget).unwrap())
                    .collect();
                for i in 0..all_reps.len() {
                    assert_eq!(descriptors[i].order, q);
                    for j in i + 1..all_reps.len() {
                        assert_ne!(descriptors[i], descriptors[j], "({r},{m},{q})");
                        assert!(
                            !are_conjugate(&all_reps[i], &all_reps[j], &params, &budget)
                                .unwrap()
                        );
                    }
                }

                // Random conjugates stay in the class, with exact witnesses.
                for rep in &all_reps {
                    for _ in 0..3 {
                        let h = random_element_with(&params, &mut rng, 5).unwrap();
                        let f = rep.conjugate_by(&h).unwrap();
                        assert_eq!(
                            descriptor(&f, &params, &budget).unwrap(),
                            descriptor(rep, &params, &budget).unwrap()
                        );
                        let w = conjugating_witness(rep, &f, &params, &budget).unwrap();
                        assert!(params.contains(&w));
                        assert!(w.violations().is_empty());
                        assert_eq!(rep.conjugate_by(&w).unwrap(), f, "({r},{m},{q})");
                    }
                }
            }
        }
    }
}

#[test]
fn existence_matches_brute_force_admissibility_scan() {
    // Independent oracle: search exhaustively for a first point a = n / m^s
    // in (0, r) with r - q a in the ideal, over a grid that is exhaustive
    // for ideal membership purposes (residues repeat with period m - 1 in n
    // and are unchanged by s). The divisibility shortcut must agree.
    use trm_core::MAdic;
    use trm_core::torsion::is_admissible;

    for r in 1..=3u32 {
        for m in 2..=5u32 {
            let params = GroupParams::new(r, m).unwrap();
            assert!(torsion_exists(&params, 1), "identity always exists");
            assert!(!torsion_exists(&params, 0));
            for q in 2..=8u32 {
                let mut found = false;
                'scan: for s in 0..=3i64 {
                    let denom = u32::pow(m, s as u32);
                    for n in 1..r * denom {
                        let a = MAdic::normalize(i64::from(n), s, m);
                        if is_admissible(&params, q, &a).unwrap() {
                            found = true;
                            break 'scan;
                        }
                    }
                }
                assert_eq!(
                    torsion_exists(&params, q),
                    found,
                    "disagreement at ({r},{m},{q})"
                );
            }
        }
    }
}
