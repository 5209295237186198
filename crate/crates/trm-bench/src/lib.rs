//! Shared fixtures for the benchmarks: deterministic sampled elements and
//! torsion representatives at a few representative parameter points.

use trm_core::oracle::random_element;
use trm_core::torsion::{construct_torsion, default_admissible_a};
use trm_core::{GroupParams, PLCircleMap};

pub fn params(r: u32, m: u32) -> GroupParams {
    GroupParams::new(r, m).expect("valid parameters")
}

/// A deterministic random element with roughly `complexity` subdivisions.
pub fn sampled(r: u32, m: u32, complexity: u32, seed: u64) -> PLCircleMap {
    random_element(&params(r, m), complexity, seed).expect("sampler succeeds")
}

/// The default order-q representative of T_{r,m} with rotation number 1/q.
pub fn torsion(r: u32, m: u32, q: u32) -> PLCircleMap {
    let params = params(r, m);
    let a = default_admissible_a(&params, q).expect("order is realizable");
    construct_torsion(&params, q, &a).expect("construction succeeds")
}
