//! Small number-theoretic helpers on machine integers.
//!
//! Everything here operates on group-level parameters (orders, rotation
//! numerators, residues), which are tiny; the big-integer arithmetic lives in
//! [`crate::madic`].

use num_integer::Integer;

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Least positive inverse of `a` modulo `q`, if `gcd(a, q) = 1`.
pub fn mod_inverse(a: u64, q: u64) -> Option<u64> {
    if q == 0 {
        return None;
    }
    if q == 1 {
        // Everything is congruent to 0 mod 1; 1 is the least positive choice.
        return Some(1);
    }
    let a = (a % q) as i64;
    let e = a.extended_gcd(&(q as i64));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(q as i64) as u64)
}

/// Euler's totient by trial division; fine for the desk-scale q involved.
pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut n = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            phi -= phi / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}
