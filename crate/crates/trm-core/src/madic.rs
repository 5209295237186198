//! Exact arithmetic in Z[1/m], the ring of m-adic rationals.
//!
//! A value is a pair (n, s) denoting n / m^s, kept in the canonical form
//! where s = 0 or m does not divide n (and zero is always (0, 0)). The base
//! m is deliberately *not* stored: every operation takes it as an explicit
//! parameter, so values can never drift between groups with different bases
//! without the caller noticing. Fields are private and every constructor
//! canonicalizes, so equality and hashing on the raw pair are sound.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MAdic {
    n: BigInt,
    s: u32,
}

fn m_pow(m: u32, e: u32) -> BigInt {
    BigInt::from(m).pow(e)
}

impl MAdic {
    /// Canonicalize n / m^s. Accepts any integer exponent; negative s means
    /// multiplication by m^|s|.
    pub fn normalize(n: impl Into<BigInt>, s: i64, m: u32) -> MAdic {
        assert!(m >= 2, "base must be at least 2");
        let mut n: BigInt = n.into();
        if n.is_zero() {
            return MAdic { n, s: 0 };
        }
        let mut s = s;
        if s < 0 {
            n *= m_pow(m, u32::try_from(-s).expect("exponent out of range"));
            s = 0;
        }
        let mb = BigInt::from(m);
        while s > 0 {
            let (q, rem) = n.div_rem(&mb);
            if rem.is_zero() {
                n = q;
                s -= 1;
            } else {
                break;
            }
        }
        MAdic {
            n,
            s: u32::try_from(s).expect("exponent out of range"),
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> MAdic {
        MAdic { n: v.into(), s: 0 }
    }

    pub fn zero() -> MAdic {
        MAdic::from_int(0)
    }

    pub fn one() -> MAdic {
        MAdic::from_int(1)
    }

    /// m^k as an element of Z[1/m].
    pub fn pow_of(m: u32, k: i64) -> MAdic {
        MAdic::normalize(BigInt::one(), -k, m)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.n
    }

    pub fn exponent(&self) -> u32 {
        self.s
    }

    pub fn is_zero(&self) -> bool {
        self.n.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.s == 0
    }

    pub fn signum(&self) -> i32 {
        if self.n.is_zero() {
            0
        } else if self.n.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn add(&self, other: &MAdic, m: u32) -> MAdic {
        let s = self.s.max(other.s);
        let n = &self.n * m_pow(m, s - self.s) + &other.n * m_pow(m, s - other.s);
        MAdic::normalize(n, i64::from(s), m)
    }

    pub fn sub(&self, other: &MAdic, m: u32) -> MAdic {
        self.add(&other.neg(), m)
    }

    pub fn neg(&self) -> MAdic {
        MAdic {
            n: -&self.n,
            s: self.s,
        }
    }

    pub fn mul(&self, other: &MAdic, m: u32) -> MAdic {
        MAdic::normalize(&self.n * &other.n, i64::from(self.s) + i64::from(other.s), m)
    }

    pub fn mul_int(&self, k: &BigInt, m: u32) -> MAdic {
        MAdic::normalize(&self.n * k, i64::from(self.s), m)
    }

    /// Multiply by m^k (k may be negative).
    pub fn mul_pow(&self, k: i64, m: u32) -> MAdic {
        MAdic::normalize(self.n.clone(), i64::from(self.s) - k, m)
    }

    /// Exact division by a nonzero integer; None if the quotient leaves
    /// Z[1/m].
    pub fn div_int_exact(&self, d: &BigInt, m: u32) -> Option<MAdic> {
        if d.is_zero() {
            return None;
        }
        // Strip any m-power content of d into the exponent first, then the
        // remaining unit part must divide the numerator exactly.
        let mut d = d.clone();
        let mut extra = 0i64;
        let mb = BigInt::from(m);
        loop {
            let (q, rem) = d.div_rem(&mb);
            if rem.is_zero() && !q.is_zero() {
                d = q;
                extra += 1;
            } else {
                break;
            }
        }
        let (q, rem) = self.n.div_rem(&d);
        if !rem.is_zero() {
            return None;
        }
        Some(MAdic::normalize(q, i64::from(self.s) + extra, m))
    }

    pub fn compare(&self, other: &MAdic, m: u32) -> Ordering {
        let s = self.s.max(other.s);
        let a = &self.n * m_pow(m, s - self.s);
        let b = &other.n * m_pow(m, s - other.s);
        a.cmp(&b)
    }

    /// Membership in the ideal (m-1) Z[1/m].
    ///
    /// Because m is congruent to 1 mod m-1, so is every power of m, hence
    /// n / m^s lies in the ideal exactly when m-1 divides n. The test is
    /// representation-independent for the same reason. For m = 2 the ideal
    /// is the whole ring.
    pub fn in_ideal(&self, m: u32) -> bool {
        (&self.n % BigInt::from(m - 1)).is_zero()
    }

    /// Floor of self / d for d > 0; result is an ordinary integer.
    pub fn floor_div(&self, d: &MAdic, m: u32) -> BigInt {
        assert!(d.signum() > 0, "floor_div requires a positive divisor");
        let s = self.s.max(d.s);
        let a = &self.n * m_pow(m, s - self.s);
        let b = &d.n * m_pow(m, s - d.s);
        a.div_floor(&b)
    }

    /// Reduce into [0, modulus) for modulus > 0.
    pub fn rem_mod(&self, modulus: &MAdic, m: u32) -> MAdic {
        let k = self.floor_div(modulus, m);
        self.sub(&modulus.mul_int(&k, m), m)
    }

    /// Parse "N", "N/m^s", or "N/d" with d a literal power of m.
    /// The result is canonical regardless of the written form.
    pub fn parse(text: &str, m: u32) -> Result<MAdic> {
        let text = text.trim();
        let bad = |msg: &str| Error::Parse(format!("{msg} in m-adic literal {text:?}"));
        if text.is_empty() {
            return Err(bad("empty input"));
        }
        let parse_int = |s: &str, what: &str| -> Result<BigInt> {
            s.parse::<BigInt>()
                .map_err(|_| bad(&format!("invalid {what}")))
        };
        let Some((num, den)) = text.split_once('/') else {
            return Ok(MAdic::from_int(parse_int(text, "integer")?));
        };
        let n = parse_int(num, "numerator")?;
        if let Some((base, exp)) = den.split_once('^') {
            let base: u32 = base
                .parse()
                .map_err(|_| bad("invalid denominator base"))?;
            if base != m {
                return Err(bad(&format!("denominator base {base} is not m = {m}")));
            }
            let s: u32 = exp
                .parse()
                .map_err(|_| bad("invalid denominator exponent"))?;
            Ok(MAdic::normalize(n, i64::from(s), m))
        } else {
            // Plain denominator: must be a literal power of m.
            let mut d = parse_int(den, "denominator")?;
            if d.is_zero() || d.is_negative() {
                return Err(bad("denominator must be positive"));
            }
            let mb = BigInt::from(m);
            let mut s = 0i64;
            while d > BigInt::one() {
                let (q, rem) = d.div_rem(&mb);
                if !rem.is_zero() {
                    return Err(bad(&format!("denominator is not a power of m = {m}")));
                }
                d = q;
                s += 1;
            }
            Ok(MAdic::normalize(n, s, m))
        }
    }

    pub fn render(&self, m: u32) -> String {
        if self.s == 0 {
            self.n.to_string()
        } else {
            format!("{}/{}^{}", self.n, m, self.s)
        }
    }
}
