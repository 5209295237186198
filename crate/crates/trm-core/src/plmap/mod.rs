//! Piecewise-linear maps with m-adic breakpoints and power-of-m slopes:
//! segment maps (interval homeomorphisms) and circle maps (elements of and
//! between the circles S_r).

mod circle;
mod segment;

pub use circle::PLCircleMap;
pub use segment::{Node, PLSegmentMap};

use crate::arith::gcd_u64;
use crate::error::{Error, Result};
use crate::madic::MAdic;

/// The pair (r, m) naming the group T_{r,m} of PL self-homeomorphisms of the
/// circle of circumference r with slopes in m^Z and breakpoints in Z[1/m].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupParams {
    r: u32,
    m: u32,
}

impl GroupParams {
    pub fn new(r: u32, m: u32) -> Result<GroupParams> {
        if r < 1 {
            return Err(Error::InvalidArgument("r must be at least 1".into()));
        }
        if m < 2 {
            return Err(Error::InvalidArgument("m must be at least 2".into()));
        }
        Ok(GroupParams { r, m })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn circumference(&self) -> MAdic {
        MAdic::from_int(self.r)
    }

    /// True when `f` is an element of this group.
    pub fn contains(&self, f: &PLCircleMap) -> bool {
        f.base() == self.m && f.is_group_element() && *f.r_src() == self.circumference()
    }

    pub fn label(&self) -> String {
        format!("T_{{{},{}}}", self.r, self.m)
    }
}

/// A reduced rotation number in [0, 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RotationNumber {
    num: u64,
    den: u64,
}

impl RotationNumber {
    /// p/q reduced, with p taken mod q.
    pub fn new(p: u64, q: u64) -> RotationNumber {
        assert!(q >= 1, "denominator must be positive");
        let p = p % q;
        let g = gcd_u64(p, q);
        if g == 0 {
            return RotationNumber { num: 0, den: 1 };
        }
        RotationNumber {
            num: p / g,
            den: q / g,
        }
    }

    pub fn zero() -> RotationNumber {
        RotationNumber { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Rotation number of the n-th power: {n * p/q} mod 1.
    pub fn times(&self, n: i64) -> RotationNumber {
        let n = n.rem_euclid(self.den as i64) as u64;
        RotationNumber::new(self.num * n, self.den)
    }

    pub fn render(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }
}

impl Ord for RotationNumber {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = u128::from(self.num) * u128::from(other.den);
        let b = u128::from(other.num) * u128::from(self.den);
        a.cmp(&b)
    }
}

impl PartialOrd for RotationNumber {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl serde::Serialize for RotationNumber {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.render())
    }
}

/// Caps for the finite-order search: iteration count and an overall piece
/// budget that stops runaway growth on non-torsion inputs.
#[derive(Clone, Copy, Debug)]
pub struct OrderBudget {
    pub max_iterations: u32,
    pub max_pieces: usize,
}

impl Default for OrderBudget {
    fn default() -> Self {
        OrderBudget {
            max_iterations: 4096,
            max_pieces: 1 << 16,
        }
    }
}

impl OrderBudget {
    pub fn with_iterations(max_iterations: u32) -> Self {
        OrderBudget {
            max_iterations,
            ..Default::default()
        }
    }
}
