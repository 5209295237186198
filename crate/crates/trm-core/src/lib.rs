//! Exact arithmetic for the Brown-Thompson groups T_{r,m}: the groups of
//! orientation-preserving PL homeomorphisms of the circle of circumference r
//! whose slopes are powers of m and whose breakpoints and their images lie
//! in Z[1/m].
//!
//! Everything is computed exactly over big integers; no floating point is
//! involved anywhere. The main entry points are:
//!
//! - [`madic::MAdic`]: canonical m-adic rationals n / m^s;
//! - [`plmap::PLSegmentMap`] and [`plmap::PLCircleMap`]: PL maps with
//!   power-of-m slopes, with exact composition, inversion, powers, order and
//!   rotation numbers;
//! - [`bieri_strebel`]: the interval-equivalence criterion and constructive
//!   witnesses;
//! - [`torsion`]: existence and construction of finite-order elements;
//! - [`conjugacy`]: the complete conjugacy invariant for torsion elements,
//!   explicit conjugating witnesses, and class counting;
//! - [`oracle`]: randomized self-checks (seeded census of conjugacy classes,
//!   exhaustive small-scale equivalence scans).

pub mod arith;
pub mod bieri_strebel;
pub mod conjugacy;
pub mod error;
pub mod json;
pub mod madic;
pub mod oracle;
pub mod plmap;
pub mod torsion;

pub use conjugacy::TorsionDescriptor;
pub use error::{Error, Result};
pub use madic::MAdic;
pub use plmap::{GroupParams, Node, OrderBudget, PLCircleMap, PLSegmentMap, RotationNumber};
