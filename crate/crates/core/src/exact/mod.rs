//! Exact arithmetic substrate: rationals, multivariate polynomials,
//! truncated power series, linear algebra, convex-hull membership, and
//! binary resultants. Everything downstream is built on these.

pub mod hull;
pub mod linalg;
pub mod mpoly;
pub mod rat;
pub mod resultant;
pub mod series;

pub use hull::{zero_in_hull, zero_in_hull_interior, HullError, HullResult};
pub use linalg::{mat_kernel, QMatrix};
pub use mpoly::MPoly;
pub use rat::{parse_rat, rat, rat_str, ratio, Rat};
pub use resultant::{binary_resultant, BinaryForm, ResultantError};
pub use series::TruncSeries;
