//! Exact-arithmetic toolkit for pointed canonical curves.
//!
//! The crate computes, over exact rationals and with no floating point
//! anywhere:
//!
//! * normal forms for pointed genus-5 canonical curves given as nets of
//!   quadrics in P^4, branch expansions at the marked point, and
//!   Weierstrass-point detection ([`curve5`]);
//! * the induced point of the moduli of 4-pointed rational curves, computed
//!   two independent ways — a symbolic double blow-up and a closed-form
//!   coefficient ratio — together with detectors for the special
//!   ramification loci ([`phi5`]);
//! * Hilbert–Mumford weight systems for the diagonal torus, exact
//!   (semi)stability tests, flat limits under one-parameter subgroups, and
//!   canonical orbit representatives ([`git`]);
//! * divisor-class arithmetic on moduli of pointed curves, test-curve
//!   intersection profiles, and pointed Brill–Noether numerology
//!   ([`divisors`]);
//! * the quintic del Pezzo picture for pointed genus-6 curves: (-1)-curves,
//!   blow-downs, node detection, and the induced 5-point configuration
//!   ([`genus6`]).

pub mod curve5;
pub mod divisors;
pub mod exact;
pub mod genus6;
pub mod git;
pub mod phi5;

pub use curve5::{Branch, NormalForm5, PointedCurve5, VanishingSequence};
pub use divisors::{DivisorClass, PicXClass, TestCurveProfile};
pub use exact::{MPoly, QMatrix, Rat, TruncSeries};
pub use genus6::{M05OrbitPoint, NegCurve, PointedCurve6, QuinticDP};
pub use git::{Linearization, OnePS, WeightedStateSet};
pub use phi5::{M04Point, PlaneCurveGerm, SurfaceZ};
