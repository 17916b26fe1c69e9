//! Divisor-class arithmetic on the moduli of pointed genus-g curves, in the
//! basis (lambda, omega, delta_0..delta_4), together with test-curve
//! intersection profiles and pointed Brill-Noether numerology.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::rat::{rat, rat_str, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DivisorError {
    #[error("fiber genus must be at least 2")]
    InvalidGenus,
    #[error("12 does not divide kappa + delta_0 = {kappa_plus_delta}; input data is inconsistent")]
    NonIntegralLambda { kappa_plus_delta: i64 },
    #[error("malformed vanishing sequence: {0}")]
    MalformedSequence(String),
}

/// A divisor class `c_lambda * lambda + c_omega * omega + sum_i c_i delta_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub lambda: Rat,
    pub omega: Rat,
    pub delta: [Rat; 5],
}

impl DivisorClass {
    pub fn zero() -> Self {
        DivisorClass {
            lambda: Rat::zero(),
            omega: Rat::zero(),
            delta: std::array::from_fn(|_| Rat::zero()),
        }
    }

    /// The Weierstrass divisor class on the moduli of pointed genus-5
    /// curves: `15 omega - lambda + 10 delta_1 + 6 delta_2 + 3 delta_3 +
    /// delta_4`.
    pub fn weierstrass_genus5() -> Self {
        DivisorClass {
            lambda: rat(-1),
            omega: rat(15),
            delta: [rat(0), rat(10), rat(6), rat(3), rat(1)],
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        DivisorClass {
            lambda: &self.lambda * c,
            omega: &self.omega * c,
            delta: std::array::from_fn(|i| &self.delta[i] * c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DivisorClass {
            lambda: &self.lambda + &other.lambda,
            omega: &self.omega + &other.omega,
            delta: std::array::from_fn(|i| &self.delta[i] + &other.delta[i]),
        }
    }
}

/// Intersection degrees of the named classes with a one-parameter family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestCurveProfile {
    pub lambda: Rat,
    pub omega: Rat,
    pub delta: [Rat; 5],
}

impl TestCurveProfile {
    /// Fix a general curve of the given genus and move the marked point:
    /// only omega pairs nontrivially, with degree `2g - 2`.
    pub fn moving_point(genus: i64) -> Self {
        TestCurveProfile {
            lambda: Rat::zero(),
            omega: rat(2 * genus - 2),
            delta: std::array::from_fn(|_| Rat::zero()),
        }
    }
}

/// Pair a class with a profile (the dot product in the common basis).
pub fn class_eval(class: &DivisorClass, profile: &TestCurveProfile) -> Rat {
    let mut acc = &class.lambda * &profile.lambda + &class.omega * &profile.omega;
    for i in 0..5 {
        acc += &class.delta[i] * &profile.delta[i];
    }
    acc
}

/// All invariants of a pencil with only nodal degenerations, blown up at
/// its base points, with the marked point a fixed base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzData {
    pub chi_total: i64,
    pub delta0: i64,
    pub k2_total: i64,
    pub kappa: i64,
    pub lambda: i64,
    pub omega: i64,
    pub profile: TestCurveProfile,
}

/// Invariants of a Lefschetz pencil of curves of genus `fiber_genus` on a
/// surface with Euler characteristic `chi_surface` and canonical
/// self-intersection `k2_surface`, with `base_points` base points.
///
/// The total-space Euler characteristic counts the singular fibers, the
/// canonical self-intersection drops by one per blown-up base point, and
/// `lambda` is recovered from `kappa + delta_0 = 12 lambda`. The section is
/// the exceptional curve over the marked base point, so `omega = 1`.
pub fn lefschetz_profile(
    chi_surface: i64,
    k2_surface: i64,
    fiber_genus: i64,
    base_points: i64,
) -> Result<LefschetzData, DivisorError> {
    if fiber_genus < 2 {
        return Err(DivisorError::InvalidGenus);
    }
    let chi_total = chi_surface + base_points;
    let chi_fiber = 2 - 2 * fiber_genus;
    let delta0 = chi_total - 2 * chi_fiber;
    let k2_total = k2_surface - base_points;
    let kappa = k2_total + 4 * (2 * fiber_genus - 2);
    let sum = kappa + delta0;
    if sum % 12 != 0 {
        return Err(DivisorError::NonIntegralLambda {
            kappa_plus_delta: sum,
        });
    }
    let lambda = sum / 12;
    let omega = 1;
    let profile = TestCurveProfile {
        lambda: rat(lambda),
        omega: rat(omega),
        delta: [rat(delta0), rat(0), rat(0), rat(0), rat(0)],
    };
    Ok(LefschetzData {
        chi_total,
        delta0,
        k2_total,
        kappa,
        lambda,
        omega,
        profile,
    })
}

/// For a section other than an exceptional curve: omega is minus the
/// section's self-intersection in the total space.
pub fn section_omega(section_self_intersection: i64) -> i64 {
    -section_self_intersection
}

/// A class `O(m, n)` on the incidence space, pinned down by its pairings
/// `8m` with the moving-point family and `n` with the pencil family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicXClass {
    pub point_degree: Rat,
    pub net_degree: Rat,
}

impl fmt::Display for PicXClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "O({},{})",
            rat_str(&self.point_degree),
            rat_str(&self.net_degree)
        )
    }
}

/// Solve `O(m, n)` from the two intersection numbers `d1` (moving point)
/// and `d2` (pencil): `8m = d1`, `n = d2`.
pub fn pullback_solve(d1: &Rat, d2: &Rat) -> PicXClass {
    PicXClass {
        point_degree: d1 / &rat(8),
        net_degree: d2.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayComparison {
    pub collinear: bool,
    /// The nonnegative ratio `c1 = ratio * c2` when collinear; the zero
    /// class is collinear with everything with ratio 0 by convention.
    pub ratio: Option<Rat>,
}

/// Do two classes span the same ray (proportional with nonnegative ratio)?
pub fn ray_collinear(c1: &PicXClass, c2: &PicXClass) -> RayComparison {
    let zero1 = c1.point_degree.is_zero() && c1.net_degree.is_zero();
    if zero1 {
        return RayComparison {
            collinear: true,
            ratio: Some(Rat::zero()),
        };
    }
    let zero2 = c2.point_degree.is_zero() && c2.net_degree.is_zero();
    if zero2 {
        return RayComparison {
            collinear: false,
            ratio: None,
        };
    }
    // cross-multiplication test for proportionality
    if &c1.point_degree * &c2.net_degree != &c1.net_degree * &c2.point_degree {
        return RayComparison {
            collinear: false,
            ratio: None,
        };
    }
    let ratio = if !c2.point_degree.is_zero() {
        &c1.point_degree / &c2.point_degree
    } else {
        &c1.net_degree / &c2.net_degree
    };
    if ratio < Rat::zero() {
        RayComparison {
            collinear: false,
            ratio: None,
        }
    } else {
        RayComparison {
            collinear: true,
            ratio: Some(ratio),
        }
    }
}

/// Additivity check for the relation expressing the ramified degree-4
/// pencil divisor as the Weierstrass divisor plus the pull-back of the
/// unpointed Brill-Noether divisor, at the level of test-curve pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoganReport {
    /// (moving-point, pencil) pair of the Weierstrass class, computed from
    /// its coefficients.
    pub weierstrass_pair: (Rat, Rat),
    pub consistent: bool,
    pub discrepancy: (Rat, Rat),
}

pub fn logan_relation_check(
    weierstrass: &DivisorClass,
    bn3_pair: (Rat, Rat),
    bn4_pair: (Rat, Rat),
) -> LoganReport {
    let f1 = TestCurveProfile::moving_point(5);
    let f2 = lefschetz_profile(8, 4, 5, 16)
        .expect("the standard pencil data is consistent")
        .profile;
    let w_pair = (class_eval(weierstrass, &f1), class_eval(weierstrass, &f2));
    let expected = (&w_pair.0 + &bn3_pair.0, &w_pair.1 + &bn3_pair.1);
    let discrepancy = (&bn4_pair.0 - &expected.0, &bn4_pair.1 - &expected.1);
    LoganReport {
        weierstrass_pair: w_pair,
        consistent: discrepancy.0.is_zero() && discrepancy.1.is_zero(),
        discrepancy,
    }
}

/// Outcome of the codimension count for a pointed Brill-Noether locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnNumerology {
    pub alpha: i64,
    pub is_divisor: bool,
}

/// For a degree-`d` series of projective dimension `r` on a genus-`g`
/// curve with vanishing sequence `z` at the marked point: the total
/// ramification `alpha = sum (z_i - i)` and whether the locus has
/// codimension one, i.e. `g + 1 = (r + 1)(g - d + r) + alpha`.
pub fn bn_divisor_numerology(
    g: i64,
    r: i64,
    d: i64,
    z: &[i64],
) -> Result<BnNumerology, DivisorError> {
    if z.len() != (r + 1) as usize {
        return Err(DivisorError::MalformedSequence(format!(
            "sequence must have length r + 1 = {}",
            r + 1
        )));
    }
    if z.iter().any(|&a| a < 0) {
        return Err(DivisorError::MalformedSequence(
            "entries must be nonnegative".into(),
        ));
    }
    if z.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DivisorError::MalformedSequence(
            "entries must strictly increase".into(),
        ));
    }
    let alpha: i64 = z.iter().enumerate().map(|(i, &a)| a - i as i64).sum();
    let is_divisor = g + 1 == (r + 1) * (g - d + r) + alpha;
    Ok(BnNumerology { alpha, is_divisor })
}
