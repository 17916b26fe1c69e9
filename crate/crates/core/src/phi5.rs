//! From a pointed genus-5 curve to a 4-pointed rational curve.
//!
//! In normal form, the two quadrics containing the tangent line cut a
//! degree-4 del Pezzo surface, and the osculating hyperplane `{x0 = 0}`
//! meets it in the tangent line plus a residual curve. Blowing up the
//! marked point twice separates the curve, the residual curve, the tangent
//! line, and the first exceptional curve into four marked points on the
//! second exceptional line. The module computes that 4-point configuration
//! two independent ways:
//!
//! * symbolically, by eliminating `x1`, factoring the plane germ, and
//!   transforming strict transforms through both blow-ups;
//! * in closed form, as the coefficient ratio
//!   `a(2,2,3) a(1,1,3) / a(1,2,2)`.
//!
//! The reported invariant is the Moebius coordinate of the residual curve's
//! point in the frame that puts the tangent line at 0, the curve at 1, and
//! the first exceptional curve at infinity; with that convention the closed
//! form is the ratio above, read off directly.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::curve5::{
    branch_expand, is_weierstrass, normalize, quad_coeff, Branch, NormalForm5, NormalizeError,
    PointedCurve5, DEFAULT_BRANCH_ORDER,
};
use crate::exact::mpoly::MPoly;
use crate::exact::rat::{rat_str, Rat};
use crate::exact::resultant::{binary_resultant, BinaryForm};

/// Germs are tracked to this total degree unless a caller asks for more.
/// The four marked points depend on jets of order at most 5; 6 gives slack.
pub const DEFAULT_GERM_DEGREE: u32 = 6;

#[derive(Debug, Error)]
pub enum Phi5Error {
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
    #[error("elimination failure during {step}: {detail}")]
    Elimination { step: &'static str, detail: String },
    #[error("degenerate configuration at {step}: {detail}")]
    Degenerate { step: &'static str, detail: String },
}

/// The pencil of quadrics through the tangent line, i.e. the degree-4 del
/// Pezzo surface containing the curve, spanned by the first two quadrics of
/// a normal form.
#[derive(Clone, Debug)]
pub struct SurfaceZ {
    q1: MPoly,
    q2: MPoly,
}

impl SurfaceZ {
    pub fn quadrics(&self) -> (&MPoly, &MPoly) {
        (&self.q1, &self.q2)
    }
}

/// The normal-form surface together with the osculating hyperplane
/// `{x0 = 0}` (returned as its linear form).
pub fn surface_and_hyperplane(nf: &NormalForm5) -> (SurfaceZ, MPoly) {
    let surface = SurfaceZ {
        q1: nf.net()[0].clone(),
        q2: nf.net()[1].clone(),
    };
    debug_assert!(quad_coeff(&surface.q1, 3, 3).is_zero());
    debug_assert!(quad_coeff(&surface.q2, 3, 3).is_zero());
    (surface, MPoly::var(crate::curve5::NVARS, 0))
}

/// The intersection of the surface with the osculating hyperplane,
/// projected to the tangent plane `{x0 = x1 = 0, x4 = 1}` and truncated as
/// a germ at the origin in the coordinates `(x2, x3)`.
#[derive(Clone, Debug)]
pub struct PlaneCurveGerm {
    /// Bivariate polynomial in `(x2, x3)`; variable 0 is `x2`.
    poly: MPoly,
    degree_bound: u32,
}

impl PlaneCurveGerm {
    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Multiplicity of the tangent-line factor `x2`.
    pub fn tangent_multiplicity(&self) -> u32 {
        self.poly.var_multiplicity(0).unwrap_or(0)
    }

    /// The residual-curve equation: the germ divided by `x2` once.
    pub fn residual_factor(&self) -> Option<MPoly> {
        self.poly.divide_by_var_power(0, 1)
    }
}

/// Eliminate `x1` from the hyperplane section using the second quadric
/// (solvable because its `x1 x4` pivot is 1) and substitute into the first.
pub fn residual_curve(surface: &SurfaceZ, hyperplane: &MPoly) -> Result<PlaneCurveGerm, Phi5Error> {
    residual_curve_with_degree(surface, hyperplane, DEFAULT_GERM_DEGREE)
}

pub fn residual_curve_with_degree(
    surface: &SurfaceZ,
    hyperplane: &MPoly,
    degree_bound: u32,
) -> Result<PlaneCurveGerm, Phi5Error> {
    if hyperplane != &MPoly::var(crate::curve5::NVARS, 0) {
        return Err(Phi5Error::Elimination {
            step: "residual-elimination",
            detail: "only the osculating hyperplane {x0 = 0} is supported".into(),
        });
    }
    if !quad_coeff(&surface.q2, 1, 4).is_one() {
        return Err(Phi5Error::Elimination {
            step: "residual-elimination",
            detail: "x1-pivot of the second quadric degenerated".into(),
        });
    }

    // restrict to {x0 = 0, x4 = 1}: polynomials in (x1, x2, x3)
    let restrict = |q: &MPoly| -> MPoly {
        let images = vec![
            MPoly::zero(3),
            MPoly::var(3, 0), // x1
            MPoly::var(3, 1), // x2
            MPoly::var(3, 2), // x3
            MPoly::constant(3, Rat::one()),
        ];
        q.substitute(&images, None)
    };
    let f1 = restrict(&surface.q1);
    let f2 = restrict(&surface.q2);

    // f2 = x1 * (unit) + w(x2, x3); solve x1 = g(x2, x3) by Newton steps in
    // the (x2, x3)-adic topology
    let mut g = MPoly::zero(2);
    for _ in 0..=degree_bound {
        let images = vec![embed_series(&g), MPoly::var(3, 1), MPoly::var(3, 2)];
        let value = f2.substitute(&images, None);
        let lin = f2.partial(0).substitute(&images, None);
        let value2 = project_plane(&value, degree_bound);
        let lin2 = project_plane(&lin, degree_bound);
        if value2.is_zero() {
            break;
        }
        let correction = multiply_by_inverse(&value2, &lin2, degree_bound)?;
        g = (&g - &correction).truncate_total_degree(degree_bound);
    }
    // defensive: the solved series must kill f2 through the degree bound
    {
        let images = vec![embed_series(&g), MPoly::var(3, 1), MPoly::var(3, 2)];
        let check = project_plane(&f2.substitute(&images, None), degree_bound);
        if !check.is_zero() {
            return Err(Phi5Error::Elimination {
                step: "residual-elimination",
                detail: "series solution for x1 failed to converge".into(),
            });
        }
    }

    let images = vec![embed_series(&g), MPoly::var(3, 1), MPoly::var(3, 2)];
    let germ = project_plane(&f1.substitute(&images, None), degree_bound);
    Ok(PlaneCurveGerm {
        poly: germ,
        degree_bound,
    })
}

/// View a bivariate `(x2, x3)` polynomial inside the 3-variable ring
/// `(x1, x2, x3)`.
fn embed_series(g: &MPoly) -> MPoly {
    assert_eq!(g.nvars(), 2);
    let images = vec![MPoly::var(3, 1), MPoly::var(3, 2)];
    g.substitute(&images, None)
}

/// Forget `x1` (which must not occur) and truncate.
fn project_plane(p: &MPoly, degree_bound: u32) -> MPoly {
    assert_eq!(p.nvars(), 3);
    let mut out = MPoly::zero(2);
    for (e, c) in p.terms() {
        assert_eq!(e[0], 0, "x1 must be eliminated");
        if e[1] + e[2] <= degree_bound {
            out.add_term(vec![e[1], e[2]], c.clone());
        }
    }
    out
}

/// `value / lin` in the plane germ ring, where `lin` has a unit constant
/// term; computed via the truncated geometric series for `1/lin`.
fn multiply_by_inverse(value: &MPoly, lin: &MPoly, degree_bound: u32) -> Result<MPoly, Phi5Error> {
    let c0 = lin.coeff(&[0, 0]);
    if c0.is_zero() {
        return Err(Phi5Error::Elimination {
            step: "residual-elimination",
            detail: "x1-pivot degenerated while inverting the elimination system".into(),
        });
    }
    let c0_inv = c0.recip();
    // lin = c0 (1 - h) with h of positive order
    let h = &MPoly::constant(2, Rat::one()) - &lin.scale(&c0_inv);
    let mut inv = MPoly::constant(2, Rat::one());
    let mut power = MPoly::constant(2, Rat::one());
    for _ in 0..degree_bound {
        power = power.mul_truncated(&h, degree_bound);
        if power.is_zero() {
            break;
        }
        inv = &inv + &power;
    }
    Ok(value.mul_truncated(&inv, degree_bound).scale(&c0_inv))
}

/// A point of the projective line in homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1Point {
    pub num: Rat,
    pub den: Rat,
}

impl P1Point {
    pub fn new(num: Rat, den: Rat) -> Self {
        assert!(!(num.is_zero() && den.is_zero()), "(0 : 0) is not a point");
        P1Point { num, den }
    }

    pub fn same_point(&self, other: &P1Point) -> bool {
        &self.num * &other.den == &self.den * &other.num
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", rat_str(&self.num), rat_str(&self.den))
    }
}

/// The four marked points on the second exceptional line, labeled by the
/// curves whose strict transforms cut them out.
#[derive(Clone, Debug)]
pub struct FourMarkedPoints {
    pub residual: P1Point,
    pub exceptional: P1Point,
    pub tangent: P1Point,
    pub curve: P1Point,
}

/// Track the residual curve and the branch of the curve through both
/// blow-ups and intersect their strict transforms with the second
/// exceptional line. In the affine coordinate `u' = x2 / x3^2` on that
/// line, the tangent line lands at 0, the first exceptional curve at
/// infinity, the curve at the leading branch coefficient, and the residual
/// curve at the root of its transformed equation.
pub fn blowup_four_points(
    germ: &PlaneCurveGerm,
    branch: &Branch,
) -> Result<FourMarkedPoints, Phi5Error> {
    let degenerate = |step: &'static str, detail: String| Phi5Error::Degenerate { step, detail };

    if germ.poly().is_zero() {
        return Err(degenerate(
            "first-blowup",
            "hyperplane section vanishes identically".into(),
        ));
    }
    if germ.tangent_multiplicity() == 0 {
        return Err(degenerate(
            "first-blowup",
            "tangent line is not a component of the hyperplane section".into(),
        ));
    }
    let r_eq = germ
        .residual_factor()
        .expect("tangent multiplicity is at least 1");
    if r_eq.is_zero() {
        return Err(degenerate(
            "first-blowup",
            "residual equation vanishes identically".into(),
        ));
    }

    // first blow-up: substitute x2 = u x3 and strip x3^mult
    let mult = r_eq.lowest_total_degree().expect("nonzero");
    let sub1 = r_eq.substitute(
        &[
            // x2 := u * x3
            {
                let mut p = MPoly::zero(2);
                p.add_term(vec![1, 1], Rat::one());
                p
            },
            // x3 := x3
            MPoly::var(2, 1),
        ],
        None,
    );
    let f1 = sub1
        .divide_by_var_power(1, mult)
        .expect("every term of the substituted equation carries x3^mult");
    if !f1.coeff(&[0, 0]).is_zero() {
        return Err(degenerate(
            "second-blowup",
            "strict transform of the residual curve misses the infinitesimal base point".into(),
        ));
    }

    // second blow-up: substitute u = u' x3 and strip x3 powers
    let sub2 = f1.substitute(
        &[
            {
                let mut p = MPoly::zero(2);
                p.add_term(vec![1, 1], Rat::one());
                p
            },
            MPoly::var(2, 1),
        ],
        None,
    );
    let strip = sub2.var_multiplicity(1).unwrap_or(0);
    let f2 = sub2
        .divide_by_var_power(1, strip)
        .expect("strip count is the multiplicity");

    // restrict to the exceptional line {x3 = 0}: a polynomial in u'
    let mut on_line: Vec<(u32, Rat)> = f2
        .terms()
        .filter(|(e, _)| e[1] == 0)
        .map(|(e, c)| (e[0], c.clone()))
        .collect();
    on_line.sort_by_key(|(d, _)| *d);
    let degree = on_line.last().map(|(d, _)| *d).unwrap_or(0);
    if degree != 1 {
        return Err(degenerate(
            "second-blowup",
            format!(
                "residual strict transform meets the exceptional line with degree {degree}, not a single reduced point"
            ),
        ));
    }
    let linear = on_line
        .iter()
        .find(|(d, _)| *d == 1)
        .map(|(_, c)| c.clone())
        .expect("degree is 1");
    let constant = on_line
        .iter()
        .find(|(d, _)| *d == 0)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rat::zero);
    let residual = P1Point::new(-constant, linear);

    // the curve's branch: u' = x2(s) / s^2 at s = 0
    if branch.order_bound() < 2 || !branch.x2.coeff(0).is_zero() || !branch.x2.coeff(1).is_zero() {
        return Err(degenerate(
            "second-blowup",
            "branch is not tangent to the expected line".into(),
        ));
    }
    let curve = P1Point::new(branch.x2.coeff(2), Rat::one());

    Ok(FourMarkedPoints {
        residual,
        exceptional: P1Point::new(Rat::one(), Rat::zero()),
        tangent: P1Point::new(Rat::zero(), Rat::one()),
        curve,
    })
}

/// Boundary points of the moduli of 4-pointed rational curves, labeled by
/// the pairing of the four marked points (residual R, exceptional E,
/// tangent T, curve C).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryLabel {
    /// `{R,T} | {C,E}` — the residual curve meets the tangent line's point.
    RtCe,
    /// `{R,E} | {C,T}` — the residual curve meets the exceptional point.
    ReCt,
    /// `{R,C} | {E,T}` — the residual curve meets the curve's point.
    RcEt,
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryLabel::RtCe => write!(f, "{{R,T}}|{{C,E}}"),
            BoundaryLabel::ReCt => write!(f, "{{R,E}}|{{C,T}}"),
            BoundaryLabel::RcEt => write!(f, "{{R,C}}|{{E,T}}"),
        }
    }
}

/// A point of the moduli of stable 4-pointed rational curves: either an
/// interior cross-ratio, a labeled boundary point, or a degenerate
/// configuration that does not determine a stable limit.
#[derive(Clone, Debug)]
pub enum M04Point {
    Interior(Rat),
    Boundary(BoundaryLabel),
    Degenerate(String),
}

impl M04Point {
    /// Classify the Moebius coordinate `num/den` of the residual point in
    /// the frame (tangent, curve, exceptional) -> (0, 1, infinity).
    pub fn classify(num: Rat, den: Rat) -> M04Point {
        if num.is_zero() && den.is_zero() {
            return M04Point::Degenerate(
                "cross-ratio numerator and denominator both vanish".into(),
            );
        }
        if num.is_zero() {
            return M04Point::Boundary(BoundaryLabel::RtCe);
        }
        if den.is_zero() {
            return M04Point::Boundary(BoundaryLabel::ReCt);
        }
        if num == den {
            return M04Point::Boundary(BoundaryLabel::RcEt);
        }
        M04Point::Interior(num / den)
    }

    pub fn is_boundary_or_degenerate(&self) -> bool {
        !matches!(self, M04Point::Interior(_))
    }
}

impl PartialEq for M04Point {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (M04Point::Interior(a), M04Point::Interior(b)) => a == b,
            (M04Point::Boundary(a), M04Point::Boundary(b)) => a == b,
            (M04Point::Degenerate(_), M04Point::Degenerate(_)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for M04Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            M04Point::Interior(l) => write!(f, "lambda={}", rat_str(l)),
            M04Point::Boundary(b) => write!(f, "{b}"),
            M04Point::Degenerate(r) => write!(f, "degenerate: {r}"),
        }
    }
}

/// Moebius coordinate of `residual` in the frame sending `tangent` to 0,
/// `curve` to 1, and `exceptional` to infinity.
pub fn cross_ratio(points: &FourMarkedPoints) -> M04Point {
    let br = |a: &P1Point, b: &P1Point| -> Rat { &a.num * &b.den - &a.den * &b.num };
    let num = br(&points.residual, &points.tangent) * br(&points.curve, &points.exceptional);
    let den = br(&points.residual, &points.exceptional) * br(&points.curve, &points.tangent);
    // the frame is (T, C, E) -> (0, 1, infinity); both brackets flip sign
    // together, so the quotient is the Moebius coordinate
    M04Point::classify(-num, -den)
}

/// Closed-form image: `a(2,2,3) a(1,1,3) / a(1,2,2)` with the boundary
/// classification of `M04Point::classify`. Total on normal forms.
pub fn phi5_closed_form(nf: &NormalForm5) -> M04Point {
    let num = nf.coeff(2, 2, 3) * nf.coeff(1, 1, 3);
    let den = nf.coeff(1, 2, 2);
    M04Point::classify(num, den)
}

/// Full symbolic route: normalize, eliminate, blow up twice, take the
/// cross-ratio. Must agree with the closed form whenever both are defined.
pub fn phi5(curve: &PointedCurve5) -> Result<M04Point, Phi5Error> {
    let nf = normalize(curve)?;
    let (surface, hyperplane) = surface_and_hyperplane(&nf);
    let germ = residual_curve(&surface, &hyperplane)?;
    let branch = branch_expand(&nf, DEFAULT_BRANCH_ORDER);
    let points = blowup_four_points(&germ, &branch)?;
    Ok(cross_ratio(&points))
}

/// Detector report for the three special-ramification conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnDivisorFlags {
    /// Osculating contact of order at least 5.
    pub weierstrass: bool,
    /// A line on the surface through the marked point other than the
    /// tangent line (degree-4 pencil ramified at the point).
    pub bn4_03: bool,
    /// The tangent line is a component of the residual curve (degree-6 net
    /// with ramification (0,2,4)).
    pub bn6_024: bool,
}

/// Evaluate the three detectors on a normal form.
pub fn detect_bn_divisors(nf: &NormalForm5) -> Result<BnDivisorFlags, Phi5Error> {
    let weierstrass = is_weierstrass(nf);

    // lines through the marked point on the surface: restrict both surface
    // quadrics to the pencil of tangent directions (0,0,v2,v3,*) and look
    // for a common root besides the tangent direction (v2 : v3) = (0 : 1)
    let q1 = &nf.net()[0];
    let q2 = &nf.net()[1];
    let restrict_to_pencil = |q: &MPoly| -> BinaryForm {
        // value on the line through the marked point with direction
        // (0, 0, v2, v3): the s^2 coefficient as a binary form in (v2, v3)
        BinaryForm::new(vec![
            quad_coeff(q, 2, 2),
            quad_coeff(q, 2, 3),
            quad_coeff(q, 3, 3),
        ])
    };
    let p1 = restrict_to_pencil(q1);
    let p2 = restrict_to_pencil(q2);
    // both forms vanish at the tangent direction (0 : 1); remove it once
    let bn4_03 = match (p1.divide_by_s(), p2.divide_by_s()) {
        (Some(l1), Some(l2)) => {
            if l1.is_zero() && l2.is_zero() {
                // every direction through the point lies on both quadrics
                true
            } else {
                let shared_root = if l1.is_zero() || l2.is_zero() {
                    true
                } else {
                    binary_resultant(&l1, &l2)
                        .expect("nonzero linear forms")
                        .is_zero()
                };
                if shared_root {
                    // the shared root of c0 v2 + c1 v3 is (-c1 : c0); it
                    // differs from the tangent direction (0 : 1) exactly
                    // when c1 is nonzero
                    let l = if l1.is_zero() { &l2 } else { &l1 };
                    !l.coeffs()[1].is_zero()
                } else {
                    false
                }
            }
        }
        _ => {
            return Err(Phi5Error::Degenerate {
                step: "direction-pencil",
                detail: "surface quadrics do not vanish doubly along the tangent direction".into(),
            })
        }
    };

    // tangent line dividing the residual curve: the germ is divisible by
    // x2 twice
    let (surface, hyperplane) = surface_and_hyperplane(nf);
    let germ = residual_curve(&surface, &hyperplane)?;
    let bn6_024 = germ.tangent_multiplicity() >= 2;

    Ok(BnDivisorFlags {
        weierstrass,
        bn4_03,
        bn6_024,
    })
}
