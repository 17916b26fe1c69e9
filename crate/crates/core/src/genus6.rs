//! Pointed genus-6 curves on the quintic del Pezzo surface.
//!
//! The surface is the plane blown up at four general points. Its ten
//! (-1)-curves are the four exceptional curves and the six lines through
//! pairs of base points; the five sets of four pairwise disjoint
//! (-1)-curves are the five blow-downs to the plane. A pointed curve is a
//! plane sextic with double points at the four base points together with a
//! marked point; the marked point maps to a node under one of the five
//! degree-6 nets exactly when it lies on a (-1)-curve.
//!
//! Forgetting the curve sends the marked point to the surface itself, seen
//! as the moduli of 5-pointed rational curves: the five points are the four
//! base points and the marked point, carried by the unique conic through
//! them, up to the label action. Configurations are compared through a
//! canonical form: normalize three points to 0, 1, infinity, record the
//! remaining two coordinates, and minimize lexicographically over all 120
//! labelings.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::linalg::QMatrix;
use crate::exact::mpoly::MPoly;
use crate::exact::rat::{rat, rat_str, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Genus6Error {
    #[error("general position failure: {0}")]
    GeneralPositionFailure(String),
    #[error("the marked point must not be a blown-up base point; use an exceptional-curve point instead")]
    BasePointInput,
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// The plane blown up at four points in general position.
#[derive(Clone, Debug)]
pub struct QuinticDP {
    base: [[Rat; 3]; 4],
}

fn collinear(a: &[Rat; 3], b: &[Rat; 3], c: &[Rat; 3]) -> bool {
    let m = QMatrix::from_rows(vec![a.to_vec(), b.to_vec(), c.to_vec()]);
    m.det().is_zero()
}

fn proportional3(a: &[Rat; 3], b: &[Rat; 3]) -> bool {
    crate::curve5::projectively_equal(a, b)
}

/// Cross product of two plane points: the line through them, as a covector.
fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot3(a: &[Rat; 3], b: &[Rat; 3]) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

impl QuinticDP {
    pub fn new(base: [[Rat; 3]; 4]) -> Result<Self, Genus6Error> {
        for (i, b) in base.iter().enumerate() {
            if b.iter().all(Rat::is_zero) {
                return Err(Genus6Error::Invalid(format!(
                    "base point {} is the zero vector",
                    i + 1
                )));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if proportional3(&base[i], &base[j]) {
                    return Err(Genus6Error::GeneralPositionFailure(format!(
                        "base points {} and {} coincide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for c in (0..4).combinations(3) {
            if collinear(&base[c[0]], &base[c[1]], &base[c[2]]) {
                return Err(Genus6Error::GeneralPositionFailure(format!(
                    "base points {}, {}, {} are collinear",
                    c[0] + 1,
                    c[1] + 1,
                    c[2] + 1
                )));
            }
        }
        Ok(QuinticDP { base })
    }

    /// The standard frame: (1:0:0), (0:1:0), (0:0:1), (1:1:1).
    pub fn standard() -> Self {
        let z = Rat::zero;
        let o = Rat::one;
        QuinticDP::new([
            [o(), z(), z()],
            [z(), o(), z()],
            [z(), z(), o()],
            [o(), o(), o()],
        ])
        .expect("standard frame is in general position")
    }

    pub fn base_points(&self) -> &[[Rat; 3]; 4] {
        &self.base
    }
}

/// Class label of a (-1)-curve on the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NegCurveClass {
    /// The exceptional curve over base point `i` (0-indexed).
    Exceptional(usize),
    /// The strict transform of the line through base points `i < j`.
    Line(usize, usize),
}

impl NegCurveClass {
    /// Class vector `(h; e1, e2, e3, e4)` in the standard basis.
    fn class(&self) -> [i64; 5] {
        match *self {
            NegCurveClass::Exceptional(i) => {
                let mut c = [0; 5];
                c[i + 1] = 1;
                c
            }
            NegCurveClass::Line(i, j) => {
                let mut c = [1, 0, 0, 0, 0];
                c[i + 1] = -1;
                c[j + 1] = -1;
                c
            }
        }
    }
}

impl fmt::Display for NegCurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NegCurveClass::Exceptional(i) => write!(f, "E{}", i + 1),
            NegCurveClass::Line(i, j) => write!(f, "L{}{}", i + 1, j + 1),
        }
    }
}

/// A (-1)-curve with its defining data: the line's covector for strict
/// transforms of lines, nothing extra for exceptional curves.
#[derive(Clone, Debug)]
pub struct NegCurve {
    pub class: NegCurveClass,
    pub line_form: Option<[Rat; 3]>,
}

/// Intersection number of two class vectors under `h^2 = 1`,
/// `e_i . e_j = -delta_ij`, `h . e_i = 0`.
pub fn class_pairing(a: &NegCurveClass, b: &NegCurveClass) -> i64 {
    let ca = a.class();
    let cb = b.class();
    ca[0] * cb[0] - (1..5).map(|k| ca[k] * cb[k]).sum::<i64>()
}

/// The ten (-1)-curves: four exceptional curves then the six lines, in
/// lexicographic pair order.
pub fn neg_curves(surface: &QuinticDP) -> Vec<NegCurve> {
    let mut out = Vec::with_capacity(10);
    for i in 0..4 {
        out.push(NegCurve {
            class: NegCurveClass::Exceptional(i),
            line_form: None,
        });
    }
    for i in 0..4 {
        for j in i + 1..4 {
            out.push(NegCurve {
                class: NegCurveClass::Line(i, j),
                line_form: Some(cross(&surface.base[i], &surface.base[j])),
            });
        }
    }
    out
}

/// The five maximal sets of four pairwise disjoint (-1)-curves, as index
/// sets into `neg_curves`, found by brute force over the pairing table.
pub fn blow_down_sets(surface: &QuinticDP) -> Vec<[usize; 4]> {
    let curves = neg_curves(surface);
    let mut out = Vec::new();
    for c in (0..curves.len()).combinations(4) {
        let disjoint = c
            .iter()
            .tuple_combinations()
            .all(|(&x, &y)| class_pairing(&curves[x].class, &curves[y].class) == 0);
        if disjoint {
            out.push([c[0], c[1], c[2], c[3]]);
        }
    }
    out
}

/// A point of the blown-up surface: either an honest plane point away from
/// the base points, or a point of an exceptional curve given by the base
/// index and a tangent direction (a plane vector independent of the base
/// point, taken modulo it).
#[derive(Clone, Debug)]
pub enum SurfacePoint {
    Plane([Rat; 3]),
    Exceptional { base: usize, direction: [Rat; 3] },
}

/// The (-1)-curve through a surface point, if any. Exceptional points lie
/// on their exceptional curve by definition; plane points are tested
/// against the six line forms.
pub fn on_neg_curve(
    surface: &QuinticDP,
    point: &SurfacePoint,
) -> Result<Option<NegCurve>, Genus6Error> {
    match point {
        SurfacePoint::Exceptional { base, direction } => {
            if *base >= 4 {
                return Err(Genus6Error::Invalid("base index out of range".into()));
            }
            if proportional3(direction, &surface.base[*base]) {
                return Err(Genus6Error::Invalid(
                    "exceptional direction must be independent of the base point".into(),
                ));
            }
            Ok(Some(NegCurve {
                class: NegCurveClass::Exceptional(*base),
                line_form: None,
            }))
        }
        SurfacePoint::Plane(p) => {
            if p.iter().all(Rat::is_zero) {
                return Err(Genus6Error::Invalid("zero vector is not a point".into()));
            }
            if surface.base.iter().any(|b| proportional3(b, p)) {
                return Err(Genus6Error::BasePointInput);
            }
            for curve in neg_curves(surface) {
                if let Some(form) = &curve.line_form {
                    if dot3(form, p).is_zero() {
                        return Ok(Some(curve));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// A plane sextic with double points at the four base points, together
/// with a marked point of the surface lying on the curve.
#[derive(Clone, Debug)]
pub struct PointedCurve6 {
    pub surface: QuinticDP,
    pub sextic: MPoly,
    pub point: SurfacePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve6Validation {
    pub sextic_is_degree6: bool,
    pub double_at_base_points: bool,
    pub point_on_curve: bool,
}

impl Curve6Validation {
    pub fn passed(&self) -> bool {
        self.sextic_is_degree6 && self.double_at_base_points && self.point_on_curve
    }
}

impl PointedCurve6 {
    pub fn validate(&self) -> Curve6Validation {
        let sextic_is_degree6 = self.sextic.nvars() == 3
            && !self.sextic.is_zero()
            && self.sextic.terms().all(|(e, _)| e.iter().sum::<u32>() == 6);
        let double_at_base_points = sextic_is_degree6
            && self.surface.base.iter().all(|b| {
                self.sextic.eval(b).is_zero()
                    && (0..3).all(|k| self.sextic.partial(k).eval(b).is_zero())
            });
        let point_on_curve = sextic_is_degree6
            && match &self.point {
                SurfacePoint::Plane(p) => self.sextic.eval(p).is_zero(),
                SurfacePoint::Exceptional { base, direction } => {
                    *base < 4
                        && tangent_cone_value(&self.sextic, &self.surface.base[*base], direction)
                            .is_zero()
                }
            };
        Curve6Validation {
            sextic_is_degree6,
            double_at_base_points,
            point_on_curve,
        }
    }

    /// Move the whole configuration by a projective transformation of the
    /// plane (points map by `m`, the sextic by substitution with `m^{-1}`).
    pub fn transform(&self, m: &QMatrix) -> PointedCurve6 {
        let minv = m.inverse().expect("transformation must be invertible");
        let map_pt = |p: &[Rat; 3]| -> [Rat; 3] {
            let v = m.mul_vec(p);
            [v[0].clone(), v[1].clone(), v[2].clone()]
        };
        let base = [
            map_pt(&self.surface.base[0]),
            map_pt(&self.surface.base[1]),
            map_pt(&self.surface.base[2]),
            map_pt(&self.surface.base[3]),
        ];
        let surface = QuinticDP::new(base).expect("projective image stays in general position");
        let sextic = self.sextic.substitute_linear(&minv);
        let point = match &self.point {
            SurfacePoint::Plane(p) => SurfacePoint::Plane(map_pt(p)),
            SurfacePoint::Exceptional { base, direction } => SurfacePoint::Exceptional {
                base: *base,
                direction: map_pt(direction),
            },
        };
        PointedCurve6 {
            surface,
            sextic,
            point,
        }
    }
}

/// Second directional derivative of `f` at `p` along `d`: the value of the
/// tangent cone on the direction when `f` has multiplicity 2 at `p`.
fn tangent_cone_value(f: &MPoly, p: &[Rat; 3], d: &[Rat; 3]) -> Rat {
    let mut acc = Rat::zero();
    for k in 0..3 {
        for l in 0..3 {
            acc += f.partial(k).partial(l).eval(p) * &d[k] * &d[l];
        }
    }
    acc
}

/// Node-detection report: the marked point maps to a node under one of the
/// five degree-6 nets exactly when it lies on a (-1)-curve.
#[derive(Clone, Debug)]
pub struct D6Report {
    pub in_d6: bool,
    pub witness: Option<NegCurve>,
}

pub fn d6_membership(curve: &PointedCurve6) -> Result<D6Report, Genus6Error> {
    let witness = on_neg_curve(&curve.surface, &curve.point)?;
    Ok(D6Report {
        in_d6: witness.is_some(),
        witness,
    })
}

/// A point of the moduli of 5-pointed rational curves up to the label
/// action: an interior canonical configuration, or a boundary point given
/// by the colliding pair. Labels 0..3 are the base points, label 4 is the
/// marked point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum M05OrbitPoint {
    Interior { canonical: (Rat, Rat) },
    Boundary { colliding: (usize, usize) },
}

impl fmt::Display for M05OrbitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |i: usize| -> String {
            if i == 4 {
                "p".to_string()
            } else {
                format!("{}", i + 1)
            }
        };
        match self {
            M05OrbitPoint::Interior { canonical } => {
                write!(
                    f,
                    "interior ({}, {})",
                    rat_str(&canonical.0),
                    rat_str(&canonical.1)
                )
            }
            M05OrbitPoint::Boundary { colliding } => {
                write!(
                    f,
                    "boundary {{{},{}}}",
                    label(colliding.0),
                    label(colliding.1)
                )
            }
        }
    }
}

impl M05OrbitPoint {
    pub fn is_boundary(&self) -> bool {
        matches!(self, M05OrbitPoint::Boundary { .. })
    }
}

/// A point of the projective line as a homogeneous pair.
#[derive(Clone, Debug)]
struct ProjParam(Rat, Rat);

impl ProjParam {
    fn bracket(&self, other: &ProjParam) -> Rat {
        &self.0 * &other.1 - &self.1 * &other.0
    }
}

/// Forget the curve: carry the four base points and the marked point to
/// the unique conic through them and return the canonical form of the
/// resulting 5-point configuration. Degenerate conics are reported as
/// boundary points with their collision pattern.
pub fn phi6(curve: &PointedCurve6) -> Result<M05OrbitPoint, Genus6Error> {
    let surface = &curve.surface;
    match &curve.point {
        SurfacePoint::Exceptional { base, direction } => {
            if *base >= 4 {
                return Err(Genus6Error::Invalid("base index out of range".into()));
            }
            if proportional3(direction, &surface.base[*base]) {
                return Err(Genus6Error::Invalid(
                    "exceptional direction must be independent of the base point".into(),
                ));
            }
            // the fifth marked point collides with the blown-up base point
            Ok(M05OrbitPoint::Boundary {
                colliding: (*base, 4),
            })
        }
        SurfacePoint::Plane(p) => {
            if surface.base.iter().any(|b| proportional3(b, p)) {
                return Err(Genus6Error::BasePointInput);
            }
            // a marked point on the line through two base points makes the
            // conic a line pair; the other two base points bubble off
            for i in 0..4 {
                for j in i + 1..4 {
                    if dot3(&cross(&surface.base[i], &surface.base[j]), p).is_zero() {
                        let rest: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
                        return Ok(M05OrbitPoint::Boundary {
                            colliding: (rest[0], rest[1]),
                        });
                    }
                }
            }

            let conic = conic_through(surface, p);
            let gram = conic_gram(&conic);
            assert!(
                !gram.det().is_zero(),
                "conic through five points with no three collinear is smooth"
            );

            // parametrize by the pencil of lines through the first base
            // point; the base point itself maps to its tangent direction
            let b0 = &surface.base[0];
            let pencil = QMatrix::from_rows(vec![b0.to_vec()]).kernel_basis();
            assert_eq!(pencil.len(), 2);
            let line_param = |line: &[Rat; 3]| -> ProjParam {
                // express the line in the pencil basis
                let m = QMatrix::from_rows(vec![
                    vec![pencil[0][0].clone(), pencil[1][0].clone()],
                    vec![pencil[0][1].clone(), pencil[1][1].clone()],
                    vec![pencil[0][2].clone(), pencil[1][2].clone()],
                ]);
                let sol = m
                    .solve(line.as_ref())
                    .expect("line passes through the base point");
                ProjParam(sol[0].clone(), sol[1].clone())
            };
            let tangent_at_b0: [Rat; 3] = {
                let v = gram.mul_vec(b0.as_ref());
                [v[0].clone(), v[1].clone(), v[2].clone()]
            };
            let mut params: Vec<ProjParam> = Vec::with_capacity(5);
            params.push(line_param(&tangent_at_b0));
            for b in &surface.base[1..] {
                params.push(line_param(&cross(b0, b)));
            }
            params.push(line_param(&cross(b0, p)));

            Ok(M05OrbitPoint::Interior {
                canonical: canonical_configuration(&params),
            })
        }
    }
}

/// The conic through the four base points and `p`, as six coefficients
/// over `x^2, xy, xz, y^2, yz, z^2`.
fn conic_through(surface: &QuinticDP, p: &[Rat; 3]) -> Vec<Rat> {
    let monomials: [[u32; 3]; 6] = [
        [2, 0, 0],
        [1, 1, 0],
        [1, 0, 1],
        [0, 2, 0],
        [0, 1, 1],
        [0, 0, 2],
    ];
    let row = |pt: &[Rat; 3]| -> Vec<Rat> {
        monomials
            .iter()
            .map(|e| {
                let mut v = Rat::one();
                for (k, &ek) in e.iter().enumerate() {
                    for _ in 0..ek {
                        v *= &pt[k];
                    }
                }
                v
            })
            .collect()
    };
    let mut rows: Vec<Vec<Rat>> = surface.base.iter().map(row).collect();
    rows.push(row(p));
    let kernel = QMatrix::from_rows(rows).kernel_basis();
    assert_eq!(
        kernel.len(),
        1,
        "five points with no four collinear determine one conic"
    );
    kernel.into_iter().next().unwrap()
}

fn conic_gram(c: &[Rat]) -> QMatrix {
    let half = |x: &Rat| x / &rat(2);
    QMatrix::from_rows(vec![
        vec![c[0].clone(), half(&c[1]), half(&c[2])],
        vec![half(&c[1]), c[3].clone(), half(&c[4])],
        vec![half(&c[2]), half(&c[4]), c[5].clone()],
    ])
}

/// Canonical form of five pairwise distinct points of the line: normalize
/// three to 0, 1, infinity, record the images of the remaining two, and
/// take the lexicographically smallest pair over all labelings.
fn canonical_configuration(params: &[ProjParam]) -> (Rat, Rat) {
    assert_eq!(params.len(), 5);
    let moebius = |z: &ProjParam, a: &ProjParam, b: &ProjParam, c: &ProjParam| -> Rat {
        // a -> 0, b -> 1, c -> infinity
        let num = z.bracket(a) * b.bracket(c);
        let den = z.bracket(c) * b.bracket(a);
        assert!(
            !den.is_zero(),
            "five distinct points keep the images finite"
        );
        num / den
    };
    let mut best: Option<(Rat, Rat)> = None;
    for perm in (0..5).permutations(5) {
        let (a, b, c, d, e) = (
            &params[perm[0]],
            &params[perm[1]],
            &params[perm[2]],
            &params[perm[3]],
            &params[perm[4]],
        );
        let pair = (moebius(d, a, b, c), moebius(e, a, b, c));
        let better = match &best {
            None => true,
            Some(prev) => pair < *prev,
        };
        if better {
            best = Some(pair);
        }
    }
    best.unwrap()
}

// ---------------------------------------------------------------------------
// construction helpers
// ---------------------------------------------------------------------------

/// The 28 degree-6 monomial exponents in three variables, lexicographic.
pub fn sextic_monomials() -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(28);
    for i in (0..=6u32).rev() {
        for j in (0..=(6 - i)).rev() {
            out.push([i, j, 6 - i - j]);
        }
    }
    out
}

fn monomial_eval(e: &[u32; 3], p: &[Rat; 3]) -> Rat {
    let mut v = Rat::one();
    for (k, &ek) in e.iter().enumerate() {
        for _ in 0..ek {
            v *= &p[k];
        }
    }
    v
}

/// A deterministic pseudorandom sextic satisfying: double points at the
/// four base points, plus incidence with the given surface point.
pub fn random_sextic(surface: &QuinticDP, point: &SurfacePoint, seed: u64) -> MPoly {
    let monomials = sextic_monomials();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    // gradient conditions at each base point (they imply incidence)
    for b in surface.base_points() {
        for k in 0..3 {
            let row = monomials
                .iter()
                .map(|e| {
                    let m = MPoly::monomial(3, e.to_vec(), Rat::one());
                    m.partial(k).eval(b)
                })
                .collect();
            rows.push(row);
        }
    }
    match point {
        SurfacePoint::Plane(p) => {
            rows.push(monomials.iter().map(|e| monomial_eval(e, p)).collect());
        }
        SurfacePoint::Exceptional { base, direction } => {
            let b = &surface.base_points()[*base];
            let row = monomials
                .iter()
                .map(|e| {
                    let m = MPoly::monomial(3, e.to_vec(), Rat::one());
                    tangent_cone_value(&m, b, direction)
                })
                .collect();
            rows.push(row);
        }
    }
    let kernel = QMatrix::from_rows(rows).kernel_basis();
    assert!(
        !kernel.is_empty(),
        "the linear system on sextics is underdetermined"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut coeffs = vec![Rat::zero(); monomials.len()];
        for v in &kernel {
            let c = rat(rng.gen_range(-3i64..=3));
            if c.is_zero() {
                continue;
            }
            for (i, x) in v.iter().enumerate() {
                coeffs[i] += x * &c;
            }
        }
        if coeffs.iter().any(|c| !c.is_zero()) {
            let mut sextic = MPoly::zero(3);
            for (e, c) in monomials.iter().zip(coeffs) {
                sextic.add_term(e.to_vec(), c);
            }
            return sextic;
        }
    }
}

/// Where to place the marked point of a generated pointed curve.
#[derive(Clone, Copy, Debug)]
pub enum Placement {
    /// Away from every (-1)-curve.
    Generic,
    /// On the line through base points `i < j`.
    OnLine(usize, usize),
    /// On the exceptional curve over base point `i`.
    OnExceptional(usize),
}

/// Deterministic pseudorandom pointed curve on the standard surface with
/// the marked point in the requested position.
pub fn random_pointed_curve6(seed: u64, placement: Placement) -> PointedCurve6 {
    let surface = QuinticDP::standard();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(7));
    let point = loop {
        match placement {
            Placement::Generic => {
                let p: [Rat; 3] = std::array::from_fn(|_| rat(rng.gen_range(-5i64..=5)));
                if p.iter().all(Rat::is_zero) {
                    continue;
                }
                if surface.base_points().iter().any(|b| proportional3(b, &p)) {
                    continue;
                }
                let on_line = neg_curves(&surface)
                    .iter()
                    .filter_map(|c| c.line_form.clone())
                    .any(|form| dot3(&form, &p).is_zero());
                if on_line {
                    continue;
                }
                break SurfacePoint::Plane(p);
            }
            Placement::OnLine(i, j) => {
                assert!(i < j && j < 4);
                let s = rat(rng.gen_range(1i64..=5));
                let t = rat(rng.gen_range(1i64..=5));
                let bi = &surface.base_points()[i];
                let bj = &surface.base_points()[j];
                let p: [Rat; 3] = std::array::from_fn(|k| &bi[k] * &s + &bj[k] * &t);
                if surface.base_points().iter().any(|b| proportional3(b, &p)) {
                    continue;
                }
                // staying on exactly one line keeps the witness unique
                let hits = neg_curves(&surface)
                    .iter()
                    .filter_map(|c| c.line_form.clone())
                    .filter(|form| dot3(form, &p).is_zero())
                    .count();
                if hits != 1 {
                    continue;
                }
                break SurfacePoint::Plane(p);
            }
            Placement::OnExceptional(i) => {
                assert!(i < 4);
                let d: [Rat; 3] = std::array::from_fn(|_| rat(rng.gen_range(-3i64..=3)));
                if d.iter().all(Rat::is_zero) || proportional3(&d, &surface.base_points()[i]) {
                    continue;
                }
                break SurfacePoint::Exceptional {
                    base: i,
                    direction: d,
                };
            }
        }
    };
    let sextic = random_sextic(&surface, &point, seed);
    PointedCurve6 {
        surface,
        sextic,
        point,
    }
}
