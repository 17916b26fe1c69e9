//! Diagonal-torus stability for pointed nets of quadrics.
//!
//! A pointed curve embeds in the product of P^4 and the Grassmannian of
//! nets of quadrics. For the linearization `O(a, b)` the diagonal torus
//! acts on the embedded coordinates with integer weights: a nonzero point
//! coordinate `x_i` contributes `+a * e_i`, and a nonzero Pluecker
//! coordinate (a 3x3 minor of the net's coefficient matrix) contributes
//! `-b` times the sum of the six variable indices' basis vectors, because
//! coefficients of forms transform inversely to coordinates of points.
//!
//! With the weight pairing in hand, `mu` is a minimum over states,
//! classification reduces to exact convex-hull membership of the origin,
//! flat limits are initial forms along the weight filtration, and the
//! rescaling torus produces a canonical representative of each orbit
//! closure together with its cross-ratio invariant.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::curve5::{quad_coeff, sym_index_pairs, PointedCurve5, NVARS};
use crate::exact::hull::{zero_in_hull, zero_in_hull_interior, HullResult};
use crate::exact::linalg::QMatrix;
use crate::exact::mpoly::MPoly;
use crate::exact::rat::{primitive_integer_vector, rat, Rat};
use crate::phi5::M04Point;

#[derive(Debug, Error)]
pub enum GitError {
    #[error("one-parameter subgroup weights must sum to zero and not all vanish")]
    InvalidOnePS,
    #[error("linearization degrees must not both vanish")]
    InvalidLinearization,
    #[error("input is not of flat-limit shape: {0}")]
    ShapeMismatch(String),
    #[error("limit point does not lie on the limit net")]
    LimitNotInX,
}

/// A one-parameter subgroup of the projectivized diagonal torus, as integer
/// weights summing to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OnePS([i64; 5]);

impl OnePS {
    pub fn new(weights: [i64; 5]) -> Result<Self, GitError> {
        if weights.iter().sum::<i64>() != 0 || weights.iter().all(|&w| w == 0) {
            return Err(GitError::InvalidOnePS);
        }
        Ok(OnePS(weights))
    }

    /// The distinguished staircase subgroup with weights `(-2,-1,0,1,2)`.
    pub fn staircase() -> Self {
        OnePS([-2, -1, 0, 1, 2])
    }

    pub fn weights(&self) -> &[i64; 5] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        OnePS([-self.0[0], -self.0[1], -self.0[2], -self.0[3], -self.0[4]])
    }
}

/// An ample class `O(a, b)` on the product: degree `a` on the point factor,
/// degree `b` on the Grassmannian factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Linearization {
    pub point_degree: u32,
    pub net_degree: u32,
}

impl Linearization {
    pub fn new(point_degree: u32, net_degree: u32) -> Result<Self, GitError> {
        if point_degree == 0 && net_degree == 0 {
            return Err(GitError::InvalidLinearization);
        }
        Ok(Linearization {
            point_degree,
            net_degree,
        })
    }
}

/// Lattice weights of the nonzero coordinates of an embedded pointed net.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedStateSet {
    states: Vec<[i64; 5]>,
}

impl WeightedStateSet {
    pub fn states(&self) -> &[[i64; 5]] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// States of the marked point alone: `e_i` for each nonzero coordinate.
pub fn point_states(point: &[Rat; 5]) -> Vec<[i64; 5]> {
    let mut out = Vec::new();
    for (i, c) in point.iter().enumerate() {
        if !c.is_zero() {
            let mut s = [0i64; 5];
            s[i] = 1;
            out.push(s);
        }
    }
    out
}

/// A nonzero Pluecker coordinate of the net, recorded by the three
/// monomial index pairs of its columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PluckerState {
    pub monomials: [(usize, usize); 3],
}

impl PluckerState {
    pub fn index_sum(&self) -> i64 {
        self.monomials.iter().map(|&(i, j)| (i + j) as i64).sum()
    }

    /// Weight vector: coefficients of forms scale inversely, so each of
    /// the six indices contributes `-e_idx`.
    pub fn weight_vector(&self) -> [i64; 5] {
        let mut s = [0i64; 5];
        for &(i, j) in &self.monomials {
            s[i] -= 1;
            s[j] -= 1;
        }
        s
    }
}

/// Nonzero 3x3 minors of the net's 3x15 coefficient matrix.
pub fn plucker_coordinates(net: &[MPoly; 3]) -> Vec<PluckerState> {
    let pairs = sym_index_pairs();
    let matrix: Vec<Vec<Rat>> = net
        .iter()
        .map(|q| pairs.iter().map(|&(i, j)| quad_coeff(q, i, j)).collect())
        .collect();
    let mut out = Vec::new();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            for c in b + 1..pairs.len() {
                let det = minor3(&matrix, a, b, c);
                if !det.is_zero() {
                    out.push(PluckerState {
                        monomials: [pairs[a], pairs[b], pairs[c]],
                    });
                }
            }
        }
    }
    out
}

fn minor3(matrix: &[Vec<Rat>], a: usize, b: usize, c: usize) -> Rat {
    let m = |r: usize, col: usize| &matrix[r][col];
    m(0, a) * (m(1, b) * m(2, c) - m(1, c) * m(2, b))
        - m(0, b) * (m(1, a) * m(2, c) - m(1, c) * m(2, a))
        + m(0, c) * (m(1, a) * m(2, b) - m(1, b) * m(2, a))
}

/// Combined states of the embedded pointed net under `O(a, b)`: every sum
/// `a * (point state) + b * (Pluecker state)`. The convex hull of this set
/// is the full weight polytope of the linearized embedding.
pub fn plucker_states(curve: &PointedCurve5, lin: &Linearization) -> WeightedStateSet {
    let pts = point_states(curve.point());
    let pls = plucker_coordinates(curve.net());
    let a = lin.point_degree as i64;
    let b = lin.net_degree as i64;
    let mut states = Vec::with_capacity(pts.len() * pls.len().max(1));
    if pls.is_empty() || b == 0 {
        for p in &pts {
            states.push(std::array::from_fn(|k| a * p[k]));
        }
    } else if pts.is_empty() || a == 0 {
        for q in &pls {
            let w = q.weight_vector();
            states.push(std::array::from_fn(|k| b * w[k]));
        }
    } else {
        for p in &pts {
            for q in &pls {
                let w = q.weight_vector();
                states.push(std::array::from_fn(|k| a * p[k] + b * w[k]));
            }
        }
    }
    states.sort_unstable();
    states.dedup();
    WeightedStateSet { states }
}

/// Minimum weight of the state set along a one-parameter subgroup. The
/// point is (semi)stable exactly when this is negative (nonpositive) for
/// every nontrivial subgroup.
pub fn mu(states: &WeightedStateSet, lambda: &OnePS) -> i64 {
    states
        .states
        .iter()
        .map(|s| pair(s, lambda.weights()))
        .min()
        .expect("state set of a valid pointed net is nonempty")
}

fn pair(state: &[i64; 5], weights: &[i64; 5]) -> i64 {
    state.iter().zip(weights).map(|(s, w)| s * w).sum()
}

/// Verdict of the maximal-torus stability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable {
        /// A subgroup along which every state has positive weight.
        destabilizer: OnePS,
        /// The state realizing the minimal (still positive) weight.
        violated_state: [i64; 5],
    },
}

impl Stability {
    pub fn is_stable(&self) -> bool {
        matches!(self, Stability::Stable)
    }
}

/// Classify with respect to the standard maximal torus only: stable iff the
/// origin is interior to the weight polytope, semistable iff it lies in the
/// polytope, unstable otherwise (with a separating subgroup reported).
///
/// Weights pair with subgroups through the trace-zero hyperplane, so states
/// enter modulo the all-ones vector; the projection `s_i - s_4` realizes
/// that quotient.
pub fn torus_classify(states: &WeightedStateSet) -> Stability {
    assert!(!states.is_empty(), "state set must be nonempty");
    let projected: Vec<Vec<Rat>> = states
        .states
        .iter()
        .map(|s| (0..4).map(|i| rat(s[i] - s[4])).collect())
        .collect();
    match zero_in_hull(&projected).expect("projected states share dimension 4") {
        HullResult::Outside { separator } => {
            let ints = primitive_integer_vector(&separator);
            let mut w = [0i64; 5];
            let mut sum = BigInt::zero();
            for i in 0..4 {
                w[i] = big_to_i64(&ints[i]);
                sum += &ints[i];
            }
            w[4] = big_to_i64(&(-sum));
            let destabilizer = OnePS::new(w).expect("separator is a nonzero trace-zero vector");
            let violated_state = *states
                .states
                .iter()
                .min_by_key(|s| pair(s, destabilizer.weights()))
                .expect("nonempty");
            debug_assert!(pair(&violated_state, destabilizer.weights()) > 0);
            Stability::Unstable {
                destabilizer,
                violated_state,
            }
        }
        HullResult::Inside { .. } => {
            if zero_in_hull_interior(&projected).expect("same dimension") {
                Stability::Stable
            } else {
                Stability::StrictlySemistable
            }
        }
    }
}

fn big_to_i64(x: &BigInt) -> i64 {
    x.to_i64()
        .expect("separator coefficients fit in 64 bits at these sizes")
}

/// Heuristic refutation of full-group semistability: classify the same
/// point in several pseudorandomly conjugated coordinate frames and report
/// the first frame whose standard torus destabilizes it. A hit proves
/// instability for the full group; no hit proves nothing.
pub fn conjugate_refutation(
    curve: &PointedCurve5,
    lin: &Linearization,
    attempts: u32,
    seed: u64,
) -> Option<(u32, OnePS)> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..attempts {
        // attempt 0 is the frame the point came in; conjugates follow
        let mut m = QMatrix::identity(5);
        if attempt > 0 {
            loop {
                for i in 0..5 {
                    for j in 0..5 {
                        *m.at_mut(i, j) = rat(rng.gen_range(-2i64..=2));
                    }
                }
                if !m.det().is_zero() {
                    break;
                }
            }
        }
        let moved = curve.change_coordinates(&m);
        let states = plucker_states(&moved, lin);
        if let Stability::Unstable { destabilizer, .. } = torus_classify(&states) {
            return Some((attempt, destabilizer));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// flat limits
// ---------------------------------------------------------------------------

/// Weight with which the subgroup scales the coefficient of `x_i x_j`:
/// forms transform inversely to points.
fn coeff_weight(lambda: &OnePS, i: usize, j: usize) -> i64 {
    -(lambda.weights()[i] + lambda.weights()[j])
}

fn initial_form(q: &MPoly, lambda: &OnePS) -> (i64, MPoly) {
    let pairs = sym_index_pairs();
    let mut min_w = i64::MAX;
    for &(i, j) in &pairs {
        if !quad_coeff(q, i, j).is_zero() {
            min_w = min_w.min(coeff_weight(lambda, i, j));
        }
    }
    let mut init = MPoly::zero(NVARS);
    for &(i, j) in &pairs {
        let c = quad_coeff(q, i, j);
        if !c.is_zero() && coeff_weight(lambda, i, j) == min_w {
            let mut e = vec![0u32; NVARS];
            e[i] += 1;
            e[j] += 1;
            init.add_term(e, c);
        }
    }
    (min_w, init)
}

/// Limit of the pointed net as the subgroup parameter goes to zero: the
/// span of initial forms of a weight-adapted basis of the net, paired with
/// the initial coordinates of the marked point.
pub fn flat_limit(curve: &PointedCurve5, lambda: &OnePS) -> Result<PointedCurve5, GitError> {
    let mut basis: Vec<MPoly> = curve.net().to_vec();
    // adapt the basis: whenever the initial forms are dependent, replace a
    // participating vector by the canceling combination, which strictly
    // raises its weight
    loop {
        let inits: Vec<(i64, MPoly)> = basis.iter().map(|q| initial_form(q, lambda)).collect();
        let pairs = sym_index_pairs();
        let rows: Vec<Vec<Rat>> = inits
            .iter()
            .map(|(_, f)| pairs.iter().map(|&(i, j)| quad_coeff(f, i, j)).collect())
            .collect();
        let m = QMatrix::from_rows(rows);
        if m.rank() == 3 {
            let limit_net = [inits[0].1.clone(), inits[1].1.clone(), inits[2].1.clone()];
            let limit_point = point_limit(curve.point(), lambda);
            let limit = PointedCurve5::new(limit_net, limit_point)
                .expect("initial forms remain quadratic forms");
            if !limit.net().iter().all(|q| q.eval(limit.point()).is_zero()) {
                return Err(GitError::LimitNotInX);
            }
            return Ok(limit);
        }
        let kernel = m.kernel_basis();
        let combo = &kernel[0];
        // indices taking part in the relation all share the same minimal
        // weight; replace the last participant by the full combination
        let target = combo
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("kernel vector is nonzero");
        let mut replacement = MPoly::zero(NVARS);
        for (idx, c) in combo.iter().enumerate() {
            if !c.is_zero() {
                replacement = &replacement + &basis[idx].scale(c);
            }
        }
        debug_assert!(!replacement.is_zero(), "net basis must stay independent");
        basis[target] = replacement;
    }
}

fn point_limit(point: &[Rat; 5], lambda: &OnePS) -> [Rat; 5] {
    let min_w = point
        .iter()
        .zip(lambda.weights())
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, &w)| w)
        .min()
        .expect("projective point is nonzero");
    std::array::from_fn(|i| {
        if !point[i].is_zero() && lambda.weights()[i] == min_w {
            point[i].clone()
        } else {
            Rat::zero()
        }
    })
}

/// Pluecker-side cross check of a flat limit: the minimal-weight slice of
/// the net's Pluecker vector, as (weight, coordinates over the minor index
/// triples in lexicographic order). Proportionality of this slice for the
/// input and the limit validates the adapted-basis computation.
pub fn plucker_initial_slice(net: &[MPoly; 3], lambda: &OnePS) -> (i64, Vec<Rat>) {
    let pairs = sym_index_pairs();
    let matrix: Vec<Vec<Rat>> = net
        .iter()
        .map(|q| pairs.iter().map(|&(i, j)| quad_coeff(q, i, j)).collect())
        .collect();
    let mut entries: Vec<(i64, usize, Rat)> = Vec::new();
    let mut min_w = i64::MAX;
    let mut flat_index = 0usize;
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            for c in b + 1..pairs.len() {
                let det = minor3(&matrix, a, b, c);
                if !det.is_zero() {
                    let w = coeff_weight(lambda, pairs[a].0, pairs[a].1)
                        + coeff_weight(lambda, pairs[b].0, pairs[b].1)
                        + coeff_weight(lambda, pairs[c].0, pairs[c].1);
                    min_w = min_w.min(w);
                    entries.push((w, flat_index, det));
                }
                flat_index += 1;
            }
        }
    }
    let total = flat_index;
    let mut slice = vec![Rat::zero(); total];
    for (w, idx, det) in entries {
        if w == min_w {
            slice[idx] = det;
        }
    }
    (min_w, slice)
}

// ---------------------------------------------------------------------------
// torus rescaling
// ---------------------------------------------------------------------------

/// Canonical representative of the orbit closure of a flat-limit net.
///
/// Inputs must have the limit shape produced by the staircase subgroup on a
/// normal form: `x0 x4 + c1 x1 x3 + c2 x2^2`, `x1 x4 + c3 x2 x3`,
/// `x2 x4 - x3^2`. The rescaling torus acts on the coefficient triple by
/// `(c1, c2, c3) -> (p^2 q c1, p q^3 c2, (q^2 / p) c3)`, so the quantity
/// `c3 c1 / c2` is invariant; when `c1` and `c2` are nonzero they can be
/// scaled to 1 and the invariant appears as the surviving coefficient.
/// The scaling is applied as a formal substitution on coefficients, so the
/// output stays rational even though the scaling parameters themselves
/// live in an extension.
pub fn torus_rescale(limit: &PointedCurve5) -> Result<(PointedCurve5, M04Point), GitError> {
    let (c1, c2, c3) = read_limit_shape(limit)?;

    let one = Rat::one();
    let num = &c3 * &c1;
    let invariant = M04Point::classify(num.clone(), c2.clone());

    let canonical = |a113: Rat, a122: Rat, a223: Rat| -> PointedCurve5 {
        let net = [
            crate::curve5::quad_from_entries(&[(0, 4, one.clone()), (1, 3, a113), (2, 2, a122)]),
            crate::curve5::quad_from_entries(&[(1, 4, one.clone()), (2, 3, a223)]),
            crate::curve5::quad_from_entries(&[(2, 4, one.clone()), (3, 3, -one.clone())]),
        ];
        PointedCurve5::new(net, crate::curve5::marked_point_e4()).expect("canonical net")
    };

    let normalize01 = |c: &Rat| -> Rat {
        if c.is_zero() {
            Rat::zero()
        } else {
            Rat::one()
        }
    };

    let curve = if !c1.is_zero() && !c2.is_zero() {
        // p^2 q c1 = p q^3 c2 = 1 forces the third coefficient to the
        // invariant ratio
        canonical(Rat::one(), Rat::one(), &num / &c2)
    } else {
        // with a vanishing coefficient the residual one-parameter freedom
        // scales each remaining nonzero coefficient to 1
        canonical(normalize01(&c1), normalize01(&c2), normalize01(&c3))
    };

    Ok((curve, invariant))
}

fn read_limit_shape(limit: &PointedCurve5) -> Result<(Rat, Rat, Rat), GitError> {
    if !crate::curve5::projectively_equal(limit.point(), &crate::curve5::marked_point_e4()) {
        return Err(GitError::ShapeMismatch(
            "marked point must be (0,0,0,0,1)".into(),
        ));
    }
    let pairs = sym_index_pairs();
    let supports: [&[(usize, usize)]; 3] = [
        &[(0, 4), (1, 3), (2, 2)],
        &[(1, 4), (2, 3)],
        &[(2, 4), (3, 3)],
    ];
    for (idx, q) in limit.net().iter().enumerate() {
        for &(i, j) in &pairs {
            if !supports[idx].contains(&(i, j)) && !quad_coeff(q, i, j).is_zero() {
                return Err(GitError::ShapeMismatch(format!(
                    "quadric {} carries the unexpected monomial x{i}*x{j}",
                    idx + 1
                )));
            }
        }
    }
    // scale each quadric by its pivot
    let pivots = [(0usize, 4usize), (1, 4), (2, 4)];
    let mut scaled: Vec<MPoly> = Vec::with_capacity(3);
    for (idx, q) in limit.net().iter().enumerate() {
        let p = quad_coeff(q, pivots[idx].0, pivots[idx].1);
        if p.is_zero() {
            return Err(GitError::ShapeMismatch(format!(
                "quadric {} is missing its pivot monomial",
                idx + 1
            )));
        }
        scaled.push(q.scale(&p.recip()));
    }
    if quad_coeff(&scaled[2], 3, 3) != -Rat::one() {
        return Err(GitError::ShapeMismatch(
            "third quadric must be proportional to x2*x4 - x3^2".into(),
        ));
    }
    Ok((
        quad_coeff(&scaled[0], 1, 3),
        quad_coeff(&scaled[0], 2, 2),
        quad_coeff(&scaled[1], 2, 3),
    ))
}
