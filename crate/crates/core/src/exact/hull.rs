//! Exact convex-hull membership via rational linear programming.
//!
//! `zero_in_hull` decides whether the origin is a convex combination of a
//! finite point set, and produces a strictly separating functional when it
//! is not. The underlying solver is a phase-one simplex over exact rationals
//! with Bland's pivot rule, so it terminates on the degenerate weight
//! polytopes that show up at walls.

use num_traits::{One, Zero};
use thiserror::Error;

use super::linalg::QMatrix;
use super::rat::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HullError {
    #[error("empty point set")]
    Empty,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Outcome of a hull-membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullResult {
    /// The origin is a convex combination of the points; the witness
    /// coefficients are nonnegative and sum to one.
    Inside { coefficients: Vec<Rat> },
    /// The origin is outside; `separator` pairs strictly positively with
    /// every input point.
    Outside { separator: Vec<Rat> },
}

impl HullResult {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullResult::Inside { .. })
    }
}

enum LpOutcome {
    /// A feasible solution of `A x = b, x >= 0`.
    Feasible(Vec<Rat>),
    /// A Farkas certificate `y` with `y^T A <= 0` and `y^T b > 0`.
    Infeasible(Vec<Rat>),
}

/// Phase-one simplex for `A x = b, x >= 0` feasibility. The reduced-cost
/// row is carried in the tableau; pivots follow Dantzig's rule for speed
/// and fall back to Bland's rule after a fixed pivot budget, which rules
/// out cycling on the degenerate polytopes that occur at walls.
fn lp_feasible(a: &QMatrix, b: &[Rat]) -> LpOutcome {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m);

    // tableau rows 0..m: [original | artificial | rhs] with rhs >= 0;
    // row m: reduced costs and minus the objective (sum of artificials)
    let cols = n + m + 1;
    let mut t = QMatrix::zeros(m + 1, cols);
    for i in 0..m {
        let flip = b[i] < Rat::zero();
        for j in 0..n {
            *t.at_mut(i, j) = if flip {
                -a.at(i, j).clone()
            } else {
                a.at(i, j).clone()
            };
        }
        *t.at_mut(i, n + i) = Rat::one();
        *t.at_mut(i, n + m) = if flip { -b[i].clone() } else { b[i].clone() };
    }
    // z_j = cost_j - sum_i t[i][j] with every artificial basic at cost 1;
    // artificial columns start at 1 - 1 = 0
    for j in 0..n {
        let mut z = Rat::zero();
        for i in 0..m {
            z -= t.at(i, j);
        }
        *t.at_mut(m, j) = z;
    }
    let mut rhs_z = Rat::zero();
    for i in 0..m {
        rhs_z -= t.at(i, n + m);
    }
    *t.at_mut(m, n + m) = rhs_z;

    let mut basis: Vec<usize> = (n..n + m).collect();
    let bland_after = 4 * (m + n);
    let mut pivots = 0usize;

    loop {
        let entering = if pivots < bland_after {
            // Dantzig: most negative reduced cost, smallest index on ties
            let mut best: Option<(usize, Rat)> = None;
            for j in 0..n + m {
                let z = t.at(m, j);
                if *z < Rat::zero() && best.as_ref().map(|(_, bz)| z < bz).unwrap_or(true) {
                    best = Some((j, z.clone()));
                }
            }
            best.map(|(j, _)| j)
        } else {
            (0..n + m).find(|&j| *t.at(m, j) < Rat::zero())
        };
        let Some(e) = entering else {
            let obj = -t.at(m, n + m).clone();
            if obj.is_zero() {
                let mut x = vec![Rat::zero(); n];
                for i in 0..m {
                    if basis[i] < n {
                        x[basis[i]] = t.at(i, n + m).clone();
                    }
                }
                return LpOutcome::Feasible(x);
            }
            // multipliers from the artificial columns: y_i = 1 - z_{art_i}
            let mut y: Vec<Rat> = (0..m).map(|i| Rat::one() - t.at(m, n + i)).collect();
            // flip components where the row was sign-normalized
            for (i, yi) in y.iter_mut().enumerate() {
                if b[i] < Rat::zero() {
                    *yi = -yi.clone();
                }
            }
            return LpOutcome::Infeasible(y);
        };

        // ratio test, smallest basis variable index on ties
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            let aie = t.at(i, e);
            if *aie > Rat::zero() {
                let ratio = t.at(i, n + m) / aie;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (li, _) = leave.expect("phase-one feasibility LP cannot be unbounded");

        // pivot on (li, e), skipping zero pivot-row entries
        let inv = t.at(li, e).recip();
        for c in 0..cols {
            if !t.at(li, c).is_zero() {
                let v = t.at(li, c) * &inv;
                *t.at_mut(li, c) = v;
            }
        }
        for r in 0..=m {
            if r != li && !t.at(r, e).is_zero() {
                let f = t.at(r, e).clone();
                for c in 0..cols {
                    if !t.at(li, c).is_zero() {
                        let v = t.at(r, c) - &(t.at(li, c) * &f);
                        *t.at_mut(r, c) = v;
                    }
                }
            }
        }
        basis[li] = e;
        pivots += 1;
    }
}

fn check_dims(points: &[Vec<Rat>]) -> Result<usize, HullError> {
    let Some(first) = points.first() else {
        return Err(HullError::Empty);
    };
    let dim = first.len();
    for p in points {
        if p.len() != dim {
            return Err(HullError::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
    }
    Ok(dim)
}

/// Is the origin a convex combination of `points`? Exact; returns a
/// separating functional on failure.
pub fn zero_in_hull(points: &[Vec<Rat>]) -> Result<HullResult, HullError> {
    let dim = check_dims(points)?;
    let n = points.len();
    // sum_i c_i p_i = 0, sum_i c_i = 1, c >= 0
    let mut a = QMatrix::zeros(dim + 1, n);
    for (j, p) in points.iter().enumerate() {
        for (i, x) in p.iter().enumerate() {
            *a.at_mut(i, j) = x.clone();
        }
        *a.at_mut(dim, j) = Rat::one();
    }
    let mut b = vec![Rat::zero(); dim + 1];
    b[dim] = Rat::one();
    match lp_feasible(&a, &b) {
        LpOutcome::Feasible(c) => Ok(HullResult::Inside { coefficients: c }),
        LpOutcome::Infeasible(y) => {
            // y = (s, tau) with <s, p_j> + tau <= 0 for all j and tau > 0,
            // so -s strictly separates.
            let separator: Vec<Rat> = y[..dim].iter().map(|v| -v.clone()).collect();
            debug_assert!(points.iter().all(|p| dot(&separator, p) > Rat::zero()));
            Ok(HullResult::Outside { separator })
        }
    }
}

/// Is the origin in the topological interior of the convex hull? Decided by
/// testing that the nonnegative cone over the points is all of space, one
/// signed coordinate direction at a time.
pub fn zero_in_hull_interior(points: &[Vec<Rat>]) -> Result<bool, HullError> {
    let dim = check_dims(points)?;
    let n = points.len();
    let mut a = QMatrix::zeros(dim, n);
    for (j, p) in points.iter().enumerate() {
        for (i, x) in p.iter().enumerate() {
            *a.at_mut(i, j) = x.clone();
        }
    }
    for i in 0..dim {
        for sign in [1i64, -1] {
            let mut b = vec![Rat::zero(); dim];
            b[i] = super::rat::rat(sign);
            if let LpOutcome::Infeasible(_) = lp_feasible(&a, &b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter()
            .map(|p| p.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn open_quadrant_is_separated() {
        let r = zero_in_hull(&pts(&[&[1, 0], &[0, 1]])).unwrap();
        match r {
            HullResult::Outside { separator } => {
                assert!(dot(&separator, &[rat(1), rat(0)]) > rat(0));
                assert!(dot(&separator, &[rat(0), rat(1)]) > rat(0));
            }
            _ => panic!("expected outside"),
        }
    }

    #[test]
    fn midpoint_through_zero() {
        assert!(zero_in_hull(&pts(&[&[1, -1], &[-1, 1]]))
            .unwrap()
            .is_inside());
    }

    #[test]
    fn triangle_containing_zero() {
        let r = zero_in_hull(&pts(&[&[2, 0], &[0, 2], &[-1, -1]])).unwrap();
        match r {
            HullResult::Inside { coefficients } => {
                // verify the witness is a genuine convex combination
                let sum: Rat = coefficients.iter().cloned().sum();
                assert_eq!(sum, rat(1));
                assert!(coefficients.iter().all(|c| *c >= rat(0)));
            }
            _ => panic!("expected inside"),
        }
    }

    #[test]
    fn interior_vs_boundary() {
        // zero is a vertex: in hull but not interior
        let on_vertex = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(zero_in_hull(&on_vertex).unwrap().is_inside());
        assert!(!zero_in_hull_interior(&on_vertex).unwrap());
        // simplex with zero strictly inside
        let simplex = pts(&[&[2, 0], &[0, 2], &[-1, -1]]);
        assert!(zero_in_hull_interior(&simplex).unwrap());
        // lower-dimensional hull through zero is never interior
        let segment = pts(&[&[1, 1], &[-1, -1]]);
        assert!(zero_in_hull(&segment).unwrap().is_inside());
        assert!(!zero_in_hull_interior(&segment).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let bad = vec![vec![rat(1)], vec![rat(1), rat(2)]];
        assert_eq!(
            zero_in_hull(&bad).unwrap_err(),
            HullError::DimensionMismatch {
                expected: 1,
                found: 2
            }
        );
    }
}
