//! Independent oracles shared by the integration suites. These stay
//! deliberately naive: brute-force enumeration and Euclid's algorithm,
//! nothing from the implementation paths they check.

use fibkit_core::exact::linalg::QMatrix;
use fibkit_core::exact::rat::Rat;
use fibkit_core::exact::resultant::BinaryForm;
use num_traits::{One, Zero};

/// Brute-force hull membership: the origin lies in the convex hull exactly
/// when some affinely independent subset of at most dim+1 points carries it
/// with nonnegative barycentric coordinates.
pub fn zero_in_hull_brute_force(points: &[Vec<Rat>]) -> bool {
    let dim = points[0].len();
    let n = points.len();
    for size in 1..=(dim + 1).min(n) {
        let mut chosen = vec![0usize; size];
        if subsets_carry_zero(points, dim, &mut chosen, 0, 0, size) {
            return true;
        }
    }
    false
}

fn subsets_carry_zero(
    points: &[Vec<Rat>],
    dim: usize,
    chosen: &mut [usize],
    depth: usize,
    start: usize,
    size: usize,
) -> bool {
    if depth == size {
        return simplex_contains_zero(points, dim, chosen);
    }
    for i in start..points.len() {
        chosen[depth] = i;
        if subsets_carry_zero(points, dim, chosen, depth + 1, i + 1, size) {
            return true;
        }
    }
    false
}

fn simplex_contains_zero(points: &[Vec<Rat>], dim: usize, subset: &[usize]) -> bool {
    // rows: the point coordinates plus the affine row of ones
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        rows.push(subset.iter().map(|&i| points[i][d].clone()).collect());
    }
    rows.push(vec![Rat::one(); subset.len()]);
    let a = QMatrix::from_rows(rows);
    if a.rank() != subset.len() {
        // affinely dependent: skip; independent subsets cover the hull
        return false;
    }
    let mut b = vec![Rat::zero(); dim + 1];
    b[dim] = Rat::one();
    match a.solve(&b) {
        None => false,
        Some(c) => c.iter().all(|x| *x >= Rat::zero()),
    }
}

/// Do two binary forms share a projective root? Euclid's algorithm on the
/// dehomogenizations plus an explicit check at the point at infinity.
pub fn common_root_by_euclid(f: &BinaryForm, g: &BinaryForm) -> bool {
    if f.coeffs()[0].is_zero() && g.coeffs()[0].is_zero() {
        return true; // both vanish at (1 : 0)
    }
    let pf = dehomogenize(f);
    let pg = dehomogenize(g);
    poly_gcd_degree(&pf, &pg) >= 1
}

/// Coefficients of `f(s, 1)` in ascending powers of `s`, trimmed.
fn dehomogenize(f: &BinaryForm) -> Vec<Rat> {
    let mut out: Vec<Rat> = f.coeffs().iter().rev().cloned().collect();
    while out.len() > 1 && out.last().map(Rat::is_zero).unwrap_or(false) {
        out.pop();
    }
    out
}

fn poly_degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_rem(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let dd = poly_degree(den).expect("nonzero divisor");
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    while let Some(dn) = poly_degree(&rem) {
        if dn < dd {
            break;
        }
        let factor = &rem[dn] / &lead;
        for k in 0..=dd {
            let v = &rem[dn - dd + k] - &(&den[k] * &factor);
            rem[dn - dd + k] = v;
        }
    }
    rem
}

fn poly_gcd_degree(a: &[Rat], b: &[Rat]) -> usize {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    loop {
        match (poly_degree(&x), poly_degree(&y)) {
            (None, None) => return 0,
            (None, Some(d)) => return d,
            (Some(d), None) => return d,
            (Some(dx), Some(dy)) => {
                if dx < dy {
                    std::mem::swap(&mut x, &mut y);
                    continue;
                }
                let r = poly_rem(&x, &y);
                x = y;
                y = r;
            }
        }
    }
}

/// Multiply binary forms by coefficient convolution.
pub fn form_product(a: &BinaryForm, b: &BinaryForm) -> BinaryForm {
    let da = a.degree();
    let db = b.degree();
    let mut coeffs = vec![Rat::zero(); da + db + 1];
    for (i, ca) in a.coeffs().iter().enumerate() {
        for (j, cb) in b.coeffs().iter().enumerate() {
            coeffs[i + j] += ca * cb;
        }
    }
    BinaryForm::new(coeffs)
}
