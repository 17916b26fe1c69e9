//! Sparse multivariate polynomials over exact rationals.
//!
//! One type serves every ring in the crate: quadratic forms in five
//! variables, plane-curve germs in two, and plane sextics in three. Terms
//! are kept in a `BTreeMap` keyed by exponent vector, so iteration order,
//! printing, and arithmetic are all deterministic. Zero coefficients are
//! never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::rat::{rat_str, Rat};
use super::series::TruncSeries;

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, Rat::from_integer(1.into()));
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Smallest total degree among terms (the multiplicity at the origin),
    /// or `None` for the zero polynomial.
    pub fn lowest_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Smallest exponent of `x_i` across all terms.
    pub fn var_multiplicity(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn eval(&self, args: &[Rat]) -> Rat {
        assert_eq!(args.len(), self.nvars);
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    t *= &args[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            out.add_term(e, c * Rat::from_integer(exps[i].into()));
        }
        out
    }

    /// Substitute `x_i := images[i]`, truncating at total degree
    /// `degree_bound` when given.
    pub fn substitute(&self, images: &[MPoly], degree_bound: Option<u32>) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        let out_vars = images.first().map(|p| p.nvars()).unwrap_or(self.nvars);
        assert!(images.iter().all(|p| p.nvars() == out_vars));
        let mut acc = MPoly::zero(out_vars);
        for (exps, c) in &self.terms {
            let mut t = MPoly::constant(out_vars, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul_impl(&images[i], degree_bound);
                    if t.is_zero() {
                        break;
                    }
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitute the linear change of coordinates `x_i := sum_j m[i][j] x_j`.
    pub fn substitute_linear(&self, m: &super::linalg::QMatrix) -> MPoly {
        assert_eq!(m.rows(), self.nvars);
        assert_eq!(m.cols(), self.nvars);
        let images: Vec<MPoly> = (0..self.nvars)
            .map(|i| {
                let mut p = MPoly::zero(self.nvars);
                for j in 0..self.nvars {
                    let mut e = vec![0; self.nvars];
                    e[j] = 1;
                    p.add_term(e, m.at(i, j).clone());
                }
                p
            })
            .collect();
        self.substitute(&images, None)
    }

    /// Drop all terms of total degree greater than `bound`.
    pub fn truncate_total_degree(&self, bound: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact division by `x_i^k`; `None` if some term is not divisible.
    pub fn divide_by_var_power(&self, i: usize, k: u32) -> Option<MPoly> {
        let mut out = MPoly::zero(self.nvars);
        for (exps, c) in &self.terms {
            if exps[i] < k {
                return None;
            }
            let mut e = exps.clone();
            e[i] -= k;
            out.add_term(e, c.clone());
        }
        Some(out)
    }

    /// Evaluate at truncated power series arguments.
    pub fn eval_series(&self, args: &[TruncSeries]) -> TruncSeries {
        assert_eq!(args.len(), self.nvars);
        let order = args
            .iter()
            .map(|s| s.order_bound())
            .min()
            .expect("nonempty args");
        let mut acc = TruncSeries::zeros(order);
        for (exps, c) in &self.terms {
            let mut t = TruncSeries::constant(order, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&args[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    fn mul_impl(&self, other: &MPoly, degree_bound: Option<u32>) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if let Some(bound) = degree_bound {
                    if e.iter().sum::<u32>() > bound {
                        continue;
                    }
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn mul_truncated(&self, other: &MPoly, bound: u32) -> MPoly {
        self.mul_impl(other, Some(bound))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&Rat::from_integer((-1).into()))
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_impl(rhs, None)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{i}")
                    } else {
                        format!("x{i}^{e}")
                    }
                })
                .collect();
            let cs = rat_str(c);
            let body = if mono.is_empty() {
                cs.clone()
            } else if cs == "1" {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", cs, mono.join("*"))
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(stripped) = body.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, ratio};

    fn x(i: usize) -> MPoly {
        MPoly::var(3, i)
    }

    #[test]
    fn arithmetic_and_eval() {
        // (x0 + 2 x1)^2 = x0^2 + 4 x0 x1 + 4 x1^2
        let p = &x(0) + &x(1).scale(&rat(2));
        let sq = &p * &p;
        assert_eq!(sq.coeff(&[2, 0, 0]), rat(1));
        assert_eq!(sq.coeff(&[1, 1, 0]), rat(4));
        assert_eq!(sq.coeff(&[0, 2, 0]), rat(4));
        assert_eq!(sq.eval(&[rat(1), rat(1), rat(7)]), rat(9));
    }

    #[test]
    fn partial_derivatives_are_exact() {
        let p = MPoly::monomial(3, vec![2, 1, 0], ratio(1, 2));
        let d = p.partial(0);
        assert_eq!(d.coeff(&[1, 1, 0]), rat(1));
    }

    #[test]
    fn substitution_with_truncation() {
        // substitute x0 := x1^2 into x0^2 with bound 3 kills the term
        let p = MPoly::monomial(2, vec![2, 0], rat(1));
        let img = vec![MPoly::monomial(2, vec![0, 2], rat(1)), MPoly::var(2, 1)];
        assert!(p.substitute(&img, Some(3)).is_zero());
        assert_eq!(p.substitute(&img, None).coeff(&[0, 4]), rat(1));
    }

    #[test]
    fn division_by_variable_power() {
        let p = MPoly::monomial(2, vec![2, 1], rat(3));
        let q = p.divide_by_var_power(0, 2).unwrap();
        assert_eq!(q.coeff(&[0, 1]), rat(3));
        assert!(p.divide_by_var_power(0, 3).is_none());
    }

    #[test]
    fn display_is_deterministic() {
        let mut p = MPoly::zero(2);
        p.add_term(vec![1, 1], rat(-1));
        p.add_term(vec![2, 0], rat(1));
        p.add_term(vec![0, 0], ratio(1, 2));
        assert_eq!(p.to_string(), "1/2 - x0*x1 + x0^2");
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let mut p = MPoly::zero(2);
        p.add_term(vec![1, 0], rat(1));
        p.add_term(vec![1, 0], rat(-1));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }
}
