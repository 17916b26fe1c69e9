//! Binary forms and their Sylvester resultant.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use super::linalg::QMatrix;
use super::rat::{rat_str, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResultantError {
    #[error("zero form input")]
    ZeroForm,
    #[error("forms must have degree at least 1")]
    DegreeTooSmall,
}

/// A homogeneous form in two variables `(s, t)`, stored as coefficients of
/// `s^d, s^{d-1} t, ..., t^d`. The degree is declared by the coefficient
/// length; the leading coefficient may vanish (a root at infinity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Value at a projective point `(s : t)`.
    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let d = self.degree();
        let mut acc = Rat::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for _ in 0..(d - k) {
                term *= s;
            }
            for _ in 0..k {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    /// Exact division by the linear form `s`; `None` unless `s` divides,
    /// i.e. unless the `t^d` coefficient vanishes.
    pub fn divide_by_s(&self) -> Option<BinaryForm> {
        if self.degree() == 0 || !self.coeffs[self.degree()].is_zero() {
            return None;
        }
        Some(BinaryForm::new(self.coeffs[..self.degree()].to_vec()))
    }

    /// Exact division by the linear form `t`; `None` unless the `s^d`
    /// coefficient vanishes.
    pub fn divide_by_t(&self) -> Option<BinaryForm> {
        if self.degree() == 0 || !self.coeffs[0].is_zero() {
            return None;
        }
        Some(BinaryForm::new(self.coeffs[1..].to_vec()))
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{} s^{} t^{}", rat_str(c), d - k, k))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Sylvester resultant of two binary forms. Zero exactly when the forms
/// share a projective root (counting the point at infinity).
pub fn binary_resultant(f: &BinaryForm, g: &BinaryForm) -> Result<Rat, ResultantError> {
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroForm);
    }
    let m = f.degree();
    let n = g.degree();
    if m < 1 || n < 1 {
        return Err(ResultantError::DegreeTooSmall);
    }
    let size = m + n;
    let mut s = QMatrix::zeros(size, size);
    for shift in 0..n {
        for (k, c) in f.coeffs().iter().enumerate() {
            *s.at_mut(shift, shift + k) = c.clone();
        }
    }
    for shift in 0..m {
        for (k, c) in g.coeffs().iter().enumerate() {
            *s.at_mut(n + shift, shift + k) = c.clone();
        }
    }
    Ok(s.det())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn coprime_squares() {
        // f = s^2, g = t^2: the 4x4 Sylvester determinant is 1
        assert_eq!(
            binary_resultant(&form(&[1, 0, 0]), &form(&[0, 0, 1])).unwrap(),
            rat(1)
        );
    }

    #[test]
    fn shared_root_at_zero() {
        // f = s t, g = s^2 share the root s = 0
        assert_eq!(
            binary_resultant(&form(&[0, 1, 0]), &form(&[1, 0, 0])).unwrap(),
            rat(0)
        );
    }

    #[test]
    fn shared_affine_root() {
        // f = s^2 - t^2, g = s - t share (1 : 1)
        assert_eq!(
            binary_resultant(&form(&[1, 0, -1]), &form(&[1, -1])).unwrap(),
            rat(0)
        );
    }

    #[test]
    fn zero_form_rejected() {
        assert_eq!(
            binary_resultant(&form(&[0, 0]), &form(&[1, 1])).unwrap_err(),
            ResultantError::ZeroForm
        );
    }

    #[test]
    fn evaluation_and_linear_division() {
        // f = s^2 - t^2 vanishes at (1 : 1) and (1 : -1)
        let f = form(&[1, 0, -1]);
        assert_eq!(f.eval(&rat(1), &rat(1)), rat(0));
        assert_eq!(f.eval(&rat(2), &rat(0)), rat(4));
        // s t / s = t and s t / t = s
        let st = form(&[0, 1, 0]);
        assert_eq!(st.divide_by_s().unwrap(), form(&[0, 1]));
        assert_eq!(st.divide_by_t().unwrap(), form(&[1, 0]));
        assert!(form(&[0, 1]).divide_by_s().is_none());
        assert_eq!(form(&[1, 0]).divide_by_s().unwrap(), form(&[1]));
    }

    #[test]
    fn root_at_infinity_counts() {
        // f = s t + t^2 = t(s + t), g = t^2: common root t = 0 is (1 : 0)
        assert_eq!(
            binary_resultant(&form(&[0, 1, 1]), &form(&[0, 0, 1])).unwrap(),
            rat(0)
        );
    }
}
