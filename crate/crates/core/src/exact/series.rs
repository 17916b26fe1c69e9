//! Truncated univariate power series with exact coefficients.
//!
//! A `TruncSeries` carries coefficients `c_0..c_N` together with its
//! truncation order `N`. Arithmetic is exact through the minimum of the
//! operands' orders; mixing orders truncates to the minimum, so precision is
//! never silently overstated.

use num_traits::Zero;

use super::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    /// `coeffs[k]` is the coefficient of `s^k`; `coeffs.len() == N + 1`.
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    pub fn zeros(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        let mut s = Self::zeros(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity series `s` (zero constant term, unit linear term).
    pub fn parameter(order: usize) -> Self {
        let mut s = Self::zeros(order);
        if order >= 1 {
            s.coeffs[1] = Rat::from_integer(1.into());
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        TruncSeries { coeffs }
    }

    /// Truncation order `N`.
    pub fn order_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set_coeff(&mut self, k: usize, c: Rat) {
        assert!(k < self.coeffs.len());
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Index of the first nonzero coefficient; `None` means the series
    /// vanishes through the truncation order (order `>= N + 1`).
    pub fn leading_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        assert!(order <= self.order_bound());
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order_bound().min(other.order_bound());
        TruncSeries {
            coeffs: (0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order_bound().min(other.order_bound());
        TruncSeries {
            coeffs: (0..=n).map(|k| self.coeff(k) - other.coeff(k)).collect(),
        }
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order_bound().min(other.order_bound());
        let mut coeffs = vec![Rat::zero(); n + 1];
        for i in 0..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let b = other.coeff(j);
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &a * &b;
            }
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> TruncSeries {
        let c0 = self.coeff(0);
        assert!(
            !c0.is_zero(),
            "series with zero constant term has no inverse"
        );
        let n = self.order_bound();
        let mut inv = vec![Rat::zero(); n + 1];
        inv[0] = c0.recip();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 0..k {
                acc += self.coeff(k - j) * &inv[j];
            }
            inv[k] = -acc / &c0;
        }
        TruncSeries { coeffs: inv }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    #[test]
    fn geometric_series_inverse() {
        // 1/(1 - s) = 1 + s + s^2 + ...
        let mut one_minus_s = TruncSeries::constant(5, rat(1));
        one_minus_s.set_coeff(1, rat(-1));
        let inv = one_minus_s.recip();
        for k in 0..=5 {
            assert_eq!(inv.coeff(k), rat(1));
        }
        assert_eq!(one_minus_s.mul(&inv), TruncSeries::constant(5, rat(1)));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = TruncSeries::parameter(8);
        let b = TruncSeries::parameter(3);
        assert_eq!(a.mul(&b).order_bound(), 3);
        assert_eq!(a.add(&b).order_bound(), 3);
    }

    #[test]
    fn leading_order_contract() {
        let mut s = TruncSeries::zeros(4);
        assert_eq!(s.leading_order(), None);
        s.set_coeff(3, rat(2));
        assert_eq!(s.leading_order(), Some(3));
    }
}
