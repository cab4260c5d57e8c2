//! Truncated formal power series over exact integers.
//!
//! `G(x) = x + ... + x^k` has at most `k` nonzero terms, so division by
//! `1 - G(x)` runs in `O(N k)` by skipping zero coefficients.

use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::PartBound;

/// Coefficients `c_0..=c_N` of a power series truncated after `x^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series of order `order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    /// Multiplies by `x^s`, dropping terms beyond the order.
    pub fn shift(&self, s: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + s > self.order() {
                break;
            }
            out.coeffs[i + s] = c.clone();
        }
        out
    }

    /// Returns `self / (1 - s)` by the recurrence `d_n = a_n + sum_i s_i d_{n-i}`.
    pub fn divide_by_one_minus(&self, s: &TruncatedSeries) -> Result<Self> {
        if !s.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(s.order());
        let support: Vec<(usize, &BigInt)> = s.coeffs[1..=order]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
            .collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut d = self.coeffs[n].clone();
            for &(i, c) in &support {
                if i > n {
                    break;
                }
                d += c * &out[n - i];
            }
            out.push(d);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Truncated product, skipping zero terms of either factor.
    pub fn mul_truncated(&self, other: &TruncatedSeries) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        let rhs: Vec<(usize, &BigInt)> = other.coeffs[..=order]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs {
                if i + j > order {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.mul_truncated(rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

/// `G(x) = x + x^2 + ... + x^k` truncated at order `order`.
pub fn g_polynomial(k: PartBound, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for c in s.coeffs.iter_mut().skip(1).take(k.get()) {
        *c = BigInt::one();
    }
    s
}

/// `1 / (1 - s)` for a series with zero constant term.
pub fn reciprocal_one_minus(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    TruncatedSeries::one(s.order()).divide_by_one_minus(s)
}

/// `F(x) = 1 / (1 - G(x))`.
pub fn f_series(k: PartBound, order: usize) -> TruncatedSeries {
    reciprocal_one_minus(&g_polynomial(k, order)).expect("G has zero constant term")
}

/// `1 / (1 - G(x))^2`, the common kernel of `C_j(x)` and `T(x)`.
fn f_squared(k: PartBound, order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let g = g_polynomial(k, order);
    let f = reciprocal_one_minus(&g).expect("G has zero constant term");
    let f2 = f.divide_by_one_minus(&g).expect("G has zero constant term");
    (f, f2)
}

/// `C_j(x) = x^j / (1 - G(x))^2`.
pub fn c_series(k: PartBound, j: usize, order: usize) -> Result<TruncatedSeries> {
    k.check_part(j)?;
    Ok(f_squared(k, order).1.shift(j))
}

/// `T(x) = 1 / (1 - G(x))^2 - 1 / (1 - G(x))`.
pub fn t_series(k: PartBound, order: usize) -> TruncatedSeries {
    let (f, f2) = f_squared(k, order);
    &f2 - &f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kb(k: usize) -> PartBound {
        PartBound::new(k).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn g_polynomial_shapes() {
        assert_eq!(g_polynomial(kb(2), 4).coeffs(), ints(&[0, 1, 1, 0, 0]));
        assert_eq!(g_polynomial(kb(4), 2).coeffs(), ints(&[0, 1, 1]));
        assert_eq!(g_polynomial(kb(1), 3).coeffs(), ints(&[0, 1, 0, 0]));
    }

    #[test]
    fn reciprocal_examples() {
        let fib = reciprocal_one_minus(&g_polynomial(kb(2), 10)).unwrap();
        assert_eq!(fib.coeffs(), ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]));

        let zero = reciprocal_one_minus(&TruncatedSeries::zero(4)).unwrap();
        assert_eq!(zero.coeffs(), ints(&[1, 0, 0, 0, 0]));

        let trib = reciprocal_one_minus(&g_polynomial(kb(3), 8)).unwrap();
        assert_eq!(trib.coeffs(), ints(&[1, 1, 2, 4, 7, 13, 24, 44, 81]));
    }

    #[test]
    fn reciprocal_rejects_constant_term() {
        let s = TruncatedSeries::from_coeffs(ints(&[1, 1]));
        assert_eq!(reciprocal_one_minus(&s), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn f_series_examples() {
        assert_eq!(f_series(kb(2), 5).coeffs(), ints(&[1, 1, 2, 3, 5, 8]));
        assert_eq!(f_series(kb(3), 0).coeffs(), ints(&[1]));
        assert_eq!(f_series(kb(4), 10).coeff(10), Some(&BigInt::from(401)));
    }

    #[test]
    fn c_series_examples() {
        assert_eq!(
            c_series(kb(2), 1, 6).unwrap().coeffs(),
            ints(&[0, 1, 2, 5, 10, 20, 38])
        );
        assert_eq!(
            c_series(kb(2), 2, 6).unwrap().coeffs(),
            ints(&[0, 0, 1, 2, 5, 10, 20])
        );
        let c = c_series(kb(4), 3, 10).unwrap();
        assert!(c.coeffs()[..3].iter().all(Zero::is_zero));
        assert!(c_series(kb(2), 3, 6).is_err());
    }

    #[test]
    fn t_series_examples() {
        assert_eq!(t_series(kb(2), 5).coeffs(), ints(&[0, 1, 3, 7, 15, 30]));
        assert_eq!(t_series(kb(3), 0).coeffs(), ints(&[0]));
        assert_eq!(t_series(kb(3), 7).coeff(7), Some(&BigInt::from(200)));
    }

    #[test]
    fn algebraic_identities() {
        for k in 1..=5 {
            let order = 60;
            let one_minus_g = &TruncatedSeries::one(order) - &g_polynomial(kb(k), order);
            let f = f_series(kb(k), order);
            assert_eq!(&one_minus_g * &f, TruncatedSeries::one(order));
            for j in 1..=k {
                let cj = c_series(kb(k), j, order).unwrap();
                let lhs = &(&one_minus_g * &one_minus_g) * &cj;
                assert_eq!(lhs, TruncatedSeries::one(order).shift(j), "k={k} j={j}");
            }
        }
    }

    #[test]
    fn shift_truncates() {
        let s = TruncatedSeries::from_coeffs(ints(&[1, 2, 3]));
        assert_eq!(s.shift(2).coeffs(), ints(&[0, 0, 1]));
        assert_eq!(s.shift(5).coeffs(), ints(&[0, 0, 0]));
    }

    #[test]
    fn large_order_is_cheap() {
        let f = f_series(kb(3), 10_000);
        assert_eq!(f.order(), 10_000);
        let t = t_series(kb(2), 2_000);
        assert_eq!(t.order(), 2_000);
    }
}
