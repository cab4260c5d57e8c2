//! High-precision real and complex helpers on top of `dashu-float`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Binary floating point with round-half-to-even.
pub type Real = FBig<HalfEven>;

pub fn int(v: i64, prec: usize) -> Real {
    Real::from(v).with_precision(prec).value()
}

pub fn from_f64(v: f64, prec: usize) -> Real {
    Real::try_from(v)
        .expect("finite f64")
        .with_precision(prec)
        .value()
}

pub fn to_ibig(v: &BigInt) -> IBig {
    IBig::from_le_bytes(&v.to_signed_bytes_le())
}

pub fn to_bigint(v: &IBig) -> BigInt {
    BigInt::from_signed_bytes_le(&v.to_le_bytes())
}

/// Rounds an exact integer to `prec` bits.
pub fn from_bigint(v: &BigInt, prec: usize) -> Real {
    Real::from(to_ibig(v)).with_precision(prec).value()
}

/// `num / den` correctly rounded at `prec` bits.
pub fn from_rational(v: &BigRational, prec: usize) -> Real {
    from_bigint(v.numer(), prec + 2) / from_bigint(v.denom(), prec + 2)
}

/// The exact dyadic rational held by `x`.
pub fn to_rational(x: &Real) -> BigRational {
    let (sig, exp) = x.repr().clone().into_parts();
    let sig = to_bigint(&sig);
    if exp >= 0 {
        BigRational::from_integer(sig << exp as usize)
    } else {
        BigRational::new(sig, BigInt::one() << exp.unsigned_abs())
    }
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

pub fn is_zero(x: &Real) -> bool {
    x.repr().significand().is_zero()
}

/// `x^e` for a signed integer exponent.
pub fn powi(x: &Real, e: i64) -> Real {
    x.powi(IBig::from(e))
}

/// `2^-bits` at precision `prec`.
pub fn two_pow_neg(bits: usize, prec: usize) -> Real {
    Real::from_parts(IBig::ONE, -(bits as isize))
        .with_precision(prec)
        .value()
}

/// A complex number with [`Real`] components.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn real(re: Real, prec: usize) -> Self {
        Complex {
            re,
            im: int(0, prec),
        }
    }

    pub fn zero(prec: usize) -> Self {
        Complex::new(int(0, prec), int(0, prec))
    }

    pub fn one(prec: usize) -> Self {
        Complex::new(int(1, prec), int(0, prec))
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        let n = self.norm_sqr();
        if is_zero(&n) {
            n
        } else {
            n.sqrt()
        }
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let den = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Complex::new(&num.re / &den, &num.im / &den)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}
