//! Decimal rendering with round-half-to-even.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::hp::{self, Real};

/// Rounds `v` to `decimals` places (ties to even) and prints exactly that
/// many fractional digits.
pub fn rational_fixed(v: &BigRational, decimals: u32) -> String {
    let scale = BigInt::from(10u32).pow(decimals);
    let scaled = v * BigRational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_mod_floor(scaled.denom());
    let twice = &r * 2u32;
    let mut q = q;
    match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Greater => q += 1,
        std::cmp::Ordering::Equal if q.is_odd() => q += 1,
        _ => {}
    }
    let neg = q.is_negative();
    let digits = q.abs().to_string();
    let d = decimals as usize;
    let body = if d == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = d + 1);
        let (int_part, frac) = padded.split_at(padded.len() - d);
        format!("{int_part}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Same as [`rational_fixed`] for a high-precision real.
pub fn real_fixed(x: &Real, decimals: u32) -> String {
    rational_fixed(&hp::to_rational(x), decimals)
}

/// `p/q` (or just `p` when integral).
pub fn fraction(v: &BigRational) -> String {
    if v.denom().is_one() || v.is_zero() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Parses a plain decimal string such as `-12.345` into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("0{int_part}{frac}").parse().ok()?;
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    let v = BigRational::new(digits, den);
    Some(if neg { -v } else { v })
}
