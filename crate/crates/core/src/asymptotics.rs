//! Closed-form approximations driven by the dominant pole of `1 / (1 - G)`.
//!
//! With `G(x) = x + ... + x^k`, `phi` is the positive root of
//! `sum_{a=1..k} phi^-a = 1` (equivalently the largest root of the monic
//! polynomial `M(z) = z^k - z^(k-1) - ... - z - 1`) and `sigma = 1/phi` is the
//! simple pole of the generating functions nearest the origin. Every other
//! root of `M` lies strictly inside the unit disk, so the approximation
//! errors decay like `rho^n` where `rho` is the largest of those moduli.

use std::fmt;

use dashu_float::ops::Abs;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{self, PartBound};
use crate::hp::{self, Complex, Real};

const GUARD_BITS: usize = 32;
const NEWTON_MAX_ITER: usize = 200;
/// Iteration cap for the simultaneous all-roots solver.
pub const ROOTS_MAX_ITER: usize = 10_000;
/// Radius and phase of the initial guesses for the all-roots solver.
const START_RADIUS: f64 = 0.9;
const START_PHASE: f64 = 0.4;
const START_OUTER: f64 = 1.9;

fn check_precision(precision_bits: usize) -> Result<()> {
    if precision_bits < 53 {
        return Err(Error::PrecisionTooLow(precision_bits));
    }
    Ok(())
}

/// `phi`, `sigma = 1/phi`, `G'(sigma)`, `G''(sigma)` and the Laurent
/// coefficients of `1 / (1 - G(z))` at `sigma`.
#[derive(Debug, Clone, PartialEq)]
pub struct DominantRootData {
    pub k: PartBound,
    pub phi: Real,
    pub sigma: Real,
    /// `G'(sigma)`
    pub g1: Real,
    /// `G''(sigma)`
    pub g2: Real,
    /// `-1 / G'(sigma)`, the residue at `sigma`.
    pub residue_a: Real,
    /// `G''(sigma) / (2 G'(sigma)^2)`, the constant Laurent term.
    pub const_b: Real,
    pub precision_bits: usize,
}

// Horner evaluation of M(x) = x^k - x^(k-1) - ... - 1 and M'(x).
fn miles_and_derivative(k: usize, x: &Real, prec: usize) -> (Real, Real) {
    let mut p = hp::int(1, prec);
    let mut dp = hp::int(0, prec);
    for _ in 0..k {
        dp = &dp * x + &p;
        p = &p * x - hp::int(1, prec);
    }
    (p, dp)
}

// G(x), G'(x), G''(x) by direct summation.
fn g_derivatives(k: usize, x: &Real, prec: usize) -> (Real, Real, Real) {
    let mut g = hp::int(0, prec);
    let mut g1 = hp::int(0, prec);
    let mut g2 = hp::int(0, prec);
    let mut pow = hp::int(1, prec); // x^(a-1)
    let mut prev = hp::int(0, prec); // x^(a-2)
    for a in 1..=k as i64 {
        g += &pow * x;
        g1 += &pow * hp::int(a, prec);
        if a >= 2 {
            g2 += &prev * hp::int(a * (a - 1), prec);
        }
        prev = pow.clone();
        pow = &pow * x;
    }
    (g, g1, g2)
}

/// `G(x) = x + ... + x^k` evaluated at `x`.
pub fn g_value(k: PartBound, x: &Real, prec: usize) -> Real {
    g_derivatives(k.get(), x, prec).0
}

fn round_to(x: Real, prec: usize) -> Real {
    x.with_precision(prec).value()
}

/// Solves for `phi` by bracketing on `[1, 2]`, bisecting to width `1e-3`
/// and finishing with Newton on `M`.
pub fn dominant_root(k: PartBound, precision_bits: usize) -> Result<DominantRootData> {
    check_precision(precision_bits)?;
    let prec = precision_bits;
    let wp = prec + GUARD_BITS;
    let kk = k.get();

    let phi_wp = if kk == 1 {
        hp::int(1, wp)
    } else {
        let mut lo = hp::int(1, wp);
        let mut hi = hp::int(2, wp);
        let width = hp::from_f64(1e-3, wp);
        let two = hp::int(2, wp);
        while &hi - &lo > width {
            let mid = (&lo + &hi) / &two;
            if miles_and_derivative(kk, &mid, wp).0 > hp::int(0, wp) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let mut x = (&lo + &hi) / &two;
        let tol = hp::two_pow_neg(wp - 4, wp);
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = miles_and_derivative(kk, &x, wp);
            let step = p / dp;
            x = &x - &step;
            if step.abs() < tol {
                break;
            }
        }
        x
    };

    let sigma_wp = hp::int(1, wp) / &phi_wp;
    let (_, g1, g2) = g_derivatives(kk, &sigma_wp, wp);
    let residue_a = -(hp::int(1, wp) / &g1);
    let const_b = &g2 / (hp::int(2, wp) * &g1 * &g1);

    Ok(DominantRootData {
        k,
        phi: round_to(phi_wp, prec),
        sigma: round_to(sigma_wp, prec),
        g1: round_to(g1, prec),
        g2: round_to(g2, prec),
        residue_a: round_to(residue_a, prec),
        const_b: round_to(const_b, prec),
        precision_bits: prec,
    })
}

impl DominantRootData {
    fn int(&self, v: i64) -> Real {
        hp::int(v, self.precision_bits)
    }

    fn phi_pow(&self, e: i64) -> Real {
        hp::powi(&self.phi, e)
    }

    fn check_part(&self, j: usize) -> Result<i64> {
        self.k.check_part(j)?;
        Ok(j as i64)
    }

    /// `|G(sigma) - 1|`, evaluated with guard bits.
    pub fn root_residual(&self) -> Real {
        let wp = self.precision_bits + GUARD_BITS;
        let sigma = self.sigma.clone().with_precision(wp).value();
        (g_value(self.k, &sigma, wp) - hp::int(1, wp)).abs()
    }

    /// `phi^(n+1) / G'(sigma)`
    pub fn approx_f(&self, n: usize) -> Real {
        self.phi_pow(n as i64 + 1) / &self.g1
    }

    /// `phi^(n+2) (n+1) / G'^2 + phi^(n+1) G'' / G'^3 - phi^(n+1) / G'`
    pub fn approx_t(&self, n: usize) -> Real {
        let n = n as i64;
        let g1sq = &self.g1 * &self.g1;
        let lead = self.phi_pow(n + 2) * self.int(n + 1) / &g1sq;
        let p1 = self.phi_pow(n + 1);
        let mid = &p1 * &self.g2 / (&g1sq * &self.g1);
        let tail = &p1 / &self.g1;
        lead + mid - tail
    }

    /// `phi (n+1) / G' - 1 + G'' / G'^2`
    pub fn approx_a(&self, n: usize) -> Real {
        let g1sq = &self.g1 * &self.g1;
        &self.phi * self.int(n as i64 + 1) / &self.g1 - self.int(1) + &self.g2 / g1sq
    }

    /// `phi^(n+2-j) (n+1-j) / G'^2 + phi^(n+1-j) G'' / G'^3`
    pub fn approx_c(&self, n: usize, j: usize) -> Result<Real> {
        let j = self.check_part(j)?;
        let n = n as i64;
        let g1sq = &self.g1 * &self.g1;
        let lead = self.phi_pow(n + 2 - j) * self.int(n + 1 - j) / &g1sq;
        let tail = self.phi_pow(n + 1 - j) * &self.g2 / (&g1sq * &self.g1);
        Ok(lead + tail)
    }

    /// `phi^(1-j) (n+1-j) / G' + phi^(-j) G'' / G'^2`
    pub fn approx_aj(&self, n: usize, j: usize) -> Result<Real> {
        let j = self.check_part(j)?;
        let n = n as i64;
        let g1sq = &self.g1 * &self.g1;
        let lead = self.phi_pow(1 - j) * self.int(n + 1 - j) / &self.g1;
        let tail = self.phi_pow(-j) * &self.g2 / g1sq;
        Ok(lead + tail)
    }

    /// `(a, b)`: residue and constant term of the Laurent expansion at `sigma`.
    pub fn principal_part_coefficients(&self) -> (Real, Real) {
        (self.residue_a.clone(), self.const_b.clone())
    }
}

pub fn approx_f(d: &DominantRootData, n: usize) -> Real {
    d.approx_f(n)
}

pub fn approx_t(d: &DominantRootData, n: usize) -> Real {
    d.approx_t(n)
}

pub fn approx_a(d: &DominantRootData, n: usize) -> Real {
    d.approx_a(n)
}

pub fn approx_c(d: &DominantRootData, n: usize, j: usize) -> Result<Real> {
    d.approx_c(n, j)
}

pub fn approx_aj(d: &DominantRootData, n: usize, j: usize) -> Result<Real> {
    d.approx_aj(n, j)
}

pub fn principal_part_coefficients(d: &DominantRootData) -> (Real, Real) {
    d.principal_part_coefficients()
}

/// All roots of `M(z)` and the resulting error-decay rate.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumData {
    pub k: PartBound,
    /// The dominant root first, then the rest by decreasing modulus.
    pub all_roots: Vec<Complex>,
    /// Distance to the nearest singularity other than `sigma`; `None` when
    /// there is none (`k = 1`).
    pub r_prime: Option<Real>,
    /// `1 / r_prime`, or zero when `r_prime` is `None`.
    pub decay_rate: Real,
    pub iterations: usize,
    pub precision_bits: usize,
}

impl SpectrumData {
    pub fn moduli(&self) -> Vec<Real> {
        self.all_roots.iter().map(Complex::abs).collect()
    }
}

fn eval_miles(k: usize, z: &Complex, prec: usize) -> Complex {
    let one = Complex::one(prec);
    let mut p = one.clone();
    for _ in 0..k {
        p = &(&p * z) - &one;
    }
    p
}

/// Finds every root of `M(z)` by simultaneous (Weierstrass / Durand-Kerner)
/// iteration and checks that exactly one lies outside the unit circle.
pub fn subdominant_spectrum(k: PartBound, precision_bits: usize) -> Result<SpectrumData> {
    check_precision(precision_bits)?;
    let prec = precision_bits;
    let wp = prec + GUARD_BITS;
    let kk = k.get();

    if kk == 1 {
        return Ok(SpectrumData {
            k,
            all_roots: vec![Complex::one(prec)],
            r_prime: None,
            decay_rate: hp::int(0, prec),
            iterations: 0,
            precision_bits: prec,
        });
    }

    let mut roots: Vec<Complex> = (0..kk - 1)
        .map(|m| {
            let theta = START_PHASE + std::f64::consts::TAU * m as f64 / (kk - 1) as f64;
            Complex::new(
                hp::from_f64(START_RADIUS * theta.cos(), wp),
                hp::from_f64(START_RADIUS * theta.sin(), wp),
            )
        })
        .collect();
    roots.push(Complex::real(hp::from_f64(START_OUTER, wp), wp));

    let tol = hp::two_pow_neg(prec / 2, wp);
    let mut iterations = 0;
    let mut converged = false;
    let mut polish = 2;
    while iterations < ROOTS_MAX_ITER {
        iterations += 1;
        let mut max_step = hp::int(0, wp);
        for i in 0..kk {
            let mut den = Complex::one(wp);
            for (j, other) in roots.iter().enumerate() {
                if j != i {
                    den = &den * &(&roots[i] - other);
                }
            }
            let step = &eval_miles(kk, &roots[i], wp) / &den;
            let size = step.abs();
            if size > max_step {
                max_step = size;
            }
            roots[i] = &roots[i] - &step;
        }
        if converged {
            polish -= 1;
            if polish == 0 {
                break;
            }
        } else if max_step < tol {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(iterations));
    }

    let one = hp::int(1, wp);
    let mut moduli: Vec<(Real, Complex)> = roots.into_iter().map(|z| (z.abs(), z)).collect();
    moduli.sort_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(
                b.1.im
                    .partial_cmp(&a.1.im)
                    .unwrap_or(std::cmp::Ordering::Equal),
            )
    });

    let outside = moduli.iter().filter(|(m, _)| *m > one).count();
    if outside != 1 {
        return Err(Error::RootStructure(format!(
            "{outside} roots of modulus > 1, expected exactly one"
        )));
    }
    let phi = dominant_root(k, prec)?.phi;
    let dom = &moduli[0].1;
    let dev = (&dom.re - &phi).abs() + dom.im.clone().abs();
    if dev > hp::two_pow_neg(prec / 2, wp) {
        return Err(Error::RootStructure(format!(
            "outer root deviates from phi by {:e}",
            hp::to_f64(&dev)
        )));
    }
    let inner = &moduli[1..];
    if let Some((m, _)) = inner.iter().find(|(m, _)| *m >= one) {
        return Err(Error::RootStructure(format!(
            "inner root of modulus {} is not < 1",
            hp::to_f64(m)
        )));
    }
    let sep = hp::two_pow_neg(prec / 4, wp);
    for (i, (_, a)) in inner.iter().enumerate() {
        for (_, b) in &inner[i + 1..] {
            if (a - b).abs() < sep {
                return Err(Error::RootStructure("repeated inner root".into()));
            }
        }
    }

    let rate = round_to(inner[0].0.clone(), prec);
    let r_prime = hp::int(1, prec) / &rate;
    let all_roots = moduli
        .into_iter()
        .map(|(_, z)| Complex::new(round_to(z.re, prec), round_to(z.im, prec)))
        .collect();
    Ok(SpectrumData {
        k,
        all_roots,
        r_prime: Some(r_prime),
        decay_rate: rate,
        iterations,
        precision_bits: prec,
    })
}

/// One of the five statistics, with the part size where relevant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    F,
    T,
    A,
    C(usize),
    Aj(usize),
}

impl Statistic {
    /// The five statistics with the given part size for the `j`-indexed ones.
    pub fn all(j: usize) -> [Statistic; 5] {
        [
            Statistic::F,
            Statistic::T,
            Statistic::A,
            Statistic::C(j),
            Statistic::Aj(j),
        ]
    }

    fn validate(self, k: PartBound) -> Result<()> {
        match self {
            Statistic::C(j) | Statistic::Aj(j) => k.check_part(j),
            _ => Ok(()),
        }
    }

    /// Exact value from the recurrences.
    pub fn exact(self, k: PartBound, n: usize) -> Result<BigRational> {
        Ok(match self {
            Statistic::F => BigRational::from_integer(exact::count_compositions(k, n)),
            Statistic::T => BigRational::from_integer(exact::total_parts(k, n)),
            Statistic::A => exact::average_parts(k, n),
            Statistic::C(j) => BigRational::from_integer(exact::part_count(k, n, j)?),
            Statistic::Aj(j) => exact::average_part_count(k, n, j)?,
        })
    }

    /// Closed-form approximation.
    pub fn approx(self, d: &DominantRootData, n: usize) -> Result<Real> {
        match self {
            Statistic::F => Ok(d.approx_f(n)),
            Statistic::T => Ok(d.approx_t(n)),
            Statistic::A => Ok(d.approx_a(n)),
            Statistic::C(j) => d.approx_c(n, j),
            Statistic::Aj(j) => d.approx_aj(n, j),
        }
    }

    /// `exact - approx`, computed with guard bits beyond the working precision.
    pub fn residual(self, d: &DominantRootData, n: usize) -> Result<Real> {
        let wp = d.precision_bits + GUARD_BITS;
        let exact = hp::from_rational(&self.exact(d.k, n)?, wp);
        let approx = self.approx(d, n)?.with_precision(wp).value();
        Ok(exact - approx)
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::F => f.write_str("F"),
            Statistic::T => f.write_str("T"),
            Statistic::A => f.write_str("A"),
            Statistic::C(j) => write!(f, "C_{j}"),
            Statistic::Aj(j) => write!(f, "A_{j}"),
        }
    }
}

/// Least-squares slope of `ln |exact - approx|` against `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayFit {
    /// `-inf` when every residual in the window is zero.
    pub slope: f64,
    /// `ln(decay_rate)` from the all-roots solver (`-inf` for `k = 1`).
    pub predicted: f64,
    /// Indices that entered the fit.
    pub points: usize,
    /// Largest `|exact - approx|` in the window.
    pub max_residual: f64,
}

impl DecayFit {
    pub fn all_exact(&self) -> bool {
        self.points == 0
    }
}

fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Fits the exponential decay of the approximation error over
/// `n_lo..=n_hi`. Residuals at the level of rounding noise are dropped.
pub fn fit_error_decay(
    k: PartBound,
    stat: Statistic,
    n_lo: usize,
    n_hi: usize,
    precision_bits: usize,
) -> Result<DecayFit> {
    if n_hi < n_lo || n_hi - n_lo < 8 {
        return Err(Error::FitWindow { lo: n_lo, hi: n_hi });
    }
    stat.validate(k)?;
    let d = dominant_root(k, precision_bits)?;
    let spectrum = subdominant_spectrum(k, precision_bits)?;
    let predicted = if spectrum.r_prime.is_some() {
        hp::to_f64(&spectrum.decay_rate.ln())
    } else {
        f64::NEG_INFINITY
    };

    let noise_bits = precision_bits.saturating_sub(16);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut max_residual = 0.0f64;
    for n in n_lo..=n_hi {
        let e = stat.residual(&d, n)?.abs();
        max_residual = max_residual.max(hp::to_f64(&e));
        let scale = hp::from_rational(&stat.exact(k, n)?, precision_bits).abs()
            + hp::int(1, precision_bits);
        if hp::is_zero(&e) || e <= scale * hp::two_pow_neg(noise_bits, precision_bits) {
            continue;
        }
        xs.push(n as f64);
        ys.push(hp::to_f64(&e.ln()));
    }
    let slope = if xs.len() >= 2 {
        ls_slope(&xs, &ys)
    } else {
        f64::NEG_INFINITY
    };
    Ok(DecayFit {
        slope,
        predicted,
        points: xs.len(),
        max_residual,
    })
}
