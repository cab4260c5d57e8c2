//! Exact statistics of `{1..k}`-compositions.
//!
//! The recurrences are evaluated bottom-up into a per-`k` memo table shared
//! by `F_n`, `T_n` and every `C_{n,j}`, so repeated queries are linear
//! overall. An enumeration oracle and the bijection with rhythm patterns
//! live here as well.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default refusal threshold for brute-force enumeration.
pub const DEFAULT_ORACLE_CAP: u64 = 10_000_000;

/// The largest allowed part size `k`; parts range over `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartBound(usize);

impl PartBound {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroPartBound);
        }
        Ok(PartBound(k))
    }

    /// Validates a signed `k` coming from an external boundary.
    pub fn from_signed(k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::ZeroPartBound);
        }
        Self::new(k as usize)
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Checks that `j` is an allowed part size.
    pub fn check_part(self, j: usize) -> Result<()> {
        if j == 0 || j > self.0 {
            return Err(Error::PartOutOfRange {
                j: j as i64,
                k: self.0,
            });
        }
        Ok(())
    }

    /// Like [`check_part`](Self::check_part) for a signed `j`.
    pub fn checked_part(self, j: i64) -> Result<usize> {
        if j < 1 || j as u64 > self.0 as u64 {
            return Err(Error::PartOutOfRange { j, k: self.0 });
        }
        Ok(j as usize)
    }
}

impl fmt::Display for PartBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Converts a signed size to `usize`, rejecting negatives.
pub fn checked_n(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::NegativeN(n))
}

/// An ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::MalformedComposition(format!(
                "part {} is zero",
                pos + 1
            )));
        }
        Ok(Composition { parts })
    }

    /// The empty composition, the only composition of 0.
    pub fn empty() -> Self {
        Composition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being composed.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True when every part is at most `k`.
    pub fn fits(&self, k: PartBound) -> bool {
        self.parts.iter().all(|&p| p <= k.get())
    }

    /// Maps each part `j` to a hit followed by `j - 1` rests.
    pub fn to_rhythm(&self) -> RhythmPattern {
        let mut pulses = Vec::with_capacity(self.n());
        for &p in &self.parts {
            pulses.push(Pulse::Hit);
            pulses.extend(std::iter::repeat_n(Pulse::Rest, p - 1));
        }
        RhythmPattern { pulses }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::MalformedComposition(format!("expected (a,b,...), got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedComposition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pulse {
    Hit,
    Rest,
}

impl Pulse {
    pub fn symbol(self) -> char {
        match self {
            Pulse::Hit => 'x',
            Pulse::Rest => '.',
        }
    }
}

/// A sequence of hits and rests that starts with a hit (unless empty).
///
/// Text form: `x` for a hit, `.` for a rest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RhythmPattern {
    pulses: Vec<Pulse>,
}

impl RhythmPattern {
    pub fn new(pulses: Vec<Pulse>) -> Result<Self> {
        if pulses.first() == Some(&Pulse::Rest) {
            return Err(Error::MalformedPattern(
                "pattern must start with a hit".into(),
            ));
        }
        Ok(RhythmPattern { pulses })
    }

    pub fn pulses(&self) -> &[Pulse] {
        &self.pulses
    }

    pub fn len(&self) -> usize {
        self.pulses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pulses.is_empty()
    }

    /// Length of the longest run of consecutive rests.
    pub fn max_rest_run(&self) -> usize {
        self.pulses
            .split(|&p| p == Pulse::Hit)
            .map(<[Pulse]>::len)
            .max()
            .unwrap_or(0)
    }

    /// Every note length is at most `k`.
    pub fn fits(&self, k: PartBound) -> bool {
        self.max_rest_run() < k.get()
    }

    /// Note lengths in order: each hit plus the rests that follow it.
    pub fn to_composition(&self) -> Composition {
        let mut parts = Vec::new();
        for &p in &self.pulses {
            match p {
                Pulse::Hit => parts.push(1),
                // the first pulse is a hit, so `parts` is non-empty here
                Pulse::Rest => *parts.last_mut().expect("leading rest") += 1,
            }
        }
        Composition { parts }
    }
}

impl fmt::Display for RhythmPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pulses {
            write!(f, "{}", p.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for RhythmPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pulses = s
            .chars()
            .map(|c| match c {
                'x' => Ok(Pulse::Hit),
                '.' => Ok(Pulse::Rest),
                other => Err(Error::MalformedPattern(format!(
                    "unexpected symbol {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        RhythmPattern::new(pulses)
    }
}

pub fn composition_to_rhythm(c: &Composition) -> RhythmPattern {
    c.to_rhythm()
}

pub fn rhythm_to_composition(p: &RhythmPattern) -> Composition {
    p.to_composition()
}

/// `F_n`, `T_n`, `C_{n,1..k}` and the derived averages for one `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactStats {
    pub k: PartBound,
    pub n: usize,
    pub f: BigInt,
    pub t: BigInt,
    /// `c[j - 1]` holds `C_{n,j}`.
    pub c: Vec<BigInt>,
    pub a: BigRational,
    /// `a_j[j - 1]` holds `A_{n,j}`.
    pub a_j: Vec<BigRational>,
}

impl ExactStats {
    fn from_counts(k: PartBound, n: usize, f: BigInt, t: BigInt, c: Vec<BigInt>) -> Self {
        let a = BigRational::new(t.clone(), f.clone());
        let a_j = c
            .iter()
            .map(|cj| BigRational::new(cj.clone(), f.clone()))
            .collect();
        ExactStats {
            k,
            n,
            f,
            t,
            c,
            a,
            a_j,
        }
    }

    /// `C_{n,j}` for `1 <= j <= k`.
    pub fn c_j(&self, j: usize) -> Result<&BigInt> {
        self.k.check_part(j)?;
        Ok(&self.c[j - 1])
    }
}

/// Sliding-window sum of the last `k` terms of a sequence.
#[derive(Debug, Clone)]
struct Window {
    sum: BigInt,
}

impl Window {
    fn new() -> Self {
        Window {
            sum: BigInt::zero(),
        }
    }

    /// Returns `seq[n-1] + ... + seq[n-k]` (missing terms are zero) and
    /// advances the window so the next call targets `n + 1`.
    fn advance(&mut self, seq: &[BigInt], n: usize, k: usize) -> BigInt {
        if n >= 1 {
            self.sum += &seq[n - 1];
        }
        if n > k {
            self.sum -= &seq[n - 1 - k];
        }
        self.sum.clone()
    }
}

/// Memoized recurrence values for a single `k`.
#[derive(Debug, Clone)]
pub struct RecurrenceTable {
    k: PartBound,
    f: Vec<BigInt>,
    t: Vec<BigInt>,
    c: Vec<Vec<BigInt>>,
    f_win: Window,
    t_win: Window,
    c_win: Vec<Window>,
}

impl RecurrenceTable {
    pub fn new(k: PartBound) -> Self {
        RecurrenceTable {
            k,
            f: Vec::new(),
            t: Vec::new(),
            c: vec![Vec::new(); k.get()],
            f_win: Window::new(),
            t_win: Window::new(),
            c_win: vec![Window::new(); k.get()],
        }
    }

    pub fn k(&self) -> PartBound {
        self.k
    }

    /// Number of indices already computed (`0..len`).
    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    /// Ensures indices `0..=n` are available.
    pub fn extend_to(&mut self, n: usize) {
        let k = self.k.get();
        while self.f.len() <= n {
            let m = self.f.len();
            // F_0 = 1; F_m = F_{m-1} + ... + F_{m-k}
            let f_sum = self.f_win.advance(&self.f, m, k);
            let f_m = if m == 0 { BigInt::one() } else { f_sum };
            self.f.push(f_m);

            // T_0 = 0; T_m = F_m + T_{m-1} + ... + T_{m-k}
            let t_sum = self.t_win.advance(&self.t, m, k);
            let t_m = if m == 0 {
                BigInt::zero()
            } else {
                &self.f[m] + t_sum
            };
            self.t.push(t_m);

            // C_{0,j} = 0; C_{m,j} = F_{m-j} + C_{m-1,j} + ... + C_{m-k,j}
            for j in 1..=k {
                let seq = &mut self.c[j - 1];
                let c_sum = self.c_win[j - 1].advance(seq, m, k);
                let c_m = if m == 0 {
                    BigInt::zero()
                } else if m >= j {
                    &self.f[m - j] + c_sum
                } else {
                    c_sum
                };
                seq.push(c_m);
            }
        }
    }

    pub fn f(&self, n: usize) -> Option<&BigInt> {
        self.f.get(n)
    }

    pub fn t(&self, n: usize) -> Option<&BigInt> {
        self.t.get(n)
    }

    /// `C_{n,j}`; `None` if `n` is not yet computed or `j` is out of range.
    pub fn c(&self, n: usize, j: usize) -> Option<&BigInt> {
        if j == 0 {
            return None;
        }
        self.c.get(j - 1)?.get(n)
    }

    pub fn stats(&self, n: usize) -> Option<ExactStats> {
        if n >= self.len() {
            return None;
        }
        let c = self.c.iter().map(|row| row[n].clone()).collect();
        Some(ExactStats::from_counts(
            self.k,
            n,
            self.f[n].clone(),
            self.t[n].clone(),
            c,
        ))
    }
}

fn memo() -> &'static RwLock<HashMap<PartBound, RecurrenceTable>> {
    static MEMO: OnceLock<RwLock<HashMap<PartBound, RecurrenceTable>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Runs `f` against the shared table for `k`, extended through `n`.
pub fn with_table<T>(k: PartBound, n: usize, f: impl FnOnce(&RecurrenceTable) -> T) -> T {
    {
        let guard = memo().read().unwrap_or_else(|e| e.into_inner());
        if let Some(table) = guard.get(&k) {
            if table.len() > n {
                return f(table);
            }
        }
    }
    let mut guard = memo().write().unwrap_or_else(|e| e.into_inner());
    let table = guard.entry(k).or_insert_with(|| RecurrenceTable::new(k));
    table.extend_to(n);
    f(table)
}

/// Number of compositions of `n` with parts in `1..=k`.
pub fn count_compositions(k: PartBound, n: usize) -> BigInt {
    with_table(k, n, |t| t.f[n].clone())
}

/// Total occurrences of part size `j` across all compositions of `n`.
pub fn part_count(k: PartBound, n: usize, j: usize) -> Result<BigInt> {
    k.check_part(j)?;
    Ok(with_table(k, n, |t| t.c[j - 1][n].clone()))
}

/// Total number of parts across all compositions of `n`.
pub fn total_parts(k: PartBound, n: usize) -> BigInt {
    with_table(k, n, |t| t.t[n].clone())
}

/// Mean number of parts, `T_n / F_n`, reduced.
pub fn average_parts(k: PartBound, n: usize) -> BigRational {
    with_table(k, n, |t| BigRational::new(t.t[n].clone(), t.f[n].clone()))
}

/// Mean multiplicity of part size `j`, `C_{n,j} / F_n`, reduced.
pub fn average_part_count(k: PartBound, n: usize, j: usize) -> Result<BigRational> {
    k.check_part(j)?;
    Ok(with_table(k, n, |t| {
        BigRational::new(t.c[j - 1][n].clone(), t.f[n].clone())
    }))
}

/// All five statistics at `(k, n)` from the recurrences.
pub fn exact_stats(k: PartBound, n: usize) -> ExactStats {
    with_table(k, n, |t| t.stats(n).expect("table extended through n"))
}

/// Lexicographic iterator over the compositions of `n` with parts `<= k`.
#[derive(Debug, Clone)]
pub struct Compositions {
    k: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.take()?;
        let out = Composition {
            parts: parts.clone(),
        };
        self.current = successor(parts, self.k);
        Some(out)
    }
}

// Bump the rightmost part that can grow by one and refill the remainder
// with ones.
fn successor(mut parts: Vec<usize>, k: usize) -> Option<Vec<usize>> {
    let mut rest = 0;
    for i in (0..parts.len()).rev() {
        if rest >= 1 && parts[i] < k {
            parts[i] += 1;
            parts.truncate(i + 1);
            parts.extend(std::iter::repeat_n(1, rest - 1));
            return Some(parts);
        }
        rest += parts[i];
    }
    None
}

/// Lazily yields every composition of `n` with parts in `1..=k`, in
/// lexicographic order of the part lists.
pub fn enumerate_compositions(k: PartBound, n: usize) -> Compositions {
    Compositions {
        k: k.get(),
        current: Some(vec![1; n]),
    }
}

/// Statistics by exhaustive enumeration. Refuses when `F_n > cap`.
pub fn brute_stats(k: PartBound, n: usize, cap: u64) -> Result<ExactStats> {
    let count = count_compositions(k, n);
    if count > BigInt::from(cap) {
        return Err(Error::OracleCapExceeded { cap, count });
    }
    let mut f: u64 = 0;
    let mut t: u64 = 0;
    let mut c = vec![0u64; k.get()];
    for comp in enumerate_compositions(k, n) {
        f += 1;
        t += comp.len() as u64;
        for &p in comp.parts() {
            c[p - 1] += 1;
        }
    }
    Ok(ExactStats::from_counts(
        k,
        n,
        f.into(),
        t.into(),
        c.into_iter().map(BigInt::from).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kb(k: usize) -> PartBound {
        PartBound::new(k).unwrap()
    }

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn zero_bound_rejected() {
        assert_eq!(PartBound::new(0), Err(Error::ZeroPartBound));
        assert_eq!(PartBound::from_signed(-2), Err(Error::ZeroPartBound));
    }

    #[test]
    fn negative_n_rejected_at_boundary() {
        assert_eq!(checked_n(-1), Err(Error::NegativeN(-1)));
        assert_eq!(checked_n(7), Ok(7));
    }

    #[test]
    fn counts_match_published_values() {
        assert_eq!(count_compositions(kb(2), 5), big(8));
        assert_eq!(count_compositions(kb(4), 10), big(401));
        assert_eq!(count_compositions(kb(3), 7), big(44));
        for k in 1..6 {
            assert_eq!(count_compositions(kb(k), 0), big(1));
        }
    }

    #[test]
    fn part_counts_match_published_values() {
        assert_eq!(part_count(kb(2), 5, 1).unwrap(), big(20));
        assert_eq!(part_count(kb(3), 9, 2).unwrap(), big(244));
        assert_eq!(part_count(kb(4), 10, 4).unwrap(), big(136));
        for k in 1..6 {
            for j in 1..=k {
                assert_eq!(part_count(kb(k), j, j).unwrap(), big(1));
            }
        }
    }

    #[test]
    fn part_out_of_range_is_distinct_error() {
        assert_eq!(
            part_count(kb(2), 5, 3),
            Err(Error::PartOutOfRange { j: 3, k: 2 })
        );
        assert_eq!(
            part_count(kb(2), 5, 0),
            Err(Error::PartOutOfRange { j: 0, k: 2 })
        );
        assert!(average_part_count(kb(2), 5, 3).is_err());
        assert_eq!(
            kb(3).checked_part(-1),
            Err(Error::PartOutOfRange { j: -1, k: 3 })
        );
    }

    #[test]
    fn totals_and_averages() {
        assert_eq!(total_parts(kb(2), 5), big(30));
        assert_eq!(total_parts(kb(3), 6), big(94));
        assert_eq!(total_parts(kb(5), 0), big(0));
        assert_eq!(average_parts(kb(2), 5), rat(15, 4));
        assert_eq!(average_parts(kb(4), 6), rat(107, 29));
        assert_eq!(average_parts(kb(3), 0), rat(0, 1));
        assert_eq!(average_part_count(kb(2), 5, 1).unwrap(), rat(5, 2));
        assert_eq!(average_part_count(kb(3), 7, 1).unwrap(), rat(118, 44));
        assert_eq!(average_part_count(kb(4), 2, 3).unwrap(), rat(0, 1));
    }

    #[test]
    fn enumeration_order_and_contents() {
        let got: Vec<String> = enumerate_compositions(kb(2), 3)
            .map(|c| c.to_string())
            .collect();
        assert_eq!(got, ["(1,1,1)", "(1,2)", "(2,1)"]);

        let got: Vec<String> = enumerate_compositions(kb(3), 3)
            .map(|c| c.to_string())
            .collect();
        assert_eq!(got, ["(1,1,1)", "(1,2)", "(2,1)", "(3)"]);

        let got: Vec<_> = enumerate_compositions(kb(1), 4).collect();
        assert_eq!(got, vec![Composition::new(vec![1, 1, 1, 1]).unwrap()]);

        let got: Vec<_> = enumerate_compositions(kb(3), 0).collect();
        assert_eq!(got, vec![Composition::empty()]);
    }

    #[test]
    fn enumeration_is_strictly_increasing() {
        let all: Vec<_> = enumerate_compositions(kb(3), 9).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|c| c.n() == 9 && c.fits(kb(3))));
    }

    #[test]
    fn brute_force_small_cases() {
        let s = brute_stats(kb(2), 5, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!((s.f.clone(), s.t.clone()), (big(8), big(30)));
        assert_eq!(s.c, vec![big(20), big(10)]);

        let s = brute_stats(kb(4), 4, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(s.f, big(8));
        assert_eq!(s.c, vec![big(12), big(5), big(2), big(1)]);

        let s = brute_stats(kb(3), 0, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!((s.f, s.t), (big(1), big(0)));
        assert!(s.c.iter().all(Zero::is_zero));
    }

    #[test]
    fn brute_force_cap_refusal_names_cap() {
        let err = brute_stats(kb(2), 30, 1000).unwrap_err();
        match &err {
            Error::OracleCapExceeded { cap, count } => {
                assert_eq!(*cap, 1000);
                assert_eq!(*count, big(1_346_269));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(err.to_string().contains("1000"));
    }

    #[test]
    fn rhythm_encoding() {
        let c: Composition = "(2,1,1,1,2,2,1)".parse().unwrap();
        assert_eq!(c.to_rhythm().to_string(), "x.xxxx.x.x");
        assert_eq!(Composition::empty().to_rhythm().to_string(), "");
        assert_eq!(
            Composition::new(vec![3]).unwrap().to_rhythm().to_string(),
            "x.."
        );
    }

    #[test]
    fn rhythm_decoding() {
        let p: RhythmPattern = "x.x".parse().unwrap();
        assert_eq!(p.to_composition().parts(), &[2, 1]);
        let p: RhythmPattern = "".parse().unwrap();
        assert!(p.to_composition().is_empty());
        let p: RhythmPattern = "x.xxxx.x.x".parse().unwrap();
        assert_eq!(p.to_composition().to_string(), "(2,1,1,1,2,2,1)");
        assert_eq!(p.max_rest_run(), 1);
        assert!(p.fits(kb(2)) && !p.fits(kb(1)));
    }

    #[test]
    fn malformed_patterns() {
        assert!(matches!(
            ".x".parse::<RhythmPattern>(),
            Err(Error::MalformedPattern(_))
        ));
        assert!(matches!(
            "x-x".parse::<RhythmPattern>(),
            Err(Error::MalformedPattern(_))
        ));
        assert!(RhythmPattern::new(vec![Pulse::Rest]).is_err());
    }

    #[test]
    fn composition_text_form() {
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!(Composition::empty().to_string(), "()");
        assert!("(1,0)".parse::<Composition>().is_err());
        assert!("1,2".parse::<Composition>().is_err());
        assert_eq!(
            " ( 1, 2 ) ".parse::<Composition>().unwrap().parts(),
            &[1, 2]
        );
    }

    #[test]
    fn table_grows_incrementally() {
        let mut t = RecurrenceTable::new(kb(3));
        t.extend_to(4);
        t.extend_to(2);
        assert_eq!(t.len(), 5);
        t.extend_to(7);
        assert_eq!(t.f(7), Some(&big(44)));
        assert_eq!(t.t(7), Some(&big(200)));
        assert_eq!(t.c(7, 1), Some(&big(118)));
        assert_eq!(t.c(7, 4), None);
        assert_eq!(t.c(7, 0), None);
    }

    #[test]
    fn f_overflows_u64_but_stays_exact() {
        // F_n for k = 2 is the Fibonacci number Fib(n + 1).
        let f = count_compositions(kb(2), 99);
        assert_eq!(f.to_string(), "354224848179261915075");
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || count_compositions(kb(3), 50 + i)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let mut table = RecurrenceTable::new(kb(3));
        table.extend_to(60);
        for (i, v) in got.iter().enumerate() {
            assert_eq!(Some(v), table.f(50 + i));
        }
    }
}
