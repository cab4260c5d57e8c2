//! Command-line front end for the `compositions` binary.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dashu_float::ops::Abs;
use num_bigint::BigInt;

use crate::asymptotics::{dominant_root, fit_error_decay, subdominant_spectrum, Statistic};
use crate::exact::{self, checked_n, PartBound, DEFAULT_ORACLE_CAP};
use crate::format;
use crate::hp;
use crate::series;
use crate::tables::{self, TableFormat, TableKind};
use crate::DEFAULT_PRECISION_BITS;

/// Window and slack for the error-decay check in `verify`.
pub const DECAY_WINDOW: (usize, usize) = (10, 40);
pub const DECAY_SLACK: f64 = 0.05;

const CONSTANT_DECIMALS: u32 = 25;

#[derive(Debug, Parser)]
#[command(
    name = "compositions",
    version,
    about = "Statistics of integer compositions with parts at most k"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact F_n, T_n, A_n and optionally C_{n,j}, A_{n,j}
    Count(CountArgs),
    /// Multiplicity or comparison table
    Table(TableArgs),
    /// Closed-form approximations and dominant-root data
    Approx(ApproxArgs),
    /// Cross-check recurrences against enumeration, series and error decay
    Verify(VerifyArgs),
    /// List every composition of n in lexicographic order
    Enumerate(EnumerateArgs),
    /// Roots of z^k - z^(k-1) - ... - 1 and the error-decay rate
    Roots(RootsArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Write output to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PrecisionArg {
    /// Working precision in bits (at least 53)
    #[arg(long, env = "COMPOSITIONS_PRECISION_BITS", default_value_t = DEFAULT_PRECISION_BITS)]
    pub precision_bits: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    #[arg(long, default_value_t = tables::DEFAULT_DECIMALS)]
    pub decimals: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Multiplicity,
    Comparison,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    Markdown,
}

impl From<FormatArg> for TableFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Json => TableFormat::Json,
            FormatArg::Markdown => TableFormat::Markdown,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub n_max: i64,
    /// Part size for the C/A_j columns of a comparison table
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Markdown)]
    pub format: FormatArg,
    #[arg(long, default_value_t = tables::DEFAULT_DECIMALS)]
    pub decimals: u32,
    #[command(flatten)]
    pub precision: PrecisionArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct ApproxArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    #[arg(long, default_value_t = tables::DEFAULT_DECIMALS)]
    pub decimals: u32,
    #[command(flatten)]
    pub precision: PrecisionArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 18)]
    pub n_max: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: u64,
    #[command(flatten)]
    pub precision: PrecisionArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Encoding {
    Parts,
    Rhythm,
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long = "as", value_enum, default_value_t = Encoding::Parts)]
    pub encoding: Encoding,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct RootsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[command(flatten)]
    pub precision: PrecisionArg,
    #[command(flatten)]
    pub common: Common,
}

fn part_bound(k: i64) -> anyhow::Result<PartBound> {
    PartBound::from_signed(k).map_err(|e| anyhow!("--k: {e}"))
}

fn size(flag: &str, n: i64) -> anyhow::Result<usize> {
    checked_n(n).map_err(|e| anyhow!("{flag}: {e}"))
}

fn part(k: PartBound, j: Option<i64>) -> anyhow::Result<Option<usize>> {
    j.map(|j| {
        k.checked_part(j).map_err(|_| {
            if j > k.get() as i64 {
                anyhow!("--j: j={j} exceeds k={k}")
            } else {
                anyhow!("--j: j={j} must be at least 1")
            }
        })
    })
    .transpose()
}

fn precision(p: &PrecisionArg) -> anyhow::Result<usize> {
    if p.precision_bits < 53 {
        bail!(
            "--precision-bits: must be at least 53, got {}",
            p.precision_bits
        );
    }
    Ok(p.precision_bits)
}

fn decimals(d: u32) -> anyhow::Result<u32> {
    if d < 1 {
        bail!("--decimals: must be at least 1");
    }
    Ok(d)
}

fn sink<'a>(common: &Common, stdout: &'a mut dyn Write) -> anyhow::Result<Box<dyn Write + 'a>> {
    Ok(match &common.output {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).with_context(|| {
                format!("--output: cannot create {}", path.display())
            })?))
        }
        None => Box::new(stdout),
    })
}

fn finish(mut out: Box<dyn Write + '_>, common: &Common) -> anyhow::Result<()> {
    out.flush().with_context(|| match &common.output {
        Some(path) => format!("writing {}", path.display()),
        None => "writing standard output".to_string(),
    })
}

/// Runs one parsed invocation. `Ok(false)` means a check failed.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> anyhow::Result<bool> {
    match cli.command {
        Command::Count(a) => cmd_count(&a, stdout).map(|_| true),
        Command::Table(a) => cmd_table(&a, stdout).map(|_| true),
        Command::Approx(a) => cmd_approx(&a, stdout).map(|_| true),
        Command::Verify(a) => cmd_verify(&a, stdout),
        Command::Enumerate(a) => cmd_enumerate(&a, stdout).map(|_| true),
        Command::Roots(a) => cmd_roots(&a, stdout).map(|_| true),
    }
}

fn io_err(common: &Common) -> impl Fn(io::Error) -> anyhow::Error + '_ {
    move |e| match &common.output {
        Some(path) => anyhow!("writing {}: {e}", path.display()),
        None => anyhow!("writing standard output: {e}"),
    }
}

pub fn cmd_count(a: &CountArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let k = part_bound(a.k)?;
    let n = size("--n", a.n)?;
    let j = part(k, a.j)?;
    let places = decimals(a.decimals)?;

    let s = exact::exact_stats(k, n);
    let mut out = sink(&a.common, stdout)?;
    let e = io_err(&a.common);
    match j {
        Some(j) => writeln!(out, "k={k} n={n} j={j}").map_err(&e)?,
        None => writeln!(out, "k={k} n={n}").map_err(&e)?,
    }
    writeln!(out, "F={}", s.f).map_err(&e)?;
    writeln!(out, "T={}", s.t).map_err(&e)?;
    writeln!(
        out,
        "A={} ({})",
        format::fraction(&s.a),
        format::rational_fixed(&s.a, places)
    )
    .map_err(&e)?;
    if let Some(j) = j {
        writeln!(out, "C={}", s.c[j - 1]).map_err(&e)?;
        let aj = &s.a_j[j - 1];
        writeln!(
            out,
            "A_j={} ({})",
            format::fraction(aj),
            format::rational_fixed(aj, places)
        )
        .map_err(&e)?;
    }
    finish(out, &a.common)
}

pub fn cmd_table(a: &TableArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let k = part_bound(a.k)?;
    let n_max = size("--n-max", a.n_max)?;
    let j = part(k, a.j)?.unwrap_or(1);
    let places = decimals(a.decimals)?;
    let prec = precision(&a.precision)?;

    let kind = match a.kind {
        KindArg::Multiplicity => TableKind::Multiplicity,
        KindArg::Comparison => TableKind::Comparison,
    };
    let table = match kind {
        TableKind::Multiplicity => {
            let mut t = tables::build_multiplicity_table(k, n_max);
            t.decimals = places;
            t
        }
        TableKind::Comparison => {
            tables::build_comparison_table_for_part(k, n_max, j, places, prec)?
        }
    };
    let text = table.render(a.format.into());
    let mut out = sink(&a.common, stdout)?;
    out.write_all(text.as_bytes()).map_err(io_err(&a.common))?;
    finish(out, &a.common)
}

pub fn cmd_approx(a: &ApproxArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let k = part_bound(a.k)?;
    let n = size("--n", a.n)?;
    let j = part(k, a.j)?.unwrap_or(1);
    let places = decimals(a.decimals)?;
    let prec = precision(&a.precision)?;

    let d = dominant_root(k, prec)?;
    let spectrum = subdominant_spectrum(k, prec)?;
    let c = |x: &hp::Real| format::real_fixed(x, CONSTANT_DECIMALS);
    let v = |x: &hp::Real| format::real_fixed(x, places);

    let mut out = sink(&a.common, stdout)?;
    let e = io_err(&a.common);
    writeln!(out, "k={k} n={n} j={j} precision_bits={prec}").map_err(&e)?;
    writeln!(out, "phi={}", c(&d.phi)).map_err(&e)?;
    writeln!(out, "sigma={}", c(&d.sigma)).map_err(&e)?;
    writeln!(out, "G'(sigma)={}", c(&d.g1)).map_err(&e)?;
    writeln!(out, "G''(sigma)={}", c(&d.g2)).map_err(&e)?;
    match &spectrum.r_prime {
        Some(_) => writeln!(out, "decay_rate={}", c(&spectrum.decay_rate)).map_err(&e)?,
        None => writeln!(out, "decay_rate=0 (no subdominant singularity)").map_err(&e)?,
    }
    writeln!(out, "F_appr={}", v(&d.approx_f(n))).map_err(&e)?;
    writeln!(out, "T_appr={}", v(&d.approx_t(n))).map_err(&e)?;
    writeln!(out, "A_appr={}", v(&d.approx_a(n))).map_err(&e)?;
    writeln!(out, "C_appr={}", v(&d.approx_c(n, j)?)).map_err(&e)?;
    writeln!(out, "A_j_appr={}", v(&d.approx_aj(n, j)?)).map_err(&e)?;
    finish(out, &a.common)
}

fn first_mismatch(stats: &[(&str, &BigInt, &BigInt)]) -> Option<String> {
    stats
        .iter()
        .find(|(_, got, want)| got != want)
        .map(|(name, got, want)| format!("{name}: {got} != {want}"))
}

pub fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> anyhow::Result<bool> {
    let k = part_bound(a.k)?;
    let n_max = size("--n-max", a.n_max)?;
    let j = part(k, a.j)?.unwrap_or(1);
    let prec = precision(&a.precision)?;

    let mut out = sink(&a.common, stdout)?;
    let e = io_err(&a.common);
    let mut all_ok = true;

    // (a) enumeration oracle against the recurrences
    let mut failure = None;
    let mut checked_to = None;
    for n in 0..=n_max {
        let brute = match exact::brute_stats(k, n, a.oracle_cap) {
            Ok(s) => s,
            Err(_) => break,
        };
        let rec = exact::exact_stats(k, n);
        let mut pairs = vec![
            ("F".to_string(), &brute.f, &rec.f),
            ("T".to_string(), &brute.t, &rec.t),
        ];
        for jj in 1..=k.get() {
            pairs.push((format!("C_{jj}"), &brute.c[jj - 1], &rec.c[jj - 1]));
        }
        let named: Vec<_> = pairs.iter().map(|(s, x, y)| (s.as_str(), *x, *y)).collect();
        if let Some(msg) = first_mismatch(&named) {
            failure = Some(format!("k={k} n={n} {msg}"));
            break;
        }
        checked_to = Some(n);
    }
    match (&failure, checked_to) {
        (Some(msg), _) => {
            all_ok = false;
            writeln!(out, "FAIL oracle: first mismatch at {msg}").map_err(&e)?;
        }
        (None, Some(m)) if m == n_max => {
            writeln!(
                out,
                "PASS oracle: brute force equals recurrences for n=0..={m} (max deviation 0)"
            )
            .map_err(&e)?;
        }
        (None, Some(m)) => {
            writeln!(
                out,
                "PASS oracle: brute force equals recurrences for n=0..={m} (max deviation 0; stopped at oracle cap {})",
                a.oracle_cap
            )
            .map_err(&e)?;
        }
        (None, None) => {
            writeln!(out, "SKIP oracle: F_0 exceeds oracle cap {}", a.oracle_cap).map_err(&e)?;
        }
    }

    // (b) generating-function coefficients against the recurrences
    let f = series::f_series(k, n_max);
    let t = series::t_series(k, n_max);
    let cs: Vec<_> = (1..=k.get())
        .map(|jj| series::c_series(k, jj, n_max))
        .collect::<crate::Result<_>>()?;
    let failure = exact::with_table(k, n_max, |table| {
        for n in 0..=n_max {
            let mut named = vec![
                ("F".to_string(), &f.coeffs()[n], table.f(n).unwrap()),
                ("T".to_string(), &t.coeffs()[n], table.t(n).unwrap()),
            ];
            for (idx, c) in cs.iter().enumerate() {
                named.push((
                    format!("C_{}", idx + 1),
                    &c.coeffs()[n],
                    table.c(n, idx + 1).unwrap(),
                ));
            }
            let named: Vec<_> = named.iter().map(|(s, x, y)| (s.as_str(), *x, *y)).collect();
            if let Some(msg) = first_mismatch(&named) {
                return Some(format!("k={k} n={n} {msg}"));
            }
        }
        None
    });
    match failure {
        Some(msg) => {
            all_ok = false;
            writeln!(out, "FAIL series: first mismatch at {msg}").map_err(&e)?;
        }
        None => writeln!(
            out,
            "PASS series: coefficients equal recurrences for n=0..={n_max} (max deviation 0)"
        )
        .map_err(&e)?,
    }

    // (c) error decay against the subdominant root
    let (lo, hi) = DECAY_WINDOW;
    for stat in Statistic::all(j) {
        let fit = fit_error_decay(k, stat, lo, hi, prec)?;
        if fit.all_exact() {
            writeln!(
                out,
                "PASS decay {stat}: exact agreement for n={lo}..={hi} (max residual 0)"
            )
            .map_err(&e)?;
            continue;
        }
        let ok = fit.slope <= fit.predicted + DECAY_SLACK;
        all_ok &= ok;
        writeln!(
            out,
            "{} decay {stat}: fitted slope {:.4} vs ln(decay_rate) {:.4} over n={lo}..={hi} (max residual {:.3e})",
            if ok { "PASS" } else { "FAIL" },
            fit.slope,
            fit.predicted,
            fit.max_residual,
        )
        .map_err(&e)?;
    }

    finish(out, &a.common)?;
    Ok(all_ok)
}

pub fn cmd_enumerate(a: &EnumerateArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let k = part_bound(a.k)?;
    let n = size("--n", a.n)?;
    let count = exact::count_compositions(k, n);
    if count > BigInt::from(a.oracle_cap) {
        bail!(
            "--oracle-cap: F_n = {count} exceeds the cap of {}",
            a.oracle_cap
        );
    }
    let mut out = sink(&a.common, stdout)?;
    let e = io_err(&a.common);
    let mut total: u64 = 0;
    for c in exact::enumerate_compositions(k, n) {
        match a.encoding {
            Encoding::Parts => writeln!(out, "{c}"),
            Encoding::Rhythm => writeln!(out, "{}", c.to_rhythm()),
        }
        .map_err(&e)?;
        total += 1;
    }
    writeln!(out, "total {total}").map_err(&e)?;
    finish(out, &a.common)
}

pub fn cmd_roots(a: &RootsArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let k = part_bound(a.k)?;
    let prec = precision(&a.precision)?;
    let mut out = sink(&a.common, stdout)?;
    let e = io_err(&a.common);
    if k.get() == 1 {
        writeln!(
            out,
            "k=1: M(z) = z - 1 has the single root 1; there is no subdominant singularity"
        )
        .map_err(&e)?;
        return finish(out, &a.common);
    }
    let s = subdominant_spectrum(k, prec)?;
    let c = |x: &hp::Real| format::real_fixed(x, CONSTANT_DECIMALS);
    writeln!(
        out,
        "k={k} precision_bits={prec} iterations={}",
        s.iterations
    )
    .map_err(&e)?;
    for (z, m) in s.all_roots.iter().zip(s.moduli()) {
        let im = format::real_fixed(&z.im.clone().abs(), CONSTANT_DECIMALS);
        let negative = z.im < hp::int(0, prec) && im.bytes().any(|b| matches!(b, b'1'..=b'9'));
        let sign = if negative { '-' } else { '+' };
        writeln!(out, "root {} {sign} {im}i  |z|={}", c(&z.re), c(&m)).map_err(&e)?;
    }
    let outside = s.moduli().iter().filter(|m| **m > hp::int(1, prec)).count();
    writeln!(out, "roots with |z| > 1: {outside}").map_err(&e)?;
    if let Some(r) = &s.r_prime {
        writeln!(out, "r_prime={}", c(r)).map_err(&e)?;
    }
    writeln!(out, "decay_rate={}", c(&s.decay_rate)).map_err(&e)?;
    finish(out, &a.common)
}
