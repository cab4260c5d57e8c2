//! Comparison and multiplicity tables, rendered as CSV, JSON or markdown.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::asymptotics::{dominant_root, DominantRootData};
use crate::error::{Error, Result};
use crate::exact::{self, PartBound};
use crate::format;
use crate::hp;

pub const DEFAULT_DECIMALS: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `C_{n,1..k}` per row.
    Multiplicity,
    /// Exact statistics next to their closed-form approximations.
    Comparison,
}

impl FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "multiplicity" => Ok(TableKind::Multiplicity),
            "comparison" => Ok(TableKind::Comparison),
            other => Err(format!("unknown table kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    Csv,
    Json,
    #[default]
    Markdown,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
            TableFormat::Markdown => "markdown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityRow {
    pub n: usize,
    /// `c[j - 1] = C_{n,j}`
    pub c: Vec<BigInt>,
}

/// Approximations are stored as the exact dyadic value of the
/// high-precision result, so rendering is a pure rounding step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub n: usize,
    pub f: BigInt,
    pub f_appr: BigRational,
    pub t: BigInt,
    pub t_appr: BigRational,
    pub a: BigRational,
    pub a_appr: BigRational,
    pub c: BigInt,
    pub c_appr: BigRational,
    pub a_j: BigRational,
    pub a_j_appr: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableBody {
    Multiplicity(Vec<MultiplicityRow>),
    Comparison { j: usize, rows: Vec<ComparisonRow> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub k: PartBound,
    pub decimals: u32,
    pub body: TableBody,
}

/// Rows `n = 0..=n_max` of `C_{n,j}` for every `j` in `1..=k`.
pub fn build_multiplicity_table(k: PartBound, n_max: usize) -> StatTable {
    let rows = exact::with_table(k, n_max, |t| {
        (0..=n_max)
            .map(|n| MultiplicityRow {
                n,
                c: (1..=k.get()).map(|j| t.c(n, j).unwrap().clone()).collect(),
            })
            .collect()
    });
    StatTable {
        k,
        decimals: DEFAULT_DECIMALS,
        body: TableBody::Multiplicity(rows),
    }
}

/// Comparison table with the part-size columns fixed at `j = 1`.
pub fn build_comparison_table(
    k: PartBound,
    n_max: usize,
    decimals: u32,
    precision_bits: usize,
) -> Result<StatTable> {
    build_comparison_table_for_part(k, n_max, 1, decimals, precision_bits)
}

pub fn build_comparison_table_for_part(
    k: PartBound,
    n_max: usize,
    j: usize,
    decimals: u32,
    precision_bits: usize,
) -> Result<StatTable> {
    k.check_part(j)?;
    if decimals < 1 {
        return Err(Error::InvalidDecimals(decimals));
    }
    let d = dominant_root(k, precision_bits)?;
    let rows = (0..=n_max)
        .map(|n| comparison_row(&d, n, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(StatTable {
        k,
        decimals,
        body: TableBody::Comparison { j, rows },
    })
}

fn comparison_row(d: &DominantRootData, n: usize, j: usize) -> Result<ComparisonRow> {
    let s = exact::exact_stats(d.k, n);
    let q = |x: hp::Real| hp::to_rational(&x);
    Ok(ComparisonRow {
        n,
        f_appr: q(d.approx_f(n)),
        t_appr: q(d.approx_t(n)),
        a_appr: q(d.approx_a(n)),
        c_appr: q(d.approx_c(n, j)?),
        a_j_appr: q(d.approx_aj(n, j)?),
        c: s.c[j - 1].clone(),
        a_j: s.a_j[j - 1].clone(),
        f: s.f,
        t: s.t,
        a: s.a,
    })
}

impl StatTable {
    pub fn kind(&self) -> TableKind {
        match self.body {
            TableBody::Multiplicity(_) => TableKind::Multiplicity,
            TableBody::Comparison { .. } => TableKind::Comparison,
        }
    }

    pub fn len(&self) -> usize {
        match &self.body {
            TableBody::Multiplicity(rows) => rows.len(),
            TableBody::Comparison { rows, .. } => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Machine-facing column keys (CSV header and JSON keys).
    pub fn columns(&self) -> Vec<String> {
        match &self.body {
            TableBody::Multiplicity(_) => std::iter::once("n".to_string())
                .chain((1..=self.k.get()).map(|j| format!("C{j}")))
                .collect(),
            TableBody::Comparison { j, .. } => [
                "n".to_string(),
                "F".into(),
                "F_appr".into(),
                "T".into(),
                "T_appr".into(),
                "A".into(),
                "A_appr".into(),
                format!("C{j}"),
                format!("C{j}_appr"),
                format!("A{j}"),
                format!("A{j}_appr"),
            ]
            .into(),
        }
    }

    /// Column titles for the markdown layout.
    fn titles(&self) -> Vec<String> {
        match &self.body {
            TableBody::Multiplicity(_) => std::iter::once("n".to_string())
                .chain((1..=self.k.get()).map(|j| format!("C_{{n,{j}}}")))
                .collect(),
            TableBody::Comparison { j, .. } => {
                let mut out = vec!["n".to_string()];
                for name in [
                    "F_n".to_string(),
                    "T_n".into(),
                    "A_n".into(),
                    format!("C_{{n,{j}}}"),
                    format!("A_{{n,{j}}}"),
                ] {
                    out.push(name);
                    out.push("Appr.".into());
                }
                out
            }
        }
    }

    /// Rendered cell strings, row by row.
    pub fn cells(&self) -> Vec<Vec<String>> {
        let dec = |v: &BigRational| format::rational_fixed(v, self.decimals);
        match &self.body {
            TableBody::Multiplicity(rows) => rows
                .iter()
                .map(|r| {
                    std::iter::once(r.n.to_string())
                        .chain(r.c.iter().map(ToString::to_string))
                        .collect()
                })
                .collect(),
            TableBody::Comparison { rows, .. } => rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.f.to_string(),
                        dec(&r.f_appr),
                        r.t.to_string(),
                        dec(&r.t_appr),
                        dec(&r.a),
                        dec(&r.a_appr),
                        r.c.to_string(),
                        dec(&r.c_appr),
                        dec(&r.a_j),
                        dec(&r.a_j_appr),
                    ]
                })
                .collect(),
        }
    }

    /// Indices of columns that hold exact integers.
    pub fn integer_columns(&self) -> Vec<usize> {
        match self.body {
            TableBody::Multiplicity(_) => (0..=self.k.get()).collect(),
            TableBody::Comparison { .. } => vec![0, 1, 3, 7],
        }
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.render_csv(),
            TableFormat::Json => self.render_json(),
            TableFormat::Markdown => self.render_markdown(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(self.columns()).expect("write to memory");
        for row in self.cells() {
            w.write_record(&row).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
    }

    fn render_json(&self) -> String {
        let columns = self.columns();
        let rows: Vec<serde_json::Value> = self
            .cells()
            .into_iter()
            .map(|row| {
                let obj = columns
                    .iter()
                    .zip(row)
                    .map(|(key, cell)| {
                        let num = serde_json::Number::from_str(&cell).expect("numeric cell");
                        (key.clone(), serde_json::Value::Number(num))
                    })
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&rows).expect("serializable");
        out.push('\n');
        out
    }

    fn render_markdown(&self) -> String {
        let mut out = String::new();
        let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
        let titles = self.titles();
        out.push_str(&line(&titles));
        out.push_str(&line(&vec!["---".to_string(); titles.len()]));
        for row in self.cells() {
            out.push_str(&line(&row));
        }
        out
    }
}

/// Header and records of a CSV document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn read_csv(text: &str) -> Result<CsvTable> {
    let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = r
        .headers()
        .map_err(|e| Error::Csv(e.to_string()))?
        .iter()
        .map(String::from)
        .collect();
    let rows = r
        .records()
        .map(|rec| {
            rec.map(|rec| rec.iter().map(String::from).collect())
                .map_err(|e| Error::Csv(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CsvTable { header, rows })
}
