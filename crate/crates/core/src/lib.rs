//! Exact and asymptotic statistics of integer compositions whose parts are
//! bounded by a fixed `k`.
//!
//! Three independent routes compute the same quantities and check each other:
//!
//! - [`exact`]: linear recurrences over big integers, plus a brute-force
//!   enumeration oracle and the composition/rhythm-pattern bijection;
//! - [`series`]: coefficient extraction from truncated generating functions;
//! - [`asymptotics`]: closed forms built from the dominant root of
//!   `x^k - x^(k-1) - ... - 1`, together with an all-roots solver that bounds
//!   the exponential error decay.
//!
//! [`tables`] assembles and renders comparison tables, and [`cli`] wires
//! everything into the `compositions` binary.

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod exact;
pub mod format;
pub mod hp;
pub mod series;
pub mod tables;

pub use asymptotics::{
    dominant_root, fit_error_decay, subdominant_spectrum, DecayFit, DominantRootData, SpectrumData,
    Statistic,
};
pub use error::{Error, Result};
pub use exact::{
    average_part_count, average_parts, brute_stats, checked_n, count_compositions,
    enumerate_compositions, exact_stats, part_count, total_parts, Composition, ExactStats,
    PartBound, Pulse, RhythmPattern, DEFAULT_ORACLE_CAP,
};
pub use series::TruncatedSeries;
pub use tables::{StatTable, TableFormat, TableKind};

/// Default working precision, in bits, for the asymptotic engine.
pub const DEFAULT_PRECISION_BITS: usize = 128;
