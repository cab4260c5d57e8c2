//! C ABI over the `compositions` crate.
//!
//! Every fallible function returns a [`CompStatus`] and writes its result
//! through an out-pointer. Big integers and reals cross the boundary as
//! NUL-terminated decimal strings that the caller releases with
//! [`comp_string_free`]. The message for the most recent failure on the
//! calling thread is available from [`comp_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use compositions::asymptotics::{
    dominant_root, subdominant_spectrum, DominantRootData, SpectrumData,
};
use compositions::exact::{self, checked_n, PartBound};
use compositions::{format, Error};
use num_rational::BigRational;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidPartBound = 2,
    NegativeN = 3,
    PartOutOfRange = 4,
    InvalidDecimals = 5,
    PrecisionTooLow = 6,
    NoConvergence = 7,
    RootStructure = 8,
    Internal = 99,
}

/// Statistic selector for [`comp_roots_approx`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompStatistic {
    /// Number of compositions.
    F = 0,
    /// Total number of parts.
    T = 1,
    /// Average number of parts.
    A = 2,
    /// Number of parts equal to `j`.
    C = 3,
    /// Average number of parts equal to `j`.
    Aj = 4,
}

/// Opaque handle for exact counts with parts bounded by `k`.
pub struct CompExact {
    k: PartBound,
}

/// Opaque handle for the dominant root and the root spectrum of one `k`.
pub struct CompRoots {
    dominant: DominantRootData,
    spectrum: SpectrumData,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CompStatus {
    match e {
        Error::ZeroPartBound => CompStatus::InvalidPartBound,
        Error::NegativeN(_) => CompStatus::NegativeN,
        Error::PartOutOfRange { .. } => CompStatus::PartOutOfRange,
        Error::InvalidDecimals(_) => CompStatus::InvalidDecimals,
        Error::PrecisionTooLow(_) => CompStatus::PrecisionTooLow,
        Error::NoConvergence(_) => CompStatus::NoConvergence,
        Error::RootStructure(_) => CompStatus::RootStructure,
        _ => CompStatus::Internal,
    }
}

struct Failure(CompStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Outcome<()>) -> CompStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            clear_last_error();
            CompStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            CompStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CompStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|e| Failure(CompStatus::Internal, e.to_string()))?;
    out.write(c.into_raw());
    Ok(())
}

fn check_decimals(decimals: u32) -> Outcome<u32> {
    if decimals == 0 {
        return Err(Error::InvalidDecimals(decimals).into());
    }
    Ok(decimals)
}

/// Message for the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next call into this library on the
/// same thread. Do not free it.
#[no_mangle]
pub extern "C" fn comp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn comp_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("version contains NUL"),
        };
    VERSION.as_ptr()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn comp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates an exact-count handle for parts in `1..=k`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_exact_new(k: i64, out: *mut *mut CompExact) -> CompStatus {
    guard(|| {
        let k = PartBound::from_signed(k)?;
        put(out, Box::into_raw(Box::new(CompExact { k })))
    })
}

/// Destroys a handle from [`comp_exact_new`]. NULL is ignored.
///
/// # Safety
/// `h` must come from [`comp_exact_new`] and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn comp_exact_free(h: *mut CompExact) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// `F_n` as a decimal string.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_exact_count(
    h: *const CompExact,
    n: i64,
    out: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let n = checked_n(n)?;
        put_string(out, exact::count_compositions(h.k, n).to_string())
    })
}

/// `T_n`, the total number of parts, as a decimal string.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_exact_total_parts(
    h: *const CompExact,
    n: i64,
    out: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let n = checked_n(n)?;
        put_string(out, exact::total_parts(h.k, n).to_string())
    })
}

/// `C_{n,j}`, the number of parts equal to `j`, as a decimal string.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_exact_part_count(
    h: *const CompExact,
    n: i64,
    j: i64,
    out: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let n = checked_n(n)?;
        let j = h.k.checked_part(j)?;
        put_string(out, exact::part_count(h.k, n, j)?.to_string())
    })
}

/// `A_n` as an exact fraction `p/q` (or `p`) in `fraction`, and rounded
/// half-even to `decimals` places in `fixed`. Either out-pointer may be NULL.
///
/// # Safety
/// `h` must be a live handle; non-NULL out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_exact_average_parts(
    h: *const CompExact,
    n: i64,
    decimals: u32,
    fraction: *mut *mut c_char,
    fixed: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let n = checked_n(n)?;
        let decimals = check_decimals(decimals)?;
        let a = exact::average_parts(h.k, n);
        write_average(&a, decimals, fraction, fixed)
    })
}

/// `A_{n,j}` in the same two renderings as [`comp_exact_average_parts`].
///
/// # Safety
/// `h` must be a live handle; non-NULL out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_exact_average_part_count(
    h: *const CompExact,
    n: i64,
    j: i64,
    decimals: u32,
    fraction: *mut *mut c_char,
    fixed: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let n = checked_n(n)?;
        let j = h.k.checked_part(j)?;
        let decimals = check_decimals(decimals)?;
        let a = exact::average_part_count(h.k, n, j)?;
        write_average(&a, decimals, fraction, fixed)
    })
}

unsafe fn write_average(
    a: &BigRational,
    decimals: u32,
    fraction: *mut *mut c_char,
    fixed: *mut *mut c_char,
) -> Outcome<()> {
    if fraction.is_null() && fixed.is_null() {
        return Err(null("both out-pointers"));
    }
    if !fraction.is_null() {
        put_string(fraction, format::fraction(a))?;
    }
    if !fixed.is_null() {
        put_string(fixed, format::rational_fixed(a, decimals))?;
    }
    Ok(())
}

/// Computes the dominant root and the full root spectrum of
/// `z^k - z^(k-1) - ... - 1` at `precision_bits` (at least 53).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_roots_new(
    k: i64,
    precision_bits: u32,
    out: *mut *mut CompRoots,
) -> CompStatus {
    guard(|| {
        let k = PartBound::from_signed(k)?;
        let prec = precision_bits as usize;
        let dominant = dominant_root(k, prec)?;
        let spectrum = subdominant_spectrum(k, prec)?;
        put(
            out,
            Box::into_raw(Box::new(CompRoots { dominant, spectrum })),
        )
    })
}

/// Destroys a handle from [`comp_roots_new`]. NULL is ignored.
///
/// # Safety
/// `h` must come from [`comp_roots_new`] and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn comp_roots_free(h: *mut CompRoots) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of roots of the characteristic polynomial, which is `k`.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_roots_count(h: *const CompRoots, out: *mut usize) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        put(out, h.spectrum.all_roots.len())
    })
}

/// Root `index` (sorted by descending modulus) as a pair of doubles.
///
/// # Safety
/// `h` must be a live handle; `re` and `im` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_roots_root(
    h: *const CompRoots,
    index: usize,
    re: *mut f64,
    im: *mut f64,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let z = h.spectrum.all_roots.get(index).ok_or_else(|| {
            Failure(
                CompStatus::PartOutOfRange,
                format!(
                    "root index {index} out of range 0..{}",
                    h.spectrum.all_roots.len()
                ),
            )
        })?;
        put(re, z.re.to_f64().value())?;
        put(im, z.im.to_f64().value())
    })
}

/// The dominant root `phi` rounded half-even to `decimals` places.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_roots_phi(
    h: *const CompRoots,
    decimals: u32,
    out: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let decimals = check_decimals(decimals)?;
        put_string(out, format::real_fixed(&h.dominant.phi, decimals))
    })
}

/// Largest modulus among the non-dominant roots (0 when `k = 1`).
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_roots_decay_rate(
    h: *const CompRoots,
    decimals: u32,
    out: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let decimals = check_decimals(decimals)?;
        put_string(out, format::real_fixed(&h.spectrum.decay_rate, decimals))
    })
}

/// Closed-form approximation of `stat` at `n`, rounded to `decimals` places.
/// `j` is only read for [`CompStatistic::C`] and [`CompStatistic::Aj`].
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn comp_roots_approx(
    h: *const CompRoots,
    stat: CompStatistic,
    n: i64,
    j: i64,
    decimals: u32,
    out: *mut *mut c_char,
) -> CompStatus {
    guard(|| {
        let h = handle(h, "handle")?;
        let n = checked_n(n)?;
        let decimals = check_decimals(decimals)?;
        let d = &h.dominant;
        let value = match stat {
            CompStatistic::F => d.approx_f(n),
            CompStatistic::T => d.approx_t(n),
            CompStatistic::A => d.approx_a(n),
            CompStatistic::C => d.approx_c(n, d.k.checked_part(j)?)?,
            CompStatistic::Aj => d.approx_aj(n, d.k.checked_part(j)?)?,
        };
        put_string(out, format::real_fixed(&value, decimals))
    })
}
