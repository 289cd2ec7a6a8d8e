//! C interface to `stern-core`.
//!
//! Every function returns a [`SternStatus`]; results come back through out
//! pointers. Objects are opaque handles released with their `_free`
//! function, and strings returned by the library are released with
//! [`stern_string_free`]. On failure, [`stern_last_error_message`] describes
//! the most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::json;
use stern_core::linalg::RationalMatrix;
use stern_core::num::BigRational;
use stern_core::poly::{phi_matrix, SymQuotient};
use stern_core::recurrence::{default_terms, mine_all_monomials};
use stern_core::report::{self, params, ReportDocument};
use stern_core::spectra::verify_range;
use stern_core::stern::{power_sum_sequence, stern_row, SternRow};
use stern_core::Error;

/// Largest degree accepted by the matrix, verification and mining calls.
pub const STERN_MAX_DEGREE: u64 = 100;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SternStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ResourceLimit = 3,
    /// The computation ran but a check failed; the output is still set.
    VerificationFailed = 4,
    /// A value does not fit the requested machine type.
    Overflow = 5,
    Panic = 6,
}

/// A row of the Stern array.
pub struct SternRowHandle {
    row: SternRow,
}

/// An exact rational matrix.
pub struct SternMatrixHandle {
    matrix: RationalMatrix,
}

/// A finite sequence of exact rationals.
pub struct SternSequenceHandle {
    values: Vec<BigRational>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: SternStatus, msg: &str) -> SternStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SternStatus {
    let status = match e {
        Error::RowOutOfRange { n, .. } if n > 0 => SternStatus::ResourceLimit,
        Error::ResourceLimit(_) => SternStatus::ResourceLimit,
        _ => SternStatus::InvalidArgument,
    };
    fail(status, &e.to_string())
}

/// Runs `body`, converting panics into [`SternStatus::Panic`].
fn guard(body: impl FnOnce() -> SternStatus) -> SternStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(SternStatus::Panic, &format!("internal error: {msg}"))
        }
    }
}

fn out_string(out: *mut *mut c_char, s: String) -> SternStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: callers check `out` for null before calling this.
            unsafe { *out = c.into_raw() };
            SternStatus::Ok
        }
        Err(_) => fail(SternStatus::Panic, "string contained a nul byte"),
    }
}

fn out_handle<T>(out: *mut *mut T, value: T) {
    // SAFETY: callers check `out` for null before calling this.
    unsafe { *out = Box::into_raw(Box::new(value)) };
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(SternStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn stern_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stern_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Row `n` of the Stern array, `1 <= n <= 24`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn stern_row_new(n: u32, out: *mut *mut SternRowHandle) -> SternStatus {
    guard(|| {
        non_null!(out);
        match stern_row(n) {
            Ok(row) => {
                out_handle(out, SternRowHandle { row });
                SternStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of entries, `2^n − 1`.
///
/// # Safety
/// `row` must be a live handle and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stern_row_len(row: *const SternRowHandle, len: *mut usize) -> SternStatus {
    guard(|| {
        non_null!(row, len);
        *len = (*row).row.len();
        SternStatus::Ok
    })
}

/// Entry `k` (1-based) as an unsigned 64-bit integer.
///
/// # Safety
/// `row` must be a live handle and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stern_row_entry(
    row: *const SternRowHandle,
    k: usize,
    value: *mut u64,
) -> SternStatus {
    guard(|| {
        non_null!(row, value);
        let r = &(*row).row;
        if k == 0 || k > r.len() {
            return fail(
                SternStatus::InvalidArgument,
                &format!("entry index {k} outside 1..={}", r.len()),
            );
        }
        match u64::try_from(r.entry(k)) {
            Ok(v) => {
                *value = v;
                SternStatus::Ok
            }
            Err(_) => fail(SternStatus::Overflow, "entry does not fit in 64 bits"),
        }
    })
}

/// The row as a JSON report document.
///
/// # Safety
/// `row` must be a live handle and `json_out` a valid pointer; free the result
/// with [`stern_string_free`].
#[no_mangle]
pub unsafe extern "C" fn stern_row_to_json(
    row: *const SternRowHandle,
    json_out: *mut *mut c_char,
) -> SternStatus {
    guard(|| {
        non_null!(row, json_out);
        let r = &(*row).row;
        let doc = ReportDocument::new("row", params([("n", json!(r.index()))]), report::row_results(r));
        out_string(json_out, doc.render())
    })
}

/// # Safety
/// `row` must be null or a handle from [`stern_row_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stern_row_free(row: *mut SternRowHandle) {
    if !row.is_null() {
        drop(Box::from_raw(row));
    }
}

/// The transfer matrix for degree `r`, or with `sym` set its action on
/// the quotient by `f(x, y) ~ f(y, x)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stern_phi_matrix(
    r: u32,
    sym: bool,
    out: *mut *mut SternMatrixHandle,
) -> SternStatus {
    guard(|| {
        non_null!(out);
        if u64::from(r) > STERN_MAX_DEGREE {
            return fail(
                SternStatus::ResourceLimit,
                &format!("degree {r} exceeds {STERN_MAX_DEGREE}"),
            );
        }
        let r = r as usize;
        let matrix = if sym { SymQuotient::new(r).phi_sym } else { phi_matrix(r) };
        out_handle(out, SternMatrixHandle { matrix });
        SternStatus::Ok
    })
}

/// # Safety
/// `m` must be a live handle; `rows` and `cols` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn stern_matrix_shape(
    m: *const SternMatrixHandle,
    rows: *mut usize,
    cols: *mut usize,
) -> SternStatus {
    guard(|| {
        non_null!(m, rows, cols);
        *rows = (*m).matrix.rows();
        *cols = (*m).matrix.cols();
        SternStatus::Ok
    })
}

/// Entry `(i, j)` (0-based) as a signed 64-bit integer.
///
/// # Safety
/// `m` must be a live handle and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stern_matrix_entry(
    m: *const SternMatrixHandle,
    i: usize,
    j: usize,
    value: *mut i64,
) -> SternStatus {
    guard(|| {
        non_null!(m, value);
        let mat = &(*m).matrix;
        if i >= mat.rows() || j >= mat.cols() {
            return fail(SternStatus::InvalidArgument, &format!("index ({i}, {j}) out of range"));
        }
        let x = &mat[(i, j)];
        if !x.is_integer() {
            return fail(SternStatus::Overflow, "entry is not an integer");
        }
        match i64::try_from(x.to_integer()) {
            Ok(v) => {
                *value = v;
                SternStatus::Ok
            }
            Err(_) => fail(SternStatus::Overflow, "entry does not fit in 64 bits"),
        }
    })
}

/// The matrix as text, e.g. `[[3,2],[6,4]]`.
///
/// # Safety
/// `m` must be a live handle and `text` a valid pointer; free the result
/// with [`stern_string_free`].
#[no_mangle]
pub unsafe extern "C" fn stern_matrix_to_string(
    m: *const SternMatrixHandle,
    text: *mut *mut c_char,
) -> SternStatus {
    guard(|| {
        non_null!(m, text);
        out_string(text, (*m).matrix.to_string())
    })
}

/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stern_matrix_free(m: *mut SternMatrixHandle) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// `S_1(f), ..., S_nmax(f)` for a form written as on the command line,
/// e.g. `"x^2y"` or `"coeffs=[1,0,-1]"`.
///
/// # Safety
/// `form` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stern_power_sums(
    form: *const c_char,
    n_max: u32,
    out: *mut *mut SternSequenceHandle,
) -> SternStatus {
    guard(|| {
        non_null!(form, out);
        let Ok(spec) = CStr::from_ptr(form).to_str() else {
            return fail(SternStatus::InvalidArgument, "form is not valid UTF-8");
        };
        if n_max == 0 {
            return fail(SternStatus::InvalidArgument, "n_max must be at least 1");
        }
        let values = report::parse_form(spec).and_then(|f| power_sum_sequence(&f, n_max));
        match values {
            Ok(values) => {
                out_handle(out, SternSequenceHandle { values });
                SternStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `seq` must be a live handle and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stern_sequence_len(
    seq: *const SternSequenceHandle,
    len: *mut usize,
) -> SternStatus {
    guard(|| {
        non_null!(seq, len);
        *len = (*seq).values.len();
        SternStatus::Ok
    })
}

/// Term `i` (0-based, so term 0 is `S_1`) as a decimal string `p` or `p/q`.
///
/// # Safety
/// `seq` must be a live handle and `text` a valid pointer; free the result
/// with [`stern_string_free`].
#[no_mangle]
pub unsafe extern "C" fn stern_sequence_entry(
    seq: *const SternSequenceHandle,
    i: usize,
    text: *mut *mut c_char,
) -> SternStatus {
    guard(|| {
        non_null!(seq, text);
        let values = &(*seq).values;
        match values.get(i) {
            Some(v) => out_string(text, v.to_string()),
            None => fail(SternStatus::InvalidArgument, &format!("term index {i} out of range")),
        }
    })
}

/// # Safety
/// `seq` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stern_sequence_free(seq: *mut SternSequenceHandle) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Verification reports for `r_min..=r_max` (at most 100) as a JSON report
/// document. Returns [`SternStatus::VerificationFailed`] with the document
/// still set when any check fails.
///
/// # Safety
/// `json_out` must be a valid pointer; free the result with
/// [`stern_string_free`].
#[no_mangle]
pub unsafe extern "C" fn stern_verify_json(
    r_min: u32,
    r_max: u32,
    json_out: *mut *mut c_char,
) -> SternStatus {
    guard(|| {
        non_null!(json_out);
        let (lo, hi) = (u64::from(r_min), u64::from(r_max));
        if hi > STERN_MAX_DEGREE {
            return fail(
                SternStatus::ResourceLimit,
                &format!("r_max {hi} exceeds {STERN_MAX_DEGREE}"),
            );
        }
        match verify_range(lo, hi) {
            Ok(reports) => {
                let ok = reports.iter().all(|r| r.passed());
                let doc = ReportDocument::new(
                    "verify",
                    params([("r_min", json!(lo)), ("r_max", json!(hi))]),
                    report::verify_results(&reports),
                );
                let status = out_string(json_out, doc.render());
                if status == SternStatus::Ok && !ok {
                    return fail(SternStatus::VerificationFailed, "some checks failed");
                }
                status
            }
            Err(e) => from_error(e),
        }
    })
}

/// Minimal recurrences for every monomial class of degree `r` as a JSON
/// report document. `n_terms = 0` picks the default horizon.
///
/// # Safety
/// `json_out` must be a valid pointer; free the result with
/// [`stern_string_free`].
#[no_mangle]
pub unsafe extern "C" fn stern_mine_json(
    r: u32,
    n_terms: u32,
    json_out: *mut *mut c_char,
) -> SternStatus {
    guard(|| {
        non_null!(json_out);
        let r = u64::from(r);
        if r > STERN_MAX_DEGREE {
            return fail(SternStatus::ResourceLimit, &format!("degree {r} exceeds {STERN_MAX_DEGREE}"));
        }
        let table = (if n_terms == 0 { default_terms(r) } else { Ok(n_terms) })
            .and_then(|n| mine_all_monomials(r, n));
        match table {
            Ok(t) => {
                let doc = ReportDocument::new(
                    "mine",
                    params([("r", json!(r)), ("terms", json!(t.n_terms))]),
                    report::mine_results(&t),
                );
                let status = out_string(json_out, doc.render());
                if status == SternStatus::Ok && !t.passed() {
                    return fail(SternStatus::VerificationFailed, "some checks failed");
                }
                status
            }
            Err(e) => from_error(e),
        }
    })
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn stern_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
