//! C ABI over `matex`.
//!
//! Matrices and pattern sets are opaque heap handles freed by their `_free`
//! functions. Every fallible call returns a [`MatexStatus`] and writes its
//! result through an out-pointer; on failure the message is available from
//! [`matex_last_error`] until the next failing call on the same thread.
//! Strings returned by the library are freed with [`matex_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use matex::constructions::{cluster_split, construct_k_prime, lower_bound_p_r2, pigeonhole_witness};
use matex::matrix::{avoids_all, contains};
use matex::patterns::{generate_t, pattern_l, pattern_p, TrsParams};
use matex::search::{ex_columns, ex_weight, ColumnExtremalQuery, ExtremalResult, ExtremalValue};
use matex::visibility::{matrix_to_visibility, sweep_edges, BarLayout};
use matex::{Error, Matrix01, PatternSet};

/// Opaque 0-1 matrix.
pub struct MatexMatrix(Matrix01);

/// Opaque nonempty set of patterns.
pub struct MatexPatternSet(PatternSet);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatexStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidArgument = 3,
    /// The search stopped at its node budget; the result is a lower bound.
    BudgetExhausted = 4,
    UnknownBound = 5,
    Precondition = 6,
    Panic = 7,
}

/// Outcome of an extremal search. `value` is meaningful only when
/// `unbounded` is false.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatexExtremal {
    pub unbounded: bool,
    pub value: u64,
    pub exact: bool,
    pub nodes_explored: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> MatexStatus {
    match e {
        Error::Parse { .. } => MatexStatus::Parse,
        Error::UnknownBound { .. } => MatexStatus::UnknownBound,
        Error::Precondition(_) | Error::LayoutRejected(_) => MatexStatus::Precondition,
        Error::InvalidArgument(_)
        | Error::DegeneratePattern { .. }
        | Error::NotPermutation(_)
        | Error::OracleLimit { .. }
        | Error::NoAvoider => MatexStatus::InvalidArgument,
    }
}

struct Fail(MatexStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(MatexStatus::NullPointer, "null pointer argument".into())
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<MatexStatus, Fail>) -> MatexStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MatexStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(MatexStatus::Parse, "input is not valid UTF-8".into()))
}

unsafe fn matrix<'a>(m: *const MatexMatrix) -> Result<&'a Matrix01, Fail> {
    m.as_ref().map(|m| &m.0).ok_or_else(null)
}

unsafe fn pattern_set<'a>(s: *const MatexPatternSet) -> Result<&'a PatternSet, Fail> {
    s.as_ref().map(|s| &s.0).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_matrix(out: *mut *mut MatexMatrix, m: Matrix01) -> Result<MatexStatus, Fail> {
    write(out, Box::into_raw(Box::new(MatexMatrix(m))))?;
    Ok(MatexStatus::Ok)
}

/// Message of the last failed call on this thread. Owned by the library.
#[no_mangle]
pub extern "C" fn matex_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not be freed already, or be null.
#[no_mangle]
pub unsafe extern "C" fn matex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses rows of `0`/`1` characters separated by newlines.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_parse(text: *const c_char, out: *mut *mut MatexMatrix) -> MatexStatus {
    guard(|| write_matrix(out, Matrix01::parse(read_str(text)?)?))
}

/// All-zero matrix.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_new(rows: usize, cols: usize, out: *mut *mut MatexMatrix) -> MatexStatus {
    guard(|| {
        if rows == 0 || cols == 0 {
            return Err(Fail(MatexStatus::InvalidArgument, "dimensions must be positive".into()));
        }
        write_matrix(out, Matrix01::zeros(rows, cols))
    })
}

/// # Safety
/// `m` must come from this library and not be freed already, or be null.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_free(m: *mut MatexMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for a null handle.
///
/// # Safety
/// `m` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_rows(m: *const MatexMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of columns, or 0 for a null handle.
///
/// # Safety
/// `m` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_cols(m: *const MatexMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Number of ones, or 0 for a null handle.
///
/// # Safety
/// `m` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_weight(m: *const MatexMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.weight())
}

fn check_cell(m: &Matrix01, i: usize, j: usize) -> Result<(), Fail> {
    if i >= m.rows() || j >= m.cols() {
        return Err(Fail(
            MatexStatus::InvalidArgument,
            format!("cell ({i}, {j}) outside {}x{}", m.rows(), m.cols()),
        ));
    }
    Ok(())
}

/// Reads the 0-based cell `(i, j)`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_get(m: *const MatexMatrix, i: usize, j: usize, out: *mut bool) -> MatexStatus {
    guard(|| {
        let m = matrix(m)?;
        check_cell(m, i, j)?;
        write(out, m.get(i, j))?;
        Ok(MatexStatus::Ok)
    })
}

/// Writes the 0-based cell `(i, j)`.
///
/// # Safety
/// `m` must be a live handle not used concurrently.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_set(m: *mut MatexMatrix, i: usize, j: usize, value: bool) -> MatexStatus {
    guard(|| {
        let m = &mut m.as_mut().ok_or_else(null)?.0;
        check_cell(m, i, j)?;
        m.set(i, j, value);
        Ok(MatexStatus::Ok)
    })
}

/// Text form of the matrix; free it with [`matex_string_free`].
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_to_string(m: *const MatexMatrix, out: *mut *mut c_char) -> MatexStatus {
    guard(|| {
        let text = CString::new(matrix(m)?.to_text()).expect("matrix text has no NUL");
        write(out, text.into_raw())?;
        Ok(MatexStatus::Ok)
    })
}

/// Parses patterns separated by blank lines.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_patterns_parse(text: *const c_char, out: *mut *mut MatexPatternSet) -> MatexStatus {
    guard(|| {
        let set = PatternSet::parse(read_str(text)?)?;
        write(out, Box::into_raw(Box::new(MatexPatternSet(set))))?;
        Ok(MatexStatus::Ok)
    })
}

/// Set holding a copy of one matrix.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_patterns_single(m: *const MatexMatrix, out: *mut *mut MatexPatternSet) -> MatexStatus {
    guard(|| {
        let set = PatternSet::single(matrix(m)?.clone());
        write(out, Box::into_raw(Box::new(MatexPatternSet(set))))?;
        Ok(MatexStatus::Ok)
    })
}

/// # Safety
/// `s` must come from this library and not be freed already, or be null.
#[no_mangle]
pub unsafe extern "C" fn matex_patterns_free(s: *mut MatexPatternSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of patterns, or 0 for a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn matex_patterns_len(s: *const MatexPatternSet) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Copy of the pattern at `index`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_patterns_get(
    s: *const MatexPatternSet,
    index: usize,
    out: *mut *mut MatexMatrix,
) -> MatexStatus {
    guard(|| {
        let p = pattern_set(s)?
            .patterns()
            .get(index)
            .ok_or_else(|| Fail(MatexStatus::InvalidArgument, format!("no pattern at index {index}")))?;
        write_matrix(out, p.clone())
    })
}

/// `L1`, `L2` or `L3`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_pattern_l(i: u8, out: *mut *mut MatexMatrix) -> MatexStatus {
    guard(|| write_matrix(out, pattern_l(i)?))
}

/// All-ones `r x c` pattern.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_pattern_p(r: usize, c: usize, out: *mut *mut MatexMatrix) -> MatexStatus {
    guard(|| {
        if r == 0 || c == 0 {
            return Err(Fail(MatexStatus::InvalidArgument, "r and c must be positive".into()));
        }
        write_matrix(out, pattern_p(r, c))
    })
}

/// The family `T_{r,s}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_generate_t(r: usize, s: usize, out: *mut *mut MatexPatternSet) -> MatexStatus {
    guard(|| {
        write(
            out,
            Box::into_raw(Box::new(MatexPatternSet(generate_t(TrsParams::new(r, s))))),
        )?;
        Ok(MatexStatus::Ok)
    })
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_contains(
    host: *const MatexMatrix,
    pattern: *const MatexMatrix,
    out: *mut bool,
) -> MatexStatus {
    guard(|| {
        write(out, contains(matrix(host)?, matrix(pattern)?))?;
        Ok(MatexStatus::Ok)
    })
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_avoids_all(
    host: *const MatexMatrix,
    set: *const MatexPatternSet,
    out: *mut bool,
) -> MatexStatus {
    guard(|| {
        write(out, avoids_all(matrix(host)?, pattern_set(set)?))?;
        Ok(MatexStatus::Ok)
    })
}

unsafe fn write_extremal(
    r: ExtremalResult,
    out: *mut MatexExtremal,
    witness: *mut *mut MatexMatrix,
) -> Result<MatexStatus, Fail> {
    let c = MatexExtremal {
        unbounded: r.value == ExtremalValue::Unbounded,
        value: r.value.finite().unwrap_or(0),
        exact: r.exact,
        nodes_explored: r.nodes_explored,
    };
    write(out, c)?;
    if !witness.is_null() {
        let w = r
            .witness
            .map_or(ptr::null_mut(), |m| Box::into_raw(Box::new(MatexMatrix(m))));
        witness.write(w);
    }
    Ok(if r.exact {
        MatexStatus::Ok
    } else {
        MatexStatus::BudgetExhausted
    })
}

/// Most ones in an `m x n` matrix avoiding every pattern of `set`. With a
/// non-null `witness`, an extremal matrix (or null) is written there.
/// `budget` caps search nodes; 0 means unlimited.
///
/// # Safety
/// `set` must be live; `out` must be writable; `witness` writable or null.
#[no_mangle]
pub unsafe extern "C" fn matex_ex_weight(
    m: usize,
    n: usize,
    set: *const MatexPatternSet,
    budget: u64,
    out: *mut MatexExtremal,
    witness: *mut *mut MatexMatrix,
) -> MatexStatus {
    guard(|| {
        let budget = if budget == 0 { u64::MAX } else { budget };
        write_extremal(ex_weight(m, n, pattern_set(set)?, budget)?, out, witness)
    })
}

/// Most columns of an `m`-row matrix with at least `k` ones per column
/// avoiding `set`. Same conventions as [`matex_ex_weight`].
///
/// # Safety
/// `set` must be live; `out` must be writable; `witness` writable or null.
#[no_mangle]
pub unsafe extern "C" fn matex_ex_columns(
    m: usize,
    k: usize,
    set: *const MatexPatternSet,
    budget: u64,
    out: *mut MatexExtremal,
    witness: *mut *mut MatexMatrix,
) -> MatexStatus {
    guard(|| {
        let budget = if budget == 0 { u64::MAX } else { budget };
        let q = ColumnExtremalQuery::new(m, k, pattern_set(set)?.clone())?;
        write_extremal(ex_columns(&q, budget)?, out, witness)
    })
}

/// # Safety
/// `a` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_cluster_split(
    a: *const MatexMatrix,
    k: usize,
    out: *mut *mut MatexMatrix,
) -> MatexStatus {
    guard(|| write_matrix(out, cluster_split(matrix(a)?, k)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_k_prime(m: usize, k: usize, out: *mut *mut MatexMatrix) -> MatexStatus {
    guard(|| write_matrix(out, construct_k_prime(m, k)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_pigeonhole(m: usize, k: usize, c: usize, out: *mut *mut MatexMatrix) -> MatexStatus {
    guard(|| write_matrix(out, pigeonhole_witness(m, k, c)?))
}

/// Witness matrix of the greedy-coloring lower bound for `P_{r,2}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_lower_bound_p_r2(
    m: usize,
    r: usize,
    k: usize,
    out: *mut *mut MatexMatrix,
) -> MatexStatus {
    guard(|| write_matrix(out, lower_bound_p_r2(m, r, k)?.state.matrix))
}

/// Number of edges of the bar `s`-visibility hypergraph of a layout given
/// as `y x_left x_right` lines.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_layout_edge_count(text: *const c_char, s: usize, out: *mut usize) -> MatexStatus {
    guard(|| {
        let layout = BarLayout::parse(read_str(text)?, s)?;
        write(out, sweep_edges(&layout).len())?;
        Ok(MatexStatus::Ok)
    })
}

/// Largest witness count of any edge in the visibility hypergraph of `m`
/// with respect to `T_{r,s}`.
///
/// # Safety
/// `m` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn matex_matrix_max_multiplicity(
    m: *const MatexMatrix,
    r: usize,
    s: usize,
    out: *mut usize,
) -> MatexStatus {
    guard(|| {
        write(out, matrix_to_visibility(matrix(m)?, r, s)?.max_multiplicity())?;
        Ok(MatexStatus::Ok)
    })
}
