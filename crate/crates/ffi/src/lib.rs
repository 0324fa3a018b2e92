//! C ABI for `chromsym`.
//!
//! Objects cross the boundary as opaque handles released by their `_free`
//! function. Every fallible call returns a [`ChromsymStatus`]; on failure the
//! message is available from [`chromsym_last_error`] on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with [`chromsym_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chromsym::chromatic::{chromatic_symfunc, trace_of_graph};
use chromsym::graph::Graph;
use chromsym::poset::Poset;
use chromsym::tableaux::{count_tableaux, Predicate};
use chromsym::tnn::{immanant, parse_csv, Matrix, PlanarNetwork};
use chromsym::trace::{trace_basis, TraceBasis};
use chromsym::verify::{run_suite, Suite, SuiteOptions};
use chromsym::{Basis, Error, Partition, SymFunc};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    SizeMismatch = 4,
    InvalidArgument = 5,
    NotSymmetric = 6,
    LimitExceeded = 7,
    Other = 8,
    Panic = 9,
}

impl From<&Error> for ChromsymStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => ChromsymStatus::Parse,
            Error::SizeMismatch { .. } => ChromsymStatus::SizeMismatch,
            Error::NotSymmetric { .. } => ChromsymStatus::NotSymmetric,
            Error::LimitExceeded(_) => ChromsymStatus::LimitExceeded,
            Error::InvalidArgument(_)
            | Error::CyclicRelation(_)
            | Error::NotUnitIntervalOrder
            | Error::NonCanonicalLabeling
            | Error::NotNaturallyLabeled
            | Error::Not312Avoiding(_)
            | Error::NonSmooth(_)
            | Error::Cyclic => ChromsymStatus::InvalidArgument,
            _ => ChromsymStatus::Other,
        }
    }
}

pub struct ChromsymPoset(Poset);
pub struct ChromsymGraph(Graph);
pub struct ChromsymSymFunc(SymFunc);
pub struct ChromsymMatrix(Matrix);
pub struct ChromsymNetwork(PlanarNetwork);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(ChromsymStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guarded(f: impl FnOnce() -> Outcome<()>) -> ChromsymStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ChromsymStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ChromsymStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(ChromsymStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(ChromsymStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Outcome<&'a T> {
    p.as_ref().ok_or_else(|| Failure(ChromsymStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(ChromsymStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(ChromsymStatus::NullPointer, "null output pointer".into()));
    }
    *out = CString::new(s).map_err(|e| Failure(ChromsymStatus::Other, e.to_string()))?.into_raw();
    Ok(())
}

fn from_json<T: serde::de::DeserializeOwned>(s: &str) -> Outcome<T> {
    serde_json::from_str(s).map_err(|e| Failure(ChromsymStatus::Parse, e.to_string()))
}

fn to_json<T: serde::Serialize>(v: &T) -> Outcome<String> {
    serde_json::to_string(v).map_err(|e| Failure(ChromsymStatus::Other, e.to_string()))
}

unsafe fn free_handle<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn chromsym_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn chromsym_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn chromsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse `{"n": .., "relations": [[a, b], ..]}`.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_poset_from_json(json: *const c_char, out: *mut *mut ChromsymPoset) -> ChromsymStatus {
    guarded(|| put(out, ChromsymPoset(from_json(text(json)?)?)))
}

/// # Safety
/// `p` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chromsym_poset_free(p: *mut ChromsymPoset) {
    free_handle(p)
}

/// # Safety
/// `p` must be a valid poset handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_poset_incomparability_graph(p: *const ChromsymPoset, out: *mut *mut ChromsymGraph) -> ChromsymStatus {
    guarded(|| put(out, ChromsymGraph(handle(p)?.0.incomparability_graph())))
}

/// Number of P-tableaux of shape `lambda` (e.g. `"3,2"`) satisfying `predicate` (e.g. `"standard-and-cyclic"`).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_poset_count_tableaux(
    p: *const ChromsymPoset,
    lambda: *const c_char,
    predicate: *const c_char,
    out: *mut u64,
) -> ChromsymStatus {
    guarded(|| {
        let p = &handle(p)?.0;
        let l: Partition = text(lambda)?.parse()?;
        let pred: Predicate = text(predicate)?.parse()?;
        if l.size() != p.n() {
            return Err(Error::SizeMismatch { expected: p.n(), found: l.size() }.into());
        }
        let out = out.as_mut().ok_or_else(|| Failure(ChromsymStatus::NullPointer, "null output pointer".into()))?;
        *out = count_tableaux(p, &l, pred);
        Ok(())
    })
}

/// Parse `{"n": .., "edges": [[a, b], ..]}`.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_from_json(json: *const c_char, out: *mut *mut ChromsymGraph) -> ChromsymStatus {
    guarded(|| put(out, ChromsymGraph(from_json(text(json)?)?)))
}

/// # Safety
/// `g` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_free(g: *mut ChromsymGraph) {
    free_handle(g)
}

/// `X_G` in the monomial basis.
///
/// # Safety
/// `g` must be a valid graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_chromatic(g: *const ChromsymGraph, out: *mut *mut ChromsymSymFunc) -> ChromsymStatus {
    guarded(|| put(out, ChromsymSymFunc(chromatic_symfunc(&handle(g)?.0))))
}

/// `θ^λ(G)` for a trace basis name (`epsilon`, `eta`, `chi`, `psi`, `phi`, `gamma`), as an exact string.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_trace(
    g: *const ChromsymGraph,
    basis: *const c_char,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> ChromsymStatus {
    guarded(|| {
        let g = &handle(g)?.0;
        let b: TraceBasis = text(basis)?.parse()?;
        let l: Partition = text(lambda)?.parse()?;
        let t = trace_basis(g.n(), b, &l)?;
        put_string(out, trace_of_graph(&t, g)?.to_string())
    })
}

/// # Safety
/// `f` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chromsym_symfunc_free(f: *mut ChromsymSymFunc) {
    free_handle(f)
}

/// Re-express in the basis named by one letter of `m e h p s f`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_symfunc_convert(
    f: *const ChromsymSymFunc,
    basis: *const c_char,
    out: *mut *mut ChromsymSymFunc,
) -> ChromsymStatus {
    guarded(|| {
        let b: Basis = text(basis)?.parse()?;
        put(out, ChromsymSymFunc(handle(f)?.0.convert(b)))
    })
}

/// Coefficient of the basis element indexed by `lambda`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_symfunc_coeff(
    f: *const ChromsymSymFunc,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> ChromsymStatus {
    guarded(|| {
        let l: Partition = text(lambda)?.parse()?;
        put_string(out, handle(f)?.0.coeff(&l).to_string())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_symfunc_to_json(f: *const ChromsymSymFunc, out: *mut *mut c_char) -> ChromsymStatus {
    guarded(|| put_string(out, to_json(&handle(f)?.0)?))
}

/// Parse a matrix given as a JSON array of rows.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_matrix_from_json(json: *const c_char, out: *mut *mut ChromsymMatrix) -> ChromsymStatus {
    guarded(|| put(out, ChromsymMatrix(from_json(text(json)?)?)))
}

/// Parse a comma or whitespace separated matrix.
///
/// # Safety
/// `csv` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_matrix_from_csv(csv: *const c_char, out: *mut *mut ChromsymMatrix) -> ChromsymStatus {
    guarded(|| put(out, ChromsymMatrix(parse_csv(text(csv)?)?)))
}

/// # Safety
/// `m` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chromsym_matrix_free(m: *mut ChromsymMatrix) {
    free_handle(m)
}

/// # Safety
/// `m` must be a valid matrix handle.
#[no_mangle]
pub unsafe extern "C" fn chromsym_matrix_order(m: *const ChromsymMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.n())
}

/// `Imm_θ(A)` for `θ = basis^lambda`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_matrix_immanant(
    m: *const ChromsymMatrix,
    basis: *const c_char,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> ChromsymStatus {
    guarded(|| {
        let a = &handle(m)?.0;
        let b: TraceBasis = text(basis)?.parse()?;
        let l: Partition = text(lambda)?.parse()?;
        let t = trace_basis(a.n(), b, &l)?;
        put_string(out, immanant(&t, a)?.to_string())
    })
}

/// 0 if some minor is negative, 1 if all minors are nonnegative.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_matrix_is_tnn(m: *const ChromsymMatrix, out: *mut i32) -> ChromsymStatus {
    guarded(|| {
        let v = handle(m)?.0.is_totally_nonnegative()?;
        let out = out.as_mut().ok_or_else(|| Failure(ChromsymStatus::NullPointer, "null output pointer".into()))?;
        *out = v as i32;
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_matrix_to_json(m: *const ChromsymMatrix, out: *mut *mut c_char) -> ChromsymStatus {
    guarded(|| put_string(out, to_json(&handle(m)?.0)?))
}

/// Parse a planar network document.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_network_from_json(json: *const c_char, out: *mut *mut ChromsymNetwork) -> ChromsymStatus {
    guarded(|| put(out, ChromsymNetwork(from_json(text(json)?)?)))
}

/// # Safety
/// `d` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chromsym_network_free(d: *mut ChromsymNetwork) {
    free_handle(d)
}

/// # Safety
/// `d` must be a valid network handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_network_path_matrix(d: *const ChromsymNetwork, out: *mut *mut ChromsymMatrix) -> ChromsymStatus {
    guarded(|| put(out, ChromsymMatrix(handle(d)?.0.path_matrix())))
}

/// Run a verification suite. `n == 0` selects the suite default. The JSON
/// report is written to `report` when it is not null; `passed` receives 1 or 0.
///
/// # Safety
/// `suite` must be a valid C string; `passed` must be valid; `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn chromsym_verify(
    suite: *const c_char,
    n: usize,
    trials: usize,
    seed: u64,
    passed: *mut i32,
    report: *mut *mut c_char,
) -> ChromsymStatus {
    guarded(|| {
        let suite: Suite = text(suite)?.parse()?;
        let opts = SuiteOptions { n: (n > 0).then_some(n), trials, seed, ..SuiteOptions::default() };
        let r = run_suite(suite, &opts)?;
        let passed = passed.as_mut().ok_or_else(|| Failure(ChromsymStatus::NullPointer, "null output pointer".into()))?;
        *passed = r.holds() as i32;
        if !report.is_null() {
            put_string(report, to_json(&r)?)?;
        }
        Ok(())
    })
}
