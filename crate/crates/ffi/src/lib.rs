//! C interface to `plscl`.
//!
//! Maps and certificates cross the boundary as opaque handles that the caller
//! releases with the matching `*_free` function. Rationals, words and
//! environments travel as JSON or `"p/q"` strings in the same formats the
//! command line reads. Every fallible call returns a [`PlsclStatus`]; on
//! failure [`plscl_last_error_message`] describes what went wrong. Strings
//! handed out by the library are released with [`plscl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};

use plscl::thompson::check_reserved;
use plscl::{
    certify, find_displacer_simultaneous, group_fixed_set, rational, verify_certificate,
    CommutatorExpression, Error, GeneratorAssignment, Interval, PlMap, Rejection, SclCertificate,
    Word,
};

/// An element of PL⁺(I).
pub struct PlsclMap(PlMap);

/// A commutator-length certificate.
pub struct PlsclCertificate(SclCertificate);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlsclStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    InvalidMap = 4,
    DomainError = 5,
    UnboundSymbol = 6,
    BudgetExhausted = 7,
    PreconditionViolated = 8,
    SupportTouchesBoundary = 9,
    ProductMismatch = 10,
    VerificationFailed = 11,
    InvalidIndex = 12,
    WrongArity = 13,
    WrongTarget = 14,
    WrongBound = 15,
    Panic = 99,
}

impl From<&Error> for PlsclStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidMap(_) => PlsclStatus::InvalidMap,
            Error::DomainError(_) => PlsclStatus::DomainError,
            Error::UnboundSymbol(_) => PlsclStatus::UnboundSymbol,
            Error::BudgetExhausted { .. } => PlsclStatus::BudgetExhausted,
            Error::PreconditionViolated(_) => PlsclStatus::PreconditionViolated,
            Error::SupportTouchesBoundary { .. } => PlsclStatus::SupportTouchesBoundary,
            Error::ProductMismatch => PlsclStatus::ProductMismatch,
            Error::VerificationFailed(_) => PlsclStatus::VerificationFailed,
            Error::InvalidIndex(_) => PlsclStatus::InvalidIndex,
            Error::InvalidInput(_) => PlsclStatus::InvalidInput,
        }
    }
}

impl From<Rejection> for PlsclStatus {
    fn from(r: Rejection) -> Self {
        match r {
            Rejection::WrongArity => PlsclStatus::WrongArity,
            Rejection::WrongTarget => PlsclStatus::WrongTarget,
            Rejection::WrongBound => PlsclStatus::WrongBound,
            Rejection::ProductMismatch => PlsclStatus::ProductMismatch,
            Rejection::UnboundSymbol => PlsclStatus::UnboundSymbol,
        }
    }
}

struct Failure(PlsclStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

type Outcome = Result<(), Failure>;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, records its error message and turns panics into [`PlsclStatus::Panic`].
fn guard(f: impl FnOnce() -> Outcome) -> PlsclStatus {
    set_last_error("");
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlsclStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            PlsclStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PlsclStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(PlsclStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn json<T: serde::de::DeserializeOwned>(p: *const c_char, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text(p, what)?).map_err(|e| {
        let status = if e.to_string().contains("invalid map") {
            PlsclStatus::InvalidMap
        } else {
            PlsclStatus::InvalidInput
        };
        Failure(status, format!("{what}: {e}"))
    })
}

unsafe fn env_json(p: *const c_char) -> Result<GeneratorAssignment, Failure> {
    let env = json::<GeneratorAssignment>(p, "generators")?;
    check_reserved(&env)?;
    Ok(env)
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s)
        .map_err(|e| Failure(PlsclStatus::InvalidInput, e.to_string()))?
        .into_raw();
    Ok(())
}

unsafe fn put_value<T: Copy>(out: *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = value;
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

/// Message for the most recent failure on this thread, or an empty string.
///
/// The pointer stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn plscl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn plscl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_identity(out: *mut *mut PlsclMap) -> PlsclStatus {
    guard(|| put(out, PlsclMap(PlMap::identity())))
}

/// Parses `{"breakpoints": [["p/q","p/q"], ...]}`.
///
/// # Safety
/// `json_text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_from_json(
    json_text: *const c_char,
    out: *mut *mut PlsclMap,
) -> PlsclStatus {
    guard(|| put(out, PlsclMap(json(json_text, "map")?)))
}

/// # Safety
/// `map` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_to_json(
    map: *const PlsclMap,
    out: *mut *mut c_char,
) -> PlsclStatus {
    guard(|| put_string(out, to_json(&handle(map, "map")?.0)))
}

/// Thompson's generator `x0` (index 0) or `x1` (index 1).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_thompson_generator(
    index: u32,
    out: *mut *mut PlsclMap,
) -> PlsclStatus {
    guard(|| put(out, PlsclMap(plscl::f_generator(index)?)))
}

/// `outer ∘ inner`: `inner` is applied first.
///
/// # Safety
/// Both handles must be live and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_compose(
    outer: *const PlsclMap,
    inner: *const PlsclMap,
    out: *mut *mut PlsclMap,
) -> PlsclStatus {
    guard(|| {
        let f = handle(outer, "outer")?;
        let g = handle(inner, "inner")?;
        put(out, PlsclMap(f.0.compose(&g.0)))
    })
}

/// # Safety
/// `map` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_invert(
    map: *const PlsclMap,
    out: *mut *mut PlsclMap,
) -> PlsclStatus {
    guard(|| put(out, PlsclMap(handle(map, "map")?.0.invert())))
}

/// # Safety
/// `map` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_power(
    map: *const PlsclMap,
    k: i64,
    out: *mut *mut PlsclMap,
) -> PlsclStatus {
    guard(|| put(out, PlsclMap(handle(map, "map")?.0.power(k))))
}

/// Evaluates at the rational `"p/q"`, writing the value as `"p/q"`.
///
/// # Safety
/// `map` must be a live handle, `x` NUL-terminated and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_eval(
    map: *const PlsclMap,
    x: *const c_char,
    out: *mut *mut c_char,
) -> PlsclStatus {
    guard(|| {
        let f = handle(map, "map")?;
        let x = rational::parse(text(x, "point")?)?;
        put_string(out, rational::format(&f.0.eval(&x)?))
    })
}

/// Slopes at 0 and at 1.
///
/// # Safety
/// `map` must be a live handle and both outputs valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_eta(
    map: *const PlsclMap,
    slope0: *mut *mut c_char,
    slope1: *mut *mut c_char,
) -> PlsclStatus {
    guard(|| {
        let eta = handle(map, "map")?.0.eta();
        if slope0.is_null() || slope1.is_null() {
            return Err(null("output pointer"));
        }
        put_string(slope0, rational::format(&eta.slope0))?;
        put_string(slope1, rational::format(&eta.slope1))
    })
}

/// # Safety
/// Both handles must be live and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_equal(
    a: *const PlsclMap,
    b: *const PlsclMap,
    out: *mut bool,
) -> PlsclStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        put_value(out, a.0 == b.0)
    })
}

/// Whether the map lies in Thompson's group F.
///
/// # Safety
/// `map` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_is_dyadic(map: *const PlsclMap, out: *mut bool) -> PlsclStatus {
    guard(|| put_value(out, plscl::is_dyadic(&handle(map, "map")?.0).is_dyadic))
}

/// Releases a map. Null is ignored.
///
/// # Safety
/// `map` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn plscl_map_free(map: *mut PlsclMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Common fixed set of a generator environment and its complementary components, as JSON.
///
/// # Safety
/// `gens_json` must be NUL-terminated and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_fixed_set_json(
    gens_json: *const c_char,
    out: *mut *mut c_char,
) -> PlsclStatus {
    guard(|| put_string(out, to_json(&group_fixed_set(&env_json(gens_json)?))))
}

/// Searches for a word displacing every target interval, written as word JSON.
///
/// # Safety
/// Both inputs must be NUL-terminated and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_displace_json(
    gens_json: *const c_char,
    targets_json: *const c_char,
    budget: usize,
    out: *mut *mut c_char,
) -> PlsclStatus {
    guard(|| {
        let env = env_json(gens_json)?;
        let targets: Vec<Interval> = json(targets_json, "targets")?;
        put_string(
            out,
            to_json(&find_displacer_simultaneous(&env, &targets, budget)?.word),
        )
    })
}

/// Builds a verified certificate for `g^(n+1)`. With a null `j_json` the
/// displacer is searched for within word length `budget`.
///
/// # Safety
/// `gens_json` and `expr_json` must be NUL-terminated, `j_json` NUL-terminated
/// or null, and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_certify(
    gens_json: *const c_char,
    expr_json: *const c_char,
    j_json: *const c_char,
    n: u64,
    budget: usize,
    out: *mut *mut PlsclCertificate,
) -> PlsclStatus {
    guard(|| {
        let env = env_json(gens_json)?;
        let expr: CommutatorExpression = json(expr_json, "expression")?;
        let j: Option<Word> = if j_json.is_null() {
            None
        } else {
            Some(json(j_json, "displacer")?)
        };
        put(
            out,
            PlsclCertificate(certify(&expr, j.as_ref(), n, budget, &env)?),
        )
    })
}

/// # Safety
/// `json_text` must be NUL-terminated and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_certificate_from_json(
    json_text: *const c_char,
    out: *mut *mut PlsclCertificate,
) -> PlsclStatus {
    guard(|| put(out, PlsclCertificate(json(json_text, "certificate")?)))
}

/// # Safety
/// `cert` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_certificate_to_json(
    cert: *const PlsclCertificate,
    out: *mut *mut c_char,
) -> PlsclStatus {
    guard(|| put_string(out, to_json(&handle(cert, "certificate")?.0)))
}

/// [`PlsclStatus::Ok`] if the certificate checks out, otherwise the rejection reason.
///
/// # Safety
/// `cert` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plscl_certificate_verify(cert: *const PlsclCertificate) -> PlsclStatus {
    guard(|| {
        let cert = handle(cert, "certificate")?;
        verify_certificate(&cert.0)
            .map_err(|r| Failure(r.into(), format!("certificate rejected: {r}")))
    })
}

/// The claimed bound in lowest terms, as `"p/q"`.
///
/// # Safety
/// `cert` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn plscl_certificate_bound(
    cert: *const PlsclCertificate,
    out: *mut *mut c_char,
) -> PlsclStatus {
    guard(|| {
        put_string(
            out,
            rational::format(&handle(cert, "certificate")?.0.claimed_bound),
        )
    })
}

/// Releases a certificate. Null is ignored.
///
/// # Safety
/// `cert` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn plscl_certificate_free(cert: *mut PlsclCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}
