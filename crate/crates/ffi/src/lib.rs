//! C interface to `tetratrig`.
//!
//! Tetrahedra and reports are opaque heap handles. Every fallible function
//! returns a `TRIG_*` status code and writes its result through an out
//! pointer. On failure, `trig_last_error` describes the most recent error
//! on the calling thread. Strings handed out by this library must be
//! released with `trig_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tetratrig::affine::Point3;
use tetratrig::blinalg::SymmetricForm;
use tetratrig::checks::Outcome;
use tetratrig::cli::{collect_verdicts, invariants_to_value, pretty, InputDocument, Options};
use tetratrig::tetra::{analyze, skew_quadrance, Entry, InvariantReport, SkewPairing, Tetrahedron};
use tetratrig::{Error, FieldElement, FieldSpec};

pub const TRIG_OK: i32 = 0;
pub const TRIG_ERR_NULL_POINTER: i32 = 1;
pub const TRIG_ERR_PARSE: i32 = 2;
pub const TRIG_ERR_INVALID_FIELD: i32 = 3;
pub const TRIG_ERR_DEGENERATE_FORM: i32 = 4;
pub const TRIG_ERR_MIXED_FIELDS: i32 = 5;
pub const TRIG_ERR_UNDEFINED: i32 = 6;
pub const TRIG_ERR_NOT_SKEW: i32 = 7;
pub const TRIG_ERR_NULL_PERPENDICULAR: i32 = 8;
pub const TRIG_ERR_UNKNOWN_KEY: i32 = 9;
pub const TRIG_ERR_INVALID_ARGUMENT: i32 = 10;
pub const TRIG_ERR_PANIC: i32 = 99;

pub const TRIG_PAIRING_01_23: i32 = 0;
pub const TRIG_PAIRING_02_13: i32 = 1;
pub const TRIG_PAIRING_03_12: i32 = 2;

/// Opaque tetrahedron handle.
pub struct TrigTetrahedron {
    inner: Tetrahedron,
}

/// Opaque invariant report handle.
pub struct TrigReport {
    inner: InvariantReport,
}

/// Verdict counts from `trig_verify`.
#[repr(C)]
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct TrigVerifySummary {
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub inapplicable: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Field(_) => TRIG_ERR_PARSE,
            Error::MixedFields => TRIG_ERR_MIXED_FIELDS,
            Error::DegenerateForm => TRIG_ERR_DEGENERATE_FORM,
            Error::NotSkewOrDegenerate => TRIG_ERR_NOT_SKEW,
            Error::NullCommonPerpendicular => TRIG_ERR_NULL_PERPENDICULAR,
            _ => TRIG_ERR_UNDEFINED,
        };
        Failure(code, e.to_string())
    }
}

/// Runs `body`, converting failures and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TRIG_OK,
        Ok(Err(Failure(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            TRIG_ERR_PANIC
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(TRIG_ERR_NULL_POINTER, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(TRIG_ERR_PARSE, format!("{what} is not UTF-8")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(TRIG_ERR_NULL_POINTER, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(TRIG_ERR_NULL_POINTER, format!("{what} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Parses an input document (the `report`/`verify` JSON format).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trig_tetrahedron_from_json(json: *const c_char, out: *mut *mut TrigTetrahedron) -> i32 {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let doc = InputDocument::parse(text(json, "json")?).map_err(|e| Failure(TRIG_ERR_PARSE, e.to_string()))?;
        *out = Box::into_raw(Box::new(TrigTetrahedron { inner: doc.tetrahedron() }));
        Ok(())
    })
}

/// Builds a tetrahedron from literals: `field` such as `"Q"` or `"F_7"`,
/// `form` the six entries `a1 a2 a3 b1 b2 b3`, and `coords` the twelve
/// coordinates of `A0..A3` in order.
///
/// # Safety
/// `form` must point to 6 and `coords` to 12 nul-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn trig_tetrahedron_new(
    field: *const c_char,
    form: *const *const c_char,
    coords: *const *const c_char,
    out: *mut *mut TrigTetrahedron,
) -> i32 {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let spec: FieldSpec = text(field, "field")?
            .parse()
            .map_err(|e: tetratrig::FieldError| Failure(TRIG_ERR_INVALID_FIELD, e.to_string()))?;
        if form.is_null() || coords.is_null() {
            return Err(Failure(TRIG_ERR_NULL_POINTER, "form or coords is null".into()));
        }
        let element = |p: *const c_char, what: &str| -> Result<FieldElement, Failure> {
            spec.parse(text(p, what)?).map_err(|e| Failure(TRIG_ERR_PARSE, format!("{what}: {e}")))
        };
        let mut entries = Vec::with_capacity(6);
        for i in 0..6 {
            entries.push(element(*form.add(i), &format!("form[{i}]"))?);
        }
        let b = SymmetricForm::new(entries.try_into().expect("six"))?;
        let mut c = Vec::with_capacity(12);
        for i in 0..12 {
            c.push(element(*coords.add(i), &format!("coords[{i}]"))?);
        }
        let mut it = c.into_iter();
        let mut next_point = || -> Result<Point3, Error> {
            let mut n = || it.next().expect("twelve");
            Point3::new(n(), n(), n())
        };
        let points = [next_point()?, next_point()?, next_point()?, next_point()?];
        *out = Box::into_raw(Box::new(TrigTetrahedron { inner: Tetrahedron::new(points, b)? }));
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trig_tetrahedron_free(t: *mut TrigTetrahedron) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live tetrahedron handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trig_analyze(t: *const TrigTetrahedron, out: *mut *mut TrigReport) -> i32 {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let t = handle(t, "tetrahedron")?;
        *out = Box::into_raw(Box::new(TrigReport { inner: analyze(&t.inner) }));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trig_report_free(r: *mut TrigReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Looks up one entry by key (`"Q01"`, `"s1;02"`, `"R"`, `"R03;12"`, ...)
/// and writes its literal. An undefined entry returns `TRIG_ERR_UNDEFINED`
/// with the reason name as the last error.
///
/// # Safety
/// `r` must be a live report handle, `key` a nul-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trig_report_get(r: *const TrigReport, key: *const c_char, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let r = handle(r, "report")?;
        let key = text(key, "key")?;
        match r.inner.get(key) {
            None => Err(Failure(TRIG_ERR_UNKNOWN_KEY, format!("unknown entry {key:?}"))),
            Some(Entry::Undefined(why)) => Err(Failure(TRIG_ERR_UNDEFINED, why.as_str().to_string())),
            Some(Entry::Defined(x)) => {
                *out = c_string(x.render());
                Ok(())
            }
        }
    })
}

/// Writes the `invariants` map as JSON.
///
/// # Safety
/// `r` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trig_report_to_json(r: *const TrigReport, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let r = handle(r, "report")?;
        *out = c_string(pretty(&invariants_to_value(&r.inner, true)));
        Ok(())
    })
}

/// Runs the identity and factorization checks and writes the counts.
///
/// # Safety
/// `t` must be a live tetrahedron handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trig_verify(t: *const TrigTetrahedron, out: *mut TrigVerifySummary) -> i32 {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let t = handle(t, "tetrahedron")?;
        let doc = InputDocument::new(t.inner.form().clone(), t.inner.vertices().clone(), Options::default());
        let results = collect_verdicts(&doc, None).map_err(|e| Failure(TRIG_ERR_INVALID_ARGUMENT, e.to_string()))?;
        *out = TrigVerifySummary {
            checked: results.verdicts().len() as u64,
            passed: results.count(Outcome::Pass) as u64,
            failed: results.count(Outcome::Fail) as u64,
            inapplicable: results.count(Outcome::Inapplicable) as u64,
        };
        Ok(())
    })
}

/// Skew quadrance of a pair of opposite edges (`TRIG_PAIRING_*`).
///
/// # Safety
/// `t` must be a live tetrahedron handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trig_skew_quadrance(t: *const TrigTetrahedron, pairing: i32, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let t = handle(t, "tetrahedron")?;
        let p = usize::try_from(pairing)
            .ok()
            .and_then(|i| SkewPairing::ALL.get(i).copied())
            .ok_or_else(|| Failure(TRIG_ERR_INVALID_ARGUMENT, format!("no pairing {pairing}")))?;
        *out = c_string(skew_quadrance(&t.inner, p)?.render());
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The last error message on this thread, or null. The pointer stays valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn trig_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
