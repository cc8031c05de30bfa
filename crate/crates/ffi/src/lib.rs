//! C ABI for `projrich`.
//!
//! Conventions:
//! * Every fallible function returns a [`PrStatus`]. On a nonzero status the
//!   thread-local message from [`pr_last_error_message`] describes it.
//! * An instance is an opaque [`PrInstance`] created by [`pr_instance_new`] and
//!   released by [`pr_instance_free`].
//! * Polynomials are written into caller buffers of `int64_t` coefficients,
//!   constant term first. `*out_len` always receives the required length, and
//!   [`PrStatus::BufferTooSmall`] is returned when `cap` is short.
//! * JSON results are NUL-terminated strings owned by the library and released
//!   by [`pr_string_free`].
//! * Panics never cross the boundary; they become [`PrStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use projrich::cli::{run_suite, Suite};
use projrich::genfun::{a_brute, f_brute, type_a_f, QPoly};
use projrich::localization::SuiteOptions;
use projrich::report::Report;
use projrich::richardson_poset::{admissible_set, poset_dump, Instance};
use projrich::root_data::{CartanType, Coweight, RootSystem};
use projrich::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrStatus {
    Ok = 0,
    /// Bad type, rank, coweight or parameter.
    InvalidInput = 1,
    /// The computation ran and at least one identity failed.
    VerificationFailed = 2,
    /// A polynomial division was not exact.
    InexactDivision = 3,
    /// A required pointer was null.
    NullPointer = 4,
    /// The output buffer is shorter than `*out_len`.
    BufferTooSmall = 5,
    /// An internal panic was caught.
    Panic = 6,
}

/// Verification suites, as in the command-line `--suite`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrSuite {
    Combinatorics = 0,
    Demazure = 1,
    Cohomology = 2,
    Ktheory = 3,
    Matrix = 4,
    Genfun = 5,
    All = 6,
}

fn suite_of(code: u32) -> Result<Suite, Fail> {
    const ALL: [(PrSuite, Suite); 7] = [
        (PrSuite::Combinatorics, Suite::Combinatorics),
        (PrSuite::Demazure, Suite::Demazure),
        (PrSuite::Cohomology, Suite::Cohomology),
        (PrSuite::Ktheory, Suite::Ktheory),
        (PrSuite::Matrix, Suite::Matrix),
        (PrSuite::Genfun, Suite::Genfun),
        (PrSuite::All, Suite::All),
    ];
    ALL.iter()
        .find(|(c, _)| *c as u32 == code)
        .map(|&(_, s)| s)
        .ok_or_else(|| invalid(format!("unknown suite {code}")))
}

/// Bounds for the randomized and ball-limited parts of a verification run.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrVerifyOptions {
    pub seed: u64,
    pub max_len: u32,
    pub samples: u32,
}

/// A root system together with a dominant coweight.
pub struct PrInstance {
    inst: Instance,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(PrStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::InvalidInput(_) => PrStatus::InvalidInput,
            Error::Verification(_) => PrStatus::VerificationFailed,
            Error::InexactDivision(_) => PrStatus::InexactDivision,
        };
        Fail(code, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(PrStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(PrStatus::InvalidInput, msg.into())
}

/// Runs `f`, records the error message and maps panics to [`PrStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<PrStatus, Fail>) -> PrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            if s == PrStatus::Ok {
                set_error("");
            }
            s
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("panic: {msg}"));
            PrStatus::Panic
        }
    }
}

unsafe fn instance<'a>(h: *const PrInstance) -> Result<&'a Instance, Fail> {
    h.as_ref().map(|h| &h.inst).ok_or_else(|| null("instance"))
}

unsafe fn write_poly(
    p: &QPoly,
    buf: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> Result<PrStatus, Fail> {
    let out_len = out_len.as_mut().ok_or_else(|| null("out_len"))?;
    let c = p.coeffs();
    *out_len = c.len();
    if cap < c.len() {
        return Ok(PrStatus::BufferTooSmall);
    }
    if !c.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(c.as_ptr(), buf, c.len());
    }
    Ok(PrStatus::Ok)
}

unsafe fn write_json(v: &impl serde::Serialize, out: *mut *mut c_char) -> Result<(), Fail> {
    let out = out.as_mut().ok_or_else(|| null("out_json"))?;
    let s = serde_json::to_string(v).map_err(|e| invalid(e.to_string()))?;
    *out = CString::new(s)
        .map_err(|e| invalid(e.to_string()))?
        .into_raw();
    Ok(())
}

/// Message for the last nonzero status on this thread. Empty after success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn pr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds an instance from a type letter (`"A"`..`"D"`), a rank and the
/// coweight's `rank` coordinates in the fundamental-coweight basis.
///
/// # Safety
/// `type_name` must be a NUL-terminated string, `coweight` must point to
/// `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_instance_new(
    type_name: *const c_char,
    rank: u32,
    coweight: *const i32,
    len: usize,
    out: *mut *mut PrInstance,
) -> PrStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = ptr::null_mut();
        if type_name.is_null() {
            return Err(null("type_name"));
        }
        if coweight.is_null() && len > 0 {
            return Err(null("coweight"));
        }
        let ty: CartanType = CStr::from_ptr(type_name)
            .to_str()
            .map_err(|e| invalid(e.to_string()))?
            .parse()?;
        let coords = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(coweight, len).to_vec()
        };
        let rs = RootSystem::new(ty, rank as usize)?;
        let inst = Instance::new(rs, Coweight(coords))?;
        *out = Box::into_raw(Box::new(PrInstance { inst }));
        Ok(PrStatus::Ok)
    })
}

/// Releases an instance. Null is ignored.
///
/// # Safety
/// `h` must come from [`pr_instance_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pr_instance_free(h: *mut PrInstance) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// `|Adm(λ)|`.
///
/// # Safety
/// `h` must be a live instance and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_instance_admissible_count(
    h: *const PrInstance,
    out: *mut u64,
) -> PrStatus {
    guard(|| {
        let inst = instance(h)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = admissible_set(inst).len() as u64;
        Ok(PrStatus::Ok)
    })
}

/// Length generating function of `Adm(λ)` by enumeration.
///
/// # Safety
/// `h` must be a live instance, `buf` must hold `cap` values and `out_len`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_instance_length_genfun(
    h: *const PrInstance,
    buf: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> PrStatus {
    guard(|| write_poly(&f_brute(instance(h)?), buf, cap, out_len))
}

/// Rank generating function of `Q_J` by enumeration.
///
/// # Safety
/// As for [`pr_instance_length_genfun`].
#[no_mangle]
pub unsafe extern "C" fn pr_instance_rank_genfun(
    h: *const PrInstance,
    buf: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> PrStatus {
    guard(|| write_poly(&a_brute(instance(h)?), buf, cap, out_len))
}

/// Closed-form length generating function for the Grassmannian `Gr(k, n)`.
///
/// # Safety
/// `buf` must hold `cap` values and `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_type_a_genfun(
    k: u32,
    n: u32,
    buf: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> PrStatus {
    guard(|| write_poly(&type_a_f(k, n)?, buf, cap, out_len))
}

/// Poset dump of `Q_J` and `Adm(λ)` as JSON, as printed by `projrich poset`.
///
/// # Safety
/// `h` must be a live instance and `out_json` writable. Free the result with
/// [`pr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pr_instance_poset_json(
    h: *const PrInstance,
    out_json: *mut *mut c_char,
) -> PrStatus {
    guard(|| {
        if let Some(o) = out_json.as_mut() {
            *o = ptr::null_mut();
        }
        let dump = poset_dump(instance(h)?)?;
        write_json(&dump, out_json)?;
        Ok(PrStatus::Ok)
    })
}

/// Runs the [`PrSuite`] numbered `suite` and returns its reports as a JSON array.
/// The status is [`PrStatus::VerificationFailed`] if any report failed; the
/// JSON is produced in both cases.
///
/// # Safety
/// `h` must be a live instance, `opts` readable and `out_json` writable.
/// Free the result with [`pr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pr_instance_verify(
    h: *const PrInstance,
    suite: u32,
    opts: *const PrVerifyOptions,
    out_json: *mut *mut c_char,
) -> PrStatus {
    guard(|| {
        if let Some(o) = out_json.as_mut() {
            *o = ptr::null_mut();
        }
        let inst = instance(h)?;
        let suite = suite_of(suite)?;
        let opts = opts.as_ref().ok_or_else(|| null("opts"))?;
        if opts.max_len == 0 || opts.samples == 0 {
            return Err(invalid("max_len and samples must be positive"));
        }
        let suite_opts = SuiteOptions {
            samples: opts.samples as usize,
            max_len: opts.max_len as usize,
            seed: opts.seed,
        };
        let reports: Vec<Report> = run_suite(suite, inst, &suite_opts, false);
        write_json(&reports, out_json)?;
        match reports.iter().find(|r| !r.passed()) {
            None => Ok(PrStatus::Ok),
            Some(r) => {
                set_error(&r.summary_line());
                Ok(PrStatus::VerificationFailed)
            }
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
