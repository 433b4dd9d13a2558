//! C interface to `vsasm-core`.
//!
//! Polynomials cross the boundary as opaque `VsasmPoly` handles owned by the
//! caller and released with [`vsasm_poly_free`]. Strings returned through
//! out-parameters are heap allocated and released with [`vsasm_string_free`].
//! Every fallible function returns a [`VsasmStatus`]; on failure a message is
//! available from [`vsasm_last_error`] on the same thread. Out-parameters are
//! written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use vsasm_core::amt::vsasm_bottom;
use vsasm_core::cli::model_gf;
use vsasm_core::lattice::{specialized_det, unrefined_det, Interpretation};
use vsasm_core::poly::{LaurentPoly, Std};
use vsasm_core::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VsasmStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8, or input could not be parsed.
    Parse = 2,
    /// The request is outside what the library computes.
    Unsupported = 3,
    /// Malformed combinatorial input.
    Structure = 4,
    /// Evaluation failed, for example a zero substituted into a negative power.
    Evaluation = 5,
    /// Operands over different variable sets.
    Alphabet = 6,
    /// An internal cross-check failed.
    Consistency = 7,
    /// A division that should have been exact was not.
    Divisibility = 8,
    /// The library panicked; the handle arguments are left untouched.
    Panic = 9,
}

impl From<&Error> for VsasmStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Alphabet(_) => VsasmStatus::Alphabet,
            Error::Divisibility(_) => VsasmStatus::Divisibility,
            Error::Evaluation(_) => VsasmStatus::Evaluation,
            Error::Structure(_) => VsasmStatus::Structure,
            Error::Consistency(_) => VsasmStatus::Consistency,
            Error::Parse(_) => VsasmStatus::Parse,
            Error::Unsupported(_) => VsasmStatus::Unsupported,
        }
    }
}

/// Opaque exact Laurent polynomial.
pub struct VsasmPoly(LaurentPoly);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(VsasmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(VsasmStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(VsasmStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> VsasmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            VsasmStatus::Ok
        }
        Ok(Err(Failure(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            VsasmStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(VsasmStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn poly_arg<'a>(p: *const VsasmPoly, what: &str) -> Result<&'a LaurentPoly, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put_poly(out: *mut *mut VsasmPoly, p: LaurentPoly) {
    *out = Box::into_raw(Box::new(VsasmPoly(p)));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(VsasmStatus::Consistency, "output contains a nul byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn vsasm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn vsasm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Generating function of a model (`"brute"`, `"jt4"`, ...) for the bottom
/// row `0, 2, ..., 2n-2`.
///
/// # Safety
/// `model` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_gf(model: *const c_char, n: u32, out: *mut *mut VsasmPoly) -> VsasmStatus {
    guard(|| {
        let model = str_arg(model, "model")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if n == 0 {
            return Err(Failure(VsasmStatus::Unsupported, "n must be positive".into()));
        }
        let p = model_gf(model, &vsasm_bottom(n as usize))?;
        put_poly(out, p);
        Ok(())
    })
}

/// Generating function of a triangle model for an arbitrary strictly
/// increasing bottom row of length `len`.
///
/// # Safety
/// `model` must be a nul-terminated string, `bottom` must point to `len`
/// values and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_gf_bottom(
    model: *const c_char,
    bottom: *const i64,
    len: usize,
    out: *mut *mut VsasmPoly,
) -> VsasmStatus {
    guard(|| {
        let model = str_arg(model, "model")?;
        let bottom = slice_arg(bottom, len, "bottom")?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_poly(out, model_gf(model, bottom)?);
        Ok(())
    })
}

/// Parses the JSON wire format (`{"vars": [...], "terms": [{"c": "..", "e": [..]}]}`).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_from_json(json: *const c_char, out: *mut *mut VsasmPoly) -> VsasmStatus {
    guard(|| {
        let json = str_arg(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_poly(out, LaurentPoly::from_json(json)?);
        Ok(())
    })
}

/// Canonical JSON of a polynomial; release with [`vsasm_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_to_json(p: *const VsasmPoly, out: *mut *mut c_char) -> VsasmStatus {
    guard(|| {
        let p = poly_arg(p, "poly")?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, p.to_json())
    })
}

/// Human-readable form such as `u*X1 + w + v*X1^-1`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_to_string(p: *const VsasmPoly, out: *mut *mut c_char) -> VsasmStatus {
    guard(|| {
        let p = poly_arg(p, "poly")?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, p.to_string())
    })
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_num_terms(p: *const VsasmPoly, out: *mut usize) -> VsasmStatus {
    guard(|| {
        let p = poly_arg(p, "poly")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = p.len();
        Ok(())
    })
}

/// Exact equality, including the variable set.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_equal(a: *const VsasmPoly, b: *const VsasmPoly, out: *mut bool) -> VsasmStatus {
    guard(|| {
        let (a, b) = (poly_arg(a, "a")?, poly_arg(b, "b")?);
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = a == b;
        Ok(())
    })
}

unsafe fn binary(
    a: *const VsasmPoly,
    b: *const VsasmPoly,
    out: *mut *mut VsasmPoly,
    op: fn(&LaurentPoly, &LaurentPoly) -> vsasm_core::Result<LaurentPoly>,
) -> VsasmStatus {
    guard(|| {
        let (a, b) = (poly_arg(a, "a")?, poly_arg(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        put_poly(out, op(a, b)?);
        Ok(())
    })
}

/// `a + b` as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_add(a: *const VsasmPoly, b: *const VsasmPoly, out: *mut *mut VsasmPoly) -> VsasmStatus {
    binary(a, b, out, LaurentPoly::try_add)
}

/// `a - b` as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_sub(a: *const VsasmPoly, b: *const VsasmPoly, out: *mut *mut VsasmPoly) -> VsasmStatus {
    binary(a, b, out, LaurentPoly::try_sub)
}

/// `a * b` as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_mul(a: *const VsasmPoly, b: *const VsasmPoly, out: *mut *mut VsasmPoly) -> VsasmStatus {
    binary(a, b, out, LaurentPoly::try_mul)
}

/// Value at integers given in the polynomial's variable order; the decimal
/// result is written to `out`.
///
/// # Safety
/// `p` must be a live handle, `values` must point to `len` integers and `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_eval(
    p: *const VsasmPoly,
    values: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> VsasmStatus {
    guard(|| {
        let p = poly_arg(p, "poly")?;
        let values: Vec<BigInt> = slice_arg(values, len, "values")?.iter().map(|&v| BigInt::from(v)).collect();
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, p.eval(&values)?.to_string())
    })
}

/// Generating function at integer values `u, v, w, X_1..X_n` (pass null and
/// zero length for the plain count `u = v = 1, w = -1, X_i = 1`), evaluated
/// through the determinant. Every `X_i` must be `1` or `-1`.
///
/// # Safety
/// `values` must be null or point to `len` integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vsasm_count(n: u32, values: *const i64, len: usize, out: *mut *mut c_char) -> VsasmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let n = n as usize;
        let point: Vec<BigInt> = if values.is_null() && len == 0 {
            Std::new(n).count_point()
        } else {
            slice_arg(values, len, "values")?.iter().map(|&v| BigInt::from(v)).collect()
        };
        put_string(out, specialized_det(Interpretation::Jt4, n, &point)?.to_string())
    })
}

/// `det C(i+j-1, 2j-i-1)` for `1 <= i, j <= n` in decimal.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsasm_unrefined_det(n: u32, out: *mut *mut c_char) -> VsasmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, unrefined_det(n as usize).to_string())
    })
}

/// Releases a polynomial handle; null is ignored.
///
/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vsasm_poly_free(p: *mut VsasmPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vsasm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

