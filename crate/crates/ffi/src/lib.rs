//! C interface to `spherecert`.
//!
//! Every fallible function returns a [`SpherecertStatus`] and writes its
//! result through an out-pointer. Handles are opaque and must be released
//! with the matching `*_free` function; strings returned to the caller are
//! NUL-terminated and released with [`spherecert_string_free`]. Panics never
//! cross the boundary: they are reported as `SPHERECERT_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use spherecert::algebra::{mul, norm_sq, ratio, AlgebraElement};
use spherecert::report::{rational_string, run_suite, Suite, SuiteConfig, VerificationReport};
use spherecert::tables::{emit_table, TableKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpherecertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownSuite = 3,
    UnknownTable = 4,
    InvalidArgument = 5,
    DimensionMismatch = 6,
    Internal = 7,
}

/// A verification report produced by [`spherecert_run_suite`].
pub struct SpherecertReport {
    inner: VerificationReport,
}

/// An element of ℂ, ℍ or 𝕆 with exact rational coefficients.
pub struct SpherecertElement {
    inner: AlgebraElement,
}

fn guard(f: impl FnOnce() -> SpherecertStatus) -> SpherecertStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(SpherecertStatus::Internal)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SpherecertStatus> {
    if s.is_null() {
        return Err(SpherecertStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| SpherecertStatus::InvalidUtf8)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> SpherecertStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SpherecertStatus::Ok
        }
        Err(_) => SpherecertStatus::Internal,
    }
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn spherecert_status_message(status: SpherecertStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        SpherecertStatus::Ok => c"ok",
        SpherecertStatus::NullPointer => c"null pointer argument",
        SpherecertStatus::InvalidUtf8 => c"string argument is not valid UTF-8",
        SpherecertStatus::UnknownSuite => c"unknown suite name",
        SpherecertStatus::UnknownTable => c"unknown table kind",
        SpherecertStatus::InvalidArgument => c"invalid argument",
        SpherecertStatus::DimensionMismatch => c"algebra elements have different or unsupported dimensions",
        SpherecertStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}

/// Runs a suite (`algebra`, `s3`, `s3-cr`, `s3-hopf`, `s7-frame`, `s7-cr`,
/// `s7-quat` or `all`) with the given sample count and seed.
///
/// # Safety
/// `suite` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spherecert_run_suite(
    suite: *const c_char,
    samples: u64,
    seed: u64,
    out: *mut *mut SpherecertReport,
) -> SpherecertStatus {
    guard(|| {
        if out.is_null() {
            return SpherecertStatus::NullPointer;
        }
        let name = match read_str(suite) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let Ok(suite) = name.parse::<Suite>() else {
            return SpherecertStatus::UnknownSuite;
        };
        if samples == 0 {
            return SpherecertStatus::InvalidArgument;
        }
        let mut config = SuiteConfig::new(suite);
        config.samples = samples as usize;
        config.seed = seed;
        match run_suite(&config) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(SpherecertReport { inner }));
                SpherecertStatus::Ok
            }
            Err(_) => SpherecertStatus::InvalidArgument,
        }
    })
}

/// # Safety
/// `report` must come from [`spherecert_run_suite`] and not be used after.
#[no_mangle]
pub unsafe extern "C" fn spherecert_report_free(report: *mut SpherecertReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// The report as JSON, byte-identical to the CLI output.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spherecert_report_json(
    report: *const SpherecertReport,
    out: *mut *mut c_char,
) -> SpherecertStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return SpherecertStatus::NullPointer;
        }
        write_string(out, (*report).inner.to_json())
    })
}

/// Total, passed and failed check counts. Any of the out-pointers may be null.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn spherecert_report_summary(
    report: *const SpherecertReport,
    total: *mut usize,
    passed: *mut usize,
    failed: *mut usize,
) -> SpherecertStatus {
    if report.is_null() {
        return SpherecertStatus::NullPointer;
    }
    let s = (*report).inner.summary;
    for (dst, v) in [(total, s.total), (passed, s.passed), (failed, s.failed)] {
        if !dst.is_null() {
            *dst = v;
        }
    }
    SpherecertStatus::Ok
}

/// 0 if every check passed, 1 otherwise, -1 for a null handle.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn spherecert_report_exit_code(report: *const SpherecertReport) -> i32 {
    if report.is_null() {
        return -1;
    }
    (*report).inner.exit_code()
}

/// CSV table `oct-mult` or `commutators`.
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spherecert_emit_table(kind: *const c_char, out: *mut *mut c_char) -> SpherecertStatus {
    guard(|| {
        if out.is_null() {
            return SpherecertStatus::NullPointer;
        }
        let name = match read_str(kind) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let Ok(kind) = name.parse::<TableKind>() else {
            return SpherecertStatus::UnknownTable;
        };
        match emit_table(kind) {
            Ok(csv) => write_string(out, csv),
            Err(_) => SpherecertStatus::Internal,
        }
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn spherecert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds an element from `dim` coefficients `num[i] / den[i]`. `dim` must be
/// 2, 4 or 8 and every denominator nonzero.
///
/// # Safety
/// `num` and `den` must point to `dim` readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn spherecert_element_new(
    num: *const i64,
    den: *const i64,
    dim: usize,
    out: *mut *mut SpherecertElement,
) -> SpherecertStatus {
    guard(|| {
        if num.is_null() || den.is_null() || out.is_null() {
            return SpherecertStatus::NullPointer;
        }
        let num = std::slice::from_raw_parts(num, dim);
        let den = std::slice::from_raw_parts(den, dim);
        if den.contains(&0) {
            return SpherecertStatus::InvalidArgument;
        }
        let coeffs = num.iter().zip(den).map(|(&n, &d)| ratio(n, d)).collect();
        match AlgebraElement::new(coeffs) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(SpherecertElement { inner }));
                SpherecertStatus::Ok
            }
            Err(_) => SpherecertStatus::DimensionMismatch,
        }
    })
}

/// # Safety
/// `e` must come from this library and not be used after.
#[no_mangle]
pub unsafe extern "C" fn spherecert_element_free(e: *mut SpherecertElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Dimension of the element, or 0 for a null handle.
///
/// # Safety
/// `e` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn spherecert_element_dim(e: *const SpherecertElement) -> usize {
    if e.is_null() {
        0
    } else {
        (*e).inner.dim()
    }
}

/// Product `a·b` in the algebra of their common dimension.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn spherecert_element_mul(
    a: *const SpherecertElement,
    b: *const SpherecertElement,
    out: *mut *mut SpherecertElement,
) -> SpherecertStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            return SpherecertStatus::NullPointer;
        }
        match mul(&(*a).inner, &(*b).inner) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(SpherecertElement { inner }));
                SpherecertStatus::Ok
            }
            Err(_) => SpherecertStatus::DimensionMismatch,
        }
    })
}

/// Coefficient `index` as a `"p/q"` string.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spherecert_element_coeff(
    e: *const SpherecertElement,
    index: usize,
    out: *mut *mut c_char,
) -> SpherecertStatus {
    guard(|| {
        if e.is_null() || out.is_null() {
            return SpherecertStatus::NullPointer;
        }
        match (*e).inner.coeffs().get(index) {
            Some(c) => write_string(out, rational_string(c)),
            None => SpherecertStatus::InvalidArgument,
        }
    })
}

/// Squared norm as a `"p/q"` string.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spherecert_element_norm_sq(
    e: *const SpherecertElement,
    out: *mut *mut c_char,
) -> SpherecertStatus {
    guard(|| {
        if e.is_null() || out.is_null() {
            return SpherecertStatus::NullPointer;
        }
        write_string(out, rational_string(&norm_sq(&(*e).inner)))
    })
}

#[cfg(test)]
mod tests {
    use std::ptr;

    use super::*;

    unsafe fn take(s: *mut c_char) -> String {
        let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
        spherecert_string_free(s);
        out
    }

    #[test]
    fn element_round_trip() {
        unsafe {
            let (n, d) = ([0i64, 0, 0, 0, 1, 0, 0, 0], [1i64; 8]);
            let m = [0i64, 0, 0, 0, 0, 1, 0, 0];
            let mut a = ptr::null_mut();
            let mut b = ptr::null_mut();
            assert_eq!(spherecert_element_new(n.as_ptr(), d.as_ptr(), 8, &mut a), SpherecertStatus::Ok);
            assert_eq!(spherecert_element_new(m.as_ptr(), d.as_ptr(), 8, &mut b), SpherecertStatus::Ok);
            let mut p = ptr::null_mut();
            assert_eq!(spherecert_element_mul(a, b, &mut p), SpherecertStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(spherecert_element_coeff(p, 1, &mut s), SpherecertStatus::Ok);
            assert_eq!(take(s), "1/1");
            assert_eq!(spherecert_element_dim(p), 8);
            for h in [a, b, p] {
                spherecert_element_free(h);
            }
        }
    }

    #[test]
    fn bad_arguments() {
        unsafe {
            let d = [0i64; 3];
            let mut a = ptr::null_mut();
            assert_eq!(spherecert_element_new(d.as_ptr(), d.as_ptr(), 3, &mut a), SpherecertStatus::InvalidArgument);
            let n = [1i64; 3];
            let one = [1i64; 3];
            assert_eq!(spherecert_element_new(n.as_ptr(), one.as_ptr(), 3, &mut a), SpherecertStatus::DimensionMismatch);
            assert!(a.is_null());
            let mut r = ptr::null_mut();
            assert_eq!(spherecert_run_suite(c"s9".as_ptr(), 5, 0, &mut r), SpherecertStatus::UnknownSuite);
            assert_eq!(spherecert_run_suite(ptr::null(), 5, 0, &mut r), SpherecertStatus::NullPointer);
            assert_eq!(spherecert_run_suite(c"s3".as_ptr(), 0, 0, &mut r), SpherecertStatus::InvalidArgument);
            assert_eq!(spherecert_report_exit_code(ptr::null()), -1);
        }
    }

    #[test]
    fn status_messages_are_static() {
        let msg = unsafe { CStr::from_ptr(spherecert_status_message(SpherecertStatus::UnknownSuite)) };
        assert_eq!(msg.to_str().unwrap(), "unknown suite name");
    }
}
