//! C ABI over `twinring`.
//!
//! Objects are opaque heap handles freed with their `_free` function. Functions that
//! can fail return a [`TrStatus`] (or null) and leave a message for
//! [`tr_last_error`]. Strings returned to the caller are owned by the caller and must
//! be released with [`tr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twinring::format::{certificate_document, parse_matrix_file, replay_certificate, report_document, Document};
use twinring::oracle::check_ring;
use twinring::{Error, Matrix, RingDescriptor, TwinCertificate};

/// Mirrors the command-line exit codes, plus two ABI-only conditions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrStatus {
    Ok = 0,
    InvalidInput = 1,
    NotTwinGood = 2,
    VerificationFailed = 3,
    BoundExceeded = 4,
    NullPointer = 5,
    Panic = 6,
}

pub struct TrRing(RingDescriptor);

pub struct TrMatrix(Matrix);

pub struct TrCertificate(TwinCertificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> TrStatus {
    match twinring::cli::exit_code(err) {
        2 => TrStatus::NotTwinGood,
        3 => TrStatus::VerificationFailed,
        4 => TrStatus::BoundExceeded,
        _ => TrStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), (TrStatus, String)>) -> TrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TrStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TrStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (TrStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(what: &str) -> (TrStatus, String) {
    (TrStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (TrStatus, String)> {
    if s.is_null() {
        return Err(null_err(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (TrStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (TrStatus, String)> {
    p.as_mut().ok_or_else(|| null_err(what))
}

fn to_c_string(s: String) -> Result<*mut c_char, (TrStatus, String)> {
    CString::new(s).map(CString::into_raw).map_err(|_| (TrStatus::Panic, "string contains NUL".into()))
}

/// Message for the most recent failure on this thread. Never null; owned by the
/// library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a ring descriptor such as `Z/12`, `GF(4)` or `Z/2 x Z/3`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_ring_parse(text: *const c_char, out: *mut *mut TrRing) -> TrStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let ring: RingDescriptor = read_str(text, "text")?.parse().map_err(lib_err)?;
        *out = Box::into_raw(Box::new(TrRing(ring)));
        Ok(())
    })
}

/// # Safety
/// `ring` must be null or a handle from [`tr_ring_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_ring_free(ring: *mut TrRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Canonical descriptor text, or null on failure.
///
/// # Safety
/// `ring` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_ring_to_string(ring: *const TrRing) -> *mut c_char {
    let mut s = ptr::null_mut();
    guard(|| {
        let ring = ring.as_ref().ok_or_else(|| null_err("ring"))?;
        s = to_c_string(ring.0.to_string())?;
        Ok(())
    });
    s
}

/// Exhaustive goodness report for `ring` as a `key: value` document.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_ring_check(ring: *const TrRing, bound: u64, k_max: u32, out: *mut *mut c_char) -> TrStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let ring = &ring.as_ref().ok_or_else(|| null_err("ring"))?.0;
        let report = check_ring(ring, bound.into(), k_max as usize).map_err(lib_err)?;
        let agreement = report.agreement;
        *out = to_c_string(report_document(ring, &Ok(report)).to_string())?;
        if agreement {
            Ok(())
        } else {
            Err((TrStatus::VerificationFailed, format!("criterion disagreement on {ring}")))
        }
    })
}

/// Parses a matrix document with `ring:` and `rows:` fields.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_parse(text: *const c_char, out: *mut *mut TrMatrix) -> TrStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let m = parse_matrix_file(read_str(text, "text")?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(TrMatrix(m)));
        Ok(())
    })
}

/// Parses rows such as `[[1, 2], [3, 4]]` over `ring`.
///
/// # Safety
/// `ring` must be a live handle, `rows` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_from_rows(
    ring: *const TrRing,
    rows: *const c_char,
    out: *mut *mut TrMatrix,
) -> TrStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let ring = &ring.as_ref().ok_or_else(|| null_err("ring"))?.0;
        let m = Matrix::parse_rows(ring, read_str(rows, "rows")?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(TrMatrix(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_free(m: *mut TrMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows (matrices are square when decomposed; 0 for null).
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_rows(m: *const TrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Matrix document (`ring:` and `rows:`), or null on failure.
///
/// # Safety
/// `m` must be a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_to_string(m: *const TrMatrix) -> *mut c_char {
    let mut s = ptr::null_mut();
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null_err("matrix"))?;
        s = to_c_string(twinring::format::matrix_document(&m.0).to_string())?;
        Ok(())
    });
    s
}

/// Twin decomposition of `m`. On success `*out` holds a verified certificate.
///
/// # Safety
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_twin_decompose(m: *const TrMatrix, out: *mut *mut TrCertificate) -> TrStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let m = m.as_ref().ok_or_else(|| null_err("matrix"))?;
        let cert = twinring::twin_decompose(&m.0).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(TrCertificate(cert)));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn tr_certificate_free(c: *mut TrCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Re-checks all six identity products. Null yields false.
///
/// # Safety
/// `c` must be null or a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn tr_certificate_verify(c: *const TrCertificate) -> bool {
    catch_unwind(AssertUnwindSafe(|| c.as_ref().is_some_and(|c| c.0.verify()))).unwrap_or(false)
}

/// Certificate document, or null on failure.
///
/// # Safety
/// `c` must be a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn tr_certificate_to_string(c: *const TrCertificate) -> *mut c_char {
    let mut s = ptr::null_mut();
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null_err("certificate"))?;
        s = to_c_string(certificate_document(&c.0).to_string())?;
        Ok(())
    });
    s
}

/// Replays a certificate document. Writes whether the products check out and what
/// the document's `verified` flag claims.
///
/// # Safety
/// `text` must be a NUL-terminated string; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_certificate_replay(
    text: *const c_char,
    recomputed: *mut bool,
    claimed: *mut bool,
) -> TrStatus {
    guard(|| {
        let recomputed = out_ptr(recomputed, "recomputed")?;
        let claimed = out_ptr(claimed, "claimed")?;
        let doc = Document::parse(read_str(text, "text")?).map_err(lib_err)?;
        let replay = replay_certificate(&doc).map_err(lib_err)?;
        *recomputed = replay.recomputed;
        *claimed = replay.claimed;
        Ok(())
    })
}
