//! C interface. Algebras are opaque heap handles owned by the caller and
//! released with `nak_algebra_free`. Every fallible call returns a
//! `NakStatus`; on failure `nak_last_error` describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use nakayama::{Algebra, Dim, Error};

/// Stands in for an infinite dimension in `NakSummary`.
pub const NAK_INFINITE: u32 = u32::MAX;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NakStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotCyclic = 4,
    BufferTooSmall = 5,
    StepLimit = 6,
    SelfCheckFailed = 7,
    Unsupported = 8,
    Overflow = 9,
    Panic = 10,
}

/// Opaque algebra handle.
pub struct NakAlgebra(Algebra);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NakSummary {
    pub gldim: u32,
    pub domdim: u32,
    pub findim: u32,
    pub defect: u32,
    pub num_relations: u32,
    pub is_self_injective: bool,
    pub is_gorenstein: bool,
    pub is_higher_auslander: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: NakStatus, msg: impl Into<String>) -> NakStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> NakStatus {
    match e {
        Error::NotCyclic => NakStatus::NotCyclic,
        Error::StepLimitExceeded { .. } => NakStatus::StepLimit,
        Error::SelfCheckFailed(_) => NakStatus::SelfCheckFailed,
        Error::UnsupportedInput(_) => NakStatus::Unsupported,
        _ => NakStatus::InvalidInput,
    }
}

fn from_error(e: Error) -> NakStatus {
    fail(status_of(&e), e.to_string())
}

fn guard<F: FnOnce() -> NakStatus + UnwindSafe>(f: F) -> NakStatus {
    catch_unwind(f).unwrap_or_else(|_| fail(NakStatus::Panic, "internal panic"))
}

fn dim(d: Dim) -> u32 {
    d.finite().unwrap_or(NAK_INFINITE)
}

unsafe fn algebra<'a>(a: *const NakAlgebra) -> Result<&'a Algebra, NakStatus> {
    if a.is_null() {
        return Err(fail(NakStatus::NullPointer, "algebra handle is null"));
    }
    Ok(&(*a).0)
}

unsafe fn emit(out: *mut *mut NakAlgebra, a: Algebra) -> NakStatus {
    *out = Box::into_raw(Box::new(NakAlgebra(a)));
    NakStatus::Ok
}

unsafe fn write_buffer(
    values: &[u32],
    buf: *mut u32,
    cap: usize,
    len_out: *mut usize,
) -> NakStatus {
    if len_out.is_null() {
        return fail(NakStatus::NullPointer, "length pointer is null");
    }
    *len_out = values.len();
    if cap < values.len() {
        return fail(
            NakStatus::BufferTooSmall,
            format!("need room for {} values, got {cap}", values.len()),
        );
    }
    if !values.is_empty() {
        if buf.is_null() {
            return fail(NakStatus::NullPointer, "buffer is null");
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    NakStatus::Ok
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nak_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses text such as `4,3,3,3` or `(2,1)|(3,2,1)`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nak_algebra_parse(
    text: *const c_char,
    out: *mut *mut NakAlgebra,
) -> NakStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(NakStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(NakStatus::InvalidUtf8, "input is not UTF-8");
        };
        match nakayama::parse_algebra(s) {
            Ok(a) => emit(out, a),
            Err(e) => from_error(e),
        }
    })
}

/// Builds an algebra from a raw Kupisch series.
///
/// # Safety
/// `series` must point to `len` values and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nak_algebra_from_series(
    series: *const u32,
    len: usize,
    out: *mut *mut NakAlgebra,
) -> NakStatus {
    guard(|| {
        if out.is_null() || (series.is_null() && len > 0) {
            return fail(NakStatus::NullPointer, "null argument");
        }
        let values = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(series, len).to_vec()
        };
        match Algebra::from_series(values) {
            Ok(a) => emit(out, a),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nak_algebra_free(a: *mut NakAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nak_algebra_rank(a: *const NakAlgebra) -> usize {
    if a.is_null() {
        0
    } else {
        (*a).0.rank()
    }
}

/// Copies the Kupisch series into `buf`. `*len_out` always receives the
/// rank, so a first call with `cap = 0` can size the buffer.
///
/// # Safety
/// `buf` must have room for `cap` values and `len_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn nak_algebra_series(
    a: *const NakAlgebra,
    buf: *mut u32,
    cap: usize,
    len_out: *mut usize,
) -> NakStatus {
    guard(|| match algebra(a) {
        Ok(a) => write_buffer(a.series(), buf, cap, len_out),
        Err(s) => s,
    })
}

/// Text form, released with `nak_string_free`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nak_algebra_to_string(
    a: *const NakAlgebra,
    out: *mut *mut c_char,
) -> NakStatus {
    guard(|| {
        let a = match algebra(a) {
            Ok(a) => a,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(NakStatus::NullPointer, "null argument");
        }
        *out = CString::new(a.to_string()).unwrap().into_raw();
        NakStatus::Ok
    })
}

/// # Safety
/// `s` must come from `nak_algebra_to_string` or be null.
#[no_mangle]
pub unsafe extern "C" fn nak_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Homological summary. Infinite dimensions are reported as `NAK_INFINITE`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nak_algebra_summary(
    a: *const NakAlgebra,
    out: *mut NakSummary,
) -> NakStatus {
    guard(|| {
        let a = match algebra(a) {
            Ok(a) => a,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(NakStatus::NullPointer, "null argument");
        }
        let s = a.summary();
        *out = NakSummary {
            gldim: dim(s.gldim),
            domdim: dim(s.domdim),
            findim: dim(s.findim),
            defect: s.defect as u32,
            num_relations: s.num_relations as u32,
            is_self_injective: s.is_self_injective,
            is_gorenstein: s.is_gorenstein,
            is_higher_auslander: s.is_higher_auslander,
        };
        NakStatus::Ok
    })
}

/// Syzygy filtered algebra of a cyclic algebra.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nak_epsilon(a: *const NakAlgebra, out: *mut *mut NakAlgebra) -> NakStatus {
    guard(|| {
        let a = match algebra(a) {
            Ok(a) => a,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(NakStatus::NullPointer, "null argument");
        }
        match nakayama::epsilon(a) {
            Ok(e) => emit(out, e),
            Err(e) => from_error(e),
        }
    })
}

/// Cyclic algebra whose syzygy filtered algebra is `a`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nak_reverse_epsilon(
    a: *const NakAlgebra,
    out: *mut *mut NakAlgebra,
) -> NakStatus {
    guard(|| {
        let a = match algebra(a) {
            Ok(a) => a,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(NakStatus::NullPointer, "null argument");
        }
        match nakayama::reverse_epsilon(a) {
            Ok(r) => emit(out, r.algebra),
            Err(e) => from_error(e),
        }
    })
}

/// Global dimensions of cyclic higher Auslander algebras of rank `n`, in
/// increasing order. Sizing works as for `nak_algebra_series`.
///
/// # Safety
/// `buf` must have room for `cap` values and `len_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn nak_expected_spectrum(
    n: usize,
    buf: *mut u32,
    cap: usize,
    len_out: *mut usize,
) -> NakStatus {
    guard(|| match nakayama::expected_spectrum(n) {
        Ok(set) => {
            let values: Vec<u32> = set.into_iter().collect();
            write_buffer(&values, buf, cap, len_out)
        }
        Err(e) => from_error(e),
    })
}

/// Number of necklaces of length `n` over `t` colours.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nak_necklace_count(t: u64, n: u32, out: *mut u64) -> NakStatus {
    guard(|| {
        if out.is_null() {
            return fail(NakStatus::NullPointer, "null argument");
        }
        match nakayama::necklace_count(t, n) {
            Ok(v) => match u64::try_from(v) {
                Ok(v) => {
                    *out = v;
                    NakStatus::Ok
                }
                Err(_) => fail(NakStatus::Overflow, format!("N_{t}({n}) exceeds 64 bits")),
            },
            Err(e) => from_error(e),
        }
    })
}
