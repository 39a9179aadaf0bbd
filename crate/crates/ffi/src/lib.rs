//! C ABI over `rigiditylab`.
//!
//! Objects cross the boundary as opaque handles created and destroyed by
//! paired `*_create`/`*_free` functions. Every fallible call returns an
//! [`RlStatus`] whose nonzero values match the CLI exit codes; the message of
//! the most recent failure on the calling thread is available from
//! [`rl_last_error_message`]. Strings returned through out-pointers are owned
//! by the caller and released with [`rl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rigiditylab::census::{census, group_for_type, DEFAULT_GROUP_CAP};
use rigiditylab::coinv::coinvariant_dim;
use rigiditylab::ff::FiniteField;
use rigiditylab::matgrp::GroupTuple;
use rigiditylab::rigidity::{rigidity_verdict_with, RigidityOptions};
use rigiditylab::rootdata::{cartan_det, j_value, RootSystem};
use rigiditylab::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RlStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArg = 1,
    /// Invalid input: schema, field, tuple or root-system errors.
    Invalid = 2,
    /// A work or size cap was exceeded.
    WorkCap = 3,
    /// A guaranteed mathematical implication failed.
    Theorem = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

/// A finite field `F_{p^k}`.
pub struct RlField {
    inner: FiniteField,
}

/// A validated generator tuple.
pub struct RlTuple {
    inner: GroupTuple,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> RlStatus {
    match e.exit_code() {
        3 => RlStatus::WorkCap,
        4 => RlStatus::Theorem,
        _ => RlStatus::Invalid,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), RlStatus>) -> RlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RlStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            RlStatus::Internal
        }
    }
}

fn fail(e: Error) -> RlStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn null_arg(name: &str) -> RlStatus {
    set_error(&format!("{name} is null"));
    RlStatus::NullArg
}

fn out_string(s: String, out: *mut *mut c_char) -> Result<(), RlStatus> {
    let c = CString::new(s).map_err(|_| fail(Error::Schema("interior NUL in output".into())))?;
    // SAFETY: checked non-null by the caller of this helper.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message of the last failure on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates `F_{p^k}`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn rl_field_create(p: u64, k: u32, out: *mut *mut RlField) -> RlStatus {
    if out.is_null() {
        return null_arg("out");
    }
    guard(|| {
        let inner = FiniteField::new(p, k).map_err(fail)?;
        *out = Box::into_raw(Box::new(RlField { inner }));
        Ok(())
    })
}

/// # Safety
/// `field` must be null or a handle from [`rl_field_create`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_field_free(field: *mut RlField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_field_order(field: *const RlField) -> u64 {
    field.as_ref().map_or(0, |f| f.inner.order())
}

/// Product of two raw element encodings `Σ c_i p^i`.
///
/// # Safety
/// `field` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn rl_field_mul(field: *const RlField, a: u32, b: u32, out: *mut u32) -> RlStatus {
    let Some(f) = field.as_ref() else {
        return null_arg("field");
    };
    if out.is_null() {
        return null_arg("out");
    }
    let q = f.inner.order();
    if u64::from(a) >= q || u64::from(b) >= q {
        return fail(Error::InvalidElement(format!("operand out of range for F_{q}")));
    }
    *out = f.inner.mul(a, b);
    RlStatus::Ok
}

/// Parses and validates a tuple document (the CLI input schema).
///
/// # Safety
/// `json` must be a NUL-terminated UTF-8 string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rl_tuple_from_json(json: *const c_char, out: *mut *mut RlTuple) -> RlStatus {
    if json.is_null() {
        return null_arg("json");
    }
    if out.is_null() {
        return null_arg("out");
    }
    guard(|| {
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| fail(Error::Schema(e.to_string())))?;
        let inner = GroupTuple::from_json(text).map_err(fail)?;
        *out = Box::into_raw(Box::new(RlTuple { inner }));
        Ok(())
    })
}

/// # Safety
/// `tuple` must be null or a handle from [`rl_tuple_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_tuple_free(tuple: *mut RlTuple) {
    if !tuple.is_null() {
        drop(Box::from_raw(tuple));
    }
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `tuple` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_tuple_len(tuple: *const RlTuple) -> usize {
    tuple.as_ref().map_or(0, |t| t.inner.len())
}

/// Dimension of the span of the images of `I - Ad(c_i)` and of the coinvariants.
///
/// # Safety
/// All pointers must be valid; `tuple` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rl_coinvariant_dim(tuple: *const RlTuple, span_dim: *mut usize, coinv_dim: *mut usize) -> RlStatus {
    let Some(t) = tuple.as_ref() else {
        return null_arg("tuple");
    };
    if span_dim.is_null() || coinv_dim.is_null() {
        return null_arg("out");
    }
    guard(|| {
        let r = coinvariant_dim(&t.inner).map_err(fail)?;
        *span_dim = r.span_dim;
        *coinv_dim = r.coinv_dim;
        Ok(())
    })
}

/// The rigidity report as JSON. Free the string with [`rl_string_free`].
///
/// # Safety
/// `tuple` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rl_rigidity_report_json(
    tuple: *const RlTuple,
    assert_irreducible: bool,
    out: *mut *mut c_char,
) -> RlStatus {
    let Some(t) = tuple.as_ref() else {
        return null_arg("tuple");
    };
    if out.is_null() {
        return null_arg("out");
    }
    guard(|| {
        let r = rigidity_verdict_with(&t.inner, RigidityOptions { assert_irreducible }).map_err(fail)?;
        out_string(serde_json::to_string(&r).expect("report serializes"), out)
    })
}

fn root_system(letter: c_char, rank: usize) -> Result<RootSystem, RlStatus> {
    let letter = char::from(letter as u8);
    RootSystem::parse(letter, rank).map_err(fail)
}

/// `j_d`, the largest dimension of a class of order-`d` elements.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rl_j_value(letter: c_char, rank: usize, d: u64, out: *mut usize) -> RlStatus {
    if out.is_null() {
        return null_arg("out");
    }
    guard(|| {
        let rs = root_system(letter, rank)?;
        *out = j_value(&rs, d).map_err(fail)?.j;
        Ok(())
    })
}

/// Determinant of the Cartan matrix.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rl_cartan_det(letter: c_char, rank: usize, out: *mut i64) -> RlStatus {
    if out.is_null() {
        return null_arg("out");
    }
    guard(|| {
        *out = cartan_det(&root_system(letter, rank)?);
        Ok(())
    })
}

/// Census of `T(signature)` into `SL_{rank+1}(q)`, or `PSL` when
/// `projective`, as JSON. Free the string with [`rl_string_free`].
///
/// # Safety
/// `signature` must point to `len` readable values and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn rl_census_json(
    rank: usize,
    q: u64,
    signature: *const u64,
    len: usize,
    projective: bool,
    workers: usize,
    out: *mut *mut c_char,
) -> RlStatus {
    if signature.is_null() {
        return null_arg("signature");
    }
    if out.is_null() {
        return null_arg("out");
    }
    guard(|| {
        let sig = std::slice::from_raw_parts(signature, len);
        let g = group_for_type('A', rank, q, projective, DEFAULT_GROUP_CAP).map_err(fail)?;
        let r = census(&g, sig, workers).map_err(fail)?;
        out_string(serde_json::to_string(&r).expect("census serializes"), out)
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
