//! C ABI over the tilescope library.
//!
//! Every function returns a [`TsStatus`]. On failure a message is kept per thread and can
//! be read with [`ts_last_error_message`]. Handles are opaque and owned by the caller, who
//! releases them with the matching `_free` function. Strings returned through out-pointers
//! are NUL-terminated and must be released with [`ts_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tilescope::belts::belts_of;
use tilescope::classify::{is_translative_tile, is_twofold_translative_tile};
use tilescope::geometry::format_rational;
use tilescope::io::{parse_lattice, parse_polytope};
use tilescope::multiplicity::{verify_lattice_tiling_with, Lattice, Verdict, VerifyOptions};
use tilescope::{Polytope, TilingError};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedInput = 3,
    PreconditionViolation = 4,
    InternalFailure = 5,
    Panic = 6,
}

/// Outcome of a lattice multiplicity check.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsVerdict {
    Constant = 0,
    NonConstant = 1,
    NotCovering = 2,
}

/// A convex polygon or polyhedron with exact rational vertices.
pub struct TsPolytope(Polytope);

/// A full-rank lattice of translation vectors.
pub struct TsLattice(Lattice);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(e: TilingError) -> TsStatus {
    set_error(e.to_string());
    match e.exit_code() {
        1 => TsStatus::MalformedInput,
        2 => TsStatus::PreconditionViolation,
        _ => TsStatus::InternalFailure,
    }
}

/// Clears the error slot, runs `f`, and converts panics into [`TsStatus::Panic`].
fn guard(f: impl FnOnce() -> TsStatus) -> TsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("panic inside tilescope");
        TsStatus::Panic
    })
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(concat!("null pointer: ", stringify!($p)));
            return TsStatus::NullPointer;
        })+
    };
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TsStatus> {
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        TsStatus::InvalidUtf8
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior NUL").into_raw();
}

/// Parses `{"dim": d, "vertices": [["p/q", ...], ...]}` into a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_polytope_from_json(json: *const c_char, out: *mut *mut TsPolytope) -> TsStatus {
    guard(|| {
        non_null!(json, out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_polytope(text) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(TsPolytope(p)));
                TsStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `p` must come from [`ts_polytope_from_json`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ts_polytope_free(p: *mut TsPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_polytope_dim(p: *const TsPolytope, out: *mut u32) -> TsStatus {
    guard(|| {
        non_null!(p, out);
        *out = (*p).0.dim() as u32;
        TsStatus::Ok
    })
}

/// Exact volume (area in 2D) as a `"p/q"` string.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_polytope_volume(p: *const TsPolytope, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        non_null!(p, out);
        write_string(out, format_rational(&(*p).0.volume()));
        TsStatus::Ok
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_is_translative_tile(p: *const TsPolytope, out: *mut bool) -> TsStatus {
    guard(|| {
        non_null!(p, out);
        match is_translative_tile(&(*p).0) {
            Ok(d) => {
                *out = d.is_tile();
                TsStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_is_twofold_translative_tile(p: *const TsPolytope, out: *mut bool) -> TsStatus {
    guard(|| {
        non_null!(p, out);
        match is_twofold_translative_tile(&(*p).0) {
            Ok(d) => {
                *out = d.is_tile();
                TsStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Writes up to `cap` belt sizes into `sizes` and the total belt count into `len`.
/// Pass `sizes = NULL, cap = 0` to query the count.
///
/// # Safety
/// `p` must be a live handle, `len` a valid pointer, and `sizes` valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn ts_belt_sizes(
    p: *const TsPolytope,
    sizes: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TsStatus {
    guard(|| {
        non_null!(p, len);
        if cap > 0 {
            non_null!(sizes);
        }
        match belts_of(&(*p).0) {
            Ok(belts) => {
                *len = belts.len();
                for (i, b) in belts.iter().take(cap).enumerate() {
                    *sizes.add(i) = b.size;
                }
                TsStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Full analysis report as a JSON string.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_analyze_json(p: *const TsPolytope, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        non_null!(p, out);
        match tilescope::report::analyze(&(*p).0) {
            Ok(r) => {
                write_string(out, serde_json::Value::Object(r).to_string());
                TsStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Parses `{"lattice": [[...], ...]}`, one basis vector per inner array.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_lattice_from_json(json: *const c_char, out: *mut *mut TsLattice) -> TsStatus {
    guard(|| {
        non_null!(json, out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_lattice(text) {
            Ok(l) => {
                *out = Box::into_raw(Box::new(TsLattice(l)));
                TsStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `l` must come from [`ts_lattice_from_json`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ts_lattice_free(l: *mut TsLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Checks whether `P + Λ` covers space a constant number of times. `k` receives the
/// multiplicity for a constant verdict and 0 otherwise. `samples` and `seed` only affect 3D.
///
/// # Safety
/// `p` and `l` must be live handles; `verdict` and `k` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ts_verify_lattice(
    p: *const TsPolytope,
    l: *const TsLattice,
    samples: usize,
    seed: u64,
    verdict: *mut TsVerdict,
    k: *mut u64,
) -> TsStatus {
    guard(|| {
        non_null!(p, l, verdict, k);
        let opts = VerifyOptions { samples, seed };
        match verify_lattice_tiling_with(&(*p).0, &(*l).0, &opts) {
            Ok(r) => {
                let (v, m) = match r.verdict {
                    Verdict::Constant { k } => (TsVerdict::Constant, k),
                    Verdict::NonConstant { .. } => (TsVerdict::NonConstant, 0),
                    Verdict::NotCovering { .. } => (TsVerdict::NotCovering, 0),
                };
                *verdict = v;
                *k = m;
                TsStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn ts_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
