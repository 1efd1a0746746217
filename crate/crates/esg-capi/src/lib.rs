//! C ABI surface for the esg library.
//!
//! Handles are opaque pointers owned by the library; every string returned
//! through an out-parameter must be released with `esg_string_free`. All
//! entry points return `EsgStatus`; on failure the thread-local message
//! from `esg_last_error` describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use esg::classify::classify;
use esg::graph::SignedGraph;
use esg::output::{classification_json, spectra_json};

/// Result of every C entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EsgStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The graph text did not parse.
    ParseError = 3,
    /// The graph violates a size bound of the requested operation.
    Unsupported = 4,
    /// The graph violates a precondition (connectivity or the
    /// smallest-eigenvalue bound) of the requested operation.
    Precondition = 5,
    /// The operation panicked; this indicates a library bug.
    Internal = 6,
}

/// Opaque handle to an edge-signed graph.
pub struct EsgGraph {
    inner: SignedGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("nul bytes removed");
    });
}

fn string_out(text: String, out: *mut *mut c_char) -> EsgStatus {
    let sanitized = text.replace('\0', " ");
    let c = CString::new(sanitized).expect("nul bytes removed");
    unsafe { *out = c.into_raw() };
    EsgStatus::Ok
}

fn guarded(body: impl FnOnce() -> EsgStatus) -> EsgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            EsgStatus::Internal
        }
    }
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread; never free
/// it.
#[no_mangle]
pub extern "C" fn esg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parse graph text ("vertices N" then "edge U V SIGN" lines) into a new
/// handle. On success `*out` owns the graph; release it with
/// `esg_graph_free`.
///
/// # Safety
/// `text` must point to a nul-terminated string and `out` to writable
/// pointer storage.
#[no_mangle]
pub unsafe extern "C" fn esg_graph_parse(
    text: *const c_char,
    out: *mut *mut EsgGraph,
) -> EsgStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            set_error("null argument");
            return EsgStatus::NullArgument;
        }
        let raw = unsafe { CStr::from_ptr(text) };
        let Ok(utf8) = raw.to_str() else {
            set_error("graph text is not valid UTF-8");
            return EsgStatus::InvalidUtf8;
        };
        match SignedGraph::parse_esg(utf8) {
            Ok(g) => {
                let handle = Box::new(EsgGraph { inner: g });
                unsafe { *out = Box::into_raw(handle) };
                EsgStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                unsafe { *out = ptr::null_mut() };
                EsgStatus::ParseError
            }
        }
    })
}

/// Release a handle returned by `esg_graph_parse`. Null is ignored.
///
/// # Safety
/// `g` must be null or a pointer previously returned by
/// `esg_graph_parse` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn esg_graph_free(g: *mut EsgGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn esg_graph_vertex_count(g: *const EsgGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    unsafe { &*g }.inner.n()
}

/// Canonical switching-class key as a hex string; equal strings mean
/// switching-equivalent graphs. Release `*out` with `esg_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn esg_graph_canonical_key(
    g: *const EsgGraph,
    out: *mut *mut c_char,
) -> EsgStatus {
    guarded(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return EsgStatus::NullArgument;
        }
        match unsafe { &*g }.inner.canonical_key() {
            Ok(key) => string_out(key.hex(), out),
            Err(e) => {
                set_error(&e.to_string());
                EsgStatus::Unsupported
            }
        }
    })
}

/// Decide switching equivalence of two graphs, writing the verdict to
/// `*out`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable bool storage.
#[no_mangle]
pub unsafe extern "C" fn esg_graph_equivalent(
    a: *const EsgGraph,
    b: *const EsgGraph,
    out: *mut bool,
) -> EsgStatus {
    guarded(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            set_error("null argument");
            return EsgStatus::NullArgument;
        }
        let ga = &unsafe { &*a }.inner;
        let gb = &unsafe { &*b }.inner;
        match ga.switching_equivalent(gb) {
            Ok(v) => {
                unsafe { *out = v };
                EsgStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                EsgStatus::Unsupported
            }
        }
    })
}

/// Characteristic polynomial, certified smallest-eigenvalue interval, and
/// the exact trichotomy against -2, as a JSON document. Release `*out`
/// with `esg_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn esg_graph_spectra_json(
    g: *const EsgGraph,
    out: *mut *mut c_char,
) -> EsgStatus {
    guarded(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return EsgStatus::NullArgument;
        }
        string_out(spectra_json(&unsafe { &*g }.inner).to_string(), out)
    })
}

/// Structural classification (tree line graph, odd-unicyclic line graph,
/// doubled-edge extension, or exceptional) with representation matrix and
/// switching certificate, as a JSON document. Requires a connected graph
/// with smallest eigenvalue above -2. Release `*out` with
/// `esg_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn esg_graph_classify_json(
    g: *const EsgGraph,
    out: *mut *mut c_char,
) -> EsgStatus {
    guarded(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return EsgStatus::NullArgument;
        }
        match classify(&unsafe { &*g }.inner) {
            Ok(result) => string_out(classification_json(&result).to_string(), out),
            Err(e) => {
                set_error(&e.to_string());
                EsgStatus::Precondition
            }
        }
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string pointer returned by this library that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn esg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
