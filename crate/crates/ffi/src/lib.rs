//! C ABI for the spectral-rank library.
//!
//! Conventions:
//! - Graphs are opaque handles (`SrGraph*`) created by the constructors and
//!   released with [`sr_graph_free`].
//! - Every fallible function returns an [`SrStatus`]; outputs are written
//!   through pointers only on `SR_STATUS_OK`.
//! - Strings returned through `char**` are heap-allocated and must be
//!   released with [`sr_string_free`]. Strings returned as `const char*`
//!   are static and must not be freed.
//! - All entry points catch panics and convert them to `SR_STATUS_PANIC`;
//!   nothing unwinds across the boundary.

use spectral_rank::report::parse_graph_input;
use spectral_rank::{
    largest_real_root, min_rank5_extremal, parse_graph6, spectral_radius, to_graph6, Error, Graph,
};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrStatus {
    /// Success; outputs are valid.
    SrStatusOk = 0,
    /// A required pointer argument was null.
    SrStatusNullArgument = 1,
    /// A string argument was not valid UTF-8.
    SrStatusInvalidUtf8 = 2,
    /// The input was syntactically or semantically invalid.
    SrStatusInvalidInput = 3,
    /// A numeric computation failed (non-convergence, internal error).
    SrStatusComputationFailed = 4,
    /// A panic was caught at the boundary.
    SrStatusPanic = 5,
}

use SrStatus::*;

/// Opaque graph handle.
pub struct SrGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let cstring = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error message unavailable").expect("static"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn status_for(err: &Error) -> SrStatus {
    match err {
        Error::InvalidComposition(_)
        | Error::LengthMismatch { .. }
        | Error::UnknownGraphId(_)
        | Error::Graph6(_)
        | Error::VertexOutOfRange { .. }
        | Error::InvalidEdge { .. }
        | Error::EdgeAbsent { .. }
        | Error::RotationPrecondition(_)
        | Error::Disconnected
        | Error::NonUnitVector { .. }
        | Error::InvalidPartition(_)
        | Error::OrderTooLarge { .. }
        | Error::InvalidArgument(_) => SrStatusInvalidInput,
        Error::ConvergenceFailure { .. }
        | Error::NotEquitable { .. }
        | Error::NoRealRoot
        | Error::ZeroPolynomial
        | Error::GoldenData(_)
        | Error::Internal(_) => SrStatusComputationFailed,
    }
}

fn guarded(body: impl FnOnce() -> SrStatus) -> SrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("panic caught at the C boundary".to_string());
            SrStatusPanic
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated C string.
unsafe fn read_c_str<'a>(text: *const c_char) -> Result<&'a str, SrStatus> {
    if text.is_null() {
        return Err(SrStatusNullArgument);
    }
    unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| {
        set_last_error("input string is not valid UTF-8".to_string());
        SrStatusInvalidUtf8
    })
}

fn export_graph(graph: Graph, out: *mut *mut SrGraph) -> SrStatus {
    unsafe { *out = Box::into_raw(Box::new(SrGraph { inner: graph })) };
    SrStatusOk
}

fn export_string(text: String, out: *mut *mut c_char) -> SrStatus {
    match CString::new(text) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            SrStatusOk
        }
        Err(_) => {
            set_last_error("output contained an interior NUL byte".to_string());
            SrStatusComputationFailed
        }
    }
}

fn fail(err: Error) -> SrStatus {
    let status = status_for(&err);
    set_last_error(err.to_string());
    status
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn sr_tool_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static description of a status code; do not free.
#[no_mangle]
pub extern "C" fn sr_status_message(status: SrStatus) -> *const c_char {
    let message: &'static str = match status {
        SrStatusOk => "ok\0",
        SrStatusNullArgument => "null pointer argument\0",
        SrStatusInvalidUtf8 => "string argument is not valid UTF-8\0",
        SrStatusInvalidInput => "invalid input\0",
        SrStatusComputationFailed => "computation failed\0",
        SrStatusPanic => "panic caught at the C boundary\0",
    };
    message.as_ptr() as *const c_char
}

/// Most recent error message on this thread, or null if none. The caller
/// owns the returned string and must release it with `sr_string_free`.
#[no_mangle]
pub extern "C" fn sr_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Release a string returned by this library.
///
/// # Safety
/// `text` must be a pointer previously returned by a function in this
/// library that transfers string ownership, or null.
#[no_mangle]
pub unsafe extern "C" fn sr_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

/// Parse a graph6 string into a new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut SrGraph,
) -> SrStatus {
    guarded(|| {
        if out.is_null() {
            return SrStatusNullArgument;
        }
        let text = match unsafe { read_c_str(text) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_graph6(text) {
            Ok(graph) => export_graph(graph, out),
            Err(err) => fail(err),
        }
    })
}

/// Parse any supported graph description: a graph6 string, a family spec
/// `"BASE:n1,n2,..."` (e.g. `"G1:1,1,1,1,4"`), or a catalog id (`"K3"`,
/// `"G10"`).
///
/// # Safety
/// `text` must be a valid NUL-terminated C string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_parse(text: *const c_char, out: *mut *mut SrGraph) -> SrStatus {
    guarded(|| {
        if out.is_null() {
            return SrStatusNullArgument;
        }
        let text = match unsafe { read_c_str(text) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_graph_input(text) {
            Ok(graph) => export_graph(graph, out),
            Err(err) => fail(err),
        }
    })
}

/// The minimum-spectral-radius connected graph of order `n` and adjacency
/// rank 5 (defined for n >= 5).
///
/// # Safety
/// `out` must be a valid pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn sr_min_rank5_extremal(n: usize, out: *mut *mut SrGraph) -> SrStatus {
    guarded(|| {
        if out.is_null() {
            return SrStatusNullArgument;
        }
        match min_rank5_extremal(n) {
            Ok(verdict) => export_graph(verdict.graph, out),
            Err(err) => fail(err),
        }
    })
}

/// Release a graph handle.
///
/// # Safety
/// `graph` must be a handle returned by this library, or null; it must not
/// be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_free(graph: *mut SrGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

unsafe fn with_graph<T>(
    graph: *const SrGraph,
    out: *mut T,
    body: impl FnOnce(&Graph) -> Result<T, Error>,
) -> SrStatus {
    if graph.is_null() || out.is_null() {
        return SrStatusNullArgument;
    }
    let graph = unsafe { &(*graph).inner };
    match body(graph) {
        Ok(value) => {
            unsafe { *out = value };
            SrStatusOk
        }
        Err(err) => fail(err),
    }
}

/// Number of vertices.
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_order(graph: *const SrGraph, out: *mut usize) -> SrStatus {
    guarded(|| unsafe { with_graph(graph, out, |g| Ok(g.n())) })
}

/// Number of edges.
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_edge_count(graph: *const SrGraph, out: *mut usize) -> SrStatus {
    guarded(|| unsafe { with_graph(graph, out, |g| Ok(g.edge_count())) })
}

/// Rank of the adjacency matrix over the rationals (exact).
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_rank(graph: *const SrGraph, out: *mut usize) -> SrStatus {
    guarded(|| unsafe { with_graph(graph, out, |g| Ok(g.adjacency_rank())) })
}

/// Whether the graph is connected (true for the one-vertex graph).
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_is_connected(
    graph: *const SrGraph,
    out: *mut bool,
) -> SrStatus {
    guarded(|| unsafe { with_graph(graph, out, |g| Ok(g.is_connected())) })
}

/// Spectral radius by power iteration on A + I (connected graphs only).
/// `tol` <= 0 selects the default tolerance 1e-12.
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_spectral_radius(
    graph: *const SrGraph,
    tol: f64,
    out: *mut f64,
) -> SrStatus {
    guarded(|| unsafe {
        with_graph(graph, out, |g| {
            let tol = if tol > 0.0 { tol } else { 1e-12 };
            Ok(spectral_radius(g, tol)?.radius)
        })
    })
}

/// Spectral radius as the largest real root of the exact characteristic
/// polynomial (works for disconnected graphs too).
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_charpoly_radius(
    graph: *const SrGraph,
    out: *mut f64,
) -> SrStatus {
    guarded(|| unsafe {
        with_graph(graph, out, |g| {
            let poly = g.adjacency_matrix().charpoly()?;
            largest_real_root(&poly, 1e-12)
        })
    })
}

/// Characteristic polynomial of the adjacency matrix as a JSON array of
/// decimal coefficient strings, constant term first. Caller frees with
/// `sr_string_free`.
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_charpoly_json(
    graph: *const SrGraph,
    out: *mut *mut c_char,
) -> SrStatus {
    guarded(|| {
        if graph.is_null() || out.is_null() {
            return SrStatusNullArgument;
        }
        let graph = unsafe { &(*graph).inner };
        let poly = match graph.adjacency_matrix().charpoly() {
            Ok(p) => p,
            Err(err) => return fail(err),
        };
        match serde_json::to_string(&poly) {
            Ok(json) => export_string(json, out),
            Err(err) => {
                set_last_error(err.to_string());
                SrStatusComputationFailed
            }
        }
    })
}

/// Canonical graph6 encoding. Caller frees with `sr_string_free`.
///
/// # Safety
/// `graph` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_graph_to_graph6(
    graph: *const SrGraph,
    out: *mut *mut c_char,
) -> SrStatus {
    guarded(|| {
        if graph.is_null() || out.is_null() {
            return SrStatusNullArgument;
        }
        let graph = unsafe { &(*graph).inner };
        match to_graph6(graph) {
            Ok(text) => export_string(text, out),
            Err(err) => fail(err),
        }
    })
}
