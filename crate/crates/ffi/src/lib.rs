//! C ABI for the exact Ramsey-multiplicity toolkit. Graphs travel as opaque
//! handles, results as heap-allocated JSON strings in the same format the
//! command-line tool prints, and every entry point returns an [`RfStatus`].
//! Panics never unwind across the boundary; they surface as
//! `RfStatus::Panic`.
//!
//! Ownership rules: handles from `rf_graph_*` constructors are released with
//! [`rf_graph_free`]; strings written to an out-parameter are released with
//! [`rf_string_free`]. Out-parameters are always written: null/0 on failure.

use ramsey_forge::envelope;
use ramsey_forge::graph::{Graph, MAX_VERTICES};
use ramsey_forge::graph6::{parse_graph_text, write_graph6};
use ramsey_forge::numbers::{parse_ratio, ratio, Ratio};
use ramsey_forge::objective::{m_objective, make_context, PairContext};
use ramsey_forge::perturb::sweep;
use ramsey_forge::search::{exhaustive_minimize, local_search, with_pool, LocalOptions};
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result of every fallible call. Values above `Ok` match the command-line
/// tool's exit codes where one exists.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Malformed graph text, rational, or other unparseable input.
    ParseError = 2,
    /// Structurally invalid input (order out of range, edgeless pattern, ...).
    InvalidArgument = 3,
    /// The host graph is smaller than the patterns require.
    SizeError = 4,
    /// The requested exhaustive search exceeds the vertex cap.
    BudgetExceeded = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Search strategy selector for [`rf_search_json`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfSearchMode {
    /// Score every host of the given order; exact but capped.
    Exhaustive = 0,
    /// Steepest-descent with seeded restarts; an upper bound.
    Local = 1,
}

/// Opaque graph handle.
pub struct RfGraph {
    inner: Graph,
}

fn guarded(body: impl FnOnce() -> RfStatus) -> RfStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(RfStatus::Panic)
}

/// Reads a borrowed C string; the caller keeps ownership.
unsafe fn text_in<'a>(text: *const c_char) -> Result<&'a str, RfStatus> {
    if text.is_null() {
        return Err(RfStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| RfStatus::ParseError)
}

fn graph_out(g: Graph, out: *mut *mut RfGraph) -> RfStatus {
    unsafe {
        *out = Box::into_raw(Box::new(RfGraph { inner: g }));
    }
    RfStatus::Ok
}

fn string_out(text: String, out: *mut *mut c_char) -> RfStatus {
    // JSON and graph6 are NUL-free, so CString cannot fail here
    let c = CString::new(text).expect("output text contains no NUL");
    unsafe {
        *out = c.into_raw();
    }
    RfStatus::Ok
}

unsafe fn borrow<'a>(g: *const RfGraph) -> Result<&'a Graph, RfStatus> {
    g.as_ref().map(|h| &h.inner).ok_or(RfStatus::NullArgument)
}

fn checked_context(h1: &Graph, h2: &Graph) -> Result<PairContext, RfStatus> {
    if h1.edge_count() == 0 || h2.edge_count() == 0 {
        return Err(RfStatus::InvalidArgument);
    }
    Ok(make_context(h1, h2))
}

fn checked_order(ctx: &PairContext, n: u32) -> Result<usize, RfStatus> {
    let n = n as usize;
    if n > MAX_VERTICES {
        return Err(RfStatus::InvalidArgument);
    }
    if n < ctx.v1.max(ctx.v2) {
        return Err(RfStatus::SizeError);
    }
    Ok(n)
}

/// Parses graph text (graph6, or a 0-indexed `u v` edge list) into a new
/// handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer;
/// `*out` receives either an owned handle (release with [`rf_graph_free`])
/// or null.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_parse(
    text: *const c_char,
    out: *mut *mut RfGraph,
) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| {
        let text = match text_in(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_graph_text(text) {
            Ok(g) => graph_out(g, out),
            Err(_) => RfStatus::ParseError,
        }
    })
}

/// Releases a handle returned by this library. Null is a no-op.
///
/// # Safety
/// `g` must be null or an owned handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_free(g: *mut RfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string written by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string this library wrote, not freed before.
#[no_mangle]
pub unsafe extern "C" fn rf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes the graph's graph6 encoding.
///
/// # Safety
/// `g` must be a live handle; `*out` receives an owned string (release with
/// [`rf_string_free`]) or null.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_write_g6(
    g: *const RfGraph,
    out: *mut *mut c_char,
) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| match borrow(g) {
        Ok(graph) => string_out(write_graph6(graph), out),
        Err(status) => status,
    })
}

/// Builds the complement as a new handle.
///
/// # Safety
/// `g` must be a live handle; `*out` receives an owned handle or null.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_complement(
    g: *const RfGraph,
    out: *mut *mut RfGraph,
) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| match borrow(g) {
        Ok(graph) => graph_out(graph.complement(), out),
        Err(status) => status,
    })
}

/// Writes the number of vertices.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_order(g: *const RfGraph, out: *mut u32) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = 0;
    guarded(|| match borrow(g) {
        Ok(graph) => {
            *out = graph.n() as u32;
            RfStatus::Ok
        }
        Err(status) => status,
    })
}

/// Writes the number of edges.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_edge_count(g: *const RfGraph, out: *mut u32) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = 0;
    guarded(|| match borrow(g) {
        Ok(graph) => {
            *out = graph.edge_count() as u32;
            RfStatus::Ok
        }
        Err(status) => status,
    })
}

/// Evaluates the two-pattern objective of `h1`, `h2` on the host `g` and
/// writes the same JSON document the command-line tool prints.
///
/// # Safety
/// All handles must be live; `*out` receives an owned string or null.
#[no_mangle]
pub unsafe extern "C" fn rf_objective_json(
    h1: *const RfGraph,
    h2: *const RfGraph,
    g: *const RfGraph,
    out: *mut *mut c_char,
) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| {
        let (h1, h2, g) = match (borrow(h1), borrow(h2), borrow(g)) {
            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
            _ => return RfStatus::NullArgument,
        };
        let ctx = match checked_context(h1, h2) {
            Ok(ctx) => ctx,
            Err(status) => return status,
        };
        if g.n() < ctx.v1.max(ctx.v2) {
            return RfStatus::SizeError;
        }
        let value = m_objective(&ctx, g);
        let doc = envelope::objective_document(h1, h2, g, &ctx, &value);
        string_out(pretty(&doc), out)
    })
}

/// Minimizes the objective over all hosts of order `n` and writes the JSON
/// report. `seed` only matters in local mode; `max_n` raises the exhaustive
/// cap (hard limit 8); `jobs` bounds parallelism, 0 meaning the ambient
/// pool, and never changes the result.
///
/// # Safety
/// `h1`/`h2` must be live handles; `*out` receives an owned string or null.
#[no_mangle]
pub unsafe extern "C" fn rf_search_json(
    h1: *const RfGraph,
    h2: *const RfGraph,
    n: u32,
    mode: RfSearchMode,
    seed: u64,
    max_n: u32,
    jobs: u32,
    out: *mut *mut c_char,
) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| {
        let (h1, h2) = match (borrow(h1), borrow(h2)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return RfStatus::NullArgument,
        };
        let ctx = match checked_context(h1, h2) {
            Ok(ctx) => ctx,
            Err(status) => return status,
        };
        let n = match checked_order(&ctx, n) {
            Ok(n) => n,
            Err(status) => return status,
        };
        let report = match mode {
            RfSearchMode::Exhaustive => {
                match exhaustive_minimize(&ctx, n, max_n as usize, jobs as usize) {
                    Ok(report) => report,
                    Err(_) => return RfStatus::BudgetExceeded,
                }
            }
            RfSearchMode::Local => {
                local_search(&ctx, n, seed, &LocalOptions::default(), jobs as usize)
            }
        };
        let doc = envelope::search_document(h1, h2, seed, max_n as usize, &report);
        string_out(pretty(&doc), out)
    })
}

/// Sweeps the exact expected objective of the random clique-deletion
/// construction over an epsilon grid and writes the JSON report. `grid` is
/// a comma-separated list of rationals in [0, 1]; null selects the default
/// 0, 1/100, ..., 1/10.
///
/// # Safety
/// `h1`/`h2` must be live handles; `grid` null or NUL-terminated; `*out`
/// receives an owned string or null.
#[no_mangle]
pub unsafe extern "C" fn rf_perturb_json(
    h1: *const RfGraph,
    h2: *const RfGraph,
    n: u32,
    grid: *const c_char,
    jobs: u32,
    out: *mut *mut c_char,
) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| {
        let (h1, h2) = match (borrow(h1), borrow(h2)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return RfStatus::NullArgument,
        };
        let ctx = match checked_context(h1, h2) {
            Ok(ctx) => ctx,
            Err(status) => return status,
        };
        if ctx.chi2 < 3 {
            return RfStatus::InvalidArgument;
        }
        // the sweep never materializes the n-vertex host, so only the lower
        // bound applies
        let n = n as usize;
        if n < ctx.v1.max(ctx.v2) {
            return RfStatus::SizeError;
        }
        let grid = if grid.is_null() {
            (0..=10).map(|i| ratio(i, 100)).collect()
        } else {
            let text = match text_in(grid) {
                Ok(t) => t,
                Err(status) => return status,
            };
            match parse_grid(text) {
                Ok(grid) => grid,
                Err(status) => return status,
            }
        };
        let report = with_pool(jobs as usize, || sweep(&ctx, n, &grid));
        let doc = envelope::perturb_document(h1, h2, &ctx, &report);
        string_out(pretty(&doc), out)
    })
}

/// Writes the colouring counts and closed-form bounds for one pattern as
/// JSON. The nearly-proper fields are present only when the chromatic
/// number is at least 3.
///
/// # Safety
/// `h` must be a live handle; `*out` receives an owned string or null.
#[no_mangle]
pub unsafe extern "C" fn rf_bounds_json(h: *const RfGraph, out: *mut *mut c_char) -> RfStatus {
    if out.is_null() {
        return RfStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guarded(|| match borrow(h) {
        Ok(graph) => string_out(pretty(&envelope::bounds_document(graph)), out),
        Err(status) => status,
    })
}

fn pretty(doc: &serde_json::Value) -> String {
    serde_json::to_string_pretty(doc).expect("serializable")
}

fn parse_grid(text: &str) -> Result<Vec<Ratio>, RfStatus> {
    let mut grid = Vec::new();
    for field in text.split(',') {
        let eps = parse_ratio(field.trim()).ok_or(RfStatus::ParseError)?;
        if eps < ratio(0, 1) || eps > ratio(1, 1) {
            return Err(RfStatus::InvalidArgument);
        }
        grid.push(eps);
    }
    if grid.is_empty() {
        return Err(RfStatus::ParseError);
    }
    Ok(grid)
}
