//! C ABI over `chorn`. Objects cross the boundary as opaque handles owned by
//! the caller and released with the matching `*_free`. Every entry point
//! returns a [`ChornStatus`]; on failure the thread-local message from
//! [`chorn_last_error_message`] says why. Strings handed out by the library
//! must be released with [`chorn_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chorn::chromatic::generalized_chromatic;
use chorn::exponent::ExponentVector;
use chorn::graph::{build_graph, find_peo, Graph, GraphFamily, Label};
use chorn::guard::Guard;
use chorn::horn::{horn_verdict, FitCaps, HornConfig};
use chorn::series::{independence_series, series_int_power, TruncatedSeries};
use chorn::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChornStatus {
    Ok = 0,
    /// Null pointer, bad UTF-8, or an argument out of range.
    InvalidArgument = 1,
    /// A graph spec or number failed to parse.
    Parse = 2,
    /// Mathematically invalid input, such as a non-chordal graph where one is required.
    Input = 3,
    /// A size guard or truncation bound was exceeded.
    ResourceLimit = 4,
    /// The caller's buffer is too small; the required length was written.
    BufferTooSmall = 5,
    /// A bug inside the library; the handle arguments are left untouched.
    Panic = 6,
}

/// Opaque graph handle.
pub struct ChornGraph(Graph);

/// Opaque truncated power series handle.
pub struct ChornSeries(TruncatedSeries);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Fail(ChornStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            _ if e.is_resource_limit() => ChornStatus::ResourceLimit,
            Error::Parse(_) | Error::Io(_) => ChornStatus::Parse,
            Error::InvalidArgument(_) => ChornStatus::InvalidArgument,
            _ => ChornStatus::Input,
        };
        Fail(status, e.to_string())
    }
}

fn invalid(message: &str) -> Fail {
    Fail(ChornStatus::InvalidArgument, message.to_string())
}

fn guarded(body: impl FnOnce() -> Result<(), Fail>) -> ChornStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            ChornStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ChornStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(&format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| invalid(&format!("{what} is null")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(invalid(&format!("{what} is null")))
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn out_arg<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn out_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| invalid("result contains a NUL byte"))?;
    out_arg(out, c.into_raw())
}

/// Dense exponents over the graph's labels in ascending order; missing trailing entries are 0.
fn exponent_vector(g: &Graph, exps: &[u32]) -> Result<ExponentVector, Fail> {
    if exps.len() > g.vertex_count() {
        return Err(invalid("more exponents than vertices"));
    }
    let mut dense = exps.to_vec();
    dense.resize(g.vertex_count(), 0);
    Ok(ExponentVector::from_dense(g.labels(), &dense))
}

/// The message for the last failed call on this thread, or "" after a
/// success. Owned by the library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn chorn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn chorn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a finite graph spec: `P:n`, `C:n`, `S:n`, `K:n` or `file:<path>`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chorn_graph_parse(spec: *const c_char, out: *mut *mut ChornGraph) -> ChornStatus {
    guarded(|| {
        let family = GraphFamily::parse(str_arg(spec, "spec")?)?;
        let g = family
            .finite_graph()?
            .ok_or_else(|| invalid("infinite families need a window; use chorn_graph_parse_window"))?;
        out_arg(out, Box::into_raw(Box::new(ChornGraph(g))))
    })
}

/// The induced subgraph of any family, including `Pinf` and `Sinf`, on `window`.
///
/// # Safety
/// `spec` must be NUL-terminated; `window` must hold `len` labels; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chorn_graph_parse_window(
    spec: *const c_char,
    window: *const u32,
    len: usize,
    out: *mut *mut ChornGraph,
) -> ChornStatus {
    guarded(|| {
        let family = GraphFamily::parse(str_arg(spec, "spec")?)?;
        let labels: Vec<Label> = slice_arg(window, len, "window")?.to_vec();
        let g = family.materialize(&labels)?;
        out_arg(out, Box::into_raw(Box::new(ChornGraph(g))))
    })
}

/// A graph on `1..=n` with `edge_count` edges given as consecutive label pairs.
///
/// # Safety
/// `edges` must hold `2 * edge_count` labels; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chorn_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut ChornGraph,
) -> ChornStatus {
    guarded(|| {
        let flat = slice_arg(edges, edge_count.checked_mul(2).ok_or_else(|| invalid("edge_count overflows"))?, "edges")?;
        let pairs: Vec<(Label, Label)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = build_graph(n, &pairs)?;
        out_arg(out, Box::into_raw(Box::new(ChornGraph(g))))
    })
}

/// # Safety
/// `g` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn chorn_graph_free(g: *mut ChornGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn chorn_graph_vertex_count(g: *const ChornGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Writes a perfect elimination ordering into `order`. `*len` is the
/// capacity on entry and the vertex count on return; fails with
/// `CHORN_STATUS_INPUT` for non-chordal graphs.
///
/// # Safety
/// `g` must be live; `order` must have room for `*len` labels.
#[no_mangle]
pub unsafe extern "C" fn chorn_find_peo(g: *const ChornGraph, order: *mut u32, len: *mut usize) -> ChornStatus {
    guarded(|| {
        let g = &ref_arg(g, "graph")?.0;
        let capacity = *ref_arg(len, "len")?;
        let peo = find_peo(g).ok_or(Error::NotChordal)?;
        let n = peo.order().len();
        *len = n;
        if capacity < n {
            return Err(Fail(ChornStatus::BufferTooSmall, format!("need room for {n} labels")));
        }
        if n > 0 {
            if order.is_null() {
                return Err(invalid("order is null"));
            }
            ptr::copy_nonoverlapping(peo.order().as_ptr(), order, n);
        }
        Ok(())
    })
}

/// `I(G, x)^q` truncated at total degree `degree_bound`.
///
/// # Safety
/// `g` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chorn_series_power(
    g: *const ChornGraph,
    q: i64,
    degree_bound: u32,
    out: *mut *mut ChornSeries,
) -> ChornStatus {
    guarded(|| {
        let g = &ref_arg(g, "graph")?.0;
        let s = series_int_power(&independence_series(g, degree_bound), q)?;
        out_arg(out, Box::into_raw(Box::new(ChornSeries(s))))
    })
}

/// # Safety
/// `s` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn chorn_series_free(s: *mut ChornSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// The coefficient of `x^m` as a `"p/q"` string, where `m` is dense over the
/// graph's labels. Pass the same graph the series was built from.
///
/// # Safety
/// Handles must be live; `exps` must hold `len` entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chorn_series_coefficient(
    s: *const ChornSeries,
    g: *const ChornGraph,
    exps: *const u32,
    len: usize,
    out: *mut *mut c_char,
) -> ChornStatus {
    guarded(|| {
        let s = &ref_arg(s, "series")?.0;
        let m = exponent_vector(&ref_arg(g, "graph")?.0, slice_arg(exps, len, "exps")?)?;
        out_string(out, s.coefficient(&m)?.to_string())
    })
}

/// `pi^m_G(q)` as JSON: `{"coeffs": [...], "text": "..."}`, coefficients ascending.
///
/// # Safety
/// `g` must be live; `exps` must hold `len` entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chorn_chromatic_polynomial(
    g: *const ChornGraph,
    exps: *const u32,
    len: usize,
    out: *mut *mut c_char,
) -> ChornStatus {
    guarded(|| {
        let g = &ref_arg(g, "graph")?.0;
        let m = exponent_vector(g, slice_arg(exps, len, "exps")?)?;
        let p = generalized_chromatic(g, &m, Guard::from_env())?;
        let body = serde_json::json!({
            "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "text": p.to_string(),
        });
        out_string(out, body.to_string())
    })
}

/// The bounded Horn verdict for `I(G, x)^{-q}` over all vertices, as JSON.
///
/// # Safety
/// `g` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chorn_horn_verdict(
    g: *const ChornGraph,
    q: i64,
    degree_bound: u32,
    cap_numerator: u32,
    cap_denominator: u32,
    out: *mut *mut c_char,
) -> ChornStatus {
    guarded(|| {
        let g = &ref_arg(g, "graph")?.0;
        let mut config = HornConfig::new(degree_bound, FitCaps { numerator: cap_numerator, denominator: cap_denominator });
        config.guard = Guard::from_env();
        let verdict = horn_verdict(&GraphFamily::Explicit(g.clone()), q, g.labels(), &config)?;
        let text = serde_json::to_string(&verdict).map_err(|e| Fail(ChornStatus::Panic, e.to_string()))?;
        out_string(out, text)
    })
}
