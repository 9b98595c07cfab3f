//! C ABI over `gsph`.
//!
//! Graphs and diagrams live behind opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns a
//! [`GsphStatus`]; on failure [`gsph_last_error`] describes the problem for
//! the calling thread. Strings are NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gsph::diagram::{bottleneck, diagram_of, DiagramPoint, ExtendedDiagram};
use gsph::digraph::{build_pph_input, WeightedDigraph};
use gsph::hypergraph::{build_hyper_input, FilteredHypergraph};
use gsph::io::{format_diagram, parse_diagram};
use gsph::{IntervalKind, PrimeField};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsphStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    InvalidField = 4,
    OutOfRange = 5,
    ParseError = 6,
    ComputationFailed = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsphKind {
    Ordinary = 0,
    Relative = 1,
    Extended = 2,
}

/// Computation settings; start from [`gsph_options_default`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GsphOptions {
    /// Highest homology dimension.
    pub pmax: usize,
    /// Prime modulus of the coefficient field.
    pub field: u32,
    /// Skip columns already known to reduce to zero.
    pub clearing: bool,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GsphPoint {
    pub dim: usize,
    pub kind: GsphKind,
    pub birth: f64,
    pub death: f64,
}

pub struct GsphDigraph(WeightedDigraph);

pub struct GsphHypergraph(FilteredHypergraph);

pub struct GsphDiagram(ExtendedDiagram);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("NUL bytes removed"));
}

type Outcome = Result<(), (GsphStatus, String)>;

/// Run `body`, record any failure, and map it to a status.
fn guarded<F: FnOnce() -> Outcome>(body: F) -> GsphStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            GsphStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GsphStatus::Panic
        }
    }
}

fn null(what: &str) -> (GsphStatus, String) {
    (GsphStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, (GsphStatus, String)> {
    if ptr.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| (GsphStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, (GsphStatus, String)> {
    ptr.as_ref().ok_or_else(|| null(what))
}

unsafe fn handle_mut<'a, T>(ptr: *mut T, what: &str) -> Result<&'a mut T, (GsphStatus, String)> {
    ptr.as_mut().ok_or_else(|| null(what))
}

unsafe fn options(ptr: *const GsphOptions) -> Result<(GsphOptions, PrimeField), (GsphStatus, String)> {
    let opts = ptr.as_ref().copied().unwrap_or_else(|| gsph_options_default());
    let field = PrimeField::new(opts.field).map_err(|e| (GsphStatus::InvalidField, e.to_string()))?;
    Ok((opts, field))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message describing the last failure on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn gsph_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gsph_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn gsph_options_default() -> GsphOptions {
    GsphOptions {
        pmax: 2,
        field: 2,
        clearing: true,
    }
}

#[no_mangle]
pub extern "C" fn gsph_digraph_new() -> *mut GsphDigraph {
    Box::into_raw(Box::new(GsphDigraph(WeightedDigraph::new())))
}

/// # Safety
/// `graph` is null or was returned by [`gsph_digraph_new`] and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gsph_digraph_free(graph: *mut GsphDigraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` is a live digraph handle and `name` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn gsph_digraph_add_vertex(graph: *mut GsphDigraph, name: *const c_char) -> GsphStatus {
    guarded(|| {
        let g = handle_mut(graph, "graph")?;
        let name = text(name, "name")?;
        g.0.add_vertex(name).map_err(|e| (GsphStatus::InvalidArgument, e.to_string()))
    })
}

/// # Safety
/// `graph` is a live digraph handle; `source` and `target` are NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn gsph_digraph_add_edge(
    graph: *mut GsphDigraph,
    source: *const c_char,
    target: *const c_char,
    weight: f64,
) -> GsphStatus {
    guarded(|| {
        let g = handle_mut(graph, "graph")?;
        let (s, t) = (text(source, "source")?, text(target, "target")?);
        g.0.add_edge(s, t, weight).map_err(|e| (GsphStatus::InvalidArgument, e.to_string()))
    })
}

/// Extended persistence diagram of the digraph's path homology.
/// `options` may be null for the defaults. On success `*out` owns a new diagram.
///
/// # Safety
/// `graph` is a live digraph handle, `options` is null or valid, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gsph_digraph_diagram(
    graph: *const GsphDigraph,
    options: *const GsphOptions,
    out: *mut *mut GsphDiagram,
) -> GsphStatus {
    guarded(|| {
        let g = handle(graph, "graph")?;
        let (opts, field) = self::options(options)?;
        let x = build_pph_input(&g.0, opts.pmax, field);
        let d = diagram_of(&x, opts.pmax, opts.clearing)
            .map_err(|e| (GsphStatus::ComputationFailed, e.to_string()))?;
        store(out, GsphDiagram(d))
    })
}

#[no_mangle]
pub extern "C" fn gsph_hypergraph_new() -> *mut GsphHypergraph {
    Box::into_raw(Box::new(GsphHypergraph(FilteredHypergraph::new())))
}

/// # Safety
/// `graph` is null or was returned by [`gsph_hypergraph_new`] and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gsph_hypergraph_free(graph: *mut GsphHypergraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Add the hyperedge on `count` named vertices with value `value`.
///
/// # Safety
/// `graph` is a live hypergraph handle and `vertices` points to `count`
/// NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn gsph_hypergraph_add_hyperedge(
    graph: *mut GsphHypergraph,
    vertices: *const *const c_char,
    count: usize,
    value: f64,
) -> GsphStatus {
    guarded(|| {
        let h = handle_mut(graph, "graph")?;
        if vertices.is_null() && count > 0 {
            return Err(null("vertices"));
        }
        let names = (0..count)
            .map(|i| text(*vertices.add(i), "vertex name"))
            .collect::<Result<Vec<&str>, _>>()?;
        h.0.add_hyperedge(&names, value)
            .map_err(|e| (GsphStatus::InvalidArgument, e.to_string()))
    })
}

/// Extended persistence diagram of the hypergraph's embedded homology.
///
/// # Safety
/// As for [`gsph_digraph_diagram`].
#[no_mangle]
pub unsafe extern "C" fn gsph_hypergraph_diagram(
    graph: *const GsphHypergraph,
    options: *const GsphOptions,
    out: *mut *mut GsphDiagram,
) -> GsphStatus {
    guarded(|| {
        let h = handle(graph, "graph")?;
        let (opts, field) = self::options(options)?;
        let x = build_hyper_input(&h.0, opts.pmax, field);
        let d = diagram_of(&x, opts.pmax, opts.clearing)
            .map_err(|e| (GsphStatus::ComputationFailed, e.to_string()))?;
        store(out, GsphDiagram(d))
    })
}

/// Parse a diagram in the tab-separated text format.
///
/// # Safety
/// `source` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gsph_diagram_parse(source: *const c_char, out: *mut *mut GsphDiagram) -> GsphStatus {
    guarded(|| {
        let s = text(source, "source")?;
        let d = parse_diagram(s).map_err(|e| (GsphStatus::ParseError, e.to_string()))?;
        store(out, GsphDiagram(d))
    })
}

/// Tab-separated text of the diagram. Free the result with [`gsph_string_free`].
///
/// # Safety
/// `diagram` is a live diagram handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gsph_diagram_format(diagram: *const GsphDiagram, out: *mut *mut c_char) -> GsphStatus {
    guarded(|| {
        let d = handle(diagram, "diagram")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let s = CString::new(format_diagram(&d.0)).expect("diagram text has no NUL");
        *out = s.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` is null or was returned by [`gsph_diagram_format`] and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gsph_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `diagram` is null or a diagram handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gsph_diagram_free(diagram: *mut GsphDiagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}

/// Number of points; zero for a null handle.
///
/// # Safety
/// `diagram` is null or a live diagram handle.
#[no_mangle]
pub unsafe extern "C" fn gsph_diagram_len(diagram: *const GsphDiagram) -> usize {
    diagram.as_ref().map_or(0, |d| d.0.len())
}

/// Copy point `index` (in dimension, kind, birth, death order) into `*out`.
///
/// # Safety
/// `diagram` is a live diagram handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gsph_diagram_point(
    diagram: *const GsphDiagram,
    index: usize,
    out: *mut GsphPoint,
) -> GsphStatus {
    guarded(|| {
        let d = handle(diagram, "diagram")?;
        let p = d.0.points().get(index).ok_or_else(|| {
            (
                GsphStatus::OutOfRange,
                format!("point {index} requested from a diagram of {} points", d.0.len()),
            )
        })?;
        let slot = handle_mut(out, "output pointer")?;
        *slot = GsphPoint {
            dim: p.dim,
            kind: match p.kind {
                IntervalKind::Ordinary => GsphKind::Ordinary,
                IntervalKind::Relative => GsphKind::Relative,
                IntervalKind::Extended => GsphKind::Extended,
            },
            birth: p.birth,
            death: p.death,
        };
        Ok(())
    })
}

/// Bottleneck distance in dimension `dim`; `*out` is `INFINITY` when the
/// extended parts have different sizes.
///
/// # Safety
/// `left` and `right` are live diagram handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gsph_bottleneck(
    left: *const GsphDiagram,
    right: *const GsphDiagram,
    dim: usize,
    out: *mut f64,
) -> GsphStatus {
    guarded(|| {
        let (a, b) = (handle(left, "left")?, handle(right, "right")?);
        let slot = handle_mut(out, "output pointer")?;
        *slot = bottleneck(&a.0, &b.0, dim).distance;
        Ok(())
    })
}

/// Build a diagram from `count` points.
///
/// # Safety
/// `points` points to `count` readable values, each with a valid `kind`,
/// and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gsph_diagram_from_points(
    points: *const GsphPoint,
    count: usize,
    out: *mut *mut GsphDiagram,
) -> GsphStatus {
    guarded(|| {
        if points.is_null() && count > 0 {
            return Err(null("points"));
        }
        let slice = if count == 0 { &[][..] } else { std::slice::from_raw_parts(points, count) };
        let mut converted = Vec::with_capacity(count);
        for (i, p) in slice.iter().enumerate() {
            if !(p.birth.is_finite() && p.death.is_finite()) {
                return Err((GsphStatus::InvalidArgument, format!("point {i} is not finite")));
            }
            converted.push(DiagramPoint {
                dim: p.dim,
                kind: match p.kind {
                    GsphKind::Ordinary => IntervalKind::Ordinary,
                    GsphKind::Relative => IntervalKind::Relative,
                    GsphKind::Extended => IntervalKind::Extended,
                },
                birth: p.birth,
                death: p.death,
            });
        }
        store(out, GsphDiagram(ExtendedDiagram::new(converted)))
    })
}
