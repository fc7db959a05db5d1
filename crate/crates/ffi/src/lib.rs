//! C ABI for the pepcd library.
//!
//! Conventions: every fallible function returns a [`PepcdStatus`] and writes
//! its results through out-pointers; handles are opaque and freed with their
//! `_free` function; `pepcd_last_error` returns a thread-local message for
//! the most recent failure on the calling thread. Kind arguments are plain
//! ints matching the exported enum values so that invalid values can be
//! rejected instead of being undefined behavior. `r` may be `INFINITY`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use pepcd::asymptotics;
use pepcd::geometry::Point2;
use pepcd::graphs::{
    arc_density, domination_number, edge_density, reflexivity_graph, underlying_graph,
    DigraphAdjacency, EdgeKind, Kind, OutsidePolicy, PcdInstance,
};
use pepcd::proximity::Expansion;
use pepcd::spatial::{csr_test, CsrTestOptions};
use pepcd::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PepcdStatus {
    Ok = 0,
    /// Null pointer, bad kind value, or argument outside its domain.
    InvalidArgument = 1,
    /// Geometry that cannot support the construction.
    DegenerateInput = 2,
    /// A point outside the required domain.
    OutsideDomain = 3,
    TooFewVertices = 4,
    /// Parameters at which the asymptotic distribution degenerates.
    DegenerateLimit = 5,
    Internal = 6,
}

/// Statistic families for density and domination queries.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PepcdKind {
    Arc = 0,
    And = 1,
    Or = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(msg.replace('\0', " ")).unwrap();
    });
}

fn status_of(e: &Error) -> PepcdStatus {
    match e {
        Error::DegenerateInput(_) => PepcdStatus::DegenerateInput,
        Error::OutsideDomain { .. } => PepcdStatus::OutsideDomain,
        Error::TooFewVertices { .. } => PepcdStatus::TooFewVertices,
        Error::DegenerateLimit(_) => PepcdStatus::DegenerateLimit,
        Error::DomainError(_) | Error::Parse(_) | Error::InvalidWeights(_) => {
            PepcdStatus::InvalidArgument
        }
        _ => PepcdStatus::Internal,
    }
}

fn fail(e: &Error) -> PepcdStatus {
    set_error(&e.to_string());
    status_of(e)
}

fn invalid(msg: &str) -> PepcdStatus {
    set_error(msg);
    PepcdStatus::InvalidArgument
}

fn guard(f: impl FnOnce() -> PepcdStatus) -> PepcdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            PepcdStatus::Internal
        }
    }
}

fn edge_kind(kind: c_int) -> Option<EdgeKind> {
    match kind {
        1 => Some(EdgeKind::And),
        2 => Some(EdgeKind::Or),
        _ => None,
    }
}

fn any_kind(kind: c_int) -> Option<Kind> {
    match kind {
        0 => Some(Kind::Arc),
        1 => Some(Kind::And),
        2 => Some(Kind::Or),
        _ => None,
    }
}

unsafe fn points_from(xy: *const f64, len: usize) -> Option<Vec<Point2>> {
    if xy.is_null() && len > 0 {
        return None;
    }
    if len == 0 {
        return Some(Vec::new());
    }
    let flat = unsafe { std::slice::from_raw_parts(xy, len * 2) };
    Some(flat.chunks_exact(2).map(|c| Point2::new(c[0], c[1])).collect())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pepcd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn pepcd_status_message(status: PepcdStatus) -> *const c_char {
    let msg: &'static str = match status {
        PepcdStatus::Ok => "ok\0",
        PepcdStatus::InvalidArgument => "invalid argument\0",
        PepcdStatus::DegenerateInput => "degenerate input\0",
        PepcdStatus::OutsideDomain => "point outside domain\0",
        PepcdStatus::TooFewVertices => "too few vertices\0",
        PepcdStatus::DegenerateLimit => "degenerate asymptotic limit\0",
        PepcdStatus::Internal => "internal error\0",
    };
    msg.as_ptr() as *const c_char
}

/// Message of the most recent failure on this thread; valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn pepcd_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Asymptotic edge probability p(r) of the AND (1) or OR (2) graph.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pepcd_mean(kind: c_int, r: f64, out: *mut f64) -> PepcdStatus {
    guard(|| {
        let Some(kind) = edge_kind(kind) else { return invalid("kind must be 1 (and) or 2 (or)") };
        if out.is_null() {
            return invalid("null out pointer");
        }
        match asymptotics::mean(r, kind) {
            Ok(v) => {
                unsafe { *out = v };
                PepcdStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Kernel variance Var[h12(r)].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pepcd_kernel_variance(kind: c_int, r: f64, out: *mut f64) -> PepcdStatus {
    guard(|| {
        let Some(kind) = edge_kind(kind) else { return invalid("kind must be 1 (and) or 2 (or)") };
        if out.is_null() {
            return invalid("null out pointer");
        }
        match asymptotics::var_kernel(r, kind) {
            Ok(v) => {
                unsafe { *out = v };
                PepcdStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Kernel covariance nu(r) = Cov[h12(r), h13(r)].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pepcd_kernel_covariance(kind: c_int, r: f64, out: *mut f64) -> PepcdStatus {
    guard(|| {
        let Some(kind) = edge_kind(kind) else { return invalid("kind must be 1 (and) or 2 (or)") };
        if out.is_null() {
            return invalid("null out pointer");
        }
        match asymptotics::cov_kernel(r, kind) {
            Ok(v) => {
                unsafe { *out = v };
                PepcdStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Normal-approximation parameters of the relative edge density:
/// mean p(r) and variance 4 nu(r) / n.
///
/// # Safety
/// Out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pepcd_normal_params(
    kind: c_int,
    n: usize,
    r: f64,
    out_mean: *mut f64,
    out_variance: *mut f64,
) -> PepcdStatus {
    guard(|| {
        let Some(kind) = edge_kind(kind) else { return invalid("kind must be 1 (and) or 2 (or)") };
        if out_mean.is_null() || out_variance.is_null() {
            return invalid("null out pointer");
        }
        match asymptotics::normal_params(n, r, kind) {
            Ok(p) => {
                unsafe {
                    *out_mean = p.mean;
                    *out_variance = p.variance;
                }
                PepcdStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// An opaque built PCD: instance plus its arc matrix.
pub struct PepcdPcd {
    instance: PcdInstance,
    adjacency: DigraphAdjacency,
    excluded: usize,
}

/// Build a PCD from interleaved xy coordinates: `x_xy` holds n (x, y) pairs,
/// `y_xy` holds m anchor pairs (3 anchors for a single triangle, more for a
/// Delaunay triangulation). With `drop_outside` false, a sample point outside
/// the hull fails the build.
///
/// # Safety
/// `x_xy` and `y_xy` must point to `2n` and `2m` readable doubles; the result
/// must be freed with [`pepcd_pcd_free`].
#[no_mangle]
pub unsafe extern "C" fn pepcd_pcd_build(
    x_xy: *const f64,
    n: usize,
    y_xy: *const f64,
    m: usize,
    r: f64,
    drop_outside: bool,
    out: *mut *mut PepcdPcd,
) -> PepcdStatus {
    guard(|| {
        if out.is_null() {
            return invalid("null out pointer");
        }
        let (Some(xs), Some(ys)) =
            (unsafe { points_from(x_xy, n) }, unsafe { points_from(y_xy, m) })
        else {
            return invalid("null data pointer with nonzero length");
        };
        let expansion = match Expansion::new(r) {
            Ok(e) => e,
            Err(e) => return fail(&e),
        };
        let policy = if drop_outside { OutsidePolicy::Drop } else { OutsidePolicy::Reject };
        match PcdInstance::build(&ys, &xs, expansion, policy) {
            Ok((instance, dropped)) => {
                let adjacency = instance.adjacency();
                let handle =
                    Box::new(PepcdPcd { instance, adjacency, excluded: dropped.len() });
                unsafe { *out = Box::into_raw(handle) };
                PepcdStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Free a handle built by [`pepcd_pcd_build`]; null is a no-op.
///
/// # Safety
/// `pcd` must be a pointer from [`pepcd_pcd_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pepcd_pcd_free(pcd: *mut PepcdPcd) {
    if !pcd.is_null() {
        drop(unsafe { Box::from_raw(pcd) });
    }
}

/// Number of retained sample points.
///
/// # Safety
/// `pcd` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pepcd_pcd_sample_size(pcd: *const PepcdPcd) -> usize {
    unsafe { &*pcd }.instance.n()
}

/// Number of sample points dropped as outside the hull.
///
/// # Safety
/// `pcd` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pepcd_pcd_excluded(pcd: *const PepcdPcd) -> usize {
    unsafe { &*pcd }.excluded
}

/// Number of arcs in the digraph.
///
/// # Safety
/// `pcd` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pepcd_pcd_arc_count(pcd: *const PepcdPcd) -> u64 {
    unsafe { &*pcd }.adjacency.arc_count()
}

/// Relative density of the requested statistic: arc density for kind 0, edge
/// density of the reflexivity (1) or underlying (2) graph.
///
/// # Safety
/// `pcd` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pepcd_pcd_density(
    pcd: *const PepcdPcd,
    kind: c_int,
    out: *mut f64,
) -> PepcdStatus {
    guard(|| {
        if pcd.is_null() || out.is_null() {
            return invalid("null pointer");
        }
        let Some(kind) = any_kind(kind) else {
            return invalid("kind must be 0 (arc), 1 (and) or 2 (or)");
        };
        let handle = unsafe { &*pcd };
        let result = match kind {
            Kind::Arc => arc_density(&handle.adjacency),
            Kind::And => edge_density(&reflexivity_graph(&handle.adjacency)),
            Kind::Or => edge_density(&underlying_graph(&handle.adjacency)),
        };
        match result {
            Ok(v) => {
                unsafe { *out = v };
                PepcdStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Domination number of the digraph (kind 0) or derived graph (1, 2); exact
/// by exhaustive search up to `max_exact`, otherwise the greedy bound with
/// `out_exact` false.
///
/// # Safety
/// `pcd` must be a live handle; out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pepcd_pcd_domination(
    pcd: *const PepcdPcd,
    kind: c_int,
    max_exact: usize,
    out_value: *mut usize,
    out_exact: *mut bool,
) -> PepcdStatus {
    guard(|| {
        if pcd.is_null() || out_value.is_null() || out_exact.is_null() {
            return invalid("null pointer");
        }
        let Some(kind) = any_kind(kind) else {
            return invalid("kind must be 0 (arc), 1 (and) or 2 (or)");
        };
        let handle = unsafe { &*pcd };
        let g = domination_number(&handle.adjacency, kind, max_exact);
        unsafe {
            *out_value = g.value;
            *out_exact = g.exact;
        }
        PepcdStatus::Ok
    })
}

/// Result of the CSR test, all fields populated on `Ok`.
#[repr(C)]
#[derive(Copy, Clone, Debug)]
pub struct PepcdCsrResult {
    pub observed: f64,
    pub null_mean: f64,
    pub null_variance: f64,
    pub z: f64,
    pub p_lower: f64,
    pub p_upper: f64,
    pub p_two_sided: f64,
    /// Retained sample size.
    pub n: usize,
    /// Anchor count.
    pub m: usize,
    /// Points dropped as outside the hull.
    pub excluded: usize,
}

/// Complete-spatial-randomness test of the sample against the anchors using
/// the version-I edge density of the AND (1) or OR (2) graph.
///
/// # Safety
/// `x_xy`/`y_xy` as in [`pepcd_pcd_build`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pepcd_csr_test(
    x_xy: *const f64,
    n: usize,
    y_xy: *const f64,
    m: usize,
    r: f64,
    kind: c_int,
    out: *mut PepcdCsrResult,
) -> PepcdStatus {
    guard(|| {
        if out.is_null() {
            return invalid("null out pointer");
        }
        let Some(kind) = edge_kind(kind) else { return invalid("kind must be 1 (and) or 2 (or)") };
        let (Some(xs), Some(ys)) =
            (unsafe { points_from(x_xy, n) }, unsafe { points_from(y_xy, m) })
        else {
            return invalid("null data pointer with nonzero length");
        };
        let expansion = match Expansion::new(r) {
            Ok(e) => e,
            Err(e) => return fail(&e),
        };
        match csr_test(&xs, &ys, expansion, kind, CsrTestOptions::default()) {
            Ok(res) => {
                unsafe {
                    *out = PepcdCsrResult {
                        observed: res.observed,
                        null_mean: res.null_mean,
                        null_variance: res.null_variance,
                        z: res.z,
                        p_lower: res.p_lower,
                        p_upper: res.p_upper,
                        p_two_sided: res.p_two_sided,
                        n: res.n,
                        m: res.m,
                        excluded: res.excluded,
                    };
                }
                PepcdStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}
