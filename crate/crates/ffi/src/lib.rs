//! C ABI over `ccc-core`.
//!
//! Every function returns a [`CccStatus`] and writes results through out
//! pointers. Heap objects (paths, automorphisms, strings) are opaque and must
//! be released with the matching `*_free` function. After a non-`Ok` status,
//! [`ccc_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ccc_core::balance::{self, Mode, WPartition};
use ccc_core::iwe::{self, PathTrace};
use ccc_core::labeling::{self, Automorphism, Orientation};
use ccc_core::report::{render_verification, OutputFormat};
use ccc_core::{oracle, CccError, Dimension, EdgeKind, Vertex};

/// Result code of every `ccc_*` call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CccStatus {
    Ok = 0,
    NullPointer = 1,
    DimensionOutOfRange = 2,
    InvalidVertex = 3,
    NotAdjacent = 4,
    SameVertex = 5,
    /// A resource gate for an otherwise valid dimension.
    Gate = 6,
    MalformedPermutation = 7,
    Parse = 8,
    /// A Rust panic was caught at the boundary.
    Internal = 9,
}

impl From<&CccError> for CccStatus {
    fn from(e: &CccError) -> Self {
        match e {
            CccError::DimensionOutOfRange(_) => CccStatus::DimensionOutOfRange,
            CccError::InvalidVertex { .. } => CccStatus::InvalidVertex,
            CccError::NotAdjacent { .. } => CccStatus::NotAdjacent,
            CccError::SameVertex(_) => CccStatus::SameVertex,
            CccError::Gate { .. } => CccStatus::Gate,
            CccError::MalformedPermutation(_) => CccStatus::MalformedPermutation,
            CccError::Parse { .. } => CccStatus::Parse,
        }
    }
}

/// A vertex: cube word with digit `x_i` in bit `i - 1`, and a 1-based cycle digit.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CccVertex {
    pub word: u32,
    pub cycle: u32,
}

impl From<Vertex> for CccVertex {
    fn from(v: Vertex) -> Self {
        CccVertex {
            word: v.cube_word(),
            cycle: v.cycle_digit(),
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CccEdgeKind {
    Cycle = 0,
    Cube = 1,
}

/// Sizes of `W_uv`, `W_vu` and the equidistant set for one edge.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CccPartition {
    pub u: CccVertex,
    pub v: CccVertex,
    pub kind: CccEdgeKind,
    pub wuv: u64,
    pub wvu: u64,
    pub equal: u64,
}

impl From<&WPartition> for CccPartition {
    fn from(p: &WPartition) -> Self {
        CccPartition {
            u: p.edge.u.into(),
            v: p.edge.v.into(),
            kind: match p.edge.kind {
                EdgeKind::CycleEdge => CccEdgeKind::Cycle,
                EdgeKind::CubeEdge => CccEdgeKind::Cube,
            },
            wuv: p.size_wuv,
            wvu: p.size_wvu,
            equal: p.size_equal,
        }
    }
}

/// Distance-balance verdict. `ndb_constant` is meaningful only when
/// `has_ndb_constant` is true.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CccVerdict {
    pub n: u32,
    pub distance_balanced: bool,
    pub nicely_distance_balanced: bool,
    pub has_ndb_constant: bool,
    pub ndb_constant: u64,
    pub cube_edge: CccPartition,
    pub cycle_edge: CccPartition,
    pub edges_checked: u64,
}

/// Opaque shortest path.
pub struct CccPath(PathTrace);

/// Opaque automorphism.
pub struct CccAutomorphism(Automorphism);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

/// Runs `f` with panics and errors mapped to status codes.
fn guard(f: impl FnOnce() -> Result<(), CccStatus>) -> CccStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CccStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("internal error: {msg}"));
            CccStatus::Internal
        }
    }
}

fn fail(e: CccError) -> CccStatus {
    let status = CccStatus::from(&e);
    set_last_error(e.to_string());
    status
}

fn null(what: &str) -> CccStatus {
    set_last_error(format!("{what} is null"));
    CccStatus::NullPointer
}

/// # Safety
/// `p` must be null or valid for writes.
unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, CccStatus> {
    // SAFETY: per the contract above.
    unsafe { p.as_mut() }.ok_or_else(|| null(what))
}

fn dimension(n: u32) -> Result<Dimension, CccStatus> {
    Dimension::new(n).map_err(fail)
}

fn vertex(v: CccVertex, n: Dimension) -> Result<Vertex, CccStatus> {
    if !(1..=n.get()).contains(&v.cycle) {
        return Err(fail(CccError::InvalidVertex {
            n: n.get(),
            reason: format!("cycle digit {} outside 1..={}", v.cycle, n.get()),
        }));
    }
    n.check(Vertex::new(v.word, v.cycle)).map_err(fail)
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ccc_status_str(status: CccStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CccStatus::Ok => c"ok",
        CccStatus::NullPointer => c"null pointer",
        CccStatus::DimensionOutOfRange => c"dimension out of range",
        CccStatus::InvalidVertex => c"invalid vertex",
        CccStatus::NotAdjacent => c"vertices not adjacent",
        CccStatus::SameVertex => c"same vertex",
        CccStatus::Gate => c"resource gate",
        CccStatus::MalformedPermutation => c"malformed permutation",
        CccStatus::Parse => c"parse error",
        CccStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next `ccc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn ccc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_vertex_count(n: u32, count: *mut u64) -> CccStatus {
    guard(|| {
        let c = ccc_core::graph::vertex_count(n).map_err(fail)?;
        *unsafe { out(count, "count")? } = c;
        Ok(())
    })
}

/// Order of the automorphism group, n 2^(n+1).
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_automorphism_group_size(n: u32, size: *mut u64) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        *unsafe { out(size, "size")? } = labeling::automorphism_group_size(n);
        Ok(())
    })
}

/// Parses `"<bits>:<k>"` for dimension `n`.
///
/// # Safety
/// `text` must be null or a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ccc_parse_vertex(
    n: u32,
    text: *const c_char,
    v: *mut CccVertex,
) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: non-null and NUL-terminated per the contract above.
        let s = unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| {
            set_last_error("vertex text is not UTF-8".into());
            CccStatus::Parse
        })?;
        let parsed = Vertex::parse(s, n).map_err(fail)?;
        *unsafe { out(v, "v")? } = parsed.into();
        Ok(())
    })
}

/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_distance(
    n: u32,
    a: CccVertex,
    b: CccVertex,
    distance: *mut u32,
) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        let d = iwe::distance(vertex(a, n)?, vertex(b, n)?, n).map_err(fail)?;
        *unsafe { out(distance, "distance")? } = d;
        Ok(())
    })
}

/// A shortest path from `a` to `b`; free with [`ccc_path_free`].
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_route(
    n: u32,
    a: CccVertex,
    b: CccVertex,
    path: *mut *mut CccPath,
) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        let slot = unsafe { out(path, "path")? };
        let trace = iwe::shortest_path(vertex(a, n)?, vertex(b, n)?, n).map_err(fail)?;
        *slot = Box::into_raw(Box::new(CccPath(trace)));
        Ok(())
    })
}

/// Number of vertices on the path (edges + 1); 0 for null.
///
/// # Safety
/// `path` must be null or a live handle from [`ccc_route`].
#[no_mangle]
pub unsafe extern "C" fn ccc_path_vertex_count(path: *const CccPath) -> usize {
    // SAFETY: per the contract above.
    unsafe { path.as_ref() }.map_or(0, |p| p.0.vertices.len())
}

/// Vertex `index` of the path.
///
/// # Safety
/// `path` must be null or a live handle from [`ccc_route`].
#[no_mangle]
pub unsafe extern "C" fn ccc_path_get(
    path: *const CccPath,
    index: usize,
    v: *mut CccVertex,
) -> CccStatus {
    guard(|| {
        // SAFETY: per the contract above.
        let p = unsafe { path.as_ref() }.ok_or_else(|| null("path"))?;
        let slot = unsafe { out(v, "v")? };
        let x = p.0.vertices.get(index).ok_or_else(|| {
            set_last_error(format!(
                "index {index} beyond path of {} vertices",
                p.0.vertices.len()
            ));
            CccStatus::InvalidVertex
        })?;
        *slot = (*x).into();
        Ok(())
    })
}

/// # Safety
/// `path` must be null or a handle from [`ccc_route`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccc_path_free(path: *mut CccPath) {
    if !path.is_null() {
        // SAFETY: allocated by Box::into_raw in ccc_route.
        drop(unsafe { Box::from_raw(path) });
    }
}

/// W-partition sizes of the edge `u`-`v`.
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_w_partition(
    n: u32,
    u: CccVertex,
    v: CccVertex,
    partition: *mut CccPartition,
) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        let slot = unsafe { out(partition, "partition")? };
        let p = balance::w_partition(vertex(u, n)?, vertex(v, n)?, n, false).map_err(fail)?;
        *slot = (&p).into();
        Ok(())
    })
}

/// Distance-balance verdict; `exhaustive` checks every edge (n <= 9).
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_analyze(
    n: u32,
    exhaustive: bool,
    verdict: *mut CccVerdict,
) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        let slot = unsafe { out(verdict, "verdict")? };
        let mode = if exhaustive {
            Mode::Exhaustive
        } else {
            Mode::Representative
        };
        let v = balance::analyze(n, mode, false).map_err(fail)?;
        *slot = CccVerdict {
            n: n.get(),
            distance_balanced: v.distance_balanced,
            nicely_distance_balanced: v.nicely_distance_balanced(),
            has_ndb_constant: v.ndb_constant.is_some(),
            ndb_constant: v.ndb_constant.unwrap_or(0),
            cube_edge: (&v.cube_edge).into(),
            cycle_edge: (&v.cycle_edge).into(),
            edges_checked: v.edges_checked,
        };
        Ok(())
    })
}

/// # Safety
/// `slot` must be null or valid for writes.
unsafe fn store(slot: *mut *mut CccAutomorphism, a: Automorphism) -> Result<(), CccStatus> {
    *unsafe { out(slot, "automorphism")? } = Box::into_raw(Box::new(CccAutomorphism(a)));
    Ok(())
}

/// The automorphism labelling `anchor` as the base vertex; `reverse` flips
/// the orientation of its cycle.
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_labeling_from(
    n: u32,
    anchor: CccVertex,
    reverse: bool,
    automorphism: *mut *mut CccAutomorphism,
) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        let o = if reverse {
            Orientation::Reverse
        } else {
            Orientation::Forward
        };
        let a = labeling::labeling_from(vertex(anchor, n)?, o, n).map_err(fail)?;
        unsafe { store(automorphism, a) }
    })
}

/// An automorphism exchanging the endpoints of the edge `u`-`v`.
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_swap_automorphism(
    n: u32,
    u: CccVertex,
    v: CccVertex,
    automorphism: *mut *mut CccAutomorphism,
) -> CccStatus {
    guard(|| {
        let n = dimension(n)?;
        let a = labeling::swap_automorphism(vertex(u, n)?, vertex(v, n)?, n).map_err(fail)?;
        unsafe { store(automorphism, a) }
    })
}

/// # Safety
/// `automorphism` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccc_automorphism_apply(
    automorphism: *const CccAutomorphism,
    v: CccVertex,
    image: *mut CccVertex,
) -> CccStatus {
    guard(|| {
        // SAFETY: per the contract above.
        let a = unsafe { automorphism.as_ref() }.ok_or_else(|| null("automorphism"))?;
        let slot = unsafe { out(image, "image")? };
        let x = vertex(v, a.0.dimension())?;
        *slot = a.0.apply(x).map_err(fail)?.into();
        Ok(())
    })
}

/// # Safety
/// `automorphism` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccc_automorphism_free(automorphism: *mut CccAutomorphism) {
    if !automorphism.is_null() {
        // SAFETY: allocated by Box::into_raw in `store`.
        drop(unsafe { Box::from_raw(automorphism) });
    }
}

/// Runs the oracle cross-checks for n in 3..=n_max (n_max <= 9) and returns
/// the report as JSON. Free the string with [`ccc_string_free`].
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ccc_verify_json(
    n_max: u32,
    json: *mut *mut c_char,
    all_passed: *mut bool,
) -> CccStatus {
    guard(|| {
        let slot = unsafe { out(json, "json")? };
        let report = oracle::verify(n_max).map_err(fail)?;
        // SAFETY: null or valid for writes per the contract above.
        if let Some(flag) = unsafe { all_passed.as_mut() } {
            *flag = report.all_passed;
        }
        let text = render_verification(&report, OutputFormat::Json);
        *slot = CString::new(text).expect("json has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccc_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by CString::into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(word: u32, cycle: u32) -> CccVertex {
        CccVertex { word, cycle }
    }

    #[test]
    fn error_mapping() {
        let mut d = 0u32;
        unsafe {
            assert_eq!(
                ccc_distance(2, v(0, 1), v(0, 1), &mut d),
                CccStatus::DimensionOutOfRange
            );
            assert_eq!(
                ccc_distance(3, v(0, 4), v(0, 1), &mut d),
                CccStatus::InvalidVertex
            );
            assert_eq!(
                ccc_distance(3, v(8, 1), v(0, 1), &mut d),
                CccStatus::InvalidVertex
            );
            assert_eq!(
                ccc_distance(3, v(0, 0), v(0, 1), &mut d),
                CccStatus::InvalidVertex
            );
            assert!(!ccc_last_error().is_null());
            assert_eq!(
                ccc_distance(3, v(0, 1), v(0, 1), ptr::null_mut()),
                CccStatus::NullPointer
            );
            assert_eq!(ccc_distance(3, v(0, 1), v(2, 2), &mut d), CccStatus::Ok);
            assert_eq!(d, 2);
            assert!(ccc_last_error().is_null());
        }
    }

    #[test]
    fn status_strings_are_static() {
        let s = unsafe { CStr::from_ptr(ccc_status_str(CccStatus::Gate)) };
        assert_eq!(s.to_str().unwrap(), "resource gate");
    }

    #[test]
    fn guard_catches_panics() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, CccStatus::Internal);
        let msg = unsafe { CStr::from_ptr(ccc_last_error()) };
        assert!(msg.to_str().unwrap().contains("boom"));
    }
}
