//! C ABI over the `upse` library.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json` or
//! by the algorithms, and released with the matching `*_free`. Every fallible
//! call returns an [`UpseStatus`]; on failure `upse_last_error` describes the
//! problem until the next call on the same thread. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use upse::construct::ConstructError;
use upse::digraph::{caterpillar_decompose, OrientedPath};
use upse::geometry::{is_convex_position, is_general_position, is_one_sided};
use upse::reduction::{certificate, reduce, ThreePartitionInstance};
use upse::{io, Digraph, Embedding, Enumerator, PointSet};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpseStatus {
    /// Success, or a decision answered true.
    Ok = 0,
    /// A decision answered false.
    False = 1,
    /// Malformed input or a null pointer.
    InvalidArgument = 2,
    /// Well-formed input violating an algorithm's preconditions.
    Precondition = 3,
    /// An internal invariant failed.
    Internal = 4,
}

pub struct UpsePointSet(PointSet);
pub struct UpseDigraph(Digraph);
pub struct UpseEmbedding(Embedding);
pub struct UpseEmbeddingList(Vec<UpseEmbedding>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: UpseStatus, msg: impl Into<String>) -> UpseStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> UpseStatus) -> UpseStatus {
    set_error("");
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(UpseStatus::Internal, "panic inside upse"))
}

fn construct_status(e: ConstructError) -> UpseStatus {
    let s = if matches!(e, ConstructError::Internal(_)) { UpseStatus::Internal } else { UpseStatus::Precondition };
    fail(s, e.to_string())
}

unsafe fn json_arg(json: *const c_char) -> Result<serde_json::Value, UpseStatus> {
    if json.is_null() {
        return Err(fail(UpseStatus::InvalidArgument, "null JSON string"));
    }
    let text =
        CStr::from_ptr(json).to_str().map_err(|_| fail(UpseStatus::InvalidArgument, "JSON string is not UTF-8"))?;
    serde_json::from_str(text).map_err(|e| fail(UpseStatus::InvalidArgument, format!("malformed JSON: {e}")))
}

fn list(v: Vec<Embedding>) -> UpseEmbeddingList {
    UpseEmbeddingList(v.into_iter().map(UpseEmbedding).collect())
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> UpseStatus {
    if out.is_null() {
        return fail(UpseStatus::InvalidArgument, "null output pointer");
    }
    *out = Box::into_raw(Box::new(value));
    UpseStatus::Ok
}

macro_rules! deref {
    ($($p:ident),+) => {
        $(
            let Some($p) = $p.as_ref() else {
                return fail(UpseStatus::InvalidArgument, concat!("null ", stringify!($p)));
            };
        )+
    };
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next `upse_*` call on this thread.
#[no_mangle]
pub extern "C" fn upse_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_point_set_from_json(json: *const c_char, out: *mut *mut UpsePointSet) -> UpseStatus {
    guard(|| {
        let v = match json_arg(json) {
            Ok(v) => v,
            Err(s) => return s,
        };
        match io::point_set_from_json(&v) {
            Ok(s) => put(out, UpsePointSet(s)),
            Err(e) => fail(UpseStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn upse_point_set_free(s: *mut UpsePointSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn upse_point_set_len(s: *const UpsePointSet) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Classification flags; `convex` and `one_sided` are false unless the set is
/// in general position.
///
/// # Safety
/// `s` must be a live handle; the flag pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_classify(
    s: *const UpsePointSet,
    general: *mut bool,
    convex: *mut bool,
    one_sided: *mut bool,
) -> UpseStatus {
    guard(|| {
        deref!(s);
        if general.is_null() || convex.is_null() || one_sided.is_null() {
            return fail(UpseStatus::InvalidArgument, "null output pointer");
        }
        let g = is_general_position(&s.0);
        *general = g;
        *convex = g && is_convex_position(&s.0) == Ok(true);
        *one_sided = g && is_one_sided(&s.0) == Ok(true);
        UpseStatus::Ok
    })
}

/// Accepts `{"n", "edges"}`, `{"path": "+-"}` or a bare sign string.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_digraph_from_json(json: *const c_char, out: *mut *mut UpseDigraph) -> UpseStatus {
    guard(|| {
        let v = match json_arg(json) {
            Ok(v) => v,
            Err(s) => return s,
        };
        match io::graph_from_json(&v) {
            Ok(g) => put(out, UpseDigraph(g)),
            Err(e) => fail(UpseStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn upse_digraph_free(g: *mut UpseDigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// An embedding of `g` on `s` from `len` point indices.
///
/// # Safety
/// `mapping` must point to `len` readable values; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn upse_embedding_new(
    g: *const UpseDigraph,
    s: *const UpsePointSet,
    mapping: *const usize,
    len: usize,
    out: *mut *mut UpseEmbedding,
) -> UpseStatus {
    guard(|| {
        deref!(g, s);
        if mapping.is_null() && len > 0 {
            return fail(UpseStatus::InvalidArgument, "null mapping");
        }
        let m = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(mapping, len).to_vec() };
        match Embedding::for_graph(&g.0, &s.0, m) {
            Ok(e) => put(out, UpseEmbedding(e)),
            Err(e) => fail(UpseStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `e` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn upse_embedding_free(e: *mut UpseEmbedding) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `e` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn upse_embedding_len(e: *const UpseEmbedding) -> usize {
    e.as_ref().map_or(0, |e| e.0.len())
}

/// Copy up to `cap` point indices into `buf`; returns the full length.
///
/// # Safety
/// `e` must be a live handle; `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn upse_embedding_mapping(e: *const UpseEmbedding, buf: *mut usize, cap: usize) -> usize {
    let Some(e) = e.as_ref() else { return 0 };
    let m = e.0.mapping();
    if !buf.is_null() {
        ptr::copy_nonoverlapping(m.as_ptr(), buf, m.len().min(cap));
    }
    m.len()
}

/// # Safety
/// `l` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn upse_embedding_list_free(l: *mut UpseEmbeddingList) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// # Safety
/// `l` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn upse_embedding_list_len(l: *const UpseEmbeddingList) -> usize {
    l.as_ref().map_or(0, |l| l.0.len())
}

/// A borrowed view of entry `i`, valid while the list lives; null if out of range.
///
/// # Safety
/// `l` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn upse_embedding_list_get(l: *const UpseEmbeddingList, i: usize) -> *const UpseEmbedding {
    match l.as_ref().and_then(|l| l.0.get(i)) {
        Some(e) => e,
        None => ptr::null(),
    }
}

/// `Ok` if `e` is a UPSE of `g` on `s`, `False` otherwise.
///
/// # Safety
/// All handles must be live.
#[no_mangle]
pub unsafe extern "C" fn upse_is_upse(
    g: *const UpseDigraph,
    s: *const UpsePointSet,
    e: *const UpseEmbedding,
) -> UpseStatus {
    guard(|| {
        deref!(g, s, e);
        if upse::is_upse(&g.0, &s.0, &e.0) {
            UpseStatus::Ok
        } else {
            UpseStatus::False
        }
    })
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_count(g: *const UpseDigraph, s: *const UpsePointSet, out: *mut u64) -> UpseStatus {
    guard(|| {
        deref!(g, s);
        if out.is_null() {
            return fail(UpseStatus::InvalidArgument, "null output pointer");
        }
        *out = Enumerator::new(&s.0).count(&g.0, &[]);
        UpseStatus::Ok
    })
}

/// All UPSEs in lexicographic mapping order.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_enumerate(
    g: *const UpseDigraph,
    s: *const UpsePointSet,
    out: *mut *mut UpseEmbeddingList,
) -> UpseStatus {
    guard(|| {
        deref!(g, s);
        put(out, list(Enumerator::new(&s.0).enumerate(&g.0, &[])))
    })
}

/// `Ok` if some UPSE maps vertex `v` to point `p`, `False` otherwise.
///
/// # Safety
/// Handles must be live.
#[no_mangle]
pub unsafe extern "C" fn upse_decide_fixed_vertex(
    g: *const UpseDigraph,
    s: *const UpsePointSet,
    v: usize,
    p: usize,
) -> UpseStatus {
    guard(|| {
        deref!(g, s);
        if v >= g.0.n() || p >= s.0.len() {
            return fail(UpseStatus::InvalidArgument, format!("pin {v}:{p} is out of range"));
        }
        if upse::decide_fixed_vertex(&g.0, &s.0, v, p) {
            UpseStatus::Ok
        } else {
            UpseStatus::False
        }
    })
}

unsafe fn as_path(g: &UpseDigraph) -> Result<OrientedPath, UpseStatus> {
    OrientedPath::from_digraph(&g.0).map_err(|e| fail(UpseStatus::InvalidArgument, e.to_string()))
}

/// All UPSEs of a path on a one-sided convex set of equal size.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_embed_path_one_sided(
    g: *const UpseDigraph,
    s: *const UpsePointSet,
    out: *mut *mut UpseEmbeddingList,
) -> UpseStatus {
    guard(|| {
        deref!(g, s);
        let p = match as_path(g) {
            Ok(p) => p,
            Err(st) => return st,
        };
        match upse::embed_path_one_sided(&p, &s.0) {
            Ok(v) => put(out, list(v)),
            Err(e) => construct_status(e),
        }
    })
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_embed_three_section(
    g: *const UpseDigraph,
    s: *const UpsePointSet,
    out: *mut *mut UpseEmbedding,
) -> UpseStatus {
    guard(|| {
        deref!(g, s);
        let p = match as_path(g) {
            Ok(p) => p,
            Err(st) => return st,
        };
        match upse::embed_three_section(&p, &s.0) {
            Ok(e) => put(out, UpseEmbedding(e)),
            Err(e) => construct_status(e),
        }
    })
}

/// Uses the canonical backbone of the caterpillar `g`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_embed_caterpillar(
    g: *const UpseDigraph,
    s: *const UpsePointSet,
    out: *mut *mut UpseEmbedding,
) -> UpseStatus {
    guard(|| {
        deref!(g, s);
        let c = match caterpillar_decompose(&g.0) {
            Ok(c) => c,
            Err(e) => return fail(UpseStatus::InvalidArgument, e.to_string()),
        };
        match upse::embed_caterpillar(&c, &s.0) {
            Ok(e) => put(out, UpseEmbedding(e)),
            Err(e) => construct_status(e),
        }
    })
}

/// The reduction bundle for a 3-Partition instance as a JSON string, to be
/// released with `upse_string_free`.
///
/// # Safety
/// `values` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upse_reduce_3partition(values: *const u64, len: usize, out: *mut *mut c_char) -> UpseStatus {
    guard(|| {
        if values.is_null() || out.is_null() {
            return fail(UpseStatus::InvalidArgument, "null pointer");
        }
        let vals = std::slice::from_raw_parts(values, len).to_vec();
        let inst = match ThreePartitionInstance::new(vals) {
            Ok(i) => i,
            Err(e) => return fail(UpseStatus::InvalidArgument, e.to_string()),
        };
        let r = match reduce(&inst) {
            Ok(r) => r,
            Err(e) => return fail(UpseStatus::Internal, e.to_string()),
        };
        let text = serde_json::to_string(&io::reduction_to_json(&r, &certificate(&r))).expect("JSON serializes");
        *out = CString::new(text).expect("JSON has no NUL").into_raw();
        UpseStatus::Ok
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn upse_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
