//! C ABI over `feasreg`.
//!
//! Every fallible function returns a [`FeasregStatus`]; on failure the
//! message is available from [`feasreg_last_error`] on the same thread.
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `_free` function. Strings returned by the library are released
//! with [`feasreg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use feasreg::boundary::{self, NamedCurve};
use feasreg::constructions::{ConstructionKind, ConstructionSpec};
use feasreg::optimizer::{optimize_profile_with, OptimizerOptions, Sense};
use feasreg::{Error, Graph, QuantumGraph};
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasregStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Capability = 5,
    Construction = 6,
    /// An output buffer is too small; the required length is still written.
    BufferTooSmall = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasregSense {
    Max = 0,
    Min = 1,
}

/// Opaque simple graph.
pub struct FeasregGraph(Graph);

/// Opaque quantum graph.
pub struct FeasregQuantum(QuantumGraph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(FeasregStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain(_) => FeasregStatus::Domain,
            Error::Capability(_) => FeasregStatus::Capability,
            Error::Construction { .. } => FeasregStatus::Construction,
            Error::Parse(_) => FeasregStatus::Parse,
            Error::Io(_) | Error::Json(_) => FeasregStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FeasregStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FeasregStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FeasregStatus::Ok
        }
        Ok(Err(Failure(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            FeasregStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(FeasregStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message of the last failure on this thread; empty after a success. The
/// pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn feasreg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn feasreg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses graph6 into a new handle.
///
/// # Safety
/// `g6` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn feasreg_graph_from_graph6(g6: *const c_char, out: *mut *mut FeasregGraph) -> FeasregStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let g = Graph::from_graph6(str_arg(g6, "g6")?)?;
        *out = Box::into_raw(Box::new(FeasregGraph(g)));
        Ok(())
    })
}

/// Builds `h-star`, `bipartite-b`, `clique-isolated`, `coclique-joined`
/// (using `x`) or `turan` (using `r`) on `n` vertices.
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn feasreg_construct(
    kind: *const c_char,
    n: usize,
    x: f64,
    r: usize,
    out: *mut *mut FeasregGraph,
) -> FeasregStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let kind: ConstructionKind = str_arg(kind, "kind")?.parse()?;
        let g = ConstructionSpec { kind, n, x, r }.build()?;
        *out = Box::into_raw(Box::new(FeasregGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn feasreg_graph_free(g: *mut FeasregGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn feasreg_graph_order(g: *const FeasregGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn feasreg_graph_edge_count(g: *const FeasregGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// graph6 encoding; free the result with [`feasreg_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn feasreg_graph_to_graph6(g: *const FeasregGraph, out: *mut *mut c_char) -> FeasregStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let g = ref_arg(g, "graph")?;
        let s = CString::new(g.0.to_graph6()).map_err(|e| Failure(FeasregStatus::Internal, e.to_string()))?;
        *out = s.into_raw();
        Ok(())
    })
}

/// Parses a quantum graph such as `"K3 + E3"` or `"2*g6:Bw + -0.5*C4"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn feasreg_quantum_parse(spec: *const c_char, out: *mut *mut FeasregQuantum) -> FeasregStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let q: QuantumGraph = str_arg(spec, "spec")?.parse()?;
        *out = Box::into_raw(Box::new(FeasregQuantum(q)));
        Ok(())
    })
}

/// # Safety
/// `q` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn feasreg_quantum_free(q: *mut FeasregQuantum) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Induced density `ρ(Q, G)`.
///
/// # Safety
/// `q` and `g` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn feasreg_quantum_density(
    q: *const FeasregQuantum,
    g: *const FeasregGraph,
    out: *mut f64,
) -> FeasregStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ref_arg(q, "quantum")?.0.density(&ref_arg(g, "graph")?.0)?;
        Ok(())
    })
}

/// Expected density in the random graph of edge density `x`.
///
/// # Safety
/// `q` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn feasreg_quantum_rand_density(
    q: *const FeasregQuantum,
    x: f64,
    out: *mut f64,
) -> FeasregStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ref_arg(q, "quantum")?.0.rand_density(x)?;
        Ok(())
    })
}

/// Evaluates a named boundary curve (`k3minus`, `g3`, `h4`, `goodman-lower`,
/// `c4-large`, ...) at `x`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn feasreg_curve_eval(name: *const c_char, x: f64, out: *mut f64) -> FeasregStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let curve: NamedCurve = str_arg(name, "name")?.parse()?;
        *out = curve.eval(x)?;
        Ok(())
    })
}

/// Exact inducibility of `K_t^-` as `numerator / denominator`; capability
/// error if either does not fit in 64 bits.
///
/// # Safety
/// `numerator` and `denominator` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn feasreg_ind_kt_minus(t: usize, numerator: *mut u64, denominator: *mut u64) -> FeasregStatus {
    guard(|| {
        let num = out_arg(numerator, "numerator")?;
        let den = out_arg(denominator, "denominator")?;
        let v = boundary::ind_kt_minus(t)?;
        match (v.numer().to_u64(), v.denom().to_u64()) {
            (Some(a), Some(b)) => {
                *num = a;
                *den = b;
                Ok(())
            }
            _ => Err(Failure(
                FeasregStatus::Capability,
                format!("ind(K_{t}^-) = {v} overflows 64 bits"),
            )),
        }
    })
}

/// Optimises the limit density of `q` over complete multipartite profiles
/// with at most `r` parts at edge density `x`. Writes the optimum to
/// `value`, the number of parts to `parts`, and the part fractions (in
/// decreasing order) to `profile` when `capacity` suffices.
///
/// # Safety
/// `q` must be a live handle; `value` and `parts` valid pointers; `profile`
/// null or valid for `capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn feasreg_optimize_profile(
    q: *const FeasregQuantum,
    r: usize,
    x: f64,
    sense: FeasregSense,
    seed: u64,
    value: *mut f64,
    profile: *mut f64,
    capacity: usize,
    parts: *mut usize,
) -> FeasregStatus {
    guard(|| {
        let value = out_arg(value, "value")?;
        let parts = out_arg(parts, "parts")?;
        let q = ref_arg(q, "quantum")?;
        let sense = match sense {
            FeasregSense::Max => Sense::Max,
            FeasregSense::Min => Sense::Min,
        };
        let opts = OptimizerOptions {
            seed,
            ..OptimizerOptions::default()
        };
        let best = optimize_profile_with(&q.0, r, x, sense, &opts)?;
        let fr = best.profile.fractions();
        *value = best.value;
        *parts = fr.len();
        if profile.is_null() || capacity < fr.len() {
            return Err(Failure(
                FeasregStatus::BufferTooSmall,
                format!("profile needs {} slots, got {capacity}", fr.len()),
            ));
        }
        ptr::copy_nonoverlapping(fr.as_ptr(), profile, fr.len());
        Ok(())
    })
}
