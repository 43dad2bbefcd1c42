//! C ABI for the sparsehs library.
//!
//! Instances, graphs and vertex sets cross the boundary as opaque handles
//! created by `shs_*_new`/`shs_*_from_*` and released with the matching
//! `shs_*_free`. Every fallible call returns a [`ShsStatus`] and writes its
//! result through an out-pointer; on failure `shs_last_error` describes what
//! went wrong on the calling thread.
//!
//! Set families are passed in CSR form: `count` sets, `offsets` holding
//! `count + 1` ascending positions into `data`, set `i` being
//! `data[offsets[i]..offsets[i + 1]]`. Both pointers may be null when
//! `count` is 0.
//!
//! Pointers must be valid for the lengths given and handles must come from
//! this library and not be used after they are freed.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sparsehs::approx::{fair_vc_approx, rspc_logn_approx, sparse_vc_2approx};
use sparsehs::exact::{highway_dimension_exact, rhd_value, solve_sparse_hs_exact_with_stats};
use sparsehs::graph::WeightedGraph;
use sparsehs::instance::{is_hitting_set, sparseness_of, vertex_cover_instance, SetSystemInstance};
use sparsehs::twosat::solve_sparse_vc_k1;
use sparsehs::{rational, Error, Rational};

/// Result code of every fallible call. Codes 1 to 3 match the exit codes of
/// the command-line tool.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShsStatus {
    Ok = 0,
    /// A supplied object failed validation.
    Invalid = 1,
    /// An exact search ran out of its node budget.
    BudgetExhausted = 2,
    /// Malformed or out-of-range input.
    InputError = 3,
    /// The problem has no solution (for example no sparseness-1 cover).
    Infeasible = 4,
    NullPointer = 5,
    /// The library panicked; this is a bug.
    Panic = 6,
}

/// A Sparse-HS instance: universe size, family F to hit, family B to keep
/// sparse.
pub struct ShsInstance {
    inner: SetSystemInstance,
}

/// A graph with positive rational edge lengths.
pub struct ShsGraph {
    inner: WeightedGraph,
}

/// A sorted vertex set together with the objective value it achieves.
pub struct ShsVertexSet {
    members: Vec<usize>,
    value: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

enum Failure {
    Null(&'static str),
    Infeasible,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn call(body: impl FnOnce() -> Result<(), Failure>) -> ShsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ShsStatus::Ok
        }
        Ok(Err(Failure::Null(name))) => {
            set_error(format!("{name} is null"));
            ShsStatus::NullPointer
        }
        Ok(Err(Failure::Infeasible)) => {
            set_error("no feasible solution".into());
            ShsStatus::Infeasible
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            match e.exit_code() {
                1 => ShsStatus::Invalid,
                2 => ShsStatus::BudgetExhausted,
                _ => ShsStatus::InputError,
            }
        }
        Err(_) => {
            set_error("internal panic".into());
            ShsStatus::Panic
        }
    }
}

fn non_null<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, Failure> {
    unsafe { p.as_ref() }.ok_or(Failure::Null(name))
}

fn out<'a, T>(p: *mut T, name: &'static str) -> Result<&'a mut T, Failure> {
    unsafe { p.as_mut() }.ok_or(Failure::Null(name))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, name: &'static str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::Null(name));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn text<'a>(p: *const c_char, name: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Lib(Error::Input(format!("{name} is not valid UTF-8"))))
}

unsafe fn family(offsets: *const usize, data: *const usize, count: usize) -> Result<Vec<Vec<usize>>, Failure> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let offsets = slice(offsets, count + 1, "offsets")?;
    if offsets.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Input("offsets must be ascending".into()).into());
    }
    let data = slice(data, offsets[count], "data")?;
    Ok(offsets.windows(2).map(|w| data[w[0]..w[1]].to_vec()).collect())
}

fn radius(num: i64, den: i64) -> Result<Rational, Failure> {
    if den <= 0 {
        return Err(Error::Input(format!("radius denominator {den} must be positive")).into());
    }
    Ok(rational::ratio(num, den))
}

fn emit(set: *mut *mut ShsVertexSet, members: Vec<usize>, value: usize) {
    unsafe { *set = Box::into_raw(Box::new(ShsVertexSet { members, value })) };
}

/// Message for the last failed call on this thread, or null after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn shs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn shs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds an instance over `0..n` from F and B in CSR form. Sets are
/// deduplicated; an empty set in F is an input error.
#[no_mangle]
pub unsafe extern "C" fn shs_instance_new(
    n: usize,
    f_offsets: *const usize,
    f_data: *const usize,
    f_count: usize,
    b_offsets: *const usize,
    b_data: *const usize,
    b_count: usize,
    instance: *mut *mut ShsInstance,
) -> ShsStatus {
    call(|| {
        let slot = out(instance, "instance")?;
        let f = family(f_offsets, f_data, f_count)?;
        let b = family(b_offsets, b_data, b_count)?;
        let inner = SetSystemInstance::new(n, f, b)?;
        *slot = Box::into_raw(Box::new(ShsInstance { inner }));
        Ok(())
    })
}

/// Parses an instance from `{"n": .., "F": [[..]], "B": [[..]]}`.
#[no_mangle]
pub unsafe extern "C" fn shs_instance_from_json(json: *const c_char, instance: *mut *mut ShsInstance) -> ShsStatus {
    call(|| {
        let slot = out(instance, "instance")?;
        let inner = SetSystemInstance::from_json(text(json, "json")?)?;
        *slot = Box::into_raw(Box::new(ShsInstance { inner }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn shs_instance_free(instance: *mut ShsInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Maximum of `|H ∩ B|` over all sets B of the instance.
#[no_mangle]
pub unsafe extern "C" fn shs_sparseness(
    instance: *const ShsInstance,
    members: *const usize,
    len: usize,
    sparseness: *mut usize,
) -> ShsStatus {
    call(|| {
        let inst = non_null(instance, "instance")?;
        let slot = out(sparseness, "sparseness")?;
        *slot = sparseness_of(&inst.inner, slice(members, len, "members")?)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn shs_is_hitting_set(
    instance: *const ShsInstance,
    members: *const usize,
    len: usize,
    hits: *mut bool,
) -> ShsStatus {
    call(|| {
        let inst = non_null(instance, "instance")?;
        let slot = out(hits, "hits")?;
        *slot = is_hitting_set(&inst.inner, slice(members, len, "members")?)?;
        Ok(())
    })
}

/// Optimal hitting set of minimum sparseness (fewest vertices, then the
/// lexicographically smallest among optima). `nodes` may be null.
#[no_mangle]
pub unsafe extern "C" fn shs_solve_exact(
    instance: *const ShsInstance,
    budget: u64,
    solution: *mut *mut ShsVertexSet,
    nodes: *mut u64,
) -> ShsStatus {
    call(|| {
        let inst = non_null(instance, "instance")?;
        out(solution, "solution")?;
        let (sol, stats) = solve_sparse_hs_exact_with_stats(&inst.inner, budget)?;
        if let Some(n) = nodes.as_mut() {
            *n = stats.nodes;
        }
        emit(solution, sol.members, sol.sparseness);
        Ok(())
    })
}

/// Parses the edge-list format: a `n m` header, then `u v length` lines with
/// lengths written as `num/den` or integers.
#[no_mangle]
pub unsafe extern "C" fn shs_graph_from_edge_list(source: *const c_char, graph: *mut *mut ShsGraph) -> ShsStatus {
    call(|| {
        let slot = out(graph, "graph")?;
        let inner = WeightedGraph::parse_edge_list(text(source, "source")?)?;
        *slot = Box::into_raw(Box::new(ShsGraph { inner }));
        Ok(())
    })
}

/// Builds a graph from `m` edges `{us[i], vs[i]}` of length
/// `nums[i] / dens[i]`.
#[no_mangle]
pub unsafe extern "C" fn shs_graph_new(
    n: usize,
    us: *const usize,
    vs: *const usize,
    nums: *const i64,
    dens: *const i64,
    m: usize,
    graph: *mut *mut ShsGraph,
) -> ShsStatus {
    call(|| {
        let slot = out(graph, "graph")?;
        let (us, vs) = (slice(us, m, "us")?, slice(vs, m, "vs")?);
        let (nums, dens) = (slice(nums, m, "nums")?, slice(dens, m, "dens")?);
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            edges.push((us[i], vs[i], radius(nums[i], dens[i])?));
        }
        let inner = WeightedGraph::new(n, edges)?;
        *slot = Box::into_raw(Box::new(ShsGraph { inner }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn shs_graph_free(graph: *mut ShsGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn shs_graph_vertex_count(graph: *const ShsGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// Exact highway dimension: the maximum r-HD value over all radii.
#[no_mangle]
pub unsafe extern "C" fn shs_highway_dimension(graph: *const ShsGraph, value: *mut usize) -> ShsStatus {
    call(|| {
        let g = non_null(graph, "graph")?;
        let slot = out(value, "value")?;
        *slot = highway_dimension_exact(&g.inner)?;
        Ok(())
    })
}

/// Exact r-HD value at `r = r_num / r_den`.
#[no_mangle]
pub unsafe extern "C" fn shs_rhd_value(graph: *const ShsGraph, r_num: i64, r_den: i64, value: *mut usize) -> ShsStatus {
    call(|| {
        let g = non_null(graph, "graph")?;
        let slot = out(value, "value")?;
        *slot = rhd_value(&g.inner, &radius(r_num, r_den)?)?.value;
        Ok(())
    })
}

/// Vertex cover meeting every ball in at most one vertex. Returns
/// `SHS_STATUS_INFEASIBLE` and leaves `solution` untouched if none exists.
#[no_mangle]
pub unsafe extern "C" fn shs_sparse_vc_k1(
    graph: *const ShsGraph,
    ball_offsets: *const usize,
    ball_data: *const usize,
    ball_count: usize,
    solution: *mut *mut ShsVertexSet,
) -> ShsStatus {
    call(|| {
        let g = non_null(graph, "graph")?;
        out(solution, "solution")?;
        let balls = family(ball_offsets, ball_data, ball_count)?;
        let cover = solve_sparse_vc_k1(&g.inner, &balls)?.ok_or(Failure::Infeasible)?;
        let value = sparseness_of(&vertex_cover_instance(&g.inner, &balls)?, &cover)?;
        emit(solution, cover, value);
        Ok(())
    })
}

/// LP-rounding vertex cover with sparseness at most twice the optimum.
#[no_mangle]
pub unsafe extern "C" fn shs_sparse_vc_2approx(
    graph: *const ShsGraph,
    ball_offsets: *const usize,
    ball_data: *const usize,
    ball_count: usize,
    solution: *mut *mut ShsVertexSet,
) -> ShsStatus {
    call(|| {
        let g = non_null(graph, "graph")?;
        out(solution, "solution")?;
        let balls = family(ball_offsets, ball_data, ball_count)?;
        let got = sparse_vc_2approx(&g.inner, &balls)?.solution;
        emit(solution, got.members, got.sparseness);
        Ok(())
    })
}

/// Vertex cover with closed-neighborhood sparseness at most `2 OPT - 1`.
#[no_mangle]
pub unsafe extern "C" fn shs_fair_vc_approx(graph: *const ShsGraph, solution: *mut *mut ShsVertexSet) -> ShsStatus {
    call(|| {
        let g = non_null(graph, "graph")?;
        out(solution, "solution")?;
        let got = fair_vc_approx(&g.inner)?.solution;
        emit(solution, got.members, got.sparseness);
        Ok(())
    })
}

/// Seeded r-SPC approximation at `r = r_num / r_den`: a hub set hitting
/// every shortest path of length in `(r, 2r]`, valued by its sparseness on
/// the radius-`2r` balls.
#[no_mangle]
pub unsafe extern "C" fn shs_rspc_approx(
    graph: *const ShsGraph,
    r_num: i64,
    r_den: i64,
    seed: u64,
    solution: *mut *mut ShsVertexSet,
) -> ShsStatus {
    call(|| {
        let g = non_null(graph, "graph")?;
        out(solution, "solution")?;
        let got = rspc_logn_approx(&g.inner, &radius(r_num, r_den)?, seed)?.solution;
        emit(solution, got.members, got.sparseness);
        Ok(())
    })
}

/// Number of vertices in the set, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn shs_vertex_set_len(set: *const ShsVertexSet) -> usize {
    set.as_ref().map_or(0, |s| s.members.len())
}

/// Objective value the set achieves (its sparseness), or 0 for a null
/// handle.
#[no_mangle]
pub unsafe extern "C" fn shs_vertex_set_value(set: *const ShsVertexSet) -> usize {
    set.as_ref().map_or(0, |s| s.value)
}

/// Copies up to `capacity` vertices in ascending order into `buffer` and
/// returns the full set size, so a short buffer can be detected.
#[no_mangle]
pub unsafe extern "C" fn shs_vertex_set_copy(set: *const ShsVertexSet, buffer: *mut usize, capacity: usize) -> usize {
    let Some(s) = set.as_ref() else { return 0 };
    if !buffer.is_null() {
        let n = capacity.min(s.members.len());
        ptr::copy_nonoverlapping(s.members.as_ptr(), buffer, n);
    }
    s.members.len()
}

#[no_mangle]
pub unsafe extern "C" fn shs_vertex_set_free(set: *mut ShsVertexSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}
