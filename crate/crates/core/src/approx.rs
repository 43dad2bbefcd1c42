//! Approximation algorithms: LP rounding for Sparse-VC and Fair-VC,
//! randomized rounding for Minimum Membership Set Cover, and the r-SPC
//! pipeline that reduces to it.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::mmsc_incidence;
use crate::graph::{self, PathFamily, WeightedGraph, DEFAULT_PATH_CAP};
use crate::instance::{load_against, HittingSolution, VertexId, VertexSet};
use crate::lp::{self, LpStatus};
use crate::rational::{self, Rational};

/// Rounding constant `c` in the inclusion probability `c * ln(|U| + 2) * y`.
pub const MMSC_ROUNDING_FACTOR: f64 = 2.0;
/// Rounding attempts before falling back to greedy.
pub const MMSC_ROUNDS: usize = 64;

/// A rounded LP solution together with the LP optimum it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LpRounding {
    pub solution: HittingSolution,
    #[serde(with = "rational::serde_str")]
    pub lp_value: Rational,
}

fn solution(n: usize, balls: &[VertexSet], members: VertexSet) -> HittingSolution {
    let sparseness = load_against(n, balls, &members);
    HittingSolution { members, sparseness }
}

fn half_or_more(values: &[Rational], n: usize) -> VertexSet {
    let half = rational::half();
    (0..n).filter(|&v| values[v] >= half).collect()
}

/// Solves the Sparse-VC relaxation and keeps every vertex with value at
/// least 1/2. The result is a vertex cover of sparseness at most twice the LP
/// optimum.
pub fn sparse_vc_2approx(g: &WeightedGraph, balls: &[VertexSet]) -> Result<LpRounding> {
    let program = lp::build_sparse_vc_relaxation(g, balls)?;
    let sol = lp::solve_lp(&program)?;
    // x_v = 1 for all v and k = max |B| is always feasible, and k >= 0.
    debug_assert_eq!(sol.status, LpStatus::Optimal);
    let n = g.vertex_count();
    let w = half_or_more(&sol.values, n);
    Ok(LpRounding {
        solution: solution(n, balls, w),
        lp_value: sol.objective_value,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FairVcApprox {
    pub solution: HittingSolution,
    /// The guessed optimum whose rounding was kept.
    pub k_star: usize,
    #[serde(with = "rational::serde_str")]
    pub lp_value: Rational,
}

/// Removes, smallest id first, any vertex whose whole closed neighborhood is
/// in `w`, until no such vertex is left. `w` stays a vertex cover.
pub fn prune_saturated_neighborhoods(g: &WeightedGraph, w: &mut Vec<VertexId>) {
    let mut inside = vec![false; g.vertex_count()];
    for &v in w.iter() {
        inside[v] = true;
    }
    while let Some(v) = (0..g.vertex_count())
        .find(|&v| inside[v] && g.neighbors(v).iter().all(|&(u, _)| inside[u]))
    {
        inside[v] = false;
    }
    w.retain(|&v| inside[v]);
}

/// Fair-VC rounding: for every guess `k*` the relaxation forces all vertices
/// of degree above `k*`, the rounded set is pruned of saturated closed
/// neighborhoods, and the sparsest result over all guesses is returned (the
/// smallest `k*` on ties).
pub fn fair_vc_approx(g: &WeightedGraph) -> Result<FairVcApprox> {
    let n = g.vertex_count();
    let balls: Vec<VertexSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    if g.edge_count() == 0 {
        return Ok(FairVcApprox {
            solution: solution(n, &balls, Vec::new()),
            k_star: 0,
            lp_value: Rational::zero(),
        });
    }
    // Guesses at or above the maximum degree all force nothing, so they give
    // the same program as the maximum degree itself.
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut best: Option<FairVcApprox> = None;
    for k_star in 1..=max_degree.min(n) {
        let program = lp::build_fair_vc_relaxation(g, k_star)?;
        let sol = lp::solve_lp(&program)?;
        if sol.status != LpStatus::Optimal {
            continue;
        }
        let mut w = half_or_more(&sol.values, n);
        prune_saturated_neighborhoods(g, &mut w);
        let candidate = FairVcApprox {
            solution: solution(n, &balls, w),
            k_star,
            lp_value: sol.objective_value,
        };
        if best
            .as_ref()
            .is_none_or(|b| candidate.solution.sparseness < b.solution.sparseness)
        {
            best = Some(candidate);
        }
    }
    Ok(best.expect("with k* = max degree nothing is forced and the program is feasible"))
}

/// MMSC cover produced by randomized rounding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MmscCover {
    pub chosen: Vec<usize>,
    pub membership: usize,
    #[serde(with = "rational::serde_str")]
    pub lp_value: Rational,
    pub seed: u64,
    /// Rounding attempts made; `MMSC_ROUNDS + 1` means the greedy fallback ran.
    pub rounds: usize,
}

/// The MMSC program with duplicate rows dropped and dominated rows removed:
/// a coverage row implies every row over a superset, and a membership row
/// implies every row over a subset. The optimum is unchanged.
fn reduced_mmsc_program(set_count: usize, containing: &[Vec<usize>]) -> lp::LinearProgram {
    let patterns: Vec<Vec<usize>> = containing
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let cover: Vec<Vec<usize>> = patterns
        .iter()
        .filter(|p| !patterns.iter().any(|q| q.len() < p.len() && subset(q, p)))
        .cloned()
        .collect();
    let load: Vec<Vec<usize>> = patterns
        .iter()
        .filter(|p| !patterns.iter().any(|q| q.len() > p.len() && subset(p, q)))
        .cloned()
        .collect();
    lp::mmsc_program(set_count, &cover, &load)
}

fn membership_of(universe_size: usize, sets: &[Vec<usize>], chosen: &[usize]) -> Vec<usize> {
    let mut m = vec![0; universe_size];
    for &i in chosen {
        for &e in &sets[i] {
            m[e] += 1;
        }
    }
    m
}

/// Randomized LP rounding for Minimum Membership Set Cover over elements
/// `0..universe_size`. Each round keeps set `S` with probability
/// `min(1, 2 ln(|U| + 2) y_S)`; after `MMSC_ROUNDS` failed rounds a greedy
/// cover (most uncovered elements first, lowest index on ties) is returned.
pub fn mmsc_approx(universe_size: usize, sets: &[Vec<usize>], seed: u64) -> Result<MmscCover> {
    let containing = mmsc_incidence(universe_size, sets)?;
    let sets: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect())
        .collect();
    let program = reduced_mmsc_program(sets.len(), &containing);
    let sol = lp::solve_lp(&program)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::input("membership relaxation has no optimum"));
    }
    let scale = MMSC_ROUNDING_FACTOR * ((universe_size + 2) as f64).ln();
    let probabilities: Vec<f64> = (0..sets.len())
        .map(|i| (scale * rational::to_f64(&sol.values[i])).min(1.0))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let finish = |chosen: Vec<usize>, rounds: usize| {
        let membership = membership_of(universe_size, &sets, &chosen).into_iter().max().unwrap_or(0);
        MmscCover {
            chosen,
            membership,
            lp_value: sol.objective_value.clone(),
            seed,
            rounds,
        }
    };
    for round in 1..=MMSC_ROUNDS {
        let chosen: Vec<usize> = probabilities
            .iter()
            .enumerate()
            .filter(|(_, &p)| rng.gen::<f64>() < p)
            .map(|(i, _)| i)
            .collect();
        if membership_of(universe_size, &sets, &chosen).iter().all(|&m| m > 0) {
            return Ok(finish(chosen, round));
        }
    }
    Ok(finish(greedy_cover(universe_size, &sets), MMSC_ROUNDS + 1))
}

fn greedy_cover(universe_size: usize, sets: &[Vec<usize>]) -> Vec<usize> {
    let mut covered = vec![false; universe_size];
    let mut left = universe_size;
    let mut chosen = Vec::new();
    while left > 0 {
        let (best, gain) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.iter().filter(|&&e| !covered[e]).count()))
            .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        assert!(gain > 0, "every element lies in some set");
        for &e in &sets[best] {
            if !covered[e] {
                covered[e] = true;
                left -= 1;
            }
        }
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

/// Drops every ball that contains no family member entirely. Any r-SPC
/// solution for the remaining balls converts into one of equal sparseness
/// for all balls, so the optimum is unaffected.
pub fn rspc_prune_balls(family: &PathFamily, balls: &[VertexSet]) -> Result<Vec<VertexSet>> {
    family.require_complete()?;
    let subset = |a: &[VertexId], b: &[VertexId]| a.iter().all(|x| b.binary_search(x).is_ok());
    Ok(balls
        .iter()
        .filter(|b| family.paths.iter().any(|p| subset(&p.vertex_set, b)))
        .cloned()
        .collect())
}

/// The MMSC instance of the r-SPC reduction: elements are the distinct sets
/// of `P_r ∪ B` (in sorted order) and set `u` lists the elements containing
/// vertex `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RspcReduction {
    pub elements: Vec<VertexSet>,
    pub sets: Vec<Vec<usize>>,
}

pub fn rspc_to_mmsc(n: usize, family: &PathFamily, balls: &[VertexSet]) -> RspcReduction {
    let elements: Vec<VertexSet> = family
        .paths
        .iter()
        .map(|p| p.vertex_set.clone())
        .chain(balls.iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut sets = vec![Vec::new(); n];
    for (i, e) in elements.iter().enumerate() {
        for &u in e {
            sets[u].push(i);
        }
    }
    RspcReduction { elements, sets }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RspcApprox {
    /// Hub set with its sparseness against every radius-`2r` ball.
    pub solution: HittingSolution,
    pub membership: usize,
    #[serde(with = "rational::serde_str")]
    pub lp_value: Rational,
    pub seed: u64,
    pub path_count: usize,
    pub kept_balls: usize,
}

/// r-SPC approximation: prune balls, reduce to MMSC over `P_r ∪ B`, round,
/// and take `H = {u : S_u chosen}` restricted to vertices on some path.
pub fn rspc_logn_approx(g: &WeightedGraph, r: &Rational, seed: u64) -> Result<RspcApprox> {
    let family = graph::enumerate_path_family(g, r, DEFAULT_PATH_CAP)?;
    family.require_complete()?;
    let n = g.vertex_count();
    let balls = graph::all_pairs_distances(g).balls(&(r * rational::int(2)));
    if family.is_empty() {
        return Ok(RspcApprox {
            solution: solution(n, &balls, Vec::new()),
            membership: 0,
            lp_value: Rational::zero(),
            seed,
            path_count: 0,
            kept_balls: 0,
        });
    }
    let kept = rspc_prune_balls(&family, &balls)?;
    let reduction = rspc_to_mmsc(n, &family, &kept);
    let cover = mmsc_approx(reduction.elements.len(), &reduction.sets, seed)?;
    // Vertices on no path can go: a pruned ball is then either free of hubs
    // or strictly inside a kept ball, so every ball load is at most the
    // membership.
    let mut on_path = vec![false; n];
    for p in &family.paths {
        for &v in &p.vertex_set {
            on_path[v] = true;
        }
    }
    let hubs = cover.chosen.iter().copied().filter(|&u| on_path[u]).collect();
    Ok(RspcApprox {
        solution: solution(n, &balls, hubs),
        membership: cover.membership,
        lp_value: cover.lp_value,
        seed,
        path_count: family.len(),
        kept_balls: kept.len(),
    })
}
