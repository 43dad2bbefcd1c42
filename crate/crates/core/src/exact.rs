//! Exact exponential-time solvers. They double as oracles for the
//! approximation algorithms, so every search is deterministic and bounded by
//! an explicit node budget.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, PathFamily, WeightedGraph, DEFAULT_PATH_CAP};
use crate::instance::{canonical_family, canonical_set, HittingSolution, SetSystemInstance, VertexId, VertexSet};
use crate::matching::{normalize_edge, EdgePair, MatchingSolution};
use crate::rational::{self, Rational};

/// Node budget used when a caller does not supply one.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Search effort of an exact run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted { nodes: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Decision search: is there a hitting set of sparseness at most `k` and at
/// most `max_size` vertices that contains `forced` and otherwise uses only
/// `allowed` vertices?
struct HsSearch<'a> {
    family_f: &'a [VertexSet],
    f_of: Vec<Vec<usize>>,
    b_of: Vec<Vec<usize>>,
    k: usize,
    max_size: usize,
    size: usize,
    loads: Vec<usize>,
    hits: Vec<usize>,
    chosen: Vec<bool>,
    allowed: Vec<bool>,
}

impl<'a> HsSearch<'a> {
    fn new(inst: &'a SetSystemInstance, k: usize) -> Self {
        let n = inst.universe_size();
        let mut f_of = vec![Vec::new(); n];
        for (i, f) in inst.family_f().iter().enumerate() {
            for &v in f {
                f_of[v].push(i);
            }
        }
        let mut b_of = vec![Vec::new(); n];
        for (i, b) in inst.family_b().iter().enumerate() {
            for &v in b {
                b_of[v].push(i);
            }
        }
        HsSearch {
            family_f: inst.family_f(),
            f_of,
            b_of,
            k,
            max_size: usize::MAX,
            size: 0,
            loads: vec![0; inst.family_b().len()],
            hits: vec![0; inst.family_f().len()],
            chosen: vec![false; n],
            allowed: vec![true; n],
        }
    }

    fn available(&self, v: VertexId) -> bool {
        self.size < self.max_size
            && self.allowed[v]
            && !self.chosen[v]
            && self.b_of[v].iter().all(|&b| self.loads[b] < self.k)
    }

    fn add(&mut self, v: VertexId) {
        self.chosen[v] = true;
        self.size += 1;
        for &b in &self.b_of[v] {
            self.loads[b] += 1;
        }
        for &f in &self.f_of[v] {
            self.hits[f] += 1;
        }
    }

    fn remove(&mut self, v: VertexId) {
        self.chosen[v] = false;
        self.size -= 1;
        for &b in &self.b_of[v] {
            self.loads[b] -= 1;
        }
        for &f in &self.f_of[v] {
            self.hits[f] -= 1;
        }
    }

    /// Adds the forced vertices; false if they already exceed `k`.
    fn force(&mut self, forced: &[VertexId]) -> bool {
        for &v in forced {
            if !self.chosen[v] {
                self.add(v);
            }
        }
        self.size <= self.max_size && self.loads.iter().all(|&l| l <= self.k)
    }

    fn dfs(&mut self, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let mut branch = None;
        for (i, f) in self.family_f.iter().enumerate() {
            if self.hits[i] > 0 {
                continue;
            }
            if !f.iter().any(|&v| self.available(v)) {
                return Ok(false);
            }
            if branch.is_none() {
                branch = Some(i);
            }
        }
        let Some(i) = branch else {
            return Ok(true);
        };
        let mut forbidden = Vec::new();
        let mut found = false;
        for &v in &self.family_f[i] {
            if !self.available(v) {
                continue;
            }
            self.add(v);
            let ok = self.dfs(budget);
            if matches!(ok, Ok(true)) {
                found = true;
                break;
            }
            self.remove(v);
            if let Err(e) = ok {
                for w in forbidden {
                    self.allowed[w] = true;
                }
                return Err(e);
            }
            // Later branches never use v: those sets were covered here.
            self.allowed[v] = false;
            forbidden.push(v);
        }
        for w in forbidden {
            self.allowed[w] = true;
        }
        Ok(found)
    }

    fn members(&self) -> VertexSet {
        (0..self.chosen.len()).filter(|&v| self.chosen[v]).collect()
    }
}

fn decide(
    inst: &SetSystemInstance,
    k: usize,
    max_size: usize,
    forced: &[VertexId],
    allowed_from: VertexId,
    budget: &mut Budget,
) -> Result<Option<VertexSet>> {
    let mut search = HsSearch::new(inst, k);
    search.max_size = max_size;
    for v in 0..allowed_from.min(inst.universe_size()) {
        search.allowed[v] = false;
    }
    if !search.force(forced) {
        return Ok(None);
    }
    Ok(search.dfs(budget)?.then(|| search.members()))
}

/// Some hitting set of sparseness at most `k`, or `None` if there is none.
pub fn sparse_hs_feasible(
    inst: &SetSystemInstance,
    k: usize,
    budget: u64,
) -> Result<(Option<VertexSet>, SearchStats)> {
    let mut b = Budget::new(budget);
    let found = decide(inst, k, usize::MAX, &[], 0, &mut b)?;
    Ok((found, SearchStats { nodes: b.used }))
}

/// Minimum-sparseness hitting set. Ties are broken towards fewer vertices,
/// then towards the lexicographically smallest sorted vertex list.
pub fn solve_sparse_hs_exact(inst: &SetSystemInstance, budget: u64) -> Result<HittingSolution> {
    solve_sparse_hs_exact_with_stats(inst, budget).map(|(s, _)| s)
}

pub fn solve_sparse_hs_exact_with_stats(
    inst: &SetSystemInstance,
    budget: u64,
) -> Result<(HittingSolution, SearchStats)> {
    let mut b = Budget::new(budget);
    // Raising k one step at a time finds the optimum; k = max |B| always works.
    let mut k = 0;
    while decide(inst, k, usize::MAX, &[], 0, &mut b)?.is_none() {
        k += 1;
    }
    let mut size = 0;
    while decide(inst, k, size, &[], 0, &mut b)?.is_none() {
        size += 1;
    }
    // Build the lexicographically smallest optimum one element at a time.
    let mut prefix: Vec<VertexId> = Vec::new();
    while prefix.len() < size {
        let start = prefix.last().map_or(0, |&v| v + 1);
        let mut extended = false;
        for v in start..inst.universe_size() {
            prefix.push(v);
            if decide(inst, k, size, &prefix, v + 1, &mut b)?.is_some() {
                extended = true;
                break;
            }
            prefix.pop();
        }
        assert!(extended, "an optimum exists, so some extension must succeed");
    }
    let sol = HittingSolution::evaluate(inst, prefix)?;
    debug_assert_eq!(sol.sparseness, k);
    Ok((sol, SearchStats { nodes: b.used }))
}

/// Where r-HD hubs may be placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum HubScope {
    /// Any vertex of the graph.
    #[default]
    Anywhere,
    /// Only vertices of the ball being served.
    InsideBall,
}

/// Minimum vertex set hitting every family member that intersects
/// `ball(center, 2r)`. Sizes are tried in ascending order and combinations in
/// lexicographic order, so the first hit is the lexicographically smallest
/// minimum solution.
pub fn solve_rhd_ball_exact(
    g: &WeightedGraph,
    r: &Rational,
    center: VertexId,
    family: &PathFamily,
    scope: HubScope,
) -> Result<VertexSet> {
    family.require_complete()?;
    if &family.radius != r {
        return Err(Error::input("path family was enumerated for a different radius"));
    }
    let ball = graph::ball(g, center, &(r * rational::int(2)))?;
    let mut in_ball = vec![false; g.vertex_count()];
    for &v in &ball {
        in_ball[v] = true;
    }
    let members: Vec<VertexSet> = family
        .paths
        .iter()
        .filter(|p| p.vertex_set.iter().any(|&v| in_ball[v]))
        .map(|p| match scope {
            HubScope::Anywhere => p.vertex_set.clone(),
            HubScope::InsideBall => p.vertex_set.iter().copied().filter(|&v| in_ball[v]).collect(),
        })
        .collect();
    Ok(min_hitting_set_lex(&canonical_family(members), g.vertex_count()))
}

fn min_hitting_set_lex(members: &[VertexSet], n: usize) -> VertexSet {
    if members.is_empty() {
        return Vec::new();
    }
    let candidates = canonical_set(members.iter().flatten().copied().collect());
    let mut member_of = vec![Vec::new(); n];
    for (i, m) in members.iter().enumerate() {
        for &v in m {
            member_of[v].push(i);
        }
    }
    let mut hits = vec![0usize; members.len()];
    let mut chosen = Vec::new();
    for size in 1..=candidates.len() {
        if combo_dfs(members, &member_of, &candidates, 0, size, &mut hits, &mut chosen) {
            return chosen;
        }
    }
    unreachable!("all candidates together hit every member")
}

fn combo_dfs(
    members: &[VertexSet],
    member_of: &[Vec<usize>],
    candidates: &[VertexId],
    start: usize,
    slots: usize,
    hits: &mut [usize],
    chosen: &mut Vec<VertexId>,
) -> bool {
    let next = candidates.get(start).copied();
    let mut any_unhit = false;
    for (i, m) in members.iter().enumerate() {
        if hits[i] == 0 {
            any_unhit = true;
            // Members are sorted, so the last element is the largest.
            if next.is_none_or(|nv| *m.last().expect("members are non-empty") < nv) {
                return false;
            }
        }
    }
    if !any_unhit {
        return true;
    }
    if slots == 0 {
        return false;
    }
    for idx in start..candidates.len() {
        let v = candidates[idx];
        chosen.push(v);
        for &i in &member_of[v] {
            hits[i] += 1;
        }
        if combo_dfs(members, member_of, candidates, idx + 1, slots - 1, hits, chosen) {
            return true;
        }
        for &i in &member_of[v] {
            hits[i] -= 1;
        }
        chosen.pop();
    }
    false
}

/// Per-center hub sets at one radius and their maximum size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhdResult {
    #[serde(with = "rational::serde_str")]
    pub radius: Rational,
    pub per_ball: BTreeMap<VertexId, (VertexSet, usize)>,
    pub value: usize,
}

pub fn rhd_value(g: &WeightedGraph, r: &Rational) -> Result<RhdResult> {
    rhd_value_with_scope(g, r, HubScope::Anywhere)
}

pub fn rhd_value_with_scope(g: &WeightedGraph, r: &Rational, scope: HubScope) -> Result<RhdResult> {
    let family = graph::enumerate_path_family(g, r, DEFAULT_PATH_CAP)?;
    let mut per_ball = BTreeMap::new();
    let mut value = 0;
    for center in 0..g.vertex_count() {
        let hubs = solve_rhd_ball_exact(g, r, center, &family, scope)?;
        value = value.max(hubs.len());
        let size = hubs.len();
        per_ball.insert(center, (hubs, size));
    }
    Ok(RhdResult {
        radius: r.clone(),
        per_ball,
        value,
    })
}

/// Maximum r-HD value over every relevant radius.
pub fn highway_dimension_exact(g: &WeightedGraph) -> Result<usize> {
    Ok(highway_dimension_profile(g, HubScope::Anywhere)?
        .iter()
        .map(|r| r.value)
        .max()
        .unwrap_or(0))
}

/// r-HD results for each relevant radius, ascending.
pub fn highway_dimension_profile(g: &WeightedGraph, scope: HubScope) -> Result<Vec<RhdResult>> {
    graph::relevant_radii(g)
        .iter()
        .map(|r| rhd_value_with_scope(g, r, scope))
        .collect()
}

/// r-SPC as Sparse-HS on `(V, family, balls)`.
pub fn solve_rspc_exact(
    g: &WeightedGraph,
    family: &PathFamily,
    balls: &[VertexSet],
    budget: u64,
) -> Result<HittingSolution> {
    family.require_complete()?;
    let inst = SetSystemInstance::new(g.vertex_count(), family.vertex_sets(), balls.to_vec())?;
    solve_sparse_hs_exact(&inst, budget)
}

/// Exact MMSC answer: chosen set indices and their maximum membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MmscSolution {
    pub chosen: Vec<usize>,
    pub membership: usize,
}

/// Validates an MMSC instance over elements `0..universe_size` and returns,
/// per element, the indices of the sets containing it.
pub(crate) fn mmsc_incidence(universe_size: usize, sets: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut containing = vec![Vec::new(); universe_size];
    for (i, s) in sets.iter().enumerate() {
        for &e in s {
            if e >= universe_size {
                return Err(Error::input(format!("set {i} has element {e} outside the universe")));
            }
            if containing[e].last() != Some(&i) {
                containing[e].push(i);
            }
        }
    }
    if let Some(e) = containing.iter().position(|c| c.is_empty()) {
        return Err(Error::input(format!("element {e} is in no set and cannot be covered")));
    }
    Ok(containing)
}

/// Exact Minimum Membership Set Cover by set-enumeration search.
///
/// The search tree lists index sets in lexicographic order, so keeping only
/// strict improvements yields the lexicographically smallest optimum.
pub fn solve_mmsc_exact(universe_size: usize, sets: &[Vec<usize>], budget: u64) -> Result<MmscSolution> {
    let containing = mmsc_incidence(universe_size, sets)?;
    let sets: Vec<VertexSet> = sets.iter().map(|s| canonical_set(s.clone())).collect();
    let mut state = MmscSearch {
        sets: &sets,
        containing: &containing,
        membership: vec![0; universe_size],
        chosen: Vec::new(),
        best: None,
        budget: Budget::new(budget),
    };
    state.visit(0)?;
    let (chosen, membership) = state.best.expect("the full family is a cover");
    Ok(MmscSolution { chosen, membership })
}

struct MmscSearch<'a> {
    sets: &'a [VertexSet],
    containing: &'a [Vec<usize>],
    membership: Vec<usize>,
    chosen: Vec<usize>,
    best: Option<(Vec<usize>, usize)>,
    budget: Budget,
}

impl MmscSearch<'_> {
    fn visit(&mut self, next: usize) -> Result<()> {
        self.budget.tick()?;
        let current = self.membership.iter().copied().max().unwrap_or(0);
        if self.best.as_ref().is_some_and(|(_, b)| current >= *b) {
            return Ok(());
        }
        // An element whose sets all lie before `next` stays uncovered below.
        let mut covered = true;
        for (e, sets) in self.containing.iter().enumerate() {
            if self.membership[e] == 0 {
                covered = false;
                if sets.last().is_none_or(|&s| s < next) {
                    return Ok(());
                }
            }
        }
        if covered {
            self.best = Some((self.chosen.clone(), current));
            return Ok(());
        }
        for i in next..self.sets.len() {
            self.chosen.push(i);
            for &e in &self.sets[i] {
                self.membership[e] += 1;
            }
            self.visit(i + 1)?;
            for &e in &self.sets[i] {
                self.membership[e] -= 1;
            }
            self.chosen.pop();
        }
        Ok(())
    }
}

/// Matching maximizing `min_B |M ∩ E(B)|`.
///
/// Repeatedly searches for a matching beating the best density found so far;
/// each search branches on edges in sorted order (take before skip) and prunes
/// with a per-ball capacity bound.
pub fn solve_dense_matching_exact(
    g: &WeightedGraph,
    balls: &[VertexSet],
    budget: u64,
) -> Result<MatchingSolution> {
    solve_dense_matching_exact_with_stats(g, balls, budget).map(|(m, _)| m)
}

pub fn solve_dense_matching_exact_with_stats(
    g: &WeightedGraph,
    balls: &[VertexSet],
    budget: u64,
) -> Result<(MatchingSolution, SearchStats)> {
    if balls.is_empty() {
        return Err(Error::input("density needs at least one ball"));
    }
    let n = g.vertex_count();
    for ball in balls {
        if let Some(&w) = ball.iter().find(|&&w| w >= n) {
            return Err(Error::input(format!("ball vertex {w} out of range")));
        }
    }
    let balls: Vec<VertexSet> = balls.iter().map(|b| canonical_set(b.clone())).collect();
    let mut edges: Vec<EdgePair> = g.edge_pairs().into_iter().map(normalize_edge).collect();
    edges.sort_unstable();
    let mut balls_of_vertex = vec![Vec::new(); n];
    for (i, b) in balls.iter().enumerate() {
        for &v in b {
            balls_of_vertex[v].push(i);
        }
    }
    // Balls containing both endpoints of each edge.
    let edge_balls: Vec<Vec<usize>> = edges
        .iter()
        .map(|&(u, v)| {
            balls_of_vertex[u]
                .iter()
                .copied()
                .filter(|b| balls_of_vertex[v].contains(b))
                .collect()
        })
        .collect();
    let mut ball_edges = vec![Vec::new(); balls.len()];
    for (e, bs) in edge_balls.iter().enumerate() {
        for &b in bs {
            ball_edges[b].push(e);
        }
    }
    let upper = balls.iter().map(|b| b.len() / 2).min().unwrap_or(0);

    let mut budget = Budget::new(budget);
    let mut best: Vec<EdgePair> = Vec::new();
    let mut best_density = 0;
    while best_density < upper {
        let mut search = MatchingSearch {
            edges: &edges,
            edge_balls: &edge_balls,
            ball_edges: &ball_edges,
            target: best_density + 1,
            matched: vec![false; n],
            counts: vec![0; balls.len()],
            taken: Vec::new(),
        };
        if !search.dfs(0, &mut budget)? {
            break;
        }
        best = search.taken.iter().map(|&e| edges[e]).collect();
        best_density = search.counts.iter().copied().min().unwrap_or(0);
    }
    let sol = MatchingSolution::evaluate(g, &balls, best)?;
    Ok((sol, SearchStats { nodes: budget.used }))
}

struct MatchingSearch<'a> {
    edges: &'a [EdgePair],
    edge_balls: &'a [Vec<usize>],
    ball_edges: &'a [Vec<usize>],
    target: usize,
    matched: Vec<bool>,
    counts: Vec<usize>,
    taken: Vec<usize>,
}

impl MatchingSearch<'_> {
    /// Upper bound on how many more edges ball `b` can still gain from edges
    /// with index `>= next`.
    fn capacity(&self, b: usize, next: usize) -> usize {
        let mut open_edges = 0;
        let mut endpoints = Vec::new();
        for &e in &self.ball_edges[b] {
            if e < next {
                continue;
            }
            let (u, v) = self.edges[e];
            if !self.matched[u] && !self.matched[v] {
                open_edges += 1;
                endpoints.push(u);
                endpoints.push(v);
            }
        }
        endpoints.sort_unstable();
        endpoints.dedup();
        open_edges.min(endpoints.len() / 2)
    }

    fn dfs(&mut self, next: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let mut done = true;
        for b in 0..self.counts.len() {
            if self.counts[b] < self.target {
                done = false;
                if self.counts[b] + self.capacity(b, next) < self.target {
                    return Ok(false);
                }
            }
        }
        if done {
            return Ok(true);
        }
        if next == self.edges.len() {
            return Ok(false);
        }
        let (u, v) = self.edges[next];
        if !self.matched[u] && !self.matched[v] {
            self.matched[u] = true;
            self.matched[v] = true;
            for &b in &self.edge_balls[next] {
                self.counts[b] += 1;
            }
            self.taken.push(next);
            if self.dfs(next + 1, budget)? {
                return Ok(true);
            }
            self.taken.pop();
            for &b in &self.edge_balls[next] {
                self.counts[b] -= 1;
            }
            self.matched[u] = false;
            self.matched[v] = false;
        }
        self.dfs(next + 1, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::unit(n, edges).unwrap()
    }

    fn path(n: usize) -> WeightedGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        unit(n, &edges)
    }

    #[test]
    fn sparse_hs_examples() {
        let empty = SetSystemInstance::new(3, vec![], vec![vec![0, 1]]).unwrap();
        let sol = solve_sparse_hs_exact(&empty, DEFAULT_BUDGET).unwrap();
        assert_eq!((sol.members.len(), sol.sparseness), (0, 0));

        let one = SetSystemInstance::new(2, vec![vec![0, 1]], vec![vec![0, 1]]).unwrap();
        let sol = solve_sparse_hs_exact(&one, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.members, vec![0]);
        assert_eq!(sol.sparseness, 1);
    }

    #[test]
    fn sparse_hs_lexicographic_tie_break() {
        // {0,2}, {0,3} and {1,2} all reach sparseness 1.
        let inst = SetSystemInstance::new(
            4,
            vec![vec![0, 1], vec![2, 3], vec![0, 2]],
            vec![vec![0, 1], vec![2, 3], vec![1, 3]],
        )
        .unwrap();
        let sol = solve_sparse_hs_exact(&inst, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.sparseness, 1);
        assert_eq!(sol.members, vec![0, 2]);
    }

    #[test]
    fn budget_is_reported() {
        let inst = SetSystemInstance::new(
            6,
            vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![1, 2]],
            vec![vec![0, 1, 2, 3, 4, 5]],
        )
        .unwrap();
        assert!(matches!(
            solve_sparse_hs_exact(&inst, 2),
            Err(Error::BudgetExhausted { nodes: 2 })
        ));
    }

    #[test]
    fn rhd_ball_examples() {
        let star = unit(4, &[(0, 1), (0, 2), (0, 3)]);
        let fam = graph::enumerate_path_family(&star, &int(1), 100).unwrap();
        assert_eq!(solve_rhd_ball_exact(&star, &int(1), 0, &fam, HubScope::Anywhere).unwrap(), vec![0]);

        let p5 = path(5);
        let fam = graph::enumerate_path_family(&p5, &int(1), 100).unwrap();
        assert_eq!(solve_rhd_ball_exact(&p5, &int(1), 2, &fam, HubScope::Anywhere).unwrap(), vec![2]);

        let p2 = path(2);
        let fam = graph::enumerate_path_family(&p2, &int(1), 100).unwrap();
        assert!(solve_rhd_ball_exact(&p2, &int(1), 0, &fam, HubScope::Anywhere)
            .unwrap()
            .is_empty());
        assert!(solve_rhd_ball_exact(&p2, &int(2), 0, &fam, HubScope::Anywhere).is_err());
    }

    #[test]
    fn rhd_value_examples() {
        let c4 = unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(rhd_value(&c4, &ratio(1, 2)).unwrap().value, 2);
        assert_eq!(rhd_value(&path(3), &int(1)).unwrap().value, 1);
        assert_eq!(rhd_value(&path(3), &int(5)).unwrap().value, 0);
    }

    #[test]
    fn highway_dimension_examples() {
        assert_eq!(highway_dimension_exact(&path(2)).unwrap(), 1);
        for q in 2..=5 {
            let edges: Vec<_> = (1..=q).map(|l| (0, l)).collect();
            assert_eq!(highway_dimension_exact(&unit(q + 1, &edges)).unwrap(), 1);
        }
        let c4 = unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(highway_dimension_exact(&c4).unwrap(), 2);
        assert_eq!(highway_dimension_exact(&unit(1, &[])).unwrap(), 0);
    }

    #[test]
    fn rspc_examples() {
        let edge = path(2);
        let r = ratio(1, 2);
        let fam = graph::enumerate_path_family(&edge, &r, 100).unwrap();
        let balls = graph::all_pairs_distances(&edge).balls(&int(1));
        assert_eq!(solve_rspc_exact(&edge, &fam, &balls, DEFAULT_BUDGET).unwrap().sparseness, 1);

        let star = unit(4, &[(0, 1), (0, 2), (0, 3)]);
        let fam = graph::enumerate_path_family(&star, &int(1), 100).unwrap();
        let balls = graph::all_pairs_distances(&star).balls(&int(2));
        let sol = solve_rspc_exact(&star, &fam, &balls, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.members, vec![0]);
        assert_eq!(sol.sparseness, 1);

        let none = graph::enumerate_path_family(&star, &int(3), 100).unwrap();
        assert_eq!(solve_rspc_exact(&star, &none, &balls, DEFAULT_BUDGET).unwrap().sparseness, 0);
    }

    #[test]
    fn mmsc_examples() {
        let sol = solve_mmsc_exact(1, &[vec![0]], DEFAULT_BUDGET).unwrap();
        assert_eq!((sol.chosen, sol.membership), (vec![0], 1));
        let sol = solve_mmsc_exact(2, &[vec![0], vec![1], vec![0, 1]], DEFAULT_BUDGET).unwrap();
        assert_eq!((sol.chosen, sol.membership), (vec![0, 1], 1));
        assert!(solve_mmsc_exact(2, &[vec![0]], DEFAULT_BUDGET).is_err());
        assert!(solve_mmsc_exact(1, &[vec![3]], DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn dense_matching_examples() {
        let edge = path(2);
        let sol = solve_dense_matching_exact(&edge, &[vec![0, 1]], DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.density, 1);

        let triangle = unit(3, &[(0, 1), (1, 2), (0, 2)]);
        let sol = solve_dense_matching_exact(&triangle, &[vec![0, 1, 2]], DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.density, 1);

        let p4 = path(4);
        let balls = graph::all_pairs_distances(&p4).balls(&int(2));
        let sol = solve_dense_matching_exact(&p4, &balls, DEFAULT_BUDGET).unwrap();
        assert_eq!(sol.density, 1);
        assert_eq!(sol.edges, vec![(0, 1), (2, 3)]);
    }
}
