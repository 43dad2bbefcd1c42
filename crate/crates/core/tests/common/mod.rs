//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's solvers; inputs are plain vectors so the oracles stay
//! independent of the code they check.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn mask_members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn load(mask: u32, family: &[Vec<usize>]) -> usize {
    family
        .iter()
        .map(|s| s.iter().filter(|&&v| mask >> v & 1 == 1).count())
        .max()
        .unwrap_or(0)
}

fn hits(mask: u32, family: &[Vec<usize>]) -> bool {
    family.iter().all(|s| s.iter().any(|&v| mask >> v & 1 == 1))
}

/// Optimum sparseness over all `2^n` subsets, with the shortlex-first
/// optimal subset (fewest elements, then lexicographically smallest list).
pub fn sparse_hs(n: usize, f: &[Vec<usize>], b: &[Vec<usize>]) -> Option<(usize, Vec<usize>)> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0u32..1 << n {
        if !hits(mask, f) {
            continue;
        }
        let s = load(mask, b);
        let members = mask_members(mask, n);
        let better = match &best {
            None => true,
            Some((bs, bm)) => {
                s < *bs || (s == *bs && (members.len(), &members) < (bm.len(), bm))
            }
        };
        if better {
            best = Some((s, members));
        }
    }
    best
}

/// Some vertex cover of `edges` meeting each ball in at most one vertex.
pub fn k1_feasible(n: usize, edges: &[(usize, usize)], balls: &[Vec<usize>]) -> bool {
    let f: Vec<Vec<usize>> = edges.iter().map(|&(u, v)| vec![u, v]).collect();
    (0u32..1 << n).any(|mask| hits(mask, &f) && load(mask, balls) <= 1)
}

/// Satisfying assignment by truth table, first in binary counting order
/// (variable 1 is the lowest bit).
pub fn sat(variable_count: usize, clauses: &[Vec<i32>]) -> Option<Vec<bool>> {
    (0u32..1 << variable_count)
        .map(|mask| (0..variable_count).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .find(|a| satisfies(a, clauses))
}

pub fn satisfies(a: &[bool], clauses: &[Vec<i32>]) -> bool {
    clauses.iter().all(|c| {
        c.iter()
            .any(|&l| a[l.unsigned_abs() as usize - 1] == (l > 0))
    })
}

/// Maximum over matchings of the minimum number of matching edges inside a
/// ball, by enumerating every edge subset.
pub fn dense_matching(n: usize, edges: &[(usize, usize)], balls: &[Vec<usize>]) -> usize {
    assert!(edges.len() <= 20);
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<(usize, usize)> =
            (0..edges.len()).filter(|&e| mask >> e & 1 == 1).map(|e| edges[e]).collect();
        let mut used = vec![false; n];
        let mut ok = true;
        for &(u, v) in &chosen {
            if used[u] || used[v] {
                ok = false;
                break;
            }
            used[u] = true;
            used[v] = true;
        }
        if !ok {
            continue;
        }
        let density = balls
            .iter()
            .map(|b| chosen.iter().filter(|(u, v)| b.contains(u) && b.contains(v)).count())
            .min()
            .unwrap_or(0);
        best = best.max(density);
    }
    best
}

/// Minimum over covers of the maximum number of chosen sets containing an
/// element; `None` if the sets do not cover the universe.
pub fn mmsc(universe: usize, sets: &[Vec<usize>]) -> Option<usize> {
    assert!(sets.len() <= 20);
    let mut best: Option<usize> = None;
    for mask in 0u32..1 << sets.len() {
        let mut count = vec![0usize; universe];
        for (i, s) in sets.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let mut seen = s.clone();
                seen.sort_unstable();
                seen.dedup();
                for e in seen {
                    count[e] += 1;
                }
            }
        }
        if count.iter().all(|&c| c > 0) {
            let m = count.into_iter().max().unwrap_or(0);
            best = Some(best.map_or(m, |b: usize| b.min(m)));
        }
    }
    best
}

/// A weighted graph as an adjacency matrix of optional lengths.
#[derive(Clone, Debug)]
pub struct Net {
    pub n: usize,
    pub edges: Vec<(usize, usize, Q)>,
    pub adj: Vec<Vec<Option<Q>>>,
}

impl Net {
    pub fn new(n: usize, edges: Vec<(usize, usize, Q)>) -> Self {
        let mut adj = vec![vec![None; n]; n];
        for (u, v, w) in &edges {
            adj[*u][*v] = Some(w.clone());
            adj[*v][*u] = Some(w.clone());
        }
        Net { n, edges, adj }
    }

    pub fn unit(n: usize, edges: &[(usize, usize)]) -> Self {
        Net::new(n, edges.iter().map(|&(u, v)| (u, v, Q::one())).collect())
    }

    /// Floyd-Warshall; `None` means unreachable.
    pub fn distances(&self) -> Vec<Vec<Option<Q>>> {
        let mut d = self.adj.clone();
        for (v, row) in d.iter_mut().enumerate() {
            row[v] = Some(Q::zero());
        }
        for w in 0..self.n {
            for u in 0..self.n {
                for v in 0..self.n {
                    if let (Some(a), Some(b)) = (&d[u][w], &d[w][v]) {
                        let via = a + b;
                        if d[u][v].as_ref().is_none_or(|cur| via < *cur) {
                            d[u][v] = Some(via);
                        }
                    }
                }
            }
        }
        d
    }

    /// Vertex sets of all shortest paths with length in `(r, 2r]`, found by
    /// enumerating simple paths and keeping those whose length equals the
    /// endpoint distance. Sorted and deduplicated.
    pub fn path_family(&self, r: &Q) -> Vec<Vec<usize>> {
        let d = self.distances();
        let two_r = r * q(2, 1);
        let mut out = Vec::new();
        for s in 0..self.n {
            let mut stack = vec![s];
            let mut on = vec![false; self.n];
            on[s] = true;
            self.extend(&d, r, &two_r, &mut stack, &mut on, Q::zero(), &mut out);
        }
        out.sort();
        out.dedup();
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        d: &[Vec<Option<Q>>],
        r: &Q,
        two_r: &Q,
        stack: &mut Vec<usize>,
        on: &mut [bool],
        len: Q,
        out: &mut Vec<Vec<usize>>,
    ) {
        let s = stack[0];
        let last = *stack.last().unwrap();
        if stack.len() > 1 && d[s][last].as_ref() == Some(&len) && &len > r && &len <= two_r {
            let mut set = stack.clone();
            set.sort_unstable();
            out.push(set);
        }
        for next in 0..self.n {
            if on[next] {
                continue;
            }
            if let Some(w) = &self.adj[last][next] {
                let nl = &len + w;
                // Prefixes of shortest paths are shortest.
                if d[s][next].as_ref() != Some(&nl) || &nl > two_r {
                    continue;
                }
                on[next] = true;
                stack.push(next);
                self.extend(d, r, two_r, stack, on, nl, out);
                stack.pop();
                on[next] = false;
            }
        }
    }

    pub fn balls(&self, radius: &Q) -> Vec<Vec<usize>> {
        let d = self.distances();
        (0..self.n)
            .map(|v| (0..self.n).filter(|&u| d[v][u].as_ref().is_some_and(|x| x <= radius)).collect())
            .collect()
    }

    /// Every radius at which the path family or the `2r` balls can change:
    /// All positive distances and their halves.
    pub fn candidate_radii(&self) -> Vec<Q> {
        let d = self.distances();
        let mut out = Vec::new();
        for row in &d {
            for x in row.iter().flatten().filter(|x| **x > Q::zero()) {
                out.push(x.clone());
                out.push(x / q(2, 1));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// r-HD value: per `2r` ball, the minimum number of vertices (anywhere)
    /// hitting every family member that meets the ball; maximum over balls.
    pub fn rhd(&self, r: &Q) -> usize {
        let family = self.path_family(r);
        let balls = self.balls(&(r * q(2, 1)));
        balls
            .iter()
            .map(|ball| {
                let members: Vec<Vec<usize>> = family
                    .iter()
                    .filter(|p| p.iter().any(|v| ball.contains(v)))
                    .cloned()
                    .collect();
                min_hitting_size(self.n, &members)
            })
            .max()
            .unwrap_or(0)
    }

    pub fn highway_dimension(&self) -> usize {
        self.candidate_radii().iter().map(|r| self.rhd(r)).max().unwrap_or(0)
    }
}

pub fn min_hitting_size(n: usize, family: &[Vec<usize>]) -> usize {
    (0u32..1 << n)
        .filter(|&mask| hits(mask, family))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the full vertex set hits everything")
}

/// Random simple graph on `n` vertices with edge probability `p`.
pub fn random_edges(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Random non-empty subset of `0..n`, sorted.
pub fn random_subset(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(1..=max_len.min(n));
    let mut all: Vec<usize> = (0..n).collect();
    for i in 0..len {
        let j = rng.gen_range(i..n);
        all.swap(i, j);
    }
    let mut s = all[..len].to_vec();
    s.sort_unstable();
    s
}

/// Random formula whose clauses have `width` distinct variables.
pub fn random_formula(rng: &mut impl Rng, vars: usize, clauses: usize, width: usize) -> Vec<Vec<i32>> {
    (0..clauses)
        .map(|_| {
            random_subset_exact(rng, vars, width)
                .into_iter()
                .map(|v| {
                    let lit = v as i32 + 1;
                    if rng.gen_bool(0.5) {
                        lit
                    } else {
                        -lit
                    }
                })
                .collect()
        })
        .collect()
}

pub fn random_subset_exact(rng: &mut impl Rng, n: usize, len: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    for i in 0..len {
        let j = rng.gen_range(i..n);
        all.swap(i, j);
    }
    all[..len].to_vec()
}
