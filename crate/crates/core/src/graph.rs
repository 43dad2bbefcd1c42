//! Undirected graphs with exact rational edge lengths: shortest-path
//! distances, metric balls, the shortest-path family `P_r`, and the finite set
//! of radii at which `P_r` can change.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{canonical_set, VertexId, VertexSet};
use crate::rational::{self, Rational};

/// Default limit on the number of distinct vertex sets in a path family.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    #[serde(with = "rational::serde_str")]
    pub length: Rational,
}

/// Simple undirected graph with positive rational edge lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct WeightedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, usize)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl TryFrom<GraphFile> for WeightedGraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        WeightedGraph::new(
            file.n,
            file.edges.into_iter().map(|e| (e.u, e.v, e.length)).collect(),
        )
    }
}

impl From<WeightedGraph> for GraphFile {
    fn from(g: WeightedGraph) -> Self {
        GraphFile {
            n: g.vertex_count,
            edges: g.edges,
        }
    }
}

impl WeightedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId, Rational)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for (idx, (u, v, length)) in edges.into_iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::input(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if !length.is_positive() {
                return Err(Error::input(format!(
                    "edge {{{u},{v}}} has non-positive length {}",
                    rational::format(&length)
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::input(format!("parallel edge {{{u},{v}}}")));
            }
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
            stored.push(Edge { u, v, length });
        }
        Ok(WeightedGraph {
            vertex_count,
            edges: stored,
            adjacency,
        })
    }

    /// Every edge gets length 1.
    pub fn unit(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        WeightedGraph::new(
            vertex_count,
            edges.iter().map(|&(u, v)| (u, v, rational::int(1))).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(neighbor, edge index)` pairs.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count && self.adjacency[u].iter().any(|&(w, _)| w == v)
    }

    pub fn edge_length(&self, u: VertexId, v: VertexId) -> Option<&Rational> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| &self.edges[e].length)
    }

    /// Edges as sorted `(min, max)` endpoint pairs, in input order.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.edges.iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect()
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut set: Vec<VertexId> = self.adjacency[v].iter().map(|&(w, _)| w).collect();
        set.push(v);
        canonical_set(set)
    }

    pub fn open_neighborhood(&self, v: VertexId) -> VertexSet {
        canonical_set(self.adjacency[v].iter().map(|&(w, _)| w).collect())
    }

    /// Reads the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v num/den`. Lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 0,
            message: "missing header line".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let parse_count = |s: &str, line: usize| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("bad count {s:?}"),
            })
        };
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: hline,
                message: "header must be `n m`".into(),
            });
        }
        let n = parse_count(fields[0], hline)?;
        let m = parse_count(fields[1], hline)?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            let f: Vec<&str> = text.split_whitespace().collect();
            if f.len() != 3 {
                return Err(Error::Parse {
                    line,
                    message: "edge line must be `u v num/den`".into(),
                });
            }
            let length = rational::parse(f[2]).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            edges.push((parse_count(f[0], line)?, parse_count(f[1], line)?, length));
        }
        if edges.len() != m {
            return Err(Error::input(format!(
                "header announces {m} edges but {} were read",
                edges.len()
            )));
        }
        WeightedGraph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, rational::format(&e.length));
        }
        out
    }

    /// Multiplies every edge length by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        WeightedGraph::new(
            self.vertex_count,
            self.edges
                .iter()
                .map(|e| (e.u, e.v, &e.length * factor))
                .collect(),
        )
    }
}

/// Shortest-path distance; `Infinite` marks disconnected pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(Rational),
    Infinite,
}

impl Distance {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_within(&self, radius: &Rational) -> bool {
        matches!(self, Distance::Finite(d) if d <= radius)
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_str(&rational::format(d)),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Dijkstra from `source` with exact keys.
pub fn single_source_distances(g: &WeightedGraph, source: VertexId) -> Vec<Distance> {
    let mut dist: Vec<Option<Rational>> = vec![None; g.vertex_count];
    let mut done = vec![false; g.vertex_count];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(Rational::zero());
    heap.push(Reverse((Rational::zero(), source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, e) in &g.adjacency[u] {
            if done[v] {
                continue;
            }
            let cand = &d + &g.edges[e].length;
            if dist[v].as_ref().is_none_or(|cur| cand < *cur) {
                dist[v] = Some(cand.clone());
                heap.push(Reverse((cand, v)));
            }
        }
    }
    dist.into_iter()
        .map(|d| d.map_or(Distance::Infinite, Distance::Finite))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    rows: Vec<Vec<Distance>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: VertexId, v: VertexId) -> &Distance {
        &self.rows[u][v]
    }

    pub fn row(&self, u: VertexId) -> &[Distance] {
        &self.rows[u]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `{w : dist(v, w) <= radius}`.
    pub fn ball(&self, v: VertexId, radius: &Rational) -> VertexSet {
        ball_from_row(&self.rows[v], radius)
    }

    /// One ball per center, in center order.
    pub fn balls(&self, radius: &Rational) -> Vec<VertexSet> {
        (0..self.rows.len()).map(|v| self.ball(v, radius)).collect()
    }

    /// Distinct finite positive distances, ascending.
    pub fn positive_lengths(&self) -> Vec<Rational> {
        let mut set = BTreeSet::new();
        for (u, row) in self.rows.iter().enumerate() {
            for d in &row[u + 1..] {
                if let Distance::Finite(d) = d {
                    set.insert(d.clone());
                }
            }
        }
        set.into_iter().collect()
    }
}

fn ball_from_row(row: &[Distance], radius: &Rational) -> VertexSet {
    row.iter()
        .enumerate()
        .filter(|(_, d)| d.is_within(radius))
        .map(|(w, _)| w)
        .collect()
}

pub fn all_pairs_distances(g: &WeightedGraph) -> DistanceMatrix {
    DistanceMatrix {
        rows: (0..g.vertex_count)
            .map(|s| single_source_distances(g, s))
            .collect(),
    }
}

/// `{u : dist(u, v) <= r}`; always contains `v` for `r >= 0`.
pub fn ball(g: &WeightedGraph, v: VertexId, r: &Rational) -> Result<VertexSet> {
    if v >= g.vertex_count {
        return Err(Error::input(format!("center {v} out of range")));
    }
    if r.is_negative() {
        return Err(Error::input("ball radius must be non-negative"));
    }
    Ok(ball_from_row(&single_source_distances(g, v), r))
}

/// The vertex set of one shortest path with length in `(r, 2r]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathRecord {
    pub vertex_set: VertexSet,
    pub endpoints: (VertexId, VertexId),
    #[serde(with = "rational::serde_str")]
    pub length: Rational,
}

/// `P_r`: every distinct vertex set of a shortest path whose length lies in
/// `(r, 2r]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathFamily {
    #[serde(with = "rational::serde_str")]
    pub radius: Rational,
    pub paths: Vec<PathRecord>,
    pub truncated: bool,
}

impl PathFamily {
    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        self.paths.iter().map(|p| p.vertex_set.clone()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub(crate) fn require_complete(&self) -> Result<()> {
        if self.truncated {
            Err(Error::input(format!(
                "path family for r = {} was truncated at the enumeration cap",
                rational::format(&self.radius)
            )))
        } else {
            Ok(())
        }
    }
}

/// Enumerates every shortest path with length in `(r, 2r]` by walking the
/// shortest-path predecessor DAG of each pair `s < t`. Stops with
/// `truncated = true` once more than `cap` distinct vertex sets exist.
pub fn enumerate_path_family(g: &WeightedGraph, r: &Rational, cap: usize) -> Result<PathFamily> {
    if !r.is_positive() {
        return Err(Error::input("path family radius must be positive"));
    }
    if cap == 0 {
        return Err(Error::input("path family cap must be positive"));
    }
    let upper = r * rational::int(2);
    let mut found: BTreeMap<VertexSet, PathRecord> = BTreeMap::new();
    let n = g.vertex_count;

    for s in 0..n {
        let dist = single_source_distances(g, s);
        let targets: Vec<VertexId> = (s + 1..n)
            .filter(|&t| matches!(&dist[t], Distance::Finite(d) if d > r && *d <= upper))
            .collect();
        if targets.is_empty() {
            continue;
        }
        let preds = predecessor_dag(g, &dist);
        for t in targets {
            let length = dist[t].finite().expect("filtered finite").clone();
            // Depth-first walk from t back to s; `path` holds the current suffix.
            let mut path = vec![t];
            let mut cursor = vec![0usize];
            while let Some(&v) = path.last() {
                if v == s {
                    let set = canonical_set(path.clone());
                    if !found.contains_key(&set) {
                        if found.len() == cap {
                            return Ok(PathFamily {
                                radius: r.clone(),
                                paths: found.into_values().collect(),
                                truncated: true,
                            });
                        }
                        found.insert(
                            set.clone(),
                            PathRecord {
                                vertex_set: set,
                                endpoints: (s, t),
                                length: length.clone(),
                            },
                        );
                    }
                    path.pop();
                    cursor.pop();
                    continue;
                }
                let i = cursor.last_mut().expect("cursor tracks path");
                if *i < preds[v].len() {
                    let u = preds[v][*i];
                    *i += 1;
                    path.push(u);
                    cursor.push(0);
                } else {
                    path.pop();
                    cursor.pop();
                }
            }
        }
    }
    Ok(PathFamily {
        radius: r.clone(),
        paths: found.into_values().collect(),
        truncated: false,
    })
}

fn predecessor_dag(g: &WeightedGraph, dist: &[Distance]) -> Vec<Vec<VertexId>> {
    (0..g.vertex_count)
        .map(|v| match &dist[v] {
            Distance::Finite(dv) => g.adjacency[v]
                .iter()
                .filter(|&&(u, e)| {
                    matches!(&dist[u], Distance::Finite(du) if &(du + &g.edges[e].length) == dv)
                })
                .map(|&(u, _)| u)
                .collect(),
            Distance::Infinite => Vec::new(),
        })
        .collect()
}

/// Every radius at which the family `P_r` (and the radius-`2r` balls) can
/// change, restricted to radii with a non-empty family.
///
/// With `L` the distinct finite positive distances, the breakpoints are
/// `{l/2} ∪ L`; the family is constant between consecutive breakpoints and
/// empty from `max(L)` on.
pub fn relevant_radii(g: &WeightedGraph) -> Vec<Rational> {
    radii_from_lengths(&all_pairs_distances(g).positive_lengths())
}

pub(crate) fn radii_from_lengths(lengths: &[Rational]) -> Vec<Rational> {
    let Some(max) = lengths.last() else {
        return Vec::new();
    };
    let two = rational::int(2);
    let mut points: BTreeSet<Rational> = lengths.iter().cloned().collect();
    points.extend(lengths.iter().map(|l| l / &two));
    points.into_iter().filter(|b| b < max).collect()
}

/// Returns a copy whose shortest paths are unique while preserving the strict
/// order of all distinct path lengths.
///
/// Lengths are multiples of `1/D` (`D` the lcm of all denominators); edge `i`
/// gains `1/(2D * 2^(i+1))`, so the total perturbation stays below `1/(2D)`
/// and distinct edge sets get distinct perturbations.
pub fn perturb_for_unique_shortest_paths(g: &WeightedGraph) -> Result<WeightedGraph> {
    let lcm = g
        .edges
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.length.denom()));
    let base = Rational::new(BigInt::one(), lcm * BigInt::from(2));
    let edges = g
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let bump = &base / rational::pow2(i as u32 + 1);
            (e.u, e.v, &e.length + bump)
        })
        .collect();
    WeightedGraph::new(g.vertex_count, edges)
}
