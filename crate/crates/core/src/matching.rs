//! Matchings and their density with respect to a family of vertex sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::instance::{VertexId, VertexSet};

/// Normalized edge: smaller endpoint first.
pub type EdgePair = (VertexId, VertexId);

pub fn normalize_edge((u, v): EdgePair) -> EdgePair {
    (u.min(v), u.max(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatchingSolution {
    pub edges: Vec<EdgePair>,
    pub density: usize,
}

impl MatchingSolution {
    /// Validates `edges` and computes the density against `balls`.
    pub fn evaluate(g: &WeightedGraph, balls: &[VertexSet], edges: Vec<EdgePair>) -> Result<Self> {
        let mut edges: Vec<EdgePair> = edges.into_iter().map(normalize_edge).collect();
        edges.sort_unstable();
        let density = matching_density(g, balls, &edges)?;
        Ok(MatchingSolution { edges, density })
    }
}

/// Checks that `m` is a set of graph edges with pairwise disjoint endpoints.
pub fn validate_matching(g: &WeightedGraph, m: &[EdgePair]) -> Result<()> {
    let mut used = vec![false; g.vertex_count()];
    for &(u, v) in m {
        if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
            return Err(Error::validation(format!("{{{u},{v}}} is not an edge")));
        }
        for w in [u, v] {
            if used[w] {
                return Err(Error::validation(format!(
                    "vertex {w} is covered by two matching edges"
                )));
            }
            used[w] = true;
        }
    }
    Ok(())
}

/// `min_B |{e in m : e ⊆ B}|`. An empty ball list has no minimum and is
/// rejected.
pub fn matching_density(g: &WeightedGraph, balls: &[VertexSet], m: &[EdgePair]) -> Result<usize> {
    validate_matching(g, m)?;
    if balls.is_empty() {
        return Err(Error::input("density needs at least one ball"));
    }
    let mut inside = vec![false; g.vertex_count()];
    let mut best = usize::MAX;
    for ball in balls {
        if let Some(&w) = ball.iter().find(|&&w| w >= g.vertex_count()) {
            return Err(Error::input(format!("ball vertex {w} out of range")));
        }
        for &w in ball {
            inside[w] = true;
        }
        let count = m.iter().filter(|&&(u, v)| inside[u] && inside[v]).count();
        best = best.min(count);
        for &w in ball {
            inside[w] = false;
        }
    }
    Ok(best)
}
