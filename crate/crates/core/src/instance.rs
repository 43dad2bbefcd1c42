//! Set systems `(V, F, B)`, hitting sets, and their validators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

pub type VertexId = usize;

/// Sorted, duplicate-free list of vertex ids.
pub type VertexSet = Vec<VertexId>;

pub fn canonical_set(mut set: Vec<VertexId>) -> VertexSet {
    set.sort_unstable();
    set.dedup();
    set
}

/// Canonicalizes every member and collapses identical members; the family
/// comes back in lexicographic order.
pub fn canonical_family(family: Vec<Vec<VertexId>>) -> Vec<VertexSet> {
    let mut family: Vec<VertexSet> = family.into_iter().map(canonical_set).collect();
    family.sort();
    family.dedup();
    family
}

/// A Sparse Hitting Set instance: hit every set of `F` while keeping the
/// number of chosen vertices inside every set of `B` small.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InstanceFile", into = "InstanceFile")]
pub struct SetSystemInstance {
    universe_size: usize,
    family_f: Vec<VertexSet>,
    family_b: Vec<VertexSet>,
}

/// On-disk form: `{"n": int, "F": [[int,...],...], "B": [[int,...],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    #[serde(rename = "F")]
    pub f: Vec<Vec<VertexId>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<VertexId>>,
}

impl TryFrom<InstanceFile> for SetSystemInstance {
    type Error = Error;

    fn try_from(file: InstanceFile) -> Result<Self> {
        SetSystemInstance::new(file.n, file.f, file.b)
    }
}

impl From<SetSystemInstance> for InstanceFile {
    fn from(inst: SetSystemInstance) -> Self {
        InstanceFile {
            n: inst.universe_size,
            f: inst.family_f,
            b: inst.family_b,
        }
    }
}

impl SetSystemInstance {
    /// Builds a canonical instance. An empty member of `F` can never be hit
    /// and is rejected; empty members of `B` are harmless and kept.
    pub fn new(
        universe_size: usize,
        family_f: Vec<Vec<VertexId>>,
        family_b: Vec<Vec<VertexId>>,
    ) -> Result<Self> {
        for (name, family) in [("F", &family_f), ("B", &family_b)] {
            for set in family {
                if let Some(&v) = set.iter().find(|&&v| v >= universe_size) {
                    return Err(Error::input(format!(
                        "vertex {v} in family {name} is outside universe of size {universe_size}"
                    )));
                }
            }
        }
        if family_f.iter().any(|s| s.is_empty()) {
            return Err(Error::input("family F contains an empty set, which cannot be hit"));
        }
        Ok(SetSystemInstance {
            universe_size,
            family_f: canonical_family(family_f),
            family_b: canonical_family(family_b),
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn family_f(&self) -> &[VertexSet] {
        &self.family_f
    }

    pub fn family_b(&self) -> &[VertexSet] {
        &self.family_b
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance serialization cannot fail")
    }

    fn check_members(&self, h: &[VertexId]) -> Result<()> {
        match h.iter().find(|&&v| v >= self.universe_size) {
            Some(v) => Err(Error::input(format!(
                "vertex {v} is outside universe of size {}",
                self.universe_size
            ))),
            None => Ok(()),
        }
    }
}

/// A chosen vertex set together with its sparseness.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HittingSolution {
    #[serde(rename = "H")]
    pub members: VertexSet,
    pub sparseness: usize,
}

impl HittingSolution {
    /// Wraps `members`, computing the sparseness against `instance`.
    pub fn evaluate(instance: &SetSystemInstance, members: Vec<VertexId>) -> Result<Self> {
        let members = canonical_set(members);
        let sparseness = sparseness_of(instance, &members)?;
        Ok(HittingSolution { members, sparseness })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mut sol: HittingSolution = serde_json::from_str(text)?;
        sol.members = canonical_set(sol.members);
        Ok(sol)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("solution serialization cannot fail")
    }
}

fn membership_mask(n: usize, h: &[VertexId]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in h {
        mask[v] = true;
    }
    mask
}

/// Largest number of members of `h` inside any set of `B` (0 when `B` is empty).
pub fn sparseness_of(instance: &SetSystemInstance, h: &[VertexId]) -> Result<usize> {
    instance.check_members(h)?;
    let mask = membership_mask(instance.universe_size, h);
    Ok(max_load(&instance.family_b, &mask))
}

pub(crate) fn max_load(family: &[VertexSet], mask: &[bool]) -> usize {
    family
        .iter()
        .map(|b| b.iter().filter(|&&v| mask[v]).count())
        .max()
        .unwrap_or(0)
}

/// True iff `h` intersects every set of `F`.
pub fn is_hitting_set(instance: &SetSystemInstance, h: &[VertexId]) -> Result<bool> {
    instance.check_members(h)?;
    let mask = membership_mask(instance.universe_size, h);
    Ok(instance
        .family_f
        .iter()
        .all(|f| f.iter().any(|&v| mask[v])))
}

/// Sparse-VC as Sparse-HS: `F` is the edge set of `g`, `B` the given balls.
pub fn vertex_cover_instance(g: &WeightedGraph, balls: &[VertexSet]) -> Result<SetSystemInstance> {
    let edges = g.edge_pairs().into_iter().map(|(u, v)| vec![u, v]).collect();
    SetSystemInstance::new(g.vertex_count(), edges, balls.to_vec())
}

/// Fair-VC: balls are the closed neighborhoods `N[v]`.
pub fn fair_vc_instance(g: &WeightedGraph) -> Result<SetSystemInstance> {
    let balls: Vec<VertexSet> = (0..g.vertex_count()).map(|v| g.closed_neighborhood(v)).collect();
    vertex_cover_instance(g, &balls)
}

/// Open-Fair-VC: balls are the open neighborhoods `N(v)`.
pub fn open_fair_vc_instance(g: &WeightedGraph) -> Result<SetSystemInstance> {
    let balls: Vec<VertexSet> = (0..g.vertex_count()).map(|v| g.open_neighborhood(v)).collect();
    vertex_cover_instance(g, &balls)
}

/// Largest number of members of `h` inside any of `family`; ids must be `< n`.
pub(crate) fn load_against(n: usize, family: &[VertexSet], h: &[VertexId]) -> usize {
    max_load(family, &membership_mask(n, h))
}
