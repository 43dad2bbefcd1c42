//! Instance generators for the hardness reductions, with the witness maps
//! (assignment or clique to solution) and extractors (solution back to
//! assignment) that make round trips checkable.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::cnf::{evaluate_assignment, Assignment, CnfFormula, Literal};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::instance::{canonical_set, SetSystemInstance, VertexId, VertexSet};
use crate::rational::{self, Rational};

mod dense_matching;
mod fair_vc;
mod rhd;
mod sparse_vc;

pub use dense_matching::{
    dense_matching_extract, dense_matching_witness, dense_matching_witness_with_choices,
    threesat_to_dense_matching,
};
pub use fair_vc::{
    fair_vc_extract, fair_vc_witness, open_fair_vc_witness, p2p1n3sat_to_fair_vc, p2p1n3sat_to_open_fair_vc,
};
pub use rhd::{
    clique_to_rhd, gadget_path_uz, gadget_path_zu, rhd_witness_from_clique, synchronizer_path_a,
    synchronizer_path_b, walk_length, DirectedEdges,
};
pub use sparse_vc::{exactly3sat_to_sparse_vc, sparse_vc_extract, sparse_vc_witness};

/// One of the four vertex paths of a clique-reduction gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Track {
    U,
    A,
    V,
    B,
}

impl fmt::Display for Track {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Track::U => "u",
            Track::A => "a",
            Track::V => "v",
            Track::B => "b",
        })
    }
}

/// The three global hub triples of the clique reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PsiGroup {
    Main,
    Alpha,
    Beta,
}

/// Structured name of a generated vertex. Variable, clause, gadget and copy
/// indices are 1-based; vertices of the clique-reduction source graph keep
/// their own 0-based ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Label {
    /// `x_i` or `x̄_i`.
    Literal { var: usize, negated: bool },
    /// Padding pair `y_t`, `ȳ_t` of the matching reduction.
    Pad { index: usize, negated: bool },
    /// Star `Y_i^s`: center `r = 0`, leaves `r = 1..=k`.
    StarY { var: usize, s: usize, r: usize },
    /// Depth-two tree `Y_i`: root `(0, 0)`, children `(c, 0)`, leaves `(c, l)`.
    TreeY { var: usize, child: usize, leaf: usize },
    /// Clause star `Z_j`.
    StarZ { clause: usize, r: usize },
    /// Filler star `Q_j^s`.
    StarQ { clause: usize, s: usize, r: usize },
    /// `x_i^0`, shared by both polarities.
    Shared { var: usize },
    /// `x_i^l` or `x̄_i^l` for `l = 1..=7`.
    Cycle { var: usize, negated: bool, index: usize },
    /// `z_j` of the matching reduction.
    ClauseHub { clause: usize },
    /// `x^{j,l}` for the literal `x` of clause `j`, `l = 1..=4`.
    Chain { clause: usize, var: usize, negated: bool, index: usize },
    /// Path vertex `t^ι_{i,j}` of copy `copy`.
    Path { track: Track, i: usize, j: usize, copy: usize, index: usize },
    /// Connector `t^{end,toward}_{i,j}` with `end` either 0 or `m + 1`.
    Connector { track: Track, end: usize, toward: Track, i: usize, j: usize, copy: usize },
    /// `ψ`, `ψ'`, `ψ''` (primes 0, 1, 2) of a group.
    Psi { group: PsiGroup, primes: u8 },
    /// `α_{i,j}^{(x,y)}`.
    Alpha { i: usize, j: usize, x: usize, y: usize },
    /// `β_i^x`.
    Beta { i: usize, x: usize },
}

fn bar(negated: bool) -> &'static str {
    if negated {
        "xbar"
    } else {
        "x"
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::Literal { var, negated } => write!(f, "{}_{var}", bar(negated)),
            Label::Pad { index, negated } => {
                write!(f, "{}_{index}", if negated { "ybar" } else { "y" })
            }
            Label::StarY { var, s, r } => write!(f, "y^{s}_{{{var},{r}}}"),
            Label::TreeY { var, child, leaf: 0 } => write!(f, "y_{{{var},{child}}}"),
            Label::TreeY { var, child, leaf } => write!(f, "y^{child}_{{{var},{leaf}}}"),
            Label::StarZ { clause, r } => write!(f, "z_{{{clause},{r}}}"),
            Label::StarQ { clause, s, r } => write!(f, "q^{s}_{{{clause},{r}}}"),
            Label::Shared { var } => write!(f, "x_{var}^0"),
            Label::Cycle { var, negated, index } => write!(f, "{}_{var}^{index}", bar(negated)),
            Label::ClauseHub { clause } => write!(f, "z_{clause}"),
            Label::Chain { clause, var, negated, index } => {
                write!(f, "{}_{var}^{{{clause},{index}}}", bar(negated))
            }
            Label::Path { track, i, j, copy, index } => {
                write!(f, "{track}_{{{i},{j}}}^{index}#{copy}")
            }
            Label::Connector { track, end, toward, i, j, copy } => {
                write!(f, "{track}_{{{i},{j}}}^{{{end},{toward}}}#{copy}")
            }
            Label::Psi { group, primes } => {
                let base = match group {
                    PsiGroup::Main => "psi",
                    PsiGroup::Alpha => "psi_alpha",
                    PsiGroup::Beta => "psi_beta",
                };
                write!(f, "{base}{}", "'".repeat(primes as usize))
            }
            Label::Alpha { i, j, x, y } => write!(f, "alpha_{{{i},{j}}}^({x},{y})"),
            Label::Beta { i, x } => write!(f, "beta_{i}^{x}"),
        }
    }
}

/// Reduction parameters. Fields that a construction does not use are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionParams {
    pub k: usize,
    pub c: Option<usize>,
    #[serde(with = "rational::serde_opt_str")]
    pub r: Option<Rational>,
    pub k_prime: Option<usize>,
    /// Number of directed source edges in the clique reduction.
    pub m: Option<usize>,
}

impl ReductionParams {
    fn k(k: usize) -> Self {
        ReductionParams { k, c: None, r: None, k_prime: None, m: None }
    }
}

/// A generated graph, its ball family, and the name of every vertex.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub graph: WeightedGraph,
    pub balls: Vec<VertexSet>,
    pub labels: Vec<Label>,
    pub params: ReductionParams,
    index: HashMap<Label, VertexId>,
}

impl GeneratedInstance {
    pub fn vertex(&self, label: &Label) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub(crate) fn id(&self, label: &Label) -> VertexId {
        self.index[label]
    }

    /// The Sparse-HS view: edges to hit, balls to keep sparse.
    pub fn set_system(&self) -> Result<SetSystemInstance> {
        let f = self.graph.edge_pairs().into_iter().map(|(u, v)| vec![u, v]).collect();
        SetSystemInstance::new(self.graph.vertex_count(), f, self.balls.clone())
    }

    /// Label strings indexed by vertex id.
    pub fn label_strings(&self) -> Vec<String> {
        self.labels.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for GeneratedInstance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            graph: &'a WeightedGraph,
            balls: &'a [VertexSet],
            labels: Vec<String>,
            params: &'a ReductionParams,
        }
        View {
            graph: &self.graph,
            balls: &self.balls,
            labels: self.label_strings(),
            params: &self.params,
        }
        .serialize(s)
    }
}

/// Accumulates labelled vertices and edges.
#[derive(Default)]
struct Builder {
    labels: Vec<Label>,
    index: HashMap<Label, VertexId>,
    edges: Vec<(VertexId, VertexId, Rational)>,
}

impl Builder {
    fn vertex(&mut self, label: Label) -> VertexId {
        let id = self.labels.len();
        let previous = self.index.insert(label.clone(), id);
        debug_assert!(previous.is_none(), "label {label} added twice");
        self.labels.push(label);
        id
    }

    fn id(&self, label: &Label) -> VertexId {
        self.index[label]
    }

    fn edge(&mut self, a: &Label, b: &Label, length: Rational) {
        self.edges.push((self.id(a), self.id(b), length));
    }

    fn unit(&mut self, a: &Label, b: &Label) {
        self.edge(a, b, rational::int(1));
    }

    fn graph(&self) -> Result<WeightedGraph> {
        WeightedGraph::new(self.labels.len(), self.edges.clone())
    }

    fn finish(self, balls: Vec<VertexSet>, params: ReductionParams) -> Result<GeneratedInstance> {
        let graph = self.graph()?;
        Ok(GeneratedInstance {
            graph,
            balls: balls.into_iter().map(canonical_set).collect(),
            labels: self.labels,
            params,
            index: self.index,
        })
    }
}

fn literal_label(lit: Literal) -> Label {
    Label::Literal { var: lit.unsigned_abs() as usize, negated: lit < 0 }
}

fn require_satisfying(f: &CnfFormula, a: &Assignment) -> Result<()> {
    if evaluate_assignment(f, a)? {
        Ok(())
    } else {
        Err(Error::input("assignment does not satisfy the formula"))
    }
}

/// Clause literals with duplicates rejected.
fn distinct_literals(f: &CnfFormula, j: usize) -> Result<&[Literal]> {
    let clause = &f.clauses()[j];
    for (p, a) in clause.iter().enumerate() {
        if clause[..p].contains(a) {
            return Err(Error::input(format!("clause {} repeats literal {a}", j + 1)));
        }
    }
    Ok(clause)
}

/// Sorted vertex ids of the given labels.
fn ids(inst: &GeneratedInstance, labels: impl IntoIterator<Item = Label>) -> VertexSet {
    canonical_set(labels.into_iter().map(|l| inst.id(&l)).collect())
}
