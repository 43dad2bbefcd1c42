//! Exactly-3-SAT to Sparse-VC on a perfect matching.

use super::{distinct_literals, ids, literal_label, require_satisfying, Builder, GeneratedInstance, Label, ReductionParams};
use crate::cnf::{Assignment, CnfFormula};
use crate::error::{Error, Result};
use crate::instance::{load_against, VertexId, VertexSet};

fn pad(index: usize, negated: bool) -> Label {
    Label::Pad { index, negated }
}

/// Vertices `x_i, x̄_i` for every variable followed by `y_t, ȳ_t` for
/// `t = 1..k-1`, one edge per pair. Variable balls hold a literal pair and
/// all padding; clause balls hold the clause and the first `k - 2` padding
/// pairs.
pub fn exactly3sat_to_sparse_vc(f: &CnfFormula, k: usize) -> Result<GeneratedInstance> {
    if k < 2 {
        return Err(Error::input("sparseness bound k must be at least 2"));
    }
    for j in 0..f.clauses().len() {
        if distinct_literals(f, j)?.len() != 3 {
            return Err(Error::input(format!("clause {} does not have 3 literals", j + 1)));
        }
    }
    let mut b = Builder::default();
    for var in 1..=f.variable_count() {
        for negated in [false, true] {
            b.vertex(Label::Literal { var, negated });
        }
        b.unit(&Label::Literal { var, negated: false }, &Label::Literal { var, negated: true });
    }
    for t in 1..k {
        b.vertex(pad(t, false));
        b.vertex(pad(t, true));
        b.unit(&pad(t, false), &pad(t, true));
    }
    let padding = |upto: usize, b: &Builder| -> Vec<VertexId> {
        (1..=upto).flat_map(|t| [b.id(&pad(t, false)), b.id(&pad(t, true))]).collect()
    };
    let mut balls: Vec<VertexSet> = Vec::new();
    for var in 1..=f.variable_count() {
        let mut ball = padding(k - 1, &b);
        ball.push(b.id(&Label::Literal { var, negated: false }));
        ball.push(b.id(&Label::Literal { var, negated: true }));
        balls.push(ball);
    }
    for clause in f.clauses() {
        let mut ball = padding(k - 2, &b);
        ball.extend(clause.iter().map(|&l| b.id(&literal_label(l))));
        balls.push(ball);
    }
    b.finish(balls, ReductionParams::k(k))
}

/// The false literals plus `y_1, ..., y_{k-1}`.
pub fn sparse_vc_witness(f: &CnfFormula, k: usize, a: &Assignment) -> Result<VertexSet> {
    let inst = exactly3sat_to_sparse_vc(f, k)?;
    require_satisfying(f, a)?;
    let false_literals = (1..=f.variable_count()).map(|var| Label::Literal {
        var,
        negated: a.values[var - 1],
    });
    Ok(ids(&inst, false_literals.chain((1..k).map(|t| pad(t, false)))))
}

/// Reads `x_i = 1` iff `x̄_i` is in `h`. `h` must be a vertex cover of the
/// generated instance with sparseness at most `k`.
pub fn sparse_vc_extract(f: &CnfFormula, k: usize, h: &[VertexId]) -> Result<Assignment> {
    let inst = exactly3sat_to_sparse_vc(f, k)?;
    require_bounded_cover(&inst, h, k)?;
    let values = (1..=f.variable_count())
        .map(|var| h.contains(&inst.id(&Label::Literal { var, negated: true })))
        .collect();
    Ok(Assignment::new(values))
}

/// Input error unless `h` covers every edge and meets every ball in at most
/// `k` vertices.
pub(super) fn require_bounded_cover(inst: &GeneratedInstance, h: &[VertexId], k: usize) -> Result<()> {
    let n = inst.graph.vertex_count();
    if let Some(&v) = h.iter().find(|&&v| v >= n) {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    if let Some((u, v)) = inst.graph.edge_pairs().into_iter().find(|(u, v)| !h.contains(u) && !h.contains(v)) {
        return Err(Error::input(format!("edge {{{u}, {v}}} is not covered")));
    }
    let load = load_against(n, &inst.balls, h);
    if load > k {
        return Err(Error::input(format!("sparseness {load} exceeds {k}")));
    }
    Ok(())
}
