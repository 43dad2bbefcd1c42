//! 2-SAT by strongly connected components of the implication graph, and the
//! sparseness-1 vertex cover solver built on it.

use serde::{Deserialize, Serialize};

use crate::cnf::{var_of, Assignment, Literal};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::instance::{canonical_set, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSatFormula {
    variable_count: usize,
    clauses: Vec<(Literal, Literal)>,
}

impl TwoSatFormula {
    pub fn new(variable_count: usize, clauses: Vec<(Literal, Literal)>) -> Result<Self> {
        for &(a, b) in &clauses {
            for lit in [a, b] {
                if lit == 0 || lit.unsigned_abs() as usize > variable_count {
                    return Err(Error::input(format!(
                        "literal {lit} out of range for {variable_count} variables"
                    )));
                }
            }
        }
        Ok(TwoSatFormula { variable_count, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }
}

/// Implication-graph node of a literal: `2i` for `x_i`, `2i + 1` for `¬x_i`
/// (0-based `i`).
fn node(lit: Literal) -> usize {
    2 * var_of(lit) + usize::from(lit < 0)
}

/// A satisfying assignment, or `None` if the formula is unsatisfiable.
///
/// A variable that occurs in no clause comes out false: the depth-first
/// search starts from `¬x` before `x`, so `¬x` closes its component first.
pub fn twosat_solve(f: &TwoSatFormula) -> Option<Assignment> {
    let nodes = 2 * f.variable_count;
    let mut succ = vec![Vec::new(); nodes];
    for &(a, b) in &f.clauses {
        // (a ∨ b) ≡ (¬a → b) ∧ (¬b → a)
        succ[node(-a)].push(node(b));
        succ[node(-b)].push(node(a));
    }
    let order: Vec<usize> = (0..f.variable_count).flat_map(|i| [2 * i + 1, 2 * i]).collect();
    let comp = tarjan(&succ, &order);
    let mut values = Vec::with_capacity(f.variable_count);
    for i in 0..f.variable_count {
        let (pos, neg) = (comp[2 * i], comp[2 * i + 1]);
        if pos == neg {
            return None;
        }
        // Components are numbered in reverse topological order.
        values.push(pos < neg);
    }
    Some(Assignment::new(values))
}

/// Tarjan's algorithm without recursion; component ids follow completion
/// order, i.e. reverse topological order of the condensation.
fn tarjan(succ: &[Vec<usize>], roots: &[usize]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    for &root in roots {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(top) = call.last_mut() {
            let v = top.0;
            if let Some(&w) = succ[v].get(top.1) {
                top.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("component root is on the stack");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

/// The formula whose models are the vertex covers of `g` with at most one
/// vertex in every ball. Variable `v + 1` stands for vertex `v`.
pub fn sparse_vc_k1_formula(g: &WeightedGraph, balls: &[VertexSet]) -> Result<TwoSatFormula> {
    let lit = |v: usize| (v + 1) as Literal;
    let mut clauses: Vec<(Literal, Literal)> =
        g.edge_pairs().into_iter().map(|(u, v)| (lit(u), lit(v))).collect();
    for ball in balls {
        let ball = canonical_set(ball.clone());
        if let Some(&w) = ball.iter().find(|&&w| w >= g.vertex_count()) {
            return Err(Error::input(format!("ball vertex {w} out of range")));
        }
        for (i, &u) in ball.iter().enumerate() {
            for &v in &ball[i + 1..] {
                clauses.push((-lit(u), -lit(v)));
            }
        }
    }
    TwoSatFormula::new(g.vertex_count(), clauses)
}

/// A vertex cover meeting every ball in at most one vertex, if one exists.
/// The result is exactly the set of true variables, without minimization.
pub fn solve_sparse_vc_k1(g: &WeightedGraph, balls: &[VertexSet]) -> Result<Option<VertexSet>> {
    let formula = sparse_vc_k1_formula(g, balls)?;
    Ok(twosat_solve(&formula).map(|a| {
        a.values
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
            .collect()
    }))
}
