//! 3-SAT to Dense Matching with radius-2 balls on a unit-length graph.

use super::{distinct_literals, literal_label, require_satisfying, Builder, GeneratedInstance, Label, ReductionParams};
use crate::cnf::{var_of, Assignment, CnfFormula, Literal};
use crate::error::{Error, Result};
use crate::graph;
use crate::matching::{matching_density, normalize_edge, EdgePair};
use crate::rational;

fn cycle(var: usize, negated: bool, index: usize) -> Label {
    Label::Cycle { var, negated, index }
}

fn chain(clause: usize, lit: Literal, index: usize) -> Label {
    Label::Chain { clause, var: var_of(lit) + 1, negated: lit < 0, index }
}

fn checked_clauses(f: &CnfFormula) -> Result<()> {
    for j in 0..f.clauses().len() {
        let len = distinct_literals(f, j)?.len();
        // A one-literal clause leaves the ball around z_j with a single
        // edge path of length two, so density 2 would be impossible.
        if !(2..=3).contains(&len) {
            return Err(Error::input(format!("clause {} must have 2 or 3 literals", j + 1)));
        }
    }
    Ok(())
}

/// Per variable: the triangles `x_i x_i^0 x_i^1` and `x̄_i x_i^0 x̄_i^1`, each
/// continued by a path to `x^7` with the chord `x^7 x^4`. Per clause: a hub
/// `z_j` and a 4-vertex chain to each literal, whose last vertex also joins
/// the variable's shared vertex `x_i^0`. Balls are all radius-2 balls.
pub fn threesat_to_dense_matching(f: &CnfFormula) -> Result<GeneratedInstance> {
    checked_clauses(f)?;
    let mut b = Builder::default();
    for var in 1..=f.variable_count() {
        b.vertex(Label::Literal { var, negated: false });
        b.vertex(Label::Literal { var, negated: true });
        b.vertex(Label::Shared { var });
        for negated in [false, true] {
            for index in 1..=7 {
                b.vertex(cycle(var, negated, index));
            }
        }
        let shared = Label::Shared { var };
        for negated in [false, true] {
            let lit = Label::Literal { var, negated };
            b.unit(&lit, &shared);
            b.unit(&lit, &cycle(var, negated, 1));
            b.unit(&cycle(var, negated, 1), &shared);
            for index in 1..7 {
                b.unit(&cycle(var, negated, index), &cycle(var, negated, index + 1));
            }
            b.unit(&cycle(var, negated, 7), &cycle(var, negated, 4));
        }
    }
    for (j0, clause) in f.clauses().iter().enumerate() {
        let j = j0 + 1;
        let hub = Label::ClauseHub { clause: j };
        b.vertex(hub.clone());
        for &lit in clause {
            for index in 1..=4 {
                b.vertex(chain(j, lit, index));
            }
            b.unit(&hub, &chain(j, lit, 1));
            for index in 1..4 {
                b.unit(&chain(j, lit, index), &chain(j, lit, index + 1));
            }
            b.unit(&chain(j, lit, 4), &literal_label(lit));
            b.unit(&chain(j, lit, 4), &Label::Shared { var: var_of(lit) + 1 });
        }
    }
    let g = b.graph()?;
    let balls = graph::all_pairs_distances(&g).balls(&rational::int(2));
    b.finish(balls, ReductionParams::k(2))
}

/// The matching built from `a`, choosing in every clause the satisfied
/// literal of lowest variable index (positive before negative).
pub fn dense_matching_witness(f: &CnfFormula, a: &Assignment) -> Result<Vec<EdgePair>> {
    require_satisfying(f, a)?;
    let choices: Vec<Literal> = f
        .clauses()
        .iter()
        .map(|clause| {
            *clause
                .iter()
                .filter(|&&lit| a.literal(lit))
                .min_by_key(|&&lit| (lit.unsigned_abs(), lit < 0))
                .expect("satisfied clause has a true literal")
        })
        .collect();
    dense_matching_witness_with_choices(f, a, &choices)
}

/// The matching built from `a` with `choices[j]` as the satisfied literal of
/// clause `j`.
pub fn dense_matching_witness_with_choices(
    f: &CnfFormula,
    a: &Assignment,
    choices: &[Literal],
) -> Result<Vec<EdgePair>> {
    let inst = threesat_to_dense_matching(f)?;
    require_satisfying(f, a)?;
    if choices.len() != f.clauses().len() {
        return Err(Error::input("need one chosen literal per clause"));
    }
    let mut m = Vec::new();
    let mut add = |x: &Label, y: &Label| m.push(normalize_edge((inst.id(x), inst.id(y))));
    for var in 1..=f.variable_count() {
        for negated in [false, true] {
            for index in [2, 4, 6] {
                add(&cycle(var, negated, index), &cycle(var, negated, index + 1));
            }
            let lit = Label::Literal { var, negated };
            if a.values[var - 1] != negated {
                add(&lit, &Label::Shared { var });
            } else {
                add(&lit, &cycle(var, negated, 1));
            }
        }
    }
    for (j0, (clause, &chosen)) in f.clauses().iter().zip(choices).enumerate() {
        let j = j0 + 1;
        if !clause.contains(&chosen) || !a.literal(chosen) {
            return Err(Error::input(format!(
                "literal {chosen} is not a satisfied literal of clause {j}"
            )));
        }
        for &lit in clause {
            if lit == chosen {
                add(&Label::ClauseHub { clause: j }, &chain(j, lit, 1));
                add(&chain(j, lit, 2), &chain(j, lit, 3));
            } else {
                add(&chain(j, lit, 1), &chain(j, lit, 2));
                add(&chain(j, lit, 3), &chain(j, lit, 4));
            }
        }
    }
    m.sort_unstable();
    Ok(m)
}

/// Sets `x_i = 1` iff `m` joins some clause hub to the chain of the positive
/// literal `x_i`. `m` must be a matching of density at least 2.
pub fn dense_matching_extract(f: &CnfFormula, m: &[EdgePair]) -> Result<Assignment> {
    let inst = threesat_to_dense_matching(f)?;
    let m: Vec<EdgePair> = m.iter().copied().map(normalize_edge).collect();
    let density = matching_density(&inst.graph, &inst.balls, &m)
        .map_err(|e| Error::input(format!("not a matching of the instance: {e}")))?;
    if density < 2 {
        return Err(Error::input(format!("matching density {density} is below 2")));
    }
    let mut values = vec![false; f.variable_count()];
    for (j0, clause) in f.clauses().iter().enumerate() {
        let hub = inst.id(&Label::ClauseHub { clause: j0 + 1 });
        for &lit in clause.iter().filter(|&&l| l > 0) {
            let first = inst.id(&chain(j0 + 1, lit, 1));
            if m.contains(&normalize_edge((hub, first))) {
                values[var_of(lit)] = true;
            }
        }
    }
    Ok(Assignment::new(values))
}
