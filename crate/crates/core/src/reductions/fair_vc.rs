//! 2P1N-3-SAT to Fair-VC (closed neighborhoods) and Open-Fair-VC.

use super::sparse_vc::require_bounded_cover;
use super::{distinct_literals, ids, literal_label, require_satisfying, Builder, GeneratedInstance, Label, ReductionParams};
use crate::cnf::{var_of, Assignment, CnfFormula};
use crate::error::{Error, Result};
use crate::instance::VertexSet;

/// Every clause has 2 or 3 distinct literals and every variable occurs
/// exactly twice positively and once negatively.
fn require_2p1n(f: &CnfFormula) -> Result<()> {
    let mut occurrences = vec![(0usize, 0usize); f.variable_count()];
    for j in 0..f.clauses().len() {
        let clause = distinct_literals(f, j)?;
        if !(2..=3).contains(&clause.len()) {
            return Err(Error::input(format!("clause {} must have 2 or 3 literals", j + 1)));
        }
        for &lit in clause {
            let entry = &mut occurrences[var_of(lit)];
            if lit > 0 {
                entry.0 += 1;
            } else {
                entry.1 += 1;
            }
        }
    }
    if let Some(i) = occurrences.iter().position(|&o| o != (2, 1)) {
        return Err(Error::input(format!(
            "variable {} occurs {} times positively and {} times negatively, expected 2 and 1",
            i + 1,
            occurrences[i].0,
            occurrences[i].1
        )));
    }
    Ok(())
}

fn x(var: usize) -> Label {
    Label::Literal { var, negated: false }
}

fn xbar(var: usize) -> Label {
    Label::Literal { var, negated: true }
}

fn z(clause: usize, r: usize) -> Label {
    Label::StarZ { clause, r }
}

fn q(clause: usize, s: usize, r: usize) -> Label {
    Label::StarQ { clause, s, r }
}

/// Adds the clause stars `Z_j` and filler stars `Q_j^s` with their edges to
/// the literal vertices, which must already exist.
fn add_clause_gadgets(b: &mut Builder, f: &CnfFormula, k: usize) {
    for (j0, clause) in f.clauses().iter().enumerate() {
        let j = j0 + 1;
        for r in 0..=k {
            b.vertex(z(j, r));
        }
        for s in 1..=k - clause.len() {
            for r in 0..=k {
                b.vertex(q(j, s, r));
            }
        }
        for &lit in clause {
            b.unit(&literal_label(lit), &z(j, 0));
        }
        for r in 1..=k {
            b.unit(&z(j, 0), &z(j, r));
        }
        for s in 1..=k - clause.len() {
            b.unit(&z(j, 0), &q(j, s, 0));
            for r in 1..=k {
                b.unit(&q(j, s, 0), &q(j, s, r));
            }
        }
    }
}

fn clause_centers(f: &CnfFormula, k: usize) -> Vec<Label> {
    let mut centers = Vec::new();
    for (j0, clause) in f.clauses().iter().enumerate() {
        centers.push(z(j0 + 1, 0));
        centers.extend((1..=k - clause.len()).map(|s| q(j0 + 1, s, 0)));
    }
    centers
}

fn false_literals(f: &CnfFormula, a: &Assignment) -> impl Iterator<Item = Label> + use<> {
    let values = a.values.clone();
    (1..=f.variable_count()).map(move |var| Label::Literal { var, negated: values[var - 1] })
}

/// Fair-VC instance for `k >= 3`: literal pair edges, `k - 2` stars `Y_i^s`
/// per variable (`x̄_i` joined to every center, `x_i` to the first `k - 3`),
/// a star `Z_j` per clause joined to its literals, and `k - |C_j|` filler
/// stars hanging off `z_{j,0}`. Balls are closed neighborhoods.
pub fn p2p1n3sat_to_fair_vc(f: &CnfFormula, k: usize) -> Result<GeneratedInstance> {
    if k < 3 {
        return Err(Error::input("Fair-VC reduction needs k >= 3"));
    }
    require_2p1n(f)?;
    let y = |var, s, r| Label::StarY { var, s, r };
    let mut b = Builder::default();
    for var in 1..=f.variable_count() {
        b.vertex(x(var));
        b.vertex(xbar(var));
        for s in 1..=k - 2 {
            for r in 0..=k {
                b.vertex(y(var, s, r));
            }
        }
        b.unit(&x(var), &xbar(var));
        for s in 1..=k - 3 {
            b.unit(&x(var), &y(var, s, 0));
        }
        for s in 1..=k - 2 {
            b.unit(&xbar(var), &y(var, s, 0));
            for r in 1..=k {
                b.unit(&y(var, s, 0), &y(var, s, r));
            }
        }
    }
    add_clause_gadgets(&mut b, f, k);
    let g = b.graph()?;
    let balls = (0..g.vertex_count()).map(|v| g.closed_neighborhood(v)).collect();
    b.finish(balls, ReductionParams::k(k))
}

/// False literals plus every star center.
pub fn fair_vc_witness(f: &CnfFormula, k: usize, a: &Assignment) -> Result<VertexSet> {
    let inst = p2p1n3sat_to_fair_vc(f, k)?;
    require_satisfying(f, a)?;
    let centers = (1..=f.variable_count())
        .flat_map(|var| (1..=k - 2).map(move |s| Label::StarY { var, s, r: 0 }));
    Ok(ids(&inst, false_literals(f, a).chain(centers).chain(clause_centers(f, k))))
}

/// Open-Fair-VC instance for `k >= 4`: as the closed version, but each
/// variable gets a single depth-two tree `Y_i` (root with `k - 1` children,
/// each child with `k` leaves) whose root is joined to both literals. Balls
/// are open neighborhoods.
pub fn p2p1n3sat_to_open_fair_vc(f: &CnfFormula, k: usize) -> Result<GeneratedInstance> {
    if k < 4 {
        return Err(Error::input("Open-Fair-VC reduction needs k >= 4"));
    }
    require_2p1n(f)?;
    let y = |var, child, leaf| Label::TreeY { var, child, leaf };
    let mut b = Builder::default();
    for var in 1..=f.variable_count() {
        b.vertex(x(var));
        b.vertex(xbar(var));
        b.vertex(y(var, 0, 0));
        for child in 1..k {
            b.vertex(y(var, child, 0));
            for leaf in 1..=k {
                b.vertex(y(var, child, leaf));
            }
        }
        b.unit(&x(var), &xbar(var));
        b.unit(&x(var), &y(var, 0, 0));
        b.unit(&xbar(var), &y(var, 0, 0));
        for child in 1..k {
            b.unit(&y(var, 0, 0), &y(var, child, 0));
            for leaf in 1..=k {
                b.unit(&y(var, child, 0), &y(var, child, leaf));
            }
        }
    }
    add_clause_gadgets(&mut b, f, k);
    let g = b.graph()?;
    let balls = (0..g.vertex_count()).map(|v| g.open_neighborhood(v)).collect();
    b.finish(balls, ReductionParams::k(k))
}

/// False literals, every tree root and child, and every clause star center.
pub fn open_fair_vc_witness(f: &CnfFormula, k: usize, a: &Assignment) -> Result<VertexSet> {
    let inst = p2p1n3sat_to_open_fair_vc(f, k)?;
    require_satisfying(f, a)?;
    let tree = (1..=f.variable_count())
        .flat_map(|var| (0..k).map(move |child| Label::TreeY { var, child, leaf: 0 }));
    Ok(ids(&inst, false_literals(f, a).chain(tree).chain(clause_centers(f, k))))
}

/// Reads `x_i = 1` iff `x̄_i` is in `h`, after checking that `h` is a vertex
/// cover with sparseness at most `k` on `inst`.
pub fn fair_vc_extract(inst: &GeneratedInstance, f: &CnfFormula, h: &[usize]) -> Result<Assignment> {
    require_bounded_cover(inst, h, inst.params.k)?;
    let values = (1..=f.variable_count())
        .map(|var| {
            inst.vertex(&xbar(var))
                .map(|v| h.contains(&v))
                .ok_or_else(|| Error::input(format!("instance has no vertex for variable {var}")))
        })
        .collect::<Result<_>>()?;
    Ok(Assignment::new(values))
}
