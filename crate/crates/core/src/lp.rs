//! Exact rational linear programming (two-phase simplex with Bland's rule)
//! and the relaxations used by the approximation algorithms.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::instance::VertexSet;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    #[serde(with = "rational::serde_vec_str")]
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
}

/// `minimize objective · x` subject to the constraints and per-variable
/// bounds. A missing bound means the variable is unbounded in that direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearProgram {
    pub variable_count: usize,
    #[serde(with = "rational::serde_vec_str")]
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    #[serde(with = "rational::serde_vec_opt_str")]
    pub lower_bounds: Vec<Option<Rational>>,
    #[serde(with = "rational::serde_vec_opt_str")]
    pub upper_bounds: Vec<Option<Rational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver outcome. `values` and `objective_value` are meaningful only when
/// the status is optimal; otherwise they are empty and zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LpSolution {
    pub status: LpStatus,
    #[serde(with = "rational::serde_vec_str")]
    pub values: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub objective_value: Rational,
}

impl LinearProgram {
    /// Empty program over `variable_count` non-negative variables.
    pub fn new(variable_count: usize) -> Self {
        LinearProgram {
            variable_count,
            objective: vec![Rational::zero(); variable_count],
            constraints: Vec::new(),
            lower_bounds: vec![Some(Rational::zero()); variable_count],
            upper_bounds: vec![None; variable_count],
        }
    }

    pub fn add_constraint(&mut self, terms: &[(usize, Rational)], relation: Relation, rhs: Rational) {
        let mut coeffs = vec![Rational::zero(); self.variable_count];
        for (j, c) in terms {
            coeffs[*j] += c;
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    fn check_dimensions(&self) -> Result<()> {
        let n = self.variable_count;
        if self.objective.len() != n || self.lower_bounds.len() != n || self.upper_bounds.len() != n {
            return Err(Error::input("objective or bound vector length differs from variable count"));
        }
        if let Some(i) = self.constraints.iter().position(|c| c.coeffs.len() != n) {
            return Err(Error::input(format!("constraint {i} has the wrong number of coefficients")));
        }
        Ok(())
    }

    /// True iff `values` satisfies every constraint and bound exactly.
    pub fn is_feasible(&self, values: &[Rational]) -> bool {
        if values.len() != self.variable_count {
            return false;
        }
        let bounds_ok = values.iter().enumerate().all(|(j, x)| {
            self.lower_bounds[j].as_ref().is_none_or(|l| x >= l)
                && self.upper_bounds[j].as_ref().is_none_or(|u| x <= u)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, values);
                match c.relation {
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn objective_at(&self, values: &[Rational]) -> Rational {
        dot(&self.objective, values)
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// How an original variable is expressed through non-negative columns.
enum Substitution {
    /// `x = offset + col`
    Shifted { col: usize, offset: Rational },
    /// `x = offset - col`
    Mirrored { col: usize, offset: Rational },
    /// `x = pos - neg`
    Split { pos: usize, neg: usize },
}

/// Solves `p` exactly. The simplex uses Bland's rule in both phases, so it
/// terminates and is deterministic.
pub fn solve_lp(p: &LinearProgram) -> Result<LpSolution> {
    p.check_dimensions()?;
    for j in 0..p.variable_count {
        if let (Some(l), Some(u)) = (&p.lower_bounds[j], &p.upper_bounds[j]) {
            if l > u {
                return Ok(not_optimal(LpStatus::Infeasible));
            }
        }
    }

    // Express every variable through non-negative structural columns.
    let mut subs = Vec::with_capacity(p.variable_count);
    let mut cols = 0;
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new();
    for j in 0..p.variable_count {
        let sub = match (&p.lower_bounds[j], &p.upper_bounds[j]) {
            (Some(l), u) => {
                if let Some(u) = u {
                    bound_rows.push((cols, u - l));
                }
                Substitution::Shifted { col: cols, offset: l.clone() }
            }
            (None, Some(u)) => Substitution::Mirrored { col: cols, offset: u.clone() },
            (None, None) => {
                cols += 1;
                Substitution::Split { pos: cols - 1, neg: cols }
            }
        };
        cols += 1;
        subs.push(sub);
    }
    let structural = cols;

    // Rows over structural columns: (coeffs, relation, rhs).
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for c in &p.constraints {
        let mut coeffs = vec![Rational::zero(); structural];
        let mut rhs = c.rhs.clone();
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match &subs[j] {
                Substitution::Shifted { col, offset } => {
                    coeffs[*col] += a;
                    rhs -= a * offset;
                }
                Substitution::Mirrored { col, offset } => {
                    coeffs[*col] -= a;
                    rhs -= a * offset;
                }
                Substitution::Split { pos, neg } => {
                    coeffs[*pos] += a;
                    coeffs[*neg] -= a;
                }
            }
        }
        rows.push((coeffs, c.relation, rhs));
    }
    for (col, cap) in bound_rows {
        let mut coeffs = vec![Rational::zero(); structural];
        coeffs[col] = Rational::one();
        rows.push((coeffs, Relation::Le, cap));
    }
    let mut cost = vec![Rational::zero(); structural];
    for (j, c) in p.objective.iter().enumerate() {
        match &subs[j] {
            Substitution::Shifted { col, .. } => cost[*col] += c,
            Substitution::Mirrored { col, .. } => cost[*col] -= c,
            Substitution::Split { pos, neg } => {
                cost[*pos] += c;
                cost[*neg] -= c;
            }
        }
    }

    let Some(x) = two_phase(rows, &cost)? else {
        return Ok(not_optimal(LpStatus::Infeasible));
    };
    let Some(x) = x else {
        return Ok(not_optimal(LpStatus::Unbounded));
    };
    let values: Vec<Rational> = subs
        .iter()
        .map(|s| match s {
            Substitution::Shifted { col, offset } => offset + &x[*col],
            Substitution::Mirrored { col, offset } => offset - &x[*col],
            Substitution::Split { pos, neg } => &x[*pos] - &x[*neg],
        })
        .collect();
    debug_assert!(p.is_feasible(&values));
    Ok(LpSolution {
        status: LpStatus::Optimal,
        objective_value: p.objective_at(&values),
        values,
    })
}

fn not_optimal(status: LpStatus) -> LpSolution {
    LpSolution {
        status,
        values: Vec::new(),
        objective_value: Rational::zero(),
    }
}

struct Tableau {
    /// Row-major constraint matrix, one extra trailing column for the rhs.
    a: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.a.first().map_or(0, |r| r.len() - 1)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.a[r][c].clone();
        for x in self.a[r].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        let pivot_row = self.a[r].clone();
        for (i, row) in self.a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost · x` over columns `< usable`; `false` if unbounded.
    fn optimize(&mut self, cost: &[Rational], usable: usize) -> bool {
        let rhs = self.width();
        loop {
            // Bland: the lowest-index column with negative reduced cost enters.
            let entering = (0..usable).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.a[i][j].is_zero() {
                        reduced -= &cost[b] * &self.a[i][j];
                    }
                }
                reduced.is_negative()
            });
            let Some(c) = entering else {
                return true;
            };
            // Minimum ratio; ties go to the lowest-index basic variable.
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.a[i][rhs] / &self.a[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, c);
        }
    }
}

/// Outer `None`: infeasible. Inner `None`: unbounded. Otherwise the values of
/// the structural columns at an optimal basic solution.
fn two_phase(
    rows: Vec<(Vec<Rational>, Relation, Rational)>,
    cost: &[Rational],
) -> Result<Option<Option<Vec<Rational>>>> {
    let structural = cost.len();
    let slack_count = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let artificial_start = structural + slack_count;
    let artificial_count = rows
        .iter()
        .filter(|(_, rel, rhs)| needs_artificial(*rel, rhs))
        .count();
    let width = artificial_start + artificial_count;

    let mut a = Vec::with_capacity(rows.len());
    let mut basis = Vec::with_capacity(rows.len());
    let mut slack = structural;
    let mut artificial = artificial_start;
    for (coeffs, rel, rhs) in rows {
        let artificial_needed = needs_artificial(rel, &rhs);
        let flip = rhs.is_negative();
        let mut row = vec![Rational::zero(); width + 1];
        for (j, c) in coeffs.into_iter().enumerate() {
            row[j] = if flip { -c } else { c };
        }
        row[width] = if flip { -rhs } else { rhs };
        if rel != Relation::Eq {
            // Slack sign in the original orientation, then flipped with the row.
            let s = if rel == Relation::Le { Rational::one() } else { -Rational::one() };
            row[slack] = if flip { -s } else { s };
        }
        if artificial_needed {
            row[artificial] = Rational::one();
            basis.push(artificial);
            artificial += 1;
        } else {
            basis.push(slack);
        }
        if rel != Relation::Eq {
            slack += 1;
        }
        a.push(row);
    }
    let mut t = Tableau { a, basis };

    if artificial_count > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        for c in phase1.iter_mut().skip(artificial_start) {
            *c = Rational::one();
        }
        t.optimize(&phase1, width);
        let infeasibility = t
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= artificial_start)
            .fold(Rational::zero(), |acc, (i, _)| acc + &t.a[i][width]);
        if infeasibility.is_positive() {
            return Ok(None);
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < t.a.len() {
            if t.basis[i] >= artificial_start {
                match (0..artificial_start).find(|&j| !t.a[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.a.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut phase2 = cost.to_vec();
    phase2.resize(width, Rational::zero());
    if !t.optimize(&phase2, artificial_start) {
        return Ok(Some(None));
    }
    let mut x = vec![Rational::zero(); structural];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < structural {
            x[b] = t.a[i][width].clone();
        }
    }
    Ok(Some(Some(x)))
}

/// `≥`/`=` rows need an artificial start column, as do `≤` rows whose rhs is
/// negative (they become `≥` rows once flipped).
fn needs_artificial(rel: Relation, rhs: &Rational) -> bool {
    match rel {
        Relation::Le => rhs.is_negative(),
        Relation::Ge => !rhs.is_negative(),
        Relation::Eq => true,
    }
}

fn one() -> Rational {
    Rational::one()
}

/// Sparse-VC relaxation: variables `x_0..x_{n-1}` then `k` (index `n`);
/// minimize `k` subject to `x_u + x_v >= 1` per edge and
/// `sum_{v in B} x_v - k <= 0` per ball, all variables non-negative.
pub fn build_sparse_vc_relaxation(g: &WeightedGraph, balls: &[VertexSet]) -> Result<LinearProgram> {
    let n = g.vertex_count();
    let mut lp = LinearProgram::new(n + 1);
    lp.objective[n] = one();
    for (u, v) in g.edge_pairs() {
        lp.add_constraint(&[(u, one()), (v, one())], Relation::Ge, one());
    }
    for ball in balls {
        if let Some(&w) = ball.iter().find(|&&w| w >= n) {
            return Err(Error::input(format!("ball vertex {w} out of range")));
        }
        let mut terms: Vec<(usize, Rational)> = ball.iter().map(|&v| (v, one())).collect();
        terms.push((n, -one()));
        lp.add_constraint(&terms, Relation::Le, Rational::zero());
    }
    Ok(lp)
}

/// Fair-VC relaxation for a guessed optimum `k_star`: the Sparse-VC
/// relaxation over all closed neighborhoods, plus `x_v = 1` for every vertex
/// of degree greater than `k_star`.
pub fn build_fair_vc_relaxation(g: &WeightedGraph, k_star: usize) -> Result<LinearProgram> {
    let balls: Vec<VertexSet> = (0..g.vertex_count()).map(|v| g.closed_neighborhood(v)).collect();
    let mut lp = build_sparse_vc_relaxation(g, &balls)?;
    for v in 0..g.vertex_count() {
        if g.degree(v) > k_star {
            lp.add_constraint(&[(v, one())], Relation::Eq, one());
        }
    }
    Ok(lp)
}

/// MMSC relaxation: `y_S` per set (index order) then `z`; minimize `z`
/// subject to coverage `sum_{S ∋ u} y_S >= 1` and membership
/// `sum_{S ∋ u} y_S - z <= 0` per element, with `0 <= y_S <= 1`.
pub fn build_mmsc_relaxation(universe_size: usize, sets: &[Vec<usize>]) -> Result<LinearProgram> {
    let containing = crate::exact::mmsc_incidence(universe_size, sets)?;
    Ok(mmsc_program(sets.len(), &containing, &containing))
}

/// Program with one coverage row per entry of `cover_rows` and one
/// membership row per entry of `load_rows` (each a list of set indices).
pub(crate) fn mmsc_program(set_count: usize, cover_rows: &[Vec<usize>], load_rows: &[Vec<usize>]) -> LinearProgram {
    let z = set_count;
    let mut lp = LinearProgram::new(set_count + 1);
    lp.objective[z] = one();
    for j in 0..set_count {
        lp.upper_bounds[j] = Some(one());
    }
    for row in cover_rows {
        let terms: Vec<(usize, Rational)> = row.iter().map(|&s| (s, one())).collect();
        lp.add_constraint(&terms, Relation::Ge, one());
    }
    for row in load_rows {
        let mut terms: Vec<(usize, Rational)> = row.iter().map(|&s| (s, one())).collect();
        terms.push((z, -one()));
        lp.add_constraint(&terms, Relation::Le, Rational::zero());
    }
    lp
}
