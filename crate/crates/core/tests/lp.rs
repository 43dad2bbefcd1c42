mod common;

use proptest::prelude::*;
use rand::Rng;

use sparsehs::exact::{solve_mmsc_exact, solve_sparse_hs_exact, DEFAULT_BUDGET};
use sparsehs::graph::WeightedGraph;
use sparsehs::instance::SetSystemInstance;
use sparsehs::lp::{
    build_fair_vc_relaxation, build_mmsc_relaxation, build_sparse_vc_relaxation, solve_lp, LinearProgram, LpStatus,
    Relation,
};
use sparsehs::rational::{self, Rational};

fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
    WeightedGraph::unit(n, edges).unwrap()
}

fn cycle(n: usize) -> WeightedGraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    unit(n, &edges)
}

fn optimum(lp: &LinearProgram) -> Rational {
    let sol = solve_lp(lp).unwrap();
    assert_eq!(sol.status, LpStatus::Optimal);
    assert!(lp.is_feasible(&sol.values));
    assert_eq!(lp.objective_at(&sol.values), sol.objective_value);
    sol.objective_value
}

#[test]
fn solver_examples() {
    let mut lp = LinearProgram::new(1);
    lp.objective[0] = rational::int(1);
    lp.add_constraint(&[(0, rational::int(1))], Relation::Ge, rational::int(3));
    assert_eq!(optimum(&lp), rational::int(3));

    let edge = unit(2, &[(0, 1)]);
    assert_eq!(optimum(&build_sparse_vc_relaxation(&edge, &[vec![0, 1]]).unwrap()), rational::int(1));
    let c5 = build_sparse_vc_relaxation(&cycle(5), &[(0..5).collect()]).unwrap();
    assert_eq!(optimum(&c5), rational::ratio(5, 2));
}

#[test]
fn infeasible_and_unbounded() {
    let mut lp = LinearProgram::new(1);
    lp.add_constraint(&[(0, rational::int(1))], Relation::Le, rational::int(-1));
    assert_eq!(solve_lp(&lp).unwrap().status, LpStatus::Infeasible);

    let mut lp = LinearProgram::new(2);
    lp.objective[0] = rational::int(-1);
    lp.add_constraint(&[(0, rational::int(1)), (1, rational::int(-1))], Relation::Le, rational::int(1));
    assert_eq!(solve_lp(&lp).unwrap().status, LpStatus::Unbounded);

    let mut lp = LinearProgram::new(1);
    lp.upper_bounds[0] = Some(rational::int(2));
    lp.add_constraint(&[(0, rational::int(1))], Relation::Eq, rational::int(3));
    assert_eq!(solve_lp(&lp).unwrap().status, LpStatus::Infeasible);
}

#[test]
fn free_variables() {
    let mut lp = LinearProgram::new(1);
    lp.lower_bounds[0] = None;
    lp.objective[0] = rational::int(1);
    lp.add_constraint(&[(0, rational::int(1))], Relation::Ge, rational::ratio(-7, 3));
    assert_eq!(optimum(&lp), rational::ratio(-7, 3));
}

#[test]
fn structural_counts() {
    let edge = build_sparse_vc_relaxation(&unit(2, &[(0, 1)]), &[vec![0, 1]]).unwrap();
    assert_eq!((edge.variable_count, edge.constraints.len()), (3, 2));
    let triangle = unit(3, &[(0, 1), (1, 2), (0, 2)]);
    let tri = build_sparse_vc_relaxation(&triangle, &[vec![0, 1, 2]]).unwrap();
    assert_eq!((tri.variable_count, tri.constraints.len()), (4, 4));

    // Fair-VC: one ball per vertex, plus one equality per vertex of degree > k*.
    let fair = build_fair_vc_relaxation(&unit(2, &[(0, 1)]), 1).unwrap();
    assert_eq!((fair.variable_count, fair.constraints.len()), (3, 3));
    assert_eq!(build_fair_vc_relaxation(&triangle, 1).unwrap().constraints.len(), 3 + 3 + 3);
    let star = unit(4, &[(0, 1), (0, 2), (0, 3)]);
    let fair = build_fair_vc_relaxation(&star, 2).unwrap();
    assert_eq!((fair.variable_count, fair.constraints.len()), (5, 3 + 4 + 1));
    assert!(fair.constraints.iter().any(|c| c.relation == Relation::Eq));

    let mmsc = build_mmsc_relaxation(3, &[vec![0, 1], vec![2], vec![1, 2]]).unwrap();
    assert_eq!((mmsc.variable_count, mmsc.constraints.len()), (4, 6));
    assert!(mmsc.upper_bounds[..3].iter().all(|b| b == &Some(rational::int(1))));
    assert!(build_mmsc_relaxation(2, &[vec![0]]).is_err());
}

#[test]
fn relaxation_bounds_exact_optimum() {
    let mut rng = common::rng(51);
    for _ in 0..60 {
        let n = rng.gen_range(2..=9);
        let edges = common::random_edges(&mut rng, n, 0.4);
        let balls: Vec<Vec<usize>> = (0..rng.gen_range(1..=4)).map(|_| common::random_subset(&mut rng, n, n)).collect();
        let lp = build_sparse_vc_relaxation(&unit(n, &edges), &balls).unwrap();
        let f: Vec<Vec<usize>> = edges.iter().map(|&(u, v)| vec![u, v]).collect();
        let opt = solve_sparse_hs_exact(&SetSystemInstance::new(n, f, balls).unwrap(), DEFAULT_BUDGET).unwrap();
        assert!(optimum(&lp) <= rational::int(opt.sparseness as i64));
    }
    for _ in 0..60 {
        let universe = rng.gen_range(1..=8);
        let mut sets: Vec<Vec<usize>> = (0..rng.gen_range(1..=6)).map(|_| common::random_subset(&mut rng, universe, 3)).collect();
        sets.push((0..universe).collect());
        let lp = build_mmsc_relaxation(universe, &sets).unwrap();
        let opt = solve_mmsc_exact(universe, &sets, DEFAULT_BUDGET).unwrap();
        assert!(optimum(&lp) <= rational::int(opt.membership as i64));
    }
}

/// Brute-force optimum of `min c·x` over `x >= 0` and `a x <= b` rows in two
/// variables: best feasible intersection of two tight lines.
fn vertex_enumeration(c: [i64; 2], rows: &[([i64; 2], i64)]) -> Option<Rational> {
    let mut lines: Vec<([i64; 2], i64)> = rows.to_vec();
    lines.push(([1, 0], 0));
    lines.push(([0, 1], 0));
    let feasible = |x: &[Rational; 2]| {
        x.iter().all(|v| v >= &rational::int(0))
            && rows.iter().all(|(a, b)| {
                rational::int(a[0]) * &x[0] + rational::int(a[1]) * &x[1] <= rational::int(*b)
            })
    };
    let mut best: Option<Rational> = None;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let ([a, b], e) = lines[i];
            let ([c2, d], f) = lines[j];
            let det = a * d - b * c2;
            if det == 0 {
                continue;
            }
            let x = [rational::ratio(e * d - b * f, det), rational::ratio(a * f - e * c2, det)];
            if feasible(&x) {
                let v = rational::int(c[0]) * &x[0] + rational::int(c[1]) * &x[1];
                if best.as_ref().is_none_or(|b| &v < b) {
                    best = Some(v);
                }
            }
        }
    }
    best
}

proptest! {
    #[test]
    fn two_variable_programs(
        c in [0i64..5, 0i64..5],
        rows in prop::collection::vec(([-4i64..5, -4i64..5], -6i64..10), 1..6),
    ) {
        // Non-negative costs keep the program bounded below.
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![rational::int(c[0]), rational::int(c[1])];
        for (a, b) in &rows {
            lp.add_constraint(&[(0, rational::int(a[0])), (1, rational::int(a[1]))], Relation::Le, rational::int(*b));
        }
        let sol = solve_lp(&lp).unwrap();
        match vertex_enumeration(c, &rows) {
            Some(v) => {
                prop_assert_eq!(sol.status, LpStatus::Optimal);
                prop_assert!(lp.is_feasible(&sol.values));
                prop_assert_eq!(sol.objective_value, v);
            }
            None => prop_assert_eq!(sol.status, LpStatus::Infeasible),
        }
    }

    #[test]
    fn deterministic(n in 2usize..8, seed in 0u64..1000) {
        let mut rng = common::rng(seed);
        let edges = common::random_edges(&mut rng, n, 0.5);
        let lp = build_sparse_vc_relaxation(&unit(n, &edges), &[(0..n).collect()]).unwrap();
        prop_assert_eq!(solve_lp(&lp).unwrap(), solve_lp(&lp).unwrap());
    }
}
