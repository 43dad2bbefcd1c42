mod common;

use rand::Rng;

use sparsehs::cnf::{evaluate_assignment, Assignment, CnfFormula};
use sparsehs::exact::{solve_dense_matching_exact, solve_sparse_hs_exact, sparse_hs_feasible, DEFAULT_BUDGET};
use sparsehs::graph::{all_pairs_distances, enumerate_path_family, Distance, WeightedGraph, DEFAULT_PATH_CAP};
use sparsehs::instance::sparseness_of;
use sparsehs::matching::matching_density;
use sparsehs::rational;
use sparsehs::reductions::{
    clique_to_rhd, dense_matching_extract, dense_matching_witness, exactly3sat_to_sparse_vc, fair_vc_extract,
    fair_vc_witness, gadget_path_uz, gadget_path_zu, open_fair_vc_witness, p2p1n3sat_to_fair_vc,
    p2p1n3sat_to_open_fair_vc, rhd_witness_from_clique, sparse_vc_extract, sparse_vc_witness, synchronizer_path_a,
    synchronizer_path_b, threesat_to_dense_matching, walk_length, DirectedEdges, Label, Track,
};

fn sample_2p1n() -> CnfFormula {
    CnfFormula::new(4, vec![vec![1, 2, 3], vec![1, 3, 4], vec![-1, 2], vec![-2, -4], vec![-3, 4]]).unwrap()
}

fn random_cnf(rng: &mut impl Rng, vars: usize, max_clauses: usize, width: usize) -> CnfFormula {
    let count = rng.gen_range(1..=max_clauses);
    CnfFormula::new(vars, common::random_formula(rng, vars, count, width)).unwrap()
}

#[test]
fn sparse_vc_counts_and_iff() {
    let one = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
    let inst = exactly3sat_to_sparse_vc(&one, 2).unwrap();
    assert_eq!((inst.graph.vertex_count(), inst.graph.edge_count(), inst.balls.len()), (8, 4, 4));

    let mut rng = common::rng(71);
    for _ in 0..60 {
        let vars = rng.gen_range(3..=4);
        let f = random_cnf(&mut rng, vars, 8, 3);
        let k = 2;
        let sys = exactly3sat_to_sparse_vc(&f, k).unwrap().set_system().unwrap();
        let opt = solve_sparse_hs_exact(&sys, DEFAULT_BUDGET).unwrap();
        match common::sat(f.variable_count(), f.clauses()) {
            Some(a) => {
                assert!(opt.sparseness <= k);
                let a = Assignment::new(a);
                let h = sparse_vc_witness(&f, k, &a).unwrap();
                assert!(sparseness_of(&sys, &h).unwrap() <= k);
                assert!(evaluate_assignment(&f, &sparse_vc_extract(&f, k, &h).unwrap()).unwrap());
                let back = sparse_vc_extract(&f, k, &opt.members).unwrap();
                assert!(evaluate_assignment(&f, &back).unwrap());
            }
            None => assert!(opt.sparseness > k),
        }
    }
}

#[test]
fn sparse_vc_larger_k() {
    let f = sample_exact3();
    let a = Assignment::new(common::sat(4, f.clauses()).unwrap());
    for k in 2..=5 {
        let sys = exactly3sat_to_sparse_vc(&f, k).unwrap().set_system().unwrap();
        let h = sparse_vc_witness(&f, k, &a).unwrap();
        assert!(sparseness_of(&sys, &h).unwrap() <= k);
        assert_eq!(sparse_vc_extract(&f, k, &h).unwrap(), a);
    }
    assert!(exactly3sat_to_sparse_vc(&f, 1).is_err());
    assert!(sparse_vc_witness(&f, 2, &Assignment::new(vec![false; 4])).is_err());
}

fn sample_exact3() -> CnfFormula {
    CnfFormula::new(4, vec![vec![1, 2, 3], vec![1, 3, 4], vec![-1, 2, 4], vec![-2, -3, -4]]).unwrap()
}

#[test]
fn fair_vc_round_trips() {
    let f = sample_2p1n();
    let a = Assignment::new(vec![true, true, false, false]);
    for k in 3..=5 {
        let inst = p2p1n3sat_to_fair_vc(&f, k).unwrap();
        let sys = inst.set_system().unwrap();
        let h = fair_vc_witness(&f, k, &a).unwrap();
        assert!(sparseness_of(&sys, &h).unwrap() <= k);
        assert!(evaluate_assignment(&f, &fair_vc_extract(&inst, &f, &h).unwrap()).unwrap());
    }
    let small = CnfFormula::new(2, vec![vec![1, 2], vec![1, -2], vec![-1, 2]]).unwrap();
    let sys = p2p1n3sat_to_fair_vc(&small, 3).unwrap().set_system().unwrap();
    assert!(solve_sparse_hs_exact(&sys, DEFAULT_BUDGET).unwrap().sparseness <= 3);
}

#[test]
fn fair_vc_unsatisfiable_needs_more() {
    let f = CnfFormula::new(4, vec![vec![4, 1], vec![3, 2], vec![-1, -2], vec![3, 1], vec![4, 2], vec![-4, -3]])
        .unwrap();
    assert!(common::sat(4, f.clauses()).is_none());
    let sys = p2p1n3sat_to_fair_vc(&f, 3).unwrap().set_system().unwrap();
    let (found, _) = sparse_hs_feasible(&sys, 3, DEFAULT_BUDGET).unwrap();
    assert!(found.is_none());
}

#[test]
fn open_fair_vc_structure() {
    let f = sample_2p1n();
    let a = Assignment::new(vec![true, true, false, false]);
    for k in 4..=5 {
        let inst = p2p1n3sat_to_open_fair_vc(&f, k).unwrap();
        for var in 1..=4 {
            for child in 0..k {
                let v = inst.vertex(&Label::TreeY { var, child, leaf: 0 }).unwrap();
                assert_eq!(inst.graph.degree(v), k + 1);
            }
        }
        for (v, ball) in inst.balls.iter().enumerate() {
            assert!(!ball.contains(&v));
        }
        let h = open_fair_vc_witness(&f, k, &a).unwrap();
        assert!(sparseness_of(&inst.set_system().unwrap(), &h).unwrap() <= k);
        assert_eq!(fair_vc_extract(&inst, &f, &h).unwrap(), a);
    }
}

#[test]
fn dense_matching_round_trips() {
    let mut rng = common::rng(72);
    let mut checked = 0;
    for _ in 0..80 {
        let width = rng.gen_range(2..=3);
        let vars = rng.gen_range(3..=6);
        let f = random_cnf(&mut rng, vars, 6, width);
        let Some(a) = common::sat(f.variable_count(), f.clauses()) else { continue };
        let a = Assignment::new(a);
        let inst = threesat_to_dense_matching(&f).unwrap();
        let m = dense_matching_witness(&f, &a).unwrap();
        assert!(matching_density(&inst.graph, &inst.balls, &m).unwrap() >= 2);
        assert!(evaluate_assignment(&f, &dense_matching_extract(&f, &m).unwrap()).unwrap());
        checked += 1;
    }
    assert!(checked > 40);
}

#[test]
fn dense_matching_unsatisfiable() {
    let f = CnfFormula::new(2, vec![vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]]).unwrap();
    let inst = threesat_to_dense_matching(&f).unwrap();
    let best = solve_dense_matching_exact(&inst.graph, &inst.balls, DEFAULT_BUDGET).unwrap();
    assert!(best.density <= 1);
}

#[test]
fn generators_are_deterministic() {
    let f = sample_2p1n();
    let text = |g: &sparsehs::reductions::GeneratedInstance| serde_json::to_string(g).unwrap();
    assert_eq!(text(&p2p1n3sat_to_fair_vc(&f, 4).unwrap()), text(&p2p1n3sat_to_fair_vc(&f, 4).unwrap()));
    let g = sample_exact3();
    assert_eq!(text(&exactly3sat_to_sparse_vc(&g, 3).unwrap()), text(&exactly3sat_to_sparse_vc(&g, 3).unwrap()));
    assert_eq!(text(&threesat_to_dense_matching(&f).unwrap()), text(&threesat_to_dense_matching(&f).unwrap()));
    let h = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(text(&clique_to_rhd(&h, 2, 2).unwrap()), text(&clique_to_rhd(&h, 2, 2).unwrap()));
}

#[test]
fn clique_parameters() {
    let edge = WeightedGraph::unit(2, &[(0, 1)]).unwrap();
    let inst = clique_to_rhd(&edge, 2, 4).unwrap();
    assert_eq!(inst.params.k_prime, Some(38));
    assert_eq!(inst.params.r, Some(rational::int(4)));
    assert_eq!(rhd_witness_from_clique(&edge, &[0, 1], 2, 4).unwrap().len(), 38);
    let psi = inst.vertex(&Label::Psi { group: sparsehs::reductions::PsiGroup::Main, primes: 0 }).unwrap();
    let all = all_pairs_distances(&inst.graph).ball(psi, &rational::int(8));
    assert_eq!(all.len(), inst.graph.vertex_count());

    assert!(clique_to_rhd(&edge, 1, 1).is_err());
    assert!(clique_to_rhd(&WeightedGraph::unit(2, &[]).unwrap(), 2, 1).is_err());
    let path = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
    assert!(rhd_witness_from_clique(&path, &[0, 2], 2, 1).is_err());
}

#[test]
fn gadget_paths_cover_at_most_two() {
    let h = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
    let inst = clique_to_rhd(&h, 2, 1).unwrap();
    let m = inst.params.m.unwrap();
    let r = inst.params.r.clone().unwrap();
    let d = all_pairs_distances(&inst.graph);
    for (i, j) in [(1, 2), (2, 1)] {
        let paths = [
            gadget_path_uz(&inst, i, j, 1, Track::A, 1),
            gadget_path_uz(&inst, i, j, 1, Track::A, m + 1),
            gadget_path_zu(&inst, i, j, 1, Track::A, 1),
            gadget_path_uz(&inst, i, j, 1, Track::V, m + 1),
            gadget_path_zu(&inst, i, j, 1, Track::V, 1),
            gadget_path_zu(&inst, i, j, 1, Track::B, 1),
            gadget_path_uz(&inst, i, j, 1, Track::B, m + 1),
            gadget_path_zu(&inst, i, j, 1, Track::B, m + 1),
        ]
        .map(Result::unwrap);
        for p in &paths {
            let len = walk_length(&inst.graph, p).unwrap();
            assert_eq!(len, &r + rational::int(1));
            assert_eq!(d.get(p[0], *p.last().unwrap()), &Distance::Finite(len));
        }
        for v in 0..inst.graph.vertex_count() {
            assert!(paths.iter().filter(|p| p.contains(&v)).count() <= 2);
        }
    }
}

#[test]
fn synchronizers_detect_mismatch() {
    let h = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
    let inst = clique_to_rhd(&h, 2, 1).unwrap();
    let dir = DirectedEdges::new(&h).unwrap();
    let r = inst.params.r.clone().unwrap();
    for (i, j) in [(1, 2), (2, 1)] {
        for &(x, y) in dir.edges() {
            let t = dir.tau(x, y).unwrap();
            let hubs: Vec<usize> = [Track::U, Track::A, Track::V, Track::B]
                .iter()
                .map(|&track| inst.vertex(&Label::Path { track, i, j, copy: 1, index: t }).unwrap())
                .collect();
            for &(x2, y2) in dir.edges() {
                let a = synchronizer_path_a(&inst, &dir, i, j, 1, (x2, y2)).unwrap();
                assert_eq!(walk_length(&inst.graph, &a), Some(&r + rational::int(1)));
                assert_eq!(a.iter().any(|v| hubs.contains(v)), (x, y) != (x2, y2));
            }
            for x2 in 0..3 {
                let b = synchronizer_path_b(&inst, &dir, i, j, 1, x2).unwrap();
                assert_eq!(walk_length(&inst.graph, &b), Some(&r + rational::int(1)));
                assert_eq!(b.iter().any(|v| hubs.contains(v)), x != x2);
            }
        }
    }
}

#[test]
fn triangle_witness_hits_every_path() {
    let triangle = WeightedGraph::unit(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let inst = clique_to_rhd(&triangle, 2, 1).unwrap();
    let r = inst.params.r.clone().unwrap();
    assert_eq!(r, rational::int(64));
    let h = rhd_witness_from_clique(&triangle, &[0, 1], 2, 1).unwrap();
    let fam = enumerate_path_family(&inst.graph, &r, DEFAULT_PATH_CAP).unwrap();
    assert!(!fam.truncated);
    assert!(fam.paths.iter().all(|p| p.vertex_set.iter().any(|v| h.contains(v))));
}
