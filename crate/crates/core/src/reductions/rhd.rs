//! Clique to r-HD: gadgets `G_{i,j}` with four unit paths each, copied `c`
//! times, synchronized through `α` and `β` vertices and three global dummy
//! hubs.

use std::collections::HashMap;

use num_traits::One;

use super::{ids, Builder, GeneratedInstance, Label, PsiGroup, ReductionParams, Track};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::instance::{VertexId, VertexSet};
use crate::rational::{self, Rational};

/// The source graph's edges in both directions, ordered lexicographically by
/// (source, target). `τ` is the 1-based position in that order.
#[derive(Debug, Clone)]
pub struct DirectedEdges {
    edges: Vec<(usize, usize)>,
    tau: HashMap<(usize, usize), usize>,
    neighbors: Vec<Vec<usize>>,
}

impl DirectedEdges {
    pub fn new(h: &WeightedGraph) -> Result<Self> {
        if h.edge_count() == 0 {
            return Err(Error::input("source graph has no edges"));
        }
        let mut edges: Vec<(usize, usize)> =
            h.edge_pairs().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
        edges.sort_unstable();
        let tau = edges.iter().enumerate().map(|(p, &e)| (e, p + 1)).collect();
        let mut neighbors = vec![Vec::new(); h.vertex_count()];
        for &(u, v) in &edges {
            neighbors[u].push(v);
        }
        Ok(DirectedEdges { edges, tau, neighbors })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn tau(&self, x: usize, y: usize) -> Option<usize> {
        self.tau.get(&(x, y)).copied()
    }

    /// Neighbors of `x` in increasing order.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    /// `τ(x, y_0)` and `τ(x, y_d)` for the smallest and largest neighbor.
    fn block(&self, x: usize) -> Option<(usize, usize)> {
        let n = self.neighbors.get(x)?;
        Some((self.tau(x, *n.first()?)?, self.tau(x, *n.last()?)?))
    }
}

#[derive(Clone, Copy)]
struct Gadget {
    i: usize,
    j: usize,
    copy: usize,
    m: usize,
}

impl Gadget {
    /// Vertex `t^index`, where index 0 and `m + 1` stand for the connectors
    /// `v^{0,a}`, `b^{0,v}`, `a^{m+1,v}` and `v^{m+1,b}`.
    fn at(&self, track: Track, index: usize) -> Label {
        let Gadget { i, j, copy, m } = *self;
        if (1..=m).contains(&index) {
            return Label::Path { track, i, j, copy, index };
        }
        let toward = match (track, index == 0) {
            (Track::V, true) => Track::A,
            (Track::B, true) => Track::V,
            (Track::A, false) => Track::V,
            (Track::V, false) => Track::B,
            _ => panic!("{track}^{index} is not a vertex of the gadget"),
        };
        self.conn(track, index, toward)
    }

    fn conn(&self, track: Track, end: usize, toward: Track) -> Label {
        let Gadget { i, j, copy, .. } = *self;
        Label::Connector { track, end, toward, i, j, copy }
    }
}

const TRACKS: [Track; 4] = [Track::U, Track::A, Track::V, Track::B];
const TARGETS: [Track; 3] = [Track::A, Track::V, Track::B];

fn psi(group: PsiGroup, primes: u8) -> Label {
    Label::Psi { group, primes }
}

fn ordered_pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=k).flat_map(move |i| (1..=k).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn gadgets(k: usize, c: usize, m: usize) -> impl Iterator<Item = Gadget> {
    ordered_pairs(k).flat_map(move |(i, j)| (1..=c).map(move |copy| Gadget { i, j, copy, m }))
}

fn binomial2(k: usize) -> usize {
    k * (k - 1) / 2
}

/// Builds the r-HD instance for the source graph `h`, clique size `k >= 2`
/// and `c >= 1` gadget copies, with `r = 2^m` for `m` directed source edges.
/// Balls are all radius-`2r` balls.
pub fn clique_to_rhd(h: &WeightedGraph, k: usize, c: usize) -> Result<GeneratedInstance> {
    if k < 2 {
        return Err(Error::input("clique size must be at least 2"));
    }
    if c == 0 {
        return Err(Error::input("need at least one gadget copy"));
    }
    let dir = DirectedEdges::new(h)?;
    let m = dir.m();
    let exp = u32::try_from(m).map_err(|_| Error::input("source graph too large"))?;
    let r = rational::pow2(exp);
    let len = |x: i64| r.clone() + rational::int(x);
    let mi = m as i64;
    let one = Rational::one();

    let mut b = Builder::default();
    for g in gadgets(k, c, m) {
        for track in TRACKS {
            for index in 1..=m {
                b.vertex(g.at(track, index));
            }
        }
        for z in TARGETS {
            b.vertex(g.conn(Track::U, 0, z));
            b.vertex(g.conn(Track::U, m + 1, z));
            b.vertex(g.conn(z, 0, Track::U));
            b.vertex(g.conn(z, m + 1, Track::U));
        }
        for (track, end) in [(Track::A, m + 1), (Track::V, 0), (Track::V, m + 1), (Track::B, 0)] {
            b.vertex(g.at(track, end));
        }

        for track in TRACKS {
            for index in 1..m {
                b.unit(&g.at(track, index), &g.at(track, index + 1));
            }
        }
        for z in TARGETS {
            b.unit(&g.at(Track::U, 1), &g.conn(Track::U, 0, z));
            b.unit(&g.at(Track::U, m), &g.conn(Track::U, m + 1, z));
            b.unit(&g.at(z, 1), &g.conn(z, 0, Track::U));
            b.unit(&g.at(z, m), &g.conn(z, m + 1, Track::U));
            b.edge(&g.conn(Track::U, m + 1, z), &g.conn(z, 0, Track::U), len(1 - mi));
            b.edge(&g.conn(z, m + 1, Track::U), &g.conn(Track::U, 0, z), len(1 - mi));
        }
        b.unit(&g.at(Track::A, m), &g.at(Track::A, m + 1));
        b.unit(&g.at(Track::V, 1), &g.at(Track::V, 0));
        b.unit(&g.at(Track::V, m), &g.at(Track::V, m + 1));
        b.unit(&g.at(Track::B, 1), &g.at(Track::B, 0));
        b.edge(&g.at(Track::A, m + 1), &g.at(Track::V, 0), len(2 - 2 * mi));
        b.edge(&g.at(Track::V, m + 1), &g.at(Track::B, 0), len(2 - 2 * mi));
    }

    let groups = [PsiGroup::Main, PsiGroup::Alpha, PsiGroup::Beta];
    for group in groups {
        for primes in 0..3 {
            b.vertex(psi(group, primes));
        }
        b.edge(&psi(group, 0), &psi(group, 1), r.clone());
        b.edge(&psi(group, 0), &psi(group, 2), r.clone());
    }
    for i in 1..=k {
        for j in i + 1..=k {
            for &(x, y) in dir.edges() {
                b.vertex(Label::Alpha { i, j, x, y });
            }
        }
    }
    for i in 1..=k {
        for x in 0..h.vertex_count() {
            b.vertex(Label::Beta { i, x });
        }
    }

    let half_r = &r / rational::int(2);
    let main = psi(PsiGroup::Main, 0);
    for g in gadgets(k, c, m) {
        for (track, toward) in [(Track::A, Track::U), (Track::B, Track::U), (Track::U, Track::A), (Track::U, Track::B)] {
            for end in [0, m + 1] {
                b.edge(&main, &g.conn(track, end, toward), half_r.clone());
            }
        }
    }
    for i in 1..=k {
        for j in i + 1..=k {
            for &(x, y) in dir.edges() {
                b.edge(&main, &Label::Alpha { i, j, x, y }, half_r.clone());
            }
        }
        for x in 0..h.vertex_count() {
            b.edge(&main, &Label::Beta { i, x }, half_r.clone());
        }
    }

    let m_len = rational::int(mi);
    for i in 1..=k {
        for j in i + 1..=k {
            for &(x, y) in dir.edges() {
                let alpha = Label::Alpha { i, j, x, y };
                let t_xy = dir.tau(x, y).expect("edge is indexed");
                let t_yx = dir.tau(y, x).expect("reverse edge is indexed");
                for copy in 1..=c {
                    let gij = Gadget { i, j, copy, m };
                    let gji = Gadget { i: j, j: i, copy, m };
                    b.edge(&alpha, &gij.at(Track::A, t_xy + 1), m_len.clone());
                    b.edge(&alpha, &gji.at(Track::A, t_yx + 1), m_len.clone());
                }
            }
        }
    }
    let psi_alpha = psi(PsiGroup::Alpha, 0);
    for g in gadgets(k, c, m) {
        for t in 1..=m {
            b.edge(&psi_alpha, &g.at(Track::A, t + 1), &m_len - &one);
        }
    }
    let psi_beta = psi(PsiGroup::Beta, 0);
    for x in 0..h.vertex_count() {
        let Some((first, last)) = dir.block(x) else { continue };
        let d = dir.neighbors(x).len() as i64 - 1;
        for g in gadgets(k, c, m) {
            let beta = Label::Beta { i: g.i, x };
            b.edge(&beta, &g.at(Track::B, first - 1), rational::int(mi + d));
            b.edge(&psi_beta, &g.at(Track::B, last - 1), rational::int(mi + d - 1));
        }
    }

    let graph = b.graph()?;
    let balls = crate::graph::all_pairs_distances(&graph).balls(&(&r * rational::int(2)));
    let k_prime = 4 * c * k * (k - 1) + binomial2(k) + k + 3;
    b.finish(
        balls,
        ReductionParams { k, c: Some(c), r: Some(r), k_prime: Some(k_prime), m: Some(m) },
    )
}

fn require_clique(h: &WeightedGraph, clique: &[usize], k: usize) -> Result<()> {
    if clique.len() != k {
        return Err(Error::input(format!("clique has {} vertices, expected {k}", clique.len())));
    }
    for (p, &u) in clique.iter().enumerate() {
        if u >= h.vertex_count() {
            return Err(Error::input(format!("vertex {u} out of range")));
        }
        for &v in &clique[..p] {
            if !h.has_edge(u, v) {
                return Err(Error::input(format!("{u} and {v} are not adjacent")));
            }
        }
    }
    Ok(())
}

/// Hubs for a clique `w_1, ..., w_k` (in the given order): in every copy of
/// `G_{i,j}` the four path vertices at `τ(w_i, w_j)`, then `α_{i,j}^{(w_i,w_j)}`
/// for `i < j`, `β_i^{w_i}`, and `ψ, ψ_α, ψ_β`.
pub fn rhd_witness_from_clique(
    h: &WeightedGraph,
    clique: &[usize],
    k: usize,
    c: usize,
) -> Result<VertexSet> {
    let inst = clique_to_rhd(h, k, c)?;
    require_clique(h, clique, k)?;
    let dir = DirectedEdges::new(h)?;
    let m = dir.m();
    let w = |i: usize| clique[i - 1];
    let mut labels = Vec::new();
    for g in gadgets(k, c, m) {
        let t = dir.tau(w(g.i), w(g.j)).expect("clique vertices are adjacent");
        labels.extend(TRACKS.iter().map(|&track| g.at(track, t)));
    }
    for i in 1..=k {
        for j in i + 1..=k {
            labels.push(Label::Alpha { i, j, x: w(i), y: w(j) });
        }
        labels.push(Label::Beta { i, x: w(i) });
    }
    labels.extend([PsiGroup::Main, PsiGroup::Alpha, PsiGroup::Beta].map(|g| psi(g, 0)));
    Ok(ids(&inst, labels))
}

fn copy_of(inst: &GeneratedInstance, i: usize, j: usize, copy: usize) -> Result<Gadget> {
    let m = inst.params.m.ok_or_else(|| Error::input("not a clique-reduction instance"))?;
    let c = inst.params.c.unwrap_or(0);
    let k = inst.params.k;
    if i == j || !(1..=k).contains(&i) || !(1..=k).contains(&j) || !(1..=c).contains(&copy) {
        return Err(Error::input(format!("no gadget ({i},{j}) copy {copy}")));
    }
    Ok(Gadget { i, j, copy, m })
}

fn walk(inst: &GeneratedInstance, labels: Vec<Label>) -> Vec<VertexId> {
    labels.iter().map(|l| inst.id(l)).collect()
}

/// `P^{uz}(ι)` for `1 <= ι <= m + 1`: `u^ι, ..., u^m, u^{m+1,z}, z^{0,u},
/// z^1, ..., z^{ι-1}`, as a vertex sequence.
pub fn gadget_path_uz(
    inst: &GeneratedInstance,
    i: usize,
    j: usize,
    copy: usize,
    z: Track,
    iota: usize,
) -> Result<Vec<VertexId>> {
    let g = copy_of(inst, i, j, copy)?;
    cross_path(inst, g, Track::U, z, iota)
}

/// `P^{zu}(ι)`: `z^ι, ..., z^m, z^{m+1,u}, u^{0,z}, u^1, ..., u^{ι-1}`.
pub fn gadget_path_zu(
    inst: &GeneratedInstance,
    i: usize,
    j: usize,
    copy: usize,
    z: Track,
    iota: usize,
) -> Result<Vec<VertexId>> {
    let g = copy_of(inst, i, j, copy)?;
    cross_path(inst, g, z, Track::U, iota)
}

fn cross_path(inst: &GeneratedInstance, g: Gadget, from: Track, to: Track, iota: usize) -> Result<Vec<VertexId>> {
    if from == to || !(1..=g.m + 1).contains(&iota) || (from != Track::U && to != Track::U) {
        return Err(Error::input(format!("no path {from}{to}({iota})")));
    }
    let mut labels: Vec<Label> = (iota..=g.m).map(|t| g.at(from, t)).collect();
    labels.push(g.conn(from, g.m + 1, to));
    labels.push(g.conn(to, 0, from));
    labels.extend((1..iota).map(|t| g.at(to, t)));
    Ok(walk(inst, labels))
}

/// `A_{i,j}^{(x,y)}` in copy `copy` of `G_{i,j}`: from the `α` vertex of the
/// pair through `a^{τ+1}, ..., a^m, a^{m+1,v}, v^{0,a}` to `v^{τ-1}`, with
/// `τ = τ(x, y)`. For `i > j` the `α` vertex is `α_{j,i}^{(y,x)}`.
pub fn synchronizer_path_a(
    inst: &GeneratedInstance,
    dir: &DirectedEdges,
    i: usize,
    j: usize,
    copy: usize,
    (x, y): (usize, usize),
) -> Result<Vec<VertexId>> {
    let g = copy_of(inst, i, j, copy)?;
    let t = dir.tau(x, y).ok_or_else(|| Error::input(format!("({x},{y}) is not an edge")))?;
    let alpha = if i < j {
        Label::Alpha { i, j, x, y }
    } else {
        Label::Alpha { i: j, j: i, x: y, y: x }
    };
    let mut labels = vec![alpha];
    labels.extend((t + 1..=g.m + 1).map(|s| g.at(Track::A, s)));
    labels.extend((0..t).map(|s| g.at(Track::V, s)));
    Ok(walk(inst, labels))
}

/// `B_{i,j}^x` in copy `copy`: from `β_i^x` through `b^{τ_0-1}, ..., b^1,
/// b^{0,v}, v^{m+1,b}, v^m, ...` to `v^{τ_d+1}`, where `τ_0` and `τ_d` index
/// the edges to the smallest and largest neighbor of `x`.
pub fn synchronizer_path_b(
    inst: &GeneratedInstance,
    dir: &DirectedEdges,
    i: usize,
    j: usize,
    copy: usize,
    x: usize,
) -> Result<Vec<VertexId>> {
    let g = copy_of(inst, i, j, copy)?;
    let (first, last) = dir.block(x).ok_or_else(|| Error::input(format!("vertex {x} is isolated")))?;
    let mut labels = vec![Label::Beta { i, x }];
    labels.extend((0..first).rev().map(|s| g.at(Track::B, s)));
    labels.extend((last + 1..=g.m + 1).rev().map(|s| g.at(Track::V, s)));
    Ok(walk(inst, labels))
}

/// Total length of a walk given as consecutive vertices, or `None` if two
/// consecutive vertices are not adjacent.
pub fn walk_length(g: &WeightedGraph, walk: &[VertexId]) -> Option<Rational> {
    let mut total = rational::int(0);
    for pair in walk.windows(2) {
        total += g.edge_length(pair[0], pair[1])?;
    }
    Some(total)
}
