#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use listpack::graph::{Edge, Graph};
use listpack::{Color, ListAssignment};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `size` distinct colors drawn uniformly from `1..=ground`.
pub fn random_list(rng: &mut impl Rng, size: usize, ground: Color) -> BTreeSet<Color> {
    let pool: Vec<Color> = (1..=ground).collect();
    pool.choose_multiple(rng, size).copied().collect()
}

pub fn random_assignment(rng: &mut impl Rng, n: usize, size: usize, ground: Color) -> ListAssignment {
    ListAssignment::new((0..n).map(|_| random_list(rng, size, ground)).collect()).unwrap()
}

fn edge_set_under(edges: &[Edge], perm: &[usize]) -> Vec<Edge> {
    let mut out: Vec<Edge> = edges.iter().map(|e| Edge::new(perm[e.u - 1], perm[e.v - 1])).collect();
    out.sort();
    out
}

/// One graph per isomorphism class on exactly `n` vertices, found by trying
/// every edge subset and every vertex permutation.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let slots: Vec<Edge> = (1..=n).tuple_combinations().map(|(u, v)| Edge::new(u, v)).collect();
    let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
    let mut seen: BTreeSet<Vec<Edge>> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        let edges: Vec<Edge> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let canon = perms.iter().map(|p| edge_set_under(&edges, p)).min().unwrap();
        if seen.insert(canon) {
            out.push(Graph::from_edges(n, edges.iter().map(|e| (e.u, e.v))).unwrap());
        }
    }
    out
}

/// All isomorphism classes on 1 to `max_n` vertices.
pub fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_up_to_iso).collect()
}

/// Whether `h` is a subgraph of `g` (same vertex count, some relabeling).
pub fn is_subgraph(h: &Graph, g: &Graph) -> bool {
    if h.n() != g.n() {
        return false;
    }
    let edges = h.edges();
    (1..=g.n())
        .permutations(g.n())
        .any(|p| edges.iter().all(|e| g.is_adjacent(p[e.u - 1], p[e.v - 1])))
}

pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| e.to_string()).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}
