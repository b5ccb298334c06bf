#![allow(dead_code)]

use std::collections::BTreeSet;

use blossom::contraction::Blossom;
use blossom::{Edge, Graph, Matching, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All edges of the complete graph on `0..n`, in ascending order.
pub fn complete_edges(n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push(Edge::new(u, v).unwrap());
        }
    }
    out
}

/// The graph picking the edges of `all` selected by the bits of `mask`.
pub fn graph_from_mask(all: &[Edge], mask: u64) -> Graph {
    all.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| *e)
        .collect()
}

/// Every graph on vertex ids `0..n` (isolated vertices simply drop out).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let all = complete_edges(n);
    (0u64..1 << all.len()).map(move |mask| graph_from_mask(&all, mask))
}

pub fn erdos_renyi(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    complete_edges(n).into_iter().filter(|_| rng.gen_bool(p)).collect()
}

/// Every matching contained in `g`, the empty one included.
pub fn all_matchings(g: &Graph) -> Vec<Matching> {
    fn go(edges: &[Edge], i: usize, used: &mut BTreeSet<Vertex>, cur: &mut Vec<Edge>, out: &mut Vec<Matching>) {
        if i == edges.len() {
            out.push(Matching::new(cur.iter().copied()).unwrap());
            return;
        }
        go(edges, i + 1, used, cur, out);
        let e = edges[i];
        if !used.contains(&e.lo()) && !used.contains(&e.hi()) {
            used.extend(e.endpoints());
            cur.push(e);
            go(edges, i + 1, used, cur, out);
            cur.pop();
            used.remove(&e.lo());
            used.remove(&e.hi());
        }
    }
    let edges: Vec<Edge> = g.edges().copied().collect();
    let mut out = Vec::new();
    go(&edges, 0, &mut BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Greedy matching over the edges in random order, each edge taken with
/// probability `keep` when it fits.
pub fn random_matching(rng: &mut impl Rng, g: &Graph, keep: f64) -> Matching {
    let mut edges: Vec<Edge> = g.edges().copied().collect();
    edges.shuffle(rng);
    let mut m = Matching::default();
    for e in edges {
        if !m.is_matched(e.lo()) && !m.is_matched(e.hi()) && rng.gen_bool(keep) {
            m.insert(e).unwrap();
        }
    }
    m
}

/// A graph on at most `n` vertices with a matching and a blossom of it.
///
/// The stem and cycle are laid out on shuffled vertex ids, extra matching
/// edges are placed on the remaining vertices, and random extra edges are
/// sprinkled over the whole vertex set.
pub fn planted_blossom(rng: &mut impl Rng, n: usize) -> (Graph, Matching, Blossom) {
    assert!(n >= 3);
    let mut ids: Vec<Vertex> = (0..n).collect();
    ids.shuffle(rng);

    let k = rng.gen_range(1..=(n - 1) / 2);
    let cycle_len = 2 * k + 1;
    let stem_pairs = rng.gen_range(0..=(n - cycle_len) / 2);
    let stem_len = 2 * stem_pairs;
    let (stem, rest) = ids.split_at(stem_len);
    let (cycle_vs, rest) = rest.split_at(cycle_len);

    let stem = stem.to_vec();
    let mut cycle = cycle_vs.to_vec();
    cycle.push(cycle[0]);

    let walk: Vec<Vertex> = stem.iter().chain(&cycle).copied().collect();
    let mut g = Graph::new();
    let mut m = Matching::default();
    for (i, w) in walk.windows(2).enumerate() {
        let e = Edge::new(w[0], w[1]).unwrap();
        g.insert(e);
        if i % 2 == 1 {
            m.insert(e).unwrap();
        }
    }

    let mut rest = rest.to_vec();
    rest.shuffle(rng);
    for pair in rest.chunks(2) {
        if pair.len() == 2 && rng.gen_bool(0.6) {
            let e = Edge::new(pair[0], pair[1]).unwrap();
            g.insert(e);
            m.insert(e).unwrap();
        }
    }

    let p = rng.gen_range(0.05..0.4);
    for e in complete_edges(n) {
        if rng.gen_bool(p) {
            g.insert(e);
        }
    }
    let b = Blossom::new(stem, cycle);
    debug_assert!(b.is_blossom(&g, &m));
    (g, m, b)
}

/// A blossom met by the search on some random instance, if one turns up
/// within a few tries.
pub fn found_blossom(rng: &mut impl Rng, n: usize) -> Option<(Graph, Matching, Blossom)> {
    for _ in 0..50 {
        let p = rng.gen_range(0.2..0.6);
        let g = erdos_renyi(rng, n, p);
        let m = random_matching(rng, &g, 0.9);
        if let Ok(blossom::BlossomResult::FoundBlossom(b)) = blossom::compute_match_blossom(&g, &m) {
            return Some((g, m, b));
        }
    }
    None
}

/// With `found_first`, a blossom met by the search; otherwise, or if none
/// turns up, a planted one.
pub fn blossom_instance(rng: &mut impl Rng, n: usize, found_first: bool) -> (Graph, Matching, Blossom) {
    found_first
        .then(|| found_blossom(rng, n))
        .flatten()
        .unwrap_or_else(|| planted_blossom(rng, n))
}

pub fn graph(pairs: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_pairs(pairs.iter().copied()).unwrap()
}

pub fn matching(pairs: &[(Vertex, Vertex)]) -> Matching {
    Matching::from_pairs(pairs.iter().copied()).unwrap()
}

pub fn fig1() -> Graph {
    graph(&[
        (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7),
        (6, 7), (7, 8), (8, 9), (8, 10), (9, 10), (10, 11), (8, 12),
    ])
}

pub fn fig2() -> Graph {
    graph(&[(1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (3, 7)])
}

pub fn tri() -> Graph {
    graph(&[(1, 2), (2, 3), (1, 3)])
}
