//! Exhaustive reference implementations. The solver never calls these; they
//! exist to check it.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, Vertex};
use crate::matching::Matching;

/// Largest vertex count either oracle accepts.
pub const MAX_ORACLE_VERTICES: usize = 16;

struct Indexed {
    vertices: Vec<Vertex>,
    /// Edges as index pairs, in ascending edge order.
    edges: Vec<(usize, usize)>,
}

impl Indexed {
    fn new(g: &Graph) -> Result<Self> {
        let vertices: Vec<Vertex> = g.vertices().into_iter().collect();
        if vertices.len() > MAX_ORACLE_VERTICES {
            return Err(Error::OracleBound(format!(
                "{} vertices, at most {MAX_ORACLE_VERTICES} supported",
                vertices.len()
            )));
        }
        let index = |v: Vertex| vertices.binary_search(&v).unwrap();
        let edges = g.edges().map(|e| (index(e.lo()), index(e.hi()))).collect();
        Ok(Indexed { vertices, edges })
    }
}

/// A maximum matching by include-first enumeration over edges in ascending
/// order. Among all maximum matchings the lexicographically smallest sorted
/// edge sequence is returned.
pub fn max_matching_bruteforce(g: &Graph) -> Result<Matching> {
    let ix = Indexed::new(g)?;
    let n = ix.edges.len();
    // suffix_cover[i]: vertices touched by edges i..
    let mut suffix_cover = vec![0u32; n + 1];
    for i in (0..n).rev() {
        let (a, b) = ix.edges[i];
        suffix_cover[i] = suffix_cover[i + 1] | (1 << a) | (1 << b);
    }

    struct Search<'a> {
        edges: &'a [(usize, usize)],
        suffix_cover: &'a [u32],
        current: Vec<usize>,
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize, used: u32) {
            if self.current.len() > self.best.len() {
                self.best.clone_from(&self.current);
            }
            if i == self.edges.len() {
                return;
            }
            let free = (self.suffix_cover[i] & !used).count_ones() as usize;
            if self.current.len() + free / 2 <= self.best.len() {
                return;
            }
            let (a, b) = self.edges[i];
            let mask = (1u32 << a) | (1 << b);
            if used & mask == 0 {
                self.current.push(i);
                self.go(i + 1, used | mask);
                self.current.pop();
            }
            self.go(i + 1, used);
        }
    }

    let mut search = Search {
        edges: &ix.edges,
        suffix_cover: &suffix_cover,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.go(0, 0);

    Matching::new(search.best.into_iter().map(|i| {
        let (a, b) = ix.edges[i];
        Edge::new(ix.vertices[a], ix.vertices[b]).expect("distinct endpoints")
    }))
}

/// Some augmenting path found by enumerating alternating simple paths from
/// every unmatched vertex in ascending order, or `None` if there is none.
pub fn find_augpath_bruteforce(g: &Graph, m: &Matching) -> Result<Option<Path>> {
    let ix = Indexed::new(g)?;
    let k = ix.vertices.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &ix.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mate: Vec<Option<usize>> = ix
        .vertices
        .iter()
        .map(|&v| m.mate(v).and_then(|w| ix.vertices.binary_search(&w).ok()))
        .collect();

    fn extend(
        adj: &[Vec<usize>],
        mate: &[Option<usize>],
        path: &mut Vec<usize>,
        visited: u32,
    ) -> bool {
        let last = *path.last().unwrap();
        // path has an odd number of vertices here: next edge is non-matching
        for &w in &adj[last] {
            if visited & (1 << w) != 0 || mate[last] == Some(w) {
                continue;
            }
            match mate[w] {
                None => {
                    path.push(w);
                    return true;
                }
                Some(x) if visited & (1 << x) == 0 => {
                    path.push(w);
                    path.push(x);
                    if extend(adj, mate, path, visited | (1 << w) | (1 << x)) {
                        return true;
                    }
                    path.truncate(path.len() - 2);
                }
                Some(_) => {}
            }
        }
        false
    }

    for s in (0..k).filter(|&s| mate[s].is_none()) {
        let mut path = vec![s];
        if extend(&adj, &mate, &mut path, 1 << s) {
            return Ok(Some(path.into_iter().map(|i| ix.vertices[i]).collect()));
        }
    }
    Ok(None)
}
