//! Undirected graphs as finite sets of two-element edges.
//!
//! A [`Graph`] stores no vertex set of its own: its vertices are exactly the
//! endpoints of its edges, so isolated vertices cannot be represented.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A vertex sequence. Whether it is a path depends on the graph it is
/// checked against, see [`Graph::is_path`].
pub type Path = Vec<Vertex>;

/// An unordered pair of distinct vertices, stored as `(min, max)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: v, hi: u }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
        }
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn endpoints(&self) -> [Vertex; 2] {
        [self.lo, self.hi]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: Vertex) -> Option<Vertex> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    pub fn intersects(&self, other: &Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

impl TryFrom<(Vertex, Vertex)> for Edge {
    type Error = Error;

    fn try_from((u, v): (Vertex, Vertex)) -> Result<Self> {
        Edge::new(u, v)
    }
}

/// Consecutive-pair edges of a vertex sequence.
///
/// Sequences of length at most one have no edges. A repeated consecutive
/// vertex would be a self-loop and is rejected.
pub fn edges_of_path(p: &[Vertex]) -> Result<Vec<Edge>> {
    p.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
}

pub fn is_simple(p: &[Vertex]) -> bool {
    let mut seen = BTreeSet::new();
    p.iter().all(|v| seen.insert(*v))
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex pairs, rejecting self-loops. Duplicate
    /// pairs (in either orientation) collapse to one edge.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        pairs
            .into_iter()
            .map(|(u, v)| Edge::new(u, v))
            .collect::<Result<BTreeSet<_>>>()
            .map(|edges| Graph { edges })
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.edges.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        Edge::new(u, v).is_ok_and(|e| self.edges.contains(&e))
    }

    /// The union of all edges.
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.edges.iter().flat_map(Edge::endpoints).collect()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.contains(v))
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.edges.iter().map(Edge::hi).max()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.iter().filter_map(move |e| e.other(v))
    }

    /// Sorted neighbour lists for every vertex.
    pub fn adjacency(&self) -> BTreeMap<Vertex, Vec<Vertex>> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(e.lo).or_default().push(e.hi);
            adj.entry(e.hi).or_default().push(e.lo);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        adj
    }

    /// The inductive path predicate: the empty sequence is a path, a
    /// singleton is a path iff its vertex is in the graph, and longer
    /// sequences need every consecutive pair to be an edge.
    pub fn is_path(&self, p: &[Vertex]) -> bool {
        match p {
            [] => true,
            [v] => self.has_vertex(*v),
            _ => p.windows(2).all(|w| self.has_edge(w[0], w[1])),
        }
    }

    /// `v` together with every vertex reachable from it.
    pub fn connected_component(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.component_in(&self.adjacency(), v)
    }

    fn component_in(&self, adj: &BTreeMap<Vertex, Vec<Vertex>>, v: Vertex) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in adj.get(&u).into_iter().flatten() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn connected_components(&self) -> Vec<BTreeSet<Vertex>> {
        let adj = self.adjacency();
        let mut assigned = BTreeSet::new();
        let mut components = Vec::new();
        for &v in adj.keys() {
            if assigned.contains(&v) {
                continue;
            }
            let component = self.component_in(&adj, v);
            assigned.extend(component.iter().copied());
            components.push(component);
        }
        components
    }

    /// Edges of the graph with both endpoints in `vs`.
    pub fn component_edges(&self, vs: &BTreeSet<Vertex>) -> Graph {
        self.edges
            .iter()
            .filter(|e| vs.contains(&e.lo) && vs.contains(&e.hi))
            .copied()
            .collect()
    }

    /// Lays out a connected component of a graph with maximum degree two as
    /// a simple path covering exactly the component's vertices and edges.
    ///
    /// Fails if `component` is not a component of the graph, if some vertex
    /// has degree three or more, or if the component is a cycle.
    pub fn arrange_component_as_path(&self, component: &BTreeSet<Vertex>) -> Result<Path> {
        let Some(&start) = component.first() else {
            return Ok(Vec::new());
        };
        let adj = self.adjacency();
        if let Some((v, ns)) = adj.iter().find(|(_, ns)| ns.len() > 2) {
            return Err(Error::NotArrangeable(format!("vertex {v} has degree {}", ns.len())));
        }
        if self.component_in(&adj, start) != *component {
            return Err(Error::NotArrangeable("not a connected component".into()));
        }
        if component.len() == 1 {
            return Ok(vec![start]);
        }
        let Some(&end) = component
            .iter()
            .find(|v| adj.get(v).map_or(0, Vec::len) <= 1)
        else {
            return Err(Error::NotArrangeable("component is a cycle".into()));
        };

        let mut path = vec![end];
        let mut prev = None;
        let mut cur = end;
        while let Some(&next) = adj[&cur].iter().find(|&&w| Some(w) != prev) {
            path.push(next);
            prev = Some(cur);
            cur = next;
        }
        Ok(path)
    }
}

impl FromIterator<Edge> for Graph {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Graph {
            edges: iter.into_iter().collect(),
        }
    }
}

impl Extend<Edge> for Graph {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.edges.extend(iter)
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges.iter()).finish()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn graph(pairs: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_pairs(pairs.iter().copied()).unwrap()
    }

    pub fn fig1() -> Graph {
        graph(&[
            (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7),
            (6, 7), (7, 8), (8, 9), (8, 10), (9, 10), (10, 11), (8, 12),
        ])
    }

    pub fn fig1_matching() -> Vec<(Vertex, Vertex)> {
        vec![(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)]
    }

    pub fn fig2() -> Graph {
        graph(&[(1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (3, 7)])
    }

    pub fn fig2_matching() -> Vec<(Vertex, Vertex)> {
        vec![(2, 3), (4, 5)]
    }

    pub fn tri() -> Graph {
        graph(&[(1, 2), (2, 3), (1, 3)])
    }

    pub fn p4() -> Graph {
        graph(&[(1, 2), (2, 3), (3, 4)])
    }
}
