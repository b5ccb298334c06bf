//! Matchings, alternating sequences, augmenting paths and augmentation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{edges_of_path, is_simple, Edge, Graph, Vertex};

/// A set of pairwise vertex-disjoint edges, indexed by vertex.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: BTreeSet<Edge>,
    mate: BTreeMap<Vertex, Vertex>,
}

impl Matching {
    pub fn new<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut m = Matching::default();
        for e in edges {
            m.insert(e)?;
        }
        Ok(m)
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let edges = pairs
            .into_iter()
            .map(|(u, v)| Edge::new(u, v))
            .collect::<Result<Vec<_>>>()?;
        Matching::new(edges)
    }

    /// Adds `e`, failing if it touches an edge already present. Re-adding
    /// a present edge is a no-op.
    pub fn insert(&mut self, e: Edge) -> Result<()> {
        if self.edges.contains(&e) {
            return Ok(());
        }
        for v in e.endpoints() {
            if let Some(&w) = self.mate.get(&v) {
                return Err(Error::NotAMatching(Edge::new(v, w)?, e));
            }
        }
        self.edges.insert(e);
        self.mate.insert(e.lo(), e.hi());
        self.mate.insert(e.hi(), e.lo());
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate.get(&v).copied()
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.mate.keys().copied()
    }

    pub fn is_subset_of(&self, g: &Graph) -> bool {
        self.edges.iter().all(|e| g.contains(e))
    }

    pub fn to_graph(&self) -> Graph {
        self.edges.iter().copied().collect()
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges.iter()).finish()
    }
}

pub fn is_matching<'a, I>(edges: I) -> bool
where
    I: IntoIterator<Item = &'a Edge>,
{
    let mut seen = BTreeSet::new();
    // Duplicates are harmless for a set; only distinct edges may not meet.
    let distinct: BTreeSet<&Edge> = edges.into_iter().collect();
    distinct
        .into_iter()
        .all(|e| seen.insert(e.lo()) && seen.insert(e.hi()))
}

/// True iff `xs` alternates: the head satisfies `first`, the tail
/// alternates with the two predicates swapped. The empty sequence
/// alternates trivially.
pub fn alternates<T, P, Q>(xs: &[T], first: P, second: Q) -> bool
where
    P: Fn(&T) -> bool,
    Q: Fn(&T) -> bool,
{
    xs.iter().enumerate().all(|(i, x)| {
        if i % 2 == 0 {
            first(x)
        } else {
            second(x)
        }
    })
}

/// Edge sequence of `p` alternates non-matching, matching, ...
pub fn is_alternating_path(m: &Matching, p: &[Vertex]) -> bool {
    edges_of_path(p).is_ok_and(|es| alternates(&es, |e| !m.contains(e), |e| m.contains(e)))
}

/// At least two vertices, alternating from a non-matching edge, with both
/// ends unmatched.
pub fn is_matching_augmenting_path(m: &Matching, p: &[Vertex]) -> bool {
    match (p.first(), p.last()) {
        (Some(&h), Some(&l)) => {
            p.len() >= 2 && is_alternating_path(m, p) && !m.is_matched(h) && !m.is_matched(l)
        }
        _ => false,
    }
}

pub fn is_graph_augmenting_path(g: &Graph, m: &Matching, p: &[Vertex]) -> bool {
    g.is_path(p) && is_simple(p) && is_matching_augmenting_path(m, p)
}

pub fn symmetric_difference(a: &BTreeSet<Edge>, b: &BTreeSet<Edge>) -> BTreeSet<Edge> {
    a.symmetric_difference(b).copied().collect()
}

/// `M ⊕ E(p)` for an augmenting path `p`.
///
/// The result must be a matching one edge larger than `m`; anything else
/// means `p` was not augmenting and is reported as an error. The full
/// alternation check runs in debug builds only.
pub fn augment(m: &Matching, p: &[Vertex]) -> Result<Matching> {
    debug_assert!(
        is_matching_augmenting_path(m, p) && is_simple(p),
        "augment called with non-augmenting path {p:?}"
    );
    let path_edges: BTreeSet<Edge> = edges_of_path(p)?.into_iter().collect();
    let result = Matching::new(symmetric_difference(m.edge_set(), &path_edges))
        .map_err(|e| Error::NotAugmenting(format!("{p:?}: {e}")))?;
    if result.len() != m.len() + 1 {
        return Err(Error::NotAugmenting(format!(
            "{p:?} changes matching size from {} to {}",
            m.len(),
            result.len()
        )));
    }
    Ok(result)
}
