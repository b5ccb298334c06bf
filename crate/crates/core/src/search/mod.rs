//! Alternating-forest search.
//!
//! Every unmatched vertex starts an even-labelled tree. The search repeatedly
//! examines an unexamined edge leaving an even vertex: an unlabelled far end
//! grows the tree by that vertex (odd) and its mate (even), an odd far end is
//! ignored, and an even far end stops the search with the two tree ascents
//! from the edge's endpoints. If no such edge is left, the final state is
//! returned so that an odd set cover can be read off it.

mod cover;
mod invariants;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, Vertex};
use crate::matching::Matching;

pub use cover::build_odd_set_cover;
pub use invariants::{check_invariants, InvariantChecker, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub root: Vertex,
    pub parity: Parity,
}

impl Label {
    pub fn even(root: Vertex) -> Self {
        Label { root, parity: Parity::Even }
    }

    pub fn odd(root: Vertex) -> Self {
        Label { root, parity: Parity::Odd }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchState {
    pub examined: BTreeSet<Edge>,
    pub parent: BTreeMap<Vertex, Vertex>,
    pub labels: BTreeMap<Vertex, Label>,
}

impl SearchState {
    pub fn label(&self, v: Vertex) -> Option<Label> {
        self.labels.get(&v).copied()
    }

    pub fn parity(&self, v: Vertex) -> Option<Parity> {
        self.labels.get(&v).map(|l| l.parity)
    }

    pub fn odd_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.labels
            .iter()
            .filter(|(_, l)| l.parity == Parity::Odd)
            .map(|(&v, _)| v)
    }

    pub fn follow(&self, v: Vertex) -> Result<Path> {
        follow(&self.parent, v)
    }
}

/// Ascends parent pointers from `v` to a root.
///
/// A walk longer than the number of parent entries means the relation has
/// a cycle, which is reported instead of looping.
pub fn follow(parent: &BTreeMap<Vertex, Vertex>, v: Vertex) -> Result<Path> {
    let mut path = vec![v];
    let mut cur = v;
    while let Some(&p) = parent.get(&cur) {
        if path.len() > parent.len() {
            return Err(Error::ParentCycle(v));
        }
        path.push(p);
        cur = p;
    }
    Ok(path)
}

/// Two tree ascents joined by a non-matching edge `{p1[0], p2[0]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltPathPair {
    pub p1: Path,
    pub p2: Path,
}

/// What one loop iteration did with the examined edge `{v1, v2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Grow { v1: Vertex, v2: Vertex, v3: Vertex, root: Vertex },
    Skip { v1: Vertex, v2: Vertex },
    Found { v1: Vertex, v2: Vertex },
}

impl Step {
    pub fn edge(&self) -> (Vertex, Vertex) {
        match *self {
            Step::Grow { v1, v2, .. } | Step::Skip { v1, v2 } | Step::Found { v1, v2 } => (v1, v2),
        }
    }
}

/// Hooks into the search and into the contraction loop driving it. All
/// methods default to doing nothing.
pub trait SearchObserver {
    fn search_started(&mut self, _g: &Graph, _m: &Matching, _state: &SearchState) {}

    fn step(&mut self, _g: &Graph, _m: &Matching, _step: &Step, _state: &SearchState) {}

    fn blossom_contracted(&mut self, _stem: &[Vertex], _cycle: &[Vertex], _target: Vertex) {}
}

impl SearchObserver for () {}

impl<A: SearchObserver, B: SearchObserver> SearchObserver for (A, B) {
    fn search_started(&mut self, g: &Graph, m: &Matching, state: &SearchState) {
        self.0.search_started(g, m, state);
        self.1.search_started(g, m, state);
    }

    fn step(&mut self, g: &Graph, m: &Matching, step: &Step, state: &SearchState) {
        self.0.step(g, m, step, state);
        self.1.step(g, m, step, state);
    }

    fn blossom_contracted(&mut self, stem: &[Vertex], cycle: &[Vertex], target: Vertex) {
        self.0.blossom_contracted(stem, cycle, target);
        self.1.blossom_contracted(stem, cycle, target);
    }
}

impl<T: SearchObserver> SearchObserver for Option<T> {
    fn search_started(&mut self, g: &Graph, m: &Matching, state: &SearchState) {
        if let Some(o) = self {
            o.search_started(g, m, state);
        }
    }

    fn step(&mut self, g: &Graph, m: &Matching, step: &Step, state: &SearchState) {
        if let Some(o) = self {
            o.step(g, m, step, state);
        }
    }

    fn blossom_contracted(&mut self, stem: &[Vertex], cycle: &[Vertex], target: Vertex) {
        if let Some(o) = self {
            o.blossom_contracted(stem, cycle, target);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Paths(AltPathPair),
    Exhausted(SearchState),
}

pub fn compute_alt_path(g: &Graph, m: &Matching) -> Result<Option<AltPathPair>> {
    Ok(match search_forest(g, m, &mut ())? {
        SearchOutcome::Paths(pair) => Some(pair),
        SearchOutcome::Exhausted(_) => None,
    })
}

/// Runs the search. Ties are broken by taking the smallest `(v1, v2)` pair
/// with `v1` even and `{v1, v2}` unexamined.
pub fn search_forest<O>(g: &Graph, m: &Matching, observer: &mut O) -> Result<SearchOutcome>
where
    O: SearchObserver + ?Sized,
{
    if let Some(e) = m.edges().find(|e| !g.contains(e)) {
        return Err(Error::InconsistentState(format!("matching edge {e} is not in the graph")));
    }
    let adj = g.adjacency();
    let mut state = SearchState::default();
    // (v1, v2) with v1 even and {v1, v2} unexamined
    let mut candidates: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();

    let add_candidates = |candidates: &mut BTreeSet<_>, examined: &BTreeSet<Edge>, v: Vertex| {
        for &w in &adj[&v] {
            if !examined.contains(&Edge::new(v, w).expect("adjacency has no loops")) {
                candidates.insert((v, w));
            }
        }
    };

    for &v in adj.keys() {
        if !m.is_matched(v) {
            state.labels.insert(v, Label::even(v));
            add_candidates(&mut candidates, &state.examined, v);
        }
    }
    observer.search_started(g, m, &state);

    while let Some((v1, v2)) = candidates.pop_first() {
        candidates.remove(&(v2, v1));
        state.examined.insert(Edge::new(v1, v2)?);
        let root = state.labels[&v1].root;

        let step = match state.parity(v2) {
            None => {
                let v3 = m.mate(v2).ok_or_else(|| {
                    Error::InconsistentState(format!("unlabelled vertex {v2} is unmatched"))
                })?;
                if state.labels.contains_key(&v3) {
                    return Err(Error::InconsistentState(format!(
                        "mate {v3} of unlabelled vertex {v2} is labelled"
                    )));
                }
                state.examined.insert(Edge::new(v2, v3)?);
                candidates.remove(&(v2, v3));
                candidates.remove(&(v3, v2));
                state.labels.insert(v2, Label::odd(root));
                state.labels.insert(v3, Label::even(root));
                state.parent.insert(v2, v1);
                state.parent.insert(v3, v2);
                add_candidates(&mut candidates, &state.examined, v3);
                Step::Grow { v1, v2, v3, root }
            }
            Some(Parity::Odd) => Step::Skip { v1, v2 },
            Some(Parity::Even) => {
                let step = Step::Found { v1, v2 };
                observer.step(g, m, &step, &state);
                let pair = AltPathPair {
                    p1: state.follow(v1)?,
                    p2: state.follow(v2)?,
                };
                return Ok(SearchOutcome::Paths(pair));
            }
        };
        observer.step(g, m, &step, &state);
    }
    Ok(SearchOutcome::Exhausted(state))
}
