//! Turning the two tree ascents of a successful search into an augmenting
//! path or a blossom.

use std::collections::BTreeSet;

use crate::contraction::{find_pfx, Blossom};
use crate::error::Result;
use crate::graph::{Edge, Graph, Path, Vertex};
use crate::matching::Matching;
use crate::search::{search_forest, SearchObserver, SearchOutcome, SearchState};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlossomResult {
    AugmentingPath(Path),
    FoundBlossom(Blossom),
    /// The search failed; its final state is kept for certificate
    /// construction.
    NotFound(SearchState),
}

/// Prefixes of two root-ward tree ascents up to their first common vertex.
///
/// For each element `h` of `l2` in turn, the prefix of `l1` up to `h` is
/// taken; the first `h` that actually occurs in `l1` ends both prefixes.
/// Returns `(None, None)` if either list is empty or they share nothing.
pub fn longest_disj_pfx<T>(l1: &[T], l2: &[T]) -> (Option<Vec<T>>, Option<Vec<T>>)
where
    T: Clone + PartialEq,
{
    if l1.is_empty() {
        return (None, None);
    }
    for (i, h) in l2.iter().enumerate() {
        let pfx1 = find_pfx(|x| x == h, l1);
        if pfx1.last() == Some(h) {
            return (Some(pfx1.to_vec()), Some(l2[..=i].to_vec()));
        }
    }
    (None, None)
}

/// The smallest edge with both endpoints unmatched.
pub fn sel_unmatched(g: &Graph, m: &Matching) -> Option<Edge> {
    g.edges()
        .find(|e| !m.is_matched(e.lo()) && !m.is_matched(e.hi()))
        .copied()
}

pub fn compute_match_blossom(g: &Graph, m: &Matching) -> Result<BlossomResult> {
    search_match_blossom(g, m, &mut ())
}

/// An edge between two unmatched vertices is returned directly as a
/// two-vertex augmenting path. Otherwise the forest search runs: vertex
/// disjoint ascents `p1`, `p2` join into `rev(p1) ++ p2`, while ascents that
/// meet (necessarily in the same tree) give a blossom whose cycle is
/// `rev(pfx1) ++ pfx2` and whose stem is the reversed shared remainder.
pub fn search_match_blossom<O>(g: &Graph, m: &Matching, observer: &mut O) -> Result<BlossomResult>
where
    O: SearchObserver + ?Sized,
{
    if let Some(e) = sel_unmatched(g, m) {
        return Ok(BlossomResult::AugmentingPath(vec![e.lo(), e.hi()]));
    }
    let (p1, p2) = match search_forest(g, m, observer)? {
        SearchOutcome::Exhausted(state) => return Ok(BlossomResult::NotFound(state)),
        SearchOutcome::Paths(pair) => (pair.p1, pair.p2),
    };

    let in_p1: BTreeSet<Vertex> = p1.iter().copied().collect();
    let disjoint = p2.iter().all(|v| !in_p1.contains(v));
    debug_assert_eq!(
        disjoint,
        p1.last() != p2.last(),
        "ascents {p1:?} and {p2:?} overlap without sharing their root"
    );
    if disjoint {
        let path = p1.iter().rev().chain(&p2).copied().collect();
        return Ok(BlossomResult::AugmentingPath(path));
    }

    match longest_disj_pfx(&p1, &p2) {
        (Some(pfx1), Some(pfx2)) => {
            let stem = p1[pfx1.len()..].iter().rev().copied().collect();
            let cycle = pfx1.iter().rev().chain(&pfx2).copied().collect();
            Ok(BlossomResult::FoundBlossom(Blossom::new(stem, cycle)))
        }
        _ => unreachable!("overlapping ascents always share a vertex"),
    }
}
