use std::collections::BTreeSet;

use super::{Parity, SearchState};
use crate::certificate::OddSetCover;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::matching::Matching;

/// Reads an odd set cover of capacity `|m|` off the final state of a search
/// that found no even-even edge.
///
/// Odd vertices become singletons. Matching edges the search never
/// examined have unlabelled endpoints; if there is one such edge `{r1, r2}`
/// the singleton `{r1}` is added, if there are several, one `{r1, r2}` is
/// singled out and `{r1}` plus `{r2} ∪ V(rest)` are added.
pub fn build_odd_set_cover(g: &Graph, m: &Matching, state: &SearchState) -> Result<OddSetCover> {
    if let Some(e) = g.edges().find(|e| {
        !state.examined.contains(e)
            && e.endpoints().iter().any(|&v| state.parity(v) == Some(Parity::Even))
    }) {
        return Err(Error::InconsistentState(format!(
            "unexamined edge {e} leaves an even vertex"
        )));
    }

    let mut cover = OddSetCover::new(
        state
            .odd_vertices()
            .map(|v| BTreeSet::from([v]))
            .collect(),
    );

    let unexamined: Vec<Edge> = m.edges().filter(|e| !state.examined.contains(e)).copied().collect();
    if let Some(e) = unexamined.iter().find(|e| e.endpoints().iter().any(|&v| state.label(v).is_some())) {
        return Err(Error::InconsistentState(format!(
            "unexamined matching edge {e} has a labelled endpoint"
        )));
    }
    match unexamined.as_slice() {
        [] => {}
        [single] => cover.push(BTreeSet::from([single.lo()])),
        [first, rest @ ..] => {
            cover.push(BTreeSet::from([first.lo()]));
            let mut big: BTreeSet<Vertex> = rest.iter().flat_map(Edge::endpoints).collect();
            big.insert(first.hi());
            cover.push(big);
        }
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_maximum;
    use crate::graph::fixtures::*;
    use crate::search::{search_forest, SearchOutcome};

    fn exhausted(g: &Graph, m: &Matching) -> SearchState {
        match search_forest(g, m, &mut ()).unwrap() {
            SearchOutcome::Exhausted(s) => s,
            other => panic!("search did not fail: {other:?}"),
        }
    }

    #[test]
    fn single_matched_edge() {
        let g = graph(&[(1, 2)]);
        let m = Matching::from_pairs([(1, 2)]).unwrap();
        let cover = build_odd_set_cover(&g, &m, &exhausted(&g, &m)).unwrap();
        assert_eq!(cover, OddSetCover::new(vec![BTreeSet::from([1])]));
        assert_eq!(cover.capacity(), Ok(1));
    }

    #[test]
    fn path_with_perfect_matching() {
        let g = p4();
        let m = Matching::from_pairs([(1, 2), (3, 4)]).unwrap();
        let cover = build_odd_set_cover(&g, &m, &exhausted(&g, &m)).unwrap();
        assert_eq!(cover.capacity(), Ok(2));
        assert!(verify_maximum(&g, m.edges(), &cover).verdict);
        // two untouched matching edges: {1} and {2, 3, 4}
        assert_eq!(cover.sets(), &[BTreeSet::from([1]), BTreeSet::from([2, 3, 4])]);
    }

    #[test]
    fn odd_vertices_cover_the_forest() {
        // star centre 0 matched to 1; leaves 2 and 3 are roots
        let g = graph(&[(0, 1), (0, 2), (0, 3)]);
        let m = Matching::from_pairs([(0, 1)]).unwrap();
        let cover = build_odd_set_cover(&g, &m, &exhausted(&g, &m)).unwrap();
        assert_eq!(cover.sets(), &[BTreeSet::from([0])]);
        assert!(verify_maximum(&g, m.edges(), &cover).verdict);
    }

    #[test]
    fn rejects_unfinished_state() {
        let g = p4();
        let m = Matching::from_pairs([(2, 3)]).unwrap();
        let mut state = SearchState::default();
        state.labels.insert(1, crate::search::Label::even(1));
        assert!(build_odd_set_cover(&g, &m, &state).is_err());
    }
}
