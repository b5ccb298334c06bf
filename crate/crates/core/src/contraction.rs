//! Blossoms, quotient graphs, and lifting quotient augmenting paths back
//! through a contracted odd cycle.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{edges_of_path, is_simple, Edge, Graph, Path, Vertex};
use crate::matching::{is_alternating_path, Matching};

/// A vertex outside `vs`: one past the largest id, or 0 for the empty set.
pub fn fresh_vertex<I>(vs: I) -> Vertex
where
    I: IntoIterator<Item = Vertex>,
{
    vs.into_iter().max().map_or(0, |v| v + 1)
}

/// The map `v ↦ v` for kept vertices and `v ↦ target` for everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    kept: BTreeSet<Vertex>,
    target: Vertex,
}

impl ContractionMap {
    pub fn new(kept: BTreeSet<Vertex>, target: Vertex) -> Result<Self> {
        if kept.contains(&target) {
            return Err(Error::InconsistentState(format!(
                "contraction target {target} is a kept vertex"
            )));
        }
        Ok(ContractionMap { kept, target })
    }

    /// Contracts the vertices of `cycle` in `g` into a fresh vertex.
    pub fn for_cycle(g: &Graph, cycle: &[Vertex]) -> Self {
        let vs = g.vertices();
        let target = fresh_vertex(vs.iter().copied());
        let on_cycle: BTreeSet<Vertex> = cycle.iter().copied().collect();
        let kept = vs.difference(&on_cycle).copied().collect();
        ContractionMap { kept, target }
    }

    pub fn kept(&self) -> &BTreeSet<Vertex> {
        &self.kept
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        if self.kept.contains(&v) {
            v
        } else {
            self.target
        }
    }

    /// Image of every edge, with collapsed edges dropped.
    pub fn quotient_edges<'a, I>(&self, edges: I) -> BTreeSet<Edge>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        edges
            .into_iter()
            .filter_map(|e| Edge::new(self.apply(e.lo()), self.apply(e.hi())).ok())
            .collect()
    }

    pub fn quotient_graph(&self, g: &Graph) -> Graph {
        self.quotient_edges(g.edges()).into_iter().collect()
    }

    /// Fails if the image is not a matching, which cannot happen when the
    /// contracted set is the cycle of a blossom.
    pub fn quotient_matching(&self, m: &Matching) -> Result<Matching> {
        Matching::new(self.quotient_edges(m.edges()))
    }
}

/// At least three vertices, closed, with an odd number of edges.
pub fn is_odd_cycle(p: &[Vertex]) -> bool {
    p.len() >= 3 && p.len() % 2 == 0 && p.first() == p.last()
}

/// A stem path from an unmatched vertex followed by an odd alternating
/// cycle. `cycle` is closed: its first and last vertex are the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blossom {
    pub stem: Path,
    pub cycle: Path,
}

impl Blossom {
    pub fn new(stem: Path, cycle: Path) -> Self {
        Blossom { stem, cycle }
    }

    pub fn base(&self) -> Option<Vertex> {
        self.cycle.first().copied()
    }

    /// Cycle vertices without the repeated base.
    pub fn cycle_vertices(&self) -> &[Vertex] {
        &self.cycle[..self.cycle.len().saturating_sub(1)]
    }

    fn walk(&self) -> Path {
        self.stem.iter().chain(&self.cycle).copied().collect()
    }

    /// The blossom conditions that only involve the matching.
    pub fn is_match_blossom(&self, m: &Matching) -> bool {
        if !is_odd_cycle(&self.cycle) {
            return false;
        }
        let walk = self.walk();
        let distinct_part: Path = self.stem.iter().chain(self.cycle_vertices()).copied().collect();
        is_alternating_path(m, &walk)
            && is_simple(&distinct_part)
            && !m.is_matched(walk[0])
            && self.stem.len() % 2 == 0
    }

    pub fn is_blossom(&self, g: &Graph, m: &Matching) -> bool {
        self.is_match_blossom(m) && g.is_path(&self.walk())
    }
}

/// The shortest prefix ending at the first element satisfying `pred`, or
/// the whole slice if none does.
pub fn find_pfx<T, P>(pred: P, xs: &[T]) -> &[T]
where
    P: Fn(&T) -> bool,
{
    match xs.iter().position(pred) {
        Some(i) => &xs[..=i],
        None => xs,
    }
}

/// The smallest cycle vertex adjacent to `v` in `g`.
pub fn choose_con_vert(g: &Graph, cycle: &[Vertex], v: Vertex) -> Option<Vertex> {
    cycle.iter().copied().filter(|&t| g.has_edge(t, v)).min()
}

/// The segment of `cycle` running from the base to a cycle neighbour of
/// `v` and ending in a matching edge: the forward prefix if its last edge
/// is matched, otherwise the prefix of the reversed cycle.
pub fn stem2vert_path(g: &Graph, cycle: &[Vertex], m: &Matching, v: Vertex) -> Result<Path> {
    let t = choose_con_vert(g, cycle, v).ok_or(Error::NoCycleNeighbour(v))?;
    let forward = find_pfx(|&x| x == t, cycle);
    // A neighbour at the base itself gives the single-vertex segment.
    let last_matched = edges_of_path(forward)?.last().map_or(true, |e| m.contains(e));
    if last_matched {
        return Ok(forward.to_vec());
    }
    let reversed: Path = cycle.iter().rev().copied().collect();
    Ok(find_pfx(|&x| x == t, &reversed).to_vec())
}

/// Splices the cycle back between `p1` and `p2`, the parts of a quotient
/// augmenting path before and after the contracted vertex.
pub fn replace_cycle(
    g: &Graph,
    map: &ContractionMap,
    cycle: &[Vertex],
    m: &Matching,
    p1: &[Vertex],
    p2: &[Vertex],
) -> Result<Path> {
    let rev = |p: &[Vertex]| p.iter().rev().copied().collect::<Path>();
    match (p1.last(), p2.first()) {
        (None, Some(&h2)) => {
            let stem2p2 = stem2vert_path(g, cycle, m, h2)?;
            Ok([stem2p2.as_slice(), p2].concat())
        }
        (Some(&l1), None) => {
            let p12stem = stem2vert_path(g, cycle, m, l1)?;
            Ok([p12stem, rev(p1)].concat())
        }
        (Some(&l1), Some(&h2)) => {
            let quotient_matched = m.mate(h2).map(|w| map.apply(w)) == Some(map.target());
            if !quotient_matched {
                let stem2p2 = stem2vert_path(g, cycle, m, h2)?;
                Ok([p1, stem2p2.as_slice(), p2].concat())
            } else {
                let p12stem = stem2vert_path(g, cycle, m, l1)?;
                Ok([rev(p2), p12stem, rev(p1)].concat())
            }
        }
        (None, None) => Err(Error::NotAugmenting(
            "quotient path consists of the contracted vertex alone".into(),
        )),
    }
}

/// Lifts an augmenting path of the quotient to one of `g`. Paths avoiding
/// the contracted vertex are returned unchanged.
pub fn refine(
    g: &Graph,
    map: &ContractionMap,
    cycle: &[Vertex],
    m: &Matching,
    p: &[Vertex],
) -> Result<Path> {
    match p.iter().position(|&v| v == map.target()) {
        Some(i) => replace_cycle(g, map, cycle, m, &p[..i], &p[i + 1..]),
        None => Ok(p.to_vec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::matching::is_graph_augmenting_path;

    fn m(pairs: &[(Vertex, Vertex)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn fig2_map() -> ContractionMap {
        ContractionMap::new([1, 2, 6, 7].into(), 8).unwrap()
    }

    #[test]
    fn fresh_vertices() {
        assert_eq!(fresh_vertex([1, 2, 3]), 4);
        assert_eq!(fresh_vertex([]), 0);
        assert_eq!(fresh_vertex([0, 7]), 8);
    }

    #[test]
    fn quotients() {
        let map = fig2_map();
        assert_eq!(map.quotient_graph(&fig2()), graph(&[(1, 2), (2, 8), (8, 6), (8, 7)]));
        assert_eq!(map.quotient_matching(&m(&fig2_matching())).unwrap(), m(&[(2, 8)]));
        assert_eq!(ContractionMap::for_cycle(&fig2(), &[3, 4, 5, 3]), map);

        let g = fig1();
        let identity = ContractionMap::new(g.vertices(), fresh_vertex(g.vertices())).unwrap();
        assert_eq!(identity.quotient_graph(&g), g);
        assert!(ContractionMap::new([1, 2].into(), 2).is_err());
    }

    #[test]
    fn odd_cycles() {
        assert!(is_odd_cycle(&[3, 4, 5, 3]));
        assert!(!is_odd_cycle(&[1, 2, 1]));
        assert!(!is_odd_cycle(&[1, 2, 3]));
    }

    #[test]
    fn blossoms() {
        let m2 = m(&fig2_matching());
        assert!(Blossom::new(vec![1, 2], vec![3, 4, 5, 3]).is_blossom(&fig2(), &m2));
        assert!(Blossom::new(vec![], vec![3, 1, 2, 3]).is_blossom(&tri(), &m(&[(1, 2)])));
        assert!(!Blossom::new(vec![1], vec![3, 4, 5, 3]).is_blossom(&fig2(), &m2));
        // stem start matched
        assert!(!Blossom::new(vec![], vec![3, 4, 5, 3]).is_blossom(&fig2(), &m2));
    }

    #[test]
    fn prefixes() {
        assert_eq!(find_pfx(|&x| x == 2, &[1, 2, 3]), &[1, 2]);
        assert_eq!(find_pfx(|&x| x == 9, &[1, 2, 3]), &[1, 2, 3]);
        assert_eq!(find_pfx(|&x| x == 5, &[5, 6]), &[5]);
    }

    #[test]
    fn cycle_segments() {
        let m2 = m(&fig2_matching());
        assert_eq!(stem2vert_path(&fig2(), &[3, 4, 5, 3], &m2, 6).unwrap(), vec![3, 4, 5]);

        let g = graph(&[(1, 2), (2, 3), (1, 3), (1, 4)]);
        assert_eq!(stem2vert_path(&g, &[3, 1, 2, 3], &m(&[(1, 2)]), 4).unwrap(), vec![3, 2, 1]);

        assert_eq!(
            stem2vert_path(&fig2(), &[3, 4, 5, 3], &m2, 9),
            Err(Error::NoCycleNeighbour(9))
        );
        // neighbour at the base
        assert_eq!(stem2vert_path(&fig2(), &[3, 4, 5, 3], &m2, 7).unwrap(), vec![3]);
    }

    #[test]
    fn cycle_replacement() {
        let m2 = m(&fig2_matching());
        let map = fig2_map();
        let c = [3, 4, 5, 3];
        assert_eq!(
            replace_cycle(&fig2(), &map, &c, &m2, &[1, 2], &[6]).unwrap(),
            vec![1, 2, 3, 4, 5, 6]
        );
        // reversed orientation of the same quotient path
        assert_eq!(
            replace_cycle(&fig2(), &map, &c, &m2, &[6], &[2, 1]).unwrap(),
            vec![1, 2, 3, 4, 5, 6]
        );
        let mut g = fig2();
        g.remove(&Edge::new(1, 2).unwrap());
        assert_eq!(replace_cycle(&g, &map, &c, &m2, &[], &[6]).unwrap(), vec![3, 4, 5, 6]);
        assert!(replace_cycle(&g, &map, &c, &m2, &[], &[]).is_err());
    }

    #[test]
    fn refinement() {
        let m2 = m(&fig2_matching());
        let map = fig2_map();
        let lifted = refine(&fig2(), &map, &[3, 4, 5, 3], &m2, &[1, 2, 8, 6]).unwrap();
        assert_eq!(lifted, vec![1, 2, 3, 4, 5, 6]);
        assert!(is_graph_augmenting_path(&fig2(), &m2, &lifted));

        // a path in a second component never touches the contracted vertex
        let mut g = fig2();
        g.insert(Edge::new(10, 11).unwrap());
        let map = ContractionMap::for_cycle(&g, &[3, 4, 5, 3]);
        assert_eq!(refine(&g, &map, &[3, 4, 5, 3], &m2, &[10, 11]).unwrap(), vec![10, 11]);
    }
}
