//! Odd set covers as certificates that a matching is maximum.
//!
//! A family of odd vertex sets covers a graph if every edge either touches
//! a singleton member or lies inside a larger member. No matching can have
//! more edges than the cover's total capacity, so a matching whose size
//! equals that capacity is maximum.

use std::collections::BTreeSet;
use std::fmt;

use crate::contraction::{Blossom, ContractionMap};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, Vertex};
use crate::matching::Matching;

/// 1 for a singleton, `k` for a set of `2k + 1` vertices.
pub fn capacity(s: &BTreeSet<Vertex>) -> Result<usize> {
    match s.len() {
        n if n % 2 == 0 => Err(Error::EvenSet(n)),
        1 => Ok(1),
        n => Ok(n / 2),
    }
}

/// A singleton covers the edges it touches; a larger odd set covers the
/// edges inside it.
pub fn covers(s: &BTreeSet<Vertex>, e: &Edge) -> Result<bool> {
    match s.len() {
        n if n % 2 == 0 => Err(Error::EvenSet(n)),
        1 => Ok(e.endpoints().iter().any(|v| s.contains(v))),
        _ => Ok(e.endpoints().iter().all(|v| s.contains(v))),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OddSetCover {
    sets: Vec<BTreeSet<Vertex>>,
}

impl OddSetCover {
    pub fn new(sets: Vec<BTreeSet<Vertex>>) -> Self {
        OddSetCover { sets }
    }

    pub fn sets(&self) -> &[BTreeSet<Vertex>] {
        &self.sets
    }

    pub fn push(&mut self, s: BTreeSet<Vertex>) {
        self.sets.push(s);
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn all_odd(&self) -> bool {
        self.sets.iter().all(|s| s.len() % 2 == 1)
    }

    /// Sum of member capacities. Fails on an even member.
    pub fn capacity(&self) -> Result<usize> {
        self.sets.iter().map(capacity).sum()
    }

    /// The first edge of `g` no member covers, if any. Fails on an even
    /// member.
    pub fn uncovered_edge(&self, g: &Graph) -> Result<Option<Edge>> {
        for e in g.edges() {
            let mut covered = false;
            for s in &self.sets {
                if covers(s, e)? {
                    covered = true;
                    break;
                }
            }
            if !covered {
                return Ok(Some(*e));
            }
        }
        Ok(None)
    }

    pub fn is_cover_of(&self, g: &Graph) -> bool {
        matches!(self.uncovered_edge(g), Ok(None))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub matching_ok: bool,
    pub subset_ok: bool,
    pub cover_ok: bool,
    /// Total capacity; 0 when the cover has an even member.
    pub capacity: usize,
    pub matching_size: usize,
    pub verdict: bool,
    pub problems: Vec<String>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matching valid:     {}", self.matching_ok)?;
        writeln!(f, "matching in graph:  {}", self.subset_ok)?;
        writeln!(f, "odd set cover:      {}", self.cover_ok)?;
        writeln!(f, "cover capacity:     {}", self.capacity)?;
        writeln!(f, "matching size:      {}", self.matching_size)?;
        for p in &self.problems {
            writeln!(f, "problem: {p}")?;
        }
        write!(f, "maximum certified:  {}", self.verdict)
    }
}

/// Checks `edges` is a matching inside `g` and that `cover` is an odd set
/// cover of `g` whose capacity equals the matching size.
pub fn verify_maximum<'a, I>(g: &Graph, edges: I, cover: &OddSetCover) -> VerificationReport
where
    I: IntoIterator<Item = &'a Edge>,
{
    let edges: BTreeSet<Edge> = edges.into_iter().copied().collect();
    let mut problems = Vec::new();

    let matching_ok = match Matching::new(edges.iter().copied()) {
        Ok(_) => true,
        Err(e) => {
            problems.push(e.to_string());
            false
        }
    };
    let subset_ok = match edges.iter().find(|e| !g.contains(e)) {
        Some(e) => {
            problems.push(format!("edge {e} is not in the graph"));
            false
        }
        None => true,
    };
    let cover_ok = match cover.uncovered_edge(g) {
        Ok(None) => true,
        Ok(Some(e)) => {
            problems.push(format!("edge {e} is not covered"));
            false
        }
        Err(e) => {
            problems.push(e.to_string());
            false
        }
    };
    let capacity = cover.capacity().unwrap_or(0);
    if cover_ok && capacity != edges.len() {
        problems.push(format!(
            "capacity {capacity} differs from matching size {}",
            edges.len()
        ));
    }
    let verdict = matching_ok && subset_ok && cover_ok && capacity == edges.len();
    VerificationReport {
        matching_ok,
        subset_ok,
        cover_ok,
        capacity,
        matching_size: edges.len(),
        verdict,
        problems,
    }
}

/// One blossom contraction as recorded by the solver: the blossom found in
/// the graph of its level and the fresh vertex its cycle was merged into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionStep {
    pub stem: Path,
    /// Closed odd cycle, first vertex = last vertex = base.
    pub cycle: Path,
    pub target: Vertex,
}

/// A chain of blossom contractions followed by an odd set cover of the
/// final quotient graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub contractions: Vec<ContractionStep>,
    pub cover: OddSetCover,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    /// Index of the first contraction that failed to replay, with the reason.
    pub contraction_failure: Option<(usize, String)>,
    /// Check of the final quotient graph; absent when replay failed.
    pub quotient: Option<VerificationReport>,
    /// Matching size in the original graph.
    pub matching_size: usize,
    pub verdict: bool,
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "original matching size: {}", self.matching_size)?;
        if let Some((i, why)) = &self.contraction_failure {
            writeln!(f, "contraction {} rejected: {why}", i + 1)?;
        }
        if let Some(q) = &self.quotient {
            writeln!(f, "final quotient graph:")?;
            writeln!(f, "{q}")?;
        }
        write!(f, "verdict: {}", if self.verdict { "maximum" } else { "not certified" })
    }
}

/// Replays the contractions of `cert` on `g` and `m`, requiring each to be
/// a blossom of its level with a fresh target, then verifies the cover on
/// the final quotient. Since contracting a blossom preserves whether an
/// augmenting path exists, a true verdict certifies `m` maximum in `g`.
pub fn verify_certificate(g: &Graph, m: &Matching, cert: &Certificate) -> CertificateReport {
    let mut graph = g.clone();
    let mut matching = m.clone();
    let mut failure = None;
    if !m.is_subset_of(g) {
        failure = Some((0, "matching is not contained in the graph".to_string()));
    }

    for (i, step) in cert.contractions.iter().enumerate() {
        if failure.is_some() {
            break;
        }
        let blossom = Blossom::new(step.stem.clone(), step.cycle.clone());
        let vertices = graph.vertices();
        if !blossom.is_blossom(&graph, &matching) {
            failure = Some((i, "not a blossom of the current graph".into()));
            break;
        }
        if vertices.contains(&step.target) {
            failure = Some((i, format!("target {} is not a fresh vertex", step.target)));
            break;
        }
        let on_cycle: BTreeSet<Vertex> = blossom.cycle_vertices().iter().copied().collect();
        let kept = vertices.difference(&on_cycle).copied().collect();
        let map = ContractionMap::new(kept, step.target).expect("target checked fresh");
        graph = map.quotient_graph(&graph);
        matching = match map.quotient_matching(&matching) {
            Ok(q) => q,
            Err(e) => {
                failure = Some((i, e.to_string()));
                break;
            }
        };
    }

    let quotient = failure
        .is_none()
        .then(|| verify_maximum(&graph, matching.edges(), &cert.cover));
    let verdict = quotient.as_ref().is_some_and(|q| q.verdict);
    CertificateReport {
        contraction_failure: failure,
        quotient,
        matching_size: m.len(),
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn set(vs: &[Vertex]) -> BTreeSet<Vertex> {
        vs.iter().copied().collect()
    }

    fn e(u: Vertex, v: Vertex) -> Edge {
        Edge::new(u, v).unwrap()
    }

    #[test]
    fn capacities() {
        assert_eq!(capacity(&set(&[7])), Ok(1));
        assert_eq!(capacity(&set(&[1, 2, 3, 4, 5])), Ok(2));
        assert_eq!(capacity(&set(&[1, 2, 3])), Ok(1));
        assert_eq!(capacity(&set(&[1, 2])), Err(Error::EvenSet(2)));
    }

    #[test]
    fn covering() {
        assert_eq!(covers(&set(&[2]), &e(2, 3)), Ok(true));
        assert_eq!(covers(&set(&[1, 2, 3]), &e(2, 9)), Ok(false));
        assert_eq!(covers(&set(&[1, 2, 3]), &e(1, 3)), Ok(true));
        assert!(covers(&set(&[1, 2]), &e(1, 2)).is_err());
    }

    #[test]
    fn verification() {
        let g = graph(&[(1, 2)]);
        let r = verify_maximum(&g, [e(1, 2)].iter(), &OddSetCover::new(vec![set(&[1])]));
        assert!(r.verdict);
        assert_eq!(r.capacity, 1);

        let r = verify_maximum(&tri(), [e(1, 2)].iter(), &OddSetCover::new(vec![set(&[1]), set(&[2])]));
        assert!(r.cover_ok);
        assert_eq!(r.capacity, 2);
        assert!(!r.verdict);

        let r = verify_maximum(&tri(), [e(1, 2)].iter(), &OddSetCover::new(vec![set(&[1, 2, 3])]));
        assert!(r.verdict);

        let r = verify_maximum(&tri(), [e(1, 2), e(2, 3)].iter(), &OddSetCover::new(vec![set(&[1, 2, 3])]));
        assert!(!r.matching_ok);
        assert!(!r.verdict);

        let r = verify_maximum(&tri(), [e(1, 2)].iter(), &OddSetCover::new(vec![set(&[1, 2])]));
        assert!(!r.cover_ok);
    }

    #[test]
    fn certificate_through_a_contraction() {
        let m = Matching::from_pairs([(1, 2)]).unwrap();
        let cert = Certificate {
            contractions: vec![ContractionStep { stem: vec![], cycle: vec![3, 1, 2, 3], target: 4 }],
            cover: OddSetCover::default(),
        };
        let report = verify_certificate(&tri(), &m, &cert);
        assert!(report.verdict, "{report}");

        // cycle that is not alternating
        let bad = Certificate {
            contractions: vec![ContractionStep { stem: vec![], cycle: vec![1, 2, 3, 1], target: 4 }],
            cover: OddSetCover::default(),
        };
        let report = verify_certificate(&tri(), &m, &bad);
        assert!(!report.verdict);
        assert_eq!(report.contraction_failure.map(|f| f.0), Some(0));

        let stale = Certificate {
            contractions: vec![ContractionStep { stem: vec![], cycle: vec![3, 1, 2, 3], target: 2 }],
            cover: OddSetCover::default(),
        };
        assert!(!verify_certificate(&tri(), &m, &stale).verdict);
    }
}
