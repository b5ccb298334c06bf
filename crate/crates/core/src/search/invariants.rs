//! Loop invariants of the forest search, checked against a concrete state.

use std::collections::BTreeSet;
use std::fmt;

use super::{Label, Parity, SearchObserver, SearchState, Step};
use crate::graph::{is_simple, Edge, Graph, Vertex};
use crate::matching::Matching;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Short tag such as `"I7"`.
    pub invariant: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.detail)
    }
}

/// All violated invariants I1-I16 of `state` for the search on `g`, `m`.
pub fn check_invariants(g: &Graph, m: &Matching, state: &SearchState) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut fail = |invariant: &'static str, detail: String| {
        out.push(Violation { invariant, detail });
    };
    let label = |v: Vertex| state.label(v);

    // I3 first: every other follow-based check needs terminating ascents.
    let mut ascents = Vec::new();
    for v in g.vertices() {
        match state.follow(v) {
            Ok(p) => ascents.push((v, p)),
            Err(e) => fail("I3", e.to_string()),
        }
    }

    for (v, path) in &ascents {
        // I9
        if !is_simple(path) || !g.is_path(path) {
            fail("I9", format!("ascent {path:?} from {v} is not a simple path"));
        }
        let Some(Label { root, parity }) = label(*v) else {
            continue;
        };
        // I1
        if parity == Parity::Even {
            let alternating = path.iter().enumerate().all(|(i, &u)| {
                let want = if i % 2 == 0 { Label::even(root) } else { Label::odd(root) };
                label(u) == Some(want)
            });
            if !alternating {
                fail("I1", format!("labels along {path:?} do not alternate for root {root}"));
            }
        }
        // I2
        for w in path.windows(2) {
            let Ok(e) = Edge::new(w[0], w[1]) else { continue };
            let even_to_odd = matches!(
                (label(w[0]), label(w[1])),
                (Some(a), Some(b)) if a.parity == Parity::Even
                    && b.parity == Parity::Odd && a.root == b.root
            );
            if even_to_odd != m.contains(&e) {
                fail("I2", format!("edge {e} on ascent from {v} breaks alternation"));
            }
        }
        // I6, I7
        let last = *path.last().expect("ascent is non-empty");
        if m.is_matched(last) {
            fail("I6", format!("ascent from {v} ends at matched vertex {last}"));
        }
        if label(last).map(|l| l.parity) != Some(Parity::Even) {
            fail("I7", format!("ascent from {v} ends at non-even vertex {last}"));
        }
    }

    for e in m.edges() {
        let [a, b] = e.endpoints();
        // I4
        if label(a).is_none() != label(b).is_none() {
            fail("I4", format!("matching edge {e} is half labelled"));
        }
        // I8
        if (label(a).is_some() || label(b).is_some()) && !state.examined.contains(e) {
            fail("I8", format!("labelled matching edge {e} is unexamined"));
        }
        // I10
        for (x, y) in [(a, b), (b, a)] {
            let lhs = matches!(label(x), Some(l) if l.parity == Parity::Even);
            if lhs {
                let root = label(x).unwrap().root;
                if label(y) != Some(Label::odd(root)) {
                    fail("I10", format!("even {x} has mate {y} not odd in the same tree"));
                }
            }
            if let Some(l) = label(y).filter(|l| l.parity == Parity::Odd) {
                if label(x) != Some(Label::even(l.root)) {
                    fail("I10", format!("odd {y} has mate {x} not even in the same tree"));
                }
            }
        }
        // I12
        if !state.examined.contains(e) && (label(a).is_some() || label(b).is_some()) {
            fail("I12", format!("unexamined matching edge {e} has a labelled endpoint"));
        }
    }

    // I5
    let parents: BTreeSet<Vertex> = state.parent.values().copied().collect();
    for p in &parents {
        if label(*p).is_none() {
            fail("I5", format!("unlabelled vertex {p} is a parent"));
        }
    }

    // I11
    for e in &state.examined {
        if !e.endpoints().iter().any(|&u| state.parity(u) == Some(Parity::Odd)) {
            fail("I11", format!("examined edge {e} has no odd endpoint"));
        }
    }

    // I13/I14
    let odd: BTreeSet<Vertex> = state.odd_vertices().collect();
    let matched_examined = m.edges().filter(|e| state.examined.contains(e)).count();
    if odd.len() != matched_examined {
        fail(
            "I14",
            format!("{} odd vertices but {matched_examined} examined matching edges", odd.len()),
        );
    }

    for v in g.vertices() {
        match state.parity(v) {
            // I15
            None => {
                if !g.edges().any(|e| e.contains(v) && !state.examined.contains(e)) {
                    fail("I15", format!("unlabelled {v} has no unexamined edge"));
                }
            }
            // I16
            Some(Parity::Odd) => {
                if !g.edges().any(|e| e.contains(v) && state.examined.contains(e)) {
                    fail("I16", format!("odd {v} has no examined edge"));
                }
            }
            Some(Parity::Even) => {}
        }
    }

    out
}

/// Observer that checks every invariant after each iteration that keeps
/// the loop running, plus strict decrease of the unexamined edge count.
#[derive(Debug, Default)]
pub struct InvariantChecker {
    violations: Vec<Violation>,
    unexamined: Option<usize>,
    states_checked: usize,
}

impl InvariantChecker {
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn states_checked(&self) -> usize {
        self.states_checked
    }

    fn record(&mut self, g: &Graph, m: &Matching, state: &SearchState) {
        self.states_checked += 1;
        self.violations.extend(check_invariants(g, m, state));
    }

    fn check_progress(&mut self, g: &Graph, state: &SearchState) {
        let now = g.edges().filter(|e| !state.examined.contains(e)).count();
        if let Some(before) = self.unexamined {
            if now >= before {
                self.violations.push(Violation {
                    invariant: "termination",
                    detail: format!("unexamined edges went from {before} to {now}"),
                });
            }
        }
        self.unexamined = Some(now);
    }
}

impl SearchObserver for InvariantChecker {
    fn search_started(&mut self, g: &Graph, m: &Matching, state: &SearchState) {
        self.unexamined = None;
        self.check_progress(g, state);
        self.record(g, m, state);
    }

    fn step(&mut self, g: &Graph, m: &Matching, step: &Step, state: &SearchState) {
        self.check_progress(g, state);
        if !matches!(step, Step::Found { .. }) {
            self.record(g, m, state);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn detects_broken_states() {
        let g = p4();
        let m = Matching::from_pairs([(2, 3)]).unwrap();
        let mut state = SearchState::default();
        state.labels.insert(1, Label::even(1));
        state.labels.insert(4, Label::even(4));
        assert!(check_invariants(&g, &m, &state).is_empty());

        // label one end of a matching edge only
        state.labels.insert(2, Label::odd(1));
        state.parent.insert(2, 1);
        let tags: BTreeSet<&str> = check_invariants(&g, &m, &state)
            .iter()
            .map(|v| v.invariant)
            .collect();
        assert!(tags.contains("I4"));
        assert!(tags.contains("I8"));
        assert!(tags.contains("I10"));

        let mut cyclic = SearchState::default();
        cyclic.parent.insert(1, 2);
        cyclic.parent.insert(2, 1);
        let tags: Vec<&str> = check_invariants(&g, &m, &cyclic).iter().map(|v| v.invariant).collect();
        assert!(tags.contains(&"I3"));
    }
}
