//! Line-per-iteration trace of the forest search, 1-based ids.

use std::io::{self, Write};

use blossom::search::Parity;
use blossom::{Graph, Matching, SearchObserver, SearchState, Step, Vertex};

pub struct TraceWriter<W: Write> {
    out: W,
    searches: usize,
    steps: usize,
    error: Option<io::Error>,
}

fn ids(vs: &[Vertex]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

impl<W: Write> TraceWriter<W> {
    pub fn new(out: W) -> Self {
        TraceWriter { out, searches: 0, steps: 0, error: None }
    }

    /// The first write error, if any occurred.
    pub fn finish(self) -> io::Result<()> {
        self.error.map_or(Ok(()), Err)
    }

    fn line(&mut self, text: std::fmt::Arguments<'_>) {
        if self.error.is_none() {
            if let Err(e) = self.out.write_fmt(text).and_then(|_| self.out.write_all(b"\n")) {
                self.error = Some(e);
            }
        }
    }
}

impl<W: Write> SearchObserver for TraceWriter<W> {
    fn search_started(&mut self, g: &Graph, m: &Matching, state: &SearchState) {
        self.searches += 1;
        self.steps = 0;
        let roots: Vec<Vertex> = state.labels.keys().copied().collect();
        let (n, k, s) = (g.vertices().len(), m.len(), self.searches);
        self.line(format_args!("search {s}: {n} vertices, matching size {k}, roots {}", ids(&roots)));
    }

    fn step(&mut self, _g: &Graph, _m: &Matching, step: &Step, state: &SearchState) {
        self.steps += 1;
        let i = self.steps;
        match *step {
            Step::Grow { v1, v2, v3, root } => self.line(format_args!(
                "  {i} edge {a} {b} grow: {b} odd/{r}, {c} even/{r}; parent[{b}] = {a}, parent[{c}] = {b}",
                a = v1 + 1,
                b = v2 + 1,
                c = v3 + 1,
                r = root + 1,
            )),
            Step::Skip { v1, v2 } => {
                debug_assert_eq!(state.parity(v2), Some(Parity::Odd));
                self.line(format_args!("  {i} edge {} {} skip: {} is odd", v1 + 1, v2 + 1, v2 + 1))
            }
            Step::Found { v1, v2 } => {
                let roots = (state.labels[&v1].root + 1, state.labels[&v2].root + 1);
                self.line(format_args!(
                    "  {i} edge {} {} found: both even, roots {} and {}",
                    v1 + 1,
                    v2 + 1,
                    roots.0,
                    roots.1
                ))
            }
        }
    }

    fn blossom_contracted(&mut self, stem: &[Vertex], cycle: &[Vertex], target: Vertex) {
        self.line(format_args!(
            "contract cycle [{}] stem [{}] into {}",
            ids(cycle),
            ids(stem),
            target + 1
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traces_triangle() {
        let g = Graph::from_pairs([(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut buf = Vec::new();
        let mut trace = TraceWriter::new(&mut buf);
        blossom::solve(&g, &mut trace).unwrap();
        trace.finish().unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("roots 3\n"), "{text}");
        assert!(text.contains("  1 edge 3 1 grow: 1 odd/3, 2 even/3; parent[1] = 3, parent[2] = 1\n"), "{text}");
        assert!(text.contains("  2 edge 2 3 found: both even, roots 3 and 3\n"), "{text}");
        assert!(text.contains("contract cycle [3 1 2 3] stem [] into 4\n"), "{text}");
    }
}
