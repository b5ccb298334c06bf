//! The three subcommands, writing to injected streams and returning the
//! process exit code.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use blossom::oracle::max_matching_bruteforce;
use blossom::{solve, verify_certificate, Edge, Error, InvariantChecker, Matching};

use crate::dimacs::{parse_graph_file, GraphFile, ParseError};
use crate::files::{parse_certificate_file, parse_matching_file, write_certificate, write_matching};
use crate::trace::TraceWriter;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_REJECTED: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;
pub const EXIT_ORACLE_BOUND: u8 = 4;

/// Reads and parses `path`, reporting failures on `err`.
fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T, ParseError>, err: &mut dyn Write) -> Result<Option<T>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            return Ok(None);
        }
    };
    match parse(&text) {
        Ok(v) => Ok(Some(v)),
        Err(e) => {
            writeln!(err, "error: {}: {e}", path.display())?;
            Ok(None)
        }
    }
}

fn exit_code(result: Result<u8>, err: &mut dyn Write) -> u8 {
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e:#}");
        EXIT_INPUT
    })
}

pub fn run_solve(
    graph: &Path,
    certificate: Option<&Path>,
    trace: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let result = solve_inner(graph, certificate, trace, out, err);
    exit_code(result, err)
}

fn solve_inner(
    graph: &Path,
    certificate: Option<&Path>,
    trace: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let Some(GraphFile { graph: g, .. }) = load(graph, parse_graph_file, err)? else {
        return Ok(EXIT_INPUT);
    };

    let checker = cfg!(debug_assertions).then(InvariantChecker::default);
    let mut observer = (trace.then(|| TraceWriter::new(&mut *err)), checker);
    let solved = solve(&g, &mut observer);
    let (tracer, checker) = observer;
    if let Some(t) = tracer {
        t.finish().context("writing trace")?;
    }

    let solution = match solved {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "internal error: {e}")?;
            return Ok(EXIT_INTERNAL);
        }
    };
    if let Some(violations) = checker.as_ref().map(InvariantChecker::violations).filter(|v| !v.is_empty()) {
        for v in violations {
            writeln!(err, "invariant violated: {v}")?;
        }
        return Ok(EXIT_INTERNAL);
    }

    out.write_all(write_matching(&solution.matching).as_bytes())?;
    out.flush()?;
    if let Some(path) = certificate {
        fs::write(path, write_certificate(&solution.certificate))
            .with_context(|| format!("writing certificate {}", path.display()))?;
    }
    Ok(EXIT_OK)
}

pub fn run_verify(
    graph: &Path,
    matching: &Path,
    certificate: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let result = verify_inner(graph, matching, certificate, out, err);
    exit_code(result, err)
}

fn verify_inner(
    graph: &Path,
    matching: &Path,
    certificate: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let Some(GraphFile { graph: g, .. }) = load(graph, parse_graph_file, err)? else {
        return Ok(EXIT_INPUT);
    };
    let Some(edges) = load(matching, parse_matching_file, err)? else {
        return Ok(EXIT_INPUT);
    };
    let cert = match certificate {
        Some(path) => match load(path, parse_certificate_file, err)? {
            Some(c) => Some(c),
            None => return Ok(EXIT_INPUT),
        },
        None => None,
    };

    let edges: BTreeSet<Edge> = edges.into_iter().collect();
    let m = match Matching::new(edges.iter().copied()) {
        Ok(m) => m,
        Err(e) => {
            writeln!(out, "matching valid: false ({e})")?;
            return Ok(EXIT_REJECTED);
        }
    };
    if let Some(e) = m.edges().find(|e| !g.contains(e)) {
        writeln!(out, "matching valid: false (edge {} {} is not in the graph)", e.lo() + 1, e.hi() + 1)?;
        return Ok(EXIT_REJECTED);
    }
    writeln!(out, "matching valid: true, size {}", m.len())?;

    let Some(cert) = cert else {
        return Ok(EXIT_OK);
    };
    let report = verify_certificate(&g, &m, &cert);
    writeln!(out, "certificate: {} contraction(s), {} odd set(s)", cert.contractions.len(), cert.cover.len())?;
    writeln!(out, "{report}")?;
    Ok(if report.verdict { EXIT_OK } else { EXIT_REJECTED })
}

pub fn run_oracle(graph: &Path, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = oracle_inner(graph, out, err);
    exit_code(result, err)
}

fn oracle_inner(graph: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let Some(GraphFile { graph: g, .. }) = load(graph, parse_graph_file, err)? else {
        return Ok(EXIT_INPUT);
    };
    match max_matching_bruteforce(&g) {
        Ok(m) => {
            out.write_all(write_matching(&m).as_bytes())?;
            Ok(EXIT_OK)
        }
        Err(e @ Error::OracleBound(_)) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_ORACLE_BOUND)
        }
        Err(e) => {
            writeln!(err, "internal error: {e}")?;
            Ok(EXIT_INTERNAL)
        }
    }
}
