//! Matching files (`s <size>` then `m u v` lines) and certificate files
//! (`t` stem / `k` contraction line pairs, then `s` odd set lines). All
//! vertex ids are 1-based on disk.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use blossom::{Certificate, ContractionStep, Edge, Matching, Path, Vertex};

use crate::dimacs::{edge_fields, fields, vertex_id, ParseError, ParseErrorKind};

/// Matched edges as listed. They are not required to form a matching;
/// that is for the verifier to report.
pub fn parse_matching_file(text: &str) -> Result<Vec<Edge>, ParseError> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (line, f) in fields(text) {
        last_line = line;
        let malformed = || ParseErrorKind::MalformedLine(f.join(" ")).at(line);
        match f.as_slice() {
            ["s", k] if declared.is_none() => declared = Some(k.parse::<usize>().map_err(|_| malformed())?),
            ["m", a, b] => edges.push(edge_fields(a, b, None, line, &f)?),
            _ => return Err(malformed()),
        }
    }
    if let Some(declared) = declared {
        if declared != edges.len() {
            return Err(ParseErrorKind::SizeMismatch { declared, found: edges.len() }.at(last_line));
        }
    }
    Ok(edges)
}

pub fn write_matching(m: &Matching) -> String {
    let mut out = format!("s {}\n", m.len());
    for e in m.edges() {
        writeln!(out, "m {} {}", e.lo() + 1, e.hi() + 1).expect("writing to a string");
    }
    out
}

fn ids(fields: &[&str], line: usize, raw: &[&str]) -> Result<Vec<Vertex>, ParseError> {
    fields.iter().map(|x| vertex_id(x, None, line, raw)).collect()
}

fn one_based(vs: &[Vertex]) -> String {
    vs.iter().map(|v| format!(" {}", v + 1)).collect()
}

pub fn parse_certificate_file(text: &str) -> Result<Certificate, ParseError> {
    let mut cert = Certificate::default();
    let mut stem: Option<(usize, Path)> = None;
    for (line, f) in fields(text) {
        let malformed = || ParseErrorKind::MalformedLine(f.join(" ")).at(line);
        match f[0] {
            "t" if stem.is_none() => stem = Some((line, ids(&f[1..], line, &f)?)),
            "k" if f.len() >= 3 => {
                let target = vertex_id(f[1], None, line, &f)?;
                let cycle = ids(&f[2..], line, &f)?;
                let stem = stem.take().map(|(_, s)| s).unwrap_or_default();
                cert.contractions.push(ContractionStep { stem, cycle, target });
            }
            "s" if f.len() >= 2 && stem.is_none() => {
                let vs = ids(&f[1..], line, &f)?;
                let set: BTreeSet<Vertex> = vs.iter().copied().collect();
                if set.len() != vs.len() {
                    return Err(malformed());
                }
                cert.cover.push(set);
            }
            _ => return Err(malformed()),
        }
    }
    if let Some((line, _)) = stem {
        return Err(ParseErrorKind::MalformedLine("`t` line without a following `k` line".into()).at(line));
    }
    Ok(cert)
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "c {} contraction(s), then an odd set cover of the final graph", cert.contractions.len()).unwrap();
    for step in &cert.contractions {
        writeln!(w, "t{}", one_based(&step.stem)).unwrap();
        writeln!(w, "k {}{}", step.target + 1, one_based(&step.cycle)).unwrap();
    }
    for set in cert.cover.sets() {
        let vs: Vec<Vertex> = set.iter().copied().collect();
        writeln!(w, "s{}", one_based(&vs)).unwrap();
    }
    out
}
