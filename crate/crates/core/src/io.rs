//! Plain-text complex files.
//!
//! A complex file lists 4-simplices and optional squared edge lengths:
//!
//! ```text
//! # comment
//! simplex 0 1 2 3 4
//! simplex 1 2 3 4 5
//! length 0 1 1.0
//! plength 0 0 1 1.25
//! ```
//!
//! `simplex` takes five distinct vertex ids. `length` assigns a global
//! squared length to an edge. `plength` assigns a squared length to an edge
//! inside one simplex (0-based index of its `simplex` line), overriding the
//! global value there.

use std::fmt::Write as _;

use thiserror::Error;

use crate::complex::{ComplexError, Simplex, SimplicialComplex};
use crate::geometry::{GeometryError, PerSimplexLengths, SquaredLengthMap};

#[derive(Clone, PartialEq, Debug, Error)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Structure(#[from] ComplexError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("simplex {simplex} has no squared length for edge {edge}")]
    UncoveredEdge { simplex: Simplex, edge: Simplex },
}

/// Parsed complex file: simplex rows plus length assignments, in file
/// order.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ComplexFile {
    pub simplices: Vec<[u32; 5]>,
    pub global_lengths: Vec<(u32, u32, f64)>,
    /// (simplex line index, vertex, vertex, squared length)
    pub per_simplex_lengths: Vec<(usize, u32, u32, f64)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_length_args(words: &[&str], line: usize) -> Result<(u32, u32, f64), FileError> {
    if words.len() != 3 {
        return Err(parse_error(line, "expected two vertex ids and a value"));
    }
    let a: u32 = words[0]
        .parse()
        .map_err(|_| parse_error(line, format!("bad vertex id {:?}", words[0])))?;
    let b: u32 = words[1]
        .parse()
        .map_err(|_| parse_error(line, format!("bad vertex id {:?}", words[1])))?;
    let x: f64 = words[2]
        .parse()
        .map_err(|_| parse_error(line, format!("bad length value {:?}", words[2])))?;
    Ok((a, b, x))
}

impl ComplexFile {
    pub fn parse(text: &str) -> Result<ComplexFile, FileError> {
        let mut file = ComplexFile::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let keyword = words.next().unwrap();
            let rest: Vec<&str> = words.collect();
            match keyword {
                "simplex" => {
                    if rest.len() != 5 {
                        return Err(parse_error(line, "simplex takes five vertex ids"));
                    }
                    let mut vs = [0u32; 5];
                    for (slot, word) in vs.iter_mut().zip(&rest) {
                        *slot = word
                            .parse()
                            .map_err(|_| parse_error(line, format!("bad vertex id {word:?}")))?;
                    }
                    file.simplices.push(vs);
                }
                "length" => {
                    let (a, b, x) = parse_length_args(&rest, line)?;
                    file.global_lengths.push((a, b, x));
                }
                "plength" => {
                    if rest.len() != 4 {
                        return Err(parse_error(
                            line,
                            "plength takes simplex index, two vertex ids, value",
                        ));
                    }
                    let s: usize = rest[0]
                        .parse()
                        .map_err(|_| parse_error(line, format!("bad simplex index {:?}", rest[0])))?;
                    let (a, b, x) = parse_length_args(&rest[1..], line)?;
                    file.per_simplex_lengths.push((s, a, b, x));
                }
                other => {
                    return Err(parse_error(line, format!("unknown keyword {other:?}")));
                }
            }
        }
        for &(s, ..) in &file.per_simplex_lengths {
            if s >= file.simplices.len() {
                return Err(parse_error(0, format!("plength references simplex {s}")));
            }
        }
        Ok(file)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for vs in &self.simplices {
            let _ = writeln!(
                out,
                "simplex {} {} {} {} {}",
                vs[0], vs[1], vs[2], vs[3], vs[4]
            );
        }
        for &(a, b, x) in &self.global_lengths {
            let _ = writeln!(out, "length {a} {b} {x:.12e}");
        }
        for &(s, a, b, x) in &self.per_simplex_lengths {
            let _ = writeln!(out, "plength {s} {a} {b} {x:.12e}");
        }
        out
    }

    pub fn build_complex(&self) -> Result<SimplicialComplex, FileError> {
        Ok(SimplicialComplex::build(&self.simplices)?)
    }

    pub fn has_lengths(&self) -> bool {
        !self.global_lengths.is_empty() || !self.per_simplex_lengths.is_empty()
    }

    /// Global squared-length map from the `length` lines.
    pub fn global_length_map(&self) -> Result<SquaredLengthMap, FileError> {
        let mut map = SquaredLengthMap::new();
        for &(a, b, x) in &self.global_lengths {
            let edge = Simplex::new([a, b])?;
            map.insert(edge, x)?;
        }
        Ok(map)
    }

    /// Per-simplex assignment: `plength` where given, else the global
    /// value. Every edge of every simplex must end up covered.
    pub fn per_simplex_length_map(
        &self,
        complex: &SimplicialComplex,
    ) -> Result<PerSimplexLengths, FileError> {
        let global = self.global_length_map()?;
        let mut per = PerSimplexLengths::uniform(complex, 1.0);
        let mut uncovered = Vec::new();
        for simplex in complex.four_simplices() {
            for edge in simplex.edges() {
                match global.get(&edge) {
                    Some(x) => per.set(simplex.clone(), edge, x)?,
                    None => uncovered.push((simplex.clone(), edge)),
                }
            }
        }
        let mut overridden = std::collections::BTreeSet::new();
        for &(s, a, b, x) in &self.per_simplex_lengths {
            let simplex = Simplex::new(self.simplices[s])?;
            let edge = Simplex::new([a, b])?;
            per.set(simplex.clone(), edge.clone(), x)?;
            overridden.insert((simplex, edge));
        }
        if let Some((simplex, edge)) = uncovered
            .into_iter()
            .find(|pair| !overridden.contains(pair))
        {
            return Err(FileError::UncoveredEdge { simplex, edge });
        }
        Ok(per)
    }
}

/// Renders a complex plus uniform unit lengths as a file.
pub fn fixture_text(complex: &SimplicialComplex) -> String {
    let mut file = ComplexFile::default();
    for simplex in complex.four_simplices() {
        let vs = simplex.vertices();
        file.simplices
            .push([vs[0].0, vs[1].0, vs[2].0, vs[3].0, vs[4].0]);
    }
    for edge in complex.faces(1) {
        let vs = edge.vertices();
        file.global_lengths.push((vs[0].0, vs[1].0, 1.0));
    }
    file.to_text()
}
