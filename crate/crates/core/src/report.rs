//! Deterministic key-value report documents.
//!
//! Every command emits its results in this format: one `key = value` line
//! per entry, in insertion order, floats printed with a fixed exponent
//! format. Identical inputs therefore produce byte-identical documents, and
//! parsing a document back yields the same entries.

use std::fmt::Display;

use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ReportParseError {
    #[error("line {line}: missing ` = ` separator")]
    MissingSeparator { line: usize },
    #[error("line {line}: empty key")]
    EmptyKey { line: usize },
}

/// Ordered list of key-value entries.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Appends an entry. Keys must be nonempty, without newlines or the
    /// ` = ` separator; values must be single-line.
    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        let key = key.into();
        let value = value.to_string();
        assert!(!key.is_empty(), "empty report key");
        assert!(
            !key.contains('\n') && !key.contains(" = "),
            "malformed report key {key:?}"
        );
        assert!(!value.contains('\n'), "multi-line report value for {key}");
        self.entries.push((key, value));
    }

    /// Appends a float in the fixed `{:.12e}` format.
    pub fn push_f64(&mut self, key: impl Into<String>, value: f64) {
        self.push(key, format!("{value:.12e}"));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    /// Inverse of [`Report::to_text`]. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Report, ReportParseError> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(" = ")
                .ok_or(ReportParseError::MissingSeparator { line: i + 1 })?;
            if key.is_empty() {
                return Err(ReportParseError::EmptyKey { line: i + 1 });
            }
            entries.push((key.to_string(), value.to_string()));
        }
        Ok(Report { entries })
    }
}
