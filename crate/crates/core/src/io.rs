//! Plain-text and structured (JSON) complex formats.
//!
//! Plain text: one facet per line, whitespace-separated vertex labels, lines whose
//! first non-blank character is `#` are comments, blank lines are skipped. A line
//! holding only `{}` is the empty face.
//!
//! Structured: `{"n": 6, "vertices": [...], "facets": [[...], ...]}` where `n` and
//! `vertices` are optional and labels may be JSON strings or integers.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::{Canonicalized, SimplicialComplex};
use crate::error::{Error, Result};

pub const EMPTY_FACE_TOKEN: &str = "{}";

pub fn parse_plain(text: &str) -> Result<Canonicalized> {
    let mut facets: Vec<Vec<String>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed == EMPTY_FACE_TOKEN {
            facets.push(Vec::new());
            continue;
        }
        let mut facet: Vec<String> = Vec::new();
        let mut offset = 0;
        for tok in line.split_whitespace() {
            let col = line[offset..].find(tok).map(|p| p + offset).unwrap_or(offset);
            offset = col + tok.len();
            if tok.contains('#') || tok.contains('{') || tok.contains('}') {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column: col + 1,
                    message: format!("invalid vertex label `{tok}`"),
                });
            }
            if facet.iter().any(|l| l == tok) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column: col + 1,
                    message: format!("vertex `{tok}` repeated in facet"),
                });
            }
            facet.push(tok.to_string());
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(&facets)
}

/// Canonical plain-text rendering: facets in canonical order, labels in vertex order.
pub fn to_plain(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in complex.facets() {
        if f.is_empty() {
            out.push_str(EMPTY_FACE_TOKEN);
        } else {
            out.push_str(&complex.face_labels(f).join(" "));
        }
        out.push('\n');
    }
    out
}

/// Vertex label in the structured format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Str(String),
}

impl Label {
    fn into_string(self) -> String {
        match self {
            Label::Int(i) => i.to_string(),
            Label::Str(s) => s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Label>>,
    pub facets: Vec<Vec<Label>>,
}

impl ComplexDocument {
    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        let numeric = complex.labels().iter().all(|l| l.parse::<i64>().is_ok());
        let label = |s: &str| {
            if numeric {
                Label::Int(s.parse().unwrap())
            } else {
                Label::Str(s.to_string())
            }
        };
        ComplexDocument {
            n: Some(complex.n()),
            vertices: Some(complex.labels().iter().map(|l| label(l)).collect()),
            facets: complex
                .facets()
                .iter()
                .map(|f| complex.face_labels(f).iter().map(|l| label(l)).collect())
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let facets: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| f.iter().cloned().map(Label::into_string).collect())
            .collect();
        let vertices: Vec<String> = self
            .vertices
            .clone()
            .unwrap_or_default()
            .into_iter()
            .map(Label::into_string)
            .collect();
        let built = SimplicialComplex::from_facets_with_universe(&facets, &vertices)?.complex;
        if self.vertices.is_some() && built.n() != vertices.len() {
            return Err(Error::Malformed(
                "facets use vertices missing from the `vertices` list (or the list repeats a label)".into(),
            ));
        }
        match self.n {
            Some(n) if n < built.n() => Err(Error::UniverseTooSmall { n, needed: built.n() }),
            Some(n) => Ok(built.with_universe(n)),
            None => Ok(built),
        }
    }
}

pub fn parse_json(text: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_complex()
}

pub fn to_json(complex: &SimplicialComplex) -> String {
    let mut s = serde_json::to_string(&ComplexDocument::from_complex(complex)).expect("document serializes");
    let _ = writeln!(s);
    s
}

/// Parses either format, choosing JSON when the first non-blank character is `{`
/// followed by a quote or whitespace.
pub fn parse_auto(text: &str) -> Result<SimplicialComplex> {
    let t = text.trim_start();
    if t.starts_with('{') && t.trim() != EMPTY_FACE_TOKEN && !t.starts_with("{}\n") {
        parse_json(text)
    } else {
        Ok(parse_plain(text)?.complex)
    }
}
