//! Canonical JSON documents for friezes (`fwc-v1`), triangulations
//! (`tri-v1`), embeddings (`embedding-v1`) and scripted extension choices
//! (`choices-v1`).
//!
//! Labels are decimal strings so arbitrarily large values survive any JSON
//! reader. Output is canonical: fields in declaration order, a single
//! space after every `,` and `:`, no other whitespace and no trailing
//! newline.

use std::io;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extend::{extend_step, ChoicePolicy, Embedding, ExtensionTrace, PrimeSelection, Scripted, StepSelection};
use crate::frieze::{Frieze, FriezeError, LabelTable};
use crate::triangulation::{triangulation_of, Triangulation};

pub const FRIEZE_FORMAT: &str = "fwc-v1";
pub const TRIANGULATION_FORMAT: &str = "tri-v1";
pub const EMBEDDING_FORMAT: &str = "embedding-v1";
pub const CHOICES_FORMAT: &str = "choices-v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error at {position}: {reason}")]
    Parse { position: String, reason: String },
    #[error("validation error: {0}")]
    Validation(String),
}

impl From<FriezeError> for DocumentError {
    fn from(e: FriezeError) -> Self {
        DocumentError::Validation(e.to_string())
    }
}

fn parse_err(position: impl Into<String>, reason: impl Into<String>) -> DocumentError {
    DocumentError::Parse {
        position: position.into(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FriezeDocument {
    pub format: String,
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationDocument {
    pub format: String,
    pub n: usize,
    pub diagonals: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeStepDocument {
    pub p: String,
    pub ell: u32,
    pub m: u32,
    pub ip: usize,
    pub residue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDocument {
    pub edge: [usize; 2],
    pub c0: String,
    pub primes: Vec<PrimeStepDocument>,
    pub y0: String,
    pub frame: Vec<usize>,
    pub y: Vec<String>,
    pub new_vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingDocument {
    pub format: String,
    pub input: FriezeDocument,
    pub frieze: FriezeDocument,
    pub triangulation: TriangulationDocument,
    pub vertex_map: Vec<usize>,
    pub steps: Vec<StepDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChoicePrimeDocument {
    pub p: String,
    pub ip: usize,
    pub residue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChoiceStepDocument {
    pub edge: [usize; 2],
    pub primes: Vec<ChoicePrimeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChoicesDocument {
    pub format: String,
    pub steps: Vec<ChoiceStepDocument>,
}

/// Formatter writing `", "` and `": "` separators and nothing else.
struct Canonical;

impl serde_json::ser::Formatter for Canonical {
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

/// Serialize any document canonically.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Canonical);
    doc.serialize(&mut ser).expect("documents serialize infallibly");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, DocumentError> {
    serde_json::from_str(text).map_err(|e| {
        parse_err(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

fn expect_format(found: &str, expected: &str) -> Result<(), DocumentError> {
    if found == expected {
        Ok(())
    } else {
        Err(parse_err("format", format!("expected \"{expected}\", found \"{found}\"")))
    }
}

/// Parse a base-10 label: ASCII digits only, no leading zeros.
pub fn parse_decimal(s: &str, position: &str) -> Result<BigUint, DocumentError> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return Err(parse_err(position, format!("\"{s}\" is not a decimal integer")));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(parse_err(position, format!("\"{s}\" has leading zeros")));
    }
    Ok(s.parse().expect("digits only"))
}

pub fn frieze_document(f: &Frieze) -> FriezeDocument {
    FriezeDocument {
        format: FRIEZE_FORMAT.into(),
        n: f.n(),
        rows: f
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect(),
    }
}

/// Shape-checked labels of a frieze document, without Ptolemy validation.
pub fn table_from_document(doc: &FriezeDocument) -> Result<LabelTable, DocumentError> {
    expect_format(&doc.format, FRIEZE_FORMAT)?;
    let rows = doc
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(k, s)| parse_decimal(s, &format!("rows[{i}][{k}]")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LabelTable::from_rows(doc.n, rows)?)
}

pub fn frieze_from_document(doc: &FriezeDocument) -> Result<Frieze, DocumentError> {
    Ok(Frieze::try_from(table_from_document(doc)?)?)
}

pub fn parse_frieze_table(text: &str) -> Result<LabelTable, DocumentError> {
    table_from_document(&from_json(text)?)
}

pub fn parse_frieze(text: &str) -> Result<Frieze, DocumentError> {
    frieze_from_document(&from_json(text)?)
}

pub fn serialize_frieze(f: &Frieze) -> String {
    to_canonical_json(&frieze_document(f))
}

pub fn triangulation_document(t: &Triangulation) -> TriangulationDocument {
    TriangulationDocument {
        format: TRIANGULATION_FORMAT.into(),
        n: t.n(),
        diagonals: t.diagonals().iter().map(|&(i, j)| [i, j]).collect(),
    }
}

pub fn triangulation_from_document(doc: &TriangulationDocument) -> Result<Triangulation, DocumentError> {
    expect_format(&doc.format, TRIANGULATION_FORMAT)?;
    if doc.diagonals.windows(2).any(|w| w[0] >= w[1]) || doc.diagonals.iter().any(|d| d[0] >= d[1]) {
        return Err(DocumentError::Validation(
            "diagonals must be [i, j] pairs with i < j in increasing order".into(),
        ));
    }
    Triangulation::new(doc.n, doc.diagonals.iter().map(|d| (d[0], d[1])).collect())
        .map_err(|e| DocumentError::Validation(e.to_string()))
}

pub fn parse_triangulation(text: &str) -> Result<Triangulation, DocumentError> {
    triangulation_from_document(&from_json(text)?)
}

pub fn serialize_triangulation(t: &Triangulation) -> String {
    to_canonical_json(&triangulation_document(t))
}

fn step_document(t: &ExtensionTrace) -> StepDocument {
    StepDocument {
        edge: [t.choice.edge.0, t.choice.edge.1],
        c0: t.c0.to_string(),
        primes: t
            .choice
            .per_prime
            .iter()
            .map(|l| PrimeStepDocument {
                p: l.p.to_string(),
                ell: l.ell,
                m: l.m,
                ip: l.chosen_ip.expect("traced choices are complete"),
                residue: l
                    .chosen_residue
                    .as_ref()
                    .expect("traced choices are complete")
                    .to_string(),
            })
            .collect(),
        y0: t.y0_mod_c0.to_string(),
        frame: t.frame.clone(),
        y: t.y.iter().map(|v| v.to_string()).collect(),
        new_vertex: t.new_vertex,
    }
}

pub fn embedding_document(e: &Embedding) -> EmbeddingDocument {
    EmbeddingDocument {
        format: EMBEDDING_FORMAT.into(),
        input: frieze_document(&e.input),
        frieze: frieze_document(&e.cc),
        triangulation: triangulation_document(&e.tri),
        vertex_map: e.vertex_map.clone(),
        steps: e.traces.iter().map(step_document).collect(),
    }
}

pub fn serialize_embedding(e: &Embedding) -> String {
    to_canonical_json(&embedding_document(e))
}

fn step_selection(doc: &ChoiceStepDocument, at: &str) -> Result<StepSelection, DocumentError> {
    let primes = doc
        .primes
        .iter()
        .enumerate()
        .map(|(k, p)| {
            Ok(PrimeSelection {
                p: parse_decimal(&p.p, &format!("{at}.primes[{k}].p"))?,
                ip: p.ip,
                residue: parse_decimal(&p.residue, &format!("{at}.primes[{k}].residue"))?,
            })
        })
        .collect::<Result<Vec<_>, DocumentError>>()?;
    Ok(StepSelection {
        edge: (doc.edge[0], doc.edge[1]),
        primes,
    })
}

/// Load an embedding by replaying its recorded steps on the input and
/// checking every recorded value, the final frieze, its triangulation and
/// the vertex map.
pub fn embedding_from_document(doc: &EmbeddingDocument) -> Result<Embedding, DocumentError> {
    expect_format(&doc.format, EMBEDDING_FORMAT)?;
    let input = frieze_from_document(&doc.input)?;
    let cc = frieze_from_document(&doc.frieze)?;
    let tri = triangulation_from_document(&doc.triangulation)?;
    let steps = doc
        .steps
        .iter()
        .enumerate()
        .map(|(k, s)| {
            step_selection(
                &ChoiceStepDocument {
                    edge: s.edge,
                    primes: s
                        .primes
                        .iter()
                        .map(|p| ChoicePrimeDocument {
                            p: p.p.clone(),
                            ip: p.ip,
                            residue: p.residue.clone(),
                        })
                        .collect(),
                },
                &format!("steps[{k}]"),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut policy = Scripted::new(steps);
    let mut cur = input.clone();
    let mut vertex_map: Vec<usize> = (0..input.n()).collect();
    let mut traces = Vec::new();
    for (k, step) in doc.steps.iter().enumerate() {
        let fail = |e: String| DocumentError::Validation(format!("step {k}: {e}"));
        let choice = policy.choose(&cur, k).map_err(|e| fail(e.to_string()))?;
        let (next, trace) = extend_step(&cur, &choice).map_err(|e| fail(e.to_string()))?;
        if step_document(&trace) != *step {
            return Err(fail("recorded values differ from the recomputed step".into()));
        }
        for v in &mut vertex_map {
            if *v >= trace.new_vertex {
                *v += 1;
            }
        }
        traces.push(trace);
        cur = next;
    }
    if cur != cc {
        return Err(DocumentError::Validation(
            "replayed steps do not produce the recorded frieze".into(),
        ));
    }
    if vertex_map != doc.vertex_map {
        return Err(DocumentError::Validation("vertex map does not match the steps".into()));
    }
    if triangulation_of(&cc).as_ref() != Ok(&tri) {
        return Err(DocumentError::Validation(
            "triangulation does not match the frieze".into(),
        ));
    }
    let e = Embedding {
        input,
        cc,
        tri,
        vertex_map,
        traces,
    };
    if !e.verify() {
        return Err(DocumentError::Validation("embedding does not restrict to its input".into()));
    }
    Ok(e)
}

pub fn parse_embedding(text: &str) -> Result<Embedding, DocumentError> {
    embedding_from_document(&from_json(text)?)
}

pub fn parse_choices(text: &str) -> Result<Vec<StepSelection>, DocumentError> {
    let doc: ChoicesDocument = from_json(text)?;
    expect_format(&doc.format, CHOICES_FORMAT)?;
    doc.steps
        .iter()
        .enumerate()
        .map(|(k, s)| step_selection(s, &format!("steps[{k}]")))
        .collect()
}

pub fn serialize_choices(steps: &[StepSelection]) -> String {
    to_canonical_json(&ChoicesDocument {
        format: CHOICES_FORMAT.into(),
        steps: steps
            .iter()
            .map(|s| ChoiceStepDocument {
                edge: [s.edge.0, s.edge.1],
                primes: s
                    .primes
                    .iter()
                    .map(|p| ChoicePrimeDocument {
                        p: p.p.to_string(),
                        ip: p.ip,
                        residue: p.residue.to_string(),
                    })
                    .collect(),
            })
            .collect(),
    })
}

/// The `format` tag of a document, for dispatching on file contents.
pub fn format_tag(text: &str) -> Result<String, DocumentError> {
    #[derive(Deserialize)]
    struct Tag {
        format: String,
    }
    Ok(from_json::<Tag>(text)?.format)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::fixtures::square_12;

    const SQUARE: &str = r#"{"format": "fwc-v1", "n": 4, "rows": [["2", "26", "12"], ["4", "2"], ["2"]]}"#;

    #[test]
    fn parse_and_serialize_square() {
        let f = parse_frieze(SQUARE).unwrap();
        assert_eq!(f, square_12());
        assert_eq!(serialize_frieze(&f), SQUARE);
    }

    #[test]
    fn ptolemy_failure_on_load() {
        let bad = r#"{"format": "fwc-v1", "n": 4, "rows": [["3", "5", "3"], ["3", "3"], ["3"]]}"#;
        match parse_frieze(bad) {
            Err(DocumentError::Validation(msg)) => assert!(msg.contains("(0, 1, 2, 3)"), "{msg}"),
            other => panic!("{other:?}"),
        }
        assert!(!parse_frieze_table(bad).unwrap().verify_ptolemy().ok());
    }

    #[test]
    fn parse_errors() {
        let lead = r#"{"format": "fwc-v1", "n": 3, "rows": [["01", "1"], ["1"]]}"#;
        assert!(matches!(parse_frieze(lead), Err(DocumentError::Parse { position, .. }) if position == "rows[0][0]"));
        let num = r#"{"format": "fwc-v1", "n": 3, "rows": [[1, "1"], ["1"]]}"#;
        assert!(matches!(parse_frieze(num), Err(DocumentError::Parse { .. })));
        let tag = r#"{"format": "fwc-v2", "n": 3, "rows": [["1", "1"], ["1"]]}"#;
        assert!(matches!(parse_frieze(tag), Err(DocumentError::Parse { .. })));
        let zero = r#"{"format": "fwc-v1", "n": 3, "rows": [["0", "1"], ["1"]]}"#;
        assert!(matches!(parse_frieze(zero), Err(DocumentError::Validation(_))));
        let shape = r#"{"format": "fwc-v1", "n": 4, "rows": [["1", "1"], ["1"]]}"#;
        assert!(matches!(parse_frieze(shape), Err(DocumentError::Validation(_))));
        assert!(matches!(parse_frieze("{"), Err(DocumentError::Parse { .. })));
    }

    #[test]
    fn triangulation_documents() {
        let text = r#"{"format": "tri-v1", "n": 6, "diagonals": [[1, 3], [1, 4], [1, 5]]}"#;
        let t = parse_triangulation(text).unwrap();
        assert_eq!(serialize_triangulation(&t), text);
        let unsorted = r#"{"format": "tri-v1", "n": 6, "diagonals": [[1, 4], [1, 3], [1, 5]]}"#;
        assert!(matches!(parse_triangulation(unsorted), Err(DocumentError::Validation(_))));
    }

    #[test]
    fn embedding_round_trip() {
        let e = crate::extend::embed(&square_12(), &mut crate::extend::SmallestChoice).unwrap();
        let text = serialize_embedding(&e);
        let back = parse_embedding(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(serialize_embedding(&back), text);
        let tampered = text.replacen("\"vertex_map\": [0", "\"vertex_map\": [1", 1);
        assert!(parse_embedding(&tampered).is_err());
    }

    #[test]
    fn choices_round_trip() {
        let steps = vec![StepSelection {
            edge: (3, 0),
            primes: vec![PrimeSelection {
                p: BigUint::from(2u32),
                ip: 2,
                residue: BigUint::from(1u32),
            }],
        }];
        let text = serialize_choices(&steps);
        assert_eq!(parse_choices(&text).unwrap(), steps);
        assert_eq!(format_tag(&text).unwrap(), CHOICES_FORMAT);
    }
}
