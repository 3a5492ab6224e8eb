//! JSON document format for complexes.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Complex, ComplexError};
use crate::algebra::{BasisPath, EdgeKind, Element, GradingMode, Orientation};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub rank: usize,
    pub grading_mode: ModeDoc,
    pub summands: Vec<SummandDoc>,
    pub differential: Vec<EntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModeDoc {
    Named(String),
    Custom { custom: Vec<EdgeDoc> },
}

/// An edge `x(i,j)` or `y(i,j)` and whether it is oriented `i -> j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub edge: String,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummandDoc {
    pub uid: usize,
    pub vertex: usize,
    pub shift: i64,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub src: usize,
    pub tgt: usize,
    pub entry: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub path: String,
    pub numerator: Integer,
    pub denominator: Integer,
}

/// An integer written as a JSON number when it fits in `i64`, else a string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Integer {
    Small(i64),
    Big(String),
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        match i64::try_from(&v) {
            Ok(s) => Integer::Small(s),
            Err(_) => Integer::Big(v.to_string()),
        }
    }
}

impl Integer {
    fn to_bigint(&self) -> Result<BigInt, ComplexError> {
        match self {
            Integer::Small(v) => Ok(BigInt::from(*v)),
            Integer::Big(s) => s.parse().map_err(|_| ComplexError::Format(format!("bad integer {s:?}"))),
        }
    }
}

fn edge_name(kind: EdgeKind, i: usize, j: usize) -> String {
    match kind {
        EdgeKind::X => BasisPath::EdgeX(i, j).to_string(),
        EdgeKind::Y => BasisPath::EdgeY(i, j).to_string(),
    }
}

fn mode_doc(mode: &GradingMode) -> ModeDoc {
    match mode {
        GradingMode::OrientCustom(o) => ModeDoc::Custom {
            custom: o
                .iter()
                .map(|((kind, i, j), forward)| EdgeDoc { edge: edge_name(kind, i, j), forward })
                .collect(),
        },
        other => ModeDoc::Named(other.name().to_string()),
    }
}

fn parse_mode(doc: &ModeDoc) -> Result<GradingMode, ComplexError> {
    match doc {
        ModeDoc::Named(s) => s.parse().map_err(|_| ComplexError::Format(format!("unknown grading mode {s:?}"))),
        ModeDoc::Custom { custom } => {
            let mut o = Orientation::new();
            for e in custom {
                let p: BasisPath = e.edge.parse().map_err(|_| ComplexError::Format(format!("bad edge {:?}", e.edge)))?;
                match p {
                    BasisPath::EdgeX(i, j) => o.set(EdgeKind::X, i, j, e.forward),
                    BasisPath::EdgeY(i, j) => o.set(EdgeKind::Y, i, j, e.forward),
                    _ => return Err(ComplexError::Format(format!("{:?} is not an x or y edge", e.edge))),
                }
            }
            Ok(GradingMode::OrientCustom(o))
        }
    }
}

impl<S: ExactScalar> Complex<S> {
    pub fn to_doc(&self) -> ComplexDoc {
        ComplexDoc {
            rank: self.rank,
            grading_mode: mode_doc(&self.mode),
            summands: self
                .summands
                .iter()
                .map(|s| SummandDoc { uid: s.uid, vertex: s.vertex, shift: s.shift, degree: s.degree })
                .collect(),
            differential: self
                .entries()
                .map(|(src, tgt, e)| EntryDoc {
                    src,
                    tgt,
                    entry: e
                        .terms()
                        .iter()
                        .map(|(p, c)| {
                            let (n, d) = c.to_fraction();
                            TermDoc { path: p.to_string(), numerator: n.into(), denominator: d.into() }
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Parses a document; uids may be arbitrary distinct integers.
    pub fn from_doc(doc: &ComplexDoc) -> Result<Self, ComplexError> {
        let mode = parse_mode(&doc.grading_mode)?;
        let mut pos = std::collections::HashMap::new();
        for (k, s) in doc.summands.iter().enumerate() {
            if pos.insert(s.uid, k).is_some() {
                return Err(ComplexError::Format(format!("duplicate uid {}", s.uid)));
            }
        }
        let parts = doc.summands.iter().map(|s| (s.vertex, s.shift, s.degree)).collect();
        let mut entries = Vec::new();
        for e in &doc.differential {
            let src = *pos.get(&e.src).ok_or(ComplexError::UnknownSummand(e.src))?;
            let tgt = *pos.get(&e.tgt).ok_or(ComplexError::UnknownSummand(e.tgt))?;
            let mut terms = Vec::new();
            for t in &e.entry {
                let p: BasisPath = t.path.parse().map_err(|_| ComplexError::Format(format!("bad path {:?}", t.path)))?;
                let c = S::from_fraction(t.numerator.to_bigint()?, t.denominator.to_bigint()?)
                    .ok_or_else(|| ComplexError::Format(format!("bad coefficient in {:?}", t.path)))?;
                terms.push((p, c));
            }
            entries.push((src, tgt, Element::from_terms(terms)));
        }
        Complex::from_parts(doc.rank, mode, parts, entries)
    }
}

pub fn to_json<S: ExactScalar>(c: &Complex<S>) -> String {
    serde_json::to_string_pretty(&c.to_doc()).expect("documents serialize")
}

pub fn from_json<S: ExactScalar>(s: &str) -> Result<Complex<S>, ComplexError> {
    let doc: ComplexDoc = serde_json::from_str(s).map_err(|e| ComplexError::Format(e.to_string()))?;
    Complex::from_doc(&doc)
}
