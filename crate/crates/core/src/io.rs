//! JSON documents for systems, classical structures and censuses.
//!
//! Every document carries a mandatory `kind` tag. Tables use the same flat
//! index conventions as the in-memory types: `(a * n + b) * n + c` for `p`,
//! `a * n + b` for binary operations.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classical::{ClassicalError, ClassicalStructure, DeMorganAlgebra, MVAlgebra, NearRing, Ring2};
use crate::search::{ModelCensus, SearchStats};
use crate::structures::{StructureError, TernarySystem};

pub const KINDS: [&str; 6] = ["ternary-system", "de-morgan", "mv", "ring2", "near-ring", "census"];

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("missing `kind` field (expected one of {})", KINDS.join(", "))]
    MissingKind,
    #[error("unknown kind `{0}` (expected one of {})", KINDS.join(", "))]
    UnknownKind(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Classical(#[from] ClassicalError),
    #[error("a ring2 document must have char2 = true")]
    RingNotChar2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub zero: usize,
    pub one: usize,
    pub p: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeMorganDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub meet: Vec<usize>,
    pub join: Vec<usize>,
    pub bar: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MvDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub circ: Vec<usize>,
    pub bar: Vec<usize>,
    pub zero: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    pub zero: usize,
    pub one: usize,
    #[serde(default = "yes")]
    pub char2: bool,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDoc {
    pub size: usize,
    pub axioms: Vec<String>,
    pub up_to_iso: bool,
    pub complete: bool,
    pub total: u64,
    pub iso_classes: u64,
    pub representatives: Vec<Document>,
    pub stats: StatsDoc,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub pinned: u64,
    pub nodes: u64,
    pub propagations: u64,
    pub prunes: u64,
    pub rejected: u64,
    pub subtrees: u64,
}

impl From<&SearchStats> for StatsDoc {
    fn from(s: &SearchStats) -> StatsDoc {
        StatsDoc {
            pinned: s.pinned,
            nodes: s.nodes,
            propagations: s.propagations,
            prunes: s.prunes,
            rejected: s.rejected,
            subtrees: s.subtrees,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Document {
    #[serde(rename = "ternary-system")]
    TernarySystem(SystemDoc),
    #[serde(rename = "de-morgan")]
    DeMorgan(DeMorganDoc),
    #[serde(rename = "mv")]
    Mv(MvDoc),
    #[serde(rename = "ring2")]
    Ring2(RingDoc),
    #[serde(rename = "near-ring")]
    NearRing(RingDoc),
    #[serde(rename = "census")]
    Census(CensusDoc),
}

/// A loaded, validated document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    System(TernarySystem),
    Classical(ClassicalStructure),
    Census(CensusDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::TernarySystem(_) => "ternary-system",
            Document::DeMorgan(_) => "de-morgan",
            Document::Mv(_) => "mv",
            Document::Ring2(_) => "ring2",
            Document::NearRing(_) => "near-ring",
            Document::Census(_) => "census",
        }
    }

    /// Builds the in-memory value, validating shapes. Classical laws are not
    /// checked here.
    pub fn load(self) -> Result<Loaded, IoError> {
        Ok(match self {
            Document::TernarySystem(d) => Loaded::System(system_from_doc(d)?),
            Document::DeMorgan(d) => Loaded::Classical(ClassicalStructure::DeMorgan(DeMorganAlgebra::new(
                d.size, d.meet, d.join, d.bar, d.zero, d.one, d.labels,
            )?)),
            Document::Mv(d) => {
                Loaded::Classical(ClassicalStructure::Mv(MVAlgebra::new(d.size, d.circ, d.bar, d.zero, d.labels)?))
            }
            Document::Ring2(d) => {
                if !d.char2 {
                    return Err(IoError::RingNotChar2);
                }
                Loaded::Classical(ClassicalStructure::Ring(Ring2::new(
                    d.size, d.add, d.mul, d.zero, d.one, d.labels,
                )?))
            }
            Document::NearRing(d) => Loaded::Classical(ClassicalStructure::NearRing(NearRing::new(
                d.size, d.add, d.mul, d.zero, d.one, d.char2, d.labels,
            )?)),
            Document::Census(c) => Loaded::Census(c),
        })
    }
}

fn system_from_doc(d: SystemDoc) -> Result<TernarySystem, StructureError> {
    let sys = TernarySystem::new(d.size, d.zero, d.one, d.p)?;
    match d.labels {
        Some(l) => sys.with_labels(l),
        None => Ok(sys),
    }
}

pub fn system_doc(sys: &TernarySystem) -> Document {
    Document::TernarySystem(SystemDoc {
        size: sys.size(),
        labels: sys.labels().map(|l| l.to_vec()),
        zero: sys.zero(),
        one: sys.one(),
        p: sys.table(),
    })
}

pub fn classical_doc(s: &ClassicalStructure) -> Document {
    match s {
        ClassicalStructure::DeMorgan(d) => Document::DeMorgan(DeMorganDoc {
            size: d.size,
            labels: d.labels.clone(),
            meet: d.meet.clone(),
            join: d.join.clone(),
            bar: d.bar.clone(),
            zero: d.zero,
            one: d.one,
        }),
        ClassicalStructure::Mv(m) => Document::Mv(MvDoc {
            size: m.size,
            labels: m.labels.clone(),
            circ: m.circ.clone(),
            bar: m.bar.clone(),
            zero: m.zero,
        }),
        ClassicalStructure::Ring(r) => Document::Ring2(RingDoc {
            size: r.size,
            labels: r.labels.clone(),
            add: r.add.clone(),
            mul: r.mul.clone(),
            zero: r.zero,
            one: r.one,
            char2: true,
        }),
        ClassicalStructure::NearRing(nr) => Document::NearRing(RingDoc {
            size: nr.size,
            labels: nr.labels.clone(),
            add: nr.add.clone(),
            mul: nr.mul.clone(),
            zero: nr.zero,
            one: nr.one,
            char2: nr.char2,
        }),
    }
}

pub fn census_doc(c: &ModelCensus) -> Document {
    Document::Census(CensusDoc {
        size: c.size,
        axioms: c.axioms.iter().map(|a| a.name().to_string()).collect(),
        up_to_iso: c.up_to_iso,
        complete: c.complete,
        total: c.total_models,
        iso_classes: c.iso_classes,
        representatives: c.representatives.iter().map(system_doc).collect(),
        stats: StatsDoc::from(&c.stats),
    })
}

/// Parses a document, reporting a missing or unknown `kind` before any
/// field-level error.
pub fn parse_document(src: &str) -> Result<Document, IoError> {
    let value: serde_json::Value = serde_json::from_str(src)?;
    match value.get("kind") {
        None => return Err(IoError::MissingKind),
        Some(serde_json::Value::String(k)) if !KINDS.contains(&k.as_str()) => {
            return Err(IoError::UnknownKind(k.clone()))
        }
        Some(serde_json::Value::String(_)) => {}
        Some(other) => return Err(IoError::UnknownKind(other.to_string())),
    }
    Ok(serde_json::from_value(value)?)
}

pub fn read_document(path: &Path) -> Result<Document, IoError> {
    let src = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_document(&src)
}

pub fn load_path(path: &Path) -> Result<Loaded, IoError> {
    read_document(path)?.load()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// The files shipped under `fixtures/`, by file name.
pub fn fixture_files() -> Vec<(&'static str, Document)> {
    use crate::classical::{boolean_to_ternary, fixtures as fx};
    let boolean2 = boolean_to_ternary(&fx::boolean_algebra(1)).expect("valid fixture");
    let dm = |d| classical_doc(&ClassicalStructure::DeMorgan(d));
    let mv = |m| classical_doc(&ClassicalStructure::Mv(m));
    vec![
        ("boolean2.json", system_doc(&boolean2)),
        ("div6.json", dm(fx::divisor_lattice(6))),
        ("div12.json", dm(fx::divisor_lattice(12))),
        ("div30.json", dm(fx::divisor_lattice(30))),
        ("kleene3.json", dm(fx::kleene3())),
        ("l3.json", mv(fx::lukasiewicz(3))),
        ("l4.json", mv(fx::lukasiewicz(4))),
        ("z2.json", classical_doc(&ClassicalStructure::Ring(fx::boolean_ring(1)))),
        ("ut2.json", classical_doc(&ClassicalStructure::Ring(fx::upper_triangular_ring()))),
        ("nearring4.json", classical_doc(&ClassicalStructure::NearRing(fx::nearring4()))),
    ]
}
