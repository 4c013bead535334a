//! The axiom catalog.
//!
//! Every axiom exists twice: as identities in the term language (used for
//! printing, witnesses and the search propagator) and as a direct scan over
//! the operation tables (used by [`check_axiom`]). Tests hold the two in
//! agreement.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use super::{derive, DerivedOps, TernarySystem};
use crate::terms::{parse_identity, Assignment, Identity};

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    T1,
    T2,
    T3,
    T4,
    T5DM,
    BRING,
    T4_1,
    T4_2,
    TMV,
    M1,
    M2,
    M3,
    M4,
    M5,
    IDEMP_DOT,
    IDEMP_CIRC,
    COMM_DOT,
    COMM_CIRC,
    PLUS_NILP,
    BOOL_COMPL,
    LEFT_DIST,
}

use AxiomId::*;

pub const BASE_AXIOMS: [AxiomId; 4] = [T1, T2, T3, T4];
pub const DE_MORGAN_AXIOMS: [AxiomId; 5] = [T1, T2, T3, T4, T5DM];
pub const TERNARY_MV_AXIOMS: [AxiomId; 6] = [T1, T2, T3, T4_1, T4_2, TMV];

impl AxiomId {
    pub const ALL: [AxiomId; 21] = [
        T1, T2, T3, T4, T5DM, BRING, T4_1, T4_2, TMV, M1, M2, M3, M4, M5, IDEMP_DOT, IDEMP_CIRC,
        COMM_DOT, COMM_CIRC, PLUS_NILP, BOOL_COMPL, LEFT_DIST,
    ];

    pub fn name(self) -> &'static str {
        match self {
            T1 => "T1",
            T2 => "T2",
            T3 => "T3",
            T4 => "T4",
            T5DM => "T5DM",
            BRING => "BRING",
            T4_1 => "T4_1",
            T4_2 => "T4_2",
            TMV => "TMV",
            M1 => "M1",
            M2 => "M2",
            M3 => "M3",
            M4 => "M4",
            M5 => "M5",
            IDEMP_DOT => "IDEMP_DOT",
            IDEMP_CIRC => "IDEMP_CIRC",
            COMM_DOT => "COMM_DOT",
            COMM_CIRC => "COMM_CIRC",
            PLUS_NILP => "PLUS_NILP",
            BOOL_COMPL => "BOOL_COMPL",
            LEFT_DIST => "LEFT_DIST",
        }
    }

    /// Source text of the identities making up the axiom. Several entries
    /// mean a conjunction, reported jointly.
    pub fn sources(self) -> &'static [&'static str] {
        match self {
            T1 => &["p(0, a, 1) = a"],
            T2 => &["p(a, 0, b) = a", "p(b, 1, a) = a"],
            T3 => &["p(a, b, a) = a"],
            T4 => &["p(a, p(b1, b2, b3), c) = p(p(a, b1, c), b2, p(a, b3, c))"],
            T5DM => &["p(0, a, b) = p(0, b, a)", "p(0, a, a) = a"],
            BRING => &["p(0, a, b) = p(a, a, b)"],
            T4_1 => &["p(a, p(b, c, 1), 1) = p(p(a, b, 1), c, 1)"],
            T4_2 => &[
                "p(0, b, c) = bar(p(bar(c), bar(b), 1))",
                "p(1, b, c) = bar(p(bar(c), bar(b), 0))",
            ],
            TMV => &["p(a, b, c) = p(p(bar(b), bar(a), 0), p(0, c, b), 1)"],
            M1 => &["x o (y o z) = (x o y) o z"],
            M2 => &["0 o x = x"],
            M3 => &["bar(bar(x)) = x"],
            M4 => &["bar(0) o x = bar(0)"],
            M5 => &["x o bar(x o bar(y)) = y o bar(y o bar(x))"],
            IDEMP_DOT => &["a . a = a"],
            IDEMP_CIRC => &["a o a = a"],
            COMM_DOT => &["a . b = b . a"],
            COMM_CIRC => &["a o b = b o a"],
            PLUS_NILP => &["a + a = 0"],
            BOOL_COMPL => &["(1 + a) . a = 0"],
            LEFT_DIST => &["a . (b + c) = (a . b) + (a . c)"],
        }
    }

    pub fn identities(self) -> &'static [Identity] {
        static CATALOG: OnceLock<Vec<Vec<Identity>>> = OnceLock::new();
        let all = CATALOG.get_or_init(|| {
            AxiomId::ALL
                .iter()
                .map(|ax| {
                    ax.sources()
                        .iter()
                        .map(|s| parse_identity(s).expect("catalog identities parse"))
                        .collect()
                })
                .collect()
        });
        &all[self as usize]
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnknownAxiom {
    #[error("unknown axiom `{name}`; did you mean `{suggestion}`?")]
    WithSuggestion { name: String, suggestion: &'static str },
    #[error("unknown axiom `{name}`")]
    Plain { name: String },
}

impl FromStr for AxiomId {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<AxiomId, UnknownAxiom> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        if let Some(ax) = AxiomId::ALL.iter().find(|a| a.name() == norm) {
            return Ok(*ax);
        }
        let best = AxiomId::ALL
            .iter()
            .map(|a| (edit_distance(&norm, a.name()), a.name()))
            .min_by_key(|&(d, name)| (d, !name.starts_with(&norm)))
            .filter(|(d, _)| *d <= 3);
        Err(match best {
            Some((_, suggestion)) => UnknownAxiom::WithSuggestion { name: s.to_string(), suggestion },
            None => UnknownAxiom::Plain { name: s.to_string() },
        })
    }
}

/// Parses a comma-separated axiom list such as `T1,T2,T3,T4`.
pub fn parse_axiom_list(s: &str) -> Result<Vec<AxiomId>, UnknownAxiom> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(str::parse)
        .collect()
}

pub(crate) fn edit_distance(a: &str, b: &str) -> usize {
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for (i, ca) in a.chars().enumerate() {
        let mut cur = vec![i + 1; b.len() + 1];
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != *cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        prev = cur;
    }
    prev[b.len()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomWitness {
    /// Index into [`AxiomId::sources`] of the failing identity.
    pub component: usize,
    pub identity: String,
    pub assignment: Assignment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witness: Option<AxiomWitness>,
}

/// First tuple in `0..n` of length `arity`, in lexicographic order, for which
/// `ok` is false.
pub(crate) fn first_failure(n: usize, arity: usize, mut ok: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut vals = vec![0usize; arity];
    loop {
        if !ok(&vals) {
            return Some(vals);
        }
        if !crate::terms::odometer(&mut vals, n) {
            return None;
        }
    }
}

type Component<'a> = (usize, Box<dyn Fn(&[usize]) -> bool + 'a>);

fn components<'a>(ax: AxiomId, s: &'a TernarySystem, d: &'a DerivedOps) -> Vec<Component<'a>> {
    let (o, l) = (s.zero(), s.one());
    let p = move |a, b, c| s.p(a, b, c);
    let bar = move |a| d.bar(a);
    match ax {
        T1 => vec![(1, Box::new(move |v| p(o, v[0], l) == v[0]))],
        T2 => vec![
            (2, Box::new(move |v| p(v[0], o, v[1]) == v[0])),
            (2, Box::new(move |v| p(v[0], l, v[1]) == v[1])),
        ],
        T3 => vec![(2, Box::new(move |v| p(v[0], v[1], v[0]) == v[0]))],
        T4 => vec![(
            5,
            Box::new(move |v| {
                let (a, b1, b2, b3, c) = (v[0], v[1], v[2], v[3], v[4]);
                p(a, p(b1, b2, b3), c) == p(p(a, b1, c), b2, p(a, b3, c))
            }),
        )],
        T5DM => vec![
            (2, Box::new(move |v| p(o, v[0], v[1]) == p(o, v[1], v[0]))),
            (1, Box::new(move |v| p(o, v[0], v[0]) == v[0])),
        ],
        BRING => vec![(2, Box::new(move |v| p(o, v[0], v[1]) == p(v[0], v[0], v[1])))],
        T4_1 => vec![(3, Box::new(move |v| p(v[0], p(v[1], v[2], l), l) == p(p(v[0], v[1], l), v[2], l)))],
        T4_2 => vec![
            (2, Box::new(move |v| p(o, v[0], v[1]) == bar(p(bar(v[1]), bar(v[0]), l)))),
            (2, Box::new(move |v| p(l, v[0], v[1]) == bar(p(bar(v[1]), bar(v[0]), o)))),
        ],
        TMV => vec![(
            3,
            Box::new(move |v| {
                let (a, b, c) = (v[0], v[1], v[2]);
                p(a, b, c) == p(p(bar(b), bar(a), o), p(o, c, b), l)
            }),
        )],
        M1 => vec![(3, Box::new(move |v| d.circ(v[0], d.circ(v[1], v[2])) == d.circ(d.circ(v[0], v[1]), v[2])))],
        M2 => vec![(1, Box::new(move |v| d.circ(o, v[0]) == v[0]))],
        M3 => vec![(1, Box::new(move |v| bar(bar(v[0])) == v[0]))],
        M4 => vec![(1, Box::new(move |v| d.circ(bar(o), v[0]) == bar(o)))],
        M5 => vec![(
            2,
            Box::new(move |v| {
                let (x, y) = (v[0], v[1]);
                d.circ(x, bar(d.circ(x, bar(y)))) == d.circ(y, bar(d.circ(y, bar(x))))
            }),
        )],
        IDEMP_DOT => vec![(1, Box::new(move |v| d.dot(v[0], v[0]) == v[0]))],
        IDEMP_CIRC => vec![(1, Box::new(move |v| d.circ(v[0], v[0]) == v[0]))],
        COMM_DOT => vec![(2, Box::new(move |v| d.dot(v[0], v[1]) == d.dot(v[1], v[0])))],
        COMM_CIRC => vec![(2, Box::new(move |v| d.circ(v[0], v[1]) == d.circ(v[1], v[0])))],
        PLUS_NILP => vec![(1, Box::new(move |v| d.plus(v[0], v[0]) == o))],
        BOOL_COMPL => vec![(1, Box::new(move |v| d.dot(d.plus(l, v[0]), v[0]) == o))],
        LEFT_DIST => vec![(
            3,
            Box::new(move |v| {
                let (a, b, c) = (v[0], v[1], v[2]);
                d.dot(a, d.plus(b, c)) == d.plus(d.dot(a, b), d.dot(a, c))
            }),
        )],
    }
}

/// Exhaustive table scan of one axiom.
pub fn check_axiom(sys: &TernarySystem, ax: AxiomId) -> AxiomReport {
    check_axiom_with(sys, &derive(sys), ax)
}

pub fn check_axiom_with(sys: &TernarySystem, derived: &DerivedOps, ax: AxiomId) -> AxiomReport {
    for (component, (arity, ok)) in components(ax, sys, derived).into_iter().enumerate() {
        if let Some(vals) = first_failure(sys.size(), arity, ok) {
            let identity = &ax.identities()[component];
            debug_assert_eq!(identity.vars.len(), arity);
            return AxiomReport {
                axiom: ax,
                holds: false,
                witness: Some(AxiomWitness {
                    component,
                    identity: identity.to_string(),
                    assignment: Assignment::new(identity.vars.clone(), vals),
                }),
            };
        }
    }
    AxiomReport { axiom: ax, holds: true, witness: None }
}

/// Checks each axiom in order. With `short_circuit`, stops after the first
/// failure.
pub fn check_axiom_set(sys: &TernarySystem, axioms: &[AxiomId], short_circuit: bool) -> Vec<AxiomReport> {
    let derived = derive(sys);
    let mut out = Vec::with_capacity(axioms.len());
    for &ax in axioms {
        let r = check_axiom_with(sys, &derived, ax);
        let failed = !r.holds;
        out.push(r);
        if failed && short_circuit {
            break;
        }
    }
    out
}

pub fn satisfies_all(sys: &TernarySystem, axioms: &[AxiomId]) -> bool {
    check_axiom_set(sys, axioms, true).iter().all(|r| r.holds)
}
