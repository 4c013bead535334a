//! Consequences of T1-T4 as checkable property groups, and the conditional
//! lemmas (absorption, distributivity, commutativity of `+`, idempotency).

use std::sync::OnceLock;

use serde::Serialize;

use super::{check_axiom_set, AxiomReport, TernarySystem, BASE_AXIOMS};
use crate::terms::{check_identity, parse_identity, Assignment, Identity};

/// A named conjunction of identities.
#[derive(Clone, Debug)]
pub struct PropertyGroup {
    pub name: &'static str,
    pub identities: Vec<Identity>,
}

impl PropertyGroup {
    pub fn new(name: &'static str, sources: &[&str]) -> PropertyGroup {
        PropertyGroup {
            name,
            identities: sources
                .iter()
                .map(|s| parse_identity(s).expect("property identities parse"))
                .collect(),
        }
    }

    pub fn check(&self, sys: &TernarySystem) -> PropertyReport {
        for id in &self.identities {
            let r = check_identity(id, sys);
            if !r.holds {
                return PropertyReport {
                    name: self.name.to_string(),
                    holds: false,
                    failing_identity: Some(r.identity),
                    witness: r.witness,
                };
            }
        }
        PropertyReport {
            name: self.name.to_string(),
            holds: true,
            failing_identity: None,
            witness: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub holds: bool,
    pub failing_identity: Option<String>,
    pub witness: Option<Assignment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub precondition: Vec<AxiomReport>,
    pub precondition_holds: bool,
    pub groups: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.precondition_holds && self.groups.iter().all(|g| g.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyReport> {
        self.groups.iter().filter(|g| !g.holds)
    }
}

/// The twelve property groups that follow from T1-T4.
pub fn lemma22_groups() -> &'static [PropertyGroup] {
    static GROUPS: OnceLock<Vec<PropertyGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        vec![
            PropertyGroup::new("L1", &["bar(1) = 0", "bar(0) = 1"]),
            PropertyGroup::new("L2", &["bar(bar(a)) = a"]),
            PropertyGroup::new("L3", &["p(c, b, a) = p(a, bar(b), c)"]),
            PropertyGroup::new("L4", &["bar(p(a, b, c)) = p(bar(a), b, bar(c))"]),
            PropertyGroup::new("L5", &["bar(p(a, b, c)) = p(bar(c), bar(b), bar(a))"]),
            PropertyGroup::new("L=", &["a . b = a ^ b", "a o b = a v b"]),
            PropertyGroup::new("L6", &["bar(a . b) = bar(b) o bar(a)", "bar(a o b) = bar(b) . bar(a)"]),
            PropertyGroup::new(
                "L7/L8",
                &[
                    "(a . b) . c = a . (b . c)",
                    "a . 1 = a",
                    "1 . a = a",
                    "(a o b) o c = a o (b o c)",
                    "a o 0 = a",
                    "0 o a = a",
                ],
            ),
            PropertyGroup::new("L9", &["a . 0 = 0", "0 . a = 0"]),
            PropertyGroup::new("L10", &["a o 1 = 1", "1 o a = 1"]),
            PropertyGroup::new("monoid-plus", &["(a + b) + c = a + (b + c)", "a + 0 = a", "0 + a = a"]),
            PropertyGroup::new("L11", &["a + 1 = bar(a)", "1 + a = bar(a)"]),
        ]
    })
}

/// Checks T1-T4 first, then every property group. Groups are evaluated even
/// when the precondition fails so the report shows what breaks.
pub fn lemma22_suite(sys: &TernarySystem) -> SuiteReport {
    let precondition = check_axiom_set(sys, &BASE_AXIOMS, false);
    let precondition_holds = precondition.iter().all(|r| r.holds);
    SuiteReport {
        precondition,
        precondition_holds,
        groups: lemma22_groups().iter().map(|g| g.check(sys)).collect(),
    }
}

/// `premise => conclusion`, both evaluated exhaustively on one system.
#[derive(Clone, Debug)]
pub struct Implication {
    pub name: &'static str,
    pub premise: PropertyGroup,
    pub conclusion: PropertyGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationReport {
    pub name: String,
    pub premise_holds: bool,
    pub conclusion: PropertyReport,
    /// True when the premise fails or the conclusion holds.
    pub verified: bool,
}

impl Implication {
    pub fn check(&self, sys: &TernarySystem) -> ImplicationReport {
        let premise_holds = self.premise.check(sys).holds;
        let conclusion = self.conclusion.check(sys);
        ImplicationReport {
            name: self.name.to_string(),
            premise_holds,
            verified: !premise_holds || conclusion.holds,
            conclusion,
        }
    }
}

/// Absorption under idempotent `o`.
pub fn absorption_lemma() -> Implication {
    Implication {
        name: "absorption",
        premise: PropertyGroup::new("o idempotent", &["a o a = a"]),
        conclusion: PropertyGroup::new("absorption", &["a o (b . a) = a", "(a o b) . a = a"]),
    }
}

/// Mutual distributivity under commutative, idempotent `.` and `o`.
pub fn distributivity_lemma() -> Implication {
    Implication {
        name: "distributivity",
        premise: PropertyGroup::new(
            ". and o commutative and idempotent",
            &["a . b = b . a", "a o b = b o a", "a . a = a", "a o a = a"],
        ),
        conclusion: PropertyGroup::new(
            "distributivity",
            &["(b . a) o (c . a) = (b o c) . a", "(a o b) . (a o c) = a o (b . c)"],
        ),
    }
}

/// Characteristic 2 gives a commutative `+` and right distributivity.
pub fn char2_lemma() -> Implication {
    Implication {
        name: "characteristic 2",
        premise: PropertyGroup::new("a + a = 0", &["a + a = 0"]),
        conclusion: PropertyGroup::new(
            "+ commutative, . right distributive",
            &["a + b = b + a", "(a + b) . c = (a . c) + (b . c)"],
        ),
    }
}

/// Boolean complements give idempotency.
pub fn complement_lemma() -> Implication {
    Implication {
        name: "complement",
        premise: PropertyGroup::new("Boolean complement", &["bar(a) . a = 0", "bar(a) o a = 1"]),
        conclusion: PropertyGroup::new("idempotency", &["a . a = a", "a o a = a"]),
    }
}
