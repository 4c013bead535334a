//! Per-case condition vectors.
//!
//! Structural conditions ("is a Boolean ring", "is a de Morgan algebra") run
//! the classical law checks on tables read off the system; formula
//! conditions run the identity checker. Neither path goes through the
//! conversion formula a theorem is about.

use serde::Serialize;

use super::theorem::{Shape, TheoremId};
use crate::classical::laws::{self, LawReport, Table};
use crate::classical::{
    demorgan_formulas_agree, demorgan_to_ternary, mv_to_ternary, nearring_affine_ternary, ClassicalStructure,
    DeMorganAlgebra, MVAlgebra,
};
use crate::structures::{
    absorption_lemma, char2_lemma, check_axiom_set, check_axiom_with, complement_lemma, derive,
    distributivity_lemma, lemma22_groups, AxiomId, DerivedOps, Implication, TernarySystem, TERNARY_MV_AXIOMS,
};
use crate::terms::{check_identity, parse_identity, Assignment};

const VARS: [&str; 5] = ["a", "b", "c", "d", "e"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The failing law or identity.
    pub law: String,
    pub at: Assignment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

impl Condition {
    fn from_laws(name: &str, reports: Vec<LawReport>) -> Condition {
        let failure = reports.into_iter().find(|l| !l.holds).map(|l| {
            let values = l.witness.unwrap_or_default();
            let vars = VARS[..values.len()].iter().map(|v| v.to_string()).collect();
            Failure {
                law: l.law,
                at: Assignment::new(vars, values),
            }
        });
        Condition {
            name: name.to_string(),
            holds: failure.is_none(),
            failure,
        }
    }

    fn identities(name: &str, sys: &TernarySystem, sources: &[&str]) -> Condition {
        for src in sources {
            let id = parse_identity(src).expect("built-in identities parse");
            let r = check_identity(&id, sys);
            if let Some(at) = r.witness {
                return Condition {
                    name: name.to_string(),
                    holds: false,
                    failure: Some(Failure { law: r.identity, at }),
                };
            }
        }
        Condition::flag(name, true, None)
    }

    fn flag(name: &str, holds: bool, why: Option<String>) -> Condition {
        Condition {
            name: name.to_string(),
            holds,
            failure: why.filter(|_| !holds).map(|law| Failure {
                law,
                at: Assignment::new(vec![], vec![]),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionVector {
    pub theorem: TheoremId,
    pub shape: Shape,
    /// False when the case lies outside the claim's hypotheses.
    pub hypotheses_hold: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_failure: Option<String>,
    pub conditions: Vec<Condition>,
}

impl ConditionVector {
    pub fn values(&self) -> Vec<bool> {
        self.conditions.iter().map(|c| c.holds).collect()
    }

    /// Whether the case agrees with the claim. Cases outside the hypotheses
    /// agree vacuously.
    pub fn consistent(&self) -> bool {
        if !self.hypotheses_hold {
            return true;
        }
        let v = self.values();
        match self.shape {
            Shape::Equivalence => v.iter().all(|&x| x == v[0]),
            Shape::Implication { premises } => !v[..premises].iter().all(|&x| x) || v[premises..].iter().all(|&x| x),
        }
    }
}

fn tables(d: &DerivedOps) -> (Table<'_>, Table<'_>, Table<'_>) {
    (Table::new(d.size, &d.dot), Table::new(d.size, &d.circ), Table::new(d.size, &d.plus))
}

fn boolean_ring(sys: &TernarySystem, d: &DerivedOps) -> Vec<LawReport> {
    let (dot, _, plus) = tables(d);
    let mut l = laws::ring2_laws(plus, dot, sys.zero(), sys.one());
    l.push(laws::idempotent(".", dot));
    l
}

fn de_morgan(sys: &TernarySystem, d: &DerivedOps) -> Vec<LawReport> {
    let (dot, circ, _) = tables(d);
    let mut l = laws::distributive_lattice(dot, circ, sys.zero(), sys.one());
    l.push(laws::involution(&d.bar));
    l.push(laws::de_morgan_law(dot, circ, &d.bar));
    l
}

fn boolean_algebra(sys: &TernarySystem, d: &DerivedOps) -> Vec<LawReport> {
    let (dot, circ, _) = tables(d);
    let mut l = de_morgan(sys, d);
    l.extend(laws::complement_laws(dot, circ, &d.bar, sys.zero(), sys.one()));
    l
}

fn implication(sys: &TernarySystem, imp: &Implication) -> (usize, Vec<Condition>) {
    let mut out: Vec<Condition> = imp
        .premise
        .identities
        .iter()
        .map(|id| Condition::identities(&id.to_string(), sys, &[&id.to_string()]))
        .collect();
    let k = out.len();
    out.extend(
        imp.conclusion
            .identities
            .iter()
            .map(|id| Condition::identities(&id.to_string(), sys, &[&id.to_string()])),
    );
    (k, out)
}

/// The condition vector of `sys` for a claim about ternary systems, or
/// `None` for claims about classical structures only.
pub fn condition_vector(sys: &TernarySystem, theorem: TheoremId) -> Option<ConditionVector> {
    use TheoremId::*;
    let hyps = theorem.hypotheses()?;
    let reports = check_axiom_set(sys, hyps, true);
    let hypothesis_failure = reports.iter().find(|r| !r.holds).map(|r| {
        let w = r.witness.as_ref().expect("failing axiom has a witness");
        format!("{}: {} at {}", r.axiom, w.identity, w.assignment)
    });
    let d = derive(sys);
    let n = sys.size();
    let (dot, circ, plus) = tables(&d);
    let (zero, one) = (sys.zero(), sys.one());
    let cond = Condition::from_laws;
    let ids = |name: &str, srcs: &[&str]| Condition::identities(name, sys, srcs);

    let (shape, conditions) = match theorem {
        LEMMA_2_2 => (
            Shape::Implication { premises: 0 },
            lemma22_groups()
                .iter()
                .map(|g| {
                    let srcs: Vec<String> = g.identities.iter().map(|i| i.to_string()).collect();
                    let srcs: Vec<&str> = srcs.iter().map(String::as_str).collect();
                    ids(g.name, &srcs)
                })
                .collect(),
        ),
        LEMMA_2_3 | LEMMA_2_4 | LEMMA_2_5 | LEMMA_2_6 => {
            let imp = match theorem {
                LEMMA_2_3 => absorption_lemma(),
                LEMMA_2_4 => distributivity_lemma(),
                LEMMA_2_5 => char2_lemma(),
                _ => complement_lemma(),
            };
            let (premises, c) = implication(sys, &imp);
            (Shape::Implication { premises }, c)
        }
        PROP_3_1 => (
            Shape::Implication { premises: 1 },
            vec![
                ids("p(0,a,b) = p(a,a,b)", &["p(0, a, b) = p(a, a, b)"]),
                cond("(A,+,.,0,1) is a Boolean ring", boolean_ring(sys, &d)),
                cond(". commutative", vec![laws::commutative(".", dot)]),
            ],
        ),
        THM_3_2 => (
            Shape::Equivalence,
            vec![
                cond("(i) (A,+,.,0,1) is a Boolean ring", boolean_ring(sys, &d)),
                cond("(ii) (A,o,.,bar,0,1) is a Boolean algebra", boolean_algebra(sys, &d)),
                ids("(iii) p(a,b,c) = (bar(b).a) o (b.c)", &["p(a, b, c) = (bar(b) . a) o (b . c)"]),
                ids("(iv) p(a,a,b) = a.b", &["p(a, a, b) = a . b"]),
                ids("(v) p(a,b,b) = a o b", &["p(a, b, b) = a o b"]),
            ],
        ),
        THM_4_1 => (
            Shape::Equivalence,
            vec![
                cond("(i) de Morgan algebra", de_morgan(sys, &d)),
                cond("(ii) distributive lattice", laws::distributive_lattice(dot, circ, zero, one)),
                cond(
                    "(iii) (A,o) join-semilattice",
                    vec![laws::associative("o", circ), laws::commutative("o", circ), laws::idempotent("o", circ)],
                ),
                cond(
                    "(iv) (A,.) meet-semilattice",
                    vec![laws::associative(".", dot), laws::commutative(".", dot), laws::idempotent(".", dot)],
                ),
                cond(
                    "(v) (A,o) idempotent commutative magma",
                    vec![laws::commutative("o", circ), laws::idempotent("o", circ)],
                ),
                cond(
                    "(vi) (A,.) idempotent commutative magma",
                    vec![laws::commutative(".", dot), laws::idempotent(".", dot)],
                ),
                ids(
                    "(vii) p(a,b,c) = (bar(b).a) o (a.c) o (b.c)",
                    &["p(a, b, c) = ((bar(b) . a) o (a . c)) o (b . c)"],
                ),
                ids(
                    "(viii) p(a,b,c) = (bar(b) o c).(b o a).(a o c)",
                    &["p(a, b, c) = ((bar(b) o c) . (b o a)) . (a o c)"],
                ),
            ],
        ),
        THM_5_2 => (
            Shape::Equivalence,
            vec![
                cond("(i) unitary ring of characteristic 2", laws::ring2_laws(plus, dot, zero, one)),
                ids("(ii) p(a,b,c) = (bar(b).a) + (b.c)", &["p(a, b, c) = (bar(b) . a) + (b . c)"]),
                cond("(iii) left distributivity", vec![laws::left_distributive(dot, plus)]),
            ],
        ),
        THM_5_3 => (
            Shape::Equivalence,
            vec![
                cond(
                    "(i) unitary right near-ring of characteristic 2",
                    laws::nearring_laws(plus, dot, zero, one, true),
                ),
                ids("(ii) p(a,b,c) = a + (b.(a+c))", &["p(a, b, c) = a + (b . (a + c))"]),
                ids("(iii) a+a = 0", &["a + a = 0"]),
                cond("(iv) right distributivity", vec![laws::right_distributive(dot, plus)]),
            ],
        ),
        THM_4_2 => {
            let dm = DeMorganAlgebra::new(n, d.dot.clone(), d.circ.clone(), d.bar.clone(), zero, one, None)
                .expect("derived tables have the right shape");
            let back = demorgan_to_ternary(&dm);
            let round = match &back {
                Ok(s) => Condition::flag("round trip p' = p", s.table() == sys.table(), Some("tables differ".into())),
                Err(e) => Condition::flag("round trip p' = p", false, Some(e.to_string())),
            };
            (
                Shape::Implication { premises: 0 },
                vec![cond("(A,o,.,bar,0,1) is a de Morgan algebra", dm.check().laws), round],
            )
        }
        PROP_6_4 => {
            let m = MVAlgebra::new(n, d.circ.clone(), d.bar.clone(), zero, None).expect("derived tables have the right shape");
            let mut l = m.check().laws;
            l.push(laws::law(n, "bar(0) = 1", 0, |_| d.bar[zero] == one));
            (Shape::Implication { premises: 0 }, vec![cond("(A,o,bar,0) is an MV-algebra", l)])
        }
        THM_6_6 => {
            let m = MVAlgebra::new(n, d.circ.clone(), d.bar.clone(), zero, None).expect("derived tables have the right shape");
            let round = match mv_to_ternary(&m) {
                Ok(s) => Condition::flag(
                    "round trip p' = p",
                    s.table() == sys.table() && s.one() == one,
                    Some("tables differ".into()),
                ),
                Err(e) => Condition::flag("round trip p' = p", false, Some(e.to_string())),
            };
            (
                Shape::Implication { premises: 0 },
                vec![
                    round,
                    ids("a ^ b = p(a, bar(b), b)", &["a ^ b = p(a, bar(b), b)"]),
                    ids("b v a = p(a, bar(a), b)", &["b v a = p(a, bar(a), b)"]),
                    ids("a+0 = a = 0+a", &["a + 0 = a", "0 + a = a"]),
                    ids("a+1 = bar(a) = 1+a", &["a + 1 = bar(a)", "1 + a = bar(a)"]),
                ],
            )
        }
        PROP_5_1 | PROP_6_2 | PROP_6_5 => unreachable!("classical-only claims have no hypotheses"),
    };
    Some(ConditionVector {
        theorem,
        shape,
        hypotheses_hold: hypothesis_failure.is_none(),
        hypothesis_failure,
        conditions,
    })
}

fn classical_check(s: &ClassicalStructure) -> Option<String> {
    let report = crate::classical::check_classical(s);
    report.first_failure().map(|l| format!("{} fails at {:?}", l.law, l.witness.clone().unwrap_or_default()))
}

fn ternary_axioms(sys: &TernarySystem, axioms: &[AxiomId]) -> Vec<Condition> {
    let ops = derive(sys);
    axioms
        .iter()
        .map(|&ax| {
            let r = check_axiom_with(sys, &ops, ax);
            Condition {
                name: ax.name().to_string(),
                holds: r.holds,
                failure: r.witness.map(|w| Failure {
                    law: w.identity,
                    at: w.assignment,
                }),
            }
        })
        .collect()
}

/// The condition vector of a classical structure for a claim that starts
/// from classical structures, or `None` when the claim does not apply to
/// this kind of structure.
pub fn classical_vector(s: &ClassicalStructure, theorem: TheoremId) -> Option<ConditionVector> {
    use TheoremId::*;
    let hypothesis_failure = classical_check(s);
    let ok = hypothesis_failure.is_none();
    let conditions = match (theorem, s) {
        (PROP_5_1, ClassicalStructure::NearRing(_)) | (PROP_5_1, ClassicalStructure::Ring(_)) => {
            let nr = match s {
                ClassicalStructure::NearRing(nr) => nr.clone(),
                ClassicalStructure::Ring(r) => r.to_nearring(),
                _ => unreachable!(),
            };
            match nearring_affine_ternary(&nr) {
                Ok(sys) if ok => ternary_axioms(&sys, &[AxiomId::T1, AxiomId::T2, AxiomId::T3]),
                Ok(_) => vec![],
                Err(e) => vec![Condition::flag("a+b(c-a) is defined", false, Some(e.to_string()))],
            }
        }
        (PROP_6_2, ClassicalStructure::Mv(m)) => {
            if ok {
                prop_6_2(m)
            } else {
                vec![]
            }
        }
        (PROP_6_5, ClassicalStructure::Mv(m)) => match mv_to_ternary(m) {
            Ok(sys) => {
                let mut c = ternary_axioms(&sys, &TERNARY_MV_AXIOMS);
                let n = m.size;
                let corr = |name: &str, f: &dyn Fn(usize, usize) -> bool| {
                    Condition::from_laws(name, vec![laws::law(n, name, 2, |v| f(v[0], v[1]))])
                };
                c.push(corr("p(1,a,0) = bar(a)", &|a, _| sys.p(m.one(), a, m.zero) == m.bar[a]));
                c.push(corr("p(0,a,b) = a.b", &|a, b| sys.p(m.zero, a, b) == m.dot(a, b)));
                c.push(corr("p(b,bar(a),0) = a^b", &|a, b| sys.p(b, m.bar[a], m.zero) == m.wedge(a, b)));
                c.push(corr("p(1,bar(b),a) = a v b", &|a, b| sys.p(m.one(), m.bar[b], a) == m.vee(a, b)));
                c.push(corr("p(a,b,1) = a o b", &|a, b| sys.p(a, b, m.one()) == m.circ(a, b)));
                c
            }
            Err(_) if !ok => vec![],
            Err(e) => vec![Condition::flag("formula defined", false, Some(e.to_string()))],
        },
        (THM_6_6, ClassicalStructure::Mv(m)) => match mv_to_ternary(m) {
            Ok(sys) => {
                let d = derive(&sys);
                vec![
                    Condition::flag("round trip o' = o", d.circ == m.circ, Some("o tables differ".into())),
                    Condition::flag("round trip bar' = bar", d.bar == m.bar, Some("bar tables differ".into())),
                    ternary_axioms(&sys, &TERNARY_MV_AXIOMS)
                        .into_iter()
                        .find(|c| !c.holds)
                        .unwrap_or_else(|| Condition::flag("image is a ternary MV-algebra", true, None)),
                ]
            }
            Err(_) if !ok => vec![],
            Err(e) => vec![Condition::flag("formula defined", false, Some(e.to_string()))],
        },
        (THM_4_2, ClassicalStructure::DeMorgan(dm)) => match demorgan_to_ternary(dm) {
            Ok(sys) => {
                let mut c = ternary_axioms(&sys, &crate::structures::DE_MORGAN_AXIOMS);
                let d = derive(&sys);
                c.push(Condition::flag(
                    "round trip (., o, bar) exact",
                    d.dot == dm.meet && d.circ == dm.join && d.bar == dm.bar,
                    Some("tables differ".into()),
                ));
                c.push(Condition::flag(
                    "dual formula gives the same p",
                    demorgan_formulas_agree(dm).unwrap_or(false),
                    Some("formulas differ".into()),
                ));
                c
            }
            Err(_) if !ok => vec![],
            Err(e) => vec![Condition::flag("formula defined", false, Some(e.to_string()))],
        },
        _ => return None,
    };
    Some(ConditionVector {
        theorem,
        shape: Shape::Implication { premises: 0 },
        hypotheses_hold: ok,
        hypothesis_failure,
        conditions,
    })
}

fn prop_6_2(m: &MVAlgebra) -> Vec<Condition> {
    let n = m.size;
    let (z, o) = (m.zero, m.one());
    let circ = m.circ.clone();
    let dot = m.table(|a, b| m.dot(a, b));
    let vee = m.table(|a, b| m.vee(a, b));
    let wedge = m.table(|a, b| m.wedge(a, b));
    let (tc, td) = (Table::new(n, &circ), Table::new(n, &dot));
    let (tv, tw) = (Table::new(n, &vee), Table::new(n, &wedge));
    let bar = &m.bar;

    let ba = {
        let mut l = laws::distributive_lattice(td, tc, z, o);
        l.extend(laws::complement_laws(td, tc, bar, z, o));
        l.push(laws::involution(bar));
        l.iter().all(|r| r.holds)
    };
    let eq_vee = laws::law(n, "x o y = x v y", 2, |v| tc.at(v[0], v[1]) == tv.at(v[0], v[1]));
    let idem = laws::idempotent("o", tc);
    let three = [ba, eq_vee.holds, idem.holds];
    let agree = three.iter().all(|&x| x == three[0]);

    vec![
        Condition::from_laws(
            "o and . commutative",
            vec![laws::commutative("o", tc), laws::commutative(".", td)],
        ),
        Condition::from_laws(
            "x o bar(x) = 1 and x . bar(x) = 0",
            vec![
                laws::law(n, "x o bar(x) = 1", 1, |v| tc.at(v[0], bar[v[0]]) == o),
                laws::law(n, "x . bar(x) = 0", 1, |v| td.at(v[0], bar[v[0]]) == z),
            ],
        ),
        Condition::from_laws(
            "x v y = bar(bar(y) ^ bar(x))",
            vec![laws::law(n, "x v y = bar(bar(y) ^ bar(x))", 2, |v| {
                tv.at(v[0], v[1]) == bar[tw.at(bar[v[1]], bar[v[0]])]
            })],
        ),
        Condition::from_laws("(X,v,^,0,1) distributive lattice", laws::distributive_lattice(tw, tv, z, o)),
        Condition::flag(
            "Boolean <=> x o y = x v y <=> x o x = x",
            agree,
            Some(format!("Boolean = {}, o = v: {}, o idempotent: {}", three[0], three[1], three[2])),
        ),
        Condition::from_laws(
            "x o (y ^ z) = (x o y) ^ (x o z) and x . (y v z) = (x . y) v (x . z)",
            vec![
                laws::law(n, "x o (y ^ z) = (x o y) ^ (x o z)", 3, |v| {
                    tc.at(v[0], tw.at(v[1], v[2])) == tw.at(tc.at(v[0], v[1]), tc.at(v[0], v[2]))
                }),
                laws::law(n, "x . (y v z) = (x . y) v (x . z)", 3, |v| {
                    td.at(v[0], tv.at(v[1], v[2])) == tv.at(td.at(v[0], v[1]), td.at(v[0], v[2]))
                }),
            ],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{fixtures, *};
    use TheoremId::*;

    fn cd2() -> TernarySystem {
        TernarySystem::from_fn(2, 0, 1, |a, b, c| if b == 1 { c } else { a }).unwrap()
    }

    #[test]
    fn boolean_case_is_all_true() {
        for t in TheoremId::EQUIVALENCES {
            let v = condition_vector(&cd2(), t).unwrap();
            assert!(v.hypotheses_hold);
            assert!(v.values().iter().all(|&x| x), "{t}: {:?}", v.values());
        }
    }

    #[test]
    fn divisors_of_six_are_boolean() {
        let sys = demorgan_to_ternary(&fixtures::divisor_lattice(6)).unwrap();
        let v = condition_vector(&sys, THM_3_2).unwrap();
        assert_eq!(v.values(), vec![true; 5]);
    }

    #[test]
    fn divisors_of_twelve_are_not_boolean() {
        let sys = demorgan_to_ternary(&fixtures::divisor_lattice(12)).unwrap();
        let v = condition_vector(&sys, THM_3_2).unwrap();
        assert_eq!(v.values(), vec![false; 5]);
        // the Boolean algebra condition fails on the complement law at 2
        let f = v.conditions[1].failure.as_ref().unwrap();
        assert!(f.law.contains("bar"), "{f:?}");
        let v = condition_vector(&sys, THM_4_1).unwrap();
        assert_eq!(v.values(), vec![true; 8]);
    }

    #[test]
    fn near_ring_vectors() {
        let sys = nearring_to_ternary(&fixtures::nearring4()).unwrap();
        assert_eq!(condition_vector(&sys, THM_5_3).unwrap().values(), vec![true; 4]);
        assert_eq!(condition_vector(&sys, THM_5_2).unwrap().values(), vec![false; 3]);
        assert_eq!(condition_vector(&sys, THM_3_2).unwrap().values(), vec![false; 5]);
    }

    #[test]
    fn mv_system_is_outside_base_hypotheses() {
        let sys = mv_to_ternary(&fixtures::lukasiewicz(3)).unwrap();
        let v = condition_vector(&sys, THM_3_2).unwrap();
        assert!(!v.hypotheses_hold && v.consistent());
        assert!(v.hypothesis_failure.unwrap().starts_with("T4"));
        let v = condition_vector(&sys, THM_6_6).unwrap();
        assert!(v.hypotheses_hold && v.consistent(), "{v:?}");
    }

    #[test]
    fn classical_claims() {
        let m = ClassicalStructure::Mv(fixtures::lukasiewicz(4));
        for t in [PROP_6_2, PROP_6_5, THM_6_6] {
            let v = classical_vector(&m, t).unwrap();
            assert!(v.hypotheses_hold && v.consistent(), "{t}: {v:?}");
        }
        let z3 = ClassicalStructure::NearRing(fixtures::integers_mod(3));
        assert!(classical_vector(&z3, PROP_5_1).unwrap().consistent());
        assert!(classical_vector(&z3, PROP_6_2).is_none());
        let d = ClassicalStructure::DeMorgan(fixtures::kleene3());
        assert!(classical_vector(&d, THM_4_2).unwrap().consistent());
    }

    #[test]
    fn broken_mv_fails_hypotheses() {
        let mut m = fixtures::lukasiewicz(3);
        m.circ[1] = 0;
        let v = classical_vector(&ClassicalStructure::Mv(m), PROP_6_2).unwrap();
        assert!(!v.hypotheses_hold);
    }
}
