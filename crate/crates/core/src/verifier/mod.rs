//! Exhaustive desk-scale verification of the equivalence, isomorphism and
//! implication claims over enumerated models and a fixture library.
//!
//! Claims about all finite models are checked on every model up to a small
//! size (up to isomorphism) and on every fixture; reports say so. Model
//! counts come from the search module, not from any external table.

mod conditions;
mod theorem;

use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

pub use conditions::{classical_vector, condition_vector, Condition, ConditionVector, Failure};
pub use theorem::{Shape, TheoremId, UnknownTheorem};

use crate::classical::fixtures::{self, FixtureLibrary};
use crate::classical::{
    boolean_to_ternary, classify, demorgan_to_ternary, mv_to_ternary, nearring_to_ternary, ring_to_ternary,
    ClassLabel, ClassicalStructure, DeMorganAlgebra, MVAlgebra,
};
use crate::io::{classical_doc, system_doc, Document};
use crate::par::{ordered_map, Execution};
use crate::search::{canonical_form, enumerate_models, SearchConfig, SearchError, SlotOrder};
use crate::structures::{derive, is_homomorphism, AxiomId, TernarySystem, BASE_AXIOMS, DE_MORGAN_AXIOMS, TERNARY_MV_AXIOMS};

/// Largest census size the verifier accepts.
pub const MAX_VERIFY_SIZE: usize = 5;

/// Slot orders whose censuses must agree at sizes where no naive oracle is
/// run.
pub const CROSS_CHECK_ORDERS: [SlotOrder; 2] = [SlotOrder::Planes, SlotOrder::MiddleFirst];

/// Census sizes up to this one are trusted from a single run.
pub const SINGLE_RUN_MAX: usize = 3;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("max size {0} is out of range (at most {MAX_VERIFY_SIZE})")]
    SizeOutOfRange(usize),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{theorem} has an empty population")]
    EmptyPopulation { theorem: TheoremId },
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Census sizes `2..=max_size`; below 2 only fixtures are used.
    pub max_size: usize,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub execution: Execution,
    /// Replaces the standard fixture library.
    pub fixtures: Option<Vec<(String, ClassicalStructure)>>,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            max_size: 3,
            node_budget: Some(10_000_000),
            time_budget: None,
            execution: Execution::Parallel,
            fixtures: None,
        }
    }
}

impl VerifyOptions {
    pub fn max_size(mut self, n: usize) -> VerifyOptions {
        self.max_size = n;
        self
    }

    pub fn fixtures(mut self, f: Vec<(String, ClassicalStructure)>) -> VerifyOptions {
        self.fixtures = Some(f);
        self
    }

    pub fn execution(mut self, e: Execution) -> VerifyOptions {
        self.execution = e;
        self
    }

    pub fn node_budget(mut self, b: Option<u64>) -> VerifyOptions {
        self.node_budget = b;
        self
    }

    pub fn time_budget(mut self, b: Option<Duration>) -> VerifyOptions {
        self.time_budget = b;
        self
    }
}

/// Every standard fixture as a classical structure, Boolean algebras first.
pub fn standard_fixtures() -> Vec<(String, ClassicalStructure)> {
    let lib = FixtureLibrary::standard();
    let mut out = Vec::new();
    for (name, b) in lib.boolean {
        out.push((name, ClassicalStructure::DeMorgan(b.into_demorgan())));
    }
    out.extend(lib.de_morgan.into_iter().map(|(n, d)| (n, ClassicalStructure::DeMorgan(d))));
    out.extend(lib.mv.into_iter().map(|(n, m)| (n, ClassicalStructure::Mv(m))));
    out.extend(lib.rings.into_iter().map(|(n, r)| (n, ClassicalStructure::Ring(r))));
    out.extend(lib.near_rings.into_iter().map(|(n, r)| (n, ClassicalStructure::NearRing(r))));
    out
}

#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub system: TernarySystem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub size: usize,
    pub total: u64,
    pub iso_classes: u64,
    pub complete: bool,
    /// Orders that were run; more than one means their results were compared.
    pub orders: Vec<SlotOrder>,
    pub orders_agree: bool,
}

#[derive(Clone, Debug)]
pub struct CensusSet {
    pub axioms: Vec<AxiomId>,
    pub summaries: Vec<CensusSummary>,
    pub cases: Vec<Case>,
}

impl CensusSet {
    pub fn complete(&self) -> bool {
        self.summaries.iter().all(|s| s.complete && s.orders_agree)
    }

    fn describe(&self) -> String {
        if self.summaries.is_empty() {
            return "no census".into();
        }
        let names: Vec<&str> = self.axioms.iter().map(|a| a.name()).collect();
        let parts: Vec<String> = self
            .summaries
            .iter()
            .map(|s| {
                let mut p = format!("n={}: {} models, {} classes", s.size, s.total, s.iso_classes);
                if !s.complete {
                    p.push_str(", incomplete");
                } else if s.orders.len() > 1 {
                    p.push_str(if s.orders_agree { ", two orders agree" } else { ", orders disagree" });
                }
                p
            })
            .collect();
        format!("all {} models up to isomorphism ({})", names.join(","), parts.join("; "))
    }
}

/// The census at one size, cross-checked by a second slot order above
/// [`SINGLE_RUN_MAX`].
pub fn census(axioms: &[AxiomId], size: usize, opts: &VerifyOptions) -> Result<(CensusSummary, Vec<Case>), SearchError> {
    let orders: &[SlotOrder] = if size <= SINGLE_RUN_MAX {
        &CROSS_CHECK_ORDERS[..1]
    } else {
        &CROSS_CHECK_ORDERS
    };
    let mut runs = Vec::new();
    for &order in orders {
        let cfg = SearchConfig::new(size, axioms)
            .up_to_iso(true)
            .order(order)
            .node_budget(opts.node_budget)
            .time_budget(opts.time_budget)
            .execution(opts.execution);
        runs.push(enumerate_models(&cfg)?);
    }
    let first = &runs[0];
    let forms = |c: &crate::search::ModelCensus| -> Vec<Vec<u8>> { c.representatives.iter().map(canonical_form).collect() };
    let orders_agree = runs
        .iter()
        .all(|r| r.total_models == first.total_models && forms(r) == forms(first));
    let summary = CensusSummary {
        size,
        total: first.total_models,
        iso_classes: first.iso_classes,
        complete: runs.iter().all(|r| r.complete),
        orders: orders.to_vec(),
        orders_agree,
    };
    let names: Vec<&str> = axioms.iter().map(|a| a.name()).collect();
    let cases = first
        .representatives
        .iter()
        .enumerate()
        .map(|(k, s)| Case {
            name: format!("census {} n={} #{}", names.join(","), size, k + 1),
            system: s.clone(),
        })
        .collect();
    Ok((summary, cases))
}

fn census_set(axioms: &[AxiomId], opts: &VerifyOptions) -> Result<CensusSet, SearchError> {
    let mut set = CensusSet {
        axioms: axioms.to_vec(),
        summaries: Vec::new(),
        cases: Vec::new(),
    };
    for n in 2..=opts.max_size {
        let (s, c) = census(axioms, n, opts)?;
        set.summaries.push(s);
        set.cases.extend(c);
    }
    Ok(set)
}

/// Everything the claims range over, built once.
#[derive(Clone, Debug)]
pub struct Population {
    pub base: CensusSet,
    pub de_morgan: CensusSet,
    pub ternary_mv: CensusSet,
    pub fixtures: Vec<(String, ClassicalStructure)>,
    /// Ternary systems obtained from the fixtures by their formulas.
    pub fixture_systems: Vec<Case>,
}

impl Population {
    pub fn build(opts: &VerifyOptions) -> Result<Population, VerifyError> {
        if opts.max_size > MAX_VERIFY_SIZE {
            return Err(VerifyError::SizeOutOfRange(opts.max_size));
        }
        let fixtures = opts.fixtures.clone().unwrap_or_else(standard_fixtures);
        let fixture_systems = fixtures
            .iter()
            .filter_map(|(name, s)| {
                s.to_ternary().ok().map(|system| Case {
                    name: format!("fixture {name}"),
                    system,
                })
            })
            .collect();
        Ok(Population {
            base: census_set(&BASE_AXIOMS, opts)?,
            de_morgan: census_set(&DE_MORGAN_AXIOMS, opts)?,
            ternary_mv: census_set(&TERNARY_MV_AXIOMS, opts)?,
            fixtures,
            fixture_systems,
        })
    }

    fn census_for(&self, theorem: TheoremId) -> Option<&CensusSet> {
        match theorem.hypotheses()? {
            h if h == BASE_AXIOMS.as_slice() => Some(&self.base),
            h if h == DE_MORGAN_AXIOMS.as_slice() => Some(&self.de_morgan),
            _ => Some(&self.ternary_mv),
        }
    }

    /// MV-algebras read off the ternary MV census, as extra classical cases.
    fn census_mv(&self) -> Vec<(String, ClassicalStructure)> {
        self.ternary_mv
            .cases
            .iter()
            .map(|c| {
                let d = derive(&c.system);
                let m = MVAlgebra::new(c.system.size(), d.circ, d.bar, c.system.zero(), None)
                    .expect("derived tables have the right shape");
                (format!("{} as MV-algebra", c.name), ClassicalStructure::Mv(m))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    Incomplete,
}

/// Enough to reproduce a failing case: the input document and the condition
/// values computed on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub case: String,
    pub system: Document,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<Document>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    pub conditions: Vec<Condition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub statement: String,
    pub population: String,
    /// Cases inside the hypotheses.
    pub cases_checked: u64,
    /// Cases examined but outside the hypotheses.
    pub vacuous: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

enum Subject<'a> {
    Ternary(&'a Case),
    Classical(&'a str, &'a ClassicalStructure),
}

struct Outcome {
    vector: Option<ConditionVector>,
    witness: Option<Witness>,
}

fn evaluate(theorem: TheoremId, subject: &Subject) -> Outcome {
    let (vector, name, doc) = match subject {
        Subject::Ternary(c) => (condition_vector(&c.system, theorem), c.name.as_str(), system_doc(&c.system)),
        Subject::Classical(name, s) => (classical_vector(s, theorem), *name, classical_doc(s)),
    };
    let witness = match &vector {
        Some(v) if !v.consistent() => Some(Witness {
            case: name.to_string(),
            system: doc,
            target: None,
            map: None,
            conditions: v.conditions.clone(),
        }),
        _ => None,
    };
    Outcome { vector, witness }
}

/// Checks `theorem` over `pop`.
pub fn verify_in(theorem: TheoremId, pop: &Population, exec: Execution) -> Result<VerificationReport, VerifyError> {
    let mut subjects: Vec<Subject> = Vec::new();
    let mut parts = Vec::new();
    let mut complete = true;
    let census_mv;

    if let Some(cs) = pop.census_for(theorem) {
        subjects.extend(cs.cases.iter().map(Subject::Ternary));
        subjects.extend(pop.fixture_systems.iter().map(Subject::Ternary));
        parts.push(cs.describe());
        parts.push(format!("{} fixture-derived systems", pop.fixture_systems.len()));
        complete &= cs.complete();
    }
    let classical_side = matches!(
        theorem,
        TheoremId::THM_4_2 | TheoremId::PROP_5_1 | TheoremId::PROP_6_2 | TheoremId::PROP_6_5 | TheoremId::THM_6_6
    );
    if classical_side {
        subjects.extend(pop.fixtures.iter().map(|(n, s)| Subject::Classical(n, s)));
        if matches!(theorem, TheoremId::PROP_6_2 | TheoremId::PROP_6_5) {
            census_mv = pop.census_mv();
            subjects.extend(census_mv.iter().map(|(n, s)| Subject::Classical(n, s)));
            parts.push(pop.ternary_mv.describe() + " read as MV-algebras");
            complete &= pop.ternary_mv.complete();
        }
        parts.push("fixture library".into());
    }

    let outcomes = ordered_map(exec, &subjects, |s| evaluate(theorem, s));
    let mut checked = 0u64;
    let mut vacuous = 0u64;
    let mut witness = None;
    for o in outcomes {
        match o.vector {
            Some(v) if v.hypotheses_hold => checked += 1,
            Some(_) => vacuous += 1,
            None => {}
        }
        if witness.is_none() {
            witness = o.witness;
        }
    }

    if theorem == TheoremId::THM_4_2 && witness.is_none() {
        let (pairs, w) = morphism_check(pop, exec);
        checked += pairs;
        parts.push(format!("{pairs} pairs of de Morgan systems of size <= 4 with every map between them"));
        witness = w;
    }

    if checked == 0 && witness.is_none() {
        return Err(VerifyError::EmptyPopulation { theorem });
    }
    let status = if witness.is_some() {
        Status::Counterexample
    } else if complete {
        Status::Verified
    } else {
        Status::Incomplete
    };
    Ok(VerificationReport {
        theorem,
        statement: theorem.statement().to_string(),
        population: parts.join(" + "),
        cases_checked: checked,
        vacuous,
        status,
        witness,
    })
}

fn dm_homomorphism(s: &DeMorganAlgebra, t: &DeMorganAlgebra, f: &[usize]) -> bool {
    f[s.zero] == t.zero
        && f[s.one] == t.one
        && (0..s.size).all(|a| f[s.bar[a]] == t.bar[f[a]])
        && (0..s.size).all(|a| {
            (0..s.size).all(|b| f[s.meet(a, b)] == t.meet(f[a], f[b]) && f[s.join(a, b)] == t.join(f[a], f[b]))
        })
}

/// For every pair of small de Morgan systems and every map between their
/// carriers, ternary morphism <=> de Morgan morphism.
fn morphism_check(pop: &Population, exec: Execution) -> (u64, Option<Witness>) {
    let mut systems: Vec<(String, TernarySystem, DeMorganAlgebra)> = Vec::new();
    let mut seen = Vec::new();
    let cands = pop.de_morgan.cases.iter().chain(&pop.fixture_systems);
    for c in cands {
        let s = &c.system;
        if s.size() > 4 || !crate::structures::satisfies_all(s, &DE_MORGAN_AXIOMS) {
            continue;
        }
        let key = canonical_form(s);
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let d = derive(s);
        let dm = DeMorganAlgebra::new(s.size(), d.dot, d.circ, d.bar, s.zero(), s.one(), None)
            .expect("derived tables have the right shape");
        systems.push((c.name.clone(), s.clone(), dm));
    }
    let pairs: Vec<(usize, usize)> = (0..systems.len())
        .flat_map(|i| (0..systems.len()).map(move |j| (i, j)))
        .collect();
    let results = ordered_map(exec, &pairs, |&(i, j)| {
        let (ns, s, ds) = &systems[i];
        let (nt, t, dt) = &systems[j];
        let mut f = vec![0usize; s.size()];
        loop {
            let tern = is_homomorphism(s, t, &f);
            let dm = dm_homomorphism(ds, dt, &f);
            if tern != dm {
                return Some(Witness {
                    case: format!("map {ns} -> {nt}"),
                    system: system_doc(s),
                    target: Some(system_doc(t)),
                    map: Some(f.clone()),
                    conditions: vec![
                        Condition {
                            name: "ternary morphism".into(),
                            holds: tern,
                            failure: None,
                        },
                        Condition {
                            name: "de Morgan morphism".into(),
                            holds: dm,
                            failure: None,
                        },
                    ],
                });
            }
            if !crate::terms::odometer(&mut f, t.size()) {
                return None;
            }
        }
    });
    let n = pairs.len() as u64;
    (n, results.into_iter().flatten().next())
}

/// Builds the population for `opts` and checks `theorem` on it.
pub fn verify(theorem: TheoremId, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let pop = Population::build(opts)?;
    verify_in(theorem, &pop, opts.execution)
}

/// One row of the checkmark summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixRow {
    pub class: ClassLabel,
    pub fixture: String,
    pub expected: [bool; 5],
    pub observed: [bool; 5],
    pub marks: String,
    pub label: Option<ClassLabel>,
    pub matches: bool,
}

fn row(class: ClassLabel, fixture: &str, sys: &TernarySystem) -> MatrixRow {
    let m = classify(sys);
    MatrixRow {
        class,
        fixture: fixture.to_string(),
        expected: class.row(),
        observed: m.row(),
        marks: m.marks(),
        label: m.label,
        matches: m.row() == class.row(),
    }
}

/// The five representative fixtures against the expected checkmark rows.
pub fn summary_matrix() -> Vec<MatrixRow> {
    vec![
        row(
            ClassLabel::BooleanAlgebra,
            "Z2",
            &boolean_to_ternary(&fixtures::boolean_algebra(1)).expect("valid fixture"),
        ),
        row(
            ClassLabel::DeMorgan,
            "div6",
            &demorgan_to_ternary(&fixtures::divisor_lattice(6)).expect("valid fixture"),
        ),
        row(
            ClassLabel::MvCandidate,
            "L3",
            &mv_to_ternary(&fixtures::lukasiewicz(3)).expect("valid fixture"),
        ),
        row(
            ClassLabel::RingChar2,
            "UT2(Z2)",
            &ring_to_ternary(&fixtures::upper_triangular_ring()).expect("valid fixture"),
        ),
        row(
            ClassLabel::NearRingChar2,
            "nearring4",
            &nearring_to_ternary(&fixtures::nearring4()).expect("valid fixture"),
        ),
    ]
}

/// Extra rows: a non-Boolean divisor lattice for the de Morgan class.
pub fn supplementary_rows() -> Vec<MatrixRow> {
    vec![row(
        ClassLabel::DeMorgan,
        "div12",
        &demorgan_to_ternary(&fixtures::divisor_lattice(12)).expect("valid fixture"),
    )]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllReport {
    pub max_size: usize,
    pub censuses: Vec<CensusReport>,
    pub reports: Vec<VerificationReport>,
    pub matrix: Vec<MatrixRow>,
    pub supplementary: Vec<MatrixRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub axioms: Vec<AxiomId>,
    pub sizes: Vec<CensusSummary>,
}

impl AllReport {
    pub fn all_verified(&self) -> bool {
        self.reports.iter().all(|r| r.status == Status::Verified)
    }

    pub fn any_counterexample(&self) -> bool {
        self.reports.iter().any(|r| r.status == Status::Counterexample)
    }
}

pub fn verify_all(opts: &VerifyOptions) -> Result<AllReport, VerifyError> {
    let pop = Population::build(opts)?;
    let reports = TheoremId::ALL
        .iter()
        .map(|&t| verify_in(t, &pop, opts.execution))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AllReport {
        max_size: opts.max_size,
        censuses: [&pop.base, &pop.de_morgan, &pop.ternary_mv]
            .iter()
            .map(|c| CensusReport {
                axioms: c.axioms.clone(),
                sizes: c.summaries.clone(),
            })
            .collect(),
        reports,
        matrix: summary_matrix(),
        supplementary: supplementary_rows(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_three_equivalences_verify() {
        let pop = Population::build(&VerifyOptions::default()).unwrap();
        for t in TheoremId::ALL {
            let r = verify_in(t, &pop, Execution::Sequential).unwrap();
            assert_eq!(r.status, Status::Verified, "{t}: {:?}", r.witness);
            assert!(r.cases_checked > 0, "{t}");
        }
    }

    #[test]
    fn custom_fixture_list() {
        let fx = (2..=4)
            .map(|n| (format!("L{n}"), ClassicalStructure::Mv(fixtures::lukasiewicz(n))))
            .collect();
        let opts = VerifyOptions::default().max_size(0).fixtures(fx);
        let r = verify(TheoremId::THM_6_6, &opts).unwrap();
        assert_eq!(r.status, Status::Verified);
        // three classical cases, three derived ternary systems
        assert_eq!(r.cases_checked, 6);
    }

    #[test]
    fn tiny_budget_is_incomplete_not_verified() {
        let opts = VerifyOptions::default().max_size(4).node_budget(Some(5));
        let r = verify(TheoremId::THM_3_2, &opts).unwrap();
        assert_eq!(r.status, Status::Incomplete);
    }

    #[test]
    fn inconsistent_vectors_are_detected() {
        let c = |holds| Condition {
            name: "x".into(),
            holds,
            failure: None,
        };
        let mut v = ConditionVector {
            theorem: TheoremId::THM_3_2,
            shape: Shape::Equivalence,
            hypotheses_hold: true,
            hypothesis_failure: None,
            conditions: vec![c(true), c(false)],
        };
        assert!(!v.consistent());
        v.hypotheses_hold = false;
        assert!(v.consistent());
        v.hypotheses_hold = true;
        v.shape = Shape::Implication { premises: 1 };
        assert!(!v.consistent());
        v.conditions[0].holds = false;
        assert!(v.consistent());
    }

    #[test]
    fn matrix_rows() {
        let m = summary_matrix();
        assert_eq!(m.len(), 5);
        for r in &m {
            if r.class != ClassLabel::DeMorgan {
                assert!(r.matches, "{r:?}");
            }
        }
        assert!(supplementary_rows()[0].matches);
    }
}
