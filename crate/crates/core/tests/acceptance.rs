//! One test per acceptance criterion; each prints a PASS or FAIL line.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::test_runner::{Config, TestCaseError, TestRunner};
use common::{desugar_commutes, report, small_representatives, term};
use ternalg::classical::{
    check_classical, classify, complement_sum_ternary, demorgan_to_ternary, fixtures, mv_to_ternary,
    nearring_to_ternary, ternary_mv_to_mv, ternary_to_demorgan, ClassicalStructure,
};
use ternalg::search::{enumerate_models, SearchConfig, SlotOrder};
use ternalg::structures::{
    check_axiom, find_isomorphism, lemma22_suite, satisfies_all, AxiomId, TernarySystem, BASE_AXIOMS,
};
use ternalg::terms::parse_term;
use ternalg::verifier::{standard_fixtures, summary_matrix, supplementary_rows, verify, Status, TheoremId, VerifyOptions};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ternalg"))
}

fn stdout_of(args: &[&str]) -> (i32, Vec<u8>) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

/// Every table of `size` with zero 0 and one `size - 1` (the search seating)
/// that satisfies T1-T4, by scanning all completions of the cells left open
/// by T1-T3.
fn naive_models(size: usize) -> (usize, Vec<TernarySystem>) {
    let n = size;
    let (zero, one) = (0, n - 1);
    let mut pinned = vec![None; n * n * n];
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    for a in 0..n {
        for c in 0..n {
            pinned[idx(a, zero, c)] = Some(a);
            pinned[idx(c, one, a)] = Some(a);
            pinned[idx(a, c, a)] = Some(a);
            pinned[idx(zero, a, one)] = Some(a);
        }
    }
    let free: Vec<usize> = (0..n * n * n).filter(|&i| pinned[i].is_none()).collect();
    let base: Vec<usize> = pinned.iter().map(|v| v.unwrap_or(0)).collect();
    let mut models = Vec::new();
    for code in 0..n.pow(free.len() as u32) {
        let mut table = base.clone();
        let mut k = code;
        for &slot in &free {
            table[slot] = k % n;
            k /= n;
        }
        let sys = TernarySystem::new(n, zero, one, table).unwrap();
        if satisfies_all(&sys, &BASE_AXIOMS) {
            models.push(sys);
        }
    }
    (free.len(), models)
}

fn iso_class_count(models: &[TernarySystem]) -> usize {
    let mut reps: Vec<&TernarySystem> = Vec::new();
    for m in models {
        if !reps.iter().any(|r| find_isomorphism(r, m).is_some()) {
            reps.push(m);
        }
    }
    reps.len()
}

#[test]
fn criterion_1_size_two_census() {
    let start = Instant::now();
    let census = enumerate_models(&SearchConfig::new(2, &BASE_AXIOMS)).unwrap();
    let elapsed = start.elapsed();
    let expected = TernarySystem::from_fn(2, 0, 1, |a, b, c| if b == 1 { c } else { a }).unwrap();
    let brute: Vec<TernarySystem> = (0..256usize)
        .map(|code| TernarySystem::new(2, 0, 1, (0..8).map(|i| (code >> i) & 1).collect()).unwrap())
        .filter(|s| satisfies_all(s, &BASE_AXIOMS))
        .collect();
    let (code, cli) = stdout_of(&["--json", "enumerate", "--size", "2", "--axioms", "T1,T2,T3,T4"]);
    let cli: serde_json::Value = serde_json::from_slice(&cli).unwrap();
    let ok = census.complete
        && census.total_models == 1
        && census.representatives == vec![expected.clone()]
        && brute == vec![expected]
        && code == 0
        && cli["total"] == 1
        && elapsed < Duration::from_secs(1);
    report(
        1,
        ok,
        &format!(
            "size 2: search {} model(s), brute force over 2^8 tables {} model(s), cli total {}, {:?}",
            census.total_models,
            brute.len(),
            cli["total"],
            elapsed
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_2_size_three_census() {
    let start = Instant::now();
    let census = enumerate_models(&SearchConfig::new(3, &BASE_AXIOMS)).unwrap();
    let iso = enumerate_models(&SearchConfig::new(3, &BASE_AXIOMS).up_to_iso(true)).unwrap();
    let elapsed = start.elapsed();
    let (free, oracle) = naive_models(3);
    let found: BTreeSet<Vec<usize>> = census.representatives.iter().map(|s| s.table()).collect();
    let expected: BTreeSet<Vec<usize>> = oracle.iter().map(|s| s.table()).collect();
    let classes = iso_class_count(&oracle);
    let ok = census.complete
        && found == expected
        && census.total_models as usize == oracle.len()
        && iso.iso_classes as usize == classes
        && elapsed < Duration::from_secs(5);
    report(
        2,
        ok,
        &format!(
            "size 3: search {} model(s) / {} class(es), oracle over 3^{} completions {} / {}, {:?}",
            census.total_models,
            iso.iso_classes,
            free,
            oracle.len(),
            classes,
            elapsed
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_3_lemma_suite() {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    let mut systems: Vec<(String, TernarySystem)> = Vec::new();
    for n in 2..=3 {
        for (k, s) in enumerate_models(&SearchConfig::new(n, &BASE_AXIOMS)).unwrap().representatives.into_iter().enumerate() {
            systems.push((format!("census n={n} #{k}"), s));
        }
    }
    let census_count = systems.len();
    for (name, c) in standard_fixtures() {
        if let Ok(s) = c.to_ternary() {
            if satisfies_all(&s, &BASE_AXIOMS) {
                systems.push((name, s));
            }
        }
    }
    for (name, s) in &systems {
        let r = lemma22_suite(s);
        checked += 1;
        for g in r.failures() {
            witnesses.push(format!("{name}: {} at {:?}", g.name, g.witness));
        }
        if !r.precondition_holds {
            witnesses.push(format!("{name}: T1-T4 fail"));
        }
    }
    let ok = witnesses.is_empty() && census_count == 3 && checked > census_count;
    report(
        3,
        ok,
        &format!(
            "lemma suite on {census_count} census models and {} fixture-derived systems: {} witness(es)",
            checked - census_count,
            witnesses.len()
        ),
    );
    assert!(ok, "{witnesses:?}");
}

#[test]
fn criterion_4_equivalences() {
    let small = VerifyOptions::default().max_size(3);
    let mut lines = Vec::new();
    let mut ok = true;
    for t in TheoremId::EQUIVALENCES {
        let r = verify(t, &small).unwrap();
        ok &= r.status == Status::Verified && r.cases_checked > 0;
        lines.push(format!("{t} {:?}", r.status));
    }
    let four = VerifyOptions::default().max_size(4);
    for t in TheoremId::EQUIVALENCES {
        let r = verify(t, &four).unwrap();
        ok &= r.status != Status::Counterexample;
        lines.push(format!("{t}@4 {:?}", r.status));
    }
    let orders: Vec<u64> = [SlotOrder::Planes, SlotOrder::MiddleFirst]
        .iter()
        .map(|&o| enumerate_models(&SearchConfig::new(4, &BASE_AXIOMS).order(o)).unwrap().total_models)
        .collect();
    ok &= orders[0] == orders[1];
    let starved = verify(TheoremId::THM_3_2, &VerifyOptions::default().max_size(4).node_budget(Some(3))).unwrap();
    ok &= starved.status == Status::Incomplete;
    report(
        4,
        ok,
        &format!(
            "{}; size-4 census by two orders {:?}; starved budget -> {:?}",
            lines.join(", "),
            orders,
            starved.status
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_5_near_ring() {
    let nr = fixtures::nearring4();
    let valid = check_classical(&ClassicalStructure::NearRing(nr.clone())).holds() && nr.char2;
    let sys = nearring_to_ternary(&nr).unwrap();
    let base = satisfies_all(&sys, &BASE_AXIOMS);
    let alt = complement_sum_ternary(&nr).unwrap();
    let t4 = check_axiom(&alt, AxiomId::T4);
    let witness = t4.witness.as_ref().map(|w| w.assignment.to_string()).unwrap_or_default();
    let five = t4.witness.as_ref().map(|w| w.assignment.values.len()).unwrap_or(0);
    let row = classify(&sys).row();
    let ok = valid && base && !t4.holds && five == 5 && row == [true, true, false, false, false];
    report(
        5,
        ok,
        &format!(
            "near-ring valid {valid}, T1-T4 {base}, alternative formula fails T4 at {witness}, row {}",
            classify(&sys).marks()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_round_trips() {
    let start = Instant::now();
    let mut ok = true;
    let mut done = Vec::new();
    for n in [6, 12, 30] {
        let d = fixtures::divisor_lattice(n);
        let sys = demorgan_to_ternary(&d).unwrap();
        let back = ternary_to_demorgan(&sys).unwrap();
        ok &= back == d && demorgan_to_ternary(&back).unwrap() == sys;
        done.push(format!("div{n}"));
    }
    for n in 2..=5 {
        let m = fixtures::lukasiewicz(n);
        let sys = mv_to_ternary(&m).unwrap();
        let back = ternary_mv_to_mv(&sys).unwrap();
        ok &= back == m && mv_to_ternary(&back).unwrap() == sys;
        done.push(format!("L{n}"));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    report(6, ok, &format!("exact round trips on {} in {elapsed:?}", done.join(", ")));
    assert!(ok);
}

#[test]
fn criterion_7_matrix() {
    let rows = summary_matrix();
    let extra = supplementary_rows();
    let describe = |r: &ternalg::verifier::MatrixRow| {
        format!("{} {} {}", r.fixture, r.marks, if r.matches { "ok" } else { "differs" })
    };
    let ok = rows.len() == 5 && rows.iter().all(|r| r.matches);
    report(
        7,
        ok,
        &format!(
            "rows: {}; supplementary: {}",
            rows.iter().map(describe).collect::<Vec<_>>().join(", "),
            extra.iter().map(describe).collect::<Vec<_>>().join(", ")
        ),
    );
    assert!(extra.iter().all(|r| r.matches));
    assert!(ok, "{rows:#?}");
}

#[test]
fn criterion_8_parser_and_desugaring() {
    let systems = small_representatives();
    let mut runner = TestRunner::new(Config {
        cases: 10_000,
        failure_persistence: None,
        ..Config::default()
    });
    let result = runner.run(&term(6), |t| {
        if t.depth() > 6 {
            return Err(TestCaseError::fail("depth"));
        }
        let printed = t.to_string();
        let back = parse_term(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        if back != t {
            return Err(TestCaseError::fail(format!("round trip changed {printed}")));
        }
        for s in &systems {
            if !desugar_commutes(&t, s) {
                return Err(TestCaseError::fail(format!("desugaring changes {printed}")));
            }
        }
        Ok(())
    });
    let ok = result.is_ok() && systems.len() == 3;
    report(
        8,
        ok,
        &format!(
            "10000 terms of depth <= 6 against {} representatives: {}",
            systems.len(),
            match &result {
                Ok(()) => "no failures".to_string(),
                Err(e) => e.to_string(),
            }
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_9_determinism() {
    let runs: [&[&str]; 3] = [
        &["enumerate", "--size", "3", "--axioms", "T1,T2,T3,T4"],
        &["enumerate", "--size", "4", "--axioms", "T1,T2,T3,T4", "--up-to-iso"],
        &["verify", "--all"],
    ];
    let mut ok = true;
    let mut bytes = 0;
    for args in runs {
        let mut outputs = Vec::new();
        for threads in ["1", "8", "1", "8"] {
            let mut full = vec!["--json", "--threads", threads];
            full.extend_from_slice(args);
            let (code, out) = stdout_of(&full);
            ok &= code == 0 && !out.is_empty();
            outputs.push(out);
        }
        ok &= outputs.windows(2).all(|w| w[0] == w[1]);
        bytes += outputs[0].len();
    }
    report(
        9,
        ok,
        &format!("enumerate and verify --all: byte-identical JSON across --threads 1/8, repeated ({bytes} bytes)"),
    );
    assert!(ok);
}
