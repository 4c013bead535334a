#![allow(dead_code)]

use std::io::Write;

use proptest::prelude::*;
use ternalg::search::{enumerate_models, SearchConfig};
use ternalg::structures::{TernarySystem, BASE_AXIOMS};
use ternalg::terms::{eval_term, Assignment, Term};

pub const VARS: [&str; 3] = ["a", "b", "c"];

/// Writes past the test harness capture so the line shows up in plain runs.
pub fn report(criterion: u32, ok: bool, detail: &str) {
    let line = format!("{} criterion {criterion}: {detail}\n", if ok { "PASS" } else { "FAIL" });
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
}

fn leaf() -> impl Strategy<Value = Term> {
    prop_oneof![
        4 => prop::sample::select(VARS.to_vec()).prop_map(Term::var),
        1 => Just(Term::Zero),
        1 => Just(Term::One),
    ]
}

/// Terms of depth at most `depth` over `a`, `b`, `c`, both constants and all
/// seven operations.
pub fn term(depth: u32) -> impl Strategy<Value = Term> {
    leaf().prop_recursive(depth, 48, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone(), inner.clone()).prop_map(|(x, y, z)| Term::P(x.into(), y.into(), z.into())),
            inner.clone().prop_map(|x| Term::Bar(x.into())),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Term::Dot(x.into(), y.into())),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Term::Circ(x.into(), y.into())),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Term::Wedge(x.into(), y.into())),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Term::Vee(x.into(), y.into())),
            (inner.clone(), inner).prop_map(|(x, y)| Term::Plus(x.into(), y.into())),
        ]
    })
}

/// The T1-T4 census representatives of sizes 2 and 3.
pub fn small_representatives() -> Vec<TernarySystem> {
    (2..=3)
        .flat_map(|n| {
            enumerate_models(&SearchConfig::new(n, &BASE_AXIOMS).up_to_iso(true))
                .expect("small census")
                .representatives
        })
        .collect()
}

/// `t` and its desugaring agree on every assignment of `a`, `b`, `c`.
pub fn desugar_commutes(t: &Term, sys: &TernarySystem) -> bool {
    let d = t.desugar();
    let n = sys.size();
    let vars: Vec<String> = VARS.iter().map(|v| v.to_string()).collect();
    (0..n * n * n).all(|k| {
        let asg = Assignment::new(vars.clone(), vec![k / (n * n), (k / n) % n, k % n]);
        eval_term(t, sys, &asg).unwrap() == eval_term(&d, sys, &asg).unwrap()
    })
}
