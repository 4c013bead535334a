//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a check, conversion precondition or
//! verification fails (a witness is printed), 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classical::{
    classify, ternary_mv_to_mv, ternary_to_demorgan, ternary_to_ring, ClassicalError, ClassicalStructure,
    ClassificationMatrix, RingLike,
};
use crate::io::{self, census_doc, classical_doc, system_doc, to_json, Document, Loaded};
use crate::par::{with_threads, Execution};
use crate::search::{enumerate_models, ModelCensus, SearchConfig, SlotOrder};
use crate::structures::{check_axiom_set, derive, parse_axiom_list, AxiomReport, TernarySystem};
use crate::terms::{check_identity, parse_identity};
use crate::verifier::{
    classical_vector, condition_vector, verify, verify_all, AllReport, ConditionVector, MatrixRow, Status,
    TheoremId, VerificationReport, VerifyOptions, Witness,
};

pub const BUDGET_ENV: &str = "TERNALG_BUDGET_MS";

#[derive(Debug, Parser)]
#[command(name = "ternalg", version, about = "Finite ternary algebras: checking, conversion, enumeration, verification")]
pub struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker thread cap for enumeration and verification.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check axioms on a system (classical inputs are converted first).
    Check {
        file: PathBuf,
        #[arg(long, default_value = "T1,T2,T3,T4")]
        axioms: String,
    },
    /// Print the derived operation tables.
    Derive { file: PathBuf },
    /// Print the classification row.
    Classify { file: PathBuf },
    /// Convert between ternary systems and classical structures.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
    },
    /// Enumerate all models of an axiom set at one size.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value = "T1,T2,T3,T4")]
        axioms: String,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, value_name = "N")]
        budget_nodes: Option<u64>,
        #[arg(long, value_enum, default_value_t = OrderArg::Planes)]
        order: OrderArg,
    },
    /// Verify one claim or all of them.
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, value_name = "N")]
        budget_nodes: Option<u64>,
        /// Evaluate the claim on this one input only.
        #[arg(long, requires = "theorem")]
        file: Option<PathBuf>,
    },
    /// Check one identity on a system.
    Eval {
        #[arg(long)]
        identity: String,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Ternary,
    #[value(name = "de-morgan")]
    DeMorgan,
    Mv,
    #[value(name = "ring2")]
    Ring2,
    #[value(name = "near-ring")]
    NearRing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Planes,
    Lex,
    #[value(name = "middle-first")]
    MiddleFirst,
}

impl From<OrderArg> for SlotOrder {
    fn from(o: OrderArg) -> SlotOrder {
        match o {
            OrderArg::Planes => SlotOrder::Planes,
            OrderArg::Lex => SlotOrder::Lex,
            OrderArg::MiddleFirst => SlotOrder::MiddleFirst,
        }
    }
}

enum Fail {
    /// Exit 1; the report has been printed.
    Check,
    /// Exit 2.
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Fail {
        Fail::Input(e.to_string())
    }
}

type Res = Result<(), Fail>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let threads = cli.threads;
    let (r, buf) = with_threads(threads, || {
        let mut buf = Vec::new();
        let r = dispatch(&cli, &mut buf);
        (r, buf)
    });
    let _ = out.write_all(&buf);
    match r {
        Ok(()) => 0,
        Err(Fail::Check) => 1,
        Err(Fail::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn time_budget() -> Result<Option<Duration>, Fail> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|ms| Some(Duration::from_millis(ms)))
            .map_err(|_| Fail::Input(format!("{BUDGET_ENV} must be a number of milliseconds, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Res {
    let json = cli.json;
    match &cli.command {
        Command::Check { file, axioms } => cmd_check(file, axioms, json, out),
        Command::Derive { file } => cmd_derive(file, json, out),
        Command::Classify { file } => cmd_classify(file, json, out),
        Command::Convert { to, file } => cmd_convert(*to, file, out),
        Command::Enumerate {
            size,
            axioms,
            up_to_iso,
            budget_nodes,
            order,
        } => {
            let axioms = parse_axiom_list(axioms)?;
            let cfg = SearchConfig::new(*size, &axioms)
                .up_to_iso(*up_to_iso)
                .order((*order).into())
                .node_budget(*budget_nodes)
                .time_budget(time_budget()?);
            let census = enumerate_models(&cfg)?;
            print_census(&census, json, out)
        }
        Command::Verify {
            theorem,
            all,
            max_size,
            budget_nodes,
            file,
        } => {
            let mut opts = VerifyOptions::default().max_size(*max_size).time_budget(time_budget()?);
            if budget_nodes.is_some() {
                opts = opts.node_budget(*budget_nodes);
            }
            if cli.threads == Some(1) {
                opts = opts.execution(Execution::Sequential);
            }
            if *all {
                let report = verify_all(&opts)?;
                print_all(&report, json, out)
            } else {
                let t: TheoremId = theorem.as_deref().expect("clap enforces --theorem").parse()?;
                match file {
                    Some(f) => cmd_vector(t, f, json, out),
                    None => {
                        let report = verify(t, &opts)?;
                        print_report(&report, json, out)?;
                        if report.status == Status::Counterexample {
                            Err(Fail::Check)
                        } else {
                            Ok(())
                        }
                    }
                }
            }
        }
        Command::Eval { identity, file } => cmd_eval(identity, file, json, out),
    }
}

/// The input as a ternary system, converting classical structures with
/// their formula.
fn load_system(path: &Path) -> Result<(TernarySystem, Option<ClassicalStructure>), Fail> {
    match io::load_path(path)? {
        Loaded::System(s) => Ok((s, None)),
        Loaded::Classical(c) => {
            let s = c.to_ternary()?;
            Ok((s, Some(c)))
        }
        Loaded::Census(_) => Err(Fail::Input(format!(
            "{} is a census; expected a system or a classical structure",
            path.display()
        ))),
    }
}

fn put(out: &mut Vec<u8>, s: impl AsRef<str>) {
    out.extend_from_slice(s.as_ref().as_bytes());
    out.push(b'\n');
}

fn put_json<T: Serialize>(out: &mut Vec<u8>, v: &T) {
    out.extend_from_slice(to_json(v).as_bytes());
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    input: String,
    holds: bool,
    axioms: &'a [AxiomReport],
}

fn cmd_check(file: &Path, axioms: &str, json: bool, out: &mut Vec<u8>) -> Res {
    let axioms = parse_axiom_list(axioms)?;
    let (sys, _) = load_system(file)?;
    let reports = check_axiom_set(&sys, &axioms, false);
    let holds = reports.iter().all(|r| r.holds);
    if json {
        put_json(
            out,
            &CheckOutput {
                input: file.display().to_string(),
                holds,
                axioms: &reports,
            },
        );
    } else {
        for r in &reports {
            match &r.witness {
                None => put(out, format!("{:<10} holds", r.axiom.name())),
                Some(w) => {
                    put(out, format!("{:<10} FAILS  {}  at {}", r.axiom.name(), w.identity, w.assignment));
                    put(
                        out,
                        format!(
                            "           re-run: ternalg eval --identity \"{}\" {}",
                            w.identity,
                            file.display()
                        ),
                    );
                }
            }
        }
        put(out, if holds { "all hold" } else { "some axioms fail" });
    }
    if holds {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}

fn label_of(sys: &TernarySystem, x: usize) -> String {
    sys.label(x)
}

fn cayley(out: &mut Vec<u8>, sys: &TernarySystem, name: &str, cells: &[usize]) {
    let n = sys.size();
    let w = (0..n).map(|x| label_of(sys, x).chars().count()).max().unwrap_or(1).max(name.chars().count());
    let mut head = format!("{name:>w$} |");
    for b in 0..n {
        head.push_str(&format!(" {:>w$}", label_of(sys, b)));
    }
    put(out, &head);
    put(out, format!("{}-+{}", "-".repeat(w), "-".repeat((w + 1) * n)));
    for a in 0..n {
        let mut line = format!("{:>w$} |", label_of(sys, a));
        for b in 0..n {
            line.push_str(&format!(" {:>w$}", label_of(sys, cells[a * n + b])));
        }
        put(out, line);
    }
    put(out, "");
}

fn cmd_derive(file: &Path, json: bool, out: &mut Vec<u8>) -> Res {
    let (sys, _) = load_system(file)?;
    let d = derive(&sys);
    if json {
        put_json(out, &d);
        return Ok(());
    }
    let n = sys.size();
    let labels: Vec<String> = (0..n).map(|x| label_of(&sys, x)).collect();
    let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1).max(3);
    put(out, format!("{:>w$} | {}", "a", labels.iter().map(|l| format!("{l:>w$}")).collect::<Vec<_>>().join(" ")));
    put(
        out,
        format!(
            "{:>w$} | {}",
            "bar",
            d.bar.iter().map(|&x| format!("{:>w$}", labels[x])).collect::<Vec<_>>().join(" ")
        ),
    );
    put(out, "");
    for (name, cells) in d.named_tables() {
        cayley(out, &sys, name, cells);
    }
    Ok(())
}

fn cmd_classify(file: &Path, json: bool, out: &mut Vec<u8>) -> Res {
    let (sys, _) = load_system(file)?;
    let m: ClassificationMatrix = classify(&sys);
    if json {
        put_json(out, &m);
    } else {
        put(out, ClassificationMatrix::HEADERS.join(" | "));
        put(out, m.marks());
        put(
            out,
            format!("class: {}", m.label.map(|l| l.name().to_string()).unwrap_or_else(|| "none".into())),
        );
    }
    Ok(())
}

fn print_precondition(e: &ClassicalError, out: &mut Vec<u8>) -> Fail {
    match e {
        ClassicalError::Precondition { axiom, witness } => {
            let mut s = format!("precondition {axiom} fails");
            if let Some(w) = witness {
                s.push_str(&format!(": {} at {}", w.identity, w.assignment));
            }
            put(out, s);
            Fail::Check
        }
        ClassicalError::Invalid { kind, law, witness } => {
            put(out, format!("not a valid {kind}: `{law}` fails at {witness:?}"));
            Fail::Check
        }
        ClassicalError::LeftDistributiveOnly { witness } => {
            put(out, format!("multiplication is only left-distributive (fails right at {witness:?})"));
            Fail::Check
        }
        other => Fail::Input(other.to_string()),
    }
}

fn cmd_convert(to: Target, file: &Path, out: &mut Vec<u8>) -> Res {
    let (sys, _) = load_system(file)?;
    let doc: Result<Document, ClassicalError> = match to {
        Target::Ternary => Ok(system_doc(&sys)),
        Target::DeMorgan => ternary_to_demorgan(&sys).map(|d| classical_doc(&ClassicalStructure::DeMorgan(d))),
        Target::Mv => ternary_mv_to_mv(&sys).map(|m| classical_doc(&ClassicalStructure::Mv(m))),
        Target::Ring2 => match ternary_to_ring(&sys) {
            Ok(RingLike::Ring(r)) => Ok(classical_doc(&ClassicalStructure::Ring(r))),
            Ok(RingLike::NearRing(_)) => {
                put(out, "not a ring: left distributivity fails (convert --to near-ring instead)");
                return Err(Fail::Check);
            }
            Err(e) => Err(e),
        },
        Target::NearRing => ternary_to_ring(&sys).map(|r| match r {
            RingLike::Ring(r) => classical_doc(&ClassicalStructure::NearRing(r.to_nearring())),
            RingLike::NearRing(nr) => classical_doc(&ClassicalStructure::NearRing(nr)),
        }),
    };
    match doc {
        Ok(d) => {
            put_json(out, &d);
            Ok(())
        }
        Err(e) => Err(print_precondition(&e, out)),
    }
}

fn cmd_eval(identity: &str, file: &Path, json: bool, out: &mut Vec<u8>) -> Res {
    let id = parse_identity(identity)?;
    let (sys, _) = load_system(file)?;
    let r = check_identity(&id, &sys);
    if json {
        put_json(out, &r);
    } else {
        match &r.witness {
            None => put(out, format!("holds: {}  ({} assignments)", r.identity, r.evaluations)),
            Some(w) => {
                put(out, format!("fails: {}", r.identity));
                put(out, format!("  at {w}  ({} of {} assignments fail)", r.failures, r.evaluations));
            }
        }
    }
    if r.holds {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}

fn print_census(c: &ModelCensus, json: bool, out: &mut Vec<u8>) -> Res {
    if json {
        put_json(out, &census_doc(c));
        return Ok(());
    }
    let names: Vec<&str> = c.axioms.iter().map(|a| a.name()).collect();
    put(out, format!("size {}, axioms {}", c.size, names.join(",")));
    put(out, format!("models:      {}", c.total_models));
    put(out, format!("iso classes: {}", c.iso_classes));
    put(out, format!("complete:    {}", if c.complete { "yes" } else { "no (budget exhausted)" }));
    let s = &c.stats;
    put(
        out,
        format!(
            "stats: pinned {} nodes {} propagations {} prunes {} rejected {} subtrees {} ({:.1} ms)",
            s.pinned,
            s.nodes,
            s.propagations,
            s.prunes,
            s.rejected,
            s.subtrees,
            s.elapsed.as_secs_f64() * 1e3
        ),
    );
    for (k, r) in c.representatives.iter().enumerate() {
        put(out, "");
        put(out, format!("#{}  p table, rows (a,b), columns c:", k + 1));
        let n = r.size();
        for a in 0..n {
            let rows: Vec<String> = (0..n)
                .map(|b| (0..n).map(|cc| r.p(a, b, cc).to_string()).collect::<Vec<_>>().join(""))
                .collect();
            put(out, format!("  a={a}: {}", rows.join(" ")));
        }
    }
    Ok(())
}

fn print_witness(theorem: TheoremId, w: &Witness, out: &mut Vec<u8>) {
    put(out, format!("  witness: {}", w.case));
    if let Some(map) = &w.map {
        put(out, format!("  map: {map:?}"));
    }
    for c in &w.conditions {
        let mut line = format!("    [{}] {}", if c.holds { "x" } else { " " }, c.name);
        if let Some(f) = &c.failure {
            line.push_str(&format!("  -- {} at {}", f.law, f.at));
        }
        put(out, line);
    }
    put(out, format!("  system: {}", serde_json::to_string(&w.system).expect("serializable")));
    if let Some(t) = &w.target {
        put(out, format!("  target: {}", serde_json::to_string(t).expect("serializable")));
    }
    put(
        out,
        format!("  re-run: save the system line as witness.json, then `ternalg verify --theorem {theorem} --file witness.json`"),
    );
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Counterexample => "COUNTEREXAMPLE",
        Status::Incomplete => "incomplete",
    }
}

fn print_report(r: &VerificationReport, json: bool, out: &mut Vec<u8>) -> Res {
    if json {
        put_json(out, r);
        return Ok(());
    }
    put(out, format!("{}: {}", r.theorem, status_word(r.status)));
    put(out, format!("  claim: {}", r.statement));
    put(out, format!("  population: {}", r.population));
    put(out, format!("  cases in scope: {}  (outside hypotheses: {})", r.cases_checked, r.vacuous));
    if let Some(w) = &r.witness {
        print_witness(r.theorem, w, out);
    }
    Ok(())
}

fn marks(row: &[bool; 5]) -> String {
    row.iter().map(|&b| if b { "✓" } else { "✗" }).collect::<Vec<_>>().join(" ")
}

fn matrix_line(r: &MatrixRow) -> String {
    format!(
        "{:<20} {:<10} expected {}  observed {}  {}",
        r.class.name(),
        r.fixture,
        marks(&r.expected),
        marks(&r.observed),
        if r.matches { "ok" } else { "DIFFERS" }
    )
}

fn print_all(a: &AllReport, json: bool, out: &mut Vec<u8>) -> Res {
    if json {
        put_json(out, a);
    } else {
        put(out, format!("census sizes 2..={} (counts computed here)", a.max_size));
        for c in &a.censuses {
            let names: Vec<&str> = c.axioms.iter().map(|x| x.name()).collect();
            for s in &c.sizes {
                put(
                    out,
                    format!(
                        "  {:<28} n={}  models {:>4}  classes {:>3}  {}",
                        names.join(","),
                        s.size,
                        s.total,
                        s.iso_classes,
                        match (s.complete, s.orders_agree, s.orders.len()) {
                            (false, _, _) => "incomplete",
                            (true, false, _) => "orders disagree",
                            (true, true, 1) => "complete",
                            _ => "complete, two orders agree",
                        }
                    ),
                );
            }
        }
        put(out, "");
        for r in &a.reports {
            put(
                out,
                format!(
                    "{:<10} {:<14} cases {:>4}  vacuous {:>3}",
                    r.theorem.name(),
                    status_word(r.status),
                    r.cases_checked,
                    r.vacuous
                ),
            );
            if let Some(w) = &r.witness {
                print_witness(r.theorem, w, out);
            }
        }
        put(out, "");
        put(out, format!("{:<20} {:<10} columns: {}", "class", "fixture", crate::classical::ClassificationMatrix::HEADERS.join(", ")));
        for r in &a.matrix {
            put(out, matrix_line(r));
        }
        for r in &a.supplementary {
            put(out, format!("{}  (supplementary)", matrix_line(r)));
        }
    }
    if a.any_counterexample() {
        Err(Fail::Check)
    } else {
        Ok(())
    }
}

fn cmd_vector(t: TheoremId, file: &Path, json: bool, out: &mut Vec<u8>) -> Res {
    let vectors: Vec<ConditionVector> = match io::load_path(file)? {
        Loaded::System(s) => condition_vector(&s, t).into_iter().collect(),
        Loaded::Classical(c) => {
            let mut v: Vec<ConditionVector> = classical_vector(&c, t).into_iter().collect();
            if let Ok(s) = c.to_ternary() {
                v.extend(condition_vector(&s, t));
            }
            v
        }
        Loaded::Census(_) => return Err(Fail::Input("expected a system or a classical structure, got a census".into())),
    };
    if vectors.is_empty() {
        return Err(Fail::Input(format!("{t} does not apply to this input")));
    }
    if json {
        put_json(out, &vectors);
    } else {
        for v in &vectors {
            put(
                out,
                format!(
                    "{t}: hypotheses {}{}",
                    if v.hypotheses_hold { "hold" } else { "fail" },
                    v.hypothesis_failure.as_deref().map(|f| format!(" ({f})")).unwrap_or_default()
                ),
            );
            for c in &v.conditions {
                let mut line = format!("  [{}] {}", if c.holds { "x" } else { " " }, c.name);
                if let Some(f) = &c.failure {
                    line.push_str(&format!("  -- {} at {}", f.law, f.at));
                }
                put(out, line);
            }
            put(out, format!("  consistent with the claim: {}", if v.consistent() { "yes" } else { "NO" }));
        }
    }
    if vectors.iter().all(|v| v.consistent()) {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}
