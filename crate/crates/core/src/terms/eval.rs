use serde::Serialize;
use thiserror::Error;

use super::{Assignment, Identity, Term};
use crate::structures::TernarySystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("value {value} for `{var}` is outside the carrier of size {size}")]
    OutOfRange { var: String, value: usize, size: usize },
}

/// Evaluates `t` in `sys`. Derived nodes are computed through their `p`
/// definitions on the fly.
pub fn eval_term(t: &Term, sys: &TernarySystem, asg: &Assignment) -> Result<usize, EvalError> {
    let bar = |x: usize| sys.p(sys.one(), x, sys.zero());
    Ok(match t {
        Term::Var(name) => {
            let value = asg
                .get(name)
                .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?;
            if value >= sys.size() {
                return Err(EvalError::OutOfRange {
                    var: name.clone(),
                    value,
                    size: sys.size(),
                });
            }
            value
        }
        Term::Zero => sys.zero(),
        Term::One => sys.one(),
        Term::P(a, b, c) => sys.p(
            eval_term(a, sys, asg)?,
            eval_term(b, sys, asg)?,
            eval_term(c, sys, asg)?,
        ),
        Term::Bar(a) => bar(eval_term(a, sys, asg)?),
        Term::Dot(a, b) => sys.p(sys.zero(), eval_term(a, sys, asg)?, eval_term(b, sys, asg)?),
        Term::Circ(a, b) => sys.p(eval_term(a, sys, asg)?, eval_term(b, sys, asg)?, sys.one()),
        Term::Wedge(a, b) => {
            let (x, y) = (eval_term(a, sys, asg)?, eval_term(b, sys, asg)?);
            sys.p(y, bar(x), sys.zero())
        }
        Term::Vee(a, b) => {
            let (x, y) = (eval_term(a, sys, asg)?, eval_term(b, sys, asg)?);
            sys.p(sys.one(), bar(y), x)
        }
        Term::Plus(a, b) => {
            let (x, y) = (eval_term(a, sys, asg)?, eval_term(b, sys, asg)?);
            sys.p(x, y, bar(x))
        }
    })
}

/// A desugared term with variables resolved to positions in a fixed variable
/// list. This is the form the exhaustive checker and the model search run on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compiled {
    Var(usize),
    Zero,
    One,
    P(Box<Compiled>, Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    pub fn compile(t: &Term, vars: &[String]) -> Result<Compiled, EvalError> {
        fn go(t: &Term, vars: &[String]) -> Result<Compiled, EvalError> {
            Ok(match t {
                Term::Var(name) => Compiled::Var(
                    vars.iter()
                        .position(|v| v == name)
                        .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?,
                ),
                Term::Zero => Compiled::Zero,
                Term::One => Compiled::One,
                Term::P(a, b, c) => Compiled::P(
                    Box::new(go(a, vars)?),
                    Box::new(go(b, vars)?),
                    Box::new(go(c, vars)?),
                ),
                _ => unreachable!("compile runs on desugared terms"),
            })
        }
        go(&t.desugar(), vars)
    }

    pub fn eval(&self, sys: &TernarySystem, vals: &[usize]) -> usize {
        match self {
            Compiled::Var(i) => vals[*i],
            Compiled::Zero => sys.zero(),
            Compiled::One => sys.one(),
            Compiled::P(a, b, c) => sys.p(a.eval(sys, vals), b.eval(sys, vals), c.eval(sys, vals)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub holds: bool,
    /// Lexicographically first falsifying assignment.
    pub witness: Option<Assignment>,
    pub evaluations: u64,
    pub failures: u64,
}

/// Checks `id` under every one of the `n^k` assignments, in lexicographic
/// order of (variable order, element index).
pub fn check_identity(id: &Identity, sys: &TernarySystem) -> IdentityReport {
    let lhs = Compiled::compile(&id.lhs, &id.vars).expect("identity vars cover both sides");
    let rhs = Compiled::compile(&id.rhs, &id.vars).expect("identity vars cover both sides");
    let n = sys.size();
    let k = id.vars.len();
    let mut vals = vec![0usize; k];
    let mut witness = None;
    let mut evaluations = 0u64;
    let mut failures = 0u64;
    loop {
        evaluations += 1;
        if lhs.eval(sys, &vals) != rhs.eval(sys, &vals) {
            failures += 1;
            if witness.is_none() {
                witness = Some(Assignment::new(id.vars.clone(), vals.clone()));
            }
        }
        if !odometer(&mut vals, n) {
            break;
        }
    }
    IdentityReport {
        identity: id.to_string(),
        holds: witness.is_none(),
        witness,
        evaluations,
        failures,
    }
}

/// Advances `vals` to the next tuple in lexicographic order (last position
/// fastest). Returns false after the last tuple.
pub(crate) fn odometer(vals: &mut [usize], n: usize) -> bool {
    for i in (0..vals.len()).rev() {
        vals[i] += 1;
        if vals[i] < n {
            return true;
        }
        vals[i] = 0;
    }
    false
}
