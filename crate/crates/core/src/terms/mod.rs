//! Terms and equational identities over the ternary signature.
//!
//! The base signature is `p` (ternary) with the constants `0` and `1`. The six
//! derived operations are kept as their own nodes so that a printed term reads
//! the way it was written; [`Term::desugar`] rewrites them into pure `p` terms:
//!
//! | node         | meaning            |
//! |--------------|--------------------|
//! | `bar(a)`     | `p(1, a, 0)`       |
//! | `a . b`      | `p(0, a, b)`       |
//! | `a o b`      | `p(a, b, 1)`       |
//! | `a ^ b`      | `p(b, bar(a), 0)`  |
//! | `a v b`      | `p(1, bar(b), a)`  |
//! | `a + b`      | `p(a, b, bar(a))`  |

mod eval;
mod parser;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use eval::{check_identity, eval_term, Compiled, EvalError, IdentityReport};
pub use parser::{parse_identity, parse_identity_file, parse_term, ParseError};
pub(crate) use eval::odometer;

/// Binary derived operations, in the order they appear in the signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Dot,
    Circ,
    Wedge,
    Vee,
    Plus,
}

impl BinOp {
    pub const ALL: [BinOp; 5] = [BinOp::Dot, BinOp::Circ, BinOp::Wedge, BinOp::Vee, BinOp::Plus];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Dot => ".",
            BinOp::Circ => "o",
            BinOp::Wedge => "^",
            BinOp::Vee => "v",
            BinOp::Plus => "+",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    P(Box<Term>, Box<Term>, Box<Term>),
    Bar(Box<Term>),
    Dot(Box<Term>, Box<Term>),
    Circ(Box<Term>, Box<Term>),
    Wedge(Box<Term>, Box<Term>),
    Vee(Box<Term>, Box<Term>),
    Plus(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn p(a: Term, b: Term, c: Term) -> Term {
        Term::P(Box::new(a), Box::new(b), Box::new(c))
    }

    pub fn bar(a: Term) -> Term {
        Term::Bar(Box::new(a))
    }

    pub fn binary(op: BinOp, a: Term, b: Term) -> Term {
        let (a, b) = (Box::new(a), Box::new(b));
        match op {
            BinOp::Dot => Term::Dot(a, b),
            BinOp::Circ => Term::Circ(a, b),
            BinOp::Wedge => Term::Wedge(a, b),
            BinOp::Vee => Term::Vee(a, b),
            BinOp::Plus => Term::Plus(a, b),
        }
    }

    /// Splits a binary node into its operator and operands.
    pub fn as_binary(&self) -> Option<(BinOp, &Term, &Term)> {
        match self {
            Term::Dot(a, b) => Some((BinOp::Dot, a, b)),
            Term::Circ(a, b) => Some((BinOp::Circ, a, b)),
            Term::Wedge(a, b) => Some((BinOp::Wedge, a, b)),
            Term::Vee(a, b) => Some((BinOp::Vee, a, b)),
            Term::Plus(a, b) => Some((BinOp::Plus, a, b)),
            _ => None,
        }
    }

    /// Number of derived (non-`p`, non-leaf) nodes.
    pub fn derived_nodes(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 0,
            Term::P(a, b, c) => a.derived_nodes() + b.derived_nodes() + c.derived_nodes(),
            Term::Bar(a) => 1 + a.derived_nodes(),
            other => {
                let (_, a, b) = other.as_binary().expect("binary node");
                1 + a.derived_nodes() + b.derived_nodes()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 0,
            Term::P(a, b, c) => 1 + a.depth().max(b.depth()).max(c.depth()),
            Term::Bar(a) => 1 + a.depth(),
            other => {
                let (_, a, b) = other.as_binary().expect("binary node");
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Rewrites every innermost derived node (one whose operands are already
    /// pure) into `p` form. Each pass removes at least one derived node and
    /// introduces none.
    pub fn desugar_step(&self) -> Term {
        let bar = |x: Term| Term::p(Term::One, x, Term::Zero);
        match self {
            Term::Var(_) | Term::Zero | Term::One => self.clone(),
            Term::P(a, b, c) => Term::p(a.desugar_step(), b.desugar_step(), c.desugar_step()),
            Term::Bar(a) if a.derived_nodes() > 0 => Term::bar(a.desugar_step()),
            Term::Bar(a) => bar((**a).clone()),
            _ => {
                let (op, a, b) = self.as_binary().expect("binary node");
                if a.derived_nodes() + b.derived_nodes() > 0 {
                    return Term::binary(op, a.desugar_step(), b.desugar_step());
                }
                let (a, b) = (a.clone(), b.clone());
                match op {
                    BinOp::Dot => Term::p(Term::Zero, a, b),
                    BinOp::Circ => Term::p(a, b, Term::One),
                    BinOp::Wedge => Term::p(b, bar(a), Term::Zero),
                    BinOp::Vee => Term::p(Term::One, bar(b), a),
                    BinOp::Plus => Term::p(a.clone(), b, bar(a)),
                }
            }
        }
    }

    /// Full rewrite into a `{p, 0, 1, variables}` term.
    pub fn desugar(&self) -> Term {
        let mut t = self.clone();
        while t.derived_nodes() > 0 {
            t = t.desugar_step();
        }
        t
    }

    /// Variables in first-occurrence order, without duplicates.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Zero | Term::One => {}
            Term::P(a, b, c) => {
                a.collect_vars(out);
                b.collect_vars(out);
                c.collect_vars(out);
            }
            Term::Bar(a) => a.collect_vars(out),
            other => {
                let (_, a, b) = other.as_binary().expect("binary node");
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Fully parenthesised printing; [`parse_term`] reads it back unchanged.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::P(a, b, c) => write!(f, "p({a}, {b}, {c})"),
            Term::Bar(a) => write!(f, "bar({a})"),
            other => {
                let (op, a, b) = other.as_binary().expect("binary node");
                write!(f, "({a} {} {b})", op.symbol())
            }
        }
    }
}

/// An equation `lhs = rhs`, universally quantified over `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub vars: Vec<String>,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Identity {
        let mut vars = lhs.variables();
        for v in rhs.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        Identity { lhs, rhs, vars }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Values for an ordered list of variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub vars: Vec<String>,
    pub values: Vec<usize>,
}

impl Assignment {
    pub fn new(vars: Vec<String>, values: Vec<usize>) -> Assignment {
        assert_eq!(vars.len(), values.len(), "assignment arity mismatch");
        Assignment { vars, values }
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name).map(|i| self.values[i])
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(&self.values)
            .map(|(v, x)| format!("{v}={x}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}
