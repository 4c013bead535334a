//! Recursive-descent parser for terms and identities.
//!
//! ```text
//! identity := expr '=' expr
//! expr     := primary (binop primary)*        left-associative, one precedence level
//! binop    := '.' | 'o' | '^' | 'v' | '+'
//! primary  := '0' | '1' | var | 'p' '(' expr ',' expr ',' expr ')' | 'bar' '(' expr ')' | '(' expr ')'
//! var      := [a-z][a-z0-9_]*   excluding the keywords p, bar, o, v
//! ```

use std::fmt;

use thiserror::Error;

use super::{BinOp, Identity, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: found {found}, expected one of {}", expected.join(", "))]
    Syntax {
        offset: usize,
        found: String,
        expected: Vec<String>,
    },
    #[error("identity has more than one '=' (second one at byte {offset})")]
    DuplicateEquals { offset: usize },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::DuplicateEquals { offset } => *offset,
            ParseError::Line { source, .. } => source.offset(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    P,
    Bar,
    Op(BinOp),
    LParen,
    RParen,
    Comma,
    Eq,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "variable `{s}`"),
            Tok::Zero => f.write_str("`0`"),
            Tok::One => f.write_str("`1`"),
            Tok::P => f.write_str("`p`"),
            Tok::Bar => f.write_str("`bar`"),
            Tok::Op(op) => write!(f, "`{}`", op.symbol()),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'0' => Tok::Zero,
            b'1' => Tok::One,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'=' => Tok::Eq,
            b'.' => Tok::Op(BinOp::Dot),
            b'^' => Tok::Op(BinOp::Wedge),
            b'+' => Tok::Op(BinOp::Plus),
            b'a'..=b'z' => {
                let mut j = i + 1;
                while j < bytes.len() && matches!(bytes[j], b'a'..=b'z' | b'0'..=b'9' | b'_') {
                    j += 1;
                }
                let word = &src[i..j];
                i = j;
                let tok = match word {
                    "p" => Tok::P,
                    "bar" => Tok::Bar,
                    "o" => Tok::Op(BinOp::Circ),
                    "v" => Tok::Op(BinOp::Vee),
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    offset: i,
                    found: format!("character `{ch}`"),
                    expected: primary_expected(),
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((src.len(), Tok::Eof));
    Ok(out)
}

fn primary_expected() -> Vec<String> {
    ["`0`", "`1`", "variable", "`p(`", "`bar(`", "`(`"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<String>) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            found: self.peek().to_string(),
            expected,
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(vec![want.to_string()]))
        }
    }

    /// `follow` lists what may legally end the expression in this context.
    fn expr(&mut self, follow: &[Tok]) -> Result<Term, ParseError> {
        let mut lhs = self.primary()?;
        loop {
            match self.peek().clone() {
                Tok::Op(op) => {
                    self.bump();
                    let rhs = self.primary()?;
                    lhs = Term::binary(op, lhs, rhs);
                }
                t if follow.contains(&t) => return Ok(lhs),
                _ => {
                    let mut expected: Vec<String> =
                        BinOp::ALL.iter().map(|op| format!("`{}`", op.symbol())).collect();
                    expected.extend(follow.iter().map(|t| t.to_string()));
                    return Err(self.error(expected));
                }
            }
        }
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Zero => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::One => {
                self.bump();
                Ok(Term::One)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::P => {
                self.bump();
                self.expect(Tok::LParen)?;
                let a = self.expr(&[Tok::Comma])?;
                self.expect(Tok::Comma)?;
                let b = self.expr(&[Tok::Comma])?;
                self.expect(Tok::Comma)?;
                let c = self.expr(&[Tok::RParen])?;
                self.expect(Tok::RParen)?;
                Ok(Term::p(a, b, c))
            }
            Tok::Bar => {
                self.bump();
                self.expect(Tok::LParen)?;
                let a = self.expr(&[Tok::RParen])?;
                self.expect(Tok::RParen)?;
                Ok(Term::bar(a))
            }
            Tok::LParen => {
                self.bump();
                let a = self.expr(&[Tok::RParen])?;
                self.expect(Tok::RParen)?;
                Ok(a)
            }
            _ => Err(self.error(primary_expected())),
        }
    }
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let t = p.expr(&[Tok::Eof])?;
    p.expect(Tok::Eof)?;
    Ok(t)
}

pub fn parse_identity(src: &str) -> Result<Identity, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let lhs = p.expr(&[Tok::Eq])?;
    p.expect(Tok::Eq)?;
    let rhs = match p.expr(&[Tok::Eof]) {
        Ok(t) => t,
        Err(e) => {
            if *p.peek() == Tok::Eq {
                return Err(ParseError::DuplicateEquals { offset: p.offset() });
            }
            return Err(e);
        }
    };
    p.expect(Tok::Eof)?;
    Ok(Identity::new(lhs, rhs))
}

/// One identity per line; `#` starts a comment, blank lines are skipped.
pub fn parse_identity_file(src: &str) -> Result<Vec<Identity>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let id = parse_identity(body).map_err(|e| ParseError::Line {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(id);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Term {
        Term::var(s)
    }

    #[test]
    fn parses_constructor_images() {
        assert_eq!(parse_term("p(0,a,1)").unwrap(), Term::p(Term::Zero, v("a"), Term::One));
        assert_eq!(
            parse_term("bar(p(a,b,c))").unwrap(),
            Term::bar(Term::p(v("a"), v("b"), v("c")))
        );
        assert_eq!(
            parse_term("a + b").unwrap(),
            Term::binary(BinOp::Plus, v("a"), v("b"))
        );
    }

    #[test]
    fn binary_ops_are_left_associative() {
        let t = parse_term("a . b o c").unwrap();
        let expected = Term::binary(
            BinOp::Circ,
            Term::binary(BinOp::Dot, v("a"), v("b")),
            v("c"),
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn keywords_are_operators_not_variables() {
        let t = parse_term("x v y ^ z").unwrap();
        assert_eq!(
            t,
            Term::binary(BinOp::Wedge, Term::binary(BinOp::Vee, v("x"), v("y")), v("z"))
        );
        // identifiers that merely start with a keyword are ordinary variables
        assert_eq!(parse_term("bar1").unwrap(), v("bar1"));
        assert_eq!(parse_term("ov").unwrap(), v("ov"));
    }

    #[test]
    fn identities_collect_vars() {
        let id = parse_identity("p(a,b,a) = a").unwrap();
        assert_eq!(id.vars, vec!["a", "b"]);
        let id = parse_identity("bar(bar(a)) = a").unwrap();
        assert_eq!(id.vars, vec!["a"]);
        let id = parse_identity("0 = 0").unwrap();
        assert!(id.vars.is_empty());
    }

    #[test]
    fn syntax_error_reports_offset_and_expectations() {
        let err = parse_term("p(a, b)").unwrap_err();
        match err {
            ParseError::Syntax { offset, expected, .. } => {
                assert_eq!(offset, 6);
                assert!(expected.contains(&"`,`".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_term("a + ").unwrap_err();
        assert_eq!(err.offset(), 4);
        let err = parse_term("A").unwrap_err();
        assert_eq!(err.offset(), 0);
    }

    #[test]
    fn duplicate_equals_is_named() {
        let err = parse_identity("a = b = c").unwrap_err();
        assert_eq!(err, ParseError::DuplicateEquals { offset: 6 });
        assert!(matches!(parse_identity("a b"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_identity("a"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn identity_file_skips_comments() {
        let src = "# axioms\np(0,a,1) = a   # T1\n\n  \np(a,b,a) = a\n";
        let ids = parse_identity_file(src).unwrap();
        assert_eq!(ids.len(), 2);
        let err = parse_identity_file("a = a\nb = \n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 2, .. }));
    }
}
