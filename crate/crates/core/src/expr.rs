//! Polynomial expression syntax.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-'? factor
//! factor   := base ('^' uint)?
//! base     := rational | identifier | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Multiplication is always explicit: `2theta` and `2 theta` are rejected.
//! Identifiers must be declared parameters.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse::<BigUint>().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(Error::Syntax {
                    pos: start,
                    expected: "a number, identifier, operator or parenthesis".into(),
                    found: format!("{ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    params: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().describe(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let Tok::Num(n) = self.peek().clone() else {
            return self.fail("an unsigned integer exponent");
        };
        let exp_pos = self.pos();
        self.bump();
        let e = u32::try_from(&n).map_err(|_| Error::Syntax {
            pos: exp_pos,
            expected: "an exponent below 2^32".into(),
            found: format!("number {n}"),
        })?;
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                let mut value = Rational::from_integer(n.into());
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let den_pos = self.pos();
                    let Tok::Num(d) = self.peek().clone() else {
                        return self.fail("an unsigned integer denominator");
                    };
                    self.bump();
                    if d.is_zero() {
                        return Err(Error::ZeroDenominator(den_pos));
                    }
                    value /= Rational::from_integer(d.into());
                }
                Ok(Polynomial::constant(value))
            }
            Tok::Ident(name) => {
                if !self.params.contains(&name) {
                    return Err(Error::UnknownParameter(name));
                }
                self.bump();
                Ok(Polynomial::var(&name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail("')' or an operator");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.fail("a number, parameter or '('"),
        }
    }
}

/// Parses `expr` into an exact polynomial over the declared `parameters`.
pub fn parse_poly(expr: &str, parameters: &[String]) -> Result<Polynomial> {
    let mut p = Parser {
        toks: lex(expr)?,
        at: 0,
        params: parameters,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("an operator or end of input");
    }
    Ok(out)
}

/// Canonical text: ascending graded-lex terms, explicit `*` and `^`.
pub fn format_poly(p: &Polynomial) -> String {
    p.to_string()
}
