//! Infix polynomial grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`, `x y`) is rejected.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::Rational;
use crate::error::ParseError;

use super::{Polynomial, VarContext};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

struct Spanned {
    tok: Tok,
    col: usize,
}

fn lex(src: &str, line: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Spanned { tok: Tok::Int(digits.parse().expect("ascii digits")), col });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned { tok: Tok::Ident(chars[start..i].iter().collect()), col });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(ParseError::new(line, col, format!("unexpected character `{other}`"))),
        };
        out.push(Spanned { tok, col });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_col: usize,
    ctx: &'a VarContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.err(format!("expected {expected}, found {}", t.describe())),
            None => self.err(format!("expected {expected}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let exp = match self.peek() {
                Some(Tok::Int(n)) => n.to_u32().ok_or_else(|| self.err("exponent is too large"))?,
                _ => return Err(self.unexpected("a nonnegative integer exponent")),
            };
            self.pos += 1;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    let d = match self.peek() {
                        Some(Tok::Int(d)) => d.clone(),
                        _ => return Err(self.unexpected("an integer denominator")),
                    };
                    let value = Rational::new(n, d).map_err(|_| self.err("zero denominator"))?;
                    self.pos += 1;
                    return Ok(Polynomial::constant(self.ctx, value));
                }
                Ok(Polynomial::constant(self.ctx, Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                let idx = self.ctx.index_of(&name).ok_or_else(|| self.err(format!("unknown identifier `{name}`")))?;
                self.pos += 1;
                Ok(Polynomial::var(self.ctx, idx))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.unexpected("`)`")),
                }
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }
}

/// Parses `src` as line `line` of some larger input (for error positions).
pub fn parse_polynomial_at(src: &str, ctx: &VarContext, line: usize) -> Result<Polynomial, ParseError> {
    let toks = lex(src, line)?;
    let end_col = src.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, line, end_col, ctx };
    let poly = p.expr()?;
    match p.peek() {
        None => Ok(poly),
        Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
            Err(p.err("implicit multiplication is not allowed; write `*` explicitly"))
        }
        Some(Tok::Slash) => Err(p.err("`/` is only allowed between integer literals")),
        Some(_) => Err(p.unexpected("an operator or end of input")),
    }
}

pub fn parse_polynomial(src: &str, ctx: &VarContext) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(src, ctx, 1)
}

/// Distinct identifiers in order of first appearance.
pub fn identifiers_in(src: &str) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = Vec::new();
    for s in lex(src, 1)? {
        if let Tok::Ident(n) = s.tok {
            if !names.contains(&n) {
                names.push(n);
            }
        }
    }
    Ok(names)
}
