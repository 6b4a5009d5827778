//! Tokens and polynomial expressions shared by the session parser and
//! [`PolyRing::parse`](crate::polyring::PolyRing::parse).

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(u64),
    Ident(String),
    Arrow,
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer `{v}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

pub(crate) fn error_at(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

pub fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s
                .parse::<u64>()
                .map_err(|_| error_at(pos, format!("integer `{s}` is too large")))?;
            col += i - start;
            out.push((Tok::Int(v), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'>') {
            i += 2;
            col += 2;
            out.push((Tok::Arrow, pos));
            continue;
        }
        if "+-*^()[]{},;:=/".contains(c) {
            i += 1;
            col += 1;
            out.push((Tok::Sym(c), pos));
            continue;
        }
        return Err(error_at(pos, format!("unexpected character `{c}`")));
    }
    out.push((Tok::Eof, Pos { line, column: col }));
    Ok(out)
}

/// Cursor over a token stream.
pub struct Cursor {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Cursor {
    pub fn new(toks: Vec<(Tok, Pos)>) -> Self {
        Self { toks, at: 0 }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    pub fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    pub fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    pub fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char, context: &str) -> Result<Pos> {
        let pos = self.pos();
        if self.eat(c) {
            Ok(pos)
        } else {
            Err(error_at(
                pos,
                format!("expected `{c}` {context}, found {}", self.peek()),
            ))
        }
    }

    pub fn expect_arrow(&mut self, context: &str) -> Result<()> {
        if *self.peek() == Tok::Arrow {
            self.bump();
            Ok(())
        } else {
            Err(error_at(
                self.pos(),
                format!("expected `->` {context}, found {}", self.peek()),
            ))
        }
    }

    pub fn ident(&mut self, what: &str) -> Result<(String, Pos)> {
        match self.bump() {
            (Tok::Ident(s), p) => Ok((s, p)),
            (t, p) => Err(error_at(p, format!("expected {what}, found {t}"))),
        }
    }

    pub fn int(&mut self, what: &str) -> Result<(u64, Pos)> {
        match self.bump() {
            (Tok::Int(v), p) => Ok((v, p)),
            (t, p) => Err(error_at(p, format!("expected {what}, found {t}"))),
        }
    }
}

/// Polynomial expression as written in source.
#[derive(Clone, Debug)]
pub enum PolyExpr {
    Int(u64),
    Var(String, Pos),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Neg(Box<PolyExpr>),
    Pow(Box<PolyExpr>, u64),
}

/// Structural equality that ignores source positions.
impl PartialEq for PolyExpr {
    fn eq(&self, other: &Self) -> bool {
        use PolyExpr::*;
        match (self, other) {
            (Int(a), Int(b)) => a == b,
            (Var(a, _), Var(b, _)) => a == b,
            (Add(a, b), Add(c, d)) | (Sub(a, b), Sub(c, d)) | (Mul(a, b), Mul(c, d)) => {
                a == c && b == d
            }
            (Neg(a), Neg(b)) => a == b,
            (Pow(a, m), Pow(b, n)) => a == b && m == n,
            _ => false,
        }
    }
}

impl PolyExpr {
    fn precedence(&self) -> u8 {
        match self {
            PolyExpr::Add(..) | PolyExpr::Sub(..) => 1,
            PolyExpr::Mul(..) => 2,
            PolyExpr::Neg(..) => 3,
            PolyExpr::Pow(..) => 4,
            PolyExpr::Int(_) | PolyExpr::Var(..) => 5,
        }
    }

    fn write_min(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            fmt::Display::fmt(self, f)?;
            f.write_str(")")
        } else {
            fmt::Display::fmt(self, f)
        }
    }

    /// Names of all variables occurring in the expression, with positions.
    pub fn variables(&self, out: &mut Vec<(String, Pos)>) {
        match self {
            PolyExpr::Int(_) => {}
            PolyExpr::Var(v, p) => out.push((v.clone(), *p)),
            PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) => {
                a.variables(out);
                b.variables(out);
            }
            PolyExpr::Neg(a) | PolyExpr::Pow(a, _) => a.variables(out),
        }
    }

    pub fn eval(&self, ring: &PolyRing) -> Result<Polynomial> {
        Ok(match self {
            PolyExpr::Int(v) => ring.constant((*v % ring.characteristic() as u64) as i64),
            PolyExpr::Var(name, pos) => match ring.var_index(name) {
                Some(i) => ring.var(i),
                None => return Err(error_at(*pos, format!("unknown variable `{name}`"))),
            },
            PolyExpr::Add(a, b) => &a.eval(ring)? + &b.eval(ring)?,
            PolyExpr::Sub(a, b) => &a.eval(ring)? - &b.eval(ring)?,
            PolyExpr::Mul(a, b) => &a.eval(ring)? * &b.eval(ring)?,
            PolyExpr::Neg(a) => -&a.eval(ring)?,
            PolyExpr::Pow(a, e) => a.eval(ring)?.pow(*e)?,
        })
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyExpr::Int(v) => write!(f, "{v}"),
            PolyExpr::Var(v, _) => f.write_str(v),
            PolyExpr::Add(a, b) => {
                a.write_min(f, 1)?;
                f.write_str(" + ")?;
                b.write_min(f, 2)
            }
            PolyExpr::Sub(a, b) => {
                a.write_min(f, 1)?;
                f.write_str(" - ")?;
                b.write_min(f, 2)
            }
            PolyExpr::Mul(a, b) => {
                a.write_min(f, 2)?;
                f.write_str("*")?;
                b.write_min(f, 3)
            }
            PolyExpr::Neg(a) => {
                f.write_str("-")?;
                a.write_min(f, 3)
            }
            PolyExpr::Pow(a, e) => {
                a.write_min(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

// expr := term (("+" | "-") term)*
pub fn parse_expr(c: &mut Cursor) -> Result<PolyExpr> {
    let mut lhs = parse_term(c)?;
    loop {
        if c.eat('+') {
            lhs = PolyExpr::Add(Box::new(lhs), Box::new(parse_term(c)?));
        } else if c.eat('-') {
            lhs = PolyExpr::Sub(Box::new(lhs), Box::new(parse_term(c)?));
        } else {
            return Ok(lhs);
        }
    }
}

// term := unary ("*" unary)*
fn parse_term(c: &mut Cursor) -> Result<PolyExpr> {
    let mut lhs = parse_unary(c)?;
    while c.eat('*') {
        lhs = PolyExpr::Mul(Box::new(lhs), Box::new(parse_unary(c)?));
    }
    Ok(lhs)
}

// unary := "-" unary | atom ("^" INT)?
fn parse_unary(c: &mut Cursor) -> Result<PolyExpr> {
    if c.eat('-') {
        return Ok(PolyExpr::Neg(Box::new(parse_unary(c)?)));
    }
    let atom = match c.bump() {
        (Tok::Int(v), _) => PolyExpr::Int(v),
        (Tok::Ident(s), p) => PolyExpr::Var(s, p),
        (Tok::Sym('('), _) => {
            let e = parse_expr(c)?;
            c.expect(')', "to close the parenthesised expression")?;
            e
        }
        (t, p) => {
            return Err(error_at(
                p,
                format!("expected a polynomial term, found {t}"),
            ))
        }
    };
    if c.eat('^') {
        let (e, _) = c.int("an integer exponent after `^`")?;
        return Ok(PolyExpr::Pow(Box::new(atom), e));
    }
    Ok(atom)
}

pub fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let mut c = Cursor::new(tokenize(text)?);
    let expr = parse_expr(&mut c)?;
    if *c.peek() != Tok::Eof {
        return Err(error_at(
            c.pos(),
            format!("expected end of polynomial, found {}", c.peek()),
        ));
    }
    expr.eval(ring)
}
