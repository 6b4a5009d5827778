//! Session files: declarations of the prime, rings and maps, followed by
//! commands, all terminated by `;`.
//!
//! ```text
//! session := {stmt ";"}
//! stmt    := "p" INT
//!          | "ring" NAME "=" "[" vars "]" ["/" "(" polys ")"]
//!          | "map" NAME ":" NAME "->" NAME "=" "{" {var "->" poly ","} "}"
//!          | cmd
//! cmd     := "gb" NAME | "check" ("semiperfect"|"perfect"|"iso") NAME
//!          | "relfrob" NAME | "tower" NAME INT | "factorize" NAME INT
//!          | "pbasis" NAME | "tor" NAME NAME INT
//!          | "stab" NAME "(" polys ")" INT | "cofinal" NAME "(" polys ")" INT
//! ```
//!
//! The comma after the last map entry is optional. `#` starts a comment.

use std::collections::HashMap;
use std::fmt;

use super::syntax::{error_at, parse_expr, tokenize, Cursor, PolyExpr, Pos, Tok};
use crate::error::Result;
use crate::polyring::PrimeField;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Semiperfect,
    Perfect,
    Iso,
}

impl CheckKind {
    pub fn keyword(self) -> &'static str {
        match self {
            CheckKind::Semiperfect => "semiperfect",
            CheckKind::Perfect => "perfect",
            CheckKind::Iso => "iso",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Gb(String),
    Check(CheckKind, String),
    RelFrob(String),
    Tower(String, u64),
    Factorize(String, u64),
    PBasis(String),
    Tor(String, String, u64),
    Stab(String, Vec<PolyExpr>, u64),
    Cofinal(String, Vec<PolyExpr>, u64),
}

#[derive(Clone, Debug, PartialEq)]
pub enum StmtKind {
    Prime(u64),
    Ring {
        name: String,
        vars: Vec<String>,
        relations: Vec<PolyExpr>,
    },
    Map {
        name: String,
        domain: String,
        codomain: String,
        images: Vec<(String, PolyExpr)>,
    },
    Command(Command),
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub kind: StmtKind,
    pub pos: Pos,
}

/// Positions are ignored.
impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Session {
    pub statements: Vec<Statement>,
}

impl Session {
    pub fn prime(&self) -> Option<u64> {
        self.statements.iter().find_map(|s| match s.kind {
            StmtKind::Prime(p) => Some(p),
            _ => None,
        })
    }
}

fn write_polys(f: &mut fmt::Formatter<'_>, polys: &[PolyExpr]) -> fmt::Result {
    for (i, p) in polys.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Gb(n) => write!(f, "gb {n}"),
            Command::Check(k, n) => write!(f, "check {} {n}", k.keyword()),
            Command::RelFrob(n) => write!(f, "relfrob {n}"),
            Command::Tower(n, k) => write!(f, "tower {n} {k}"),
            Command::Factorize(n, k) => write!(f, "factorize {n} {k}"),
            Command::PBasis(n) => write!(f, "pbasis {n}"),
            Command::Tor(a, b, l) => write!(f, "tor {a} {b} {l}"),
            Command::Stab(n, polys, k) | Command::Cofinal(n, polys, k) => {
                let word = if matches!(self, Command::Stab(..)) {
                    "stab"
                } else {
                    "cofinal"
                };
                write!(f, "{word} {n} (")?;
                write_polys(f, polys)?;
                write!(f, ") {k}")
            }
        }
    }
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Prime(p) => write!(f, "p {p}"),
            StmtKind::Ring {
                name,
                vars,
                relations,
            } => {
                write!(f, "ring {name} = [{}]", vars.join(", "))?;
                if !relations.is_empty() {
                    f.write_str("/(")?;
                    write_polys(f, relations)?;
                    f.write_str(")")?;
                }
                Ok(())
            }
            StmtKind::Map {
                name,
                domain,
                codomain,
                images,
            } => {
                write!(f, "map {name} : {domain} -> {codomain} = {{")?;
                for (i, (v, e)) in images.iter().enumerate() {
                    write!(f, "{}{v} -> {e}", if i > 0 { ", " } else { " " })?;
                }
                f.write_str(if images.is_empty() { "}" } else { " }" })
            }
            StmtKind::Command(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{};", s.kind)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
enum Entry {
    Ring {
        vars: Vec<String>,
        pos: Pos,
    },
    Map {
        domain: String,
        codomain: String,
        pos: Pos,
    },
}

impl Entry {
    fn pos(&self) -> Pos {
        match self {
            Entry::Ring { pos, .. } | Entry::Map { pos, .. } => *pos,
        }
    }
}

/// Checks names in declaration order while parsing.
#[derive(Default)]
struct Scope {
    prime: Option<Pos>,
    names: HashMap<String, Entry>,
}

impl Scope {
    fn declare(&mut self, name: &str, pos: Pos, entry: Entry) -> Result<()> {
        if let Some(prev) = self.names.get(name) {
            let at = prev.pos();
            return Err(error_at(
                pos,
                format!(
                    "duplicate name `{name}`, first declared at {}:{}",
                    at.line, at.column
                ),
            ));
        }
        self.names.insert(name.to_string(), entry);
        Ok(())
    }

    fn ring(&self, name: &str, pos: Pos) -> Result<Vec<String>> {
        match self.names.get(name) {
            Some(Entry::Ring { vars, .. }) => Ok(vars.clone()),
            Some(Entry::Map { .. }) => {
                Err(error_at(pos, format!("expected a ring, `{name}` is a map")))
            }
            None => Err(error_at(
                pos,
                format!("unknown name `{name}`, expected a declared ring"),
            )),
        }
    }

    fn map(&self, name: &str, pos: Pos) -> Result<(String, String)> {
        match self.names.get(name) {
            Some(Entry::Map {
                domain, codomain, ..
            }) => Ok((domain.clone(), codomain.clone())),
            Some(Entry::Ring { .. }) => {
                Err(error_at(pos, format!("expected a map, `{name}` is a ring")))
            }
            None => Err(error_at(
                pos,
                format!("unknown name `{name}`, expected a declared map"),
            )),
        }
    }
}

fn check_vars(expr: &PolyExpr, vars: &[String], ring: &str) -> Result<()> {
    let mut used = Vec::new();
    expr.variables(&mut used);
    for (v, pos) in used {
        if !vars.contains(&v) {
            return Err(error_at(
                pos,
                format!("unknown variable `{v}` in ring `{ring}`"),
            ));
        }
    }
    Ok(())
}

fn polys(c: &mut Cursor, vars: &[String], ring: &str) -> Result<Vec<PolyExpr>> {
    let mut out = Vec::new();
    if *c.peek() == Tok::Sym(')') {
        return Ok(out);
    }
    loop {
        let e = parse_expr(c)?;
        check_vars(&e, vars, ring)?;
        out.push(e);
        if !c.eat(',') {
            return Ok(out);
        }
    }
}

fn small_int(c: &mut Cursor, what: &str) -> Result<u64> {
    let (v, pos) = c.int(what)?;
    if v > 1 << 20 {
        return Err(error_at(pos, format!("{what} {v} is too large")));
    }
    Ok(v)
}

fn parse_ring(c: &mut Cursor, scope: &mut Scope, pos: Pos) -> Result<StmtKind> {
    let (name, npos) = c.ident("a ring name after `ring`")?;
    c.expect('=', "after the ring name")?;
    c.expect('[', "to open the variable list")?;
    let mut vars: Vec<String> = Vec::new();
    if *c.peek() != Tok::Sym(']') {
        loop {
            let (v, vpos) = c.ident("a variable name")?;
            if vars.contains(&v) {
                return Err(error_at(vpos, format!("variable `{v}` listed twice")));
            }
            vars.push(v);
            if !c.eat(',') {
                break;
            }
        }
    }
    c.expect(']', "to close the variable list")?;
    let relations = if c.eat('/') {
        c.expect('(', "to open the relations after `/`")?;
        let rels = polys(c, &vars, &name)?;
        c.expect(')', "to close the relations")?;
        rels
    } else {
        Vec::new()
    };
    scope.declare(
        &name,
        npos,
        Entry::Ring {
            vars: vars.clone(),
            pos,
        },
    )?;
    Ok(StmtKind::Ring {
        name,
        vars,
        relations,
    })
}

fn parse_map(c: &mut Cursor, scope: &mut Scope, pos: Pos) -> Result<StmtKind> {
    let (name, npos) = c.ident("a map name after `map`")?;
    c.expect(':', "after the map name")?;
    let (domain, dpos) = c.ident("the domain ring")?;
    let dvars = scope.ring(&domain, dpos)?;
    c.expect_arrow("between domain and codomain")?;
    let (codomain, cpos) = c.ident("the codomain ring")?;
    let cvars = scope.ring(&codomain, cpos)?;
    c.expect('=', "before the images")?;
    c.expect('{', "to open the images")?;
    let mut images: Vec<(String, PolyExpr)> = Vec::new();
    while *c.peek() != Tok::Sym('}') {
        let (v, vpos) = c.ident("a domain variable")?;
        if !dvars.contains(&v) {
            return Err(error_at(
                vpos,
                format!("unknown variable `{v}` in ring `{domain}`"),
            ));
        }
        if images.iter().any(|(w, _)| *w == v) {
            return Err(error_at(vpos, format!("variable `{v}` is assigned twice")));
        }
        c.expect_arrow("after the domain variable")?;
        let e = parse_expr(c)?;
        check_vars(&e, &cvars, &codomain)?;
        images.push((v, e));
        if !c.eat(',') {
            break;
        }
    }
    let close = c.expect('}', "to close the images")?;
    if let Some(missing) = dvars.iter().find(|v| !images.iter().any(|(w, _)| w == *v)) {
        return Err(error_at(
            close,
            format!("no image given for variable `{missing}` of `{domain}`"),
        ));
    }
    images.sort_by_key(|(v, _)| dvars.iter().position(|w| w == v));
    scope.declare(
        &name,
        npos,
        Entry::Map {
            domain: domain.clone(),
            codomain: codomain.clone(),
            pos,
        },
    )?;
    Ok(StmtKind::Map {
        name,
        domain,
        codomain,
        images,
    })
}

fn parse_command(word: &str, wpos: Pos, c: &mut Cursor, scope: &Scope) -> Result<Command> {
    let map_arg = |c: &mut Cursor| -> Result<String> {
        let (n, p) = c.ident("a map name")?;
        scope.map(&n, p)?;
        Ok(n)
    };
    let ideal_arg = |c: &mut Cursor| -> Result<(String, Vec<PolyExpr>)> {
        let (n, p) = c.ident("a ring name")?;
        let vars = scope.ring(&n, p)?;
        c.expect('(', "to open the ideal generators")?;
        let gens = polys(c, &vars, &n)?;
        c.expect(')', "to close the ideal generators")?;
        Ok((n, gens))
    };
    Ok(match word {
        "gb" => {
            let (n, p) = c.ident("a ring name")?;
            scope.ring(&n, p)?;
            Command::Gb(n)
        }
        "check" => {
            let (k, kpos) = c.ident("`semiperfect`, `perfect` or `iso`")?;
            let kind = match k.as_str() {
                "semiperfect" => CheckKind::Semiperfect,
                "perfect" => CheckKind::Perfect,
                "iso" => CheckKind::Iso,
                _ => {
                    return Err(error_at(
                        kpos,
                        format!("expected `semiperfect`, `perfect` or `iso`, found `{k}`"),
                    ))
                }
            };
            Command::Check(kind, map_arg(c)?)
        }
        "relfrob" => Command::RelFrob(map_arg(c)?),
        "tower" => Command::Tower(map_arg(c)?, small_int(c, "a stage count")?),
        "factorize" => Command::Factorize(map_arg(c)?, small_int(c, "a stage budget")?),
        "pbasis" => Command::PBasis(map_arg(c)?),
        "tor" => {
            let a = map_arg(c)?;
            let b = map_arg(c)?;
            Command::Tor(a, b, small_int(c, "a Tor bound")?)
        }
        "stab" => {
            let (n, gens) = ideal_arg(c)?;
            Command::Stab(n, gens, small_int(c, "a stage bound")?)
        }
        "cofinal" => {
            let (n, gens) = ideal_arg(c)?;
            Command::Cofinal(n, gens, small_int(c, "a Frobenius exponent")?)
        }
        _ => {
            return Err(error_at(
                wpos,
                format!("expected a declaration or command, found `{word}`"),
            ))
        }
    })
}

pub fn parse_session(text: &str) -> Result<Session> {
    let mut c = Cursor::new(tokenize(text)?);
    let mut scope = Scope::default();
    let mut statements = Vec::new();
    while *c.peek() != Tok::Eof {
        let (word, pos) = c.ident("a declaration or command")?;
        let kind = match word.as_str() {
            "p" => {
                let (p, ppos) = c.int("the characteristic after `p`")?;
                if let Some(prev) = scope.prime {
                    return Err(error_at(
                        pos,
                        format!(
                            "prime redeclared, first declared at {}:{}",
                            prev.line, prev.column
                        ),
                    ));
                }
                if PrimeField::new(p).is_err() {
                    return Err(error_at(ppos, format!("{p} is not a prime below 2^16")));
                }
                scope.prime = Some(pos);
                StmtKind::Prime(p)
            }
            _ if scope.prime.is_none() => {
                return Err(error_at(pos, "prime p must be declared first"))
            }
            "ring" => parse_ring(&mut c, &mut scope, pos)?,
            "map" => parse_map(&mut c, &mut scope, pos)?,
            _ => StmtKind::Command(parse_command(&word, pos, &mut c, &scope)?),
        };
        c.expect(';', "to end the statement")?;
        statements.push(Statement { kind, pos });
    }
    Ok(Session { statements })
}
