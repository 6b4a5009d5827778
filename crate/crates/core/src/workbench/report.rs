//! Reports: one per command, collected into a versioned JSON document or a
//! plain-text summary.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{AlgebraMap, FPAlgebra};
use crate::error::Error;
use crate::groebner::ModuleElement;
use crate::homology::{ModulePresentation, TorGroup};
use crate::polyring::Polynomial;

pub const SCHEMA: &str = "frobforge-report/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Resources {
    pub s_pair_steps: u64,
    pub basis_computations: u64,
    pub step_budget: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub command: String,
    pub line: usize,
    pub inputs: Value,
    pub result: Value,
    pub resources: Resources,
    pub version: &'static str,
    pub order: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ErrorReport {
    pub module: &'static str,
    pub kind: &'static str,
    pub message: String,
    pub line: usize,
    pub column: usize,
    /// The statement that failed, empty for parse errors.
    pub statement: String,
}

impl ErrorReport {
    pub fn new(e: &Error, line: usize, column: usize, statement: String) -> Self {
        let (line, column) = match e {
            Error::Parse { line, column, .. } => (*line, *column),
            _ => (line, column),
        };
        ErrorReport {
            module: e.module(),
            kind: e.kind(),
            message: e.to_string(),
            line,
            column,
            statement,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Options {
    pub order: String,
    pub max_stage: usize,
    pub tor_bound: usize,
    pub step_budget: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Document {
    pub schema: &'static str,
    pub version: &'static str,
    pub options: Options,
    pub reports: Vec<Report>,
    pub error: Option<ErrorReport>,
}

impl Document {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Verdicts first, then the remaining fields of each result.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&format!("[{}] {}\n", r.line, r.command));
            let fields: Vec<(&String, &Value)> = r
                .result
                .as_object()
                .map(|m| m.iter().collect())
                .unwrap_or_default();
            for (k, v) in fields.iter().filter(|(_, v)| v.is_boolean()) {
                out.push_str(&format!("  {k}: {v}\n"));
            }
            for (k, v) in fields.iter().filter(|(_, v)| !v.is_boolean()) {
                out.push_str(&format!("  {k}: {}\n", summarize(v)));
            }
            out.push_str(&format!("  steps: {}\n", r.resources.s_pair_steps));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!(
                "error [{}:{}] {} ({}): {}\n",
                e.line, e.column, e.module, e.kind, e.message
            ));
        }
        out
    }
}

/// Compact one-line rendering, clipped.
fn summarize(v: &Value) -> String {
    const LIMIT: usize = 160;
    let s = v.to_string();
    if s.chars().count() <= LIMIT {
        s
    } else {
        let clipped: String = s.chars().take(LIMIT).collect();
        format!("{clipped} ...")
    }
}

pub fn polys_json(polys: &[Polynomial]) -> Value {
    Value::from(polys.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

pub fn ring_json(a: &FPAlgebra) -> Value {
    json!({
        "characteristic": a.characteristic(),
        "vars": a.vars(),
        "relations": polys_json(a.relations().generators()),
    })
}

pub fn map_json(f: &AlgebraMap) -> Value {
    json!({
        "domain": ring_json(f.domain()),
        "codomain": ring_json(f.codomain()),
        "images": polys_json(f.images()),
    })
}

pub fn opt_map_json(f: Option<&AlgebraMap>) -> Value {
    f.map_or(Value::Null, map_json)
}

fn element_json(e: &ModuleElement) -> Value {
    polys_json(e.components())
}

pub fn module_json(m: &ModulePresentation) -> Value {
    json!({
        "rank": m.rank(),
        "relations": m.relations().iter().map(element_json).collect::<Vec<_>>(),
    })
}

pub fn tor_json(groups: &[TorGroup]) -> Value {
    Value::from(
        groups
            .iter()
            .map(|g| {
                json!({
                    "index": g.index,
                    "dimension": g.dimension,
                    "vanishes": g.vanishes,
                    "method": g.method.name(),
                    "presentation": g.presentation.as_ref().map(module_json),
                })
            })
            .collect::<Vec<_>>(),
    )
}
