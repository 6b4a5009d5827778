//! Executes a parsed session statement by statement.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::ast::{parse_session, CheckKind, Command, Session, StmtKind};
use super::report::{
    map_json, module_json, opt_map_json, polys_json, ring_json, tor_json, Document, ErrorReport,
    Options, Report, Resources, SCHEMA, VERSION,
};
use super::syntax::PolyExpr;
use crate::algebra::{relative_frobenius, simplify, AlgebraMap, FPAlgebra};
use crate::error::{Error, Result};
use crate::groebner::{self, standard_monomials, Ideal};
use crate::homology::{algebra_as_module, tor, DIMENSION_CAP};
use crate::pipeline::{
    factorize, find_p_basis, is_relatively_perfect, is_relatively_semiperfect, kahler_presentation,
    MiddleVerdict, PBasisOutcome, TorEvidence, DEFAULT_TOR_BOUND,
};
use crate::polyring::{MonomialOrder, PolyRing, Polynomial, PrimeField};
use crate::tower::{
    cofinality_bound, detect_stabilization, tower, StabilizationWitness, DEFAULT_MAX_STAGE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderChoice {
    Lex,
    Grevlex,
}

impl OrderChoice {
    pub fn name(self) -> &'static str {
        match self {
            OrderChoice::Lex => "lex",
            OrderChoice::Grevlex => "grevlex",
        }
    }

    fn order(self) -> MonomialOrder {
        match self {
            OrderChoice::Lex => MonomialOrder::lex(),
            OrderChoice::Grevlex => MonomialOrder::grevlex(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Order used by `gb`.
    pub order: OrderChoice,
    /// Upper limit on stage counts requested by commands.
    pub max_stage: usize,
    pub tor_bound: usize,
    pub step_budget: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            order: OrderChoice::Grevlex,
            max_stage: DEFAULT_MAX_STAGE,
            tor_bound: DEFAULT_TOR_BOUND,
            step_budget: groebner::DEFAULT_STEP_BUDGET,
        }
    }
}

impl RunOptions {
    fn echo(&self) -> Options {
        Options {
            order: self.order.name().to_string(),
            max_stage: self.max_stage,
            tor_bound: self.tor_bound,
            step_budget: self.step_budget,
        }
    }
}

/// Rings and maps declared so far.
#[derive(Default)]
pub struct Environment {
    field: Option<PrimeField>,
    rings: HashMap<String, FPAlgebra>,
    maps: HashMap<String, AlgebraMap>,
}

impl Environment {
    pub fn ring(&self, name: &str) -> Option<&FPAlgebra> {
        self.rings.get(name)
    }

    pub fn map(&self, name: &str) -> Option<&AlgebraMap> {
        self.maps.get(name)
    }

    fn ring_ref(&self, name: &str) -> Result<&FPAlgebra> {
        self.rings
            .get(name)
            .ok_or_else(|| Error::precondition("workbench", format!("unknown ring `{name}`")))
    }

    fn map_ref(&self, name: &str) -> Result<&AlgebraMap> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::precondition("workbench", format!("unknown map `{name}`")))
    }

    fn declare(&mut self, kind: &StmtKind) -> Result<()> {
        match kind {
            StmtKind::Prime(p) => self.field = Some(PrimeField::new(*p)?),
            StmtKind::Ring {
                name,
                vars,
                relations,
            } => {
                let field = self.field.ok_or_else(|| {
                    Error::precondition("workbench", "prime p must be declared first")
                })?;
                let ring = PolyRing::new(field, vars.clone())?;
                let rels = relations
                    .iter()
                    .map(|e| e.eval(&ring))
                    .collect::<Result<Vec<_>>>()?;
                self.rings.insert(name.clone(), FPAlgebra::new(&ring, rels));
            }
            StmtKind::Map {
                name,
                domain,
                codomain,
                images,
            } => {
                let (d, c) = (
                    self.ring_ref(domain)?.clone(),
                    self.ring_ref(codomain)?.clone(),
                );
                let imgs = images
                    .iter()
                    .map(|(_, e)| e.eval(c.ring()))
                    .collect::<Result<Vec<_>>>()?;
                self.maps
                    .insert(name.clone(), AlgebraMap::new(&d, &c, imgs)?);
            }
            StmtKind::Command(_) => {}
        }
        Ok(())
    }
}

fn vector_dimension(a: &FPAlgebra) -> Result<Option<usize>> {
    let order = MonomialOrder::grevlex();
    let leads: Vec<_> = a
        .relation_basis()?
        .iter()
        .filter_map(|g| g.leading_term(&order).map(|(m, _)| m.clone()))
        .collect();
    match standard_monomials(a.nvars(), &leads, DIMENSION_CAP) {
        Ok(ms) => Ok(ms.map(|m| m.len())),
        Err(Error::TooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn within(n: u64, opts: &RunOptions, what: &str) -> Result<usize> {
    if n as usize > opts.max_stage {
        return Err(Error::precondition(
            "workbench",
            format!("{what} {n} exceeds the stage limit {}", opts.max_stage),
        ));
    }
    Ok(n as usize)
}

fn ideal_of(r: &FPAlgebra, gens: &[PolyExpr]) -> Result<Ideal> {
    Ok(Ideal::new(
        r.ring(),
        gens.iter()
            .map(|e| e.eval(r.ring()))
            .collect::<Result<Vec<Polynomial>>>()?,
    ))
}

fn tor_evidence_json(t: Option<&TorEvidence>) -> Value {
    match t {
        None => Value::Null,
        Some(TorEvidence::Computed { groups }) => json!({
            "status": "computed",
            "groups": tor_json(groups),
            "vanishes_in_positive_degrees": t.and_then(TorEvidence::vanishes_in_positive_degrees),
        }),
        Some(TorEvidence::Skipped { reason }) => json!({ "status": "skipped", "reason": reason }),
    }
}

/// Runs one command; returns the inputs and the result payload.
pub fn run_command(cmd: &Command, env: &Environment, opts: &RunOptions) -> Result<(Value, Value)> {
    let map_input = |name: &str| -> Result<(AlgebraMap, Value)> {
        let f = env.map_ref(name)?.clone();
        let v = json!({ name: map_json(&f) });
        Ok((f, v))
    };
    Ok(match cmd {
        Command::Gb(name) => {
            let r = env.ring_ref(name)?;
            let basis = r.relations().reduced_groebner(&opts.order.order())?;
            (
                json!({ name.as_str(): ring_json(r) }),
                json!({ "basis": polys_json(&basis), "unit": r.is_zero_ring()? }),
            )
        }
        Command::Check(kind, name) => {
            let (f, inputs) = map_input(name)?;
            let result = match kind {
                CheckKind::Semiperfect => {
                    let v = is_relatively_semiperfect(&f)?;
                    json!({
                        "semiperfect": v.semiperfect,
                        "fitting_ideal": v.fitting_ideal.map(|i| polys_json(i.generators())),
                        "kahler": module_json(&kahler_presentation(&f)?),
                    })
                }
                CheckKind::Perfect => {
                    let c = is_relatively_perfect(&f, opts.tor_bound)?;
                    json!({
                        "perfect": c.perfect,
                        "relative_frobenius": map_json(&c.relative_frobenius),
                        "inverse": opt_map_json(c.inverse.as_ref()),
                        "tor_bound": c.tor_bound,
                        "tor": tor_evidence_json(c.tor.as_ref()),
                    })
                }
                CheckKind::Iso => {
                    let inv = f.inverse()?;
                    json!({ "isomorphism": inv.is_some(), "inverse": opt_map_json(inv.as_ref()) })
                }
            };
            (inputs, result)
        }
        Command::RelFrob(name) => {
            let (f, inputs) = map_input(name)?;
            let rf = relative_frobenius(&f)?;
            let result = json!({
                "twist": ring_json(rf.domain()),
                "relative_frobenius": map_json(&rf),
                "surjective": rf.is_surjective()?,
                "injective": rf.is_injective()?,
                "isomorphism": rf.is_isomorphism()?,
            });
            (inputs, result)
        }
        Command::Tower(name, n) => {
            let (f, inputs) = map_input(name)?;
            let n = within(*n, opts, "tower stage")?;
            let stages = tower(&f, n)?
                .iter()
                .map(|st| {
                    Ok(json!({
                        "index": st.index,
                        "presentation": ring_json(&st.stage),
                        "simplified": ring_json(&simplify(&st.stage)?.algebra),
                        "dimension": vector_dimension(&st.stage)?,
                        "transition": opt_map_json(st.transition.as_ref()),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            (inputs, json!({ "stages": stages }))
        }
        Command::Factorize(name, k) => {
            let (f, inputs) = map_input(name)?;
            let budget = within(*k, opts, "stage budget")?;
            let cert = factorize(&f, budget, opts.tor_bound)?;
            let check = cert.validate(opts.tor_bound)?;
            let middle_kind = match &cert.middle_verdict {
                MiddleVerdict::Perfect(_) => "relatively-perfect",
                MiddleVerdict::Truncated { .. } => "truncated",
            };
            let tor = match &cert.middle_verdict {
                MiddleVerdict::Perfect(c) => tor_evidence_json(c.tor.as_ref()),
                MiddleVerdict::Truncated { .. } => Value::Null,
            };
            let result = json!({
                "valid": check.all(),
                "stabilized": cert.stabilized,
                "stage": cert.stage,
                "stage_budget": cert.stage_budget,
                "comparisons": cert.comparisons.iter().map(|(k, iso)| json!({ "stage": k, "isomorphism": iso })).collect::<Vec<_>>(),
                "cover": map_json(&cert.cover.inclusion),
                "adjoined": cert.cover.adjoined(),
                "semiperfect_map": map_json(&cert.cover.map),
                "middle": ring_json(&cert.middle),
                "middle_simplified": ring_json(&simplify(&cert.middle)?.algebra),
                "to_middle": map_json(&cert.to_middle),
                "to_target": map_json(&cert.to_target),
                "verdicts": {
                    "semiperfect": cert.semiperfect,
                    "middle": middle_kind,
                    "middle_passed": cert.middle_verdict.passed(),
                    "surjective": cert.surjective,
                    "composition": cert.composition_ok,
                },
                "middle_tor": tor,
                "validation": {
                    "composition": check.composition,
                    "free_of_finite_type": check.free_of_finite_type,
                    "semiperfect": check.semiperfect,
                    "middle": check.middle,
                    "surjective": check.surjective,
                    "verdicts_reproduce": check.verdicts_reproduce,
                },
            });
            (inputs, result)
        }
        Command::PBasis(name) => {
            let (f, inputs) = map_input(name)?;
            let result = match find_p_basis(&f, opts.tor_bound)? {
                PBasisOutcome::Basis {
                    elements,
                    map,
                    certificate,
                } => json!({
                    "outcome": "basis",
                    "elements": polys_json(&elements),
                    "map": map_json(&map),
                    "verified": certificate.perfect,
                }),
                PBasisOutcome::Obstruction { index, ideal } => json!({
                    "outcome": "obstruction",
                    "fitting_index": index,
                    "ideal": polys_json(&ideal),
                }),
            };
            (inputs, result)
        }
        Command::Tor(a, b, l) => {
            let (f, g) = (env.map_ref(a)?, env.map_ref(b)?);
            if !f.domain().same_presentation(g.domain())? {
                return Err(Error::mismatch(
                    "workbench",
                    format!("`{a}` and `{b}` have different domains"),
                ));
            }
            let m = algebra_as_module(f)?.prune()?;
            let n = algebra_as_module(g)?.prune()?;
            let groups = tor(&m, &n, *l as usize)?;
            let inputs = json!({ a.as_str(): map_json(f), b.as_str(): map_json(g) });
            (inputs, json!({ "groups": tor_json(&groups) }))
        }
        Command::Stab(name, gens, n) => {
            let r = env.ring_ref(name)?;
            let i = ideal_of(r, gens)?;
            let n_max = within(*n, opts, "stage bound")?;
            let rep = detect_stabilization(r, &i, n_max)?;
            let witness = match &rep.witness {
                StabilizationWitness::Isomorphism {
                    transition,
                    inverse,
                } => {
                    json!({ "kind": "isomorphism", "transition": map_json(transition), "inverse": map_json(inverse) })
                }
                StabilizationWitness::Strict { stage, element } => {
                    json!({ "kind": "strict", "stage": stage, "element": element.to_string() })
                }
            };
            let inputs =
                json!({ name.as_str(): ring_json(r), "ideal": polys_json(i.generators()) });
            (
                inputs,
                json!({ "stabilized": rep.stabilized, "n0": rep.n0, "n_max": rep.n_max, "witness": witness }),
            )
        }
        Command::Cofinal(name, gens, n) => {
            let r = env.ring_ref(name)?;
            let i = ideal_of(r, gens)?;
            let n = within(*n, opts, "Frobenius exponent")?;
            let b = cofinality_bound(r, &i, n)?;
            let inputs =
                json!({ name.as_str(): ring_json(r), "ideal": polys_json(i.generators()) });
            (
                inputs,
                json!({ "m": b.m, "cap": b.cap, "generators": b.generators, "within_cap": b.m <= b.cap }),
            )
        }
    })
}

pub fn run_session(session: &Session, opts: &RunOptions) -> Document {
    groebner::set_step_budget(opts.step_budget);
    let mut env = Environment::default();
    let mut reports = Vec::new();
    let mut error = None;
    for stmt in &session.statements {
        groebner::reset_usage();
        let outcome = match &stmt.kind {
            StmtKind::Command(cmd) => run_command(cmd, &env, opts).map(|(inputs, result)| {
                let used = groebner::usage();
                reports.push(Report {
                    command: cmd.to_string(),
                    line: stmt.pos.line,
                    inputs,
                    result,
                    resources: Resources {
                        s_pair_steps: used.s_pair_steps,
                        basis_computations: used.basis_computations,
                        step_budget: opts.step_budget,
                    },
                    version: VERSION,
                    order: opts.order.name().to_string(),
                });
            }),
            kind => env.declare(kind),
        };
        if let Err(e) = outcome {
            error = Some(ErrorReport::new(
                &e,
                stmt.pos.line,
                stmt.pos.column,
                stmt.kind.to_string(),
            ));
            break;
        }
    }
    Document {
        schema: SCHEMA,
        version: VERSION,
        options: opts.echo(),
        reports,
        error,
    }
}

/// Parses and runs; a parse error becomes the document's error.
pub fn run_text(text: &str, opts: &RunOptions) -> Document {
    match parse_session(text) {
        Ok(session) => run_session(&session, opts),
        Err(e) => Document {
            schema: SCHEMA,
            version: VERSION,
            options: opts.echo(),
            reports: Vec::new(),
            error: Some(ErrorReport::new(&e, 0, 0, String::new())),
        },
    }
}
