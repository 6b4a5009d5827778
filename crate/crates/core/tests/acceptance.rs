//! Acceptance gate: one pass/fail line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{alg, corpus, map, random_artinian, random_map, seeded, structure};
use frobforge::algebra::{AlgebraMap, FPAlgebra};
use frobforge::groebner::Ideal;
use frobforge::oracle::{enumerate_algebra, oracle_ideal_membership, oracle_subring_closure};
use frobforge::pipeline::{
    factorize, find_p_basis, is_relatively_perfect, is_relatively_semiperfect,
    tor_against_pushforward, PBasisOutcome, TorEvidence,
};
use frobforge::polyring::{MonomialOrder, Polynomial};
use frobforge::tower::{
    cofinality_bound, detect_stabilization, gabber_stage_of_images, quotient_tower_stage,
    tower_stage,
};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let spent = start.elapsed();
    ensure(spent < limit, || {
        format!("took {spent:.2?}, limit {limit:?}")
    })?;
    Ok(spent)
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn semiperfect_vs_closure() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(0x5e41_9e4f);
    let (mut cases, mut positive) = (0, 0);
    while cases < 60 {
        let p = *[2u64, 3].choose(&mut rng).unwrap();
        let cap = if p == 2 { 12 } else { 9 };
        let r = random_artinian(&mut rng, p, cap, &["t", "u"]);
        let s = random_artinian(&mut rng, p, cap, &["x", "y"]);
        let Some(f) = random_map(&mut rng, &r, &s) else {
            continue;
        };
        let engine = is_relatively_semiperfect(&f).map_err(e)?.semiperfect;
        let oracle = oracle_subring_closure(&f).map_err(e)?;
        ensure(engine == oracle, || {
            format!("disagreement on {f} from {r} to {s}: engine {engine}, oracle {oracle}")
        })?;
        cases += 1;
        positive += engine as usize;
    }
    ensure(positive > 0 && positive < cases, || {
        format!("degenerate sample: {positive}/{cases} semiperfect")
    })?;
    let spent = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{cases} random maps agree ({positive} semiperfect), {spent:.2?}"
    ))
}

fn factorization_certificates() -> Outcome {
    let start = Instant::now();
    let maps = corpus();
    let mut stabilized = 0;
    for (name, f) in &maps {
        let cert = factorize(f, 4, 3).map_err(e)?;
        let check = cert.validate(3).map_err(e)?;
        ensure(check.all(), || {
            format!("{name}: certificate does not validate: {check:?}")
        })?;
        if cert.stabilized {
            stabilized += 1;
            ensure(cert.stage <= 2, || {
                format!("{name}: stabilized only at {}", cert.stage)
            })?;
        }
    }
    for name in ["identity", "idempotent-to-point", "f4", "artin-schreier"] {
        let (_, f) = maps.iter().find(|(n, _)| *n == name).unwrap();
        ensure(factorize(f, 4, 3).map_err(e)?.stabilized, || {
            format!("{name} did not stabilize")
        })?;
    }
    let spent = within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{} certificates validate, {stabilized} stabilized, {spent:.2?}",
        maps.len()
    ))
}

fn gabber_presentation() -> Outcome {
    let x = alg(2, &["x"], &[]);
    let xy = alg(2, &["x", "y"], &[]);
    let cases = vec![
        map(&x, &alg(2, &["x"], &["x^2"]), &["x"]),
        map(&x, &alg(2, &["x", "y"], &["y^2 + y + x"]), &["x"]),
        AlgebraMap::identity(&x),
        map(&xy, &alg(2, &["x", "y"], &["x*y"]), &["x", "y"]),
        map(&x, &alg(2, &["x", "y"], &["y^2 + y + x^3"]), &["x"]),
    ];
    let order = MonomialOrder::grevlex();
    for f in &cases {
        for k in 0..=3 {
            let g = gabber_stage_of_images(f, k).map_err(e)?;
            let stage = tower_stage(f, k).map_err(e)?.stage;
            if k == 0 {
                // Stage 0 is S itself; compare through the inclusion of S.
                let vars = (0..stage.nvars()).map(|i| g.ring().var(i)).collect();
                let inc = AlgebraMap::new(&stage, &g, vars).map_err(e)?;
                ensure(inc.is_isomorphism().map_err(e)?, || {
                    format!("{f}: stage 0 differs")
                })?;
                continue;
            }
            ensure(g.vars() == stage.vars(), || {
                format!("{f}: layouts differ at {k}")
            })?;
            let vars = (0..g.nvars()).map(|i| stage.ring().var(i)).collect();
            let cmp = AlgebraMap::new(&g, &stage, vars).map_err(e)?;
            ensure(cmp.is_isomorphism().map_err(e)?, || {
                format!("{f}: stage {k} not isomorphic")
            })?;
            let ga = g.relations().reduced_groebner(&order).map_err(e)?;
            let index: Vec<usize> = (0..g.nvars()).collect();
            let ga: Vec<Polynomial> = ga.iter().map(|p| p.remap(stage.ring(), &index)).collect();
            let gb = stage.relations().reduced_groebner(&order).map_err(e)?;
            ensure(ga == gb, || {
                format!("{f}: reduced bases differ at stage {k}")
            })?;
        }
    }
    Ok(format!(
        "{} maps, stages 0..=3, equal reduced bases",
        cases.len()
    ))
}

fn quotient_tower_identity() -> Outcome {
    let cases: Vec<(FPAlgebra, Vec<&str>)> = vec![
        (alg(2, &["x"], &[]), vec!["x^2"]),
        (alg(3, &["x", "y"], &[]), vec!["x", "y^2"]),
        (alg(2, &["x", "y"], &["x*y"]), vec!["x"]),
        (alg(2, &["e"], &["e^2 + e"]), vec!["e"]),
        (alg(3, &["x"], &[]), vec!["x^2 - 1"]),
    ];
    for (r, gens) in &cases {
        let i = Ideal::new(r.ring(), r.ring().polys(gens));
        let s = r.quotient(i.generators().iter().cloned());
        let vars: Vec<String> = r.vars().to_vec();
        let f = AlgebraMap::new(r, &s, (0..vars.len()).map(|v| s.ring().var(v)).collect())
            .map_err(e)?;
        for n in 0..=3 {
            let st = tower_stage(&f, n).map_err(e)?;
            let q = quotient_tower_stage(r, &i, n).map_err(e)?;
            let cmp = AlgebraMap::new(&q, &st.stage, st.base_map.images().to_vec()).map_err(e)?;
            ensure(cmp.is_isomorphism().map_err(e)?, || {
                format!("{r} / {gens:?}: stage {n} differs")
            })?;
        }
    }
    Ok(format!("{} surjections, stages 0..=3", cases.len()))
}

fn tor_independence() -> Outcome {
    let (mut checked, mut eligible) = (0, 0);
    for (name, f) in corpus() {
        let rf = frobforge::algebra::relative_frobenius(&f).map_err(e)?;
        if !rf.is_isomorphism().map_err(e)? {
            continue;
        }
        eligible += 1;
        let TorEvidence::Computed { groups } = tor_against_pushforward(&f, 3).map_err(e)? else {
            continue;
        };
        let positive: Vec<_> = groups.iter().filter(|g| g.index >= 1).collect();
        if positive.iter().any(|g| g.dimension.is_none()) {
            continue;
        }
        ensure(positive.len() == 3, || {
            format!("{name}: expected degrees 1..=3")
        })?;
        ensure(positive.iter().all(|g| g.dimension == Some(0)), || {
            format!(
                "{name}: Tor dimensions {:?}",
                positive.iter().map(|g| g.dimension).collect::<Vec<_>>()
            )
        })?;
        checked += 1;
    }
    ensure(checked >= 5, || {
        format!("only {checked} Artinian-computable cases")
    })?;
    Ok(format!(
        "Tor_1..3 vanish on {checked} of {eligible} maps with invertible relative Frobenius"
    ))
}

fn p_basis() -> Outcome {
    let start = Instant::now();
    for p in [2, 3] {
        let s = alg(p, &["x", "y"], &[]);
        match find_p_basis(&structure(&s), 3).map_err(e)? {
            PBasisOutcome::Basis {
                elements,
                certificate,
                ..
            } => {
                ensure(elements == s.ring().polys(&["x", "y"]), || {
                    format!("p={p}: basis {elements:?}")
                })?;
                ensure(certificate.perfect, || {
                    format!("p={p}: verification failed")
                })?;
            }
            other => return Err(format!("p={p}: {other:?}")),
        }
    }
    let cusp = alg(5, &["x", "y"], &["y^2 - x^3"]);
    match find_p_basis(&structure(&cusp), 3).map_err(e)? {
        PBasisOutcome::Obstruction { index: 1, ideal }
            if ideal == cusp.ring().polys(&["x^2", "y"]) => {}
        other => return Err(format!("cusp: {other:?}")),
    }
    let spent = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{{x, y}} for p = 2, 3; Fitt_1 = (x^2, y) for the cusp; {spent:.2?}"
    ))
}

fn etale_perfect() -> Outcome {
    let f4 = structure(&alg(2, &["a"], &["a^2 + a + 1"]));
    let x = alg(2, &["x"], &[]);
    let artin_schreier = map(&x, &alg(2, &["x", "y"], &["y^2 + y + x"]), &["x"]);
    for (name, f) in [("F_2 -> F_4", f4), ("Artin-Schreier", artin_schreier)] {
        ensure(is_relatively_perfect(&f, 3).map_err(e)?.perfect, || {
            format!("{name} is not relatively perfect")
        })?;
    }
    Ok("F_2 -> F_4 and Artin-Schreier are relatively perfect".into())
}

fn fixed_ideal() -> Outcome {
    let r = alg(2, &["e"], &["e^2 + e"]);
    let i = Ideal::new(r.ring(), r.ring().polys(&["e"]));
    let rep = detect_stabilization(&r, &i, 6).map_err(e)?;
    ensure(rep.stabilized && rep.n0 == Some(0), || {
        format!("report {:?}", (rep.stabilized, rep.n0))
    })?;
    let q = r.quotient(i.generators().iter().cloned());
    let f = map(&r, &q, &["e"]);
    ensure(is_relatively_perfect(&f, 3).map_err(e)?.perfect, || {
        "quotient map is not relatively perfect".into()
    })?;
    Ok("n0 = 0 and the quotient map is relatively perfect".into())
}

fn cofinality() -> Outcome {
    let cases: Vec<(FPAlgebra, Vec<&str>)> = vec![
        (alg(2, &["x"], &[]), vec!["x"]),
        (alg(2, &["x", "y"], &[]), vec!["x", "y"]),
        (alg(3, &["x", "y"], &[]), vec!["x", "y"]),
        (alg(2, &["x", "y"], &[]), vec!["x^2", "y"]),
        (alg(3, &["x", "y"], &["x*y"]), vec!["x", "y"]),
    ];
    let mut attained = false;
    for (r, gens) in &cases {
        let i = Ideal::new(r.ring(), r.ring().polys(gens));
        for n in 1..=2 {
            let b = cofinality_bound(r, &i, n).map_err(e)?;
            let q = (r.characteristic() as usize).pow(n as u32);
            let frob = r.relations().sum(&i.frobenius_power(n as u32).map_err(e)?);
            let ordinary = r.relations().sum(&i.power(q as u32));
            let im = r.relations().sum(&i.power(b.m as u32));
            ensure(frob.contains(&im).map_err(e)?, || {
                format!("{gens:?}, n={n}: I^m not in I^[q]")
            })?;
            ensure(ordinary.contains(&frob).map_err(e)?, || {
                format!("{gens:?}, n={n}: I^[q] not in I^q")
            })?;
            ensure(b.m <= gens.len() * (q - 1) + 1, || {
                format!("{gens:?}, n={n}: m = {} above the bound", b.m)
            })?;
            if b.m > 1 {
                let below = r.relations().sum(&i.power(b.m as u32 - 1));
                ensure(!frob.contains(&below).map_err(e)?, || {
                    format!("{gens:?}, n={n}: m = {} not minimal", b.m)
                })?;
            }
            if r.characteristic() == 2 && *gens == ["x", "y"] && n == 1 {
                ensure(b.m == 3 && b.cap == 3, || {
                    format!("(x, y), p=2, n=1: m = {}", b.m)
                })?;
                attained = true;
            }
        }
    }
    ensure(attained, || "bound case missing".into())?;
    Ok(format!(
        "{} ideals, n = 1, 2; m = 3 attains the bound for (x, y)",
        cases.len()
    ))
}

fn engine_soundness() -> Outcome {
    // Normal forms against linear algebra in Artinian quotients.
    let mut rng = seeded(0x00c0_ffee);
    let mut trials = 0;
    let mut members = 0;
    while trials < 120 {
        let p = *[2u64, 3].choose(&mut rng).unwrap();
        let a = random_artinian(&mut rng, p, 12, &["x", "y"]);
        let t = enumerate_algebra(&a).map_err(e)?;
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2))
            .map(|_| common::random_poly(&mut rng, a.ring(), 2, 3))
            .collect();
        let f = if rng.gen_bool(0.5) {
            gens.iter().fold(a.ring().zero(), |acc, g| {
                &acc + &(g * &common::random_poly(&mut rng, a.ring(), 2, 2))
            })
        } else {
            common::random_poly(&mut rng, a.ring(), 3, 3)
        };
        let ideal = a.relations().sum(&Ideal::new(a.ring(), gens.clone()));
        let engine = ideal.normal_form(&f).map_err(e)?.is_zero();
        let oracle = oracle_ideal_membership(&t, &gens, &f).map_err(e)?;
        ensure(engine == oracle, || {
            format!("membership of {f} in {ideal}: engine {engine}, oracle {oracle}")
        })?;
        members += engine as usize;
        trials += 1;
    }

    // Uniqueness and idempotence of reduced bases.
    for (_, f) in corpus() {
        for order in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
            let rels = f.codomain().relations();
            let gb = rels.reduced_groebner(&order).map_err(e)?;
            let mut shuffled = rels.generators().to_vec();
            shuffled.reverse();
            shuffled.shuffle(&mut rng);
            let again = Ideal::new(rels.ring(), shuffled)
                .reduced_groebner(&order)
                .map_err(e)?;
            let twice = Ideal::new(rels.ring(), gb.clone())
                .reduced_groebner(&order)
                .map_err(e)?;
            ensure(gb == again && gb == twice, || {
                format!("reduced basis of {rels} is not unique")
            })?;
        }
    }

    // The command-line report, twice.
    let dir = std::env::temp_dir().join(format!("frobforge-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(e)?;
    let session = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/sessions/corpus.fs");
    let mut outputs = Vec::new();
    for run in 0..2 {
        let out = dir.join(format!("run{run}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_frobforge"))
            .args(["run", session, "--json"])
            .arg(&out)
            .output()
            .map_err(e)?;
        ensure(status.status.code() == Some(0), || {
            format!("exit status {:?}", status.status)
        })?;
        outputs.push(std::fs::read(&out).map_err(e)?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(outputs[0] == outputs[1], || {
        "reports differ between runs".into()
    })?;
    let doc: serde_json::Value = serde_json::from_slice(&outputs[0]).map_err(e)?;
    validate_schema(&doc)?;
    let reports = doc["reports"].as_array().map_or(0, Vec::len);
    Ok(format!("{trials} membership checks ({members} members), unique bases, {reports} deterministic reports"))
}

fn validate_schema(doc: &serde_json::Value) -> Result<(), String> {
    ensure(doc["schema"] == "frobforge-report/1", || {
        "missing schema tag".into()
    })?;
    ensure(
        doc["version"].is_string() && doc["options"].is_object(),
        || "missing version or options".into(),
    )?;
    ensure(doc["error"].is_null(), || {
        format!("session failed: {}", doc["error"])
    })?;
    let reports = doc["reports"].as_array().ok_or("reports is not an array")?;
    ensure(!reports.is_empty(), || "no reports".into())?;
    for r in reports {
        for field in [
            "command",
            "inputs",
            "result",
            "resources",
            "version",
            "order",
        ] {
            ensure(r.get(field).is_some(), || {
                format!("report lacks `{field}`: {r}")
            })?;
        }
        ensure(r["command"].is_string() && r["result"].is_object(), || {
            format!("malformed report {r}")
        })?;
        ensure(r["resources"]["s_pair_steps"].is_u64(), || {
            format!("malformed resources in {r}")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        (
            "semiperfectness criterion vs subring closure",
            semiperfect_vs_closure,
        ),
        ("factorization certificates", factorization_certificates),
        ("explicit presentation of tower stages", gabber_presentation),
        ("quotient tower identity", quotient_tower_identity),
        ("automatic Tor-independence", tor_independence),
        ("p-basis over polynomial rings", p_basis),
        ("etale maps are relatively perfect", etale_perfect),
        ("ideals fixed by Frobenius", fixed_ideal),
        ("completion cofinality", cofinality),
        ("engine soundness and report determinism", engine_soundness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
