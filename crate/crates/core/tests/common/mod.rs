#![allow(dead_code)]

use frobforge::algebra::{AlgebraMap, FPAlgebra};
use frobforge::oracle::enumerate_algebra;
use frobforge::polyring::{Monomial, PolyRing, Polynomial};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn alg(p: u64, vars: &[&str], rels: &[&str]) -> FPAlgebra {
    let r = PolyRing::with_vars(p, vars);
    FPAlgebra::new(&r, r.polys(rels))
}

pub fn map(dom: &FPAlgebra, cod: &FPAlgebra, images: &[&str]) -> AlgebraMap {
    AlgebraMap::new(dom, cod, cod.ring().polys(images)).unwrap()
}

pub fn structure(a: &FPAlgebra) -> AlgebraMap {
    AlgebraMap::from_prime_field(a)
}

/// Named maps shared by the property tests.
pub fn corpus() -> Vec<(&'static str, AlgebraMap)> {
    let x2 = alg(2, &["x"], &[]);
    let f2 = alg(2, &[], &[]);
    let f3 = alg(3, &[], &[]);
    let e = alg(2, &["e"], &["e^2 + e"]);
    let dual = alg(2, &["x"], &["x^2"]);
    let f4 = alg(2, &["a"], &["a^2 + a + 1"]);
    let f9 = alg(3, &["i"], &["i^2 + 1"]);
    let as2 = alg(2, &["x", "y"], &["y^2 + y + x"]);
    let x3 = alg(3, &["x"], &[]);
    let as3 = alg(3, &["x", "y"], &["y^3 - y - x"]);
    let t2 = alg(2, &["t"], &[]);
    let node = alg(2, &["x", "y"], &["x*y"]);
    let trunc3 = alg(3, &["x"], &["x^3"]);
    let t_sq = alg(2, &["t"], &["t^2"]);
    let x4 = alg(2, &["x"], &["x^4"]);
    vec![
        ("identity", AlgebraMap::identity(&x2)),
        ("idempotent-to-point", map(&e, &f2, &["0"])),
        ("dual-numbers", structure(&dual)),
        ("f4", structure(&f4)),
        ("artin-schreier", map(&x2, &as2, &["x"])),
        ("quotient", map(&x2, &dual, &["x"])),
        ("f9", structure(&f9)),
        ("square", map(&t2, &x2, &["x^2"])),
        ("polynomial-over-point", structure(&x2)),
        ("artin-schreier-3", map(&x3, &as3, &["x"])),
        ("node-branch", map(&node, &x2, &["x", "0"])),
        ("split", structure(&e)),
        ("identity-artinian", AlgebraMap::identity(&trunc3)),
        ("square-artinian", map(&t_sq, &x4, &["x^2"])),
        ("f3-point", AlgebraMap::identity(&f3)),
    ]
}

/// Whether both sides are finite-dimensional and small enough to enumerate.
pub fn is_artinian(f: &AlgebraMap) -> bool {
    enumerate_algebra(f.domain()).is_ok() && enumerate_algebra(f.codomain()).is_ok()
}

pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &PolyRing,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial {
    let p = ring.characteristic();
    let n = ring.nvars();
    let count = rng.gen_range(0..=max_terms);
    Polynomial::from_terms(
        ring,
        (0..count).map(|_| {
            let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
            (Monomial::new(exps), rng.gen_range(1..p))
        }),
    )
}

fn var_names(n: usize, stem: &[&'static str]) -> Vec<&'static str> {
    stem[..n].to_vec()
}

/// A random finite-dimensional algebra of dimension `1..=max_dim`.
pub fn random_artinian(
    rng: &mut ChaCha8Rng,
    p: u64,
    max_dim: usize,
    stem: &[&'static str; 2],
) -> FPAlgebra {
    loop {
        let n = rng.gen_range(0..=2usize);
        let names = var_names(n, stem);
        let ring = PolyRing::with_vars(p, &names);
        let mut rels = Vec::new();
        for i in 0..n {
            let e = rng.gen_range(1..=4u32);
            let mut pure = ring.term(1, Monomial::var(n, i, e));
            // Occasionally a non-monomial relation in this variable.
            if rng.gen_bool(0.4) {
                let lower = random_poly(rng, &ring, e.saturating_sub(1), 2);
                pure = &pure + &lower;
            }
            rels.push(pure);
        }
        if n == 2 && rng.gen_bool(0.5) {
            rels.push(random_poly(rng, &ring, 2, 2));
        }
        let a = FPAlgebra::new(&ring, rels);
        if let Ok(t) = enumerate_algebra(&a) {
            if (1..=max_dim).contains(&t.dim()) {
                return a;
            }
        }
    }
}

/// A random well-defined map, if one is found within a few attempts.
pub fn random_map(rng: &mut ChaCha8Rng, r: &FPAlgebra, s: &FPAlgebra) -> Option<AlgebraMap> {
    for _ in 0..60 {
        let images: Vec<Polynomial> = (0..r.nvars())
            .map(|_| {
                if s.nvars() > 0 && rng.gen_bool(0.3) {
                    let v = s.ring().var(rng.gen_range(0..s.nvars()));
                    &v + &random_poly(rng, s.ring(), 2, 1)
                } else {
                    random_poly(rng, s.ring(), 2, 3)
                }
            })
            .collect();
        if let Ok(f) = AlgebraMap::new(r, s, images) {
            return Some(f);
        }
    }
    None
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}
