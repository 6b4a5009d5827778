//! Relative Frobenius towers `… → S ⊗_{R,F²} R → S ⊗_{R,F} R → S`, their
//! explicit presentations over polynomial bases, quotient towers
//! `R/I^[p^n]`, stabilization and the cofinality of Frobenius powers.

use crate::algebra::{frobenius_twist, AlgebraMap, FPAlgebra};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::Polynomial;

/// Default number of stages explored.
pub const DEFAULT_MAX_STAGE: usize = 6;

/// Stage `n` of the tower of `f: R → S`, presented as
/// [`frobenius_twist`]`(f, n)`; stage 0 is `S` itself.
#[derive(Clone, Debug)]
pub struct TowerStage {
    pub index: usize,
    pub stage: FPAlgebra,
    /// `stage(n) → stage(n - 1)`: `u ↦ u^p` on `S` variables, `x ↦ x` on
    /// `R` variables. The transition out of stage 1 is the relative
    /// Frobenius.
    pub transition: Option<AlgebraMap>,
    /// `R → stage(n)`.
    pub base_map: AlgebraMap,
    /// `S → stage(n)`, the left coprojection.
    pub left: AlgebraMap,
}

fn stage_parts(f: &AlgebraMap, n: usize) -> Result<(FPAlgebra, AlgebraMap, AlgebraMap)> {
    if n == 0 {
        let s = f.codomain();
        return Ok((s.clone(), f.clone(), AlgebraMap::identity(s)));
    }
    let tw = frobenius_twist(f, n as u32)?;
    Ok((tw.algebra, tw.right, tw.left))
}

pub fn tower_stage(f: &AlgebraMap, n: usize) -> Result<TowerStage> {
    let (stage, base_map, left) = stage_parts(f, n)?;
    let transition = if n == 0 {
        None
    } else {
        let (below, below_base, below_left) = stage_parts(f, n - 1)?;
        let s = f.codomain();
        let mut images = (0..s.nvars())
            .map(|i| below_left.images()[i].frobenius_power(1))
            .collect::<Result<Vec<_>>>()?;
        images.extend(below_base.images().iter().cloned());
        Some(AlgebraMap::new(&stage, &below, images)?)
    };
    Ok(TowerStage {
        index: n,
        stage,
        transition,
        base_map,
        left,
    })
}

/// Stages `0..=n`.
pub fn tower(f: &AlgebraMap, n: usize) -> Result<Vec<TowerStage>> {
    (0..=n).map(|k| tower_stage(f, k)).collect()
}

/// `S[x_1..x_m] / (x_i^{p^k} - s_i)` over a polynomial base `R`.
///
/// With `s_i = f(r_i)` for the variables `r_i` of `R` this is exactly the
/// presentation of [`tower_stage`]`(f, k)`, the fresh variables standing
/// for those of `R`.
pub fn gabber_stage(f: &AlgebraMap, generators: &[Polynomial], k: usize) -> Result<FPAlgebra> {
    let (r, s) = (f.domain(), f.codomain());
    if !r.is_polynomial() {
        return Err(Error::precondition(
            "tower",
            format!("base {r} is not a polynomial ring"),
        ));
    }
    if let Some(bad) = generators.iter().find(|g| g.ring() != s.ring()) {
        return Err(Error::mismatch(
            "tower",
            format!("{bad} is not an element of {s}"),
        ));
    }
    if !crate::pipeline::is_relatively_semiperfect(f)?.semiperfect {
        return Err(Error::precondition(
            "tower",
            "map is not relatively semiperfect",
        ));
    }
    let (ring, fresh) = if generators.len() == r.nvars() {
        s.ring().disjoint_union(r.ring())
    } else {
        s.ring().extended("x", generators.len())
    };
    let svars: Vec<usize> = (0..s.nvars()).collect();
    let mut rels: Vec<Polynomial> = s
        .relations()
        .generators()
        .iter()
        .map(|g| g.remap(&ring, &svars))
        .collect();
    for (i, g) in generators.iter().enumerate() {
        rels.push(&ring.var(fresh[i]).frobenius_power(k as u32)? - &g.remap(&ring, &svars));
    }
    Ok(FPAlgebra::new(&ring, rels))
}

/// [`gabber_stage`] with `s_i = f(r_i)`.
pub fn gabber_stage_of_images(f: &AlgebraMap, k: usize) -> Result<FPAlgebra> {
    gabber_stage(f, f.images(), k)
}

/// `R / (rel R + I^[p^n])`.
pub fn quotient_tower_stage(r: &FPAlgebra, i: &Ideal, n: usize) -> Result<FPAlgebra> {
    if i.ring() != r.ring() {
        return Err(Error::mismatch(
            "tower",
            format!("ideal {i} is not in the ring of {r}"),
        ));
    }
    Ok(r.quotient(i.frobenius_power(n as u32)?.generators().iter().cloned()))
}

#[derive(Clone, Debug)]
pub enum StabilizationWitness {
    /// The projection `R/I^[p^{n+1}] → R/I^[p^n]` and its inverse.
    Isomorphism {
        transition: AlgebraMap,
        inverse: AlgebraMap,
    },
    /// A generator of `I^[p^n]` outside `I^[p^{n+1}]` modulo `rel R`.
    Strict { stage: usize, element: Polynomial },
}

#[derive(Clone, Debug)]
pub struct StabilizationReport {
    pub stabilized: bool,
    pub n0: Option<usize>,
    pub n_max: usize,
    pub witness: StabilizationWitness,
}

/// Smallest `n0 ≤ n_max` with `I^[p^{n0}] = I^[p^{n0+1}]` in `R`.
pub fn detect_stabilization(r: &FPAlgebra, i: &Ideal, n_max: usize) -> Result<StabilizationReport> {
    let mut last = None;
    for n in 0..=n_max {
        let here = quotient_tower_stage(r, i, n)?;
        let next = quotient_tower_stage(r, i, n + 1)?;
        let strict = i
            .frobenius_power(n as u32)?
            .generators()
            .iter()
            .find(|g| next.reduce(g).map(|nf| !nf.is_zero()).unwrap_or(true))
            .cloned();
        match strict {
            None => {
                let vars: Vec<Polynomial> = (0..r.nvars()).map(|v| r.ring().var(v)).collect();
                let transition = AlgebraMap::new(&next, &here, vars)?;
                let inverse = transition.inverse()?.ok_or_else(|| {
                    Error::precondition(
                        "tower",
                        "equal Frobenius powers but the projection is not invertible",
                    )
                })?;
                return Ok(StabilizationReport {
                    stabilized: true,
                    n0: Some(n),
                    n_max,
                    witness: StabilizationWitness::Isomorphism {
                        transition,
                        inverse,
                    },
                });
            }
            Some(element) => last = Some(StabilizationWitness::Strict { stage: n, element }),
        }
    }
    Ok(StabilizationReport {
        stabilized: false,
        n0: None,
        n_max,
        witness: last.expect("at least one stage"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofinalityBound {
    /// Minimal `m` with `I^m ⊆ I^[p^n]`.
    pub m: usize,
    /// The a priori bound `r(p^n - 1) + 1`.
    pub cap: usize,
    pub generators: usize,
}

/// Minimal `m` with `I^m ⊆ I^[p^n]` modulo `rel R`, searched up to
/// `r(p^n - 1) + 1` for `r` generators of `I`.
pub fn cofinality_bound(r: &FPAlgebra, i: &Ideal, n: usize) -> Result<CofinalityBound> {
    if i.ring() != r.ring() {
        return Err(Error::mismatch(
            "tower",
            format!("ideal {i} is not in the ring of {r}"),
        ));
    }
    let gens = i.generators().len();
    let q = (r.characteristic() as usize).pow(n as u32);
    let cap = gens * (q - 1) + 1;
    let target = r.relations().sum(&i.frobenius_power(n as u32)?);
    let mut power = Ideal::unit(r.ring());
    for m in 1..=cap {
        power = power.product(i);
        if target.contains(&power)? {
            return Ok(CofinalityBound {
                m,
                cap,
                generators: gens,
            });
        }
    }
    // Unreachable by the pigeonhole bound; a zero ideal needs m = 1.
    Ok(CofinalityBound {
        m: cap.max(1),
        cap,
        generators: gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PolyRing;

    fn alg(p: u64, vars: &[&str], rels: &[&str]) -> FPAlgebra {
        let r = PolyRing::with_vars(p, vars);
        FPAlgebra::new(&r, r.polys(rels))
    }

    fn iso_to(stage: &FPAlgebra, model: &FPAlgebra, images: &[&str]) -> bool {
        AlgebraMap::new(model, stage, stage.ring().polys(images))
            .unwrap()
            .is_isomorphism()
            .unwrap()
    }

    #[test]
    fn identity_tower_is_constant() {
        let r = alg(2, &["x", "y"], &["x*y"]);
        let id = AlgebraMap::identity(&r);
        for n in 0..=3 {
            let st = tower_stage(&id, n).unwrap();
            assert!(st.base_map.is_isomorphism().unwrap(), "stage {n}");
        }
    }

    #[test]
    fn quotient_tower_examples() {
        let r = alg(2, &["x"], &[]);
        let s = alg(2, &["x"], &["x^2"]);
        let q = AlgebraMap::new(&r, &s, s.ring().polys(&["x"])).unwrap();
        let st = tower_stage(&q, 2).unwrap();
        assert!(iso_to(&st.stage, &alg(2, &["x"], &["x^8"]), &["x_1"]));

        let i = Ideal::new(r.ring(), r.ring().polys(&["x^2"]));
        let qs = quotient_tower_stage(&r, &i, 3).unwrap();
        assert!(qs
            .relations()
            .equals(&Ideal::new(r.ring(), r.ring().polys(&["x^16"])))
            .unwrap());

        let e = alg(2, &["e"], &["e^2 + e"]);
        let fp = alg(2, &[], &[]);
        let to_zero = AlgebraMap::new(&e, &fp, vec![fp.ring().zero()]).unwrap();
        let st = tower_stage(&to_zero, 1).unwrap();
        assert!(st.left.is_isomorphism().unwrap());
        let ie = Ideal::new(e.ring(), e.ring().polys(&["e"]));
        for n in 0..3 {
            assert!(quotient_tower_stage(&e, &ie, n)
                .unwrap()
                .relations()
                .equals(&ie.sum(e.relations()))
                .unwrap());
        }
    }

    #[test]
    fn transitions_compose_to_frobenius() {
        let r = alg(2, &["t"], &[]);
        let s = alg(2, &["x", "y"], &["y^2 + x*y + t"][..0]);
        let f = AlgebraMap::new(&r, &s, s.ring().polys(&["x*y + x"])).unwrap();
        let stages = tower(&f, 2).unwrap();
        let t2 = stages[2].transition.as_ref().unwrap();
        let t1 = stages[1].transition.as_ref().unwrap();
        let composite = crate::algebra::compose(t1, t2).unwrap();
        // Two-step map: u ↦ u^4, r ↦ f(r).
        let expected = crate::algebra::relative_frobenius_power(&f, 2).unwrap();
        assert!(composite.equals(&expected).unwrap());
    }

    #[test]
    fn gabber_examples() {
        let t = alg(2, &["t"], &[]);
        let s = alg(2, &["t"], &["t^2"]);
        let q = AlgebraMap::new(&t, &s, s.ring().polys(&["t"])).unwrap();
        let g = gabber_stage(&q, &s.ring().polys(&["t"]), 1).unwrap();
        assert!(iso_to(&g, &alg(2, &["x"], &["x^4"]), &["t_1"]));
        let g0 = gabber_stage(&q, &s.ring().polys(&["t"]), 0).unwrap();
        assert!(iso_to(&g0, &s, &["t"]));

        let id = AlgebraMap::identity(&t);
        let g = gabber_stage(&id, &t.ring().polys(&["t"]), 2).unwrap();
        assert!(iso_to(&g, &alg(2, &["x"], &[]), &["t_1"]));

        let x = alg(2, &["x"], &[]);
        assert!(matches!(
            gabber_stage(&AlgebraMap::from_prime_field(&x), &[], 1),
            Err(Error::Precondition {
                module: "tower",
                ..
            })
        ));
    }

    #[test]
    fn stabilization_examples() {
        let e = alg(2, &["e"], &["e^2 + e"]);
        let rep =
            detect_stabilization(&e, &Ideal::new(e.ring(), e.ring().polys(&["e"])), 6).unwrap();
        assert_eq!((rep.stabilized, rep.n0), (true, Some(0)));

        let x = alg(2, &["x"], &[]);
        let rep =
            detect_stabilization(&x, &Ideal::new(x.ring(), x.ring().polys(&["x"])), 4).unwrap();
        assert!(!rep.stabilized);

        let xy = alg(2, &["x", "y"], &["x*y"]);
        let rep =
            detect_stabilization(&xy, &Ideal::new(xy.ring(), xy.ring().polys(&["x"])), 3).unwrap();
        assert!(!rep.stabilized);
        assert!(matches!(
            rep.witness,
            StabilizationWitness::Strict { stage: 3, .. }
        ));
    }

    #[test]
    fn cofinality_examples() {
        let x = alg(2, &["x"], &[]);
        let i = Ideal::new(x.ring(), x.ring().polys(&["x"]));
        assert_eq!(cofinality_bound(&x, &i, 1).unwrap().m, 2);
        let xy = alg(2, &["x", "y"], &[]);
        let i = Ideal::new(xy.ring(), xy.ring().polys(&["x", "y"]));
        let b = cofinality_bound(&xy, &i, 1).unwrap();
        assert_eq!((b.m, b.cap), (3, 3));
        let x3 = alg(3, &["x"], &[]);
        assert_eq!(
            cofinality_bound(&x3, &Ideal::new(x3.ring(), x3.ring().polys(&["x"])), 1)
                .unwrap()
                .m,
            3
        );
    }
}
