//! Semiperfectness through Kähler differentials, semiperfect covers,
//! relative perfectness, the free / relatively perfect / surjective
//! factorization and p-bases.

use crate::algebra::{
    compose, frobenius_twist, pushout, relative_frobenius, AlgebraMap, FPAlgebra,
};
use crate::error::{Error, Result};
use crate::groebner::{minors_ideal, subsets, Ideal, ModuleElement};
use crate::homology::{
    algebra_as_module, frobenius_pushforward, tor, ModulePresentation, TorGroup,
};
use crate::polyring::{MonomialOrder, Polynomial};

/// Default resolution length for Tor corroboration.
pub const DEFAULT_TOR_BOUND: usize = 3;

/// `Ω_{S/R}` over `S` on the differentials of the `S` variables: the
/// Jacobian columns of the relations of `S`, and `-∂f(x_j)/∂u` for every
/// variable `x_j` of `R`.
pub fn kahler_presentation(f: &AlgebraMap) -> Result<ModulePresentation> {
    let s = f.codomain();
    let m = s.nvars();
    let mut cols = Vec::new();
    for g in s.relations().generators() {
        cols.push(ModuleElement::new(
            (0..m)
                .map(|i| g.partial_derivative(i))
                .collect::<Result<Vec<_>>>()?,
        ));
    }
    for img in f.images() {
        cols.push(ModuleElement::new(
            (0..m)
                .map(|i| img.partial_derivative(i).map(|d| -&d))
                .collect::<Result<Vec<_>>>()?,
        ));
    }
    ModulePresentation::new(s, m, cols)
}

#[derive(Clone, Debug)]
pub struct SemiperfectVerdict {
    pub semiperfect: bool,
    /// `Fitt_0(Ω) + rel S`; `None` when the minors were too many and the
    /// module was tested for zero directly.
    pub fitting_ideal: Option<Ideal>,
}

/// `S^p[R] = S`, decided by `Ω_{S/R} = 0`, i.e. `Fitt_0(Ω)` is the unit
/// ideal of `S`.
pub fn is_relatively_semiperfect(f: &AlgebraMap) -> Result<SemiperfectVerdict> {
    let omega = kahler_presentation(f)?;
    match omega.fitting_ideal(0) {
        Ok(fitt) => Ok(SemiperfectVerdict {
            semiperfect: fitt.is_unit()?,
            fitting_ideal: Some(fitt),
        }),
        Err(Error::TooLarge { .. }) => Ok(SemiperfectVerdict {
            semiperfect: omega.is_zero()?,
            fitting_ideal: None,
        }),
        Err(e) => Err(e),
    }
}

/// `R → R′ = R[x_1..x_n] → S`.
#[derive(Clone, Debug)]
pub struct SemiperfectCover {
    /// `R → R′`.
    pub inclusion: AlgebraMap,
    /// `R′ → S`, relatively semiperfect.
    pub map: AlgebraMap,
    /// Indices of the `S` variables the adjoined variables map to.
    pub chosen: Vec<usize>,
}

impl SemiperfectCover {
    pub fn cover(&self) -> &FPAlgebra {
        self.inclusion.codomain()
    }

    pub fn adjoined(&self) -> usize {
        self.chosen.len()
    }
}

fn cover_on(f: &AlgebraMap, chosen: &[usize]) -> Result<SemiperfectCover> {
    let (r, s) = (f.domain(), f.codomain());
    let (ring, fresh) = r.ring().extended("x", chosen.len());
    let keep: Vec<usize> = (0..r.nvars()).collect();
    let cover = FPAlgebra::new(
        &ring,
        r.relations()
            .generators()
            .iter()
            .map(|g| g.remap(&ring, &keep))
            .collect(),
    );
    let inclusion = AlgebraMap::new(r, &cover, keep.iter().map(|&i| ring.var(i)).collect())?;
    let mut images = f.images().to_vec();
    images.extend(chosen.iter().map(|&i| s.ring().var(i)));
    let map = AlgebraMap::new(&cover, s, images)?;
    debug_assert_eq!(fresh.len(), chosen.len());
    Ok(SemiperfectCover {
        inclusion,
        map,
        chosen: chosen.to_vec(),
    })
}

/// Adjoins a variable for every generator of `S`, then drops them greedily
/// in declaration order while the cover stays relatively semiperfect.
pub fn semiperfect_cover(f: &AlgebraMap) -> Result<SemiperfectCover> {
    let mut chosen: Vec<usize> = (0..f.codomain().nvars()).collect();
    let mut k = 0;
    while k < chosen.len() {
        let mut trial = chosen.clone();
        trial.remove(k);
        if is_relatively_semiperfect(&cover_on(f, &trial)?.map)?.semiperfect {
            chosen = trial;
        } else {
            k += 1;
        }
    }
    let cover = cover_on(f, &chosen)?;
    if !is_relatively_semiperfect(&cover.map)?.semiperfect {
        return Err(Error::precondition(
            "pipeline",
            "semiperfect cover failed verification",
        ));
    }
    Ok(cover)
}

/// Bounded Tor of `S` (as an `R`-module) against `F_*R`.
#[derive(Clone, Debug)]
pub enum TorEvidence {
    Computed { groups: Vec<TorGroup> },
    Skipped { reason: String },
}

impl TorEvidence {
    /// `Some(true)` if every computed positive-degree group vanishes.
    pub fn vanishes_in_positive_degrees(&self) -> Option<bool> {
        match self {
            TorEvidence::Computed { groups } => {
                let positive: Vec<&TorGroup> = groups.iter().filter(|g| g.index >= 1).collect();
                if positive.iter().all(|g| g.vanishes) {
                    Some(true)
                } else if positive.iter().any(|g| g.dimension.is_some_and(|d| d > 0)) {
                    Some(false)
                } else {
                    None
                }
            }
            TorEvidence::Skipped { .. } => None,
        }
    }
}

/// `Tor_i^R(S, F_*R)` for `i ≤ bound`.
pub fn tor_against_pushforward(f: &AlgebraMap, bound: usize) -> Result<TorEvidence> {
    let module = match algebra_as_module(f) {
        Ok(m) => m,
        Err(e @ (Error::NotModuleFinite { .. } | Error::TooLarge { .. })) => {
            return Ok(TorEvidence::Skipped {
                reason: e.to_string(),
            })
        }
        Err(e) => return Err(e),
    };
    let push = match frobenius_pushforward(f.domain()) {
        Ok(m) => m.prune()?,
        Err(e @ Error::TooLarge { .. }) => {
            return Ok(TorEvidence::Skipped {
                reason: e.to_string(),
            })
        }
        Err(e) => return Err(e),
    };
    match tor(&module.prune()?, &push, bound) {
        Ok(groups) => Ok(TorEvidence::Computed { groups }),
        Err(e @ Error::TooLarge { .. }) => Ok(TorEvidence::Skipped {
            reason: e.to_string(),
        }),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug)]
pub struct PerfectnessCertificate {
    /// `F_{S/R}` is an isomorphism; this alone decides perfectness since
    /// every finitely presented algebra is Noetherian.
    pub perfect: bool,
    pub relative_frobenius: AlgebraMap,
    pub inverse: Option<AlgebraMap>,
    pub tor_bound: usize,
    /// Computed only when the relative Frobenius is an isomorphism.
    pub tor: Option<TorEvidence>,
}

pub fn is_relatively_perfect(f: &AlgebraMap, tor_bound: usize) -> Result<PerfectnessCertificate> {
    if tor_bound == 0 {
        return Err(Error::precondition(
            "pipeline",
            "Tor bound must be at least 1",
        ));
    }
    let rf = relative_frobenius(f)?;
    let inverse = rf.inverse()?;
    let perfect = inverse.is_some();
    let tor = if perfect {
        Some(tor_against_pushforward(f, tor_bound)?)
    } else {
        None
    };
    Ok(PerfectnessCertificate {
        perfect,
        relative_frobenius: rf,
        inverse,
        tor_bound,
        tor,
    })
}

/// Outcome for the middle map `R′ → T`.
#[derive(Clone, Debug)]
pub enum MiddleVerdict {
    /// Stabilized tower: `R′ → T` tested with [`is_relatively_perfect`].
    Perfect(PerfectnessCertificate),
    /// Truncated tower: `F_{T/R′}` tested modulo the kernel of `R′ → T`.
    Truncated { verified: bool },
}

impl MiddleVerdict {
    pub fn passed(&self) -> bool {
        match self {
            MiddleVerdict::Perfect(c) => c.perfect,
            MiddleVerdict::Truncated { verified } => *verified,
        }
    }
}

/// Factorization `R → R′ → T → S`: free of finite type, relatively perfect
/// (or its truncation), surjective.
#[derive(Clone, Debug)]
pub struct FactorizationCertificate {
    pub input: AlgebraMap,
    pub cover: SemiperfectCover,
    pub middle: FPAlgebra,
    /// Stage index `k` of the middle object.
    pub stage: usize,
    pub stabilized: bool,
    pub stage_budget: usize,
    /// `(k, whether T_{k+1} → T_k is an isomorphism)` for every compared pair.
    pub comparisons: Vec<(usize, bool)>,
    pub to_middle: AlgebraMap,
    pub to_target: AlgebraMap,
    pub semiperfect: bool,
    pub middle_verdict: MiddleVerdict,
    pub surjective: bool,
    pub composition_ok: bool,
}

struct MiddleStage {
    algebra: FPAlgebra,
    to_middle: AlgebraMap,
    to_target: AlgebraMap,
}

/// `T_k = R′ ⊗_{B_k} S_k` with `A = F_p[vars R′]`, `B_k = A/I^[p^k]` the
/// quotient-tower stage of `A ↠ R′` and `S_k` the tower stage of
/// `A → S`, which over a polynomial base is its explicit presentation.
fn middle_stage(cover: &SemiperfectCover, k: usize) -> Result<MiddleStage> {
    let g = &cover.map;
    let (rp, s) = (g.domain(), g.codomain());
    let a = FPAlgebra::polynomial(rp.ring());
    let vars: Vec<Polynomial> = (0..rp.nvars()).map(|i| rp.ring().var(i)).collect();
    let b = crate::tower::quotient_tower_stage(&a, rp.relations(), k)?;
    let h = AlgebraMap::new(&a, s, g.images().to_vec())?;
    let sk = frobenius_twist(&h, k as u32)?.algebra;
    let b_to_rp = AlgebraMap::new(&b, rp, vars.clone())?;
    let offset = s.nvars();
    let b_to_sk = AlgebraMap::new(
        &b,
        &sk,
        (0..rp.nvars()).map(|i| sk.ring().var(offset + i)).collect(),
    )?;
    let po = pushout(&b_to_rp, &b_to_sk)?;
    let t = po.algebra;
    let n_rp = rp.nvars();
    let p_k = |e: &Polynomial| e.frobenius_power(k as u32);
    let mut images: Vec<Polynomial> = g.images().to_vec();
    for i in 0..s.nvars() {
        images.push(p_k(&s.ring().var(i))?);
    }
    images.extend(g.images().iter().cloned());
    debug_assert_eq!(images.len(), n_rp + s.nvars() + n_rp);
    let to_target = AlgebraMap::new(&t, s, images)?;
    Ok(MiddleStage {
        algebra: t,
        to_middle: po.left,
        to_target,
    })
}

/// `T_{k+1} → T_k`: fixes `R′` and the copy of `A`, raises `S` variables
/// to the `p`-th power.
fn middle_transition(
    upper: &MiddleStage,
    lower: &MiddleStage,
    n_rp: usize,
    n_s: usize,
) -> Result<AlgebraMap> {
    let ring = lower.algebra.ring();
    let mut images = Vec::with_capacity(upper.algebra.nvars());
    for i in 0..upper.algebra.nvars() {
        let v = ring.var(i);
        images.push(if (n_rp..n_rp + n_s).contains(&i) {
            v.frobenius_power(1)?
        } else {
            v
        });
    }
    AlgebraMap::new(&upper.algebra, &lower.algebra, images)
}

/// `F_{T/R′}` is an isomorphism after dividing its source by the kernel of
/// `R′ → T`.
fn truncated_perfect(to_middle: &AlgebraMap) -> Result<bool> {
    let kernel = to_middle.kernel()?;
    let tw = frobenius_twist(to_middle, 1)?;
    let rf = relative_frobenius(to_middle)?;
    let extra = kernel
        .generators()
        .iter()
        .map(|g| g.substitute(tw.right.images(), tw.algebra.ring()))
        .collect::<Result<Vec<_>>>()?;
    let truncated = tw.algebra.quotient(extra);
    AlgebraMap::new(&truncated, rf.codomain(), rf.images().to_vec())?.is_isomorphism()
}

pub fn factorize(
    f: &AlgebraMap,
    stage_budget: usize,
    tor_bound: usize,
) -> Result<FactorizationCertificate> {
    if stage_budget == 0 {
        return Err(Error::precondition(
            "pipeline",
            "stage budget must be at least 1",
        ));
    }
    let cover = semiperfect_cover(f)?;
    let (n_rp, n_s) = (cover.cover().nvars(), f.codomain().nvars());
    let mut stages = vec![middle_stage(&cover, 1)?];
    let mut comparisons = Vec::new();
    let mut stabilized_at = None;
    for k in 1..stage_budget {
        stages.push(middle_stage(&cover, k + 1)?);
        let transition = middle_transition(&stages[k], &stages[k - 1], n_rp, n_s)?;
        let iso = transition.is_isomorphism()?;
        comparisons.push((k, iso));
        if iso {
            stabilized_at = Some(k);
            break;
        }
    }
    let stage = stabilized_at.unwrap_or(stages.len());
    let chosen = stages.swap_remove(stage - 1);
    let middle_verdict = if stabilized_at.is_some() {
        MiddleVerdict::Perfect(is_relatively_perfect(&chosen.to_middle, tor_bound)?)
    } else {
        MiddleVerdict::Truncated {
            verified: truncated_perfect(&chosen.to_middle)?,
        }
    };
    let surjective = chosen.to_target.is_surjective()?;
    let semiperfect = is_relatively_semiperfect(&cover.map)?.semiperfect;
    let composite = compose(
        &chosen.to_target,
        &compose(&chosen.to_middle, &cover.inclusion)?,
    )?;
    let composition_ok = composite.equals(f)?;
    Ok(FactorizationCertificate {
        input: f.clone(),
        middle: chosen.algebra,
        stage,
        stabilized: stabilized_at.is_some(),
        stage_budget,
        comparisons,
        to_middle: chosen.to_middle,
        to_target: chosen.to_target,
        cover,
        semiperfect,
        middle_verdict,
        surjective,
        composition_ok,
    })
}

/// Outcome of re-running every check of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub composition: bool,
    pub free_of_finite_type: bool,
    pub semiperfect: bool,
    pub middle: bool,
    pub surjective: bool,
    pub verdicts_reproduce: bool,
}

impl CertificateCheck {
    pub fn all(&self) -> bool {
        self.composition
            && self.free_of_finite_type
            && self.semiperfect
            && self.middle
            && self.surjective
            && self.verdicts_reproduce
    }
}

impl FactorizationCertificate {
    pub fn validate(&self, tor_bound: usize) -> Result<CertificateCheck> {
        let f = &self.input;
        let composite = compose(
            &self.to_target,
            &compose(&self.to_middle, &self.cover.inclusion)?,
        )?;
        let composition = composite.equals(f)?;

        // R′ = R[x_1..x_n]: R's variables first, same relations, inclusion on variables.
        let (r, rp) = (f.domain(), self.cover.cover());
        let prefix = rp.vars().len() == r.nvars() + self.cover.adjoined()
            && rp.vars()[..r.nvars()] == *r.vars();
        let keep: Vec<usize> = (0..r.nvars()).collect();
        let lifted = Ideal::new(
            rp.ring(),
            r.relations()
                .generators()
                .iter()
                .map(|g| g.remap(rp.ring(), &keep))
                .collect(),
        );
        let mut on_variables = true;
        for (i, img) in self.cover.inclusion.images().iter().enumerate() {
            on_variables &= rp
                .relations()
                .normal_form(&(img - &rp.ring().var(i)))?
                .is_zero();
        }
        let free_of_finite_type = prefix && lifted.equals(rp.relations())? && on_variables;

        let semiperfect = is_relatively_semiperfect(&self.cover.map)?.semiperfect;
        let middle = if self.stabilized {
            is_relatively_perfect(&self.to_middle, tor_bound)?.perfect
        } else {
            truncated_perfect(&self.to_middle)?
        };
        let surjective = self.to_target.is_surjective()?;
        let verdicts_reproduce = composition == self.composition_ok
            && semiperfect == self.semiperfect
            && middle == self.middle_verdict.passed()
            && surjective == self.surjective;
        Ok(CertificateCheck {
            composition,
            free_of_finite_type,
            semiperfect,
            middle,
            surjective,
            verdicts_reproduce,
        })
    }
}

#[derive(Clone, Debug)]
pub enum PBasisOutcome {
    /// `R[x_1..x_n] → S`, `x_i ↦ elements[i]`, verified relatively perfect.
    Basis {
        elements: Vec<Polynomial>,
        map: AlgebraMap,
        certificate: PerfectnessCertificate,
    },
    /// `Ω` is not projective of constant rank: `Fitt_index(Ω)` is nonzero
    /// although `Fitt_{index+1}` is the unit ideal. The ideal is given by
    /// its reduced basis.
    Obstruction {
        index: usize,
        ideal: Vec<Polynomial>,
    },
}

pub fn find_p_basis(f: &AlgebraMap, tor_bound: usize) -> Result<PBasisOutcome> {
    let (r, s) = (f.domain(), f.codomain());
    let omega = kahler_presentation(f)?;
    let m = omega.rank();
    let mut n = m;
    for j in 0..=m {
        if omega.fitting_ideal(j)?.is_unit()? {
            n = j;
            break;
        }
    }
    if n > 0 {
        let below = omega.fitting_ideal(n - 1)?;
        if !s.relations().contains(&below)? {
            let ideal = below.reduced_groebner(&MonomialOrder::grevlex())?;
            return Ok(PBasisOutcome::Obstruction {
                index: n - 1,
                ideal,
            });
        }
    }
    let matrix = omega.relation_matrix();
    for subset in subsets(m, n) {
        // The chosen differentials generate Ω iff the other rows have unit maximal minors.
        let rows: Vec<Vec<Polynomial>> = (0..m)
            .filter(|i| !subset.contains(i))
            .map(|i| matrix[i].clone())
            .collect();
        let generates = minors_ideal(s.ring(), &rows, m - n)?
            .sum(s.relations())
            .is_unit()?;
        if !generates {
            continue;
        }
        let sub = s.ring().subring(&subset);
        let (ring, fresh) = r.ring().disjoint_union(&sub);
        let keep: Vec<usize> = (0..r.nvars()).collect();
        let domain = FPAlgebra::new(
            &ring,
            r.relations()
                .generators()
                .iter()
                .map(|g| g.remap(&ring, &keep))
                .collect(),
        );
        let elements: Vec<Polynomial> = subset.iter().map(|&i| s.ring().var(i)).collect();
        let mut images = f.images().to_vec();
        images.extend(elements.iter().cloned());
        let map = AlgebraMap::new(&domain, s, images)?;
        debug_assert_eq!(fresh.len(), n);
        let certificate = is_relatively_perfect(&map, tor_bound)?;
        if certificate.perfect {
            return Ok(PBasisOutcome::Basis {
                elements,
                map,
                certificate,
            });
        }
    }
    Err(Error::NoCandidate { rank: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PolyRing;

    fn alg(p: u64, vars: &[&str], rels: &[&str]) -> FPAlgebra {
        let r = PolyRing::with_vars(p, vars);
        FPAlgebra::new(&r, r.polys(rels))
    }

    fn map(dom: &FPAlgebra, cod: &FPAlgebra, images: &[&str]) -> AlgebraMap {
        AlgebraMap::new(dom, cod, cod.ring().polys(images)).unwrap()
    }

    #[test]
    fn kahler_examples() {
        let x = alg(2, &["x"], &[]);
        let omega = kahler_presentation(&AlgebraMap::from_prime_field(&x)).unwrap();
        assert_eq!((omega.rank(), omega.relations().len()), (1, 0));

        let q = map(&x, &alg(2, &["x"], &["x^2"]), &["x"]);
        assert!(kahler_presentation(&q).unwrap().is_zero().unwrap());

        let t = alg(2, &["t"], &[]);
        let omega = kahler_presentation(&map(&t, &x, &["x^2"])).unwrap();
        assert_eq!((omega.rank(), omega.relations().len()), (1, 0));
    }

    #[test]
    fn semiperfect_examples() {
        let x = alg(2, &["x"], &[]);
        assert!(
            is_relatively_semiperfect(&map(&x, &alg(2, &["x"], &["x^2"]), &["x"]))
                .unwrap()
                .semiperfect
        );
        assert!(
            !is_relatively_semiperfect(&AlgebraMap::from_prime_field(&x))
                .unwrap()
                .semiperfect
        );
        let s = alg(2, &["x", "y"], &["y^2 + y + x"]);
        assert!(
            is_relatively_semiperfect(&map(&x, &s, &["x"]))
                .unwrap()
                .semiperfect
        );
    }

    #[test]
    fn cover_examples() {
        let x = alg(2, &["x"], &[]);
        let c = semiperfect_cover(&AlgebraMap::from_prime_field(&x)).unwrap();
        assert_eq!(c.cover().vars(), &["x1"]);
        assert_eq!(c.map.images(), x.ring().polys(&["x"]).as_slice());

        let c = semiperfect_cover(&map(&x, &alg(2, &["x"], &["x^2"]), &["x"])).unwrap();
        assert_eq!(c.adjoined(), 0);

        let t = alg(2, &["t"], &[]);
        let c = semiperfect_cover(&map(&t, &x, &["x^2"])).unwrap();
        assert_eq!(c.cover().vars(), &["t", "x1"]);
    }

    #[test]
    fn perfectness_examples() {
        let x = alg(2, &["x"], &[]);
        assert!(
            is_relatively_perfect(&AlgebraMap::identity(&x), 3)
                .unwrap()
                .perfect
        );
        let f4 = alg(2, &["x"], &["x^2 + x + 1"]);
        let cert = is_relatively_perfect(&AlgebraMap::from_prime_field(&f4), 3).unwrap();
        assert!(cert.perfect);
        assert_eq!(cert.tor.unwrap().vanishes_in_positive_degrees(), Some(true));
        assert!(
            !is_relatively_perfect(&map(&x, &alg(2, &["x"], &["x^2"]), &["x"]), 3)
                .unwrap()
                .perfect
        );
        let e = alg(2, &["e"], &["e^2 + e"]);
        let fp = alg(2, &[], &[]);
        assert!(
            is_relatively_perfect(
                &AlgebraMap::new(&e, &fp, vec![fp.ring().zero()]).unwrap(),
                3
            )
            .unwrap()
            .perfect
        );
    }

    #[test]
    fn factorization_examples() {
        let e = alg(2, &["e"], &["e^2 + e"]);
        let fp = alg(2, &[], &[]);
        let cert = factorize(
            &AlgebraMap::new(&e, &fp, vec![fp.ring().zero()]).unwrap(),
            4,
            3,
        )
        .unwrap();
        assert!(cert.stabilized);
        assert_eq!(cert.stage, 1);
        assert_eq!(cert.cover.adjoined(), 0);
        assert!(cert.validate(3).unwrap().all());

        let dual = alg(2, &["x"], &["x^2"]);
        let cert = factorize(&AlgebraMap::from_prime_field(&dual), 3, 3).unwrap();
        assert!(!cert.stabilized);
        assert_eq!(cert.stage, 3);
        let model = alg(2, &["t"], &["t^16"]);
        let cmp = AlgebraMap::new(&model, &cert.middle, vec![cert.middle.ring().var(0)]).unwrap();
        assert!(cmp.is_isomorphism().unwrap());
        assert!(cert.validate(3).unwrap().all());

        let x = alg(2, &["x"], &[]);
        let cert = factorize(&AlgebraMap::identity(&x), 3, 3).unwrap();
        assert!(cert.stabilized && cert.validate(3).unwrap().all());
    }

    #[test]
    fn p_basis_examples() {
        for p in [2, 3] {
            let s = alg(p, &["x", "y"], &[]);
            match find_p_basis(&AlgebraMap::from_prime_field(&s), 3).unwrap() {
                PBasisOutcome::Basis { elements, .. } => {
                    assert_eq!(elements, s.ring().polys(&["x", "y"]))
                }
                other => panic!("unexpected {other:?}"),
            }
        }
        let x = alg(2, &["x"], &[]);
        assert!(matches!(
            find_p_basis(&AlgebraMap::identity(&x), 3).unwrap(),
            PBasisOutcome::Basis { ref elements, .. } if elements.is_empty()
        ));
        let cusp = alg(5, &["x", "y"], &["y^2 - x^3"]);
        match find_p_basis(&AlgebraMap::from_prime_field(&cusp), 3).unwrap() {
            PBasisOutcome::Obstruction { index, ideal } => {
                assert_eq!(index, 1);
                assert_eq!(ideal, cusp.ring().polys(&["x^2", "y"]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
