use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::engine::{self, ModuleOrder, Term, Vector};
use crate::error::Result;
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

struct CachedBasis {
    polys: Vec<Polynomial>,
    vectors: Vec<Vector>,
}

/// An ideal of a polynomial ring, given by generators, with reduced Gröbner
/// bases cached per monomial order.
///
/// Clones share the cache. Since a reduced basis is unique, concurrent
/// writers can only ever store the same value.
#[derive(Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<CachedBasis>>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.gens
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(crate) fn to_vector(f: &Polynomial, order: &MonomialOrder) -> Vector {
    f.sorted_terms(order)
        .into_iter()
        .map(|(mono, coeff)| Term {
            pos: 0,
            mono,
            coeff,
        })
        .collect()
}

pub(crate) fn from_vector(ring: &PolyRing, v: &[Term]) -> Polynomial {
    Polynomial::from_terms(ring, v.iter().map(|t| (t.mono.clone(), t.coeff)))
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(g.ring() == ring, "generator {g} lives in a different ring");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self {
            ring: ring.clone(),
            gens,
            cache: Arc::default(),
        }
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![ring.one()])
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    fn basis(&self, order: &MonomialOrder) -> Result<Arc<CachedBasis>> {
        if let Some(hit) = self.cache.lock().unwrap().get(order) {
            return Ok(hit.clone());
        }
        let field = self.ring.field();
        let gens = self.gens.iter().map(|g| to_vector(g, order)).collect();
        let vectors =
            engine::groebner_basis(field, &ModuleOrder::monomial(order.clone()), gens, true)?;
        let polys = vectors.iter().map(|v| from_vector(&self.ring, v)).collect();
        let entry = Arc::new(CachedBasis { polys, vectors });
        self.cache
            .lock()
            .unwrap()
            .insert(order.clone(), entry.clone());
        Ok(entry)
    }

    /// Reduced Gröbner basis under `order`, largest leading term first.
    pub fn reduced_groebner(&self, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
        Ok(self.basis(order)?.polys.clone())
    }

    /// Leading monomials of the reduced basis under `order`.
    pub fn leading_monomials(&self, order: &MonomialOrder) -> Result<Vec<Monomial>> {
        Ok(self
            .basis(order)?
            .vectors
            .iter()
            .map(|v| v[0].mono.clone())
            .collect())
    }

    /// Remainder of `f` modulo the reduced basis; zero iff `f` is in the ideal.
    pub fn normal_form_with(&self, f: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
        assert!(f.ring() == &self.ring, "{f} is not in the ideal's ring");
        let basis = self.basis(order)?;
        let v = to_vector(f, order);
        let field = self.ring.field();
        let r = engine::reduce(
            field,
            &ModuleOrder::monomial(order.clone()),
            &v,
            &basis.vectors,
        );
        Ok(from_vector(&self.ring, &r))
    }

    /// Normal form under grevlex.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.normal_form_with(f, &MonomialOrder::grevlex())
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.contains_with(other, &MonomialOrder::grevlex())
    }

    pub fn contains_with(&self, other: &Ideal, order: &MonomialOrder) -> Result<bool> {
        for g in &other.gens {
            if !self.normal_form_with(g, order)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by mutual containment.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        let basis = self.basis(&MonomialOrder::grevlex())?;
        Ok(basis.vectors.len() == 1 && basis.vectors[0][0].mono.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// `I ∩ F_p[keep]`, presented in the subring on `keep` (in that order).
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal> {
        let eliminated: Vec<usize> = (0..self.ring.nvars())
            .filter(|i| !keep.contains(i))
            .collect();
        let order = MonomialOrder::eliminating(&eliminated, keep);
        let sub = self.ring.subring(keep);
        let gens = self
            .reduced_groebner(&order)?
            .iter()
            .filter_map(|g| g.restrict(&sub, keep))
            .collect();
        Ok(Ideal::new(&sub, gens))
    }

    /// `I^[p^k]`: generated by the `p^k`-th powers of the generators.
    pub fn frobenius_power(&self, k: u32) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.frobenius_power(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, gens))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    /// Generated by pairwise products, without repeats.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, dedup(gens))
    }

    /// Ordinary power `I^m`; `I^0` is the unit ideal.
    pub fn power(&self, m: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..m {
            acc = acc.product(self);
        }
        acc
    }

    /// The same generators moved into `target` along `index_map`.
    pub fn remap(&self, target: &PolyRing, index_map: &[usize]) -> Ideal {
        Ideal::new(
            target,
            self.gens
                .iter()
                .map(|g| g.remap(target, index_map))
                .collect(),
        )
    }
}

fn dedup(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(ring: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(ring, ring.polys(gens))
    }

    #[test]
    fn reduced_basis_examples() {
        let r = PolyRing::with_vars(2, &["x", "y"]);
        let lex = MonomialOrder::lex();
        assert_eq!(
            ideal(&r, &["x"]).reduced_groebner(&lex).unwrap(),
            r.polys(&["x"])
        );
        assert_eq!(
            ideal(&r, &["x^2 + y", "y^2"])
                .reduced_groebner(&lex)
                .unwrap(),
            r.polys(&["x^2 + y", "y^2"])
        );
        assert_eq!(
            ideal(&r, &["x", "x + 1"]).reduced_groebner(&lex).unwrap(),
            r.polys(&["1"])
        );
    }

    #[test]
    fn normal_form_examples() {
        let r = PolyRing::with_vars(2, &["x", "y"]);
        let lex = MonomialOrder::lex();
        let f = ideal(&r, &["x^2 + y"]);
        assert_eq!(
            f.normal_form_with(&r.parse("x^2").unwrap(), &lex).unwrap(),
            r.var(1)
        );
        assert_eq!(
            ideal(&r, &["x"]).normal_form_with(&r.var(1), &lex).unwrap(),
            r.var(1)
        );
        let g = ideal(&r, &["x^2 + y", "y^2"]);
        assert_eq!(
            g.normal_form_with(&r.parse("x^2*y + y").unwrap(), &lex)
                .unwrap(),
            r.var(1)
        );
    }

    #[test]
    fn containment_examples() {
        let r = PolyRing::with_vars(2, &["x", "y"]);
        assert!(ideal(&r, &["x"]).contains(&ideal(&r, &["x^2"])).unwrap());
        assert!(!ideal(&r, &["x^2"]).contains(&ideal(&r, &["x"])).unwrap());
        assert!(ideal(&r, &["x + y", "y"])
            .equals(&ideal(&r, &["x", "y"]))
            .unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = PolyRing::with_vars(2, &["x", "u", "v"]);
        let graph = ideal(&r, &["u + x^2", "v + x^3"]);
        let kernel = graph.eliminate(&[1, 2]).unwrap();
        let sub = kernel.ring().clone();
        assert_eq!(sub.vars(), &["u", "v"]);
        assert!(kernel.equals(&ideal(&sub, &["u^3 + v^2"])).unwrap());

        let r2 = PolyRing::with_vars(2, &["x", "y"]);
        assert!(ideal(&r2, &["x + y"]).eliminate(&[1]).unwrap().is_zero());
        let e = ideal(&r2, &["x", "y"]).eliminate(&[1]).unwrap();
        assert!(e.equals(&ideal(e.ring(), &["y"])).unwrap());
    }

    #[test]
    fn frobenius_power_examples() {
        let r2 = PolyRing::with_vars(2, &["x", "y"]);
        let i = ideal(&r2, &["x + y"]).frobenius_power(1).unwrap();
        assert_eq!(i.generators(), r2.polys(&["x^2 + y^2"]).as_slice());
        let r3 = PolyRing::with_vars(3, &["x", "y"]);
        assert!(ideal(&r3, &["x", "y"])
            .frobenius_power(1)
            .unwrap()
            .equals(&ideal(&r3, &["x^3", "y^3"]))
            .unwrap());
        let e = PolyRing::with_vars(2, &["e"]);
        let i = ideal(&e, &["e^2 + e", "e"]).frobenius_power(1).unwrap();
        assert_eq!(i.generators(), e.polys(&["e^4 + e^2", "e^2"]).as_slice());
    }

    #[test]
    fn basis_is_cached_and_permutation_invariant() {
        let r = PolyRing::with_vars(3, &["x", "y", "z"]);
        let a = ideal(&r, &["x*y - z", "y*z - x", "x*z - y"]);
        let b = ideal(&r, &["x*z - y", "x*y - z", "y*z - x"]);
        let order = MonomialOrder::grevlex();
        let ga = a.reduced_groebner(&order).unwrap();
        assert_eq!(ga, a.reduced_groebner(&order).unwrap());
        assert_eq!(ga, b.reduced_groebner(&order).unwrap());
        let again = Ideal::new(&r, ga.clone()).reduced_groebner(&order).unwrap();
        assert_eq!(ga, again);
    }

    #[test]
    fn step_budget_is_reported() {
        // A tiny budget fails loudly instead of truncating.
        let r = PolyRing::with_vars(3, &["x", "y", "z"]);
        let i = ideal(&r, &["x^3 - y*z", "y^3 - x*z", "z^3 - x*y", "x*y*z - 1"]);
        let before = engine::step_budget();
        engine::set_step_budget(1);
        let res = i.reduced_groebner(&MonomialOrder::lex());
        engine::set_step_budget(before);
        assert!(matches!(res, Err(crate::Error::Resource { budget: 1 })));
    }
}
