use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, MonomialOrder, PrimeField};
use crate::error::{Error, Result};

/// Hard limit on variables per ambient ring.
pub const MAX_VARS: usize = 64;

struct RingData {
    field: PrimeField,
    vars: Vec<String>,
}

/// The ambient polynomial ring `F_p[vars]`.
///
/// Cheap to clone; two rings are equal when they have the same field and the
/// same variable names in the same order.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::precondition(
                "polyring",
                format!("{} variables exceed the limit of {MAX_VARS}", vars.len()),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::precondition(
                    "polyring",
                    format!("invalid variable name `{v}`"),
                ));
            }
            if vars[..i].contains(v) {
                return Err(Error::precondition(
                    "polyring",
                    format!("duplicate variable `{v}`"),
                ));
            }
        }
        Ok(Self(Arc::new(RingData { field, vars })))
    }

    /// Convenience constructor for tests and examples; panics on bad input.
    pub fn with_vars(p: u64, vars: &[&str]) -> Self {
        let field = PrimeField::new(p).expect("prime characteristic");
        Self::new(field, vars.iter().map(|s| s.to_string()).collect()).expect("valid variables")
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field().from_i64(c);
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(&self, c: u32, mono: Monomial) -> Polynomial {
        debug_assert_eq!(mono.nvars(), self.nvars());
        let mut terms = BTreeMap::new();
        let c = c % self.characteristic();
        if c != 0 {
            terms.insert(mono, c);
        }
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn var(&self, index: usize) -> Polynomial {
        assert!(index < self.nvars(), "variable index {index} out of range");
        self.term(1, Monomial::var(self.nvars(), index, 1))
    }

    /// Parses `x^2*y + 3*z + 1` style text over this ring.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::workbench::syntax::parse_polynomial(self, text)
    }

    /// Parses a list of polynomials; panics on failure. Meant for tests.
    pub fn polys(&self, texts: &[&str]) -> Vec<Polynomial> {
        texts
            .iter()
            .map(|t| self.parse(t).expect("polynomial parses"))
            .collect()
    }

    /// Ring on `self.vars ++ other.vars`, renaming clashing names of `other`.
    ///
    /// Returns the new ring together with the indices of `other`'s variables
    /// in it (the variables of `self` keep their indices).
    pub fn disjoint_union(&self, other: &PolyRing) -> (PolyRing, Vec<usize>) {
        let mut names: Vec<String> = self.vars().to_vec();
        let mut map = Vec::with_capacity(other.nvars());
        for v in other.vars() {
            let name = fresh_name(v, &names);
            map.push(names.len());
            names.push(name);
        }
        let ring = PolyRing::new(self.field(), names).expect("union of valid rings");
        (ring, map)
    }

    /// Ring on `self.vars` followed by `count` fresh variables based on `stem`.
    pub fn extended(&self, stem: &str, count: usize) -> (PolyRing, Vec<usize>) {
        let mut names: Vec<String> = self.vars().to_vec();
        let mut map = Vec::with_capacity(count);
        for i in 1..=count {
            let name = fresh_name(&format!("{stem}{i}"), &names);
            map.push(names.len());
            names.push(name);
        }
        (
            PolyRing::new(self.field(), names).expect("extension of a valid ring"),
            map,
        )
    }

    /// Ring on the chosen subset of variables, in the given order.
    pub fn subring(&self, keep: &[usize]) -> PolyRing {
        let names = keep.iter().map(|&i| self.0.vars[i].clone()).collect();
        PolyRing::new(self.field(), names).expect("subset of a valid ring")
    }
}

/// `base` if unused, else `base_1`, `base_2`, ...
pub(crate) fn fresh_name(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|t| t == base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}_{i}"))
        .find(|cand| !taken.iter().any(|t| t == cand))
        .expect("infinitely many candidates")
}

/// A sparse polynomial in canonical form: a map from monomials to nonzero
/// coefficients in `[0, p)`.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: BTreeMap<Monomial, u32>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn from_terms(ring: &PolyRing, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let field = ring.field();
        let mut map: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let c = c % field.characteristic();
            if c == 0 {
                continue;
            }
            let slot = map.entry(m).or_insert(0);
            *slot = field.add(*slot, c);
        }
        map.retain(|_, c| *c != 0);
        Polynomial {
            ring: ring.clone(),
            terms: map,
        }
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> + '_ {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// The value if the polynomial is a constant (zero included).
    pub fn constant_value(&self) -> Option<u32> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then_some(*c)
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, u32)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .map(|(m, c)| (m, *c))
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, u32)> {
        let mut v: Vec<(Monomial, u32)> = self.terms.iter().map(|(m, c)| (m.clone(), *c)).collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), field.mul(*v, c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Rescales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn mul_term(&self, c: u32, mono: &Monomial) -> Polynomial {
        let field = self.ring.field();
        if c.is_multiple_of(field.characteristic()) {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.mul(mono), field.mul(*v, c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "polynomials over different rings: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    /// `f^e` by square-and-multiply over the base-p digits of `e`, using
    /// Frobenius for the p-power steps.
    pub fn pow(&self, e: u64) -> Result<Polynomial> {
        let p = self.ring.characteristic() as u64;
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            let digit = e % p;
            for _ in 0..digit {
                acc = &acc * &base;
            }
            e /= p;
            if e > 0 {
                base = base.frobenius_power(1)?;
            }
        }
        Ok(acc)
    }

    /// `f^(p^k)`, computed term-wise: coefficients are fixed by Frobenius
    /// and exponents are scaled by `p^k`.
    pub fn frobenius_power(&self, k: u32) -> Result<Polynomial> {
        let p = self.ring.characteristic() as u64;
        let q = p
            .checked_pow(k)
            .ok_or(Error::ExponentOverflow { power: u64::MAX })?;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.scaled(q)?, *c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if index >= n {
            return Err(Error::IndexOutOfRange { index, nvars: n });
        }
        let field = self.ring.field();
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            if e == 0 {
                return None;
            }
            let coeff = field.mul(*c, e % field.characteristic());
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            Some((Monomial::new(exps), coeff))
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Substitutes `images[i]` for variable `i`; the images live in `target`.
    pub fn substitute(&self, images: &[Polynomial], target: &PolyRing) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut cache: Vec<BTreeMap<u32, Polynomial>> = vec![BTreeMap::new(); images.len()];
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        let field = target.field();
        for (m, c) in &self.terms {
            let mut prod = target.constant(*c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = match cache[i].get(&e) {
                    Some(pw) => pw.clone(),
                    None => {
                        let pw = images[i].pow(e as u64)?;
                        cache[i].insert(e, pw.clone());
                        pw
                    }
                };
                prod = &prod * &power;
                if prod.is_zero() {
                    break;
                }
            }
            for (tm, tc) in prod.terms {
                let slot = acc.entry(tm).or_insert(0);
                *slot = field.add(*slot, tc);
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(Polynomial {
            ring: target.clone(),
            terms: acc,
        })
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// variable `index_map[i]`.
    pub fn remap(&self, target: &PolyRing, index_map: &[usize]) -> Polynomial {
        assert_eq!(index_map.len(), self.ring.nvars());
        assert!(self.ring.field() == target.field());
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; n];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[index_map[i]] += e;
            }
            (Monomial::new(exps), *c)
        });
        Polynomial::from_terms(target, terms)
    }

    /// Restricts to a subring; `None` if a variable outside `keep` occurs.
    pub fn restrict(&self, target: &PolyRing, keep: &[usize]) -> Option<Polynomial> {
        let used = self.variables_used();
        if used
            .iter()
            .enumerate()
            .any(|(i, &u)| u && !keep.contains(&i))
        {
            return None;
        }
        let terms = self.terms.iter().map(|(m, c)| {
            (
                Monomial::new(keep.iter().map(|&k| m.exponents()[k]).collect()),
                *c,
            )
        });
        Some(Polynomial::from_terms(target, terms))
    }

    pub fn variables_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let field = self.ring.field();
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v = field.add(*v, *c);
                    if *v == 0 {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), *c);
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), field.neg(*c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let field = self.ring.field();
        let mut terms: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let slot = terms.entry(ma.mul(mb)).or_insert(0);
                *slot = field.add(*slot, field.mul(*ca, *cb));
            }
        }
        terms.retain(|_, c| *c != 0);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let order = MonomialOrder::grevlex();
        let mut terms: Vec<(&Monomial, &u32)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0).then(Ordering::Equal));
        for (i, (m, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = &self.ring.vars()[v];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            match (factors.is_empty(), **c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => f.write_str(&factors.join("*"))?,
                (false, c) => write!(f, "{c}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
