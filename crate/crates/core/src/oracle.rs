//! Brute-force models of finite-dimensional algebras: a standard-monomial
//! basis with its multiplication table, and predicates decided by
//! enumerating elements.

use std::collections::HashMap;

use crate::algebra::{AlgebraMap, FPAlgebra};
use crate::error::{Error, Result};
use crate::groebner::standard_monomials;
use crate::homology::ModulePresentation;
use crate::polyring::linalg::Echelon;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, PrimeField};

/// Largest dimension [`enumerate_algebra`] accepts.
pub const ORACLE_DIM_CAP: usize = 16;

#[derive(Clone, Debug)]
pub struct FiniteAlgebraTable {
    algebra: FPAlgebra,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `table[i][j]` = coordinates of `basis[i] * basis[j]`.
    table: Vec<Vec<Vec<u32>>>,
}

pub fn enumerate_algebra(a: &FPAlgebra) -> Result<FiniteAlgebraTable> {
    let order = MonomialOrder::grevlex();
    let gb = a.relation_basis()?;
    let leads: Vec<Monomial> = gb
        .iter()
        .filter_map(|g| g.leading_term(&order).map(|(m, _)| m.clone()))
        .collect();
    let basis = match standard_monomials(a.nvars(), &leads, ORACLE_DIM_CAP)? {
        Some(b) => b,
        None => {
            let var = (0..a.nvars())
                .find(|&i| !leads.iter().any(|m| m.pure_power_of() == Some(i)))
                .map(|i| a.vars()[i].clone())
                .unwrap_or_default();
            return Err(Error::InfiniteDimensional { var });
        }
    };
    let index: HashMap<Monomial, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut t = FiniteAlgebraTable {
        algebra: a.clone(),
        basis,
        index,
        table: Vec::new(),
    };
    let n = t.basis.len();
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = a.ring().term(1, t.basis[i].mul(&t.basis[j]));
            let v = t.to_vector(&prod)?;
            table[j][i] = v.clone();
            table[i][j] = v;
        }
    }
    t.table = table;
    Ok(t)
}

impl FiniteAlgebraTable {
    pub fn algebra(&self) -> &FPAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `p^dim`.
    pub fn element_count(&self) -> u64 {
        (self.algebra.characteristic() as u64).pow(self.dim() as u32)
    }

    pub fn to_vector(&self, f: &Polynomial) -> Result<Vec<u32>> {
        if f.ring() != self.algebra.ring() {
            return Err(Error::mismatch(
                "oracle",
                format!("{f} is not an element of {}", self.algebra),
            ));
        }
        let nf = self.algebra.reduce(f)?;
        let mut v = vec![0; self.dim()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = c;
        }
        Ok(v)
    }

    pub fn to_polynomial(&self, v: &[u32]) -> Polynomial {
        Polynomial::from_terms(
            self.algebra.ring(),
            self.basis.iter().cloned().zip(v.iter().copied()),
        )
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        if let Some(i) = self.index.get(&Monomial::one(self.algebra.nvars())) {
            v[*i] = 1;
        }
        v
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field();
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    }

    pub fn scale(&self, c: u32, a: &[u32]) -> Vec<u32> {
        let f = self.field();
        a.iter().map(|&x| f.mul(c, x)).collect()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0; self.dim()];
        for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, &y)| y != 0) {
                let c = f.mul(x, y);
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The element with base-`p` digits `index`.
    pub fn element(&self, mut index: u64) -> Vec<u32> {
        let p = self.algebra.characteristic() as u64;
        (0..self.dim())
            .map(|_| {
                let d = (index % p) as u32;
                index /= p;
                d
            })
            .collect()
    }

    pub fn index_of(&self, v: &[u32]) -> u64 {
        let p = self.algebra.characteristic() as u64;
        v.iter().rev().fold(0, |acc, &d| acc * p + d as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.element_count()).map(move |i| self.element(i))
    }
}

/// A subset of a finite algebra closed under addition, kept as a membership
/// bitmap and a list.
struct AdditiveClosure<'a> {
    table: &'a FiniteAlgebraTable,
    member: Vec<bool>,
    elements: Vec<Vec<u32>>,
}

impl<'a> AdditiveClosure<'a> {
    fn new(table: &'a FiniteAlgebraTable) -> Self {
        let mut member = vec![false; table.element_count() as usize];
        member[0] = true;
        Self {
            table,
            member,
            elements: vec![vec![0; table.dim()]],
        }
    }

    fn contains(&self, v: &[u32]) -> bool {
        self.member[self.table.index_of(v) as usize]
    }

    /// Adds every `c + k v`; returns false if `v` was already present.
    fn insert(&mut self, v: &[u32]) -> bool {
        if self.contains(v) {
            return false;
        }
        let p = self.table.algebra.characteristic();
        let current = self.elements.len();
        for k in 1..p {
            let kv = self.table.scale(k, v);
            for c in 0..current {
                let e = self.table.add(&self.elements[c], &kv);
                self.member[self.table.index_of(&e) as usize] = true;
                self.elements.push(e);
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubringClosure {
    /// Number of elements of `S^p[R]`.
    pub size: u64,
    /// Number of elements of `S`.
    pub total: u64,
}

impl SubringClosure {
    pub fn is_everything(&self) -> bool {
        self.size == self.total
    }
}

/// `S^p[R]` by exhaustion: every `p`-th power and every image of a variable
/// of `R`, closed under sums and products.
pub fn subring_closure(f: &AlgebraMap) -> Result<SubringClosure> {
    let t = enumerate_algebra(f.codomain())?;
    let p = t.algebra.characteristic() as u64;
    let mut gens: Vec<Vec<u32>> = vec![t.one()];
    for img in f.images() {
        gens.push(t.to_vector(img)?);
    }
    gens.extend(t.elements().map(|s| t.pow(&s, p)));

    // Keep only the generators needed to span their sums.
    let mut span = AdditiveClosure::new(&t);
    let mut spanning = Vec::new();
    for g in gens {
        if span.insert(&g) {
            spanning.push(g);
        }
    }
    let mut closure = span;
    let mut added = spanning.clone();
    let mut i = 0;
    while i < added.len() {
        for g in &spanning {
            let prod = t.mul(&added[i], g);
            if closure.insert(&prod) {
                added.push(prod);
            }
        }
        i += 1;
    }
    Ok(SubringClosure {
        size: closure.elements.len() as u64,
        total: t.element_count(),
    })
}

/// Whether `S^p[R] = S` for an Artinian `S`.
pub fn oracle_subring_closure(f: &AlgebraMap) -> Result<bool> {
    Ok(subring_closure(f)?.is_everything())
}

/// Evaluates `ψ` on every element and counts distinct images.
pub fn oracle_map_bijective(psi: &AlgebraMap) -> Result<bool> {
    let src = enumerate_algebra(psi.domain())?;
    let dst = enumerate_algebra(psi.codomain())?;
    if src.element_count() != dst.element_count() {
        return Ok(false);
    }
    let columns = src
        .basis()
        .iter()
        .map(|m| dst.to_vector(&psi.apply(&src.algebra.ring().term(1, m.clone()))?))
        .collect::<Result<Vec<_>>>()?;
    let mut hit = vec![false; dst.element_count() as usize];
    let mut distinct = 0u64;
    for a in src.elements() {
        let mut image = vec![0; dst.dim()];
        for (c, col) in a.iter().zip(&columns) {
            if *c != 0 {
                image = dst.add(&image, &dst.scale(*c, col));
            }
        }
        let k = dst.index_of(&image) as usize;
        if !hit[k] {
            hit[k] = true;
            distinct += 1;
        }
    }
    Ok(distinct == dst.element_count())
}

/// `F_p`-span of the ideal generated by `gens` inside the table's algebra.
fn ideal_span(t: &FiniteAlgebraTable, gens: &[Polynomial]) -> Result<Echelon> {
    let mut span = Echelon::new(t.field());
    for g in gens {
        let gv = t.to_vector(g)?;
        for i in 0..t.dim() {
            let mut e = vec![0; t.dim()];
            e[i] = 1;
            span.insert(t.mul(&e, &gv));
        }
    }
    Ok(span)
}

/// `f ∈ (gens)` in the Artinian algebra, by linear algebra on the span of
/// `basis monomial × generator`.
pub fn oracle_ideal_membership(
    t: &FiniteAlgebraTable,
    gens: &[Polynomial],
    f: &Polynomial,
) -> Result<bool> {
    Ok(ideal_span(t, gens)?.contains(&t.to_vector(f)?))
}

/// `dim_F_p A/(gens)`.
pub fn oracle_quotient_dimension(t: &FiniteAlgebraTable, gens: &[Polynomial]) -> Result<usize> {
    Ok(t.dim() - ideal_span(t, gens)?.rank())
}

/// `dim_F_p M ⊗_A N`, spanning the relations `rel(M) ⊗ e_j` and
/// `e_i ⊗ rel(N)` over the basis of `A`.
pub fn oracle_tensor_dimension(m: &ModulePresentation, n: &ModulePresentation) -> Result<usize> {
    let t = enumerate_algebra(m.algebra())?;
    let (a, b, d) = (m.rank(), n.rank(), t.dim());
    let mut span = Echelon::new(t.field());
    let mut push = |slots: Vec<(usize, Vec<u32>)>| {
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            let mut v = vec![0; a * b * d];
            for (slot, comp) in &slots {
                let prod = t.mul(&e, comp);
                v[slot * d..(slot + 1) * d].copy_from_slice(&prod);
            }
            span.insert(v);
        }
    };
    for rel in m.relations() {
        let comps = rel
            .components()
            .iter()
            .map(|c| t.to_vector(c))
            .collect::<Result<Vec<_>>>()?;
        for j in 0..b {
            push(
                comps
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (i * b + j, c.clone()))
                    .collect(),
            );
        }
    }
    for rel in n.relations() {
        let comps = rel
            .components()
            .iter()
            .map(|c| t.to_vector(c))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..a {
            push(
                comps
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (i * b + j, c.clone()))
                    .collect(),
            );
        }
    }
    Ok(a * b * d - span.rank())
}
