//! Finitely presented modules over finitely presented algebras: syzygies,
//! truncated free resolutions, Tor, and the Frobenius pushforward `F_*A`.
//!
//! A module over `A = P/J` is presented as `A^rank / (relations)`. Module
//! computations are done over `P` with `J·P^rank` adjoined.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{AlgebraMap, FPAlgebra};
use crate::error::{Error, Result};
use crate::groebner::{
    minors_ideal, standard_monomials, Ideal, ModuleElement, ModuleOrder, SubmoduleBasis,
};
use crate::polyring::linalg;
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// Largest F_p-dimension extracted from a module.
pub const DIMENSION_CAP: usize = 4096;

/// Largest number of generators for [`frobenius_pushforward`].
pub const PUSHFORWARD_CAP: usize = 256;

/// Syzygy sets up to this size are pruned of redundant generators.
const MINIMIZE_LIMIT: usize = 24;

/// `A^rank / (relations)`.
#[derive(Clone)]
pub struct ModulePresentation {
    algebra: FPAlgebra,
    rank: usize,
    relations: Vec<ModuleElement>,
}

fn reduce_element(a: &FPAlgebra, e: &ModuleElement) -> Result<ModuleElement> {
    Ok(ModuleElement::new(
        e.components()
            .iter()
            .map(|c| a.reduce(c))
            .collect::<Result<Vec<_>>>()?,
    ))
}

/// `J·e_q` for every generator of `J` and `q < rank`.
fn ideal_multiples(a: &FPAlgebra, rank: usize) -> Vec<ModuleElement> {
    let ring = a.ring();
    let mut out = Vec::new();
    for q in 0..rank {
        for g in a.relations().generators() {
            out.push(ModuleElement::unit(ring, rank, q).scale(g));
        }
    }
    out
}

impl ModulePresentation {
    /// Relations are put in normal form modulo the algebra's relations;
    /// zero and repeated ones are dropped.
    pub fn new(algebra: &FPAlgebra, rank: usize, relations: Vec<ModuleElement>) -> Result<Self> {
        let mut kept: Vec<ModuleElement> = Vec::new();
        for r in relations {
            if r.rank() != rank {
                return Err(Error::mismatch(
                    "homology",
                    format!("relation {r} has {} components, expected {rank}", r.rank()),
                ));
            }
            if r.components().iter().any(|c| c.ring() != algebra.ring()) {
                return Err(Error::mismatch(
                    "homology",
                    format!("relation {r} is not over {algebra}"),
                ));
            }
            let r = reduce_element(algebra, &r)?;
            if !r.is_zero() && !kept.contains(&r) {
                kept.push(r);
            }
        }
        Ok(Self {
            algebra: algebra.clone(),
            rank,
            relations: kept,
        })
    }

    pub fn free(algebra: &FPAlgebra, rank: usize) -> Self {
        Self {
            algebra: algebra.clone(),
            rank,
            relations: Vec::new(),
        }
    }

    /// `A / I` for an ideal given by generators.
    pub fn cyclic(algebra: &FPAlgebra, ideal: &[Polynomial]) -> Result<Self> {
        Self::new(
            algebra,
            1,
            ideal
                .iter()
                .map(|g| ModuleElement::new(vec![g.clone()]))
                .collect(),
        )
    }

    pub fn algebra(&self) -> &FPAlgebra {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[ModuleElement] {
        &self.relations
    }

    /// Presentation matrix with one column per relation.
    pub fn relation_matrix(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rank)
            .map(|q| {
                self.relations
                    .iter()
                    .map(|r| r.components()[q].clone())
                    .collect()
            })
            .collect()
    }

    /// Gröbner basis of `relations + J·P^rank` in `P^rank`.
    pub fn basis(&self) -> Result<SubmoduleBasis> {
        let mut gens = self.relations.clone();
        gens.extend(ideal_multiples(&self.algebra, self.rank));
        SubmoduleBasis::compute(
            self.algebra.ring(),
            self.rank,
            &gens,
            ModuleOrder::new(0, MonomialOrder::grevlex()),
        )
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.rank == 0 || self.basis()?.is_everything())
    }

    /// Standard terms `(generator, monomial)` forming an F_p-basis, or
    /// `None` if the module is infinite-dimensional.
    pub fn vector_basis(&self) -> Result<Option<Vec<(usize, Monomial)>>> {
        if self.rank == 0 {
            return Ok(Some(Vec::new()));
        }
        self.basis()?.standard_terms(DIMENSION_CAP)
    }

    pub fn vector_dimension(&self) -> Result<Option<usize>> {
        Ok(self.vector_basis()?.map(|b| b.len()))
    }

    /// Fitting ideal `Fitt_j`: the `(rank - j)`-minors of the presentation
    /// matrix, plus the algebra's relations.
    pub fn fitting_ideal(&self, j: usize) -> Result<Ideal> {
        let ring = self.algebra.ring();
        if j >= self.rank {
            return Ok(Ideal::unit(ring));
        }
        let minors = minors_ideal(ring, &self.relation_matrix(), self.rank - j)?;
        Ok(minors.sum(self.algebra.relations()))
    }

    /// Removes generators that some relation expresses through the others
    /// with a unit constant coefficient. The result is isomorphic.
    pub fn prune(&self) -> Result<ModulePresentation> {
        let mut rank = self.rank;
        let mut rels = self.relations.clone();
        let field = self.algebra.field();
        loop {
            let found = rels.iter().enumerate().find_map(|(k, r)| {
                r.components()
                    .iter()
                    .position(|c| c.constant_value().is_some_and(|v| v != 0))
                    .map(|q| (k, q))
            });
            let Some((k, q)) = found else { break };
            let pivot = rels.swap_remove(k);
            let inv = field.inv(pivot.components()[q].constant_value().unwrap());
            let mut next = Vec::with_capacity(rels.len());
            for r in &rels {
                let c = r.components()[q].scale(inv);
                let mut comps: Vec<Polynomial> = r.components().to_vec();
                for (x, pv) in comps.iter_mut().zip(pivot.components()) {
                    *x = &*x - &(&c * pv);
                }
                comps.remove(q);
                next.push(ModuleElement::new(comps));
            }
            rank -= 1;
            let reduced = ModulePresentation::new(&self.algebra, rank, next)?;
            rels = reduced.relations;
        }
        ModulePresentation::new(&self.algebra, rank, rels)
    }

    pub fn contains(&self, e: &ModuleElement) -> Result<bool> {
        Ok(self.basis()?.contains(e))
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        write!(
            f,
            "A^{} / <{}> over {}",
            self.rank,
            rels.join(", "),
            self.algebra
        )
    }
}

impl fmt::Debug for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generators of the kernel of `A^t → A^rank`, `e_i ↦ gens[i]`.
///
/// Computed in `P^{rank + t}` from `(gens[i] | e_i)` and `(J·e_q | 0)`
/// under an order that eliminates the first `rank` positions.
pub fn syzygy_module(
    algebra: &FPAlgebra,
    rank: usize,
    gens: &[ModuleElement],
) -> Result<Vec<ModuleElement>> {
    let ring = algebra.ring();
    let t = gens.len();
    if t == 0 {
        return Ok(Vec::new());
    }
    if rank == 0 {
        return Ok((0..t).map(|i| ModuleElement::unit(ring, t, i)).collect());
    }
    let total = rank + t;
    let mut lifted = Vec::with_capacity(t);
    for (i, g) in gens.iter().enumerate() {
        if g.rank() != rank {
            return Err(Error::mismatch(
                "homology",
                format!("{g} does not have {rank} components"),
            ));
        }
        lifted.push(
            g.placed(ring, total, 0)
                .add(&ModuleElement::unit(ring, total, rank + i)),
        );
    }
    for m in ideal_multiples(algebra, rank) {
        lifted.push(m.placed(ring, total, 0));
    }
    let gb = SubmoduleBasis::compute(
        ring,
        total,
        &lifted,
        ModuleOrder::new(rank, MonomialOrder::grevlex()),
    )?;
    let mut syz: Vec<ModuleElement> = Vec::new();
    for (e, (pos, _)) in gb.elements().into_iter().zip(gb.leading_terms()) {
        if pos < rank {
            continue;
        }
        let s = reduce_element(algebra, &e.slice(rank..total))?;
        if !s.is_zero() && !syz.contains(&s) {
            syz.push(s);
        }
    }
    minimize(algebra, t, syz)
}

/// Drops generators lying in the span of the others.
fn minimize(
    algebra: &FPAlgebra,
    rank: usize,
    mut gens: Vec<ModuleElement>,
) -> Result<Vec<ModuleElement>> {
    if gens.len() > MINIMIZE_LIMIT || gens.len() < 2 {
        return Ok(gens);
    }
    let order = ModuleOrder::new(0, MonomialOrder::grevlex());
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        let mut others: Vec<ModuleElement> = gens
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        others.extend(ideal_multiples(algebra, rank));
        if SubmoduleBasis::compute(algebra.ring(), rank, &others, order.clone())?.contains(&gens[i])
        {
            gens.remove(i);
        }
    }
    Ok(gens)
}

/// A chain complex of free modules `A^{r_L} → … → A^{r_0}`.
#[derive(Clone, Debug)]
pub struct Complex {
    pub algebra: FPAlgebra,
    pub ranks: Vec<usize>,
    /// `differentials[i - 1]` lists the columns of `d_i: A^{r_i} → A^{r_{i-1}}`.
    pub differentials: Vec<Vec<ModuleElement>>,
}

fn apply_columns(
    ring: &PolyRing,
    cols: &[ModuleElement],
    target_rank: usize,
    v: &ModuleElement,
) -> ModuleElement {
    let mut acc = ModuleElement::zero(ring, target_rank);
    for (c, x) in cols.iter().zip(v.components()) {
        if !x.is_zero() {
            acc = acc.add(&c.scale(x));
        }
    }
    acc
}

impl Complex {
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// `d_i ∘ d_{i+1} = 0` modulo the algebra's relations.
    pub fn is_complex(&self) -> Result<bool> {
        let ring = self.algebra.ring();
        for i in 1..self.differentials.len() {
            for col in &self.differentials[i] {
                let image = apply_columns(ring, &self.differentials[i - 1], self.ranks[i - 1], col);
                if !reduce_element(&self.algebra, &image)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Free resolution of `M` of length `length`, by iterated syzygies.
pub fn free_resolution(m: &ModulePresentation, length: usize) -> Result<Complex> {
    if length == 0 {
        return Err(Error::precondition(
            "homology",
            "resolution length must be at least 1",
        ));
    }
    let a = m.algebra();
    let mut ranks = vec![m.rank, m.relations.len()];
    let mut differentials = vec![m.relations.clone()];
    while differentials.len() < length {
        let prev = differentials.last().unwrap();
        let next = syzygy_module(a, ranks[ranks.len() - 2], prev)?;
        ranks.push(next.len());
        differentials.push(next);
    }
    Ok(Complex {
        algebra: a.clone(),
        ranks,
        differentials,
    })
}

/// How a Tor group was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorMethod {
    /// F_p-linear algebra on the tensored complex with a finite-dimensional
    /// second argument.
    LinearAlgebra,
    /// As above, after swapping the arguments.
    LinearAlgebraSwapped,
    /// Homology presented as a module; the dimension is read off when finite.
    Symbolic,
}

impl TorMethod {
    pub fn name(self) -> &'static str {
        match self {
            TorMethod::LinearAlgebra => "linear-algebra",
            TorMethod::LinearAlgebraSwapped => "linear-algebra-swapped",
            TorMethod::Symbolic => "symbolic",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TorGroup {
    pub index: usize,
    /// F_p-dimension, when finite and computable.
    pub dimension: Option<usize>,
    /// Whether the group is known to vanish.
    pub vanishes: bool,
    /// Presentation of the homology module, for the symbolic method.
    pub presentation: Option<ModulePresentation>,
    pub method: TorMethod,
}

/// Coordinates of module elements against the standard-term basis of `N`.
struct FiniteModule {
    basis: SubmoduleBasis,
    terms: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
    ring: PolyRing,
    rank: usize,
}

impl FiniteModule {
    fn new(n: &ModulePresentation) -> Result<Option<Self>> {
        let basis = n.basis()?;
        let Some(terms) = basis.standard_terms(DIMENSION_CAP)? else {
            return Ok(None);
        };
        let index = terms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        Ok(Some(Self {
            basis,
            terms,
            index,
            ring: n.algebra.ring().clone(),
            rank: n.rank,
        }))
    }

    fn dim(&self) -> usize {
        self.terms.len()
    }

    /// Coordinates of `a · (mono e_q)`.
    fn act(&self, a: &Polynomial, q: usize, mono: &Monomial) -> Vec<u32> {
        let e = ModuleElement::unit(&self.ring, self.rank, q).scale(&a.mul_term(1, mono));
        let nf = self.basis.normal_form(&e);
        let mut out = vec![0u32; self.dim()];
        for (pos, c) in nf.components().iter().enumerate() {
            for (m, coeff) in c.terms() {
                out[self.index[&(pos, m.clone())]] = coeff;
            }
        }
        out
    }

    /// Rank of `d ⊗ N: N^{cols} → N^{rows}` for `d` given by columns.
    fn tensored_rank(
        &self,
        field: crate::polyring::PrimeField,
        cols: &[ModuleElement],
        rows: usize,
    ) -> usize {
        let n = self.dim();
        let mut matrix_cols = Vec::with_capacity(cols.len() * n);
        for col in cols {
            for (q, mono) in &self.terms {
                let mut v = vec![0u32; rows * n];
                for (k, a) in col.components().iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (i, x) in self.act(a, *q, mono).into_iter().enumerate() {
                        v[k * n + i] = x;
                    }
                }
                matrix_cols.push(v);
            }
        }
        linalg::rank(field, matrix_cols)
    }
}

fn tor_linear(
    m: &ModulePresentation,
    fin: &FiniteModule,
    i_max: usize,
    method: TorMethod,
) -> Result<Vec<TorGroup>> {
    let field = m.algebra.field();
    let res = free_resolution(m, i_max + 1)?;
    let n = fin.dim();
    let ranks: Vec<usize> = (1..=i_max + 1)
        .map(|i| fin.tensored_rank(field, &res.differentials[i - 1], res.ranks[i - 1]))
        .collect();
    Ok((0..=i_max)
        .map(|i| {
            let incoming = ranks[i];
            let outgoing = if i == 0 { 0 } else { ranks[i - 1] };
            let dim = res.ranks[i] * n - incoming - outgoing;
            TorGroup {
                index: i,
                dimension: Some(dim),
                vanishes: dim == 0,
                presentation: None,
                method,
            }
        })
        .collect())
}

/// Columns of `d ⊗ id_{A^s}` acting on `A^{cols·s} → A^{rows·s}`.
fn kron_columns(
    ring: &PolyRing,
    cols: &[ModuleElement],
    rows: usize,
    s: usize,
) -> Vec<ModuleElement> {
    let mut out = Vec::with_capacity(cols.len() * s);
    for col in cols {
        for q in 0..s {
            let mut comps = vec![ring.zero(); rows * s];
            for (k, a) in col.components().iter().enumerate() {
                comps[k * s + q] = a.clone();
            }
            out.push(ModuleElement::new(comps));
        }
    }
    out
}

/// `N`'s relations repeated in each of `copies` blocks.
fn block_relations(ring: &PolyRing, n: &ModulePresentation, copies: usize) -> Vec<ModuleElement> {
    let s = n.rank;
    let mut out = Vec::new();
    for j in 0..copies {
        for r in &n.relations {
            out.push(r.placed(ring, copies * s, j * s));
        }
    }
    out
}

fn tor_symbolic(
    m: &ModulePresentation,
    n: &ModulePresentation,
    i_max: usize,
) -> Result<Vec<TorGroup>> {
    let a = &m.algebra;
    let ring = a.ring();
    let s = n.rank;
    let res = free_resolution(m, i_max + 1)?;
    let mut out = Vec::new();
    for i in 0..=i_max {
        let here = res.ranks[i] * s;
        // Cycles: x in A^{r_i s} with (d_i ⊗ id)(x) in N's relations.
        let cycles: Vec<ModuleElement> = if i == 0 {
            (0..here)
                .map(|k| ModuleElement::unit(ring, here, k))
                .collect()
        } else {
            let below = res.ranks[i - 1] * s;
            let mut gens = kron_columns(ring, &res.differentials[i - 1], res.ranks[i - 1], s);
            gens.extend(block_relations(ring, n, res.ranks[i - 1]));
            syzygy_module(a, below, &gens)?
                .into_iter()
                .map(|z| z.slice(0..here))
                .filter(|z| !z.is_zero())
                .collect()
        };
        let mcyc = cycles.len();
        let mut gens = cycles;
        gens.extend(kron_columns(ring, &res.differentials[i], res.ranks[i], s));
        gens.extend(block_relations(ring, n, res.ranks[i]));
        let rels: Vec<ModuleElement> = if mcyc == 0 {
            Vec::new()
        } else {
            syzygy_module(a, here, &gens)?
                .into_iter()
                .map(|z| z.slice(0..mcyc))
                .collect()
        };
        let h = ModulePresentation::new(a, mcyc, rels)?.prune()?;
        let dimension = h.vector_dimension()?;
        let vanishes = h.is_zero()?;
        out.push(TorGroup {
            index: i,
            dimension: if vanishes { Some(0) } else { dimension },
            vanishes,
            presentation: Some(h),
            method: TorMethod::Symbolic,
        });
    }
    Ok(out)
}

/// `Tor_i^A(M, N)` for `i ≤ i_max`.
///
/// Uses F_p-linear algebra when either argument is finite-dimensional and
/// symbolic homology presentations otherwise.
pub fn tor(m: &ModulePresentation, n: &ModulePresentation, i_max: usize) -> Result<Vec<TorGroup>> {
    if m.algebra.ring() != n.algebra.ring() {
        return Err(Error::mismatch(
            "homology",
            "Tor arguments over different algebras",
        ));
    }
    if let Some(fin) = FiniteModule::new(n)? {
        return tor_linear(m, &fin, i_max, TorMethod::LinearAlgebra);
    }
    if let Some(fin) = FiniteModule::new(m)? {
        return tor_linear(n, &fin, i_max, TorMethod::LinearAlgebraSwapped);
    }
    tor_symbolic(m, n, i_max)
}

/// `M ⊗_A N` on generators `e_j ⊗ f_q`.
pub fn tensor_product(
    m: &ModulePresentation,
    n: &ModulePresentation,
) -> Result<ModulePresentation> {
    let ring = m.algebra.ring();
    let (r, s) = (m.rank, n.rank);
    let mut rels = kron_columns(ring, &m.relations, r, s);
    rels.extend(block_relations(ring, n, r));
    ModulePresentation::new(&m.algebra, r * s, rels)
}

/// Exponent vectors with entries below `p`, in lexicographic order.
fn digit_box(nvars: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|v| (0..p).map(move |d| [v.clone(), vec![d]].concat()))
            .collect();
    }
    out
}

/// `F_*A` as an `A`-module with `a ⋆ m = a^p m`: generators are the
/// monomials with exponents below `p`, and each relation `g·x^b` of `A` is
/// rewritten as `Σ h_c^p x^c`.
pub fn frobenius_pushforward(a: &FPAlgebra) -> Result<ModulePresentation> {
    let ring = a.ring();
    let p = a.characteristic();
    let n = ring.nvars();
    let count = (p as usize).checked_pow(n as u32).unwrap_or(usize::MAX);
    if count > PUSHFORWARD_CAP {
        return Err(Error::TooLarge {
            dim: count,
            cap: PUSHFORWARD_CAP,
        });
    }
    let digits = digit_box(n, p);
    let index: HashMap<Vec<u32>, usize> = digits
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, d)| (d, i))
        .collect();
    let mut rels = Vec::new();
    for g in a.relations().generators() {
        for b in &digits {
            let shifted = g.mul_term(1, &Monomial::new(b.clone()));
            let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); count];
            for (mono, c) in shifted.terms() {
                let e = mono.exponents();
                let rem: Vec<u32> = e.iter().map(|x| x % p).collect();
                let quo: Vec<u32> = e.iter().map(|x| x / p).collect();
                buckets[index[&rem]].push((Monomial::new(quo), c));
            }
            rels.push(ModuleElement::new(
                buckets
                    .into_iter()
                    .map(|t| Polynomial::from_terms(ring, t))
                    .collect(),
            ));
        }
    }
    ModulePresentation::new(a, count, rels)
}

/// `S` as a module over `R` along `f: R → S`.
///
/// Generators are the `S`-monomials outside the pure-`S` leading terms of
/// the graph ideal under an order eliminating `S`; this needs every `S`
/// variable to be integral over `R` in the strong sense that some leading
/// term is a pure power of it.
pub fn algebra_as_module(f: &AlgebraMap) -> Result<ModulePresentation> {
    let (r, s) = (f.domain(), f.codomain());
    let m = s.nvars();
    let (ring, rmap) = s.ring().disjoint_union(r.ring());
    let svars: Vec<usize> = (0..m).collect();
    let mut gens: Vec<Polynomial> = s
        .relations()
        .generators()
        .iter()
        .map(|g| g.remap(&ring, &svars))
        .collect();
    for (j, img) in f.images().iter().enumerate() {
        gens.push(&ring.var(rmap[j]) - &img.remap(&ring, &svars));
    }
    gens.extend(
        r.relations()
            .generators()
            .iter()
            .map(|g| g.remap(&ring, &rmap)),
    );
    let order = MonomialOrder::block(m);
    let graph = Ideal::new(&ring, gens);
    let gb = graph.reduced_groebner(&order)?;
    let pure: Vec<Monomial> = graph
        .leading_monomials(&order)?
        .into_iter()
        .filter(|lm| rmap.iter().all(|&i| lm.exponents()[i] == 0))
        .map(|lm| Monomial::new(lm.exponents()[..m].to_vec()))
        .collect();
    let Some(standard) = standard_monomials(m, &pure, DIMENSION_CAP)? else {
        let var = (0..m)
            .find(|&i| !pure.iter().any(|lm| lm.pure_power_of() == Some(i)))
            .map(|i| s.vars()[i].clone())
            .unwrap_or_default();
        return Err(Error::NotModuleFinite { var });
    };
    let g = standard.len();
    let total = 1 + g;
    let mut lifted = Vec::with_capacity(g + gb.len());
    for (i, mono) in standard.iter().enumerate() {
        let mut exps = vec![0u32; ring.nvars()];
        exps[..m].copy_from_slice(mono.exponents());
        let mut comps = vec![ring.zero(); total];
        comps[0] = ring.term(1, Monomial::new(exps));
        comps[1 + i] = ring.one();
        lifted.push(ModuleElement::new(comps));
    }
    for h in &gb {
        let mut comps = vec![ring.zero(); total];
        comps[0] = h.clone();
        lifted.push(ModuleElement::new(comps));
    }
    let mgb = SubmoduleBasis::compute(&ring, total, &lifted, ModuleOrder::new(1, order))?;
    let sub = ring.subring(&rmap);
    let identity: Vec<usize> = (0..r.nvars()).collect();
    let mut rels = Vec::new();
    for (e, (pos, lead)) in mgb.elements().into_iter().zip(mgb.leading_terms()) {
        if pos == 0 || lead.exponents()[..m].iter().any(|&x| x > 0) {
            continue;
        }
        let comps: Option<Vec<Polynomial>> = e.components()[1..]
            .iter()
            .map(|c| {
                c.restrict(&sub, &rmap)
                    .map(|c| c.remap(r.ring(), &identity))
            })
            .collect();
        rels.push(ModuleElement::new(
            comps.expect("eliminated element has no S variables"),
        ));
    }
    ModulePresentation::new(r, g, rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(p: u64, vars: &[&str], rels: &[&str]) -> FPAlgebra {
        let r = PolyRing::with_vars(p, vars);
        FPAlgebra::new(&r, r.polys(rels))
    }

    fn elt(a: &FPAlgebra, comps: &[&str]) -> ModuleElement {
        ModuleElement::new(a.ring().polys(comps))
    }

    fn dims(groups: &[TorGroup]) -> Vec<Option<usize>> {
        groups.iter().map(|g| g.dimension).collect()
    }

    #[test]
    fn syzygy_examples() {
        let a = alg(2, &["x", "y"], &[]);
        let syz = syzygy_module(&a, 1, &[elt(&a, &["x"]), elt(&a, &["y"])]).unwrap();
        assert_eq!(syz, vec![elt(&a, &["y", "x"])]);

        let b = alg(2, &["x"], &[]);
        assert!(syzygy_module(&b, 1, &[elt(&b, &["x"])]).unwrap().is_empty());
        assert_eq!(
            syzygy_module(&b, 1, &[elt(&b, &["x"]), elt(&b, &["x"])]).unwrap(),
            vec![elt(&b, &["1", "1"])]
        );
    }

    #[test]
    fn resolution_examples() {
        let a = alg(2, &["x"], &[]);
        let free = ModulePresentation::free(&a, 2);
        let res = free_resolution(&free, 3).unwrap();
        assert_eq!(res.ranks, vec![2, 0, 0, 0]);

        let k = ModulePresentation::cyclic(&a, &a.ring().polys(&["x"])).unwrap();
        let res = free_resolution(&k, 3).unwrap();
        assert_eq!(res.ranks, vec![1, 1, 0, 0]);

        let dual = alg(2, &["x"], &["x^2"]);
        let k = ModulePresentation::cyclic(&dual, &dual.ring().polys(&["x"])).unwrap();
        let res = free_resolution(&k, 4).unwrap();
        assert_eq!(res.ranks, vec![1, 1, 1, 1, 1]);
        assert!(res
            .differentials
            .iter()
            .all(|d| d == &vec![elt(&dual, &["x"])]));
        assert!(res.is_complex().unwrap());
    }

    #[test]
    fn tor_examples() {
        let a = alg(2, &["x"], &[]);
        let k = ModulePresentation::cyclic(&a, &a.ring().polys(&["x"])).unwrap();
        assert_eq!(
            dims(&tor(&k, &k, 2).unwrap()),
            vec![Some(1), Some(1), Some(0)]
        );

        let dual = alg(2, &["x"], &["x^2"]);
        let k = ModulePresentation::cyclic(&dual, &dual.ring().polys(&["x"])).unwrap();
        assert_eq!(
            dims(&tor(&k, &k, 3).unwrap()),
            vec![Some(1), Some(1), Some(1), Some(1)]
        );

        let free = ModulePresentation::free(&dual, 1);
        assert_eq!(
            dims(&tor(&free, &k, 2).unwrap()),
            vec![Some(1), Some(0), Some(0)]
        );
    }

    #[test]
    fn symbolic_tor_over_polynomial_rings() {
        let a = alg(2, &["x", "y"], &[]);
        let m = ModulePresentation::cyclic(&a, &a.ring().polys(&["x"])).unwrap();
        let n = ModulePresentation::cyclic(&a, &a.ring().polys(&["y"])).unwrap();
        let groups = tor(&m, &n, 2).unwrap();
        assert!(groups.iter().all(|g| g.method == TorMethod::Symbolic));
        // Tor_0 = F_2[x,y]/(x,y) and higher Tor vanish: x, y form a regular sequence.
        assert_eq!(dims(&groups), vec![Some(1), Some(0), Some(0)]);

        let m = ModulePresentation::cyclic(&a, &a.ring().polys(&["x"])).unwrap();
        let groups = tor(&m, &m, 1).unwrap();
        assert_eq!(groups[0].dimension, None);
        assert!(!groups[1].vanishes);
    }

    #[test]
    fn pushforward_examples() {
        let a = alg(3, &["x"], &[]);
        let f = frobenius_pushforward(&a).unwrap();
        assert_eq!((f.rank(), f.relations().len()), (3, 0));

        let dual = alg(2, &["x"], &["x^2"]);
        let f = frobenius_pushforward(&dual).unwrap();
        assert_eq!(f.rank(), 2);
        assert_eq!(
            f.relations(),
            &[elt(&dual, &["x", "0"]), elt(&dual, &["0", "x"])]
        );
        assert_eq!(f.vector_dimension().unwrap(), Some(2));

        let idem = alg(2, &["e"], &["e^2 + e"]);
        let f = frobenius_pushforward(&idem).unwrap().prune().unwrap();
        assert_eq!((f.rank(), f.relations().len()), (1, 0));
    }

    #[test]
    fn algebra_as_module_examples() {
        let r = alg(2, &["x"], &[]);
        let s = alg(2, &["x", "y"], &["y^2 + y + x"]);
        let f = AlgebraMap::new(&r, &s, s.ring().polys(&["x", "y"][..1])).unwrap();
        let m = algebra_as_module(&f).unwrap();
        assert_eq!((m.rank(), m.relations().len()), (2, 0));

        let t = alg(2, &["t"], &[]);
        let x = alg(2, &["x"], &[]);
        let sq = AlgebraMap::new(&t, &x, x.ring().polys(&["x^2"])).unwrap();
        let m = algebra_as_module(&sq).unwrap();
        assert_eq!((m.rank(), m.relations().len()), (2, 0));

        let q = AlgebraMap::new(&r, &alg(2, &["x"], &["x^2"]), r.ring().polys(&["x"])).unwrap();
        let m = algebra_as_module(&q).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.vector_dimension().unwrap(), Some(2));

        let fp = AlgebraMap::from_prime_field(&x);
        assert!(matches!(
            algebra_as_module(&fp),
            Err(Error::NotModuleFinite { .. })
        ));
    }

    #[test]
    fn tensor_and_fitting() {
        let a = alg(3, &["x", "y"], &[]);
        let m = ModulePresentation::cyclic(&a, &a.ring().polys(&["x", "y^2"])).unwrap();
        let n = ModulePresentation::cyclic(&a, &a.ring().polys(&["x^2", "y"])).unwrap();
        assert_eq!(
            tensor_product(&m, &n).unwrap().vector_dimension().unwrap(),
            Some(1)
        );
        let fitt = m.fitting_ideal(0).unwrap();
        assert!(fitt
            .equals(&Ideal::new(a.ring(), a.ring().polys(&["x", "y^2"])))
            .unwrap());
        assert!(m.fitting_ideal(1).unwrap().is_unit().unwrap());
    }
}
