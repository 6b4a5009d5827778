//! Finitely presented F_p-algebras `F_p[vars]/I` and the maps between them.
//!
//! All computation happens in ambient polynomial rings: a quotient is its
//! ambient ring plus a relation ideal, and kernels and images of maps are
//! read off graph ideals under block elimination orders.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{MonomialOrder, PolyRing, Polynomial, PrimeField};

/// `F_p[vars] / relations`.
#[derive(Clone)]
pub struct FPAlgebra {
    ring: PolyRing,
    relations: Ideal,
    zero_ring: Arc<OnceLock<bool>>,
}

impl FPAlgebra {
    pub fn new(ring: &PolyRing, relations: Vec<Polynomial>) -> Self {
        Self::from_ideal(Ideal::new(ring, relations))
    }

    pub fn from_ideal(relations: Ideal) -> Self {
        Self {
            ring: relations.ring().clone(),
            relations,
            zero_ring: Arc::default(),
        }
    }

    pub fn polynomial(ring: &PolyRing) -> Self {
        Self::new(ring, Vec::new())
    }

    /// The prime field itself, presented on no variables.
    pub fn prime_field(field: PrimeField) -> Self {
        Self::polynomial(&PolyRing::new(field, Vec::new()).expect("empty variable list"))
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn vars(&self) -> &[String] {
        self.ring.vars()
    }

    /// Presented without relations.
    pub fn is_polynomial(&self) -> bool {
        self.relations.is_zero()
    }

    /// Whether `1 = 0` in the algebra. Cached.
    pub fn is_zero_ring(&self) -> Result<bool> {
        if let Some(&z) = self.zero_ring.get() {
            return Ok(z);
        }
        let z = self.relations.is_unit()?;
        let _ = self.zero_ring.set(z);
        Ok(z)
    }

    /// Canonical representative of `f` (grevlex normal form).
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.relations.normal_form(f)
    }

    pub fn elements_equal(&self, a: &Polynomial, b: &Polynomial) -> Result<bool> {
        Ok(self.reduce(&(a - b))?.is_zero())
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.ring.parse(text)
    }

    /// The quotient by additional relations.
    pub fn quotient(&self, extra: impl IntoIterator<Item = Polynomial>) -> FPAlgebra {
        Self::from_ideal(self.relations.with_generators(extra))
    }

    /// Same variables and the same relation ideal.
    pub fn same_presentation(&self, other: &FPAlgebra) -> Result<bool> {
        Ok(self.ring == other.ring && self.relations.equals(&other.relations)?)
    }

    /// Reduced grevlex Gröbner basis of the relations.
    pub fn relation_basis(&self) -> Result<Vec<Polynomial>> {
        self.relations.reduced_groebner(&MonomialOrder::grevlex())
    }

    fn require_same(&self, other: &FPAlgebra, module: &'static str, what: &str) -> Result<()> {
        if self.same_presentation(other)? {
            Ok(())
        } else {
            Err(Error::mismatch(
                module,
                format!("{what}: {self} is not {other}"),
            ))
        }
    }
}

impl fmt::Display for FPAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.characteristic(), self.vars().join(", "))?;
        if !self.relations.is_zero() {
            write!(f, "/{}", self.relations)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FPAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The ideal `rel(codomain) + rel(domain) + (x_j - image_j)` on
/// `vars(codomain) ⊔ vars(domain)`, codomain variables first.
#[derive(Clone, Debug)]
pub struct GraphIdeal {
    pub ideal: Ideal,
    pub codomain_vars: Vec<usize>,
    pub domain_vars: Vec<usize>,
}

impl GraphIdeal {
    /// Block order eliminating the codomain variables.
    pub fn elimination_order(&self) -> MonomialOrder {
        MonomialOrder::eliminating(&self.codomain_vars, &self.domain_vars)
    }
}

/// A map of algebras given by the images of the domain's variables.
#[derive(Clone)]
pub struct AlgebraMap {
    domain: FPAlgebra,
    codomain: FPAlgebra,
    images: Vec<Polynomial>,
    graph: Arc<OnceLock<GraphIdeal>>,
}

impl AlgebraMap {
    /// Checks that every relation of the domain maps to zero. Images are
    /// stored in normal form.
    pub fn new(domain: &FPAlgebra, codomain: &FPAlgebra, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != domain.nvars() {
            return Err(Error::mismatch(
                "algebra",
                format!(
                    "{} images given for {} domain variables",
                    images.len(),
                    domain.nvars()
                ),
            ));
        }
        if let Some(bad) = images.iter().find(|g| g.ring() != codomain.ring()) {
            return Err(Error::mismatch(
                "algebra",
                format!("image {bad} is not in the codomain ring"),
            ));
        }
        let images = images
            .iter()
            .map(|g| codomain.reduce(g))
            .collect::<Result<Vec<_>>>()?;
        for rel in domain.relations().generators() {
            let mapped = rel.substitute(&images, codomain.ring())?;
            if !codomain.reduce(&mapped)?.is_zero() {
                return Err(Error::NotWellDefined {
                    relation: rel.to_string(),
                });
            }
        }
        Ok(Self {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images,
            graph: Arc::default(),
        })
    }

    pub fn identity(a: &FPAlgebra) -> Self {
        let images = (0..a.nvars()).map(|i| a.ring().var(i)).collect();
        Self::new(a, a, images).expect("identity is well defined")
    }

    /// Absolute Frobenius power `x ↦ x^{p^k}` of an algebra.
    pub fn absolute_frobenius(a: &FPAlgebra, k: u32) -> Result<Self> {
        let images = (0..a.nvars())
            .map(|i| a.ring().var(i).frobenius_power(k))
            .collect::<Result<Vec<_>>>()?;
        Self::new(a, a, images)
    }

    /// The structure map from `F_p` (no variables).
    pub fn from_prime_field(a: &FPAlgebra) -> Self {
        Self::new(&FPAlgebra::prime_field(a.field()), a, Vec::new()).expect("nothing to check")
    }

    pub fn domain(&self) -> &FPAlgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &FPAlgebra {
        &self.codomain
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of a domain polynomial, in normal form.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != self.domain.ring() {
            return Err(Error::mismatch(
                "algebra",
                format!("{f} is not in the domain ring"),
            ));
        }
        self.codomain
            .reduce(&f.substitute(&self.images, self.codomain.ring())?)
    }

    /// Equality of maps: same presentations and equal images.
    pub fn equals(&self, other: &AlgebraMap) -> Result<bool> {
        if !self.domain.same_presentation(&other.domain)?
            || !self.codomain.same_presentation(&other.codomain)?
        {
            return Ok(false);
        }
        for (a, b) in self.images.iter().zip(&other.images) {
            if !self.codomain.elements_equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn graph_ideal(&self) -> &GraphIdeal {
        self.graph.get_or_init(|| {
            let cod = self.codomain.ring();
            let (ring, domain_vars) = cod.disjoint_union(self.domain.ring());
            let codomain_vars: Vec<usize> = (0..cod.nvars()).collect();
            let mut gens: Vec<Polynomial> = self
                .codomain
                .relations()
                .generators()
                .iter()
                .map(|g| g.remap(&ring, &codomain_vars))
                .collect();
            for (j, img) in self.images.iter().enumerate() {
                gens.push(&ring.var(domain_vars[j]) - &img.remap(&ring, &codomain_vars));
            }
            gens.extend(
                self.domain
                    .relations()
                    .generators()
                    .iter()
                    .map(|g| g.remap(&ring, &domain_vars)),
            );
            GraphIdeal {
                ideal: Ideal::new(&ring, gens),
                codomain_vars,
                domain_vars,
            }
        })
    }

    /// Preimage of zero, as an ideal of the domain's ambient ring; it
    /// contains the domain relations.
    pub fn kernel(&self) -> Result<Ideal> {
        let graph = self.graph_ideal();
        let ring = graph.ideal.ring();
        let order = graph.elimination_order();
        let identity: Vec<usize> = (0..self.domain.nvars()).collect();
        let target = self.domain.ring();
        let sub = ring.subring(&graph.domain_vars);
        let gens = graph
            .ideal
            .reduced_groebner(&order)?
            .iter()
            .filter_map(|g| g.restrict(&sub, &graph.domain_vars))
            .map(|g| g.remap(target, &identity))
            .collect();
        Ok(Ideal::new(target, gens))
    }

    /// A preimage of `b` when `b` is in the image.
    pub fn preimage(&self, b: &Polynomial) -> Result<Option<Polynomial>> {
        if b.ring() != self.codomain.ring() {
            return Err(Error::mismatch(
                "algebra",
                format!("{b} is not in the codomain ring"),
            ));
        }
        let graph = self.graph_ideal();
        let ring = graph.ideal.ring();
        let nf = graph.ideal.normal_form_with(
            &b.remap(ring, &graph.codomain_vars),
            &graph.elimination_order(),
        )?;
        let sub = ring.subring(&graph.domain_vars);
        let identity: Vec<usize> = (0..self.domain.nvars()).collect();
        Ok(nf
            .restrict(&sub, &graph.domain_vars)
            .map(|w| w.remap(self.domain.ring(), &identity)))
    }

    pub fn in_image(&self, b: &Polynomial) -> Result<bool> {
        Ok(self.preimage(b)?.is_some())
    }

    /// Preimages of every codomain variable, if all exist.
    pub fn section_images(&self) -> Result<Option<Vec<Polynomial>>> {
        let mut out = Vec::with_capacity(self.codomain.nvars());
        for i in 0..self.codomain.nvars() {
            match self.preimage(&self.codomain.ring().var(i))? {
                Some(w) => out.push(w),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.section_images()?.is_some())
    }

    pub fn is_injective(&self) -> Result<bool> {
        self.domain.relations().contains(&self.kernel()?)
    }

    /// The inverse map when this map is an isomorphism.
    pub fn inverse(&self) -> Result<Option<AlgebraMap>> {
        let Some(section) = self.section_images()? else {
            return Ok(None);
        };
        if !self.is_injective()? {
            return Ok(None);
        }
        Ok(Some(AlgebraMap::new(
            &self.codomain,
            &self.domain,
            section,
        )?))
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.inverse()?.is_some())
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &AlgebraMap) -> Result<AlgebraMap> {
        compose(then, self)
    }
}

impl fmt::Display for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .domain
            .vars()
            .iter()
            .zip(&self.images)
            .map(|(v, img)| format!("{v} -> {img}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {}", self.domain, self.codomain, self)
    }
}

/// `g ∘ f`.
pub fn compose(g: &AlgebraMap, f: &AlgebraMap) -> Result<AlgebraMap> {
    f.codomain
        .require_same(&g.domain, "algebra", "cannot compose")?;
    let images = f
        .images
        .iter()
        .map(|img| g.apply(img))
        .collect::<Result<Vec<_>>>()?;
    AlgebraMap::new(&f.domain, &g.codomain, images)
}

/// An algebra together with two maps into it.
#[derive(Clone, Debug)]
pub struct Cospan {
    pub algebra: FPAlgebra,
    pub left: AlgebraMap,
    pub right: AlgebraMap,
}

/// `S ⊗_R T` for `f: R → S`, `g: R → T`, on `vars(S) ⊔ vars(T)`.
pub fn pushout(f: &AlgebraMap, g: &AlgebraMap) -> Result<Cospan> {
    f.domain
        .require_same(&g.domain, "algebra", "pushout needs a common domain")?;
    let (s, t) = (&f.codomain, &g.codomain);
    let (ring, tmap) = s.ring().disjoint_union(t.ring());
    let smap: Vec<usize> = (0..s.nvars()).collect();
    let mut rels: Vec<Polynomial> = s
        .relations()
        .generators()
        .iter()
        .map(|r| r.remap(&ring, &smap))
        .collect();
    rels.extend(
        t.relations()
            .generators()
            .iter()
            .map(|r| r.remap(&ring, &tmap)),
    );
    for (a, b) in f.images.iter().zip(&g.images) {
        rels.push(&a.remap(&ring, &smap) - &b.remap(&ring, &tmap));
    }
    let algebra = FPAlgebra::new(&ring, rels);
    let left = AlgebraMap::new(s, &algebra, smap.iter().map(|&i| ring.var(i)).collect())?;
    let right = AlgebraMap::new(t, &algebra, tmap.iter().map(|&i| ring.var(i)).collect())?;
    Ok(Cospan {
        algebra,
        left,
        right,
    })
}

/// `S ⊗_{R,F^k} R` for `f: R → S`, presented on `vars(S) ⊔ vars(R)` with
/// relations `rel S + rel R + (f(x_j) - x_j^{p^k})`. The left map is
/// `s ↦ s`, the right map `r ↦ r`.
pub fn frobenius_twist(f: &AlgebraMap, k: u32) -> Result<Cospan> {
    let (r, s) = (&f.domain, &f.codomain);
    let (ring, rmap) = s.ring().disjoint_union(r.ring());
    let smap: Vec<usize> = (0..s.nvars()).collect();
    let mut rels: Vec<Polynomial> = s
        .relations()
        .generators()
        .iter()
        .map(|g| g.remap(&ring, &smap))
        .collect();
    rels.extend(
        r.relations()
            .generators()
            .iter()
            .map(|g| g.remap(&ring, &rmap)),
    );
    for (j, img) in f.images.iter().enumerate() {
        rels.push(&img.remap(&ring, &smap) - &ring.var(rmap[j]).frobenius_power(k)?);
    }
    let algebra = FPAlgebra::new(&ring, rels);
    let left = AlgebraMap::new(s, &algebra, smap.iter().map(|&i| ring.var(i)).collect())?;
    let right = AlgebraMap::new(r, &algebra, rmap.iter().map(|&i| ring.var(i)).collect())?;
    Ok(Cospan {
        algebra,
        left,
        right,
    })
}

/// `S ⊗_{R,F^k} R → S`, `s ⊗ r ↦ s^{p^k} f(r)`, on the presentation of
/// [`frobenius_twist`].
pub fn relative_frobenius_power(f: &AlgebraMap, k: u32) -> Result<AlgebraMap> {
    let twist = frobenius_twist(f, k)?;
    let s = &f.codomain;
    let mut images = (0..s.nvars())
        .map(|i| s.ring().var(i).frobenius_power(k))
        .collect::<Result<Vec<_>>>()?;
    images.extend(f.images.iter().cloned());
    AlgebraMap::new(&twist.algebra, s, images)
}

/// The relative Frobenius `F_{S/R}: S ⊗_{R,F} R → S`.
pub fn relative_frobenius(f: &AlgebraMap) -> Result<AlgebraMap> {
    relative_frobenius_power(f, 1)
}

/// An equivalent presentation with fewer variables, with the isomorphisms
/// both ways.
#[derive(Clone, Debug)]
pub struct Simplification {
    pub algebra: FPAlgebra,
    pub forward: AlgebraMap,
    pub backward: AlgebraMap,
}

/// Repeatedly drops a variable `v` that occurs in some relation `c·v + h`
/// with `h` free of `v`, substituting `v = -h/c`.
pub fn simplify(a: &FPAlgebra) -> Result<Simplification> {
    let field = a.field();
    let mut current = a.clone();
    let mut forward = AlgebraMap::identity(a);
    loop {
        let basis = current.relation_basis()?;
        let n = current.nvars();
        let found = basis.iter().find_map(|g| {
            let used = g.variables_used();
            (0..n).find_map(|v| {
                let lin = crate::polyring::Monomial::var(n, v, 1);
                let c = g.coefficient(&lin);
                let h = g - &current.ring().term(c, lin);
                (c != 0 && used[v] && !h.variables_used()[v]).then_some((v, c, h))
            })
        });
        let Some((v, c, h)) = found else { break };
        let keep: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let sub = current.ring().subring(&keep);
        let value = h
            .scale(field.neg(field.inv(c)))
            .restrict(&sub, &keep)
            .expect("free of the eliminated variable");
        let images: Vec<Polynomial> = (0..n)
            .map(|i| match keep.iter().position(|&k| k == i) {
                Some(j) => sub.var(j),
                None => value.clone(),
            })
            .collect();
        let rels = basis
            .iter()
            .map(|g| g.substitute(&images, &sub))
            .collect::<Result<Vec<_>>>()?;
        let next = FPAlgebra::new(&sub, rels);
        let step = AlgebraMap::new(&current, &next, images)?;
        forward = compose(&step, &forward)?;
        current = next;
    }
    let backward = AlgebraMap::new(
        &current,
        a,
        current
            .vars()
            .iter()
            .map(|name| {
                a.ring()
                    .var(a.ring().var_index(name).expect("kept variable"))
            })
            .collect(),
    )?;
    Ok(Simplification {
        algebra: current,
        forward,
        backward,
    })
}
