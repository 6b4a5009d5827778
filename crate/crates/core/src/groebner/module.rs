use std::fmt;

use super::engine::{self, sort_vector, ModuleOrder, Term, Vector};
use super::standard_monomials;
use crate::error::Result;
use crate::polyring::{Monomial, PolyRing, Polynomial};

/// An element of a free module `P^r`, one polynomial per coordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        if let Some(first) = components.first() {
            assert!(
                components.iter().all(|c| c.ring() == first.ring()),
                "components over different rings"
            );
        }
        Self { components }
    }

    pub fn zero(ring: &PolyRing, rank: usize) -> Self {
        Self {
            components: vec![ring.zero(); rank],
        }
    }

    pub fn unit(ring: &PolyRing, rank: usize, index: usize) -> Self {
        let mut e = Self::zero(ring, rank);
        e.components[index] = ring.one();
        e
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, f: &Polynomial) -> ModuleElement {
        Self {
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank());
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn map(&self, f: impl FnMut(&Polynomial) -> Polynomial) -> ModuleElement {
        Self {
            components: self.components.iter().map(f).collect(),
        }
    }

    /// Embeds into `P^rank` with this element's coordinates starting at `offset`.
    pub fn placed(&self, ring: &PolyRing, rank: usize, offset: usize) -> ModuleElement {
        let mut out = Self::zero(ring, rank);
        for (i, c) in self.components.iter().enumerate() {
            out.components[offset + i] = c.clone();
        }
        out
    }

    /// Coordinates `range.start..range.end`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> ModuleElement {
        Self {
            components: self.components[range].to_vec(),
        }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn element_to_vector(e: &ModuleElement, order: &ModuleOrder) -> Vector {
    let mut v: Vector = e
        .components
        .iter()
        .enumerate()
        .flat_map(|(pos, c)| {
            c.terms().map(move |(m, coeff)| Term {
                pos,
                mono: m.clone(),
                coeff,
            })
        })
        .collect();
    sort_vector(&mut v, order);
    v
}

pub(crate) fn vector_to_element(ring: &PolyRing, rank: usize, v: &[Term]) -> ModuleElement {
    let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rank];
    for t in v {
        buckets[t.pos].push((t.mono.clone(), t.coeff));
    }
    ModuleElement {
        components: buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(ring, b))
            .collect(),
    }
}

/// Reduced Gröbner basis of a submodule of `P^rank`.
pub struct SubmoduleBasis {
    ring: PolyRing,
    rank: usize,
    order: ModuleOrder,
    vectors: Vec<Vector>,
}

impl SubmoduleBasis {
    pub fn compute(
        ring: &PolyRing,
        rank: usize,
        gens: &[ModuleElement],
        order: ModuleOrder,
    ) -> Result<Self> {
        let vecs = gens
            .iter()
            .map(|g| {
                assert_eq!(g.rank(), rank, "generator of the wrong rank");
                element_to_vector(g, &order)
            })
            .filter(|v| !v.is_empty())
            .collect();
        let vectors = engine::groebner_basis(ring.field(), &order, vecs, rank == 1)?;
        Ok(Self {
            ring: ring.clone(),
            rank,
            order,
            vectors,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.vectors
            .iter()
            .map(|v| vector_to_element(&self.ring, self.rank, v))
            .collect()
    }

    /// Leading (position, monomial) pairs.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.vectors
            .iter()
            .map(|v| (v[0].pos, v[0].mono.clone()))
            .collect()
    }

    pub fn normal_form(&self, e: &ModuleElement) -> ModuleElement {
        let v = element_to_vector(e, &self.order);
        let r = engine::reduce(self.ring.field(), &self.order, &v, &self.vectors);
        vector_to_element(&self.ring, self.rank, &r)
    }

    pub fn contains(&self, e: &ModuleElement) -> bool {
        self.normal_form(e).is_zero()
    }

    /// Whether the submodule is all of `P^rank`.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|q| {
            self.vectors
                .iter()
                .any(|v| v[0].pos == q && v[0].mono.is_one())
        })
    }

    /// Standard terms `(position, monomial)` of `P^rank / N`: an F_p-basis
    /// of the quotient. `None` when the quotient is infinite-dimensional.
    pub fn standard_terms(&self, cap: usize) -> Result<Option<Vec<(usize, Monomial)>>> {
        let mut out = Vec::new();
        for q in 0..self.rank {
            let leads: Vec<Monomial> = self
                .vectors
                .iter()
                .filter(|v| v[0].pos == q)
                .map(|v| v[0].mono.clone())
                .collect();
            match standard_monomials(self.ring.nvars(), &leads, cap.saturating_sub(out.len()))? {
                None => return Ok(None),
                Some(ms) => out.extend(ms.into_iter().map(|m| (q, m))),
            }
        }
        Ok(Some(out))
    }
}
