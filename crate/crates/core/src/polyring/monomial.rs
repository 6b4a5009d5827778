use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A power product `x_0^e_0 * ... * x_{n-1}^e_{n-1}` with dense exponents.
///
/// The derived `Ord` is plain lexicographic order on the exponent vector and
/// only serves as the canonical storage order inside polynomials; term
/// orders used by the algorithms are [`MonomialOrder`]s.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Self {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Self::new(exps)
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn total_degree(&self) -> u64 {
        self.degree
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree + other.degree,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: Vec<u32> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Scales every exponent by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &e in self.exps.iter() {
            let scaled = (e as u64)
                .checked_mul(factor)
                .filter(|&v| v <= u32::MAX as u64);
            exps.push(scaled.ok_or(Error::ExponentOverflow { power: factor })? as u32);
        }
        Ok(Monomial::new(exps))
    }

    /// The variable index if this monomial is `x_i^e` with `e >= 1`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Exponent vector restricted to the given variables, others zero.
    pub fn restricted(&self, vars: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for &v in vars {
            exps[v] = self.exps[v];
        }
        Monomial::new(exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Grevlex on the first `split` variables, ties broken by grevlex on
    /// the rest. Eliminates the first block.
    Block {
        split: usize,
    },
}

/// A monomial order: a kind plus an optional variable priority list.
///
/// With a permutation `perm`, variable `perm[0]` plays the role of the
/// first (largest) variable, `perm[1]` the second, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Option<Arc<[usize]>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::grevlex()
    }
}

impl MonomialOrder {
    pub fn lex() -> Self {
        Self {
            kind: OrderKind::Lex,
            perm: None,
        }
    }

    pub fn grevlex() -> Self {
        Self {
            kind: OrderKind::Grevlex,
            perm: None,
        }
    }

    /// Block order eliminating variables `0..split`.
    pub fn block(split: usize) -> Self {
        Self {
            kind: OrderKind::Block { split },
            perm: None,
        }
    }

    /// Block order eliminating the variables in `eliminated`; the remaining
    /// `kept` variables form the second block.
    pub fn eliminating(eliminated: &[usize], kept: &[usize]) -> Self {
        let perm: Vec<usize> = eliminated.iter().chain(kept.iter()).copied().collect();
        Self {
            kind: OrderKind::Block {
                split: eliminated.len(),
            },
            perm: Some(perm.into()),
        }
    }

    /// Applies a variable priority list. Fails unless `perm` is a permutation.
    pub fn with_permutation(mut self, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &v in &perm {
            if v >= perm.len() || seen[v] {
                return Err(Error::precondition(
                    "polyring",
                    "variable list is not a permutation",
                ));
            }
            seen[v] = true;
        }
        self.perm = Some(perm.into());
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn name(&self) -> String {
        let base = match self.kind {
            OrderKind::Lex => "lex".to_string(),
            OrderKind::Grevlex => "grevlex".to_string(),
            OrderKind::Block { split } => format!("block({split})"),
        };
        match &self.perm {
            None => base,
            Some(p) => format!("{base}{:?}", p),
        }
    }

    /// Compares two monomials, reporting mismatched variable counts.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::mismatch(
                "polyring",
                format!("monomials over {} and {} variables", a.nvars(), b.nvars()),
            ));
        }
        if let Some(p) = &self.perm {
            if p.len() != a.nvars() {
                return Err(Error::mismatch(
                    "polyring",
                    "order permutation has the wrong length",
                ));
            }
        }
        Ok(self.compare(a, b))
    }

    /// `Greater` means `a` is the larger monomial.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars();
        let at = |m: &Monomial, i: usize| -> u32 {
            match &self.perm {
                Some(p) => m.exps[p[i]],
                None => m.exps[i],
            }
        };
        match self.kind {
            OrderKind::Lex => {
                for i in 0..n {
                    match at(a, i).cmp(&at(b, i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex(n, 0, |i| at(a, i), |i| at(b, i))),
            OrderKind::Block { split } => {
                let split = split.min(n);
                let deg = |m: &Monomial, lo: usize, hi: usize| -> u64 {
                    (lo..hi).map(|i| at(m, i) as u64).sum()
                };
                deg(a, 0, split)
                    .cmp(&deg(b, 0, split))
                    .then_with(|| revlex(split, 0, |i| at(a, i), |i| at(b, i)))
                    .then_with(|| deg(a, split, n).cmp(&deg(b, split, n)))
                    .then_with(|| revlex(n, split, |i| at(a, i), |i| at(b, i)))
            }
        }
    }
}

/// Reverse lexicographic tie-break on positions `lo..hi`: the monomial with
/// the smaller exponent in the last differing position is larger.
fn revlex(hi: usize, lo: usize, a: impl Fn(usize) -> u32, b: impl Fn(usize) -> u32) -> Ordering {
    for i in (lo..hi).rev() {
        match a(i).cmp(&b(i)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
