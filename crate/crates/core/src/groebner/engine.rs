//! Buchberger's algorithm over submodules of a free module `P^r`.
//!
//! Ideals are the rank-one case. Vectors are kept as term lists sorted from
//! largest to smallest under a [`ModuleOrder`], which makes multiplication by
//! a monomial order-preserving and subtraction a linear merge.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PrimeField};

pub const DEFAULT_STEP_BUDGET: usize = 200_000;

thread_local! {
    static STEP_BUDGET: Cell<usize> = const { Cell::new(DEFAULT_STEP_BUDGET) };
    static STEPS: Cell<u64> = const { Cell::new(0) };
    static BASES: Cell<u64> = const { Cell::new(0) };
}

/// Sets the S-pair step budget for every subsequent basis computation on
/// the current thread.
pub fn set_step_budget(budget: usize) {
    STEP_BUDGET.with(|b| b.set(budget));
}

pub fn step_budget() -> usize {
    STEP_BUDGET.with(|b| b.get())
}

/// Work counters for the current thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Usage {
    pub s_pair_steps: u64,
    pub basis_computations: u64,
}

pub fn usage() -> Usage {
    Usage {
        s_pair_steps: STEPS.with(|s| s.get()),
        basis_computations: BASES.with(|b| b.get()),
    }
}

pub fn reset_usage() {
    STEPS.with(|s| s.set(0));
    BASES.with(|b| b.set(0));
}

/// Term order on `P^r`: positions below `head` dominate everything, then the
/// monomial order decides, then lower positions win.
///
/// With `head = 0` this is "term over position"; an element whose leading
/// term lies outside the head block has zero head components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub head: usize,
    pub mono: MonomialOrder,
}

impl ModuleOrder {
    pub fn new(head: usize, mono: MonomialOrder) -> Self {
        Self { head, mono }
    }

    pub fn monomial(mono: MonomialOrder) -> Self {
        Self { head: 0, mono }
    }

    #[inline]
    pub fn compare(&self, a_pos: usize, a: &Monomial, b_pos: usize, b: &Monomial) -> Ordering {
        (a_pos < self.head)
            .cmp(&(b_pos < self.head))
            .then_with(|| self.mono.compare(a, b))
            .then_with(|| b_pos.cmp(&a_pos))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: u32,
}

pub(crate) type Vector = Vec<Term>;

pub(crate) fn sort_vector(v: &mut Vector, order: &ModuleOrder) {
    v.sort_by(|a, b| order.compare(b.pos, &b.mono, a.pos, &a.mono));
}

/// `f - c * m * g` for sorted `f`, `g`.
fn sub_mul(
    field: PrimeField,
    order: &ModuleOrder,
    f: &[Term],
    c: u32,
    m: &Monomial,
    g: &[Term],
) -> Vector {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let neg_c = field.neg(c);
    let (mut i, mut j) = (0, 0);
    let mut scaled: Option<Term> = None;
    loop {
        if scaled.is_none() && j < g.len() {
            let t = &g[j];
            scaled = Some(Term {
                pos: t.pos,
                mono: t.mono.mul(m),
                coeff: field.mul(t.coeff, neg_c),
            });
            j += 1;
        }
        match (f.get(i), scaled.as_ref()) {
            (None, None) => break,
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(_)) => {
                let s = scaled.take().unwrap();
                if s.coeff != 0 {
                    out.push(s);
                }
            }
            (Some(a), Some(s)) => match order.compare(a.pos, &a.mono, s.pos, &s.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let s = scaled.take().unwrap();
                    if s.coeff != 0 {
                        out.push(s);
                    }
                }
                Ordering::Equal => {
                    let coeff = field.add(a.coeff, s.coeff);
                    if coeff != 0 {
                        out.push(Term {
                            pos: a.pos,
                            mono: a.mono.clone(),
                            coeff,
                        });
                    }
                    i += 1;
                    scaled = None;
                }
            },
        }
    }
    out
}

fn make_monic(field: PrimeField, v: &mut Vector) {
    if let Some(lead) = v.first() {
        if lead.coeff != 1 {
            let inv = field.inv(lead.coeff);
            for t in v.iter_mut() {
                t.coeff = field.mul(t.coeff, inv);
            }
        }
    }
}

fn find_divisor<'a>(basis: &'a [Vector], t: &Term, skip: Option<usize>) -> Option<&'a Vector> {
    basis.iter().enumerate().find_map(|(k, g)| {
        if Some(k) == skip {
            return None;
        }
        let lead = g.first()?;
        (lead.pos == t.pos && lead.mono.divides(&t.mono)).then_some(g)
    })
}

/// Full (tail) reduction of `v` by monic `basis`.
pub(crate) fn reduce(
    field: PrimeField,
    order: &ModuleOrder,
    v: &[Term],
    basis: &[Vector],
) -> Vector {
    reduce_skipping(field, order, v, basis, None)
}

fn reduce_skipping(
    field: PrimeField,
    order: &ModuleOrder,
    v: &[Term],
    basis: &[Vector],
    skip: Option<usize>,
) -> Vector {
    let mut rest: Vector = v.to_vec();
    let mut start = 0;
    let mut out = Vec::new();
    while start < rest.len() {
        let t = &rest[start];
        match find_divisor(basis, t, skip) {
            Some(g) => {
                let q = g[0].mono.quotient_of(&t.mono);
                rest = sub_mul(field, order, &rest[start..], t.coeff, &q, g);
                start = 0;
            }
            None => {
                out.push(t.clone());
                start += 1;
            }
        }
    }
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`.
///
/// The result is sorted by leading term, largest first, and every element
/// is monic. `rank_one` enables the coprime-leading-term criterion, which
/// is only valid for ideals.
pub(crate) fn groebner_basis(
    field: PrimeField,
    order: &ModuleOrder,
    gens: Vec<Vector>,
    rank_one: bool,
) -> Result<Vec<Vector>> {
    BASES.with(|b| b.set(b.get() + 1));
    let budget = step_budget();
    let mut basis: Vec<Vector> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: Vector,
               basis: &mut Vec<Vector>,
               pending: &mut Vec<Pair>,
               set: &mut HashSet<(usize, usize)>| {
        let idx = basis.len();
        let lead = &h[0];
        for (i, g) in basis.iter().enumerate() {
            if g[0].pos == lead.pos {
                pending.push(Pair {
                    i,
                    j: idx,
                    lcm: g[0].mono.lcm(&lead.mono),
                    pos: lead.pos,
                });
                set.insert((i, idx));
            }
        }
        basis.push(h);
    };

    for g in gens {
        let mut h = reduce(field, order, &g, &basis);
        if !h.is_empty() {
            make_monic(field, &mut h);
            add(h, &mut basis, &mut pending, &mut pending_set);
        }
    }

    let mut steps = 0usize;
    while !pending.is_empty() {
        let mut best = 0;
        for k in 1..pending.len() {
            let (a, b) = (&pending[k], &pending[best]);
            let ord = order
                .compare(a.pos, &a.lcm, b.pos, &b.lcm)
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        let pair = pending.swap_remove(best);
        pending_set.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);

        if rank_one && fi[0].mono.is_coprime(&fj[0].mono) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let lead = &basis[k][0];
            lead.pos == pair.pos
                && lead.mono.divides(&pair.lcm)
                && !pending_set.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending_set.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }

        steps += 1;
        STEPS.with(|s| s.set(s.get() + 1));
        if steps > budget {
            return Err(Error::Resource { budget });
        }
        let mi = fi[0].mono.quotient_of(&pair.lcm);
        let mj = fj[0].mono.quotient_of(&pair.lcm);
        let left = sub_mul(field, order, &[], field.neg(1), &mi, fi);
        let spoly = sub_mul(field, order, &left, 1, &mj, fj);
        let mut h = reduce(field, order, &spoly, &basis);
        if !h.is_empty() {
            make_monic(field, &mut h);
            add(h, &mut basis, &mut pending, &mut pending_set);
        }
    }

    // Minimal basis: drop elements whose leading term is divisible by another's.
    let mut keep: Vec<Vector> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lead = &g[0];
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k
                && h[0].pos == lead.pos
                && h[0].mono.divides(&lead.mono)
                && (h[0].mono != lead.mono || l < k)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // Tail-reduce each element by the others.
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let r = reduce_skipping(field, order, &keep[k], &keep, Some(k));
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.compare(b[0].pos, &b[0].mono, a[0].pos, &a[0].mono));
    Ok(reduced)
}
