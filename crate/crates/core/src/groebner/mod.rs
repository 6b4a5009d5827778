//! Gröbner bases for ideals and submodules of free modules, with the
//! derived operations: normal forms, containment, elimination, Frobenius
//! powers of ideals and ideals of minors.

mod engine;
mod ideal;
mod module;

use std::collections::{HashSet, VecDeque};

pub use engine::{
    reset_usage, set_step_budget, step_budget, usage, ModuleOrder, Usage, DEFAULT_STEP_BUDGET,
};
pub use ideal::Ideal;
pub use module::{ModuleElement, SubmoduleBasis};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// Largest number of minors [`minors_ideal`] will expand.
pub const MINOR_CAP: usize = 20_000;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of `t × t` minors of a `rows × cols` matrix.
pub fn minor_count(rows: usize, cols: usize, t: usize) -> usize {
    binomial(rows, t).saturating_mul(binomial(cols, t))
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Determinant of the square submatrix on `rows` × `cols`, by cofactor
/// expansion memoised over column subsets.
fn determinant(
    ring: &PolyRing,
    m: &[Vec<Polynomial>],
    rows: &[usize],
    cols: &[usize],
) -> Polynomial {
    let t = rows.len();
    let mut dp = vec![ring.zero(); 1 << t];
    dp[0] = ring.one();
    for mask in 1usize..(1 << t) {
        let r = rows[mask.count_ones() as usize - 1];
        let mut acc = ring.zero();
        for c in 0..t {
            if mask & (1 << c) == 0 || dp[mask ^ (1 << c)].is_zero() {
                continue;
            }
            let entry = &m[r][cols[c]];
            if entry.is_zero() {
                continue;
            }
            let term = entry * &dp[mask ^ (1 << c)];
            // Sign of moving column c past the chosen columns above it.
            if (mask >> (c + 1)).count_ones() % 2 == 1 {
                acc = &acc - &term;
            } else {
                acc = &acc + &term;
            }
        }
        dp[mask] = acc;
    }
    dp[(1 << t) - 1].clone()
}

/// The ideal of `t × t` minors of a matrix given by rows. `t = 0` gives the
/// unit ideal and `t` beyond the matrix size gives the zero ideal.
pub fn minors_ideal(ring: &PolyRing, rows: &[Vec<Polynomial>], t: usize) -> Result<Ideal> {
    if t == 0 {
        return Ok(Ideal::unit(ring));
    }
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::precondition(
            "groebner",
            "matrix rows have different lengths",
        ));
    }
    if t > rows.len().min(ncols) {
        return Ok(Ideal::zero(ring));
    }
    let count = minor_count(rows.len(), ncols, t);
    if count > MINOR_CAP {
        return Err(Error::TooLarge {
            dim: count,
            cap: MINOR_CAP,
        });
    }
    let mut gens = Vec::new();
    let mut seen = HashSet::new();
    for rs in subsets(rows.len(), t) {
        for cs in subsets(ncols, t) {
            let d = determinant(ring, rows, &rs, &cs);
            if !d.is_zero() && seen.insert(d.clone()) {
                gens.push(d);
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

/// Monomials in `nvars` variables divisible by none of `leads`, in
/// ascending grevlex order. `None` when there are infinitely many; a count
/// above `cap` is an error.
pub fn standard_monomials(
    nvars: usize,
    leads: &[Monomial],
    cap: usize,
) -> Result<Option<Vec<Monomial>>> {
    if leads.iter().any(Monomial::is_one) {
        return Ok(Some(Vec::new()));
    }
    let bounded = (0..nvars).all(|i| leads.iter().any(|m| m.pure_power_of() == Some(i)));
    if !bounded {
        return Ok(None);
    }
    let standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    let one = Monomial::one(nvars);
    seen.insert(one.clone());
    queue.push_back(one);
    while let Some(m) = queue.pop_front() {
        for i in 0..nvars {
            let next = m.mul(&Monomial::var(nvars, i, 1));
            if standard(&next) && seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::TooLarge {
                        dim: seen.len(),
                        cap,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    if seen.len() > cap {
        return Err(Error::TooLarge {
            dim: seen.len(),
            cap,
        });
    }
    let order = MonomialOrder::grevlex();
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| order.compare(a, b));
    Ok(Some(out))
}
