//! Dense linear algebra over F_p.

use super::PrimeField;

/// Incrementally built row-echelon basis of a subspace of `F_p^n`.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Self {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[piv]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

/// Rank of a matrix given as rows.
pub fn rank(field: PrimeField, rows: impl IntoIterator<Item = Vec<u32>>) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
