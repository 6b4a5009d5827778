use std::fmt;

use crate::error::{Error, Result};

/// The prime field F_p with `2 <= p < 2^16`.
///
/// Elements are plain `u32` values reduced to `[0, p)`; a product of two
/// reduced values fits in a `u32` before reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 16)).contains(&p) || !is_prime(p as u32) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, (self.p - 2) as u64)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(65537).is_err());
        assert!(PrimeField::new(65521).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn inverse_and_fermat() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.pow(a, 7), a);
        }
        let big = PrimeField::new(65521).unwrap();
        assert_eq!(big.mul(65520, 65520), 1);
    }
}
