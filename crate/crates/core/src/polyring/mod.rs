//! Sparse multivariate polynomials over a prime field.
//!
//! Coefficients are machine integers reduced to `[0, p)`, exponents are dense
//! vectors, and every polynomial is kept in canonical form so that structural
//! equality is mathematical equality.

mod field;
pub mod linalg;
mod monomial;
mod poly;

pub use field::PrimeField;
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::{PolyRing, Polynomial, MAX_VARS};
