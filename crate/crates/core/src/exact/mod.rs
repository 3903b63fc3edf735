//! Exact integer and rational linear algebra.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`], which keeps every value in canonical form
//! (positive denominator, coprime numerator and denominator). Nothing here
//! ever rounds.

mod charpoly;
mod matrix;
mod modular;

pub use charpoly::{char_poly, inertia_symmetric, sign_variations};
pub use matrix::{bareiss_determinant, ExactMatrix};

pub use num_bigint::BigInt;
pub type BigRat = num_rational::BigRational;

use num_traits::One;

use crate::{Error, Result};

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn new(positive: usize, zero: usize, negative: usize) -> Self {
        Inertia { positive, zero, negative }
    }

    pub fn order(&self) -> usize {
        self.positive + self.zero + self.negative
    }

    pub fn is_positive_definite(&self) -> bool {
        self.zero == 0 && self.negative == 0
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.zero, self.negative)
    }
}

/// Tridiagonal type-A Cartan matrix of order `r` (2 on the diagonal, -1 beside it).
pub fn cartan_a(r: usize) -> ExactMatrix {
    let mut entries = Vec::with_capacity(2 * r);
    for i in 0..r {
        entries.push((i, i, BigInt::from(2)));
        if i + 1 < r {
            entries.push((i, i + 1, BigInt::from(-1)));
        }
    }
    ExactMatrix::symmetric(r, entries)
}

/// The last diagonal entry of `A_r^{-1}`, which is `r / (r + 1)`.
pub fn a_r_inverse_last(r: u64) -> Result<BigRat> {
    if r == 0 {
        return Err(Error::InvalidArgument("A_r needs r >= 1".into()));
    }
    let r = BigInt::from(r);
    let n = &r + BigInt::one();
    Ok(BigRat::new(r, n))
}
