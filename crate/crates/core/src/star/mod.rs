//! Weighted star shapes and their closed-form invariants.
//!
//! A [`StarShape`] is the compact identity of `B(k; r_1, ..., r_m)`: the
//! central weight and the sorted multiset of arm lengths. Every invariant
//! below is computed from the shape directly, so shapes whose dimension runs
//! into the millions are handled without building a matrix. The matrix
//! itself is produced by [`build_star_matrix`] only below a size threshold.

mod labels;
mod solution;

pub use labels::{verify_kernel, ArmLabels, CoxeterLabels};
pub use solution::{tau_decompose, tau_product, AffineSolution};

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{BigInt, BigRat, ExactMatrix};
use crate::{Error, Result};

/// Largest dimension [`build_star_matrix`] materializes unless told otherwise.
pub const DEFAULT_THRESHOLD: usize = 10_000;

/// The star `B(k; r_1, ..., r_m)` with arms kept in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarShape {
    k: u64,
    arms: Vec<u64>,
}

/// Position of a matrix in the finite / affine / indefinite trichotomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixClass {
    /// Positive definite.
    Finite,
    /// Positive semidefinite of corank one with every proper principal
    /// submatrix positive definite.
    Affine,
    /// Everything else, with the number of negative eigenvalues.
    Indefinite { negative: usize },
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixClass::Finite => f.write_str("finite"),
            MatrixClass::Affine => f.write_str("affine"),
            MatrixClass::Indefinite { .. } => f.write_str("indefinite"),
        }
    }
}

impl StarShape {
    /// Validates and canonicalizes a shape. Arms may be given in any order.
    pub fn new(k: u64, arms: impl Into<Vec<u64>>) -> Result<Self> {
        let mut arms = arms.into();
        if k == 0 {
            return Err(Error::ZeroWeight);
        }
        if arms.len() < 2 {
            return Err(Error::TooFewArms(arms.len()));
        }
        if arms.contains(&0) {
            return Err(Error::ZeroArm);
        }
        arms.sort_unstable();
        Ok(StarShape { k, arms })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn arms(&self) -> &[u64] {
        &self.arms
    }

    /// Number of arms.
    pub fn m(&self) -> usize {
        self.arms.len()
    }

    /// `m - k`, the integer a unit-fraction sum must hit for the star to be
    /// affine. Negative or zero means the star is finite type.
    pub fn p(&self) -> BigInt {
        BigInt::from(self.m()) - BigInt::from(self.k)
    }

    /// Unit-fraction denominators `N_i = r_i + 1`, ascending.
    pub fn denominators(&self) -> impl Iterator<Item = BigInt> + '_ {
        self.arms.iter().map(|&r| BigInt::from(r) + 1)
    }

    /// `1 + sum r_i`.
    pub fn dimension(&self) -> BigInt {
        self.arms.iter().map(|&r| BigInt::from(r)).sum::<BigInt>() + 1
    }

    /// `2 sum r_i + k`.
    pub fn trace(&self) -> BigInt {
        self.arms.iter().map(|&r| BigInt::from(r)).sum::<BigInt>() * 2 + self.k
    }

    /// Sum of every matrix entry. Each arm contributes `2r - 2(r - 1) - 2`
    /// (its diagonal, its internal edges, and the edge to the center counted
    /// twice), which is zero, leaving only the center weight.
    pub fn entry_sum(&self) -> BigInt {
        BigInt::from(self.k)
    }

    /// Scalar Schur complement `S = k - m + sum 1/(r_i + 1)`.
    pub fn schur_scalar(&self) -> BigRat {
        let base = BigRat::from_integer(-self.p());
        self.denominators().fold(base, |acc, n| acc + BigRat::new(BigInt::one(), n))
    }

    /// `det B = prod N_i * S`, computed in integers as
    /// `(k - m) prod N_i + sum_i prod_{j != i} N_j`.
    pub fn determinant_closed(&self) -> BigInt {
        let ns: Vec<BigInt> = self.denominators().collect();
        let product: BigInt = ns.iter().product();
        let cofactors: BigInt = ns.iter().map(|n| &product / n).sum();
        -self.p() * &product + cofactors
    }

    pub fn classify(&self) -> MatrixClass {
        let s = self.schur_scalar();
        if s.is_positive() {
            MatrixClass::Finite
        } else if s.is_zero() {
            MatrixClass::Affine
        } else {
            MatrixClass::Indefinite { negative: 1 }
        }
    }

    pub fn is_affine(&self) -> bool {
        self.schur_scalar().is_zero()
    }

    /// `lcm(N_1, ..., N_m)`.
    pub fn lcm_denominators(&self) -> BigInt {
        self.denominators().fold(BigInt::one(), |acc, n| acc.lcm(&n))
    }

    /// Coxeter labels of an affine star: center `s = lcm N_i`, arm `i`
    /// labelled `(s / N_i) * j` for `j = 1..r_i` counting from the leaf.
    pub fn coxeter_labels(&self) -> Result<CoxeterLabels> {
        self.require_affine()?;
        let s = self.lcm_denominators();
        let arms = self
            .arms
            .iter()
            .map(|&r| ArmLabels::Progression { step: &s / (BigInt::from(r) + 1), len: r })
            .collect();
        Ok(CoxeterLabels { center: s, arms })
    }

    /// Sum of all Coxeter labels, center included.
    pub fn coxeter_number(&self) -> Result<BigInt> {
        let labels = self.coxeter_labels()?;
        let h = labels.sum();
        debug_assert_eq!(h, self.coxeter_number_closed().unwrap());
        Ok(h)
    }

    /// `s (D + 1) / 2`. The division is exact for affine stars.
    pub fn coxeter_number_closed(&self) -> Result<BigInt> {
        self.require_affine()?;
        let twice: BigInt = self.lcm_denominators() * (self.dimension() + 1);
        let (h, rem) = twice.div_rem(&BigInt::from(2));
        assert!(rem.is_zero(), "s(D+1) is odd for an affine star");
        Ok(h)
    }

    fn require_affine(&self) -> Result<()> {
        let s = self.schur_scalar();
        if s.is_zero() {
            Ok(())
        } else {
            Err(Error::NotAffine(s))
        }
    }

    /// `B(k; r_1, ..., r_m)` written with arms ascending.
    pub fn notation(&self) -> String {
        format!("B({}; {})", self.k, join(&self.arms))
    }
}

impl fmt::Display for StarShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

pub(crate) fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Dimension as a `usize`, or the "too large" error if it exceeds `threshold`.
pub(crate) fn checked_dimension(shape: &StarShape, threshold: usize) -> Result<usize> {
    let d = shape.dimension();
    match d.to_usize() {
        Some(n) if n <= threshold => Ok(n),
        _ => Err(Error::TooLarge { dimension: d, threshold }),
    }
}

/// Materializes `B(k; r_1, ..., r_m)`.
///
/// Vertices are ordered arm by arm, each arm from its leaf to the vertex
/// adjacent to the center, with the center last. This is the block layout
/// `[[A_{r_1}, .., v_1], .., [v_1^t, .., k]]`.
pub fn build_star_matrix(shape: &StarShape, threshold: usize) -> Result<ExactMatrix> {
    let d = checked_dimension(shape, threshold)?;
    let center = d - 1;
    let mut entries = Vec::with_capacity(3 * d);
    let mut offset = 0;
    for &r in shape.arms() {
        let r = r as usize;
        for j in 0..r {
            entries.push((offset + j, offset + j, BigInt::from(2)));
            if j + 1 < r {
                entries.push((offset + j, offset + j + 1, BigInt::from(-1)));
            }
        }
        entries.push((offset + r - 1, center, BigInt::from(-1)));
        offset += r;
    }
    entries.push((center, center, BigInt::from(shape.k())));
    Ok(ExactMatrix::symmetric(d, entries))
}
