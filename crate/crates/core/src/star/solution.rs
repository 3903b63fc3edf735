use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use super::{join, verify_kernel, CoxeterLabels, StarShape};
use crate::exact::{BigInt, BigRat};
use crate::{Error, Result};

/// An affine star together with the invariants the tables report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    shape: StarShape,
    p: u64,
    s: BigInt,
    x: Vec<BigInt>,
    dimension: BigInt,
    coxeter_number: BigInt,
}

impl AffineSolution {
    /// Fails with [`Error::NotAffine`] unless `S(shape) = 0`.
    pub fn from_shape(shape: StarShape) -> Result<Self> {
        let labels = shape.coxeter_labels()?;
        // S = 0 forces m - k = sum 1/N_i, which is positive.
        let p = shape.p().to_u64().expect("affine stars have 1 <= p <= m/2");
        let x = labels.divisors();
        Ok(AffineSolution {
            p,
            s: labels.center.clone(),
            x,
            dimension: shape.dimension(),
            coxeter_number: labels.sum(),
            shape,
        })
    }

    /// The affine star with the given arms, if `sum 1/(r_i + 1)` is a
    /// positive integer `p`; the central weight is then `m - p`.
    pub fn from_arms(arms: impl Into<Vec<u64>>) -> Result<Self> {
        let arms = arms.into();
        let sum = arms.iter().fold(BigRat::zero(), |acc, &r| acc + BigRat::new(1.into(), BigInt::from(r) + 1));
        if !sum.is_integer() || !sum.is_positive() {
            return Err(Error::NotIntegral(sum));
        }
        let p = sum.to_integer().to_u64().expect("p is at most m/2");
        let k = arms.len() as u64 - p;
        Self::from_shape(StarShape::new(k, arms)?)
    }

    pub fn shape(&self) -> &StarShape {
        &self.shape
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `lcm(N_1, ..., N_m)`, the center label.
    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// Divisor labels `x_i = s / N_i`, descending.
    pub fn x(&self) -> &[BigInt] {
        &self.x
    }

    pub fn dimension(&self) -> &BigInt {
        &self.dimension
    }

    pub fn coxeter_number(&self) -> &BigInt {
        &self.coxeter_number
    }

    pub fn labels(&self) -> CoxeterLabels {
        self.shape.coxeter_labels().expect("solution shape is affine")
    }

    /// `B^(p)(r_1,...,r_m)` in ASCII.
    pub fn type_string(&self) -> String {
        format!("B^({})({})", self.p, join(self.shape.arms()))
    }

    /// `(x_1,...,x_m)[s]`.
    pub fn label_string(&self) -> String {
        format!("({})[{}]", join(&self.x), self.s)
    }

    /// Table order: dimension, then `s`, then the arm tuple.
    pub fn sort_key(&self) -> (&BigInt, &BigInt, &[u64]) {
        (&self.dimension, &self.s, self.shape.arms())
    }
}

impl fmt::Display for AffineSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.type_string())
    }
}

/// Multiset union of arms. The reciprocal sums add, so `p` adds and the
/// result is affine again.
pub fn tau_product(a: &AffineSolution, b: &AffineSolution) -> AffineSolution {
    let mut arms = a.shape.arms().to_vec();
    arms.extend_from_slice(b.shape.arms());
    let k = a.shape.k() + b.shape.k();
    let shape = StarShape::new(k, arms).expect("union of valid arm lists is valid");
    let product = AffineSolution::from_shape(shape).expect("tau product of affine stars is affine");
    debug_assert_eq!(product.p, a.p + b.p);
    debug_assert!(verify_kernel(&product.shape, &product.labels()).unwrap());
    product
}

/// Splits a solution into two affine parts whose arm multisets partition
/// its arms, or returns `None` if it is tau-primitive.
///
/// Every sub-multiset of the arms is tried, so the answer is exact. The
/// returned pair is ordered with the smaller part (fewer arms, then
/// lexicographically smaller arms) first.
pub fn tau_decompose(sol: &AffineSolution) -> Option<(AffineSolution, AffineSolution)> {
    let arms = sol.shape.arms();
    let mut groups: Vec<(u64, usize)> = Vec::new();
    for &r in arms {
        match groups.last_mut() {
            Some((value, count)) if *value == r => *count += 1,
            _ => groups.push((r, 1)),
        }
    }

    let mut take = vec![0usize; groups.len()];
    loop {
        // odometer over multiplicities 0..=count per distinct arm
        let mut pos = 0;
        while pos < groups.len() && take[pos] == groups[pos].1 {
            take[pos] = 0;
            pos += 1;
        }
        if pos == groups.len() {
            return None;
        }
        take[pos] += 1;

        let chosen: usize = take.iter().sum();
        if chosen == arms.len() {
            continue;
        }
        let sum = groups
            .iter()
            .zip(&take)
            .fold(BigRat::zero(), |acc, (&(r, _), &t)| acc + BigRat::new(t.into(), BigInt::from(r) + 1));
        if !sum.is_integer() || sum.is_zero() {
            continue;
        }
        let mut left = Vec::with_capacity(chosen);
        let mut right = Vec::with_capacity(arms.len() - chosen);
        for (&(r, count), &t) in groups.iter().zip(&take) {
            left.extend(std::iter::repeat_n(r, t));
            right.extend(std::iter::repeat_n(r, count - t));
        }
        let (first, second) = if (left.len(), &left) <= (right.len(), &right) { (left, right) } else { (right, left) };
        let first = AffineSolution::from_arms(first).expect("integral part is affine");
        let second = AffineSolution::from_arms(second).expect("complement of an integral part is integral");
        return Some((first, second));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(arms: &[u64]) -> AffineSolution {
        AffineSolution::from_arms(arms.to_vec()).unwrap()
    }

    #[test]
    fn from_arms_infers_weight() {
        let e8 = sol(&[5, 1, 2]);
        assert_eq!(e8.shape().k(), 2);
        assert_eq!(e8.p(), 1);
        assert_eq!(e8.s(), &BigInt::from(6));
        assert_eq!(e8.x(), &[3.into(), 2.into(), 1.into()]);
        assert_eq!(e8.dimension(), &BigInt::from(9));
        assert_eq!(e8.coxeter_number(), &BigInt::from(30));
        assert_eq!(e8.type_string(), "B^(1)(1,2,5)");
        assert_eq!(e8.label_string(), "(3,2,1)[6]");
        assert!(matches!(AffineSolution::from_arms(vec![1, 2]), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn from_shape_rejects_non_affine() {
        let finite = StarShape::new(3, vec![2, 2, 2]).unwrap();
        assert!(matches!(AffineSolution::from_shape(finite), Err(Error::NotAffine(_))));
    }

    #[test]
    fn tau_products() {
        let a1 = sol(&[1, 1]);
        let d4 = tau_product(&a1, &a1);
        assert_eq!(d4, sol(&[1, 1, 1, 1]));
        assert_eq!(d4.p(), 2);
        assert_eq!(d4.shape().k(), 2);
        assert_eq!(tau_product(&a1, &sol(&[2, 2, 2])).type_string(), "B^(2)(1,1,2,2,2)");
        assert_eq!(tau_product(&a1, &sol(&[1, 2, 5])).type_string(), "B^(2)(1,1,1,2,5)");
    }

    #[test]
    fn tau_decompositions() {
        for arms in [&[1u64, 1][..], &[2, 2, 2], &[1, 2, 6, 41]] {
            assert_eq!(tau_decompose(&sol(arms)), None);
        }
        let (a, b) = tau_decompose(&sol(&[1, 1, 1, 1])).unwrap();
        assert_eq!((a.shape().arms(), b.shape().arms()), (&[1, 1][..], &[1, 1][..]));
        let (a, b) = tau_decompose(&sol(&[1, 1, 1, 2, 5])).unwrap();
        assert_eq!((a.shape().arms(), b.shape().arms()), (&[1, 1][..], &[1, 2, 5][..]));
    }

    #[test]
    fn decomposition_recombines() {
        let whole = sol(&[1, 1, 2, 3, 3, 5]);
        let (a, b) = tau_decompose(&whole).unwrap();
        assert_eq!(tau_product(&a, &b), whole);
    }
}
