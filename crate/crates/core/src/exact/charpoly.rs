use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use super::{modular, ExactMatrix, Inertia};
use crate::{Error, Result};

/// Monic characteristic polynomial `det(xI - M)`.
///
/// Coefficients are ascending: `result[i]` multiplies `x^i`, and
/// `result[order] == 1`.
pub fn char_poly(m: &ExactMatrix) -> Vec<BigInt> {
    modular::char_poly_crt(&m.to_dense())
}

/// Number of sign changes in a coefficient sequence, zeros skipped.
pub fn sign_variations(coeffs: &[BigInt]) -> usize {
    let mut last = Sign::NoSign;
    let mut changes = 0;
    for c in coeffs {
        let s = c.sign();
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Inertia of a symmetric matrix from its characteristic polynomial.
///
/// The multiplicity of the root 0 is the number of trailing zero
/// coefficients. A symmetric matrix has only real eigenvalues, so Descartes'
/// rule of signs counts the positive roots of the deflated polynomial
/// exactly.
pub fn inertia_symmetric(m: &ExactMatrix) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric { order: m.order() });
    }
    let poly = char_poly(m);
    let zero = poly.iter().take_while(|c| c.is_zero()).count();
    let positive = sign_variations(&poly[zero..]);
    Ok(Inertia { positive, zero, negative: m.order() - positive - zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bareiss_determinant;
    use num_traits::One;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn eval(poly: &[BigInt], x: &BigInt) -> BigInt {
        poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `det(tI - M)` by Bareiss at an integer point: an independent route to
    /// the characteristic polynomial's values.
    fn shifted_det(m: &ExactMatrix, t: i64) -> BigInt {
        let n = m.order();
        let mut shifted = ExactMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut v = -m.get(i, j).clone();
                if i == j {
                    v += t;
                }
                shifted.set(i, j, v);
            }
        }
        bareiss_determinant(&shifted)
    }

    #[test]
    fn hand_examples() {
        let one = ExactMatrix::from_rows(&[vec![2]]).unwrap();
        assert_eq!(char_poly(&one), big(&[-2, 1]));
        let a2 = ExactMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(char_poly(&a2), big(&[3, -4, 1]));
        assert_eq!(char_poly(&ExactMatrix::zeros(2)), big(&[0, 0, 1]));
        assert_eq!(char_poly(&ExactMatrix::zeros(0)), big(&[1]));
    }

    #[test]
    fn hand_inertia() {
        let a2 = ExactMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(inertia_symmetric(&a2).unwrap(), Inertia::new(2, 0, 0));
        let asym = ExactMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(inertia_symmetric(&asym), Err(Error::NotSymmetric { order: 2 }));
        let indefinite = ExactMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(inertia_symmetric(&indefinite).unwrap(), Inertia::new(1, 0, 1));
    }

    #[test]
    fn sign_variation_counts() {
        assert_eq!(sign_variations(&big(&[3, -4, 1])), 2);
        assert_eq!(sign_variations(&big(&[1, 0, 0, -1])), 1);
        assert_eq!(sign_variations(&big(&[])), 0);
        assert_eq!(sign_variations(&big(&[0, 5, 0, 7])), 0);
    }

    #[test]
    fn large_entries_need_many_primes() {
        let big_entry = BigInt::from(10).pow(40);
        let m = ExactMatrix::symmetric(
            3,
            vec![
                (0, 0, big_entry.clone()),
                (0, 1, BigInt::from(-7)),
                (1, 1, -big_entry.clone()),
                (2, 2, BigInt::one()),
                (1, 2, big_entry.clone()),
            ],
        );
        let poly = char_poly(&m);
        for t in [-3i64, 0, 1, 5, 17] {
            assert_eq!(eval(&poly, &BigInt::from(t)), shifted_det(&m, t));
        }
        assert_eq!(poly[3], BigInt::one());
    }

    fn symmetric_matrix(max_order: usize) -> impl Strategy<Value = ExactMatrix> {
        (0..=max_order).prop_flat_map(|n| {
            prop::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |upper| {
                let mut entries = Vec::new();
                let mut it = upper.into_iter();
                for i in 0..n {
                    for j in i..n {
                        entries.push((i, j, BigInt::from(it.next().unwrap())));
                    }
                }
                ExactMatrix::symmetric(n, entries)
            })
        })
    }

    fn matrix_with_perm(max_order: usize) -> impl Strategy<Value = (ExactMatrix, Vec<usize>)> {
        symmetric_matrix(max_order).prop_flat_map(|m| {
            let n = m.order();
            (Just(m), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    }

    proptest! {
        #[test]
        fn char_poly_agrees_with_shifted_determinants(m in symmetric_matrix(8)) {
            let poly = char_poly(&m);
            prop_assert_eq!(poly.len(), m.order() + 1);
            prop_assert_eq!(poly.last().unwrap(), &BigInt::one());
            for t in -2..=(m.order() as i64) {
                prop_assert_eq!(eval(&poly, &BigInt::from(t)), shifted_det(&m, t));
            }
        }

        #[test]
        fn constant_term_is_signed_determinant(m in symmetric_matrix(8)) {
            let poly = char_poly(&m);
            let det = bareiss_determinant(&m);
            let expected = if m.order() % 2 == 0 { det } else { -det };
            prop_assert_eq!(&poly[0], &expected);
        }

        #[test]
        fn inertia_sums_to_order_and_survives_permutation((m, perm) in matrix_with_perm(8)) {
            let inertia = inertia_symmetric(&m).unwrap();
            prop_assert_eq!(inertia.order(), m.order());
            prop_assert_eq!(inertia_symmetric(&m.permuted(&perm)).unwrap(), inertia);
        }

        #[test]
        fn determinant_sign_matches_inertia(m in symmetric_matrix(8)) {
            let inertia = inertia_symmetric(&m).unwrap();
            let det = bareiss_determinant(&m);
            prop_assert_eq!(det.is_zero(), inertia.zero > 0);
            if inertia.zero == 0 {
                let expected = if inertia.negative.is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
                prop_assert_eq!(det.sign(), expected);
            }
        }
    }
}
