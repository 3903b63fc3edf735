//! Closed forms against materialized matrices and independent oracles.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use weighted_stars::egyptian::{enumerate_affine, EnumQuery};
use weighted_stars::exact::{a_r_inverse_last, bareiss_determinant, inertia_symmetric};
use weighted_stars::graph::{classify_general, WeightedGraph};
use weighted_stars::star::build_star_matrix;
use weighted_stars::{BigInt, BigRat, ExactMatrix, MatrixClass, StarShape};

const THRESHOLD: usize = 10_000;

fn shapes() -> impl Strategy<Value = StarShape> {
    (1u64..8, prop::collection::vec(1u64..10, 2..6)).prop_map(|(k, arms)| StarShape::new(k, arms).unwrap())
}

fn leading_minors_positive(m: &ExactMatrix) -> bool {
    (1..=m.order()).all(|n| {
        let keep: Vec<usize> = (0..n).collect();
        bareiss_determinant(&m.principal_submatrix(&keep)).is_positive()
    })
}

fn symmetric(order: usize, values: &[i64]) -> ExactMatrix {
    let mut it = values.iter();
    let mut entries = Vec::new();
    for i in 0..order {
        for j in i..order {
            entries.push((i, j, BigInt::from(*it.next().unwrap())));
        }
    }
    ExactMatrix::symmetric(order, entries)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinant_matches_elimination(shape in shapes()) {
        let b = build_star_matrix(&shape, THRESHOLD).unwrap();
        prop_assert_eq!(shape.determinant_closed(), bareiss_determinant(&b));
    }

    #[test]
    fn determinant_is_denominator_product_times_schur(shape in shapes()) {
        let product: BigInt = shape.denominators().product();
        let det = BigRat::from_integer(shape.determinant_closed());
        prop_assert_eq!(det, BigRat::from_integer(product) * shape.schur_scalar());
    }

    #[test]
    fn schur_scalar_from_arm_inverses(shape in shapes()) {
        let correction = shape.arms().iter().fold(BigRat::zero(), |acc, &r| acc + a_r_inverse_last(r).unwrap());
        prop_assert_eq!(shape.schur_scalar(), BigRat::from_integer(shape.k().into()) - correction);
    }

    #[test]
    fn trace_and_entry_sum(shape in shapes()) {
        let b = build_star_matrix(&shape, THRESHOLD).unwrap();
        prop_assert_eq!(shape.trace(), b.trace());
        prop_assert_eq!(shape.entry_sum(), b.entry_sum());
        prop_assert_eq!(shape.dimension(), BigInt::from(b.order()));
        prop_assert!(b.is_symmetric());
    }

    #[test]
    fn classification_matches_inertia(shape in shapes()) {
        let general = classify_general(&WeightedGraph::star(&shape)).unwrap();
        prop_assert_eq!(general.class, shape.classify());
        // at most one negative eigenvalue, by interlacing with the arm blocks
        prop_assert!(general.inertia.negative <= 1);
        prop_assert_eq!(general.inertia.zero, usize::from(shape.is_affine()));
    }

    #[test]
    fn inertia_is_invariant_under_relabeling(shape in shapes(), seed in any::<u64>()) {
        let b = build_star_matrix(&shape, THRESHOLD).unwrap();
        let mut perm: Vec<usize> = (0..b.order()).collect();
        let mut state = seed;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(inertia_symmetric(&b).unwrap(), inertia_symmetric(&b.permuted(&perm)).unwrap());
    }

    #[test]
    fn positive_definite_matches_leading_minors(order in 1usize..7, values in prop::collection::vec(-3i64..=3, 21)) {
        let m = symmetric(order, &values);
        prop_assert_eq!(inertia_symmetric(&m).unwrap().is_positive_definite(), leading_minors_positive(&m));
    }

    #[test]
    fn gram_matrices_are_semidefinite(rows in 1usize..6, cols in 1usize..6, values in prop::collection::vec(-4i64..=4, 36)) {
        // A^T A has no negative eigenvalue and rank at most min(rows, cols).
        let a = |i: usize, j: usize| BigInt::from(values[i * 6 + j]);
        let mut entries = Vec::new();
        for i in 0..cols {
            for j in i..cols {
                let dot: BigInt = (0..rows).map(|t| a(t, i) * a(t, j)).sum();
                entries.push((i, j, dot));
            }
        }
        let gram = ExactMatrix::symmetric(cols, entries);
        let inertia = inertia_symmetric(&gram).unwrap();
        prop_assert_eq!(inertia.negative, 0);
        prop_assert!(inertia.positive <= rows.min(cols));
    }

    #[test]
    fn rational_sums_stay_canonical(terms in prop::collection::vec((-50i64..50, 1i64..60), 1..12)) {
        let sum = terms.iter().fold(BigRat::zero(), |acc, &(n, d)| acc + BigRat::new(n.into(), d.into()));
        prop_assert!(sum.denom().is_positive());
        prop_assert!(sum.numer().gcd(sum.denom()).is_one());
        // scaling numerator and denominator does not change the value or its form
        let scaled = BigRat::new(sum.numer() * 7, sum.denom() * 7);
        prop_assert_eq!(scaled.numer(), sum.numer());
        prop_assert_eq!(scaled.denom(), sum.denom());
        let negative = BigRat::new(-sum.numer(), -sum.denom());
        prop_assert_eq!(negative, sum);
    }
}

#[test]
fn coxeter_vectors_span_the_kernel() {
    for (m, p) in [(3, 1), (4, 1), (5, 2), (6, 2)] {
        for sol in enumerate_affine(&EnumQuery::new(m, p)).unwrap().solutions {
            let b = build_star_matrix(sol.shape(), THRESHOLD).unwrap();
            let c = sol.labels().to_vector();
            assert!(c.iter().all(Signed::is_positive), "{sol}");
            assert!(b.mul_vec(&c).iter().all(Zero::is_zero), "{sol}");
            assert_eq!(inertia_symmetric(&b).unwrap().zero, 1, "{sol}");
            assert_eq!(classify_general(&WeightedGraph::star(sol.shape())).unwrap().class, MatrixClass::Affine);
        }
    }
}

#[test]
fn enumeration_is_sorted_and_exact() {
    for (m, p) in [(5, 1), (6, 2)] {
        let sols = enumerate_affine(&EnumQuery::new(m, p)).unwrap().solutions;
        assert!(sols.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        for sol in &sols {
            let sum = sol.shape().denominators().fold(BigRat::zero(), |acc, n| acc + BigRat::new(BigInt::one(), n));
            assert_eq!(sum, BigRat::from_integer(p.into()), "{sol}");
            assert_eq!(sol.shape().k(), m as u64 - p);
        }
    }
}
