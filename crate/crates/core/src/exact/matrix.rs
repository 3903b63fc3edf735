use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

static ZERO: BigInt = BigInt::ZERO;

/// Square matrix over arbitrary-precision integers.
///
/// Rows keep only their nonzero entries, sorted by column. The matrices this
/// crate builds are trees with at most three nonzeros per row, so a star of
/// dimension 10^4 costs a few hundred kilobytes instead of gigabytes. Dense
/// algorithms (determinant, characteristic polynomial) expand to a full
/// working copy internally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    order: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl ExactMatrix {
    pub fn zeros(order: usize) -> Self {
        ExactMatrix { order, rows: vec![Vec::new(); order] }
    }

    /// Builds a matrix from a row-major entry list of length `order^2`.
    pub fn from_row_major(order: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::NotSquare { expected: order * order, actual: entries.len() });
        }
        let mut rows = vec![Vec::new(); order];
        for (idx, value) in entries.into_iter().enumerate() {
            if !value.is_zero() {
                rows[idx / order].push((idx % order, value));
            }
        }
        Ok(ExactMatrix { order, rows })
    }

    /// Convenience constructor from nested small-integer rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::NotSquare { expected: order * order, actual: order * bad.len() });
        }
        let entries = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Self::from_row_major(order, entries)
    }

    /// Builds a symmetric matrix from upper- or lower-triangle entries.
    ///
    /// Each `(i, j, v)` sets both `(i, j)` and `(j, i)`; later entries
    /// overwrite earlier ones.
    pub fn symmetric<I>(order: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut m = ExactMatrix::zeros(order);
        for (i, j, v) in entries {
            m.set(i, j, v.clone());
            if i != j {
                m.set(j, i, v);
            }
        }
        assert!(m.is_symmetric(), "symmetric builder produced an asymmetric matrix");
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.order && j < self.order, "index ({i}, {j}) out of range");
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => &self.rows[i][pos].1,
            Err(_) => &ZERO,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i < self.order && j < self.order, "index ({i}, {j}) out of range");
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) if value.is_zero() => {
                row.remove(pos);
            }
            Ok(pos) => row[pos].1 = value,
            Err(_) if value.is_zero() => {}
            Err(pos) => row.insert(pos, (j, value)),
        }
    }

    /// Nonzero entries of row `i` as `(column, value)` pairs.
    pub fn row(&self, i: usize) -> &[(usize, BigInt)] {
        &self.rows[i]
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().all(|(j, v)| self.get(*j, i) == v))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Sum of every entry.
    pub fn entry_sum(&self) -> BigInt {
        self.rows.iter().flatten().map(|(_, v)| v).sum()
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.order, "vector length does not match matrix order");
        self.rows
            .iter()
            .map(|row| row.iter().map(|(j, v)| v * &x[*j]).sum())
            .collect()
    }

    /// Principal submatrix on the given (strictly increasing) index set.
    pub fn principal_submatrix(&self, keep: &[usize]) -> ExactMatrix {
        let mut position = vec![usize::MAX; self.order];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let rows = keep
            .iter()
            .map(|&old| {
                self.rows[old]
                    .iter()
                    .filter(|(j, _)| position[*j] != usize::MAX)
                    .map(|(j, v)| (position[*j], v.clone()))
                    .collect::<Vec<_>>()
            })
            .map(|mut row| {
                row.sort_by_key(|(j, _)| *j);
                row
            })
            .collect();
        ExactMatrix { order: keep.len(), rows }
    }

    /// The principal submatrix with vertex `i` deleted.
    pub fn delete_index(&self, i: usize) -> ExactMatrix {
        let keep: Vec<usize> = (0..self.order).filter(|&j| j != i).collect();
        self.principal_submatrix(&keep)
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> ExactMatrix {
        assert_eq!(perm.len(), self.order);
        let mut out = ExactMatrix::zeros(self.order);
        for (new_i, &old_i) in perm.iter().enumerate() {
            for (new_j, &old_j) in perm.iter().enumerate() {
                let v = self.get(old_i, old_j);
                if !v.is_zero() {
                    out.set(new_i, new_j, v.clone());
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.order]; self.order];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                dense[i][*j] = v.clone();
            }
        }
        dense
    }
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate value is a minor of the input, so each division is
/// exact. The empty matrix has determinant 1.
pub fn bareiss_determinant(m: &ExactMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_dense();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                let t = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = t / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
