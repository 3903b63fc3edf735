//! General vertex-weighted simple graphs and their Cartan-type matrices.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::exact::{inertia_symmetric, ExactMatrix, Inertia};
use crate::star::{MatrixClass, StarShape};
use crate::{Error, Result};

/// A finite simple graph with a positive integer weight on each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    weights: Vec<u64>,
    edges: BTreeSet<(usize, usize)>,
}

/// Result of [`classify_general`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralClass {
    pub class: MatrixClass,
    pub corank: usize,
    pub inertia: Inertia,
}

impl WeightedGraph {
    pub fn new(weights: Vec<u64>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = weights.len();
        if weights.contains(&0) {
            return Err(Error::InvalidArgument("vertex weights must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge ({u}, {v}) names a vertex outside 0..{n}")));
            }
            if u == v {
                return Err(Error::NotSimple(format!("loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::NotSimple(format!("repeated edge ({u}, {v})")));
            }
        }
        Ok(WeightedGraph { weights, edges: set })
    }

    /// The star graph of `shape`, vertices numbered exactly as in
    /// [`crate::star::build_star_matrix`].
    pub fn star(shape: &StarShape) -> Self {
        let d: usize = shape.arms().iter().map(|&r| r as usize).sum::<usize>() + 1;
        let center = d - 1;
        let mut weights = vec![2; d];
        weights[center] = shape.k();
        let mut edges = Vec::with_capacity(d - 1);
        let mut offset = 0;
        for &r in shape.arms() {
            let r = r as usize;
            edges.extend((offset..offset + r - 1).map(|v| (v, v + 1)));
            edges.push((offset + r - 1, center));
            offset += r;
        }
        WeightedGraph::new(weights, edges).expect("star edges are simple")
    }

    /// A path on `n` vertices with every weight equal to `weight`.
    pub fn path(n: usize, weight: u64) -> Self {
        WeightedGraph::new(vec![weight; n], (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    /// A cycle on `n >= 3` vertices with every weight equal to `weight`.
    pub fn cycle(n: usize, weight: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("a simple cycle needs at least 3 vertices".into()));
        }
        WeightedGraph::new(vec![weight; n], (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The induced subgraph on every vertex except `vertex`, renumbered.
    pub fn remove_vertex(&self, vertex: usize) -> Self {
        let weights = self.weights.iter().enumerate().filter(|(i, _)| *i != vertex).map(|(_, &w)| w).collect();
        let shift = |v: usize| if v > vertex { v - 1 } else { v };
        let edges = self.edges.iter().filter(|(u, v)| *u != vertex && *v != vertex).map(|&(u, v)| (shift(u), shift(v)));
        WeightedGraph::new(weights, edges).expect("induced subgraph of a simple graph is simple")
    }

    /// `w(u)` on the diagonal, -1 on edges, 0 elsewhere.
    pub fn matrix(&self) -> ExactMatrix {
        let diagonal = self.weights.iter().enumerate().map(|(i, &w)| (i, i, BigInt::from(w)));
        let off = self.edges.iter().map(|&(u, v)| (u, v, BigInt::from(-1)));
        ExactMatrix::symmetric(self.vertex_count(), diagonal.chain(off))
    }
}

/// Finite / affine / indefinite classification of an arbitrary connected
/// weighted graph, from the inertia of its matrix.
///
/// Affine needs inertia `(n-1, 1, 0)` and every proper principal submatrix
/// positive definite. Positive definiteness passes to principal submatrices,
/// so it suffices to check the `n` submatrices with one vertex deleted.
pub fn classify_general(g: &WeightedGraph) -> Result<GeneralClass> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.matrix();
    let n = m.order();
    let inertia = inertia_symmetric(&m)?;
    let class = if inertia.positive == n {
        MatrixClass::Finite
    } else if inertia.positive + 1 == n && inertia.zero == 1 && deletions_positive_definite(&m)? {
        MatrixClass::Affine
    } else {
        MatrixClass::Indefinite { negative: inertia.negative }
    };
    Ok(GeneralClass { class, corank: inertia.zero, inertia })
}

/// Whether every one-vertex-deleted principal submatrix is positive definite.
pub fn deletions_positive_definite(m: &ExactMatrix) -> Result<bool> {
    for v in 0..m.order() {
        if !inertia_symmetric(&m.delete_index(v))?.is_positive_definite() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{build_star_matrix, DEFAULT_THRESHOLD};

    #[test]
    fn rejects_non_simple_graphs() {
        assert!(matches!(WeightedGraph::new(vec![2, 2], [(0, 0)]), Err(Error::NotSimple(_))));
        assert!(matches!(WeightedGraph::new(vec![2, 2], [(0, 1), (1, 0)]), Err(Error::NotSimple(_))));
        assert!(WeightedGraph::new(vec![2, 2], [(0, 2)]).is_err());
        assert!(WeightedGraph::new(vec![2, 0], [(0, 1)]).is_err());
    }

    #[test]
    fn single_vertex_matrix() {
        let g = WeightedGraph::new(vec![2], []).unwrap();
        assert_eq!(g.matrix(), ExactMatrix::from_rows(&[vec![2]]).unwrap());
    }

    #[test]
    fn star_graph_matches_star_matrix() {
        for (k, arms) in [(1, vec![1, 1]), (2, vec![1, 2, 5]), (3, vec![2, 3, 3, 5]), (7, vec![4, 1, 1])] {
            let shape = StarShape::new(k, arms).unwrap();
            let from_graph = WeightedGraph::star(&shape).matrix();
            assert_eq!(from_graph, build_star_matrix(&shape, DEFAULT_THRESHOLD).unwrap(), "{shape}");
        }
    }

    #[test]
    fn four_cycle_is_two_minus_adjacency() {
        let c4 = WeightedGraph::cycle(4, 2).unwrap();
        let expected = ExactMatrix::from_rows(&[
            vec![2, -1, 0, -1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![-1, 0, -1, 2],
        ])
        .unwrap();
        assert_eq!(c4.matrix(), expected);
        // the affine cycle A_3^(1)
        assert_eq!(classify_general(&c4).unwrap().class, MatrixClass::Affine);
        assert!(WeightedGraph::cycle(2, 2).is_err());
    }

    #[test]
    fn general_classification() {
        let e6 = WeightedGraph::star(&StarShape::new(2, vec![2, 2, 2]).unwrap());
        let c = classify_general(&e6).unwrap();
        assert_eq!(c.class, MatrixClass::Affine);
        assert_eq!(c.corank, 1);

        assert_eq!(classify_general(&WeightedGraph::path(3, 2)).unwrap().class, MatrixClass::Finite);

        let hyperbolic = WeightedGraph::star(&StarShape::new(1, vec![2, 2, 2]).unwrap());
        let c = classify_general(&hyperbolic).unwrap();
        assert_eq!(c.class, MatrixClass::Indefinite { negative: 1 });
        assert_eq!(c.corank, 0);
    }

    #[test]
    fn deleting_from_affine_two_arm_star() {
        // B(1; 1, 1): weight-1 center with two weight-2 leaves.
        let g = WeightedGraph::star(&StarShape::new(1, vec![1, 1]).unwrap());
        assert_eq!(classify_general(&g).unwrap().class, MatrixClass::Affine);
        for v in 0..g.vertex_count() {
            let sub = g.remove_vertex(v);
            let inertia = inertia_symmetric(&sub.matrix()).unwrap();
            assert!(inertia.is_positive_definite(), "deleting {v}");
            if sub.is_connected() {
                assert_eq!(classify_general(&sub).unwrap().class, MatrixClass::Finite);
            }
        }
    }

    #[test]
    fn disconnected_graph_rejected() {
        let g = WeightedGraph::new(vec![2, 2], []).unwrap();
        assert_eq!(classify_general(&g), Err(Error::Disconnected));
        assert!(!WeightedGraph::new(vec![], []).unwrap().is_connected());
    }
}
