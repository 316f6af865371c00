use std::fmt;

use crate::linalg::DenseMatrix;

/// Undirected simple graph on `0..n`, adjacency stored as bit rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Panics on self-loops or out-of-range vertices.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "self-loop at {i}");
        assert!(i < self.n && j < self.n, "vertex out of range");
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Bit row of `i`'s neighbourhood.
    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.has_edge(i, j)).collect()
    }

    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Common degree if every vertex has it.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|i| self.degree(i) == d).then_some(d)
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Graph with vertex `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(i, j) {
                    g.add_edge(perm[i], perm[j]);
                }
            }
        }
        g
    }

    /// Ordered adjacent pairs `(i, j)` with `i` in `left`, `j` in `right`;
    /// an edge inside the overlap is counted twice.
    pub fn edges_between(&self, left: &[usize], right: &[usize]) -> usize {
        left.iter()
            .map(|&i| right.iter().filter(|&&j| self.has_edge(i, j)).count())
            .sum()
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let mut a = DenseMatrix::zeros(self.n.max(1), self.n.max(1));
        for i in 0..self.n {
            for j in 0..self.n {
                if self.has_edge(i, j) {
                    a[(i, j)].re = 1.0;
                }
            }
        }
        a
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| self.neighbors(i)).collect()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &i)| vertices[a + 1..].iter().all(|&j| self.has_edge(i, j)))
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("adjacency", &self.adjacency_lists())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(c5.regular_degree(), Some(2));
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.complement().edge_count(), 5);
        assert_eq!(c5.common_neighbors(0, 2), 1);
        assert!(c5.is_clique(&[0, 1]) && !c5.is_clique(&[0, 1, 2]));
        assert_eq!(c5.edges_between(&[0], &[1, 4]), 2);
        assert_eq!(c5.edges_between(&[0, 1], &[0, 1]), 2);
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.induced(&[1, 3]), SimpleGraph::complete(2));
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let mut g = SimpleGraph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0) && g.has_edge(65, 64));
        assert_eq!(g.edge_count(), 2);
    }
}
