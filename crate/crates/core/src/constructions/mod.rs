//! Matrix families: Steiner systems, Hadamard matrices, Steiner and Paley
//! equiangular tight frames, real rotations, and random ensembles.

mod etf;
mod hadamard;
mod random;
mod steiner;

use std::sync::OnceLock;

pub use etf::{paley_etf, realify, steiner_etf};
pub use hadamard::{hadamard, HadamardKind};
pub use random::{bernoulli_matrix, gaussian_matrix, split_seed, NormalSampler};
pub use steiner::{all_pairs_steiner, incidence_matrix, steiner_triple, SteinerSystem};

use crate::error::{Error, Result};
use crate::linalg::{gram, DenseMatrix};

/// A matrix read as a dictionary of column vectors.
#[derive(Debug, Clone)]
pub struct Frame {
    matrix: DenseMatrix,
    label: String,
    gram: OnceLock<DenseMatrix>,
}

impl Frame {
    /// Wraps `matrix`; every column must have positive norm.
    pub fn new(matrix: DenseMatrix, label: impl Into<String>) -> Result<Self> {
        for j in 0..matrix.cols() {
            if matrix.column_norm_sqr(j) <= 0.0 {
                return Err(Error::InvalidParameter(format!("column {j} is zero")));
            }
        }
        Ok(Self {
            matrix,
            label: label.into(),
            gram: OnceLock::new(),
        })
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Ambient dimension (rows).
    pub fn m(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of frame vectors (columns).
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_real(&self) -> bool {
        self.matrix.is_real()
    }

    /// Cached `Phi^* Phi`.
    pub fn gram(&self) -> &DenseMatrix {
        self.gram.get_or_init(|| gram(&self.matrix))
    }

    /// Copy with column `j` negated.
    pub fn flip_column(&self, j: usize) -> Frame {
        let mut m = self.matrix.clone();
        m.scale_column(j, num_complex::Complex64::new(-1.0, 0.0));
        Frame {
            matrix: m,
            label: self.label.clone(),
            gram: OnceLock::new(),
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.label == other.label
    }
}
