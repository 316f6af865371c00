use num_complex::Complex64;

use super::SimpleGraph;
use crate::constructions::Frame;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

/// Inner products at or below this magnitude have no usable sign.
const SIGN_TOL: f64 = 1e-12;

/// Symmetric matrix with zero diagonal and +-1 off the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SeidelMatrix {
    /// Validates the Seidel shape.
    pub fn new(n: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Shape(format!(
                "Seidel matrix of order {n} needs {} entries",
                n * n
            )));
        }
        for i in 0..n {
            if entries[i * n + i] != 0 {
                return Err(Error::InvalidParameter(format!("nonzero diagonal at {i}")));
            }
            for j in (i + 1)..n {
                let (a, b) = (entries[i * n + j], entries[j * n + i]);
                if a != b || a.abs() != 1 {
                    return Err(Error::InvalidParameter(format!("bad entry at ({i}, {j})")));
                }
            }
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        let data = self
            .entries
            .iter()
            .map(|&s| Complex64::new(s as f64, 0.0))
            .collect();
        DenseMatrix::new(self.n, self.n, data).expect("shape checked")
    }

    /// `I + mu S`, the Gram matrix this Seidel matrix encodes.
    pub fn gram(&self, mu: f64) -> DenseMatrix {
        let mut g = self.to_matrix().scale(mu);
        for i in 0..self.n {
            g[(i, i)].re = 1.0;
        }
        g
    }
}

/// Splits the Gram matrix of a real equiangular frame as `I + mu S`.
pub fn seidel_from_gram(f: &Frame, tol: f64) -> Result<(SeidelMatrix, f64)> {
    let g = f.gram();
    let max_imag = g.max_imag();
    if max_imag > tol {
        return Err(Error::NotRealizable { max_imag });
    }
    let n = f.n();
    if n < 2 {
        return Err(Error::UndefinedCoherence(n));
    }
    for i in 0..n {
        if (g[(i, i)].re - 1.0).abs() > tol {
            return Err(Error::NotEtf(format!(
                "column {i} has squared norm {}",
                g[(i, i)].re
            )));
        }
    }
    let mut mu: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            mu = mu.max(g[(i, j)].re.abs());
        }
    }
    let mut entries = vec![0i8; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let x = g[(i, j)].re;
            if x.abs() <= tol {
                return Err(Error::AmbiguousSign { i, j });
            }
            if (x.abs() - mu).abs() > tol {
                return Err(Error::NotEtf(format!(
                    "|<phi_{i}, phi_{j}>| = {} differs from coherence {mu}",
                    x.abs()
                )));
            }
            let s = if x > 0.0 { 1 } else { -1 };
            entries[i * n + j] = s;
            entries[j * n + i] = s;
        }
    }
    Ok((SeidelMatrix { n, entries }, mu))
}

/// Negates columns so that every inner product with the anchor column is
/// negative.
pub fn flip_canonical(f: &Frame, anchor: usize) -> Result<Frame> {
    if !f.is_real() {
        return Err(Error::Precondition("flipping needs a real frame".into()));
    }
    if anchor >= f.n() {
        return Err(Error::InvalidSelection(format!(
            "anchor {anchor} out of range"
        )));
    }
    let g = f.gram();
    let mut out = f.clone();
    for j in 0..f.n() {
        if j == anchor {
            continue;
        }
        let ip = g[(anchor, j)].re;
        if ip.abs() <= SIGN_TOL {
            return Err(Error::AmbiguousSign { i: anchor, j });
        }
        if ip > 0.0 {
            out = out.flip_column(j);
        }
    }
    Ok(out)
}

/// `i ~ j` exactly where `S[i, j] = -1`.
pub fn graph_from_seidel(s: &SeidelMatrix) -> SimpleGraph {
    let mut g = SimpleGraph::empty(s.n);
    for i in 0..s.n {
        for j in (i + 1)..s.n {
            if s.get(i, j) == -1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}
