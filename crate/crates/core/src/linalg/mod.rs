//! Dense real/complex kernels consumed by the certification formulas.

mod cholesky;
mod eigen;
mod matrix;

pub use cholesky::semidefinite_cholesky;
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, singular_values, Spectrum};
pub use matrix::{DenseMatrix, REAL_TOL};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default numerical tolerance where none is supplied.
pub const DEFAULT_TOL: f64 = 1e-12;

/// `A^* A`.
pub fn gram(a: &DenseMatrix) -> DenseMatrix {
    let n = a.cols();
    let mut g = DenseMatrix::zeros(n, n);
    let cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j)).collect();
    for i in 0..n {
        for j in i..n {
            let z: Complex64 = cols[i]
                .iter()
                .zip(&cols[j])
                .map(|(x, y)| x.conj() * y)
                .sum();
            if i == j {
                g[(i, i)] = Complex64::new(z.re, 0.0);
            } else {
                g[(i, j)] = z;
                g[(j, i)] = z.conj();
            }
        }
    }
    g
}

/// Columns of `a` indexed by `selection`, in ascending index order.
pub fn submatrix_columns(a: &DenseMatrix, selection: &[usize]) -> Result<DenseMatrix> {
    if selection.is_empty() {
        return Err(Error::InvalidSelection("empty selection".into()));
    }
    let mut idx = selection.to_vec();
    idx.sort_unstable();
    if let Some(&bad) = idx.iter().find(|&&j| j >= a.cols()) {
        return Err(Error::InvalidSelection(format!(
            "column {bad} out of range for {} columns",
            a.cols()
        )));
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSelection("duplicate column index".into()));
    }
    let rows: Vec<usize> = (0..a.rows()).collect();
    Ok(a.block(&rows, &idx))
}

/// Spectral norm. Hermitian inputs use the spectrum directly; anything else
/// goes through the largest eigenvalue of `A^* A`.
pub fn operator_norm(a: &DenseMatrix) -> f64 {
    if a.max_abs() == 0.0 {
        return 0.0;
    }
    if a.is_square() && a.hermitian_deviation() <= 1e-14 * a.max_abs() {
        return hermitian_eigenvalues(a, DEFAULT_TOL)
            .expect("checked Hermitian")
            .max_abs();
    }
    let g = gram(a);
    let top = hermitian_eigenvalues(&g, DEFAULT_TOL)
        .expect("Gram is Hermitian")
        .max();
    top.max(0.0).sqrt()
}

/// `Tr[H^p]` for even `p`, by binary exponentiation.
pub fn trace_power(h: &DenseMatrix, p: u32) -> Result<f64> {
    if p == 0 || p % 2 == 1 {
        return Err(Error::UnsupportedExponent(p));
    }
    eigen::check_hermitian(h)?;
    let mut result: Option<DenseMatrix> = None;
    let mut base = h.clone();
    let mut e = p;
    loop {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => r.matmul(&base)?,
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = base.matmul(&base)?;
    }
    Ok(result.expect("p >= 2").trace().re)
}
