//! Cyclic Jacobi eigensolver for Hermitian matrices and one-sided Jacobi
//! singular values.

use num_complex::Complex64;

use super::DenseMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Largest remaining off-diagonal modulus after the final sweep, relative
    /// to the Frobenius norm of the input.
    pub residual: f64,
}

impl Spectrum {
    pub fn max_abs(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, l| m.max(l.abs()))
    }

    pub fn min(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is never empty")
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Scale-aware Hermitian check shared by the kernels.
pub(crate) fn check_hermitian(h: &DenseMatrix) -> Result<()> {
    if !h.is_square() {
        return Err(Error::Shape(format!(
            "expected square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let deviation = h.hermitian_deviation();
    if deviation > 1e-12 * h.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

pub fn hermitian_eigenvalues(h: &DenseMatrix, tol: f64) -> Result<Spectrum> {
    hermitian_eigen_impl(h, tol, false).map(|(s, _)| s)
}

/// Eigenvalues together with unit eigenvectors (as columns, in the same order).
pub fn hermitian_eigen(h: &DenseMatrix, tol: f64) -> Result<(Spectrum, DenseMatrix)> {
    hermitian_eigen_impl(h, tol, true).map(|(s, v)| (s, v.expect("vectors requested")))
}

fn hermitian_eigen_impl(
    h: &DenseMatrix,
    tol: f64,
    want_vectors: bool,
) -> Result<(Spectrum, Option<DenseMatrix>)> {
    check_hermitian(h)?;
    let n = h.rows();
    let mut a: Vec<Vec<Complex64>> = (0..n).map(|i| h.row(i).to_vec()).collect();
    // Exact Hermitian symmetry from the upper triangle.
    for i in 0..n {
        a[i][i] = Complex64::new(a[i][i].re, 0.0);
        for j in (i + 1)..n {
            a[j][i] = a[i][j].conj();
        }
    }
    let mut v = want_vectors.then(|| DenseMatrix::identity(n));
    let scale = h.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if scale == 0.0 || off_diagonal_norm(&a) <= tol * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                let r = apq.norm();
                if r == 0.0 || r <= 1e-300 {
                    continue;
                }
                // Phase step: conj(P) A P with P = diag(.., e^{-i phi} at q, ..).
                let phase = apq / r;
                let pc = phase.conj();
                for row in a.iter_mut() {
                    row[q] *= pc;
                }
                for x in a[q].iter_mut() {
                    *x *= phase;
                }
                a[q][q] = Complex64::new(a[q][q].re, 0.0);
                if let Some(v) = v.as_mut() {
                    v.scale_column(q, pc);
                }

                // Real rotation annihilating the now-real (p, q) entry.
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (xp, xq) = (row[p], row[q]);
                    row[p] = xp * c - xq * s;
                    row[q] = xp * s + xq * c;
                }
                for k in 0..n {
                    let (xp, xq) = (a[p][k], a[q][k]);
                    a[p][k] = xp * c - xq * s;
                    a[q][k] = xp * s + xq * c;
                }
                a[p][q] = Complex64::new(0.0, 0.0);
                a[q][p] = Complex64::new(0.0, 0.0);
                a[p][p] = Complex64::new(app - t * r, 0.0);
                a[q][q] = Complex64::new(aqq + t * r, 0.0);
                if let Some(v) = v.as_mut() {
                    for i in 0..n {
                        let (xp, xq) = (v[(i, p)], v[(i, q)]);
                        v[(i, p)] = xp * c - xq * s;
                        v[(i, q)] = xp * s + xq * c;
                    }
                }
            }
        }
    }

    let mut max_off: f64 = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                max_off = max_off.max(x.norm());
            }
        }
    }
    let residual = if scale == 0.0 { 0.0 } else { max_off / scale };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].re.total_cmp(&a[i][i].re).then(i.cmp(&j)));
    let eigenvalues = order.iter().map(|&i| a[i][i].re).collect();
    let vectors = v.map(|v| {
        let mut sorted = DenseMatrix::zeros(n, n);
        for (dst, &src) in order.iter().enumerate() {
            for i in 0..n {
                sorted[(i, dst)] = v[(i, src)];
            }
        }
        sorted
    });
    Ok((
        Spectrum {
            eigenvalues,
            residual,
        },
        vectors,
    ))
}

fn off_diagonal_norm(a: &[Vec<Complex64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x.norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Singular values (descending) by one-sided Jacobi on the columns.
///
/// Returns `cols` values; when `cols > rows` the trailing ones are
/// numerically zero. Small singular values carry absolute error on the order
/// of machine epsilon times the largest one.
pub fn singular_values(a: &DenseMatrix) -> Vec<f64> {
    let (m, n) = (a.rows(), a.cols());
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j)).collect();
    const EPS: f64 = 1e-15;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: Complex64 = cols[p]
                    .iter()
                    .zip(&cols[q])
                    .map(|(x, y)| x.conj() * y)
                    .sum();
                let g = gamma.norm();
                if g == 0.0 || g <= EPS * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let pc = (gamma / g).conj();
                for z in cols[q].iter_mut() {
                    *z *= pc;
                }
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for r in 0..m {
                    let (xp, xq) = (cols[p][r], cols[q][r]);
                    cols[p][r] = xp * c - xq * s;
                    cols[q][r] = xp * s + xq * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}
