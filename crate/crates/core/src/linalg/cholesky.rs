use num_complex::Complex64;

use super::{hermitian_eigenvalues, DenseMatrix};
use crate::error::{Error, Result};

/// Lower-triangular `L` with `L L^T = G` for a real symmetric positive
/// semidefinite `G`.
///
/// The factor is built with greedy diagonal pivoting, stopping once every
/// remaining pivot is at or below `tol * ||G||`; a Householder QR of the
/// pivoted factor then restores triangular form. A rank-`r` input yields
/// exactly `r` nonzero columns, the first `r`.
pub fn semidefinite_cholesky(g: &DenseMatrix, tol: f64) -> Result<DenseMatrix> {
    if !g.is_square() {
        return Err(Error::Shape(format!(
            "expected square matrix, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    if g.max_imag() > tol * g.max_abs().max(1.0) {
        return Err(Error::Precondition("Cholesky input must be real".into()));
    }
    let real = g.real_part();
    let spectrum = hermitian_eigenvalues(&real, tol)?;
    let norm = spectrum.max_abs();
    if spectrum.min() < -tol * norm {
        return Err(Error::NotPsd {
            eigenvalue: spectrum.min(),
        });
    }

    let n = g.rows();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| real[(i, j)].re).collect())
        .collect();
    let threshold = tol * norm;
    let mut remaining: Vec<usize> = (0..n).collect();
    // rows of the pivoted factor's transpose
    let mut factor: Vec<Vec<f64>> = Vec::new();
    while !remaining.is_empty() {
        let (pos, &j) = remaining
            .iter()
            .enumerate()
            .fold((0, &remaining[0]), |best, cur| {
                if a[*cur.1][*cur.1] > a[*best.1][*best.1] {
                    cur
                } else {
                    best
                }
            });
        let d = a[j][j];
        if d <= threshold {
            break;
        }
        remaining.remove(pos);
        let root = d.sqrt();
        let mut col = vec![0.0; n];
        col[j] = root;
        for &i in &remaining {
            col[i] = a[i][j] / root;
        }
        for &i in &remaining {
            for &k in &remaining {
                a[i][k] -= col[i] * col[k];
            }
        }
        factor.push(col);
    }

    let r = upper_trapezoid(factor);
    let mut l = DenseMatrix::zeros(n, n);
    for (j, row) in r.iter().enumerate() {
        for (i, &x) in row.iter().enumerate() {
            l[(i, j)] = Complex64::new(x, 0.0);
        }
    }
    Ok(l)
}

/// `R` from a Householder QR of the `r x n` matrix `rows` (`r <= n`), with a
/// nonnegative diagonal and exact zeros below it.
fn upper_trapezoid(mut rows: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let r = rows.len();
    for k in 0..r {
        let below: f64 = (k + 1..r).map(|i| rows[i][k] * rows[i][k]).sum();
        if below > 0.0 {
            let x0 = rows[k][k];
            let len = (x0 * x0 + below).sqrt();
            let alpha = if x0 > 0.0 { -len } else { len };
            let mut v: Vec<f64> = (k..r).map(|i| rows[i][k]).collect();
            v[0] -= alpha;
            let vv: f64 = v.iter().map(|x| x * x).sum();
            for c in k..rows[0].len() {
                let dot: f64 = v
                    .iter()
                    .enumerate()
                    .map(|(t, vt)| vt * rows[k + t][c])
                    .sum();
                let s = 2.0 * dot / vv;
                for (t, vt) in v.iter().enumerate() {
                    rows[k + t][c] -= s * vt;
                }
            }
            for row in rows.iter_mut().skip(k + 1) {
                row[k] = 0.0;
            }
            rows[k][k] = alpha;
        }
        if rows[k][k] < 0.0 {
            for x in rows[k].iter_mut() {
                *x = -*x;
            }
        }
    }
    rows
}
