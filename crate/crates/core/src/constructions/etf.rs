use std::f64::consts::PI;

use num_complex::Complex64;

use super::{incidence_matrix, Frame, SteinerSystem};
use crate::error::{Error, Result};
use crate::graphs::{is_prime, quadratic_residues};
use crate::linalg::{semidefinite_cholesky, DenseMatrix};

/// Rows of `L^T` with norm at or below this are dropped by [`realify`].
const ZERO_ROW: f64 = 1e-9;

/// Steiner equiangular tight frame from a (2, k, v) system and a Hadamard
/// matrix of order `1 + (v-1)/(k-1)`.
///
/// For each point `j`, the `r = (v-1)/(k-1)` blocks containing it receive
/// rows `1..=r` of `H` (zero-based; the all-ones row 0 is never used) in
/// increasing block order. The result is scaled by `sqrt((k-1)/(v-1))`.
pub fn steiner_etf(s: &SteinerSystem, h: &DenseMatrix) -> Result<Frame> {
    let r = s.replication();
    let order = r + 1;
    if h.rows() != order || h.cols() != order {
        return Err(Error::Dimension(format!(
            "a (2,{},{}) system needs a {order}x{order} Hadamard matrix, got {}x{}",
            s.k(),
            s.v(),
            h.rows(),
            h.cols()
        )));
    }
    let a = incidence_matrix(s);
    let rows = a.rows();
    let scale = ((s.k() - 1) as f64 / (s.v() - 1) as f64).sqrt();
    let mut phi = DenseMatrix::zeros(rows, s.v() * order);
    for j in 0..s.v() {
        let ones = (0..rows).filter(|&i| a[(i, j)].re == 1.0);
        for (m, i) in ones.enumerate() {
            for c in 0..order {
                phi[(i, j * order + c)] = h[(m + 1, c)] * scale;
            }
        }
    }
    Frame::new(phi, format!("steiner(v={},k={})", s.v(), s.k()))
}

/// The `(p+1)/2 x (p+1)` Paley frame: quadratic-residue rows of the DFT
/// (zero included, increasing residue order), reweighted by `D`, followed by
/// the zeroth identity basis vector.
pub fn paley_etf(p: u64, require_1mod4: bool) -> Result<Frame> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!(
            "Paley frames need an odd prime, got {p}"
        )));
    }
    if require_1mod4 && p % 4 != 1 {
        return Err(Error::Congruence(format!("p = {p} is not 1 mod 4")));
    }
    let residues = quadratic_residues(p);
    let m = residues.len();
    let pu = p as usize;
    let mut phi = DenseMatrix::zeros(m, pu + 1);
    let pf = p as f64;
    for (row, &q) in residues.iter().enumerate() {
        let weight = if q == 0 {
            pf.powf(-0.5)
        } else {
            (2.0 / pf).sqrt()
        };
        for n in 0..p {
            let e = (q * n) % p;
            phi[(row, n as usize)] = Complex64::from_polar(weight, -2.0 * PI * e as f64 / pf);
        }
    }
    phi[(0, pu)] = Complex64::new(1.0, 0.0);
    Frame::new(phi, format!("paley(p={p})"))
}

/// A real frame with the same Gram matrix: the nonzero rows of `L^T` where
/// `Re(Phi^* Phi) = L L^T`.
pub fn realify(f: &Frame, tol: f64) -> Result<Frame> {
    let g = f.gram();
    let max_imag = g.max_imag();
    if max_imag > tol {
        return Err(Error::NotRealizable { max_imag });
    }
    let l = semidefinite_cholesky(&g.real_part(), tol)?;
    let lt = l.adjoint();
    let keep: Vec<usize> = (0..lt.rows())
        .filter(|&i| lt.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt() > ZERO_ROW)
        .collect();
    let cols: Vec<usize> = (0..lt.cols()).collect();
    Frame::new(lt.block(&keep, &cols), format!("real({})", f.label()))
}
