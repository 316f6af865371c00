use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HadamardKind {
    /// Real +-1 Sylvester matrix, order a power of two.
    Sylvester,
    /// Unnormalised DFT matrix, any order.
    Dft,
}

impl fmt::Display for HadamardKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HadamardKind::Sylvester => "sylvester",
            HadamardKind::Dft => "dft",
        })
    }
}

impl FromStr for HadamardKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sylvester" => Ok(HadamardKind::Sylvester),
            "dft" => Ok(HadamardKind::Dft),
            other => Err(Error::InvalidParameter(format!(
                "unknown Hadamard kind '{other}'"
            ))),
        }
    }
}

/// `n x n` matrix with unit-modulus entries and `H^* H = n I`.
pub fn hadamard(n: usize, kind: HadamardKind) -> Result<DenseMatrix> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "Hadamard order must be positive".into(),
        ));
    }
    match kind {
        HadamardKind::Sylvester => {
            if !n.is_power_of_two() {
                return Err(Error::InvalidParameter(format!(
                    "Sylvester Hadamard order must be a power of two, got {n}"
                )));
            }
            let mut h = DenseMatrix::from_real(1, 1, &[1.0])?;
            let mut size = 1;
            while size < n {
                let mut next = DenseMatrix::zeros(2 * size, 2 * size);
                for i in 0..size {
                    for j in 0..size {
                        let x = h[(i, j)];
                        next[(i, j)] = x;
                        next[(i, j + size)] = x;
                        next[(i + size, j)] = x;
                        next[(i + size, j + size)] = -x;
                    }
                }
                h = next;
                size *= 2;
            }
            Ok(h)
        }
        HadamardKind::Dft => {
            let mut h = DenseMatrix::zeros(n, n);
            for j in 0..n {
                for k in 0..n {
                    // reduce jk mod n first so the phase stays accurate
                    let e = (j * k) % n;
                    h[(j, k)] = Complex64::from_polar(1.0, -2.0 * PI * e as f64 / n as f64);
                }
            }
            Ok(h)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_hadamard(h: &DenseMatrix) -> bool {
        let n = h.rows();
        let ok_modulus = h.entries().iter().all(|z| (z.norm() - 1.0).abs() < 1e-12);
        let hh = h.adjoint().matmul(h).unwrap();
        let ok_orth = (0..n).all(|i| {
            (0..n).all(|j| {
                let target = if i == j { n as f64 } else { 0.0 };
                (hh[(i, j)] - target).norm() < 1e-12
            })
        });
        ok_modulus && ok_orth
    }

    #[test]
    fn sylvester_four_matches_printed() {
        let h = hadamard(4, HadamardKind::Sylvester).unwrap();
        let printed = DenseMatrix::from_rows(&[
            vec![1., 1., 1., 1.],
            vec![1., -1., 1., -1.],
            vec![1., 1., -1., -1.],
            vec![1., -1., -1., 1.],
        ])
        .unwrap();
        assert_eq!(h, printed);
        assert!(is_hadamard(&h));
    }

    #[test]
    fn order_one_and_dft() {
        for kind in [HadamardKind::Sylvester, HadamardKind::Dft] {
            assert_eq!(hadamard(1, kind).unwrap(), DenseMatrix::identity(1));
        }
        for n in [2, 3, 5, 7, 9] {
            assert!(
                is_hadamard(&hadamard(n, HadamardKind::Dft).unwrap()),
                "n = {n}"
            );
        }
        assert!(is_hadamard(&hadamard(16, HadamardKind::Sylvester).unwrap()));
        assert!(hadamard(6, HadamardKind::Sylvester).is_err());
    }
}
