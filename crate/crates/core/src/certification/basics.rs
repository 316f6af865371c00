use crate::constructions::Frame;
use crate::error::{Error, Result};

/// Worst-case coherence: `max_{i != j} |<phi_i, phi_j>|`.
pub fn coherence(f: &Frame) -> Result<f64> {
    let n = f.n();
    if n < 2 {
        return Err(Error::UndefinedCoherence(n));
    }
    let g = f.gram();
    let mut mu: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            mu = mu.max(g[(i, j)].norm());
        }
    }
    Ok(mu)
}

/// `sqrt((N - M) / (M (N - 1)))`; zero for square frames.
pub fn welch_bound(m: usize, n: usize) -> Result<f64> {
    if m == 0 || n < m {
        return Err(Error::InvalidParameter(format!(
            "Welch bound needs N >= M >= 1, got M={m}, N={n}"
        )));
    }
    if n == m {
        return Ok(0.0);
    }
    let (m, n) = (m as f64, n as f64);
    Ok(((n - m) / (m * (n - 1.0))).sqrt())
}

/// Measured deviations for the three equiangular tight frame axioms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtfAxioms {
    pub tol: f64,
    /// `max |‖phi_n‖² - 1|`
    pub unit_norm_dev: f64,
    /// `max |(Phi Phi^* - (N/M) I)_{ij}|`
    pub tightness_dev: f64,
    /// Spread of off-diagonal Gram magnitudes (max minus min).
    pub equiangular_spread: f64,
}

impl EtfAxioms {
    pub fn unit_norm(&self) -> bool {
        self.unit_norm_dev <= self.tol
    }

    pub fn tight(&self) -> bool {
        self.tightness_dev <= self.tol
    }

    pub fn equiangular(&self) -> bool {
        self.equiangular_spread <= self.tol
    }

    pub fn all(&self) -> bool {
        self.unit_norm() && self.tight() && self.equiangular()
    }
}

pub fn verify_etf(f: &Frame, tol: f64) -> EtfAxioms {
    let (m, n) = (f.m(), f.n());
    let phi = f.matrix();
    let ffh = phi.matmul(&phi.adjoint()).expect("conformable");
    let ratio = n as f64 / m as f64;
    let mut tightness_dev: f64 = 0.0;
    for i in 0..m {
        for j in 0..m {
            let target = if i == j { ratio } else { 0.0 };
            tightness_dev = tightness_dev.max((ffh[(i, j)] - target).norm());
        }
    }
    let g = f.gram();
    let unit_norm_dev = (0..n).fold(0.0f64, |d, j| d.max((g[(j, j)].re - 1.0).abs()));
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for i in 0..n {
        for j in (i + 1)..n {
            let a = g[(i, j)].norm();
            lo = lo.min(a);
            hi = hi.max(a);
        }
    }
    let equiangular_spread = if n < 2 { 0.0 } else { hi - lo };
    EtfAxioms {
        tol,
        unit_norm_dev,
        tightness_dev,
        equiangular_spread,
    }
}

/// `max_n |‖phi_n‖² - 1|`.
pub fn delta1(f: &Frame) -> f64 {
    let g = f.gram();
    (0..f.n()).fold(0.0, |d, j| d.max((g[(j, j)].re - 1.0).abs()))
}

/// `(K - 1) mu`, valid for unit-norm columns.
pub fn gershgorin_bound(f: &Frame, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidParameter("K must be at least 1".into()));
    }
    let d1 = delta1(f);
    if d1 > 1e-9 {
        return Err(Error::Precondition(format!(
            "Gershgorin bound needs unit-norm columns (delta_1 = {d1:e})"
        )));
    }
    if k == 1 {
        return Ok(0.0);
    }
    Ok((k - 1) as f64 * coherence(f)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gaussian_matrix, paley_etf};
    use crate::linalg::DenseMatrix;

    #[test]
    fn welch_values() {
        assert!((welch_bound(6, 16).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((welch_bound(3, 6).unwrap() - 0.2f64.sqrt()).abs() < 1e-15);
        assert_eq!(welch_bound(4, 4).unwrap(), 0.0);
        assert!(welch_bound(5, 4).is_err());
    }

    #[test]
    fn identity_frame() {
        let f = Frame::new(DenseMatrix::identity(4), "id").unwrap();
        assert_eq!(coherence(&f).unwrap(), 0.0);
        let ax = verify_etf(&f, 1e-12);
        assert!(ax.all());
        assert_eq!(delta1(&f), 0.0);
        let single = Frame::new(DenseMatrix::identity(1), "e").unwrap();
        assert!(matches!(
            coherence(&single),
            Err(Error::UndefinedCoherence(1))
        ));
    }

    #[test]
    fn gaussian_is_not_equiangular() {
        let ax = verify_etf(&gaussian_matrix(10, 20, 3), 1e-12);
        assert!(!ax.equiangular());
        assert!(!ax.unit_norm());
    }

    #[test]
    fn delta1_examples() {
        let mut m = DenseMatrix::identity(3);
        m[(1, 1)].re = 2.0;
        assert!((delta1(&Frame::new(m, "scaled").unwrap()) - 3.0).abs() < 1e-15);
        let d = delta1(&gaussian_matrix(100, 50, 9));
        assert!(d > 0.0 && d <= 0.6, "delta_1 = {d}");
    }

    #[test]
    fn gershgorin_precondition() {
        let f = gaussian_matrix(6, 8, 1);
        assert!(matches!(
            gershgorin_bound(&f, 2),
            Err(Error::Precondition(_))
        ));
        let p = paley_etf(5, true).unwrap();
        assert_eq!(gershgorin_bound(&p, 1).unwrap(), 0.0);
        assert!((gershgorin_bound(&p, 3).unwrap() - 2.0 / 5f64.sqrt()).abs() < 1e-12);
    }
}
