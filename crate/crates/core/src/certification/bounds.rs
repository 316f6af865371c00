use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Constant in the flat-to-restricted orthogonality bound, with natural log.
pub const FRO_CONSTANT: f64 = 75.0;

/// The value `C = 4C'` as printed alongside the appendix constants.
pub const QUOTED_APPENDIX_CONSTANT: f64 = 74.17;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FroMode {
    /// `75 theta_hat ln K`
    Simple,
    /// Recomputes the proof constants for the given `K`.
    Appendix,
}

impl fmt::Display for FroMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FroMode::Simple => "simple",
            FroMode::Appendix => "appendix",
        })
    }
}

impl FromStr for FroMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple" => Ok(FroMode::Simple),
            "appendix" => Ok(FroMode::Appendix),
            other => Err(Error::InvalidParameter(format!(
                "unknown bound mode '{other}'"
            ))),
        }
    }
}

/// Upper bound on `theta_K` from `theta_hat`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FroBound {
    pub mode: FroMode,
    pub value: f64,
    /// Appendix mode: the block count `t`.
    pub t: Option<u32>,
    /// Appendix mode: `4 theta_hat (t + 1/ln 2 + 1/((2 ln 2)^2 t))`, the bound
    /// for nonnegative unit-norm coefficients.
    pub per_quadrant: Option<f64>,
    /// Appendix mode: `16 * per_quadrant`, summing the sixteen sign/phase
    /// quadrant pairs by the triangle inequality alone.
    pub triangle_only: Option<f64>,
}

/// `C_0 = 4 / ln 2`.
pub fn appendix_c0() -> f64 {
    4.0 / LN_2
}

/// `C_1 = 4 (1 + 1/ln 2 + 1/(2 ln 2)^2)`.
pub fn appendix_c1() -> f64 {
    4.0 * (1.0 + 1.0 / LN_2 + 1.0 / (2.0 * LN_2).powi(2))
}

/// `4 (C_0 + C_1 / ln 2)` evaluated directly.
pub fn appendix_c() -> f64 {
    4.0 * (appendix_c0() + appendix_c1() / LN_2)
}

/// Smallest positive integer `t` with `sqrt(K) 2^{-t} <= t^{-1/2} / (2 ln 2)`.
pub fn appendix_t(k: usize) -> u32 {
    let sk = (k as f64).sqrt();
    let mut t = 1u32;
    while sk * (-(t as f64)).exp2() > (t as f64).powf(-0.5) / (2.0 * LN_2) {
        t += 1;
    }
    t
}

pub fn fro_to_ro_bound(k: usize, theta_hat: f64, mode: FroMode) -> Result<FroBound> {
    if k < 2 {
        return Err(Error::BoundVacuous(format!("ln K vanishes at K = {k}")));
    }
    if !(theta_hat >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "theta_hat must be nonnegative, got {theta_hat}"
        )));
    }
    Ok(match mode {
        FroMode::Simple => FroBound {
            mode,
            value: FRO_CONSTANT * theta_hat * (k as f64).ln(),
            t: None,
            per_quadrant: None,
            triangle_only: None,
        },
        FroMode::Appendix => {
            let t = appendix_t(k);
            let tf = t as f64;
            let per = 4.0 * theta_hat * (tf + 1.0 / LN_2 + 1.0 / ((2.0 * LN_2).powi(2) * tf));
            // the quadrant norms satisfy sum_k ‖x_k‖ <= 2‖x‖ by Cauchy-Schwarz
            FroBound {
                mode,
                value: 4.0 * per,
                t: Some(t),
                per_quadrant: Some(per),
                triangle_only: Some(16.0 * per),
            }
        }
    })
}

/// `2 theta_K + delta_1`, a bound on `delta_{2K}`.
pub fn ro_to_rip_bound(theta_k: f64, delta_1: f64) -> f64 {
    2.0 * theta_k + delta_1
}

/// `[K, ceil(K/2), ceil(K/4), ..., 1]`.
pub fn halving_chain(k: usize) -> Vec<usize> {
    let mut chain = vec![k.max(1)];
    while *chain.last().expect("nonempty") > 1 {
        let last = *chain.last().expect("nonempty");
        chain.push(last.div_ceil(2));
    }
    chain
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IteratedBound {
    /// `theta_K + theta_{ceil(K/2)} + ... + theta_1 + delta_1`
    pub sum: f64,
    /// `(1 + ceil(log2 K)) theta_K + delta_1`
    pub closed_form: f64,
    pub terms: usize,
}

/// Iterated restricted-orthogonality bound on `delta_{2K}` from
/// `(level, theta_level)` pairs following [`halving_chain`].
pub fn iterated_ro_bound(thetas: &[(usize, f64)], delta_1: f64) -> Result<IteratedBound> {
    let Some(&(k, theta_k)) = thetas.first() else {
        return Err(Error::Chain("empty chain".into()));
    };
    let expected = halving_chain(k);
    let levels: Vec<usize> = thetas.iter().map(|&(l, _)| l).collect();
    if k == 0 || levels != expected {
        return Err(Error::Chain(format!(
            "levels {levels:?} do not halve from K = {k}; expected {expected:?}"
        )));
    }
    let sum = thetas.iter().map(|&(_, t)| t).sum::<f64>() + delta_1;
    let log2k = (usize::BITS - (k - 1).leading_zeros()) as f64;
    let closed_form = (1.0 + log2k) * theta_k + delta_1;
    Ok(IteratedBound {
        sum,
        closed_form,
        terms: thetas.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appendix_constants_to_two_decimals() {
        assert_eq!(format!("{:.2}", appendix_c0()), "5.77");
        assert_eq!(format!("{:.2}", appendix_c1()), "11.85");
        // the quoted 74.17 is not what the formula gives
        assert_eq!(format!("{:.2}", appendix_c()), "91.48");
    }

    #[test]
    fn simple_mode() {
        let b = fro_to_ro_bound(3, 1.0, FroMode::Simple).unwrap();
        assert!((b.value - 75.0 * 3f64.ln()).abs() < 1e-12);
        assert!((b.value - 82.4).abs() < 0.05);
        assert!(matches!(
            fro_to_ro_bound(1, 1.0, FroMode::Simple),
            Err(Error::BoundVacuous(_))
        ));
    }

    #[test]
    fn t_selection_within_ceil_log2() {
        assert_eq!(appendix_t(4), 2);
        for k in 2..=4096usize {
            let t = appendix_t(k);
            let ceil_log2 = usize::BITS - (k - 1).leading_zeros();
            assert!(t <= ceil_log2, "K={k}: t={t}");
            // minimality
            if t > 1 {
                let s = (t - 1) as f64;
                assert!((k as f64).sqrt() * (-s).exp2() > s.powf(-0.5) / (2.0 * LN_2));
            }
        }
    }

    #[test]
    fn appendix_mode_value() {
        let b = fro_to_ro_bound(4, 0.5, FroMode::Appendix).unwrap();
        let per = 2.0 * (2.0 + 1.0 / LN_2 + 1.0 / (8.0 * LN_2 * LN_2));
        assert!((b.per_quadrant.unwrap() - per).abs() < 1e-12);
        assert!((b.value - 4.0 * per).abs() < 1e-12);
        assert!((b.triangle_only.unwrap() - 16.0 * per).abs() < 1e-12);
    }

    #[test]
    fn chains() {
        assert_eq!(halving_chain(4), vec![4, 2, 1]);
        assert_eq!(halving_chain(5), vec![5, 3, 2, 1]);
        assert_eq!(halving_chain(1), vec![1]);
        let zero = iterated_ro_bound(&[(4, 0.0), (2, 0.0), (1, 0.0)], 0.0).unwrap();
        assert_eq!((zero.sum, zero.closed_form), (0.0, 0.0));
        let th = 0.2;
        let b = iterated_ro_bound(&[(4, th), (2, th), (1, th)], 0.1).unwrap();
        assert_eq!(b.terms, 3);
        assert!((b.sum - (3.0 * th + 0.1)).abs() < 1e-15);
        assert!((b.closed_form - (3.0 * th + 0.1)).abs() < 1e-15);
        assert!(matches!(
            iterated_ro_bound(&[(4, th), (1, th)], 0.0),
            Err(Error::Chain(_))
        ));
        assert!(matches!(iterated_ro_bound(&[], 0.0), Err(Error::Chain(_))));
        for k in 1..200 {
            let log2k = (usize::BITS - (k - 1usize).leading_zeros()) as usize;
            assert_eq!(halving_chain(k).len(), 1 + log2k);
        }
    }

    #[test]
    fn ro_to_rip() {
        assert_eq!(ro_to_rip_bound(0.0, 0.0), 0.0);
        assert_eq!(ro_to_rip_bound(0.25, 0.0), 0.5);
    }
}
