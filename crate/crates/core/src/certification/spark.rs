use std::fmt;

use super::EnumOptions;
use crate::constructions::Frame;
use crate::enumerate::{binomial, next_subset, unrank};
use crate::error::{Error, Result};
use crate::linalg::{singular_values, submatrix_columns};
use crate::parallel::run_chunks;

#[derive(Debug, Clone, PartialEq)]
pub enum SparkResult {
    /// Smallest dependent set and the lexicographically first witness.
    Exact {
        spark: usize,
        witness: Vec<usize>,
        evaluated: u128,
    },
    /// No dependent set of size `<= cap`.
    Exceeds { cap: usize, evaluated: u128 },
}

impl SparkResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            SparkResult::Exact { spark, .. } => Some(*spark),
            SparkResult::Exceeds { .. } => None,
        }
    }

    pub fn evaluated(&self) -> u128 {
        match self {
            SparkResult::Exact { evaluated, .. } | SparkResult::Exceeds { evaluated, .. } => {
                *evaluated
            }
        }
    }
}

impl fmt::Display for SparkResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SparkResult::Exact { spark, .. } => write!(f, "{spark}"),
            SparkResult::Exceeds { cap, .. } => write!(f, "> {cap}"),
        }
    }
}

/// Columns `S` are dependent when `sigma_min(Phi_S) <= tol * sigma_max(Phi_S)`.
fn dependent(f: &Frame, s: &[usize], tol: f64) -> bool {
    let sub = submatrix_columns(f.matrix(), s).expect("valid selection");
    if s.len() > sub.rows() {
        return true;
    }
    let sv = singular_values(&sub);
    let (hi, lo) = (sv[0], *sv.last().expect("nonempty"));
    lo <= tol * hi
}

/// Smallest number of linearly dependent columns, searched up to `cap`.
///
/// `evaluated` counts every subset of the smaller sizes plus those of the
/// final size up to and including the witness.
pub fn spark(f: &Frame, cap: usize, tol: f64, opts: &EnumOptions) -> Result<SparkResult> {
    let n = f.n();
    if cap == 0 || cap > n {
        return Err(Error::InvalidParameter(format!(
            "spark cap must satisfy 1 <= cap <= N = {n}, got {cap}"
        )));
    }
    let mut evaluated: u128 = 0;
    for s in 1..=cap {
        let total = binomial(n, s);
        let needed = evaluated.saturating_add(total);
        if needed > opts.budget {
            return Err(Error::EnumerationTooLarge {
                count: needed,
                budget: opts.budget,
            });
        }
        let parts = run_chunks(total, opts.workers, |start, end| {
            let mut subset = unrank(n, s, start);
            for r in start..end {
                if dependent(f, &subset, tol) {
                    return Some((r, subset));
                }
                if r + 1 < end {
                    next_subset(&mut subset, n);
                }
            }
            None
        });
        if let Some((rank, witness)) = parts.into_iter().flatten().next() {
            return Ok(SparkResult::Exact {
                spark: s,
                witness,
                evaluated: evaluated + rank + 1,
            });
        }
        evaluated += total;
    }
    Ok(SparkResult::Exceeds { cap, evaluated })
}
