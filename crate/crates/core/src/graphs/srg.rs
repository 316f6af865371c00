use std::fmt;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Parameters `srg(v, k, lambda, mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// The counting identity `k(k - lambda - 1) = (v - k - 1) mu`.
    pub fn is_feasible(&self) -> bool {
        let lhs = self.k as i64 * (self.k as i64 - self.lambda as i64 - 1);
        let rhs = (self.v as i64 - self.k as i64 - 1) * self.mu as i64;
        lhs == rhs
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "srg({}, {}, {}, {})",
            self.v, self.k, self.lambda, self.mu
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrgOutcome {
    Srg(SrgParams),
    /// Complete or edgeless regular graph: `lambda` (no adjacent pairs) or
    /// `mu` (no non-adjacent pairs) is undefined.
    Degenerate {
        v: usize,
        k: usize,
        lambda: Option<usize>,
        mu: Option<usize>,
    },
    NotSrg(String),
}

impl SrgOutcome {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgOutcome::Srg(p) => Some(*p),
            _ => None,
        }
    }
}

impl fmt::Display for SrgOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: &Option<usize>| x.map_or("undefined".to_string(), |v| v.to_string());
        match self {
            SrgOutcome::Srg(p) => write!(f, "{p}"),
            SrgOutcome::Degenerate { v, k, lambda, mu } => {
                write!(
                    f,
                    "degenerate(v={v}, k={k}, lambda={}, mu={})",
                    opt(lambda),
                    opt(mu)
                )
            }
            SrgOutcome::NotSrg(why) => write!(f, "not-srg: {why}"),
        }
    }
}

/// Exhaustive common-neighbour count over all vertex pairs.
pub fn srg_check(g: &SimpleGraph) -> SrgOutcome {
    let v = g.n();
    let Some(k) = g.regular_degree() else {
        return SrgOutcome::NotSrg("not regular".into());
    };
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for i in 0..v {
        for j in (i + 1)..v {
            let c = g.common_neighbors(i, j);
            let slot = if g.has_edge(i, j) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => {
                    let kind = if g.has_edge(i, j) {
                        "adjacent"
                    } else {
                        "non-adjacent"
                    };
                    return SrgOutcome::NotSrg(format!(
                        "{kind} pairs have {prev} and {c} common neighbours"
                    ));
                }
                Some(_) => {}
            }
        }
    }
    match (lambda, mu) {
        (Some(lambda), Some(mu)) => SrgOutcome::Srg(SrgParams { v, k, lambda, mu }),
        _ => SrgOutcome::Degenerate { v, k, lambda, mu },
    }
}

fn integral(x: f64, what: &str) -> Result<usize> {
    let r = x.round();
    if (x - r).abs() > 1e-9 || r < 0.0 {
        return Err(Error::InfeasibleSize(format!(
            "{what} = {x} is not a nonnegative integer"
        )));
    }
    Ok(r as usize)
}

/// Parameters of the strongly regular graph attached to a real `M x N`
/// equiangular tight frame with `N > M + 1`.
pub fn predicted_srg(m: usize, n: usize) -> Result<SrgParams> {
    if n <= m + 1 {
        return Err(Error::InfeasibleSize(format!(
            "need N > M + 1, got M={m}, N={n}"
        )));
    }
    let (mf, nf) = (m as f64, n as f64);
    let l = nf / 2.0 - 1.0 + (1.0 - nf / (2.0 * mf)) * (mf * (nf - 1.0) / (nf - mf)).sqrt();
    let k = integral(l, "L")?;
    let lambda = integral((3.0 * l - nf) / 2.0, "(3L - N)/2")?;
    let mu = integral(l / 2.0, "L/2")?;
    Ok(SrgParams {
        v: n - 1,
        k,
        lambda,
        mu,
    })
}

/// Removes a universal vertex, returning the graph it was joined to.
pub fn join_decompose(g: &SimpleGraph, vertex: usize) -> Result<SimpleGraph> {
    if vertex >= g.n() {
        return Err(Error::InvalidSelection(format!(
            "vertex {vertex} out of range"
        )));
    }
    if g.degree(vertex) != g.n() - 1 {
        return Err(Error::NotAJoin(vertex));
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&i| i != vertex).collect();
    Ok(g.induced(&rest))
}
