//! Identities tying real equiangular tight frames to their graphs.

use std::ops::RangeInclusive;

use super::{clique_number, graph_from_seidel, seidel_from_gram, SeidelMatrix, SimpleGraph};
use crate::certification::{
    max_over_disjoint_pairs, ric_exact, EnumOptions, Extremum, PairExtremum,
};
use crate::constructions::Frame;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, trace_power, DEFAULT_TOL};

/// Default node budget for clique searches run by these checks.
pub const CLIQUE_BUDGET: u64 = 50_000_000;

/// Default cap on `|Kset|^{2q}` in the trace expansion.
pub const TUPLE_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CliqueRicCheck {
    pub k: usize,
    pub omega: usize,
    pub mu: f64,
    pub delta: Extremum,
    /// `(K - 1) mu`
    pub predicted: f64,
    /// Frame columns forming a clique of size `K` in the joined graph.
    pub clique: Vec<usize>,
    /// Spectral norm of the hollow sub-Gram on `clique`.
    pub clique_norm: f64,
    pub holds: bool,
}

/// Checks `delta_K = (K - 1) mu` for `K <= omega(G) + 1`.
///
/// `g` is the graph left after removing the universal vertex `anchor` from
/// the graph of the canonically flipped frame; its vertex `v` is frame column
/// `v` below the anchor and `v + 1` above it.
pub fn clique_ric_identity(
    f: &Frame,
    g: &SimpleGraph,
    anchor: usize,
    k: usize,
    opts: &EnumOptions,
) -> Result<CliqueRicCheck> {
    if g.n() + 1 != f.n() || anchor >= f.n() {
        return Err(Error::Precondition(format!(
            "graph on {} vertices with anchor {anchor} does not match {} columns",
            g.n(),
            f.n()
        )));
    }
    let search = clique_number(g, CLIQUE_BUDGET);
    if !search.exact {
        return Err(Error::Precondition(format!(
            "clique search exceeded {CLIQUE_BUDGET} nodes"
        )));
    }
    let omega = search.size;
    if k < 2 || k > omega + 1 {
        return Err(Error::Precondition(format!(
            "need 2 <= K <= omega + 1 = {}, got {k}",
            omega + 1
        )));
    }
    let (_, mu) = seidel_from_gram(f, 1e-9)?;
    let delta = ric_exact(f, k, opts)?;
    let predicted = (k - 1) as f64 * mu;
    let mut clique: Vec<usize> = search.witness[..k - 1]
        .iter()
        .map(|&v| if v < anchor { v } else { v + 1 })
        .collect();
    clique.push(anchor);
    clique.sort_unstable();
    let h = f.gram().principal_submatrix(&clique).minus_identity();
    let clique_norm = hermitian_eigenvalues(&h, DEFAULT_TOL)?.max_abs();
    let holds = (delta.value - predicted).abs() <= 1e-9 && (clique_norm - predicted).abs() <= 1e-9;
    Ok(CliqueRicCheck {
        k,
        omega,
        mu,
        delta,
        predicted,
        clique,
        clique_norm,
        holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingCheck {
    /// Ordered adjacent pairs `(i, j)` with `i` in `I`, `j` in `J`.
    pub edges: usize,
    /// `|E(I, J) - (d/n)|I||J||`
    pub lhs: f64,
    /// `lambda sqrt(|I||J|)`
    pub rhs: f64,
    /// Largest magnitude among the non-principal adjacency eigenvalues.
    pub lambda: f64,
    pub holds: bool,
}

pub fn expander_mixing_check(
    g: &SimpleGraph,
    i_set: &[usize],
    j_set: &[usize],
) -> Result<MixingCheck> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let n = g.n();
    if i_set.iter().chain(j_set).any(|&v| v >= n) {
        return Err(Error::InvalidSelection(format!(
            "vertex out of range for a graph on {n} vertices"
        )));
    }
    let spec = hermitian_eigenvalues(&g.adjacency_matrix(), DEFAULT_TOL)?;
    // eigenvalues are sorted descending; the first is the degree
    let lambda = spec
        .eigenvalues
        .iter()
        .skip(1)
        .fold(0.0f64, |m, e| m.max(e.abs()));
    let edges = g.edges_between(i_set, j_set);
    let (a, b) = (i_set.len() as f64, j_set.len() as f64);
    let lhs = (edges as f64 - d as f64 / n as f64 * a * b).abs();
    let rhs = lambda * (a * b).sqrt();
    Ok(MixingCheck {
        edges,
        lhs,
        rhs,
        lambda,
        holds: lhs <= rhs + 1e-9,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceExpansion {
    /// `Tr[(Phi_K^* Phi_K - I)^{2q}]` by matrix powers.
    pub direct: f64,
    /// `mu^{2q}` times the signed tuple sum.
    pub expansion: f64,
    /// Sum over closed walks with distinct consecutive indices of the Seidel sign products.
    pub tuple_sum: i64,
    pub tuples: u128,
    /// For `q = 2`: walks with `k_2 = k_0`, and the rest.
    pub q2_split: Option<(i64, i64)>,
    pub holds: bool,
}

pub fn seidel_trace_expansion(f: &Frame, kset: &[usize], q: u32) -> Result<TraceExpansion> {
    let (s, mu) = seidel_from_gram(f, 1e-9)?;
    let k = kset.len();
    if q == 0 || k == 0 {
        return Err(Error::InvalidParameter(
            "need q >= 1 and a nonempty index set".into(),
        ));
    }
    let mut sorted = kset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k || sorted.iter().any(|&i| i >= f.n()) {
        return Err(Error::InvalidSelection(format!("bad index set {kset:?}")));
    }
    let len = 2 * q as usize;
    let count = (k as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if count > TUPLE_BUDGET {
        return Err(Error::EnumerationTooLarge {
            count,
            budget: TUPLE_BUDGET,
        });
    }
    let h = f.gram().principal_submatrix(kset).minus_identity();
    let direct = trace_power(&h, len as u32)?;

    let mut walk = vec![0usize; len];
    let mut acc = Walks {
        s: &s,
        kset,
        walk: &mut walk,
        total: 0,
        first: 0,
        tuples: 0,
    };
    acc.extend(0, 1);
    let (tuple_sum, first, tuples) = (acc.total, acc.first, acc.tuples);
    let expansion = mu.powi(len as i32) * tuple_sum as f64;
    let holds = (direct - expansion).abs()
        <= 1e-9 * direct.abs().max(expansion.abs()).max(f64::MIN_POSITIVE);
    let q2_split = (q == 2).then_some((first, tuple_sum - first));
    Ok(TraceExpansion {
        direct,
        expansion,
        tuple_sum,
        tuples,
        q2_split,
        holds,
    })
}

struct Walks<'a> {
    s: &'a SeidelMatrix,
    kset: &'a [usize],
    walk: &'a mut [usize],
    total: i64,
    first: i64,
    tuples: u128,
}

impl Walks<'_> {
    /// Fills positions `pos..` of the walk (as indices into `kset`).
    fn extend(&mut self, pos: usize, sign: i64) {
        let len = self.walk.len();
        if pos == len {
            if self.walk[len - 1] == self.walk[0] {
                return;
            }
            let closing = self
                .s
                .get(self.kset[self.walk[len - 1]], self.kset[self.walk[0]])
                as i64;
            let v = sign * closing;
            self.total += v;
            self.tuples += 1;
            if len == 4 && self.walk[2] == self.walk[0] {
                self.first += v;
            }
            return;
        }
        for c in 0..self.kset.len() {
            let step = if pos == 0 {
                1
            } else {
                if self.walk[pos - 1] == c {
                    continue;
                }
                self.s.get(self.kset[self.walk[pos - 1]], self.kset[c]) as i64
            };
            self.walk[pos] = c;
            self.extend(pos + 1, sign * step);
        }
    }
}

/// `theta_hat` through edge counts: the largest
/// `2 mu |E(I, J) - |I||J|/2| / sqrt(|I||J|)` over disjoint pairs.
pub fn fro_from_graph(f: &Frame, k: usize, opts: &EnumOptions) -> Result<PairExtremum> {
    let (s, mu) = seidel_from_gram(f, 1e-9)?;
    let g = graph_from_seidel(&s);
    let sizes: RangeInclusive<usize> = 1..=k;
    max_over_disjoint_pairs(f.n(), sizes.clone(), sizes, opts, |i, j| {
        let ab = (i.len() * j.len()) as f64;
        2.0 * mu * (g.edges_between(i, j) as f64 - ab / 2.0).abs() / ab.sqrt()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certification::fro_constant;
    use crate::constructions::{paley_etf, realify};
    use crate::graphs::{flip_canonical, join_decompose};
    use crate::linalg::DenseMatrix;

    fn real_paley(p: u64) -> Frame {
        realify(&paley_etf(p, true).unwrap(), 1e-9).unwrap()
    }

    #[test]
    fn two_column_trace() {
        let ip = -0.4f64;
        let m =
            DenseMatrix::from_rows(&[vec![1.0, ip], vec![0.0, (1.0 - ip * ip).sqrt()]]).unwrap();
        let f = Frame::new(m, "pair").unwrap();
        let t = seidel_trace_expansion(&f, &[0, 1], 1).unwrap();
        assert_eq!((t.tuples, t.tuple_sum), (2, 2));
        assert!((t.direct - 2.0 * 0.16).abs() < 1e-12);
        assert!(t.holds);
    }

    #[test]
    fn paley13_trace_expansion() {
        let f = real_paley(13);
        for q in 1..=3 {
            let t = seidel_trace_expansion(&f, &[0, 3, 7, 11], q).unwrap();
            assert!(t.holds, "q={q}: {} vs {}", t.direct, t.expansion);
        }
        let t = seidel_trace_expansion(&f, &[1, 2, 5, 9], 2).unwrap();
        assert_eq!(t.q2_split.unwrap().0, 4 * 9);
    }

    #[test]
    fn mixing_on_complete_graph() {
        let g = SimpleGraph::complete(6);
        let c = expander_mixing_check(&g, &[0, 1], &[2, 3, 4]).unwrap();
        assert!((c.lambda - 1.0).abs() < 1e-9);
        assert!(c.holds);
        let e = expander_mixing_check(&g, &[], &[1]).unwrap();
        assert_eq!((e.lhs, e.rhs), (0.0, 0.0));
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            expander_mixing_check(&path, &[0], &[1]),
            Err(Error::NotRegular)
        ));
    }

    #[test]
    fn clique_identity_on_paley13() {
        let f = real_paley(13);
        let anchor = f.n() - 1;
        let flipped = flip_canonical(&f, anchor).unwrap();
        let (s, _) = seidel_from_gram(&flipped, 1e-9).unwrap();
        let g = join_decompose(&graph_from_seidel(&s), anchor).unwrap();
        let opts = EnumOptions::default().with_workers(1);
        let omega = clique_number(&g, CLIQUE_BUDGET).size;
        for k in 2..=omega + 1 {
            let c = clique_ric_identity(&f, &g, anchor, k, &opts).unwrap();
            assert!(c.holds, "K={k}: {c:?}");
        }
        assert!(clique_ric_identity(&f, &g, anchor, omega + 2, &opts).is_err());
    }

    #[test]
    fn fro_routes_agree() {
        let f = real_paley(5);
        let opts = EnumOptions::default().with_workers(1);
        for k in 1..=2 {
            let a = fro_constant(&f, k, &opts).unwrap().value;
            let b = fro_from_graph(&f, k, &opts).unwrap().value;
            assert!((a - b).abs() < 1e-9);
        }
    }
}
