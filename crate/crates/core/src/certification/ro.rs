use std::ops::RangeInclusive;

use num_complex::Complex64;

use super::{EnumOptions, PairExtremum};
use crate::constructions::Frame;
use crate::enumerate::{binomial, next_subset, unrank};
use crate::error::{Error, Result};
use crate::linalg::operator_norm;
use crate::parallel::run_chunks;

/// Number of unordered disjoint pairs `(I, J)` with `|I|` in `left`,
/// `|J|` in `right`, and `min(I ∪ J)` in `I`. Saturates at `u128::MAX`.
pub fn disjoint_pair_count(
    n: usize,
    left: &RangeInclusive<usize>,
    right: &RangeInclusive<usize>,
) -> u128 {
    let mut total: u128 = 0;
    for a in left.clone().filter(|&a| a >= 1) {
        for m in 0..n {
            // I = {m} plus a-1 elements above m; J drawn from the rest above m
            let anchors = binomial(n - m - 1, a - 1);
            if anchors == 0 || n < m + a {
                continue;
            }
            let pool = n - m - a;
            let js: u128 = right
                .clone()
                .filter(|&b| b >= 1)
                .map(|b| binomial(pool, b))
                .fold(0u128, |s, c| s.saturating_add(c));
            total = total.saturating_add(anchors.saturating_mul(js));
        }
    }
    total
}

/// Maximum of `eval(I, J)` over disjoint pairs with `min(I ∪ J) ∈ I`.
///
/// Pairs are visited by `|I|`, then `I` lexicographically, then `|J|`, then
/// `J` lexicographically; ties go to the earliest pair in that order.
pub fn max_over_disjoint_pairs<F>(
    n: usize,
    left: RangeInclusive<usize>,
    right: RangeInclusive<usize>,
    opts: &EnumOptions,
    eval: F,
) -> Result<PairExtremum>
where
    F: Fn(&[usize], &[usize]) -> f64 + Sync,
{
    let total = disjoint_pair_count(n, &left, &right);
    if total > opts.budget {
        return Err(Error::EnumerationTooLarge {
            count: total,
            budget: opts.budget,
        });
    }
    if total == 0 {
        return Err(Error::InvalidParameter(format!(
            "no disjoint pairs of the requested sizes among {n} columns"
        )));
    }
    let sizes: Vec<usize> = left.clone().filter(|&a| a >= 1 && a <= n).collect();
    let anchors: u128 = sizes.iter().map(|&a| binomial(n, a)).sum();
    let parts = run_chunks(anchors, opts.workers, |start, end| {
        let mut best: Option<(f64, Vec<usize>, Vec<usize>)> = None;
        let (mut si, mut offset) = (0, start);
        while offset >= binomial(n, sizes[si]) {
            offset -= binomial(n, sizes[si]);
            si += 1;
        }
        let mut subset = unrank(n, sizes[si], offset);
        for g in start..end {
            visit_anchor(n, &subset, &right, &eval, &mut best);
            if g + 1 == end {
                break;
            }
            if !next_subset(&mut subset, n) {
                si += 1;
                subset = (0..sizes[si]).collect();
            }
        }
        best
    });
    let mut best: Option<(f64, Vec<usize>, Vec<usize>)> = None;
    for part in parts.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| part.0 > b.0) {
            best = Some(part);
        }
    }
    let (value, l, r) = best.expect("at least one pair");
    Ok(PairExtremum {
        value,
        left: l,
        right: r,
        evaluated: total,
    })
}

fn visit_anchor<F>(
    n: usize,
    i_set: &[usize],
    right: &RangeInclusive<usize>,
    eval: &F,
    best: &mut Option<(f64, Vec<usize>, Vec<usize>)>,
) where
    F: Fn(&[usize], &[usize]) -> f64,
{
    let cand: Vec<usize> = (i_set[0] + 1..n).filter(|j| !i_set.contains(j)).collect();
    for b in right.clone().filter(|&b| b >= 1) {
        if b > cand.len() {
            break;
        }
        let mut idx: Vec<usize> = (0..b).collect();
        let mut j_set = vec![0; b];
        loop {
            for (slot, &k) in j_set.iter_mut().zip(&idx) {
                *slot = cand[k];
            }
            let v = eval(i_set, &j_set);
            if best.as_ref().is_none_or(|b| v > b.0) {
                *best = Some((v, i_set.to_vec(), j_set.clone()));
            }
            if !next_subset(&mut idx, cand.len()) {
                break;
            }
        }
    }
}

fn check_roc(f: &Frame, k: usize) -> Result<()> {
    if k == 0 || 2 * k > f.n() {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= K and 2K <= N = {}, got K = {k}",
            f.n()
        )));
    }
    Ok(())
}

/// Exact `theta_K` over disjoint supports with `|I| = |J| = K`.
pub fn roc_exact(f: &Frame, k: usize, opts: &EnumOptions) -> Result<PairExtremum> {
    check_roc(f, k)?;
    let g = f.gram();
    max_over_disjoint_pairs(f.n(), k..=k, k..=k, opts, |i, j| {
        operator_norm(&g.block(i, j))
    })
}

/// `theta_K` over every disjoint pair with `1 <= |I|, |J| <= K`; agrees with
/// [`roc_exact`] because the block norm only grows when columns are added.
pub fn roc_exact_all_sizes(f: &Frame, k: usize, opts: &EnumOptions) -> Result<PairExtremum> {
    check_roc(f, k)?;
    let g = f.gram();
    max_over_disjoint_pairs(f.n(), 1..=k, 1..=k, opts, |i, j| {
        operator_norm(&g.block(i, j))
    })
}

/// Smallest flat restricted orthogonality constant `theta_hat` for `K`:
/// the largest `|<sum_I phi_i, sum_J phi_j>| / sqrt(|I||J|)`.
pub fn fro_constant(f: &Frame, k: usize, opts: &EnumOptions) -> Result<PairExtremum> {
    if k == 0 || f.n() < 2 {
        return Err(Error::InvalidParameter(format!(
            "need K >= 1 and N >= 2, got K = {k}, N = {}",
            f.n()
        )));
    }
    let g = f.gram();
    max_over_disjoint_pairs(f.n(), 1..=k, 1..=k, opts, |i, j| {
        let mut s = Complex64::new(0.0, 0.0);
        for &a in i {
            for &b in j {
                s += g[(a, b)];
            }
        }
        s.norm() / ((i.len() * j.len()) as f64).sqrt()
    })
}
