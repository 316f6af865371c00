use super::{EnumOptions, Extremum};
use crate::constructions::Frame;
use crate::enumerate::{binomial, next_subset, unrank};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, DenseMatrix, DEFAULT_TOL};
use crate::parallel::run_chunks;

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "K must satisfy 1 <= K <= N = {n}, got {k}"
        )));
    }
    Ok(())
}

/// Maximum of `eval` over all `k`-subsets of `0..n`, with the
/// lexicographically smallest maximizer.
pub fn max_over_subsets<F>(n: usize, k: usize, opts: &EnumOptions, eval: F) -> Result<Extremum>
where
    F: Fn(&[usize]) -> f64 + Sync,
{
    let total = binomial(n, k);
    if total > opts.budget {
        return Err(Error::EnumerationTooLarge {
            count: total,
            budget: opts.budget,
        });
    }
    let parts = run_chunks(total, opts.workers, |start, end| {
        let mut subset = unrank(n, k, start);
        let mut best: Option<(f64, Vec<usize>)> = None;
        for r in start..end {
            let v = eval(&subset);
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, subset.clone()));
            }
            if r + 1 < end {
                next_subset(&mut subset, n);
            }
        }
        best
    });
    let mut best: Option<(f64, Vec<usize>)> = None;
    for part in parts.into_iter().flatten() {
        if best.as_ref().is_none_or(|(b, _)| part.0 > *b) {
            best = Some(part);
        }
    }
    let (value, witness) = best.expect("at least one subset");
    Ok(Extremum {
        value,
        witness,
        evaluated: total,
    })
}

/// `Phi_S^* Phi_S - I` read off the Gram matrix.
pub(crate) fn hollow_subgram(gram: &DenseMatrix, subset: &[usize]) -> DenseMatrix {
    gram.principal_submatrix(subset).minus_identity()
}

/// Exact `delta_K`: the largest spectral norm of a hollow `K x K` sub-Gram.
pub fn ric_exact(f: &Frame, k: usize, opts: &EnumOptions) -> Result<Extremum> {
    check_k(f.n(), k)?;
    let g = f.gram();
    max_over_subsets(f.n(), k, opts, |s| {
        let h = hollow_subgram(g, s);
        hermitian_eigenvalues(&h, DEFAULT_TOL)
            .expect("sub-Gram is Hermitian")
            .max_abs()
    })
}

/// `Tr[H^{2q}]^{1/(2q)}` for Hermitian `H`, evaluated by repeated squaring
/// with power-of-two rescaling so very large `q` neither overflows nor
/// underflows.
pub fn power_norm(h: &DenseMatrix, q: u32) -> Result<f64> {
    if q == 0 {
        return Err(Error::UnsupportedExponent(0));
    }
    if h.max_abs() == 0.0 {
        return Ok(0.0);
    }
    // invariant: h^(2^j) = 2^log2_scale * sq
    let mut sq = h.clone();
    let mut log2_scale = 0.0f64;
    let mut acc: Option<(DenseMatrix, f64)> = None;
    let mut e = 2 * q as u64;
    loop {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => (sq.clone(), log2_scale),
                Some((a, s)) => rescale(a.matmul(&sq)?, s + log2_scale),
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        let (next, s) = rescale(sq.matmul(&sq)?, 2.0 * log2_scale);
        sq = next;
        log2_scale = s;
    }
    let (a, s) = acc.expect("exponent is positive");
    let tr = a.trace().re;
    if tr <= 0.0 {
        return Ok(0.0);
    }
    Ok(((tr.log2() + s) / (2.0 * q as f64)).exp2())
}

fn rescale(m: DenseMatrix, log2_scale: f64) -> (DenseMatrix, f64) {
    let peak = m.max_abs();
    if peak == 0.0 || !peak.is_finite() {
        return (m, log2_scale);
    }
    let shift = peak.log2().floor();
    (m.scale((-shift).exp2()), log2_scale + shift)
}

/// `delta_{K;q}`: the largest `Tr[H^{2q}]^{1/(2q)}` over hollow `K x K`
/// sub-Grams `H`.
pub fn ric_power(f: &Frame, k: usize, q: u32, opts: &EnumOptions) -> Result<Extremum> {
    check_k(f.n(), k)?;
    if q == 0 {
        return Err(Error::UnsupportedExponent(0));
    }
    let g = f.gram();
    max_over_subsets(f.n(), k, opts, |s| {
        power_norm(&hollow_subgram(g, s), q).expect("square")
    })
}
