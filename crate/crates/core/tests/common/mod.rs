#![allow(dead_code)]

use num_complex::Complex64;
use ripcert::constructions::{
    all_pairs_steiner, hadamard, paley_etf, realify, steiner_etf, steiner_triple, HadamardKind,
};
use ripcert::linalg::{singular_values, submatrix_columns};
use ripcert::{DenseMatrix, Frame};

/// Every ETF the acceptance list names: Steiner v in {4, 7, 9} with
/// k in {2, 3} where a system exists, and Paley p in {5, 13, 17}.
pub fn named_etfs() -> Vec<Frame> {
    let mut out = Vec::new();
    for (v, k) in [(4, 2), (7, 2), (9, 2), (7, 3), (9, 3)] {
        let s = if k == 2 {
            all_pairs_steiner(v)
        } else {
            steiner_triple(v)
        }
        .unwrap();
        let order = s.replication() + 1;
        let kind = if order.is_power_of_two() {
            HadamardKind::Sylvester
        } else {
            HadamardKind::Dft
        };
        out.push(steiner_etf(&s, &hadamard(order, kind).unwrap()).unwrap());
    }
    for p in [5, 13, 17] {
        out.push(paley_etf(p, true).unwrap());
    }
    out
}

pub fn real_paley(p: u64) -> Frame {
    realify(&paley_etf(p, true).unwrap(), 1e-9).unwrap()
}

/// Subsets of `0..n` with `k` elements, by scanning bitmasks.
pub fn subsets_by_mask(n: usize, k: usize) -> Vec<Vec<usize>> {
    assert!(n < 32);
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// `max(sigma_max^2 - 1, 1 - sigma_min^2)` over the columns `s`.
pub fn subset_distortion(f: &Frame, s: &[usize]) -> f64 {
    let sub = submatrix_columns(f.matrix(), s).unwrap();
    let sv = singular_values(&sub);
    let hi = sv[0] * sv[0];
    let lo = if s.len() > f.m() {
        0.0
    } else {
        sv[s.len() - 1].powi(2)
    };
    (hi - 1.0).max(1.0 - lo)
}

/// `delta_K` by bitmask enumeration and singular values.
pub fn ric_oracle(f: &Frame, k: usize) -> f64 {
    subsets_by_mask(f.n(), k)
        .iter()
        .map(|s| subset_distortion(f, s))
        .fold(0.0, f64::max)
}

/// `Tr[H^p]` by `p - 1` plain multiplications.
pub fn naive_trace_power(h: &DenseMatrix, p: u32) -> f64 {
    let mut acc = h.clone();
    for _ in 1..p {
        acc = acc.matmul(h).unwrap();
    }
    acc.trace().re
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Entries of the printed 6x16 Steiner frame, times sqrt(3).
pub const STEINER_SIGNS: [&str; 6] = [
    "+-+-+-+-........",
    "++--....+-+-....",
    "+--+........+-+-",
    "....++--++--....",
    "....+--+....++--",
    "........+--++--+",
];
