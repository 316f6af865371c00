use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

/// Blocks of a (2, k, v) Steiner system: every pair of points lies in
/// exactly one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    v: usize,
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl SteinerSystem {
    /// Validates the pair-coverage property and normalises block order.
    pub fn new(v: usize, k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if k < 2 || v < k {
            return Err(Error::InvalidParameter(format!(
                "need 2 <= k <= v, got k={k}, v={v}"
            )));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.len() != k {
                return Err(Error::InvalidParameter(format!(
                    "block {b:?} does not have {k} points"
                )));
            }
            if b.windows(2).any(|w| w[0] == w[1]) || b.iter().any(|&x| x >= v) {
                return Err(Error::InvalidParameter(format!(
                    "block {b:?} is not a {k}-subset of 0..{v}"
                )));
            }
        }
        blocks.sort();
        let expected = v * (v - 1) / (k * (k - 1));
        if blocks.len() != expected || v * (v - 1) % (k * (k - 1)) != 0 {
            return Err(Error::InvalidParameter(format!(
                "a (2,{k},{v}) system has {expected} blocks, got {}",
                blocks.len()
            )));
        }
        let mut cover = vec![0u32; v * v];
        for b in &blocks {
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    cover[x * v + y] += 1;
                }
            }
        }
        for x in 0..v {
            for y in (x + 1)..v {
                if cover[x * v + y] != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "pair {{{x},{y}}} is covered {} times",
                        cover[x * v + y]
                    )));
                }
            }
        }
        Ok(Self { v, k, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Replication number `(v-1)/(k-1)`: blocks through each point.
    pub fn replication(&self) -> usize {
        (self.v - 1) / (self.k - 1)
    }
}

/// The (2, 2, v) system of all pairs, in lexicographic order.
pub fn all_pairs_steiner(v: usize) -> Result<SteinerSystem> {
    if v < 2 {
        return Err(Error::InvalidParameter(format!(
            "all-pairs system needs v >= 2, got {v}"
        )));
    }
    let blocks = (0..v)
        .flat_map(|i| ((i + 1)..v).map(move |j| vec![i, j]))
        .collect();
    SteinerSystem::new(v, 2, blocks)
}

/// A Steiner triple system on `v` points: Bose's construction for
/// `v = 3 mod 6`, Skolem's for `v = 1 mod 6`.
pub fn steiner_triple(v: usize) -> Result<SteinerSystem> {
    if v < 7 || !(v % 6 == 1 || v % 6 == 3) {
        return Err(Error::InvalidParameter(format!(
            "Steiner triple systems need v = 1 or 3 (mod 6) and v >= 7, got {v}"
        )));
    }
    let blocks = if v % 6 == 3 { bose(v) } else { skolem(v) };
    SteinerSystem::new(v, 3, blocks)
}

// Points (x, b) in Z_m x Z_3 are numbered 3x + b.
fn point(x: usize, b: usize) -> usize {
    3 * x + b % 3
}

fn bose(v: usize) -> Vec<Vec<usize>> {
    let m = v / 3; // order of the idempotent commutative quasigroup, m = 2n + 1
    let half = (m + 1) / 2; // inverse of 2 mod m
    let op = |i: usize, j: usize| (i + j) * half % m;
    let mut blocks = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..m {
        blocks.push(vec![point(x, 0), point(x, 1), point(x, 2)]);
    }
    for i in 0..m {
        for j in (i + 1)..m {
            for b in 0..3 {
                blocks.push(vec![point(i, b), point(j, b), point(op(i, j), b + 1)]);
            }
        }
    }
    blocks
}

fn skolem(v: usize) -> Vec<Vec<usize>> {
    let n = (v - 1) / 6;
    let m = 2 * n; // half-idempotent commutative quasigroup on Z_2n
    let sigma = |x: usize| if x % 2 == 0 { x / 2 } else { (x + m - 1) / 2 };
    let op = |i: usize, j: usize| sigma((i + j) % m);
    let inf = v - 1;
    let mut blocks = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..n {
        blocks.push(vec![point(x, 0), point(x, 1), point(x, 2)]);
    }
    for x in 0..n {
        for b in 0..3 {
            blocks.push(vec![inf, point(n + x, b), point(x, b + 1)]);
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            for b in 0..3 {
                blocks.push(vec![point(i, b), point(j, b), point(op(i, j), b + 1)]);
            }
        }
    }
    blocks
}

/// `A[i, j] = 1` when block `i` contains point `j`.
pub fn incidence_matrix(s: &SteinerSystem) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(s.blocks.len(), s.v);
    for (i, b) in s.blocks.iter().enumerate() {
        for &j in b {
            a[(i, j)].re = 1.0;
        }
    }
    a
}
