use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::Frame;
use crate::linalg::DenseMatrix;

/// SplitMix64 finaliser; maps nearby seeds to unrelated stream keys.
pub fn split_seed(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn stream(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(split_seed(seed))
}

/// Standard normal variates by Marsaglia's polar method over a ChaCha20
/// stream.
pub struct NormalSampler {
    rng: ChaCha20Rng,
    spare: Option<f64>,
}

impl NormalSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: stream(seed),
            spare: None,
        }
    }

    fn uniform_pm1(&mut self) -> f64 {
        // 53 random bits -> [0, 1) -> [-1, 1)
        let u = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        2.0 * u - 1.0
    }

    pub fn sample(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        loop {
            let u = self.uniform_pm1();
            let v = self.uniform_pm1();
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let factor = (-2.0 * s.ln() / s).sqrt();
                self.spare = Some(v * factor);
                return u * factor;
            }
        }
    }
}

/// `M x N` matrix with i.i.d. `N(0, 1/M)` entries, filled row-major.
pub fn gaussian_matrix(m: usize, n: usize, seed: u64) -> Frame {
    let mut sampler = NormalSampler::new(seed);
    let sd = 1.0 / (m as f64).sqrt();
    let data: Vec<f64> = (0..m * n).map(|_| sampler.sample() * sd).collect();
    let mat = DenseMatrix::from_real(m, n, &data).expect("dimensions are positive");
    Frame::new(mat, format!("gaussian(m={m},n={n},seed={seed})")).expect("nonzero columns")
}

/// `M x N` matrix with i.i.d. equiprobable `+-1/sqrt(M)` entries.
pub fn bernoulli_matrix(m: usize, n: usize, seed: u64) -> Frame {
    let mut rng = stream(seed);
    let a = 1.0 / (m as f64).sqrt();
    let mut bits = 0u64;
    let mut left = 0;
    let data: Vec<f64> = (0..m * n)
        .map(|_| {
            if left == 0 {
                bits = rng.next_u64();
                left = 64;
            }
            let b = bits & 1;
            bits >>= 1;
            left -= 1;
            if b == 1 {
                a
            } else {
                -a
            }
        })
        .collect();
    let mat = DenseMatrix::from_real(m, n, &data).expect("dimensions are positive");
    Frame::new(mat, format!("bernoulli(m={m},n={n},seed={seed})")).expect("nonzero columns")
}
