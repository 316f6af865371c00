use crate::constructions::NormalSampler;

/// One grid point of an empirical tail table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailRow {
    pub theta_hat: f64,
    /// Trials with `|S| >= threshold`.
    pub exceed: usize,
    /// Trials with `S >= threshold` and `S <= -threshold`.
    pub upper: usize,
    pub lower: usize,
    pub empirical: f64,
    pub bound: f64,
    /// Binomial standard error of `empirical`.
    pub std_err: f64,
    /// `empirical <= bound + 3 std_err`
    pub dominated: bool,
    /// One-sided tails agree within three standard errors of their difference.
    pub symmetric: bool,
    /// A second, closed-form bound reported alongside `bound`, and whether
    /// the empirical tail stays under it (within three standard errors).
    pub printed_bound: Option<f64>,
    pub printed_dominated: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TailTable {
    pub m: usize,
    pub trials: usize,
    pub seed: u64,
    pub rows: Vec<TailRow>,
}

impl TailTable {
    pub fn all_dominated(&self) -> bool {
        self.rows.iter().all(|r| r.dominated)
    }

    pub fn all_symmetric(&self) -> bool {
        self.rows.iter().all(|r| r.symmetric)
    }
}

/// `0, 0.1, ..., 1.5`.
pub fn default_theta_grid() -> Vec<f64> {
    (0..=15).map(|i| i as f64 / 10.0).collect()
}

fn table<B, P>(
    samples: &[f64],
    scale: f64,
    grid: &[f64],
    m: usize,
    seed: u64,
    bound: B,
    printed: P,
) -> TailTable
where
    B: Fn(f64) -> f64,
    P: Fn(f64) -> Option<f64>,
{
    let trials = samples.len();
    let n = trials as f64;
    let rows = grid
        .iter()
        .map(|&theta_hat| {
            let x = theta_hat * scale;
            let upper = samples.iter().filter(|&&s| s >= x).count();
            let lower = samples.iter().filter(|&&s| s <= -x).count();
            let exceed = samples.iter().filter(|&&s| s.abs() >= x).count();
            let p = exceed as f64 / n;
            let std_err = (p * (1.0 - p) / n).sqrt();
            let b = bound(theta_hat);
            let (pu, pl) = (upper as f64 / n, lower as f64 / n);
            let diff_se = ((pu * (1.0 - pu) + pl * (1.0 - pl)) / n).sqrt();
            let printed_bound = printed(theta_hat);
            TailRow {
                theta_hat,
                exceed,
                upper,
                lower,
                empirical: p,
                bound: b,
                std_err,
                dominated: p <= b + 3.0 * std_err,
                symmetric: (pu - pl).abs() <= 3.0 * diff_se,
                printed_bound,
                printed_dominated: printed_bound.map(|pb| p <= pb + 3.0 * std_err),
            }
        })
        .collect();
    TailTable {
        m,
        trials,
        seed,
        rows,
    }
}

/// Samples `S = sum_{m<M} X_m Y_m` with `X_m ~ N(0, K1/M)` and
/// `Y_m ~ N(0, K2/M)` and tabulates `Pr[|S| >= theta_hat sqrt(K1 K2)]`
/// against `2 exp(-M theta_hat^2 / 4)`.
pub fn column_sum_tail(
    m: usize,
    k1: usize,
    k2: usize,
    trials: usize,
    seed: u64,
    grid: &[f64],
) -> TailTable {
    let mut rng = NormalSampler::new(seed);
    let (sx, sy) = ((k1 as f64 / m as f64).sqrt(), (k2 as f64 / m as f64).sqrt());
    let samples: Vec<f64> = (0..trials)
        .map(|_| {
            (0..m)
                .map(|_| sx * rng.sample() * (sy * rng.sample()))
                .sum()
        })
        .collect();
    let scale = ((k1 * k2) as f64).sqrt();
    table(
        &samples,
        scale,
        grid,
        m,
        seed,
        |t| (2.0 * (-(m as f64) * t * t / 4.0).exp()).min(1.0),
        |_| None,
    )
}

/// Samples `delta_1` of an `M x N` Gaussian matrix and tabulates
/// `Pr[delta_1 >= d]`.
///
/// `bound` is the union of the chi-square tails
/// `Pr[|‖phi‖² - 1| >= 2(sqrt(t/M) + t/M)] <= 2 e^{-t}` solved for `t` at `d`;
/// `printed_bound` is the simplified `2 exp(-M d / 4 + ln N)`, which follows
/// from it only when `t >= M`, i.e. `d >= 4`.
pub fn delta1_tail(m: usize, n: usize, trials: usize, seed: u64, grid: &[f64]) -> TailTable {
    let mut rng = NormalSampler::new(seed);
    let sd = 1.0 / (m as f64).sqrt();
    let samples: Vec<f64> = (0..trials)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let sq: f64 = (0..m).map(|_| (sd * rng.sample()).powi(2)).sum();
                    (sq - 1.0).abs()
                })
                .fold(0.0, f64::max)
        })
        .collect();
    // delta_1 >= 0, so the one-sided symmetry columns are not meaningful here
    let (mf, nf) = (m as f64, n as f64);
    let union = |d: f64| {
        let r = ((1.0 + 2.0 * d).sqrt() - 1.0) / 2.0;
        (2.0 * nf * (-mf * r * r).exp()).min(1.0)
    };
    let printed = |d: f64| Some((2.0 * (-mf * d / 4.0 + nf.ln()).exp()).min(1.0));
    let mut t = table(&samples, 1.0, grid, m, seed, union, printed);
    for r in &mut t.rows {
        r.symmetric = true;
    }
    t
}
