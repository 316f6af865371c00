//! Seeded Monte Carlo runners for the probabilistic statements: flat
//! restricted orthogonality of random matrices, power-method certification,
//! and the tails of column-sum inner products.
//!
//! Trial `t` draws its matrix from seed `base_seed + t`, which the ensemble
//! generators pass through a splitting function, so trials are independent
//! streams and results do not depend on the worker count.

mod tail;

pub use tail::{column_sum_tail, default_theta_grid, delta1_tail, TailRow, TailTable};

use std::fmt;
use std::str::FromStr;

use crate::certification::{delta1, fro_constant, ric_power, EnumOptions, FRO_CONSTANT};
use crate::constructions::{bernoulli_matrix, gaussian_matrix, Frame};
use crate::error::{Error, Result};
use crate::parallel::run_chunks;

/// Fraction `alpha` of the distortion budget given to `delta_1`.
pub const ALPHA: f64 = 0.01;

const Z95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ensemble {
    Gaussian,
    Bernoulli,
}

impl Ensemble {
    pub fn draw(self, m: usize, n: usize, seed: u64) -> Frame {
        match self {
            Ensemble::Gaussian => gaussian_matrix(m, n, seed),
            Ensemble::Bernoulli => bernoulli_matrix(m, n, seed),
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ensemble::Gaussian => "gaussian",
            Ensemble::Bernoulli => "bernoulli",
        })
    }
}

impl FromStr for Ensemble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" => Ok(Ensemble::Gaussian),
            "bernoulli" => Ok(Ensemble::Bernoulli),
            other => Err(Error::InvalidParameter(format!(
                "unknown ensemble '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialConfig {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// Power for the power-method runner.
    pub q: Option<u32>,
    /// Target distortion `delta`.
    pub delta: f64,
    pub trials: usize,
    pub base_seed: u64,
    pub ensemble: Ensemble,
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if !(self.delta > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "delta must be positive, got {}",
                self.delta
            )));
        }
        if self.m == 0 || self.k == 0 || self.k > self.n {
            return Err(Error::InvalidParameter(format!(
                "need M >= 1 and 1 <= K <= N, got M={}, N={}, K={}",
                self.m, self.n, self.k
            )));
        }
        Ok(())
    }

    pub fn seed(&self, trial: usize) -> u64 {
        self.base_seed.wrapping_add(trial as u64)
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = m;
        self
    }
}

/// Worst case of one failed trial.
#[derive(Debug, Clone, PartialEq)]
pub struct FailureWitness {
    pub trial: usize,
    pub seed: u64,
    /// The certified quantity (`theta_hat` or `delta_{K;q}`).
    pub value: f64,
    pub delta1: f64,
    pub left: Vec<usize>,
    /// Empty for single-subset quantities.
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub successes: usize,
    pub trials: usize,
    pub failures: Vec<FailureWitness>,
    /// Success threshold on the certified quantity.
    pub threshold: f64,
    /// Power runner only: `(81/delta^2) K^{1+1/q} ln(eN/K)`.
    pub theorem_m: Option<f64>,
    /// Subsets or pairs enumerated per trial.
    pub evaluated_per_trial: u128,
}

impl TrialOutcome {
    pub fn frequency(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }

    pub fn failure_frequency(&self) -> f64 {
        1.0 - self.frequency()
    }

    /// 95% Wilson score interval for the success probability.
    pub fn wilson_interval(&self) -> (f64, f64) {
        wilson(self.successes, self.trials)
    }

    pub fn meets_theorem_m(&self, m: usize) -> Option<bool> {
        self.theorem_m.map(|t| m as f64 >= t)
    }
}

pub fn wilson(successes: usize, trials: usize) -> (f64, f64) {
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / (1.0 + z2 / n);
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

enum Trial {
    Pass,
    Fail(FailureWitness),
}

fn run<F>(cfg: &TrialConfig, opts: &EnumOptions, one: F) -> Result<(Vec<Trial>, u128)>
where
    F: Fn(usize) -> Result<(Trial, u128)> + Sync,
{
    let parts = run_chunks(cfg.trials as u128, opts.workers, |a, b| {
        (a..b).map(|t| one(t as usize)).collect::<Result<Vec<_>>>()
    });
    let mut trials = Vec::with_capacity(cfg.trials);
    let mut evaluated = 0;
    for part in parts {
        for (t, e) in part? {
            trials.push(t);
            evaluated = e;
        }
    }
    Ok((trials, evaluated))
}

fn summarize(
    cfg: &TrialConfig,
    trials: Vec<Trial>,
    threshold: f64,
    theorem_m: Option<f64>,
    evaluated: u128,
) -> TrialOutcome {
    let mut failures = Vec::new();
    let mut successes = 0;
    for t in trials {
        match t {
            Trial::Pass => successes += 1,
            Trial::Fail(w) => failures.push(w),
        }
    }
    TrialOutcome {
        successes,
        trials: cfg.trials,
        failures,
        threshold,
        theorem_m,
        evaluated_per_trial: evaluated,
    }
}

/// Success when `theta_hat <= (1 - alpha) delta / (2 C ln K)` and
/// `delta_1 <= alpha delta`, with `C = 75`.
pub fn run_fro_trials(cfg: &TrialConfig, opts: &EnumOptions) -> Result<TrialOutcome> {
    cfg.validate()?;
    if cfg.k < 2 {
        return Err(Error::BoundVacuous(
            "the flat orthogonality threshold needs K >= 2".into(),
        ));
    }
    let threshold = (1.0 - ALPHA) * cfg.delta / (2.0 * FRO_CONSTANT * (cfg.k as f64).ln());
    let serial = EnumOptions {
        workers: 1,
        ..*opts
    };
    let (trials, evaluated) = run(cfg, opts, |t| {
        let seed = cfg.seed(t);
        let f = cfg.ensemble.draw(cfg.m, cfg.n, seed);
        let fro = fro_constant(&f, cfg.k, &serial)?;
        let d1 = delta1(&f);
        let trial = if fro.value <= threshold && d1 <= ALPHA * cfg.delta {
            Trial::Pass
        } else {
            Trial::Fail(FailureWitness {
                trial: t,
                seed,
                value: fro.value,
                delta1: d1,
                left: fro.left,
                right: fro.right,
            })
        };
        Ok((trial, fro.evaluated))
    })?;
    Ok(summarize(cfg, trials, threshold, None, evaluated))
}

/// `(81 / delta^2) K^{1 + 1/q} ln(e N / K)`.
pub fn power_theorem_m(n: usize, k: usize, q: u32, delta: f64) -> f64 {
    let kf = k as f64;
    81.0 / (delta * delta)
        * kf.powf(1.0 + 1.0 / q as f64)
        * (std::f64::consts::E * n as f64 / kf).ln()
}

/// Success when `delta_{K;q} <= delta`.
pub fn run_power_trials(cfg: &TrialConfig, opts: &EnumOptions) -> Result<TrialOutcome> {
    cfg.validate()?;
    let q = cfg
        .q
        .ok_or_else(|| Error::InvalidParameter("power trials need q".into()))?;
    let serial = EnumOptions {
        workers: 1,
        ..*opts
    };
    let (trials, evaluated) = run(cfg, opts, |t| {
        let seed = cfg.seed(t);
        let f = cfg.ensemble.draw(cfg.m, cfg.n, seed);
        let r = ric_power(&f, cfg.k, q, &serial)?;
        let trial = if r.value <= cfg.delta {
            Trial::Pass
        } else {
            Trial::Fail(FailureWitness {
                trial: t,
                seed,
                value: r.value,
                delta1: delta1(&f),
                left: r.witness,
                right: vec![],
            })
        };
        Ok((trial, r.evaluated))
    })?;
    Ok(summarize(
        cfg,
        trials,
        cfg.delta,
        Some(power_theorem_m(cfg.n, cfg.k, q, cfg.delta)),
        evaluated,
    ))
}

/// Runs `runner` at each `M` in `ms`, all else fixed.
pub fn sweep<F>(cfg: &TrialConfig, ms: &[usize], runner: F) -> Result<Vec<(usize, TrialOutcome)>>
where
    F: Fn(&TrialConfig) -> Result<TrialOutcome>,
{
    ms.iter()
        .map(|&m| runner(&cfg.with_m(m)).map(|o| (m, o)))
        .collect()
}
