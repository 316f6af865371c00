//! Restricted isometry certificates: coherence-based bounds, exhaustive
//! constants, power-method estimates, (flat) restricted orthogonality, the
//! bound chain between them, and spark.
//!
//! Every exhaustive routine enumerates subsets in lexicographic order and
//! reports the lexicographically smallest witness attaining the maximum, so
//! results do not depend on the worker count in [`EnumOptions`].

mod basics;
mod bounds;
mod report;
mod ric;
mod ro;
mod spark;

pub use basics::{coherence, delta1, gershgorin_bound, verify_etf, welch_bound, EtfAxioms};
pub use bounds::{
    appendix_c, appendix_c0, appendix_c1, appendix_t, fro_to_ro_bound, halving_chain,
    iterated_ro_bound, ro_to_rip_bound, FroBound, FroMode, IteratedBound, FRO_CONSTANT,
    QUOTED_APPENDIX_CONSTANT,
};
pub use report::{certify, CertificationReport, CertifyPlan, KRecord, Violation};
pub use ric::{max_over_subsets, power_norm, ric_exact, ric_power};
pub use ro::{
    disjoint_pair_count, fro_constant, max_over_disjoint_pairs, roc_exact, roc_exact_all_sizes,
};
pub use spark::{spark, SparkResult};

use crate::parallel::workers_from_env;

/// Default cap on the number of enumerated cases.
pub const DEFAULT_BUDGET: u128 = 5_000_000;

/// Enumeration budget and worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub budget: u128,
    pub workers: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: workers_from_env(),
        }
    }
}

impl EnumOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }
}

/// Maximum over a family of column subsets with its witness.
#[derive(Debug, Clone, PartialEq)]
pub struct Extremum {
    pub value: f64,
    pub witness: Vec<usize>,
    /// Number of subsets evaluated.
    pub evaluated: u128,
}

/// Maximum over disjoint pairs of column subsets.
#[derive(Debug, Clone, PartialEq)]
pub struct PairExtremum {
    pub value: f64,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub evaluated: u128,
}
