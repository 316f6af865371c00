use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use super::{
    coherence, delta1, fro_constant, fro_to_ro_bound, gershgorin_bound, halving_chain,
    iterated_ro_bound, ric_exact, ric_power, ro_to_rip_bound, roc_exact, spark, verify_etf,
    welch_bound, EnumOptions, EtfAxioms, Extremum, FroMode, PairExtremum, SparkResult,
};
use crate::constructions::Frame;
use crate::error::{Error, Result};

/// Slack allowed in every cross-check between computed quantities.
const SLACK: f64 = 1e-9;

/// Which quantities to compute.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifyPlan {
    pub gershgorin: bool,
    pub exact_ric: Vec<usize>,
    /// `(K, q list)`
    pub power: Vec<(usize, Vec<u32>)>,
    pub roc: Vec<usize>,
    pub fro: Vec<usize>,
    pub spark_cap: Option<usize>,
    pub spark_tol: f64,
    pub bounds: bool,
}

impl Default for CertifyPlan {
    fn default() -> Self {
        Self {
            gershgorin: false,
            exact_ric: vec![],
            power: vec![],
            roc: vec![],
            fro: vec![],
            spark_cap: None,
            spark_tol: 1e-9,
            bounds: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct KRecord {
    pub k: usize,
    pub gershgorin: Option<f64>,
    pub ric_exact: Option<Extremum>,
    pub ric_power: Vec<(u32, Extremum)>,
    pub roc: Option<PairExtremum>,
    pub fro: Option<PairExtremum>,
    /// Named bounds derived from the computed constants.
    pub derived: Vec<(String, f64)>,
}

/// A failed cross-check, with the numbers that failed it.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificationReport {
    pub label: String,
    pub m: usize,
    pub n: usize,
    pub coherence: Option<f64>,
    pub welch: Option<f64>,
    pub delta1: f64,
    pub etf: EtfAxioms,
    pub records: Vec<KRecord>,
    pub spark: Option<SparkResult>,
    /// Requested quantities that do not apply to this frame.
    pub notes: Vec<String>,
    /// Wall-clock time per computed entry; not part of the numeric results.
    pub timings: Vec<(String, Duration)>,
}

impl CertificationReport {
    pub fn record(&self, k: usize) -> Option<&KRecord> {
        self.records.iter().find(|r| r.k == k)
    }

    fn exact(&self, k: usize) -> Option<f64> {
        self.record(k)
            .and_then(|r| r.ric_exact.as_ref())
            .map(|e| e.value)
    }

    /// Every internal consistency check that the computed values allow.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut fail = |check: &str, detail: String| {
            out.push(Violation {
                check: check.into(),
                detail,
            })
        };
        for r in &self.records {
            let k = r.k;
            let exact = r.ric_exact.as_ref().map(|e| e.value);
            if let (Some(d), Some(g)) = (exact, r.gershgorin) {
                if d > g + SLACK {
                    fail("ric_exact <= gershgorin", format!("K={k}: {d} > {g}"));
                }
            }
            let mut prev: Option<(u32, f64)> = None;
            for (q, e) in &r.ric_power {
                if let Some((pq, pv)) = prev {
                    if e.value > pv + SLACK {
                        fail(
                            "ric_power non-increasing in q",
                            format!("K={k}: q={pq} gives {pv}, q={q} gives {}", e.value),
                        );
                    }
                }
                if let Some(d) = exact {
                    if e.value < d - SLACK {
                        fail(
                            "ric_power >= ric_exact",
                            format!("K={k}, q={q}: {} < {d}", e.value),
                        );
                    }
                    let cap = (k as f64).powf(1.0 / (2 * q) as f64) * d;
                    if e.value > cap + SLACK {
                        fail(
                            "ric_power <= K^(1/2q) ric_exact",
                            format!("K={k}, q={q}: {} > {cap}", e.value),
                        );
                    }
                }
                prev = Some((*q, e.value));
            }
            let theta = r.roc.as_ref().map(|e| e.value);
            if let (Some(th), Some(t)) = (r.fro.as_ref().map(|e| e.value), theta) {
                if th > t + SLACK {
                    fail("fro <= roc", format!("K={k}: {th} > {t}"));
                }
            }
            if let (Some(t), Some(d2)) = (theta, self.exact(2 * k)) {
                if t > d2 + SLACK {
                    fail("roc <= ric_exact(2K)", format!("K={k}: {t} > {d2}"));
                }
                let mut upper = ro_to_rip_bound(t, self.delta1);
                if let Some(dk) = exact {
                    upper = upper.min(t + dk);
                }
                if d2 > upper + SLACK {
                    fail(
                        "ric_exact(2K) <= min(roc + ric_exact, 2 roc + delta1)",
                        format!("K={k}: {d2} > {upper}"),
                    );
                }
                for (name, v) in &r.derived {
                    if name.starts_with("delta_2K") && d2 > v + SLACK {
                        fail(
                            "ric_exact(2K) <= derived bound",
                            format!("K={k}: {d2} > {name} = {v}"),
                        );
                    }
                }
            }
            if let Some(t) = theta {
                for (name, v) in &r.derived {
                    if name.starts_with("theta_K") && t > v + SLACK {
                        fail("roc <= derived bound", format!("K={k}: {t} > {name} = {v}"));
                    }
                }
            }
            if let (Some(d), Some(s)) = (exact, self.spark.as_ref().and_then(SparkResult::value)) {
                if s <= k && d < 1.0 - SLACK {
                    fail(
                        "spark <= K implies ric_exact >= 1",
                        format!("K={k}, spark={s}: {d}"),
                    );
                }
            }
        }
        out
    }
}

struct Clock(Vec<(String, Duration)>);

impl Clock {
    fn time<T>(&mut self, name: String, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push((name, start.elapsed()));
        out
    }
}

/// Computes everything in `plan`. Budget errors abort; requests that do not
/// apply to the frame (for example a Gershgorin bound on non-unit columns)
/// become notes.
pub fn certify(f: &Frame, plan: &CertifyPlan, opts: &EnumOptions) -> Result<CertificationReport> {
    let mut clock = Clock(Vec::new());
    let mut notes = Vec::new();
    let coherence = coherence(f).ok();
    let welch = welch_bound(f.m(), f.n()).ok();
    let d1 = delta1(f);
    let etf = verify_etf(f, 1e-12);

    let mut ks: BTreeSet<usize> = BTreeSet::new();
    ks.extend(&plan.exact_ric);
    ks.extend(plan.power.iter().map(|(k, _)| *k));
    ks.extend(&plan.roc);
    ks.extend(&plan.fro);
    let mut records: Vec<KRecord> = ks
        .iter()
        .map(|&k| KRecord {
            k,
            ..Default::default()
        })
        .collect();

    for r in records.iter_mut() {
        let k = r.k;
        if plan.gershgorin {
            match gershgorin_bound(f, k) {
                Ok(v) => r.gershgorin = Some(v),
                Err(e @ (Error::Precondition(_) | Error::UndefinedCoherence(_))) => {
                    notes.push(format!("gershgorin K={k}: {e}"))
                }
                Err(e) => return Err(e),
            }
        }
        if plan.exact_ric.contains(&k) {
            r.ric_exact = Some(clock.time(format!("ric_exact K={k}"), || ric_exact(f, k, opts))?);
        }
        for (_, qs) in plan.power.iter().filter(|(pk, _)| *pk == k) {
            let mut qs = qs.clone();
            qs.sort_unstable();
            qs.dedup();
            for q in qs {
                let e = clock.time(format!("ric_power K={k} q={q}"), || {
                    ric_power(f, k, q, opts)
                })?;
                r.ric_power.push((q, e));
            }
        }
        if plan.roc.contains(&k) {
            r.roc = Some(clock.time(format!("roc K={k}"), || roc_exact(f, k, opts))?);
        }
        if plan.fro.contains(&k) {
            r.fro = Some(clock.time(format!("fro K={k}"), || fro_constant(f, k, opts))?);
        }
    }

    if plan.bounds {
        for i in 0..records.len() {
            let k = records[i].k;
            let mut derived = Vec::new();
            if let Some(t) = records[i].roc.as_ref().map(|e| e.value) {
                derived.push((
                    "delta_2K <= 2 theta_K + delta_1".to_string(),
                    ro_to_rip_bound(t, d1),
                ));
                let mut chain = Vec::new();
                for level in halving_chain(k) {
                    let th = match records
                        .iter()
                        .find(|r| r.k == level)
                        .and_then(|r| r.roc.as_ref())
                    {
                        Some(e) => e.value,
                        None => {
                            clock
                                .time(format!("roc K={level} (chain)"), || {
                                    roc_exact(f, level, opts)
                                })?
                                .value
                        }
                    };
                    chain.push((level, th));
                }
                let it = iterated_ro_bound(&chain, d1)?;
                derived.push((
                    "delta_2K <= iterated theta sum + delta_1".to_string(),
                    it.sum,
                ));
                derived.push((
                    "delta_2K <= (1 + ceil(log2 K)) theta_K + delta_1".to_string(),
                    it.closed_form,
                ));
            }
            if let Some(th) = records[i].fro.as_ref().map(|e| e.value) {
                if k >= 2 {
                    let simple = fro_to_ro_bound(k, th, FroMode::Simple)?;
                    let appendix = fro_to_ro_bound(k, th, FroMode::Appendix)?;
                    derived.push(("theta_K <= 75 theta_hat ln K".to_string(), simple.value));
                    derived.push(("theta_K <= appendix bound".to_string(), appendix.value));
                    derived.push((
                        "delta_2K <= 150 theta_hat ln K + delta_1".to_string(),
                        ro_to_rip_bound(simple.value, d1),
                    ));
                } else {
                    notes.push("flat-to-restricted orthogonality bound is vacuous at K=1".into());
                }
            }
            records[i].derived = derived;
        }
    }

    let spark = match plan.spark_cap {
        Some(cap) => Some(clock.time(format!("spark cap={cap}"), || {
            spark(f, cap, plan.spark_tol, opts)
        })?),
        None => None,
    };

    Ok(CertificationReport {
        label: f.label().to_string(),
        m: f.m(),
        n: f.n(),
        coherence,
        welch,
        delta1: d1,
        etf,
        records,
        spark,
        notes,
        timings: clock.0,
    })
}
