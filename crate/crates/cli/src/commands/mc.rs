use std::time::Instant;

use ripcert::certification::FRO_CONSTANT;
use ripcert::montecarlo::{
    column_sum_tail, default_theta_grid, delta1_tail, run_fro_trials, run_power_trials, Ensemble,
    TailTable, TrialConfig, TrialOutcome, ALPHA,
};

use super::{enum_options, finish};
use crate::args::{Delta1TailArgs, Mc, SweepArgs, TailArgs};
use crate::error::CliResult;
use crate::report::{list, num, Report};

pub fn run(m: Mc) -> CliResult<i32> {
    match m {
        Mc::Fro(a) => sweep(a, false),
        Mc::Power(a) => sweep(a, true),
        Mc::Tail(a) => tail(a),
        Mc::Delta1Tail(a) => d1_tail(a),
    }
}

fn sweep(a: SweepArgs, power: bool) -> CliResult<i32> {
    let opts = enum_options(a.budget);
    let cfg = TrialConfig {
        m: a.m[0],
        n: a.n,
        k: a.k,
        q: if power { Some(a.q.unwrap_or(1)) } else { a.q },
        delta: a.delta,
        trials: a.trials,
        base_seed: a.seed,
        ensemble: a.ensemble.parse::<Ensemble>()?,
    };
    let name = if power { "power" } else { "fro" };
    let mut report = Report::new(format!("mc {name}"));
    let s = report.section("sweep");
    s.kv("ensemble", cfg.ensemble)
        .kv("m_values", list(&a.m))
        .kv("n", cfg.n)
        .kv("k", cfg.k)
        .num("delta", cfg.delta)
        .kv("trials", cfg.trials)
        .kv("base_seed", cfg.base_seed)
        .kv("trial_seed", "base_seed + trial index");
    if power {
        s.kv("q", cfg.q.expect("set above"))
            .kv("success", "delta_{K;q} <= delta");
    } else {
        s.num("alpha", ALPHA).num("constant", FRO_CONSTANT).kv(
            "success",
            "theta_hat <= (1 - alpha) delta / (2 C ln K) and delta_1 <= alpha delta",
        );
    }

    let mut ms = a.m.clone();
    ms.sort_unstable();
    ms.dedup();
    let mut rows: Vec<(usize, TrialOutcome)> = Vec::new();
    let mut summary = vec![format!(
        "{:>6} {:>10} {:>22}",
        "M", "success", "95% interval"
    )];
    for &m in &ms {
        let c = cfg.with_m(m);
        let start = Instant::now();
        let o = if power {
            run_power_trials(&c, &opts)?
        } else {
            run_fro_trials(&c, &opts)?
        };
        report.time(format!("M={m}"), start.elapsed());
        let (lo, hi) = o.wilson_interval();
        summary.push(format!("{m:>6} {:>10.4} [{lo:.4}, {hi:.4}]", o.frequency()));
        write_outcome(&mut report, m, &o);
        rows.push((m, o));
    }

    // success frequency must not drop as M grows
    let mut violations = Vec::new();
    for w in rows.windows(2) {
        let ((m0, o0), (m1, o1)) = (&w[0], &w[1]);
        if o1.successes < o0.successes {
            violations.push(format!(
                "success frequency falls from {} at M={m0} to {} at M={m1}",
                num(o0.frequency()),
                num(o1.frequency())
            ));
        }
    }
    report
        .section("sweep")
        .kv("monotone", violations.is_empty());
    finish(report, a.output.as_deref(), &summary, &violations, &opts)
}

fn write_outcome(report: &mut Report, m: usize, o: &TrialOutcome) {
    let (lo, hi) = o.wilson_interval();
    let s = report.section(&format!("M={m}"));
    s.kv("successes", o.successes)
        .kv("trials", o.trials)
        .num("frequency", o.frequency())
        .num("failure_frequency", o.failure_frequency())
        .num("wilson_low", lo)
        .num("wilson_high", hi)
        .num("threshold", o.threshold)
        .kv("evaluated_per_trial", o.evaluated_per_trial);
    if let Some(t) = o.theorem_m {
        s.num("theorem_m", t).kv(
            "meets_theorem_m",
            o.meets_theorem_m(m).expect("theorem_m set"),
        );
    }
    s.kv("failures", o.failures.len());
    for w in &o.failures {
        let right = if w.right.is_empty() {
            String::new()
        } else {
            format!(" J={}", list(&w.right))
        };
        s.kv(
            format!("failure.{}", w.trial),
            format!(
                "seed={} value={} delta_1={} I={}{right}",
                w.seed,
                num(w.value),
                num(w.delta1),
                list(&w.left)
            ),
        );
    }
}

fn write_table(report: &mut Report, t: &TailTable) {
    let s = report.section(&format!("M={}", t.m));
    s.kv("trials", t.trials).kv("seed", t.seed);
    for (i, r) in t.rows.iter().enumerate() {
        let mut line = format!(
            "theta={} exceed={} upper={} lower={} empirical={} bound={} std_err={} dominated={} symmetric={}",
            num(r.theta_hat),
            r.exceed,
            r.upper,
            r.lower,
            num(r.empirical),
            num(r.bound),
            num(r.std_err),
            r.dominated,
            r.symmetric
        );
        if let (Some(pb), Some(pd)) = (r.printed_bound, r.printed_dominated) {
            line.push_str(&format!(
                " simplified_bound={} under_simplified={pd}",
                num(pb)
            ));
        }
        s.kv(format!("row.{i}"), line);
    }
    s.kv("all_dominated", t.all_dominated())
        .kv("all_symmetric", t.all_symmetric());
}

fn grid_or_default(grid: &[f64]) -> Vec<f64> {
    if grid.is_empty() {
        default_theta_grid()
    } else {
        grid.to_vec()
    }
}

fn tail(a: TailArgs) -> CliResult<i32> {
    let opts = enum_options(None);
    let grid = grid_or_default(&a.grid);
    let mut report = Report::new("mc tail");
    report
        .section("tail")
        .kv(
            "statistic",
            "sum_m X_m Y_m, X ~ N(0, K1/M), Y ~ N(0, K2/M), threshold theta_hat sqrt(K1 K2)",
        )
        .kv("bound", "2 exp(-M theta_hat^2 / 4)")
        .kv("k1", a.k1)
        .kv("k2", a.k2)
        .kv("trials", a.trials)
        .kv("seed", a.seed);
    let mut violations = Vec::new();
    let mut summary = Vec::new();
    for &m in &a.m {
        let start = Instant::now();
        let t = column_sum_tail(m, a.k1, a.k2, a.trials, a.seed, &grid);
        report.time(format!("M={m}"), start.elapsed());
        for r in t.rows.iter().filter(|r| !r.dominated) {
            violations.push(format!(
                "M={m}, theta_hat={}: empirical {} exceeds bound {} by more than 3 standard errors",
                num(r.theta_hat),
                num(r.empirical),
                num(r.bound)
            ));
        }
        summary.push(format!(
            "M={m}: dominated={} symmetric={}",
            t.all_dominated(),
            t.all_symmetric()
        ));
        write_table(&mut report, &t);
    }
    finish(report, a.output.as_deref(), &summary, &violations, &opts)
}

fn d1_tail(a: Delta1TailArgs) -> CliResult<i32> {
    let opts = enum_options(None);
    let grid = grid_or_default(&a.grid);
    let mut report = Report::new("mc delta1-tail");
    report
        .section("tail")
        .kv("statistic", "delta_1 of an M x N Gaussian matrix")
        .kv("bound", "2 N exp(-t), sqrt(t/M) = (sqrt(1 + 2d) - 1)/2")
        .kv("simplified_bound", "2 exp(-M d / 4 + ln N)")
        .kv("n", a.n)
        .kv("trials", a.trials)
        .kv("seed", a.seed);
    let mut violations = Vec::new();
    let mut summary = Vec::new();
    for &m in &a.m {
        let start = Instant::now();
        let t = delta1_tail(m, a.n, a.trials, a.seed, &grid);
        report.time(format!("M={m}"), start.elapsed());
        for r in t.rows.iter().filter(|r| !r.dominated) {
            violations.push(format!(
                "M={m}, d={}: empirical {} exceeds bound {}",
                num(r.theta_hat),
                num(r.empirical),
                num(r.bound)
            ));
        }
        let under = t
            .rows
            .iter()
            .filter(|r| r.printed_dominated == Some(true))
            .count();
        summary.push(format!(
            "M={m}: dominated={} under simplified bound at {under}/{} points",
            t.all_dominated(),
            t.rows.len()
        ));
        write_table(&mut report, &t);
    }
    finish(report, a.output.as_deref(), &summary, &violations, &opts)
}
