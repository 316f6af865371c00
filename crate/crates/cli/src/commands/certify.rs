use ripcert::certification::{
    appendix_c, appendix_c0, appendix_c1, appendix_t, certify, CertificationReport, CertifyPlan,
    SparkResult, FRO_CONSTANT, QUOTED_APPENDIX_CONSTANT,
};

use super::{enum_options, finish, load_frame};
use crate::args::CertifyArgs;
use crate::error::{CliError, CliResult};
use crate::report::{list, num, Report};

fn parse_power(raw: &[String]) -> CliResult<Vec<(usize, Vec<u32>)>> {
    raw.chunks(2)
        .map(|pair| {
            let bad = || CliError::Usage(format!("--power expects 'K q1,q2,...', got {pair:?}"));
            let [k, qs] = pair else { return Err(bad()) };
            let k = k.parse().map_err(|_| bad())?;
            let qs = qs
                .split(',')
                .map(|q| q.trim().parse())
                .collect::<Result<Vec<u32>, _>>()
                .map_err(|_| bad())?;
            Ok((k, qs))
        })
        .collect()
}

pub fn run(a: CertifyArgs) -> CliResult<i32> {
    let opts = enum_options(a.budget);
    let mut report = Report::new("certify");
    let f = load_frame(&a.input, "matrix", &mut report)?;
    let plan = CertifyPlan {
        gershgorin: a.gershgorin,
        exact_ric: a.exact_ric.clone(),
        power: parse_power(&a.power)?,
        roc: a.roc.clone(),
        fro: a.fro.clone(),
        spark_cap: a.spark,
        spark_tol: a.spark_tol,
        bounds: a.bounds,
    };
    report
        .section("options")
        .kv("budget", opts.budget)
        .num("spark_tol", plan.spark_tol);
    let r = certify(&f, &plan, &opts)?;
    write_sections(&mut report, &r, plan.bounds);
    for (name, d) in &r.timings {
        report.time(name.clone(), *d);
    }
    let violations: Vec<String> = r
        .violations()
        .into_iter()
        .map(|v| format!("{}: {}", v.check, v.detail))
        .collect();
    let mut summary = vec![format!("frame: {} ({} x {})", r.label, r.m, r.n)];
    for rec in &r.records {
        if let Some(e) = &rec.ric_exact {
            summary.push(format!("delta_{} = {}", rec.k, num(e.value)));
        }
    }
    if let Some(s) = &r.spark {
        summary.push(format!("spark = {s}"));
    }
    summary.push(format!("violations: {}", violations.len()));
    finish(report, a.output.as_deref(), &summary, &violations, &opts)
}

fn write_sections(report: &mut Report, r: &CertificationReport, bounds: bool) {
    let opt = |x: Option<f64>| x.map_or("undefined".to_string(), num);
    report
        .section("frame")
        .kv("label", &r.label)
        .kv("rows", r.m)
        .kv("cols", r.n)
        .kv("coherence", opt(r.coherence))
        .kv("welch", opt(r.welch))
        .num("delta_1", r.delta1)
        .num("etf.tol", r.etf.tol)
        .num("etf.unit_norm_dev", r.etf.unit_norm_dev)
        .num("etf.tightness_dev", r.etf.tightness_dev)
        .num("etf.equiangular_spread", r.etf.equiangular_spread)
        .kv("etf", r.etf.all());
    for rec in &r.records {
        let s = report.section(&format!("K={}", rec.k));
        if let Some(g) = rec.gershgorin {
            s.num("gershgorin", g);
        }
        if let Some(e) = &rec.ric_exact {
            s.num("ric_exact", e.value)
                .kv("ric_exact.witness", list(&e.witness))
                .kv("ric_exact.evaluated", e.evaluated);
        }
        for (q, e) in &rec.ric_power {
            s.num(format!("ric_power.q={q}"), e.value)
                .kv(format!("ric_power.q={q}.witness"), list(&e.witness))
                .kv(format!("ric_power.q={q}.evaluated"), e.evaluated);
        }
        for (name, pe) in [("roc", &rec.roc), ("fro", &rec.fro)] {
            if let Some(e) = pe {
                s.num(name, e.value)
                    .kv(format!("{name}.left"), list(&e.left))
                    .kv(format!("{name}.right"), list(&e.right))
                    .kv(format!("{name}.evaluated"), e.evaluated);
            }
        }
        for (name, v) in &rec.derived {
            s.num(format!("bound {name}"), *v);
        }
    }
    if let Some(sp) = &r.spark {
        let s = report.section("spark");
        s.kv("spark", sp).kv("evaluated", sp.evaluated());
        if let SparkResult::Exact { witness, .. } = sp {
            s.kv("witness", list(witness));
        }
    }
    if bounds {
        let s = report.section("constants");
        s.num("flat_orthogonality_constant", FRO_CONSTANT)
            .num("appendix.c0", appendix_c0())
            .num("appendix.c1", appendix_c1())
            .num("appendix.c.computed", appendix_c())
            .num("appendix.c.quoted", QUOTED_APPENDIX_CONSTANT);
        for rec in r
            .records
            .iter()
            .filter(|rec| rec.fro.is_some() && rec.k >= 2)
        {
            s.kv(format!("appendix.t.K={}", rec.k), appendix_t(rec.k));
        }
    }
    if !r.notes.is_empty() {
        let s = report.section("notes");
        for (i, n) in r.notes.iter().enumerate() {
            s.kv(format!("note.{i}"), n);
        }
    }
}
