use std::path::Path;
use std::time::Instant;

use ripcert::certification::{fro_constant, EnumOptions};
use ripcert::constructions::{realify, split_seed};
use ripcert::graphs::{
    clique_number, clique_ric_identity, expander_mixing_check, flip_canonical, fro_from_graph,
    graph_from_seidel, join_decompose, paley_graph, predicted_srg, seidel_from_gram,
    seidel_trace_expansion, srg_check, SimpleGraph, SrgOutcome,
};
use ripcert::{Error, Frame};

use super::{enum_options, finish, load_frame, read_bytes, write_text};
use crate::args::GraphArgs;
use crate::error::{CliError, CliResult};
use crate::format::{read_graph, write_graph};
use crate::report::{list, Report};

/// Sign tolerance when splitting a Gram matrix into `I + mu S`.
const SEIDEL_TOL: f64 = 1e-9;

enum Source {
    /// Real frame and the flip anchor.
    Frame(Frame, usize),
    Paley(u64),
    File,
}

pub fn run(a: GraphArgs) -> CliResult<i32> {
    let opts = enum_options(a.budget);
    let mut report = Report::new("graph");
    let mut violations = Vec::new();
    let mut summary = Vec::new();

    let (source, g) = if let Some(path) = &a.input {
        let (f, anchor, g) = frame_pipeline(path, &a, &mut report, &mut violations, &mut summary)?;
        (Source::Frame(f, anchor), g)
    } else if let Some(p) = a.paley_graph {
        let g = paley_graph(p)?;
        report.section("source").kv("paley_graph", p);
        (Source::Paley(p), g)
    } else if let Some(path) = &a.graph {
        let bytes = read_bytes(path)?;
        let g = read_graph(
            &path.display().to_string(),
            &String::from_utf8_lossy(&bytes),
        )?;
        let name = path.file_name().map_or_else(
            || path.display().to_string(),
            |n| n.to_string_lossy().into(),
        );
        report.input("graph", &name, &bytes);
        (Source::File, g)
    } else {
        return Err(CliError::Usage(
            "give a matrix file, --paley-graph P, or --graph FILE".into(),
        ));
    };
    report
        .section("graph")
        .kv("vertices", g.n())
        .kv("edges", g.edge_count())
        .kv(
            "degree",
            g.regular_degree()
                .map_or("irregular".to_string(), |d| d.to_string()),
        );
    if let Some(path) = &a.graph_out {
        write_text(path, &write_graph(&g))?;
    }

    if a.srg_check && !matches!(source, Source::Frame(..)) {
        let outcome = srg_check(&g);
        summary.push(format!("srg: {outcome}"));
        let s = report.section("srg");
        s.kv("check", &outcome);
        if let (true, Source::Paley(p)) = (a.predicted_srg, &source) {
            let m = (*p as usize).div_ceil(2);
            match predicted_srg(m, *p as usize + 1) {
                Ok(pred) => {
                    let matches = outcome == SrgOutcome::Srg(pred);
                    s.kv("predicted", pred).kv("matches", matches);
                    if !matches {
                        violations.push(format!("srg {outcome} differs from predicted {pred}"));
                    }
                }
                Err(e) => {
                    s.kv("predicted", e);
                }
            }
        }
    }

    let mut omega = None;
    if a.clique || a.identity {
        let start = Instant::now();
        let c = clique_number(&g, a.clique_budget);
        report.time("clique", start.elapsed());
        let s = report.section("clique");
        s.kv("omega", c.size)
            .kv("witness", list(&c.witness))
            .kv("nodes", c.nodes)
            .kv("exact", c.exact);
        if !c.exact {
            return Err(Error::EnumerationTooLarge {
                count: c.nodes as u128,
                budget: a.clique_budget as u128,
            }
            .into());
        }
        if let Source::Paley(p) = source {
            let sqrt_p = (p as f64).sqrt();
            let holds = (c.size as f64) < sqrt_p;
            s.num("sqrt_p", sqrt_p).kv("omega < sqrt_p", holds);
            if !holds {
                violations.push(format!("omega = {} is not below sqrt({p})", c.size));
            }
        }
        summary.push(format!("omega: {}", c.size));
        omega = Some(c.size);
    }

    if let Some(trials) = a.mixing {
        mixing(
            &g,
            trials,
            a.seed,
            &mut report,
            &mut violations,
            &mut summary,
        )?;
    }

    let frame = match &source {
        Source::Frame(f, anchor) => Some((f, *anchor)),
        _ => None,
    };
    let needs_frame =
        |what: &str| CliError::Usage(format!("{what} needs an equiangular tight frame input"));

    if a.identity {
        let (f, anchor) = frame.ok_or_else(|| needs_frame("--identity"))?;
        let omega = omega.expect("clique computed above");
        let s = report.section("clique_identity");
        s.kv("k_range", format!("2..={}", omega + 1));
        for k in 2..=omega + 1 {
            let start = Instant::now();
            let c = clique_ric_identity(f, &g, anchor, k, &opts)?;
            report.time(format!("clique identity K={k}"), start.elapsed());
            let s = report.section("clique_identity");
            s.num(format!("K={k}.ric_exact"), c.delta.value)
                .kv(format!("K={k}.ric_exact.witness"), list(&c.delta.witness))
                .kv(format!("K={k}.ric_exact.evaluated"), c.delta.evaluated)
                .num(format!("K={k}.predicted"), c.predicted)
                .kv(format!("K={k}.clique"), list(&c.clique))
                .num(format!("K={k}.clique_norm"), c.clique_norm)
                .kv(format!("K={k}.holds"), c.holds);
            if !c.holds {
                violations.push(format!(
                    "K={k}: ric_exact {} differs from (K-1) mu = {}",
                    c.delta.value, c.predicted
                ));
            }
        }
    }

    if !a.trace_expansion.is_empty() {
        let (f, _) = frame.ok_or_else(|| needs_frame("--trace-expansion"))?;
        trace(
            f,
            &a.trace_expansion,
            &mut report,
            &mut violations,
            &mut summary,
        )?;
    }

    if let Some(kmax) = a.fro_edges {
        let (f, _) = frame.ok_or_else(|| needs_frame("--fro-edges"))?;
        fro_edges(f, kmax, &opts, &mut report, &mut violations)?;
    }

    finish(report, a.output.as_deref(), &summary, &violations, &opts)
}

/// realify, flip at the anchor, split off the Seidel matrix, remove the
/// universal vertex, and compare the remaining graph with the predicted
/// strongly regular parameters.
fn frame_pipeline(
    path: &Path,
    a: &GraphArgs,
    report: &mut Report,
    violations: &mut Vec<String>,
    summary: &mut Vec<String>,
) -> CliResult<(Frame, usize, SimpleGraph)> {
    let input = load_frame(path, "matrix", report)?;
    let real = if input.is_real() {
        input.clone()
    } else {
        realify(&input, SEIDEL_TOL)?
    };
    let anchor = a.canonicalize.unwrap_or(real.n().saturating_sub(1));
    let flipped = flip_canonical(&real, anchor)?;
    let (s, mu) = seidel_from_gram(&flipped, SEIDEL_TOL)?;
    let joined = graph_from_seidel(&s);
    let g = join_decompose(&joined, anchor)?;
    let outcome = srg_check(&g);
    let sec = report.section("pipeline");
    sec.kv("label", input.label())
        .kv("input_rows", input.m())
        .kv("input_cols", input.n())
        .kv("realified", !input.is_real())
        .kv("real_rows", real.m())
        .kv("anchor", anchor)
        .num("mu", mu)
        .kv("srg", &outcome);
    summary.push(format!("srg: {outcome}"));
    match predicted_srg(input.m(), input.n()) {
        Ok(pred) => {
            let matches = outcome == SrgOutcome::Srg(pred);
            sec.kv("predicted_srg", pred).kv("matches", matches);
            summary.push(format!("predicted: {pred} (matches: {matches})"));
            if !matches {
                violations.push(format!("srg {outcome} differs from predicted {pred}"));
            }
        }
        Err(e) => {
            sec.kv("predicted_srg", e);
        }
    }
    if a.seidel {
        let sec = report.section("seidel");
        for i in 0..s.n() {
            let row: String = (0..s.n())
                .map(|j| match s.get(i, j) {
                    1 => '+',
                    -1 => '-',
                    _ => '0',
                })
                .collect();
            sec.kv(format!("row.{i}"), row);
        }
    }
    Ok((real, anchor, g))
}

/// Independent fair coin per vertex and set, from the seed alone.
fn random_sets(n: usize, seed: u64, trial: usize) -> (Vec<usize>, Vec<usize>) {
    let base = split_seed(seed).wrapping_add((trial as u64).wrapping_mul(n as u64));
    let (mut i_set, mut j_set) = (Vec::new(), Vec::new());
    for v in 0..n {
        let bits = split_seed(base.wrapping_add(v as u64));
        if bits & 1 == 1 {
            i_set.push(v);
        }
        if bits & 2 == 2 {
            j_set.push(v);
        }
    }
    (i_set, j_set)
}

fn mixing(
    g: &SimpleGraph,
    trials: usize,
    seed: u64,
    report: &mut Report,
    violations: &mut Vec<String>,
    summary: &mut Vec<String>,
) -> CliResult<()> {
    let mut held = 0;
    let mut worst = (0.0f64, 0usize);
    let mut lambda = None;
    for t in 0..trials {
        let (i_set, j_set) = random_sets(g.n(), seed, t);
        let c = expander_mixing_check(g, &i_set, &j_set)?;
        lambda = Some(c.lambda);
        if c.holds {
            held += 1;
        } else {
            violations.push(format!("mixing trial {t}: {} > {}", c.lhs, c.rhs));
        }
        if c.rhs > 0.0 && c.lhs / c.rhs > worst.0 {
            worst = (c.lhs / c.rhs, t);
        }
    }
    let s = report.section("mixing");
    s.kv("trials", trials).kv("seed", seed).kv(
        "lambda_form",
        "max |eigenvalue| over non-principal eigenvalues",
    );
    if let Some(l) = lambda {
        s.num("lambda", l);
    }
    s.kv("held", held)
        .num("worst_ratio", worst.0)
        .kv("worst_trial", worst.1);
    summary.push(format!("mixing: {held}/{trials} held"));
    Ok(())
}

fn trace(
    f: &Frame,
    raw: &[String],
    report: &mut Report,
    violations: &mut Vec<String>,
    summary: &mut Vec<String>,
) -> CliResult<()> {
    let bad = || {
        CliError::Usage(format!(
            "--trace-expansion expects 'i,j,... q', got {raw:?}"
        ))
    };
    let [kset, q] = raw else { return Err(bad()) };
    let kset: Vec<usize> = kset
        .split(',')
        .map(|x| x.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let q: u32 = q.parse().map_err(|_| bad())?;
    let start = Instant::now();
    let t = seidel_trace_expansion(f, &kset, q)?;
    report.time("trace expansion", start.elapsed());
    let s = report.section("trace_expansion");
    s.kv("kset", list(&kset))
        .kv("q", q)
        .num("direct", t.direct)
        .num("expansion", t.expansion)
        .kv("tuple_sum", t.tuple_sum)
        .kv("tuples", t.tuples)
        .kv("holds", t.holds);
    if !t.holds {
        violations.push(format!(
            "trace {} differs from expansion {}",
            t.direct, t.expansion
        ));
    }
    if let Some((first, rest)) = t.q2_split {
        let k = kset.len() as i64;
        let expected = k * (k - 1) * (k - 1);
        s.kv("q2.returning_walks", first)
            .kv("q2.other_walks", rest)
            .kv("q2.expected_returning", expected);
        if first != expected {
            violations.push(format!(
                "q=2 returning-walk term {first} differs from K(K-1)^2 = {expected}"
            ));
        }
    }
    summary.push(format!("trace expansion holds: {}", t.holds));
    Ok(())
}

fn fro_edges(
    f: &Frame,
    kmax: usize,
    opts: &EnumOptions,
    report: &mut Report,
    violations: &mut Vec<String>,
) -> CliResult<()> {
    for k in 1..=kmax {
        let start = Instant::now();
        let direct = fro_constant(f, k, opts)?;
        let edges = fro_from_graph(f, k, opts)?;
        report.time(format!("fro edges K={k}"), start.elapsed());
        let diff = (direct.value - edges.value).abs();
        report
            .section("fro_edges")
            .num(format!("K={k}.fro"), direct.value)
            .num(format!("K={k}.edge_form"), edges.value)
            .kv(format!("K={k}.evaluated"), direct.evaluated)
            .num(format!("K={k}.difference"), diff);
        if diff > 1e-9 {
            violations.push(format!(
                "K={k}: fro {} differs from edge form {}",
                direct.value, edges.value
            ));
        }
    }
    Ok(())
}
