use std::path::PathBuf;

use ripcert::certification::{coherence, verify_etf, welch_bound};
use ripcert::constructions::{
    all_pairs_steiner, hadamard, paley_etf, realify, steiner_etf, steiner_triple, HadamardKind,
};
use ripcert::montecarlo::Ensemble;
use ripcert::{Frame, SteinerSystem};

use super::{etf_summary, out, read_bytes, write_text};
use crate::args::{Construct, RandomArgs};
use crate::error::{exit, CliError, CliResult};
use crate::format::{read_steiner, write_matrix, write_steiner};
use crate::report::num;

pub fn run(c: Construct) -> CliResult<i32> {
    let (frame, output) = match c {
        Construct::Steiner {
            v,
            k,
            hadamard: kind,
            blocks,
            blocks_out,
            output,
        } => {
            let system = steiner_system(v, k, blocks)?;
            if let Some(path) = blocks_out {
                write_text(&path, &write_steiner(&system))?;
            }
            let order = system.replication() + 1;
            let kind = match kind.as_str() {
                "auto" if order.is_power_of_two() => HadamardKind::Sylvester,
                "auto" => HadamardKind::Dft,
                other => other.parse()?,
            };
            (steiner_etf(&system, &hadamard(order, kind)?)?, output)
        }
        Construct::Paley {
            p,
            any_prime,
            real,
            output,
        } => {
            let f = paley_etf(p, !any_prime)?;
            let f = if real { realify(&f, 1e-9)? } else { f };
            (f, output)
        }
        Construct::Gaussian(a) => random(Ensemble::Gaussian, a),
        Construct::Bernoulli(a) => random(Ensemble::Bernoulli, a),
    };
    let text = write_matrix(frame.matrix(), frame.label());
    let summary = summary(&frame);
    match output {
        Some(path) => {
            write_text(&path, &text)?;
            for line in summary {
                out(&format!("{line}\n"));
            }
        }
        None => {
            for line in summary {
                eprintln!("{line}");
            }
            out(&text);
        }
    }
    Ok(exit::OK)
}

fn steiner_system(
    v: Option<usize>,
    k: Option<usize>,
    blocks: Option<PathBuf>,
) -> CliResult<SteinerSystem> {
    if let Some(path) = blocks {
        let bytes = read_bytes(&path)?;
        let s = read_steiner(
            &path.display().to_string(),
            &String::from_utf8_lossy(&bytes),
        )?;
        if v.is_some_and(|v| v != s.v()) || k.is_some_and(|k| k != s.k()) {
            return Err(CliError::Usage(format!(
                "{} holds a (2,{},{}) system",
                path.display(),
                s.k(),
                s.v()
            )));
        }
        return Ok(s);
    }
    let (Some(v), Some(k)) = (v, k) else {
        return Err(CliError::Usage(
            "steiner needs --v and --k, or --blocks".into(),
        ));
    };
    match k {
        2 => Ok(all_pairs_steiner(v)?),
        3 => Ok(steiner_triple(v)?),
        _ => Err(CliError::Usage(format!(
            "no built-in (2,{k},v) systems; load one with --blocks"
        ))),
    }
}

fn random(e: Ensemble, a: RandomArgs) -> (Frame, Option<PathBuf>) {
    (e.draw(a.m, a.n, a.seed), a.output)
}

fn summary(f: &Frame) -> Vec<String> {
    let opt = |x: Option<f64>| x.map_or("undefined".to_string(), num);
    vec![
        format!("label: {}", f.label()),
        format!("M: {}", f.m()),
        format!("N: {}", f.n()),
        format!("coherence: {}", opt(coherence(f).ok())),
        format!("welch: {}", opt(welch_bound(f.m(), f.n()).ok())),
        format!("etf: {}", etf_summary(&verify_etf(f, 1e-12))),
    ]
}
