mod certify;
mod construct;
mod graph;
mod mc;

use std::fs;
use std::io::Write;
use std::path::Path;

use ripcert::certification::{EnumOptions, EtfAxioms};
use ripcert::Frame;

use crate::args::{Cli, Command};
use crate::error::{exit, CliError, CliResult};
use crate::format::read_matrix;
use crate::report::{num, Report};

pub fn execute(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Construct(c) => construct::run(c),
        Command::Certify(a) => certify::run(a),
        Command::Graph(a) => graph::run(a),
        Command::Mc(m) => mc::run(m),
    }
}

/// Writes to stdout, ignoring a closed pipe.
pub(crate) fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

pub(crate) fn read_bytes(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| CliError::io(path, e))
}

pub(crate) fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    )
}

/// Reads a matrix file and records its digest under `name`.
pub(crate) fn load_frame(path: &Path, name: &str, report: &mut Report) -> CliResult<Frame> {
    let bytes = read_bytes(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Parse {
        path: path.display().to_string(),
        line: 0,
        message: "not UTF-8".into(),
    })?;
    let (m, label) = read_matrix(&path.display().to_string(), &text)?;
    report.input(name, &file_name(path), &bytes);
    let label = if label.is_empty() {
        file_name(path)
    } else {
        label
    };
    Ok(Frame::new(m, label)?)
}

pub(crate) fn enum_options(budget: Option<u128>) -> EnumOptions {
    let opts = EnumOptions::default();
    match budget {
        Some(b) => opts.with_budget(b),
        None => opts,
    }
}

pub(crate) fn etf_summary(a: &EtfAxioms) -> String {
    format!(
        "unit_norm={} tight={} equiangular={} (deviations {}, {}, {}; tol {})",
        a.unit_norm(),
        a.tight(),
        a.equiangular(),
        num(a.unit_norm_dev),
        num(a.tightness_dev),
        num(a.equiangular_spread),
        num(a.tol)
    )
}

/// Records the invariant outcome, writes the report, and picks the exit code.
pub(crate) fn finish(
    mut report: Report,
    output: Option<&Path>,
    summary: &[String],
    violations: &[String],
    opts: &EnumOptions,
) -> CliResult<i32> {
    let inv = report.section("invariants");
    inv.kv(
        "status",
        if violations.is_empty() {
            "ok"
        } else {
            "violated"
        },
    );
    inv.kv("violations", violations.len());
    for (i, v) in violations.iter().enumerate() {
        inv.kv(format!("violation.{i}"), v);
    }
    report.timing_note("workers", opts.workers);
    let text = report.render();
    match output {
        Some(path) => {
            write_text(path, &text)?;
            for line in summary {
                out(&format!("{line}\n"));
            }
            out(&format!("report: {}\n", path.display()));
        }
        None => out(&text),
    }
    for v in violations {
        eprintln!("invariant violated: {v}");
    }
    Ok(if violations.is_empty() {
        exit::OK
    } else {
        exit::INVARIANT
    })
}
