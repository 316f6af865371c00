#![allow(dead_code)]

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ripcert::DenseMatrix;
use ripcert_cli::format::read_matrix;
use ripcert_cli::report::report_body;

pub fn ripcert_with_workers(dir: &Path, workers: usize, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ripcert"))
        .args(args)
        .current_dir(dir)
        .env("RIPCERT_WORKERS", workers.to_string())
        .output()
        .expect("binary runs")
}

pub fn ripcert(dir: &Path, args: &[&str]) -> Output {
    ripcert_with_workers(dir, 1, args)
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn read_matrix_file(path: &Path) -> DenseMatrix {
    let text = fs::read_to_string(path).expect("matrix file exists");
    read_matrix(&path.display().to_string(), &text)
        .expect("valid matrix file")
        .0
}

pub fn body_of(path: &Path) -> String {
    report_body(&fs::read_to_string(path).expect("report exists")).to_string()
}

/// The value of `key` in section `[section]` of a rendered report.
pub fn report_value(text: &str, section: &str, key: &str) -> Option<String> {
    let header = format!("[{section}]");
    let mut inside = false;
    for line in text.lines() {
        if line.starts_with('[') {
            inside = line == header;
            continue;
        }
        if inside {
            if let Some((k, v)) = line.split_once(": ") {
                if k == key {
                    return Some(v.to_string());
                }
            }
        }
    }
    None
}

/// Entries of the printed 6x16 Steiner frame, times sqrt(3).
pub const STEINER_SIGNS: [&str; 6] = [
    "+-+-+-+-........",
    "++--....+-+-....",
    "+--+........+-+-",
    "....++--++--....",
    "....+--+....++--",
    "........+--++--+",
];
