//! Structured text reports.
//!
//! A report is a header followed by `[section]` blocks of `key: value`
//! lines. The last block, `[timing]`, holds wall-clock times and the worker
//! count; everything before it (the body) depends only on the inputs and
//! seeds.

use std::fmt::Display;
use std::time::Duration;

use sha2::{Digest, Sha256};

pub const REPORT_MAGIC: &str = "ripcert-report";
pub const REPORT_VERSION: u32 = 1;
const TIMING: &str = "[timing]";

/// Shortest representation that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Default)]
pub struct Section {
    name: String,
    entries: Vec<(String, String)>,
}

impl Section {
    pub fn kv(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn num(&mut self, key: impl Into<String>, value: f64) -> &mut Self {
        self.kv(key, num(value))
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    sections: Vec<Section>,
    timing: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            sections: vec![],
            timing: vec![],
        }
    }

    /// Records an input file by name and SHA-256 digest.
    pub fn input(&mut self, name: &str, file_name: &str, bytes: &[u8]) {
        self.section("inputs")
            .kv(name, file_name)
            .kv(format!("{name}.sha256"), sha256_hex(bytes));
    }

    /// The section called `name`, created at the end if missing.
    pub fn section(&mut self, name: &str) -> &mut Section {
        let idx = match self.sections.iter().position(|s| s.name == name) {
            Some(i) => i,
            None => {
                self.sections.push(Section {
                    name: name.to_string(),
                    entries: vec![],
                });
                self.sections.len() - 1
            }
        };
        &mut self.sections[idx]
    }

    pub fn find(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn time(&mut self, key: impl Into<String>, d: Duration) {
        self.timing
            .push((key.into(), format!("{:.6} s", d.as_secs_f64())));
    }

    pub fn timing_note(&mut self, key: impl Into<String>, value: impl Display) {
        self.timing.push((key.into(), value.to_string()));
    }

    /// Everything except the timing block.
    pub fn body(&self) -> String {
        let mut out = format!(
            "{REPORT_MAGIC} {REPORT_VERSION}\ntool: ripcert {}\ncommand: {}\n",
            env!("CARGO_PKG_VERSION"),
            self.command
        );
        for s in &self.sections {
            out.push_str(&format!("\n[{}]\n", s.name));
            for (k, v) in &s.entries {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        let mut out = self.body();
        out.push_str(&format!("\n{TIMING}\n"));
        for (k, v) in &self.timing {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }
}

/// The part of a rendered report that must be identical across runs.
pub fn report_body(text: &str) -> &str {
    match text.find(&format!("\n{TIMING}\n")) {
        Some(i) => &text[..i],
        None => text,
    }
}
