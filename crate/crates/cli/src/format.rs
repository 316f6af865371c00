//! Text file formats for matrices, Steiner systems and graphs.
//!
//! Every file starts with a magic word and a version number. Blank lines and
//! lines starting with `#` are ignored.
//!
//! ```text
//! ripcert-matrix 1
//! rows: 2
//! cols: 2
//! complex: false
//! label: example
//! 1.0000000000000000e0 0.0000000000000000e0
//! 0.0000000000000000e0 1.0000000000000000e0
//! ```
//!
//! Complex matrices write each entry as `re+imj`. Seventeen significant
//! digits round-trip every double, including the sign of zero.

use num_complex::Complex64;
use ripcert::graphs::SimpleGraph;
use ripcert::{DenseMatrix, SteinerSystem};

use crate::error::{CliError, CliResult};

pub const MATRIX_MAGIC: &str = "ripcert-matrix";
pub const STEINER_MAGIC: &str = "ripcert-steiner";
pub const GRAPH_MAGIC: &str = "ripcert-graph";
pub const VERSION: u32 = 1;

/// Formats `x` with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_entry(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { "" } else { "+" };
    format!("{}{sign}{}j", fmt_f64(z.re), fmt_f64(z.im))
}

/// Splits `re+imj` / `re-imj` at the sign that starts the imaginary part.
fn parse_entry(s: &str) -> Option<Complex64> {
    let Some(body) = s.strip_suffix('j') else {
        return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))?;
    let re = body[..split].parse::<f64>().ok()?;
    let im = body[split..].trim_start_matches('+').parse::<f64>().ok()?;
    Some(Complex64::new(re, im))
}

/// True when every imaginary part is `+0.0`, so dropping them loses nothing.
fn storable_as_real(m: &DenseMatrix) -> bool {
    m.entries().iter().all(|z| z.im.to_bits() == 0)
}

pub fn write_matrix(m: &DenseMatrix, label: &str) -> String {
    let complex = !storable_as_real(m);
    let mut out = format!(
        "{MATRIX_MAGIC} {VERSION}\nrows: {}\ncols: {}\ncomplex: {complex}\nlabel: {label}\n",
        m.rows(),
        m.cols()
    );
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|&z| if complex { fmt_entry(z) } else { fmt_f64(z.re) })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

struct Reader<'a, I: Iterator<Item = (usize, &'a str)>> {
    path: &'a str,
    lines: std::iter::Peekable<I>,
    last: usize,
}

impl<'a, I: Iterator<Item = (usize, &'a str)>> Reader<'a, I> {
    fn err(&self, line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            path: self.path.to_string(),
            line,
            message: message.into(),
        }
    }

    fn next(&mut self, what: &str) -> CliResult<(usize, &'a str)> {
        match self.lines.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l))
            }
            None => Err(self.err(
                self.last + 1,
                format!("unexpected end of file, expected {what}"),
            )),
        }
    }

    fn header(&mut self, magic: &str) -> CliResult<()> {
        let (n, l) = self.next("header")?;
        let mut parts = l.split_whitespace();
        if parts.next() != Some(magic) {
            return Err(self.err(n, format!("expected '{magic} <version>'")));
        }
        match parts.next().map(str::parse::<u32>) {
            Some(Ok(VERSION)) => Ok(()),
            Some(Ok(v)) => Err(self.err(n, format!("unsupported version {v}"))),
            _ => Err(self.err(n, "missing version")),
        }
    }

    fn field(&mut self, key: &str) -> CliResult<(usize, &'a str)> {
        let (n, l) = self.next(key)?;
        match l.split_once(':') {
            Some((k, v)) if k.trim() == key => Ok((n, v.trim())),
            _ => Err(self.err(n, format!("expected '{key}: ...'"))),
        }
    }

    fn parse_field<T: std::str::FromStr>(&mut self, key: &str) -> CliResult<T> {
        let (n, v) = self.field(key)?;
        v.parse()
            .map_err(|_| self.err(n, format!("bad value '{v}' for {key}")))
    }
}

fn reader<'a>(path: &'a str, text: &'a str) -> Reader<'a, impl Iterator<Item = (usize, &'a str)>> {
    Reader {
        path,
        lines: content_lines(text).peekable(),
        last: 0,
    }
}

/// Parses a matrix file; `path` is used in error messages only.
pub fn read_matrix(path: &str, text: &str) -> CliResult<(DenseMatrix, String)> {
    let mut r = reader(path, text);
    r.header(MATRIX_MAGIC)?;
    let rows: usize = r.parse_field("rows")?;
    let cols: usize = r.parse_field("cols")?;
    let complex: bool = r.parse_field("complex")?;
    // the label line is optional
    let label = match r.lines.peek() {
        Some((_, l)) if l.starts_with("label:") => r.field("label")?.1.to_string(),
        _ => String::new(),
    };
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let (n, l) = r.next(&format!("row {i}"))?;
        let before = data.len();
        for tok in l.split_whitespace() {
            let z = if complex {
                parse_entry(tok)
            } else {
                tok.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0))
            };
            data.push(z.ok_or_else(|| r.err(n, format!("bad entry '{tok}'")))?);
        }
        if data.len() - before != cols {
            return Err(r.err(
                n,
                format!(
                    "row {i} has {} entries, expected {cols}",
                    data.len() - before
                ),
            ));
        }
    }
    if let Some((n, _)) = r.lines.next() {
        return Err(r.err(n, format!("trailing content after {rows} rows")));
    }
    let m = DenseMatrix::new(rows, cols, data)?;
    Ok((m, label))
}

pub fn write_steiner(s: &SteinerSystem) -> String {
    let mut out = format!("{STEINER_MAGIC} {VERSION}\n{} {}\n", s.v(), s.k());
    for b in s.blocks() {
        let b: Vec<String> = b.iter().map(usize::to_string).collect();
        out.push_str(&b.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a block list: `v k`, then one block of `k` zero-based points per line.
pub fn read_steiner(path: &str, text: &str) -> CliResult<SteinerSystem> {
    let mut r = reader(path, text);
    r.header(STEINER_MAGIC)?;
    let (n, l) = r.next("'v k'")?;
    let nums: Vec<usize> = l
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| r.err(n, "expected 'v k'"))?;
    let [v, k] = nums[..] else {
        return Err(r.err(n, "expected 'v k'"));
    };
    let mut blocks = Vec::new();
    while let Some((n, l)) = r.lines.next() {
        let b: Vec<usize> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| r.err(n, "bad block"))?;
        blocks.push(b);
    }
    Ok(SteinerSystem::new(v, k, blocks)?)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("{GRAPH_MAGIC} {VERSION}\nvertices: {}\n", g.n());
    for (i, nb) in g.adjacency_lists().iter().enumerate() {
        out.push_str(&format!("{i}:"));
        for j in nb {
            out.push_str(&format!(" {j}"));
        }
        out.push('\n');
    }
    out
}

/// Parses an adjacency list: `vertices: n`, then lines `i: j1 j2 ...`.
/// Vertices without a line are isolated; each edge may be listed from either end.
pub fn read_graph(path: &str, text: &str) -> CliResult<SimpleGraph> {
    let mut r = reader(path, text);
    r.header(GRAPH_MAGIC)?;
    let n: usize = r.parse_field("vertices")?;
    let mut g = SimpleGraph::empty(n);
    while let Some((ln, l)) = r.lines.next() {
        let (head, tail) = l
            .split_once(':')
            .ok_or_else(|| r.err(ln, "expected 'i: neighbours'"))?;
        let i: usize = head.trim().parse().map_err(|_| r.err(ln, "bad vertex"))?;
        for tok in tail.split_whitespace() {
            let j: usize = tok
                .parse()
                .map_err(|_| r.err(ln, format!("bad neighbour '{tok}'")))?;
            if i >= n || j >= n || i == j {
                return Err(r.err(
                    ln,
                    format!("invalid edge {i}-{j} in a graph on {n} vertices"),
                ));
            }
            g.add_edge(i, j);
        }
    }
    Ok(g)
}
