//! The BKSET graph-set file.
//!
//! ```text
//! BKSET 1
//! SPEC n1 n2 m1 m2 seed weight_max
//! COUNT c
//! G n m          <- one block per graph
//! i j w          <- m arc lines, 1-based, in generation order
//! ```
//!
//! UTF-8, LF line endings, single spaces, decimal integers. The reader is
//! strict: anything that does not match the grammar, or describes a graph
//! with loops, duplicate arcs or out-of-range nodes, is rejected.

use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generator::GenSpec;
use crate::graph::{Arc, Graph};

pub const MAGIC: &str = "BKSET";
pub const VERSION: u32 = 1;

/// Serializes a set. `COUNT` is the number of graphs actually passed.
pub fn format_set(graphs: &[Graph], spec: &GenSpec) -> String {
    let mut out = String::new();
    writeln!(out, "{MAGIC} {VERSION}").unwrap();
    writeln!(
        out,
        "SPEC {} {} {} {} {} {}",
        spec.n1, spec.n2, spec.m1, spec.m2, spec.seed, spec.weight_max
    )
    .unwrap();
    writeln!(out, "COUNT {}", graphs.len()).unwrap();
    for g in graphs {
        writeln!(out, "G {} {}", g.node_count(), g.arc_count()).unwrap();
        for a in g.arcs() {
            writeln!(out, "{} {} {}", a.from, a.to, a.weight).unwrap();
        }
    }
    out
}

pub fn write_set(graphs: &[Graph], spec: &GenSpec, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(format_set(graphs, spec).as_bytes())
        .and_then(|_| file.flush())
        .map_err(|e| Error::io(path, e))
}

/// Reads a set, returning the echoed generation spec (with `count` set to the
/// declared count) and the graphs in file order.
pub fn read_set(path: impl AsRef<Path>) -> Result<(GenSpec, Vec<Graph>)> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    parse_set(BufReader::new(file)).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

pub fn parse_set_str(text: &str) -> Result<(GenSpec, Vec<Graph>)> {
    parse_set(text.as_bytes())
}

pub fn parse_set(reader: impl BufRead) -> Result<(GenSpec, Vec<Graph>)> {
    let mut lines = Lines {
        inner: reader.lines(),
        line: 0,
        record: None,
    };

    let header = lines.next_required()?;
    let magic = header.split(' ').collect::<Vec<_>>();
    match magic.as_slice() {
        [MAGIC, v] if *v == VERSION.to_string() => {}
        [MAGIC, v] => {
            return Err(Error::UnsupportedFormat(format!(
                "version {v} (this reader understands {VERSION})"
            )))
        }
        _ => {
            return Err(Error::UnsupportedFormat(format!(
                "bad magic line {header:?}"
            )))
        }
    }

    let spec_line = lines.next_required()?;
    let [n1, n2, m1, m2, seed, weight_max] = lines.fields::<6>(&spec_line, "SPEC")?;
    let count_line = lines.next_required()?;
    let [count] = lines.fields::<1>(&count_line, "COUNT")?;

    let spec = GenSpec {
        n1: lines.int(n1)?,
        n2: lines.int(n2)?,
        m1: lines.int(m1)?,
        m2: lines.int(m2)?,
        count: lines.int(count)?,
        seed: lines.int(seed)?,
        weight_max: lines.int(weight_max)?,
    };

    let mut graphs = Vec::with_capacity(spec.count.min(1 << 16));
    for index in 0..spec.count {
        lines.record = Some(index);
        let Some(head) = lines.next()? else {
            return Err(lines.corrupt(format!(
                "declared {} graphs but the file ends after {index}",
                spec.count
            )));
        };
        let [n, m] = lines.fields::<2>(&head, "G")?;
        let n: usize = lines.int(n)?;
        let m: usize = lines.int(m)?;
        let mut arcs = Vec::with_capacity(m.min(1 << 20));
        for _ in 0..m {
            let Some(arc_line) = lines.next()? else {
                return Err(lines.corrupt(format!("declared {m} arcs but the file ends early")));
            };
            let [i, j, w] = lines.fields::<3>(&arc_line, "")?;
            arcs.push(Arc::new(lines.int(i)?, lines.int(j)?, lines.int(w)?));
        }
        let g = Graph::new(n, arcs).map_err(|e| lines.corrupt(e.to_string()))?;
        graphs.push(g);
    }
    lines.record = None;
    if lines.next()?.is_some() {
        return Err(lines.corrupt(format!("data after the {} declared graphs", spec.count)));
    }
    Ok((spec, graphs))
}

struct Lines<R> {
    inner: std::io::Lines<R>,
    line: usize,
    record: Option<usize>,
}

impl<R: BufRead> Lines<R> {
    fn next(&mut self) -> Result<Option<String>> {
        match self.inner.next() {
            None => Ok(None),
            Some(Err(e)) => Err(Error::io("<input>", e)),
            Some(Ok(l)) => {
                self.line += 1;
                Ok(Some(l))
            }
        }
    }

    fn next_required(&mut self) -> Result<String> {
        self.next()?
            .ok_or_else(|| self.corrupt("unexpected end of file in header".into()))
    }

    fn corrupt(&self, reason: String) -> Error {
        Error::CorruptFile {
            record: self.record,
            line: self.line,
            reason,
        }
    }

    /// Splits `line` into exactly `N` single-space separated fields after
    /// the given keyword (empty keyword: no keyword expected).
    fn fields<'a, const N: usize>(&self, line: &'a str, keyword: &str) -> Result<[&'a str; N]> {
        let mut parts = line.split(' ');
        if !keyword.is_empty() && parts.next() != Some(keyword) {
            return Err(self.corrupt(format!("expected a {keyword} line, found {line:?}")));
        }
        let parts: Vec<&str> = parts.collect();
        parts.try_into().map_err(|_| {
            let what = if keyword.is_empty() { "arc" } else { keyword };
            self.corrupt(format!("malformed {what} line {line:?}"))
        })
    }

    fn int<T: FromStr>(&self, token: &str) -> Result<T> {
        // reject signs and leading '+' that FromStr would otherwise accept
        if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.corrupt(format!("{token:?} is not a non-negative integer")));
        }
        token
            .parse()
            .map_err(|_| self.corrupt(format!("{token:?} is out of range")))
    }
}
