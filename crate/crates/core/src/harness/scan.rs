//! Resumable scans over many graphs.
//!
//! Records are appended to a JSON-lines file in input order, one line per
//! graph, flushed as soon as it is written. Graphs are evaluated in parallel
//! chunks but written by a single writer, so the file content depends only on
//! the input. A resumed scan skips as many inputs as the file already holds
//! complete lines.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use log::{info, warn};
use rayon::prelude::*;

use super::verdict::{evaluate, VerdictRecord};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, Graph};
use crate::minors::SearchBudget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Every isomorphism class of graphs on `1..=max_n` vertices.
    Builtin { max_n: usize },
    /// One graph6 string per line.
    Graph6File(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Weak,
    Full,
    Both,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(Mode::Weak),
            "full" => Ok(Mode::Full),
            "both" => Ok(Mode::Both),
            other => Err(Error::BadParameter(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub mode: Mode,
    pub out: PathBuf,
    /// Continue after the complete records already in `out` instead of truncating it.
    pub resume: bool,
    pub workers: usize,
    /// Per-search node cap; `None` picks [`SearchBudget::default_for`] per graph.
    pub budget: Option<SearchBudget>,
    /// Stop after writing this many new records.
    pub limit: Option<usize>,
}

impl ScanOptions {
    pub fn new(out: impl Into<PathBuf>) -> Self {
        ScanOptions {
            mode: Mode::Both,
            out: out.into(),
            resume: false,
            workers: 1,
            budget: None,
            limit: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Tally {
    pub scanned: usize,
    pub weak_counterexamples: usize,
    pub full_counterexamples: usize,
    pub unknown: usize,
    pub max_chi: usize,
    pub max_hadwiger: usize,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    pub mode: Option<Mode>,
    /// Tallies keyed by vertex count, covering resumed and new records.
    pub per_n: BTreeMap<usize, Tally>,
    pub weak_counterexamples: Vec<VerdictRecord>,
    pub full_counterexamples: Vec<VerdictRecord>,
    pub unknown: Vec<VerdictRecord>,
    /// Input lines that failed to parse and were skipped.
    pub malformed_lines: Vec<usize>,
    /// Records already present when the scan started.
    pub resumed_from: usize,
    pub written: usize,
    pub wall_ms: f64,
}

impl ScanReport {
    pub fn scanned(&self) -> usize {
        self.per_n.values().map(|t| t.scanned).sum()
    }

    /// Whether a counterexample to a conjecture selected by the mode was found.
    pub fn has_counterexample(&self) -> bool {
        let weak = !self.weak_counterexamples.is_empty();
        let full = !self.full_counterexamples.is_empty();
        match self.mode.unwrap_or(Mode::Both) {
            Mode::Weak => weak,
            Mode::Full => full,
            Mode::Both => weak || full,
        }
    }

    fn absorb(&mut self, rec: &VerdictRecord) {
        let t = self.per_n.entry(rec.n).or_default();
        t.scanned += 1;
        t.max_chi = t.max_chi.max(rec.chi);
        t.max_hadwiger = t.max_hadwiger.max(rec.hadwiger.unwrap_or(0));
        t.wall_ms += rec.elapsed_ms;
        if rec.is_weak_counterexample() {
            t.weak_counterexamples += 1;
            self.weak_counterexamples.push(rec.clone());
        }
        if rec.is_full_counterexample() {
            t.full_counterexamples += 1;
            self.full_counterexamples.push(rec.clone());
        }
        if rec.is_unknown() {
            t.unknown += 1;
            self.unknown.push(rec.clone());
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("n,scanned,weak_counterexamples,full_counterexamples,unknown,max_chi,max_hadwiger,wall_ms\n");
        for (n, t) in &self.per_n {
            out.push_str(&format!(
                "{n},{},{},{},{},{},{},{:.3}\n",
                t.scanned,
                t.weak_counterexamples,
                t.full_counterexamples,
                t.unknown,
                t.max_chi,
                t.max_hadwiger,
                t.wall_ms
            ));
        }
        out
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3} {:>8} {:>6} {:>6} {:>7} {:>4} {:>4}",
            "n", "graphs", "weak!", "full!", "unknown", "chi", "had"
        )?;
        for (n, t) in &self.per_n {
            writeln!(
                f,
                "{n:>3} {:>8} {:>6} {:>6} {:>7} {:>4} {:>4}",
                t.scanned, t.weak_counterexamples, t.full_counterexamples, t.unknown, t.max_chi, t.max_hadwiger
            )?;
        }
        write!(
            f,
            "total {} graphs ({} resumed), {} weak / {} full counterexamples, {} unknown, {:.1} ms",
            self.scanned(),
            self.resumed_from,
            self.weak_counterexamples.len(),
            self.full_counterexamples.len(),
            self.unknown.len(),
            self.wall_ms
        )
    }
}

/// Loads the input graphs, logging and skipping malformed graph6 lines.
pub fn load_source(source: &Source) -> Result<(Vec<Graph>, Vec<usize>)> {
    match source {
        Source::Builtin { max_n } => {
            let mut graphs = Vec::new();
            for n in 1..=*max_n {
                graphs.extend(enumerate_graphs(n)?);
            }
            Ok((graphs, Vec::new()))
        }
        Source::Graph6File(path) => {
            let text = fs::read_to_string(path)?;
            let mut graphs = Vec::new();
            let mut malformed = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                match Graph::from_graph6(line) {
                    Ok(g) if g.n() > 0 => graphs.push(g),
                    Ok(_) => {
                        warn!("{}:{}: skipping graph with no vertices", path.display(), idx + 1);
                        malformed.push(idx + 1);
                    }
                    Err(e) => {
                        warn!("{}:{}: {e}", path.display(), idx + 1);
                        malformed.push(idx + 1);
                    }
                }
            }
            Ok((graphs, malformed))
        }
    }
}

/// Reads the complete records of an existing output file, dropping a
/// trailing partial line left by an interrupted writer.
fn read_existing(path: &Path) -> Result<Vec<VerdictRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let text = fs::read_to_string(path)?;
    let complete = match text.rfind('\n') {
        Some(i) => &text[..=i],
        None => "",
    };
    if complete.len() != text.len() {
        warn!("{}: dropping partial trailing record", path.display());
        let f = OpenOptions::new().write(true).open(path)?;
        f.set_len(complete.len() as u64)?;
    }
    complete
        .lines()
        .map(|l| serde_json::from_str(l).map_err(Error::from))
        .collect()
}

pub fn scan(source: &Source, opts: &ScanOptions) -> Result<ScanReport> {
    let started = Instant::now();
    let (graphs, malformed_lines) = load_source(source)?;
    let mut report = ScanReport {
        mode: Some(opts.mode),
        malformed_lines,
        ..ScanReport::default()
    };

    let existing = if opts.resume {
        read_existing(&opts.out)?
    } else {
        Vec::new()
    };
    if existing.len() > graphs.len() {
        return Err(Error::BadParameter(format!(
            "{} already holds {} records but the input has only {} graphs",
            opts.out.display(),
            existing.len(),
            graphs.len()
        )));
    }
    for (i, rec) in existing.iter().enumerate() {
        if rec.graph6 != graphs[i].to_graph6()? {
            return Err(Error::BadParameter(format!(
                "record {} in {} does not match input graph {}",
                i + 1,
                opts.out.display(),
                i + 1
            )));
        }
        report.absorb(rec);
    }
    report.resumed_from = existing.len();
    if report.resumed_from > 0 {
        info!("resuming after {} records", report.resumed_from);
    }

    let file = if opts.resume {
        OpenOptions::new().create(true).append(true).open(&opts.out)?
    } else {
        File::create(&opts.out)?
    };
    let mut writer = BufWriter::new(file);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::BadParameter(e.to_string()))?;

    let mut todo = &graphs[report.resumed_from..];
    if let Some(limit) = opts.limit {
        todo = &todo[..limit.min(todo.len())];
    }
    let chunk = opts.workers.max(1) * 16;
    for batch in todo.chunks(chunk) {
        let records: Vec<Result<VerdictRecord>> = pool.install(|| {
            batch
                .par_iter()
                .map(|g| evaluate(g, opts.budget.unwrap_or_else(|| SearchBudget::default_for(g))))
                .collect()
        });
        for rec in records {
            let rec = rec?;
            writeln!(writer, "{}", serde_json::to_string(&rec)?)?;
            writer.flush()?;
            report.absorb(&rec);
            report.written += 1;
        }
    }
    writer.flush()?;
    report.wall_ms = started.elapsed().as_secs_f64() * 1e3;
    fs::write(opts.out.with_extension("csv"), report.to_csv())?;
    Ok(report)
}
