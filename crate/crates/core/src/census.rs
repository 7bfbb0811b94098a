//! Exhaustive census of basket codes with a fixed number of bands.
//!
//! Codes are split into chunks by a fixed-length prefix of the word. Each
//! chunk is tallied independently and the tallies are summed, so the result
//! does not depend on the schedule. Finished chunks can be appended to a
//! resume file, one JSON object per line.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basket::{
    canonical_form, code_count, find_type_one_moves, prefixes, reduce_type_one, BasketCode,
    CodeEnumerator, MAX_ENUM_BANDS,
};
use crate::error::{Error, Result};
use crate::invariants::{fingerprint_with_budget, DEFAULT_CROSSING_BUDGET};
use crate::reference::ReferenceTable;

/// Counts for a set of codes. `class_counts` covers the codes that admit no
/// Type I move; `all_knot_class_counts` covers every knot code, naming a
/// reducible one by its fully reduced code.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Tally {
    pub total: u64,
    pub link_codes: u64,
    pub knot_codes: u64,
    pub type_one_reducible: u64,
    pub surviving: u64,
    pub class_counts: BTreeMap<String, u64>,
    pub all_knot_class_counts: BTreeMap<String, u64>,
}

impl Tally {
    pub fn merge(&mut self, other: &Tally) {
        self.total += other.total;
        self.link_codes += other.link_codes;
        self.knot_codes += other.knot_codes;
        self.type_one_reducible += other.type_one_reducible;
        self.surviving += other.surviving;
        for (k, v) in &other.class_counts {
            *self.class_counts.entry(k.clone()).or_insert(0) += v;
        }
        for (k, v) in &other.all_knot_class_counts {
            *self.all_knot_class_counts.entry(k.clone()).or_insert(0) += v;
        }
    }

    /// The three partition identities.
    pub fn identities_hold(&self) -> bool {
        self.total == self.link_codes + self.knot_codes
            && self.knot_codes == self.type_one_reducible + self.surviving
            && self.class_counts.values().sum::<u64>() == self.surviving
            && self.all_knot_class_counts.values().sum::<u64>() == self.knot_codes
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusReport {
    pub n: usize,
    #[serde(flatten)]
    pub counts: Tally,
    pub chunk_prefix_len: usize,
    pub chunks: usize,
    pub chunks_resumed: usize,
    pub complete: bool,
    pub threads: usize,
    pub elapsed_ms: u64,
}

impl CensusReport {
    pub fn class_count(&self, name: &str) -> u64 {
        self.counts.class_counts.get(name).copied().unwrap_or(0)
    }

    pub fn composite_total(&self) -> u64 {
        self.counts
            .class_counts
            .iter()
            .filter(|(k, _)| k.starts_with("composite:"))
            .map(|(_, v)| v)
            .sum()
    }

    pub fn unknown(&self) -> u64 {
        self.class_count(crate::reference::UNKNOWN)
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Worker count; `None` uses the rayon default.
    pub threads: Option<usize>,
    /// Prefix length of a chunk; `None` picks `min(3, 2n)`.
    pub prefix_len: Option<usize>,
    pub resume: Option<PathBuf>,
    /// Stop after this many new chunks; the report is then incomplete.
    pub chunk_limit: Option<usize>,
    pub budget: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            threads: None,
            prefix_len: None,
            resume: None,
            chunk_limit: None,
            budget: DEFAULT_CROSSING_BUDGET,
        }
    }
}

/// Names knot codes through their canonical form, caching per form.
pub struct Classifier<'a> {
    table: &'a ReferenceTable,
    budget: usize,
    memo: DashMap<BasketCode, String>,
}

impl<'a> Classifier<'a> {
    pub fn new(table: &'a ReferenceTable, budget: usize) -> Self {
        Classifier {
            table,
            budget,
            memo: DashMap::new(),
        }
    }

    pub fn classify(&self, code: &BasketCode) -> Result<String> {
        let canon = canonical_form(code);
        if let Some(name) = self.memo.get(&canon) {
            return Ok(name.clone());
        }
        let name = self
            .table
            .lookup(&fingerprint_with_budget(&canon, self.budget)?);
        self.memo.insert(canon, name.clone());
        Ok(name)
    }

    pub fn cached_forms(&self) -> usize {
        self.memo.len()
    }
}

/// Reference name of a knot code, or `unknown`.
pub fn classify_code(code: &BasketCode, table: &ReferenceTable) -> Result<String> {
    let mu = code.component_count();
    if mu != 1 {
        return Err(Error::NotAKnot(mu));
    }
    Classifier::new(table, DEFAULT_CROSSING_BUDGET).classify(code)
}

fn tally_chunk(n: usize, prefix: &[u8], classifier: &Classifier) -> Result<Tally> {
    let mut t = Tally::default();
    for code in CodeEnumerator::with_prefix(n, prefix)? {
        t.total += 1;
        if code.component_count() != 1 {
            t.link_codes += 1;
            continue;
        }
        t.knot_codes += 1;
        if find_type_one_moves(&code).is_empty() {
            t.surviving += 1;
            let name = classifier.classify(&code)?;
            *t.all_knot_class_counts.entry(name.clone()).or_insert(0) += 1;
            *t.class_counts.entry(name).or_insert(0) += 1;
        } else {
            t.type_one_reducible += 1;
            let name = classifier.classify(&reduce_type_one(&code))?;
            *t.all_knot_class_counts.entry(name).or_insert(0) += 1;
        }
    }
    Ok(t)
}

#[derive(Serialize, Deserialize)]
struct ResumeLine {
    chunk: usize,
    prefix: Vec<u8>,
    counts: Tally,
}

/// Reads finished chunks. A damaged last line is dropped with a warning and
/// the file is rewritten without it; damage anywhere else is an error.
fn read_resume(path: &Path, n: usize, chunks: &[Vec<u8>]) -> Result<BTreeMap<usize, Tally>> {
    let mut done = BTreeMap::new();
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(e.into()),
    };
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let mut dropped = false;
    for (i, line) in lines.iter().enumerate() {
        match serde_json::from_str::<ResumeLine>(line) {
            Ok(r) => {
                if chunks.get(r.chunk) != Some(&r.prefix) {
                    return Err(Error::Resume(format!(
                        "line {} names chunk {} {:?}, which is not a chunk of the n = {n} census",
                        i + 1,
                        r.chunk,
                        r.prefix
                    )));
                }
                done.insert(r.chunk, r.counts);
            }
            Err(e) if i + 1 == lines.len() => {
                log::warn!("discarding damaged last line of {}: {e}", path.display());
                dropped = true;
            }
            Err(e) => return Err(Error::Resume(format!("line {}: {e}", i + 1))),
        }
    }
    if dropped || !text.is_empty() && !text.ends_with('\n') {
        let mut f = File::create(path)?;
        for l in &lines[..lines.len() - usize::from(dropped)] {
            writeln!(f, "{l}")?;
        }
    }
    Ok(done)
}

pub fn run_census(
    n: usize,
    table: &ReferenceTable,
    options: &CensusOptions,
) -> Result<CensusReport> {
    if n > MAX_ENUM_BANDS {
        return Err(Error::BandCountOutOfRange(n));
    }
    let start = Instant::now();
    let k = options.prefix_len.unwrap_or(3).min(2 * n);
    let chunks = prefixes(n, k);
    let mut finished = match &options.resume {
        Some(p) => read_resume(p, n, &chunks)?,
        None => BTreeMap::new(),
    };
    let resumed = finished.len();
    let mut todo: Vec<usize> = (0..chunks.len())
        .filter(|i| !finished.contains_key(i))
        .collect();
    if let Some(limit) = options.chunk_limit {
        todo.truncate(limit);
    }
    let sink = match &options.resume {
        Some(p) => Some(Mutex::new(
            OpenOptions::new().create(true).append(true).open(p)?,
        )),
        None => None,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = options.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Error::Io(e.to_string()))?;
    let classifier = Classifier::new(table, options.budget);
    let fresh: Vec<(usize, Tally)> = pool.install(|| {
        todo.par_iter()
            .map(|&i| {
                let t = tally_chunk(n, &chunks[i], &classifier)?;
                if let Some(sink) = &sink {
                    let line = serde_json::to_string(&ResumeLine {
                        chunk: i,
                        prefix: chunks[i].clone(),
                        counts: t.clone(),
                    })
                    .map_err(|e| Error::Io(e.to_string()))?;
                    let mut f = sink.lock().expect("resume file lock");
                    writeln!(f, "{line}")?;
                    f.flush()?;
                }
                Ok((i, t))
            })
            .collect::<Result<_>>()
    })?;
    finished.extend(fresh);
    let mut counts = Tally::default();
    for t in finished.values() {
        counts.merge(t);
    }
    let complete = finished.len() == chunks.len();
    if complete {
        debug_assert_eq!(counts.total, code_count(n));
    }
    log::info!(
        "census n={n}: {} canonical forms fingerprinted",
        classifier.cached_forms()
    );
    Ok(CensusReport {
        n,
        counts,
        chunk_prefix_len: k,
        chunks: chunks.len(),
        chunks_resumed: resumed,
        complete,
        threads: pool.current_num_threads(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Known flat plumbing basket numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fpbk {
    Exact(u32),
    OneOf(Vec<u32>),
}

impl fmt::Display for Fpbk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fpbk::Exact(v) => write!(f, "{v}"),
            Fpbk::OneOf(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

const FPBK_SIX: [&str; 26] = [
    "5_1",
    "5_2",
    "6_1",
    "6_2",
    "6_3",
    "7_6",
    "7_7",
    "8_1",
    "8_3",
    "8_12",
    "8_20",
    "8_21",
    "9_42",
    "9_44",
    "9_46",
    "9_48",
    "10_132",
    "10_136",
    "10_137",
    "10_140",
    "11n_38",
    "12n_462",
    "13n_973",
    "14n_17954",
    "15n_45460",
    "16n_246032",
];

pub fn fpbk_lookup(name: &str) -> Result<Fpbk> {
    let key = name.trim();
    let key = if key.eq_ignore_ascii_case("unknot") || key == "0_1" {
        "unknot"
    } else {
        key
    };
    Ok(match key {
        "unknot" => Fpbk::Exact(0),
        "3_1" | "4_1" => Fpbk::Exact(4),
        k if FPBK_SIX.contains(&k) => Fpbk::Exact(6),
        "7_2" | "7_4" | "9_45" => Fpbk::Exact(8),
        "9_2" | "9_5" | "9_35" => Fpbk::OneOf(vec![8, 10]),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl ReportFormat {
    /// JSON for a `.json` path, CSV otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => ReportFormat::Json,
            _ => ReportFormat::Csv,
        }
    }
}

/// Orders `unknot`, then primes by crossing number, then composites, then
/// `unknown`.
fn name_key(name: &str) -> (u8, u32, String, u32, String) {
    if name == "unknot" {
        return (0, 0, String::new(), 0, String::new());
    }
    if name.starts_with("composite:") {
        return (2, 0, String::new(), 0, name.to_string());
    }
    if let Some((head, idx)) = name.split_once('_') {
        let digits: String = head.chars().take_while(|c| c.is_ascii_digit()).collect();
        if let (Ok(c), Ok(i)) = (digits.parse(), idx.parse()) {
            return (1, c, head[digits.len()..].to_string(), i, String::new());
        }
    }
    (3, 0, String::new(), 0, name.to_string())
}

pub fn report_csv(report: &CensusReport) -> String {
    let mut rows: Vec<(&String, &u64)> = report.counts.class_counts.iter().collect();
    rows.sort_by(|a, b| name_key(a.0).cmp(&name_key(b.0)).then(a.1.cmp(b.1)));
    let mut out = String::from("name,count\n");
    for (name, count) in rows {
        out.push_str(&format!("{name},{count}\n"));
    }
    out
}

pub fn report_json(report: &CensusReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes") + "\n"
}

pub fn emit_report(report: &CensusReport, format: ReportFormat, path: &Path) -> Result<()> {
    let body = match format {
        ReportFormat::Csv => report_csv(report),
        ReportFormat::Json => report_json(report),
    };
    fs::write(path, body)?;
    Ok(())
}

/// Names appearing in a report that the table does not know.
pub fn unmatched_names<'r>(report: &'r CensusReport, table: &ReferenceTable) -> HashSet<&'r str> {
    report
        .counts
        .class_counts
        .keys()
        .map(|k| k.as_str())
        .filter(|k| {
            let base = k.strip_prefix("composite:").unwrap_or(k);
            table.get(base).is_none()
        })
        .collect()
}
