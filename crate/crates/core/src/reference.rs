//! The closed-world table of knots a census can name.
//!
//! Sources are read from a tab separated file, one knot per line:
//!
//! ```text
//! 3_1	dt:4 6 2
//! 5_2	braid:2 -1 -2 -2 -2 -1@3
//! 14n_17954	code:135264135264
//! ```
//!
//! Every fingerprint is computed by this crate. Connected sums are
//! synthesized from the prime rows by multiplicativity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::basket::{parse_code, BasketCode};
use crate::braid::{parse_braid, BraidWord};
use crate::diagram::{DtCode, PlanarDiagram};
use crate::error::{Error, Result};
use crate::invariants::{
    code_invariants, pd_invariants, Fingerprint, SignedInvariants, DEFAULT_CROSSING_BUDGET,
};

/// The reference set shipped with the crate.
pub const BUILTIN_SOURCES: &str = include_str!("../../../data/reference.tsv");

/// Knots the table must contain.
pub const REQUIRED_NAMES: [&str; 29] = [
    "unknot",
    "3_1",
    "4_1",
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

/// Genus bound of knots bounding a six band basket surface.
pub const DEFAULT_GENUS_CAP: u32 = 3;

pub const UNKNOWN: &str = "unknown";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Dt(DtCode),
    Braid(BraidWord),
    Code(BasketCode),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Dt(d) => write!(f, "dt:{d}"),
            Source::Braid(b) => write!(f, "braid:{b}"),
            Source::Code(c) => write!(f, "code:{c}"),
        }
    }
}

impl Source {
    pub fn invariants(&self) -> Result<SignedInvariants> {
        match self {
            Source::Dt(d) => pd_invariants(&PlanarDiagram::from_dt(d)?, DEFAULT_CROSSING_BUDGET),
            Source::Braid(b) => {
                pd_invariants(&PlanarDiagram::from_braid(b)?, DEFAULT_CROSSING_BUDGET)
            }
            Source::Code(c) => code_invariants(c, DEFAULT_CROSSING_BUDGET),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceEntry {
    pub name: String,
    pub source: Source,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceEntry {
    pub name: String,
    /// Source line, or `K1 # K2` for a synthesized sum.
    pub source: String,
    pub composite: bool,
    /// Half the span of the Alexander polynomial.
    pub genus: u32,
    pub invariants: SignedInvariants,
    pub fingerprint: Fingerprint,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReferenceTable {
    source_hash: String,
    entries: Vec<ReferenceEntry>,
    #[serde(skip)]
    index: HashMap<Fingerprint, usize>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::ReferenceParse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_reference(text: &str) -> Result<Vec<SourceEntry>> {
    let mut out: Vec<SourceEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let (name, rest) = body
            .split_once(|c: char| c.is_whitespace())
            .map(|(n, r)| (n, r.trim()))
            .unwrap_or((body, ""));
        let source = if let Some(d) = rest.strip_prefix("dt:") {
            Source::Dt(
                d.parse()
                    .map_err(|e: Error| parse_err(line, e.to_string()))?,
            )
        } else if let Some(b) = rest.strip_prefix("braid:") {
            let (word, strands) = b
                .rsplit_once('@')
                .ok_or_else(|| parse_err(line, "braid source needs @strands"))?;
            let strands = strands
                .trim()
                .parse()
                .map_err(|_| parse_err(line, "bad strand count"))?;
            Source::Braid(parse_braid(word, strands).map_err(|e| parse_err(line, e.to_string()))?)
        } else if let Some(c) = rest.strip_prefix("code:") {
            Source::Code(parse_code(c).map_err(|e| parse_err(line, e.to_string()))?)
        } else {
            return Err(parse_err(line, format!("unknown source {rest:?}")));
        };
        if out.iter().any(|e| e.name == name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        out.push(SourceEntry {
            name: name.to_string(),
            source,
            line,
        });
    }
    Ok(out)
}

pub fn load_reference(path: &Path) -> Result<Vec<SourceEntry>> {
    parse_reference(&fs::read_to_string(path)?)
}

fn genus_of(alexander: &crate::poly::LaurentPoly) -> u32 {
    (alexander.span() / 2) as u32
}

pub fn prime_entries(sources: &[SourceEntry]) -> Result<Vec<ReferenceEntry>> {
    sources
        .iter()
        .map(|s| {
            let inv = s.source.invariants()?;
            Ok(ReferenceEntry {
                name: s.name.clone(),
                source: s.source.to_string(),
                composite: false,
                genus: genus_of(&inv.alexander),
                fingerprint: inv.fingerprint(),
                invariants: inv,
            })
        })
        .collect()
}

/// Both chirality pairings of every pair of nontrivial primes with genus sum
/// at most `genus_cap`. The opposite pairing is named `K1#K2*` and is left
/// out when it has the same fingerprint.
pub fn synth_connected_sums(primes: &[ReferenceEntry], genus_cap: u32) -> Vec<ReferenceEntry> {
    let primes: Vec<&ReferenceEntry> = primes
        .iter()
        .filter(|p| !p.composite && p.genus > 0)
        .collect();
    let mut out = Vec::new();
    for (i, a) in primes.iter().enumerate() {
        for b in &primes[i..] {
            let genus = a.genus + b.genus;
            if genus > genus_cap {
                continue;
            }
            let same = a.invariants.connected_sum(&b.invariants);
            let opposite = a.invariants.connected_sum(&b.invariants.mirror());
            let mut push = |name: String, inv: SignedInvariants| {
                out.push(ReferenceEntry {
                    source: name.replace('#', " # "),
                    name,
                    composite: true,
                    genus,
                    fingerprint: inv.fingerprint(),
                    invariants: inv,
                });
            };
            let opposite_differs = opposite.fingerprint() != same.fingerprint();
            push(format!("{}#{}", a.name, b.name), same);
            if opposite_differs {
                push(format!("{}#{}*", a.name, b.name), opposite);
            }
        }
    }
    out
}

/// Folds composites that share a fingerprint into one entry named
/// `A|B`.
pub fn merge_ambiguous(composites: Vec<ReferenceEntry>) -> Vec<ReferenceEntry> {
    let mut out: Vec<ReferenceEntry> = Vec::with_capacity(composites.len());
    let mut at: HashMap<Fingerprint, usize> = HashMap::new();
    for e in composites {
        match at.get(&e.fingerprint) {
            Some(&i) => {
                let m = &mut out[i];
                m.name = format!("{}|{}", m.name, e.name);
                m.source = format!("{} | {}", m.source, e.source);
                m.genus = m.genus.max(e.genus);
            }
            None => {
                at.insert(e.fingerprint.clone(), out.len());
                out.push(e);
            }
        }
    }
    out
}

fn source_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl ReferenceTable {
    /// Indexes the entries, failing on the first fingerprint shared by two
    /// names or a missing required name.
    pub fn from_entries(entries: Vec<ReferenceEntry>, source_hash: String) -> Result<Self> {
        let mut index = HashMap::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            if let Some(&j) = index.get(&e.fingerprint) {
                let other: &ReferenceEntry = &entries[j];
                return Err(Error::FingerprintCollision(
                    other.name.clone(),
                    e.name.clone(),
                ));
            }
            index.insert(e.fingerprint.clone(), i);
        }
        for name in REQUIRED_NAMES {
            if !entries.iter().any(|e| e.name == name) {
                return Err(Error::MissingReference(name.to_string()));
            }
        }
        Ok(ReferenceTable {
            source_hash,
            entries,
            index,
        })
    }

    pub fn entries(&self) -> &[ReferenceEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn source_hash(&self) -> &str {
        &self.source_hash
    }

    pub fn get(&self, name: &str) -> Option<&ReferenceEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Exact match; composites come back as `composite:<name>`.
    pub fn lookup(&self, fp: &Fingerprint) -> String {
        match self.index.get(fp) {
            Some(&i) if self.entries[i].composite => format!("composite:{}", self.entries[i].name),
            Some(&i) => self.entries[i].name.clone(),
            None => UNKNOWN.to_string(),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, json + "\n")?;
        Ok(())
    }
}

/// Primes from `text` plus their connected sums.
pub fn build_table(text: &str) -> Result<ReferenceTable> {
    build_table_with_cap(text, DEFAULT_GENUS_CAP)
}

pub fn build_table_with_cap(text: &str, genus_cap: u32) -> Result<ReferenceTable> {
    let primes = prime_entries(&parse_reference(text)?)?;
    let sums = merge_ambiguous(synth_connected_sums(&primes, genus_cap));
    let mut entries = primes;
    entries.extend(sums);
    ReferenceTable::from_entries(entries, source_hash(text))
}

/// Reads the table from `cache` when its hash matches `text`, otherwise
/// builds it and rewrites the cache.
pub fn build_table_cached(text: &str, cache: &Path) -> Result<ReferenceTable> {
    let hash = source_hash(text);
    if let Ok(bytes) = fs::read(cache) {
        match serde_json::from_slice::<ReferenceTable>(&bytes) {
            Ok(t) if t.source_hash == hash => {
                return ReferenceTable::from_entries(t.entries, t.source_hash)
            }
            Ok(_) => log::info!("reference cache {} is stale", cache.display()),
            Err(e) => log::warn!(
                "ignoring unreadable reference cache {}: {e}",
                cache.display()
            ),
        }
    }
    let table = build_table(text)?;
    table.save(cache)?;
    Ok(table)
}

/// Table over the shipped sources.
pub fn builtin_table() -> Result<ReferenceTable> {
    build_table(BUILTIN_SOURCES)
}

/// Name to entry count by kind, for summaries.
pub fn summary(table: &ReferenceTable) -> BTreeMap<&'static str, usize> {
    let mut m = BTreeMap::new();
    for e in table.entries() {
        *m.entry(if e.composite { "composite" } else { "prime" })
            .or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lines() {
        let s = parse_reference("# c\n3_1\tdt:4 6 2\nunknot\tdt:\n5_2\tbraid:2 -1 -2 -2 -2 -1@3\n")
            .unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].source, Source::Dt("4 6 2".parse().unwrap()));
        assert_eq!(s[1].source.to_string(), "dt:");
        assert_eq!(s[2].line, 4);
        assert!(matches!(
            parse_reference("a\tdt:4 6 2\na\tdt:4 6 2"),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(
            parse_reference("a\tfoo"),
            Err(Error::ReferenceParse { line: 1, .. })
        ));
        assert!(matches!(
            parse_reference("\na\tdt:4 4"),
            Err(Error::ReferenceParse { line: 2, .. })
        ));
    }

    #[test]
    fn trefoil_sums() {
        let primes = prime_entries(&parse_reference("3_1\tdt:4 6 2").unwrap()).unwrap();
        let sums = synth_connected_sums(&primes, 2);
        let names: Vec<&str> = sums.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["3_1#3_1", "3_1#3_1*"]);
        let j = &primes[0].invariants.jones;
        assert_eq!(sums[0].invariants.jones, j * j);
        assert!(synth_connected_sums(&[], 3).is_empty());
        assert!(synth_connected_sums(&primes, 1).is_empty());
    }

    #[test]
    fn aliases_collide() {
        let primes =
            prime_entries(&parse_reference("3_1\tdt:4 6 2\ntrefoil\tcode:12341234").unwrap())
                .unwrap();
        assert!(matches!(
            ReferenceTable::from_entries(primes, String::new()),
            Err(Error::FingerprintCollision(..))
        ));
    }

    #[test]
    fn ambiguous_sums_merge() {
        let text = "3_1\tdt:4 6 2\n5_1\tdt:6 8 10 2 4\n10_132\tdt:4 8 -12 2 -16 -6 -20 -18 -10 -14";
        let primes = prime_entries(&parse_reference(text).unwrap()).unwrap();
        assert_ne!(primes[1].fingerprint, primes[2].fingerprint);
        let sums = synth_connected_sums(&primes, 3);
        let merged = merge_ambiguous(sums.clone());
        assert!(merged.len() < sums.len());
        assert!(merged
            .iter()
            .any(|e| e.name == "3_1#5_1*|3_1#10_132" || e.name == "3_1#5_1|3_1#10_132"));
    }

    #[test]
    fn builtin_set() {
        let t = builtin_table().unwrap();
        for name in REQUIRED_NAMES {
            let e = t.get(name).unwrap();
            assert!(e.invariants.alexander.span() <= 2 * e.genus);
        }
        let fp = crate::invariants::fingerprint(&"123456123456".parse().unwrap()).unwrap();
        assert_eq!(t.lookup(&fp), "5_1");
        let fp = crate::invariants::fingerprint(&"123124653465".parse().unwrap()).unwrap();
        assert_eq!(t.lookup(&fp), "6_1");
    }

    #[test]
    fn cache_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = dir.path().join("table.json");
        let a = build_table_cached(BUILTIN_SOURCES, &cache).unwrap();
        let b = build_table_cached(BUILTIN_SOURCES, &cache).unwrap();
        assert_eq!(a.entries(), b.entries());
        assert_eq!(a.source_hash(), b.source_hash());
        let fp = a.entries()[3].fingerprint.clone();
        assert_eq!(a.lookup(&fp), b.lookup(&fp));
    }

    #[test]
    fn missing_names_fail() {
        assert!(matches!(
            build_table("3_1\tdt:4 6 2"),
            Err(Error::MissingReference(_))
        ));
    }
}
