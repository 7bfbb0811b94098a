//! Flat plumbing basket codes and the combinatorial surface they describe.
//!
//! A code is a circular word in which every band label `1..=n` occurs
//! exactly twice. Reading the word left to right lists the feet of the
//! bands along the top edge of the disk; the label is the page index of the
//! band, and a band with a larger label lies in front of one with a smaller
//! label wherever their strips overlap in projection.

mod enumerate;
mod seifert;
mod symmetry;
mod type_one;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use enumerate::{code_count, enumerate_codes, prefixes, CodeEnumerator, MAX_ENUM_BANDS};
pub use seifert::{seifert_matrix, SeifertMatrix};
pub use symmetry::{
    canonical_form, group_elements, symmetry_apply, symmetry_orbit, SymmetryElement,
};
pub use type_one::{
    apply_type_one, apply_type_one_with, find_type_one_moves, find_type_one_moves_with,
    reduce_type_one, TypeOneRule,
};

/// Band labels are stored as bytes; the census never goes beyond a handful
/// of bands, and 255 is far past anything the invariant engine can handle.
pub const MAX_LABEL: usize = u8::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasketCode {
    word: Vec<u8>,
}

impl BasketCode {
    /// The bare disk.
    pub fn empty() -> Self {
        BasketCode { word: Vec::new() }
    }

    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.len() % 2 != 0 {
            return Err(Error::MalformedCode(format!("odd length {}", word.len())));
        }
        let n = word.len() / 2;
        if n > MAX_LABEL {
            return Err(Error::MalformedCode(format!("too many bands ({n})")));
        }
        let mut counts = vec![0usize; n + 1];
        for &l in &word {
            if l == 0 || l > n {
                return Err(Error::LabelOutOfRange { label: l, n });
            }
            counts[l] += 1;
        }
        if let Some(label) = (1..=n).find(|&l| counts[l] != 2) {
            return Err(Error::LabelMultiplicity {
                label,
                count: counts[label],
            });
        }
        Ok(BasketCode {
            word: word.into_iter().map(|l| l as u8).collect(),
        })
    }

    /// Caller guarantees the double-occurrence property.
    pub(crate) fn from_bytes_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(BasketCode::new(word.iter().map(|&b| b as usize).collect()).is_ok());
        BasketCode { word }
    }

    pub fn n(&self) -> usize {
        self.word.len() / 2
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn labels(&self) -> Vec<usize> {
        self.word.iter().map(|&b| b as usize).collect()
    }

    /// `feet()[k]` holds the two word positions of band `k + 1`, ascending.
    pub fn feet(&self) -> Vec<[usize; 2]> {
        let mut feet = vec![[usize::MAX; 2]; self.n()];
        for (i, &l) in self.word.iter().enumerate() {
            let f = &mut feet[l as usize - 1];
            if f[0] == usize::MAX {
                f[0] = i;
            } else {
                f[1] = i;
            }
        }
        feet
    }

    /// `partner()[i]` is the other position carrying the label at position `i`.
    pub fn partner(&self) -> Vec<usize> {
        let mut partner = vec![0; self.word.len()];
        for [a, b] in self.feet() {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }

    fn check_label(&self, l: usize) -> bool {
        (1..=self.n()).contains(&l)
    }

    /// Whether the feet of bands `a` and `b` alternate around the circle.
    pub fn interleaved(&self, a: usize, b: usize) -> Result<bool> {
        if a == b || !self.check_label(a) || !self.check_label(b) {
            return Err(Error::InvalidLabelPair(a, b));
        }
        let feet = self.feet();
        Ok(chords_cross(feet[a - 1], feet[b - 1]))
    }

    /// All interleaved pairs `(a, b)` with `a < b`.
    pub fn interleaved_pairs(&self) -> Vec<(usize, usize)> {
        let feet = self.feet();
        let n = self.n();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if chords_cross(feet[a - 1], feet[b - 1]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Number of boundary components of the basket surface.
    ///
    /// Walking the boundary, the arc of the disk edge that leaves the right
    /// side of foot `i` arrives at the left side of foot `i + 1`; the band
    /// side that starts there is an untwisted strip edge, so it ends at the
    /// right side of the partner foot. The components are the cycles of
    /// `i -> partner(i + 1)`.
    pub fn component_count(&self) -> usize {
        let len = self.word.len();
        if len == 0 {
            return 1;
        }
        let partner = self.partner();
        let mut seen = vec![false; len];
        let mut count = 0;
        for s in 0..len {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = partner[(x + 1) % len];
            }
        }
        count
    }

    pub fn surface_stats(&self) -> SurfaceStats {
        let n = self.n() as i64;
        let euler = 1 - n;
        let mu = self.component_count();
        let twice_genus = 2 - euler - mu as i64;
        debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
        SurfaceStats {
            n: self.n(),
            euler,
            mu,
            genus: (twice_genus / 2) as usize,
        }
    }

    /// Relabels so that labels appear in first-occurrence order.
    pub fn first_occurrence_relabel(&self) -> BasketCode {
        let mut map = vec![0u8; self.n() + 1];
        let mut next = 1u8;
        let word = self
            .word
            .iter()
            .map(|&l| {
                if map[l as usize] == 0 {
                    map[l as usize] = next;
                    next += 1;
                }
                map[l as usize]
            })
            .collect();
        BasketCode { word }
    }
}

pub(crate) fn chords_cross(a: [usize; 2], b: [usize; 2]) -> bool {
    let inside = |x: usize| a[0] < x && x < a[1];
    inside(b[0]) != inside(b[1])
}

/// Parses either a bare digit string (`"123456123456"`, labels 1..=9) or a
/// bracketed or separated integer list (`"[1, 2, 1, 2]"`, `"1 2 1 2"`).
pub fn parse_code(text: &str) -> Result<BasketCode> {
    let t = text.trim();
    if t.chars().all(|c| c.is_ascii_digit()) {
        let word = t
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        return BasketCode::new(word);
    }
    let inner = t.strip_prefix(['[', '(']).unwrap_or(t);
    let inner = inner.strip_suffix([']', ')']).unwrap_or(inner);
    let mut word = Vec::new();
    for tok in inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
    {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::MalformedCode(format!("bad token {tok:?} in {text:?}")))?;
        word.push(v);
    }
    BasketCode::new(word)
}

impl FromStr for BasketCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_code(s)
    }
}

impl fmt::Display for BasketCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &l in &self.word {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|l| l.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for BasketCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasketCode({self})")
    }
}

impl Serialize for BasketCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BasketCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_code(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceStats {
    pub n: usize,
    pub euler: i64,
    pub mu: usize,
    pub genus: usize,
}
