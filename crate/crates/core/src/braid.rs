//! Braid words, conversion of a closed braid into a basket code, and the two
//! closed-braid upper bounds for the basket number.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basket::BasketCode;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    /// `+i` is `σ_i`, `-i` is its inverse.
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::MalformedBraid(
                "a braid needs at least one strand".into(),
            ));
        }
        for &l in &letters {
            let g = l.unsigned_abs() as usize;
            if l == 0 || g >= strands {
                return Err(Error::MalformedBraid(format!(
                    "generator {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `perm[i]` is where the strand starting at position `i` ends up.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize;
            at.swap(g - 1, g);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}@{}", parts.join(" "), self.strands)
    }
}

/// Accepts `s2 s1' s2^-1` style tokens or signed integers, separated by
/// whitespace or commas.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        letters.push(parse_letter(tok)?);
    }
    BraidWord::new(strands, letters)
}

fn parse_letter(tok: &str) -> Result<i32> {
    let bad = || Error::MalformedBraid(format!("bad token {tok:?}"));
    if let Ok(v) = tok.parse::<i32>() {
        return Ok(v);
    }
    let rest = tok
        .strip_prefix(['s', 'S'])
        .or_else(|| tok.strip_prefix('σ'))
        .ok_or_else(bad)?;
    let (digits, inverse) = if let Some(d) = rest.strip_suffix('\'') {
        (d, true)
    } else if let Some(d) = rest.strip_suffix("^-1") {
        (d, true)
    } else {
        (rest, false)
    };
    let g: i32 = digits.parse().map_err(|_| bad())?;
    if g <= 0 {
        return Err(bad());
    }
    Ok(if inverse { -g } else { g })
}

/// Number of link components of the closure.
pub fn closed_components(braid: &BraidWord) -> usize {
    let perm = braid.permutation();
    let mut seen = vec![false; perm.len()];
    let mut count = 0;
    for s in 0..perm.len() {
        if !seen[s] {
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
    }
    count
}

/// Builds a basket surface for the closure.
///
/// The first `strands - 1` letters must use each generator once; they are
/// absorbed into the disk. Every remaining letter whose sign differs from
/// the prefix letter of the same generator becomes a single flat band; a
/// letter with the same sign needs two extra annuli to flip its twist and
/// becomes three bands.
pub fn fhk_code(braid: &BraidWord) -> Result<BasketCode> {
    let s = braid.strands;
    let letters = &braid.letters;
    if s < 2 {
        if letters.is_empty() {
            return Ok(BasketCode::empty());
        }
        return Err(Error::NotNormalForm("fewer than two strands".into()));
    }
    let k = s - 1;
    if letters.len() < k {
        return Err(Error::NotNormalForm("word shorter than its prefix".into()));
    }
    let mut prefix_sign = vec![0i32; s];
    for &l in &letters[..k] {
        let g = l.unsigned_abs() as usize;
        if prefix_sign[g] != 0 {
            return Err(Error::NotNormalForm(format!(
                "the first {k} letters must use every generator exactly once"
            )));
        }
        prefix_sign[g] = l.signum();
    }

    // Walk the closure of the prefix braid, which is a single unknotted
    // circle, from the bottom strand just after the prefix, and record
    // where it passes each later letter.
    #[derive(Clone, Copy)]
    struct Visit {
        time: usize,
        upper: bool,
    }
    let mut visits = Vec::with_capacity(2 * (letters.len() - k));
    let mut pos = 1usize;
    loop {
        for time in (k..letters.len()).chain(0..k) {
            let l = letters[time];
            let g = l.unsigned_abs() as usize;
            if time < k {
                if pos == g {
                    pos = g + 1;
                } else if pos == g + 1 {
                    pos = g;
                }
            } else if pos == g || pos == g + 1 {
                visits.push(Visit {
                    time,
                    upper: pos == g + 1,
                });
            }
        }
        if pos == 1 {
            break;
        }
    }

    // Bands are read against the braid orientation. A band's page is keyed
    // by its time, running backwards for generators with a positive prefix
    // letter; the three bands of a sign change sit on adjacent pages with
    // the band carrying the letter in the middle.
    let mut word: Vec<(i64, usize)> = Vec::new();
    for v in visits.into_iter().rev() {
        let l = letters[v.time];
        let g = l.unsigned_abs() as usize;
        let t = -(prefix_sign[g] as i64) * v.time as i64;
        if l.signum() != prefix_sign[g] {
            word.push((t, 1));
        } else {
            let (a, b, c) = if prefix_sign[g] > 0 {
                (2, 1, 0)
            } else {
                (0, 1, 2)
            };
            if v.upper {
                word.extend([a, b, c, a, b].map(|slot| (t, slot)));
            } else {
                word.push((t, c));
            }
        }
    }
    let mut ids = word.clone();
    ids.sort_unstable();
    ids.dedup();
    let labels = word
        .iter()
        .map(|id| ids.binary_search(id).unwrap() + 1)
        .collect();
    BasketCode::new(labels)
}

fn check_normal_form(braid: &BraidWord) -> Result<&[i32]> {
    let k = braid.strands - 1;
    let ok = braid.letters.len() >= k
        && braid.letters[..k]
            .iter()
            .enumerate()
            .all(|(i, &l)| l == (k - i) as i32);
    if !ok {
        return Err(Error::NotNormalForm(format!(
            "expected the word to start with s{k} ... s1"
        )));
    }
    Ok(&braid.letters[k..])
}

/// `m + 2p` for a word `σ_{n-1} ... σ_1 W`, where `m = |W|` and `p` is the
/// number of positive letters of `W`.
pub fn bound_fhk(braid: &BraidWord) -> Result<usize> {
    let w = check_normal_form(braid)?;
    let p = w.iter().filter(|&&l| l > 0).count();
    Ok(w.len() + 2 * p)
}

/// `m + n - 1 - 4γ + 2 Σ ps(σ_i^{ε_i})`, evaluated as stated.
pub fn bound_kim(braid: &BraidWord) -> i64 {
    let n = braid.strands;
    let m = braid.letters.len() as i64;
    let mut pos = vec![0i64; n];
    let mut neg = vec![0i64; n];
    for &l in &braid.letters {
        let g = l.unsigned_abs() as usize;
        if l > 0 {
            pos[g] += 1;
        } else {
            neg[g] += 1;
        }
    }
    let mut gamma = 0;
    let mut sum = 0;
    for i in 1..n {
        if pos[i] > 0 && neg[i] > 0 {
            gamma += 1;
        }
        let eps_positive = (1 <= pos[i] && pos[i] <= neg[i]) || neg[i] == 0;
        sum += if eps_positive { pos[i] } else { neg[i] };
    }
    m + n as i64 - 1 - 4 * gamma + 2 * sum
}
