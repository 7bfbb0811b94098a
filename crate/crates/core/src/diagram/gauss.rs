//! Gauss and Dowker–Thistlethwaite codes of knot diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussVisit {
    /// 1-based crossing id.
    pub crossing: usize,
    pub over: bool,
    /// `+1` or `-1`; `0` when the code carries no signs.
    pub sign: i8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussCode {
    visits: Vec<GaussVisit>,
}

impl GaussCode {
    /// Checks that ids are `1..=c`, each visited once over and once under,
    /// with agreeing signs.
    pub fn new(visits: Vec<GaussVisit>) -> Result<Self> {
        if visits.len() % 2 != 0 {
            return Err(Error::MalformedGauss("odd number of visits".into()));
        }
        let c = visits.len() / 2;
        let mut over = vec![0u8; c + 1];
        let mut under = vec![0u8; c + 1];
        let mut sign = vec![None; c + 1];
        let signed = visits.first().is_some_and(|v| v.sign != 0);
        for v in &visits {
            if v.crossing == 0 || v.crossing > c {
                return Err(Error::MalformedGauss(format!(
                    "crossing id {} out of range",
                    v.crossing
                )));
            }
            if (v.sign != 0) != signed || v.sign.abs() > 1 {
                return Err(Error::MalformedGauss(
                    "mixed or invalid crossing signs".into(),
                ));
            }
            if v.over {
                over[v.crossing] += 1;
            } else {
                under[v.crossing] += 1;
            }
            match sign[v.crossing] {
                None => sign[v.crossing] = Some(v.sign),
                Some(s) if s != v.sign => {
                    return Err(Error::MalformedGauss(format!(
                        "crossing {} has two signs",
                        v.crossing
                    )))
                }
                _ => {}
            }
        }
        if let Some(id) = (1..=c).find(|&i| over[i] != 1 || under[i] != 1) {
            return Err(Error::MalformedGauss(format!(
                "crossing {id} must be visited once over and once under"
            )));
        }
        Ok(GaussCode { visits })
    }

    pub fn visits(&self) -> &[GaussVisit] {
        &self.visits
    }

    pub fn len(&self) -> usize {
        self.visits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visits.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.visits.len() / 2
    }

    pub fn is_signed(&self) -> bool {
        self.visits.first().is_none_or(|v| v.sign != 0)
    }

    /// Drops the given crossings and renumbers the rest by first visit.
    pub fn without(&self, removed: &[usize]) -> GaussCode {
        let kept = self
            .visits
            .iter()
            .filter(|v| !removed.contains(&v.crossing))
            .copied()
            .collect();
        GaussCode { visits: kept }.renumbered()
    }

    pub fn renumbered(&self) -> GaussCode {
        let mut ids = vec![0usize; self.visits.iter().map(|v| v.crossing).max().unwrap_or(0) + 1];
        let mut next = 0;
        let visits = self
            .visits
            .iter()
            .map(|v| {
                if ids[v.crossing] == 0 {
                    next += 1;
                    ids[v.crossing] = next;
                }
                GaussVisit {
                    crossing: ids[v.crossing],
                    ..*v
                }
            })
            .collect();
        GaussCode { visits }
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.visits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let s = match v.sign {
                1 => "+",
                -1 => "-",
                _ => "",
            };
            write!(f, "{}{}{}", if v.over { 'O' } else { 'U' }, v.crossing, s)?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    /// `O1+,U2-,...`; signs may be omitted throughout.
    fn from_str(text: &str) -> Result<Self> {
        let mut visits = Vec::new();
        for tok in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let bad = || Error::MalformedGauss(format!("bad token {tok:?}"));
            let mut chars = tok.chars();
            let over = match chars.next() {
                Some('O' | 'o') => true,
                Some('U' | 'u') => false,
                _ => return Err(bad()),
            };
            let rest = chars.as_str();
            let (digits, sign) = match rest.strip_suffix('+') {
                Some(d) => (d, 1),
                None => match rest.strip_suffix('-') {
                    Some(d) => (d, -1),
                    None => (rest, 0),
                },
            };
            let crossing = digits.parse().map_err(|_| bad())?;
            visits.push(GaussVisit {
                crossing,
                over,
                sign,
            });
        }
        GaussCode::new(visits)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DtCode {
    /// Even partner of the odd labels `1, 3, 5, ...`, negated when the
    /// strand passes over at the even visit.
    entries: Vec<i64>,
}

impl DtCode {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let c = entries.len();
        let mut seen = vec![false; c + 1];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a % 2 != 0 || a > 2 * c || seen[a / 2] {
                return Err(Error::MalformedDt(format!(
                    "entries must be a signed permutation of 2..={}",
                    2 * c
                )));
            }
            seen[a / 2] = true;
        }
        Ok(DtCode { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn crossing_count(&self) -> usize {
        self.entries.len()
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for DtCode {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let mut entries = Vec::new();
        for tok in t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
        {
            let tok = tok.replace('\u{2212}', "-");
            entries.push(
                tok.parse()
                    .map_err(|_| Error::MalformedDt(format!("bad token {tok:?}")))?,
            );
        }
        DtCode::new(entries)
    }
}

/// Labels visits `1..=2c` in order and pairs every odd label with the even
/// label of the same crossing.
pub fn dt_from_gauss(gauss: &GaussCode) -> Result<DtCode> {
    let c = gauss.crossing_count();
    let mut first: Vec<Option<usize>> = vec![None; c + 1];
    let mut entries = vec![0i64; c];
    for (i, v) in gauss.visits().iter().enumerate() {
        let label = i + 1;
        match first[v.crossing] {
            None => first[v.crossing] = Some(label),
            Some(prev) => {
                if (prev + label) % 2 == 0 {
                    return Err(Error::MalformedGauss(format!(
                        "crossing {} is visited twice with the same parity",
                        v.crossing
                    )));
                }
                let (odd, even, even_over) = if prev % 2 == 1 {
                    (prev, label, v.over)
                } else {
                    (label, prev, !v.over)
                };
                entries[odd / 2] = if even_over {
                    -(even as i64)
                } else {
                    even as i64
                };
            }
        }
    }
    DtCode::new(entries)
}

/// Unsigned Gauss code of a DT code; crossings are numbered by odd label.
pub fn gauss_from_dt(dt: &DtCode) -> GaussCode {
    let c = dt.crossing_count();
    let mut visits = vec![
        GaussVisit {
            crossing: 0,
            over: false,
            sign: 0
        };
        2 * c
    ];
    for (k, &e) in dt.entries().iter().enumerate() {
        let odd = 2 * k;
        let even = e.unsigned_abs() as usize - 1;
        let even_over = e < 0;
        visits[odd] = GaussVisit {
            crossing: k + 1,
            over: !even_over,
            sign: 0,
        };
        visits[even] = GaussVisit {
            crossing: k + 1,
            over: even_over,
            sign: 0,
        };
    }
    GaussCode { visits }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_five_pairing() {
        let pairs = [(1, 12), (3, 8), (5, 10), (7, 14), (9, 4), (11, 2), (13, 6)];
        let mut visits = vec![
            GaussVisit {
                crossing: 0,
                over: false,
                sign: 0
            };
            14
        ];
        for (id, &(o, e)) in pairs.iter().enumerate() {
            visits[o - 1] = GaussVisit {
                crossing: id + 1,
                over: true,
                sign: 0,
            };
            visits[e - 1] = GaussVisit {
                crossing: id + 1,
                over: false,
                sign: 0,
            };
        }
        let g = GaussCode::new(visits).unwrap();
        assert_eq!(dt_from_gauss(&g).unwrap().to_string(), "12 8 10 14 4 2 6");
    }

    #[test]
    fn empty_and_roundtrip() {
        assert!(dt_from_gauss(&GaussCode::default())
            .unwrap()
            .entries()
            .is_empty());
        let dt: DtCode = "4 8 -12 2 -14 -6 -16 -10".parse().unwrap();
        assert_eq!(dt_from_gauss(&gauss_from_dt(&dt)).unwrap(), dt);
        assert!("4 4 2".parse::<DtCode>().is_err());
        assert!("3 6 2".parse::<DtCode>().is_err());
    }

    #[test]
    fn gauss_text() {
        let g: GaussCode = "O1+,U2+,O3+,U1+,O2+,U3+".parse().unwrap();
        assert_eq!(g.to_string(), "O1+,U2+,O3+,U1+,O2+,U3+");
        assert!(g.is_signed());
        let u: GaussCode = "O1,U1".parse().unwrap();
        assert!(!u.is_signed());
        assert!("O1,O1".parse::<GaussCode>().is_err());
        assert!("O1+,U1-".parse::<GaussCode>().is_err());
        assert!("X1".parse::<GaussCode>().is_err());
        assert_eq!(dt_from_gauss(&g).unwrap().to_string(), "4 6 2");
    }

    #[test]
    fn same_parity_rejected() {
        let g: GaussCode = "O1,O2,U1,U2".parse().unwrap();
        assert!(dt_from_gauss(&g).is_err());
    }
}
