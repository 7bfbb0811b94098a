//! The symmetry group acting on codes: dihedral moves of the reading start
//! and direction, times dihedral moves of the page order (cyclic page shift
//! and page reversal). Its order is `8 n^2`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::BasketCode;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryElement {
    /// Reading starts this many positions later (taken mod `2n`).
    pub start_rotation: usize,
    pub reading_reversed: bool,
    /// Page shift `k -> k + m (mod n)`.
    pub page_rotation: usize,
    /// Page reversal `k -> n + 1 - k`, applied after the shift.
    pub page_reversed: bool,
}

impl SymmetryElement {
    pub fn identity() -> Self {
        Self::default()
    }

    fn relabel_table(&self, n: usize) -> Vec<u8> {
        let mut table = vec![0u8; n + 1];
        for (k, slot) in table.iter_mut().enumerate().skip(1) {
            let mut m = (k - 1 + self.page_rotation % n) % n + 1;
            if self.page_reversed {
                m = n + 1 - m;
            }
            *slot = m as u8;
        }
        table
    }
}

/// All `8 n^2` group elements (just the identity for the empty code).
pub fn group_elements(n: usize) -> Vec<SymmetryElement> {
    let len = (2 * n).max(1);
    let pages = n.max(1);
    let mut out = Vec::with_capacity(4 * len * pages);
    for start_rotation in 0..len {
        for reading_reversed in [false, true] {
            for page_rotation in 0..pages {
                for page_reversed in [false, true] {
                    if n == 0 && (reading_reversed || page_reversed) {
                        continue;
                    }
                    out.push(SymmetryElement {
                        start_rotation,
                        reading_reversed,
                        page_rotation,
                        page_reversed,
                    });
                }
            }
        }
    }
    out
}

pub fn symmetry_apply(code: &BasketCode, g: &SymmetryElement) -> BasketCode {
    let n = code.n();
    if n == 0 {
        return code.clone();
    }
    let len = code.len();
    let table = g.relabel_table(n);
    let src = code.word();
    let word = (0..len)
        .map(|i| {
            let j = (i + g.start_rotation) % len;
            let j = if g.reading_reversed { len - 1 - j } else { j };
            table[src[j] as usize]
        })
        .collect();
    BasketCode::from_bytes_unchecked(word)
}

pub fn symmetry_orbit(code: &BasketCode) -> BTreeSet<BasketCode> {
    group_elements(code.n())
        .iter()
        .map(|g| symmetry_apply(code, g))
        .collect()
}

/// Lexicographically least element of the orbit.
pub fn canonical_form(code: &BasketCode) -> BasketCode {
    let n = code.n();
    if n == 0 {
        return code.clone();
    }
    let len = code.len();
    let src = code.word();
    let mut best = src.to_vec();
    let mut cand = vec![0u8; len];
    let tables: Vec<Vec<u8>> = (0..n)
        .flat_map(|r| {
            [false, true].map(|rev| {
                SymmetryElement {
                    page_rotation: r,
                    page_reversed: rev,
                    ..Default::default()
                }
                .relabel_table(n)
            })
        })
        .collect();
    for rev in [false, true] {
        for rot in 0..len {
            'table: for table in &tables {
                let mut less = false;
                for (i, c) in cand.iter_mut().enumerate() {
                    let j = (i + rot) % len;
                    let j = if rev { len - 1 - j } else { j };
                    *c = table[src[j] as usize];
                    if !less {
                        match (*c).cmp(&best[i]) {
                            std::cmp::Ordering::Greater => continue 'table,
                            std::cmp::Ordering::Less => less = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                if less {
                    best.copy_from_slice(&cand);
                }
            }
        }
    }
    BasketCode::from_bytes_unchecked(best)
}
