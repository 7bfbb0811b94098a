//! Type I moves: a band whose two feet sit immediately on either side of a
//! single foot of another band can be removed together with that band
//! without changing the boundary link.

use serde::{Deserialize, Serialize};

use super::BasketCode;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeOneRule {
    /// Cyclic pattern `b a b`: band `b` straddles exactly one foot of band `a`.
    #[default]
    Straddle,
    /// `Straddle`, and additionally no band interleaving `a` has a page
    /// strictly between the pages of `a` and `b`.
    StraddlePageAdjacent,
    /// Cyclic pattern `a b .. b a`: two parallel chords with adjacent feet.
    /// Such a pair always splits off a boundary circle, so this rule never
    /// fires on a knot code.
    NestedAdjacent,
}

pub fn find_type_one_moves(code: &BasketCode) -> Vec<(usize, usize)> {
    find_type_one_moves_with(code, TypeOneRule::Straddle)
}

/// All applicable moves as label pairs `(low, high)`, sorted and deduplicated.
pub fn find_type_one_moves_with(code: &BasketCode, rule: TypeOneRule) -> Vec<(usize, usize)> {
    let len = code.len();
    if code.n() < 2 {
        return Vec::new();
    }
    let w = code.word();
    let at = |i: usize| w[i % len] as usize;
    let mut out = Vec::new();
    match rule {
        TypeOneRule::Straddle | TypeOneRule::StraddlePageAdjacent => {
            let feet = code.feet();
            for i in 0..len {
                let (b, a) = (at(i), at(i + 1));
                if at(i + 2) != b || a == b {
                    continue;
                }
                if rule == TypeOneRule::StraddlePageAdjacent {
                    let (lo, hi) = (a.min(b), a.max(b));
                    let blocked =
                        (lo + 1..hi).any(|c| super::chords_cross(feet[a - 1], feet[c - 1]));
                    if blocked {
                        continue;
                    }
                }
                out.push((a.min(b), a.max(b)));
            }
        }
        TypeOneRule::NestedAdjacent => {
            for i in 0..len {
                let (a, b) = (at(i), at(i + 1));
                if a == b {
                    continue;
                }
                for j in 0..len {
                    let (y, x) = (at(j), at(j + 1));
                    let distinct = [i % len, (i + 1) % len, j % len, (j + 1) % len];
                    let all_distinct =
                        (0..4).all(|p| (p + 1..4).all(|q| distinct[p] != distinct[q]));
                    if all_distinct && x == a && y == b {
                        out.push((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn remove_pair(code: &BasketCode, a: usize, b: usize) -> BasketCode {
    let word = code
        .word()
        .iter()
        .map(|&l| l as usize)
        .filter(|&l| l != a && l != b)
        .map(|l| (l - (l > a) as usize - (l > b) as usize) as u8)
        .collect();
    BasketCode::from_bytes_unchecked(word)
}

/// Deletes both bands of an applicable move and compacts the labels,
/// keeping the relative page order of the remaining bands.
pub fn apply_type_one(code: &BasketCode, pair: (usize, usize)) -> Result<BasketCode> {
    apply_type_one_with(code, pair, TypeOneRule::Straddle)
}

pub fn apply_type_one_with(
    code: &BasketCode,
    pair: (usize, usize),
    rule: TypeOneRule,
) -> Result<BasketCode> {
    let (a, b) = (pair.0.min(pair.1), pair.0.max(pair.1));
    if !find_type_one_moves_with(code, rule).contains(&(a, b)) {
        return Err(Error::MoveNotApplicable(pair.0, pair.1));
    }
    Ok(remove_pair(code, a, b))
}

/// Applies the lowest available move until none is left.
pub fn reduce_type_one(code: &BasketCode) -> BasketCode {
    let mut cur = code.clone();
    while let Some(&(a, b)) = find_type_one_moves(&cur).first() {
        cur = remove_pair(&cur, a, b);
    }
    cur
}
