//! Seifert pairing of the band cores.
//!
//! The core of band `k` runs from its left foot, up through the band and
//! back down the disk. Two cores link only when their bands are
//! interleaved; the pushed-off copy of the front band passes over the back
//! one exactly once, so the pairing is `0` or `±1` and lives on one side of
//! the diagonal.

use serde::{Deserialize, Serialize};

use super::BasketCode;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "Seifert matrix must be square"
        );
        SeifertMatrix {
            n,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        SeifertMatrix { n, entries }
    }

    /// `V + V^T`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j) + self.get(j, i))
                    .collect()
            })
            .collect()
    }
}

/// Row and column `k - 1` belong to band `k`. For interleaved bands `a > b`
/// the entry sits at `(a, b)`: `+1` when the left foot of `a` comes first,
/// `-1` otherwise.
pub fn seifert_matrix(code: &BasketCode) -> SeifertMatrix {
    let n = code.n();
    let feet = code.feet();
    let mut entries = vec![0; n * n];
    for a in 0..n {
        for b in 0..a {
            if super::chords_cross(feet[a], feet[b]) {
                entries[a * n + b] = if feet[a][0] < feet[b][0] { 1 } else { -1 };
            }
        }
    }
    SeifertMatrix { n, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basket::{enumerate_codes, parse_code};

    #[test]
    fn small() {
        assert_eq!(seifert_matrix(&BasketCode::empty()).n(), 0);
        let v = seifert_matrix(&parse_code("1212").unwrap());
        assert_eq!(v.rows(), vec![vec![0, 0], vec![-1, 0]]);
        let v = seifert_matrix(&parse_code("2121").unwrap());
        assert_eq!(v.rows(), vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn shape_invariants() {
        for c in enumerate_codes(4).unwrap() {
            let v = seifert_matrix(&c);
            for i in 0..4 {
                assert_eq!(v.get(i, i), 0);
                for j in 0..4 {
                    if i == j {
                        continue;
                    }
                    let crossed = c.interleaved(i + 1, j + 1).unwrap();
                    let nz = (v.get(i, j) != 0) as u8 + (v.get(j, i) != 0) as u8;
                    assert_eq!(nz, crossed as u8);
                    assert!(v.get(i, j).abs() <= 1);
                }
            }
        }
    }
}
