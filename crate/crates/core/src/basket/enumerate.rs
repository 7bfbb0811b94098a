use super::BasketCode;
use crate::error::{Error, Result};

/// Largest band count accepted by the enumerator.
pub const MAX_ENUM_BANDS: usize = 8;

/// `(2n)! / 2^n`, the number of words over `1..=n` with every label twice.
pub fn code_count(n: usize) -> u64 {
    (1..=2 * n as u64).product::<u64>() >> n
}

/// Iterates every code with `n` bands in lexicographic order.
pub fn enumerate_codes(n: usize) -> Result<CodeEnumerator> {
    CodeEnumerator::with_prefix(n, &[])
}

/// Every length-`k` prefix that extends to a valid code, in lexicographic
/// order. These are the census work chunks.
pub fn prefixes(n: usize, k: usize) -> Vec<Vec<u8>> {
    let k = k.min(2 * n);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![0u8; n + 1];
    fn rec(n: usize, k: usize, cur: &mut Vec<u8>, used: &mut [u8], out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for l in 1..=n {
            if used[l] < 2 {
                used[l] += 1;
                cur.push(l as u8);
                rec(n, k, cur, used, out);
                cur.pop();
                used[l] -= 1;
            }
        }
    }
    rec(n, k, &mut cur, &mut used, &mut out);
    out
}

/// Lexicographic multiset-permutation walk over the positions after a fixed
/// prefix.
pub struct CodeEnumerator {
    word: Vec<u8>,
    fixed: usize,
    done: bool,
}

impl CodeEnumerator {
    pub fn with_prefix(n: usize, prefix: &[u8]) -> Result<Self> {
        if n > MAX_ENUM_BANDS {
            return Err(Error::BandCountOutOfRange(n));
        }
        let mut used = vec![0u8; n + 1];
        for &l in prefix {
            let l = l as usize;
            if l == 0 || l > n {
                return Err(Error::LabelOutOfRange { label: l, n });
            }
            used[l] += 1;
            if used[l] > 2 {
                return Err(Error::LabelMultiplicity {
                    label: l,
                    count: used[l] as usize,
                });
            }
        }
        if prefix.len() > 2 * n {
            return Err(Error::MalformedCode("prefix longer than the code".into()));
        }
        let mut word = prefix.to_vec();
        for l in 1..=n {
            for _ in used[l]..2 {
                word.push(l as u8);
            }
        }
        Ok(CodeEnumerator {
            word,
            fixed: prefix.len(),
            done: false,
        })
    }

    fn advance(&mut self) -> bool {
        let w = &mut self.word[self.fixed..];
        if w.len() < 2 {
            return false;
        }
        let mut i = w.len() - 1;
        while i > 0 && w[i - 1] >= w[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = w.len() - 1;
        while w[j] <= w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }
}

impl Iterator for CodeEnumerator {
    type Item = BasketCode;

    fn next(&mut self) -> Option<BasketCode> {
        if self.done {
            return None;
        }
        let out = BasketCode {
            word: self.word.clone(),
        };
        self.done = !self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basket::parse_code;

    #[test]
    fn counts() {
        assert_eq!(code_count(0), 1);
        assert_eq!(code_count(1), 1);
        assert_eq!(code_count(2), 6);
        assert_eq!(code_count(3), 90);
        assert_eq!(code_count(6), 7_484_400);
        for n in 0..=4 {
            assert_eq!(enumerate_codes(n).unwrap().count() as u64, code_count(n));
        }
    }

    #[test]
    fn two_bands_in_order() {
        let all: Vec<String> = enumerate_codes(2).unwrap().map(|c| c.to_string()).collect();
        assert_eq!(all, ["1122", "1212", "1221", "2112", "2121", "2211"]);
        let one: Vec<BasketCode> = enumerate_codes(1).unwrap().collect();
        assert_eq!(one, vec![parse_code("11").unwrap()]);
        assert_eq!(
            enumerate_codes(0).unwrap().next(),
            Some(BasketCode::empty())
        );
    }

    #[test]
    fn range_guard() {
        assert!(matches!(
            enumerate_codes(9),
            Err(Error::BandCountOutOfRange(9))
        ));
    }

    #[test]
    fn prefix_chunks_partition() {
        for n in 1..=4 {
            for k in 0..=3 {
                let total: usize = prefixes(n, k)
                    .iter()
                    .map(|p| CodeEnumerator::with_prefix(n, p).unwrap().count())
                    .sum();
                assert_eq!(total as u64, code_count(n), "n={n} k={k}");
            }
        }
        // concatenating the chunks reproduces the global order
        let flat: Vec<BasketCode> = prefixes(3, 2)
            .iter()
            .flat_map(|p| CodeEnumerator::with_prefix(3, p).unwrap())
            .collect();
        let all: Vec<BasketCode> = enumerate_codes(3).unwrap().collect();
        assert_eq!(flat, all);
    }
}
