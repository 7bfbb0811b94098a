//! Exact determinants over `Z[t, t^-1]` and signatures of symmetric integer
//! matrices.

use crate::poly::LaurentPoly;

/// Fraction-free Gaussian elimination with row pivoting.
pub fn poly_determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return LaurentPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Q {
    n: i128,
    d: i128,
}

impl Q {
    fn int(v: i64) -> Q {
        Q { n: v as i128, d: 1 }
    }

    fn new(n: i128, d: i128) -> Q {
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Q {
            n: s * n / g,
            d: s * d / g,
        }
    }

    fn sub(self, o: Q) -> Q {
        Q::new(self.n * o.d - o.n * self.d, self.d * o.d)
    }

    fn add(self, o: Q) -> Q {
        Q::new(self.n * o.d + o.n * self.d, self.d * o.d)
    }

    fn mul(self, o: Q) -> Q {
        Q::new(self.n * o.n, self.d * o.d)
    }

    fn div(self, o: Q) -> Q {
        Q::new(self.n * o.d, self.d * o.n)
    }
}

/// Signature (positive minus negative eigenvalues) of a symmetric integer
/// matrix, by exact congruence diagonalization.
pub fn symmetric_signature(m: &[Vec<i64>]) -> i64 {
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|r| r.iter().map(|&v| Q::int(v)).collect())
        .collect();
    let mut sig = 0;
    while !a.is_empty() {
        let n = a.len();
        let pivot = match (0..n).find(|&i| a[i][i].n != 0) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j].n != 0)
                else {
                    break;
                };
                // e_i <- e_i + e_j makes the diagonal entry 2 a_ij
                for k in 0..n {
                    a[i][k] = a[i][k].add(a[j][k]);
                }
                for k in 0..n {
                    a[k][i] = a[k][i].add(a[k][j]);
                }
                i
            }
        };
        let p = a[pivot][pivot];
        sig += p.n.signum() as i64;
        let row = a[pivot].clone();
        for i in 0..n {
            if i == pivot || a[i][pivot].n == 0 {
                continue;
            }
            let f = a[i][pivot].div(p);
            for k in 0..n {
                a[i][k] = a[i][k].sub(f.mul(row[k]));
            }
        }
        a.remove(pivot);
        for r in a.iter_mut() {
            r.remove(pivot);
        }
    }
    sig
}

/// Elementary divisors (prime powers, ascending) of the finite abelian group
/// presented by the square matrix `m`, whose determinant is `±det`, `det > 0`.
/// Reduction runs modulo `det`, so entries never grow.
pub fn torsion_divisors(m: &[Vec<i64>], det: u64) -> Vec<u64> {
    if det <= 1 {
        return Vec::new();
    }
    let d = det as i128;
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| (v as i128).rem_euclid(d)).collect())
        .collect();
    let n = a.len();
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            let Some((pi, pj)) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j])
            else {
                break;
            };
            a.swap(t, pi);
            for r in a.iter_mut() {
                r.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t] / p;
                if q != 0 {
                    for k in t..n {
                        a[i][k] = (a[i][k] - q * a[t][k]).rem_euclid(d);
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let q = a[t][j] / p;
                if q != 0 {
                    for r in a.iter_mut().skip(t) {
                        r[j] = (r[j] - q * r[t]).rem_euclid(d);
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for k in t..n {
                        a[t][k] = (a[t][k] + a[i][k]).rem_euclid(d);
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t]);
    }
    let mut out = Vec::new();
    for x in diag {
        let mut g = gcd(x, d) as u64;
        let mut f = 2;
        while g > 1 {
            if f * f > g {
                out.push(g);
                break;
            }
            let mut pp = 1;
            while g % f == 0 {
                g /= f;
                pp *= f;
            }
            if pp > 1 {
                out.push(pp);
            }
            f += 1;
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(v.iter().copied())
    }

    #[test]
    fn determinants() {
        assert_eq!(poly_determinant(vec![]), LaurentPoly::one());
        let m = vec![
            vec![p(&[(0, 1)]), p(&[(1, 1)])],
            vec![p(&[(1, -1)]), p(&[(0, 1)])],
        ];
        assert_eq!(poly_determinant(m), p(&[(0, 1), (2, 1)]));
        let m = vec![
            vec![p(&[]), p(&[(0, 1)]), p(&[(0, 2)])],
            vec![p(&[(0, 1)]), p(&[]), p(&[(0, 3)])],
            vec![p(&[(0, 4)]), p(&[(0, 5)]), p(&[(0, 6)])],
        ];
        assert_eq!(poly_determinant(m), p(&[(0, 16)]));
    }

    #[test]
    fn signatures() {
        assert_eq!(symmetric_signature(&[]), 0);
        assert_eq!(symmetric_signature(&[vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(symmetric_signature(&[vec![-2, 1], vec![1, -2]]), -2);
        assert_eq!(
            symmetric_signature(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]),
            3
        );
        assert_eq!(symmetric_signature(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(symmetric_signature(&[vec![1, 2], vec![2, 1]]), 0);
    }

    #[test]
    fn torsion() {
        assert_eq!(torsion_divisors(&[vec![3]], 3), vec![3]);
        assert_eq!(torsion_divisors(&[vec![5, 0], vec![0, 5]], 25), vec![5, 5]);
        assert_eq!(torsion_divisors(&[vec![5, 1], vec![0, 5]], 25), vec![25]);
        assert_eq!(torsion_divisors(&[vec![2, 0], vec![0, 3]], 6), vec![2, 3]);
        assert_eq!(
            torsion_divisors(&[vec![4, 2], vec![2, 4]], 12),
            vec![2, 2, 3]
        );
        assert!(torsion_divisors(&[], 1).is_empty());
    }
}
