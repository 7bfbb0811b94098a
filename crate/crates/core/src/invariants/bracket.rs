//! Kauffman bracket by crossing-at-a-time contraction.
//!
//! States are perfect matchings on the currently open edges, each carrying a
//! polynomial in `A`. Arithmetic wraps modulo `2^64`; the bracket of a knot
//! diagram in the supported size range has small coefficients, so the
//! wrapped result is exact.

use std::collections::HashMap;

use crate::diagram::PlanarDiagram;
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, Default)]
struct WrapPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl WrapPoly {
    fn one() -> Self {
        WrapPoly {
            low: 0,
            coeffs: vec![1],
        }
    }

    fn add_shifted(&mut self, other: &WrapPoly, shift: i32) {
        if other.coeffs.is_empty() {
            return;
        }
        let olow = other.low + shift;
        if self.coeffs.is_empty() {
            self.low = olow;
            self.coeffs = other.coeffs.clone();
            return;
        }
        let lo = self.low.min(olow);
        let hi = (self.low + self.coeffs.len() as i32).max(olow + other.coeffs.len() as i32);
        if lo < self.low {
            let mut v = vec![0; (self.low - lo) as usize];
            v.extend_from_slice(&self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        self.coeffs.resize((hi - lo) as usize, 0);
        let off = (olow - lo) as usize;
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i] = self.coeffs[off + i].wrapping_add(c);
        }
    }

    /// Multiplies by `d = -A^2 - A^-2`.
    fn times_loop(&self) -> WrapPoly {
        let mut out = WrapPoly {
            low: self.low - 2,
            coeffs: vec![0; self.coeffs.len() + 4],
        };
        for (i, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[i] = out.coeffs[i].wrapping_sub(c);
            out.coeffs[i + 4] = out.coeffs[i + 4].wrapping_sub(c);
        }
        out
    }

    /// Exact division by `d`.
    fn div_loop(&self) -> WrapPoly {
        // p / d = -A^2 * p / (1 + A^4)
        let mut r = self.coeffs.clone();
        let mut q = vec![0i64; r.len().saturating_sub(4)];
        for k in 0..q.len() {
            q[k] = r[k];
            r[k + 4] = r[k + 4].wrapping_sub(r[k]);
            r[k] = 0;
        }
        debug_assert!(
            r.iter().all(|&c| c == 0),
            "bracket sum not divisible by the loop value"
        );
        WrapPoly {
            low: self.low + 2,
            coeffs: q.into_iter().map(|c| c.wrapping_neg()).collect(),
        }
    }

    fn into_poly(self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.low, self.coeffs)
    }
}

/// Picks the next crossing with the most already open edges.
fn contraction_order(pd: &PlanarDiagram) -> Vec<usize> {
    let c = pd.crossing_count();
    let mut seen = vec![0u8; pd.edge_count()];
    let mut done = vec![false; c];
    let mut order = Vec::with_capacity(c);
    for _ in 0..c {
        let best = (0..c)
            .filter(|&k| !done[k])
            .max_by_key(|&k| {
                let open = pd.crossings()[k]
                    .edges
                    .iter()
                    .filter(|&&e| seen[e] == 1)
                    .count();
                (open, std::cmp::Reverse(k))
            })
            .unwrap();
        done[best] = true;
        order.push(best);
        for &e in &pd.crossings()[best].edges {
            seen[e] += 1;
        }
    }
    order
}

/// Joins the path ends `x` and `y`. Returns whether a loop closed.
fn join(x: usize, y: usize, cnt: &mut [u8], pe: &mut [usize]) -> bool {
    if x == y {
        cnt[x] += 2;
        return true;
    }
    let (xo, yo) = (cnt[x] == 1, cnt[y] == 1);
    cnt[x] += 1;
    cnt[y] += 1;
    match (xo, yo) {
        (true, true) => {
            let (px, py) = (pe[x], pe[y]);
            if px == y {
                return true;
            }
            pe[px] = py;
            pe[py] = px;
        }
        (true, false) => {
            let px = pe[x];
            pe[px] = y;
            pe[y] = px;
        }
        (false, true) => {
            let py = pe[y];
            pe[py] = x;
            pe[x] = py;
        }
        (false, false) => {
            pe[x] = y;
            pe[y] = x;
        }
    }
    false
}

/// `<D>` in the variable `A`, normalized so the crossingless unknot is `1`.
/// At a crossing `X[a,b,c,d]` the `A` smoothing joins `a` to `b` and `c` to
/// `d`.
pub fn kauffman_bracket(pd: &PlanarDiagram) -> LaurentPoly {
    if pd.crossing_count() == 0 {
        return LaurentPoly::one();
    }
    let edges = pd.edge_count();
    let mut seen = vec![0u8; edges];
    let mut open: Vec<usize> = Vec::new();
    let mut index_of = vec![u16::MAX; edges];
    let mut states: HashMap<Vec<u16>, WrapPoly> = HashMap::new();
    states.insert(Vec::new(), WrapPoly::one());
    let mut pe = vec![usize::MAX; edges];
    let mut local = vec![0u8; edges];
    for k in contraction_order(pd) {
        let [a, b, c, d] = pd.crossings()[k].edges;
        let mut next_seen = seen.clone();
        for e in [a, b, c, d] {
            next_seen[e] += 1;
        }
        let mut next_open: Vec<usize> = open
            .iter()
            .copied()
            .filter(|&e| next_seen[e] == 1)
            .collect();
        for e in [a, b, c, d] {
            if next_seen[e] == 1 && seen[e] == 0 && !next_open.contains(&e) {
                next_open.push(e);
            }
        }
        for (i, &e) in next_open.iter().enumerate() {
            index_of[e] = i as u16;
        }
        let mut next_states: HashMap<Vec<u16>, WrapPoly> = HashMap::with_capacity(states.len() * 2);
        for (key, poly) in &states {
            for (arcs, shift) in [([(a, b), (c, d)], 1), ([(a, d), (b, c)], -1)] {
                for (i, &e) in open.iter().enumerate() {
                    pe[e] = open[key[i] as usize];
                }
                for e in [a, b, c, d] {
                    local[e] = seen[e];
                }
                let mut loops = 0;
                for (x, y) in arcs {
                    if join(x, y, &mut local, &mut pe) {
                        loops += 1;
                    }
                }
                let new_key: Vec<u16> = next_open.iter().map(|&e| index_of[pe[e]]).collect();
                let mut term = poly.clone();
                for _ in 0..loops {
                    term = term.times_loop();
                }
                next_states
                    .entry(new_key)
                    .or_default()
                    .add_shifted(&term, shift);
            }
        }
        states = next_states;
        seen = next_seen;
        open = next_open;
    }
    let total = states.remove(&Vec::new()).expect("all edges closed");
    total.div_loop().into_poly()
}

/// Sum over all `2^c` smoothings; the reference the contraction engine is
/// tested against.
pub fn kauffman_bracket_naive(pd: &PlanarDiagram) -> LaurentPoly {
    let c = pd.crossing_count();
    assert!(c <= 20, "naive state sum is limited to 20 crossings");
    if c == 0 {
        return LaurentPoly::one();
    }
    let edges = pd.edge_count();
    let d = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut total = LaurentPoly::zero();
    let mut parent = vec![0usize; edges];
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for mask in 0u32..(1 << c) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut a_count = 0i32;
        for (k, x) in pd.crossings().iter().enumerate() {
            let [a, b, cc, dd] = x.edges;
            let arcs = if mask >> k & 1 == 0 {
                a_count += 1;
                [(a, b), (cc, dd)]
            } else {
                a_count -= 1;
                [(a, dd), (b, cc)]
            };
            for (x, y) in arcs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
        let loops = (0..edges).filter(|&e| find(&mut parent, e) == e).count() as u32;
        total = &total + &d.pow(loops - 1).shift(a_count);
    }
    total
}
