//! The boundary of a basket surface drawn in the plane.
//!
//! The disk sits below the x-axis with foot `p` centred at `x = 8p` on its
//! top edge. Each foot has a left and a right side. A band with feet `p < q`
//! is an upper half annulus: its outer strand is the semicircle from the
//! left side of `p` to the right side of `q`, its inner strand runs from the
//! right side of `p` to the left side of `q`. Semicircles on a common
//! diameter line meet iff their endpoints interleave, and then exactly once.

use std::cmp::Ordering;

use super::gauss::{GaussCode, GaussVisit};
use crate::basket::BasketCode;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcStrand {
    pub band: usize,
    pub outer: bool,
    pub left: i64,
    pub right: i64,
}

impl ArcStrand {
    /// Boundary orientation: outer strands run left to right, inner ones
    /// right to left.
    pub fn direction(&self) -> i64 {
        if self.outer {
            1
        } else {
            -1
        }
    }

    fn centre_twice(&self) -> i64 {
        self.left + self.right
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcCrossing {
    pub over: usize,
    pub under: usize,
    pub sign: i8,
    /// Exact x coordinate `num / den`, `den > 0`.
    pub x_num: i128,
    pub x_den: i128,
}

#[derive(Clone, Debug)]
pub struct ArcDiagram {
    code: BasketCode,
    left_side: Vec<i64>,
    right_side: Vec<i64>,
    strands: Vec<ArcStrand>,
    crossings: Vec<ArcCrossing>,
    /// Crossing ids along each strand in increasing x.
    along: Vec<Vec<usize>>,
    /// Strand leaving the left side of each foot (clockwise walk).
    from_left: Vec<usize>,
}

fn cmp_frac(an: i128, ad: i128, bn: i128, bd: i128) -> Ordering {
    (an * bd).cmp(&(bn * ad))
}

/// Deterministic jitter for the foot sides; retried with the next seed when
/// a strand meets two others at the same x.
fn sides(len: usize, seed: u64) -> (Vec<i64>, Vec<i64>) {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0xD1B5_4A32_D192_ED03;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 997) as i64
    };
    let scale = 1000;
    let mut left = Vec::with_capacity(len);
    let mut right = Vec::with_capacity(len);
    for p in 0..len as i64 {
        let c = 8 * scale * p;
        if seed == 0 {
            left.push(c - scale);
            right.push(c + scale);
        } else {
            left.push(c - scale - next());
            right.push(c + scale + next());
        }
    }
    (left, right)
}

pub fn build_arc_diagram(code: &BasketCode) -> ArcDiagram {
    for seed in 0.. {
        if let Some(d) = try_build(code, seed) {
            return d;
        }
    }
    unreachable!()
}

fn try_build(code: &BasketCode, seed: u64) -> Option<ArcDiagram> {
    let len = code.len();
    let (left_side, right_side) = sides(len, seed);
    let feet = code.feet();
    let mut strands = Vec::with_capacity(len);
    let mut from_left = vec![0; len];
    for (k, &[p, q]) in feet.iter().enumerate() {
        from_left[p] = strands.len();
        strands.push(ArcStrand {
            band: k + 1,
            outer: true,
            left: left_side[p],
            right: right_side[q],
        });
        from_left[q] = strands.len();
        strands.push(ArcStrand {
            band: k + 1,
            outer: false,
            left: right_side[p],
            right: left_side[q],
        });
    }
    let mut crossings = Vec::new();
    let mut along = vec![Vec::new(); strands.len()];
    for i in 0..strands.len() {
        for j in i + 1..strands.len() {
            let (a, b) = (strands[i], strands[j]);
            if a.band == b.band {
                continue;
            }
            let a_in = |x: i64| a.left < x && x < a.right;
            if a_in(b.left) == a_in(b.right) {
                continue;
            }
            let (mut num, mut den) = (
                (a.left as i128 * a.right as i128) - (b.left as i128 * b.right as i128),
                (a.centre_twice() - b.centre_twice()) as i128,
            );
            if den < 0 {
                num = -num;
                den = -den;
            }
            let (over, under) = if a.band > b.band { (i, j) } else { (j, i) };
            let (so, su) = (strands[over], strands[under]);
            let sign = (so.direction()
                * su.direction()
                * (su.centre_twice() - so.centre_twice()).signum()) as i8;
            along[i].push(crossings.len());
            along[j].push(crossings.len());
            crossings.push(ArcCrossing {
                over,
                under,
                sign,
                x_num: num,
                x_den: den,
            });
        }
    }
    for list in along.iter_mut() {
        list.sort_by(|&a, &b| {
            let (ca, cb) = (crossings[a], crossings[b]);
            cmp_frac(ca.x_num, ca.x_den, cb.x_num, cb.x_den)
        });
        let tie = list.windows(2).any(|w| {
            let (ca, cb) = (crossings[w[0]], crossings[w[1]]);
            cmp_frac(ca.x_num, ca.x_den, cb.x_num, cb.x_den) == Ordering::Equal
        });
        if tie {
            return None;
        }
    }
    Some(ArcDiagram {
        code: code.clone(),
        left_side,
        right_side,
        strands,
        crossings,
        along,
        from_left,
    })
}

impl ArcDiagram {
    pub fn code(&self) -> &BasketCode {
        &self.code
    }

    pub fn strands(&self) -> &[ArcStrand] {
        &self.strands
    }

    pub fn crossings(&self) -> &[ArcCrossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn foot_sides(&self) -> (&[i64], &[i64]) {
        (&self.left_side, &self.right_side)
    }

    pub fn component_count(&self) -> usize {
        self.code.component_count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Crossing ids met along `strand` in the direction of the boundary
    /// orientation.
    fn oriented_along(&self, strand: usize) -> impl Iterator<Item = usize> + '_ {
        let list = &self.along[strand];
        let fwd = self.strands[strand].outer;
        (0..list.len()).map(move |i| {
            if fwd {
                list[i]
            } else {
                list[list.len() - 1 - i]
            }
        })
    }

    /// Visits along the boundary starting just left of foot `start`,
    /// clockwise around the disk (rightwards along its top edge), or the
    /// reverse when `reversed`. Crossings are numbered by first visit.
    pub fn gauss_code(&self, start: usize, reversed: bool) -> Result<GaussCode> {
        let len = self.code.len();
        if len == 0 {
            return Ok(GaussCode::default());
        }
        let mu = self.component_count();
        if mu != 1 {
            return Err(Error::NotAKnot(mu));
        }
        let start = start % len;
        let partner = self.code.partner();
        let mut raw = Vec::with_capacity(2 * self.crossings.len());
        let mut foot = start;
        loop {
            let s = self.from_left[foot];
            for c in self.oriented_along(s) {
                raw.push((c, self.crossings[c].over == s));
            }
            foot = (partner[foot] + 1) % len;
            if foot == start {
                break;
            }
        }
        if reversed {
            // walking leftwards from the gap left of `start` first meets the
            // strand that the clockwise walk used just before that gap
            raw.reverse();
        }
        let mut ids = vec![usize::MAX; self.crossings.len()];
        let mut next = 0;
        let visits = raw
            .into_iter()
            .map(|(c, over)| {
                if ids[c] == usize::MAX {
                    ids[c] = next;
                    next += 1;
                }
                GaussVisit {
                    crossing: ids[c] + 1,
                    over,
                    sign: self.crossings[c].sign,
                }
            })
            .collect();
        GaussCode::new(visits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basket::{enumerate_codes, parse_code};

    #[test]
    fn crossing_counts() {
        assert_eq!(
            build_arc_diagram(&parse_code("12341234").unwrap()).crossing_count(),
            24
        );
        assert_eq!(
            build_arc_diagram(&parse_code("1122").unwrap()).crossing_count(),
            0
        );
        assert_eq!(
            build_arc_diagram(&parse_code("1212").unwrap()).crossing_count(),
            4
        );
        for c in enumerate_codes(4).unwrap() {
            let d = build_arc_diagram(&c);
            assert_eq!(d.crossing_count(), 4 * c.interleaved_pairs().len());
            for x in d.crossings() {
                assert!(d.strands()[x.over].band > d.strands()[x.under].band);
            }
        }
    }

    #[test]
    fn gauss_lengths() {
        let g = build_arc_diagram(&BasketCode::empty())
            .gauss_code(0, false)
            .unwrap();
        assert!(g.is_empty());
        let g = build_arc_diagram(&parse_code("1212").unwrap())
            .gauss_code(0, false)
            .unwrap();
        assert_eq!(g.len(), 8);
        let g = build_arc_diagram(&parse_code("12341234").unwrap())
            .gauss_code(0, false)
            .unwrap();
        assert_eq!(g.len(), 48);
        assert!(matches!(
            build_arc_diagram(&parse_code("1122").unwrap()).gauss_code(0, false),
            Err(Error::NotAKnot(3))
        ));
    }

    #[test]
    fn reversal_keeps_signs() {
        let d = build_arc_diagram(&parse_code("123124563456").unwrap());
        let a = d.gauss_code(0, false).unwrap();
        let b = d.gauss_code(0, true).unwrap();
        assert_eq!(a.len(), b.len());
        let sum = |g: &GaussCode| g.visits().iter().map(|v| v.sign as i64).sum::<i64>();
        assert_eq!(sum(&a), sum(&b));
        assert_eq!(sum(&a), 2 * d.writhe());
    }
}
