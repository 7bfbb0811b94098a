//! Planar diagram codes built from signed Gauss codes, face structure,
//! realization of DT codes, braid closures, and Reidemeister I/II
//! simplification.

use std::fmt;

use super::gauss::{gauss_from_dt, DtCode, GaussCode, GaussVisit};
use crate::braid::{closed_components, BraidWord};
use crate::error::{Error, Result};

/// `edges` lists the four edges counterclockwise starting from the incoming
/// under edge. Edges are numbered `0..2c` along the orientation, so edge `k`
/// leaves visit `k` of the Gauss code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub edges: [usize; 4],
    pub sign: i8,
}

impl PdCrossing {
    pub fn is_over_slot(slot: usize) -> bool {
        slot % 2 == 1
    }

    /// Whether the edge in `slot` points into the crossing.
    pub fn incoming(&self, slot: usize) -> bool {
        match slot {
            0 => true,
            2 => false,
            1 => self.sign < 0,
            _ => self.sign > 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<PdCrossing>,
}

/// A corner is the region between slot `i` and slot `i + 1` at a crossing.
pub type Corner = (usize, usize);

impl PlanarDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        PlanarDiagram::default()
    }

    pub fn from_gauss(gauss: &GaussCode) -> Result<Self> {
        if !gauss.is_signed() {
            return Err(Error::MalformedGauss("crossing signs are required".into()));
        }
        let len = gauss.len();
        let c = gauss.crossing_count();
        let mut over_visit = vec![0; c];
        let mut under_visit = vec![0; c];
        let mut sign = vec![0i8; c];
        for (i, v) in gauss.visits().iter().enumerate() {
            if v.over {
                over_visit[v.crossing - 1] = i;
            } else {
                under_visit[v.crossing - 1] = i;
            }
            sign[v.crossing - 1] = v.sign;
        }
        let into = |i: usize| (i + len - 1) % len;
        let crossings = (0..c)
            .map(|k| {
                let (u, o) = (under_visit[k], over_visit[k]);
                let edges = if sign[k] > 0 {
                    [into(u), o, u, into(o)]
                } else {
                    [into(u), into(o), u, o]
                };
                PdCrossing {
                    edges,
                    sign: sign[k],
                }
            })
            .collect();
        Ok(PlanarDiagram { crossings })
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// `ends[e]` holds the two (crossing, slot) positions of edge `e`.
    pub fn edge_ends(&self) -> Vec<[Corner; 2]> {
        let mut ends = vec![[(usize::MAX, 0); 2]; self.edge_count()];
        for (k, x) in self.crossings.iter().enumerate() {
            for (slot, &e) in x.edges.iter().enumerate() {
                let pair = &mut ends[e];
                if pair[0].0 == usize::MAX {
                    pair[0] = (k, slot);
                } else {
                    pair[1] = (k, slot);
                }
            }
        }
        ends
    }

    /// Faces as cycles of corners. `face_of[k][i]` indexes the result.
    pub fn faces(&self) -> (Vec<Vec<Corner>>, Vec<[usize; 4]>) {
        let ends = self.edge_ends();
        let other = |k: usize, slot: usize| {
            let e = self.crossings[k].edges[slot];
            let [a, b] = ends[e];
            if a == (k, slot) {
                b
            } else {
                a
            }
        };
        let mut face_of = vec![[usize::MAX; 4]; self.crossings.len()];
        let mut faces = Vec::new();
        for k in 0..self.crossings.len() {
            for i in 0..4 {
                if face_of[k][i] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut face = Vec::new();
                let (mut ck, mut ci) = (k, i);
                while face_of[ck][ci] == usize::MAX {
                    face_of[ck][ci] = id;
                    face.push((ck, ci));
                    (ck, ci) = other(ck, (ci + 1) % 4);
                }
                faces.push(face);
            }
        }
        (faces, face_of)
    }

    /// Euler characteristic check for a connected diagram on the sphere.
    pub fn is_planar(&self) -> bool {
        let c = self.crossings.len();
        c == 0 || self.faces().0.len() == c + 2
    }

    /// Searches crossing signs (up to a global reflection) for a planar
    /// realization of the DT code.
    pub fn from_dt(dt: &DtCode) -> Result<Self> {
        let c = dt.crossing_count();
        if c == 0 {
            return Ok(PlanarDiagram::unknot());
        }
        if c > 24 {
            return Err(Error::CrossingBudget {
                crossings: c,
                budget: 24,
            });
        }
        let base = gauss_from_dt(dt);
        let mut visits: Vec<GaussVisit> = base.visits().to_vec();
        for mask in 0u32..(1u32 << (c - 1)) {
            for v in visits.iter_mut() {
                let k = v.crossing - 1;
                v.sign = if k == 0 || mask >> (k - 1) & 1 == 0 {
                    1
                } else {
                    -1
                };
            }
            let pd = PlanarDiagram::from_gauss(&GaussCode::new(visits.clone())?)?;
            if pd.is_planar() {
                return Ok(pd);
            }
        }
        Err(Error::NonPlanarDt)
    }

    pub fn from_braid(braid: &BraidWord) -> Result<Self> {
        PlanarDiagram::from_gauss(&gauss_from_braid(braid)?)
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.edges.map(|e| e + 1);
                format!("X[{a},{b},{c},{d}]")
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Signed Gauss code of a closed braid with strands running upwards; the
/// strand moving right passes over at a positive letter.
pub fn gauss_from_braid(braid: &BraidWord) -> Result<GaussCode> {
    let mu = closed_components(braid);
    if mu != 1 {
        return Err(Error::NotAKnot(mu));
    }
    let letters = braid.letters();
    let mut visits = Vec::with_capacity(2 * letters.len());
    let mut pos = 1usize;
    loop {
        for (t, &l) in letters.iter().enumerate() {
            let g = l.unsigned_abs() as usize;
            let sign = l.signum() as i8;
            if pos == g {
                visits.push(GaussVisit {
                    crossing: t + 1,
                    over: sign > 0,
                    sign,
                });
                pos = g + 1;
            } else if pos == g + 1 {
                visits.push(GaussVisit {
                    crossing: t + 1,
                    over: sign < 0,
                    sign,
                });
                pos = g;
            }
        }
        if pos == 1 {
            break;
        }
    }
    GaussCode::new(visits).map(|g| g.renumbered())
}

/// Removes kinks and bigons with one strand passing over both crossings
/// until none remain. Kinks go first, lowest crossing id first.
pub fn simplify_r_moves(gauss: &GaussCode) -> Result<GaussCode> {
    let mut cur = gauss.renumbered();
    loop {
        let len = cur.len();
        if len == 0 {
            return Ok(cur);
        }
        let v = cur.visits();
        let kink = (0..len)
            .filter(|&i| v[i].crossing == v[(i + 1) % len].crossing)
            .map(|i| v[i].crossing)
            .min();
        if let Some(id) = kink {
            cur = cur.without(&[id]);
            continue;
        }
        if !cur.is_signed() {
            return Ok(cur);
        }
        let pd = PlanarDiagram::from_gauss(&cur)?;
        let (faces, _) = pd.faces();
        let bigon = faces
            .iter()
            .filter(|f| f.len() == 2 && f[0].0 != f[1].0)
            .filter(|f| {
                let ((_, i1), (_, i2)) = (f[0], f[1]);
                (i1 + 1) % 2 == i2 % 2
            })
            .map(|f| (f[0].0.min(f[1].0) + 1, f[0].0.max(f[1].0) + 1))
            .min();
        match bigon {
            Some((a, b)) => cur = cur.without(&[a, b]),
            None => return Ok(cur),
        }
    }
}
