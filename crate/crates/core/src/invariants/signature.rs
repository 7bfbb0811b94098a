use crate::basket::SeifertMatrix;
use crate::diagram::PlanarDiagram;

use super::matrix::{symmetric_signature, torsion_divisors};

/// Signature of `V + V^T`.
pub fn signature(v: &SeifertMatrix) -> i64 {
    symmetric_signature(&v.symmetrized())
}

/// Two-colours the faces so that the corners on either side of an edge
/// differ.
pub fn face_colours(pd: &PlanarDiagram) -> (Vec<[usize; 4]>, Vec<u8>) {
    let (faces, face_of) = pd.faces();
    let mut colour = vec![u8::MAX; faces.len()];
    let mut adj = vec![Vec::new(); faces.len()];
    for f in &face_of {
        for i in 0..4 {
            adj[f[i]].push(f[(i + 1) % 4]);
            adj[f[(i + 1) % 4]].push(f[i]);
        }
    }
    for s in 0..faces.len() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            for &g in &adj[f] {
                if colour[g] == u8::MAX {
                    colour[g] = 1 - colour[f];
                    stack.push(g);
                }
            }
        }
    }
    (face_of, colour)
}

/// Goeritz form on the faces of colour `white`, corrected by the crossings
/// where the other checkerboard surface is locally non-orientable (the
/// white corners are coherently oriented there). Either colour gives the
/// same answer.
pub(crate) fn gordon_litherland(pd: &PlanarDiagram, white: u8) -> i64 {
    if pd.crossing_count() == 0 {
        return 0;
    }
    let (reduced, mu) = goeritz(pd, white);
    mu - symmetric_signature(&reduced)
}

/// Reduced Goeritz matrix on the faces of colour `white` and the
/// Gordon–Litherland correction term.
fn goeritz(pd: &PlanarDiagram, white: u8) -> (Vec<Vec<i64>>, i64) {
    let (face_of, colour) = face_colours(pd);
    let mut index = vec![usize::MAX; colour.len()];
    let mut w = 0;
    for (f, &c) in colour.iter().enumerate() {
        if c == white {
            index[f] = w;
            w += 1;
        }
    }
    let mut g = vec![vec![0i64; w]; w];
    let mut mu = 0;
    for (k, x) in pd.crossings().iter().enumerate() {
        let swept = colour[face_of[k][1]] == white;
        let eta = if swept { 1 } else { -1 };
        let corners = if swept { [1, 3] } else { [0, 2] };
        let (f1, f2) = (index[face_of[k][corners[0]]], index[face_of[k][corners[1]]]);
        if f1 != f2 {
            g[f1][f2] -= eta;
            g[f2][f1] -= eta;
            g[f1][f1] += eta;
            g[f2][f2] += eta;
        }
        let i = corners[0];
        let coherent = x.incoming(i) != x.incoming((i + 1) % 4);
        if coherent {
            mu += eta;
        }
    }
    let reduced: Vec<Vec<i64>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    (reduced, mu)
}

/// Elementary divisors of the first homology of the double branched cover,
/// presented by `V + V^T`. `det` is the knot determinant.
pub fn double_cover(v: &SeifertMatrix, det: u64) -> Vec<u64> {
    torsion_divisors(&v.symmetrized(), det)
}

/// As [`double_cover`], presented by a reduced Goeritz matrix.
pub fn double_cover_from_pd(pd: &PlanarDiagram, det: u64) -> Vec<u64> {
    if pd.crossing_count() == 0 {
        return Vec::new();
    }
    torsion_divisors(&goeritz(pd, 0).0, det)
}

/// Knot signature from a diagram via the Goeritz form of a checkerboard
/// surface with its correction term.
pub fn signature_from_pd(pd: &PlanarDiagram) -> i64 {
    gordon_litherland(pd, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basket::{enumerate_codes, seifert_matrix};
    use crate::diagram::{build_arc_diagram, simplify_r_moves};

    #[test]
    fn diagram_signature_matches_seifert_form() {
        let mut codes: Vec<_> = enumerate_codes(4)
            .unwrap()
            .filter(|c| c.component_count() == 1)
            .collect();
        for s in [
            "123456123456",
            "123124563456",
            "123124653465",
            "125314625463",
            "123456451236",
        ] {
            codes.push(s.parse().unwrap());
        }
        for c in codes {
            let g = build_arc_diagram(&c).gauss_code(0, false).unwrap();
            let raw = PlanarDiagram::from_gauss(&g).unwrap();
            let small = PlanarDiagram::from_gauss(&simplify_r_moves(&g).unwrap()).unwrap();
            let v = seifert_matrix(&c);
            let s = signature(&v);
            let det = crate::invariants::determinant_invariant(&crate::invariants::alexander(&v));
            assert_eq!(
                double_cover_from_pd(&small, det),
                double_cover(&v, det),
                "{c}"
            );
            for pd in [&raw, &small] {
                assert_eq!(gordon_litherland(pd, 0), s, "{c}");
                assert_eq!(gordon_litherland(pd, 1), s, "{c}");
            }
        }
    }
}
