use crate::basket::SeifertMatrix;
use crate::diagram::PlanarDiagram;
use crate::poly::LaurentPoly;

use super::matrix::poly_determinant;

/// Symmetric representative with positive value at `t = 1`.
pub fn normalize_alexander(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let centre = (p.min_exp() + p.max_exp()).div_euclid(2);
    let q = p.shift(-centre);
    let negative = match q.eval_one() {
        0 => q.leading_coeff() < 0,
        v => v < 0,
    };
    if negative {
        -q
    } else {
        q
    }
}

/// `det(V - t V^T)`, normalized.
pub fn alexander(v: &SeifertMatrix) -> LaurentPoly {
    let n = v.n();
    let t = LaurentPoly::monomial(1, 1);
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &LaurentPoly::monomial(v.get(i, j), 0) - &t.scale(v.get(j, i)))
                .collect()
        })
        .collect();
    normalize_alexander(&poly_determinant(m))
}

/// Fox calculus on the Wirtinger presentation of the diagram.
pub fn alexander_from_pd(pd: &PlanarDiagram) -> LaurentPoly {
    let c = pd.crossing_count();
    if c <= 1 {
        return LaurentPoly::one();
    }
    // arcs: edges joined through over-passes
    let mut parent: Vec<usize> = (0..pd.edge_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for x in pd.crossings() {
        let (a, b) = (find(&mut parent, x.edges[1]), find(&mut parent, x.edges[3]));
        parent[a] = b;
    }
    let mut arc_id = vec![usize::MAX; pd.edge_count()];
    let mut arcs = 0;
    for e in 0..pd.edge_count() {
        let r = find(&mut parent, e);
        if arc_id[r] == usize::MAX {
            arc_id[r] = arcs;
            arcs += 1;
        }
        arc_id[e] = arc_id[r];
    }
    let one_minus_t = LaurentPoly::from_terms([(0, 1), (1, -1)]);
    let t = LaurentPoly::monomial(1, 1);
    let minus_one = LaurentPoly::monomial(-1, 0);
    let mut m = vec![vec![LaurentPoly::zero(); arcs]; c];
    for (k, x) in pd.crossings().iter().enumerate() {
        let (o, a, b) = (arc_id[x.edges[1]], arc_id[x.edges[0]], arc_id[x.edges[2]]);
        let (fa, fb) = if x.sign > 0 {
            (&t, &minus_one)
        } else {
            (&minus_one, &t)
        };
        m[k][o] = &m[k][o] + &one_minus_t;
        m[k][a] = &m[k][a] + fa;
        m[k][b] = &m[k][b] + fb;
    }
    let minor: Vec<Vec<LaurentPoly>> = m[..c - 1].iter().map(|r| r[..arcs - 1].to_vec()).collect();
    normalize_alexander(&poly_determinant(minor))
}

/// `|Δ(-1)|`.
pub fn determinant_invariant(alex: &LaurentPoly) -> u64 {
    alex.eval_minus_one().unsigned_abs()
}
