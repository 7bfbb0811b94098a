use crate::diagram::PlanarDiagram;
use crate::poly::LaurentPoly;

use super::bracket::kauffman_bracket;

/// `(-A^3)^(-w) <D>` with `A = t^(-1/4)`, written in `q = t^(1/2)`.
pub fn jones_from_pd(pd: &PlanarDiagram) -> LaurentPoly {
    let w = pd.writhe();
    let bracket = kauffman_bracket(pd);
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let in_a = bracket.shift(-3 * w as i32).scale(sign);
    in_a.substitute_power(-1)
        .divide_exponents(2)
        .expect("a knot diagram has bracket exponents of one parity")
}

/// Rewrites a polynomial in `q = t^(1/2)` in the variable `t`, when all
/// exponents are even.
pub fn q_to_t(p: &LaurentPoly) -> Option<LaurentPoly> {
    p.divide_exponents(2)
}

/// `J(q^-1)`, the Jones polynomial of the mirror image.
pub fn mirror_jones(p: &LaurentPoly) -> LaurentPoly {
    p.invert_variable()
}
