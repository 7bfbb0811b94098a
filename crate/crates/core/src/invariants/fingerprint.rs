use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basket::{seifert_matrix, BasketCode};
use crate::diagram::{build_arc_diagram, simplify_r_moves, PlanarDiagram};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

use super::alexander::{alexander, alexander_from_pd, determinant_invariant};
use super::jones::{jones_from_pd, mirror_jones};
use super::signature::{double_cover, double_cover_from_pd, signature, signature_from_pd};

/// Largest diagram handed to the bracket engine by default.
pub const DEFAULT_CROSSING_BUDGET: usize = 64;

/// Mirror-sensitive invariants of one concrete knot. Jones is in `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedInvariants {
    pub jones: LaurentPoly,
    pub alexander: LaurentPoly,
    pub signature: i64,
    /// Elementary divisors of `H_1` of the double branched cover.
    pub double_cover: Vec<u64>,
}

impl SignedInvariants {
    pub fn unknot() -> Self {
        SignedInvariants {
            jones: LaurentPoly::one(),
            alexander: LaurentPoly::one(),
            signature: 0,
            double_cover: Vec::new(),
        }
    }

    pub fn mirror(&self) -> Self {
        SignedInvariants {
            jones: mirror_jones(&self.jones),
            alexander: self.alexander.clone(),
            signature: -self.signature,
            double_cover: self.double_cover.clone(),
        }
    }

    pub fn connected_sum(&self, other: &Self) -> Self {
        let mut double_cover =
            [self.double_cover.as_slice(), other.double_cover.as_slice()].concat();
        double_cover.sort_unstable();
        SignedInvariants {
            jones: &self.jones * &other.jones,
            alexander: &self.alexander * &other.alexander,
            signature: self.signature + other.signature,
            double_cover,
        }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mirrored = mirror_jones(&self.jones);
        let jones = if mirrored.cmp_terms(&self.jones).is_lt() {
            mirrored
        } else {
            self.jones.clone()
        };
        Fingerprint {
            jones,
            alexander: self.alexander.clone(),
            determinant: determinant_invariant(&self.alexander),
            abs_signature: self.signature.unsigned_abs(),
            double_cover: self.double_cover.clone(),
        }
    }
}

/// Invariant tuple that does not see mirror images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    /// The smaller of `J(q)` and `J(q^-1)` in ascending term order.
    pub jones: LaurentPoly,
    pub alexander: LaurentPoly,
    pub determinant: u64,
    pub abs_signature: u64,
    pub double_cover: Vec<u64>,
}

impl Fingerprint {
    pub fn unknot() -> Self {
        SignedInvariants::unknot().fingerprint()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "jones(q)={} alexander={} det={} |sig|={} h1={:?}",
            self.jones.display_with("q"),
            self.alexander,
            self.determinant,
            self.abs_signature,
            self.double_cover
        )
    }
}

/// Reduced planar diagram of the boundary of a knot code.
pub fn code_diagram(code: &BasketCode) -> Result<PlanarDiagram> {
    let gauss = build_arc_diagram(code).gauss_code(0, false)?;
    PlanarDiagram::from_gauss(&simplify_r_moves(&gauss)?)
}

fn check_budget(pd: &PlanarDiagram, budget: usize) -> Result<()> {
    if pd.crossing_count() > budget {
        return Err(Error::CrossingBudget {
            crossings: pd.crossing_count(),
            budget,
        });
    }
    Ok(())
}

/// Jones from the boundary diagram; Alexander and signature from the
/// Seifert form of the basket surface.
pub fn code_invariants(code: &BasketCode, budget: usize) -> Result<SignedInvariants> {
    let mu = code.component_count();
    if mu != 1 {
        return Err(Error::NotAKnot(mu));
    }
    let pd = code_diagram(code)?;
    check_budget(&pd, budget)?;
    let v = seifert_matrix(code);
    let alexander = alexander(&v);
    let det = determinant_invariant(&alexander);
    Ok(SignedInvariants {
        jones: jones_from_pd(&pd),
        signature: signature(&v),
        double_cover: double_cover(&v, det),
        alexander,
    })
}

pub fn pd_invariants(pd: &PlanarDiagram, budget: usize) -> Result<SignedInvariants> {
    check_budget(pd, budget)?;
    let alexander = alexander_from_pd(pd);
    let det = determinant_invariant(&alexander);
    Ok(SignedInvariants {
        jones: jones_from_pd(pd),
        signature: signature_from_pd(pd),
        double_cover: double_cover_from_pd(pd, det),
        alexander,
    })
}

pub fn fingerprint(code: &BasketCode) -> Result<Fingerprint> {
    fingerprint_with_budget(code, DEFAULT_CROSSING_BUDGET)
}

pub fn fingerprint_with_budget(code: &BasketCode, budget: usize) -> Result<Fingerprint> {
    code_invariants(code, budget).map(|s| s.fingerprint())
}
