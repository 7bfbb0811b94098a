//! Knot invariants: Alexander polynomial, determinant, signature, Kauffman
//! bracket and Jones polynomial, and the identification fingerprint.

mod alexander;
mod bracket;
mod fingerprint;
mod jones;
mod matrix;
mod signature;

pub use alexander::{alexander, alexander_from_pd, determinant_invariant, normalize_alexander};
pub use bracket::{kauffman_bracket, kauffman_bracket_naive};
pub use fingerprint::{
    code_diagram, code_invariants, fingerprint, fingerprint_with_budget, pd_invariants,
    Fingerprint, SignedInvariants, DEFAULT_CROSSING_BUDGET,
};
pub use jones::{jones_from_pd, mirror_jones, q_to_t};
pub use matrix::{poly_determinant, symmetric_signature, torsion_divisors};
pub use signature::{
    double_cover, double_cover_from_pd, face_colours, signature, signature_from_pd,
};
