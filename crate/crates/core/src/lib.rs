//! Flat plumbing basket codes for knots.

pub mod basket;
pub mod braid;
pub mod census;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod reference;

pub use basket::{parse_code, BasketCode};
pub use error::{Error, Result};
pub use poly::LaurentPoly;
