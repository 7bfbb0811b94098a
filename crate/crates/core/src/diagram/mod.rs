//! Boundary diagrams of basket surfaces and their codes.

mod arc;
mod gauss;
mod planar;
mod svg;

pub use arc::{build_arc_diagram, ArcCrossing, ArcDiagram, ArcStrand};
pub use gauss::{dt_from_gauss, gauss_from_dt, DtCode, GaussCode, GaussVisit};
pub use planar::{gauss_from_braid, simplify_r_moves, Corner, PdCrossing, PlanarDiagram};
pub use svg::draw_svg;
