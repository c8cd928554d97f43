//! Poincaré disc geometry: points, orientation-preserving isometries,
//! unit-speed geodesics and the projections used by the cut-and-project engine.
//!
//! All types are plain immutable values. Distances use the metric
//! `ds = 2|dz| / (1 - |z|^2)`.

mod geodesic;
mod isometry;
mod mobius;
mod point;
pub mod precise;
mod trig;

pub use geodesic::{Geodesic, Projection};
pub use isometry::{reflect_across, Isometry};
pub use mobius::{Classification, Mobius};
pub use point::{dist, fermi_distance, DiscPoint};
pub use trig::{angle_between_rays, law_of_cosines_side, ray_direction, segment_distance};

use thiserror::Error;

/// Failures of the geometric primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point ({re}, {im}) is not strictly inside the unit disc")]
    OutsideDisc { re: f64, im: f64 },
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("element is not hyperbolic (|trace| = {trace})")]
    NotHyperbolic { trace: f64 },
    #[error("base point does not lie on the geodesic (residual {residual:e})")]
    BaseOffGeodesic { residual: f64 },
}

/// Axis of a hyperbolic element: the invariant geodesic, from the repelling to
/// the attracting fixed point, based at its point nearest the origin.
pub fn axis(g: &Mobius) -> Result<Geodesic, GeometryError> {
    Geodesic::axis(g)
}
