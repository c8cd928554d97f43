//! Cocompact triangle groups: signatures, fundamental domains with side
//! pairings, orbit enumeration, injectivity radius, extended-side walks,
//! the parity certificate and the length spectrum.

mod certificate;
mod domain;
mod hexagon;
mod incenter;
mod orbit;
mod quadrilateral;
mod sidewalk;
mod signature;
mod solve;
mod spectrum;
mod tiling;
mod triangle;
mod word;

pub use certificate::{chaotic_certificate, ChaosVerdict};
pub use domain::{Crossing, DomainKind, FundamentalDomain, Generator, Side, SidePairing};
pub use hexagon::build_hexagon;
pub use incenter::center_and_inradius;
pub use orbit::{
    budget_from_env, enumerate_orbit, injectivity_radius, orbit_ball, reduce_to_domain, reduce_with_word,
    OrbitOptions,
    OrbitRecord, PointIndex, DEFAULT_NODE_CAP, MAX_ORBIT_RADIUS, ORBIT_POINT_TOL,
};
pub use quadrilateral::build_quadrilateral;
pub use sidewalk::{extended_side_hits_interior, SideWalk, SideWalkOutcome};
pub use signature::Signature;
pub use spectrum::{length_spectrum, SpectrumEntry, MAX_SPECTRUM_WORD};
pub use tiling::{
    covering_check, disjointness_check, relation_residuals, CoveringReport, DisjointnessReport, RelationCheck,
};
pub use triangle::{build_triangle, ReflectionTriangle};
pub use word::Word;

/// Orbit bookkeeping record: witness word, element and image of the base point.
pub type GroupElementRecord = OrbitRecord;

use thiserror::Error;

use crate::geometry::GeometryError;

/// Builds the fundamental domain of the requested kind.
pub fn build_domain(sig: Signature, kind: DomainKind) -> Result<FundamentalDomain, FuchsianError> {
    match kind {
        DomainKind::Quadrilateral => build_quadrilateral(sig),
        DomainKind::Hexagonal => build_hexagon(sig),
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuchsianError {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("domain construction failed: {0}")]
    ConstructionFailed(String),
    #[error("no point is equidistant from all sides (residual {residual:e})")]
    NoIncenter { residual: f64 },
    #[error("enumeration exceeded the node cap of {cap}")]
    BudgetExceeded { cap: usize },
    #[error("requested radius {requested} exceeds the configured maximum {max}")]
    RadiusTooLarge { requested: f64, max: f64 },
    #[error("word length {requested} exceeds the cap {max}")]
    WordTooLong { requested: usize, max: usize },
    #[error("point is not in the interior of the fundamental domain")]
    NotInDomain,
    #[error("side index {0} out of range")]
    NoSuchSide(usize),
    #[error("bad word: {0}")]
    BadWord(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
