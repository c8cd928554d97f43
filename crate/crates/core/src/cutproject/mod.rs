//! The cut-and-project engine: one-sided tube membership, windows of the
//! projected orbit, Delone and tile-length diagnostics, `N_r` comparisons,
//! periodic references along closed geodesics, and the search for `ρ`.

mod delone;
mod enumerate;
mod periodic;
mod rho;
mod sampler;
mod set;
mod shadow;
mod tube;

pub use delone::{delone_stats, nr_test, tile_lengths, DeloneReport};
pub use enumerate::{tube_orbit, TubeQuery, TubeRecord};
pub use periodic::{periodic_reference, periodic_reference_word, shift_mismatch, PeriodicReference};
pub use rho::{find_rho, rho_ladder, RhoReport, RhoTrial, SampleEvidence, SAMPLE_HALF_WINDOW, SIDE_WALK_DEPTH};
pub use sampler::geodesic_sampler;
pub use set::{cut_project, merge_sorted, tube_records, CutProjectMeta, CutProjectSet, MERGE_TOL, PRECISION_HORIZON};
pub use shadow::{shadow_reference, Shadow};
pub use tube::{classify_signed, tube_membership, Membership, TubeSpec, TANGENCY_TOL};

use thiserror::Error;

use crate::fuchsian::FuchsianError;
use crate::geometry::GeometryError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CutProjectError {
    #[error("tube width must be positive and finite, got {0}")]
    InvalidRho(f64),
    #[error("window [{0}, {1}] must be finite with t_min < t_max")]
    InvalidWindow(f64, f64),
    #[error("window reaches |t| = {reach}, beyond the precision horizon {horizon}")]
    BeyondHorizon { reach: f64, horizon: f64 },
    #[error("enumeration band {available} does not reach the tube boundary (needs at least {required})")]
    InsufficientDepth { required: f64, available: f64 },
    #[error("need at least two points, got {count}")]
    TooFewPoints { count: usize },
    #[error("extended side {side} stays on tile boundaries, so no tube width below the inradius works")]
    SideExtensionObstruction { side: usize },
    #[error("no tube width on the ladder was hit by all {samples} sample geodesics (inconclusive)")]
    NoCandidateFound { samples: usize },
    #[error(transparent)]
    Fuchsian(#[from] FuchsianError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
