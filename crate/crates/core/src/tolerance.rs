//! Numeric tolerances shared by the geometry and group code.

use serde::{Deserialize, Serialize};

/// Points closer than this to the unit circle are rejected by [`crate::DiscPoint::new`].
pub const BOUNDARY_EPS: f64 = 1e-12;

/// Default tolerance for point and matrix equality.
pub const EQ_EPS: f64 = 1e-9;

/// Tolerances exposed to run configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Equality of points and matrices.
    pub equality: f64,
    /// Boundary exclusion for disc points.
    pub boundary: f64,
    /// Hyperbolic distance under which two orbit points are the same point.
    pub orbit_point: f64,
    /// Width of the band around `rho` treated as tangency.
    pub tangency: f64,
    /// Two projected parameters closer than this collapse into one.
    pub projection_merge: f64,
    /// Gap clustering tolerance for tile lengths.
    pub cluster: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            equality: EQ_EPS,
            boundary: BOUNDARY_EPS,
            orbit_point: 1e-7,
            tangency: 1e-9,
            projection_merge: 1e-9,
            cluster: 1e-7,
        }
    }
}
