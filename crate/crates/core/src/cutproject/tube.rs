use serde::{Deserialize, Serialize};

use super::CutProjectError;
use crate::geometry::{DiscPoint, Geodesic};

/// Band half-width used for tangency at `±ρ`.
pub const TANGENCY_TOL: f64 = 1e-9;

/// The geodesic `k` and the tube width `ρ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeSpec {
    pub geodesic: Geodesic,
    pub rho: f64,
}

impl TubeSpec {
    pub fn new(geodesic: Geodesic, rho: f64) -> Result<Self, CutProjectError> {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(CutProjectError::InvalidRho(rho));
        }
        Ok(TubeSpec { geodesic, rho })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Membership {
    Inside,
    PositiveBoundary,
    Outside,
}

/// Classifies a signed distance against the one-sided closed tube: the open tube
/// plus its boundary on the positive (left) side.
pub fn classify_signed(s: f64, rho: f64, tol: f64) -> Membership {
    if s.abs() < rho - tol {
        Membership::Inside
    } else if s > 0.0 && (s - rho).abs() <= tol {
        Membership::PositiveBoundary
    } else {
        Membership::Outside
    }
}

pub fn tube_membership(tube: &TubeSpec, z: DiscPoint) -> Membership {
    classify_signed(tube.geodesic.signed_distance(z), tube.rho, TANGENCY_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_sided_closure() {
        let k = Geodesic::real_axis();
        let tube = TubeSpec::new(k, 0.5).unwrap();
        assert_eq!(tube_membership(&tube, DiscPoint::ORIGIN), Membership::Inside);
        assert_eq!(tube_membership(&tube, k.fermi_point(0.3, 0.5)), Membership::PositiveBoundary);
        assert_eq!(tube_membership(&tube, k.fermi_point(0.3, -0.5)), Membership::Outside);
        assert_eq!(tube_membership(&tube, k.fermi_point(0.0, 1.0)), Membership::Outside);
        assert!(TubeSpec::new(k, 0.0).is_err());
    }
}
