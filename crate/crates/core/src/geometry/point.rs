use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::tolerance::BOUNDARY_EPS;

/// A point of the open unit disc.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscPoint {
    pub re: f64,
    pub im: f64,
}

impl DiscPoint {
    pub const ORIGIN: DiscPoint = DiscPoint { re: 0.0, im: 0.0 };

    /// Checked constructor; rejects `|z| >= 1 - 1e-12`.
    pub fn new(re: f64, im: f64) -> Result<Self, GeometryError> {
        let r2 = re * re + im * im;
        if !(r2.is_finite() && r2.sqrt() < 1.0 - BOUNDARY_EPS) {
            return Err(GeometryError::OutsideDisc { re, im });
        }
        Ok(DiscPoint { re, im })
    }

    pub fn from_complex(z: Complex64) -> Result<Self, GeometryError> {
        Self::new(z.re, z.im)
    }

    /// Unchecked constructor for images of valid points under isometries,
    /// which may round onto the boundary far from the origin.
    pub(crate) fn from_complex_unchecked(z: Complex64) -> Self {
        DiscPoint { re: z.re, im: z.im }
    }

    /// Point at hyperbolic distance `r` from the origin in direction `angle`.
    pub fn polar(r: f64, angle: f64) -> Self {
        let rho = (0.5 * r).tanh();
        DiscPoint { re: rho * angle.cos(), im: rho * angle.sin() }
    }

    pub fn z(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn conj(self) -> Self {
        DiscPoint { re: self.re, im: -self.im }
    }

    /// Hyperbolic distance to another point.
    pub fn dist(self, other: DiscPoint) -> f64 {
        dist(self, other)
    }
}

impl fmt::Debug for DiscPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.12}, {:.12})", self.re, self.im)
    }
}

/// `d(z, w) = 2 artanh(|z - w| / |1 - conj(w) z|)`.
pub fn dist(z: DiscPoint, w: DiscPoint) -> f64 {
    let (z, w) = (z.z(), w.z());
    let num = (z - w).norm();
    if num == 0.0 {
        return 0.0;
    }
    let den = (Complex64::new(1.0, 0.0) - w.conj() * z).norm();
    let q = (num / den).min(1.0);
    if q > 0.5 {
        // artanh(q) = 0.5 ln((1+q)/(1-q)); 1-q from |1-w̄z|^2 - |z-w|^2 = (1-|z|^2)(1-|w|^2)
        let prod = (1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr());
        let one_minus = prod / (den * (den + num));
        ((1.0 + q) / one_minus).ln()
    } else {
        2.0 * q.atanh()
    }
}

/// Distance between two points given in Fermi coordinates `(t, s)` of a common geodesic.
pub fn fermi_distance(t1: f64, s1: f64, t2: f64, s2: f64) -> f64 {
    let c = s1.cosh() * s2.cosh() * (t1 - t2).cosh() - s1.sinh() * s2.sinh();
    c.max(1.0).acosh()
}
