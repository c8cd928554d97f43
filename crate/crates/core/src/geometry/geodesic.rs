use num_complex::Complex64;

use super::precise::{DdComplex, DdMobius};
use super::{DiscPoint, GeometryError, Mobius};
use crate::tolerance::EQ_EPS;

/// Oriented unit-speed geodesic, given by its ideal endpoints and the point `κ(0)`.
///
/// Internally the geodesic carries a frame: the isometry taking the real
/// diameter (oriented `-1 → +1`, based at `0`) onto it. Every query is
/// answered by pulling back through the frame, so diameters need no
/// special treatment here. A double-double copy of the frame is kept for
/// enumerations that walk far along the geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    pub xi_minus: Complex64,
    pub xi_plus: Complex64,
    pub base: DiscPoint,
    frame: Mobius,
    fine: DdMobius,
}

/// Result of the orthogonal projection onto a geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projection {
    pub t: f64,
    pub foot: DiscPoint,
}

impl Geodesic {
    /// Builds the geodesic from `xi_minus` to `xi_plus` with `κ(0) = base`.
    pub fn new(xi_minus: Complex64, xi_plus: Complex64, base: DiscPoint) -> Result<Self, GeometryError> {
        if (xi_minus - xi_plus).norm() < 1e-12 {
            return Err(GeometryError::DegenerateInput("geodesic endpoints coincide"));
        }
        let xi_minus = xi_minus / xi_minus.norm();
        let xi_plus = xi_plus / xi_plus.norm();
        let to_base = Mobius::origin_to(base);
        let back = to_base.inverse();
        let p = back.apply_ideal(xi_plus);
        let m = back.apply_ideal(xi_minus);
        let residual = (p + m).norm();
        if residual > EQ_EPS {
            return Err(GeometryError::BaseOffGeodesic { residual });
        }
        let frame = to_base.compose(&Mobius::rotation(p.arg()));
        Ok(Geodesic { xi_minus, xi_plus, base, frame, fine: frame.into() })
    }

    /// The geodesic `F(real diameter)` with `κ(t) = F(tanh(t/2))`.
    pub fn from_frame(frame: Mobius) -> Self {
        Geodesic::with_frames(frame, frame.into())
    }

    /// As [`Geodesic::from_frame`], from a double-double frame.
    pub fn from_fine_frame(fine: DdMobius) -> Self {
        Geodesic::with_frames(fine.to_mobius(), fine)
    }

    fn with_frames(frame: Mobius, fine: DdMobius) -> Self {
        let one = Complex64::new(1.0, 0.0);
        Geodesic {
            xi_minus: frame.apply_ideal(-one),
            xi_plus: frame.apply_ideal(one),
            base: frame.apply(DiscPoint::ORIGIN),
            frame,
            fine,
        }
    }

    /// The real diameter, oriented `-1 → +1`, based at `0`.
    pub fn real_axis() -> Self {
        Geodesic::from_frame(Mobius::IDENTITY)
    }

    /// Geodesic through `z` and `w`, oriented from `z` to `w`, with `κ(0) = z`.
    pub fn through(z: DiscPoint, w: DiscPoint) -> Result<Self, GeometryError> {
        if super::dist(z, w) < EQ_EPS {
            return Err(GeometryError::DegenerateInput("geodesic through coincident points"));
        }
        let t = Mobius::origin_to(z);
        let w0 = t.inverse().apply(w).z();
        Ok(Geodesic::from_frame(t.compose(&Mobius::rotation(w0.arg()))))
    }

    /// Geodesic with `κ(0) = p` and `κ'(0)` pointing along the unit complex `direction`.
    pub fn from_point_direction(p: DiscPoint, direction: Complex64) -> Result<Self, GeometryError> {
        if direction.norm() == 0.0 || !direction.norm().is_finite() {
            return Err(GeometryError::DegenerateInput("zero direction"));
        }
        Ok(Geodesic::from_frame(Mobius::origin_to(p).compose(&Mobius::rotation(direction.arg()))))
    }

    pub fn frame(&self) -> Mobius {
        self.frame
    }

    pub fn fine_frame(&self) -> DdMobius {
        self.fine
    }

    pub fn point(&self, t: f64) -> DiscPoint {
        self.frame.apply(DiscPoint { re: (0.5 * t).tanh(), im: 0.0 })
    }

    /// Euclidean unit tangent direction at `κ(t)`.
    pub fn tangent(&self, t: f64) -> Complex64 {
        let d = self.frame.derivative(Complex64::new((0.5 * t).tanh(), 0.0));
        d / d.norm()
    }

    /// Fermi coordinates `(t, s)`: projection parameter and signed distance,
    /// positive on the left of the orientation.
    pub fn fermi(&self, z: DiscPoint) -> (f64, f64) {
        let w = self.frame.inverse().apply_complex(z.z());
        let r2 = w.norm_sqr();
        let s = (2.0 * w.im / (1.0 - r2)).asinh();
        let im2 = w.im * w.im;
        let disc = ((1.0 - r2) * (1.0 - r2) + 4.0 * im2).sqrt();
        let above = (1.0 + w.re) * (1.0 + w.re) + im2 + disc;
        let below = (1.0 - w.re) * (1.0 - w.re) + im2 + disc;
        ((above / below).ln(), s)
    }

    /// [`Geodesic::fermi`] for a double-double point, through the double-double frame.
    pub fn fermi_fine(&self, z: DdComplex) -> (f64, f64) {
        super::precise::real_axis_fermi(self.fine.inverse().apply(z))
    }

    pub fn project(&self, z: DiscPoint) -> Projection {
        let (t, _) = self.fermi(z);
        Projection { t, foot: self.point(t) }
    }

    pub fn signed_distance(&self, z: DiscPoint) -> f64 {
        self.fermi(z).1
    }

    /// Point with Fermi coordinates `(t, s)`.
    pub fn fermi_point(&self, t: f64, s: f64) -> DiscPoint {
        let foot = Mobius::translation_real(t);
        let up = Mobius::rotation(std::f64::consts::FRAC_PI_2);
        let off = DiscPoint { re: (0.5 * s).tanh(), im: 0.0 };
        self.frame.compose(&foot).compose(&up).apply(off)
    }

    /// Geodesic from `xi_minus` to `xi_plus` based at its point nearest the origin.
    pub fn between(xi_minus: Complex64, xi_plus: Complex64) -> Result<Self, GeometryError> {
        if (xi_minus - xi_plus).norm() < 1e-12 {
            return Err(GeometryError::DegenerateInput("geodesic endpoints coincide"));
        }
        Ok(Geodesic::from_fine_frame(DdMobius::frame_between(xi_minus.into(), xi_plus.into())))
    }

    /// Axis of a hyperbolic element, oriented from the repelling to the attracting fixed point.
    pub fn axis(g: &Mobius) -> Result<Self, GeometryError> {
        g.fixed_points()?;
        Geodesic::axis_fine(&DdMobius::from(*g))
    }

    /// [`Geodesic::axis`] for a double-double element.
    pub fn axis_fine(g: &DdMobius) -> Result<Self, GeometryError> {
        let (rep, att) = g.fixed_points().ok_or(GeometryError::NotHyperbolic { trace: g.to_mobius().trace() })?;
        Ok(Geodesic::from_fine_frame(DdMobius::frame_between(rep, att)))
    }

    /// Same carrier, opposite orientation, same base point.
    pub fn reversed(&self) -> Self {
        let half_turn = DdMobius::rotation_half(DdComplex::new(0.0.into(), 1.0.into()));
        Geodesic::from_fine_frame(self.fine.compose(&half_turn))
    }

    /// Same oriented carrier with the parameter origin moved to `κ(shift)`.
    pub fn rebased(&self, shift: f64) -> Self {
        Geodesic::from_fine_frame(self.fine.compose(&Mobius::translation_real(shift).into()))
    }

    /// Image under an isometry, with parametrisation `t ↦ g(κ(t))`.
    pub fn image(&self, g: &Mobius) -> Self {
        Geodesic::from_fine_frame(DdMobius::from(*g).compose(&self.fine))
    }

    /// Is `z` on the geodesic, within `tol` in hyperbolic distance?
    pub fn contains(&self, z: DiscPoint, tol: f64) -> bool {
        self.signed_distance(z).abs() <= tol
    }

    /// Whether the two endpoints are antipodal, i.e. the carrier is a diameter.
    pub fn is_diameter(&self) -> bool {
        (self.xi_minus + self.xi_plus).norm() < 1e-12
    }

    /// Euclidean circle carrying the geodesic, `None` for diameters.
    pub fn carrier_circle(&self) -> Option<(Complex64, f64)> {
        if self.is_diameter() {
            return None;
        }
        let mid = self.xi_minus + self.xi_plus;
        // Circle orthogonal to the unit circle through both endpoints: centre on the bisector
        // at distance sec(half-angle).
        let half = 0.5 * (self.xi_plus / self.xi_minus).arg().abs();
        let center = mid / mid.norm() / half.cos();
        Some((center, half.tan()))
    }
}
