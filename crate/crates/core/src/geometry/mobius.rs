use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DiscPoint, GeometryError};
use crate::tolerance::EQ_EPS;

/// Orientation-preserving isometry `z ↦ (a z + conj(b)) / (b z + conj(a))`
/// with `|a|^2 - |b|^2 = 1`, stored as the PSL representative with `Re a > 0`
/// (ties broken by `Im a`, then by `b`).
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mobius {
    pub a: Complex64,
    pub b: Complex64,
}

/// Conjugacy type of an element, decided by `|trace| = |a + conj(a)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

// Above this size renormalising |a|^2 - |b|^2 loses more than it gains.
const RENORM_LIMIT: f64 = 1e3;

impl Mobius {
    pub const IDENTITY: Mobius = Mobius {
        a: Complex64 { re: 1.0, im: 0.0 },
        b: Complex64 { re: 0.0, im: 0.0 },
    };

    /// Builds an element from raw coefficients, rescaling so that `|a|^2 - |b|^2 = 1`.
    pub fn new(a: Complex64, b: Complex64) -> Result<Self, GeometryError> {
        let det = a.norm_sqr() - b.norm_sqr();
        if !(det.is_finite() && det > 0.0) {
            return Err(GeometryError::DegenerateInput("|a|^2 - |b|^2 must be positive"));
        }
        let s = det.sqrt();
        Ok(Mobius { a: a / s, b: b / s }.canonical())
    }

    /// Takes coefficients already normalised elsewhere; only the sign is fixed.
    pub(crate) fn from_normalized(a: Complex64, b: Complex64) -> Self {
        Mobius { a, b }.canonical()
    }

    fn canonical(self) -> Self {
        let Mobius { a, b } = self;
        let flip = if a.re != 0.0 {
            a.re < 0.0
        } else if a.im != 0.0 {
            a.im < 0.0
        } else if b.re != 0.0 {
            b.re < 0.0
        } else {
            b.im < 0.0
        };
        if flip {
            Mobius { a: -a, b: -b }
        } else {
            self
        }
    }

    fn renormalized(self) -> Self {
        let scale = self.a.norm();
        if scale < RENORM_LIMIT {
            let det = self.a.norm_sqr() - self.b.norm_sqr();
            if det > 0.0 {
                let s = det.sqrt();
                return Mobius { a: self.a / s, b: self.b / s }.canonical();
            }
        }
        self.canonical()
    }

    /// Rotation by `theta` about the origin: `a = e^{iθ/2}`, `b = 0`.
    pub fn rotation(theta: f64) -> Self {
        Mobius { a: Complex64::from_polar(1.0, 0.5 * theta), b: Complex64::new(0.0, 0.0) }
            .canonical()
    }

    /// Hyperbolic translation along the real diameter by signed distance `t`.
    pub fn translation_real(t: f64) -> Self {
        let h = 0.5 * t;
        Mobius { a: Complex64::new(h.cosh(), 0.0), b: Complex64::new(h.sinh(), 0.0) }.canonical()
    }

    /// The transvection sending the origin to `p` along the diameter through `p`.
    pub fn origin_to(p: DiscPoint) -> Self {
        let s = 1.0 / (1.0 - p.norm_sqr()).sqrt();
        Mobius { a: Complex64::new(s, 0.0), b: p.z().conj() * s }
    }

    /// Rotation by `theta` about `p`. The derivative at `p` has argument `theta`.
    pub fn rotation_about(p: DiscPoint, theta: f64) -> Self {
        let t = Mobius::origin_to(p);
        t.compose(&Mobius::rotation(theta)).compose(&t.inverse())
    }

    pub fn apply(&self, z: DiscPoint) -> DiscPoint {
        DiscPoint::from_complex_unchecked(self.apply_complex(z.z()))
    }

    /// Action on the Riemann sphere minus the pole; used on the unit circle for ideal points.
    pub fn apply_complex(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b.conj()) / (self.b * z + self.a.conj())
    }

    /// Image of an ideal point, renormalised onto the unit circle.
    pub fn apply_ideal(&self, xi: Complex64) -> Complex64 {
        let w = self.apply_complex(xi);
        w / w.norm()
    }

    /// Complex derivative at `z`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let den = self.b * z + self.a.conj();
        let det = self.a.norm_sqr() - self.b.norm_sqr();
        Complex64::new(det, 0.0) / (den * den)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        let (a1, b1, a2, b2) = (self.a, self.b, other.a, other.b);
        Mobius { a: a1 * a2 + b1.conj() * b2, b: b1 * a2 + a1.conj() * b2 }.renormalized()
    }

    pub fn inverse(&self) -> Mobius {
        Mobius { a: self.a.conj(), b: -self.b }.canonical()
    }

    pub fn pow(&self, n: i64) -> Mobius {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut out = Mobius::IDENTITY;
        for _ in 0..n.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// `a + conj(a)`; sign is that of the stored representative.
    pub fn trace(&self) -> f64 {
        2.0 * self.a.re
    }

    /// Equality in PSL(2,R): entries agree up to a global sign within `tol`.
    pub fn approx_eq(&self, other: &Mobius, tol: f64) -> bool {
        let close = |s: f64| {
            (self.a - other.a * s).norm() <= tol && (self.b - other.b * s).norm() <= tol
        };
        close(1.0) || close(-1.0)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&Mobius::IDENTITY, tol)
    }

    pub fn classify(&self) -> Classification {
        self.classify_with(EQ_EPS)
    }

    pub fn classify_with(&self, tol: f64) -> Classification {
        if self.is_identity(tol) {
            return Classification::Identity;
        }
        let tr = self.trace().abs();
        if tr < 2.0 - tol {
            Classification::Elliptic
        } else if tr <= 2.0 + tol {
            Classification::Parabolic
        } else {
            Classification::Hyperbolic
        }
    }

    /// `2 log λ = 2 arccosh(|trace| / 2)` for hyperbolic elements.
    pub fn translation_length(&self) -> Result<f64, GeometryError> {
        match self.classify() {
            Classification::Hyperbolic => Ok(2.0 * (0.5 * self.trace().abs()).acosh()),
            _ => Err(GeometryError::NotHyperbolic { trace: self.trace() }),
        }
    }

    /// Ideal fixed points `(repelling, attracting)` of a hyperbolic element.
    pub fn fixed_points(&self) -> Result<(Complex64, Complex64), GeometryError> {
        if self.classify() != Classification::Hyperbolic {
            return Err(GeometryError::NotHyperbolic { trace: self.trace() });
        }
        let Mobius { a, b } = *self;
        let sign = a.re.signum();
        let root = (a.re * a.re - 1.0).sqrt();
        let i_im = Complex64::new(0.0, a.im);
        let attracting = (i_im + root * sign) / b;
        let repelling = (i_im - root * sign) / b;
        Ok((repelling / repelling.norm(), attracting / attracting.norm()))
    }
}

impl Default for Mobius {
    fn default() -> Self {
        Mobius::IDENTITY
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Mobius(a = {:.10}{:+.10}i, b = {:.10}{:+.10}i)",
            self.a.re, self.a.im, self.b.re, self.b.im
        )
    }
}
