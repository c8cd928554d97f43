//! Double-double arithmetic for isometries that are composed many times.
//!
//! A point `γ(x)` at distance `d` from the origin, computed as a product of
//! generators in `f64`, carries an error of order `1e-16 · e^d`. Long walks
//! along a geodesic therefore need about twice the working precision. A
//! [`Dd`] is an unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`, good for
//! roughly 32 significant digits.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DiscPoint, Mobius};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

// Veltkamp splitter for 53-bit mantissas.
const SPLITTER: f64 = 134_217_729.0;

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd { hi: std::f64::consts::PI, lo: 1.224_646_799_147_353_2e-16 };

    pub const fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        // one Newton step from the f64 root doubles the precision
        let x = 1.0 / self.hi.sqrt();
        let ax = Dd::new(self.hi * x);
        let (p, e) = two_prod(ax.hi, ax.hi);
        let diff = (self - Dd { hi: p, lo: e }).hi;
        let (hi, lo) = two_sum(ax.hi, diff * x * 0.5);
        Dd { hi, lo }
    }

    /// `(sin x, cos x)` by Taylor series, accurate for `|x| ≤ π/2`.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let x2 = self.sqr();
        let (mut sin, mut cos) = (self, Dd::ONE);
        let (mut ts, mut tc) = (self, Dd::ONE);
        for k in 1..40 {
            let k = k as f64;
            ts = -(ts * x2) / Dd::new((2.0 * k) * (2.0 * k + 1.0));
            tc = -(tc * x2) / Dd::new((2.0 * k - 1.0) * (2.0 * k));
            sin = sin + ts;
            cos = cos + tc;
            if ts.hi.abs() < 1e-36 && tc.hi.abs() < 1e-36 {
                break;
            }
        }
        (sin, cos)
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * o.lo + self.lo * o.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::new(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::new(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: DdComplex = DdComplex { re: Dd::ONE, im: Dd::ZERO };

    pub fn new(re: Dd, im: Dd) -> Self {
        DdComplex { re, im }
    }

    pub fn real(re: Dd) -> Self {
        DdComplex { re, im: Dd::ZERO }
    }

    pub fn conj(self) -> Self {
        DdComplex { re: self.re, im: -self.im }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    pub fn norm(self) -> Dd {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, k: Dd) -> Self {
        DdComplex { re: self.re * k, im: self.im * k }
    }

    /// `e^{iθ}` from `(sin θ, cos θ)`.
    pub fn unit(sin: Dd, cos: Dd) -> Self {
        DdComplex { re: cos, im: sin }
    }

    /// The unit complex `w / |w|`.
    pub fn normalized(self) -> Self {
        self.scale(Dd::ONE / self.norm())
    }

    /// A square root of a unit complex (either sign; both act alike as rotations).
    pub fn unit_sqrt(self) -> Self {
        if self.re.hi >= 0.0 {
            (DdComplex::ONE + self).normalized()
        } else {
            let r = (DdComplex::ONE - self).normalized();
            DdComplex::new(-r.im, r.re)
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl From<Complex64> for DdComplex {
    fn from(z: Complex64) -> Self {
        DdComplex { re: Dd::new(z.re), im: Dd::new(z.im) }
    }
}

impl From<DiscPoint> for DdComplex {
    fn from(z: DiscPoint) -> Self {
        DdComplex::from(z.z())
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex { re: -self.re, im: -self.im }
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    fn add(self, o: DdComplex) -> DdComplex {
        DdComplex { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    fn sub(self, o: DdComplex) -> DdComplex {
        DdComplex { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    fn mul(self, o: DdComplex) -> DdComplex {
        DdComplex { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

impl Div for DdComplex {
    type Output = DdComplex;
    fn div(self, o: DdComplex) -> DdComplex {
        let n = o.norm_sqr();
        let p = self * o.conj();
        DdComplex { re: p.re / n, im: p.im / n }
    }
}

/// Fermi coordinates `(t, s)` of `w` relative to the real diameter, computed
/// without the cancellation that `f64` suffers near the ideal boundary.
pub fn real_axis_fermi(w: DdComplex) -> (f64, f64) {
    // Every quantity below is a sum of squares, so nothing cancels near the ideal boundary.
    let r2 = w.norm_sqr();
    let two = Dd::new(2.0);
    let im2 = w.im.sqr();
    let disc = ((Dd::ONE - r2).sqr() + Dd::new(4.0) * im2).sqrt();
    let below = (Dd::ONE - w.re).sqr() + im2 + disc;
    let above = (Dd::ONE + w.re).sqr() + im2 + disc;
    let ratio = above / below;
    let t = ratio.hi.ln() + ratio.lo / ratio.hi;
    let sinh = (two * w.im / (Dd::ONE - r2)).to_f64();
    (t, sinh.asinh())
}

/// `z ↦ (a z + conj(b)) / (b z + conj(a))` in double-double. The determinant is
/// kept near one but not forced to it; the action does not depend on the scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DdMobius {
    pub a: DdComplex,
    pub b: DdComplex,
}

impl DdMobius {
    pub const IDENTITY: DdMobius = DdMobius { a: DdComplex::ONE, b: DdComplex::ZERO };

    /// Rotation about the origin with `a = e^{iθ/2}` given as a unit complex.
    pub fn rotation_half(half: DdComplex) -> Self {
        DdMobius { a: half, b: DdComplex::ZERO }
    }

    /// Translation along the real diameter taking `0` to the real point `f`.
    pub fn translation_to(f: Dd) -> Self {
        let s = Dd::ONE / (Dd::ONE - f.sqr()).sqrt();
        DdMobius { a: DdComplex::real(s), b: DdComplex::real(f * s) }
    }

    /// The transvection sending the origin to `p`.
    pub fn origin_to(p: DdComplex) -> Self {
        let s = Dd::ONE / (Dd::ONE - p.norm_sqr()).sqrt();
        DdMobius { a: DdComplex::real(s), b: p.conj().scale(s) }
    }

    /// Rotation about `p` whose derivative at `p` is `half²`.
    pub fn rotation_about(p: DdComplex, half: DdComplex) -> Self {
        let t = DdMobius::origin_to(p);
        t.compose(&DdMobius::rotation_half(half)).compose(&t.inverse())
    }

    /// Frame of the geodesic from `p` through `q`, based at `p`.
    pub fn frame_through(p: DdComplex, q: DdComplex) -> Self {
        let t = DdMobius::origin_to(p);
        let dir = t.inverse().apply(q).normalized();
        t.compose(&DdMobius::rotation_half(dir.unit_sqrt()))
    }

    /// Frame of the geodesic from the ideal point `m` to `p`, based at its point nearest the origin.
    pub fn frame_between(m: DdComplex, p: DdComplex) -> Self {
        let (m, p) = (m.normalized(), p.normalized());
        let mid = m + p;
        // endpoints at ±θ about the bisector: nearest point at (1 - sin θ) / cos θ
        let cos = mid.norm() * Dd::new(0.5);
        let base = if cos.hi.abs() < 1e-15 {
            DdComplex::ZERO
        } else {
            let sin = (p - m).norm() * Dd::new(0.5);
            mid.normalized().scale((Dd::ONE - sin) / cos)
        };
        let t = DdMobius::origin_to(base);
        let dir = t.inverse().apply(p).normalized();
        t.compose(&DdMobius::rotation_half(dir.unit_sqrt()))
    }

    pub fn apply(&self, z: DdComplex) -> DdComplex {
        (self.a * z + self.b.conj()) / (self.b * z + self.a.conj())
    }

    pub fn compose(&self, o: &DdMobius) -> DdMobius {
        let (a1, b1, a2, b2) = (self.a, self.b, o.a, o.b);
        DdMobius { a: a1 * a2 + b1.conj() * b2, b: b1 * a2 + a1.conj() * b2 }
    }

    pub fn inverse(&self) -> DdMobius {
        DdMobius { a: self.a.conj(), b: -self.b }
    }

    pub fn det(&self) -> Dd {
        self.a.norm_sqr() - self.b.norm_sqr()
    }

    /// Rescaled so that the determinant is one again.
    pub fn normalized(&self) -> DdMobius {
        let s = Dd::ONE / self.det().sqrt();
        DdMobius { a: self.a.scale(s), b: self.b.scale(s) }
    }

    /// Fixed points `(repelling, attracting)` of a hyperbolic element, on the unit circle.
    pub fn fixed_points(&self) -> Option<(DdComplex, DdComplex)> {
        let g = self.normalized();
        let disc = g.b.norm_sqr() - g.a.im.sqr();
        if disc.hi <= 0.0 || g.b.norm_sqr().hi == 0.0 {
            return None;
        }
        let r = disc.sqrt();
        let ia = DdComplex::new(Dd::ZERO, g.a.im);
        let plus = (ia + DdComplex::real(r)) / g.b;
        let minus = (ia - DdComplex::real(r)) / g.b;
        // the attracting point has |b z + conj(a)| > 1
        let gain = |z: DdComplex| (g.b * z + g.a.conj()).norm_sqr().hi;
        if gain(plus) > gain(minus) {
            Some((minus.normalized(), plus.normalized()))
        } else {
            Some((plus.normalized(), minus.normalized()))
        }
    }

    /// Nearest `f64` element.
    pub fn to_mobius(&self) -> Mobius {
        let g = self.normalized();
        Mobius::from_normalized(g.a.to_c64(), g.b.to_c64())
    }
}

impl From<Mobius> for DdMobius {
    fn from(g: Mobius) -> Self {
        DdMobius { a: g.a.into(), b: g.b.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        (a - b).abs().hi <= tol
    }

    #[test]
    fn arithmetic_beyond_f64() {
        let third = Dd::ONE / Dd::new(3.0);
        assert!(close(third * Dd::new(3.0), Dd::ONE, 1e-31));
        let r2 = Dd::new(2.0).sqrt();
        assert!(close(r2 * r2, Dd::new(2.0), 1e-31));
        // 1 + 2^-80 survives
        let tiny = Dd::new(2f64.powi(-80));
        assert_eq!((Dd::ONE + tiny - Dd::ONE).hi, 2f64.powi(-80));
    }

    #[test]
    fn sin_cos_identities() {
        for x in [0.1, 0.5, std::f64::consts::FRAC_PI_3, 1.5] {
            let (s, c) = Dd::new(x).sin_cos();
            assert!(close(s.sqr() + c.sqr(), Dd::ONE, 1e-31));
            assert!((s.to_f64() - x.sin()).abs() < 1e-15);
        }
        let (s, c) = (Dd::PI / Dd::new(6.0)).sin_cos();
        assert!(close(s, Dd::new(0.5), 1e-31));
        assert!(close(c.sqr(), Dd::new(0.75), 1e-31));
    }

    #[test]
    fn rotation_order_exact() {
        let (s, c) = (Dd::PI / Dd::new(7.0)).sin_cos();
        let p = DdComplex::new(Dd::new(0.3), Dd::new(-0.2));
        let g = DdMobius::rotation_about(p, DdComplex::unit(s, c));
        let mut acc = DdMobius::IDENTITY;
        for _ in 0..7 {
            acc = acc.compose(&g);
        }
        let acc = acc.normalized();
        // g^7 is -I in SU(1,1), the identity in PSU(1,1)
        assert!(acc.b.norm().hi < 1e-30);
        assert!((acc.a.re.abs() - Dd::ONE).abs().hi < 1e-30);
    }

    #[test]
    fn unit_sqrt_both_half_planes() {
        for th in [0.3f64, 2.0, 3.1, -3.1, -1.0] {
            let u = DdComplex::unit(Dd::new(th.sin()), Dd::new(th.cos())).normalized();
            let r = u.unit_sqrt();
            assert!((r * r - u).norm().hi < 1e-30);
        }
    }

    #[test]
    fn axis_frames_agree() {
        let g = DdMobius::origin_to(DdComplex::new(Dd::new(0.1), Dd::new(0.2)))
            .compose(&DdMobius::translation_to(Dd::new(0.5)))
            .compose(&DdMobius::origin_to(DdComplex::new(Dd::new(0.1), Dd::new(0.2))).inverse());
        let (rep, att) = g.fixed_points().unwrap();
        let k = DdMobius::frame_between(rep, att);
        // the pulled-back element preserves the real diameter
        let h = k.inverse().compose(&g).compose(&k).normalized();
        assert!(h.a.im.abs().hi < 1e-28 && h.b.im.abs().hi < 1e-28);
        assert!(h.b.re.hi > 0.0);
    }
}
