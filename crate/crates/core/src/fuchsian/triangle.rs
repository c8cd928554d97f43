use std::f64::consts::PI;

use super::Signature;
use crate::geometry::precise::{Dd, DdComplex};
use crate::geometry::{law_of_cosines_side, DiscPoint};

/// Triangle with angles `π/m1, π/m2, π/m3` at `vertices[0..3]`.
///
/// `vertices[0]` is the origin, `vertices[1]` lies on the positive real axis and
/// `vertices[2]` in the upper half of the disc. `side_lengths[i]` is the side opposite `vertices[i]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionTriangle {
    pub vertices: [DiscPoint; 3],
    pub side_lengths: [f64; 3],
    pub angles: [f64; 3],
}

impl ReflectionTriangle {
    pub fn area(&self) -> f64 {
        PI - self.angles.iter().sum::<f64>()
    }
}

/// `(sin(π/m), cos(π/m))` in double-double.
pub(crate) fn fine_angle(m: u32) -> (Dd, Dd) {
    (Dd::PI / Dd::new(m as f64)).sin_cos()
}

/// `tanh(ℓ/2)` for the side `ℓ` between the angles `a`, `b`, opposite `c`, each given as `(sin, cos)`.
fn fine_half_tanh(a: (Dd, Dd), b: (Dd, Dd), c: (Dd, Dd)) -> Dd {
    let cosh = (a.1 * b.1 + c.1) / (a.0 * b.0);
    ((cosh - Dd::ONE) / (cosh + Dd::ONE)).sqrt()
}

/// The triangle's vertices in double-double, placed as in [`build_triangle`].
pub(crate) fn fine_triangle(sig: Signature) -> [DdComplex; 3] {
    let [a, b, c] = sig.orders().map(fine_angle);
    let r3 = fine_half_tanh(a, b, c);
    let r2 = fine_half_tanh(a, c, b);
    [DdComplex::ZERO, DdComplex::real(r3), DdComplex::unit(a.0, a.1).scale(r2)]
}

pub fn build_triangle(sig: Signature) -> ReflectionTriangle {
    let [a, b, c] = sig.orders().map(|m| PI / m as f64);
    let opp1 = law_of_cosines_side(b, c, a);
    let opp2 = law_of_cosines_side(a, c, b);
    let opp3 = law_of_cosines_side(a, b, c);
    ReflectionTriangle {
        vertices: fine_triangle(sig).map(|v| DiscPoint::from_complex_unchecked(v.to_c64())),
        side_lengths: [opp1, opp2, opp3],
        angles: [a, b, c],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{angle_between_rays, dist};

    #[test]
    fn six_six_three_sides() {
        let t = build_triangle(Signature::new(6, 6, 3).unwrap());
        let cosh: Vec<f64> = t.side_lengths.iter().map(|l| l.cosh()).collect();
        assert!((cosh[0] - 3.0).abs() < 1e-10);
        assert!((cosh[1] - 3.0).abs() < 1e-10);
        assert!((cosh[2] - 5.0).abs() < 1e-10);
        assert!((t.area() - PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn vertices_realise_lengths_and_angles() {
        for sig in [(3, 3, 4), (5, 5, 5), (3, 4, 4), (7, 3, 3)] {
            let t = build_triangle(Signature::new(sig.0, sig.1, sig.2).unwrap());
            let [p1, p2, p3] = t.vertices;
            assert!((dist(p2, p3) - t.side_lengths[0]).abs() < 1e-9);
            assert!((dist(p1, p3) - t.side_lengths[1]).abs() < 1e-9);
            assert!((dist(p1, p2) - t.side_lengths[2]).abs() < 1e-9);
            assert!((angle_between_rays(p1, p2, p3) - t.angles[0]).abs() < 1e-9);
            assert!((angle_between_rays(p2, p3, p1) - t.angles[1]).abs() < 1e-9);
            assert!((angle_between_rays(p3, p1, p2) - t.angles[2]).abs() < 1e-9);
        }
    }
}
