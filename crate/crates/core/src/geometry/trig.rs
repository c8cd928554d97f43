use num_complex::Complex64;

use super::{dist, DiscPoint, Geodesic};

/// Argument of the Euclidean tangent at `from` of the geodesic ray towards `to`.
/// The disc model is conformal, so differences of these are hyperbolic angles.
pub fn ray_direction(from: DiscPoint, to: DiscPoint) -> f64 {
    let (p, q) = (from.z(), to.z());
    ((q - p) / (Complex64::new(1.0, 0.0) - p.conj() * q)).arg()
}

/// Counterclockwise angle at `vertex` from the ray towards `first` to the ray towards `second`,
/// in `[0, 2π)`.
pub fn angle_between_rays(vertex: DiscPoint, first: DiscPoint, second: DiscPoint) -> f64 {
    let d = ray_direction(vertex, second) - ray_direction(vertex, first);
    d.rem_euclid(std::f64::consts::TAU)
}

/// Length of the side opposite the angle `c` of a hyperbolic triangle with angles `a, b, c`:
/// `cosh(side) = (cos a cos b + cos c) / (sin a sin b)`.
pub fn law_of_cosines_side(a: f64, b: f64, c: f64) -> f64 {
    ((a.cos() * b.cos() + c.cos()) / (a.sin() * b.sin())).acosh()
}

/// Hyperbolic distance from `p` to the geodesic segment `[a, b]`.
pub fn segment_distance(p: DiscPoint, a: DiscPoint, b: DiscPoint) -> f64 {
    let len = dist(a, b);
    if len < 1e-14 {
        return dist(p, a);
    }
    let k = Geodesic::through(a, b).expect("non-degenerate segment");
    let (t, s) = k.fermi(p);
    if t < 0.0 {
        dist(p, a)
    } else if t > len {
        dist(p, b)
    } else {
        s.abs()
    }
}
