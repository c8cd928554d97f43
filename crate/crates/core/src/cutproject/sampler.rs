use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fuchsian::FundamentalDomain;
use crate::geometry::Geodesic;

/// Seeded geodesic through the domain interior: two independent uniform ideal
/// endpoints, redrawn until the domain has vertices strictly on both sides.
/// `κ(0)` is the projection of the domain centre.
pub fn geodesic_sampler(dom: &FundamentalDomain, seed: u64) -> Geodesic {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let t1: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let t2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let Ok(k) = Geodesic::between(Complex64::from_polar(1.0, t1), Complex64::from_polar(1.0, t2)) else {
            continue;
        };
        let sides: Vec<f64> = dom.vertices.iter().map(|&v| k.signed_distance(v)).collect();
        if sides.iter().any(|&s| s > 1e-9) && sides.iter().any(|&s| s < -1e-9) {
            return k.rebased(k.project(dom.center).t);
        }
    }
}
