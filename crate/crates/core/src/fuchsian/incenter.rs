use num_complex::Complex64;

use super::solve::gauss_newton;
use super::{FuchsianError, FundamentalDomain};
use crate::geometry::DiscPoint;

const RESIDUAL_LIMIT: f64 = 1e-6;

/// The interior point equidistant from every side carrier, and that distance.
///
/// Gauss–Newton on `(signed distance to side j) - μ`, started from the
/// Klein-model centroid of the vertices.
pub fn center_and_inradius(dom: &FundamentalDomain) -> Result<(DiscPoint, f64), FuchsianError> {
    let n = dom.vertices.len() as f64;
    let klein: Complex64 = dom.vertices.iter().map(|v| 2.0 * v.z() / (1.0 + v.norm_sqr())).sum::<Complex64>() / n;
    let start = klein / (1.0 + (1.0 - klein.norm_sqr()).max(0.0).sqrt());
    let start = DiscPoint::from_complex(start)?;
    let mean = dom.sides.iter().map(|s| s.carrier.signed_distance(start)).sum::<f64>() / n;

    let residuals = |x: &[f64]| -> Option<Vec<f64>> {
        if x[0] * x[0] + x[1] * x[1] >= 1.0 - 1e-12 {
            return None;
        }
        let p = DiscPoint { re: x[0], im: x[1] };
        Some(dom.sides.iter().map(|s| s.carrier.signed_distance(p) - x[2]).collect())
    };
    let (x, residual) = gauss_newton(vec![start.re, start.im, mean], residuals, 100);
    let center = DiscPoint { re: x[0], im: x[1] };
    if !(residual <= RESIDUAL_LIMIT) || x[2] <= 0.0 || !dom.contains_interior(center, 0.0) {
        return Err(FuchsianError::NoIncenter { residual });
    }
    Ok((center, x[2]))
}
