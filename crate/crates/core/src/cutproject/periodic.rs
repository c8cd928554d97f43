use super::{cut_project, CutProjectError, CutProjectSet, TubeSpec};
use crate::fuchsian::{FundamentalDomain, Word};
use crate::geometry::{DiscPoint, Geodesic, Mobius};

/// Cut-and-project set along the axis of a hyperbolic group element.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicReference {
    pub set: CutProjectSet,
    pub axis: Geodesic,
    /// Translation length of the element.
    pub period: f64,
    /// Largest distance from a shifted core point to the set; `0` when the core is empty.
    pub shift_mismatch: f64,
}

/// Largest `|p ± period - q|` over points `p` whose shift stays inside the window.
pub fn shift_mismatch(points: &[f64], window: (f64, f64), period: f64) -> f64 {
    let nearest = |v: f64| {
        let i = points.partition_point(|&q| q < v);
        let a = i.checked_sub(1).map_or(f64::INFINITY, |j| (v - points[j]).abs());
        let b = points.get(i).map_or(f64::INFINITY, |&q| (q - v).abs());
        a.min(b)
    };
    let (lo, hi) = window;
    let mut worst: f64 = 0.0;
    for &p in points {
        if p + period <= hi - 1e-6 {
            worst = worst.max(nearest(p + period));
        }
        if p - period >= lo + 1e-6 {
            worst = worst.max(nearest(p - period));
        }
    }
    worst
}

/// `cut_project` along `axis(g)`. The element must belong to the group; its
/// translation length is the period of the resulting set.
pub fn periodic_reference(
    dom: &FundamentalDomain,
    x: DiscPoint,
    g: &Mobius,
    rho: f64,
    window: (f64, f64),
    depth_radius: f64,
) -> Result<PeriodicReference, CutProjectError> {
    let axis = Geodesic::axis(g)?;
    let period = g.translation_length()?;
    along_axis(dom, x, axis, period, rho, window, depth_radius)
}

/// [`periodic_reference`] for the element spelled by `word`. The axis comes from the
/// double-double product, so it stays invariant far out along the window.
pub fn periodic_reference_word(
    dom: &FundamentalDomain,
    x: DiscPoint,
    word: &Word,
    rho: f64,
    window: (f64, f64),
    depth_radius: f64,
) -> Result<PeriodicReference, CutProjectError> {
    let g = dom.fine_word_element(word)?;
    let period = g.to_mobius().translation_length()?;
    let axis = Geodesic::axis_fine(&g)?;
    along_axis(dom, x, axis, period, rho, window, depth_radius)
}

fn along_axis(
    dom: &FundamentalDomain,
    x: DiscPoint,
    axis: Geodesic,
    period: f64,
    rho: f64,
    window: (f64, f64),
    depth_radius: f64,
) -> Result<PeriodicReference, CutProjectError> {
    let set = cut_project(dom, x, &TubeSpec::new(axis, rho)?, window, depth_radius)?;
    let shift_mismatch = shift_mismatch(&set.points, window, period);
    Ok(PeriodicReference { set, axis, period, shift_mismatch })
}
