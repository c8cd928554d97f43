use serde::{Deserialize, Serialize};

use super::{CutProjectError, CutProjectSet};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeloneReport {
    /// Smallest gap between consecutive points.
    pub min_gap: f64,
    /// Largest gap, ignoring the first and last gap when there are at least three.
    pub max_gap: f64,
    /// Half of `max_gap`: the covering radius estimate.
    pub covering_radius: f64,
    pub count: usize,
    /// `2(inj - ρ)`, the guaranteed separation.
    pub separation_bound: f64,
}

fn gaps(points: &[f64]) -> Vec<f64> {
    points.windows(2).map(|w| w[1] - w[0]).collect()
}

pub fn delone_stats(s: &CutProjectSet, inj: f64, rho: f64) -> Result<DeloneReport, CutProjectError> {
    if s.points.len() < 2 {
        return Err(CutProjectError::TooFewPoints { count: s.points.len() });
    }
    let g = gaps(&s.points);
    let min_gap = g.iter().copied().fold(f64::INFINITY, f64::min);
    let interior = if g.len() >= 3 { &g[1..g.len() - 1] } else { &g[..] };
    let max_gap = interior.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(DeloneReport {
        min_gap,
        max_gap,
        covering_radius: 0.5 * max_gap,
        count: s.points.len(),
        separation_bound: 2.0 * (inj - rho),
    })
}

/// Distinct gap lengths with multiplicities. Gaps are sorted and a new cluster
/// starts whenever a gap exceeds the first gap of the current cluster by more
/// than `cluster_tol`; the cluster is represented by that first gap.
pub fn tile_lengths(s: &CutProjectSet, cluster_tol: f64) -> Result<Vec<(f64, usize)>, CutProjectError> {
    if s.points.len() < 2 {
        return Err(CutProjectError::TooFewPoints { count: s.points.len() });
    }
    let mut g = gaps(&s.points);
    g.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, usize)> = Vec::new();
    for gap in g {
        match out.last_mut() {
            Some((rep, n)) if gap - *rep <= cluster_tol => *n += 1,
            _ => out.push((gap, 1)),
        }
    }
    Ok(out)
}

fn covered(from: &[f64], by: &[f64], r: f64) -> bool {
    let eps = 1.0 / r;
    from.iter().filter(|&&p| p > -r && p < r).all(|&p| {
        let i = by.partition_point(|&q| q < p);
        let before = i.checked_sub(1).map(|j| p - by[j]);
        let after = by.get(i).map(|&q| q - p);
        before.into_iter().chain(after).any(|d| d < eps)
    })
}

/// `S1 ∩ (-r, r) ⊆ S2 + B(0, 1/r)` and the same with the roles swapped. Both lists sorted.
pub fn nr_test(s1: &[f64], s2: &[f64], r: f64) -> bool {
    covered(s1, s2, r) && covered(s2, s1, r)
}
