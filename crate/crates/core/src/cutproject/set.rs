use serde::{Deserialize, Serialize};

use super::enumerate::{tube_orbit, TubeQuery, TubeRecord};
use super::tube::{classify_signed, Membership, TubeSpec, TANGENCY_TOL};
use super::CutProjectError;
use crate::fuchsian::{budget_from_env, DomainKind, FundamentalDomain, Signature};
use crate::geometry::DiscPoint;

/// Projected parameters closer than this are one point.
pub const MERGE_TOL: f64 = 1e-9;

/// Largest `|t|` a window may reach. Rounding in the double-double generators
/// grows like `1e-32·e^{|t|}`; measured drift stays below `1e-9` up to here.
pub const PRECISION_HORIZON: f64 = 50.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutProjectMeta {
    pub signature: Signature,
    pub kind: DomainKind,
    pub rho: f64,
    pub base: DiscPoint,
    pub depth_radius: f64,
}

/// A window of the cut-and-project set: sorted parameters on `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutProjectSet {
    pub points: Vec<f64>,
    pub window: (f64, f64),
    pub meta: CutProjectMeta,
}

impl CutProjectSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points shifted by `-a`, window included.
    pub fn shifted(&self, a: f64) -> CutProjectSet {
        CutProjectSet {
            points: self.points.iter().map(|p| p - a).collect(),
            window: (self.window.0 - a, self.window.1 - a),
            meta: self.meta.clone(),
        }
    }

    /// Points inside `[lo, hi]`.
    pub fn restricted(&self, lo: f64, hi: f64) -> Vec<f64> {
        self.points.iter().copied().filter(|&p| p >= lo && p <= hi).collect()
    }
}

fn check_inputs(tube: &TubeSpec, window: (f64, f64), depth_radius: f64) -> Result<(), CutProjectError> {
    let (a, b) = window;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(CutProjectError::InvalidWindow(a, b));
    }
    let reach = a.abs().max(b.abs());
    if reach > PRECISION_HORIZON {
        return Err(CutProjectError::BeyondHorizon { reach, horizon: PRECISION_HORIZON });
    }
    let required = tube.rho + TANGENCY_TOL;
    if !(depth_radius >= required) {
        return Err(CutProjectError::InsufficientDepth { required, available: depth_radius });
    }
    Ok(())
}

/// Orbit records over the window that belong to the one-sided closed tube, with their class.
///
/// `depth_radius` is the half-width of the band that is enumerated exhaustively
/// around `k`; it has to reach past `ρ` for the tube to be covered.
pub fn tube_records(
    dom: &FundamentalDomain,
    x: DiscPoint,
    tube: &TubeSpec,
    window: (f64, f64),
    depth_radius: f64,
) -> Result<Vec<(TubeRecord, Membership)>, CutProjectError> {
    check_inputs(tube, window, depth_radius)?;
    let query = TubeQuery { window, width: depth_radius, node_cap: budget_from_env() };
    let records = tube_orbit(dom, x, &tube.geodesic, &query)?;
    Ok(records
        .into_iter()
        .map(|r| {
            let m = classify_signed(r.s, tube.rho, TANGENCY_TOL);
            (r, m)
        })
        .filter(|(_, m)| *m != Membership::Outside)
        .collect())
}

/// Sorts and merges parameters closer than [`MERGE_TOL`].
pub fn merge_sorted(mut ts: Vec<f64>) -> Vec<f64> {
    ts.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(ts.len());
    for t in ts {
        if out.last().is_none_or(|&l| t - l > MERGE_TOL) {
            out.push(t);
        }
    }
    out
}

/// `{ t : γ ∈ Γ, γx in the one-sided closed tube, project(k, γx).t ∈ window }`.
pub fn cut_project(
    dom: &FundamentalDomain,
    x: DiscPoint,
    tube: &TubeSpec,
    window: (f64, f64),
    depth_radius: f64,
) -> Result<CutProjectSet, CutProjectError> {
    let records = tube_records(dom, x, tube, window, depth_radius)?;
    let points = merge_sorted(records.iter().map(|(r, _)| r.t).collect());
    Ok(CutProjectSet {
        points,
        window,
        meta: CutProjectMeta { signature: dom.signature, kind: dom.kind, rho: tube.rho, base: x, depth_radius },
    })
}
