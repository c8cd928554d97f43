use serde::Serialize;

use super::enumerate::{tube_orbit, TubeQuery};
use super::{geodesic_sampler, CutProjectError};
use crate::fuchsian::{budget_from_env, extended_side_hits_interior, FundamentalDomain};

/// Half-length of the stretch of each sample geodesic that is searched.
pub const SAMPLE_HALF_WINDOW: f64 = 20.0;
/// Vertex passages allowed per direction in the side-extension gate.
pub const SIDE_WALK_DEPTH: usize = 256;

/// Closest approach of one sample geodesic to the orbit of the base point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleEvidence {
    pub seed: u64,
    pub min_distance: f64,
    pub at: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhoTrial {
    pub fraction: f64,
    pub rho: f64,
    pub hits: usize,
}

/// Outcome of the ρ search. Success is sampling evidence, not a proof.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhoReport {
    pub rho: f64,
    pub inradius: f64,
    pub samples: Vec<SampleEvidence>,
    pub trials: Vec<RhoTrial>,
}

/// Fractions of the inradius tried, largest first.
pub fn rho_ladder() -> Vec<f64> {
    let mut f = vec![0.99];
    f.extend((1..20).map(|i| 1.0 - 0.05 * i as f64));
    f
}

/// Largest `ρ` on the ladder for which every sampled geodesic meets the orbit of `B(x, ρ)`,
/// with `x` the incenter.
///
/// Refuses with `SideExtensionObstruction` when some extended side stays on tile
/// boundaries: then no `ρ` below the inradius works.
pub fn find_rho(dom: &FundamentalDomain, n_samples: usize, seed: u64) -> Result<RhoReport, CutProjectError> {
    for side in 0..dom.side_count() {
        if !extended_side_hits_interior(dom, side, SIDE_WALK_DEPTH)?.hit {
            return Err(CutProjectError::SideExtensionObstruction { side });
        }
    }
    let mu = dom.inradius;
    let query = TubeQuery { window: (-SAMPLE_HALF_WINDOW, SAMPLE_HALF_WINDOW), width: mu, node_cap: budget_from_env() };
    let mut samples = Vec::with_capacity(n_samples);
    for i in 0..n_samples as u64 {
        let s = seed.wrapping_add(i);
        let k = geodesic_sampler(dom, s);
        let records = tube_orbit(dom, dom.center, &k, &query)?;
        let best = records.iter().min_by(|a, b| a.s.abs().total_cmp(&b.s.abs()));
        samples.push(SampleEvidence {
            seed: s,
            min_distance: best.map_or(f64::INFINITY, |r| r.s.abs()),
            at: best.map_or(f64::NAN, |r| r.t),
        });
    }
    let mut trials = Vec::new();
    for fraction in rho_ladder() {
        let rho = fraction * mu;
        let hits = samples.iter().filter(|e| e.min_distance < rho).count();
        trials.push(RhoTrial { fraction, rho, hits });
        if hits == samples.len() {
            return Ok(RhoReport { rho, inradius: mu, samples, trials });
        }
    }
    Err(CutProjectError::NoCandidateFound { samples: n_samples })
}
