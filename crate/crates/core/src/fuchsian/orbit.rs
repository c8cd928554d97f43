use std::collections::HashMap;

use rayon::prelude::*;

use super::{FuchsianError, FundamentalDomain, Word};
use crate::geometry::{dist, DiscPoint, Mobius};

/// Default cap on the number of distinct tiles visited by one enumeration.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;
/// Largest ball radius the orbit enumerator accepts.
pub const MAX_ORBIT_RADIUS: f64 = 12.0;
/// Orbit points closer than this (hyperbolically) are identified.
pub const ORBIT_POINT_TOL: f64 = 1e-7;

/// Node cap, overridden by `HYPERCUT_BUDGET` when it parses as a positive integer.
pub fn budget_from_env() -> usize {
    std::env::var("HYPERCUT_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_NODE_CAP)
}

/// One group element with a witness word and the image of the base point.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRecord {
    pub word: Word,
    pub mobius: Mobius,
    pub image: DiscPoint,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitOptions {
    pub node_cap: usize,
    pub parallel: bool,
    pub max_radius: f64,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { node_cap: budget_from_env(), parallel: true, max_radius: MAX_ORBIT_RADIUS }
    }
}

/// Spatial hash over disc coordinates with `1e-7` cells; lookups probe the
/// neighbouring cells and confirm with the hyperbolic distance.
#[derive(Debug, Default, Clone)]
pub struct PointIndex {
    cells: HashMap<(i64, i64), Vec<(DiscPoint, usize)>>,
}

const CELL: f64 = 1e-7;

impl PointIndex {
    pub fn new() -> Self {
        Self::default()
    }

    fn key(p: DiscPoint) -> (i64, i64) {
        ((p.re / CELL).floor() as i64, (p.im / CELL).floor() as i64)
    }

    pub fn find(&self, p: DiscPoint, tol: f64) -> Option<usize> {
        let (kx, ky) = Self::key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(bucket) = self.cells.get(&(kx + dx, ky + dy)) {
                    if let Some(&(_, i)) = bucket.iter().find(|(q, _)| dist(*q, p) < tol) {
                        return Some(i);
                    }
                }
            }
        }
        None
    }

    pub fn insert(&mut self, p: DiscPoint, id: usize) {
        self.cells.entry(Self::key(p)).or_default().push((p, id));
    }

    pub fn len(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Orbit points `γ(base)` with `d(0, γ(base)) ≤ r`, each once, in breadth-first order.
pub fn enumerate_orbit(dom: &FundamentalDomain, base: DiscPoint, r: f64) -> Result<Vec<OrbitRecord>, FuchsianError> {
    orbit_ball(dom, base, DiscPoint::ORIGIN, r, &OrbitOptions::default())
}

/// Orbit points `γ(base)` with `d(center, γ(base)) ≤ r`.
///
/// Breadth-first search over tiles, crossing one side at a time. A tile is
/// discarded once its base image is farther than `max(r, d(center, base)) + diam`
/// from `center`: such a tile cannot meet the geodesic segments that join `base`
/// to the points being sought.
pub fn orbit_ball(
    dom: &FundamentalDomain,
    base: DiscPoint,
    center: DiscPoint,
    r: f64,
    opts: &OrbitOptions,
) -> Result<Vec<OrbitRecord>, FuchsianError> {
    if r > opts.max_radius {
        return Err(FuchsianError::RadiusTooLarge { requested: r, max: opts.max_radius });
    }
    if !dom.contains(base, 1e-9) {
        return Err(FuchsianError::NotInDomain);
    }
    let limit = r.max(dist(center, base)) + dom.diameter + 1e-9;
    let mut records = vec![OrbitRecord { word: Word::identity(), mobius: Mobius::IDENTITY, image: base }];
    let mut index = PointIndex::new();
    index.insert(base, 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expand = |&i: &usize| -> Vec<OrbitRecord> {
            let rec: &OrbitRecord = &records[i];
            dom.crossings
                .iter()
                .filter_map(|c| {
                    let g = rec.mobius.compose(&c.element);
                    let image = g.apply(base);
                    (dist(center, image) <= limit).then(|| OrbitRecord { word: rec.word.pushed(c.letter), mobius: g, image })
                })
                .collect()
        };
        let candidates: Vec<Vec<OrbitRecord>> = if opts.parallel && frontier.len() > 64 {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        let mut next = Vec::new();
        for cand in candidates.into_iter().flatten() {
            if index.find(cand.image, ORBIT_POINT_TOL).is_some() {
                continue;
            }
            let id = records.len();
            index.insert(cand.image, id);
            records.push(cand);
            next.push(id);
            if records.len() > opts.node_cap {
                return Err(FuchsianError::BudgetExceeded { cap: opts.node_cap });
            }
        }
        frontier = next;
    }
    records.retain(|rec| dist(center, rec.image) <= r);
    Ok(records)
}

/// Moves `z` into the closed domain by crossing sides it lies beyond.
/// Returns `(g, w)` with `z = g(w)` and `w` in the domain.
pub fn reduce_to_domain(dom: &FundamentalDomain, z: DiscPoint) -> Result<(Mobius, DiscPoint), FuchsianError> {
    reduce_with_word(dom, z).map(|(_, g, w)| (g, w))
}

/// As [`reduce_to_domain`], also returning a word for `g`.
pub fn reduce_with_word(dom: &FundamentalDomain, z: DiscPoint) -> Result<(Word, Mobius, DiscPoint), FuchsianError> {
    let mut word = Word::identity();
    let mut g = Mobius::IDENTITY;
    let mut w = z;
    for _ in 0..10_000 {
        let worst = dom
            .sides
            .iter()
            .enumerate()
            .map(|(j, s)| (j, s.carrier.signed_distance(w)))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match worst {
            Some((j, d)) if d < -1e-12 => {
                let c = dom.crossings[j].element;
                w = c.inverse().apply(w);
                g = g.compose(&c);
                word = word.pushed(dom.crossings[j].letter);
            }
            _ => return Ok((word, g, w)),
        }
    }
    Err(FuchsianError::BudgetExceeded { cap: 10_000 })
}

/// `½ min_{γ ≠ I} d(x, γx)`.
///
/// The tile across any side contains a point within `2·diam` of `x`, so the
/// orbit ball of radius `2·diam` about `x` realises the minimum.
pub fn injectivity_radius(dom: &FundamentalDomain, x: DiscPoint) -> Result<f64, FuchsianError> {
    let (_, w) = reduce_to_domain(dom, x)?;
    let opts = OrbitOptions { max_radius: f64::INFINITY, ..OrbitOptions::default() };
    let ball = orbit_ball(dom, w, w, 2.0 * dom.diameter, &opts)?;
    let min = ball
        .iter()
        .map(|rec| dist(w, rec.image))
        .filter(|&d| d >= ORBIT_POINT_TOL)
        .fold(f64::INFINITY, f64::min);
    Ok(0.5 * min)
}
