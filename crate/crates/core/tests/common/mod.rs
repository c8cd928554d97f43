//! Shared oracles for the integration tests.
#![allow(dead_code)]

use hypercut::cutproject::{CutProjectSet, TubeSpec};
use hypercut::fuchsian::{build_domain, DomainKind, FundamentalDomain, PointIndex, Signature, Word};
use hypercut::geometry::precise::DdComplex;
use hypercut::geometry::{dist, DiscPoint, Geodesic, Mobius};

pub const BATTERY: [(u32, u32, u32); 7] = [(3, 3, 4), (4, 4, 4), (5, 5, 5), (6, 6, 3), (3, 3, 5), (3, 4, 4), (3, 5, 5)];

pub fn sig(t: (u32, u32, u32)) -> Signature {
    Signature::new(t.0, t.1, t.2).unwrap()
}

pub fn domain(t: (u32, u32, u32), kind: DomainKind) -> FundamentalDomain {
    build_domain(sig(t), kind).unwrap()
}

pub fn hex663() -> FundamentalDomain {
    domain((6, 6, 3), DomainKind::Hexagonal)
}

/// Orbit images within `r` of the origin from a breadth-first walk over all words in
/// the generators and their inverses, deduplicated by image, with no geometric pruning.
///
/// The walk stops at the first word length whose images all lie beyond
/// `B = max(r, d(0, x)) + diam`. The tiles met by the segment from `x` to a point
/// within `r` form a chain of side-adjacent tiles whose base images stay within `B`,
/// and word lengths along the chain change by at most one, so the chain never
/// reaches that word length. Returns the images and the number of layers walked.
pub fn brute_orbit(dom: &FundamentalDomain, x: DiscPoint, r: f64) -> (Vec<DiscPoint>, usize) {
    let bound = r.max(dist(DiscPoint::ORIGIN, x)) + dom.diameter + 1e-9;
    let moves = dom.moves();
    let mut index = PointIndex::new();
    let mut all: Vec<(Mobius, DiscPoint)> = vec![(Mobius::IDENTITY, x)];
    index.insert(x, 0);
    let mut layer = vec![0usize];
    let mut length = 0;
    while layer.iter().any(|&i| dist(DiscPoint::ORIGIN, all[i].1) <= bound) {
        length += 1;
        assert!(length <= 40, "brute-force walk did not terminate");
        let mut next = Vec::new();
        for &i in &layer {
            let g = all[i].0;
            for (_, m) in &moves {
                let h = g.compose(m);
                let p = h.apply(x);
                if index.find(p, 1e-7).is_none() {
                    index.insert(p, all.len());
                    next.push(all.len());
                    all.push((h, p));
                }
            }
        }
        layer = next;
    }
    let inside = all.into_iter().map(|(_, p)| p).filter(|p| dist(DiscPoint::ORIGIN, *p) <= r).collect();
    (inside, length)
}

/// Whether the two point lists agree as sets within `tol` (hyperbolic distance).
pub fn same_point_sets(a: &[DiscPoint], b: &[DiscPoint], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut index = PointIndex::new();
    for (i, p) in b.iter().enumerate() {
        index.insert(*p, i);
    }
    let mut used = vec![false; b.len()];
    for p in a {
        match index.find(*p, tol) {
            Some(j) if !used[j] => used[j] = true,
            _ => return false,
        }
    }
    true
}

/// The cut-and-project set recomputed from a plain orbit ball: every `γx` within
/// `radius` of the origin, re-evaluated from its word in double-double, filtered
/// by the one-sided closed tube and the window.
pub fn ball_oracle(dom: &FundamentalDomain, tube: &TubeSpec, window: (f64, f64), radius: f64) -> Vec<f64> {
    let x = dom.center;
    let xf = DdComplex::from(x);
    let ball = hypercut::fuchsian::enumerate_orbit(dom, x, radius).unwrap();
    let mut ts: Vec<f64> = ball
        .iter()
        .filter_map(|rec| {
            let g = dom.fine_word_element(&rec.word).unwrap();
            let (t, s) = tube.geodesic.fermi_fine(g.apply(xf));
            let inside = s.abs() < tube.rho - 1e-9 || (s - tube.rho).abs() <= 1e-9;
            (inside && t >= window.0 && t <= window.1).then_some(t)
        })
        .collect();
    ts.sort_by(f64::total_cmp);
    hypercut::cutproject::merge_sorted(ts)
}

/// Radius of an origin-centred ball that contains the tube over the window.
pub fn ball_radius_for(k: &Geodesic, rho: f64, window: (f64, f64)) -> f64 {
    let reach = window.0.abs().max(window.1.abs());
    dist(DiscPoint::ORIGIN, k.point(0.0)) + reach + rho + 1e-6
}

/// Largest distance between matched points, or `None` if the counts differ.
pub fn max_mismatch(a: &[f64], b: &[f64]) -> Option<f64> {
    (a.len() == b.len()).then(|| a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

pub fn points_in(set: &CutProjectSet, lo: f64, hi: f64) -> Vec<f64> {
    set.restricted(lo, hi)
}

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}
