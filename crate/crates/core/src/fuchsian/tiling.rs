use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{orbit_ball, DomainKind, FuchsianError, FundamentalDomain, OrbitOptions, OrbitRecord, Word};
use crate::geometry::{dist, DiscPoint, Mobius};

/// Distance of one presentation relation from the identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub residual: f64,
}

fn identity_residual(g: &Mobius) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    let plus = (g.a - one).norm().max(g.b.norm());
    let minus = (g.a + one).norm().max(g.b.norm());
    plus.min(minus)
}

/// Evaluates the defining relations of the side-pairing generators.
pub fn relation_residuals(dom: &FundamentalDomain) -> Vec<RelationCheck> {
    let [m1, m2, m3] = dom.signature.orders().map(i64::from);
    let g = |i: usize| dom.generators[i].element;
    let rels: Vec<(String, Mobius)> = match dom.kind {
        DomainKind::Quadrilateral => vec![
            (format!("T2^{m2}"), g(1).pow(m2)),
            (format!("T4^{m1}"), g(3).pow(m1)),
            (format!("(T2 T4)^{m3}"), g(1).compose(&g(3)).pow(m3)),
            (format!("(T3 T1)^{m3}"), g(2).compose(&g(0)).pow(m3)),
            ("T1 T2".into(), g(0).compose(&g(1))),
            ("T3 T4".into(), g(2).compose(&g(3))),
        ],
        DomainKind::Hexagonal => vec![
            (format!("U1^{m1}"), g(0).pow(m1)),
            (format!("U2^{m2}"), g(1).pow(m2)),
            (format!("U3^{m3}"), g(2).pow(m3)),
            ("U1 U2 U3^-1".into(), g(0).compose(&g(1)).compose(&g(2).inverse())),
            (format!("(U1 U2)^{m3}"), g(0).compose(&g(1)).pow(m3)),
        ],
    };
    rels.into_iter().map(|(relation, e)| RelationCheck { relation, residual: identity_residual(&e) }).collect()
}

/// Deterministic interior sample of the domain: random convex combinations in the Klein model.
pub(crate) fn interior_samples(dom: &FundamentalDomain, count: usize, seed: u64) -> Vec<DiscPoint> {
    let klein: Vec<Complex64> = dom.vertices.iter().map(|v| 2.0 * v.z() / (1.0 + v.norm_sqr())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let w: Vec<f64> = (0..klein.len()).map(|_| rng.gen::<f64>() + 1e-3).collect();
        let total: f64 = w.iter().sum();
        let k: Complex64 = klein.iter().zip(&w).map(|(k, w)| k * (w / total)).sum();
        let z = k / (1.0 + (1.0 - k.norm_sqr()).sqrt());
        let p = DiscPoint { re: z.re, im: z.im };
        if dom.contains_interior(p, 1e-6) {
            out.push(p);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DisjointnessReport {
    pub tiles: usize,
    pub pairs_checked: usize,
    /// Pairs certified disjoint by a side of one tile separating it from the other.
    pub pairs_separated: usize,
    /// Pairs that needed the interior-sample test.
    pub pairs_sampled: usize,
    pub violations: usize,
}

/// Tile images reached by side-crossing words of length at most `max_word`.
pub(crate) fn tiles_by_word(dom: &FundamentalDomain, max_word: usize) -> Vec<OrbitRecord> {
    let x = dom.center;
    let mut index = super::PointIndex::new();
    index.insert(x, 0);
    let mut records = vec![OrbitRecord { word: Word::identity(), mobius: Mobius::IDENTITY, image: x }];
    let mut frontier = vec![0usize];
    for _ in 0..max_word {
        let mut next = Vec::new();
        for &i in &frontier {
            for c in &dom.crossings {
                let g = records[i].mobius.compose(&c.element);
                let image = g.apply(x);
                if index.find(image, 1e-7).is_none() {
                    index.insert(image, records.len());
                    next.push(records.len());
                    records.push(OrbitRecord { word: records[i].word.pushed(c.letter), mobius: g, image });
                }
            }
        }
        frontier = next;
    }
    records
}

/// True when some side of the domain has every vertex of `g(F)` on its closed outer side.
fn separated_by_side(dom: &FundamentalDomain, g: &Mobius) -> bool {
    let images: Vec<DiscPoint> = dom.vertices.iter().map(|&v| g.apply(v)).collect();
    dom.sides.iter().any(|s| images.iter().all(|&p| s.carrier.signed_distance(p) <= 1e-9))
}

/// No sample of one open tile lies strictly inside another tile, over all tiles
/// reached by words of length at most `max_word`.
///
/// Only tiles whose centres are within twice the circumradius can overlap. Such a
/// pair is first tested for a separating side; pairs without one get the
/// interior-sample test, which is where an overlap would show up.
pub fn disjointness_check(dom: &FundamentalDomain, max_word: usize, samples: usize) -> DisjointnessReport {
    let tiles = tiles_by_word(dom, max_word);
    let pts = interior_samples(dom, samples, 0x5eed);
    let c = dom.center;
    let circumradius = dom.vertices.iter().map(|&v| dist(c, v)).fold(0.0, f64::max);
    let opts = OrbitOptions { max_radius: f64::INFINITY, ..OrbitOptions::default() };
    let near: Vec<Mobius> = orbit_ball(dom, c, c, 2.0 * circumradius + 1e-6, &opts)
        .map(|v| v.into_iter().skip(1).map(|r| r.mobius).collect())
        .unwrap_or_default();
    let mut index = super::PointIndex::new();
    for (i, t) in tiles.iter().enumerate() {
        index.insert(t.image, i);
    }
    let mut report = DisjointnessReport { tiles: tiles.len(), pairs_checked: 0, pairs_separated: 0, pairs_sampled: 0, violations: 0 };
    for (i, ti) in tiles.iter().enumerate() {
        for eta in &near {
            let Some(j) = index.find(ti.mobius.compose(eta).apply(c), 1e-6) else { continue };
            if j <= i {
                continue;
            }
            report.pairs_checked += 1;
            let rel = tiles[j].mobius.inverse().compose(&ti.mobius);
            let back = rel.inverse();
            if separated_by_side(dom, &rel) || separated_by_side(dom, &back) {
                report.pairs_separated += 1;
                continue;
            }
            report.pairs_sampled += 1;
            let overlap = pts.iter().any(|&p| dom.contains_interior(rel.apply(p), 1e-8))
                || pts.iter().any(|&p| dom.contains_interior(back.apply(p), 1e-8));
            if overlap {
                report.violations += 1;
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoveringReport {
    pub samples: usize,
    pub uncovered: usize,
    pub tiles: usize,
}

/// Random points of the ball of radius `radius` about the incenter each lie in some closed tile.
pub fn covering_check(dom: &FundamentalDomain, radius: f64, samples: usize, seed: u64) -> Result<CoveringReport, FuchsianError> {
    let opts = OrbitOptions { max_radius: f64::INFINITY, ..OrbitOptions::default() };
    let tiles = orbit_ball(dom, dom.center, dom.center, radius + dom.diameter, &opts)?;
    let to_center = Mobius::origin_to(dom.center);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut uncovered = 0;
    for _ in 0..samples {
        let r = radius * rng.gen::<f64>().sqrt();
        let theta = rng.gen::<f64>() * std::f64::consts::TAU;
        let p = to_center.apply(DiscPoint::polar(r, theta));
        let covered = tiles
            .iter()
            .filter(|t| dist(t.image, p) <= dom.diameter + 1e-9)
            .any(|t| dom.contains(t.mobius.inverse().apply(p), 1e-9));
        if !covered {
            uncovered += 1;
        }
    }
    Ok(CoveringReport { samples, uncovered, tiles: tiles.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::{build_hexagon, build_quadrilateral, Signature};

    #[test]
    fn relations_hold() {
        for sig in [(3, 3, 4), (6, 6, 3), (3, 5, 5)] {
            let s = Signature::new(sig.0, sig.1, sig.2).unwrap();
            for d in [build_quadrilateral(s).unwrap(), build_hexagon(s).unwrap()] {
                for r in relation_residuals(&d) {
                    assert!(r.residual < 1e-8, "{sig:?} {:?}: {}", d.kind, r.relation);
                }
            }
        }
    }

    #[test]
    fn small_tiling_is_disjoint_and_covers() {
        let d = build_quadrilateral(Signature::new(6, 6, 3).unwrap()).unwrap();
        let r = disjointness_check(&d, 4, 20);
        assert_eq!(r.violations, 0);
        assert!(r.pairs_checked > 0);
        let c = covering_check(&d, 2.0, 50, 1).unwrap();
        assert_eq!(c.uncovered, 0);
    }
}
