//! Exact walk along an extended side through the tiling.
//!
//! Between vertices an extended side runs along tile edges, so it can only
//! enter a tile interior while passing through a vertex. At each vertex the
//! fan of tiles around it is computed by crossing sides, and the outgoing
//! direction is compared against the fan sectors. If the direction runs along
//! a sector edge, the walk continues on that edge, pulled back into the base
//! domain. The state is a directed side of the base domain, so a repeated state
//! means the extended side closes up along tile boundaries.

use std::f64::consts::{PI, TAU};

use super::{FuchsianError, FundamentalDomain, Word};
use crate::geometry::{dist, ray_direction, Mobius};

const ANGLE_TOL: f64 = 1e-7;
const FAN_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub enum SideWalkOutcome {
    /// Entered the open tile `g(F)`; `word` names `g`. `crossings` counts vertex passages.
    Hit { word: Word, crossings: usize },
    /// Returned to an earlier directed side: the extended side is a closed boundary geodesic.
    ClosedBoundary { period: usize },
    /// Neither hit nor closed within the allowed number of vertex passages.
    DepthExhausted,
}

impl SideWalkOutcome {
    pub fn is_hit(&self) -> bool {
        matches!(self, SideWalkOutcome::Hit { .. })
    }
}

/// Both directions of the walk along one extended side.
#[derive(Debug, Clone, PartialEq)]
pub struct SideWalk {
    pub side: usize,
    pub hit: bool,
    pub witness: Option<Word>,
    pub forward: SideWalkOutcome,
    pub backward: SideWalkOutcome,
}

struct FanTile {
    word: Word,
    corner: usize,
    start: f64,
    width: f64,
}

/// Tiles around vertex `w` of the base domain, counterclockwise starting with the domain itself.
fn vertex_fan(dom: &FundamentalDomain, w: usize) -> Result<Vec<FanTile>, FuchsianError> {
    let n = dom.side_count();
    let p = dom.vertices[w];
    let mut fan = Vec::new();
    let (mut g, mut word, mut corner) = (Mobius::IDENTITY, Word::identity(), w);
    loop {
        let next = dom.vertices[(corner + 1) % n];
        fan.push(FanTile {
            word: word.clone(),
            corner,
            start: ray_direction(p, g.apply(next)),
            width: dom.internal_angles[corner],
        });
        // cross the edge ending at this corner, which bounds the sector on its counterclockwise side
        let c = dom.crossings[(corner + n - 1) % n];
        g = g.compose(&c.element);
        word = word.pushed(c.letter);
        corner = (0..n)
            .find(|&v| dist(g.apply(dom.vertices[v]), p) < 1e-7)
            .ok_or_else(|| FuchsianError::ConstructionFailed(format!("side pairing loses vertex {w}")))?;
        if g.is_identity(1e-7) {
            break;
        }
        if fan.len() > FAN_LIMIT {
            return Err(FuchsianError::BudgetExceeded { cap: FAN_LIMIT });
        }
    }
    let total: f64 = fan.iter().map(|t| t.width).sum();
    if (total - TAU).abs() > 1e-6 {
        return Err(FuchsianError::ConstructionFailed(format!("angles around vertex {w} sum to {total}")));
    }
    Ok(fan)
}

fn walk(dom: &FundamentalDomain, from: usize, to: usize, depth: usize, fans: &[Vec<FanTile>]) -> SideWalkOutcome {
    let n = dom.side_count();
    let mut seen = vec![None; n * n];
    let (mut u, mut w) = (from, to);
    let mut word = Word::identity();
    for step in 0..depth {
        if let Some(first) = seen[u * n + w] {
            return SideWalkOutcome::ClosedBoundary { period: step - first };
        }
        seen[u * n + w] = Some(step);
        let out = ray_direction(dom.vertices[w], dom.vertices[u]) + PI;
        let mut next = None;
        for tile in &fans[w] {
            let rel = (out - tile.start).rem_euclid(TAU);
            let rel = if rel > TAU - ANGLE_TOL { rel - TAU } else { rel };
            if rel > ANGLE_TOL && rel < tile.width - ANGLE_TOL {
                return SideWalkOutcome::Hit { word: word.concat(&tile.word), crossings: step + 1 };
            }
            if rel.abs() <= ANGLE_TOL {
                next = Some((tile, (tile.corner + 1) % n));
                break;
            }
            if (rel - tile.width).abs() <= ANGLE_TOL {
                next = Some((tile, (tile.corner + n - 1) % n));
                break;
            }
        }
        match next {
            Some((tile, far)) => {
                word = word.concat(&tile.word);
                u = tile.corner;
                w = far;
            }
            None => return SideWalkOutcome::DepthExhausted,
        }
    }
    SideWalkOutcome::DepthExhausted
}

/// Walks the extended side `side_index` in both directions, at most `depth` vertex passages each.
pub fn extended_side_hits_interior(
    dom: &FundamentalDomain,
    side_index: usize,
    depth: usize,
) -> Result<SideWalk, FuchsianError> {
    let side = *dom.sides.get(side_index).ok_or(FuchsianError::NoSuchSide(side_index))?;
    let fans = (0..dom.side_count()).map(|v| vertex_fan(dom, v)).collect::<Result<Vec<_>, _>>()?;
    let forward = walk(dom, side.start, side.end, depth, &fans);
    let backward = walk(dom, side.end, side.start, depth, &fans);
    let witness = match (&forward, &backward) {
        (SideWalkOutcome::Hit { word, .. }, _) | (_, SideWalkOutcome::Hit { word, .. }) => Some(word.clone()),
        _ => None,
    };
    Ok(SideWalk { side: side_index, hit: witness.is_some(), witness, forward, backward })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::{build_hexagon, build_quadrilateral, Signature};

    #[test]
    fn four_four_four_sides_close_up() {
        let d = build_quadrilateral(Signature::new(4, 4, 4).unwrap()).unwrap();
        for s in 0..4 {
            let w = extended_side_hits_interior(&d, s, 64).unwrap();
            assert!(!w.hit);
            assert!(matches!(w.forward, SideWalkOutcome::ClosedBoundary { .. }));
        }
    }

    #[test]
    fn witness_tile_meets_extended_side() {
        let d = build_hexagon(Signature::new(6, 6, 3).unwrap()).unwrap();
        for s in 0..6 {
            let w = extended_side_hits_interior(&d, s, 64).unwrap();
            assert!(w.hit, "side {s}");
            // the extended side passes through the interior of the witness tile
            let g = d.word_element(w.witness.as_ref().unwrap()).unwrap();
            let k = d.sides[s].carrier;
            let crosses = (-400..=400).any(|i| {
                let z = k.point(i as f64 * 0.05);
                d.contains_interior(g.inverse().apply(z), 1e-6)
            });
            assert!(crosses, "side {s}");
        }
    }
}
