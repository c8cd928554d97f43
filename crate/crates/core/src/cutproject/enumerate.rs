//! Orbit points near a geodesic, enumerated in the geodesic's own Fermi frame.
//!
//! A record stores an offset `c` along `k` and a local isometry `L` with
//! `γ = K ∘ H_c ∘ L`, where `K` is the frame of `k` and `H_c` the translation by
//! `c` along the real diameter. After every step `L` is rebased so that `L(x)`
//! sits over the origin of the local frame, which keeps `L` of moderate size
//! however far along `k` the orbit point lies. Frames are kept in double-double:
//! the position of a tile at distance `d` along `k` is sensitive to rounding at
//! the level of `e^d` times the working precision.

use std::collections::HashMap;

use rayon::prelude::*;

use super::CutProjectError;
use crate::fuchsian::{FuchsianError, FundamentalDomain, Word};
use crate::geometry::precise::{real_axis_fermi, Dd, DdComplex, DdMobius};
use crate::geometry::{DiscPoint, Geodesic, Mobius};

/// An orbit point `γ(x)` with Fermi coordinates `(t, s)` relative to `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TubeRecord {
    pub t: f64,
    pub s: f64,
    pub word: Word,
    offset: f64,
    local: DdMobius,
}

impl TubeRecord {
    /// The group element `γ`. Its entries grow like `e^{|t|/2}`.
    pub fn element(&self, k: &Geodesic) -> Mobius {
        k.fine_frame()
            .compose(&Mobius::translation_real(self.offset).into())
            .compose(&self.local)
            .to_mobius()
    }
}

/// Region to enumerate: orbit points with `t` in `window` and `|s| ≤ width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeQuery {
    pub window: (f64, f64),
    pub width: f64,
    pub node_cap: usize,
}

const KEY_CELL: f64 = 1e-6;
const SAME_POINT: f64 = 1e-7;

struct FermiIndex {
    cells: HashMap<(i64, i64), Vec<usize>>,
}

impl FermiIndex {
    fn key(t: f64, s: f64) -> (i64, i64) {
        ((t / KEY_CELL).floor() as i64, (s / KEY_CELL).floor() as i64)
    }

    fn contains(&self, t: f64, s: f64, records: &[TubeRecord]) -> bool {
        let (kt, ks) = Self::key(t, s);
        (-1..=1).any(|dt| {
            (-1..=1).any(|ds| {
                self.cells.get(&(kt + dt, ks + ds)).is_some_and(|b| {
                    b.iter().any(|&i| (records[i].t - t).abs() < SAME_POINT && (records[i].s - s).abs() < SAME_POINT)
                })
            })
        })
    }

    fn insert(&mut self, t: f64, s: f64, id: usize) {
        self.cells.entry(Self::key(t, s)).or_default().push(id);
    }
}

fn local_fermi(local: &DdMobius, x: DdComplex) -> (f64, f64) {
    real_axis_fermi(local.apply(x))
}

// Longest single rebase step; beyond it tanh(t/2) loses too many digits.
const MAX_STEP: f64 = 16.0;

fn rebased(mut offset: f64, mut local: DdMobius, x: DdComplex, word: Word) -> TubeRecord {
    loop {
        let (t_loc, s) = local_fermi(&local, x);
        // a non-finite t (degenerate frame) is returned as is and filtered out by the caller
        if t_loc.abs() < 1e-3 || !t_loc.is_finite() {
            return TubeRecord { t: offset + t_loc, s, word, offset, local };
        }
        // the shift is the exact translation by 2·atanh(f) for the double f
        let f = (0.5 * t_loc.clamp(-MAX_STEP, MAX_STEP)).tanh();
        local = DdMobius::translation_to(Dd::new(-f)).compose(&local).normalized();
        offset += 2.0 * f.atanh();
    }
}

/// All orbit points `γ(x)` whose Fermi coordinates satisfy `t ∈ window` and `|s| ≤ width`,
/// each once, in breadth-first order.
///
/// The search crosses one tile side at a time and keeps a tile when its image of
/// `x` lies within `diam` of the path made of the perpendicular from `x` to `k`,
/// the stretch of `k` from that foot to the window, and the band over the window.
/// Every tile meeting that path is reached this way.
pub fn tube_orbit(
    dom: &FundamentalDomain,
    x: DiscPoint,
    k: &Geodesic,
    query: &TubeQuery,
) -> Result<Vec<TubeRecord>, CutProjectError> {
    if !dom.contains(x, 1e-9) {
        return Err(FuchsianError::NotInDomain.into());
    }
    let (a, b) = query.window;
    let xf = DdComplex::from(x);
    let root = rebased(0.0, k.fine_frame().inverse(), xf, Word::identity());
    let (tx, sx) = (root.t, root.s);
    let d = dom.diameter + 1e-6;
    let (lo, hi) = (a.min(tx), b.max(tx));
    let keep = |t: f64, s: f64| {
        (t >= a - d && t <= b + d && s.abs() <= query.width + d)
            || (t >= lo - d && t <= hi + d && s.abs() <= d)
            || ((t - tx).abs() <= d && s >= sx.min(0.0) - d && s <= sx.max(0.0) + d)
    };

    let mut records = vec![root];
    let mut index = FermiIndex { cells: HashMap::new() };
    index.insert(tx, sx, 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expand = |&i: &usize| -> Vec<TubeRecord> {
            let r: &TubeRecord = &records[i];
            dom.crossings
                .iter()
                .zip(&dom.fine.crossings)
                .map(|(c, g)| rebased(r.offset, r.local.compose(g), xf, r.word.pushed(c.letter)))
                .filter(|n| keep(n.t, n.s))
                .collect()
        };
        let candidates: Vec<Vec<TubeRecord>> = if frontier.len() > 64 {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        let mut next = Vec::new();
        for cand in candidates.into_iter().flatten() {
            if index.contains(cand.t, cand.s, &records) {
                continue;
            }
            let id = records.len();
            index.insert(cand.t, cand.s, id);
            records.push(cand);
            next.push(id);
            if records.len() > query.node_cap {
                return Err(FuchsianError::BudgetExceeded { cap: query.node_cap }.into());
            }
        }
        frontier = next;
    }
    records.retain(|r| r.t >= a && r.t <= b && r.s.abs() <= query.width);
    Ok(records)
}
