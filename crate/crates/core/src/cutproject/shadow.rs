//! Periodic references that shadow a given geodesic.
//!
//! Walking `ℓ` and pulling each unit tangent vector back into the domain gives
//! `κ_ℓ(t) = G_t M_t(0)` with `G_t` in the group and `M_t` a moderate isometry.
//! When the pulled-back vectors at `t_i < 0 < t_j` nearly agree, the element
//! `G_j G_i⁻¹` is hyperbolic and its axis follows `ℓ` closely between them.
//! In the frame of `ℓ` this element is `H_{t_j} (M_j⁻¹ M_i) H_{-t_i}`, a product
//! of translations in the same direction around a near-identity factor.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{periodic_reference_word, CutProjectError, PeriodicReference};
use crate::fuchsian::{reduce_with_word, FundamentalDomain, Word};
use crate::geometry::{dist, DiscPoint, Geodesic, Mobius};

const STEP: f64 = 0.05;
const HALF_LENGTH: f64 = 20.0;
const MARGIN: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Shadow {
    pub element: Mobius,
    pub word: Word,
    pub reference: PeriodicReference,
    /// Parameter on the axis of the point nearest `κ_ℓ(0)`; `S' - shift` is aligned with `ℓ`.
    pub shift: f64,
    pub closing: (f64, f64),
}

struct Lift {
    t: f64,
    word: Word,
    local: Mobius,
}

fn walk(dom: &FundamentalDomain, ell: &Geodesic, dir: f64) -> Result<Vec<Lift>, CutProjectError> {
    let (word, g, _) = reduce_with_word(dom, ell.point(0.0))?;
    let mut cur = Lift { t: 0.0, word, local: g.inverse().compose(&ell.frame()) };
    let mut out = Vec::new();
    let n = (HALF_LENGTH / STEP).round() as usize;
    for _ in 0..n {
        let moved = cur.local.compose(&Mobius::translation_real(dir * STEP));
        let (w, h, _) = reduce_with_word(dom, moved.apply(DiscPoint::ORIGIN))?;
        let next = Lift { t: cur.t + dir * STEP, word: cur.word.concat(&w), local: h.inverse().compose(&moved) };
        out.push(std::mem::replace(&mut cur, next));
    }
    out.push(cur);
    Ok(out)
}

fn mismatch(e: &Mobius) -> f64 {
    let turn = e.derivative(Complex64::new(0.0, 0.0)).arg();
    let turn = (turn + PI).rem_euclid(TAU) - PI;
    dist(DiscPoint::ORIGIN, e.apply(DiscPoint::ORIGIN)) + turn.abs()
}

/// Group element whose axis shadows `ℓ` over `(-r, r)`, and the periodic set along it.
pub fn shadow_reference(
    dom: &FundamentalDomain,
    x: DiscPoint,
    ell: &Geodesic,
    r: f64,
    rho: f64,
    depth_radius: f64,
) -> Result<Shadow, CutProjectError> {
    let back = walk(dom, ell, -1.0)?;
    let fwd = walk(dom, ell, 1.0)?;
    let mut best: Option<(f64, &Lift, &Lift)> = None;
    for li in back.iter().filter(|l| l.t <= -(r + MARGIN)) {
        for lj in fwd.iter().filter(|l| l.t >= r + MARGIN) {
            let e = lj.local.inverse().compose(&li.local);
            let score = mismatch(&e) * ((li.t + r).exp() + (r - lj.t).exp());
            if best.as_ref().is_none_or(|b| score < b.0) {
                best = Some((score, li, lj));
            }
        }
    }
    let (_, li, lj) = best.ok_or(CutProjectError::InvalidWindow(-r, r))?;
    let e = lj.local.inverse().compose(&li.local);
    let in_frame = Mobius::translation_real(lj.t).compose(&e).compose(&Mobius::translation_real(-li.t));
    let k = ell.frame();
    let element = k.compose(&in_frame).compose(&k.inverse());
    let word = lj.word.concat(&li.word.inverse());
    let axis = Geodesic::axis_fine(&dom.fine_word_element(&word)?)?;
    let shift = axis.project(ell.point(0.0)).t;
    let window = (shift - r - MARGIN, shift + r + MARGIN);
    let reference = periodic_reference_word(dom, x, &word, rho, window, depth_radius)?;
    Ok(Shadow { element, word, reference, shift, closing: (li.t, lj.t) })
}
