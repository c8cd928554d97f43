//! Hexagon with an inscribed circle centred at the origin.
//!
//! Vertices, counterclockwise: `v1, a1, v2, a2, v3, a3`. Each `v_i` has angle `2π/m_i`
//! and each accidental `a_i` has angle `2π/3`. Equal tangent lengths at the `a_i`
//! make the two sides at every `v_i` congruent, so the rotation about `v_i` pairs them.
//! The inradius `D` solves `Σ_v 2·asin(cos(α_v)/cosh D) = 2π` over the half-angles `α_v`.

use std::f64::consts::{FRAC_PI_3, PI, TAU};

use super::domain::{full_turn, Blueprint};
use super::triangle::fine_angle;
use super::{DomainKind, FuchsianError, FundamentalDomain, Signature};
use crate::geometry::precise::{Dd, DdComplex, DdMobius};

pub fn build_hexagon(sig: Signature) -> Result<FundamentalDomain, FuchsianError> {
    let [m1, m2, m3] = sig.orders();
    let half_angles = [PI / m1 as f64, FRAC_PI_3, PI / m2 as f64, FRAC_PI_3, PI / m3 as f64, FRAC_PI_3];
    let central = |d: f64| -> f64 {
        half_angles.iter().map(|a| 2.0 * (a.cos() / d.cosh()).clamp(-1.0, 1.0).asin()).sum()
    };
    // central(0) > 2π because Σ half-angles < 2π; central decreases to 0.
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while central(hi) > TAU {
        hi *= 2.0;
        if hi > 64.0 {
            return Err(FuchsianError::ConstructionFailed("no inradius closes the hexagon".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if central(mid) > TAU {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let d = 0.5 * (lo + hi);

    // Refine C = cosh D in double-double. With s_k = cos α_k / C the half
    // central angles are β_k = asin s_k, and the hexagon closes when
    // Π (cos β_k + i s_k)^2 = 1; near the root the imaginary part of that
    // product is the angle defect.
    let fine = [m1, 3, m2, 3, m3, 3].map(fine_angle);
    let betas = |c: Dd| -> Vec<DdComplex> {
        fine.iter()
            .map(|&(_, cos)| {
                let s = cos / c;
                DdComplex::unit(s, (Dd::ONE - s.sqr()).sqrt())
            })
            .collect()
    };
    let defect = |c: Dd| betas(c).iter().fold(DdComplex::ONE, |acc, &w| acc * w * w).im;
    let mut c0 = Dd::new(d.cosh());
    let mut c1 = Dd::new(d.cosh() * (1.0 + 1e-9));
    let (mut f0, mut f1) = (defect(c0), defect(c1));
    for _ in 0..12 {
        if f1.hi == 0.0 || f1.hi == f0.hi {
            break;
        }
        let c2 = c1 - f1 * (c1 - c0) / (f1 - f0);
        (c0, f0) = (c1, f1);
        c1 = c2;
        f1 = defect(c1);
        if (c1 - c0).abs().hi < 1e-31 * c1.hi {
            break;
        }
    }
    let cosh_d = c1;
    let sinh_d = (cosh_d.sqr() - Dd::ONE).sqrt();

    let beta = betas(cosh_d);
    let mut phase = DdComplex::ONE;
    let mut vertices = Vec::with_capacity(6);
    for (k, &(sin_a, _)) in fine.iter().enumerate() {
        if k > 0 {
            phase = phase * beta[k - 1] * beta[k];
        }
        // sinh D = sinh h · sin α for the distance h from the centre to the vertex
        let sinh_h = sinh_d / sin_a;
        let cosh_h = (Dd::ONE + sinh_h.sqr()).sqrt();
        vertices.push(phase.scale(sinh_h / (Dd::ONE + cosh_h)));
    }

    let turn = |m: u32, ccw: bool| {
        let (s, c) = fine_angle(m);
        DdComplex::unit(if ccw { s } else { -s }, c)
    };
    let u1 = DdMobius::rotation_about(vertices[0], turn(m1, true));
    let u2 = DdMobius::rotation_about(vertices[2], turn(m2, true));
    // U3 carries a2 (before v3) to a3 (after v3), so it turns clockwise.
    let u3 = DdMobius::rotation_about(vertices[4], turn(m3, false));
    let expected = [Some(full_turn(m1)), None, Some(full_turn(m2)), None, Some(full_turn(m3)), None];
    let dom = FundamentalDomain::assemble(Blueprint {
        kind: DomainKind::Hexagonal,
        signature: sig,
        vertices,
        labels: &["v1", "a1", "v2", "a2", "v3", "a3"],
        generators: vec![("U1", u1), ("U2", u2), ("U3", u3)],
        pairings: &[(0, 5, 1), (5, 0, -1), (2, 1, 2), (1, 2, -2), (3, 4, 3), (4, 3, -3)],
        expected_angles: &expected,
    })?;
    let [u1, u2, u3] = [0, 1, 2].map(|i| dom.generators[i].element);
    let sum = dom.accidental_angle_sum().unwrap_or(0.0);
    if (sum - TAU).abs() > 1e-8 {
        return Err(FuchsianError::ConstructionFailed(format!("accidental angle sum {sum} is not 2π")));
    }
    let a = &dom.vertices;
    let checks = [(u1, a[1], a[5]), (u2, a[3], a[1]), (u3, a[3], a[5])];
    for (g, from, to) in checks {
        if g.apply(from).dist(to) > 1e-8 {
            return Err(FuchsianError::ConstructionFailed("accidental vertices are not paired".into()));
        }
    }
    Ok(dom)
}
