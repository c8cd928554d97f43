//! The quadrilateral is the reflection triangle doubled across its side `P1 P2`.
//!
//! Labels, counterclockwise: `v1 = conj(P3)`, `v2 = P2`, `v3 = P3`, `v4 = P1 = 0`,
//! so `v4` carries the angle `2π/m1` and `v2` the angle `2π/m2`. Side `r_i` joins
//! `v_i` to `v_{i+1}` (stored with 0-based index `i - 1`).

use std::f64::consts::PI;

use super::domain::{full_turn, Blueprint};
use super::triangle::{fine_angle, fine_triangle};
use super::{DomainKind, FuchsianError, FundamentalDomain, Signature};
use crate::geometry::precise::{DdComplex, DdMobius};

pub fn build_quadrilateral(sig: Signature) -> Result<FundamentalDomain, FuchsianError> {
    let [p1, p2, p3] = fine_triangle(sig);
    let vertices = vec![p3.conj(), p2, p3, p1];

    // T1 rotates about v2 carrying v1 to v3, T3 rotates about v4 carrying v3 to v1.
    let clockwise = |m: u32| {
        let (s, c) = fine_angle(m);
        DdComplex::unit(-s, c)
    };
    let t1 = DdMobius::rotation_about(vertices[1], clockwise(sig.m2()));
    let t3 = DdMobius::rotation_about(vertices[3], clockwise(sig.m1()));
    let m3 = sig.m3() as f64;
    let expected = [
        Some(PI / m3),
        Some(full_turn(sig.m2())),
        Some(PI / m3),
        Some(full_turn(sig.m1())),
    ];
    FundamentalDomain::assemble(Blueprint {
        kind: DomainKind::Quadrilateral,
        signature: sig,
        vertices,
        labels: &["v1", "v2", "v3", "v4"],
        generators: vec![("T1", t1), ("T2", t1.inverse()), ("T3", t3), ("T4", t3.inverse())],
        pairings: &[(0, 1, 1), (1, 0, 2), (2, 3, 3), (3, 2, 4)],
        expected_angles: &expected,
    })
}
