mod common;

use std::f64::consts::{PI, TAU};

use common::*;
use hypercut::fuchsian::*;
use hypercut::geometry::{dist, DiscPoint};

const KINDS: [DomainKind; 2] = [DomainKind::Quadrilateral, DomainKind::Hexagonal];

#[test]
fn six_six_three_triangle_sides() {
    let t = build_triangle(sig((6, 6, 3)));
    let mut cosh: Vec<f64> = t.side_lengths.iter().map(|l| l.cosh()).collect();
    cosh.sort_by(f64::total_cmp);
    // law of cosines with angles π/6, π/6, π/3
    let (s6, c6, c3) = ((PI / 6.0).sin(), (PI / 6.0).cos(), (PI / 3.0).cos());
    let long = (c6 * c6 + c3) / (s6 * s6);
    let short = (c6 * c3 + c6) / (s6 * (PI / 3.0).sin());
    assert!((long - 5.0).abs() < 1e-12 && (short - 3.0).abs() < 1e-12);
    for (got, want) in cosh.iter().zip([short, short, long]) {
        assert!((got - want).abs() < 1e-8);
    }
}

#[test]
fn gauss_bonnet_area_for_both_kinds() {
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            let defect = (d.side_count() as f64 - 2.0) * PI - d.internal_angles.iter().sum::<f64>();
            let expected = TAU * (1.0 - 1.0 / t.0 as f64 - 1.0 / t.1 as f64 - 1.0 / t.2 as f64);
            assert!((defect - expected).abs() < 1e-8, "{t:?} {kind}");
            assert!((d.area() - expected).abs() < 1e-8);
        }
    }
}

#[test]
fn quadrilateral_angles_in_cyclic_order() {
    for t in BATTERY {
        let d = domain(t, DomainKind::Quadrilateral);
        let (m1, m2, m3) = (t.0 as f64, t.1 as f64, t.2 as f64);
        let want = [PI / m3, TAU / m2, PI / m3, TAU / m1];
        for (a, w) in d.internal_angles.iter().zip(want) {
            assert!((a - w).abs() < 1e-8, "{t:?}: {:?}", d.internal_angles);
        }
    }
}

#[test]
fn hexagon_accidental_cycle() {
    for t in BATTERY {
        let d = domain(t, DomainKind::Hexagonal);
        assert!((d.accidental_angle_sum().unwrap() - TAU).abs() < 1e-8);
        let [u1, u2, u3] = [0, 1, 2].map(|i| d.generators[i].element);
        let a = &d.vertices;
        assert!(dist(u1.apply(a[1]), a[5]) < 1e-8);
        assert!(dist(u2.apply(a[3]), a[1]) < 1e-8);
        assert!(dist(u3.apply(a[3]), a[5]) < 1e-8);
    }
}

#[test]
fn incentre_is_equidistant_from_every_side() {
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            for s in &d.sides {
                let r = s.carrier.signed_distance(d.center).abs();
                assert!((r - d.inradius).abs() < 1e-6, "{t:?} {kind}");
            }
        }
    }
}

#[test]
fn presentation_relations_hold() {
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            let checks = relation_residuals(&d);
            assert!(checks.len() >= 3);
            for c in checks {
                assert!(c.residual < 1e-8, "{t:?} {kind} {}: {}", c.relation, c.residual);
            }
        }
    }
}

#[test]
fn tiles_are_disjoint_and_cover_radius_three() {
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            let dj = disjointness_check(&d, 8, 50);
            assert_eq!(dj.violations, 0, "{t:?} {kind}");
            let cv = covering_check(&d, 3.0, 400, 11).unwrap();
            assert_eq!(cv.uncovered, 0, "{t:?} {kind}");
        }
    }
}

#[test]
fn orbit_ball_matches_brute_force_words() {
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            let (brute, _) = brute_orbit(&d, d.center, 6.0);
            let fast: Vec<DiscPoint> = enumerate_orbit(&d, d.center, 6.0).unwrap().iter().map(|r| r.image).collect();
            assert!(same_point_sets(&brute, &fast, 1e-7), "{t:?} {kind}: {} vs {}", brute.len(), fast.len());
        }
    }
}

#[test]
fn injectivity_radius_is_half_the_closest_pair() {
    for t in [(6, 6, 3), (3, 3, 4), (4, 4, 4)] {
        for kind in KINDS {
            let d = domain(t, kind);
            let (pts, _) = brute_orbit(&d, d.center, 2.5);
            let mut best = f64::INFINITY;
            for (i, a) in pts.iter().enumerate() {
                for b in &pts[i + 1..] {
                    best = best.min(dist(*a, *b));
                }
            }
            let inj = injectivity_radius(&d, d.center).unwrap();
            assert!((inj - best / 2.0).abs() < 1e-9, "{t:?} {kind}");
            assert!((inj - d.inradius).abs() < 1e-6, "{t:?} {kind}");
        }
    }
}

#[test]
fn side_walks_agree_with_parity() {
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            let hits: Vec<bool> =
                (0..d.side_count()).map(|i| extended_side_hits_interior(&d, i, 256).unwrap().hit).collect();
            let all = hits.iter().all(|h| *h);
            let verdict = chaotic_certificate(sig(t), kind);
            assert_eq!(all, verdict == ChaosVerdict::Chaotic, "{t:?} {kind}: {hits:?}");
            if kind == DomainKind::Hexagonal {
                assert!(all);
            }
        }
    }
    for t in [(4, 4, 4), (6, 6, 3), (3, 4, 4)] {
        assert_eq!(chaotic_certificate(sig(t), DomainKind::Quadrilateral), ChaosVerdict::NotChaotic);
    }
    for t in [(3, 3, 4), (3, 3, 5), (5, 5, 5), (3, 5, 5)] {
        assert_eq!(chaotic_certificate(sig(t), DomainKind::Quadrilateral), ChaosVerdict::Chaotic);
    }
}

#[test]
fn shortest_length_is_stable_in_word_length() {
    let d = domain((6, 6, 3), DomainKind::Quadrilateral);
    let at8 = length_spectrum(&d, 8).unwrap();
    let at10 = length_spectrum(&d, 10).unwrap();
    assert!((at8[0].length - at10[0].length).abs() < 1e-9);
    for e in at8.iter().take(5) {
        let tr = e.element.trace().abs();
        assert!((e.length - 2.0 * (tr / 2.0).acosh()).abs() < 1e-9);
    }
    assert!(matches!(length_spectrum(&d, 11), Err(FuchsianError::WordTooLong { .. })));
}

#[test]
fn rejected_signatures() {
    assert!(Signature::new(2, 3, 7).is_err());
    assert!(Signature::new(3, 3, 3).is_err());
    assert!(Signature::new(3, 3, 4).is_ok());
}
