mod common;

use common::*;
use hypercut::cutproject::*;
use hypercut::fuchsian::*;
use hypercut::geometry::{dist, DiscPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn set(dom: &FundamentalDomain, tube: &TubeSpec, window: (f64, f64), depth: f64) -> CutProjectSet {
    cut_project(dom, dom.center, tube, window, depth).unwrap()
}

#[test]
fn window_matches_filtered_orbit_ball() {
    let dom = hex663();
    let rho = 0.9 * dom.inradius;
    let mut checked = 0;
    for seed in 0..6 {
        let k = geodesic_sampler(&dom, seed);
        let tube = TubeSpec::new(k, rho).unwrap();
        let window = (-8.0, 8.0);
        let radius = ball_radius_for(&k, rho, window);
        if radius > 10.5 {
            continue;
        }
        let fast = set(&dom, &tube, window, 1.0);
        let oracle = ball_oracle(&dom, &tube, window, radius);
        let err = max_mismatch(&fast.points, &oracle).unwrap_or_else(|| panic!("seed {seed}: counts differ"));
        assert!(err < 1e-9, "seed {seed}: {err}");
        checked += 1;
    }
    assert!(checked >= 3, "only {checked} seeds fit inside the oracle ball");
}

#[test]
fn points_are_sorted_and_inside_the_window() {
    let dom = hex663();
    let tube = TubeSpec::new(geodesic_sampler(&dom, 4), 0.8 * dom.inradius).unwrap();
    let s = set(&dom, &tube, (-15.0, 12.0), 1.0);
    assert!(s.points.windows(2).all(|w| w[0] < w[1]));
    assert!(s.points.iter().all(|p| (-15.0..=12.0).contains(p)));
}

#[test]
fn equivariance_under_group_elements() {
    let dom = hex663();
    let rho = 0.85 * dom.inradius;
    let ell = geodesic_sampler(&dom, 9);
    let moves = dom.moves();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let base = set(&dom, &TubeSpec::new(ell, rho).unwrap(), (-14.0, 14.0), 1.0);
    for _ in 0..5 {
        let len = rng.gen_range(1..=4);
        let letters: Vec<i32> = (0..len).map(|_| moves[rng.gen_range(0..moves.len())].0).collect();
        let gamma = dom.word_element(&Word(letters)).unwrap();
        let a: f64 = rng.gen_range(-3.0..3.0);
        // t(0) = γ(ℓ(a))
        let t = ell.image(&gamma).rebased(a);
        let moved = set(&dom, &TubeSpec::new(t, rho).unwrap(), (-10.0, 10.0), 1.0);
        let expected: Vec<f64> = base.restricted(a - 10.0, a + 10.0).iter().map(|p| p - a).collect();
        let err = max_mismatch(&moved.points, &expected).expect("counts differ");
        assert!(err < 1e-8, "{err}");
    }
}

#[test]
fn deeper_bands_change_nothing() {
    let dom = hex663();
    for seed in [1, 2] {
        let tube = TubeSpec::new(geodesic_sampler(&dom, seed), 0.9 * dom.inradius).unwrap();
        let a = set(&dom, &tube, (-12.0, 12.0), 1.0);
        let b = set(&dom, &tube, (-12.0, 12.0), 3.0);
        assert!(max_mismatch(&a.points, &b.points).unwrap() < 1e-9);
    }
}

#[test]
fn shallow_band_is_refused() {
    let dom = hex663();
    let tube = TubeSpec::new(geodesic_sampler(&dom, 0), 0.6).unwrap();
    let err = cut_project(&dom, dom.center, &tube, (-5.0, 5.0), 0.5).unwrap_err();
    assert!(matches!(err, CutProjectError::InsufficientDepth { .. }));
}

#[test]
fn windows_past_the_precision_horizon_are_refused() {
    let dom = hex663();
    let tube = TubeSpec::new(geodesic_sampler(&dom, 0), 0.6).unwrap();
    let err = cut_project(&dom, dom.center, &tube, (-60.0, 0.0), 1.0).unwrap_err();
    assert!(matches!(err, CutProjectError::BeyondHorizon { .. }));
}

#[test]
fn wider_tubes_contain_narrower_ones() {
    let dom = hex663();
    let k = geodesic_sampler(&dom, 7);
    let mu = dom.inradius;
    let mut prev: Vec<f64> = Vec::new();
    for f in [0.3, 0.5, 0.7, 0.9, 0.99] {
        let s = set(&dom, &TubeSpec::new(k, f * mu).unwrap(), (-15.0, 15.0), 1.0);
        for p in &prev {
            assert!(s.points.iter().any(|q| (p - q).abs() < 1e-9), "{p} lost at {f}");
        }
        prev = s.points;
    }
}

#[test]
fn reversal_swaps_only_the_tangent_points() {
    let dom = hex663();
    // Side carriers are tangent to the incircle, so orbit points sit on both tube boundaries when ρ = inradius.
    let k = dom.sides[0].carrier;
    let rho = dom.inradius;
    let window = (-8.0, 8.0);
    let fwd = tube_records(&dom, dom.center, &TubeSpec::new(k, rho).unwrap(), window, 1.0).unwrap();
    let back = tube_records(&dom, dom.center, &TubeSpec::new(k.reversed(), rho).unwrap(), window, 1.0).unwrap();
    let image = |k: &hypercut::geometry::Geodesic, r: &TubeRecord| r.element(k).apply(dom.center);
    let kb = k.reversed();
    let split = |recs: &[(TubeRecord, Membership)], sign: f64| {
        let mut inside: Vec<f64> = recs.iter().filter(|(_, m)| *m == Membership::Inside).map(|(r, _)| sign * r.t).collect();
        inside.sort_by(f64::total_cmp);
        inside
    };
    let edge = |recs: &[(TubeRecord, Membership)], k: &hypercut::geometry::Geodesic| -> Vec<DiscPoint> {
        recs.iter().filter(|(_, m)| *m == Membership::PositiveBoundary).map(|(r, _)| image(k, r)).collect()
    };
    assert!(max_mismatch(&split(&fwd, 1.0), &split(&back, -1.0)).unwrap() < 1e-9);
    let (edge_f, edge_b) = (edge(&fwd, &k), edge(&back, &kb));
    assert!(!edge_f.is_empty() && !edge_b.is_empty());
    for p in &edge_f {
        assert!((k.signed_distance(*p) - rho).abs() < 1e-8);
        assert!(edge_b.iter().all(|q| dist(*p, *q) > 1e-6), "tangent point kept by both orientations");
    }
}

#[test]
fn side_extension_tube_is_empty_for_four_four_four() {
    let dom = domain((4, 4, 4), DomainKind::Quadrilateral);
    for side in 0..dom.side_count() {
        let tube = TubeSpec::new(dom.sides[side].carrier, 0.9 * dom.inradius).unwrap();
        let s = set(&dom, &tube, (-50.0, 50.0), 1.0);
        assert!(s.is_empty(), "side {side}: {:?}", &s.points[..s.len().min(4)]);
    }
}

#[test]
fn separation_bound_holds_across_the_battery() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for t in BATTERY {
        let dom = domain(t, DomainKind::Hexagonal);
        let inj = injectivity_radius(&dom, dom.center).unwrap();
        for f in [0.5, 0.8, 0.95] {
            let k = geodesic_sampler(&dom, rng.gen());
            let s = set(&dom, &TubeSpec::new(k, f * dom.inradius).unwrap(), (-10.0, 10.0), 1.0);
            if s.len() < 2 {
                continue;
            }
            let rep = delone_stats(&s, inj, f * dom.inradius).unwrap();
            assert!(rep.min_gap >= rep.separation_bound - 1e-6, "{t:?} {f}: {rep:?}");
            assert!(rep.min_gap <= rep.max_gap);
        }
    }
}

#[test]
fn periodic_reference_along_the_shortest_axis() {
    let dom = hex663();
    let rho = 0.9 * dom.inradius;
    let shortest = &length_spectrum(&dom, 6).unwrap()[0];
    let g = shortest.element;
    let r = periodic_reference(&dom, dom.center, &g, rho, (-12.0, 12.0), 1.0).unwrap();
    assert!((r.period - 2.0 * (g.trace().abs() / 2.0).acosh()).abs() < 1e-9);
    assert!(r.shift_mismatch < 1e-7);
    // every point p with p + period in the window reappears there
    let pts = &r.set.points;
    for p in pts.iter().filter(|p| **p + r.period <= 12.0) {
        assert!(pts.iter().any(|q| (q - p - r.period).abs() < 1e-7));
    }
    // the axis is invariant: g moves κ(t) to κ(t + period)
    assert!(dist(g.apply(r.axis.point(0.3)), r.axis.point(0.3 + r.period)) < 1e-8);
}

#[test]
fn shadowing_periodic_sets_are_close_on_growing_windows() {
    let dom = hex663();
    let rho = 0.9 * dom.inradius;
    let ell = geodesic_sampler(&dom, 2);
    let near = set(&dom, &TubeSpec::new(ell, rho).unwrap(), (-12.0, 12.0), 1.0);
    for r in [1.0, 2.0, 5.0] {
        let sh = shadow_reference(&dom, dom.center, &ell, r, rho, 1.0).unwrap();
        let reference = sh.reference.set.shifted(sh.shift);
        assert!(nr_test(&near.points, &reference.points, r), "r = {r}");
    }
}

#[test]
fn rho_search_refuses_obstructed_domains() {
    let quad = domain((4, 4, 4), DomainKind::Quadrilateral);
    assert!(matches!(find_rho(&quad, 4, 0), Err(CutProjectError::SideExtensionObstruction { .. })));
    let hex = hex663();
    let rep = find_rho(&hex, 4, 0).unwrap();
    assert!(rep.rho > 0.0 && rep.rho < hex.inradius);
}

#[test]
fn sampled_geodesics_cross_the_domain() {
    let dom = hex663();
    let a = geodesic_sampler(&dom, 1);
    let b = geodesic_sampler(&dom, 2);
    assert!((a.xi_minus - b.xi_minus).norm() > 1e-9 || (a.xi_plus - b.xi_plus).norm() > 1e-9);
    for seed in 0..10 {
        let k = geodesic_sampler(&dom, seed);
        assert!(dom.contains_interior(k.point(0.0), 1e-9) || dist(DiscPoint::ORIGIN, k.point(0.0)) < dom.diameter);
    }
}
