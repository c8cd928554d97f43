//! The acceptance suite. Runs without the libtest harness so each criterion
//! prints a single PASS/FAIL line with its runtime and budget.

mod common;

use std::f64::consts::TAU;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use hypercut::cutproject::*;
use hypercut::fuchsian::*;
use hypercut::geometry::{dist, DiscPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

const KINDS: [DomainKind; 2] = [DomainKind::Quadrilateral, DomainKind::Hexagonal];

fn geometry_exactness() -> Outcome {
    let d = dist(DiscPoint::ORIGIN, DiscPoint::new(0.5, 0.0).unwrap());
    ensure((d - 3f64.ln()).abs() < 1e-8, || format!("dist(0, 0.5) = {d}"))?;
    let mut cosh: Vec<f64> = build_triangle(sig((6, 6, 3))).side_lengths.iter().map(|l| l.cosh()).collect();
    cosh.sort_by(f64::total_cmp);
    for (c, want) in cosh.iter().zip([3.0, 3.0, 5.0]) {
        ensure((c - want).abs() < 1e-8, || format!("triangle cosh values {cosh:?}"))?;
    }
    for t in BATTERY {
        let q = domain(t, DomainKind::Quadrilateral);
        let want = TAU * (1.0 - 1.0 / t.0 as f64 - 1.0 / t.1 as f64 - 1.0 / t.2 as f64);
        ensure((q.area() - want).abs() < 1e-8, || format!("{t:?}: area {} vs {want}", q.area()))?;
    }
    Ok("ln 3, {3, 3, 5}, 7 areas".into())
}

fn group_correctness() -> Outcome {
    let mut orbit_points = 0;
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            for r in relation_residuals(&d) {
                ensure(r.residual < 1e-8, || format!("{t:?} {kind} {}: {}", r.relation, r.residual))?;
            }
            let dj = disjointness_check(&d, 8, 50);
            ensure(dj.violations == 0, || format!("{t:?} {kind}: {} overlapping tile pairs", dj.violations))?;
            let cv = covering_check(&d, 3.0, 400, 11).map_err(|e| e.to_string())?;
            ensure(cv.uncovered == 0, || format!("{t:?} {kind}: {} uncovered samples", cv.uncovered))?;
            let (brute, _) = brute_orbit(&d, d.center, 6.0);
            let fast: Vec<DiscPoint> =
                enumerate_orbit(&d, d.center, 6.0).map_err(|e| e.to_string())?.iter().map(|r| r.image).collect();
            ensure(same_point_sets(&brute, &fast, 1e-7), || {
                format!("{t:?} {kind}: brute {} vs enumerated {}", brute.len(), fast.len())
            })?;
            orbit_points += fast.len();
        }
    }
    Ok(format!("14 domains, {orbit_points} orbit points at R = 6"))
}

fn incenter_injectivity() -> Outcome {
    let mut worst: f64 = 0.0;
    for t in BATTERY {
        for kind in KINDS {
            let d = domain(t, kind);
            let inj = injectivity_radius(&d, d.center).map_err(|e| e.to_string())?;
            let gap = (inj - d.inradius).abs();
            ensure(gap < 1e-6, || format!("{t:?} {kind}: inradius {} vs inj {inj}", d.inradius))?;
            worst = worst.max(gap);
        }
    }
    Ok(format!("worst gap {worst:.1e}"))
}

fn parity_reproduction() -> Outcome {
    let expected = |t: (u32, u32, u32)| match t {
        (4, 4, 4) | (6, 6, 3) | (3, 4, 4) => ChaosVerdict::NotChaotic,
        _ => ChaosVerdict::Chaotic,
    };
    for t in BATTERY {
        let quad = domain(t, DomainKind::Quadrilateral);
        let verdict = chaotic_certificate(sig(t), DomainKind::Quadrilateral);
        ensure(verdict == expected(t), || format!("{t:?}: certificate says {verdict:?}"))?;
        let mut all = true;
        for i in 0..quad.side_count() {
            all &= extended_side_hits_interior(&quad, i, 256).map_err(|e| e.to_string())?.hit;
        }
        ensure(all == (verdict == ChaosVerdict::Chaotic), || format!("{t:?}: side search disagrees"))?;
        let hex = domain(t, DomainKind::Hexagonal);
        for i in 0..hex.side_count() {
            let hit = extended_side_hits_interior(&hex, i, 256).map_err(|e| e.to_string())?.hit;
            ensure(hit, || format!("{t:?} hexagon side {i} misses"))?;
        }
    }
    Ok("7 quadrilaterals agree, 7 hexagons all-hit".into())
}

fn empty_projection() -> Outcome {
    let d = domain((4, 4, 4), DomainKind::Quadrilateral);
    for i in 0..d.side_count() {
        let tube = TubeSpec::new(d.sides[i].carrier, 0.9 * d.inradius).map_err(|e| e.to_string())?;
        let s = cut_project(&d, d.center, &tube, (-50.0, 50.0), 1.0).map_err(|e| e.to_string())?;
        ensure(s.is_empty(), || format!("side {i}: {} points", s.len()))?;
    }
    Ok("all 4 side extensions empty on [-50, 50]".into())
}

fn separation_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tightest = f64::INFINITY;
    let mut gaps = 0;
    for run in 0..20 {
        let t = BATTERY[run % BATTERY.len()];
        let d = domain(t, KINDS[run % 2]);
        let f = [0.5, 0.8, 0.95][run % 3];
        let rho = f * d.inradius;
        let inj = injectivity_radius(&d, d.center).map_err(|e| e.to_string())?;
        let k = geodesic_sampler(&d, rng.gen());
        let s = cut_project(&d, d.center, &TubeSpec::new(k, rho).map_err(|e| e.to_string())?, (-10.0, 10.0), 1.0)
            .map_err(|e| e.to_string())?;
        if s.len() < 2 {
            continue;
        }
        let rep = delone_stats(&s, inj, rho).map_err(|e| e.to_string())?;
        let bound = 2.0 * (inj - rho);
        ensure(rep.min_gap >= bound - 1e-6, || format!("run {run} {t:?}: gap {} < {bound}", rep.min_gap))?;
        tightest = tightest.min(rep.min_gap - bound);
        gaps += s.len() - 1;
    }
    ensure(gaps > 0, || "no run produced two points".into())?;
    Ok(format!("{gaps} gaps, smallest slack {tightest:.3}"))
}

fn equivariance() -> Outcome {
    let d = hex663();
    let rho = 0.85 * d.inradius;
    let ell = geodesic_sampler(&d, 9);
    let base = cut_project(&d, d.center, &TubeSpec::new(ell, rho).unwrap(), (-14.0, 14.0), 1.0)
        .map_err(|e| e.to_string())?;
    let moves = d.moves();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let len = rng.gen_range(1..=4);
        let letters: Vec<i32> = (0..len).map(|_| moves[rng.gen_range(0..moves.len())].0).collect();
        let word = Word(letters);
        let gamma = d.word_element(&word).map_err(|e| e.to_string())?;
        let a: f64 = rng.gen_range(-3.0..3.0);
        let moved_geo = ell.image(&gamma).rebased(a);
        let moved = cut_project(&d, d.center, &TubeSpec::new(moved_geo, rho).unwrap(), (-10.0, 10.0), 1.0)
            .map_err(|e| e.to_string())?;
        let expected: Vec<f64> = base.restricted(a - 10.0, a + 10.0).iter().map(|p| p - a).collect();
        let err = max_mismatch(&moved.points, &expected)
            .ok_or_else(|| format!("{word}: {} vs {} points", moved.len(), expected.len()))?;
        ensure(err < 1e-8, || format!("{word}: mismatch {err}"))?;
        worst = worst.max(err);
    }
    Ok(format!("worst mismatch {worst:.1e}"))
}

fn periodicity_and_nr() -> Outcome {
    let d = hex663();
    let rho = find_rho(&d, 8, 0).map_err(|e| e.to_string())?.rho;
    let shortest = length_spectrum(&d, 6).map_err(|e| e.to_string())?.remove(0);
    let r = periodic_reference_word(&d, d.center, &shortest.word, rho, (-12.0, 12.0), 1.0)
        .map_err(|e| e.to_string())?;
    let from_trace = 2.0 * (shortest.element.trace().abs() / 2.0).acosh();
    ensure((r.period - from_trace).abs() < 1e-9, || format!("period {} vs {from_trace}", r.period))?;
    ensure(r.shift_mismatch < 1e-7, || format!("shifted-set mismatch {}", r.shift_mismatch))?;
    let ell = geodesic_sampler(&d, 0);
    let s = cut_project(&d, d.center, &TubeSpec::new(ell, rho).unwrap(), (-12.0, 12.0), 1.0)
        .map_err(|e| e.to_string())?;
    for radius in [1.0, 2.0, 5.0] {
        let sh = shadow_reference(&d, d.center, &ell, radius, rho, 1.0).map_err(|e| e.to_string())?;
        let aligned = sh.reference.set.shifted(sh.shift);
        ensure(nr_test(&s.points, &aligned.points, radius), || format!("N_r fails at r = {radius}"))?;
    }
    Ok(format!("period {:.6}, mismatch {:.1e}, r = 1, 2, 5", r.period, r.shift_mismatch))
}

fn tile_length_growth() -> Outcome {
    let d = hex663();
    let rho = find_rho(&d, 8, 0).map_err(|e| e.to_string())?.rho;
    let tube = TubeSpec::new(geodesic_sampler(&d, 0), rho).unwrap();
    let count = |w: (f64, f64)| -> Result<usize, String> {
        let s = cut_project(&d, d.center, &tube, w, 1.0).map_err(|e| e.to_string())?;
        Ok(tile_lengths(&s, 1e-7).map_err(|e| e.to_string())?.len())
    };
    let (small, large) = (count((-10.0, 10.0))?, count((-40.0, 40.0))?);
    ensure(large > small, || format!("{large} distinct at [-40, 40] vs {small} at [-10, 10]"))?;
    Ok(format!("{small} -> {large} distinct lengths"))
}

fn determinism() -> Outcome {
    let dirs = [tempfile::TempDir::new().unwrap(), tempfile::TempDir::new().unwrap()];
    for cmd in ["generate", "check", "spectrum", "render"] {
        for dir in &dirs {
            let out = Command::new(env!("CARGO_BIN_EXE_hypercut"))
                .args([cmd, "--seed", "7", "--window", "-8,8", "--out", dir.path().to_str().unwrap()])
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("{cmd}: {}", String::from_utf8_lossy(&out.stderr)))?;
        }
    }
    let mut names: Vec<_> = std::fs::read_dir(dirs[0].path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    for n in &names {
        let a = std::fs::read(dirs[0].path().join(n)).unwrap();
        let b = std::fs::read(dirs[1].path().join(n)).unwrap();
        ensure(a == b, || format!("{n:?} differs between runs"))?;
    }
    let listed: Vec<String> = names.iter().map(|n| n.to_string_lossy().into_owned()).collect();
    Ok(listed.join(", "))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("geometry exactness", 1, geometry_exactness),
        ("group correctness", 60, group_correctness),
        ("incenter and injectivity radius", 30, incenter_injectivity),
        ("parity certificate vs side search", 120, parity_reproduction),
        ("empty projection for (4,4,4)", 30, empty_projection),
        ("separation bound", 120, separation_bound),
        ("equivariance", 60, equivariance),
        ("periodicity and N_r evidence", 120, periodicity_and_nr),
        ("tile-length growth", 120, tile_length_growth),
        ("determinism", 30, determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > Duration::from_secs(budget) => Err(format!("over budget ({detail})")),
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        println!("{tag} {:>2} {name} ({:.2}s of {budget}s): {detail}", i + 1, took.as_secs_f64());
        failed += usize::from(outcome.is_err());
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
