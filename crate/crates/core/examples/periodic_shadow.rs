//! Periodic sets along closed geodesics, and one that shadows a sampled geodesic.

use hypercut::cutproject::{cut_project, find_rho, geodesic_sampler, nr_test, periodic_reference_word, shadow_reference, TubeSpec};
use hypercut::fuchsian::{build_domain, length_spectrum, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = build_domain(Signature::new(6, 6, 3)?, DomainKind::Hexagonal)?;
    let rho = find_rho(&d, 8, 0)?.rho;
    for e in length_spectrum(&d, 6)?.iter().take(3) {
        let r = periodic_reference_word(&d, d.center, &e.word, rho, (-12.0, 12.0), 1.0)?;
        println!("{}: period {:.9}, {} points, shift mismatch {:.1e}", e.word, r.period, r.set.len(), r.shift_mismatch);
    }
    let ell = geodesic_sampler(&d, 0);
    let s = cut_project(&d, d.center, &TubeSpec::new(ell, rho)?, (-12.0, 12.0), 1.0)?;
    for radius in [1.0, 2.0, 5.0] {
        let sh = shadow_reference(&d, d.center, &ell, radius, rho, 1.0)?;
        let aligned = sh.reference.set.shifted(sh.shift);
        println!(
            "r = {radius}: closing word {} (period {:.4}), N_r {}",
            sh.word,
            sh.reference.period,
            nr_test(&s.points, &aligned.points, radius)
        );
    }
    Ok(())
}
