//! Gap statistics, the separation bound and the tile-length set as the window grows.

use hypercut::cutproject::{cut_project, delone_stats, find_rho, geodesic_sampler, tile_lengths, TubeSpec};
use hypercut::fuchsian::{build_domain, injectivity_radius, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = build_domain(Signature::new(6, 6, 3)?, DomainKind::Hexagonal)?;
    let rho = find_rho(&d, 8, 0)?.rho;
    let inj = injectivity_radius(&d, d.center)?;
    let tube = TubeSpec::new(geodesic_sampler(&d, 0), rho)?;
    for half in [5.0, 10.0, 20.0, 40.0] {
        let s = cut_project(&d, d.center, &tube, (-half, half), 1.0)?;
        let rep = delone_stats(&s, inj, rho)?;
        let lengths = tile_lengths(&s, 1e-7)?;
        println!(
            "[-{half}, {half}]: {} points, gaps {:.4}..{:.4} (bound {:.4}), {} distinct tile lengths",
            rep.count,
            rep.min_gap,
            rep.max_gap,
            rep.separation_bound,
            lengths.len()
        );
    }
    Ok(())
}
