//! Writes `render.svg`: tiles, the domain, a geodesic with its tube, and the projected points.

use hypercut::cli::svg::{render_svg, Scene};
use hypercut::cli::SvgOptions;
use hypercut::cutproject::{geodesic_sampler, tube_records, TubeSpec};
use hypercut::fuchsian::{build_domain, enumerate_orbit, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = build_domain(Signature::new(6, 6, 3)?, DomainKind::Hexagonal)?;
    let k = geodesic_sampler(&d, 1);
    let rho = 0.9 * d.inradius;
    let opts = SvgOptions::default();
    let tiles = enumerate_orbit(&d, d.center, opts.tile_radius)?.into_iter().map(|r| r.mobius).collect();
    let feet = tube_records(&d, d.center, &TubeSpec::new(k, rho)?, (-6.0, 6.0), 1.0)?
        .into_iter()
        .map(|(r, _)| (r.t, r.s))
        .collect();
    let scene = Scene { dom: &d, x: d.center, tiles, geodesic: k, rho, feet };
    std::fs::write("render.svg", render_svg(&scene, &opts))?;
    println!("wrote render.svg");
    Ok(())
}
