//! Orbit of the incentre in growing balls, and the injectivity radius there.

use hypercut::fuchsian::{build_domain, enumerate_orbit, injectivity_radius, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = build_domain(Signature::new(6, 6, 3)?, DomainKind::Hexagonal)?;
    for r in [2.0, 4.0, 6.0, 8.0] {
        let ball = enumerate_orbit(&d, d.center, r)?;
        let longest = ball.iter().map(|rec| rec.word.len()).max().unwrap_or(0);
        // area of the ball divided by the area of a tile
        let expected = std::f64::consts::TAU * (r.cosh() - 1.0) / d.area();
        println!("R = {r}: {} points (area estimate {expected:.0}), longest word {longest}", ball.len());
    }
    println!("inj = {:.9}, inradius = {:.9}", injectivity_radius(&d, d.center)?, d.inradius);
    Ok(())
}
