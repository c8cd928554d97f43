//! Automatic choice of the tube width, including the obstructed case.

use hypercut::cutproject::find_rho;
use hypercut::fuchsian::{build_domain, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for ((a, b, c), kind) in [((6, 6, 3), DomainKind::Hexagonal), ((3, 3, 4), DomainKind::Quadrilateral), ((4, 4, 4), DomainKind::Quadrilateral)] {
        let d = build_domain(Signature::new(a, b, c)?, kind)?;
        match find_rho(&d, 8, 0) {
            Ok(rep) => {
                println!("({a},{b},{c}) {kind}: rho {:.6} = {:.2} of the inradius", rep.rho, rep.rho / rep.inradius);
                for t in rep.trials.iter().take(3) {
                    println!("  tried {:.2}: {} sampled geodesics hit", t.fraction, t.hits);
                }
            }
            Err(e) => println!("({a},{b},{c}) {kind}: {e}"),
        }
    }
    Ok(())
}
