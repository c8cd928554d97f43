//! Both fundamental domains for a few triangle groups, with their relation residuals.

use hypercut::fuchsian::{build_domain, relation_residuals, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b, c) in [(6, 6, 3), (3, 3, 4), (5, 5, 5)] {
        let sig = Signature::new(a, b, c)?;
        for kind in [DomainKind::Quadrilateral, DomainKind::Hexagonal] {
            let d = build_domain(sig, kind)?;
            println!("({a},{b},{c}) {kind}: area {:.6}, inradius {:.6}, diameter {:.6}", d.area(), d.inradius, d.diameter);
            for v in &d.vertices {
                println!("  vertex {:+.6} {:+.6}i", v.re, v.im);
            }
            for r in relation_residuals(&d) {
                println!("  {} residual {:.1e}", r.relation, r.residual);
            }
        }
    }
    Ok(())
}
