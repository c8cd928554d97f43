//! The parity certificate against a walk along each extended side.

use hypercut::fuchsian::{build_domain, chaotic_certificate, extended_side_hits_interior, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b, c) in [(3, 3, 4), (4, 4, 4), (5, 5, 5), (6, 6, 3), (3, 3, 5), (3, 4, 4), (3, 5, 5)] {
        let sig = Signature::new(a, b, c)?;
        for kind in [DomainKind::Quadrilateral, DomainKind::Hexagonal] {
            let d = build_domain(sig, kind)?;
            let walks = (0..d.side_count())
                .map(|i| extended_side_hits_interior(&d, i, 256))
                .collect::<Result<Vec<_>, _>>()?;
            let marks: String = walks.iter().map(|w| if w.hit { 'h' } else { '.' }).collect();
            println!("({a},{b},{c}) {kind:<13} {:?}: sides {marks}", chaotic_certificate(sig, kind));
            if let Some(w) = walks.iter().find(|w| !w.hit) {
                println!("    side {} forward: {:?}", w.side, w.forward);
            }
        }
    }
    Ok(())
}
