//! The shortest closed geodesics, read off from short words.

use hypercut::fuchsian::{build_domain, length_spectrum, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = build_domain(Signature::new(3, 3, 4)?, DomainKind::Quadrilateral)?;
    for e in length_spectrum(&d, 8)?.iter().take(10) {
        println!("{:.9}  {}  (trace {:+.6})", e.length, e.word, e.element.trace());
    }
    Ok(())
}
