//! A point set from a sampled geodesic, and its one-sided tube records.

use hypercut::cutproject::{cut_project, geodesic_sampler, tube_records, TubeSpec};
use hypercut::fuchsian::{build_domain, DomainKind, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = build_domain(Signature::new(6, 6, 3)?, DomainKind::Hexagonal)?;
    let k = geodesic_sampler(&d, 0);
    let tube = TubeSpec::new(k, 0.9 * d.inradius)?;
    let s = cut_project(&d, d.center, &tube, (-10.0, 10.0), 1.0)?;
    println!("{} points on [-10, 10]", s.len());
    for p in &s.points {
        println!("  {p:+.12}");
    }
    for (rec, m) in tube_records(&d, d.center, &tube, (-3.0, 3.0), 1.0)? {
        println!("t {:+.6} s {:+.6} {m:?} via {}", rec.t, rec.s, rec.word);
    }
    Ok(())
}
