//! Distances, isometries and Fermi coordinates in the Poincaré disc.

use hypercut::geometry::{dist, DiscPoint, Geodesic, Mobius};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let half = DiscPoint::new(0.5, 0.0)?;
    println!("d(0, 0.5) = {:.15} (ln 3 = {:.15})", dist(DiscPoint::ORIGIN, half), 3f64.ln());

    let g = Mobius::origin_to(DiscPoint::new(0.2, 0.3)?).compose(&Mobius::rotation(0.7));
    let (z, w) = (DiscPoint::new(-0.4, 0.1)?, DiscPoint::new(0.6, -0.2)?);
    println!("d(z, w) = {:.12}, d(gz, gw) = {:.12}", dist(z, w), dist(g.apply(z), g.apply(w)));

    let k = Geodesic::between(Complex64::new(0.0, -1.0), Complex64::from_polar(1.0, 0.4))?;
    let (t, s) = k.fermi(z);
    println!("fermi(z) = ({t:.6}, {s:.6}); back to z: {:.2e}", dist(k.fermi_point(t, s), z));

    let h = Mobius::translation_real(1.3).compose(&Mobius::rotation(0.2));
    println!("{:?} element, trace {:.6}", h.classify(), h.trace());
    if let Ok(axis) = Geodesic::axis(&h) {
        println!("axis from {:.4} to {:.4}, length {:.6}", axis.xi_minus, axis.xi_plus, h.translation_length()?);
    }
    Ok(())
}
