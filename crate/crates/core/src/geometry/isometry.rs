use super::{DiscPoint, Geodesic, Mobius};

/// A possibly orientation-reversing isometry: `z ↦ g(z)` or `z ↦ g(conj z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    pub mobius: Mobius,
    pub reversing: bool,
}

fn conjugated(g: &Mobius) -> Mobius {
    // conj ∘ g ∘ conj has conjugated coefficients
    Mobius { a: g.a.conj(), b: g.b.conj() }
}

impl Isometry {
    pub fn orientation_preserving(mobius: Mobius) -> Self {
        Isometry { mobius, reversing: false }
    }

    pub fn apply(&self, z: DiscPoint) -> DiscPoint {
        let z = if self.reversing { z.conj() } else { z };
        self.mobius.apply(z)
    }

    pub fn compose(&self, other: &Isometry) -> Isometry {
        let inner = if self.reversing { conjugated(&other.mobius) } else { other.mobius };
        Isometry {
            mobius: self.mobius.compose(&inner),
            reversing: self.reversing ^ other.reversing,
        }
    }

    pub fn approx_eq(&self, other: &Isometry, tol: f64) -> bool {
        self.reversing == other.reversing && self.mobius.approx_eq(&other.mobius, tol)
    }
}

/// Reflection in the carrier of `k`.
pub fn reflect_across(k: &Geodesic) -> Isometry {
    let f = k.frame();
    Isometry { mobius: f.compose(&conjugated(&f.inverse())), reversing: true }
}
