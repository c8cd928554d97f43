use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DomainKind, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChaosVerdict {
    Chaotic,
    NotChaotic,
}

impl fmt::Display for ChaosVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChaosVerdict::Chaotic => "Chaotic",
            ChaosVerdict::NotChaotic => "NotChaotic",
        })
    }
}

/// Parity rule: a quadrilateral domain yields chaotic Delone sets iff at least
/// two orders are odd; a hexagonal domain always does.
pub fn chaotic_certificate(sig: Signature, kind: DomainKind) -> ChaosVerdict {
    match kind {
        DomainKind::Hexagonal => ChaosVerdict::Chaotic,
        DomainKind::Quadrilateral if sig.odd_count() >= 2 => ChaosVerdict::Chaotic,
        DomainKind::Quadrilateral => ChaosVerdict::NotChaotic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity() {
        let s = |a, b, c| Signature::new(a, b, c).unwrap();
        assert_eq!(chaotic_certificate(s(6, 6, 3), DomainKind::Quadrilateral), ChaosVerdict::NotChaotic);
        assert_eq!(chaotic_certificate(s(3, 3, 4), DomainKind::Quadrilateral), ChaosVerdict::Chaotic);
        assert_eq!(chaotic_certificate(s(6, 6, 3), DomainKind::Hexagonal), ChaosVerdict::Chaotic);
    }
}
