use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FuchsianError;

/// Signature `(m1, m2, m3)` of a cocompact triangle group.
///
/// Orders equal to 2 are rejected: an order-two rotation is its own inverse,
/// which breaks the side-pairing assumptions the cut-and-project theory uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u32; 3]", into = "[u32; 3]")]
pub struct Signature {
    m1: u32,
    m2: u32,
    m3: u32,
}

impl Signature {
    pub fn new(m1: u32, m2: u32, m3: u32) -> Result<Self, FuchsianError> {
        for (i, m) in [m1, m2, m3].into_iter().enumerate() {
            if m < 3 {
                return Err(FuchsianError::InvalidSignature(format!(
                    "m{} = {m}: every order must satisfy m_i >= 3",
                    i + 1
                )));
            }
        }
        let s = 1.0 / m1 as f64 + 1.0 / m2 as f64 + 1.0 / m3 as f64;
        if s >= 1.0 {
            return Err(FuchsianError::InvalidSignature(format!(
                "({m1},{m2},{m3}) is not hyperbolic: 1/m1 + 1/m2 + 1/m3 = {s:.6} >= 1"
            )));
        }
        Ok(Signature { m1, m2, m3 })
    }

    pub fn m1(&self) -> u32 {
        self.m1
    }
    pub fn m2(&self) -> u32 {
        self.m2
    }
    pub fn m3(&self) -> u32 {
        self.m3
    }

    pub fn orders(&self) -> [u32; 3] {
        [self.m1, self.m2, self.m3]
    }

    /// Orbifold area `2π(1 - 1/m1 - 1/m2 - 1/m3)`.
    pub fn area(&self) -> f64 {
        let s: f64 = self.orders().iter().map(|&m| 1.0 / m as f64).sum();
        std::f64::consts::TAU * (1.0 - s)
    }

    pub fn odd_count(&self) -> usize {
        self.orders().iter().filter(|&&m| m % 2 == 1).count()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m1, self.m2, self.m3)
    }
}

impl FromStr for Signature {
    type Err = FuchsianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(str::trim)
            .collect();
        if parts.len() != 3 {
            return Err(FuchsianError::InvalidSignature(format!("expected m1,m2,m3, got {s:?}")));
        }
        let mut m = [0u32; 3];
        for (slot, p) in m.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| FuchsianError::InvalidSignature(format!("not an integer: {p:?}")))?;
        }
        Signature::new(m[0], m[1], m[2])
    }
}

impl TryFrom<[u32; 3]> for Signature {
    type Error = FuchsianError;
    fn try_from(m: [u32; 3]) -> Result<Self, Self::Error> {
        Signature::new(m[0], m[1], m[2])
    }
}

impl From<Signature> for [u32; 3] {
    fn from(s: Signature) -> Self {
        s.orders()
    }
}
