use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FuchsianError;

/// A word in the side-pairing generators: letter `k > 0` is generator `k`
/// (1-based), `-k` its inverse. Words read left to right as a product.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn pushed(&self, letter: i32) -> Word {
        let mut w = self.0.clone();
        w.push(letter);
        Word(w)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// Letters reversed and inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Word {
    type Err = FuchsianError;

    /// Accepts letters separated by `.`, `,` or whitespace; `e` or the empty string is the identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::identity());
        }
        s.split(|c: char| c == '.' || c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| match p.parse::<i32>() {
                Ok(0) | Err(_) => Err(FuchsianError::BadWord(format!("bad letter {p:?}"))),
                Ok(k) => Ok(k),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}
