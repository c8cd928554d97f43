use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{center_and_inradius, FuchsianError, Signature, Word};
use crate::geometry::precise::{DdComplex, DdMobius};
use crate::geometry::{angle_between_rays, dist, DiscPoint, Geodesic, Mobius};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    #[serde(rename = "quad")]
    Quadrilateral,
    #[serde(rename = "hex")]
    Hexagonal,
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DomainKind::Quadrilateral => "quad",
            DomainKind::Hexagonal => "hex",
        })
    }
}

impl FromStr for DomainKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quad" | "quadrilateral" => Ok(DomainKind::Quadrilateral),
            "hex" | "hexagon" | "hexagonal" => Ok(DomainKind::Hexagonal),
            other => Err(format!("unknown domain kind {other:?} (expected quad or hex)")),
        }
    }
}

/// Side `i` runs from vertex `i` to vertex `i + 1`; its carrier is oriented the same way
/// and based at the start vertex, so the domain interior lies on the positive side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Side {
    pub start: usize,
    pub end: usize,
    pub carrier: Geodesic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub name: String,
    pub element: Mobius,
}

/// `element` (the group element named by `letter`) maps side `from` onto side `to`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SidePairing {
    pub from: usize,
    pub to: usize,
    pub letter: i32,
    pub element: Mobius,
}

/// The tile across a side is `element(F)`; `element⁻¹` carries that side back onto `partner`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub letter: i32,
    pub element: Mobius,
    pub partner: usize,
}

/// Double-double copies of the vertices, generators and crossings. The `f64`
/// data of the domain are these values rounded.
#[derive(Debug, Clone, PartialEq)]
pub struct FineData {
    pub vertices: Vec<DdComplex>,
    pub generators: Vec<DdMobius>,
    pub crossings: Vec<DdMobius>,
}

/// What a builder hands to [`FundamentalDomain::assemble`]. Pairings are
/// `(from, to, letter)`; letter `±i` names generator `i` or its inverse.
pub(crate) struct Blueprint<'a> {
    pub kind: DomainKind,
    pub signature: Signature,
    pub vertices: Vec<DdComplex>,
    pub labels: &'a [&'a str],
    pub generators: Vec<(&'a str, DdMobius)>,
    pub pairings: &'a [(usize, usize, i32)],
    pub expected_angles: &'a [Option<f64>],
}

/// A convex fundamental polygon, counterclockwise, with its side pairings.
#[derive(Debug, Clone)]
pub struct FundamentalDomain {
    pub kind: DomainKind,
    pub signature: Signature,
    pub vertices: Vec<DiscPoint>,
    pub labels: Vec<String>,
    pub internal_angles: Vec<f64>,
    pub sides: Vec<Side>,
    pub generators: Vec<Generator>,
    pub pairings: Vec<SidePairing>,
    pub crossings: Vec<Crossing>,
    pub center: DiscPoint,
    pub inradius: f64,
    pub diameter: f64,
    pub fine: FineData,
}

const VALIDATION_TOL: f64 = 1e-8;

impl FundamentalDomain {
    /// Assembles the polygon, derives sides, angles, crossings and incenter, and runs
    /// every structural check. `expected_angles` lists the prescribed angle per vertex,
    /// `None` for accidental vertices.
    pub(crate) fn assemble(bp: Blueprint<'_>) -> Result<Self, FuchsianError> {
        let Blueprint { kind, signature, vertices: fine_vertices, labels, generators, pairings, expected_angles } = bp;
        let fine_letter = |letter: i32| -> Result<DdMobius, FuchsianError> {
            let (_, g) = generators
                .get((letter.unsigned_abs() as usize).wrapping_sub(1))
                .ok_or_else(|| FuchsianError::BadWord(format!("no generator {letter}")))?;
            Ok(if letter < 0 { g.inverse() } else { *g })
        };
        let vertices = fine_vertices
            .iter()
            .map(|v| DiscPoint::from_complex(v.to_c64()))
            .collect::<Result<Vec<_>, _>>()?;
        let labels = labels.iter().map(|l| l.to_string()).collect();
        let pairings = pairings
            .iter()
            .map(|&(from, to, letter)| {
                Ok(SidePairing { from, to, letter, element: fine_letter(letter)?.to_mobius() })
            })
            .collect::<Result<Vec<_>, FuchsianError>>()?;
        let n = vertices.len();
        let mut sides = Vec::with_capacity(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if dist(vertices[i], vertices[j]) < VALIDATION_TOL {
                return Err(FuchsianError::ConstructionFailed(format!("side {i} is degenerate")));
            }
            let frame = DdMobius::frame_through(fine_vertices[i], fine_vertices[j]);
            sides.push(Side { start: i, end: j, carrier: Geodesic::from_fine_frame(frame) });
        }
        let internal_angles = (0..n)
            .map(|i| {
                let prev = vertices[(i + n - 1) % n];
                let next = vertices[(i + 1) % n];
                angle_between_rays(vertices[i], next, prev)
            })
            .collect::<Vec<_>>();
        let mut crossings = Vec::with_capacity(n);
        let mut fine_crossings = Vec::with_capacity(n);
        for side in 0..n {
            let p = pairings.iter().find(|p| p.to == side).ok_or_else(|| {
                FuchsianError::ConstructionFailed(format!("side {side} is not the image of a pairing"))
            })?;
            crossings.push(Crossing { letter: p.letter, element: p.element, partner: p.from });
            fine_crossings.push(fine_letter(p.letter)?);
        }
        let fine = FineData {
            vertices: fine_vertices,
            generators: generators.iter().map(|(_, g)| *g).collect(),
            crossings: fine_crossings,
        };
        let generators = generators
            .iter()
            .map(|(name, g)| Generator { name: name.to_string(), element: g.to_mobius() })
            .collect();
        let mut diameter: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                diameter = diameter.max(dist(vertices[i], vertices[j]));
            }
        }
        let mut dom = FundamentalDomain {
            kind,
            signature,
            vertices,
            labels,
            internal_angles,
            sides,
            generators,
            pairings,
            crossings,
            center: DiscPoint::ORIGIN,
            inradius: 0.0,
            diameter,
            fine,
        };
        dom.check_shape(expected_angles)?;
        let (center, inradius) = center_and_inradius(&dom)?;
        dom.center = center;
        dom.inradius = inradius;
        dom.validate()?;
        Ok(dom)
    }

    fn check_shape(&self, expected_angles: &[Option<f64>]) -> Result<(), FuchsianError> {
        let fail = |msg: String| Err(FuchsianError::ConstructionFailed(msg));
        for (i, (&got, want)) in self.internal_angles.iter().zip(expected_angles).enumerate() {
            if !(got > VALIDATION_TOL && got < PI - VALIDATION_TOL) {
                return fail(format!("vertex {} has non-convex angle {got}", self.labels[i]));
            }
            if let Some(w) = want {
                if (got - w).abs() > VALIDATION_TOL {
                    return fail(format!("vertex {} has angle {got}, expected {w}", self.labels[i]));
                }
            }
        }
        // every vertex strictly left of every side it is not on: convex and counterclockwise
        for side in &self.sides {
            for (v, &p) in self.vertices.iter().enumerate() {
                if v != side.start && v != side.end && side.carrier.signed_distance(p) <= VALIDATION_TOL {
                    return fail(format!("polygon is not convex counterclockwise at side {}", side.start));
                }
            }
        }
        Ok(())
    }

    /// Re-checks pairings, inverse relations, Gauss–Bonnet area and tangency of the inscribed ball.
    pub fn validate(&self) -> Result<(), FuchsianError> {
        let fail = |msg: String| Err(FuchsianError::ConstructionFailed(msg));
        for p in &self.pairings {
            let (a, b) = (self.sides[p.from], self.sides[p.to]);
            let ia = p.element.apply(self.vertices[a.start]);
            let ib = p.element.apply(self.vertices[a.end]);
            let (ta, tb) = (self.vertices[b.start], self.vertices[b.end]);
            let direct = dist(ia, ta).max(dist(ib, tb));
            let flipped = dist(ia, tb).max(dist(ib, ta));
            if direct.min(flipped) > VALIDATION_TOL {
                return fail(format!("pairing {} does not map side {} onto side {}", p.letter, p.from, p.to));
            }
            let back = self.pairings.iter().find(|q| q.from == p.to && q.to == p.from);
            match back {
                Some(q) if q.element.compose(&p.element).is_identity(VALIDATION_TOL) => {}
                _ => return fail(format!("pairing {} has no inverse partner", p.letter)),
            }
        }
        let area = self.area();
        if (area - self.signature.area()).abs() > VALIDATION_TOL {
            return fail(format!("area {area} differs from 2π(1 - Σ 1/m_i) = {}", self.signature.area()));
        }
        for side in &self.sides {
            let d = side.carrier.signed_distance(self.center);
            if (d - self.inradius).abs() > 1e-6 {
                return fail(format!("inscribed ball not tangent to side {} ({d} vs {})", side.start, self.inradius));
            }
        }
        Ok(())
    }

    pub fn side_count(&self) -> usize {
        self.vertices.len()
    }

    /// Gauss–Bonnet area `(n - 2)π - Σ angles`.
    pub fn area(&self) -> f64 {
        (self.side_count() as f64 - 2.0) * PI - self.internal_angles.iter().sum::<f64>()
    }

    /// Group element named by a single letter.
    pub fn letter_element(&self, letter: i32) -> Result<Mobius, FuchsianError> {
        let idx = letter.unsigned_abs() as usize;
        let g = self
            .generators
            .get(idx.wrapping_sub(1))
            .ok_or_else(|| FuchsianError::BadWord(format!("no generator {idx}")))?;
        Ok(if letter < 0 { g.element.inverse() } else { g.element })
    }

    /// Product of the letters of `word`, left to right.
    pub fn word_element(&self, word: &Word) -> Result<Mobius, FuchsianError> {
        word.letters()
            .iter()
            .try_fold(Mobius::IDENTITY, |acc, &l| Ok(acc.compose(&self.letter_element(l)?)))
    }

    /// [`FundamentalDomain::word_element`] in double-double.
    pub fn fine_word_element(&self, word: &Word) -> Result<DdMobius, FuchsianError> {
        word.letters().iter().try_fold(DdMobius::IDENTITY, |acc, &l| {
            let g = self
                .fine
                .generators
                .get((l.unsigned_abs() as usize).wrapping_sub(1))
                .ok_or_else(|| FuchsianError::BadWord(format!("no generator {l}")))?;
            Ok(acc.compose(&if l < 0 { g.inverse() } else { *g }))
        })
    }

    /// Distinct generators and inverses, as letters with their elements.
    pub fn moves(&self) -> Vec<(i32, Mobius)> {
        let mut out: Vec<(i32, Mobius)> = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            for (letter, e) in [(i as i32 + 1, g.element), (-(i as i32 + 1), g.element.inverse())] {
                if !out.iter().any(|(_, h)| h.approx_eq(&e, VALIDATION_TOL)) {
                    out.push((letter, e));
                }
            }
        }
        out
    }

    /// Closed membership: no side has the point on its outer side beyond `tol`.
    pub fn contains(&self, z: DiscPoint, tol: f64) -> bool {
        self.sides.iter().all(|s| s.carrier.signed_distance(z) >= -tol)
    }

    /// Open membership: the point is at least `tol` inside every side.
    pub fn contains_interior(&self, z: DiscPoint, tol: f64) -> bool {
        self.sides.iter().all(|s| s.carrier.signed_distance(z) > tol)
    }

    /// Angle sums of the vertex cycles, for the quotient orbifold bookkeeping.
    pub fn accidental_angle_sum(&self) -> Option<f64> {
        match self.kind {
            DomainKind::Hexagonal => Some([1, 3, 5].iter().map(|&i| self.internal_angles[i]).sum()),
            DomainKind::Quadrilateral => None,
        }
    }

    /// Index of the vertex whose position is within `tol` of `z`.
    pub fn vertex_at(&self, z: DiscPoint, tol: f64) -> Option<usize> {
        self.vertices.iter().position(|&v| dist(v, z) <= tol)
    }
}

pub(crate) fn full_turn(m: u32) -> f64 {
    TAU / m as f64
}
