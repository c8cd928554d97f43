//! Cut-and-project point sets on the real line from cocompact Fuchsian
//! triangle groups acting on the Poincaré disc.
//!
//! * [`geometry`]: disc points, Möbius isometries, geodesics and projections.
//! * [`fuchsian`]: triangle groups, fundamental domains, orbits and side walks.
//! * [`cutproject`]: tube membership, point-set windows and their diagnostics.
//! * [`cli`]: configuration, exports and SVG rendering behind the `hypercut` binary.

pub mod geometry;
pub mod cutproject;
pub mod fuchsian;
pub mod tolerance;
pub mod cli;
