//! Hand-written SVG of the disc. Geodesic pieces and hypercycles are drawn as
//! true circular arcs through three points. Output is deterministic.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::config::SvgOptions;
use crate::fuchsian::FundamentalDomain;
use crate::geometry::{DiscPoint, Geodesic, Mobius};

/// Everything the renderer draws. `tiles` are the elements `γ` whose tiles `γ(F)` are drawn;
/// `feet` are Fermi coordinates of the tube points relative to the geodesic.
pub struct Scene<'a> {
    pub dom: &'a FundamentalDomain,
    pub x: DiscPoint,
    pub tiles: Vec<Mobius>,
    pub geodesic: Geodesic,
    pub rho: f64,
    pub feet: Vec<(f64, f64)>,
}

const MARGIN: f64 = 10.0;
// Tiles whose screen extent is below this many pixels are skipped.
const MIN_TILE_PX: f64 = 0.4;

struct Screen {
    c: f64,
    r: f64,
}

impl Screen {
    fn map(&self, z: Complex64) -> (f64, f64) {
        (self.c + self.r * z.re, self.c - self.r * z.im)
    }
}

/// Three decimals, with negative zero printed as zero.
fn n(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" { "0.000".into() } else { s }
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Path segment from `p0` (already the current point) to `p1` along the circle through `pm`.
fn arc_to(out: &mut String, p0: (f64, f64), pm: (f64, f64), p1: (f64, f64)) {
    let d = 2.0 * cross(p0, pm, p1);
    let span = (p1.0 - p0.0).hypot(p1.1 - p0.1).max((pm.0 - p0.0).hypot(pm.1 - p0.1));
    let (ax, ay) = p0;
    let (bx, by) = pm;
    let (cx, cy) = p1;
    if d.abs() < 1e-9 * span * span.max(1.0) {
        let _ = write!(out, " L {} {}", n(p1.0), n(p1.1));
        return;
    }
    let a2 = ax * ax + ay * ay;
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    let uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    let radius = (ax - ux).hypot(ay - uy);
    if radius > 1e6 {
        let _ = write!(out, " L {} {}", n(p1.0), n(p1.1));
        return;
    }
    let sweep = cross(p0, pm, p1) > 0.0;
    let large = cross(p0, p1, pm).signum() == cross(p0, p1, (ux, uy)).signum();
    let _ = write!(
        out,
        " A {} {} 0 {} {} {} {}",
        n(radius),
        n(radius),
        u8::from(large),
        u8::from(sweep),
        n(p1.0),
        n(p1.1)
    );
}

fn geodesic_arc(scr: &Screen, k: &Geodesic, offset: f64) -> String {
    let p0 = scr.map(k.xi_minus);
    let pm = scr.map(k.fermi_point(0.0, offset).z());
    let p1 = scr.map(k.xi_plus);
    let mut d = format!("M {} {}", n(p0.0), n(p0.1));
    arc_to(&mut d, p0, pm, p1);
    d
}

/// Closed path of `g(F)`, or `None` when the tile is too small to see.
fn tile_path(scr: &Screen, dom: &FundamentalDomain, g: &Mobius) -> Option<String> {
    let pts: Vec<(f64, f64)> = dom.vertices.iter().map(|v| scr.map(g.apply(*v).z())).collect();
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for p in &pts {
        lo = (lo.0.min(p.0), lo.1.min(p.1));
        hi = (hi.0.max(p.0), hi.1.max(p.1));
    }
    if (hi.0 - lo.0).max(hi.1 - lo.1) < MIN_TILE_PX {
        return None;
    }
    let mut d = format!("M {} {}", n(pts[0].0), n(pts[0].1));
    for (i, side) in dom.sides.iter().enumerate() {
        let t0 = side.carrier.project(dom.vertices[side.start]).t;
        let t1 = side.carrier.project(dom.vertices[side.end]).t;
        let mid = scr.map(g.apply(side.carrier.point(0.5 * (t0 + t1))).z());
        arc_to(&mut d, pts[i], mid, pts[(i + 1) % pts.len()]);
    }
    d.push_str(" Z");
    Some(d)
}

pub fn render_svg(scene: &Scene, opts: &SvgOptions) -> String {
    let size = opts.size as f64;
    let scr = Screen { c: size / 2.0, r: size / 2.0 - MARGIN };
    let w = opts.stroke;
    let l = &opts.layers;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        opts.size
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<circle id="boundary" cx="{0}" cy="{0}" r="{1}" fill="none" stroke="black" stroke-width="{2}"/>"#,
        n(scr.c),
        n(scr.r),
        n(w)
    );
    if l.tiles {
        let _ = writeln!(s, r##"<g id="tiles" fill="none" stroke="#9a9a9a" stroke-width="{}">"##, n(0.5 * w));
        for g in &scene.tiles {
            if let Some(d) = tile_path(&scr, scene.dom, g) {
                let _ = writeln!(s, r#"<path d="{d}"/>"#);
            }
        }
        s.push_str("</g>\n");
    }
    if l.domain {
        if let Some(d) = tile_path(&scr, scene.dom, &Mobius::IDENTITY) {
            let _ = writeln!(
                s,
                r##"<g id="domain"><path d="{d}" fill="#cfe3f7" fill-opacity="0.6" stroke="#1f5fa8" stroke-width="{}"/></g>"##,
                n(1.5 * w)
            );
        }
    }
    if l.tube {
        let _ = writeln!(
            s,
            r##"<g id="tube" fill="none" stroke="#d08a1e" stroke-width="{}" stroke-dasharray="6 4">"##,
            n(w)
        );
        for side in [-scene.rho, scene.rho] {
            let _ = writeln!(s, r#"<path d="{}"/>"#, geodesic_arc(&scr, &scene.geodesic, side));
        }
        s.push_str("</g>\n");
    }
    if l.geodesic {
        let _ = writeln!(
            s,
            r##"<g id="geodesic"><path d="{}" fill="none" stroke="#b0281a" stroke-width="{}"/></g>"##,
            geodesic_arc(&scr, &scene.geodesic, 0.0),
            n(1.5 * w)
        );
    }
    if l.orbit {
        let _ = writeln!(s, r##"<g id="orbit" fill="#333333">"##);
        for g in &scene.tiles {
            let z = g.apply(scene.x).z();
            let radius = 3.5 * (1.0 - z.norm_sqr());
            if radius * scr.r / 100.0 < MIN_TILE_PX / 4.0 {
                continue;
            }
            let (px, py) = scr.map(z);
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="{}"/>"#, n(px), n(py), n(radius.max(0.3)));
        }
        s.push_str("</g>\n");
    }
    if l.feet {
        let _ = writeln!(s, r##"<g id="feet" stroke="#2a7a2a" stroke-width="{}" fill="#2a7a2a">"##, n(0.75 * w));
        let k = &scene.geodesic;
        for &(t, sd) in &scene.feet {
            let p = scr.map(k.fermi_point(t, sd).z());
            let m = scr.map(k.fermi_point(t, 0.5 * sd).z());
            let f = scr.map(k.point(t).z());
            if (p.0 - f.0).hypot(p.1 - f.1) < MIN_TILE_PX && (f.0 - scr.c).hypot(f.1 - scr.c) > scr.r - 1.0 {
                continue;
            }
            let mut d = format!("M {} {}", n(p.0), n(p.1));
            arc_to(&mut d, p, m, f);
            let _ = writeln!(s, r#"<path d="{d}" fill="none"/>"#);
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="{}"/>"#, n(f.0), n(f.1), n(1.5 * w));
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_through_three_points_on_a_circle() {
        let mut d = String::new();
        // quarter circles around (0,0) of radius 10 going through the bottom in screen coordinates
        arc_to(&mut d, (10.0, 0.0), (0.0, 10.0), (-10.0, 0.0));
        assert_eq!(d, " A 10.000 10.000 0 0 1 -10.000 0.000");
        let mut d = String::new();
        arc_to(&mut d, (10.0, 0.0), (0.0, -10.0), (0.0, 10.0));
        assert_eq!(d, " A 10.000 10.000 0 1 0 0.000 10.000");
    }

    #[test]
    fn collinear_points_give_a_line() {
        let mut d = String::new();
        arc_to(&mut d, (0.0, 0.0), (1.0, 1.0), (2.0, 2.0));
        assert_eq!(d, " L 2.000 2.000");
    }
}
