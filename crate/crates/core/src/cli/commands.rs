//! The four subcommands. Each returns a one-line summary or a [`CliError`].

use std::path::Path;

use serde::Serialize;

use super::config::{GeodesicSpec, RhoMode, RunConfig};
use super::export::{ensure_dir, points_csv, write_json, write_text, SCHEMA_VERSION};
use super::svg::{render_svg, Scene};
use super::CliError;
use crate::cutproject::{
    cut_project, delone_stats, find_rho, geodesic_sampler, nr_test, shadow_reference, tile_lengths, tube_records,
    CutProjectError, CutProjectSet, DeloneReport, RhoReport, TubeSpec, PRECISION_HORIZON,
};
use crate::fuchsian::{
    build_domain, chaotic_certificate, enumerate_orbit, extended_side_hits_interior, injectivity_radius,
    length_spectrum, ChaosVerdict, FundamentalDomain, SideWalkOutcome,
};
use crate::geometry::{DiscPoint, Geodesic};

/// Vertex passages allowed per direction when walking extended sides.
pub const SIDE_WALK_DEPTH: usize = 256;
/// Radii at which `check` compares the set with a periodic reference.
pub const NR_RADII: [f64; 4] = [1.0, 2.0, 5.0, 10.0];
/// Half-width of the window used for the `N_r` comparisons.
pub const NR_HALF_WINDOW: f64 = 12.0;

/// Domain, base point and geodesic shared by every command.
pub struct Setup {
    pub dom: FundamentalDomain,
    pub x: DiscPoint,
    pub geodesic: Geodesic,
}

#[derive(Debug, Clone, Serialize)]
pub struct RhoChoice {
    pub value: f64,
    pub mode: String,
    pub fraction: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<RhoReport>,
}

pub fn setup(cfg: &RunConfig) -> Result<Setup, CliError> {
    let dom = build_domain(cfg.signature, cfg.domain)?;
    let geodesic = resolve_geodesic(&dom, &cfg.geodesic)?;
    Ok(Setup { x: dom.center, dom, geodesic })
}

pub fn resolve_geodesic(dom: &FundamentalDomain, spec: &GeodesicSpec) -> Result<Geodesic, CliError> {
    let bad = |e: String| CliError::Config(format!("geodesic {spec}: {e}"));
    match spec {
        GeodesicSpec::Seed(n) => Ok(geodesic_sampler(dom, *n)),
        GeodesicSpec::Side(i) => dom
            .sides
            .get(*i)
            .map(|s| s.carrier)
            .ok_or_else(|| bad(format!("the domain has {} sides", dom.side_count()))),
        GeodesicSpec::Axis(w) => {
            let g = dom.fine_word_element(w).map_err(|e| bad(e.to_string()))?;
            Geodesic::axis_fine(&g).map_err(|e| bad(e.to_string()))
        }
        GeodesicSpec::Endpoints(a, b) => {
            let e = |t: f64| num_complex::Complex64::from_polar(1.0, t);
            Geodesic::between(e(*a), e(*b)).map_err(|e| bad(e.to_string()))
        }
    }
}

/// Turns the configured mode into a width `0 < ρ < μ`.
pub fn resolve_rho(cfg: &RunConfig, dom: &FundamentalDomain) -> Result<RhoChoice, CliError> {
    let mu = dom.inradius;
    let (value, search) = match cfg.rho {
        RhoMode::Absolute(v) => (v, None),
        RhoMode::Fraction(f) => (f * mu, None),
        RhoMode::Auto => match find_rho(dom, cfg.rho_samples, cfg.seed) {
            Ok(r) => (r.rho, Some(r)),
            Err(e @ (CutProjectError::SideExtensionObstruction { .. } | CutProjectError::NoCandidateFound { .. })) => {
                return Err(CliError::Config(format!("rho auto: {e}; give an explicit rho")))
            }
            Err(e) => return Err(e.into()),
        },
    };
    if !(value.is_finite() && value > 0.0 && value < mu) {
        return Err(CliError::Config(format!("rho {value} must lie strictly between 0 and the inradius {mu}")));
    }
    Ok(RhoChoice { value, mode: cfg.rho.to_string(), fraction: value / mu, search })
}

fn project(s: &Setup, rho: f64, window: (f64, f64), depth: f64) -> Result<CutProjectSet, CliError> {
    let tube = TubeSpec::new(s.geodesic, rho)?;
    Ok(cut_project(&s.dom, s.x, &tube, window, depth)?)
}

fn pair(z: DiscPoint) -> [f64; 2] {
    [z.re, z.im]
}

fn ideal(z: num_complex::Complex64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Serialize)]
struct GeodesicInfo {
    spec: String,
    xi_minus: [f64; 2],
    xi_plus: [f64; 2],
    base: [f64; 2],
}

impl GeodesicInfo {
    fn new(spec: &GeodesicSpec, k: &Geodesic) -> Self {
        GeodesicInfo { spec: spec.to_string(), xi_minus: ideal(k.xi_minus), xi_plus: ideal(k.xi_plus), base: pair(k.base) }
    }
}

#[derive(Serialize)]
struct Meta<'a> {
    schema: u32,
    version: &'static str,
    command: &'static str,
    signature: [u32; 3],
    domain: String,
    inradius: f64,
    base_point: [f64; 2],
    seed: u64,
    rho: &'a RhoChoice,
    geodesic: GeodesicInfo,
    window: (f64, f64),
    depth: f64,
    count: usize,
    empty: bool,
}

pub fn generate(cfg: &RunConfig) -> Result<String, CliError> {
    let s = setup(cfg)?;
    let rho = resolve_rho(cfg, &s.dom)?;
    let set = project(&s, rho.value, cfg.window, cfg.depth)?;
    ensure_dir(&cfg.out)?;
    write_text(&cfg.out.join("points.csv"), &points_csv(&set.points))?;
    let meta = Meta {
        schema: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        command: "generate",
        signature: cfg.signature.orders(),
        domain: cfg.domain.to_string(),
        inradius: s.dom.inradius,
        base_point: pair(s.x),
        seed: cfg.seed,
        rho: &rho,
        geodesic: GeodesicInfo::new(&cfg.geodesic, &s.geodesic),
        window: cfg.window,
        depth: cfg.depth,
        count: set.len(),
        empty: set.is_empty(),
    };
    write_json(&cfg.out.join("meta.json"), &meta)?;
    Ok(format!("{} points in [{}, {}] written to {}", set.len(), cfg.window.0, cfg.window.1, cfg.out.display()))
}

#[derive(Serialize)]
struct WalkJson {
    side: usize,
    hit: bool,
    witness: Option<String>,
    forward: String,
    backward: String,
}

fn outcome(o: &SideWalkOutcome) -> String {
    match o {
        SideWalkOutcome::Hit { word, crossings } => format!("hit {word} after {crossings} vertices"),
        SideWalkOutcome::ClosedBoundary { period } => format!("closed boundary geodesic, period {period}"),
        SideWalkOutcome::DepthExhausted => "undecided".into(),
    }
}

#[derive(Serialize)]
struct NrJson {
    r: f64,
    agrees: Option<bool>,
    word: Option<String>,
    period: Option<f64>,
    shift: Option<f64>,
    note: Option<String>,
}

#[derive(Serialize)]
struct TileTable {
    window: (f64, f64),
    distinct: usize,
    lengths: Vec<(f64, usize)>,
}

#[derive(Serialize)]
struct Diagnostics {
    schema: u32,
    version: &'static str,
    signature: [u32; 3],
    domain: String,
    verdict: ChaosVerdict,
    side_walks: Vec<WalkJson>,
    inradius: f64,
    injectivity_radius: f64,
    rho: Option<RhoChoice>,
    rho_note: Option<String>,
    geodesic: GeodesicInfo,
    window: (f64, f64),
    count: Option<usize>,
    delone: Option<DeloneReport>,
    separation_holds: Option<bool>,
    nr: Vec<NrJson>,
    tile_lengths: Vec<TileTable>,
    failures: Vec<String>,
    passed: bool,
}

/// The window `c ± 4h` for `[c - h, c + h]`, clipped to the precision horizon.
pub fn widened(window: (f64, f64)) -> (f64, f64) {
    let c = 0.5 * (window.0 + window.1);
    let h = 0.5 * (window.1 - window.0);
    ((c - 4.0 * h).max(-PRECISION_HORIZON), (c + 4.0 * h).min(PRECISION_HORIZON))
}

pub fn check(cfg: &RunConfig) -> Result<String, CliError> {
    let s = setup(cfg)?;
    let dom = &s.dom;
    let tol = &cfg.tolerances;
    let mut failures = Vec::new();

    let verdict = chaotic_certificate(cfg.signature, cfg.domain);
    let mut walks = Vec::new();
    for side in 0..dom.side_count() {
        let w = extended_side_hits_interior(dom, side, SIDE_WALK_DEPTH)?;
        walks.push(WalkJson {
            side,
            hit: w.hit,
            witness: w.witness.as_ref().map(|w| w.to_string()),
            forward: outcome(&w.forward),
            backward: outcome(&w.backward),
        });
    }
    let all_hit = walks.iter().all(|w| w.hit);
    if all_hit != (verdict == ChaosVerdict::Chaotic) {
        failures.push(format!("side walks (all hit: {all_hit}) disagree with the parity verdict {verdict}"));
    }

    let inj = injectivity_radius(dom, s.x)?;
    if (inj - dom.inradius).abs() > tol.tangency {
        failures.push(format!("injectivity radius {inj} differs from the inradius {}", dom.inradius));
    }

    let (rho, rho_note) = match resolve_rho(cfg, dom) {
        Ok(r) => (Some(r), None),
        Err(CliError::Config(m)) => (None, Some(m)),
        Err(e) => return Err(e),
    };
    if rho.is_none() && cfg.rho == RhoMode::Auto && verdict == ChaosVerdict::Chaotic && !all_hit {
        failures.push("rho search obstructed although the verdict is Chaotic".into());
    }

    let mut count = None;
    let mut delone = None;
    let mut separation_holds = None;
    let mut nr = Vec::new();
    let mut tables = Vec::new();
    if let Some(rho) = &rho {
        let set = project(&s, rho.value, cfg.window, cfg.depth)?;
        count = Some(set.len());
        if let GeodesicSpec::Side(i) = cfg.geodesic {
            if !walks[i].hit && !set.is_empty() {
                failures.push(format!("side {i} lies on tile boundaries yet its tube holds {} points", set.len()));
            }
        }
        if set.len() >= 2 {
            let report = delone_stats(&set, inj, rho.value)?;
            let holds = report.min_gap >= report.separation_bound - tol.separation;
            if !holds {
                failures.push(format!(
                    "minimum gap {} is below the separation bound {}",
                    report.min_gap, report.separation_bound
                ));
            }
            separation_holds = Some(holds);
            delone = Some(report);
        }
        for w in [cfg.window, widened(cfg.window)] {
            let set = if w == cfg.window { set.clone() } else { project(&s, rho.value, w, cfg.depth)? };
            let lengths = if set.len() >= 2 { tile_lengths(&set, tol.cluster)? } else { Vec::new() };
            tables.push(TileTable { window: w, distinct: lengths.len(), lengths });
        }
        let near = project(&s, rho.value, (-NR_HALF_WINDOW, NR_HALF_WINDOW), cfg.depth)?;
        for r in NR_RADII {
            nr.push(match shadow_reference(dom, s.x, &s.geodesic, r, rho.value, cfg.depth) {
                Ok(sh) => {
                    let reference = sh.reference.set.shifted(sh.shift);
                    NrJson {
                        r,
                        agrees: Some(nr_test(&near.points, &reference.points, r)),
                        word: Some(sh.word.to_string()),
                        period: Some(sh.reference.period),
                        shift: Some(sh.shift),
                        note: None,
                    }
                }
                Err(e) => NrJson { r, agrees: None, word: None, period: None, shift: None, note: Some(e.to_string()) },
            });
        }
    }

    let passed = failures.is_empty();
    let diag = Diagnostics {
        schema: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        signature: cfg.signature.orders(),
        domain: cfg.domain.to_string(),
        verdict,
        side_walks: walks,
        inradius: dom.inradius,
        injectivity_radius: inj,
        rho,
        rho_note,
        geodesic: GeodesicInfo::new(&cfg.geodesic, &s.geodesic),
        window: cfg.window,
        count,
        delone,
        separation_holds,
        nr,
        tile_lengths: tables,
        failures: failures.clone(),
        passed,
    };
    ensure_dir(&cfg.out)?;
    write_json(&cfg.out.join("diagnostics.json"), &diag)?;
    if !passed {
        return Err(CliError::CheckFailed(failures));
    }
    Ok(format!("{verdict}; all checks passed; diagnostics in {}", cfg.out.display()))
}

pub fn spectrum(cfg: &RunConfig) -> Result<String, CliError> {
    let s = setup(cfg)?;
    let entries = length_spectrum(&s.dom, cfg.max_word)?;
    let mut text = String::from("length,word\n");
    for e in &entries {
        text.push_str(&format!("{:.16e},{}\n", e.length, e.word));
    }
    ensure_dir(&cfg.out)?;
    write_text(&cfg.out.join("length_spectrum.csv"), &text)?;

    let mut tiles = String::from("length,multiplicity,window_min,window_max\n");
    let mut note = String::new();
    match resolve_rho(cfg, &s.dom) {
        Ok(rho) => {
            for w in [cfg.window, widened(cfg.window)] {
                let set = project(&s, rho.value, w, cfg.depth)?;
                if set.len() < 2 {
                    continue;
                }
                for (len, mult) in tile_lengths(&set, cfg.tolerances.cluster)? {
                    tiles.push_str(&format!("{len:.16e},{mult},{},{}\n", w.0, w.1));
                }
            }
        }
        Err(CliError::Config(m)) => note = format!("; no tile lengths ({m})"),
        Err(e) => return Err(e),
    }
    write_text(&cfg.out.join("tile_lengths.csv"), &tiles)?;
    Ok(format!("{} lengths up to word length {}{note}", entries.len(), cfg.max_word))
}

pub fn render(cfg: &RunConfig) -> Result<String, CliError> {
    let s = setup(cfg)?;
    let rho = resolve_rho(cfg, &s.dom)?;
    let layers = &cfg.svg.layers;
    let tiles = if layers.tiles || layers.orbit {
        enumerate_orbit(&s.dom, s.x, cfg.svg.tile_radius)?.into_iter().map(|r| r.mobius).collect()
    } else {
        Vec::new()
    };
    let feet = if layers.feet {
        let tube = TubeSpec::new(s.geodesic, rho.value)?;
        tube_records(&s.dom, s.x, &tube, cfg.window, cfg.depth)
            .map_err(CliError::from)?
            .into_iter()
            .map(|(r, _)| (r.t, r.s))
            .collect()
    } else {
        Vec::new()
    };
    let scene = Scene { dom: &s.dom, x: s.x, tiles, geodesic: s.geodesic, rho: rho.value, feet };
    let svg = render_svg(&scene, &cfg.svg);
    ensure_dir(&cfg.out)?;
    let path = cfg.out.join("render.svg");
    write_text(&path, &svg)?;
    Ok(format!("wrote {}", display(&path)))
}

fn display(p: &Path) -> String {
    p.display().to_string()
}
