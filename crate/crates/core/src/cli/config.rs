//! Run configuration: a JSON file plus command-line overrides, flags winning.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::fuchsian::{DomainKind, Signature, Word};

/// How `ρ` is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RhoMode {
    Absolute(f64),
    /// Fraction of the inradius.
    Fraction(f64),
    /// Searched by `find_rho`.
    Auto,
}

impl FromStr for RhoMode {
    type Err = String;

    /// `auto`, a plain value, or a fraction of the inradius written `0.9i` or `90%i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("auto") {
            return Ok(RhoMode::Auto);
        }
        let bad = || format!("cannot read rho {s:?} (expected auto, a number, 0.9i or 90%i)");
        if let Some(p) = s.strip_suffix("%i") {
            return p.trim().parse::<f64>().map(|v| RhoMode::Fraction(v / 100.0)).map_err(|_| bad());
        }
        if let Some(f) = s.strip_suffix('i') {
            return f.trim().parse::<f64>().map(RhoMode::Fraction).map_err(|_| bad());
        }
        s.parse::<f64>().map(RhoMode::Absolute).map_err(|_| bad())
    }
}

impl fmt::Display for RhoMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoMode::Absolute(v) => write!(f, "{v}"),
            RhoMode::Fraction(v) => write!(f, "{v}i"),
            RhoMode::Auto => f.write_str("auto"),
        }
    }
}

/// Which geodesic plays the role of `k`.
#[derive(Debug, Clone, PartialEq)]
pub enum GeodesicSpec {
    Seed(u64),
    Side(usize),
    Axis(Word),
    /// Ideal endpoints `e^{iθ1} → e^{iθ2}`.
    Endpoints(f64, f64),
}

impl FromStr for GeodesicSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| format!("geodesic {s:?} must look like seed:<n>, side:<i>, axis:<word> or endpoints:<θ1,θ2>"))?;
        let arg = arg.trim();
        match kind.trim() {
            "seed" => arg.parse().map(GeodesicSpec::Seed).map_err(|_| format!("bad seed {arg:?}")),
            "side" => arg.parse().map(GeodesicSpec::Side).map_err(|_| format!("bad side index {arg:?}")),
            "axis" => arg.parse::<Word>().map(GeodesicSpec::Axis).map_err(|e| e.to_string()),
            "endpoints" => {
                let (a, b) = parse_pair(arg)?;
                Ok(GeodesicSpec::Endpoints(a, b))
            }
            other => Err(format!("unknown geodesic kind {other:?}")),
        }
    }
}

impl fmt::Display for GeodesicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeodesicSpec::Seed(n) => write!(f, "seed:{n}"),
            GeodesicSpec::Side(i) => write!(f, "side:{i}"),
            GeodesicSpec::Axis(w) => write!(f, "axis:{w}"),
            GeodesicSpec::Endpoints(a, b) => write!(f, "endpoints:{a},{b}"),
        }
    }
}

/// Two comma-separated reals.
pub fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated numbers, got {s:?}"))?;
    let p = |v: &str| v.trim().parse::<f64>().map_err(|_| format!("bad number {v:?}"));
    Ok((p(a)?, p(b)?))
}

pub fn parse_signature(s: &str) -> Result<Signature, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(format!("signature {s:?} must be three orders m1,m2,m3"));
    };
    let p = |v: &str| v.parse::<u32>().map_err(|_| format!("bad order {v:?} in signature"));
    Signature::new(p(a)?, p(b)?, p(c)?).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Layers {
    pub tiles: bool,
    pub domain: bool,
    pub orbit: bool,
    pub tube: bool,
    pub geodesic: bool,
    pub feet: bool,
}

impl Default for Layers {
    fn default() -> Self {
        Layers { tiles: true, domain: true, orbit: true, tube: true, geodesic: true, feet: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SvgOptions {
    pub size: u32,
    pub stroke: f64,
    /// Tiles `γ(F)` with `d(0, γ(x)) ≤ tile_radius` are drawn.
    pub tile_radius: f64,
    pub layers: Layers,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { size: 800, stroke: 1.0, tile_radius: 5.0, layers: Layers::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Gap clustering for tile lengths.
    pub cluster: f64,
    /// Allowed slack in the separation bound.
    pub separation: f64,
    /// Allowed `|inradius - inj|`.
    pub tangency: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { cluster: 1e-7, separation: 1e-6, tangency: 1e-6 }
    }
}

/// The configuration file as written on disk. Every field is optional.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub signature: Option<String>,
    pub domain: Option<String>,
    pub rho: Option<String>,
    pub geodesic: Option<String>,
    pub window: Option<(f64, f64)>,
    pub depth: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub max_word: Option<usize>,
    pub rho_samples: Option<usize>,
    pub tolerances: Option<Tolerances>,
    pub svg: Option<SvgOptions>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("config {}: {e}", path.display())))
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub signature: Signature,
    pub domain: DomainKind,
    pub rho: RhoMode,
    pub geodesic: GeodesicSpec,
    pub window: (f64, f64),
    pub depth: f64,
    pub seed: u64,
    pub out: PathBuf,
    pub max_word: usize,
    pub rho_samples: usize,
    pub tolerances: Tolerances,
    pub svg: SvgOptions,
}

/// Command-line overrides, already split into fields.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub signature: Option<String>,
    pub domain: Option<String>,
    pub rho: Option<String>,
    pub geodesic: Option<String>,
    pub window: Option<String>,
    pub depth: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub max_word: Option<usize>,
    pub layers: Option<String>,
}

pub const DEFAULT_WINDOW: (f64, f64) = (-10.0, 10.0);
pub const DEFAULT_DEPTH: f64 = 1.0;
pub const DEFAULT_MAX_WORD: usize = 6;
pub const DEFAULT_RHO_SAMPLES: usize = 8;

impl RunConfig {
    /// Merges file and flags. The seed also picks the geodesic unless one is given.
    pub fn resolve(file: FileConfig, flags: Overrides) -> Result<Self, CliError> {
        let cfg = |e: String| CliError::Config(e);
        let signature = flags.signature.or(file.signature).unwrap_or_else(|| "6,6,3".into());
        let signature = parse_signature(&signature).map_err(cfg)?;
        let domain = flags.domain.or(file.domain).unwrap_or_else(|| "hex".into()).parse().map_err(cfg)?;
        let rho = flags.rho.or(file.rho).unwrap_or_else(|| "auto".into()).parse().map_err(cfg)?;
        let seed = flags.seed.or(file.seed).unwrap_or(0);
        let geodesic = match flags.geodesic.or(file.geodesic) {
            Some(g) => g.parse().map_err(cfg)?,
            None => GeodesicSpec::Seed(seed),
        };
        let window = match flags.window {
            Some(w) => parse_pair(&w).map_err(cfg)?,
            None => file.window.unwrap_or(DEFAULT_WINDOW),
        };
        if !(window.0.is_finite() && window.1.is_finite() && window.0 < window.1) {
            return Err(cfg(format!("window [{}, {}] must be finite with t_min < t_max", window.0, window.1)));
        }
        let depth = flags.depth.or(file.depth).unwrap_or(DEFAULT_DEPTH);
        if !(depth.is_finite() && depth > 0.0) {
            return Err(cfg(format!("depth {depth} must be positive")));
        }
        let mut svg = file.svg.unwrap_or_default();
        if let Some(l) = flags.layers {
            svg.layers = parse_layers(&l).map_err(cfg)?;
        }
        let rho_samples = file.rho_samples.unwrap_or(DEFAULT_RHO_SAMPLES);
        if rho_samples == 0 {
            return Err(cfg("rho_samples must be at least 1".into()));
        }
        Ok(RunConfig {
            signature,
            domain,
            rho,
            geodesic,
            window,
            depth,
            seed,
            out: flags.out.or(file.out).unwrap_or_else(|| PathBuf::from("out")),
            max_word: flags.max_word.or(file.max_word).unwrap_or(DEFAULT_MAX_WORD),
            rho_samples,
            tolerances: file.tolerances.unwrap_or_default(),
            svg,
        })
    }
}

/// `none`, `all`, or a comma list drawn from tiles, domain, orbit, tube, geodesic, feet.
pub fn parse_layers(s: &str) -> Result<Layers, String> {
    let s = s.trim();
    if s == "all" {
        return Ok(Layers::default());
    }
    let mut l = Layers { tiles: false, domain: false, orbit: false, tube: false, geodesic: false, feet: false };
    if s == "none" || s.is_empty() {
        return Ok(l);
    }
    for name in s.split(',').map(str::trim) {
        match name {
            "tiles" => l.tiles = true,
            "domain" => l.domain = true,
            "orbit" => l.orbit = true,
            "tube" => l.tube = true,
            "geodesic" => l.geodesic = true,
            "feet" => l.feet = true,
            other => return Err(format!("unknown layer {other:?}")),
        }
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_forms() {
        assert_eq!("auto".parse::<RhoMode>().unwrap(), RhoMode::Auto);
        assert_eq!("0.9i".parse::<RhoMode>().unwrap(), RhoMode::Fraction(0.9));
        assert_eq!("90%i".parse::<RhoMode>().unwrap(), RhoMode::Fraction(0.9));
        assert_eq!("0.3".parse::<RhoMode>().unwrap(), RhoMode::Absolute(0.3));
        assert!("abc".parse::<RhoMode>().is_err());
    }

    #[test]
    fn geodesic_forms() {
        assert_eq!("side:2".parse::<GeodesicSpec>().unwrap(), GeodesicSpec::Side(2));
        assert_eq!("seed:7".parse::<GeodesicSpec>().unwrap(), GeodesicSpec::Seed(7));
        assert_eq!("endpoints:0.5,2".parse::<GeodesicSpec>().unwrap(), GeodesicSpec::Endpoints(0.5, 2.0));
        let GeodesicSpec::Axis(w) = "axis:1.-2".parse().unwrap() else { panic!() };
        assert_eq!(w.0, vec![1, -2]);
        assert!("line:3".parse::<GeodesicSpec>().is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = FileConfig { signature: Some("5,5,5".into()), window: Some((-3.0, 3.0)), ..Default::default() };
        let flags = Overrides { signature: Some("4,4,4".into()), ..Default::default() };
        let c = RunConfig::resolve(file, flags).unwrap();
        assert_eq!(c.signature.orders(), [4, 4, 4]);
        assert_eq!(c.window, (-3.0, 3.0));
    }

    #[test]
    fn bad_signature_mentions_order_bound() {
        let flags = Overrides { signature: Some("2,3,7".into()), ..Default::default() };
        let e = RunConfig::resolve(FileConfig::default(), flags).unwrap_err();
        assert!(e.to_string().contains("m_i >= 3"));
    }
}
