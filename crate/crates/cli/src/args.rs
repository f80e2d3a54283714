use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equicenter::CenterKind;

#[derive(Debug, Parser)]
#[command(
    name = "equicenter",
    version,
    about = "Equivariant centers of smooth planar Jordan domains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical center of a domain.
    Center {
        #[command(flatten)]
        domain: DomainArgs,
        /// Omit for all three kinds.
        #[arg(long)]
        kind: Option<Kind>,
    },
    /// Build the interior map and evaluate it at points.
    Map {
        #[command(flatten)]
        domain: DomainArgs,
        /// Image of the origin; defaults to the canonical centroid.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Option<[f64; 2]>,
        /// Direction of the derivative at the origin.
        #[arg(long, value_parser = parse_point, default_value = "1,0", allow_hyphen_values = true)]
        direction: [f64; 2],
        /// Points to evaluate, `x,y`; repeatable.
        #[arg(long = "eval", value_parser = parse_point, allow_hyphen_values = true)]
        eval: Vec<[f64; 2]>,
        #[arg(long)]
        inverse: bool,
        /// Write the map's stage diagnostics as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Retract a point onto the domain along its exterior map.
    RetractPoint {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(value_parser = parse_point, allow_hyphen_values = true)]
        x: [f64; 2],
        #[arg(default_value_t = 1.0)]
        t: f64,
    },
    /// Frames of the deformation to the round disk, as CSV or SVG.
    Flow {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value = "centroid")]
        kind: Kind,
        #[arg(long, default_value_t = 16)]
        frames: usize,
        /// `.svg` writes a layered drawing, anything else CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reach and medial axis.
    Reach {
        #[command(flatten)]
        domain: DomainArgs,
        /// Medial-axis vertices as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inward offset of the boundary.
    Offset {
        #[command(flatten)]
        domain: DomainArgs,
        /// Offset distance; defaults to half the reach.
        #[arg(long)]
        s: Option<f64>,
        /// Offset curve as a curve file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a property-verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 512)]
        n: usize,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// SVG of a domain with its half-reach core and its centers.
    Render {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    /// Curve file `{"samples": [[x, y], ...], "closed": true}`.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "shape")]
    pub input: Option<PathBuf>,
    /// circle, ellipse, egg, lune-smoothed or blob.
    #[arg(long, required_unless_present = "input")]
    pub shape: Option<String>,
    /// Circle radius.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<f64>,
    /// Ellipse or egg semi-axis along x.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Ellipse or egg semi-axis along y.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Egg asymmetry, `b sin θ (1 + k cos θ)`.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<f64>,
    /// Center of a generated shape.
    #[arg(long, value_parser = parse_point, default_value = "0,0", allow_hyphen_values = true)]
    pub at: [f64; 2],
    /// Boundary samples.
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    /// Map boundary defect, relative to the diameter.
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Centroid,
    Circumcenter,
    Steiner,
}

impl From<Kind> for CenterKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Centroid => CenterKind::Centroid,
            Kind::Circumcenter => CenterKind::Circumcenter,
            Kind::Steiner => CenterKind::Steiner,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Equivariance,
    ConvexAgreement,
    Interiority,
    Reach,
    Flow,
    Convergence,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Equivariance => "equivariance",
            Suite::ConvexAgreement => "convex-agreement",
            Suite::Interiority => "interiority",
            Suite::Reach => "reach",
            Suite::Flow => "flow",
            Suite::Convergence => "convergence",
            Suite::All => "all",
        }
    }
}

fn parse_point(s: &str) -> Result<[f64; 2], String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got {s:?}"))?;
    let parse = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    let p = [parse(x)?, parse(y)?];
    if p.iter().all(|v| v.is_finite()) {
        Ok(p)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}
