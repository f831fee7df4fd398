use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(
    name = "weingarten",
    version,
    about = "Linear Weingarten surfaces of revolution: profiles, meshes, classification and checks"
)]
pub struct Cli {
    /// JSON file with default parameters; command-line flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a profile curve (r(s), h(s)) as CSV or SVG.
    Profile(ProfileArgs),
    /// Mesh a surface of revolution or a tube as OBJ, or sample it as CSV.
    Surface(SurfaceArgs),
    /// Classify the parallel family of the triple a K + 2b H + c = 0.
    Classify(ClassifyArgs),
    /// Offset a generated surface along its normal and check the transformed triple.
    Parallel(ParallelArgs),
    /// Report on the hyperbolic family of offsets of the K = -1 dn profile.
    Hyperbolic(HyperbolicArgs),
    /// Run a residual suite and exit 1 if any tolerance is exceeded.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyArg {
    Cn,
    Dn,
    Sphere,
    Pseudosphere,
    Catenoid,
    /// Member of the hyperbolic family, offset `--t` from the K = -1 dn profile.
    Hyperbolic,
    Tube,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveArg {
    Line,
    Circle,
    Helix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Obj,
    Csv,
    Svg,
    Json,
}

impl FormatArg {
    pub fn name(self) -> &'static str {
        match self {
            FormatArg::Obj => "obj",
            FormatArg::Csv => "csv",
            FormatArg::Svg => "svg",
            FormatArg::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetArg {
    Pseudosphere,
    Sphere,
    Catenoid,
    Cn,
    Dn,
    Bonnet,
    Tube,
    Parallel,
    CayleyHamilton,
    Hyperbolic,
    CorruptedFixture,
    All,
}

/// Parameters shared by every command that builds a profile or surface.
#[derive(Debug, Clone, Default, Args)]
pub struct SceneArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Sign of the Gauss curvature for the cn and dn families.
    #[arg(long = "K", allow_negative_numbers = true, value_name = "SIGN")]
    pub k: Option<i32>,
    /// Elliptic modulus in (0, 1).
    #[arg(long)]
    pub p: Option<f64>,
    /// Offset of a hyperbolic family member.
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// Parameter range `lo:hi` along the profile (or tube center curve).
    #[arg(long, allow_hyphen_values = true, value_name = "LO:HI")]
    pub range: Option<String>,
    /// Tube center curve.
    #[arg(long, value_enum)]
    pub curve: Option<CurveArg>,
    /// Tube radius.
    #[arg(long)]
    pub rho: Option<f64>,
    /// Radius of a circle or helix center curve.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Rise per radian of a helix center curve.
    #[arg(long, allow_negative_numbers = true)]
    pub pitch: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub scene: SceneArgs,
    /// Number of samples.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct MeshArgs {
    #[arg(long = "n-s")]
    pub n_s: Option<usize>,
    #[arg(long = "n-theta")]
    pub n_theta: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    #[command(flatten)]
    pub scene: SceneArgs,
    #[command(flatten)]
    pub mesh: MeshArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    #[arg(allow_negative_numbers = true)]
    pub a: f64,
    #[arg(allow_negative_numbers = true)]
    pub b: f64,
    #[arg(allow_negative_numbers = true)]
    pub c: f64,
    /// Relative tolerance for the tubular and c = 0 branches.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ParallelArgs {
    #[command(flatten)]
    pub scene: SceneArgs,
    /// Distance along the normal.
    #[arg(long, allow_negative_numbers = true)]
    pub offset: Option<f64>,
    #[command(flatten)]
    pub mesh: MeshArgs,
}

#[derive(Debug, Clone, Args)]
pub struct HyperbolicArgs {
    #[arg(long)]
    pub p: Option<f64>,
    /// Offsets to report on; repeat or separate by commas.
    #[arg(long = "t", allow_negative_numbers = true, value_delimiter = ',')]
    pub t: Vec<f64>,
    /// Write an SVG of the member profiles here.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Write an OBJ of one period of each immersed member into this directory.
    #[arg(long = "obj-dir", value_name = "DIR")]
    pub obj_dir: Option<PathBuf>,
    #[arg(long = "n-s")]
    pub n_s: Option<usize>,
    #[arg(long = "n-theta")]
    pub n_theta: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub target: Option<TargetArg>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Tolerance for every check, replacing the per-check defaults.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
