//! JSON configuration files. Every key is optional and is overridden by the
//! matching command-line flag.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::args::{CurveArg, FamilyArg, FormatArg, SceneArgs, TargetArg};
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RangeValue {
    Text(String),
    Pair([f64; 2]),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany {
    One(f64),
    Many(Vec<f64>),
}

impl OneOrMany {
    pub fn single(&self) -> CliResult<f64> {
        match self {
            OneOrMany::One(v) => Ok(*v),
            OneOrMany::Many(v) if v.len() == 1 => Ok(v[0]),
            OneOrMany::Many(_) => Err(CliError::bad("config key t must be a single number here")),
        }
    }

    pub fn list(&self) -> Vec<f64> {
        match self {
            OneOrMany::One(v) => vec![*v],
            OneOrMany::Many(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneConfig {
    pub family: Option<FamilyArg>,
    #[serde(rename = "K")]
    pub k: Option<i32>,
    pub p: Option<f64>,
    pub t: Option<OneOrMany>,
    pub offset: Option<f64>,
    pub range: Option<RangeValue>,
    pub curve: Option<CurveArg>,
    pub rho: Option<f64>,
    pub radius: Option<f64>,
    pub pitch: Option<f64>,
    pub n: Option<usize>,
    pub n_s: Option<usize>,
    pub n_theta: Option<usize>,
    pub format: Option<FormatArg>,
    pub output: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub obj_dir: Option<PathBuf>,
    pub target: Option<TargetArg>,
    pub tol: Option<f64>,
}

impl SceneConfig {
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::bad(format!("config {}: {e}", path.display())))
    }

    /// Flags over config values, field by field.
    pub fn merge_scene(&self, flags: &SceneArgs) -> CliResult<SceneArgs> {
        let t = match (flags.t, &self.t) {
            (Some(t), _) => Some(t),
            (None, Some(v)) => Some(v.single()?),
            (None, None) => None,
        };
        let range = match (&flags.range, &self.range) {
            (Some(r), _) => Some(r.clone()),
            (None, Some(RangeValue::Text(r))) => Some(r.clone()),
            (None, Some(RangeValue::Pair([lo, hi]))) => Some(format!("{lo}:{hi}")),
            (None, None) => None,
        };
        Ok(SceneArgs {
            family: flags.family.or(self.family),
            k: flags.k.or(self.k),
            p: flags.p.or(self.p),
            t,
            range,
            curve: flags.curve.or(self.curve),
            rho: flags.rho.or(self.rho),
            radius: flags.radius.or(self.radius),
            pitch: flags.pitch.or(self.pitch),
        })
    }
}

/// Parses `lo:hi` with `lo < hi`, both finite.
pub fn parse_range(text: &str) -> CliResult<(f64, f64)> {
    let bad = || CliError::bad(format!("range must look like lo:hi, got {text:?}"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(CliError::bad(format!("range needs finite lo < hi, got {text:?}")));
    }
    Ok((lo, hi))
}
