//! Resolves command-line parameters into a concrete profile or surface.

use std::f64::consts::PI;

use weingarten::hyperbolic::{family_member, FamilyMember};
use weingarten::parallel::LWCoefficients;
use weingarten::profiles::{
    profile_catenoid, profile_cn, profile_dn, profile_pseudosphere, profile_sphere, revolve, Circle,
    Helix, ProfileCurve, StraightLine, Tube,
};
use weingarten::specfun::EllipticModulus;
use weingarten::surface::{SurfaceMap, Vec3};

use crate::args::{CurveArg, FamilyArg, SceneArgs};
use crate::config::parse_range;
use crate::error::{CliError, CliResult};
use crate::format::{num, Grid};

pub const DEFAULT_P: f64 = 0.5;
pub const DEFAULT_T: f64 = 1.0;

enum Shape {
    Profile {
        profile: ProfileCurve,
        member: Option<FamilyMember>,
    },
    Tube(Box<dyn SurfaceMap>),
}

pub struct Scene {
    pub label: String,
    pub range: (f64, f64),
    pub triple: LWCoefficients,
    shape: Shape,
}

fn modulus(p: Option<f64>) -> CliResult<EllipticModulus> {
    Ok(EllipticModulus::new(p.unwrap_or(DEFAULT_P))?)
}

fn triple(a: f64, b: f64, c: f64) -> LWCoefficients {
    LWCoefficients::new(a, b, c).expect("nonzero triple")
}

impl Scene {
    pub fn build(args: &SceneArgs) -> CliResult<Scene> {
        let family = args.family.ok_or_else(|| CliError::bad("--family is required"))?;
        let k = args.k.unwrap_or(1);
        if k != 1 && k != -1 {
            return Err(CliError::bad(format!("--K must be 1 or -1, got {k}")));
        }
        let given_range = args.range.as_deref().map(parse_range).transpose()?;
        let (label, default_range, triple, shape) = match family {
            FamilyArg::Cn | FamilyArg::Dn => {
                let m = modulus(args.p)?;
                let (kk, p) = (m.k_complete(), m.p());
                let (profile, range, name) = match (family, k) {
                    (FamilyArg::Cn, 1) => (profile_cn(1, m), (-0.95 * kk, 0.95 * kk), "cn"),
                    (FamilyArg::Cn, _) => (profile_cn(-1, m), (0.05 * kk, 0.95 * kk), "cn"),
                    (_, 1) => (profile_dn(1, m), (-0.95 * p * kk, 0.95 * p * kk), "dn"),
                    _ => (profile_dn(-1, m), (0.1 * p * kk, 1.9 * p * kk), "dn"),
                };
                (
                    format!("{name} K={k} p={}", num(p)),
                    range,
                    triple(1.0, 0.0, -(k as f64)),
                    Shape::Profile { profile, member: None },
                )
            }
            FamilyArg::Sphere => (
                "sphere".to_owned(),
                (-4.0, 4.0),
                triple(1.0, 0.0, -1.0),
                Shape::Profile { profile: profile_sphere(), member: None },
            ),
            FamilyArg::Pseudosphere => (
                "pseudosphere".to_owned(),
                (0.2, 4.0),
                triple(1.0, 0.0, 1.0),
                Shape::Profile { profile: profile_pseudosphere(), member: None },
            ),
            FamilyArg::Catenoid => (
                "catenoid".to_owned(),
                (-2.0, 2.0),
                triple(0.0, 1.0, 0.0),
                Shape::Profile { profile: profile_catenoid(), member: None },
            ),
            FamilyArg::Hyperbolic => {
                let m = modulus(args.p)?;
                let t = args.t.unwrap_or(DEFAULT_T);
                if !t.is_finite() {
                    return Err(CliError::bad("--t must be finite"));
                }
                let member = family_member(&m, t);
                (
                    format!("hyperbolic p={} t={}", num(m.p()), num(t)),
                    (0.0, member.s_period),
                    member.lw_coefficients(),
                    Shape::Profile { profile: member.profile.clone(), member: Some(member) },
                )
            }
            FamilyArg::Tube => {
                let rho = args.rho.unwrap_or(1.0);
                let curve = args.curve.unwrap_or(CurveArg::Circle);
                let (surface, range, name): (Box<dyn SurfaceMap>, _, _) = match curve {
                    CurveArg::Line => (
                        Box::new(Tube::new(StraightLine::z_axis(), rho)?),
                        (-2.0, 2.0),
                        "tube line".to_owned(),
                    ),
                    CurveArg::Circle => {
                        let radius = args.radius.unwrap_or(3.0);
                        if !(radius > 0.0 && radius.is_finite()) {
                            return Err(CliError::bad("--radius must be positive"));
                        }
                        (
                            Box::new(Tube::new(Circle { radius }, rho)?),
                            (0.0, 2.0 * PI * radius),
                            format!("tube circle R={}", num(radius)),
                        )
                    }
                    CurveArg::Helix => {
                        let radius = args.radius.unwrap_or(3.0);
                        let pitch = args.pitch.unwrap_or(1.0);
                        if !(radius > 0.0 && radius.is_finite() && pitch.is_finite()) {
                            return Err(CliError::bad("--radius must be positive, --pitch finite"));
                        }
                        let length = radius.hypot(pitch);
                        (
                            Box::new(Tube::new(Helix { radius, pitch }, rho)?),
                            (0.0, 4.0 * PI * length),
                            format!("tube helix R={} pitch={}", num(radius), num(pitch)),
                        )
                    }
                };
                (
                    format!("{name} rho={}", num(rho)),
                    range,
                    triple(rho, 1.0, 1.0 / rho),
                    Shape::Tube(surface),
                )
            }
        };
        Ok(Scene {
            label,
            range: given_range.unwrap_or(default_range),
            triple,
            shape,
        })
    }

    pub fn profile(&self) -> CliResult<&ProfileCurve> {
        match &self.shape {
            Shape::Profile { profile, .. } => Ok(profile),
            Shape::Tube(_) => Err(CliError::bad("tubes have no profile curve")),
        }
    }

    pub fn surface(&self) -> Box<dyn SurfaceMap + '_> {
        match &self.shape {
            Shape::Profile { profile, .. } => Box::new(revolve(profile.clone())),
            Shape::Tube(surface) => Box::new(surface.as_ref()),
        }
    }

    /// Parameters in `[lo, hi]` where the surface fails to be immersed.
    pub fn singular_parameters(&self, lo: f64, hi: f64) -> Vec<f64> {
        match &self.shape {
            Shape::Profile { member: Some(member), .. } => {
                let mut all = member.singular_parameters(lo, hi);
                all.extend(member.axis_parameters(lo, hi));
                all.sort_by(f64::total_cmp);
                all
            }
            Shape::Profile { profile, .. } => {
                profile.singular_set().map_or_else(Vec::new, |set| set.within(lo, hi))
            }
            Shape::Tube(_) => Vec::new(),
        }
    }

    /// Refuses patches that contain singular parameters (exit code 3).
    pub fn check_patch(&self) -> CliResult<()> {
        let (lo, hi) = self.range;
        let bad = self.singular_parameters(lo, hi);
        if bad.is_empty() {
            return Ok(());
        }
        let list: Vec<String> = bad.iter().take(20).map(|&s| num(s)).collect();
        Err(CliError::Singular(format!(
            "{} is not immersed on [{}, {}]; singular at s = {}{}",
            self.label,
            num(lo),
            num(hi),
            list.join(", "),
            if bad.len() > 20 { ", ..." } else { "" }
        )))
    }
}

/// Parameter grid `u_i` (endpoints included) by `v_j = 2πj/n_v`.
pub fn parameter_grid(range: (f64, f64), n_u: usize, n_v: usize) -> Vec<(f64, f64)> {
    let (lo, hi) = range;
    let mut out = Vec::with_capacity(n_u * n_v);
    for i in 0..n_u {
        let u = lo + (hi - lo) * i as f64 / (n_u - 1) as f64;
        for j in 0..n_v {
            out.push((u, 2.0 * PI * j as f64 / n_v as f64));
        }
    }
    out
}

pub fn sample_grid<M: SurfaceMap + ?Sized>(surface: &M, range: (f64, f64), n_u: usize, n_v: usize) -> CliResult<Grid> {
    let points: Vec<Vec3> = parameter_grid(range, n_u, n_v)
        .into_iter()
        .map(|(u, v)| surface.point(u, v))
        .collect();
    if let Some(p) = points.iter().find(|p| !p.iter().all(|c| c.is_finite())) {
        return Err(CliError::Singular(format!("non-finite vertex {p:?}")));
    }
    Ok(Grid { n_u, n_v, points })
}

pub fn check_mesh_size(n_s: usize, n_theta: usize) -> CliResult<()> {
    if n_s < 2 || n_theta < 3 {
        return Err(CliError::bad(format!(
            "need n_s >= 2 and n_theta >= 3, got {n_s} and {n_theta}"
        )));
    }
    Ok(())
}
