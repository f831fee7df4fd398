//! Residual suites behind `weingarten verify`.

use serde_json::{json, Value};
use weingarten::hyperbolic::{family_member, safe_interval};
use weingarten::parallel::{classify, lw_residual, LWCoefficients, ParallelSurface, DEFAULT_CLASSIFY_TOL};
use weingarten::profiles::{
    profile_catenoid, profile_cn, profile_dn, profile_from_ode, profile_pseudosphere, profile_sphere,
    revolve, Circle, Helix, ProfileCurve, StraightLine, Tube,
};
use weingarten::specfun::oracle::integrate;
use weingarten::specfun::EllipticModulus;
use weingarten::surface::{curvatures, fd_jet_richardson, forms, SurfaceMap};

use crate::args::TargetArg;
use crate::error::{CliError, CliResult};

pub const TOL_ENV: &str = "WEINGARTEN_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub comparison: Comparison,
}

impl Check {
    fn at_most(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            value,
            bound,
            comparison: Comparison::AtMost,
        }
    }

    fn at_least(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            value,
            bound,
            comparison: Comparison::AtLeast,
        }
    }

    pub fn passed(&self) -> bool {
        match self.comparison {
            Comparison::AtMost => self.value <= self.bound,
            Comparison::AtLeast => self.value >= self.bound,
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "value": self.value,
            "comparison": match self.comparison { Comparison::AtMost => "<=", Comparison::AtLeast => ">=" },
            "bound": self.bound,
            "pass": self.passed(),
        })
    }
}

/// `--tol` or config value first, then the environment, else per-check defaults.
pub fn resolve_tolerance(explicit: Option<f64>) -> CliResult<Option<f64>> {
    let tol = match explicit {
        Some(t) => Some(t),
        None => match std::env::var(TOL_ENV) {
            Ok(text) => Some(
                text.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::bad(format!("{TOL_ENV}={text:?} is not a number")))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(t) = tol {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(CliError::bad(format!("tolerance must be finite and >= 0, got {t}")));
        }
    }
    Ok(tol)
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

/// `(s, θ)` samples in `[lo, hi]` at least `gap` away from the profile's singular set.
fn revolution_samples(profile: &ProfileCurve, lo: f64, hi: f64, n: usize, gap: f64) -> Vec<(f64, f64)> {
    linspace(lo, hi, n)
        .enumerate()
        .filter(|&(_, s)| profile.distance_to_singular(s) > gap)
        .map(|(i, s)| (s, 0.37 * i as f64))
        .collect()
}

fn max_over<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().fold(0.0_f64, |acc, v| if v.is_nan() { f64::NAN } else { acc.max(v) })
}

fn curvature_gap<M: SurfaceMap>(surface: &M, samples: &[(f64, f64)], target: f64) -> f64 {
    max_over(samples.iter().map(|&(u, v)| {
        surface.curvature(u, v).map_or(f64::INFINITY, |c| (c.gauss - target).abs())
    }))
}

/// Gauss curvature, first integral and RK4 agreement of a closed-form profile.
fn cgc_checks(name: &str, profile: ProfileCurve, range: (f64, f64), ode_span: f64) -> Vec<Check> {
    let k = profile.k_target().expect("constant curvature profile");
    let samples = revolution_samples(&profile, range.0, range.1, 1000, 1e-2);
    let first_integral = max_over(samples.iter().map(|&(s, _)| {
        profile
            .ode_residuals(s)
            .map_or(f64::INFINITY, |(a, b)| a.abs().max(b.abs()))
    }));
    let cgc = profile.cgc().expect("constant curvature profile");
    let ode_gap = match profile_from_ode(cgc, profile.eval(0.0).r, -1.0, ode_span, 1e-3) {
        Ok(numeric) => max_over(linspace(0.0, ode_span, 1000).map(|s| {
            let (a, b) = (numeric.eval(s), profile.eval(s));
            (a.r - b.r).abs().max((a.h - b.h).abs())
        })),
        Err(_) => f64::INFINITY,
    };
    let surface = revolve(profile);
    vec![
        Check::at_most(format!("{name}/gauss"), curvature_gap(&surface, &samples, k), 1e-8),
        Check::at_most(format!("{name}/first_integral"), first_integral, 1e-10),
        Check::at_most(format!("{name}/ode"), ode_gap, 1e-7),
    ]
}

fn modulus(p: f64) -> CliResult<EllipticModulus> {
    Ok(EllipticModulus::new(p)?)
}

fn cn_checks(p: f64) -> CliResult<Vec<Check>> {
    let m = modulus(p)?;
    let kk = m.k_complete();
    let mut out = cgc_checks("cn+", profile_cn(1, m), (-2.0 * kk, 2.0 * kk), 4.0 * kk);
    out.extend(cgc_checks("cn-", profile_cn(-1, m), (-2.0 * kk, 2.0 * kk), 4.0 * kk));
    Ok(out)
}

fn dn_checks(p: f64) -> CliResult<Vec<Check>> {
    let m = modulus(p)?;
    let period = 2.0 * m.p() * m.k_complete();
    let mut out = cgc_checks("dn+", profile_dn(1, m), (-period, period), period);
    out.extend(cgc_checks("dn-", profile_dn(-1, m), (-period, period), period));
    Ok(out)
}

fn catenoid_checks() -> Vec<Check> {
    let surface = revolve(profile_catenoid());
    let samples: Vec<_> = linspace(-2.0, 2.0, 1000).map(|s| (s, 0.37 * s)).collect();
    let mut mean = 0.0_f64;
    let mut gauss = 0.0_f64;
    for &(s, th) in &samples {
        match surface.curvature(s, th) {
            Ok(c) => {
                mean = mean.max(c.mean.abs());
                gauss = gauss.max((c.gauss + s.cosh().powi(-4)).abs());
            }
            Err(_) => mean = f64::INFINITY,
        }
    }
    vec![
        Check::at_most("catenoid/mean", mean, 1e-9),
        Check::at_most("catenoid/gauss", gauss, 1e-9),
    ]
}

fn bonnet_checks(p: f64) -> CliResult<Vec<Check>> {
    let m = modulus(p)?;
    let profile = profile_dn(1, m);
    let half = m.p() * m.k_complete();
    let samples = revolution_samples(&profile, -half, 3.0 * half, 1000, 1e-2);
    let base = revolve(profile);
    let lw = LWCoefficients::new(1.0, 0.0, -1.0)?;
    let class = classify(&lw, DEFAULT_CLASSIFY_TOL);
    let cmc: Vec<f64> = class.offsets.iter().filter(|o| o.label == "cmc").map(|o| o.t).collect();
    let mut out = vec![Check::at_most(
        "bonnet/cmc_offsets",
        if cmc.len() == 2 { (cmc[0] + 1.0).abs().max((cmc[1] - 1.0).abs()) } else { f64::INFINITY },
        1e-12,
    )];
    for t in cmc {
        let offset = ParallelSurface::new(&base, t);
        let gap = max_over(samples.iter().map(|&(s, th)| {
            offset.curvature(s, th).map_or(f64::INFINITY, |c| (c.mean.abs() - 0.5).abs())
        }));
        out.push(Check::at_most(format!("bonnet/mean_at_t={t}"), gap, 1e-7));
    }
    Ok(out)
}

fn tube_case<M: SurfaceMap>(name: &str, tube: &M, rho: f64, u_range: (f64, f64)) -> Vec<Check> {
    let lw = LWCoefficients::new(rho, 1.0, 1.0 / rho).expect("tube triple");
    let mut residual = 0.0_f64;
    let mut constant = 0.0_f64;
    for (i, u) in linspace(u_range.0, u_range.1, 200).enumerate() {
        let v = 0.1 + 0.29 * i as f64;
        match tube.curvature(u, v) {
            Ok(c) => {
                residual = residual.max(lw.residual(c.gauss, c.mean).abs());
                let k = (lw.a() * c.kappa1 + lw.b())
                    .abs()
                    .min((lw.a() * c.kappa2 + lw.b()).abs());
                constant = constant.max(k);
            }
            Err(_) => residual = f64::INFINITY,
        }
    }
    let tubular = classify(&lw, DEFAULT_CLASSIFY_TOL).kind.name() == "Tubular";
    vec![
        Check::at_most(format!("tube/{name}/residual"), residual, 1e-9),
        Check::at_most(format!("tube/{name}/constant_principal_curvature"), constant, 1e-8),
        Check::at_most(format!("tube/{name}/classified_tubular"), if tubular { 0.0 } else { 1.0 }, 0.0),
    ]
}

fn tube_checks() -> CliResult<Vec<Check>> {
    let mut out = tube_case("cylinder", &Tube::new(StraightLine::z_axis(), 2.0)?, 2.0, (-3.0, 3.0));
    out.extend(tube_case("torus", &Tube::new(Circle { radius: 3.0 }, 1.0)?, 1.0, (0.0, 19.0)));
    out.extend(tube_case(
        "helix",
        &Tube::new(Helix { radius: 3.0, pitch: 1.0 }, 0.5)?,
        0.5,
        (0.0, 20.0),
    ));
    Ok(out)
}

/// Generated surfaces with their own triples, sampled away from singular parameters.
fn lw_fixtures() -> CliResult<Vec<(String, Box<dyn SurfaceMap>, LWCoefficients, Vec<(f64, f64)>)>> {
    let m = modulus(0.5)?;
    let kk = m.k_complete();
    let pk = m.p() * kk;
    let revolved = |name: &str, profile: ProfileCurve, lo: f64, hi: f64, lw: (f64, f64, f64)| {
        let samples = revolution_samples(&profile, lo, hi, 60, 5e-2);
        (
            name.to_owned(),
            Box::new(revolve(profile)) as Box<dyn SurfaceMap>,
            LWCoefficients::new(lw.0, lw.1, lw.2).expect("fixture triple"),
            samples,
        )
    };
    let torus_samples: Vec<_> = linspace(0.0, 18.0, 60).map(|u| (u, 0.3 + 0.41 * u)).collect();
    Ok(vec![
        revolved("sphere", profile_sphere(), -2.0, 2.0, (1.0, 0.0, -1.0)),
        revolved("pseudosphere", profile_pseudosphere(), 0.3, 2.0, (1.0, 0.0, 1.0)),
        revolved("cn+", profile_cn(1, m), -0.9 * kk, 0.9 * kk, (1.0, 0.0, -1.0)),
        revolved("cn-", profile_cn(-1, m), 0.1 * kk, 0.9 * kk, (1.0, 0.0, 1.0)),
        revolved("dn+", profile_dn(1, m), -0.9 * pk, 0.9 * pk, (1.0, 0.0, -1.0)),
        revolved("dn-", profile_dn(-1, m), 0.1 * pk, 1.9 * pk, (1.0, 0.0, 1.0)),
        revolved("catenoid", profile_catenoid(), -1.5, 1.5, (0.0, 1.0, 0.0)),
        (
            "torus".to_owned(),
            Box::new(Tube::new(Circle { radius: 3.0 }, 1.0)?),
            LWCoefficients::new(1.0, 1.0, 1.0)?,
            torus_samples,
        ),
    ])
}

/// Step of the extrapolated finite-difference jet of the offset map.
const H_FD: f64 = 4e-3;

pub const LEMMA_OFFSETS: [f64; 5] = [-0.3, -0.15, 0.1, 0.2, 0.3];

/// Curvatures of `x + t n` from finite differences of the offset map itself,
/// against the transformed triple. Samples within reach of a focal point
/// (`|1 − 2tH + t²K| < 0.2`) are skipped.
fn parallel_checks() -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    for (name, surface, lw, samples) in lw_fixtures()? {
        let mut worst = 0.0_f64;
        for t in LEMMA_OFFSETS {
            let lw_t = lw.transform(t);
            let offset_map = |u: f64, v: f64| {
                let c = surface.curvature(u, v).expect("fixture samples are regular");
                surface.point(u, v) + t * c.normal
            };
            for &(u, v) in &samples {
                let base = surface.curvature(u, v)?;
                if (1.0 - 2.0 * t * base.mean + t * t * base.gauss).abs() < 0.2 {
                    continue;
                }
                let jet = fd_jet_richardson(offset_map, u, v, H_FD);
                let value = match curvatures(&jet) {
                    Ok(c) => {
                        let c = c.oriented_along(&base.normal);
                        lw_t.residual(c.gauss, c.mean).abs()
                    }
                    Err(_) => f64::INFINITY,
                };
                worst = if value.is_nan() { f64::NAN } else { worst.max(value) };
            }
        }
        out.push(Check::at_most(format!("parallel/{name}"), worst, 1e-6));
    }
    Ok(out)
}

fn cayley_hamilton_checks() -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    for (name, surface, _, samples) in lw_fixtures()? {
        let worst = max_over(samples.iter().map(|&(u, v)| {
            let jet = surface.jet(u, v);
            match (forms(&jet), curvatures(&jet)) {
                (Ok(f), Ok(c)) => f.cayley_hamilton_residual(c.gauss, c.mean),
                _ => f64::INFINITY,
            }
        }));
        out.push(Check::at_most(format!("cayley-hamilton/{name}"), worst, 1e-9));
    }
    Ok(out)
}

fn hyperbolic_checks(p: f64) -> CliResult<Vec<Check>> {
    let m = modulus(p)?;
    let mut out = Vec::new();
    let Some(safe) = safe_interval(&m) else {
        out.push(Check::at_most("hyperbolic/safe_interval_exists", 1.0, 0.0));
        return Ok(out);
    };
    out.push(Check::at_most(
        "hyperbolic/safe_interval",
        (safe.lo - m.p() / m.q()).abs().max((safe.hi - m.q() / m.p()).abs()),
        1e-15,
    ));
    let t = 0.5 * (safe.lo + safe.hi);
    let member = family_member(&m, t);
    let scan = member.scan();
    out.push(Check::at_least("hyperbolic/min_speed", scan.min_speed, 1e-3));
    out.push(Check::at_least("hyperbolic/min_radius", scan.min_radius, 1e-3));
    let samples: Vec<_> = linspace(0.0, member.s_period, 1000)
        .enumerate()
        .map(|(i, s)| (s, 0.1 * i as f64))
        .collect();
    out.push(Check::at_most(
        "hyperbolic/lw_residual",
        lw_residual(&member.surface(), &member.lw_coefficients(), &samples).unwrap_or(f64::INFINITY),
        1e-7,
    ));
    let numeric = integrate(|s| member.profile.eval(s).dh, 0.0, member.s_period, 1e-13);
    out.push(Check::at_most(
        "hyperbolic/h_translation",
        (numeric - member.h_translation).abs(),
        1e-9,
    ));
    let singular = family_member(&m, 0.5 * safe.lo);
    let root = singular
        .locate_singularity()
        .map_or(f64::INFINITY, |s| singular.speed_factor(s).abs());
    out.push(Check::at_most("hyperbolic/singularity_root", root, 1e-10));
    Ok(out)
}

/// Pseudosphere data held against the sphere's curvature: must fail.
fn corrupted_checks() -> Vec<Check> {
    let profile = profile_pseudosphere();
    let samples = revolution_samples(&profile, 0.2, 3.0, 200, 1e-2);
    let surface = revolve(profile);
    vec![Check::at_most(
        "corrupted-fixture/gauss",
        curvature_gap(&surface, &samples, 1.0),
        1e-8,
    )]
}

pub fn target_name(target: TargetArg) -> &'static str {
    match target {
        TargetArg::Pseudosphere => "pseudosphere",
        TargetArg::Sphere => "sphere",
        TargetArg::Catenoid => "catenoid",
        TargetArg::Cn => "cn",
        TargetArg::Dn => "dn",
        TargetArg::Bonnet => "bonnet",
        TargetArg::Tube => "tube",
        TargetArg::Parallel => "parallel",
        TargetArg::CayleyHamilton => "cayley-hamilton",
        TargetArg::Hyperbolic => "hyperbolic",
        TargetArg::CorruptedFixture => "corrupted-fixture",
        TargetArg::All => "all",
    }
}

pub fn run_target(target: TargetArg, p: Option<f64>) -> CliResult<Vec<Check>> {
    Ok(match target {
        TargetArg::Pseudosphere => cgc_checks("pseudosphere", profile_pseudosphere(), (-3.0, 3.0), 4.0),
        TargetArg::Sphere => cgc_checks("sphere", profile_sphere(), (-3.0, 3.0), 4.0),
        TargetArg::Catenoid => catenoid_checks(),
        TargetArg::Cn => cn_checks(p.unwrap_or(0.5))?,
        TargetArg::Dn => dn_checks(p.unwrap_or(0.5))?,
        TargetArg::Bonnet => bonnet_checks(p.unwrap_or(0.6))?,
        TargetArg::Tube => tube_checks()?,
        TargetArg::Parallel => parallel_checks()?,
        TargetArg::CayleyHamilton => cayley_hamilton_checks()?,
        TargetArg::Hyperbolic => hyperbolic_checks(p.unwrap_or(0.5))?,
        TargetArg::CorruptedFixture => corrupted_checks(),
        TargetArg::All => {
            let mut all = Vec::new();
            for t in [
                TargetArg::Pseudosphere,
                TargetArg::Sphere,
                TargetArg::Catenoid,
                TargetArg::Cn,
                TargetArg::Dn,
                TargetArg::Bonnet,
                TargetArg::Tube,
                TargetArg::Parallel,
                TargetArg::CayleyHamilton,
                TargetArg::Hyperbolic,
            ] {
                all.extend(run_target(t, p)?);
            }
            all
        }
    })
}

/// Applies a global tolerance to every `<=` check.
pub fn override_tolerance(checks: &mut [Check], tol: Option<f64>) {
    if let Some(tol) = tol {
        for c in checks.iter_mut().filter(|c| c.comparison == Comparison::AtMost) {
            c.bound = tol;
        }
    }
}

pub fn report(target: TargetArg, tol: Option<f64>, checks: &[Check]) -> Value {
    json!({
        "target": target_name(target),
        "tolerance_override": tol,
        "pass": checks.iter().all(Check::passed),
        "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
    })
}
