use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use weingarten::hyperbolic::{
    axis_crossing_range, base_period, family_member, polylines_svg, profile_svg, safe_interval,
    singular_range, FamilyMember,
};
use weingarten::parallel::{classify, LWCoefficients, ParallelSurface, DEFAULT_CLASSIFY_TOL};
use weingarten::specfun::EllipticModulus;
use weingarten::surface::SurfaceMap;

use crate::args::{
    ClassifyArgs, FormatArg, HyperbolicArgs, MeshArgs, ParallelArgs, ProfileArgs, SurfaceArgs,
};
use crate::config::SceneConfig;
use crate::error::{CliError, CliResult};
use crate::format::{csv_row, Grid};
use crate::scene::{check_mesh_size, parameter_grid, sample_grid, Scene, DEFAULT_P};

pub const DEFAULT_PROFILE_SAMPLES: usize = 200;
pub const DEFAULT_GRID: usize = 64;

/// Writes to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            // A closed pipe (`| head`) is not an error.
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .or_else(|e| match e.kind() {
                    std::io::ErrorKind::BrokenPipe => Ok(()),
                    _ => Err(e),
                })
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn triple_json(lw: &LWCoefficients) -> Value {
    json!({ "a": lw.a(), "b": lw.b(), "c": lw.c() })
}

pub fn profile(args: &ProfileArgs, cfg: &SceneConfig) -> CliResult<()> {
    let scene = Scene::build(&cfg.merge_scene(&args.scene)?)?;
    let profile = scene.profile()?;
    let n = args.n.or(cfg.n).unwrap_or(DEFAULT_PROFILE_SAMPLES);
    if n < 2 {
        return Err(CliError::bad(format!("need at least 2 samples, got {n}")));
    }
    let (lo, hi) = scene.range;
    let points: Vec<_> = (0..n)
        .map(|i| profile.eval(lo + (hi - lo) * i as f64 / (n - 1) as f64))
        .collect();
    if let Some(pt) = points
        .iter()
        .find(|pt| ![pt.r, pt.h, pt.dr, pt.dh].iter().all(|v| v.is_finite()))
    {
        return Err(CliError::Singular(format!("non-finite profile value at s = {}", pt.s)));
    }
    let text = match args.format.or(cfg.format).unwrap_or(FormatArg::Csv) {
        FormatArg::Csv => {
            let mut out = String::from("s,r,h,r',h'\n");
            for pt in &points {
                out.push_str(&csv_row(&[pt.s, pt.r, pt.h, pt.dr, pt.dh]));
            }
            out
        }
        FormatArg::Svg => {
            let curve: Vec<_> = points.iter().map(|pt| (pt.r, pt.h)).collect();
            polylines_svg(&[curve], None)?
        }
        other => return Err(CliError::bad(format!("profile cannot be written as {}", other.name()))),
    };
    emit(args.output.as_deref().or(cfg.output.as_deref()), &text)
}

struct MeshSettings {
    n_s: usize,
    n_theta: usize,
    format: FormatArg,
    output: Option<PathBuf>,
}

fn mesh_settings(mesh: &MeshArgs, cfg: &SceneConfig, default_format: FormatArg) -> CliResult<MeshSettings> {
    let settings = MeshSettings {
        n_s: mesh.n_s.or(cfg.n_s).unwrap_or(DEFAULT_GRID),
        n_theta: mesh.n_theta.or(cfg.n_theta).unwrap_or(DEFAULT_GRID),
        format: mesh.format.or(cfg.format).unwrap_or(default_format),
        output: mesh.output.clone().or_else(|| cfg.output.clone()),
    };
    check_mesh_size(settings.n_s, settings.n_theta)?;
    Ok(settings)
}

/// OBJ mesh or CSV table `u,v,x,y,z,K,H` of a surface over a grid.
fn write_mesh<M: SurfaceMap + ?Sized>(
    surface: &M,
    label: &str,
    range: (f64, f64),
    settings: &MeshSettings,
) -> CliResult<()> {
    let text = match settings.format {
        FormatArg::Obj => sample_grid(surface, range, settings.n_s, settings.n_theta)?.to_obj(label),
        FormatArg::Csv => {
            let mut out = String::from("u,v,x,y,z,K,H\n");
            for (u, v) in parameter_grid(range, settings.n_s, settings.n_theta) {
                let x = surface.point(u, v);
                let c = surface.curvature(u, v)?;
                out.push_str(&csv_row(&[u, v, x.x, x.y, x.z, c.gauss, c.mean]));
            }
            out
        }
        other => return Err(CliError::bad(format!("surfaces cannot be written as {}", other.name()))),
    };
    emit(settings.output.as_deref(), &text)
}

pub fn surface(args: &SurfaceArgs, cfg: &SceneConfig) -> CliResult<()> {
    let scene = Scene::build(&cfg.merge_scene(&args.scene)?)?;
    let settings = mesh_settings(&args.mesh, cfg, FormatArg::Obj)?;
    scene.check_patch()?;
    let surface = scene.surface();
    write_mesh(&surface, &scene.label, scene.range, &settings)
}

pub fn classify_report(lw: &LWCoefficients, tol: f64) -> Value {
    let class = classify(lw, tol);
    let offsets: Vec<Value> = class
        .offsets
        .iter()
        .map(|o| json!({ "label": o.label, "t": o.t }))
        .collect();
    json!({
        "a": lw.a(),
        "b": lw.b(),
        "c": lw.c(),
        "discriminant": class.discriminant,
        "kind": class.kind.name(),
        "offsets": offsets,
        "K_at_cgc_offset": class.k_at_cgc_offset,
        "constant_principal_curvature": class.constant_principal_curvature,
    })
}

pub fn classify_cmd(args: &ClassifyArgs, cfg: &SceneConfig) -> CliResult<()> {
    let lw = LWCoefficients::new(args.a, args.b, args.c)?;
    let tol = args.tol.or(cfg.tol).unwrap_or(DEFAULT_CLASSIFY_TOL);
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(CliError::bad(format!("tolerance must be finite and >= 0, got {tol}")));
    }
    emit(None, &json_text(&classify_report(&lw, tol)))
}

pub fn parallel(args: &ParallelArgs, cfg: &SceneConfig) -> CliResult<()> {
    let scene = Scene::build(&cfg.merge_scene(&args.scene)?)?;
    let settings = mesh_settings(&args.mesh, cfg, FormatArg::Json)?;
    let t = args
        .offset
        .or(cfg.offset)
        .ok_or_else(|| CliError::bad("--offset is required"))?;
    if !t.is_finite() {
        return Err(CliError::bad("--offset must be finite"));
    }
    scene.check_patch()?;
    let offset = ParallelSurface::new(scene.surface(), t);
    let label = format!("{} offset={}", scene.label, crate::format::num(t));
    if settings.format != FormatArg::Json {
        return write_mesh(&offset, &label, scene.range, &settings);
    }
    let lw = scene.triple.transform(t);
    let samples = parameter_grid(scene.range, settings.n_s, settings.n_theta);
    let mut worst = 0.0_f64;
    for &(u, v) in &samples {
        let c = offset.curvature(u, v)?;
        worst = worst.max(lw.residual(c.gauss, c.mean).abs());
    }
    let report = json!({
        "surface": scene.label,
        "offset": t,
        "base_triple": triple_json(&scene.triple),
        "triple": triple_json(&lw),
        "discriminant": lw.discriminant(),
        "kind": classify(&lw, DEFAULT_CLASSIFY_TOL).kind.name(),
        "samples": samples.len(),
        "max_residual": worst,
    });
    emit(settings.output.as_deref(), &json_text(&report))
}

fn interval_json(lo: f64, hi: f64) -> Value {
    json!([lo, hi])
}

fn member_report(member: &FamilyMember) -> Value {
    let status = member.status();
    let scan = member.scan();
    let lw = member.lw_coefficients();
    json!({
        "t": member.t,
        "status": status.label(),
        "singular": status.singular,
        "hits_axis": status.hits_axis,
        "singular_at": member.singular_parameters(0.0, member.s_period)
            .into_iter().filter(|&s| s < member.s_period).collect::<Vec<_>>(),
        "axis_at": member.axis_parameters(0.0, member.s_period)
            .into_iter().filter(|&s| s < member.s_period).collect::<Vec<_>>(),
        "min_speed": scan.min_speed,
        "min_radius": scan.min_radius,
        "triple": triple_json(&lw),
        "discriminant": lw.discriminant(),
    })
}

pub fn hyperbolic(args: &HyperbolicArgs, cfg: &SceneConfig) -> CliResult<()> {
    let m = EllipticModulus::new(args.p.or(cfg.p).unwrap_or(DEFAULT_P))?;
    let ts = if !args.t.is_empty() {
        args.t.clone()
    } else {
        cfg.t.as_ref().map_or_else(|| vec![crate::scene::DEFAULT_T], |t| t.list())
    };
    if let Some(t) = ts.iter().find(|t| !t.is_finite()) {
        return Err(CliError::bad(format!("offsets must be finite, got {t}")));
    }
    let n_s = args.n_s.or(cfg.n_s).unwrap_or(DEFAULT_GRID);
    let n_theta = args.n_theta.or(cfg.n_theta).unwrap_or(DEFAULT_GRID);
    check_mesh_size(n_s, n_theta)?;

    let members: Vec<FamilyMember> = ts.iter().map(|&t| family_member(&m, t)).collect();
    let safe = safe_interval(&m);
    let (base_s, base_h) = base_period(&m);
    let first = family_member(&m, 0.0);
    let report = json!({
        "p": m.p(),
        "q": m.q(),
        "safe_interval": safe.map(|s| interval_json(s.lo, s.hi)),
        "safe_interval_negative": safe.map(|s| { let n = s.mirrored(); interval_json(n.lo, n.hi) }),
        "singular_range": { "abs_t_at_most": singular_range(&m).bound },
        "axis_range": { "abs_t_at_least": axis_crossing_range(&m).bound },
        "s_period": first.s_period,
        "h_translation": first.h_translation,
        "base_period": { "s_period": base_s, "h_translation": base_h },
        "members": members.iter().map(member_report).collect::<Vec<_>>(),
    });

    if let Some(path) = args.svg.as_deref().or(cfg.svg.as_deref()) {
        if !members.is_empty() {
            emit(Some(path), &profile_svg(&members, None)?)?;
        }
    }
    if let Some(dir) = args.obj_dir.as_deref().or(cfg.obj_dir.as_deref()) {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?;
        for member in members.iter().filter(|m| m.status().immersed()) {
            let grid: Grid = sample_grid(&member.surface(), (0.0, member.s_period), n_s, n_theta)?;
            let name = format!("hyperbolic_t{}.obj", crate::format::num(member.t));
            let label = format!("hyperbolic p={} t={}", crate::format::num(m.p()), crate::format::num(member.t));
            emit(Some(&dir.join(name)), &grid.to_obj(&label))?;
        }
    }
    emit(args.output.as_deref().or(cfg.output.as_deref()), &json_text(&report))
}
