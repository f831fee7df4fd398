//! Parallel surfaces `x^t = x + t n` and linear Weingarten coefficient algebra.
//!
//! A surface is linear Weingarten with triple `(a, b, c)` when
//! `a K + 2b H + c = 0`. Offsetting by `t` along the Gauss map keeps this
//! form with the triple `(a + 2tb + t²c, b + tc, c)`, so the discriminant
//! `Δ = b² − ac` is constant along a parallel family.
//!
//! The sign of `b` refers to the surface orientation of [`crate::surface`];
//! reversing the orientation maps `(a, b, c)` to `(a, −b, c)`.

use crate::error::{Error, Result};
use crate::surface::{
    curvatures, forms_with_normal, CurvatureData, SurfaceJet, SurfaceMap, Vec3,
};

/// Default focal threshold on `|1 − 2tH + t²K|`.
pub const DEFAULT_FOCAL_EPS: f64 = 1e-9;

/// Default relative tolerance for the discriminant and `c` tests in [`classify`].
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

/// A linear Weingarten triple `(a, b, c) ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LWCoefficients {
    a: f64,
    b: f64,
    c: f64,
}

impl LWCoefficients {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if a == 0.0 && b == 0.0 && c == 0.0 {
            return Err(Error::InvalidTriple);
        }
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::Domain(format!("non-finite triple ({a}, {b}, {c})")));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `Δ = b² − ac`, evaluated with a fused correction for the cancellation.
    pub fn discriminant(&self) -> f64 {
        let w = self.a * self.c;
        let err = (-self.a).mul_add(self.c, w);
        self.b.mul_add(self.b, -w) + err
    }

    /// `max(|a|, |b|, |c|)`.
    pub fn norm(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(lambda * self.a, lambda * self.b, lambda * self.c)
    }

    /// Triple of the parallel surface at distance `t`: `(a + 2tb + t²c, b + tc, c)`.
    pub fn transform(&self, t: f64) -> Self {
        let b_t = t.mul_add(self.c, self.b);
        // a + 2tb + t²c = a + t(b + b_t)
        let a_t = t.mul_add(self.b + b_t, self.a);
        Self {
            a: a_t,
            b: b_t,
            c: self.c,
        }
    }

    /// `a K + 2b H + c`.
    pub fn residual(&self, gauss: f64, mean: f64) -> f64 {
        self.a * gauss + 2.0 * self.b * mean + self.c
    }

    /// Same triple for the opposite surface orientation.
    pub fn reoriented(&self) -> Self {
        Self {
            a: self.a,
            b: -self.b,
            c: self.c,
        }
    }
}

pub fn transform_coefficients(lw: &LWCoefficients, t: f64) -> LWCoefficients {
    lw.transform(t)
}

pub fn discriminant(lw: &LWCoefficients) -> f64 {
    lw.discriminant()
}

fn focal_factor(gauss: f64, mean: f64, t: f64) -> f64 {
    1.0 - 2.0 * t * mean + t * t * gauss
}

/// `(K^t, H^t) = (K, H − tK) / (1 − 2tH + t²K)`.
pub fn parallel_curvatures(gauss: f64, mean: f64, t: f64) -> Result<(f64, f64)> {
    let factor = focal_factor(gauss, mean, t);
    if factor.abs() <= DEFAULT_FOCAL_EPS {
        return Err(Error::FocalPoint { t, factor });
    }
    Ok((gauss / factor, (mean - t * gauss) / factor))
}

/// Jet of `x + t n` at the point of `jet`, with `n = curv.normal`.
///
/// Position and first partials are exact (`n_u = −S x_u` by the Weingarten
/// equations). Second partials carry the exact normal component
/// `II^t = II − t·III`; their tangential part is that of the base jet, since
/// the tangential part of `n_uu` needs third derivatives of `x`. Curvature
/// computed from the result is therefore exact, Christoffel data is not.
pub fn parallel_point(jet: &SurfaceJet, curv: &CurvatureData, t: f64) -> Result<SurfaceJet> {
    let factor = focal_factor(curv.gauss, curv.mean, t);
    if factor.abs() <= DEFAULT_FOCAL_EPS {
        return Err(Error::FocalPoint { t, factor });
    }
    let n = curv.normal;
    let forms = forms_with_normal(jet, &n);
    let shape = forms.shape_operator();
    let n_u = -(shape[(0, 0)] * jet.x_u + shape[(1, 0)] * jet.x_v);
    let n_v = -(shape[(0, 1)] * jet.x_u + shape[(1, 1)] * jet.x_v);
    let third = forms.third;
    Ok(SurfaceJet {
        u: jet.u,
        v: jet.v,
        x: jet.x + t * n,
        x_u: jet.x_u + t * n_u,
        x_v: jet.x_v + t * n_v,
        x_uu: jet.x_uu - t * third.uu * n,
        x_uv: jet.x_uv - t * third.uv * n,
        x_vv: jet.x_vv - t * third.vv * n,
    })
}

/// The parallel surface `x + t n` of a surface map, carrying the base Gauss map
/// as its orientation (also past focal points, where the cross-product normal
/// of the offset flips).
#[derive(Debug, Clone)]
pub struct ParallelSurface<M> {
    base: M,
    t: f64,
}

impl<M: SurfaceMap> ParallelSurface<M> {
    pub fn new(base: M, t: f64) -> Self {
        Self { base, t }
    }

    pub fn offset(&self) -> f64 {
        self.t
    }

    pub fn base(&self) -> &M {
        &self.base
    }

    fn base_normal(&self, u: f64, v: f64) -> Vec3 {
        self.base
            .curvature(u, v)
            .map(|c| c.normal)
            .unwrap_or_else(|_| Vec3::zeros())
    }

    /// Jet of the offset point, failing at base singularities and focal points.
    pub fn checked_jet(&self, u: f64, v: f64) -> Result<SurfaceJet> {
        let curv = self.base.curvature(u, v)?;
        parallel_point(&self.base.jet(u, v), &curv, self.t)
    }
}

impl<M: SurfaceMap> SurfaceMap for ParallelSurface<M> {
    fn point(&self, u: f64, v: f64) -> Vec3 {
        self.base.point(u, v) + self.t * self.base_normal(u, v)
    }

    /// At base singularities and focal points the returned jet is degenerate
    /// and [`SurfaceMap::curvature`] reports the error.
    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        self.checked_jet(u, v).unwrap_or_else(|_| {
            let x = self.point(u, v);
            SurfaceJet {
                u,
                v,
                x,
                x_u: Vec3::zeros(),
                x_v: Vec3::zeros(),
                x_uu: Vec3::zeros(),
                x_uv: Vec3::zeros(),
                x_vv: Vec3::zeros(),
            }
        })
    }

    fn curvature(&self, u: f64, v: f64) -> Result<CurvatureData> {
        let base = self.base.curvature(u, v)?;
        let jet = parallel_point(&self.base.jet(u, v), &base, self.t)?;
        curvatures(&jet).map(|c| c.oriented_along(&base.normal))
    }
}

/// Largest `|a K + 2b H + c|` over the sample parameters, in the surface's own
/// orientation. Non-immersed samples are reported with their location.
pub fn lw_residual<M: SurfaceMap + ?Sized>(
    surface: &M,
    lw: &LWCoefficients,
    samples: &[(f64, f64)],
) -> Result<f64> {
    let mut worst = 0.0_f64;
    for &(u, v) in samples {
        let c = surface.curvature(u, v)?;
        worst = worst.max(lw.residual(c.gauss, c.mean).abs());
    }
    Ok(worst)
}

/// The three kinds of linear Weingarten parallel families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LWKind {
    /// `Δ = 0`: one principal curvature is constant.
    Tubular,
    /// `c = 0`, `Δ ≠ 0`: the family contains a minimal surface.
    ParallelToMinimal,
    /// `c ≠ 0`, `Δ ≠ 0`: the family contains a surface with `K = c²/Δ`.
    ParallelToCgc,
}

impl LWKind {
    pub fn name(&self) -> &'static str {
        match self {
            LWKind::Tubular => "Tubular",
            LWKind::ParallelToMinimal => "ParallelToMinimal",
            LWKind::ParallelToCgc => "ParallelToCGC",
        }
    }
}

/// A distinguished member of a parallel family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Offset {
    /// `"minimal"`, `"cgc"`, `"cmc"` or `"focal"`.
    pub label: &'static str,
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LWClass {
    pub kind: LWKind,
    pub discriminant: f64,
    /// All distinguished offsets, in ascending `t` within each label.
    pub offsets: Vec<Offset>,
    /// `c²/Δ`, the Gauss curvature at the `"cgc"` offset.
    pub k_at_cgc_offset: Option<f64>,
    /// `−b/a` for tubular triples with `a ≠ 0`.
    pub constant_principal_curvature: Option<f64>,
}

/// Classifies the parallel family of a linear Weingarten triple.
///
/// `tol` is relative: `|Δ| ≤ tol·‖lw‖²` counts as tubular and `|c| ≤ tol·‖lw‖`
/// as `c = 0`, with `‖lw‖ = max(|a|, |b|, |c|)`.
pub fn classify(lw: &LWCoefficients, tol: f64) -> LWClass {
    let (a, b, c) = (lw.a(), lw.b(), lw.c());
    let scale = lw.norm();
    let delta = lw.discriminant();

    if delta.abs() <= tol * scale * scale {
        let mut offsets = Vec::new();
        // Tube of radius a/b about its focal curve x − (a/b) n.
        if b.abs() > tol * scale {
            offsets.push(Offset { label: "focal", t: -a / b });
        }
        return LWClass {
            kind: LWKind::Tubular,
            discriminant: delta,
            offsets,
            k_at_cgc_offset: None,
            constant_principal_curvature: (a.abs() > tol * scale).then(|| -b / a),
        };
    }

    if c.abs() <= tol * scale {
        return LWClass {
            kind: LWKind::ParallelToMinimal,
            discriminant: delta,
            offsets: vec![Offset { label: "minimal", t: -a / (2.0 * b) }],
            k_at_cgc_offset: None,
            constant_principal_curvature: None,
        };
    }

    let mut offsets = vec![Offset { label: "cgc", t: -b / c }];
    if delta > 0.0 {
        let root = delta.sqrt();
        let mut cmc = [(-b + root) / c, (-b - root) / c];
        cmc.sort_by(f64::total_cmp);
        offsets.extend(cmc.iter().map(|&t| Offset { label: "cmc", t }));
    }
    LWClass {
        kind: LWKind::ParallelToCgc,
        discriminant: delta,
        offsets,
        k_at_cgc_offset: Some(c * c / delta),
        constant_principal_curvature: None,
    }
}
