use crate::error::{Error, Result};
use crate::surface::{SurfaceJet, SurfaceMap, Vec3};

/// Frenet data of an arc-length parametrized space curve at one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetFrame {
    pub point: Vec3,
    pub tangent: Vec3,
    pub normal: Vec3,
    pub binormal: Vec3,
    pub curvature: f64,
    pub torsion: f64,
    /// `dκ/du`.
    pub curvature_rate: f64,
    /// `dτ/du`.
    pub torsion_rate: f64,
}

/// Arc-length parametrized center curve for tubes.
pub trait FrenetCurve {
    fn frame(&self, u: f64) -> FrenetFrame;

    /// Supremum of the curvature along the curve.
    fn max_curvature(&self) -> f64;
}

/// Straight line through `origin` with unit `direction`; `normal` picks the
/// (otherwise arbitrary) frame.
#[derive(Debug, Clone, Copy)]
pub struct StraightLine {
    pub origin: Vec3,
    pub direction: Vec3,
    pub normal: Vec3,
}

impl StraightLine {
    /// The `z`-axis with frame `(e_z, e_x, e_y)`.
    pub fn z_axis() -> Self {
        Self {
            origin: Vec3::zeros(),
            direction: Vec3::z(),
            normal: Vec3::x(),
        }
    }
}

impl FrenetCurve for StraightLine {
    fn frame(&self, u: f64) -> FrenetFrame {
        let t = self.direction.normalize();
        let n = (self.normal - self.normal.dot(&t) * t).normalize();
        FrenetFrame {
            point: self.origin + u * t,
            tangent: t,
            normal: n,
            binormal: t.cross(&n),
            curvature: 0.0,
            torsion: 0.0,
            curvature_rate: 0.0,
            torsion_rate: 0.0,
        }
    }

    fn max_curvature(&self) -> f64 {
        0.0
    }
}

/// Circle of the given radius about the origin in the `xy`-plane.
#[derive(Debug, Clone, Copy)]
pub struct Circle {
    pub radius: f64,
}

impl FrenetCurve for Circle {
    fn frame(&self, u: f64) -> FrenetFrame {
        let a = self.radius;
        let (s, c) = (u / a).sin_cos();
        FrenetFrame {
            point: Vec3::new(a * c, a * s, 0.0),
            tangent: Vec3::new(-s, c, 0.0),
            normal: Vec3::new(-c, -s, 0.0),
            binormal: Vec3::z(),
            curvature: 1.0 / a,
            torsion: 0.0,
            curvature_rate: 0.0,
            torsion_rate: 0.0,
        }
    }

    fn max_curvature(&self) -> f64 {
        1.0 / self.radius
    }
}

/// Circular helix `(a cos φ, a sin φ, b φ)` in arc length.
#[derive(Debug, Clone, Copy)]
pub struct Helix {
    pub radius: f64,
    /// Rise per radian.
    pub pitch: f64,
}

impl FrenetCurve for Helix {
    fn frame(&self, u: f64) -> FrenetFrame {
        let (a, b) = (self.radius, self.pitch);
        let w = (a * a + b * b).sqrt();
        let phi = u / w;
        let (s, c) = phi.sin_cos();
        FrenetFrame {
            point: Vec3::new(a * c, a * s, b * phi),
            tangent: Vec3::new(-a * s, a * c, b) / w,
            normal: Vec3::new(-c, -s, 0.0),
            binormal: Vec3::new(b * s, -b * c, a) / w,
            curvature: a / (w * w),
            torsion: b / (w * w),
            curvature_rate: 0.0,
            torsion_rate: 0.0,
        }
    }

    fn max_curvature(&self) -> f64 {
        self.radius / (self.radius * self.radius + self.pitch * self.pitch)
    }
}

/// Tube `x(u, v) = γ(u) + ρ (N(u) cos v − B(u) sin v)` about a center curve.
///
/// The circle is traversed so that the cross-product normal points away from
/// the center curve; the principal curvature along the circles is then the
/// constant `−1/ρ`, and the tube satisfies the linear Weingarten relation with
/// `(a, b, c) = (ρ, 1, 1/ρ)`.
#[derive(Debug, Clone)]
pub struct Tube<C> {
    curve: C,
    rho: f64,
}

impl<C: FrenetCurve> Tube<C> {
    /// Fails unless `0 < ρ < 1 / max κ`.
    pub fn new(curve: C, rho: f64) -> Result<Self> {
        let kappa = curve.max_curvature();
        let bound = if kappa > 0.0 { 1.0 / kappa } else { f64::INFINITY };
        if !(rho > 0.0 && rho < bound) {
            return Err(Error::Immersion { rho, bound });
        }
        Ok(Self { curve, rho })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn curve(&self) -> &C {
        &self.curve
    }
}

impl<C: FrenetCurve> SurfaceMap for Tube<C> {
    fn point(&self, u: f64, v: f64) -> Vec3 {
        let f = self.curve.frame(u);
        let (s, c) = v.sin_cos();
        f.point + self.rho * (c * f.normal - s * f.binormal)
    }

    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        let f = self.curve.frame(u);
        let rho = self.rho;
        let (kappa, tau) = (f.curvature, f.torsion);
        let (dkappa, dtau) = (f.curvature_rate, f.torsion_rate);
        // Circle coefficients (α, β) = (cos v, −sin v), with α_v = β, β_v = −α.
        let (s, c) = v.sin_cos();
        let (alpha, beta) = (c, -s);
        let (t, n, b) = (f.tangent, f.normal, f.binormal);
        let on = |ct: f64, cn: f64, cb: f64| ct * t + cn * n + cb * b;
        SurfaceJet {
            u,
            v,
            x: f.point + rho * on(0.0, alpha, beta),
            x_u: on(1.0 - rho * kappa * alpha, -rho * tau * beta, rho * tau * alpha),
            x_v: rho * on(0.0, beta, -alpha),
            x_uu: on(
                -rho * dkappa * alpha + rho * tau * kappa * beta,
                (1.0 - rho * kappa * alpha) * kappa - rho * dtau * beta - rho * tau * tau * alpha,
                -rho * tau * tau * beta + rho * dtau * alpha,
            ),
            x_uv: rho * on(-kappa * beta, tau * alpha, tau * beta),
            x_vv: rho * on(0.0, -alpha, -beta),
        }
    }
}
