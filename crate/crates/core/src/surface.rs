//! Point-wise differential geometry of parametrized surfaces.
//!
//! Orientation convention: the Gauss map is `n = (x_u × x_v) / |x_u × x_v|`.
//! The second fundamental form is `II = -⟨dx, dn⟩`, the shape operator is
//! `S = -dn`, and `H = ½ tr S`. With this convention a sphere whose normal
//! points to its center has `H = +1/R`. For revolved patches `(u, v) = (s, θ)`.

use crate::error::{Error, Result};
use nalgebra::{Matrix2, Vector3};

pub type Vec3 = Vector3<f64>;

/// Default immersion threshold on `|x_u × x_v|`.
pub const DEFAULT_IMMERSION_EPS: f64 = 1e-12;

/// Position and partial derivatives up to second order at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet {
    pub u: f64,
    pub v: f64,
    pub x: Vec3,
    pub x_u: Vec3,
    pub x_v: Vec3,
    pub x_uu: Vec3,
    pub x_uv: Vec3,
    pub x_vv: Vec3,
}

impl SurfaceJet {
    /// Applies the rigid motion / similarity `y ↦ scale·R·y + shift`.
    pub fn transformed(&self, rotation: &nalgebra::Rotation3<f64>, scale: f64, shift: Vec3) -> Self {
        let lin = |w: Vec3| scale * (rotation * w);
        Self {
            u: self.u,
            v: self.v,
            x: lin(self.x) + shift,
            x_u: lin(self.x_u),
            x_v: lin(self.x_v),
            x_uu: lin(self.x_uu),
            x_uv: lin(self.x_uv),
            x_vv: lin(self.x_vv),
        }
    }

    /// The same surface with `u` and `v` exchanged (reverses orientation).
    pub fn swapped(&self) -> Self {
        Self {
            u: self.v,
            v: self.u,
            x: self.x,
            x_u: self.x_v,
            x_v: self.x_u,
            x_uu: self.x_vv,
            x_uv: self.x_uv,
            x_vv: self.x_uu,
        }
    }
}

/// Symmetric bilinear form in the coordinate basis `(∂_u, ∂_v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricForm {
    pub uu: f64,
    pub uv: f64,
    pub vv: f64,
}

impl SymmetricForm {
    pub fn matrix(&self) -> Matrix2<f64> {
        Matrix2::new(self.uu, self.uv, self.uv, self.vv)
    }

    fn from_matrix(m: &Matrix2<f64>) -> Self {
        Self {
            uu: m[(0, 0)],
            uv: 0.5 * (m[(0, 1)] + m[(1, 0)]),
            vv: m[(1, 1)],
        }
    }

    pub fn determinant(&self) -> f64 {
        self.uu * self.vv - self.uv * self.uv
    }
}

/// First, second and third fundamental forms at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub first: SymmetricForm,
    pub second: SymmetricForm,
    pub third: SymmetricForm,
}

impl FundamentalForms {
    /// Shape operator `S = I⁻¹ II` acting on coordinate vectors.
    pub fn shape_operator(&self) -> Matrix2<f64> {
        let first = self.first.matrix();
        let inv = first
            .try_inverse()
            .expect("first fundamental form is positive definite at immersed points");
        inv * self.second.matrix()
    }

    /// Largest component of `III − 2H·II + K·I`.
    pub fn cayley_hamilton_residual(&self, gauss: f64, mean: f64) -> f64 {
        let r = self.third.matrix() - 2.0 * mean * self.second.matrix() + gauss * self.first.matrix();
        r.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }
}

/// Gauss and mean curvature, principal curvatures and the unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureData {
    pub gauss: f64,
    pub mean: f64,
    /// Smaller principal curvature.
    pub kappa1: f64,
    /// Larger principal curvature.
    pub kappa2: f64,
    pub normal: Vec3,
}

impl CurvatureData {
    /// Curvature data for the opposite orientation `-n`.
    pub fn flipped(&self) -> Self {
        Self {
            gauss: self.gauss,
            mean: -self.mean,
            kappa1: -self.kappa2,
            kappa2: -self.kappa1,
            normal: -self.normal,
        }
    }

    /// Re-orients so that the normal has nonnegative component along `reference`.
    pub fn oriented_along(&self, reference: &Vec3) -> Self {
        if self.normal.dot(reference) < 0.0 {
            self.flipped()
        } else {
            *self
        }
    }
}

/// A parametrized surface that can produce exact jets.
pub trait SurfaceMap {
    fn point(&self, u: f64, v: f64) -> Vec3;

    fn jet(&self, u: f64, v: f64) -> SurfaceJet;

    /// Curvature data in the surface's own orientation. The default is the
    /// cross-product convention of [`normal`]; maps that carry a preferred
    /// Gauss map (parallel surfaces, offset profiles) override it.
    fn curvature(&self, u: f64, v: f64) -> Result<CurvatureData> {
        curvatures(&self.jet(u, v))
    }
}

impl<M: SurfaceMap + ?Sized> SurfaceMap for &M {
    fn point(&self, u: f64, v: f64) -> Vec3 {
        (**self).point(u, v)
    }
    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        (**self).jet(u, v)
    }
    fn curvature(&self, u: f64, v: f64) -> Result<CurvatureData> {
        (**self).curvature(u, v)
    }
}

impl<M: SurfaceMap + ?Sized> SurfaceMap for Box<M> {
    fn point(&self, u: f64, v: f64) -> Vec3 {
        (**self).point(u, v)
    }
    fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        (**self).jet(u, v)
    }
    fn curvature(&self, u: f64, v: f64) -> Result<CurvatureData> {
        (**self).curvature(u, v)
    }
}

/// Unit normal with the default immersion threshold.
pub fn normal(jet: &SurfaceJet) -> Result<Vec3> {
    normal_with_eps(jet, DEFAULT_IMMERSION_EPS)
}

pub fn normal_with_eps(jet: &SurfaceJet, eps: f64) -> Result<Vec3> {
    let cross = jet.x_u.cross(&jet.x_v);
    let norm = cross.norm();
    if !(norm > eps) {
        return Err(Error::DegenerateJet {
            u: jet.u,
            v: jet.v,
            cross_norm: norm,
        });
    }
    Ok(cross / norm)
}

pub fn forms(jet: &SurfaceJet) -> Result<FundamentalForms> {
    let n = normal(jet)?;
    Ok(forms_with_normal(jet, &n))
}

/// Fundamental forms with the second form taken against the given unit normal.
pub fn forms_with_normal(jet: &SurfaceJet, n: &Vec3) -> FundamentalForms {
    let first = SymmetricForm {
        uu: jet.x_u.dot(&jet.x_u),
        uv: jet.x_u.dot(&jet.x_v),
        vv: jet.x_v.dot(&jet.x_v),
    };
    let second = SymmetricForm {
        uu: jet.x_uu.dot(n),
        uv: jet.x_uv.dot(n),
        vv: jet.x_vv.dot(n),
    };
    // III(X, Y) = ⟨SX, SY⟩ = (II I⁻¹ II)(X, Y).
    let inv = first
        .matrix()
        .try_inverse()
        .unwrap_or_else(Matrix2::zeros);
    let third = SymmetricForm::from_matrix(&(second.matrix() * inv * second.matrix()));
    FundamentalForms {
        first,
        second,
        third,
    }
}

/// Gauss, mean and principal curvatures in the cross-product orientation.
pub fn curvatures(jet: &SurfaceJet) -> Result<CurvatureData> {
    let n = normal(jet)?;
    let f = forms_with_normal(jet, &n);
    let (big_e, big_f, big_g) = (f.first.uu, f.first.uv, f.first.vv);
    let (e, ff, g) = (f.second.uu, f.second.uv, f.second.vv);
    let det_i = big_e * big_g - big_f * big_f;
    let gauss = (e * g - ff * ff) / det_i;
    let mean = (e * big_g - 2.0 * ff * big_f + g * big_e) / (2.0 * det_i);
    let disc = (mean * mean - gauss).max(0.0).sqrt();
    Ok(CurvatureData {
        gauss,
        mean,
        kappa1: mean - disc,
        kappa2: mean + disc,
        normal: n,
    })
}

/// Curvatures oriented so that the normal agrees with `reference`.
pub fn curvatures_oriented(jet: &SurfaceJet, reference: &Vec3) -> Result<CurvatureData> {
    curvatures(jet).map(|c| c.oriented_along(reference))
}

/// Central-difference jet of `map` at `(u, v)` with step `h`.
pub fn fd_jet<F>(map: F, u: f64, v: f64, h: f64) -> SurfaceJet
where
    F: Fn(f64, f64) -> Vec3,
{
    let x = map(u, v);
    let (xpu, xmu) = (map(u + h, v), map(u - h, v));
    let (xpv, xmv) = (map(u, v + h), map(u, v - h));
    let (xpp, xpm) = (map(u + h, v + h), map(u + h, v - h));
    let (xmp, xmm) = (map(u - h, v + h), map(u - h, v - h));
    let h2 = h * h;
    SurfaceJet {
        u,
        v,
        x,
        x_u: (xpu - xmu) / (2.0 * h),
        x_v: (xpv - xmv) / (2.0 * h),
        x_uu: (xpu - 2.0 * x + xmu) / h2,
        x_uv: (xpp - xpm - xmp + xmm) / (4.0 * h2),
        x_vv: (xpv - 2.0 * x + xmv) / h2,
    }
}

/// Richardson extrapolation `(4 J(h/2) − J(h)) / 3` of [`fd_jet`]: fourth
/// order, so a larger step keeps round-off in the second derivatives small.
pub fn fd_jet_richardson<F>(map: F, u: f64, v: f64, h: f64) -> SurfaceJet
where
    F: Fn(f64, f64) -> Vec3,
{
    let coarse = fd_jet(&map, u, v, h);
    let fine = fd_jet(&map, u, v, 0.5 * h);
    let mix = |f: Vec3, c: Vec3| (4.0 * f - c) / 3.0;
    SurfaceJet {
        u,
        v,
        x: fine.x,
        x_u: mix(fine.x_u, coarse.x_u),
        x_v: mix(fine.x_v, coarse.x_v),
        x_uu: mix(fine.x_uu, coarse.x_uu),
        x_uv: mix(fine.x_uv, coarse.x_uv),
        x_vv: mix(fine.x_vv, coarse.x_vv),
    }
}

/// Largest coordinate difference between two jets, over all six vectors.
pub fn jet_distance(a: &SurfaceJet, b: &SurfaceJet) -> f64 {
    [
        a.x - b.x,
        a.x_u - b.x_u,
        a.x_v - b.x_v,
        a.x_uu - b.x_uu,
        a.x_uv - b.x_uv,
        a.x_vv - b.x_vv,
    ]
    .iter()
    .map(|d| d.amax())
    .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{Rotation3, Unit};
    use proptest::prelude::*;

    // Unit sphere in longitude/colatitude-like chart (s, θ) ↦ (sech s cos θ, sech s sin θ, tanh s).
    fn sphere(u: f64, v: f64) -> Vec3 {
        let r = 1.0 / u.cosh();
        Vec3::new(r * v.cos(), r * v.sin(), u.tanh())
    }

    fn sphere_jet(u: f64, v: f64) -> SurfaceJet {
        let (r, t) = (1.0 / u.cosh(), u.tanh());
        let (dr, dh) = (-r * t, r * r);
        let (ddr, ddh) = (r * (t * t - r * r), -2.0 * r * r * t);
        let (c, s) = (v.cos(), v.sin());
        SurfaceJet {
            u,
            v,
            x: Vec3::new(r * c, r * s, t),
            x_u: Vec3::new(dr * c, dr * s, dh),
            x_v: Vec3::new(-r * s, r * c, 0.0),
            x_uu: Vec3::new(ddr * c, ddr * s, ddh),
            x_uv: Vec3::new(-dr * s, dr * c, 0.0),
            x_vv: Vec3::new(-r * c, -r * s, 0.0),
        }
    }

    fn plane_jet() -> SurfaceJet {
        SurfaceJet {
            u: 0.0,
            v: 0.0,
            x: Vec3::zeros(),
            x_u: Vec3::x(),
            x_v: Vec3::y(),
            x_uu: Vec3::zeros(),
            x_uv: Vec3::zeros(),
            x_vv: Vec3::zeros(),
        }
    }

    // A generic non-umbilic test surface: a saddle-ish graph.
    fn graph(u: f64, v: f64) -> Vec3 {
        Vec3::new(u, v, 0.3 * u * u - 0.7 * u * v + 0.2 * v * v * v + 0.1 * (2.0 * u).sin())
    }

    #[test]
    fn plane_normal_and_orientation() {
        let jet = plane_jet();
        assert_eq!(normal(&jet).unwrap(), Vec3::z());
        assert_eq!(normal(&jet.swapped()).unwrap(), -Vec3::z());
        let f = forms(&jet).unwrap();
        assert_eq!((f.second.uu, f.second.uv, f.second.vv), (0.0, 0.0, 0.0));
    }

    #[test]
    fn degenerate_jet_is_rejected() {
        let mut jet = plane_jet();
        jet.x_v = Vec3::x();
        assert!(matches!(normal(&jet), Err(Error::DegenerateJet { .. })));
        assert!(matches!(curvatures(&jet), Err(Error::DegenerateJet { .. })));
    }

    #[test]
    fn sphere_equator_metric_and_curvature() {
        let jet = sphere_jet(0.0, 0.4);
        let f = forms(&jet).unwrap();
        assert!((f.first.uu - 1.0).abs() < 1e-15);
        assert!(f.first.uv.abs() < 1e-15);
        assert!((f.first.vv - 1.0).abs() < 1e-15);
        for i in -20..=20 {
            let c = curvatures(&sphere_jet(i as f64 * 0.2, 0.1 * i as f64)).unwrap();
            assert!((c.gauss - 1.0).abs() < 1e-12);
            // The (s, θ) orientation points to the center.
            assert!((c.mean - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn fd_jet_matches_sphere_to_second_order() {
        for (u, v) in [(0.0, 0.0), (0.7, 1.3), (-1.2, 4.0)] {
            let exact = sphere_jet(u, v);
            let fd = fd_jet(sphere, u, v, 1e-4);
            assert!(jet_distance(&exact, &fd) <= 1e-6);
        }
    }

    #[test]
    fn fd_jet_exact_on_affine_maps() {
        let affine = |u: f64, v: f64| Vec3::new(1.0 + 2.0 * u - v, 3.0 * v, -u + 0.5 * v + 4.0);
        let jet = fd_jet(affine, 0.3, -0.8, 1e-3);
        assert!(jet.x_uu.amax() < 1e-9 && jet.x_uv.amax() < 1e-9 && jet.x_vv.amax() < 1e-9);
        assert!((jet.x_u - Vec3::new(2.0, 0.0, -1.0)).amax() < 1e-12);
    }

    #[test]
    fn fd_first_partials_converge_quadratically() {
        let exact = sphere_jet(0.6, 0.9);
        let err = |h: f64| {
            let fd = fd_jet(sphere, 0.6, 0.9, h);
            (fd.x_u - exact.x_u).amax().max((fd.x_v - exact.x_v).amax())
        };
        let ratio = err(1e-3) / err(1e-4);
        assert!((70.0..140.0).contains(&ratio), "ratio = {ratio}");
    }

    #[test]
    fn richardson_jet_is_fourth_order() {
        let exact = sphere_jet(0.6, 0.9);
        let err = |h: f64| jet_distance(&exact, &fd_jet_richardson(sphere, 0.6, 0.9, h));
        let ratio = err(2e-2) / err(1e-2);
        assert!((12.0..20.0).contains(&ratio), "ratio = {ratio}");
        assert!(err(4e-3) <= 1e-9);
    }

    #[test]
    fn cayley_hamilton_holds() {
        for (u, v) in [(0.1, 0.2), (-0.5, 0.4), (1.1, -0.9)] {
            let jet = fd_jet(graph, u, v, 1e-4);
            let f = forms(&jet).unwrap();
            let c = curvatures(&jet).unwrap();
            assert!(f.cayley_hamilton_residual(c.gauss, c.mean) <= 1e-9);
            assert!((c.kappa1 * c.kappa2 - c.gauss).abs() <= 1e-10);
            assert!((c.kappa1 + c.kappa2 - 2.0 * c.mean).abs() <= 1e-10);
            assert!(c.mean * c.mean >= c.gauss);
            assert!(c.kappa1 <= c.kappa2);
        }
    }

    #[test]
    fn principal_curvatures_are_shape_operator_eigenvalues() {
        let jet = fd_jet(graph, 0.3, -0.2, 1e-4);
        let f = forms(&jet).unwrap();
        let c = curvatures(&jet).unwrap();
        let s = f.shape_operator();
        let (tr, det) = (s.trace(), s.determinant());
        assert!((tr - 2.0 * c.mean).abs() < 1e-12 && (det - c.gauss).abs() < 1e-12);
    }

    #[test]
    fn orientation_flip() {
        let jet = fd_jet(graph, 0.4, 0.1, 1e-4);
        let a = curvatures(&jet).unwrap();
        let b = curvatures(&jet.swapped()).unwrap();
        assert!((a.gauss - b.gauss).abs() < 1e-12);
        assert!((a.mean + b.mean).abs() < 1e-12);
        assert!((a.kappa1 + b.kappa2).abs() < 1e-12 && (a.kappa2 + b.kappa1).abs() < 1e-12);
        assert_eq!(a.flipped().normal, -a.normal);
        let back = curvatures_oriented(&jet.swapped(), &a.normal).unwrap();
        assert!((back.mean - a.mean).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn rigid_motion_invariance(
            axis in prop::array::uniform3(-1.0..1.0f64),
            angle in -3.0..3.0f64,
            shift in prop::array::uniform3(-5.0..5.0f64),
            u in -1.0..1.0f64,
            v in -1.0..1.0f64,
        ) {
            let axis = Vec3::from(axis);
            prop_assume!(axis.norm() > 1e-3);
            let rot = Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle);
            let jet = fd_jet(graph, u, v, 1e-4);
            let a = curvatures(&jet).unwrap();
            let b = curvatures(&jet.transformed(&rot, 1.0, Vec3::from(shift))).unwrap();
            prop_assert!((a.gauss - b.gauss).abs() <= 1e-10);
            prop_assert!((a.mean - b.mean).abs() <= 1e-10);
        }

        #[test]
        fn homothety_scaling(lambda in 0.1..10.0f64, u in -1.0..1.0f64, v in -1.0..1.0f64) {
            let jet = fd_jet(graph, u, v, 1e-4);
            let a = curvatures(&jet).unwrap();
            let b = curvatures(&jet.transformed(&Rotation3::identity(), lambda, Vec3::zeros())).unwrap();
            prop_assert!((b.gauss * lambda * lambda - a.gauss).abs() <= 1e-10 * a.gauss.abs().max(1.0));
            prop_assert!((b.mean * lambda - a.mean).abs() <= 1e-10 * a.mean.abs().max(1.0));
        }
    }
}
