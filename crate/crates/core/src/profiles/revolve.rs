use super::ProfileCurve;
use crate::error::Result;
use crate::surface::{curvatures, CurvatureData, SurfaceJet, SurfaceMap, Vec3};

/// Surface of revolution `x(s, θ) = (r(s) cos θ, r(s) sin θ, h(s))`.
///
/// With the cross-product orientation the normal is
/// `r (−h' cos θ, −h' sin θ, r') / |…|`, so for `h' > 0` it points toward the axis.
#[derive(Debug, Clone)]
pub struct Revolution {
    profile: ProfileCurve,
}

pub fn revolve(profile: ProfileCurve) -> Revolution {
    Revolution { profile }
}

impl Revolution {
    pub fn profile(&self) -> &ProfileCurve {
        &self.profile
    }
}

impl SurfaceMap for Revolution {
    fn point(&self, s: f64, theta: f64) -> Vec3 {
        let pt = self.profile.eval(s);
        let (sin, cos) = theta.sin_cos();
        Vec3::new(pt.r * cos, pt.r * sin, pt.h)
    }

    fn jet(&self, s: f64, theta: f64) -> SurfaceJet {
        let pt = self.profile.eval(s);
        let (sin, cos) = theta.sin_cos();
        SurfaceJet {
            u: s,
            v: theta,
            x: Vec3::new(pt.r * cos, pt.r * sin, pt.h),
            x_u: Vec3::new(pt.dr * cos, pt.dr * sin, pt.dh),
            x_v: Vec3::new(-pt.r * sin, pt.r * cos, 0.0),
            x_uu: Vec3::new(pt.ddr * cos, pt.ddr * sin, pt.ddh),
            x_uv: Vec3::new(-pt.dr * sin, pt.dr * cos, 0.0),
            x_vv: Vec3::new(-pt.r * cos, -pt.r * sin, 0.0),
        }
    }

    /// Offset profiles are oriented by their continuous normal `ν`; all other
    /// profiles use the cross-product convention.
    fn curvature(&self, s: f64, theta: f64) -> Result<CurvatureData> {
        let c = curvatures(&self.jet(s, theta))?;
        Ok(match self.profile.parallel_normal(s) {
            Some((nr, nh)) => {
                let (sin, cos) = theta.sin_cos();
                c.oriented_along(&Vec3::new(nr * cos, nr * sin, nh))
            }
            None => c,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::profile_sphere;
    use std::f64::consts::TAU;

    #[test]
    fn theta_is_two_pi_periodic() {
        let sphere = revolve(profile_sphere());
        for s in [-1.0, 0.0, 0.6] {
            let d = sphere.point(s, 0.8) - sphere.point(s, 0.8 + TAU);
            assert!(d.amax() < 1e-15);
        }
    }

    #[test]
    fn sphere_curvature_everywhere() {
        let sphere = revolve(profile_sphere());
        for i in 0..1000 {
            let s = -4.0 + 8.0 * i as f64 / 999.0;
            let c = sphere.curvature(s, 0.37 * i as f64).unwrap();
            assert!((c.gauss - 1.0).abs() <= 1e-8);
        }
    }
}
