//! Numeric profiles from the first-integral equations, used as the independent
//! reference for every closed-form profile.

use super::{CgcParameters, ProfileCurve, ProfilePoint};
use crate::error::{Error, Result};
use crate::specfun::oracle::rk4_step;

/// Uniform-grid RK4 solution with cubic Hermite dense output.
#[derive(Debug, Clone)]
pub(crate) struct DenseProfile {
    cgc: CgcParameters,
    step: f64,
    // (r, r', h) at s = i·step.
    nodes: Vec<[f64; 3]>,
}

impl DenseProfile {
    pub(crate) fn s_max(&self) -> f64 {
        self.step * (self.nodes.len() - 1) as f64
    }

    fn radial_acceleration(cgc: &CgcParameters, r: f64) -> f64 {
        // d/ds of r'² = f(r) gives r'' = f'(r)/2 = K(2C − 1) r − 2 r³ (K² = 1).
        cgc.gauss() * (2.0 * cgc.c() - 1.0) * r - 2.0 * r * r * r
    }

    pub(crate) fn eval(&self, s: f64) -> ProfilePoint {
        let last = self.nodes.len() - 1;
        let x = (s / self.step).clamp(0.0, last as f64);
        let i = (x.floor() as usize).min(last.saturating_sub(1));
        let t = x - i as f64;
        let h = self.step;
        let [r0, dr0, h0] = self.nodes[i];
        let [r1, dr1, h1] = self.nodes[(i + 1).min(last)];
        let cgc = &self.cgc;
        let acc0 = Self::radial_acceleration(cgc, r0);
        let acc1 = Self::radial_acceleration(cgc, r1);
        let dh0 = cgc.h_sign() * cgc.speed_squared(r0);
        let dh1 = cgc.h_sign() * cgc.speed_squared(r1);

        // Cubic Hermite basis on [0, 1].
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        let herm = |y0: f64, d0: f64, y1: f64, d1: f64| h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;

        let r = herm(r0, dr0, r1, dr1);
        let dr = herm(dr0, acc0, dr1, acc1);
        let height = herm(h0, dh0, h1, dh1);
        ProfilePoint {
            s,
            r,
            h: height,
            dr,
            dh: cgc.h_sign() * cgc.speed_squared(r),
            ddr: Self::radial_acceleration(cgc, r),
            ddh: cgc.h_sign() * 2.0 * cgc.gauss() * r * dr,
        }
    }
}

/// Integrates `r'² = ((1−C)+Kr²)(C−Kr²)`, `h' = σ((1−C)+Kr²)` from
/// `(r, h) = (r0, 0)` at `s = 0` over `[0, s_max]` with RK4 steps of at most `step`.
///
/// The square root's sign ambiguity at turning points is avoided by
/// integrating the second-order form `r'' = K(2C−1) r − 2r³` with
/// `r'(0) = sign_dr0 · √(f(r0))`.
pub fn profile_from_ode(
    params: CgcParameters,
    r0: f64,
    sign_dr0: f64,
    s_max: f64,
    step: f64,
) -> Result<ProfileCurve> {
    if !(s_max > 0.0 && step > 0.0 && s_max.is_finite()) {
        return Err(Error::Domain(format!(
            "need s_max > 0 and step > 0, got s_max = {s_max}, step = {step}"
        )));
    }
    const SLACK: f64 = 1e-14;
    let meridian = params.meridian_factor(r0);
    let speed2 = params.speed_squared(r0);
    if !(meridian >= -SLACK && meridian <= 1.0 + SLACK && speed2 >= -SLACK) {
        return Err(Error::Domain(format!(
            "initial radius r0 = {r0} violates 0 ≤ C − K r0² ≤ 1, (1 − C) + K r0² ≥ 0 \
             for K = {}, C = {}",
            params.gauss(),
            params.c()
        )));
    }
    let dr0 = sign_dr0.signum() * (speed2.max(0.0) * meridian.max(0.0)).sqrt();

    let n = (s_max / step).ceil() as usize;
    let h = s_max / n as f64;
    let rhs = |_: f64, y: &[f64; 3]| {
        [
            y[1],
            DenseProfile::radial_acceleration(&params, y[0]),
            params.h_sign() * params.speed_squared(y[0]),
        ]
    };
    let mut nodes = Vec::with_capacity(n + 1);
    let mut y = [r0, dr0, 0.0];
    nodes.push(y);
    for i in 0..n {
        y = rk4_step(&rhs, i as f64 * h, &y, h);
        nodes.push(y);
    }
    Ok(ProfileCurve::numeric(
        params,
        DenseProfile {
            cgc: params,
            step: h,
            nodes,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::{profile_cn, profile_sphere, Family};
    use crate::specfun::EllipticModulus;

    #[test]
    fn cn_top_start_matches_closed_form() {
        let m = EllipticModulus::new(0.6).unwrap();
        let params = CgcParameters::new(1.0, 0.36).unwrap();
        let period = 4.0 * m.k_complete();
        let numeric = profile_from_ode(params, 0.6, 1.0, period, 1e-4).unwrap();
        assert_eq!(numeric.family(), Family::NumericOde);
        let exact = profile_cn(1, m);
        for i in 0..=2000 {
            let s = period * i as f64 / 2000.0;
            let (a, b) = (numeric.eval(s), exact.eval(s));
            assert!((a.r - b.r).abs() <= 1e-7 && (a.h - b.h).abs() <= 1e-7, "s = {s}");
        }
    }

    #[test]
    fn sphere_from_ode() {
        let params = CgcParameters::new(1.0, 1.0).unwrap();
        let numeric = profile_from_ode(params, 1.0, -1.0, 4.0, 1e-4).unwrap();
        let exact = profile_sphere();
        for i in 0..=400 {
            let s = i as f64 * 0.01;
            let (a, b) = (numeric.eval(s), exact.eval(s));
            assert!((a.r - b.r).abs() <= 1e-7 && (a.h - b.h).abs() <= 1e-7);
            assert!((a.dr - b.dr).abs() <= 1e-7);
        }
    }

    #[test]
    fn rejects_sandwich_violation() {
        let params = CgcParameters::new(1.0, 0.5).unwrap();
        // C − K r0² = 0.5 − 1 < 0
        assert!(matches!(
            profile_from_ode(params, 1.0, 1.0, 1.0, 1e-3),
            Err(Error::Domain(_))
        ));
        assert!(CgcParameters::new(1.0, -0.5).is_err());
        assert!(CgcParameters::new(-1.0, 1.5).is_err());
        assert!(CgcParameters::new(0.5, 0.5).is_err());
    }
}
