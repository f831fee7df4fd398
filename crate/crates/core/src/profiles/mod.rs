//! Profile curves `s ↦ (r(s), h(s))` of constant Gauss curvature surfaces of
//! revolution, the catenoid, surfaces of revolution built from them, and tubes.
//!
//! Every closed-form profile is normalized so that `r` is maximal at `s = 0`
//! and `h(0) = 0`, and is parametrized so that
//!
//! ```text
//! r'² + h'² = (1 − C) + K r²,    r'² = ((1 − C) + K r²)(C − K r²),
//! h' = σ ((1 − C) + K r²)
//! ```
//!
//! where `σ = ±1` is the orientation of the height function. The `K = −1`
//! rows come out with `σ = −1`; the reflection `h ↦ −h` would flip it.

mod ode;
mod revolve;
mod tube;

pub use ode::profile_from_ode;
pub use revolve::{revolve, Revolution};
pub use tube::{Circle, FrenetCurve, FrenetFrame, Helix, StraightLine, Tube};

use crate::error::{Error, Result};
use crate::specfun::{elliptic_e_am, jacobi, EllipticModulus};
use std::sync::Arc;

/// Which closed form (or numeric oracle) a profile is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `r = p cn_p(s)`, `K = +1`.
    CnPlus,
    /// `r = p cn_p(s)`, `K = −1`.
    CnMinus,
    /// `r = 1/cosh s`, `h = tanh s`.
    Sphere,
    /// `r = 1/cosh s`, `h = tanh s − s`.
    Pseudosphere,
    /// `r = dn_p(s/p)/p`, `K = +1`.
    DnPlus,
    /// `r = dn_p(s/p)/p`, `K = −1`.
    DnMinus,
    /// `r = cosh s`, `h = s`.
    Catenoid,
    /// Dense output of an RK4 integration of the profile equations.
    NumericOde,
    /// Parallel curve `ξ + t ν` of the `DnMinus` profile along its parallel normal.
    PseudosphericalOffset,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::CnPlus => "cn+",
            Family::CnMinus => "cn-",
            Family::Sphere => "sphere",
            Family::Pseudosphere => "pseudosphere",
            Family::DnPlus => "dn+",
            Family::DnMinus => "dn-",
            Family::Catenoid => "catenoid",
            Family::NumericOde => "numeric-ode",
            Family::PseudosphericalOffset => "pseudospherical-offset",
        }
    }
}

/// Constant Gauss curvature `K = ±1`, the first integral `C`, and the height
/// orientation `σ` of the profile equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CgcParameters {
    gauss: f64,
    c: f64,
    h_sign: f64,
}

impl CgcParameters {
    /// `K` must be `±1`; `C ≥ 0` for `K = +1` and `C ≤ 1` for `K = −1`.
    pub fn new(gauss: f64, c: f64) -> Result<Self> {
        let ok = match gauss {
            g if g == 1.0 => c >= 0.0,
            g if g == -1.0 => c <= 1.0,
            _ => {
                return Err(Error::Domain(format!("Gauss curvature must be ±1, got {gauss}")));
            }
        };
        if !ok || !c.is_finite() {
            return Err(Error::Domain(format!(
                "first integral C = {c} is not admissible for K = {gauss}"
            )));
        }
        Ok(Self {
            gauss,
            c,
            h_sign: 1.0,
        })
    }

    /// Same parameters with height orientation `sign` (`+1` or `−1`).
    pub fn with_h_sign(mut self, sign: f64) -> Self {
        self.h_sign = if sign < 0.0 { -1.0 } else { 1.0 };
        self
    }

    pub fn gauss(&self) -> f64 {
        self.gauss
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn h_sign(&self) -> f64 {
        self.h_sign
    }

    /// `(1 − C) + K r²`, the squared speed of a normalized profile.
    pub fn speed_squared(&self, r: f64) -> f64 {
        (1.0 - self.c) + self.gauss * r * r
    }

    /// `C − K r²`, which equals `r'² / (r'² + h'²)`.
    pub fn meridian_factor(&self, r: f64) -> f64 {
        self.c - self.gauss * r * r
    }

    /// Residuals `(r'² − ((1−C)+Kr²)(C−Kr²), h' − σ((1−C)+Kr²))` at a profile point.
    pub fn residuals(&self, pt: &ProfilePoint) -> (f64, f64) {
        let speed2 = self.speed_squared(pt.r);
        (
            pt.dr * pt.dr - speed2 * self.meridian_factor(pt.r),
            pt.dh - self.h_sign * speed2,
        )
    }
}

/// Value and first two derivatives of a profile at `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePoint {
    pub s: f64,
    pub r: f64,
    pub h: f64,
    pub dr: f64,
    pub dh: f64,
    pub ddr: f64,
    pub ddh: f64,
}

/// Arithmetic progression `first + k·spacing` of parameters where the profile
/// is singular (speed zero) or meets the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularSet {
    pub first: f64,
    pub spacing: Option<f64>,
}

impl SingularSet {
    pub fn distance(&self, s: f64) -> f64 {
        match self.spacing {
            None => (s - self.first).abs(),
            Some(w) => {
                let k = ((s - self.first) / w).round();
                (s - self.first - k * w).abs()
            }
        }
    }

    /// All singular parameters in `[lo, hi]`.
    pub fn within(&self, lo: f64, hi: f64) -> Vec<f64> {
        match self.spacing {
            None => {
                if (lo..=hi).contains(&self.first) {
                    vec![self.first]
                } else {
                    vec![]
                }
            }
            Some(w) => {
                let k0 = ((lo - self.first) / w).ceil() as i64;
                let k1 = ((hi - self.first) / w).floor() as i64;
                (k0..=k1).map(|k| self.first + k as f64 * w).collect()
            }
        }
    }
}

#[derive(Debug, Clone)]
enum Shape {
    Cn { m: EllipticModulus, minus: bool },
    Sech { minus: bool },
    Dn { m: EllipticModulus, minus: bool },
    Catenoid,
    Offset { m: EllipticModulus, t: f64 },
    Numeric(Arc<ode::DenseProfile>),
}

/// An evaluatable profile curve with its metadata.
#[derive(Debug, Clone)]
pub struct ProfileCurve {
    family: Family,
    shape: Shape,
    cgc: Option<CgcParameters>,
    period: Option<f64>,
}

/// `r = p cn_p(s)`, `h = E_p(am_p s)` (`sign = +1`) or `E_p(am_p s) − s` (`sign = −1`).
///
/// The first integral is `C = p²` for `K = +1` and `C = 1 − p²` for `K = −1`.
pub fn profile_cn(sign: i32, m: EllipticModulus) -> ProfileCurve {
    let minus = sign < 0;
    let p2 = m.m();
    let cgc = if minus {
        CgcParameters { gauss: -1.0, c: 1.0 - p2, h_sign: -1.0 }
    } else {
        CgcParameters { gauss: 1.0, c: p2, h_sign: 1.0 }
    };
    ProfileCurve {
        family: if minus { Family::CnMinus } else { Family::CnPlus },
        shape: Shape::Cn { m, minus },
        cgc: Some(cgc),
        period: Some(4.0 * m.k_complete()),
    }
}

/// `r = 1/cosh s`, `h = tanh s`: the unit sphere, `C = 1`.
pub fn profile_sphere() -> ProfileCurve {
    ProfileCurve {
        family: Family::Sphere,
        shape: Shape::Sech { minus: false },
        cgc: Some(CgcParameters { gauss: 1.0, c: 1.0, h_sign: 1.0 }),
        period: None,
    }
}

/// `r = 1/cosh s`, `h = tanh s − s`: the pseudosphere, `C = 0`, cusp circle at `s = 0`.
pub fn profile_pseudosphere() -> ProfileCurve {
    ProfileCurve {
        family: Family::Pseudosphere,
        shape: Shape::Sech { minus: true },
        cgc: Some(CgcParameters { gauss: -1.0, c: 0.0, h_sign: -1.0 }),
        period: None,
    }
}

/// `r = dn_p(s/p)/p`, `h = E_p(am_p(s/p))/p − λ s` with `λ = (1−p²)/p²` for
/// `K = +1` and `λ = 1/p²` for `K = −1`.
///
/// The first integral is `C = 1/p²` for `K = +1` and `C = 1 − 1/p²` for `K = −1`.
pub fn profile_dn(sign: i32, m: EllipticModulus) -> ProfileCurve {
    let minus = sign < 0;
    let inv_p2 = 1.0 / m.m();
    let cgc = if minus {
        CgcParameters { gauss: -1.0, c: 1.0 - inv_p2, h_sign: -1.0 }
    } else {
        CgcParameters { gauss: 1.0, c: inv_p2, h_sign: 1.0 }
    };
    ProfileCurve {
        family: if minus { Family::DnMinus } else { Family::DnPlus },
        shape: Shape::Dn { m, minus },
        cgc: Some(cgc),
        period: Some(2.0 * m.p() * m.k_complete()),
    }
}

/// `r = cosh s`, `h = s`: the catenoid.
pub fn profile_catenoid() -> ProfileCurve {
    ProfileCurve {
        family: Family::Catenoid,
        shape: Shape::Catenoid,
        cgc: None,
        period: None,
    }
}

impl ProfileCurve {
    /// Parallel curve `ξ + t ν` of the `K = −1` dn profile `ξ`, where
    /// `ν = (−sn_p, cn_p)(s/p)` is the normal field that stays continuous
    /// through the cusps of `ξ`. Its period is `4pK`.
    pub fn pseudospherical_offset(m: EllipticModulus, t: f64) -> Self {
        ProfileCurve {
            family: Family::PseudosphericalOffset,
            shape: Shape::Offset { m, t },
            cgc: None,
            period: Some(4.0 * m.p() * m.k_complete()),
        }
    }

    pub(crate) fn numeric(cgc: CgcParameters, dense: ode::DenseProfile) -> Self {
        ProfileCurve {
            family: Family::NumericOde,
            shape: Shape::Numeric(Arc::new(dense)),
            cgc: Some(cgc),
            period: None,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `(K, C, σ)` data, absent for the catenoid and offset curves.
    pub fn cgc(&self) -> Option<CgcParameters> {
        self.cgc
    }

    /// `+1`, `−1`, `0` for the catenoid; `None` for offset curves.
    pub fn k_target(&self) -> Option<f64> {
        match self.family {
            Family::Catenoid => Some(0.0),
            _ => self.cgc.map(|c| c.gauss),
        }
    }

    pub fn modulus(&self) -> Option<EllipticModulus> {
        match &self.shape {
            Shape::Cn { m, .. } | Shape::Dn { m, .. } | Shape::Offset { m, .. } => Some(*m),
            _ => None,
        }
    }

    /// Period of `r` in `s`, if periodic.
    pub fn period(&self) -> Option<f64> {
        self.period
    }

    /// Maximal open `s`-interval around the normalization point where the
    /// profile is defined with `r > 0`. Numeric profiles cover `[0, s_max]`.
    pub fn domain(&self) -> (f64, f64) {
        match &self.shape {
            Shape::Cn { m, .. } => (-m.k_complete(), m.k_complete()),
            Shape::Numeric(d) => (0.0, d.s_max()),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    /// Parameters where the profile has zero speed or meets the axis.
    /// `None` when there are none (sphere, catenoid) or they are not known in
    /// closed form (numeric and offset profiles).
    pub fn singular_set(&self) -> Option<SingularSet> {
        match &self.shape {
            // Axis at odd multiples of K.
            Shape::Cn { m, minus: false } => Some(SingularSet {
                first: m.k_complete(),
                spacing: Some(2.0 * m.k_complete()),
            }),
            // Speed p|sn| vanishes at even multiples of K, the axis at odd ones.
            Shape::Cn { m, minus: true } => Some(SingularSet {
                first: 0.0,
                spacing: Some(m.k_complete()),
            }),
            Shape::Sech { minus: false } => None,
            Shape::Sech { minus: true } => Some(SingularSet { first: 0.0, spacing: None }),
            // Speed |cn(s/p)| vanishes at s = pK (mod 2pK).
            Shape::Dn { m, minus: false } => Some(SingularSet {
                first: m.p() * m.k_complete(),
                spacing: Some(2.0 * m.p() * m.k_complete()),
            }),
            // Speed |sn(s/p)| vanishes at s = 0 (mod 2pK).
            Shape::Dn { m, minus: true } => Some(SingularSet {
                first: 0.0,
                spacing: Some(2.0 * m.p() * m.k_complete()),
            }),
            Shape::Catenoid | Shape::Offset { .. } | Shape::Numeric(_) => None,
        }
    }

    /// Distance from `s` to the nearest declared singular parameter.
    pub fn distance_to_singular(&self, s: f64) -> f64 {
        self.singular_set().map_or(f64::INFINITY, |set| set.distance(s))
    }

    /// Closed-form evaluation of `(r, h)` and their first two derivatives.
    pub fn eval(&self, s: f64) -> ProfilePoint {
        let (r, h, dr, dh, ddr, ddh) = match &self.shape {
            Shape::Cn { m, minus } => {
                let p = m.p();
                let j = jacobi(s, m);
                let e = elliptic_e_am(s, m);
                let (h, dh) = if *minus {
                    (e - s, j.dn * j.dn - 1.0)
                } else {
                    (e, j.dn * j.dn)
                };
                (
                    p * j.cn,
                    h,
                    -p * j.sn * j.dn,
                    dh,
                    -p * j.cn * (j.dn * j.dn - m.m() * j.sn * j.sn),
                    -2.0 * m.m() * j.sn * j.cn * j.dn,
                )
            }
            Shape::Sech { minus } => {
                let r = 1.0 / s.cosh();
                let t = s.tanh();
                let (h, dh) = if *minus { (t - s, -t * t) } else { (t, r * r) };
                (r, h, -r * t, dh, r * (t * t - r * r), -2.0 * r * r * t)
            }
            Shape::Dn { m, minus } => {
                let p = m.p();
                let sigma = s / p;
                let j = jacobi(sigma, m);
                let e = elliptic_e_am(sigma, m) / p;
                let (h, dh) = if *minus {
                    (e - s / m.m(), -j.sn * j.sn)
                } else {
                    (e - (1.0 - m.m()) / m.m() * s, j.cn * j.cn)
                };
                (
                    j.dn / p,
                    h,
                    -j.sn * j.cn,
                    dh,
                    -j.dn / p * (j.cn * j.cn - j.sn * j.sn),
                    -2.0 * j.sn * j.cn * j.dn / p,
                )
            }
            Shape::Catenoid => (s.cosh(), s, s.sinh(), 1.0, s.cosh(), 0.0),
            Shape::Offset { m, t } => {
                let base = profile_dn(-1, *m).eval(s);
                let p = m.p();
                let j = jacobi(s / p, m);
                let (sn, cn, dn) = (j.sn, j.cn, j.dn);
                let k = t / p;
                (
                    base.r - t * sn,
                    base.h + t * cn,
                    base.dr - k * cn * dn,
                    base.dh - k * sn * dn,
                    base.ddr + k * (sn * dn * dn / p + p * sn * cn * cn),
                    base.ddh - k * (cn * dn * dn / p - p * sn * sn * cn),
                )
            }
            Shape::Numeric(d) => return d.eval(s),
        };
        ProfilePoint { s, r, h, dr, dh, ddr, ddh }
    }

    /// Continuous unit normal of the profile, for families whose natural
    /// orientation differs from the cross-product convention. Only offset
    /// curves carry one: `ν = (−sn_p, cn_p)(s/p)`.
    pub fn parallel_normal(&self, s: f64) -> Option<(f64, f64)> {
        match &self.shape {
            Shape::Offset { m, .. } => {
                let j = jacobi(s / m.p(), m);
                Some((-j.sn, j.cn))
            }
            _ => None,
        }
    }

    /// Residuals of `r'² = ((1−C)+Kr²)(C−Kr²)` and `h' = σ((1−C)+Kr²)` at `s`.
    pub fn ode_residuals(&self, s: f64) -> Result<(f64, f64)> {
        let cgc = self.cgc.ok_or(Error::NoFirstIntegral(self.family.name()))?;
        Ok(cgc.residuals(&self.eval(s)))
    }
}

/// Gauss curvature of the revolved surface from the profile alone,
/// `K = −(r'²/(r'²+h'²))' / (2 r r')`.
pub fn revolution_k(profile: &ProfileCurve, s: f64) -> Result<f64> {
    const EPS: f64 = 1e-12;
    let pt = profile.eval(s);
    if pt.dr.abs() <= EPS {
        return Err(Error::FormulaSingular { s, dr: pt.dr });
    }
    if pt.r <= 0.0 {
        return Err(Error::Domain(format!("profile radius {} is not positive at s = {s}", pt.r)));
    }
    let speed2 = pt.dr * pt.dr + pt.dh * pt.dh;
    // d/ds (r'²/(r'²+h'²)) = 2 r' h' (r'' h' − r' h'') / (r'²+h'²)²
    let ratio_rate = 2.0 * pt.dr * pt.dh * (pt.ddr * pt.dh - pt.dr * pt.ddh) / (speed2 * speed2);
    Ok(-ratio_rate / (2.0 * pt.r * pt.dr))
}
