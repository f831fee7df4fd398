//! The complete immersed rotational linear Weingarten surfaces of hyperbolic
//! type, obtained as parallel curves `ξ^t = ξ + tν` of the `K = −1` dn profile
//! `ξ(s) = (dn_p, p E(am_p) − s/p)(s/p) / p`.
//!
//! With `τ = (cn_p, sn_p)(s/p)` and `ν = (−sn_p, cn_p)(s/p)` one has
//! `ξ' = −sn_p(s/p) τ` and `(ξ^t)' = −(sn_p + (t/p) dn_p)(s/p) τ`, so
//!
//! * `ξ^t` is singular somewhere iff `|t| ≤ p/q`,
//! * `ξ^t` reaches the axis iff `|t| ≥ q/p`,
//!
//! and for `p < 1/√2` every `t ∈ (p/q, q/p)` gives an immersed, axis-avoiding,
//! periodic profile.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::parallel::LWCoefficients;
use crate::profiles::{revolve, ProfileCurve, Revolution};
use crate::specfun::{jacobi, EllipticModulus};

/// Samples per period of the dense scans.
pub const SCAN_SAMPLES: usize = 10_000;

/// Position and parallel frame of the base profile `ξ` at `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneCurveFrame {
    /// `(r, h)`.
    pub xi: (f64, f64),
    pub tau: (f64, f64),
    pub nu: (f64, f64),
    /// `|ξ'(s)| = |sn_p(s/p)|`.
    pub speed: f64,
}

pub fn base_frame(m: &EllipticModulus, s: f64) -> PlaneCurveFrame {
    let base = ProfileCurve::pseudospherical_offset(*m, 0.0).eval(s);
    let j = jacobi(s / m.p(), m);
    PlaneCurveFrame {
        xi: (base.r, base.h),
        tau: (j.cn, j.sn),
        nu: (-j.sn, j.cn),
        speed: j.sn.abs(),
    }
}

/// Period of `r` along the base profile and the matching height shift:
/// `(2pK, (2/p)(E − K))`.
pub fn base_period(m: &EllipticModulus) -> (f64, f64) {
    let p = m.p();
    (2.0 * p * m.k_complete(), 2.0 / p * (m.e_complete() - m.k_complete()))
}

/// `{t : |t| ≥ bound}` with `bound = q/p`: offsets whose profile meets the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisCrossingRange {
    pub bound: f64,
}

impl AxisCrossingRange {
    pub fn contains(&self, t: f64) -> bool {
        t.abs() >= self.bound
    }
}

/// `{t : |t| ≤ bound}` with `bound = p/q`: offsets whose profile has a zero of speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularRange {
    pub bound: f64,
}

impl SingularRange {
    pub fn contains(&self, t: f64) -> bool {
        t.abs() <= self.bound
    }
}

pub fn axis_crossing_range(m: &EllipticModulus) -> AxisCrossingRange {
    AxisCrossingRange {
        bound: m.q() / m.p(),
    }
}

pub fn singular_range(m: &EllipticModulus) -> SingularRange {
    SingularRange {
        bound: m.p() / m.q(),
    }
}

/// Open interval of offsets giving immersed, axis-avoiding members.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SafeInterval {
    pub lo: f64,
    pub hi: f64,
}

impl SafeInterval {
    pub fn contains(&self, t: f64) -> bool {
        self.lo < t && t < self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// The interval reflected through `t = 0`, which is equally safe.
    pub fn mirrored(&self) -> SafeInterval {
        SafeInterval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

/// `(p/q, q/p)` when it is nonempty, i.e. when `p < 1/√2`.
pub fn safe_interval(m: &EllipticModulus) -> Option<SafeInterval> {
    let lo = singular_range(m).bound;
    let hi = axis_crossing_range(m).bound;
    (lo < hi).then_some(SafeInterval { lo, hi })
}

/// Closed-form membership flags of an offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemberStatus {
    pub singular: bool,
    pub hits_axis: bool,
}

impl MemberStatus {
    pub fn immersed(&self) -> bool {
        !self.singular && !self.hits_axis
    }

    pub fn label(&self) -> &'static str {
        match (self.singular, self.hits_axis) {
            (false, false) => "immersed",
            (true, false) => "singular",
            (false, true) => "hits-axis",
            (true, true) => "singular+hits-axis",
        }
    }
}

/// Minima of speed and radius over one period found by dense sampling and
/// golden-section refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileScan {
    pub min_speed: f64,
    pub min_speed_at: f64,
    pub min_radius: f64,
    pub min_radius_at: f64,
}

/// One member `ξ^t` of the family.
///
/// `ν` changes sign after half a turn of `sn`, so the profile closes up (modulo
/// a vertical translation) after `4pK`, not after the `2pK` period of `ξ`.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub modulus: EllipticModulus,
    pub t: f64,
    pub profile: ProfileCurve,
    pub s_period: f64,
    pub h_translation: f64,
}

pub fn family_member(m: &EllipticModulus, t: f64) -> FamilyMember {
    let p = m.p();
    FamilyMember {
        modulus: *m,
        t,
        profile: ProfileCurve::pseudospherical_offset(*m, t),
        s_period: 4.0 * p * m.k_complete(),
        h_translation: 4.0 / p * (m.e_complete() - m.k_complete()),
    }
}

impl FamilyMember {
    /// `transform((1, 0, 1), t) = (1 + t², t, 1)`, so `Δ = −1`.
    pub fn lw_coefficients(&self) -> LWCoefficients {
        LWCoefficients::new(1.0, 0.0, 1.0)
            .expect("pseudosphere triple")
            .transform(self.t)
    }

    pub fn surface(&self) -> Revolution {
        revolve(self.profile.clone())
    }

    pub fn status(&self) -> MemberStatus {
        MemberStatus {
            singular: singular_range(&self.modulus).contains(self.t),
            hits_axis: axis_crossing_range(&self.modulus).contains(self.t),
        }
    }

    /// `sn_p + (t/p) dn_p` at `s/p`; `(ξ^t)' = −g τ`.
    pub fn speed_factor(&self, s: f64) -> f64 {
        let j = jacobi(s / self.modulus.p(), &self.modulus);
        j.sn + self.t / self.modulus.p() * j.dn
    }

    /// First `s ∈ [0, s_period)` where `(ξ^t)' = 0`, located by bisection.
    /// Tangential zeros (at `|t| = p/q` exactly) have no sign change and are
    /// only seen by [`FamilyMember::scan`].
    pub fn locate_singularity(&self) -> Option<f64> {
        self.singular_parameters(0.0, self.s_period)
            .into_iter()
            .find(|&s| s < self.s_period)
    }

    /// First `s ∈ [0, s_period)` where `r^t = 0`.
    pub fn locate_axis_crossing(&self) -> Option<f64> {
        self.axis_parameters(0.0, self.s_period)
            .into_iter()
            .find(|&s| s < self.s_period)
    }

    /// All sign-changing zeros of `(ξ^t)'` in `[lo, hi]`.
    pub fn singular_parameters(&self, lo: f64, hi: f64) -> Vec<f64> {
        roots_in(|s| self.speed_factor(s), lo, hi, self.samples_for(lo, hi))
    }

    /// All sign-changing zeros of `r^t` in `[lo, hi]`.
    pub fn axis_parameters(&self, lo: f64, hi: f64) -> Vec<f64> {
        roots_in(|s| self.profile.eval(s).r, lo, hi, self.samples_for(lo, hi))
    }

    fn samples_for(&self, lo: f64, hi: f64) -> usize {
        let periods = ((hi - lo) / self.s_period).max(0.0);
        ((periods * SCAN_SAMPLES as f64).ceil() as usize).max(16)
    }

    pub fn scan(&self) -> ProfileScan {
        let speed = |s: f64| {
            let pt = self.profile.eval(s);
            pt.dr.hypot(pt.dh)
        };
        let radius = |s: f64| self.profile.eval(s).r;
        let (min_speed_at, min_speed) = scan_minimum(speed, self.s_period);
        let (min_radius_at, min_radius) = scan_minimum(radius, self.s_period);
        ProfileScan {
            min_speed,
            min_speed_at,
            min_radius,
            min_radius_at,
        }
    }
}

fn sample(period: f64, i: usize) -> f64 {
    period * i as f64 / SCAN_SAMPLES as f64
}

fn roots_in<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut roots = Vec::new();
    if !(hi >= lo) {
        return roots;
    }
    let at = |i: usize| lo + (hi - lo) * i as f64 / n as f64;
    let mut a = lo;
    let mut f_a = f(a);
    if f_a == 0.0 {
        roots.push(a);
    }
    for i in 1..=n {
        let b = at(i);
        let f_b = f(b);
        if f_b == 0.0 {
            roots.push(b);
        } else if f_a != 0.0 && f_a.signum() != f_b.signum() {
            roots.push(bisect(&f, a, b, f_a));
        }
        a = b;
        f_a = f_b;
    }
    roots
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    if f(lo).abs() <= f(hi).abs() {
        lo
    } else {
        hi
    }
}

/// Argument and value of the smallest of `f` over one period.
fn scan_minimum<F: Fn(f64) -> f64>(f: F, period: f64) -> (f64, f64) {
    let (best, _) = (0..SCAN_SAMPLES)
        .map(|i| (i, f(sample(period, i))))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let center = sample(period, best);
    let step = period / SCAN_SAMPLES as f64;
    golden_section(&f, center - step, center + step)
}

fn golden_section<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..100 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Region of the `(r, h)` plane shown by [`profile_svg`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub r_min: f64,
    pub r_max: f64,
    pub h_min: f64,
    pub h_max: f64,
}

pub const SVG_PERIODS: usize = 2;
pub const SVG_SAMPLES_PER_PERIOD: usize = 1000;
const SVG_WIDTH: f64 = 600.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn polyline_points(member: &FamilyMember) -> Vec<(f64, f64)> {
    let n = SVG_PERIODS * SVG_SAMPLES_PER_PERIOD;
    let span = SVG_PERIODS as f64 * member.s_period;
    (0..=n)
        .map(|i| {
            let pt = member.profile.eval(span * i as f64 / n as f64);
            (pt.r, pt.h)
        })
        .collect()
}

fn coord(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

/// SVG 1.1 document with one polyline per member in the `(r, h)` plane,
/// `h` pointing up, over two periods each.
pub fn profile_svg(members: &[FamilyMember], viewport: Option<Viewport>) -> Result<String> {
    if members.is_empty() {
        return Err(Error::Domain("profile_svg needs at least one member".into()));
    }
    let curves: Vec<_> = members.iter().map(polyline_points).collect();
    polylines_svg(&curves, viewport)
}

/// Bounding box of the curves padded by 5% on every side.
pub fn default_viewport(curves: &[Vec<(f64, f64)>]) -> Viewport {
    let mut vp = Viewport {
        r_min: f64::INFINITY,
        r_max: f64::NEG_INFINITY,
        h_min: f64::INFINITY,
        h_max: f64::NEG_INFINITY,
    };
    for &(r, h) in curves.iter().flatten() {
        vp.r_min = vp.r_min.min(r);
        vp.r_max = vp.r_max.max(r);
        vp.h_min = vp.h_min.min(h);
        vp.h_max = vp.h_max.max(h);
    }
    let pad_r = 0.05 * (vp.r_max - vp.r_min).max(1e-9);
    let pad_h = 0.05 * (vp.h_max - vp.h_min).max(1e-9);
    Viewport {
        r_min: vp.r_min - pad_r,
        r_max: vp.r_max + pad_r,
        h_min: vp.h_min - pad_h,
        h_max: vp.h_max + pad_h,
    }
}

/// Plots `(r, h)` polylines with equal axis scales, 600 px wide.
pub fn polylines_svg(curves: &[Vec<(f64, f64)>], viewport: Option<Viewport>) -> Result<String> {
    if curves.iter().flatten().any(|&(r, h)| !(r.is_finite() && h.is_finite())) {
        return Err(Error::Domain("non-finite point in polyline".into()));
    }
    let vp = viewport.unwrap_or_else(|| default_viewport(curves));
    if !(vp.r_max > vp.r_min && vp.h_max > vp.h_min) {
        return Err(Error::Domain(format!("empty viewport {vp:?}")));
    }
    let scale = SVG_WIDTH / (vp.r_max - vp.r_min);
    let height = (vp.h_max - vp.h_min) * scale;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = coord(SVG_WIDTH),
        h = coord(height)
    );
    for (k, curve) in curves.iter().enumerate() {
        let points: Vec<String> = curve
            .iter()
            .map(|&(r, h)| {
                let x = (r - vp.r_min) * scale;
                let y = (vp.h_max - h) * scale;
                format!("{},{}", coord(x), coord(y))
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>"#,
            color = PALETTE[k % PALETTE.len()],
            pts = points.join(" ")
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallel::lw_residual;
    use crate::specfun::oracle::integrate;
    use crate::surface::SurfaceMap;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn modulus(p: f64) -> EllipticModulus {
        EllipticModulus::new(p).unwrap()
    }

    #[test]
    fn frame_at_origin() {
        let f = base_frame(&modulus(0.5), 0.0);
        assert!((f.xi.0 - 2.0).abs() < 1e-15 && f.xi.1.abs() < 1e-15);
        assert_eq!(f.tau, (1.0, 0.0));
        assert_eq!(f.nu, (-0.0, 1.0));
        assert_eq!(f.speed, 0.0);
    }

    #[test]
    fn frame_is_orthonormal_and_parallel() {
        let m = modulus(0.5);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let s = rng.gen_range(-10.0..10.0);
            let f = base_frame(&m, s);
            // ν is τ rotated by +90°.
            assert!((f.nu.0 + f.tau.1).abs() < 1e-15 && (f.nu.1 - f.tau.0).abs() < 1e-15);
            assert!((f.tau.0.hypot(f.tau.1) - 1.0).abs() < 1e-12);
            let h = 1e-5;
            let (a, b) = (base_frame(&m, s + h).xi, base_frame(&m, s - h).xi);
            let sn = jacobi(s / m.p(), &m).sn;
            let d = ((a.0 - b.0) / (2.0 * h), (a.1 - b.1) / (2.0 * h));
            assert!((d.0 + sn * f.tau.0).abs() < 1e-6 && (d.1 + sn * f.tau.1).abs() < 1e-6);
            assert!((f.speed - sn.abs()).abs() < 1e-15);
        }
    }

    #[test]
    fn boundaries_at_one_half() {
        let m = modulus(0.5);
        assert!((axis_crossing_range(&m).bound - 1.732_050_8).abs() < 1e-7);
        assert!((singular_range(&m).bound - 0.577_350_3).abs() < 1e-7);
        let safe = safe_interval(&m).unwrap();
        assert!((safe.lo - 0.577_350_3).abs() < 1e-7 && (safe.hi - 1.732_050_8).abs() < 1e-7);
        assert_eq!(safe.mirrored(), SafeInterval { lo: -safe.hi, hi: -safe.lo });
        assert!(safe.contains(1.0) && !safe.contains(0.3) && !safe.contains(1.8));
    }

    #[test]
    fn safe_interval_needs_small_modulus() {
        assert!(safe_interval(&modulus(0.8)).is_none());
        let edge = safe_interval(&modulus(std::f64::consts::FRAC_1_SQRT_2 - 1e-9)).unwrap();
        assert!(edge.width() > 0.0 && edge.width() < 1e-8);
    }

    #[test]
    fn axis_crossing_by_scan() {
        let m = modulus(0.5);
        let far = family_member(&m, 1.8);
        assert!(far.status().hits_axis);
        assert!(far.scan().min_radius <= 0.0);
        let s = far.locate_axis_crossing().unwrap();
        assert!(far.profile.eval(s).r.abs() <= 1e-10);
        let near = family_member(&m, 1.0);
        assert!(!near.status().hits_axis);
        assert!(near.scan().min_radius > 0.0 && near.locate_axis_crossing().is_none());
    }

    #[test]
    fn singularity_by_root_finding() {
        let m = modulus(0.5);
        let member = family_member(&m, 0.3);
        assert_eq!(member.status().label(), "singular");
        let s = member.locate_singularity().unwrap();
        assert!(member.speed_factor(s).abs() <= 1e-10);
        // Only the second half-turn of ν can cancel a positive offset.
        assert!(s > 0.5 * member.s_period && s < member.s_period);
        let safe = family_member(&m, 1.0);
        assert!(safe.locate_singularity().is_none());
        let scan = safe.scan();
        assert!(scan.min_speed > 1e-3 && scan.min_radius > 1e-3);
        assert_eq!(safe.status().label(), "immersed");
    }

    #[test]
    fn safe_members_are_immersed() {
        for p in [0.3, 0.5, 0.65] {
            let m = modulus(p);
            let safe = safe_interval(&m).unwrap();
            for k in 1..8 {
                let t = safe.lo + safe.width() * k as f64 / 8.0;
                let scan = family_member(&m, t).scan();
                assert!(scan.min_speed > 0.0 && scan.min_radius > 0.0, "p = {p}, t = {t}");
            }
        }
    }

    #[test]
    fn boundaries_are_sharp() {
        for p in [0.3, 0.5, 0.65] {
            let m = modulus(p);
            let at_singular = family_member(&m, m.p() / m.q()).scan();
            assert!(at_singular.min_speed <= 1e-6, "{p}: {at_singular:?}");
            let at_axis = family_member(&m, m.q() / m.p()).scan();
            assert!(at_axis.min_radius <= 1e-6, "{p}: {at_axis:?}");
        }
    }

    #[test]
    fn set_identities() {
        let m = modulus(0.5);
        let (lo, hi) = (singular_range(&m).bound, axis_crossing_range(&m).bound);
        for i in 0..4000 {
            let sigma = 4.0 * m.k_complete() * (i as f64 + 0.5) / 4000.0;
            let j = jacobi(sigma, &m);
            let axis_t = j.dn / (m.p() * j.sn);
            assert!(axis_t.abs() >= hi * (1.0 - 1e-12));
            let singular_t = -m.p() * j.sn / j.dn;
            assert!(singular_t.abs() <= lo * (1.0 + 1e-12));
        }
    }

    #[test]
    fn periodicity() {
        let m = modulus(0.5);
        let member = family_member(&m, 1.0);
        for i in 0..200 {
            let s = -5.0 + 0.05 * i as f64;
            let (a, b) = (member.profile.eval(s), member.profile.eval(s + member.s_period));
            assert!((a.r - b.r).abs() <= 1e-10);
            assert!((b.h - a.h - member.h_translation).abs() <= 1e-10);
        }
        // r^t is not 2pK-periodic for t ≠ 0.
        let (half, _) = base_period(&m);
        assert!((member.profile.eval(0.3).r - member.profile.eval(0.3 + half).r).abs() > 0.1);
    }

    #[test]
    fn translation_against_quadrature() {
        let m = modulus(0.5);
        let (_, base_shift) = base_period(&m);
        // Quoted to seven digits as −0.8731527; the value is −0.873152582.
        assert!((base_shift + 0.873_152_7).abs() < 5e-7, "{base_shift}");
        assert!((base_shift + 0.873_152_582).abs() < 1e-9);
        for t in [0.0, 0.7, 1.0, 1.5] {
            let member = family_member(&m, t);
            let numeric = integrate(|s| member.profile.eval(s).dh, 0.0, member.s_period, 1e-13);
            assert!((numeric - member.h_translation).abs() <= 1e-9, "t = {t}");
            assert!((member.h_translation - 2.0 * base_shift).abs() < 1e-14);
        }
    }

    #[test]
    fn member_satisfies_offset_triple() {
        let m = modulus(0.5);
        let member = family_member(&m, 1.0);
        let lw = member.lw_coefficients();
        assert_eq!((lw.a(), lw.b(), lw.c()), (2.0, 1.0, 1.0));
        assert_eq!(lw.discriminant(), -1.0);
        let samples: Vec<_> = (0..1000)
            .map(|i| (member.s_period * (i as f64 + 0.5) / 1000.0, 0.1 * i as f64))
            .collect();
        let surface = member.surface();
        assert!(lw_residual(&surface, &lw, &samples).unwrap() <= 1e-7);
        // Vertical translation symmetry of the revolved surface.
        for &(s, th) in samples.iter().step_by(50) {
            let d = surface.point(s + member.s_period, th) - surface.point(s, th);
            assert!(d.x.abs() <= 1e-9 && d.y.abs() <= 1e-9);
            assert!((d.z - member.h_translation).abs() <= 1e-9);
        }
    }

    #[test]
    fn svg_is_deterministic() {
        let m = modulus(0.5);
        let members: Vec<_> = [0.7, 1.0, 1.5].iter().map(|&t| family_member(&m, t)).collect();
        let a = profile_svg(&members, None).unwrap();
        let b = profile_svg(&members, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<polyline").count(), 3);
        assert!(!a.contains("NaN"));
        assert!(profile_svg(&[], None).is_err());
        let vp = Viewport { r_min: 0.0, r_max: 4.0, h_min: -8.0, h_max: 1.0 };
        assert!(profile_svg(&members, Some(vp)).unwrap().contains(r#"height="1350.000""#));
    }

    #[test]
    fn all_roots_in_a_range() {
        let m = modulus(0.5);
        let member = family_member(&m, 0.3);
        // One descending and one ascending zero per period.
        let roots = member.singular_parameters(0.0, 2.0 * member.s_period);
        assert_eq!(roots.len(), 4, "{roots:?}");
        for s in roots {
            assert!(member.speed_factor(s).abs() <= 1e-10);
        }
        let far = family_member(&m, 2.0);
        assert_eq!(far.axis_parameters(0.0, far.s_period).len(), 2);
    }
}
