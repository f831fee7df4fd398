//! End-to-end flows through the public API.

use proptest::prelude::*;
use weingarten::hyperbolic::{family_member, safe_interval};
use weingarten::parallel::{
    classify, lw_residual, parallel_curvatures, LWCoefficients, LWKind, ParallelSurface,
    DEFAULT_CLASSIFY_TOL,
};
use weingarten::profiles::{profile_cn, profile_dn, profile_sphere, revolve, Circle, Tube};
use weingarten::specfun::{jacobi, EllipticModulus};
use weingarten::surface::SurfaceMap;

fn lw(a: f64, b: f64, c: f64) -> LWCoefficients {
    LWCoefficients::new(a, b, c).unwrap()
}

#[test]
fn sphere_offset_chain() {
    // Unit sphere → offset by t is a sphere of radius 1 − t with H = 1/(1 − t).
    let sphere = revolve(profile_sphere());
    for t in [-0.5, 0.25, 0.5] {
        let offset = ParallelSurface::new(&sphere, t);
        let c = offset.curvature(0.3, 1.1).unwrap();
        let radius = 1.0 - t;
        assert!((c.gauss - 1.0 / (radius * radius)).abs() < 1e-12);
        assert!((c.mean - 1.0 / radius).abs() < 1e-12);
        assert!((offset.point(0.3, 1.1).norm() - radius).abs() < 1e-12);
    }
    let focal = ParallelSurface::new(&sphere, 1.0);
    assert!(focal.curvature(0.3, 1.1).is_err());
}

#[test]
fn cgc_profile_offsets_satisfy_the_transformed_triple() {
    let m = EllipticModulus::new(0.4).unwrap();
    let base = revolve(profile_cn(1, m));
    let triple = lw(1.0, 0.0, -1.0);
    let samples: Vec<_> = (0..40).map(|i| (-1.2 + 0.06 * i as f64, 0.2 * i as f64)).collect();
    for t in [-0.4, 0.2, 0.35] {
        let offset = ParallelSurface::new(&base, t);
        let r = lw_residual(&offset, &triple.transform(t), &samples).unwrap();
        assert!(r < 1e-10, "t = {t}: {r:e}");
    }
}

#[test]
fn torus_is_tubular_with_constant_curvature() {
    let torus = Tube::new(Circle { radius: 3.0 }, 1.0).unwrap();
    let class = classify(&lw(1.0, 1.0, 1.0), DEFAULT_CLASSIFY_TOL);
    assert_eq!(class.kind, LWKind::Tubular);
    let kappa = class.constant_principal_curvature.unwrap();
    for i in 0..50 {
        let c = torus.curvature(0.4 * i as f64, 0.13 * i as f64).unwrap();
        let gap = (c.kappa1 - kappa).abs().min((c.kappa2 - kappa).abs());
        assert!(gap < 1e-12);
    }
}

#[test]
fn hyperbolic_members_obey_their_triples() {
    let m = EllipticModulus::new(0.5).unwrap();
    let safe = safe_interval(&m).unwrap();
    let t = 0.5 * (safe.lo + safe.hi);
    let member = family_member(&m, t);
    assert!(member.status().immersed());
    let samples: Vec<_> = (0..100).map(|i| (member.s_period * i as f64 / 100.0, 0.0)).collect();
    let r = lw_residual(&member.surface(), &member.lw_coefficients(), &samples).unwrap();
    assert!(r < 1e-9, "{r:e}");
    let dn = profile_dn(-1, m);
    assert!((dn.eval(0.7).r - family_member(&m, 0.0).profile.eval(0.7).r).abs() < 1e-14);
}

proptest! {
    #[test]
    fn discriminant_is_invariant(a in -4.0..4.0f64, b in -4.0..4.0f64, c in -4.0..4.0f64, t in -3.0..3.0f64) {
        prop_assume!(a.abs().max(b.abs()).max(c.abs()) > 1e-3);
        let base = lw(a, b, c);
        let moved = base.transform(t);
        let scale = [b * b, (a * c).abs(), moved.b().powi(2), (moved.a() * moved.c()).abs()]
            .into_iter()
            .fold(1e-300, f64::max);
        prop_assert!((moved.discriminant() - base.discriminant()).abs() <= 8.0 * f64::EPSILON * scale);
    }

    #[test]
    fn transforms_compose(a in -2.0..2.0f64, b in -2.0..2.0f64, c in -2.0..2.0f64, s in -1.0..1.0f64, t in -1.0..1.0f64) {
        prop_assume!(a.abs().max(b.abs()).max(c.abs()) > 1e-3);
        let base = lw(a, b, c);
        let two = base.transform(s).transform(t);
        let one = base.transform(s + t);
        prop_assert!((two.a() - one.a()).abs() < 1e-12);
        prop_assert!((two.b() - one.b()).abs() < 1e-12);
        prop_assert!((two.c() - one.c()).abs() < 1e-12);
    }

    #[test]
    fn classification_is_scale_invariant(a in -3.0..3.0f64, b in -3.0..3.0f64, c in -3.0..3.0f64, lambda in 0.1..10.0f64) {
        prop_assume!(a.abs().max(b.abs()).max(c.abs()) > 1e-2);
        let base = classify(&lw(a, b, c), DEFAULT_CLASSIFY_TOL);
        let scaled = classify(&lw(lambda * a, lambda * b, lambda * c), DEFAULT_CLASSIFY_TOL);
        prop_assert_eq!(base.kind, scaled.kind);
        prop_assert_eq!(base.offsets.len(), scaled.offsets.len());
        for (x, y) in base.offsets.iter().zip(&scaled.offsets) {
            prop_assert_eq!(x.label, y.label);
            prop_assert!((x.t - y.t).abs() <= 1e-9 * (1.0 + x.t.abs()));
        }
    }

    #[test]
    fn parallel_curvatures_preserve_linear_relations(
        k in -3.0..3.0f64, h in -3.0..3.0f64, a in -2.0..2.0f64, b in -2.0..2.0f64, t in -0.3..0.3f64,
    ) {
        let factor = 1.0 - 2.0 * t * h + t * t * k;
        prop_assume!(factor.abs() > 1e-2);
        let (kt, ht) = parallel_curvatures(k, h, t).unwrap();
        // Any triple satisfied at (k, h) is satisfied, transformed, at (kt, ht).
        let c = -(a * k + 2.0 * b * h);
        prop_assume!(a.abs().max(b.abs()).max(c.abs()) > 1e-3);
        let triple = lw(a, b, c);
        let moved = triple.transform(t);
        prop_assert!(moved.residual(kt, ht).abs() < 1e-8 * (1.0 + kt.abs() + ht.abs()));
    }

    #[test]
    fn jacobi_pythagorean(s in -50.0..50.0f64, p in 0.001..0.999f64) {
        let m = EllipticModulus::new(p).unwrap();
        let j = jacobi(s, &m);
        prop_assert!((j.sn * j.sn + j.cn * j.cn - 1.0).abs() < 1e-12);
        prop_assert!((j.dn * j.dn + p * p * j.sn * j.sn - 1.0).abs() < 1e-12);
    }

    #[test]
    fn safe_members_are_immersed(p in 0.05..0.7f64, frac in 0.02..0.98f64) {
        let m = EllipticModulus::new(p).unwrap();
        let safe = safe_interval(&m).unwrap();
        let t = safe.lo + frac * (safe.hi - safe.lo);
        let status = family_member(&m, t).status();
        prop_assert!(status.immersed());
        prop_assert!(family_member(&m, -t).status().immersed());
    }
}
