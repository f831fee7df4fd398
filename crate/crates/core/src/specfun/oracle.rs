//! Reference computations that share no code path with the AGM / Carlson kernel.
//!
//! Everything here integrates the defining integrals or differential equations
//! directly. It is slow and exists to check the fast routines.

#![allow(clippy::excessive_precision)]

use std::f64::consts::FRAC_PI_2;

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kronrod = KRONROD_WEIGHTS[7] * f(center);
    let mut gauss = GAUSS_WEIGHTS[3] * f(center);
    for i in 0..7 {
        let dx = half * KRONROD_NODES[i];
        let pair = f(center - dx) + f(center + dx);
        kronrod += KRONROD_WEIGHTS[i] * pair;
        if i % 2 == 1 {
            gauss += GAUSS_WEIGHTS[i / 2] * pair;
        }
    }
    (kronrod * half, (kronrod - gauss).abs() * half)
}

/// Adaptive 7/15-point Gauss–Kronrod quadrature of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (value, err) = gauss_kronrod(f, a, b);
        if err <= tol || depth == 0 {
            return value;
        }
        let mid = 0.5 * (a + b);
        recurse(f, a, mid, 0.5 * tol, depth - 1) + recurse(f, mid, b, 0.5 * tol, depth - 1)
    }
    if a == b {
        return 0.0;
    }
    // Coarse panels first so the Gauss/Kronrod error estimate cannot agree
    // by accident over a long oscillating range.
    let panels = ((b - a).abs() / 0.5).ceil().max(1.0) as usize;
    let width = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + i as f64 * width;
            recurse(&f, lo, lo + width, tol / panels as f64, 40)
        })
        .sum()
}

/// `(K(p), E(p))` by quadrature of the Legendre integrands.
pub fn complete_integrals_by_quadrature(p: f64) -> (f64, f64) {
    let m = p * p;
    let k = integrate(|t| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 1e-15);
    let e = integrate(|t| (1.0 - m * t.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 1e-15);
    (k, e)
}

/// `E_p(φ)` by quadrature of `√(1 − p² sin²ϑ)` over `[0, φ]`.
pub fn elliptic_e_by_quadrature(phi: f64, p: f64) -> f64 {
    let m = p * p;
    integrate(|t| (1.0 - m * t.sin().powi(2)).sqrt(), 0.0, phi, 1e-15)
}

/// Classical fourth-order Runge–Kutta step for a system of `N` equations.
pub fn rk4_step<const N: usize, F>(f: &F, s: f64, y: &[f64; N], h: f64) -> [f64; N]
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let add = |base: &[f64; N], k: &[f64; N], scale: f64| {
        let mut out = *base;
        for (o, ki) in out.iter_mut().zip(k) {
            *o += scale * ki;
        }
        out
    };
    let k1 = f(s, y);
    let k2 = f(s + 0.5 * h, &add(y, &k1, 0.5 * h));
    let k3 = f(s + 0.5 * h, &add(y, &k2, 0.5 * h));
    let k4 = f(s + h, &add(y, &k3, h));
    let mut out = *y;
    for i in 0..N {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Amplitude `am_p(s)` by RK4 integration of `am' = √(1 − p² sin² am)` from `am(0) = 0`.
pub fn amplitude_by_rk4(s: f64, p: f64, max_step: f64) -> f64 {
    let m = p * p;
    let rhs = |_: f64, y: &[f64; 1]| [(1.0 - m * y[0].sin().powi(2)).sqrt()];
    let steps = (s.abs() / max_step).ceil().max(1.0) as usize;
    let h = s / steps as f64;
    let mut y = [0.0];
    for i in 0..steps {
        y = rk4_step(&rhs, i as f64 * h, &y, h);
    }
    y[0]
}
