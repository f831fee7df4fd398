use super::carlson::{carlson_rd, carlson_rf};
use super::EllipticModulus;
use std::f64::consts::PI;

/// Values of the Jacobi elliptic functions at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
    /// Amplitude on the continuous branch through `am(0) = 0`.
    pub am: f64,
}

// Longest descending AGM chain needed for p < 1 in double precision is ~8.
const MAX_AGM_STEPS: usize = 16;

/// Amplitude split as `am = half_turns·π + reduced`, `reduced ∈ [-π/2, π/2]`.
#[derive(Debug, Clone, Copy)]
struct SplitAmplitude {
    half_turns: f64,
    reduced: f64,
}

impl SplitAmplitude {
    fn value(&self) -> f64 {
        self.half_turns * PI + self.reduced
    }

    fn parity_sign(&self) -> f64 {
        if self.half_turns.rem_euclid(2.0) == 0.0 {
            1.0
        } else {
            -1.0
        }
    }
}

fn amplitude(s: f64, m: &EllipticModulus) -> SplitAmplitude {
    assert!(s.is_finite(), "Jacobi functions need a finite argument, got {s}");
    // am(s + 2K) = am(s) + π, so reduce to [-K, K] and count half turns.
    let half_period = 2.0 * m.k_complete();
    let half_turns = (s / half_period).round();
    let r = s - half_turns * half_period;

    let mut ratios = [0.0_f64; MAX_AGM_STEPS];
    let (mut a, mut b, mut c) = (1.0_f64, m.q(), m.p());
    let mut n = 0;
    while c.abs() > f64::EPSILON * a && n < MAX_AGM_STEPS - 1 {
        let a_next = 0.5 * (a + b);
        let b_next = (a * b).sqrt();
        c = 0.5 * (a - b);
        a = a_next;
        b = b_next;
        n += 1;
        ratios[n] = c / a;
    }

    let mut phi = (1u64 << n) as f64 * a * r;
    for k in (1..=n).rev() {
        phi = 0.5 * (phi + (ratios[k] * phi.sin()).asin());
    }
    SplitAmplitude {
        half_turns,
        reduced: phi,
    }
}

/// Jacobi `sn`, `cn`, `dn` and the unwound amplitude at `s`.
///
/// Uses the descending AGM with phase back-substitution on `[-K, K]` and
/// extends by `am(s + 2K) = am(s) + π`.
pub fn jacobi(s: f64, m: &EllipticModulus) -> JacobiTriple {
    let split = amplitude(s, m);
    let sign = split.parity_sign();
    let sn = sign * split.reduced.sin();
    let cn = sign * split.reduced.cos();
    let p = m.p();
    let dn = ((1.0 - p * sn) * (1.0 + p * sn)).sqrt();
    JacobiTriple {
        sn,
        cn,
        dn,
        am: split.value(),
    }
}

/// `E_p(φ)` on `[-π/2, π/2]` by Carlson's symmetric forms.
fn elliptic_e_reduced(phi: f64, m: &EllipticModulus) -> f64 {
    if phi == 0.0 {
        return 0.0;
    }
    let (s, c) = phi.sin_cos();
    let p = m.p();
    let y = (1.0 - p * s) * (1.0 + p * s);
    let c2 = c * c;
    s * carlson_rf(c2, y, 1.0) - m.m() / 3.0 * s * s * s * carlson_rd(c2, y, 1.0)
}

/// Incomplete elliptic integral of the second kind `E_p(φ) = ∫₀^φ √(1 − p² sin²ϑ) dϑ`
/// for any finite `φ`.
pub fn elliptic_e_incomplete(phi: f64, m: &EllipticModulus) -> f64 {
    assert!(phi.is_finite(), "E_p needs a finite amplitude, got {phi}");
    let half_turns = (phi / PI).round();
    let reduced = phi - half_turns * PI;
    2.0 * half_turns * m.e_complete() + elliptic_e_reduced(reduced, m)
}

/// `(E_p ∘ am_p)(s)` along the unwound amplitude branch.
pub fn elliptic_e_am(s: f64, m: &EllipticModulus) -> f64 {
    let split = amplitude(s, m);
    2.0 * split.half_turns * m.e_complete() + elliptic_e_reduced(split.reduced, m)
}

#[cfg(test)]
mod tests {
    use super::super::oracle;
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn modulus(p: f64) -> EllipticModulus {
        EllipticModulus::new(p).unwrap()
    }

    #[test]
    fn values_at_origin() {
        for p in [0.05, 0.5, 0.95] {
            let j = jacobi(0.0, &modulus(p));
            assert_eq!((j.sn, j.cn, j.dn, j.am), (0.0, 1.0, 1.0, 0.0));
        }
    }

    #[test]
    fn quarter_period_values() {
        let m = modulus(0.5);
        let j = jacobi(m.k_complete(), &m);
        assert!((j.sn - 1.0).abs() < 1e-15);
        assert!(j.cn.abs() < 1e-15);
        assert!((j.dn - m.q()).abs() < 1e-15);
        assert!((j.am - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn amplitude_at_two_matches_ode_oracle() {
        let m = modulus(0.5);
        let reference = oracle::amplitude_by_rk4(2.0, 0.5, 1e-4);
        assert!((jacobi(2.0, &m).am - reference).abs() < 1e-12);
    }

    #[test]
    fn amplitude_is_unwound() {
        let m = modulus(0.8);
        let k2 = 2.0 * m.k_complete();
        for s in [-7.3, -1.1, 0.4, 2.9, 9.5] {
            let a0 = jacobi(s, &m).am;
            let a1 = jacobi(s + k2, &m).am;
            assert!((a1 - a0 - PI).abs() < 1e-12, "s = {s}");
        }
        let mut prev = jacobi(-30.0, &m).am;
        for i in 1..=6000 {
            let am = jacobi(-30.0 + i as f64 * 0.01, &m).am;
            assert!(am > prev);
            prev = am;
        }
    }

    #[test]
    fn e_incomplete_special_values() {
        let m = modulus(0.5);
        assert_eq!(elliptic_e_incomplete(0.0, &m), 0.0);
        assert!((elliptic_e_incomplete(FRAC_PI_2, &m) - 1.467_462_209_339_427).abs() < 1e-14);
        for x in [0.2, 1.3, 2.7, 8.0] {
            let sum = elliptic_e_incomplete(x, &m) + elliptic_e_incomplete(-x, &m);
            assert!(sum.abs() < 1e-14);
            let shifted = elliptic_e_incomplete(x + PI, &m) - elliptic_e_incomplete(x, &m);
            assert!((shifted - 2.0 * m.e_complete()).abs() < 1e-13);
        }
    }

    #[test]
    fn e_incomplete_matches_quadrature() {
        for p in [0.05, 0.3, 0.6, 0.95] {
            let m = modulus(p);
            for i in -20..=20 {
                let phi = i as f64 * 0.37;
                let reference = oracle::elliptic_e_by_quadrature(phi, p);
                let value = elliptic_e_incomplete(phi, &m);
                assert!(
                    (value - reference).abs() <= 1e-12 * reference.abs().max(1.0),
                    "p = {p}, phi = {phi}: {value} vs {reference}"
                );
            }
        }
    }

    #[test]
    fn e_am_quasi_periodicity_and_derivative() {
        let m = modulus(0.5);
        assert_eq!(elliptic_e_am(0.0, &m), 0.0);
        let two_k = 2.0 * m.k_complete();
        assert!((elliptic_e_am(two_k, &m) - 2.934_924_418_678_854).abs() < 1e-13);
        for s in [-3.0, -0.2, 0.7, 5.5] {
            let shift = elliptic_e_am(s + two_k, &m) - elliptic_e_am(s, &m);
            assert!((shift - 2.0 * m.e_complete()).abs() < 1e-13);
            let h = 1e-5;
            let fd = (elliptic_e_am(s + h, &m) - elliptic_e_am(s - h, &m)) / (2.0 * h);
            let dn = jacobi(s, &m).dn;
            assert!((fd - dn * dn).abs() < 1e-6, "s = {s}");
        }
    }

    proptest! {
        #[test]
        fn pythagorean_identities(s in -10.0..10.0f64, p in 0.05..0.95f64) {
            let m = modulus(p);
            let j = jacobi(s, &m);
            prop_assert!((j.sn * j.sn + j.cn * j.cn - 1.0).abs() <= 1e-12);
            prop_assert!((j.dn * j.dn + p * p * j.sn * j.sn - 1.0).abs() <= 1e-12);
            prop_assert!((j.sn - j.am.sin()).abs() <= 1e-12);
            prop_assert!((j.cn - j.am.cos()).abs() <= 1e-12);
            prop_assert!(j.dn >= m.q() - 1e-15 && j.dn <= 1.0);
        }

        #[test]
        fn odd_even_symmetry(s in -10.0..10.0f64, p in 0.05..0.95f64) {
            let m = modulus(p);
            let (a, b) = (jacobi(s, &m), jacobi(-s, &m));
            prop_assert!((a.am + b.am).abs() <= 1e-13);
            prop_assert!((a.sn + b.sn).abs() <= 1e-13);
            prop_assert!((a.cn - b.cn).abs() <= 1e-13);
            prop_assert!((a.dn - b.dn).abs() <= 1e-13);
        }
    }
}
