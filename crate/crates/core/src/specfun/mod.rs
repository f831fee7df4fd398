//! Jacobi elliptic functions and elliptic integrals of the second kind on the
//! whole real line.
//!
//! The modulus convention is the one used for profile curves: `p` is the
//! elliptic modulus (so the parameter is `m = p²`) and `q = √(1 − p²)` the
//! co-module. The amplitude `am_p` is always returned on its continuous,
//! strictly increasing branch, never reduced modulo `2π`.

mod carlson;
mod jacobi;
pub mod oracle;

pub use carlson::{carlson_rd, carlson_rf};
pub use jacobi::{elliptic_e_am, elliptic_e_incomplete, jacobi, JacobiTriple};

use crate::error::{Error, Result};
use std::f64::consts::FRAC_PI_2;

/// Elliptic modulus `p ∈ (0, 1)` together with its co-module and complete integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    p: f64,
    q: f64,
    k_complete: f64,
    e_complete: f64,
}

impl EllipticModulus {
    /// Builds the modulus and its complete integrals by the arithmetic-geometric mean.
    ///
    /// The limits `p → 0` (circular) and `p → 1` (hyperbolic) are rejected; callers
    /// wanting those cases use the explicit trigonometric / hyperbolic forms.
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p <= 0.0 || p >= 1.0 {
            return Err(Error::Domain(format!(
                "elliptic modulus p must lie in (0, 1), got {p}"
            )));
        }
        let q = ((1.0 - p) * (1.0 + p)).sqrt();

        // Gauss' AGM with the Legendre correction series for E:
        // E/K = 1 - Σ 2^(n-1) c_n², c_0 = p.
        let (mut a, mut b, mut c) = (1.0_f64, q, p);
        let mut weight = 0.5;
        let mut sum = weight * c * c;
        while c.abs() > f64::EPSILON * a {
            let a_next = 0.5 * (a + b);
            let b_next = (a * b).sqrt();
            c = 0.5 * (a - b);
            a = a_next;
            b = b_next;
            weight *= 2.0;
            sum += weight * c * c;
        }
        let k_complete = FRAC_PI_2 / a;
        let e_complete = k_complete * (1.0 - sum);
        Ok(Self {
            p,
            q,
            k_complete,
            e_complete,
        })
    }

    #[inline]
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Co-module `q = √(1 − p²)`.
    #[inline]
    pub fn q(&self) -> f64 {
        self.q
    }

    /// Parameter `m = p²`.
    #[inline]
    pub fn m(&self) -> f64 {
        self.p * self.p
    }

    /// Quarter period `K(p)`.
    #[inline]
    pub fn k_complete(&self) -> f64 {
        self.k_complete
    }

    /// Complete integral of the second kind `E(p)`.
    #[inline]
    pub fn e_complete(&self) -> f64 {
        self.e_complete
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn co_module_and_integrals_at_half() {
        let m = EllipticModulus::new(0.5).unwrap();
        assert!((m.q() - 0.866_025_403_784_438_6).abs() < 1e-15);
        // Frozen from oracle::complete_integrals_by_quadrature(0.5).
        assert!((m.k_complete() - 1.685_750_354_812_596).abs() < 1e-14);
        assert!((m.e_complete() - 1.467_462_209_339_427).abs() < 1e-14);
    }

    #[test]
    fn rejects_out_of_domain() {
        for p in [0.0, 1.0, 1.2, -0.3, f64::NAN, f64::INFINITY] {
            assert!(matches!(EllipticModulus::new(p), Err(Error::Domain(_))), "p = {p}");
        }
    }

    #[test]
    fn complementary_identity_and_ordering() {
        for i in 1..100 {
            let p = i as f64 / 100.0;
            let m = EllipticModulus::new(p).unwrap();
            let ulp4 = 4.0 * f64::EPSILON;
            assert!((m.q() * m.q() + m.p() * m.p() - 1.0).abs() <= ulp4, "p = {p}");
            assert!(m.k_complete() > m.e_complete() && m.e_complete() > 0.0);
        }
    }

    #[test]
    fn integrals_match_quadrature_oracle() {
        for i in 0..=90 {
            let p = 0.05 + i as f64 * 0.01;
            let m = EllipticModulus::new(p).unwrap();
            let (k, e) = oracle::complete_integrals_by_quadrature(p);
            assert!(((m.k_complete() - k) / k).abs() <= 1e-12, "K at p = {p}");
            assert!(((m.e_complete() - e) / e).abs() <= 1e-12, "E at p = {p}");
        }
    }

    #[test]
    fn legendre_relation() {
        // E K' + E' K − K K' = π/2 with primed quantities at the co-module.
        for p in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let m = EllipticModulus::new(p).unwrap();
            let c = EllipticModulus::new(m.q()).unwrap();
            let lhs = m.e_complete() * c.k_complete() + c.e_complete() * m.k_complete()
                - m.k_complete() * c.k_complete();
            assert!((lhs - FRAC_PI_2).abs() < 1e-13, "p = {p}");
        }
    }
}
