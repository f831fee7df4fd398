//! Carlson symmetric integrals by the duplication theorem.

const RF_TOL: f64 = 8e-4;
const RD_TOL: f64 = 6e-4;

/// `R_F(x, y, z) = ½ ∫₀^∞ dt / √((t+x)(t+y)(t+z))`, for nonnegative arguments
/// with at most one of them zero.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    debug_assert!(x >= 0.0 && y >= 0.0 && z >= 0.0);
    let (mut x, mut y, mut z) = (x, y, z);
    loop {
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        let mean = (x + y + z) / 3.0;
        let (dx, dy, dz) = ((mean - x) / mean, (mean - y) / mean, (mean - z) / mean);
        if dx.abs().max(dy.abs()).max(dz.abs()) <= RF_TOL {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            return (1.0 + (e2 / 24.0 - 0.1 - 3.0 / 44.0 * e3) * e2 + e3 / 14.0) / mean.sqrt();
        }
    }
}

/// `R_D(x, y, z) = 3/2 ∫₀^∞ dt / ((t+z) √((t+x)(t+y)(t+z)))`, for `x, y ≥ 0`
/// (not both zero) and `z > 0`.
pub fn carlson_rd(x: f64, y: f64, z: f64) -> f64 {
    debug_assert!(x >= 0.0 && y >= 0.0 && z > 0.0);
    const C1: f64 = 3.0 / 14.0;
    const C2: f64 = 1.0 / 6.0;
    const C3: f64 = 9.0 / 22.0;
    const C4: f64 = 3.0 / 26.0;
    const C5: f64 = 0.25 * C3;
    const C6: f64 = 1.5 * C4;

    let (mut x, mut y, mut z) = (x, y, z);
    let mut sum = 0.0;
    let mut fac = 1.0;
    loop {
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (z + lambda));
        fac *= 0.25;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        let mean = 0.2 * (x + y + 3.0 * z);
        let (dx, dy, dz) = ((mean - x) / mean, (mean - y) / mean, (mean - z) / mean);
        if dx.abs().max(dy.abs()).max(dz.abs()) <= RD_TOL {
            let ea = dx * dy;
            let eb = dz * dz;
            let ec = ea - eb;
            let ed = ea - 6.0 * eb;
            let ee = ed + ec + ec;
            let series = 1.0
                + ed * (-C1 + C5 * ed - C6 * dz * ee)
                + dz * (C2 * ee + dz * (-C3 * ec + dz * C4 * ea));
            return 3.0 * sum + fac * series / (mean * mean.sqrt());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_special_values() {
        // R_F(x, x, x) = 1/√x, R_D(x, x, x) = x^(-3/2).
        for x in [0.25, 1.0, 3.0, 17.0] {
            assert!((carlson_rf(x, x, x) - 1.0 / x.sqrt()).abs() < 1e-15);
            assert!((carlson_rd(x, x, x) - x.powf(-1.5)).abs() < 1e-15);
        }
        // R_F(0, 1, 1) = π/2.
        assert!((carlson_rf(0.0, 1.0, 1.0) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn reference_values() {
        // Carlson (1995), Numer. Algorithms 10, table of test values.
        assert!((carlson_rf(1.0, 2.0, 0.0) - 1.311_028_777_146_059_9).abs() < 1e-15);
        assert!((carlson_rd(0.0, 2.0, 1.0) - 1.797_210_352_103_388_3).abs() < 1e-15);
        assert!((carlson_rd(2.0, 3.0, 4.0) - 0.165_105_272_942_610_53).abs() < 1e-15);
    }

    #[test]
    fn symmetric_in_first_two_arguments() {
        let a = carlson_rd(0.3, 1.7, 0.9);
        let b = carlson_rd(1.7, 0.3, 0.9);
        assert!((a - b).abs() < 1e-15);
        let f = [carlson_rf(0.3, 1.7, 0.9), carlson_rf(0.9, 0.3, 1.7), carlson_rf(1.7, 0.9, 0.3)];
        assert!((f[0] - f[1]).abs() < 1e-15 && (f[1] - f[2]).abs() < 1e-15);
    }
}
