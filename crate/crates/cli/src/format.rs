//! Byte-stable text output: numbers, CSV rows and OBJ meshes.

use std::fmt::Write as _;

use weingarten::surface::Vec3;

/// `x` rounded to 9 significant digits, printed as the shortest decimal that
/// round-trips the rounded value. Never prints `-0`.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.8e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        return "0".to_owned();
    }
    let a = rounded.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

pub fn csv_row(values: &[f64]) -> String {
    let mut row = values.iter().map(|&v| num(v)).collect::<Vec<_>>().join(",");
    row.push('\n');
    row
}

/// Samples of a parametrized surface on a grid periodic in the second
/// parameter. Point `(i, j)` is stored at `i·n_v + j`.
#[derive(Debug, Clone)]
pub struct Grid {
    pub n_u: usize,
    pub n_v: usize,
    pub points: Vec<Vec3>,
}

impl Grid {
    pub fn vertex_count(&self) -> usize {
        self.n_u * self.n_v
    }

    pub fn face_count(&self) -> usize {
        2 * (self.n_u - 1) * self.n_v
    }

    /// Triangles with 1-based indices; the seam column `j = n_v` reuses
    /// column `0`.
    pub fn faces(&self) -> Vec<[usize; 3]> {
        let idx = |i: usize, j: usize| i * self.n_v + (j % self.n_v) + 1;
        let mut faces = Vec::with_capacity(self.face_count());
        for i in 0..self.n_u - 1 {
            for j in 0..self.n_v {
                let (a, b, c, d) = (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1));
                faces.push([a, b, c]);
                faces.push([a, c, d]);
            }
        }
        faces
    }

    pub fn to_obj(&self, label: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# weingarten {label}");
        let _ = writeln!(out, "# n_u {} n_v {}", self.n_u, self.n_v);
        for p in &self.points {
            let _ = writeln!(out, "v {} {} {}", num(p.x), num(p.y), num(p.z));
        }
        for [a, b, c] in self.faces() {
            let _ = writeln!(out, "f {a} {b} {c}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(num(1.0), "1");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(1e-20), "1e-20");
        assert_eq!(num(2.5e-6), "2.5e-6");
        assert_eq!(num(std::f64::consts::PI), "3.14159265");
        assert_eq!(num(-2.0 / 3.0), "-0.666666667");
        assert_eq!(num(123_456_789_012.0), "123456789000");
        assert_eq!(num(0.1 + 0.2), "0.3");
    }

    #[test]
    fn stitched_faces() {
        let grid = Grid {
            n_u: 3,
            n_v: 4,
            points: vec![Vec3::zeros(); 12],
        };
        let faces = grid.faces();
        assert_eq!(faces.len(), grid.face_count());
        assert!(faces.iter().flatten().all(|&k| (1..=12).contains(&k)));
        // Last quad of the first row wraps to column 0.
        assert_eq!(faces[6], [4, 8, 5]);
    }
}
