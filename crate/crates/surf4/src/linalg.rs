//! Small dense linear algebra over `f64`: 4-vectors, 2x2 systems and the
//! generalized cross product in `R^4`.
//!
//! Everything here is closed-form and deterministic; no iterative solvers.

use core::ops::{Add, Mul, Neg, Sub};
#[allow(unused_imports)]
use num_traits::Float;

/// A vector in `R^4`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec4(pub [f64; 4]);

impl Vec4 {
    pub const ZERO: Vec4 = Vec4([0.0; 4]);

    pub fn new(x: f64, y: f64, z: f64, w: f64) -> Self {
        Vec4([x, y, z, w])
    }

    /// Standard basis vector `e_i`, `i` in `0..4`.
    pub fn basis(i: usize) -> Self {
        let mut v = [0.0; 4];
        v[i] = 1.0;
        Vec4(v)
    }

    pub fn dot(self, rhs: Vec4) -> f64 {
        self.0[0] * rhs.0[0] + self.0[1] * rhs.0[1] + self.0[2] * rhs.0[2] + self.0[3] * rhs.0[3]
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, c: f64) -> Vec4 {
        Vec4([self.0[0] * c, self.0[1] * c, self.0[2] * c, self.0[3] * c])
    }

    /// `None` when the norm is below `eps`.
    pub fn normalized(self, eps: f64) -> Option<Vec4> {
        let n = self.norm();
        if n <= eps {
            None
        } else {
            Some(self.scale(1.0 / n))
        }
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, rhs: Vec4) -> Vec4 {
        Vec4([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, rhs: Vec4) -> Vec4 {
        Vec4([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
            self.0[3] - rhs.0[3],
        ])
    }
}

impl Mul<f64> for Vec4 {
    type Output = Vec4;
    fn mul(self, c: f64) -> Vec4 {
        self.scale(c)
    }
}

impl Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        self.scale(-1.0)
    }
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Generalized cross product in `R^4`: the unique vector `d` with
/// `<d, x> = det[x, a, b, c]` for every `x`. It is orthogonal to `a`, `b`
/// and `c`, and zero exactly when they are linearly dependent.
pub fn wedge4(a: Vec4, b: Vec4, c: Vec4) -> Vec4 {
    let mut d = [0.0; 4];
    for (i, di) in d.iter_mut().enumerate() {
        // Cofactor of the i-th entry of the first column of [x | a | b | c].
        let mut minor = [[0.0; 3]; 3];
        let mut r = 0;
        for row in 0..4 {
            if row == i {
                continue;
            }
            minor[r] = [a.0[row], b.0[row], c.0[row]];
            r += 1;
        }
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        *di = sign * det3(minor);
    }
    Vec4(d)
}

/// Determinant of the 4x4 matrix with columns `a, b, c, d`.
pub fn det4(a: Vec4, b: Vec4, c: Vec4, d: Vec4) -> f64 {
    a.dot(wedge4(b, c, d))
}

/// Solves `[[a, b], [c, d]] * x = r`; `None` when the matrix is singular
/// relative to its own scale.
pub fn solve2(a: f64, b: f64, c: f64, d: f64, r: [f64; 2]) -> Option<[f64; 2]> {
    let det = a * d - b * c;
    let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs());
    if det.abs() <= 1e-14 * scale * scale {
        return None;
    }
    Some([(r[0] * d - r[1] * b) / det, (r[1] * a - r[0] * c) / det])
}

/// Eigenvalues of the symmetric matrix `[[m11, m12], [m12, m22]]`, returned
/// as `(hi, lo)` with `hi >= lo`. Closed form; exact for this size.
pub fn sym_eigenvalues2(m11: f64, m12: f64, m22: f64) -> (f64, f64) {
    let mean = 0.5 * (m11 + m22);
    let half_diff = 0.5 * (m11 - m22);
    let r = (half_diff * half_diff + m12 * m12).sqrt();
    (mean + r, mean - r)
}

/// Unit eigenvector for the eigenvalue `lambda` of the symmetric matrix
/// `[[m11, m12], [m12, m22]]`.
pub fn sym_eigenvector2(m11: f64, m12: f64, m22: f64, lambda: f64) -> [f64; 2] {
    // Pick the better-conditioned of the two rows of (M - lambda I).
    let r1 = (m11 - lambda, m12);
    let r2 = (m12, m22 - lambda);
    let n1 = r1.0 * r1.0 + r1.1 * r1.1;
    let n2 = r2.0 * r2.0 + r2.1 * r2.1;
    let (a, b) = if n1 >= n2 { r1 } else { r2 };
    let n = (a * a + b * b).sqrt();
    if n <= 1e-300 {
        // Scalar matrix: every direction is an eigenvector.
        return [1.0, 0.0];
    }
    // (a, b) is a row of M - lambda I, the eigenvector is orthogonal to it.
    [-b / n, a / n]
}
