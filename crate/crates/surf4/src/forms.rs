//! Adapted frames, fundamental data, the Weingarten-type map and the
//! invariant set of a surface point.
//!
//! The second fundamental data here is the one generated by the
//! Weingarten-type map on surfaces in `R^4`: with an orthonormal normal
//! frame `{e1, e2}` the second partials decompose as
//! `z_ij = G_ij^1 z_u + G_ij^2 z_v + c_ij^1 e1 + c_ij^2 e2`, and
//!
//! ```text
//! L = (2/W) |c_11 c_12|,   M = (1/W) |c_11 c_22|,   N = (2/W) |c_12 c_22|
//! ```
//!
//! (2x2 determinants of the normal coefficient columns). The invariants
//! `k = (LN - M^2)/(EG - F^2)` and `kappa = (EN + GL - 2FM)/(2(EG - F^2))`
//! are the determinant and minus half the trace of the map.

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::jets::{regularity_threshold, wedge_norm, Jet2};
use crate::linalg::{solve2, wedge4, Vec4};

/// Orthonormal frame `{x, y, e1, e2}` adapted to the surface: `x, y` span
/// the tangent plane, `e1, e2` the normal plane, and the quadruple is
/// positively oriented in `R^4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptedFrame {
    pub x: Vec4,
    pub y: Vec4,
    pub e1: Vec4,
    pub e2: Vec4,
}

/// Tangential (Christoffel) and normal coefficients of the second partials
/// in the adapted frame.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DerivativeDecomposition {
    pub gamma_uu: [f64; 2],
    pub gamma_uv: [f64; 2],
    pub gamma_vv: [f64; 2],
    /// Normal coefficients of `z_uu`: `(c_11^1, c_11^2)`.
    pub c_uu: [f64; 2],
    /// Normal coefficients of `z_uv`: `(c_12^1, c_12^2)`.
    pub c_uv: [f64; 2],
    /// Normal coefficients of `z_vv`: `(c_22^1, c_22^2)`.
    pub c_vv: [f64; 2],
}

impl DerivativeDecomposition {
    /// Christoffel symbol with lower indices `i, j` and upper index `k`
    /// (all in `0..2`); symmetric in `i, j`.
    pub fn christoffel(&self, i: usize, j: usize, k: usize) -> f64 {
        match i + j {
            0 => self.gamma_uu[k],
            1 => self.gamma_uv[k],
            _ => self.gamma_vv[k],
        }
    }

    /// Normal coefficient `c_ij^k` (indices in `0..2`); symmetric in `i, j`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        match i + j {
            0 => self.c_uu[k],
            1 => self.c_uv[k],
            _ => self.c_vv[k],
        }
    }
}

/// First and second fundamental data at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalData {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    /// `sqrt(EG - F^2)`.
    pub w: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
}

impl FundamentalData {
    /// First fundamental form of a coefficient pair.
    pub fn first_form(&self, a: [f64; 2], b: [f64; 2]) -> f64 {
        self.e * a[0] * b[0] + self.f * (a[0] * b[1] + a[1] * b[0]) + self.g * a[1] * b[1]
    }

    /// Second fundamental form of a coefficient pair.
    pub fn second_form(&self, a: [f64; 2], b: [f64; 2]) -> f64 {
        self.l * a[0] * b[0] + self.m * (a[0] * b[1] + a[1] * b[0]) + self.n * a[1] * b[1]
    }

    /// True when all three second-form coefficients vanish within `tau`.
    pub fn is_flat(&self, tau: f64) -> bool {
        self.l.abs() <= tau && self.m.abs() <= tau && self.n.abs() <= tau
    }
}

/// The Weingarten-type map on the tangent plane, in the `(z_u, z_v)` basis:
/// `gamma(z_u) = g11 z_u + g12 z_v`, `gamma(z_v) = g21 z_u + g22 z_v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeingartenMap {
    pub g11: f64,
    pub g12: f64,
    pub g21: f64,
    pub g22: f64,
}

impl WeingartenMap {
    /// Equals `-2 kappa`.
    pub fn trace(&self) -> f64 {
        self.g11 + self.g22
    }

    /// Equals the invariant `k`.
    pub fn det(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g21
    }

    /// Image of the direction `alpha z_u + beta z_v`, as coefficients.
    pub fn apply(&self, dir: [f64; 2]) -> [f64; 2] {
        [
            self.g11 * dir[0] + self.g21 * dir[1],
            self.g12 * dir[0] + self.g22 * dir[1],
        ]
    }
}

/// The invariants of the point: `k`, `kappa` (curvature of the normal
/// connection), Gauss curvature, mean curvature vector and the principal
/// normal curvatures `nu_hi >= nu_lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantSet {
    pub k: f64,
    pub kappa: f64,
    pub gauss: f64,
    /// Mean curvature vector in ambient coordinates.
    pub mean: Vec4,
    /// Mean curvature vector in the `(e1, e2)` coordinates of the adapted
    /// normal frame.
    pub mean_frame: [f64; 2],
    pub nu_hi: f64,
    pub nu_lo: f64,
}

impl InvariantSet {
    pub fn mean_norm(&self) -> f64 {
        self.mean.norm()
    }
}

fn normal_component(w: Vec4, x: Vec4, y: Vec4) -> Vec4 {
    w - x * w.dot(x) - y * w.dot(y)
}

/// Builds the adapted orthonormal frame at a regular jet.
///
/// `x` is `z_u` normalized, `y` the Gram-Schmidt complement of `z_v`. `e1`
/// is the normalized normal component of `z_uu`, falling back to `z_uv`,
/// then `z_vv`, then (at flat points) to the projection of the best
/// standard basis vector. `e2` completes the frame so that
/// `det[x, y, e1, e2] > 0`.
pub fn adapted_frame(jet: &Jet2) -> Result<AdaptedFrame> {
    let w = wedge_norm(jet.z_u, jet.z_v);
    if w <= regularity_threshold(jet.z_u, jet.z_v) {
        return Err(Error::DegenerateChart { w });
    }
    let x = jet.z_u.scale(1.0 / jet.z_u.norm());
    let y_raw = jet.z_v - x * jet.z_v.dot(x);
    let y = y_raw
        .normalized(1e-300)
        .ok_or(Error::DegenerateChart { w })?;

    let scale = 1.0 + jet.z_uu.norm() + jet.z_uv.norm() + jet.z_vv.norm();
    let tau = 1e-7 * scale;
    let mut e1 = None;
    for cand in [jet.z_uu, jet.z_uv, jet.z_vv] {
        let n = normal_component(cand, x, y);
        if n.norm() > tau {
            e1 = Some(n.scale(1.0 / n.norm()));
            break;
        }
    }
    let e1 = e1.unwrap_or_else(|| {
        // Flat point: no normal information in the second partials. Project
        // the standard basis vector with the largest normal component.
        let mut best = normal_component(Vec4::basis(0), x, y);
        for i in 1..4 {
            let n = normal_component(Vec4::basis(i), x, y);
            if n.norm_sq() > best.norm_sq() {
                best = n;
            }
        }
        best.scale(1.0 / best.norm())
    });
    // det[x, y, e1, -wedge4(x, y, e1)] = +|wedge|^2.
    let e2 = (-wedge4(x, y, e1))
        .normalized(1e-300)
        .ok_or(Error::DegenerateChart { w })?;
    Ok(AdaptedFrame { x, y, e1, e2 })
}

/// Splits the second partials into tangential (Christoffel) and normal
/// coefficients with respect to the adapted frame.
pub fn decompose(jet: &Jet2, frame: &AdaptedFrame) -> Result<DerivativeDecomposition> {
    let e = jet.z_u.norm_sq();
    let f = jet.z_u.dot(jet.z_v);
    let g = jet.z_v.norm_sq();
    let mut dec = DerivativeDecomposition::default();
    let slots: [(&Vec4, usize); 3] = [(&jet.z_uu, 0), (&jet.z_uv, 1), (&jet.z_vv, 2)];
    for (zij, slot) in slots {
        let rhs = [zij.dot(jet.z_u), zij.dot(jet.z_v)];
        let gamma = solve2(e, f, f, g, rhs).ok_or(Error::DegenerateChart {
            w: wedge_norm(jet.z_u, jet.z_v),
        })?;
        let c = [zij.dot(frame.e1), zij.dot(frame.e2)];
        match slot {
            0 => {
                dec.gamma_uu = gamma;
                dec.c_uu = c;
            }
            1 => {
                dec.gamma_uv = gamma;
                dec.c_uv = c;
            }
            _ => {
                dec.gamma_vv = gamma;
                dec.c_vv = c;
            }
        }
    }
    Ok(dec)
}

fn cross2(p: [f64; 2], q: [f64; 2]) -> f64 {
    p[0] * q[1] - p[1] * q[0]
}

fn dot2(p: [f64; 2], q: [f64; 2]) -> f64 {
    p[0] * q[0] + p[1] * q[1]
}

/// First fundamental coefficients from the jet, second fundamental
/// coefficients from the determinant formulas on the normal coefficients.
pub fn fundamental_data(jet: &Jet2, dec: &DerivativeDecomposition) -> Result<FundamentalData> {
    let e = jet.z_u.norm_sq();
    let f = jet.z_u.dot(jet.z_v);
    let g = jet.z_v.norm_sq();
    let w2 = e * g - f * f;
    let w = wedge_norm(jet.z_u, jet.z_v);
    if w <= regularity_threshold(jet.z_u, jet.z_v) || w2 <= 0.0 {
        return Err(Error::DegenerateChart { w });
    }
    let l = 2.0 / w * cross2(dec.c_uu, dec.c_uv);
    let m = 1.0 / w * cross2(dec.c_uu, dec.c_vv);
    let n = 2.0 / w * cross2(dec.c_uv, dec.c_vv);
    Ok(FundamentalData { e, f, g, w, l, m, n })
}

/// The four entries of the Weingarten-type map.
pub fn weingarten(fd: &FundamentalData) -> WeingartenMap {
    let d = fd.e * fd.g - fd.f * fd.f;
    WeingartenMap {
        g11: (fd.f * fd.m - fd.g * fd.l) / d,
        g12: (fd.f * fd.l - fd.e * fd.m) / d,
        g21: (fd.f * fd.n - fd.g * fd.m) / d,
        g22: (fd.f * fd.m - fd.e * fd.n) / d,
    }
}

/// The invariant set of the point.
///
/// `k` and `kappa` come from the closed formulas; the Gauss curvature uses
/// the Gauss equation on the second fundamental tensor, and the principal
/// normal curvatures are `kappa +- sqrt(kappa^2 - k)` with the radicand
/// clamped at zero (it can go slightly negative from roundoff exactly at
/// minimal points).
pub fn invariants(
    fd: &FundamentalData,
    dec: &DerivativeDecomposition,
    frame: &AdaptedFrame,
) -> InvariantSet {
    let d = fd.e * fd.g - fd.f * fd.f;
    let k = (fd.l * fd.n - fd.m * fd.m) / d;
    let kappa = (fd.e * fd.n + fd.g * fd.l - 2.0 * fd.f * fd.m) / (2.0 * d);
    let gauss = (dot2(dec.c_uu, dec.c_vv) - dot2(dec.c_uv, dec.c_uv)) / d;
    // H = (G s(z_u,z_u) - 2F s(z_u,z_v) + E s(z_v,z_v)) / (2 W^2)
    let h1 = (fd.g * dec.c_uu[0] - 2.0 * fd.f * dec.c_uv[0] + fd.e * dec.c_vv[0]) / (2.0 * d);
    let h2 = (fd.g * dec.c_uu[1] - 2.0 * fd.f * dec.c_uv[1] + fd.e * dec.c_vv[1]) / (2.0 * d);
    let mean = frame.e1 * h1 + frame.e2 * h2;
    let r = (kappa * kappa - k).max(0.0).sqrt();
    InvariantSet {
        k,
        kappa,
        gauss,
        mean,
        mean_frame: [h1, h2],
        nu_hi: kappa + r,
        nu_lo: kappa - r,
    }
}

/// Everything the rest of the pipeline needs at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointForms {
    pub frame: AdaptedFrame,
    pub dec: DerivativeDecomposition,
    pub fd: FundamentalData,
    pub map: WeingartenMap,
    pub inv: InvariantSet,
}

/// Runs the full frame / decomposition / forms / invariants pipeline.
pub fn point_forms(jet: &Jet2) -> Result<PointForms> {
    let frame = adapted_frame(jet)?;
    let dec = decompose(jet, &frame)?;
    let fd = fundamental_data(jet, &dec)?;
    let map = weingarten(&fd);
    let inv = invariants(&fd, &dec, &frame);
    Ok(PointForms { frame, dec, fd, map, inv })
}
