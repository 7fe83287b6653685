//! The ellipse of normal curvature: the image of the unit tangent circle
//! under `v -> sigma(v, v)` in the normal plane.
//!
//! With an orthonormal tangent pair `{x, y}` the image point at angle `psi`
//! is `H + cos(2 psi) u1 + sin(2 psi) u2` where
//! `u1 = (sigma(x,x) - sigma(y,y)) / 2` and `u2 = sigma(x,y)`; the curve
//! runs twice around an ellipse centered at the mean curvature vector.
//! The semi-axes are the singular values of the pair `(u1, u2)`, and
//! `|kappa| = 2 a b` (the Gauss torsion relation).

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::forms::{AdaptedFrame, DerivativeDecomposition, InvariantSet};
use crate::jets::Jet2;
use crate::linalg::{sym_eigenvalues2, sym_eigenvector2, Vec4};

/// Degeneracy type of the curvature ellipse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipseKind {
    Ellipse,
    Circle,
    Segment,
    Point,
}

impl EllipseKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EllipseKind::Ellipse => "ellipse",
            EllipseKind::Circle => "circle",
            EllipseKind::Segment => "segment",
            EllipseKind::Point => "point",
        }
    }
}

/// The curvature ellipse at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureEllipse {
    /// Center of the ellipse: the mean curvature vector.
    pub center: Vec4,
    /// `(sigma(x,x) - sigma(y,y)) / 2`; a conjugate generating vector.
    pub u1: Vec4,
    /// `sigma(x,y)`; the other conjugate generating vector.
    pub u2: Vec4,
    /// Semi-axes, `a >= b >= 0`.
    pub a: f64,
    pub b: f64,
    pub kind: EllipseKind,
    /// Unit direction of the segment when `kind == Segment`.
    pub segment_dir: Option<Vec4>,
    /// Scale-aware degeneracy threshold used for the kind decision.
    pub tau: f64,
}

/// Computes the curvature ellipse from the jet, the adapted frame and the
/// derivative decomposition.
///
/// Degeneracy thresholds: with `tau = 1e-7 (1 + |sigma|)`, the kind is
/// `Point` if `a <= tau`, `Segment` if `b <= tau < a`, `Circle` if
/// `a - b <= tau (a + b)`, otherwise `Ellipse`.
pub fn curvature_ellipse(
    jet: &Jet2,
    frame: &AdaptedFrame,
    dec: &DerivativeDecomposition,
) -> Result<CurvatureEllipse> {
    let e = jet.z_u.norm_sq();
    let f = jet.z_u.dot(jet.z_v);
    let g = jet.z_v.norm_sq();
    let w2 = e * g - f * f;
    if !(w2 > 0.0) {
        return Err(Error::DegenerateChart { w: w2.max(0.0).sqrt() });
    }
    let w = w2.sqrt();
    let sigma_basis = |c: [f64; 2]| frame.e1 * c[0] + frame.e2 * c[1];
    let s_uu = sigma_basis(dec.c_uu);
    let s_uv = sigma_basis(dec.c_uv);
    let s_vv = sigma_basis(dec.c_vv);
    // sigma on the orthonormal pair x = z_u/sqrt(E), y = GS(z_v).
    let sxx = s_uu.scale(1.0 / e);
    let sxy = (s_uv - s_uu.scale(f / e)).scale(1.0 / w);
    let syy = (s_vv - s_uv.scale(2.0 * f / e) + s_uu.scale(f * f / (e * e))).scale(e / w2);

    let center = (sxx + syy).scale(0.5);
    let u1 = (sxx - syy).scale(0.5);
    let u2 = sxy;

    let sigma_norm =
        (sxx.norm_sq() + 2.0 * sxy.norm_sq() + syy.norm_sq()).sqrt();
    let tau = 1e-7 * (1.0 + sigma_norm);

    let g11 = u1.norm_sq();
    let g12 = u1.dot(u2);
    let g22 = u2.norm_sq();
    let (hi, lo) = sym_eigenvalues2(g11, g12, g22);
    let a = hi.max(0.0).sqrt();
    let b = lo.max(0.0).sqrt();

    let kind = if a <= tau {
        EllipseKind::Point
    } else if b <= tau {
        EllipseKind::Segment
    } else if a - b <= tau * (a + b) {
        EllipseKind::Circle
    } else {
        EllipseKind::Ellipse
    };
    let segment_dir = if kind == EllipseKind::Segment {
        let ev = sym_eigenvector2(g11, g12, g22, hi);
        (u1 * ev[0] + u2 * ev[1]).normalized(1e-300)
    } else {
        None
    };
    Ok(CurvatureEllipse { center, u1, u2, a, b, kind, segment_dir, tau })
}

/// Residual of the Gauss-torsion relation: `|kappa| - 2 a b`, which should
/// vanish.
pub fn gauss_torsion_residual(ell: &CurvatureEllipse, inv: &InvariantSet) -> f64 {
    inv.kappa.abs() - 2.0 * ell.a * ell.b
}

/// Geometry of a degenerate (segment) curvature ellipse.
///
/// `d` is the norm of the generating vector (the half-length of the swept
/// segment under the double-cover parameterization); `full_length = 2 d`
/// records the other convention explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentDiagnostics {
    pub d: f64,
    pub full_length: f64,
    pub collinear_with_mean: bool,
    pub orthogonal_to_mean: bool,
}

/// Diagnostics for a segment-degenerate ellipse: the length `d` (which
/// satisfies `d = sqrt(|H|^2 - K)` on surfaces with flat normal
/// connection) and the position of the segment relative to the mean
/// curvature vector.
pub fn segment_diagnostics(
    ell: &CurvatureEllipse,
    inv: &InvariantSet,
) -> Result<SegmentDiagnostics> {
    if ell.kind != EllipseKind::Segment {
        return Err(Error::NotASegment);
    }
    let dir = ell.segment_dir.ok_or(Error::NotASegment)?;
    let h = inv.mean;
    let hn = h.norm();
    let (collinear, orthogonal) = if hn <= 1e-12 * (1.0 + ell.a) {
        // Zero mean curvature: the segment passes through the point itself.
        (false, true)
    } else {
        let cos = dir.dot(h).abs() / hn;
        (1.0 - cos <= 1e-6, cos <= 1e-6)
    };
    Ok(SegmentDiagnostics {
        d: ell.a,
        full_length: 2.0 * ell.a,
        collinear_with_mean: collinear,
        orthogonal_to_mean: orthogonal,
    })
}

/// True when the ellipse is a circle under the threshold `tol` (same
/// decision tree as the constructor, re-thresholded).
pub fn is_superconformal(ell: &CurvatureEllipse, tol: f64) -> bool {
    ell.a > tol && ell.b > tol && ell.a - ell.b <= tol * (ell.a + ell.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::forms::point_forms;
    use crate::jets::{evaluate_jet, ParamPoint};
    use approx::assert_relative_eq;

    fn ellipse_at(
        chart: &crate::jets::SurfaceChart,
        u: f64,
        v: f64,
    ) -> (CurvatureEllipse, crate::forms::PointForms, Jet2) {
        let jet = evaluate_jet(chart, ParamPoint::new(u, v)).unwrap();
        let pf = point_forms(&jet).unwrap();
        let ell = curvature_ellipse(&jet, &pf.frame, &pf.dec).unwrap();
        (ell, pf, jet)
    }

    #[test]
    fn wsq_origin_is_a_circle_of_radius_two() {
        let (ell, pf, _) = ellipse_at(&families::wsq(), 0.0, 0.0);
        assert_eq!(ell.center, Vec4::ZERO);
        assert_eq!(ell.u1, Vec4::new(0.0, 0.0, 2.0, 0.0));
        assert_eq!(ell.u2, Vec4::new(0.0, 0.0, 0.0, 2.0));
        assert_relative_eq!(ell.a, 2.0);
        assert_relative_eq!(ell.b, 2.0);
        assert_eq!(ell.kind, EllipseKind::Circle);
        assert!(is_superconformal(&ell, ell.tau));
        assert_relative_eq!(gauss_torsion_residual(&ell, &pf.inv), 0.0);
    }

    #[test]
    fn clifford_ellipse_degenerates_to_a_segment() {
        let (ell, pf, _) = ellipse_at(&families::clifford(1.0, 1.0), 0.7, 2.3);
        assert_eq!(ell.kind, EllipseKind::Segment);
        assert_relative_eq!(ell.a, 0.5_f64.sqrt(), epsilon = 1e-10);
        assert!(ell.b.abs() < 1e-10);
        assert!(ell.u2.norm() < 1e-12);
        assert_relative_eq!(ell.center.norm(), 0.5_f64.sqrt(), epsilon = 1e-10);
        assert!(!is_superconformal(&ell, ell.tau));
        let diag = segment_diagnostics(&ell, &pf.inv).unwrap();
        // d = sqrt(|H|^2 - K) = sqrt(1/2).
        assert_relative_eq!(diag.d, 0.5_f64.sqrt(), epsilon = 1e-10);
        let want = (pf.inv.mean_norm() * pf.inv.mean_norm() - pf.inv.gauss).sqrt();
        assert_relative_eq!(diag.d, want, epsilon = 1e-10);
        assert!(!diag.collinear_with_mean);
        assert!(diag.orthogonal_to_mean);
    }

    #[test]
    fn plane_ellipse_is_a_point() {
        let (ell, pf, _) = ellipse_at(&families::plane(), 0.2, 0.9);
        assert_eq!(ell.kind, EllipseKind::Point);
        assert_eq!((ell.a, ell.b), (0.0, 0.0));
        assert!(!is_superconformal(&ell, ell.tau));
        assert_eq!(gauss_torsion_residual(&ell, &pf.inv), 0.0);
        assert!(matches!(segment_diagnostics(&ell, &pf.inv), Err(Error::NotASegment)));
    }

    #[test]
    fn meridian_segment_is_not_collinear_with_mean() {
        let spec = families::MeridianSpec {
            curve: families::SphericalCurve::circle(1.0),
            profile: families::MeridianProfile::sphere(),
            v_range: (0.0, 4.0),
        };
        let chart = families::meridian_surface(&spec).unwrap();
        let (ell, pf, _) = ellipse_at(&chart, 0.4, 1.2);
        assert_eq!(ell.kind, EllipseKind::Segment);
        let diag = segment_diagnostics(&ell, &pf.inv).unwrap();
        assert!(!diag.collinear_with_mean);
        // Here lambda != 0, so the segment is oblique to H.
        assert!(!diag.orthogonal_to_mean);
        // |kappa| = 2ab still holds (both sides vanish on b = 0).
        assert!(gauss_torsion_residual(&ell, &pf.inv).abs() <= 1e-9);
    }

    #[test]
    fn generators_span_the_normal_plane() {
        let (ell, _, jet) = ellipse_at(&families::wsq(), 0.6, -0.3);
        for gen in [ell.u1, ell.u2, ell.center] {
            assert!(gen.dot(jet.z_u).abs() <= 1e-10 * (1.0 + gen.norm() * jet.z_u.norm()));
            assert!(gen.dot(jet.z_v).abs() <= 1e-10 * (1.0 + gen.norm() * jet.z_v.norm()));
        }
    }

    #[test]
    fn semi_axes_match_swept_curve_extrema() {
        // Brute-force oracle: sample the swept curve and compare its
        // farthest / nearest distance from the center with a and b.
        let charts = [
            families::clifford(1.0, 0.6),
            families::wsq(),
            families::clifford(1.0, 1.0),
        ];
        for chart in &charts {
            let (ell, _, _) = ellipse_at(chart, 0.8, 0.9);
            let mut max = 0.0_f64;
            let mut min = f64::INFINITY;
            for i in 0..4000 {
                let psi = core::f64::consts::PI * i as f64 / 2000.0;
                let p = ell.u1 * (2.0 * psi).cos() + ell.u2 * (2.0 * psi).sin();
                let r = p.norm();
                max = max.max(r);
                min = min.min(r);
            }
            assert_relative_eq!(max, ell.a, epsilon = 1e-4, max_relative = 1e-4);
            assert_relative_eq!(min, ell.b, epsilon = 1e-4, max_relative = 1e-4);
        }
    }

    #[test]
    fn gauss_torsion_relation_on_elliptic_point() {
        let (ell, pf, _) = ellipse_at(&families::wsq(), 0.4, 0.2);
        let res = gauss_torsion_residual(&ell, &pf.inv);
        assert!(res.abs() <= 1e-6 * (1.0 + pf.inv.kappa.abs()));
    }
}
