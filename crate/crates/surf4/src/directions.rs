//! Tangent-direction analysis: normal curvature, conjugate / asymptotic /
//! principal tangents, the Euler formula and the principal-frame data
//! `(nu1, nu2, lambda, mu, b, l)`.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::forms::{adapted_frame, DerivativeDecomposition, FundamentalData};
use crate::jets::Jet2;
use crate::linalg::{wedge4, Vec4};

/// A tangent direction `X = alpha z_u + beta z_v` in chart coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentDirection {
    pub alpha: f64,
    pub beta: f64,
}

impl TangentDirection {
    pub fn new(alpha: f64, beta: f64) -> Self {
        TangentDirection { alpha, beta }
    }

    /// The same direction scaled so that its first fundamental form is 1.
    pub fn normalized(&self, fd: &FundamentalData) -> Result<TangentDirection> {
        if self.alpha == 0.0 && self.beta == 0.0 {
            return Err(Error::ZeroDirection);
        }
        let i = fd.first_form([self.alpha, self.beta], [self.alpha, self.beta]);
        if !(i > 0.0) {
            return Err(Error::ZeroDirection);
        }
        let s = 1.0 / i.sqrt();
        Ok(TangentDirection { alpha: self.alpha * s, beta: self.beta * s })
    }

    pub fn coeffs(&self) -> [f64; 2] {
        [self.alpha, self.beta]
    }

    /// Ambient representative `alpha z_u + beta z_v`.
    pub fn ambient(&self, jet: &Jet2) -> Vec4 {
        jet.z_u * self.alpha + jet.z_v * self.beta
    }

    /// True when the two directions agree projectively within `tol`.
    pub fn same_line(&self, other: &TangentDirection, tol: f64) -> bool {
        let cross = self.alpha * other.beta - self.beta * other.alpha;
        let n1 = (self.alpha * self.alpha + self.beta * self.beta).sqrt();
        let n2 = (other.alpha * other.alpha + other.beta * other.beta).sqrt();
        cross.abs() <= tol * n1 * n2
    }
}

/// Normal curvature of the direction: `II(alpha, beta) / I(alpha, beta)`.
pub fn normal_curvature(fd: &FundamentalData, dir: &TangentDirection) -> Result<f64> {
    if dir.alpha == 0.0 && dir.beta == 0.0 {
        return Err(Error::ZeroDirection);
    }
    let c = dir.coeffs();
    Ok(fd.second_form(c, c) / fd.first_form(c, c))
}

/// Default relative tolerance for [`is_conjugate`].
pub const DEFAULT_CONJUGACY_TOL: f64 = 1e-8;

/// Conjugacy of two tangents with respect to the second fundamental form:
/// `L a1 a2 + M (a1 b2 + a2 b1) + N b1 b2 = 0` within
/// `tol * (|L| + 2|M| + |N|)` after normalizing both directions.
pub fn is_conjugate(
    fd: &FundamentalData,
    g1: &TangentDirection,
    g2: &TangentDirection,
    tol: f64,
) -> Result<bool> {
    let a = g1.normalized(fd)?;
    let b = g2.normalized(fd)?;
    let value = fd.second_form(a.coeffs(), b.coeffs());
    let scale = fd.l.abs() + 2.0 * fd.m.abs() + fd.n.abs();
    Ok(value.abs() <= tol * scale)
}

/// Projective roots of `a x^2 + b x y + c y^2 = 0`, deduplicated with a
/// 1e-9 threshold on the projectivized root. Uses the sign-aware stable
/// form of the quadratic formula.
fn homogeneous_roots(a: f64, b: f64, c: f64) -> Vec<[f64; 2]> {
    let mut roots: Vec<[f64; 2]> = Vec::new();
    if a == 0.0 && c == 0.0 {
        if b != 0.0 {
            roots.push([1.0, 0.0]);
            roots.push([0.0, 1.0]);
        }
        return roots;
    }
    // Solve in the better-scaled variable.
    let (p, q, r, swap) = if a.abs() >= c.abs() {
        (a, b, c, false)
    } else {
        (c, b, a, true)
    };
    let disc = q * q - 4.0 * p * r;
    if disc < 0.0 {
        return roots;
    }
    let s = disc.sqrt();
    let qq = -0.5 * (q + if q >= 0.0 { s } else { -s });
    let t1 = qq / p;
    let t2 = if qq != 0.0 { r / qq } else { t1 };
    for t in [t1, t2] {
        let xy = if swap { [1.0, t] } else { [t, 1.0] };
        let dup = roots.iter().any(|r0| {
            let cross = r0[0] * xy[1] - r0[1] * xy[0];
            let n0 = (r0[0] * r0[0] + r0[1] * r0[1]).sqrt();
            let n1 = (xy[0] * xy[0] + xy[1] * xy[1]).sqrt();
            cross.abs() <= 1e-9 * n0 * n1
        });
        if !dup {
            roots.push(xy);
        }
    }
    roots
}

fn flat_tolerance(fd: &FundamentalData) -> f64 {
    1e-12 * (1.0 + fd.e + fd.g)
}

/// Self-conjugate (asymptotic) tangents: the real roots of
/// `L a^2 + 2M a b + N b^2 = 0`. Two at hyperbolic points, one at
/// parabolic points, none at elliptic points.
pub fn asymptotic_directions(fd: &FundamentalData) -> Result<Vec<TangentDirection>> {
    if fd.is_flat(flat_tolerance(fd)) {
        return Err(Error::FlatPoint);
    }
    homogeneous_roots(fd.l, 2.0 * fd.m, fd.n)
        .into_iter()
        .map(|r| TangentDirection::new(r[0], r[1]).normalized(fd))
        .collect()
}

/// Principal tangents: the roots of
/// `(EM - FL) a^2 + (EN - GL) a b + (FN - GM) b^2 = 0`, ordered so the
/// first direction carries the larger normal curvature. The two directions
/// are orthogonal in the first fundamental form.
///
/// Fails with `UmbilicLike` when the quadratic vanishes identically (every
/// tangent is principal; this happens exactly at minimal points) and with
/// `FlatPoint` when the whole second form vanishes.
pub fn principal_directions(
    fd: &FundamentalData,
) -> Result<(TangentDirection, TangentDirection)> {
    if fd.is_flat(flat_tolerance(fd)) {
        return Err(Error::FlatPoint);
    }
    let a = fd.e * fd.m - fd.f * fd.l;
    let b = fd.e * fd.n - fd.g * fd.l;
    let c = fd.f * fd.n - fd.g * fd.m;
    let scale = (fd.e + fd.g) * (fd.l.abs() + fd.m.abs() + fd.n.abs());
    if a.abs().max(b.abs()).max(c.abs()) <= 1e-12 * scale {
        return Err(Error::UmbilicLike);
    }
    let roots = homogeneous_roots(a, b, c);
    if roots.len() != 2 {
        // A non-umbilic point always has two distinct real principal
        // directions; a repeated root only appears at the umbilic boundary.
        return Err(Error::UmbilicLike);
    }
    let d1 = TangentDirection::new(roots[0][0], roots[0][1]).normalized(fd)?;
    let d2 = TangentDirection::new(roots[1][0], roots[1][1]).normalized(fd)?;
    let n1 = normal_curvature(fd, &d1)?;
    let n2 = normal_curvature(fd, &d2)?;
    Ok(if n1 >= n2 { (d1, d2) } else { (d2, d1) })
}

/// An arbitrary pair of directions orthonormal in the first fundamental
/// form: the normalized `z_u` direction and its Gram-Schmidt complement.
/// Serves as the principal pair at umbilic points, where every such pair
/// is principal.
pub fn fallback_orthonormal_pair(
    fd: &FundamentalData,
) -> Result<(TangentDirection, TangentDirection)> {
    let p1 = TangentDirection::new(1.0, 0.0).normalized(fd)?;
    let i12 = fd.first_form([0.0, 1.0], p1.coeffs());
    let q = TangentDirection::new(-i12 * p1.alpha, 1.0 - i12 * p1.beta);
    Ok((p1, q.normalized(fd)?))
}

/// Normal curvature of the direction at angle `phi` from the first
/// principal direction; by the Euler formula it equals
/// `cos^2(phi) nu_hi + sin^2(phi) nu_lo`.
pub fn euler_normal_curvature(fd: &FundamentalData, phi: f64) -> Result<f64> {
    let (p1, p2) = principal_directions(fd)?;
    let (s, c) = phi.sin_cos();
    let dir = TangentDirection::new(
        c * p1.alpha + s * p2.alpha,
        c * p1.beta + s * p2.beta,
    );
    normal_curvature(fd, &dir)
}

/// The second fundamental tensor in the geometric frame of the principal
/// directions: `sigma(x,x) = nu1 b`, `sigma(y,y) = nu2 b`,
/// `sigma(x,y) = lambda b + mu l`, where `{x, y, b, l}` is positively
/// oriented and `b` is aligned with `sigma(x,x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalFrameData {
    pub nu1: f64,
    pub nu2: f64,
    pub lambda: f64,
    pub mu: f64,
    /// Unit normal collinear with `sigma(x,x)` and `sigma(y,y)`.
    pub b: Vec4,
    /// Unit normal completing the positive orientation.
    pub l: Vec4,
    /// Ambient unit principal directions.
    pub x: Vec4,
    pub y: Vec4,
}

/// Computes the principal-frame quantities at a non-flat, non-umbilic
/// point. The invariants satisfy `k = -4 nu1 nu2 mu^2`,
/// `kappa = (nu1 - nu2) mu` and `K = nu1 nu2 - (lambda^2 + mu^2)`.
pub fn principal_frame_data(
    jet: &Jet2,
    fd: &FundamentalData,
    dec: &DerivativeDecomposition,
) -> Result<PrincipalFrameData> {
    let frame = adapted_frame(jet)?;
    let (p1, p2) = principal_directions(fd)?;
    let x = p1.ambient(jet);
    let y = p2.ambient(jet);

    let sigma_basis = |c: [f64; 2]| frame.e1 * c[0] + frame.e2 * c[1];
    let s_uu = sigma_basis(dec.c_uu);
    let s_uv = sigma_basis(dec.c_uv);
    let s_vv = sigma_basis(dec.c_vv);
    let sigma = |a: [f64; 2], b: [f64; 2]| {
        s_uu * (a[0] * b[0]) + s_uv * (a[0] * b[1] + a[1] * b[0]) + s_vv * (a[1] * b[1])
    };
    let sxx = sigma(p1.coeffs(), p1.coeffs());
    let syy = sigma(p2.coeffs(), p2.coeffs());
    let sxy = sigma(p1.coeffs(), p2.coeffs());

    let tau = 1e-9 * (1.0 + sxx.norm() + syy.norm());
    let b = if sxx.norm() > tau {
        sxx.scale(1.0 / sxx.norm())
    } else if syy.norm() > tau {
        syy.scale(1.0 / syy.norm())
    } else {
        return Err(Error::FlatPoint);
    };
    let l = (-wedge4(x, y, b))
        .normalized(1e-300)
        .ok_or(Error::DegenerateChart { w: 0.0 })?;
    Ok(PrincipalFrameData {
        nu1: sxx.dot(b),
        nu2: syy.dot(b),
        lambda: sxy.dot(b),
        mu: sxy.dot(l),
        b,
        l,
        x,
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::forms::point_forms;
    use crate::jets::{evaluate_jet, ParamPoint};
    use approx::assert_relative_eq;

    fn forms_at(chart: &crate::jets::SurfaceChart, u: f64, v: f64) -> crate::forms::PointForms {
        let jet = evaluate_jet(chart, ParamPoint::new(u, v)).unwrap();
        point_forms(&jet).unwrap()
    }

    #[test]
    fn wsq_normal_curvature_along_first_axis() {
        let pf = forms_at(&families::wsq(), 0.0, 0.0);
        let nu = normal_curvature(&pf.fd, &TangentDirection::new(1.0, 0.0)).unwrap();
        assert_relative_eq!(nu, 8.0);
    }

    #[test]
    fn clifford_parametric_lines_are_asymptotic() {
        let pf = forms_at(&families::clifford(1.0, 1.0), 0.7, 1.9);
        let nu = normal_curvature(&pf.fd, &TangentDirection::new(1.0, 0.0)).unwrap();
        assert!(nu.abs() < 1e-12);
        assert!(is_conjugate(
            &pf.fd,
            &TangentDirection::new(1.0, 0.0),
            &TangentDirection::new(1.0, 0.0),
            DEFAULT_CONJUGACY_TOL
        )
        .unwrap());
    }

    #[test]
    fn plane_directions_have_zero_curvature_and_trivial_conjugacy() {
        let pf = forms_at(&families::plane(), 0.4, 0.6);
        let d1 = TangentDirection::new(0.3, -0.8);
        let d2 = TangentDirection::new(1.0, 0.4);
        assert_eq!(normal_curvature(&pf.fd, &d1).unwrap(), 0.0);
        assert!(is_conjugate(&pf.fd, &d1, &d2, DEFAULT_CONJUGACY_TOL).unwrap());
    }

    #[test]
    fn wsq_axes_are_conjugate() {
        let pf = forms_at(&families::wsq(), 0.0, 0.0);
        assert!(is_conjugate(
            &pf.fd,
            &TangentDirection::new(1.0, 0.0),
            &TangentDirection::new(0.0, 1.0),
            DEFAULT_CONJUGACY_TOL
        )
        .unwrap());
    }

    #[test]
    fn conjugacy_is_symmetric() {
        let pf = forms_at(&families::clifford(1.0, 0.6), 1.1, 0.4);
        for (a, b) in [((1.0, 0.2), (0.5, -1.0)), ((0.0, 1.0), (1.0, 1.0))] {
            let g1 = TangentDirection::new(a.0, a.1);
            let g2 = TangentDirection::new(b.0, b.1);
            assert_eq!(
                is_conjugate(&pf.fd, &g1, &g2, DEFAULT_CONJUGACY_TOL).unwrap(),
                is_conjugate(&pf.fd, &g2, &g1, DEFAULT_CONJUGACY_TOL).unwrap()
            );
        }
    }

    #[test]
    fn zero_direction_rejected() {
        let pf = forms_at(&families::wsq(), 0.0, 0.0);
        assert!(matches!(
            normal_curvature(&pf.fd, &TangentDirection::new(0.0, 0.0)),
            Err(Error::ZeroDirection)
        ));
    }

    #[test]
    fn clifford_asymptotic_directions_are_parametric() {
        let pf = forms_at(&families::clifford(1.0, 1.0), 0.3, 2.5);
        let dirs = asymptotic_directions(&pf.fd).unwrap();
        assert_eq!(dirs.len(), 2);
        let along_u = TangentDirection::new(1.0, 0.0);
        let along_v = TangentDirection::new(0.0, 1.0);
        assert!(dirs.iter().any(|d| d.same_line(&along_u, 1e-9)));
        assert!(dirs.iter().any(|d| d.same_line(&along_v, 1e-9)));
        for d in &dirs {
            let nu = normal_curvature(&pf.fd, d).unwrap();
            assert!(nu.abs() <= 1e-8);
        }
    }

    #[test]
    fn elliptic_point_has_no_asymptotic_directions() {
        let pf = forms_at(&families::wsq(), 0.0, 0.0);
        assert!(asymptotic_directions(&pf.fd).unwrap().is_empty());
    }

    #[test]
    fn parabolic_rotational_point_has_one_asymptotic_direction() {
        let spec = families::RotationalSpec {
            f: families::ProfileFn::Identity,
            g: families::ProfileFn::Linear { a: 1.0, b: 1.0 },
            alpha: 1.0,
            beta: 2.0,
        };
        let chart = families::rotational_surface(
            &spec,
            crate::jets::Domain::new(0.5, 2.0, 0.0, 6.0),
        )
        .unwrap();
        let pf = forms_at(&chart, 1.2, 0.8);
        let dirs = asymptotic_directions(&pf.fd).unwrap();
        assert_eq!(dirs.len(), 1);
    }

    #[test]
    fn flat_point_has_no_asymptotic_directions() {
        let pf = forms_at(&families::plane(), 0.0, 0.0);
        assert!(matches!(asymptotic_directions(&pf.fd), Err(Error::FlatPoint)));
    }

    #[test]
    fn clifford_principal_directions_are_diagonal() {
        let pf = forms_at(&families::clifford(1.0, 1.0), 1.4, 0.6);
        let (p1, p2) = principal_directions(&pf.fd).unwrap();
        // 45 degrees to the parametric lines.
        assert_relative_eq!(p1.alpha.abs(), p1.beta.abs(), epsilon = 1e-12);
        assert_relative_eq!(p2.alpha.abs(), p2.beta.abs(), epsilon = 1e-12);
        // Orthogonal in the first form and conjugate.
        assert!(pf.fd.first_form(p1.coeffs(), p2.coeffs()).abs() <= 1e-8);
        assert!(is_conjugate(&pf.fd, &p1, &p2, DEFAULT_CONJUGACY_TOL).unwrap());
        // Ordered by normal curvature: nu_hi = 1, nu_lo = -1.
        assert_relative_eq!(normal_curvature(&pf.fd, &p1).unwrap(), 1.0, epsilon = 1e-10);
        assert_relative_eq!(normal_curvature(&pf.fd, &p2).unwrap(), -1.0, epsilon = 1e-10);
    }

    #[test]
    fn minimal_point_is_umbilic() {
        let pf = forms_at(&families::wsq(), 0.0, 0.0);
        assert!(matches!(principal_directions(&pf.fd), Err(Error::UmbilicLike)));
        // Everywhere, in fact: the graph of w^2 is minimal.
        let pf = forms_at(&families::wsq(), 0.7, -0.4);
        assert!(matches!(principal_directions(&pf.fd), Err(Error::UmbilicLike)));
    }

    #[test]
    fn principal_parameterization_gives_parametric_principal_lines() {
        // The rotational family has F = 0 and M = 0: it is parameterized
        // along its principal lines.
        let spec = families::RotationalSpec {
            f: families::ProfileFn::Identity,
            g: families::ProfileFn::Power { coeff: 1.0, exponent: 4.0 },
            alpha: 1.0,
            beta: 2.0,
        };
        let chart = families::rotational_surface(
            &spec,
            crate::jets::Domain::new(0.5, 2.0, 0.0, 6.0),
        )
        .unwrap();
        let pf = forms_at(&chart, 1.3, 2.0);
        let (p1, p2) = principal_directions(&pf.fd).unwrap();
        let along_u = TangentDirection::new(1.0, 0.0);
        let along_v = TangentDirection::new(0.0, 1.0);
        assert!(
            (p1.same_line(&along_u, 1e-9) && p2.same_line(&along_v, 1e-9))
                || (p1.same_line(&along_v, 1e-9) && p2.same_line(&along_u, 1e-9))
        );
    }

    #[test]
    fn euler_formula_endpoints() {
        let pf = forms_at(&families::clifford(1.0, 1.0), 0.2, 1.0);
        assert_relative_eq!(
            euler_normal_curvature(&pf.fd, 0.0).unwrap(),
            pf.inv.nu_hi,
            epsilon = 1e-10
        );
        assert_relative_eq!(
            euler_normal_curvature(&pf.fd, core::f64::consts::FRAC_PI_2).unwrap(),
            pf.inv.nu_lo,
            epsilon = 1e-10
        );
        // At 45 degrees from principal the direction is asymptotic here.
        assert!(euler_normal_curvature(&pf.fd, core::f64::consts::FRAC_PI_4)
            .unwrap()
            .abs()
            < 1e-10);
    }

    #[test]
    fn clifford_principal_frame_reproduces_invariants() {
        let chart = families::clifford(1.0, 1.0);
        let jet = evaluate_jet(&chart, ParamPoint::new(0.9, 2.4)).unwrap();
        let pf = point_forms(&jet).unwrap();
        let data = principal_frame_data(&jet, &pf.fd, &pf.dec).unwrap();
        assert_relative_eq!(data.nu1, 0.5_f64.sqrt(), epsilon = 1e-10);
        assert_relative_eq!(data.nu2, 0.5_f64.sqrt(), epsilon = 1e-10);
        assert_relative_eq!(data.lambda, 0.0, epsilon = 1e-10);
        assert_relative_eq!(data.mu.abs(), 0.5_f64.sqrt(), epsilon = 1e-10);
        assert_relative_eq!(
            -4.0 * data.nu1 * data.nu2 * data.mu * data.mu,
            pf.inv.k,
            epsilon = 1e-9
        );
        assert_relative_eq!((data.nu1 - data.nu2) * data.mu, pf.inv.kappa, epsilon = 1e-9);
        assert_relative_eq!(
            data.nu1 * data.nu2 - (data.lambda * data.lambda + data.mu * data.mu),
            pf.inv.gauss,
            epsilon = 1e-9
        );
    }

    #[test]
    fn meridian_principal_frame_confirms_flat_normal_connection() {
        let spec = families::MeridianSpec {
            curve: families::SphericalCurve::circle(1.0),
            profile: families::MeridianProfile::sphere(),
            v_range: (0.0, 4.0),
        };
        let chart = families::meridian_surface(&spec).unwrap();
        let jet = evaluate_jet(&chart, ParamPoint::new(0.3, 1.7)).unwrap();
        let pf = point_forms(&jet).unwrap();
        let data = principal_frame_data(&jet, &pf.fd, &pf.dec).unwrap();
        // kappa = (nu1 - nu2) mu = 0 while mu != 0.
        assert!(((data.nu1 - data.nu2) * data.mu).abs() < 1e-9);
        assert!(data.mu.abs() > 1e-3);
        // The sigma values are reproduced by the frame coefficients.
        let frame = adapted_frame(&jet).unwrap();
        let s_uu = frame.e1 * pf.dec.c_uu[0] + frame.e2 * pf.dec.c_uu[1];
        let s_uv = frame.e1 * pf.dec.c_uv[0] + frame.e2 * pf.dec.c_uv[1];
        let s_vv = frame.e1 * pf.dec.c_vv[0] + frame.e2 * pf.dec.c_vv[1];
        let (p1, p2) = principal_directions(&pf.fd).unwrap();
        let sigma = |a: [f64; 2], b: [f64; 2]| {
            s_uu * (a[0] * b[0]) + s_uv * (a[0] * b[1] + a[1] * b[0]) + s_vv * (a[1] * b[1])
        };
        assert!((sigma(p1.coeffs(), p1.coeffs()) - data.b * data.nu1).norm() < 1e-7);
        let sxy = data.b * data.lambda + data.l * data.mu;
        assert!((sigma(p1.coeffs(), p2.coeffs()) - sxy).norm() < 1e-7);
    }

    #[test]
    fn hyperplanar_sphere_is_flat_for_principal_frame() {
        let chart = families::sphere3();
        let jet = evaluate_jet(&chart, ParamPoint::new(1.0, 0.5)).unwrap();
        let pf = point_forms(&jet).unwrap();
        assert!(matches!(
            principal_frame_data(&jet, &pf.fd, &pf.dec),
            Err(Error::FlatPoint)
        ));
    }
}
