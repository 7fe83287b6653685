//! The tangent indicatrix: the conic `nu' X^2 + nu'' Y^2 = +-1` in the
//! tangent plane, written in principal-axis coordinates.
//!
//! Elliptic points carry an ellipse (a circle exactly at minimal points),
//! hyperbolic points a hyperbola (rectangular exactly when the normal
//! connection is flat), parabolic points a pair of parallel lines.

#[allow(unused_imports)]
use num_traits::Float;

use crate::directions::TangentDirection;
use crate::error::{Error, Result};
use crate::forms::InvariantSet;
use crate::linalg::solve2;

/// Conic type of the indicatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicKind {
    Ellipse,
    Circle,
    Hyperbola,
    RectangularHyperbola,
    ParallelLines,
    UndefinedFlat,
}

impl ConicKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicKind::Ellipse => "ellipse",
            ConicKind::Circle => "circle",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::RectangularHyperbola => "rectangular_hyperbola",
            ConicKind::ParallelLines => "parallel_lines",
            ConicKind::UndefinedFlat => "undefined_flat",
        }
    }
}

/// Which right-hand sides `epsilon = +-1` give a nonempty locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EpsilonBranches {
    pub plus: bool,
    pub minus: bool,
}

/// Raw relative margins behind the kind decision, so callers can
/// re-threshold: `circle = |nu' - nu''| / s`, `rectangular = |nu' + nu''| / s`,
/// `parabolic = min(|nu'|, |nu''|) / s` with `s = |nu'| + |nu''|`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ConicMargins {
    pub circle: f64,
    pub rectangular: f64,
    pub parabolic: f64,
}

/// The indicatrix conic at a point, in coordinates along the principal
/// axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndicatrixConic {
    pub nu_hi: f64,
    pub nu_lo: f64,
    pub kind: ConicKind,
    /// Full axis lengths `(2 / sqrt|nu'|, 2 / sqrt|nu''|)`; absent for
    /// parallel lines and at flat points.
    pub axis_lengths: Option<(f64, f64)>,
    /// Principal directions; the first carries `nu_hi`.
    pub principal_axes: (TangentDirection, TangentDirection),
    pub epsilon_branches: EpsilonBranches,
    pub margins: ConicMargins,
}

/// Default relative threshold for the circle / rectangular-hyperbola
/// decisions; one order above the finite-difference noise floor.
pub const DEFAULT_CIRCLE_TOL: f64 = 1e-6;

/// Placeholder conic for reporting at flat points, where the indicatrix is
/// undefined.
pub fn flat_conic() -> IndicatrixConic {
    IndicatrixConic {
        nu_hi: 0.0,
        nu_lo: 0.0,
        kind: ConicKind::UndefinedFlat,
        axis_lengths: None,
        principal_axes: (TangentDirection::new(1.0, 0.0), TangentDirection::new(0.0, 1.0)),
        epsilon_branches: EpsilonBranches::default(),
        margins: ConicMargins::default(),
    }
}

/// Builds the indicatrix from the invariants and a principal pair (any
/// orthonormal tangent pair works at umbilic points, where the conic is a
/// circle). Uses [`DEFAULT_CIRCLE_TOL`].
pub fn build_indicatrix(
    inv: &InvariantSet,
    principal: (TangentDirection, TangentDirection),
) -> Result<IndicatrixConic> {
    build_indicatrix_with_tol(inv, principal, DEFAULT_CIRCLE_TOL)
}

/// As [`build_indicatrix`] with an explicit relative equality threshold.
pub fn build_indicatrix_with_tol(
    inv: &InvariantSet,
    principal: (TangentDirection, TangentDirection),
    tol_c: f64,
) -> Result<IndicatrixConic> {
    let (hi, lo) = (inv.nu_hi, inv.nu_lo);
    let s = hi.abs() + lo.abs();
    if s <= 1e-12 {
        return Err(Error::FlatPoint);
    }
    let margins = ConicMargins {
        circle: (hi - lo).abs() / s,
        rectangular: (hi + lo).abs() / s,
        parabolic: hi.abs().min(lo.abs()) / s,
    };
    let (kind, branches, axes) = if margins.parabolic <= tol_c {
        // One principal curvature vanishes: two straight lines parallel to
        // the principal direction with zero normal curvature, at offset
        // 1/sqrt|nu| along the other axis.
        let nu = if hi.abs() >= lo.abs() { hi } else { lo };
        (
            ConicKind::ParallelLines,
            EpsilonBranches { plus: nu > 0.0, minus: nu < 0.0 },
            None,
        )
    } else if hi * lo > 0.0 {
        let kind = if margins.circle <= tol_c {
            ConicKind::Circle
        } else {
            ConicKind::Ellipse
        };
        (
            kind,
            EpsilonBranches { plus: hi > 0.0, minus: hi < 0.0 },
            Some((2.0 / hi.abs().sqrt(), 2.0 / lo.abs().sqrt())),
        )
    } else {
        let kind = if margins.rectangular <= tol_c {
            ConicKind::RectangularHyperbola
        } else {
            ConicKind::Hyperbola
        };
        (
            kind,
            EpsilonBranches { plus: true, minus: true },
            Some((2.0 / hi.abs().sqrt(), 2.0 / lo.abs().sqrt())),
        )
    };
    Ok(IndicatrixConic {
        nu_hi: hi,
        nu_lo: lo,
        kind,
        axis_lengths: axes,
        principal_axes: principal,
        epsilon_branches: branches,
        margins,
    })
}

/// Pole-polar conjugacy of two tangent directions with respect to the
/// indicatrix: writing each direction as `X p1 + Y p2` in the
/// principal-axis basis, the test is `nu' X1 X2 + nu'' Y1 Y2 = 0` within
/// `tol` relative. Coincides with second-fundamental-form conjugacy.
pub fn indicatrix_conjugate(
    conic: &IndicatrixConic,
    g1: &TangentDirection,
    g2: &TangentDirection,
    tol: f64,
) -> Result<bool> {
    let v = indicatrix_pairing(conic, g1, g2)?;
    let (x1, y1, x2, y2) = principal_coords_pair(conic, g1, g2)?;
    let s = conic.nu_hi.abs() + conic.nu_lo.abs();
    let n1 = (x1 * x1 + y1 * y1).sqrt();
    let n2 = (x2 * x2 + y2 * y2).sqrt();
    Ok(v.abs() <= tol * s * n1 * n2)
}

/// The bilinear pairing `nu' X1 X2 + nu'' Y1 Y2` behind
/// [`indicatrix_conjugate`]; exposed for cross-checks against the second
/// fundamental form.
pub fn indicatrix_pairing(
    conic: &IndicatrixConic,
    g1: &TangentDirection,
    g2: &TangentDirection,
) -> Result<f64> {
    let (x1, y1, x2, y2) = principal_coords_pair(conic, g1, g2)?;
    Ok(conic.nu_hi * x1 * x2 + conic.nu_lo * y1 * y2)
}

fn principal_coords_pair(
    conic: &IndicatrixConic,
    g1: &TangentDirection,
    g2: &TangentDirection,
) -> Result<(f64, f64, f64, f64)> {
    if conic.kind == ConicKind::UndefinedFlat {
        return Err(Error::FlatPoint);
    }
    let (p1, p2) = conic.principal_axes;
    let coords = |g: &TangentDirection| -> Result<[f64; 2]> {
        if g.alpha == 0.0 && g.beta == 0.0 {
            return Err(Error::ZeroDirection);
        }
        solve2(p1.alpha, p2.alpha, p1.beta, p2.beta, [g.alpha, g.beta])
            .ok_or(Error::UmbilicLike)
    };
    let a = coords(g1)?;
    let b = coords(g2)?;
    Ok((a[0], a[1], b[0], b[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::directions::{is_conjugate, principal_directions, DEFAULT_CONJUGACY_TOL};
    use crate::families;
    use crate::forms::point_forms;
    use crate::jets::{evaluate_jet, ParamPoint};
    use approx::assert_relative_eq;

    fn forms_at(chart: &crate::jets::SurfaceChart, u: f64, v: f64) -> crate::forms::PointForms {
        let jet = evaluate_jet(chart, ParamPoint::new(u, v)).unwrap();
        point_forms(&jet).unwrap()
    }

    fn canonical_pair(fd: &crate::forms::FundamentalData) -> (TangentDirection, TangentDirection) {
        crate::directions::fallback_orthonormal_pair(fd).unwrap()
    }

    #[test]
    fn minimal_point_has_circle() {
        let pf = forms_at(&families::wsq(), 0.0, 0.0);
        let conic = build_indicatrix(&pf.inv, canonical_pair(&pf.fd)).unwrap();
        assert_eq!(conic.kind, ConicKind::Circle);
        let (a1, a2) = conic.axis_lengths.unwrap();
        assert_relative_eq!(a1, 2.0 / 8.0_f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(a2, 2.0 / 8.0_f64.sqrt(), epsilon = 1e-12);
        assert!(conic.epsilon_branches.plus && !conic.epsilon_branches.minus);
    }

    #[test]
    fn flat_normal_connection_gives_rectangular_hyperbola() {
        let pf = forms_at(&families::clifford(1.0, 1.0), 0.8, 1.1);
        let pair = principal_directions(&pf.fd).unwrap();
        let conic = build_indicatrix(&pf.inv, pair).unwrap();
        assert_eq!(conic.kind, ConicKind::RectangularHyperbola);
        let (a1, a2) = conic.axis_lengths.unwrap();
        // Semi-axes 1 for nu' = 1, nu'' = -1.
        assert_relative_eq!(a1, 2.0, epsilon = 1e-10);
        assert_relative_eq!(a2, 2.0, epsilon = 1e-10);
        assert!(conic.epsilon_branches.plus && conic.epsilon_branches.minus);
    }

    #[test]
    fn parabolic_point_gives_parallel_lines() {
        let spec = families::RotationalSpec {
            f: families::ProfileFn::Identity,
            g: families::ProfileFn::Linear { a: 1.0, b: 1.0 },
            alpha: 1.0,
            beta: 2.0,
        };
        let chart =
            families::rotational_surface(&spec, crate::jets::Domain::new(0.5, 2.0, 0.0, 6.0))
                .unwrap();
        let pf = forms_at(&chart, 1.1, 0.4);
        let pair = principal_directions(&pf.fd).unwrap();
        let conic = build_indicatrix(&pf.inv, pair).unwrap();
        assert_eq!(conic.kind, ConicKind::ParallelLines);
        assert!(conic.axis_lengths.is_none());
    }

    #[test]
    fn generic_hyperbolic_point_is_plain_hyperbola() {
        // f = u, g = u^2 with equal speeds: at u = 1 the closed forms give
        // k = -0.008 and kappa = -0.01, so nu' != -nu''.
        let spec = families::RotationalSpec {
            f: families::ProfileFn::Identity,
            g: families::ProfileFn::Power { coeff: 1.0, exponent: 2.0 },
            alpha: 1.0,
            beta: 1.0,
        };
        let chart =
            families::rotational_surface(&spec, crate::jets::Domain::new(0.5, 2.0, 0.0, 6.0))
                .unwrap();
        let pf = forms_at(&chart, 1.0, 0.4);
        assert_relative_eq!(pf.inv.k, -0.008, epsilon = 1e-12);
        assert_relative_eq!(pf.inv.kappa, -0.01, epsilon = 1e-12);
        let pair = principal_directions(&pf.fd).unwrap();
        let conic = build_indicatrix(&pf.inv, pair).unwrap();
        assert_eq!(conic.kind, ConicKind::Hyperbola);
    }

    #[test]
    fn generic_elliptic_point_is_plain_ellipse() {
        // f = u, g = u^3 with speeds (1, 2): at u = 1 the closed forms
        // give k = 384/125000 and kappa = 8/125, a non-minimal elliptic
        // point.
        let spec = families::RotationalSpec {
            f: families::ProfileFn::Identity,
            g: families::ProfileFn::Power { coeff: 1.0, exponent: 3.0 },
            alpha: 1.0,
            beta: 2.0,
        };
        let chart =
            families::rotational_surface(&spec, crate::jets::Domain::new(0.5, 2.0, 0.0, 6.0))
                .unwrap();
        let pf = forms_at(&chart, 1.0, 2.2);
        assert_relative_eq!(pf.inv.k, 384.0 / 125000.0, epsilon = 1e-12);
        assert_relative_eq!(pf.inv.kappa, 8.0 / 125.0, epsilon = 1e-12);
        let pair = principal_directions(&pf.fd).unwrap();
        let conic = build_indicatrix(&pf.inv, pair).unwrap();
        assert_eq!(conic.kind, ConicKind::Ellipse);
        assert!(conic.epsilon_branches.plus && !conic.epsilon_branches.minus);
    }

    #[test]
    fn flat_point_is_rejected() {
        let pf = forms_at(&families::plane(), 0.1, 0.2);
        let err = build_indicatrix(&pf.inv, canonical_pair(&pf.fd));
        assert!(matches!(err, Err(Error::FlatPoint)));
        assert_eq!(flat_conic().kind, ConicKind::UndefinedFlat);
    }

    #[test]
    fn circle_conjugacy_is_orthogonality() {
        let pf = forms_at(&families::wsq(), 0.0, 0.0);
        let conic = build_indicatrix(&pf.inv, canonical_pair(&pf.fd)).unwrap();
        // E = G = 1, F = 0 at the origin: orthogonal pairs are conjugate.
        let g1 = TangentDirection::new(1.0, 2.0);
        let g2 = TangentDirection::new(-2.0, 1.0);
        let g3 = TangentDirection::new(1.0, 0.0);
        assert!(indicatrix_conjugate(&conic, &g1, &g2, 1e-9).unwrap());
        assert!(!indicatrix_conjugate(&conic, &g1, &g3, 1e-9).unwrap());
    }

    #[test]
    fn hyperbola_asymptote_directions_are_self_conjugate() {
        let pf = forms_at(&families::clifford(1.0, 1.0), 2.0, 0.9);
        let pair = principal_directions(&pf.fd).unwrap();
        let conic = build_indicatrix(&pf.inv, pair).unwrap();
        for dir in [TangentDirection::new(1.0, 0.0), TangentDirection::new(0.0, 1.0)] {
            assert!(indicatrix_conjugate(&conic, &dir, &dir, 1e-9).unwrap());
        }
    }

    #[test]
    fn pairing_matches_second_fundamental_form() {
        // The pole-polar pairing in principal coordinates equals the second
        // fundamental form on first-form-normalized directions.
        let charts = [families::clifford(1.0, 1.0), families::clifford(1.0, 0.6)];
        let mut state = 0x9e3779b97f4a7c15_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        for chart in &charts {
            let pf = forms_at(chart, 1.2, 0.5);
            let pair = principal_directions(&pf.fd).unwrap();
            let conic = build_indicatrix(&pf.inv, pair).unwrap();
            for _ in 0..100 {
                let g1 =
                    TangentDirection::new(next(), next()).normalized(&pf.fd).unwrap();
                let g2 =
                    TangentDirection::new(next(), next()).normalized(&pf.fd).unwrap();
                let ii = pf.fd.second_form(g1.coeffs(), g2.coeffs());
                let pairing = indicatrix_pairing(&conic, &g1, &g2).unwrap();
                assert_relative_eq!(ii, pairing, epsilon = 1e-9, max_relative = 1e-9);
                assert_eq!(
                    is_conjugate(&pf.fd, &g1, &g2, DEFAULT_CONJUGACY_TOL).unwrap(),
                    indicatrix_conjugate(&conic, &g1, &g2, DEFAULT_CONJUGACY_TOL).unwrap()
                );
            }
        }
    }
}
