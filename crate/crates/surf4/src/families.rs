//! Constructors for the example surface families with analytic jets.
//!
//! * Meridian surfaces `z(u,v) = f(u) l(v) + g(u) e4` built from a curve on
//!   the unit 2-sphere and an arc-length profile `(f, g)`; they lie on a
//!   rotational hypersurface and always have flat normal connection.
//! * Generalized (Moore) rotational surfaces
//!   `(f cos av, f sin av, g cos bv, g sin bv)` with two rotation speeds.
//! * Reference surfaces: plane, hyperplanar unit sphere, Clifford torus and
//!   the holomorphic graph `w -> w^2`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::forms::InvariantSet;
use crate::jets::{Domain, Jet2, ParamPoint, SurfaceChart};
use crate::linalg::Vec4;

// ---------------------------------------------------------------------------
// Curves on the unit 2-sphere
// ---------------------------------------------------------------------------

/// Moving frame of an arc-length curve on the unit sphere of
/// `span{e1, e2, e3}`: position `l`, unit tangent `t`, spherical normal `n`
/// and the spherical curvature. The frame satisfies `l' = t`,
/// `t' = curvature * n - l`, `n' = -curvature * t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveFrame {
    pub l: Vec4,
    pub t: Vec4,
    pub n: Vec4,
    pub curvature: f64,
}

/// An arc-length curve on the unit 2-sphere, given by its moving frame.
#[derive(Clone)]
pub struct SphericalCurve {
    eval: Arc<dyn Fn(f64) -> CurveFrame + Send + Sync>,
}

impl SphericalCurve {
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(f64) -> CurveFrame + Send + Sync + 'static,
    {
        SphericalCurve { eval: Arc::new(f) }
    }

    /// Circle of constant spherical curvature `b` (the circle at colatitude
    /// `theta` with `cot(theta) = b`), arc-length parameterized.
    pub fn circle(b: f64) -> Self {
        let r = (1.0 + b * b).sqrt();
        let sin_th = 1.0 / r;
        let cos_th = b / r;
        SphericalCurve::from_fn(move |v| {
            let phi = v / sin_th;
            let (sp, cp) = (phi.sin(), phi.cos());
            CurveFrame {
                l: Vec4::new(sin_th * cp, sin_th * sp, cos_th, 0.0),
                t: Vec4::new(-sp, cp, 0.0, 0.0),
                n: Vec4::new(-cos_th * cp, -cos_th * sp, sin_th, 0.0),
                curvature: b,
            }
        })
    }

    /// Great circle (zero spherical curvature).
    pub fn great_circle() -> Self {
        SphericalCurve::circle(0.0)
    }

    pub fn frame(&self, v: f64) -> CurveFrame {
        (self.eval)(v)
    }
}

// ---------------------------------------------------------------------------
// Meridian profiles
// ---------------------------------------------------------------------------

/// Values and derivatives of the arc-length profile `(f, g)` at one `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileJet {
    pub f: f64,
    pub f_dot: f64,
    pub f_ddot: f64,
    pub g: f64,
    pub g_dot: f64,
    pub g_ddot: f64,
}

impl ProfileJet {
    /// Curvature of the meridian curve, `f' g'' - g' f''`.
    pub fn meridian_curvature(&self) -> f64 {
        self.f_dot * self.g_ddot - self.g_dot * self.f_ddot
    }
}

/// Arc-length profile of a meridian surface: `f > 0` and
/// `f'^2 + g'^2 = 1` on the domain interval.
#[derive(Clone)]
pub struct MeridianProfile {
    eval: Arc<dyn Fn(f64) -> ProfileJet + Send + Sync>,
    domain: (f64, f64),
}

/// Node spacing of the quadrature recovering `g` from `g' = sqrt(1 - f'^2)`.
const G_QUADRATURE_STEP: f64 = 1e-3;

impl MeridianProfile {
    /// Profile from an analytic `(f, f', f'')` triple; `g` is recovered by
    /// composite Simpson quadrature of `sqrt(1 - f'^2)` from the left end
    /// of `domain`.
    ///
    /// Fails with `InvalidProfile` when `f <= 0` or `f'^2 >= 1` anywhere on
    /// a dense sample of the domain.
    pub fn from_f_triple<F>(domain: (f64, f64), f: F) -> Result<Self>
    where
        F: Fn(f64) -> (f64, f64, f64) + Send + Sync + 'static,
    {
        let (u0, u1) = domain;
        if !(u1 > u0) {
            return Err(Error::InvalidProfile(format!("empty domain ({u0}, {u1})")));
        }
        let samples = 1000;
        for i in 0..=samples {
            let u = u0 + (u1 - u0) * i as f64 / samples as f64;
            let (fv, fd, _) = f(u);
            if !(fv > 0.0) {
                return Err(Error::InvalidProfile(format!("f({u}) = {fv} is not positive")));
            }
            if 1.0 - fd * fd < 1e-12 {
                return Err(Error::InvalidProfile(format!(
                    "f'({u})^2 = {} leaves no room for g' = sqrt(1 - f'^2)",
                    fd * fd
                )));
            }
        }
        // Cumulative Simpson table for g over a fixed grid; evaluation adds
        // a single-interval Simpson remainder, so g is smooth in u.
        let span = u1 - u0;
        let n = ((span / G_QUADRATURE_STEP).ceil() as usize).max(2);
        let h = span / n as f64;
        let g_dot = {
            let fref = &f;
            move |u: f64| (1.0 - fref(u).1 * fref(u).1).max(0.0).sqrt()
        };
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0.0);
        let mut acc = 0.0;
        for k in 0..n {
            let a = u0 + k as f64 * h;
            let b = a + h;
            acc += h / 6.0 * (g_dot(a) + 4.0 * g_dot(0.5 * (a + b)) + g_dot(b));
            prefix.push(acc);
        }
        let eval = move |u: f64| {
            let (fv, fd, fdd) = f(u);
            let gd = (1.0 - fd * fd).max(0.0).sqrt();
            let gdd = if gd > 0.0 { -fd * fdd / gd } else { 0.0 };
            let idx = (((u - u0) / h).floor() as isize).clamp(0, n as isize - 1) as usize;
            let a = u0 + idx as f64 * h;
            let rem = {
                let ga = (1.0 - f(a).1 * f(a).1).max(0.0).sqrt();
                let gm = {
                    let m = 0.5 * (a + u);
                    (1.0 - f(m).1 * f(m).1).max(0.0).sqrt()
                };
                (u - a) / 6.0 * (ga + 4.0 * gm + gd)
            };
            ProfileJet {
                f: fv,
                f_dot: fd,
                f_ddot: fdd,
                g: prefix[idx] + rem,
                g_dot: gd,
                g_ddot: gdd,
            }
        };
        Ok(MeridianProfile { eval: Arc::new(eval), domain })
    }

    /// Profile with full analytic jets; the caller guarantees the
    /// arc-length constraint.
    pub(crate) fn from_raw<F>(domain: (f64, f64), eval: F) -> Self
    where
        F: Fn(f64) -> ProfileJet + Send + Sync + 'static,
    {
        MeridianProfile { eval: Arc::new(eval), domain }
    }

    /// The profile `f = cos u`, `g = sin u` (meridian of the unit
    /// hypersphere), on `|u| < pi/2` clipped away from the turning points.
    pub fn sphere() -> Self {
        let d = core::f64::consts::FRAC_PI_2 - 1e-4;
        MeridianProfile::from_raw((-d, d), |u| ProfileJet {
            f: u.cos(),
            f_dot: -u.sin(),
            f_ddot: -u.cos(),
            g: u.sin(),
            g_dot: u.cos(),
            g_ddot: -u.sin(),
        })
    }

    /// Straight-line profile `f = f0 + u cos(angle)`, `g = u sin(angle)`
    /// with `angle` in `(0, pi)`; its meridian curvature vanishes.
    pub fn linear(angle: f64, f0: f64, domain: (f64, f64)) -> Result<Self> {
        let (ca, sa) = (angle.cos(), angle.sin());
        if sa < 0.0 {
            return Err(Error::InvalidProfile(format!(
                "profile slope angle {angle} must keep g' = sin(angle) nonnegative"
            )));
        }
        for u in [domain.0, domain.1] {
            if f0 + u * ca <= 0.0 {
                return Err(Error::InvalidProfile(format!("f({u}) <= 0")));
            }
        }
        Ok(MeridianProfile::from_raw(domain, move |u| ProfileJet {
            f: f0 + u * ca,
            f_dot: ca,
            f_ddot: 0.0,
            g: u * sa,
            g_dot: sa,
            g_ddot: 0.0,
        }))
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn at(&self, u: f64) -> ProfileJet {
        (self.eval)(u)
    }
}

/// A meridian surface specification: spherical curve, arc-length profile
/// and the parameter range along the curve.
#[derive(Clone)]
pub struct MeridianSpec {
    pub curve: SphericalCurve,
    pub profile: MeridianProfile,
    pub v_range: (f64, f64),
}

/// Builds the chart `z(u,v) = f(u) l(v) + g(u) e4` with analytic jets
/// assembled from the curve frame and the profile derivatives.
pub fn meridian_surface(spec: &MeridianSpec) -> Result<SurfaceChart> {
    let (u0, u1) = spec.profile.domain();
    let (v0, v1) = spec.v_range;
    if !(v1 > v0) {
        return Err(Error::InvalidSpec(format!("empty v range ({v0}, {v1})")));
    }
    let curve = spec.curve.clone();
    let profile = spec.profile.clone();
    let e4 = Vec4::basis(3);
    Ok(SurfaceChart::from_jets(
        Domain::new(u0, u1, v0, v1),
        move |u, v| {
            let p = profile.at(u);
            let c = curve.frame(v);
            Jet2 {
                z: c.l * p.f + e4 * p.g,
                z_u: c.l * p.f_dot + e4 * p.g_dot,
                z_v: c.t * p.f,
                z_uu: c.l * p.f_ddot + e4 * p.g_ddot,
                z_uv: c.t * p.f_dot,
                z_vv: c.n * (p.f * c.curvature) - c.l * p.f,
            }
        },
    ))
}

/// Closed-form invariants of a meridian surface:
/// `k = -km^2 kappa_c^2 / f^2`, `kappa = 0`, `K = km g' / f`, and the mean
/// curvature vector `H = (kappa_c / 2f) n1 + ((g' + f km) / 2f) n2` with
/// `n1 = n(v)`, `n2 = -g' l + f' e4`. Used as an oracle against the generic
/// pipeline.
pub fn meridian_invariants_closed_form(spec: &MeridianSpec, p: ParamPoint) -> Result<InvariantSet> {
    let pj = spec.profile.at(p.u);
    if pj.f.abs() < 1e-12 {
        return Err(Error::PoleOfProfile { u: p.u });
    }
    let c = spec.curve.frame(p.v);
    let km = pj.meridian_curvature();
    let k = -(km * km * c.curvature * c.curvature) / (pj.f * pj.f);
    let gauss = km * pj.g_dot / pj.f;
    let n1 = c.n;
    let n2 = -c.l * pj.g_dot + Vec4::basis(3) * pj.f_dot;
    let h1 = c.curvature / (2.0 * pj.f);
    let h2 = (pj.g_dot + pj.f * km) / (2.0 * pj.f);
    let mean = n1 * h1 + n2 * h2;
    let r = (-k).max(0.0).sqrt();
    Ok(InvariantSet {
        k,
        kappa: 0.0,
        gauss,
        mean,
        // Coordinates in the (n1, n2) frame of this family, which differs
        // from the adapted frame of the generic pipeline by a rotation.
        mean_frame: [h1, h2],
        nu_hi: r,
        nu_lo: -r,
    })
}

// ---------------------------------------------------------------------------
// Generalized rotational surfaces
// ---------------------------------------------------------------------------

/// Closed-form scalar profile function with two derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileFn {
    /// `u`
    Identity,
    /// `a u + b`
    Linear { a: f64, b: f64 },
    /// `coeff * u^exponent` (requires `u > 0` for fractional exponents)
    Power { coeff: f64, exponent: f64 },
    /// `amp * cos(freq u)`
    Cos { amp: f64, freq: f64 },
    /// `amp * sin(freq u)`
    Sin { amp: f64, freq: f64 },
}

impl ProfileFn {
    /// Value and first two derivatives at `u`.
    pub fn eval(&self, u: f64) -> (f64, f64, f64) {
        match *self {
            ProfileFn::Identity => (u, 1.0, 0.0),
            ProfileFn::Linear { a, b } => (a * u + b, a, 0.0),
            ProfileFn::Power { coeff, exponent } => {
                let v = coeff * u.powf(exponent);
                let d1 = if exponent == 0.0 {
                    0.0
                } else {
                    coeff * exponent * u.powf(exponent - 1.0)
                };
                let d2 = if exponent == 0.0 || exponent == 1.0 {
                    0.0
                } else {
                    coeff * exponent * (exponent - 1.0) * u.powf(exponent - 2.0)
                };
                (v, d1, d2)
            }
            ProfileFn::Cos { amp, freq } => (
                amp * (freq * u).cos(),
                -amp * freq * (freq * u).sin(),
                -amp * freq * freq * (freq * u).cos(),
            ),
            ProfileFn::Sin { amp, freq } => (
                amp * (freq * u).sin(),
                amp * freq * (freq * u).cos(),
                -amp * freq * freq * (freq * u).sin(),
            ),
        }
    }
}

/// A generalized rotational surface
/// `(f(u) cos(alpha v), f(u) sin(alpha v), g(u) cos(beta v), g(u) sin(beta v))`
/// with positive rotation speeds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationalSpec {
    pub f: ProfileFn,
    pub g: ProfileFn,
    pub alpha: f64,
    pub beta: f64,
}

/// Builds the rotational chart with analytic jets over `domain`.
///
/// Validates `alpha, beta > 0` and, on a sample of the `u` range, the
/// regularity conditions `alpha^2 f^2 + beta^2 g^2 > 0` and
/// `f'^2 + g'^2 > 0`.
pub fn rotational_surface(spec: &RotationalSpec, domain: Domain) -> Result<SurfaceChart> {
    if !(spec.alpha > 0.0 && spec.beta > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "rotation speeds ({}, {}) must be positive",
            spec.alpha, spec.beta
        )));
    }
    let samples = 256;
    for i in 0..=samples {
        let u = domain.u0 + (domain.u1 - domain.u0) * i as f64 / samples as f64;
        let (fv, fd, _) = spec.f.eval(u);
        let (gv, gd, _) = spec.g.eval(u);
        let radius = spec.alpha * spec.alpha * fv * fv + spec.beta * spec.beta * gv * gv;
        let speed = fd * fd + gd * gd;
        if !(radius > 0.0) || !(speed > 0.0) || !radius.is_finite() || !speed.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "rotational spec degenerates at u = {u}: alpha^2 f^2 + beta^2 g^2 = {radius}, f'^2 + g'^2 = {speed}"
            )));
        }
    }
    let s = *spec;
    Ok(SurfaceChart::from_jets(domain, move |u, v| {
        let (f, fd, fdd) = s.f.eval(u);
        let (g, gd, gdd) = s.g.eval(u);
        let (sa, ca) = (s.alpha * v).sin_cos();
        let (sb, cb) = (s.beta * v).sin_cos();
        let (al, be) = (s.alpha, s.beta);
        Jet2 {
            z: Vec4::new(f * ca, f * sa, g * cb, g * sb),
            z_u: Vec4::new(fd * ca, fd * sa, gd * cb, gd * sb),
            z_v: Vec4::new(-al * f * sa, al * f * ca, -be * g * sb, be * g * cb),
            z_uu: Vec4::new(fdd * ca, fdd * sa, gdd * cb, gdd * sb),
            z_uv: Vec4::new(-al * fd * sa, al * fd * ca, -be * gd * sb, be * gd * cb),
            z_vv: Vec4::new(
                -al * al * f * ca,
                -al * al * f * sa,
                -be * be * g * cb,
                -be * be * g * sb,
            ),
        }
    }))
}

/// Closed-form invariants of a generalized rotational surface, used as an
/// oracle against the generic pipeline. `M = 0` for this family and
///
/// ```text
/// k     = -4 a^2 b^2 A^2 B C / (G^3 E^3)
/// kappa =  a b A (G B - E C) / (G^2 E^2)
/// K     =  (G B C - a^2 b^2 E A^2) / (G^2 E^2)
/// ```
///
/// with `E = f'^2 + g'^2`, `G = a^2 f^2 + b^2 g^2`, `A = g f' - f g'`,
/// `B = g' f'' - f' g''`, `C = b^2 g f' - a^2 f g'`.
pub fn rotational_invariants_closed_form(
    spec: &RotationalSpec,
    p: ParamPoint,
) -> Result<InvariantSet> {
    let (f, fd, fdd) = spec.f.eval(p.u);
    let (g, gd, gdd) = spec.g.eval(p.u);
    let (al, be) = (spec.alpha, spec.beta);
    let e = fd * fd + gd * gd;
    let gg = al * al * f * f + be * be * g * g;
    if !(e > 0.0 && gg > 0.0) {
        return Err(Error::InvalidSpec(format!("degenerate at u = {}", p.u)));
    }
    let a = g * fd - f * gd;
    let b = gd * fdd - fd * gdd;
    let c = be * be * g * fd - al * al * f * gd;
    let k = -4.0 * al * al * be * be * a * a * b * c / (gg * gg * gg * e * e * e);
    let kappa = al * be * a * (gg * b - e * c) / (gg * gg * e * e);
    let gauss = (gg * c * b - al * al * be * be * e * a * a) / (gg * gg * e * e);
    // Normal coefficients in the frame {n1, n2} of this family:
    // c11 = (B/sqrt(E), 0), c12 = (0, a b A/sqrt(G)), c22 = (C/sqrt(E), 0).
    // F = 0, so H = (G c11 + E c22) / (2 E G), directed along n1.
    let h1 = (gg * b + e * c) / (2.0 * e * gg * e.sqrt());
    let (sa, ca) = (al * p.v).sin_cos();
    let (sb, cb) = (be * p.v).sin_cos();
    let n1 = Vec4::new(gd * ca, gd * sa, -fd * cb, -fd * sb).scale(1.0 / e.sqrt());
    let r = (kappa * kappa - k).max(0.0).sqrt();
    Ok(InvariantSet {
        k,
        kappa,
        gauss,
        mean: n1 * h1,
        mean_frame: [h1, 0.0],
        nu_hi: kappa + r,
        nu_lo: kappa - r,
    })
}

/// Frenet curvatures of the parametric circle-like curve `u = u0` of a
/// rotational surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetCurvatures {
    pub kappa1: f64,
    pub tau: f64,
    pub sigma: f64,
}

/// The three Frenet curvatures of the curve `v -> z(u0, v)`:
///
/// ```text
/// kappa1 = sqrt((a^2 al^4 + b^2 be^4) / (a^2 al^2 + b^2 be^2))
/// tau    = a b al be (al^2 - be^2) / (sqrt(a^2 al^4 + b^2 be^4) sqrt(a^2 al^2 + b^2 be^2))
/// sigma  = al be sqrt(a^2 al^2 + b^2 be^2) / sqrt(a^2 al^4 + b^2 be^4)
/// ```
///
/// with `a = f(u0)`, `b = g(u0)`. For `al = be` the curve is a circle and
/// `tau = 0`.
pub fn frenet_curvatures_u_const(spec: &RotationalSpec, u0: f64) -> Result<FrenetCurvatures> {
    let (a, _, _) = spec.f.eval(u0);
    let (b, _, _) = spec.g.eval(u0);
    let (al, be) = (spec.alpha, spec.beta);
    let q2 = a * a * al * al + b * b * be * be;
    let q4 = a * a * al * al * al * al + b * b * be * be * be * be;
    if !(q2 > 0.0) || !(q4 > 0.0) {
        return Err(Error::DegenerateCurve);
    }
    Ok(FrenetCurvatures {
        kappa1: (q4 / q2).sqrt(),
        tau: a * b * al * be * (al * al - be * be) / (q4.sqrt() * q2.sqrt()),
        sigma: al * be * q2.sqrt() / q4.sqrt(),
    })
}

// ---------------------------------------------------------------------------
// Reference surfaces
// ---------------------------------------------------------------------------

/// The flat plane `z = (u, v, 0, 0)`.
pub fn plane() -> SurfaceChart {
    SurfaceChart::from_jets(Domain::new(-5.0, 5.0, -5.0, 5.0), |u, v| Jet2 {
        z: Vec4::new(u, v, 0.0, 0.0),
        z_u: Vec4::basis(0),
        z_v: Vec4::basis(1),
        z_uu: Vec4::ZERO,
        z_uv: Vec4::ZERO,
        z_vv: Vec4::ZERO,
    })
}

/// Unit sphere inside the hyperplane `span{e1, e2, e3}`, colatitude `u`
/// and longitude `v`. Every point is flat in the four-space sense
/// (`L = M = N = 0`).
pub fn sphere3() -> SurfaceChart {
    SurfaceChart::from_jets(
        Domain::new(0.05, core::f64::consts::PI - 0.05, -7.0, 7.0),
        |u, v| {
            let (su, cu) = u.sin_cos();
            let (sv, cv) = v.sin_cos();
            Jet2 {
                z: Vec4::new(su * cv, su * sv, cu, 0.0),
                z_u: Vec4::new(cu * cv, cu * sv, -su, 0.0),
                z_v: Vec4::new(-su * sv, su * cv, 0.0, 0.0),
                z_uu: Vec4::new(-su * cv, -su * sv, -cu, 0.0),
                z_uv: Vec4::new(-cu * sv, cu * cv, 0.0, 0.0),
                z_vv: Vec4::new(-su * cv, -su * sv, 0.0, 0.0),
            }
        },
    )
}

/// Torus `(r1 cos u, r1 sin u, r2 cos v, r2 sin v)`; for `r1 = r2 = 1` the
/// Clifford torus with `k = -1`, `kappa = 0`, `K = 0` everywhere.
pub fn clifford(r1: f64, r2: f64) -> SurfaceChart {
    SurfaceChart::from_jets(Domain::new(-7.0, 7.0, -7.0, 7.0), move |u, v| {
        let (su, cu) = u.sin_cos();
        let (sv, cv) = v.sin_cos();
        Jet2 {
            z: Vec4::new(r1 * cu, r1 * su, r2 * cv, r2 * sv),
            z_u: Vec4::new(-r1 * su, r1 * cu, 0.0, 0.0),
            z_v: Vec4::new(0.0, 0.0, -r2 * sv, r2 * cv),
            z_uu: Vec4::new(-r1 * cu, -r1 * su, 0.0, 0.0),
            z_uv: Vec4::ZERO,
            z_vv: Vec4::new(0.0, 0.0, -r2 * cv, -r2 * sv),
        }
    })
}

/// Graph of the holomorphic square `w -> w^2`:
/// `z = (u, v, u^2 - v^2, 2uv)`. Minimal and super-conformal at every
/// point.
pub fn wsq() -> SurfaceChart {
    SurfaceChart::from_jets(Domain::new(-5.0, 5.0, -5.0, 5.0), |u, v| Jet2 {
        z: Vec4::new(u, v, u * u - v * v, 2.0 * u * v),
        z_u: Vec4::new(1.0, 0.0, 2.0 * u, 2.0 * v),
        z_v: Vec4::new(0.0, 1.0, -2.0 * v, 2.0 * u),
        z_uu: Vec4::new(0.0, 0.0, 2.0, 0.0),
        z_uv: Vec4::new(0.0, 0.0, 0.0, 2.0),
        z_vv: Vec4::new(0.0, 0.0, -2.0, 0.0),
    })
}

/// Synthetic test fixture: the rotational surface with `f = u`, `g = u^4`,
/// speeds `(1, 2)` on `u >= 1`, glued (discontinuously) to a flat plane
/// strip for `u < 1`. Grids straddling the seam exercise the `mixed`
/// surface verdicts.
pub fn mixed_demo() -> SurfaceChart {
    let spec = RotationalSpec {
        f: ProfileFn::Identity,
        g: ProfileFn::Power { coeff: 1.0, exponent: 4.0 },
        alpha: 1.0,
        beta: 2.0,
    };
    SurfaceChart::from_jets(Domain::new(0.2, 2.0, 0.2, 6.0), move |u, v| {
        if u >= 1.0 {
            let (f, fd, fdd) = spec.f.eval(u);
            let (g, gd, gdd) = spec.g.eval(u);
            let (sa, ca) = v.sin_cos();
            let (sb, cb) = (2.0 * v).sin_cos();
            Jet2 {
                z: Vec4::new(f * ca, f * sa, g * cb, g * sb),
                z_u: Vec4::new(fd * ca, fd * sa, gd * cb, gd * sb),
                z_v: Vec4::new(-f * sa, f * ca, -2.0 * g * sb, 2.0 * g * cb),
                z_uu: Vec4::new(fdd * ca, fdd * sa, gdd * cb, gdd * sb),
                z_uv: Vec4::new(-fd * sa, fd * ca, -2.0 * gd * sb, 2.0 * gd * cb),
                z_vv: Vec4::new(-f * ca, -f * sa, -4.0 * g * cb, -4.0 * g * sb),
            }
        } else {
            Jet2 {
                z: Vec4::new(u, v, 0.0, 0.0),
                z_u: Vec4::basis(0),
                z_v: Vec4::basis(1),
                z_uu: Vec4::ZERO,
                z_uv: Vec4::ZERO,
                z_vv: Vec4::ZERO,
            }
        }
    })
}

/// A named reference chart with its documented expected invariants.
pub struct ReferenceSurface {
    pub name: &'static str,
    pub chart: SurfaceChart,
    pub notes: &'static str,
}

/// The reference test corpus.
pub fn reference_surfaces() -> Vec<ReferenceSurface> {
    alloc::vec![
        ReferenceSurface {
            name: "plane",
            chart: plane(),
            notes: "flat points only; k = kappa = K = 0, H = 0",
        },
        ReferenceSurface {
            name: "sphere3",
            chart: sphere3(),
            notes: "hyperplanar; flat in the four-space sense (L = M = N = 0)",
        },
        ReferenceSurface {
            name: "clifford(1,1)",
            chart: clifford(1.0, 1.0),
            notes: "k = -1, kappa = 0, K = 0, |H| = sqrt(2)/2 everywhere",
        },
        ReferenceSurface {
            name: "wsq",
            chart: wsq(),
            notes: "minimal and super-conformal; H = 0, curvature ellipse a circle",
        },
    ]
}
