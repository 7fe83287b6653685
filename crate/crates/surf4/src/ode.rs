//! Generators for the special meridian profiles: constant Gauss curvature
//! (closed form), constant mean curvature and constant invariant `k`
//! (first-order ODEs `f' = y(f)` integrated by fixed-step classical
//! Runge-Kutta).
//!
//! The closed forms for `y(t)`:
//!
//! * constant mean curvature `|H| = a` with circle curvature `b`:
//!   `y(t) = sqrt(1 - (1/t^2)(C + (t/2) sqrt(4 a^2 t^2 - b^2)
//!          - (b^2/4a) ln|2 a t + sqrt(4 a^2 t^2 - b^2)|)^2)`
//! * constant invariant `k = -a^2` with circle curvature `b`:
//!   `y(t) = sqrt(1 - (C +- (a/b) t^2 / 2)^2)`
//!
//! Validity boundaries (vanishing radicands) are approached but never
//! crossed: the integrator stops when the radicand drops below `1e-10`.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::families::{MeridianProfile, ProfileJet};

/// Sign choice carried by the constant-`k` closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// Which profile family to generate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OdeKind {
    /// Constant Gauss curvature `K = k0 != 0`; closed-form profile
    /// `f = alpha0 cos(sqrt(k0) u) + beta0 sin(sqrt(k0) u)` (hyperbolic
    /// functions for `k0 < 0`). Not integrated; see
    /// [`constant_gauss_profile`].
    ConstantGauss { k0: f64, alpha0: f64, beta0: f64 },
    /// Constant mean curvature `|H| = a` on the circle of spherical
    /// curvature `b`, integration constant `c`.
    ConstantMean { a: f64, b: f64, c: f64 },
    /// Constant invariant `k = -a^2` on the circle of spherical curvature
    /// `b`, integration constant `c` and branch sign.
    ConstantInvariantK { a: f64, b: f64, c: f64, branch: Branch },
}

/// A profile-generation request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeProfileSpec {
    pub kind: OdeKind,
    pub u_start: f64,
    pub f_start: f64,
    /// Runge-Kutta step in `u`.
    pub step: f64,
    /// Maximum integration span in `u`.
    pub max_span: f64,
}

/// A profile integrated on a fixed `u` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegratedProfile {
    pub u: Vec<f64>,
    pub f: Vec<f64>,
    pub f_dot: Vec<f64>,
    pub g: Vec<f64>,
    pub spec: OdeProfileSpec,
}

/// Closed-form profile with constant Gauss curvature `k0 != 0`. The
/// profile solves `f'' + k0 f = 0`; `g` comes from quadrature. Fails with
/// `ProfileOutOfRange` when `f <= 0` or `|f'| >= 1` inside the requested
/// domain.
pub fn constant_gauss_profile(
    k0: f64,
    alpha0: f64,
    beta0: f64,
    domain: (f64, f64),
) -> Result<MeridianProfile> {
    if k0 == 0.0 {
        return Err(Error::InvalidSpec(format!("constant Gauss curvature must be nonzero")));
    }
    let triple = move |u: f64| -> (f64, f64, f64) {
        if k0 > 0.0 {
            let r = k0.sqrt();
            let (s, c) = (r * u).sin_cos();
            (
                alpha0 * c + beta0 * s,
                r * (-alpha0 * s + beta0 * c),
                -k0 * (alpha0 * c + beta0 * s),
            )
        } else {
            let r = (-k0).sqrt();
            let (s, c) = ((r * u).sinh(), (r * u).cosh());
            (
                alpha0 * c + beta0 * s,
                r * (alpha0 * s + beta0 * c),
                -k0 * (alpha0 * c + beta0 * s),
            )
        }
    };
    // Reject out-of-range domains before the generic profile validation so
    // the error pinpoints the first offending u.
    let samples = 1000;
    for i in 0..=samples {
        let u = domain.0 + (domain.1 - domain.0) * i as f64 / samples as f64;
        let (f, fd, _) = triple(u);
        if !(f > 0.0) || fd * fd >= 1.0 {
            return Err(Error::ProfileOutOfRange { u });
        }
    }
    MeridianProfile::from_f_triple(domain, triple)
}

/// The constant-mean-curvature closed form `y(t)` (see module docs).
pub fn cmc_y_of_t(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    cmc_p_and_radicand(a, b, c, t).map(|(_, rad)| rad.sqrt())
}

/// Derivative `dy/dt` of the constant-mean-curvature closed form.
pub fn cmc_y_prime(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    let (p, rad) = cmc_p_and_radicand(a, b, c, t)?;
    let y = rad.sqrt();
    if y * y < 1e-10 {
        return Err(Error::OutsideValidity(format!("turning point at t = {t}")));
    }
    let p_prime = (4.0 * a * a * t * t - b * b).sqrt();
    Ok((p * p / (t * t * t) - p * p_prime / (t * t)) / y)
}

fn cmc_p_and_radicand(a: f64, b: f64, c: f64, t: f64) -> Result<(f64, f64)> {
    if a == 0.0 {
        return Err(Error::InvalidSpec(format!("mean curvature a must be nonzero")));
    }
    if t == 0.0 {
        return Err(Error::OutsideValidity(format!("t must be nonzero")));
    }
    let r = 4.0 * a * a * t * t - b * b;
    if r < 0.0 {
        return Err(Error::OutsideValidity(format!(
            "4 a^2 t^2 - b^2 = {r} < 0 at t = {t}"
        )));
    }
    let sr = r.sqrt();
    let log_arg = (2.0 * a * t + sr).abs();
    if log_arg == 0.0 {
        return Err(Error::OutsideValidity(format!("log argument vanishes at t = {t}")));
    }
    let p = c + 0.5 * t * sr - b * b / (4.0 * a) * log_arg.ln();
    let inner = p / t;
    let rad = 1.0 - inner * inner;
    if rad < 0.0 {
        return Err(Error::OutsideValidity(format!(
            "inner radicand 1 - (P/t)^2 = {rad} < 0 at t = {t}"
        )));
    }
    Ok((p, rad))
}

/// The constant-`k` closed form `y(t) = sqrt(1 - (c +- (a/b) t^2/2)^2)`.
pub fn constant_k_y_of_t(a: f64, b: f64, c: f64, branch: Branch, t: f64) -> Result<f64> {
    constant_k_radicand(a, b, c, branch, t).map(|rad| rad.sqrt())
}

/// Derivative `dy/dt` of the constant-`k` closed form.
pub fn constant_k_y_prime(a: f64, b: f64, c: f64, branch: Branch, t: f64) -> Result<f64> {
    let rad = constant_k_radicand(a, b, c, branch, t)?;
    let y = rad.sqrt();
    if y * y < 1e-10 {
        return Err(Error::OutsideValidity(format!("turning point at t = {t}")));
    }
    let q = c + branch.sign() * (a / b) * t * t / 2.0;
    let q_prime = branch.sign() * (a / b) * t;
    Ok(-q * q_prime / y)
}

fn constant_k_radicand(a: f64, b: f64, c: f64, branch: Branch, t: f64) -> Result<f64> {
    if a == 0.0 || b == 0.0 {
        return Err(Error::InvalidSpec(format!("parameters a, b must be nonzero")));
    }
    let q = c + branch.sign() * (a / b) * t * t / 2.0;
    let rad = 1.0 - q * q;
    if rad < 0.0 {
        return Err(Error::OutsideValidity(format!(
            "radicand 1 - Q^2 = {rad} < 0 at t = {t}"
        )));
    }
    Ok(rad)
}

fn y_of(kind: &OdeKind, t: f64) -> Result<f64> {
    match *kind {
        OdeKind::ConstantMean { a, b, c } => cmc_y_of_t(a, b, c, t),
        OdeKind::ConstantInvariantK { a, b, c, branch } => constant_k_y_of_t(a, b, c, branch, t),
        OdeKind::ConstantGauss { .. } => Err(Error::InvalidSpec(format!(
            "constant Gauss curvature profiles are closed-form; use constant_gauss_profile"
        ))),
    }
}

fn y_prime_of(kind: &OdeKind, t: f64) -> Result<f64> {
    match *kind {
        OdeKind::ConstantMean { a, b, c } => cmc_y_prime(a, b, c, t),
        OdeKind::ConstantInvariantK { a, b, c, branch } => constant_k_y_prime(a, b, c, branch, t),
        OdeKind::ConstantGauss { .. } => Err(Error::InvalidSpec(format!(
            "constant Gauss curvature profiles are closed-form"
        ))),
    }
}

/// Integrates `f' = y(f)` (and `g' = sqrt(1 - y(f)^2)` alongside) with
/// fixed-step classical fourth-order Runge-Kutta, starting from
/// `(u_start, f_start)`.
///
/// Stops at `max_span` or at the validity boundary (radicand below
/// `1e-10`), whichever comes first; the boundary is never crossed. Fails
/// with `OutsideValidity` when the start point itself is invalid
/// (`y(f_start)` must lie in `(0, 1)`) and with `StepTooLarge` when one
/// step moves further than the arc-length bound allows.
pub fn integrate_profile(spec: &OdeProfileSpec) -> Result<IntegratedProfile> {
    if !(spec.step > 0.0) || !(spec.max_span > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "step {} and max_span {} must be positive",
            spec.step, spec.max_span
        )));
    }
    let y0 = y_of(&spec.kind, spec.f_start)?;
    if !(y0 > 0.0 && y0 < 1.0) {
        return Err(Error::OutsideValidity(format!(
            "y(f_start) = {y0} must lie in (0, 1)"
        )));
    }
    let h = spec.step;
    let steps = (spec.max_span / h).ceil() as usize;
    let mut u = Vec::with_capacity(steps + 1);
    let mut f = Vec::with_capacity(steps + 1);
    let mut f_dot = Vec::with_capacity(steps + 1);
    let mut g = Vec::with_capacity(steps + 1);
    u.push(spec.u_start);
    f.push(spec.f_start);
    f_dot.push(y0);
    g.push(0.0);

    // Stage evaluation; None signals the validity boundary.
    let rhs = |t: f64| -> Option<(f64, f64)> {
        let y = y_of(&spec.kind, t).ok()?;
        if y * y < 1e-10 {
            return None;
        }
        Some((y, (1.0 - y * y).max(0.0).sqrt()))
    };
    let mut fi = spec.f_start;
    let mut gi = 0.0;
    for i in 0..steps {
        let stage = (|| {
            let k1 = rhs(fi)?;
            let k2 = rhs(fi + 0.5 * h * k1.0)?;
            let k3 = rhs(fi + 0.5 * h * k2.0)?;
            let k4 = rhs(fi + h * k3.0)?;
            Some((
                (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0) / 6.0,
                (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1) / 6.0,
            ))
        })();
        let (df, dg) = match stage {
            Some(s) => s,
            None => break, // validity boundary reached; keep the last valid node
        };
        let f_next = fi + h * df;
        let g_next = gi + h * dg;
        let y_next = match rhs(f_next) {
            Some((y, _)) => y,
            None => break,
        };
        // Unit-speed profiles advance at most the arc length per step.
        let chord = ((f_next - fi).powi(2) + (g_next - gi).powi(2)).sqrt();
        if chord > 1.05 * h + 1e-12 {
            return Err(Error::StepTooLarge { step: h });
        }
        fi = f_next;
        gi = g_next;
        u.push(spec.u_start + (i + 1) as f64 * h);
        f.push(fi);
        f_dot.push(y_next);
        g.push(gi);
    }
    Ok(IntegratedProfile { u, f, f_dot, g, spec: *spec })
}

/// Wraps an integrated profile as a meridian profile with jets.
///
/// `f` and `g` are interpolated by cubic Hermite on the integration grid;
/// `f'` and `f''` come from the closed forms `y(f)` and `y'(f) y(f)`, so
/// the arc-length constraint holds exactly.
pub fn profile_from_integrated(p: &IntegratedProfile) -> Result<MeridianProfile> {
    if p.u.len() < 2 {
        return Err(Error::InvalidSpec(format!(
            "integrated profile needs at least two nodes, got {}",
            p.u.len()
        )));
    }
    let h = p.spec.step;
    let u0 = p.u[0];
    let n = p.u.len() - 1;
    let f = p.f.clone();
    let fd = p.f_dot.clone();
    let g = p.g.clone();
    let gd: Vec<f64> = fd.iter().map(|y| (1.0 - y * y).max(0.0).sqrt()).collect();
    let kind = p.spec.kind;
    let eval = move |uu: f64| -> ProfileJet {
        let idx = (((uu - u0) / h).floor() as isize).clamp(0, n as isize - 1) as usize;
        let t = (uu - (u0 + idx as f64 * h)) / h;
        let hermite = |y0: f64, y1: f64, m0: f64, m1: f64| {
            let t2 = t * t;
            let t3 = t2 * t;
            y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
                + m0 * h * (t3 - 2.0 * t2 + t)
                + y1 * (-2.0 * t3 + 3.0 * t2)
                + m1 * h * (t3 - t2)
        };
        let fv = hermite(f[idx], f[idx + 1], fd[idx], fd[idx + 1]);
        let gv = hermite(g[idx], g[idx + 1], gd[idx], gd[idx + 1]);
        let y = y_of(&kind, fv).unwrap_or(0.0);
        let yp = y_prime_of(&kind, fv).unwrap_or(0.0);
        let f_ddot = yp * y;
        let g_dot = (1.0 - y * y).max(0.0).sqrt();
        let g_ddot = if g_dot > 0.0 { -y * f_ddot / g_dot } else { 0.0 };
        ProfileJet { f: fv, f_dot: y, f_ddot, g: gv, g_dot, g_ddot }
    };
    Ok(MeridianProfile::from_raw((p.u[0], p.u[n]), eval))
}

/// Maximum residual of the constant-`k` profile equation
/// `f''/sqrt(1 - f'^2) = -+ (a/b) f` over the interior grid nodes.
///
/// Both derivatives are recomputed from the `f` grid by central finite
/// differences, independently of the stored slopes, so the check detects
/// corrupted profiles. The branch sign comes from the profile metadata
/// (`Plus` when the profile was not generated by the constant-`k` flow).
pub fn constant_k_ode_residual(profile: &IntegratedProfile, a: f64, b: f64) -> f64 {
    let sign = match profile.spec.kind {
        OdeKind::ConstantInvariantK { branch, .. } => branch.sign(),
        _ => 1.0,
    };
    let h = profile.spec.step;
    let f = &profile.f;
    let mut worst = 0.0_f64;
    for i in 1..f.len().saturating_sub(1) {
        let fd = (f[i + 1] - f[i - 1]) / (2.0 * h);
        let fdd = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
        let gd = (1.0 - fd * fd).max(1e-12).sqrt();
        let residual = (fdd / gd + sign * (a / b) * f[i]).abs();
        worst = worst.max(residual);
    }
    worst
}
