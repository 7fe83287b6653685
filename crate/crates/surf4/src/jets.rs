//! Parametric charts over rectangular domains and their 2-jets.
//!
//! A [`SurfaceChart`] wraps an evaluator producing positions in `R^4` (and
//! optionally analytic jets) over a rectangle `[u0,u1] x [v0,v1]`.
//! [`evaluate_jet`] returns the position together with first and second
//! partials, either straight from the analytic evaluator or by central
//! finite differences on positions.

use alloc::boxed::Box;
use alloc::format;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::Vec4;

/// A point in the parameter rectangle of a chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPoint {
    pub u: f64,
    pub v: f64,
}

impl ParamPoint {
    pub fn new(u: f64, v: f64) -> Self {
        ParamPoint { u, v }
    }
}

/// Position and first/second partial derivatives of a chart at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet2 {
    pub z: Vec4,
    pub z_u: Vec4,
    pub z_v: Vec4,
    pub z_uu: Vec4,
    pub z_uv: Vec4,
    pub z_vv: Vec4,
}

/// Rectangular parameter domain `[u0,u1] x [v0,v1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

impl Domain {
    pub fn new(u0: f64, u1: f64, v0: f64, v1: f64) -> Self {
        Domain { u0, u1, v0, v1 }
    }

    /// Largest side length of the rectangle.
    pub fn extent(&self) -> f64 {
        (self.u1 - self.u0).max(self.v1 - self.v0)
    }

    /// True when `p` lies at distance more than `margin` from every edge.
    pub fn contains_with_margin(&self, p: ParamPoint, margin: f64) -> bool {
        p.u > self.u0 + margin
            && p.u < self.u1 - margin
            && p.v > self.v0 + margin
            && p.v < self.v1 - margin
    }

    pub fn contains_strict(&self, p: ParamPoint) -> bool {
        self.contains_with_margin(p, 0.0)
    }
}

/// How jets are produced: straight from the evaluator or by central
/// differences on positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetMode {
    Analytic,
    FiniteDifference,
}

/// Step sizes for the finite-difference stencils: `h1` for first partials,
/// `h2` for second partials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdSteps {
    pub h1: f64,
    pub h2: f64,
}

impl FdSteps {
    /// Defaults balancing truncation against roundoff for second
    /// derivatives in double precision.
    pub fn defaults(extent: f64) -> Self {
        let s = extent.max(1.0);
        FdSteps { h1: 1e-5 * s, h2: 5e-4 * s }
    }
}

/// Chart evaluator. `position` must be deterministic (same input, bitwise
/// identical output); `analytic_jet` is `None` for charts known only
/// through positions.
pub trait ChartEval: Send + Sync {
    fn position(&self, u: f64, v: f64) -> Vec4;

    fn analytic_jet(&self, u: f64, v: f64) -> Option<Jet2> {
        let _ = (u, v);
        None
    }
}

struct JetFn<F>(F);

impl<F: Fn(f64, f64) -> Jet2 + Send + Sync> ChartEval for JetFn<F> {
    fn position(&self, u: f64, v: f64) -> Vec4 {
        (self.0)(u, v).z
    }

    fn analytic_jet(&self, u: f64, v: f64) -> Option<Jet2> {
        Some((self.0)(u, v))
    }
}

struct PositionFn<F>(F);

impl<F: Fn(f64, f64) -> Vec4 + Send + Sync> ChartEval for PositionFn<F> {
    fn position(&self, u: f64, v: f64) -> Vec4 {
        (self.0)(u, v)
    }
}

/// A parametric surface chart: evaluator, domain, jet mode and
/// finite-difference steps. Immutable after construction and safe to share
/// across threads.
pub struct SurfaceChart {
    domain: Domain,
    eval: Box<dyn ChartEval>,
    jet_mode: JetMode,
    fd: FdSteps,
}

impl SurfaceChart {
    /// Chart with analytic jets.
    pub fn from_jets<F>(domain: Domain, f: F) -> Self
    where
        F: Fn(f64, f64) -> Jet2 + Send + Sync + 'static,
    {
        SurfaceChart {
            domain,
            eval: Box::new(JetFn(f)),
            jet_mode: JetMode::Analytic,
            fd: FdSteps::defaults(domain.extent()),
        }
    }

    /// Chart known only through positions; jets come from finite
    /// differences.
    pub fn from_positions<F>(domain: Domain, f: F) -> Self
    where
        F: Fn(f64, f64) -> Vec4 + Send + Sync + 'static,
    {
        SurfaceChart {
            domain,
            eval: Box::new(PositionFn(f)),
            jet_mode: JetMode::FiniteDifference,
            fd: FdSteps::defaults(domain.extent()),
        }
    }

    pub fn from_eval(domain: Domain, eval: Box<dyn ChartEval>, jet_mode: JetMode) -> Self {
        SurfaceChart {
            domain,
            eval,
            jet_mode,
            fd: FdSteps::defaults(domain.extent()),
        }
    }

    /// Switches the jet mode. Finite-difference mode works for every chart;
    /// analytic mode requires an evaluator that provides jets.
    pub fn with_jet_mode(mut self, mode: JetMode) -> Self {
        self.jet_mode = mode;
        self
    }

    /// Restricts (or re-declares) the parameter domain. The evaluator must
    /// be defined on the new rectangle; default fd steps are rescaled.
    pub fn with_domain(mut self, domain: Domain) -> Result<Self> {
        if !(domain.u1 > domain.u0 && domain.v1 > domain.v0) {
            return Err(Error::InvalidSpec(format!(
                "empty domain [{}, {}] x [{}, {}]",
                domain.u0, domain.u1, domain.v0, domain.v1
            )));
        }
        self.domain = domain;
        self.fd = FdSteps::defaults(domain.extent());
        Ok(self)
    }

    /// Overrides the finite-difference steps. Steps must be positive and
    /// smaller than 1% of the domain extent.
    pub fn with_fd_steps(mut self, fd: FdSteps) -> Result<Self> {
        let cap = 0.01 * self.domain.extent();
        if !(fd.h1 > 0.0 && fd.h2 > 0.0 && fd.h1 < cap && fd.h2 < cap) {
            return Err(Error::InvalidSpec(format!(
                "fd steps ({}, {}) must be positive and below 1% of the domain extent",
                fd.h1, fd.h2
            )));
        }
        self.fd = fd;
        Ok(self)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn jet_mode(&self) -> JetMode {
        self.jet_mode
    }

    pub fn fd_steps(&self) -> FdSteps {
        self.fd
    }

    pub fn position(&self, p: ParamPoint) -> Vec4 {
        self.eval.position(p.u, p.v)
    }

    /// The chart with a rigid motion `z -> R z + t` applied to the ambient
    /// space. Analytic jets transform covariantly.
    pub fn transformed(self, rot: [[f64; 4]; 4], shift: Vec4) -> SurfaceChart {
        let apply = move |v: Vec4| -> Vec4 {
            let mut out = [0.0; 4];
            for (i, row) in rot.iter().enumerate() {
                out[i] = row[0] * v.0[0] + row[1] * v.0[1] + row[2] * v.0[2] + row[3] * v.0[3];
            }
            Vec4(out)
        };
        struct Transformed<A> {
            inner: Box<dyn ChartEval>,
            apply: A,
            shift: Vec4,
        }
        impl<A: Fn(Vec4) -> Vec4 + Send + Sync> ChartEval for Transformed<A> {
            fn position(&self, u: f64, v: f64) -> Vec4 {
                (self.apply)(self.inner.position(u, v)) + self.shift
            }
            fn analytic_jet(&self, u: f64, v: f64) -> Option<Jet2> {
                self.inner.analytic_jet(u, v).map(|j| Jet2 {
                    z: (self.apply)(j.z) + self.shift,
                    z_u: (self.apply)(j.z_u),
                    z_v: (self.apply)(j.z_v),
                    z_uu: (self.apply)(j.z_uu),
                    z_uv: (self.apply)(j.z_uv),
                    z_vv: (self.apply)(j.z_vv),
                })
            }
        }
        SurfaceChart {
            domain: self.domain,
            eval: Box::new(Transformed { inner: self.eval, apply, shift }),
            jet_mode: self.jet_mode,
            fd: self.fd,
        }
    }

    /// The chart precomposed with the affine parameter change
    /// `(s, t) -> (a s + b t + c, d s + e t + f)`. Jets follow the chain
    /// rule. `new_domain` must map inside the original domain.
    pub fn reparameterized(self, coeffs: [f64; 6], new_domain: Domain) -> SurfaceChart {
        struct Reparam {
            inner: Box<dyn ChartEval>,
            c: [f64; 6],
        }
        impl Reparam {
            fn map(&self, s: f64, t: f64) -> (f64, f64) {
                let [a, b, c, d, e, f] = self.c;
                (a * s + b * t + c, d * s + e * t + f)
            }
        }
        impl ChartEval for Reparam {
            fn position(&self, s: f64, t: f64) -> Vec4 {
                let (u, v) = self.map(s, t);
                self.inner.position(u, v)
            }
            fn analytic_jet(&self, s: f64, t: f64) -> Option<Jet2> {
                let (u, v) = self.map(s, t);
                let [a, b, _, d, e, _] = self.c;
                self.inner.analytic_jet(u, v).map(|j| Jet2 {
                    z: j.z,
                    z_u: j.z_u * a + j.z_v * d,
                    z_v: j.z_u * b + j.z_v * e,
                    z_uu: j.z_uu * (a * a) + j.z_uv * (2.0 * a * d) + j.z_vv * (d * d),
                    z_uv: j.z_uu * (a * b) + j.z_uv * (a * e + b * d) + j.z_vv * (d * e),
                    z_vv: j.z_uu * (b * b) + j.z_uv * (2.0 * b * e) + j.z_vv * (e * e),
                })
            }
        }
        SurfaceChart {
            domain: new_domain,
            eval: Box::new(Reparam { inner: self.eval, c: coeffs }),
            jet_mode: self.jet_mode,
            fd: self.fd,
        }
    }
}

/// Norm of `z_u ^ z_v`, i.e. the area element `W`.
pub fn wedge_norm(z_u: Vec4, z_v: Vec4) -> f64 {
    let g = z_u.norm_sq() * z_v.norm_sq() - z_u.dot(z_v) * z_u.dot(z_v);
    g.max(0.0).sqrt()
}

/// Scale-aware regularity threshold on `|z_u ^ z_v|`.
pub fn regularity_threshold(z_u: Vec4, z_v: Vec4) -> f64 {
    1e-10 * (z_u.norm() * z_v.norm() + 1.0)
}

/// Evaluates the 2-jet of `chart` at `p`.
///
/// Analytic mode evaluates the chart's own jet; finite-difference mode uses
/// central stencils on positions: symmetric 2-point for first partials
/// (step `h1`), symmetric 3-point for pure second partials and the 4-point
/// cross for the mixed partial (step `h2`).
pub fn evaluate_jet(chart: &SurfaceChart, p: ParamPoint) -> Result<Jet2> {
    let jet = match chart.jet_mode {
        JetMode::Analytic => {
            if !chart.domain.contains_strict(p) {
                return Err(Error::DomainViolation { u: p.u, v: p.v });
            }
            chart.eval.analytic_jet(p.u, p.v).ok_or_else(|| {
                Error::InvalidSpec(alloc::string::String::from(
                    "chart provides no analytic jets; use finite-difference mode",
                ))
            })?
        }
        JetMode::FiniteDifference => {
            let h1 = chart.fd.h1;
            let h2 = chart.fd.h2;
            if !chart.domain.contains_with_margin(p, 2.0 * h2) {
                return Err(Error::DomainViolation { u: p.u, v: p.v });
            }
            let f = |u: f64, v: f64| chart.eval.position(u, v);
            let (u, v) = (p.u, p.v);
            let z = f(u, v);
            let z_u = (f(u + h1, v) - f(u - h1, v)).scale(1.0 / (2.0 * h1));
            let z_v = (f(u, v + h1) - f(u, v - h1)).scale(1.0 / (2.0 * h1));
            let z_uu = (f(u + h2, v) - z.scale(2.0) + f(u - h2, v)).scale(1.0 / (h2 * h2));
            let z_vv = (f(u, v + h2) - z.scale(2.0) + f(u, v - h2)).scale(1.0 / (h2 * h2));
            let z_uv = (f(u + h2, v + h2) - f(u + h2, v - h2) - f(u - h2, v + h2)
                + f(u - h2, v - h2))
            .scale(1.0 / (4.0 * h2 * h2));
            Jet2 { z, z_u, z_v, z_uu, z_uv, z_vv }
        }
    };
    let w = wedge_norm(jet.z_u, jet.z_v);
    if w <= regularity_threshold(jet.z_u, jet.z_v) {
        return Err(Error::DegenerateChart { w });
    }
    Ok(jet)
}
