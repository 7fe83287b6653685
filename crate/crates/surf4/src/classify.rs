//! Pointwise and surface-level classification.
//!
//! The invariants `k` and `kappa` split points into four types: flat
//! (`L = M = N = 0`), elliptic (`k > 0`), hyperbolic (`k < 0`) and
//! parabolic (`k = 0`, not flat). Surface-level verdicts are grid-sampled
//! tri-states for the minimal / flat-normal-connection / super-conformal /
//! flat-points-only predicates.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::ellipse::{curvature_ellipse, EllipseKind};
use crate::error::Result;
use crate::forms::{point_forms, FundamentalData, InvariantSet};
use crate::jets::{evaluate_jet, ParamPoint, SurfaceChart};

/// Point type in the `(k, kappa)` classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Flat,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl PointKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointKind::Flat => "flat",
            PointKind::Elliptic => "elliptic",
            PointKind::Parabolic => "parabolic",
            PointKind::Hyperbolic => "hyperbolic",
        }
    }
}

/// Classification of one point together with the margins that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointType {
    pub kind: PointKind,
    pub k: f64,
    pub kappa: f64,
    /// Threshold used for the sign tests.
    pub threshold: f64,
}

/// Default pointwise threshold: `1e-7 (1 + |k| + |kappa|)`.
pub fn default_point_tau(inv: &InvariantSet) -> f64 {
    1e-7 * (1.0 + inv.k.abs() + inv.kappa.abs())
}

/// Base factor for [`default_point_tau`], exposed for callers that rescale
/// it themselves.
pub const DEFAULT_TAU_BASE: f64 = 1e-7;

/// Classifies one point with threshold `tau`: flat when `|k|`, `|kappa|`
/// and all of `L, M, N` stay below `tau`; elliptic when `k > tau`;
/// hyperbolic when `k < -tau`; parabolic otherwise.
pub fn classify_point(inv: &InvariantSet, fd: &FundamentalData, tau: f64) -> PointType {
    let kind = if inv.k.abs() <= tau && inv.kappa.abs() <= tau && fd.is_flat(tau) {
        PointKind::Flat
    } else if inv.k > tau {
        PointKind::Elliptic
    } else if inv.k < -tau {
        PointKind::Hyperbolic
    } else {
        PointKind::Parabolic
    };
    PointType { kind, k: inv.k, kappa: inv.kappa, threshold: tau }
}

/// Yes / no / mixed verdicts for grid-sampled predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    Mixed,
}

impl TriState {
    pub fn as_str(&self) -> &'static str {
        match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Mixed => "mixed",
        }
    }
}

fn fold_tristate(mut it: impl Iterator<Item = bool>) -> TriState {
    let first = match it.next() {
        Some(b) => b,
        None => return TriState::No,
    };
    for b in it {
        if b != first {
            return TriState::Mixed;
        }
    }
    if first {
        TriState::Yes
    } else {
        TriState::No
    }
}

/// A rectangular sampling grid, iterated in row-major order (`u` outer,
/// `v` inner).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub u_min: f64,
    pub u_max: f64,
    pub u_count: usize,
    pub v_min: f64,
    pub v_max: f64,
    pub v_count: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<ParamPoint> {
        let mut pts = Vec::with_capacity(self.u_count * self.v_count);
        for i in 0..self.u_count {
            let u = self.u_min + (self.u_max - self.u_min) * i as f64 / (self.u_count - 1) as f64;
            for j in 0..self.v_count {
                let v =
                    self.v_min + (self.v_max - self.v_min) * j as f64 / (self.v_count - 1) as f64;
                pts.push(ParamPoint::new(u, v));
            }
        }
        pts
    }

    pub fn is_valid(&self) -> bool {
        self.u_count >= 2 && self.v_count >= 2 && self.u_max > self.u_min && self.v_max > self.v_min
    }
}

/// Per-point outcome recorded by [`classify_surface`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleOutcome {
    pub point: ParamPoint,
    pub k: f64,
    pub kappa: f64,
    pub gauss: f64,
    pub flat: bool,
    /// `kappa^2 - k <= tau'` (umbilic condition).
    pub minimal_ok: bool,
    /// `|kappa| <= tau'` (flat normal connection condition).
    pub fnc_ok: bool,
    /// The curvature ellipse is a circle.
    pub circle_ok: bool,
    /// `|k|, |kappa|, |K| <= tau` (necessary condition for developability).
    pub developable_ok: bool,
}

/// Grid-sampled surface verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceVerdict {
    pub minimal: TriState,
    pub flat_normal_connection: TriState,
    pub super_conformal: TriState,
    pub flat_points_only: TriState,
    pub grid: GridSpec,
    /// Grid points violating some predicate whose verdict came out
    /// no/mixed, in row-major order, deduplicated, at most eight per
    /// predicate.
    pub counterexamples: Vec<ParamPoint>,
    pub samples: Vec<SampleOutcome>,
}

/// Evaluates the whole grid and folds the per-point conditions into
/// tri-state verdicts. `tau_base` is rescaled pointwise to
/// `tau = tau_base (1 + |k| + |kappa|)`; surface-level conditions use
/// `tau' = 10 tau`. Evaluation errors propagate with the offending grid
/// point (the parameter point is part of the error where it applies).
pub fn classify_surface(
    chart: &SurfaceChart,
    grid: &GridSpec,
    tau_base: f64,
) -> Result<SurfaceVerdict> {
    use crate::error::Error;
    if !grid.is_valid() {
        return Err(Error::InvalidSpec(alloc::format!(
            "grid counts must be >= 2 and ranges nonempty: {grid:?}"
        )));
    }
    let mut samples = Vec::with_capacity(grid.u_count * grid.v_count);
    for p in grid.points() {
        let jet = evaluate_jet(chart, p)?;
        let pf = point_forms(&jet)?;
        let tau = tau_base * (1.0 + pf.inv.k.abs() + pf.inv.kappa.abs());
        let tau_surface = 10.0 * tau;
        let pt = classify_point(&pf.inv, &pf.fd, tau);
        let ell = curvature_ellipse(&jet, &pf.frame, &pf.dec)?;
        samples.push(SampleOutcome {
            point: p,
            k: pf.inv.k,
            kappa: pf.inv.kappa,
            gauss: pf.inv.gauss,
            flat: pt.kind == PointKind::Flat,
            minimal_ok: pf.inv.kappa * pf.inv.kappa - pf.inv.k <= tau_surface,
            fnc_ok: pf.inv.kappa.abs() <= tau_surface,
            circle_ok: ell.kind == EllipseKind::Circle,
            developable_ok: pf.inv.k.abs() <= tau
                && pf.inv.kappa.abs() <= tau
                && pf.inv.gauss.abs() <= tau,
        });
    }

    let minimal = fold_tristate(samples.iter().map(|s| s.minimal_ok));
    let any_nonflat = samples.iter().any(|s| !s.flat);
    let fnc_all = samples.iter().all(|s| s.fnc_ok);
    let flat_normal_connection = if fnc_all && any_nonflat {
        TriState::Yes
    } else if fnc_all {
        // |kappa| vanishes everywhere but only because every point is flat.
        TriState::No
    } else {
        fold_tristate(samples.iter().map(|s| s.fnc_ok))
    };
    let super_conformal = fold_tristate(samples.iter().map(|s| s.circle_ok));
    let flat_points_only = fold_tristate(samples.iter().map(|s| s.flat));

    let mut counterexamples: Vec<ParamPoint> = Vec::new();
    let mut collect = |verdict: TriState, fails: &mut dyn Iterator<Item = ParamPoint>| {
        if verdict == TriState::Yes {
            return;
        }
        for p in fails.take(8) {
            if !counterexamples.iter().any(|q| q == &p) {
                counterexamples.push(p);
            }
        }
    };
    collect(
        minimal,
        &mut samples.iter().filter(|s| !s.minimal_ok).map(|s| s.point),
    );
    collect(
        flat_normal_connection,
        &mut samples.iter().filter(|s| !s.fnc_ok).map(|s| s.point),
    );
    collect(
        super_conformal,
        &mut samples.iter().filter(|s| !s.circle_ok).map(|s| s.point),
    );
    collect(
        flat_points_only,
        &mut samples.iter().filter(|s| !s.flat).map(|s| s.point),
    );

    Ok(SurfaceVerdict {
        minimal,
        flat_normal_connection,
        super_conformal,
        flat_points_only,
        grid: *grid,
        counterexamples,
        samples,
    })
}

/// Necessary-condition check for developability: `k`, `kappa` and `K` all
/// below threshold at every grid point. (The planar vs developable-ruled
/// distinction is out of scope; this is the invariant-vanishing test
/// only.)
pub fn developable_check(verdict: &SurfaceVerdict) -> TriState {
    fold_tristate(verdict.samples.iter().map(|s| s.developable_ok))
}
