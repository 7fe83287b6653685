//! Numerical engine for the local theory of surfaces in the four-dimensional
//! Euclidean space.
//!
//! Given a parametric chart `z(u,v)` with values in `R^4`, the crate computes
//! the full invariant apparatus at any regular point:
//!
//! * first and second fundamental data `E, F, G, W, L, M, N` ([`forms`]),
//! * the Weingarten-type map and the invariants `k`, `kappa` (curvature of the
//!   normal connection), the Gauss curvature `K` and the mean curvature
//!   vector `H`,
//! * tangent-direction analysis: normal curvature, conjugate / asymptotic /
//!   principal tangents and the Euler formula ([`directions`]),
//! * the tangent indicatrix, a conic in the tangent plane ([`indicatrix`]),
//! * the ellipse of normal curvature in the normal plane ([`ellipse`]),
//! * pointwise and surface-level classification ([`classify`]),
//! * constructors for meridian surfaces on a rotational hypersurface and for
//!   generalized rotational surfaces, with closed-form invariant oracles
//!   ([`families`]),
//! * ODE generators for special meridian profiles: constant Gauss curvature,
//!   constant mean curvature, constant invariant `k` ([`ode`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); enable the default
//! `std` feature for the standard-library float implementations.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod classify;
pub mod directions;
pub mod ellipse;
pub mod error;
pub mod families;
pub mod forms;
pub mod indicatrix;
pub mod jets;
pub mod linalg;
pub mod ode;

pub use error::{Error, Result};
pub use jets::{evaluate_jet, Domain, Jet2, JetMode, ParamPoint, SurfaceChart};
pub use linalg::{wedge4, Vec4};
