//! JSON surface and profile specifications consumed by the CLI.
//!
//! Surface spec:
//!
//! ```json
//! {
//!   "family": "clifford",
//!   "params": { "r1": 1.0, "r2": 1.0 },
//!   "domain": [0.0, 6.28, 0.0, 6.28],
//!   "jet_mode": "analytic"
//! }
//! ```
//!
//! See the README for the full family and parameter tables.

use serde::Deserialize;
use surf4::families::{
    self, MeridianProfile, MeridianSpec, ProfileFn, RotationalSpec, SphericalCurve,
};
use surf4::jets::{Domain, FdSteps, JetMode, SurfaceChart};
use surf4::linalg::Vec4;
use surf4::ode;

use crate::expr::Expr;
use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpecFile {
    pub family: String,
    #[serde(default)]
    pub params: serde_json::Value,
    /// `[u0, u1, v0, v1]`
    pub domain: [f64; 4],
    #[serde(default)]
    pub jet_mode: Option<JetModeSpec>,
    /// Optional `[h1, h2]` override for finite differences.
    #[serde(default)]
    pub fd_steps: Option<[f64; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum JetModeSpec {
    #[serde(rename = "analytic")]
    Analytic,
    #[serde(rename = "fd")]
    FiniteDifference,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CliffordParams {
    #[serde(default = "one")]
    r1: f64,
    #[serde(default = "one")]
    r2: f64,
}

fn one() -> f64 {
    1.0
}

fn default_step() -> f64 {
    1e-3
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveSpec {
    GreatCircle,
    Circle { curvature: f64 },
}

impl CurveSpec {
    fn build(&self) -> SphericalCurve {
        match self {
            CurveSpec::GreatCircle => SphericalCurve::great_circle(),
            CurveSpec::Circle { curvature } => SphericalCurve::circle(*curvature),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProfileSpec {
    /// `f = cos u`, `g = sin u`.
    Sphere,
    /// `f = f0 + u cos(angle)`, `g = u sin(angle)`.
    Linear { angle: f64, f0: f64 },
    /// Constant Gauss curvature profile on the chart's `u` range.
    ConstantGauss {
        #[serde(rename = "K")]
        k: f64,
        alpha0: f64,
        beta0: f64,
    },
    /// Constant mean curvature profile, integrated from `(u_start, f_start)`.
    Cmc {
        a: f64,
        b: f64,
        #[serde(rename = "C", default)]
        c: f64,
        u_start: f64,
        f_start: f64,
        #[serde(default = "default_step")]
        step: f64,
        max_span: f64,
    },
    /// Constant invariant `k = -a^2` profile.
    ConstantK {
        a: f64,
        b: f64,
        #[serde(rename = "C", default)]
        c: f64,
        branch: BranchSpec,
        u_start: f64,
        f_start: f64,
        #[serde(default = "default_step")]
        step: f64,
        max_span: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchSpec {
    Plus,
    Minus,
}

impl From<BranchSpec> for ode::Branch {
    fn from(b: BranchSpec) -> ode::Branch {
        match b {
            BranchSpec::Plus => ode::Branch::Plus,
            BranchSpec::Minus => ode::Branch::Minus,
        }
    }
}

impl ProfileSpec {
    fn build(&self, u_range: (f64, f64)) -> Result<MeridianProfile, CliError> {
        match self {
            ProfileSpec::Sphere => Ok(MeridianProfile::sphere()),
            ProfileSpec::Linear { angle, f0 } => {
                MeridianProfile::linear(*angle, *f0, u_range).map_err(CliError::input)
            }
            ProfileSpec::ConstantGauss { k, alpha0, beta0 } => {
                ode::constant_gauss_profile(*k, *alpha0, *beta0, u_range)
                    .map_err(CliError::ode_validity)
            }
            ProfileSpec::Cmc { a, b, c, u_start, f_start, step, max_span } => {
                let spec = ode::OdeProfileSpec {
                    kind: ode::OdeKind::ConstantMean { a: *a, b: *b, c: *c },
                    u_start: *u_start,
                    f_start: *f_start,
                    step: *step,
                    max_span: *max_span,
                };
                let integrated = ode::integrate_profile(&spec).map_err(CliError::ode_validity)?;
                ode::profile_from_integrated(&integrated).map_err(CliError::ode_validity)
            }
            ProfileSpec::ConstantK { a, b, c, branch, u_start, f_start, step, max_span } => {
                let spec = ode::OdeProfileSpec {
                    kind: ode::OdeKind::ConstantInvariantK {
                        a: *a,
                        b: *b,
                        c: *c,
                        branch: (*branch).into(),
                    },
                    u_start: *u_start,
                    f_start: *f_start,
                    step: *step,
                    max_span: *max_span,
                };
                let integrated = ode::integrate_profile(&spec).map_err(CliError::ode_validity)?;
                ode::profile_from_integrated(&integrated).map_err(CliError::ode_validity)
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct MeridianParams {
    profile: ProfileSpec,
    curve: CurveSpec,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FnSpec {
    Identity,
    Linear { a: f64, b: f64 },
    Power { coeff: f64, exponent: f64 },
    Cos { amp: f64, freq: f64 },
    Sin { amp: f64, freq: f64 },
}

impl From<FnSpec> for ProfileFn {
    fn from(f: FnSpec) -> ProfileFn {
        match f {
            FnSpec::Identity => ProfileFn::Identity,
            FnSpec::Linear { a, b } => ProfileFn::Linear { a, b },
            FnSpec::Power { coeff, exponent } => ProfileFn::Power { coeff, exponent },
            FnSpec::Cos { amp, freq } => ProfileFn::Cos { amp, freq },
            FnSpec::Sin { amp, freq } => ProfileFn::Sin { amp, freq },
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RotationalParams {
    f: FnSpec,
    g: FnSpec,
    alpha: f64,
    beta: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExprParams {
    x: String,
    y: String,
    z: String,
    w: String,
}

fn params<T: serde::de::DeserializeOwned>(value: &serde_json::Value) -> Result<T, CliError> {
    serde_json::from_value(value.clone())
        .map_err(|e| CliError::Input(format!("bad family params: {e}")))
}

/// Builds the chart described by a parsed surface spec.
pub fn build_chart(spec: &SurfaceSpecFile) -> Result<SurfaceChart, CliError> {
    let [u0, u1, v0, v1] = spec.domain;
    let domain = Domain::new(u0, u1, v0, v1);
    if !(u1 > u0 && v1 > v0) {
        return Err(CliError::Input(format!(
            "domain [{u0}, {u1}] x [{v0}, {v1}] is empty"
        )));
    }
    let chart = match spec.family.as_str() {
        "plane" => families::plane().with_domain(domain).map_err(CliError::input)?,
        "wsq" => families::wsq().with_domain(domain).map_err(CliError::input)?,
        "sphere3" => {
            if !(u0 > 0.0 && u1 < std::f64::consts::PI) {
                return Err(CliError::Input(format!(
                    "sphere3 colatitude range ({u0}, {u1}) must avoid the poles (0, pi)"
                )));
            }
            families::sphere3().with_domain(domain).map_err(CliError::input)?
        }
        "clifford" => {
            let p: CliffordParams = params(&spec.params)?;
            families::clifford(p.r1, p.r2)
                .with_domain(domain)
                .map_err(CliError::input)?
        }
        "mixed_demo" => families::mixed_demo()
            .with_domain(domain)
            .map_err(CliError::input)?,
        "meridian" => {
            let p: MeridianParams = params(&spec.params)?;
            let profile = p.profile.build((u0, u1))?;
            let (p0, p1) = profile.domain();
            if u0 < p0 - 1e-12 || u1 > p1 + 1e-12 {
                return Err(CliError::Input(format!(
                    "meridian u range ({u0}, {u1}) exceeds the profile domain ({p0}, {p1})"
                )));
            }
            let mspec = MeridianSpec {
                curve: p.curve.build(),
                profile,
                v_range: (v0, v1),
            };
            families::meridian_surface(&mspec)
                .map_err(CliError::input)?
                .with_domain(domain)
                .map_err(CliError::input)?
        }
        "rotational" => {
            let p: RotationalParams = params(&spec.params)?;
            let rspec = RotationalSpec {
                f: p.f.into(),
                g: p.g.into(),
                alpha: p.alpha,
                beta: p.beta,
            };
            families::rotational_surface(&rspec, domain).map_err(CliError::input)?
        }
        "expr" => {
            let p: ExprParams = params(&spec.params)?;
            let parse = |s: &str| Expr::parse(s).map_err(|e| CliError::Input(format!("{e}")));
            let (x, y, z, w) = (parse(&p.x)?, parse(&p.y)?, parse(&p.z)?, parse(&p.w)?);
            if spec.jet_mode == Some(JetModeSpec::Analytic) {
                return Err(CliError::Input(
                    "expression charts provide positions only; use \"jet_mode\": \"fd\"".into(),
                ));
            }
            SurfaceChart::from_positions(domain, move |u, v| {
                Vec4::new(x.eval(u, v), y.eval(u, v), z.eval(u, v), w.eval(u, v))
            })
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown family {other:?} (known: plane, wsq, sphere3, clifford, mixed_demo, meridian, rotational, expr)"
            )))
        }
    };
    let chart = match spec.jet_mode {
        Some(JetModeSpec::FiniteDifference) => chart.with_jet_mode(JetMode::FiniteDifference),
        Some(JetModeSpec::Analytic) => chart.with_jet_mode(JetMode::Analytic),
        None if spec.family == "expr" => chart, // already finite-difference
        None => chart.with_jet_mode(JetMode::Analytic),
    };
    let chart = match spec.fd_steps {
        Some([h1, h2]) => chart
            .with_fd_steps(FdSteps { h1, h2 })
            .map_err(CliError::input)?,
        None => chart,
    };
    Ok(chart)
}

/// Reads and parses a surface spec file.
pub fn load_surface_spec(path: &std::path::Path) -> Result<SurfaceSpecFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("bad surface spec: {e}")))
}

/// ODE profile spec file for the `generate` command.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum OdeSpecFile {
    /// Closed-form constant Gauss curvature profile, sampled uniformly.
    #[serde(rename = "constant_K")]
    ConstantGauss {
        #[serde(rename = "K")]
        k: f64,
        alpha0: f64,
        beta0: f64,
        u_start: f64,
        u_end: f64,
        #[serde(default = "default_samples")]
        samples: usize,
    },
    #[serde(rename = "cmc")]
    Cmc {
        a: f64,
        b: f64,
        #[serde(rename = "C", default)]
        c: f64,
        u_start: f64,
        f_start: f64,
        #[serde(default = "default_step")]
        step: f64,
        max_span: f64,
    },
    #[serde(rename = "constant_k")]
    ConstantK {
        a: f64,
        b: f64,
        #[serde(rename = "C", default)]
        c: f64,
        branch: BranchSpec,
        u_start: f64,
        f_start: f64,
        #[serde(default = "default_step")]
        step: f64,
        max_span: f64,
    },
}

fn default_samples() -> usize {
    201
}

pub fn load_ode_spec(path: &std::path::Path) -> Result<OdeSpecFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("bad profile spec: {e}")))
}

/// Parses `u0:u1:nu,v0:v1:nv`.
pub fn parse_grid(s: &str) -> Result<surf4::classify::GridSpec, CliError> {
    let err = || CliError::Input(format!("bad grid {s:?}; expected u0:u1:nu,v0:v1:nv"));
    let (us, vs) = s.split_once(',').ok_or_else(err)?;
    let parse_axis = |axis: &str| -> Result<(f64, f64, usize), CliError> {
        let parts: Vec<&str> = axis.split(':').collect();
        if parts.len() != 3 {
            return Err(err());
        }
        Ok((
            parts[0].parse().map_err(|_| err())?,
            parts[1].parse().map_err(|_| err())?,
            parts[2].parse().map_err(|_| err())?,
        ))
    };
    let (u_min, u_max, u_count) = parse_axis(us)?;
    let (v_min, v_max, v_count) = parse_axis(vs)?;
    let grid = surf4::classify::GridSpec { u_min, u_max, u_count, v_min, v_max, v_count };
    if !grid.is_valid() {
        return Err(CliError::Input(format!(
            "grid counts must be >= 2 and ranges nonempty: {s:?}"
        )));
    }
    Ok(grid)
}

/// Parses `u,v`.
pub fn parse_point(s: &str) -> Result<surf4::jets::ParamPoint, CliError> {
    let err = || CliError::Input(format!("bad point {s:?}; expected u,v"));
    let (u, v) = s.split_once(',').ok_or_else(err)?;
    Ok(surf4::jets::ParamPoint::new(
        u.trim().parse().map_err(|_| err())?,
        v.trim().parse().map_err(|_| err())?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(json: &str) -> SurfaceSpecFile {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn builds_builtin_families() {
        let chart = build_chart(&spec(
            r#"{"family":"clifford","params":{"r1":1.0,"r2":1.0},"domain":[0,6.28,0,6.28]}"#,
        ))
        .unwrap();
        assert_eq!(chart.jet_mode(), JetMode::Analytic);
        build_chart(&spec(r#"{"family":"plane","domain":[-1,1,-1,1]}"#)).unwrap();
        build_chart(&spec(r#"{"family":"wsq","domain":[-1,1,-1,1],"jet_mode":"fd"}"#)).unwrap();
    }

    #[test]
    fn builds_meridian_and_rotational() {
        let chart = build_chart(&spec(
            r#"{"family":"meridian","params":{"profile":{"kind":"sphere"},"curve":{"kind":"circle","curvature":1.0}},"domain":[-0.5,0.5,0,4]}"#,
        ))
        .unwrap();
        assert_eq!(chart.domain().u0, -0.5);
        build_chart(&spec(
            r#"{"family":"rotational","params":{"f":{"kind":"identity"},"g":{"kind":"power","coeff":1.0,"exponent":4.0},"alpha":1.0,"beta":2.0},"domain":[0.5,2,0,6]}"#,
        ))
        .unwrap();
    }

    #[test]
    fn expression_charts_are_fd_only() {
        let ok = spec(
            r#"{"family":"expr","params":{"x":"u","y":"v","z":"u^2-v^2","w":"2*u*v"},"domain":[-1,1,-1,1],"jet_mode":"fd"}"#,
        );
        let chart = build_chart(&ok).unwrap();
        assert_eq!(chart.jet_mode(), JetMode::FiniteDifference);
        let bad = spec(
            r#"{"family":"expr","params":{"x":"u","y":"v","z":"0","w":"0"},"domain":[-1,1,-1,1],"jet_mode":"analytic"}"#,
        );
        assert!(matches!(build_chart(&bad), Err(CliError::Input(_))));
    }

    #[test]
    fn rejects_unknown_family_and_bad_domain() {
        assert!(matches!(
            build_chart(&spec(r#"{"family":"nope","domain":[0,1,0,1]}"#)),
            Err(CliError::Input(_))
        ));
        assert!(matches!(
            build_chart(&spec(r#"{"family":"plane","domain":[1,0,0,1]}"#)),
            Err(CliError::Input(_))
        ));
        assert!(matches!(
            build_chart(&spec(r#"{"family":"sphere3","domain":[-1,4,0 ,1]}"#)),
            Err(CliError::Input(_))
        ));
    }

    #[test]
    fn grid_and_point_parsing() {
        let g = parse_grid("0:1:5,2:3:7").unwrap();
        assert_eq!((g.u_count, g.v_count), (5, 7));
        assert!(parse_grid("0:1:5").is_err());
        assert!(parse_grid("0:1:1,0:1:5").is_err());
        let p = parse_point("0.25,-1.5").unwrap();
        assert_eq!((p.u, p.v), (0.25, -1.5));
        assert!(parse_point("0.25").is_err());
    }
}
