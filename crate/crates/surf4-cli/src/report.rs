//! Grid reports of the invariants (CSV/JSON) and the surface
//! classification command.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use surf4::classify::{
    classify_point, classify_surface, developable_check, GridSpec, PointKind, SurfaceVerdict,
};
use surf4::directions::{fallback_orthonormal_pair, principal_directions};
use surf4::ellipse::curvature_ellipse;
use surf4::forms::point_forms;
use surf4::indicatrix::{build_indicatrix, ConicKind};
use surf4::jets::{evaluate_jet, ParamPoint, SurfaceChart};
use surf4::Error;

use crate::spec::{build_chart, load_surface_spec, parse_grid};
use crate::CliError;

/// One report row. Field names match the CSV header.
#[derive(Debug, Clone, Serialize)]
pub struct RowData {
    pub u: f64,
    pub v: f64,
    #[serde(rename = "E")]
    pub e: f64,
    #[serde(rename = "F")]
    pub f: f64,
    #[serde(rename = "G")]
    pub g: f64,
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "N")]
    pub n: f64,
    pub k: f64,
    pub kappa: f64,
    #[serde(rename = "K")]
    pub gauss: f64,
    #[serde(rename = "H_norm")]
    pub h_norm: f64,
    pub nu_hi: f64,
    pub nu_lo: f64,
    pub point_type: &'static str,
    pub indicatrix_kind: &'static str,
    pub ellipse_kind: &'static str,
    pub a: f64,
    pub b: f64,
}

/// Full pointwise analysis behind one report row.
pub fn compute_row(chart: &SurfaceChart, p: ParamPoint, tau_base: f64) -> Result<RowData, Error> {
    let jet = evaluate_jet(chart, p)?;
    let pf = point_forms(&jet)?;
    let tau = tau_base * (1.0 + pf.inv.k.abs() + pf.inv.kappa.abs());
    let pt = classify_point(&pf.inv, &pf.fd, tau);
    let ell = curvature_ellipse(&jet, &pf.frame, &pf.dec)?;
    let indicatrix_kind = if pt.kind == PointKind::Flat {
        ConicKind::UndefinedFlat
    } else {
        let pair = match principal_directions(&pf.fd) {
            Ok(pair) => Ok(pair),
            Err(Error::UmbilicLike) => fallback_orthonormal_pair(&pf.fd),
            Err(e) => Err(e),
        };
        match pair.and_then(|pair| build_indicatrix(&pf.inv, pair)) {
            Ok(conic) => conic.kind,
            Err(Error::FlatPoint) => ConicKind::UndefinedFlat,
            Err(e) => return Err(e),
        }
    };
    Ok(RowData {
        u: p.u,
        v: p.v,
        e: pf.fd.e,
        f: pf.fd.f,
        g: pf.fd.g,
        l: pf.fd.l,
        m: pf.fd.m,
        n: pf.fd.n,
        k: pf.inv.k,
        kappa: pf.inv.kappa,
        gauss: pf.inv.gauss,
        h_norm: pf.inv.mean_norm(),
        nu_hi: pf.inv.nu_hi,
        nu_lo: pf.inv.nu_lo,
        point_type: pt.kind.as_str(),
        indicatrix_kind: indicatrix_kind.as_str(),
        ellipse_kind: ell.kind.as_str(),
        a: ell.a,
        b: ell.b,
    })
}

/// Computes all grid rows in row-major order, optionally splitting the work
/// over `threads` threads (the output order and contents are independent of
/// the thread count).
pub fn compute_rows(
    chart: &SurfaceChart,
    grid: &GridSpec,
    tau_base: f64,
    threads: usize,
) -> Vec<(ParamPoint, Result<RowData, Error>)> {
    let points = grid.points();
    if threads <= 1 || points.len() < 2 * threads {
        return points
            .into_iter()
            .map(|p| (p, compute_row(chart, p, tau_base)))
            .collect();
    }
    let chunk = points.len().div_ceil(threads);
    let mut out = Vec::with_capacity(points.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .map(|slice| {
                scope.spawn(move || {
                    slice
                        .iter()
                        .map(|&p| (p, compute_row(chart, p, tau_base)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            out.extend(h.join().expect("row worker panicked"));
        }
    });
    out
}

pub const CSV_HEADER: &str =
    "u,v,E,F,G,L,M,N,k,kappa,K,H_norm,nu_hi,nu_lo,point_type,indicatrix_kind,ellipse_kind,a,b";

/// Renders the rows as CSV. Numbers use the shortest round-trip decimal
/// representation; failed rows keep their coordinates, carry `error` in the
/// three kind columns and `NaN` elsewhere.
pub fn to_csv(rows: &[(ParamPoint, Result<RowData, Error>)]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (p, row) in rows {
        match row {
            Ok(r) => {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.u,
                    r.v,
                    r.e,
                    r.f,
                    r.g,
                    r.l,
                    r.m,
                    r.n,
                    r.k,
                    r.kappa,
                    r.gauss,
                    r.h_norm,
                    r.nu_hi,
                    r.nu_lo,
                    r.point_type,
                    r.indicatrix_kind,
                    r.ellipse_kind,
                    r.a,
                    r.b
                ));
            }
            Err(_) => {
                out.push_str(&format!(
                    "{},{},NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN,error,error,error,NaN,NaN\n",
                    p.u, p.v
                ));
            }
        }
    }
    out
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonRow<'a> {
    Ok(&'a RowData),
    Err { u: f64, v: f64, error: String },
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    rows: Vec<JsonRow<'a>>,
}

/// Renders the rows as versioned JSON.
pub fn to_json(rows: &[(ParamPoint, Result<RowData, Error>)]) -> String {
    let report = JsonReport {
        schema: 1,
        rows: rows
            .iter()
            .map(|(p, r)| match r {
                Ok(data) => JsonRow::Ok(data),
                Err(e) => JsonRow::Err { u: p.u, v: p.v, error: e.to_string() },
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serialization");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// The `report` command: writes the grid report; exit 0 on success, exit 2
/// with a partial report when some rows failed to evaluate.
pub fn run_report(
    spec_path: &Path,
    grid_str: &str,
    format: ReportFormat,
    out_path: &Path,
    tau_base: f64,
) -> Result<i32, CliError> {
    let spec = load_surface_spec(spec_path)?;
    let chart = build_chart(&spec)?;
    let grid = parse_grid(grid_str)?;
    validate_grid_inside(&chart, &grid)?;
    let rows = compute_rows(&chart, &grid, tau_base, crate::thread_cap());
    let text = match format {
        ReportFormat::Csv => to_csv(&rows),
        ReportFormat::Json => to_json(&rows),
    };
    std::fs::write(out_path, text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out_path.display())))?;
    let failures = rows.iter().filter(|(_, r)| r.is_err()).count();
    if failures > 0 {
        eprintln!("{failures} of {} rows failed to evaluate", rows.len());
        Ok(2)
    } else {
        Ok(0)
    }
}

fn validate_grid_inside(chart: &SurfaceChart, grid: &GridSpec) -> Result<(), CliError> {
    let d = chart.domain();
    let margin = match chart.jet_mode() {
        surf4::jets::JetMode::FiniteDifference => 2.0 * chart.fd_steps().h2,
        surf4::jets::JetMode::Analytic => 0.0,
    };
    let inside = grid.u_min > d.u0 + margin
        && grid.u_max < d.u1 - margin
        && grid.v_min > d.v0 + margin
        && grid.v_max < d.v1 - margin;
    if !inside {
        return Err(CliError::Input(format!(
            "grid [{}, {}] x [{}, {}] must lie inside the chart domain [{}, {}] x [{}, {}] with margin {margin}",
            grid.u_min, grid.u_max, grid.v_min, grid.v_max, d.u0, d.u1, d.v0, d.v1
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerdictJson {
    schema: u32,
    minimal: &'static str,
    flat_normal_connection: &'static str,
    super_conformal: &'static str,
    flat_points_only: &'static str,
    developable: &'static str,
    grid: GridJson,
    counterexamples: Vec<PointJson>,
}

#[derive(Serialize)]
struct GridJson {
    u_min: f64,
    u_max: f64,
    u_count: usize,
    v_min: f64,
    v_max: f64,
    v_count: usize,
}

#[derive(Serialize)]
struct PointJson {
    u: f64,
    v: f64,
}

/// Serializes a verdict as the classify command's JSON output.
pub fn verdict_to_json(verdict: &SurfaceVerdict) -> String {
    let v = VerdictJson {
        schema: 1,
        minimal: verdict.minimal.as_str(),
        flat_normal_connection: verdict.flat_normal_connection.as_str(),
        super_conformal: verdict.super_conformal.as_str(),
        flat_points_only: verdict.flat_points_only.as_str(),
        developable: developable_check(verdict).as_str(),
        grid: GridJson {
            u_min: verdict.grid.u_min,
            u_max: verdict.grid.u_max,
            u_count: verdict.grid.u_count,
            v_min: verdict.grid.v_min,
            v_max: verdict.grid.v_max,
            v_count: verdict.grid.v_count,
        },
        counterexamples: verdict
            .counterexamples
            .iter()
            .map(|p| PointJson { u: p.u, v: p.v })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&v).expect("verdict serialization");
    s.push('\n');
    s
}

/// The `classify` command: prints the verdict JSON to standard output.
pub fn run_classify(
    spec_path: &Path,
    grid_str: &str,
    tau_base: f64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let spec = load_surface_spec(spec_path)?;
    let chart = build_chart(&spec)?;
    let grid = parse_grid(grid_str)?;
    validate_grid_inside(&chart, &grid)?;
    let verdict = classify_surface(&chart, &grid, tau_base).map_err(CliError::evaluation)?;
    out.write_all(verdict_to_json(&verdict).as_bytes())
        .map_err(CliError::evaluation)?;
    Ok(0)
}
