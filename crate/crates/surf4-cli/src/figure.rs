//! Static SVG figures of the tangent indicatrix (in principal-axis
//! coordinates of the tangent plane) and the curvature ellipse (in the
//! adapted normal-frame coordinates).
//!
//! Output is deterministic byte-for-byte: fixed 600x600 panels, fixed
//! sampling counts and fixed numeric formatting.

use std::fmt::Write as _;
use std::path::Path;

use surf4::classify::{classify_point, PointKind};
use surf4::directions::{fallback_orthonormal_pair, principal_directions};
use surf4::ellipse::{curvature_ellipse, CurvatureEllipse, EllipseKind};
use surf4::forms::{point_forms, PointForms};
use surf4::indicatrix::{build_indicatrix, ConicKind, IndicatrixConic};
use surf4::jets::{evaluate_jet, ParamPoint};
use surf4::Error;

use crate::spec::{build_chart, load_surface_spec, parse_point};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureWhat {
    Indicatrix,
    Ellipse,
    Both,
}

const PANEL: f64 = 600.0;
const HALF: f64 = 300.0;
const RADIUS: f64 = 250.0;

struct Panel {
    body: String,
    scale: f64,
}

impl Panel {
    fn new(scale: f64) -> Panel {
        Panel { body: String::new(), scale }
    }

    fn px(&self, x: f64) -> f64 {
        HALF + x * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        HALF - y * self.scale
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, style: &str) {
        writeln!(
            self.body,
            r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {} />"#,
            self.px(x1),
            self.py(y1),
            self.px(x2),
            self.py(y2),
            style
        )
        .unwrap();
    }

    fn polyline(&mut self, pts: &[(f64, f64)], style: &str, closed: bool) {
        let mut d = String::new();
        for (i, (x, y)) in pts.iter().enumerate() {
            let c = if i == 0 { 'M' } else { 'L' };
            write!(d, "{c}{:.3} {:.3} ", self.px(*x), self.py(*y)).unwrap();
        }
        if closed {
            d.push('Z');
        }
        writeln!(self.body, r#"  <path d="{}" {} />"#, d.trim_end(), style).unwrap();
    }

    fn arrow(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, style: &str) {
        writeln!(
            self.body,
            r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {} marker-end="url(#arrow)" />"#,
            self.px(x1),
            self.py(y1),
            self.px(x2),
            self.py(y2),
            style
        )
        .unwrap();
    }

    fn text(&mut self, x: f64, y: f64, msg: &str) {
        writeln!(
            self.body,
            r#"  <text x="{x:.1}" y="{y:.1}" font-family="monospace" font-size="13">{msg}</text>"#
        )
        .unwrap();
    }

    fn axes(&mut self, x_label: &str, y_label: &str) {
        let style = r##"stroke="#888888" stroke-width="1""##;
        writeln!(
            self.body,
            r#"  <line x1="20" y1="{HALF:.1}" x2="{:.1}" y2="{HALF:.1}" {style} />"#,
            PANEL - 20.0
        )
        .unwrap();
        writeln!(
            self.body,
            r#"  <line x1="{HALF:.1}" y1="20" x2="{HALF:.1}" y2="{:.1}" {style} />"#,
            PANEL - 20.0
        )
        .unwrap();
        self.text(PANEL - 45.0, HALF - 8.0, x_label);
        self.text(HALF + 8.0, 30.0, y_label);
    }
}

const CONIC_STYLE: &str = r##"stroke="#1f5fbf" stroke-width="2" fill="none""##;
const SEGMENT_STYLE: &str = r##"stroke="#bf3f1f" stroke-width="2.5""##;
const MEAN_STYLE: &str = r##"stroke="#0f7f3f" stroke-width="2""##;

fn acosh(x: f64) -> f64 {
    (x + (x * x - 1.0).sqrt()).ln()
}

fn asinh(x: f64) -> f64 {
    (x + (x * x + 1.0).sqrt()).ln()
}

/// 600x600 panel with the indicatrix conic.
fn indicatrix_panel(conic: &IndicatrixConic) -> Panel {
    let (hi, lo) = (conic.nu_hi, conic.nu_lo);
    let semi_x = if hi.abs() > 0.0 { 1.0 / hi.abs().sqrt() } else { 0.0 };
    let semi_y = if lo.abs() > 0.0 { 1.0 / lo.abs().sqrt() } else { 0.0 };
    let extent = match conic.kind {
        ConicKind::Ellipse | ConicKind::Circle => 1.3 * semi_x.max(semi_y),
        ConicKind::Hyperbola | ConicKind::RectangularHyperbola => 2.2 * semi_x.max(semi_y),
        ConicKind::ParallelLines => 2.2 * semi_x.max(semi_y),
        ConicKind::UndefinedFlat => 1.0,
    };
    let mut p = Panel::new(RADIUS / extent);
    p.axes("X", "Y");
    match conic.kind {
        ConicKind::Ellipse | ConicKind::Circle => {
            let pts: Vec<(f64, f64)> = (0..=128)
                .map(|i| {
                    let t = std::f64::consts::TAU * i as f64 / 128.0;
                    (semi_x * t.cos(), semi_y * t.sin())
                })
                .collect();
            p.polyline(&pts, CONIC_STYLE, true);
        }
        ConicKind::Hyperbola | ConicKind::RectangularHyperbola => {
            // nu_hi > 0 > nu_lo. Branches for epsilon = +1 open along X,
            // for epsilon = -1 along Y; draw both, clipped to the panel.
            let tx = acosh((extent / semi_x).max(1.0)).min(asinh(extent / semi_y));
            let ty = acosh((extent / semi_y).max(1.0)).min(asinh(extent / semi_x));
            for sign in [1.0, -1.0] {
                let east: Vec<(f64, f64)> = (0..=96)
                    .map(|i| {
                        let t = -tx + 2.0 * tx * i as f64 / 96.0;
                        (sign * semi_x * t.cosh(), semi_y * t.sinh())
                    })
                    .collect();
                p.polyline(&east, CONIC_STYLE, false);
                let north: Vec<(f64, f64)> = (0..=96)
                    .map(|i| {
                        let t = -ty + 2.0 * ty * i as f64 / 96.0;
                        (semi_x * t.sinh(), sign * semi_y * t.cosh())
                    })
                    .collect();
                p.polyline(&north, CONIC_STYLE, false);
            }
        }
        ConicKind::ParallelLines => {
            // Lines parallel to the principal direction with (numerically)
            // zero normal curvature.
            if hi.abs() >= lo.abs() {
                let off = semi_x;
                p.line(off, -extent, off, extent, CONIC_STYLE);
                p.line(-off, -extent, -off, extent, CONIC_STYLE);
            } else {
                let off = semi_y;
                p.line(-extent, off, extent, off, CONIC_STYLE);
                p.line(-extent, -off, extent, -off, CONIC_STYLE);
            }
        }
        ConicKind::UndefinedFlat => {}
    }
    p.text(20.0, 30.0, &format!("indicatrix: {}", conic.kind.as_str()));
    p.text(
        20.0,
        50.0,
        &format!("nu' = {:.4}   nu'' = {:.4}", conic.nu_hi, conic.nu_lo),
    );
    if let Some((a1, a2)) = conic.axis_lengths {
        p.text(
            20.0,
            70.0,
            &format!("axis lengths 2/sqrt|nu'| = {a1:.4}, 2/sqrt|nu''| = {a2:.4}"),
        );
    }
    let eps = &conic.epsilon_branches;
    let eps_text = match (eps.plus, eps.minus) {
        (true, true) => "eps = +1, -1",
        (true, false) => "eps = +1",
        (false, true) => "eps = -1",
        (false, false) => "eps: none",
    };
    p.text(20.0, 90.0, eps_text);
    p.text(20.0, PANEL - 20.0, &format!("scale: 1 unit = {:.3} px", p.scale));
    p
}

/// 600x600 panel with the curvature ellipse in `(e1, e2)` normal
/// coordinates.
fn ellipse_panel(ell: &CurvatureEllipse, pf: &PointForms) -> Panel {
    let coord = |w: surf4::linalg::Vec4| (w.dot(pf.frame.e1), w.dot(pf.frame.e2));
    let c = coord(ell.center);
    let u1 = coord(ell.u1);
    let u2 = coord(ell.u2);
    let reach = (c.0 * c.0 + c.1 * c.1).sqrt() + ell.a;
    let extent = 1.25 * reach.max(1e-6);
    let mut p = Panel::new(RADIUS / extent);
    p.axes("e1", "e2");
    let pts: Vec<(f64, f64)> = (0..=128)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / 128.0;
            (
                c.0 + t.cos() * u1.0 + t.sin() * u2.0,
                c.1 + t.cos() * u1.1 + t.sin() * u2.1,
            )
        })
        .collect();
    p.polyline(&pts, CONIC_STYLE, false);
    if ell.center.norm() > 1e-12 {
        p.arrow(0.0, 0.0, c.0, c.1, MEAN_STYLE);
    }
    if let Some(dir) = ell.segment_dir {
        let d = coord(dir);
        p.line(
            c.0 - ell.a * d.0,
            c.1 - ell.a * d.1,
            c.0 + ell.a * d.0,
            c.1 + ell.a * d.1,
            SEGMENT_STYLE,
        );
    }
    p.text(20.0, 30.0, &format!("curvature ellipse: {}", ell.kind.as_str()));
    p.text(20.0, 50.0, &format!("a = {:.4}   b = {:.4}", ell.a, ell.b));
    p.text(20.0, 70.0, &format!("|H| = {:.4}", pf.inv.mean_norm()));
    if ell.kind == EllipseKind::Segment {
        p.text(20.0, 90.0, &format!("segment half-length d = {:.4}", ell.a));
    }
    p.text(20.0, PANEL - 20.0, &format!("scale: 1 unit = {:.3} px", p.scale));
    p
}

fn svg_document(panels: &[Panel]) -> String {
    let width = PANEL * panels.len() as f64;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{PANEL:.0}" viewBox="0 0 {width:.0} {PANEL:.0}">"#
    )
    .unwrap();
    out.push_str(
        r##" <defs>
  <marker id="arrow" markerWidth="10" markerHeight="8" refX="9" refY="4" orient="auto" fill="#0f7f3f">
   <polygon points="0 0, 10 4, 0 8" />
  </marker>
 </defs>
"##,
    );
    for (i, panel) in panels.iter().enumerate() {
        writeln!(
            out,
            r#" <g transform="translate({:.0},0)">"#,
            PANEL * i as f64
        )
        .unwrap();
        writeln!(
            out,
            r##"  <rect x="1" y="1" width="{:.0}" height="{:.0}" fill="white" stroke="#cccccc" />"##,
            PANEL - 2.0,
            PANEL - 2.0
        )
        .unwrap();
        out.push_str(&panel.body);
        out.push_str(" </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// Renders the requested figure at one parameter point. Flat points carry
/// no conic and no ellipse worth drawing; they are reported as evaluation
/// errors (exit 2).
pub fn render_figure(
    chart: &surf4::jets::SurfaceChart,
    point: ParamPoint,
    what: FigureWhat,
) -> Result<String, CliError> {
    let jet = evaluate_jet(chart, point).map_err(CliError::evaluation)?;
    let pf = point_forms(&jet).map_err(CliError::evaluation)?;
    let tau = 1e-7 * (1.0 + pf.inv.k.abs() + pf.inv.kappa.abs());
    let pt = classify_point(&pf.inv, &pf.fd, tau);
    if pt.kind == PointKind::Flat {
        return Err(CliError::Evaluation(format!(
            "flat point at ({}, {}): the indicatrix and the curvature ellipse degenerate; nothing to draw",
            point.u, point.v
        )));
    }
    let conic = {
        let pair = match principal_directions(&pf.fd) {
            Ok(pair) => pair,
            Err(Error::UmbilicLike) => {
                fallback_orthonormal_pair(&pf.fd).map_err(CliError::evaluation)?
            }
            Err(e) => return Err(CliError::evaluation(e)),
        };
        build_indicatrix(&pf.inv, pair).map_err(CliError::evaluation)?
    };
    let ell = curvature_ellipse(&jet, &pf.frame, &pf.dec).map_err(CliError::evaluation)?;
    let panels = match what {
        FigureWhat::Indicatrix => vec![indicatrix_panel(&conic)],
        FigureWhat::Ellipse => vec![ellipse_panel(&ell, &pf)],
        FigureWhat::Both => vec![indicatrix_panel(&conic), ellipse_panel(&ell, &pf)],
    };
    Ok(svg_document(&panels))
}

/// The `figure` command.
pub fn run_figure(
    spec_path: &Path,
    point_str: &str,
    what: FigureWhat,
    out_path: &Path,
) -> Result<i32, CliError> {
    let spec = load_surface_spec(spec_path)?;
    let chart = build_chart(&spec)?;
    let point = parse_point(point_str)?;
    let svg = render_figure(&chart, point, what)?;
    std::fs::write(out_path, svg)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out_path.display())))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use surf4::families;

    #[test]
    fn clifford_figure_shows_hyperbola_and_segment() {
        let chart = families::clifford(1.0, 1.0);
        let svg = render_figure(&chart, ParamPoint::new(1.0, 2.0), FigureWhat::Both).unwrap();
        assert!(svg.contains("indicatrix: rectangular_hyperbola"));
        assert!(svg.contains("curvature ellipse: segment"));
        assert!(svg.contains("marker-end=\"url(#arrow)\""));
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn wsq_figure_shows_circles() {
        let chart = families::wsq();
        let svg = render_figure(&chart, ParamPoint::new(0.0, 0.0), FigureWhat::Both).unwrap();
        assert!(svg.contains("indicatrix: circle"));
        assert!(svg.contains("curvature ellipse: circle"));
    }

    #[test]
    fn flat_point_is_an_evaluation_error() {
        let chart = families::plane();
        let err = render_figure(&chart, ParamPoint::new(0.0, 0.0), FigureWhat::Indicatrix);
        assert!(matches!(err, Err(CliError::Evaluation(_))));
    }

    #[test]
    fn rendering_is_deterministic() {
        let chart = families::clifford(1.0, 0.7);
        let a = render_figure(&chart, ParamPoint::new(0.5, 0.5), FigureWhat::Both).unwrap();
        let b = render_figure(&chart, ParamPoint::new(0.5, 0.5), FigureWhat::Both).unwrap();
        assert_eq!(a, b);
    }
}
