use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use surf4_cli::figure::FigureWhat;
use surf4_cli::report::ReportFormat;

/// Invariants of surfaces in the four-dimensional Euclidean space:
/// fundamental forms, the Weingarten-type map, point classification, the
/// tangent indicatrix and the ellipse of normal curvature.
#[derive(Parser)]
#[command(name = "surf4", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sweep a parameter grid and write a CSV/JSON report of the
    /// invariants at every node.
    Report {
        /// JSON surface spec path.
        #[arg(long)]
        spec: PathBuf,
        /// Grid as u0:u1:nu,v0:v1:nv.
        #[arg(long)]
        grid: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
        /// Base classification threshold (rescaled pointwise).
        #[arg(long, default_value_t = 1e-7)]
        tau: f64,
    },
    /// Classify the surface over a grid and print the verdict JSON.
    Classify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 1e-7)]
        tau: f64,
    },
    /// Draw the tangent indicatrix and/or the curvature ellipse at one
    /// point as a static SVG.
    Figure {
        #[arg(long)]
        spec: PathBuf,
        /// Point as u,v.
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value_t = WhatArg::Both)]
        what: WhatArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a special meridian profile (constant Gauss curvature,
    /// constant mean curvature or constant invariant k) as CSV.
    Generate {
        /// JSON profile spec path.
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhatArg {
    Indicatrix,
    Ellipse,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Report { spec, grid, format, out, tau } => {
            let format = match format {
                FormatArg::Csv => ReportFormat::Csv,
                FormatArg::Json => ReportFormat::Json,
            };
            surf4_cli::report::run_report(&spec, &grid, format, &out, tau)
        }
        Cmd::Classify { spec, grid, tau } => {
            surf4_cli::report::run_classify(&spec, &grid, tau, &mut std::io::stdout())
        }
        Cmd::Figure { spec, point, what, out } => {
            let what = match what {
                WhatArg::Indicatrix => FigureWhat::Indicatrix,
                WhatArg::Ellipse => FigureWhat::Ellipse,
                WhatArg::Both => FigureWhat::Both,
            };
            surf4_cli::figure::run_figure(&spec, &point, what, &out)
        }
        Cmd::Generate { spec, out } => {
            surf4_cli::generate::run_generate(&spec, &out, &mut std::io::stdout())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
