//! Command-line front end for the surf4 engine: grid reports of the
//! invariants, surface classification, indicatrix / curvature-ellipse
//! figures and ODE profile generation.

pub mod expr;
pub mod figure;
pub mod generate;
pub mod report;
pub mod spec;

use std::fmt;

/// Errors mapped to process exit codes: input errors exit 1, evaluation
/// errors exit 2, profile validity errors exit 3.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Evaluation(String),
    OdeValidity(String),
}

impl CliError {
    pub fn input(e: impl fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn evaluation(e: impl fmt::Display) -> Self {
        CliError::Evaluation(e.to_string())
    }

    pub fn ode_validity(e: impl fmt::Display) -> Self {
        CliError::OdeValidity(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Evaluation(_) => 2,
            CliError::OdeValidity(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Evaluation(m) => write!(f, "evaluation error: {m}"),
            CliError::OdeValidity(m) => write!(f, "profile validity error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Thread cap for grid sweeps, from `SURF4_THREADS` (default 1, max 64).
pub fn thread_cap() -> usize {
    std::env::var("SURF4_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .map(|n| n.clamp(1, 64))
        .unwrap_or(1)
}
