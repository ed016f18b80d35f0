use serde::Serialize;

use tricenter_core::Error;

/// Shortest decimal that parses back to the same `f64`; exponent form for
/// very large or small magnitudes, `NaN` for missing values.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn csv_line(values: &[f64]) -> String {
    let mut s = values.iter().map(|v| num(*v)).collect::<Vec<_>>().join(",");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best: Option<[f64; 2]>,
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DegenerateTriangle(_) => "degenerate_triangle",
        Error::DegenerateTrilinears => "degenerate_trilinears",
        Error::NotInterior { .. } => "not_interior",
        Error::TooCloseToBoundary { .. } => "too_close_to_boundary",
        Error::ToleranceNotReached { .. } => "tolerance_not_reached",
        Error::NegativeRadicand { .. } => "negative_radicand",
        Error::BracketFailure { .. } => "bracket_failure",
        Error::NoConvergence { .. } => "no_convergence",
        Error::InvalidInput(_) => "invalid_input",
    }
}

pub fn error_json(e: &Error) -> String {
    let best = match e {
        Error::NoConvergence { best, .. } => Some([best.x, best.y]),
        _ => None,
    };
    let report = ErrorReport {
        error: ErrorBody {
            kind: error_kind(e),
            message: e.to_string(),
            best,
        },
    };
    serde_json::to_string(&report).expect("error report serializes")
}

pub fn usage_error_json(message: &str) -> String {
    let report = ErrorReport {
        error: ErrorBody {
            kind: "usage",
            message: message.trim_end().to_string(),
            best: None,
        },
    };
    serde_json::to_string(&report).expect("error report serializes")
}
