//! Pass/fail results and their line-oriented report format.

use std::fmt;

/// Outcome of one property check over a trajectory.
///
/// `worst_margin` is signed; negative values are violations. The check passes
/// iff `worst_margin >= -tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub worst_time: f64,
    pub worst_margin: f64,
    pub tolerance: f64,
    pub description: String,
}

impl Verdict {
    pub fn from_margin(
        name: impl Into<String>,
        worst_time: f64,
        worst_margin: f64,
        tolerance: f64,
        description: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            passed: worst_margin >= -tolerance,
            worst_time,
            worst_margin,
            tolerance,
            description: description.into(),
        }
    }

    /// Forces a failure regardless of the margin (used when a premise breaks).
    pub fn failed(name: impl Into<String>, worst_time: f64, description: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            worst_time,
            worst_margin: f64::NEG_INFINITY,
            tolerance: 0.0,
            description: description.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} worst_t={} margin={:e} tol={:e}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.worst_time,
            self.worst_margin,
            self.tolerance
        )
    }
}

/// Parses a line written by `Display for Verdict` back into
/// `(name, passed, worst_t, margin, tol)`.
pub fn parse_check_line(line: &str) -> Option<(String, bool, f64, f64, f64)> {
    let mut parts = line.split_whitespace();
    if parts.next()? != "CHECK" {
        return None;
    }
    let name = parts.next()?.to_string();
    let passed = match parts.next()? {
        "PASS" => true,
        "FAIL" => false,
        _ => return None,
    };
    let mut field = |key: &str| -> Option<f64> { parts.next()?.strip_prefix(key)?.parse().ok() };
    let t = field("worst_t=")?;
    let margin = field("margin=")?;
    let tol = field("tol=")?;
    Some((name, passed, t, margin, tol))
}
