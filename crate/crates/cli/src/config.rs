//! Turning command-line flags into validated library inputs.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use diracred::{CliffordElement, Metric};

/// Environment variable holding the hard cap on degrees and index counts.
pub const MAX_DEGREE_VAR: &str = "DIRACRED_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// Invalid input: reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<diracred::Error> for UsageError {
    fn from(e: diracred::Error) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Output {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub metric: Arc<Metric>,
    /// The metric as given on the command line.
    pub metric_label: String,
    pub degree_bound: usize,
    pub output: Output,
    pub seed: u64,
}

/// The hard cap from the environment, or the default.
pub fn degree_cap() -> Result<usize, UsageError> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| UsageError(format!("{MAX_DEGREE_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

pub fn check_cap(what: &str, value: usize) -> Result<(), UsageError> {
    let cap = degree_cap()?;
    if value > cap {
        return Err(UsageError(format!("{what} {value} exceeds the cap of {cap} (set {MAX_DEGREE_VAR} to raise it)")));
    }
    Ok(())
}

/// Dimension implied by an explicit metric, if any.
fn implied_dimension(spec: &str) -> Option<usize> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("diag:") {
        return Some(rest.split(',').count());
    }
    if spec.starts_with('[') {
        let rows: serde_json::Value = serde_json::from_str(spec).ok()?;
        return rows.as_array().map(Vec::len);
    }
    None
}

/// Reads the metric from a shorthand, a `diag:` list, a JSON matrix, or a
/// file containing either of the latter. Without `--n`, the dimension
/// comes from the metric when it is explicit and defaults to 3 otherwise.
pub fn load_metric(spec: &str, n: Option<usize>) -> Result<(usize, Arc<Metric>), UsageError> {
    let text = if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|e| UsageError(format!("cannot read metric file {spec}: {e}")))?
    } else {
        spec.to_string()
    };
    let n = n.or_else(|| implied_dimension(&text)).unwrap_or(3);
    if n == 0 {
        return Err(UsageError("n must be at least 1".into()));
    }
    Ok((n, Metric::parse(&text, n)?))
}

/// Comma-separated 1-based indices; the empty string is the empty list.
pub fn parse_indices(s: &str, n: usize) -> Result<Vec<usize>, UsageError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let i: usize = t.parse().map_err(|_| UsageError(format!("bad index {t:?}")))?;
            if i == 0 || i > n {
                return Err(UsageError(format!("index {i} is out of range 1..={n}")));
            }
            Ok(i - 1)
        })
        .collect()
}

/// The product `γ^{i₁}⋯γ^{i_r}` of 1-based indices; empty means `1`.
pub fn parse_gamma(s: &str, metric: &Arc<Metric>) -> Result<CliffordElement, UsageError> {
    let idx = parse_indices(s, metric.n())?;
    Ok(CliffordElement::word(metric, &idx)?)
}
