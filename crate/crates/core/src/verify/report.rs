use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Outcome of one certification check.
///
/// `metric` is the quantity the check bounds (an extreme eigenvalue, a
/// maximal deviation, a violation count) and `threshold` is the bound it was
/// compared against; `pass` holds iff the comparison succeeded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertReport {
    pub name: String,
    pub instance: String,
    pub size: usize,
    pub metric: f64,
    pub threshold: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub seed: Option<u64>,
    pub ms: f64,
}

impl CertReport {
    pub(crate) fn new(name: impl Into<String>, size: usize, metric: f64, threshold: f64, tolerance: f64, pass: bool) -> Self {
        CertReport {
            name: name.into(),
            instance: String::new(),
            size,
            metric,
            threshold,
            tolerance,
            pass,
            seed: None,
            ms: 0.0,
        }
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }
}
