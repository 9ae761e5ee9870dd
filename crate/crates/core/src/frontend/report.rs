use std::collections::BTreeMap;

use serde::Serialize;

use crate::tracer::Contour;

/// Machine-readable output: the inputs, traced contours and named check
/// values (usually maximum residuals).
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub config: serde_json::Value,
    pub contours: Vec<Vec<[f64; 2]>>,
    pub checks: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(config: serde_json::Value) -> Self {
        Self {
            config,
            ..Self::default()
        }
    }

    pub fn with_contours(mut self, contours: &[Contour]) -> Self {
        self.contours = contours
            .iter()
            .map(|c| c.points.iter().map(|p| [p.x, p.y]).collect())
            .collect();
        self
    }

    pub fn check(mut self, name: impl Into<String>, value: f64) -> Self {
        self.checks.insert(name.into(), value);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
