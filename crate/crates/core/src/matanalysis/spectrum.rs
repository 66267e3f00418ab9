use std::fmt;

use crate::error::{Error, Result};

/// Reals kept in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumVector(Vec<f64>);

impl SpectrumVector {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        SpectrumVector(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn partial_sums(&self) -> Vec<f64> {
        self.0
            .iter()
            .scan(0.0, |acc, v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }

    pub fn scale(&self, s: f64) -> SpectrumVector {
        SpectrumVector::new(self.0.iter().map(|v| v * s).collect())
    }

    pub fn max_abs_diff(&self, other: &SpectrumVector) -> f64 {
        self.0.iter().zip(&other.0).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Semicolon-joined, descending.
impl fmt::Display for SpectrumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| format!("{v:?}")).collect();
        f.write_str(&parts.join(";"))
    }
}

/// Smallest `Σ_{i≤l} vᵢ − Σ_{i≤l} uᵢ` over `l`; `u ≺_w v` iff this is `≥ −tol`.
pub fn majorization_slack(u: &SpectrumVector, v: &SpectrumVector) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch(u.len(), v.len()));
    }
    Ok(u.partial_sums().iter().zip(v.partial_sums()).fold(f64::INFINITY, |m, (a, b)| m.min(b - a)))
}

/// `u ≺_w v`: every descending partial sum of `u` is at most that of `v` plus `tol`.
pub fn weak_majorize(u: &SpectrumVector, v: &SpectrumVector, tol: f64) -> Result<bool> {
    Ok(majorization_slack(u, v)? >= -tol)
}
