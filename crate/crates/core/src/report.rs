//! Ordered inequality chains.

/// Default relative slack for chain verdicts: `tol = 1e-9·(1 + max|value|)`.
pub const CHAIN_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// `v₀ ≤ v₁ ≤ …`
    Ascending,
    /// `v₀ ≥ v₁ ≥ …`
    Descending,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The link between `values[index]` and `values[index + 1]` fails.
    Violated { index: usize },
}

/// Named values of one displayed chain and whether its ordering holds.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub name: String,
    pub labels: Vec<String>,
    pub values: Vec<f64>,
    /// Signed slack of each link in the asserted direction; negative means violated before tolerance.
    pub gaps: Vec<f64>,
    pub order: Order,
    pub rel_tol: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl ChainReport {
    pub fn new<S: Into<String>>(name: &str, order: Order, terms: Vec<(S, f64)>) -> Self {
        let (labels, values): (Vec<String>, Vec<f64>) = terms.into_iter().map(|(l, v)| (l.into(), v)).unzip();
        let mut r = ChainReport {
            name: name.to_string(),
            labels,
            values,
            gaps: Vec::new(),
            order,
            rel_tol: CHAIN_REL_TOL,
            tolerance: 0.0,
            verdict: Verdict::Holds,
        };
        r.evaluate();
        r
    }

    /// Re-judge with a different relative tolerance.
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.evaluate();
        self
    }

    fn evaluate(&mut self) {
        let scale = self.values.iter().filter(|v| v.is_finite()).fold(0.0f64, |m, v| m.max(v.abs()));
        self.tolerance = self.rel_tol * (1.0 + scale);
        self.gaps = self
            .values
            .windows(2)
            .map(|w| match self.order {
                Order::Ascending => w[1] - w[0],
                Order::Descending => w[0] - w[1],
            })
            .collect();
        self.verdict = match self.gaps.iter().position(|g| !(*g >= -self.tolerance)) {
            None => Verdict::Holds,
            Some(index) => Verdict::Violated { index },
        };
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn value(&self, label: &str) -> Option<f64> {
        self.labels.iter().position(|l| l == label).map(|i| self.values[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_matches_definition() {
        let r = ChainReport::new("t", Order::Ascending, vec![("a", 1.0), ("b", 2.0), ("c", 2.0)]);
        assert!(r.holds());
        assert_eq!(r.gaps, vec![1.0, 0.0]);
        let r = ChainReport::new("t", Order::Ascending, vec![("a", 1.0), ("b", 0.5)]);
        assert_eq!(r.verdict, Verdict::Violated { index: 0 });
        let r = ChainReport::new("t", Order::Descending, vec![("a", 1.0), ("b", 0.5), ("c", 0.6)]);
        assert_eq!(r.verdict, Verdict::Violated { index: 1 });
        // within slack
        let r = ChainReport::new("t", Order::Ascending, vec![("a", 1.0 + 1e-10), ("b", 1.0)]);
        assert!(r.holds());
        assert!(!r.clone().with_rel_tol(1e-12).holds());
        let r = ChainReport::new("t", Order::Ascending, vec![("a", f64::NAN), ("b", 1.0)]);
        assert!(!r.holds());
        let r = ChainReport::new("t", Order::Ascending, vec![("a", 0.1), ("b", f64::INFINITY)]);
        assert!(r.holds());
    }
}
