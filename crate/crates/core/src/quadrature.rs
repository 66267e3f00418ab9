//! Composite Simpson quadrature.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    /// Number of subintervals; must be even and positive.
    pub panels: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { panels: 2048 }
    }
}

impl QuadratureSpec {
    pub fn new(panels: usize) -> Result<Self> {
        if panels == 0 || panels % 2 != 0 {
            return Err(Error::InvalidInput(format!("quadrature panel count must be even and positive, got {panels}")));
        }
        Ok(QuadratureSpec { panels })
    }
}

/// `∫ₐᵇ f` by composite Simpson. Errors from `f` propagate.
pub fn simpson<F>(mut f: F, a: f64, b: f64, spec: QuadratureSpec) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let n = QuadratureSpec::new(spec.panels)?.panels;
    if a == b {
        return Ok(0.0);
    }
    let h = (b - a) / n as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..n {
        let x = a + h * i as f64;
        if i % 2 == 1 {
            odd += f(x)?;
        } else {
            even += f(x)?;
        }
    }
    Ok(h / 3.0 * (f(a)? + 4.0 * odd + 2.0 * even + f(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_cubics() {
        let v = simpson(|x| Ok(x * x * x - 2.0 * x + 1.0), 0.0, 2.0, QuadratureSpec::new(2).unwrap()).unwrap();
        assert!((v - 2.0).abs() < 1e-14);
    }

    #[test]
    fn converges_on_exp() {
        let v = simpson(|x: f64| Ok(x.exp()), 0.0, 1.0, QuadratureSpec::default()).unwrap();
        assert!((v - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn odd_panels_rejected() {
        assert!(QuadratureSpec::new(7).is_err());
        assert!(simpson(|x| Ok(x), 0.0, 1.0, QuadratureSpec { panels: 3 }).is_err());
    }
}
