use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::eigen::eigh;
use super::matrix::{CMatrix, HermitianMatrix};

/// Unitarily invariant norms computed from singular values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormSpec {
    Operator,
    Trace,
    Frobenius,
    KyFan(usize),
    Schatten(f64),
}

impl NormSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            NormSpec::KyFan(k) if k == 0 || k > n => {
                Err(Error::InvalidInput(format!("Ky Fan order must lie in [1, {n}], got {k}")))
            }
            NormSpec::Schatten(p) if !(p >= 1.0 && p.is_finite()) => {
                Err(Error::InvalidInput(format!("Schatten exponent must be >= 1, got {p}")))
            }
            _ => Ok(()),
        }
    }

    pub fn of_singular_values(&self, sigma: &[f64]) -> Result<f64> {
        self.validate(sigma.len())?;
        Ok(match *self {
            NormSpec::Operator => sigma.first().copied().unwrap_or(0.0),
            NormSpec::Trace => sigma.iter().sum(),
            NormSpec::Frobenius => sigma.iter().map(|s| s * s).sum::<f64>().sqrt(),
            NormSpec::KyFan(k) => sigma[..k].iter().sum(),
            NormSpec::Schatten(p) => sigma.iter().map(|s| s.powf(p)).sum::<f64>().powf(1.0 / p),
        })
    }
}

impl fmt::Display for NormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormSpec::Operator => f.write_str("operator"),
            NormSpec::Trace => f.write_str("trace"),
            NormSpec::Frobenius => f.write_str("frobenius"),
            NormSpec::KyFan(k) => write!(f, "kyfan:{k}"),
            NormSpec::Schatten(p) => write!(f, "schatten:{p}"),
        }
    }
}

/// Accepts `operator`, `trace`, `frobenius`, `kyfan:K`, `schatten:P`.
impl FromStr for NormSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown norm '{s}'"));
        match s.split_once(':') {
            None => match s {
                "operator" => Ok(NormSpec::Operator),
                "trace" => Ok(NormSpec::Trace),
                "frobenius" => Ok(NormSpec::Frobenius),
                _ => Err(bad()),
            },
            Some(("kyfan", k)) => Ok(NormSpec::KyFan(k.parse().map_err(|_| bad())?)),
            Some(("schatten", p)) => {
                let p: f64 = p.parse().map_err(|_| bad())?;
                NormSpec::Schatten(p).validate(usize::MAX)?;
                Ok(NormSpec::Schatten(p))
            }
            _ => Err(bad()),
        }
    }
}

/// Singular values in descending order: the top half of the spectrum of the
/// Hermitian dilation `[[0, A], [A*, 0]]`, whose eigenvalues are `±σᵢ`.
/// Unlike square roots of the eigenvalues of `A*A`, small singular values
/// keep absolute accuracy near `ε‖A‖` instead of `√(ε)‖A‖`.
pub fn singular_values(a: &CMatrix) -> Result<Vec<f64>> {
    let n = a.dim();
    let mut d = CMatrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            d[(i, n + j)] = a[(i, j)];
            d[(n + j, i)] = a[(i, j)].conj();
        }
    }
    let values = eigh(&HermitianMatrix::symmetrize(d))?.values;
    Ok(values[..n].iter().map(|l| l.max(0.0)).collect())
}

pub fn uinorm(a: &CMatrix, norm: NormSpec) -> Result<f64> {
    norm.validate(a.dim())?;
    norm.of_singular_values(&singular_values(a)?)
}
