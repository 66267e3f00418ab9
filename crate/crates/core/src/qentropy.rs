//! Density matrices, von Neumann entropy, quantum relative entropy and its
//! trace lower bound. Natural logarithms throughout.

use std::fmt;

use crate::error::{Error, Result};
use crate::matanalysis::{eigh, CMatrix, EigenSystem, HermitianMatrix};
use crate::report::{ChainReport, Order};

/// Allowed trace deviation and negative eigenvalue on validation.
pub const DENSITY_TOL: f64 = 1e-8;
/// Eigenvalues at or below this count as outside the support.
pub const SUPPORT_TOL: f64 = 1e-12;

/// Positive semidefinite, unit-trace Hermitian matrix with its eigensystem.
/// Slightly negative eigenvalues are clamped to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
    eigen: EigenSystem,
}

impl DensityMatrix {
    pub fn from_matrix(m: CMatrix) -> Result<Self> {
        validate_density(HermitianMatrix::new(m)?)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        validate_density(HermitianMatrix::from_real_rows(rows)?)
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn eigen(&self) -> &EigenSystem {
        &self.eigen
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `φ(ρ)` for a total scalar map on `[0, 1]`.
    fn map(&self, phi: impl Fn(f64) -> f64) -> HermitianMatrix {
        self.eigen.compose(&self.eigen.values.iter().map(|&l| phi(l)).collect::<Vec<_>>())
    }
}

pub fn validate_density(m: HermitianMatrix) -> Result<DensityMatrix> {
    let mut eigen = eigh(&m)?;
    let min = eigen.values.last().copied().unwrap_or(0.0);
    if min < -DENSITY_TOL {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    let trace = m.trace();
    if (trace - 1.0).abs() > DENSITY_TOL {
        return Err(Error::InvalidTrace { trace });
    }
    for l in &mut eigen.values {
        *l = l.max(0.0);
    }
    Ok(DensityMatrix { matrix: m, eigen })
}

/// `t ln t` with `0 ln 0 = 0`.
fn xlogx(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        t * t.ln()
    }
}

/// `t^t` with `0⁰ = 1`.
fn self_power(t: f64) -> f64 {
    xlogx(t).exp()
}

/// `t^{−t}` with the same convention.
fn inverse_self_power(t: f64) -> f64 {
    (-xlogx(t)).exp()
}

/// `S(ρ) = −Tr ρ ln ρ`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    -rho.eigen.values.iter().map(|&l| xlogx(l)).sum::<f64>()
}

/// Relative entropy, or `Infinite` when the support of `ρ` is not inside that of `σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Divergence {
    Finite(f64),
    Infinite,
}

impl Divergence {
    pub fn value(&self) -> f64 {
        match self {
            Divergence::Finite(v) => *v,
            Divergence::Infinite => f64::INFINITY,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Divergence::Finite(_))
    }
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Divergence::Finite(v) => write!(f, "{v}"),
            Divergence::Infinite => f.write_str("inf"),
        }
    }
}

/// `D(ρ|σ) = Tr ρ ln ρ − Tr ρ ln σ`, the second trace taken in σ's eigenbasis.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<Divergence> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    let es = &sigma.eigen;
    let mut cross = 0.0;
    for (j, &mu) in es.values.iter().enumerate() {
        let v = es.vector(j);
        let weight = rho.matrix.quadratic_form(&v)?;
        if mu <= SUPPORT_TOL {
            if weight > SUPPORT_TOL {
                return Ok(Divergence::Infinite);
            }
            continue;
        }
        cross += weight * mu.ln();
    }
    Ok(Divergence::Finite(-von_neumann_entropy(rho) - cross))
}

/// `Tr[XY]` for Hermitian `X`, `Y`.
fn trace_product(x: &HermitianMatrix, y: &HermitianMatrix) -> f64 {
    let (x, y) = (x.matrix(), y.matrix());
    let n = x.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += (x[(i, j)] * y[(j, i)]).re;
        }
    }
    s
}

/// `Tr[ρ^{−ρ} σ^{σ}]`, i.e. `Tr[exp(−ρ ln ρ) exp(σ ln σ)]`.
fn cross_trace(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    trace_product(&rho.map(inverse_self_power), &sigma.map(self_power))
}

/// Every term of `0 ≤ S(σ) − S(ρ) + Tr[ρ^{−ρ}σ^{σ} − I] ≤ D(ρ|σ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    pub entropy_rho: f64,
    pub entropy_sigma: f64,
    pub divergence: Divergence,
    pub bound: f64,
    /// `D − bound`; infinite when `D` is.
    pub gap: f64,
    pub tolerance: f64,
}

impl EntropyReport {
    /// `bound ≤ D` within tolerance.
    pub fn bound_holds(&self) -> bool {
        self.gap >= -self.tolerance
    }

    /// The claimed nonnegativity of the bound; recorded, not asserted.
    pub fn bound_nonnegative(&self) -> bool {
        self.bound >= -self.tolerance
    }

    /// `bound ≤ D` as a two-term chain.
    pub fn chain(&self) -> ChainReport {
        ChainReport::new(
            "relative entropy lower bound",
            Order::Ascending,
            vec![("bound", self.bound), ("D(rho|sigma)", self.divergence.value())],
        )
    }
}

pub fn entropy_lower_bound(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<EntropyReport> {
    let divergence = relative_entropy(rho, sigma)?;
    let entropy_rho = von_neumann_entropy(rho);
    let entropy_sigma = von_neumann_entropy(sigma);
    let bound = entropy_sigma - entropy_rho + cross_trace(rho, sigma) - rho.dim() as f64;
    Ok(EntropyReport {
        entropy_rho,
        entropy_sigma,
        divergence,
        bound,
        gap: divergence.value() - bound,
        tolerance: 1e-9,
    })
}

/// `½Tr[ρ^{−ρ}σ^{σ} + ρ^{ρ}σ^{−σ} − 2I] ≤ J(ρ|σ) = (D(ρ|σ) + D(σ|ρ))/2`.
pub fn jeffrey_bound(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<ChainReport> {
    let forward = relative_entropy(rho, sigma)?;
    let backward = relative_entropy(sigma, rho)?;
    let j = 0.5 * (forward.value() + backward.value());
    let bound = 0.5 * (cross_trace(rho, sigma) + cross_trace(sigma, rho) - 2.0 * rho.dim() as f64);
    Ok(ChainReport::new("jeffrey divergence bound", Order::Ascending, vec![("bound", bound), ("J(rho|sigma)", j)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matanalysis::C64;

    fn dm(rows: &[Vec<f64>]) -> DensityMatrix {
        DensityMatrix::from_real_rows(rows).unwrap()
    }

    fn rho74() -> DensityMatrix {
        dm(&[vec![2.0 / 7.0, 2.0 / 7.0], vec![2.0 / 7.0, 5.0 / 7.0]])
    }

    fn sigma64() -> DensityMatrix {
        dm(&[vec![0.5, 1.0 / 6.0], vec![1.0 / 6.0, 0.5]])
    }

    #[test]
    fn validation() {
        assert!(DensityMatrix::from_real_rows(&[vec![0.5, 0.0], vec![0.0, 0.5]]).is_ok());
        assert!(DensityMatrix::from_real_rows(&[vec![0.6, 0.0], vec![0.0, 0.4]]).is_ok());
        match DensityMatrix::from_real_rows(&[vec![0.6, 0.0], vec![0.0, 0.6]]) {
            Err(Error::InvalidTrace { trace }) => assert!((trace - 1.2).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            DensityMatrix::from_real_rows(&[vec![1.1, 0.0], vec![0.0, -0.1]]),
            Err(Error::NotPsd { .. })
        ));
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(von_neumann_entropy(&dm(&[vec![1.0, 0.0], vec![0.0, 0.0]])), 0.0);
        let half = dm(&[vec![0.5, 0.0], vec![0.0, 0.5]]);
        assert!((von_neumann_entropy(&half) - std::f64::consts::LN_2).abs() < 1e-15);
        // eigenvalues 6/7 and 1/7 from trace 1 and determinant 6/49
        let (a, b) = (6.0f64 / 7.0, 1.0f64 / 7.0);
        let want = -(a * a.ln() + b * b.ln());
        assert!((von_neumann_entropy(&rho74()) - want).abs() < 1e-14);
        assert!((want - 0.410116).abs() < 1e-6);
    }

    #[test]
    fn relative_entropy_pair() {
        let d = relative_entropy(&rho74(), &sigma64()).unwrap().value();
        assert!((d - 0.14388).abs() < 1e-5, "{d}");
        let d = relative_entropy(&sigma64(), &rho74()).unwrap().value();
        assert!((d - 0.174615).abs() < 1e-6, "{d}");
        assert!(relative_entropy(&rho74(), &rho74()).unwrap().value().abs() < 1e-14);
    }

    #[test]
    fn support_violation_is_infinite() {
        let pure0 = dm(&[vec![1.0, 0.0], vec![0.0, 0.0]]);
        let pure1 = dm(&[vec![0.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(relative_entropy(&pure0, &pure1).unwrap(), Divergence::Infinite);
        let mixed = dm(&[vec![0.5, 0.0], vec![0.0, 0.5]]);
        // supp(pure0) ⊂ supp(mixed): D = ln 2
        let d = relative_entropy(&pure0, &mixed).unwrap().value();
        assert!((d - std::f64::consts::LN_2).abs() < 1e-15);
        let r = entropy_lower_bound(&mixed, &pure0).unwrap();
        assert!(r.gap.is_infinite() && r.bound_holds());
        let j = jeffrey_bound(&pure0, &mixed).unwrap();
        assert!(j.values[1].is_infinite() && j.holds());
    }

    #[test]
    fn lower_bound_pair() {
        let r = entropy_lower_bound(&rho74(), &sigma64()).unwrap();
        assert!((r.bound - 0.0141518).abs() < 1e-6, "{}", r.bound);
        assert!(r.bound_holds() && r.bound_nonnegative() && r.chain().holds());
        let r = entropy_lower_bound(&sigma64(), &rho74()).unwrap();
        assert!((r.bound - 0.0155788).abs() < 1e-6, "{}", r.bound);

        let same = entropy_lower_bound(&rho74(), &rho74()).unwrap();
        assert!(same.bound.abs() < 1e-12 && same.divergence.value().abs() < 1e-12);
    }

    #[test]
    fn jeffrey_pair() {
        let j = jeffrey_bound(&rho74(), &sigma64()).unwrap();
        let (fwd, bwd) = (
            entropy_lower_bound(&rho74(), &sigma64()).unwrap(),
            entropy_lower_bound(&sigma64(), &rho74()).unwrap(),
        );
        // entropy terms cancel in the sum of the two directional bounds
        assert!((j.values[0] - 0.5 * (fwd.bound + bwd.bound)).abs() < 1e-14);
        assert!((j.values[1] - 0.5 * (fwd.divergence.value() + bwd.divergence.value())).abs() < 1e-14);
        assert!((j.values[0] - 0.0148653).abs() < 1e-6);
        assert!((j.values[1] - 0.159248).abs() < 1e-5);
        assert!(j.holds());
        let same = jeffrey_bound(&sigma64(), &sigma64()).unwrap();
        assert!(same.values.iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn complex_density() {
        let m = CMatrix::from_rows(vec![
            vec![C64::new(0.5, 0.0), C64::new(0.0, 0.25)],
            vec![C64::new(0.0, -0.25), C64::new(0.5, 0.0)],
        ])
        .unwrap();
        let rho = DensityMatrix::from_matrix(m).unwrap();
        // eigenvalues 3/4 and 1/4
        let want = -(0.75f64 * 0.75f64.ln() + 0.25 * 0.25f64.ln());
        assert!((von_neumann_entropy(&rho) - want).abs() < 1e-15);
    }

    mod props {
        use super::*;
        use crate::chains::{tangent_chain, TangentMode};
        use crate::funcspace::{Fn1D, GLink, Interval};
        use crate::matanalysis::random::{random_density, random_unitary, trial_rng};
        use proptest::prelude::*;

        fn density(n: usize, seed: u64, stream: u64) -> DensityMatrix {
            validate_density(random_density(n, &mut trial_rng(seed, stream))).unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(60))]

            #[test]
            fn entropy_is_unitarily_invariant(n in 2usize..=4, seed in any::<u64>()) {
                let rho = density(n, seed, 0);
                let u = random_unitary(n, &mut trial_rng(seed, 1)).unwrap();
                let rotated = u.matmul(rho.matrix().matrix()).unwrap().matmul(&u.adjoint()).unwrap();
                let s = von_neumann_entropy(&rho);
                let t = von_neumann_entropy(&DensityMatrix::from_matrix(rotated).unwrap());
                prop_assert!((s - t).abs() <= 1e-10, "{s} vs {t}");
            }

            #[test]
            fn bound_sits_between_zero_and_divergence(n in 2usize..=3, seed in any::<u64>()) {
                let r = entropy_lower_bound(&density(n, seed, 0), &density(n, seed, 1)).unwrap();
                prop_assert!(r.bound >= -1e-9, "bound {}", r.bound);
                prop_assert!(r.bound_holds(), "{r:?}");
            }

            #[test]
            fn scalar_tangent_engine(x in 0.001f64..=1.0, y in 0.001f64..=1.0) {
                let f = Fn1D::parse("-x*log(x)", Interval::new(0.0, 1.0, true, false).unwrap()).unwrap();
                let g = GLink::convex("exp(x)", Interval::closed(-1.0, 1.0).unwrap(), Some("log(x)")).unwrap();
                let r = tangent_chain(&f, &g, y, x, TangentMode::GConcave).unwrap();
                prop_assert!(r.holds(), "{r:?}");
                // the link-tangent term against its closed form f(y) + y^y (x^{-x} - y^{-y})
                let fy = -y * y.ln();
                let closed = fy + y.powf(y) * (x.powf(-x) - y.powf(-y));
                prop_assert!((r.values[1] - closed).abs() <= 1e-9 * (1.0 + closed.abs()));
                let summand = -x * x.ln() + y * y.ln() - y.powf(y) * x.powf(-x) + 1.0;
                prop_assert!(summand <= 1e-12);
            }
        }
    }
}
