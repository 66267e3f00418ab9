use crate::error::{Error, Result};
use crate::funcspace::Fn1D;

use super::matrix::{CMatrix, HermitianMatrix, C64};

pub const MAX_SWEEPS: usize = 100;
/// Stop once the off-diagonal Frobenius mass is at most this times `‖A‖_F`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Eigenvalues within this multiple of `1 + ‖A‖` below a closed domain end snap onto it.
pub const PSD_CLAMP: f64 = 1e-10;

/// Eigenvalues in descending order with orthonormal eigenvector columns.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
    pub sweeps: usize,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, k: usize) -> Vec<C64> {
        (0..self.dim()).map(|i| self.vectors[(i, k)]).collect()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// `V·diag(μ)·V*`.
    pub fn compose(&self, mu: &[f64]) -> HermitianMatrix {
        let n = self.dim();
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = C64::new(0.0, 0.0);
                for (k, &w) in mu.iter().enumerate() {
                    s += self.vectors[(i, k)] * w * self.vectors[(j, k)].conj();
                }
                m[(i, j)] = s;
            }
        }
        HermitianMatrix::symmetrize(m)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.compose(&self.values)
    }

    /// `φ(A)` for a fallible scalar map applied to each eigenvalue.
    pub fn map<F>(&self, mut phi: F) -> Result<HermitianMatrix>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let mu = self.values.iter().map(|&l| phi(l)).collect::<Result<Vec<_>>>()?;
        Ok(self.compose(&mu))
    }
}

fn off_diagonal(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic complex Jacobi eigensolver.
pub fn eigh(a: &HermitianMatrix) -> Result<EigenSystem> {
    let n = a.dim();
    let mut m = a.matrix().clone();
    let mut v = CMatrix::identity(n);
    let target = OFF_DIAGONAL_TOL * m.frobenius();
    let mut sweeps = 0;
    while off_diagonal(&m) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off: off_diagonal(&m) });
        }
        sweeps += 1;
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                rotated = true;
                let phase = apq / r;
                let tau = (m[(q, q)].re - m[(p, p)].re) / (2.0 * r);
                let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (tau.abs() + tau.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                // U = diag(1, e^{-iφ}) on (p, q) followed by the real rotation
                let upp = C64::new(c, 0.0);
                let upq = C64::new(s, 0.0);
                let uqp = -phase.conj() * s;
                let uqq = phase.conj() * c;
                for k in 0..n {
                    let (kp, kq) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = kp * upp + kq * uqp;
                    m[(k, q)] = kp * upq + kq * uqq;
                    let (vp, vq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = vp * upp + vq * uqp;
                    v[(k, q)] = vp * upq + vq * uqq;
                }
                for k in 0..n {
                    let (pk, qk) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = upp.conj() * pk + uqp.conj() * qk;
                    m[(q, k)] = upq.conj() * pk + uqq.conj() * qk;
                }
                m[(p, q)] = C64::new(0.0, 0.0);
                m[(q, p)] = C64::new(0.0, 0.0);
                m[(p, p)].im = 0.0;
                m[(q, q)].im = 0.0;
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].re.total_cmp(&m[(i, i)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut vectors = CMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, src)];
        }
    }
    Ok(EigenSystem { values, vectors, sweeps })
}

/// `φ(A)` through the eigendecomposition. Eigenvalues within float noise of
/// a closed domain end are snapped onto it.
pub fn apply_fn(a: &HermitianMatrix, phi: &Fn1D) -> Result<HermitianMatrix> {
    apply_with(&eigh(a)?, phi)
}

pub fn apply_with(es: &EigenSystem, phi: &Fn1D) -> Result<HermitianMatrix> {
    let slack = PSD_CLAMP * (1.0 + es.spectral_radius());
    let dom = phi.domain();
    es.map(|l| {
        let x = dom.clamp_noise(l, slack);
        phi.eval(x).map_err(|e| match e {
            Error::OutOfDomain { domain, .. } => Error::OutOfDomain { x: l, domain },
            other => other,
        })
    })
}

/// Smallest eigenvalue, failing with [`Error::NotPsd`] when it is below `−PSD_CLAMP·(1 + ‖A‖)`.
pub fn require_psd(es: &EigenSystem) -> Result<f64> {
    let min = es.values.last().copied().unwrap_or(0.0);
    if min < -PSD_CLAMP * (1.0 + es.spectral_radius()) {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    Ok(min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcspace::Interval;

    fn herm(rows: &[Vec<f64>]) -> HermitianMatrix {
        HermitianMatrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn eigh_examples() {
        let es = eigh(&HermitianMatrix::from_diag(&[3.0, 1.0])).unwrap();
        assert_eq!(es.values, vec![3.0, 1.0]);
        assert_eq!(es.vectors, CMatrix::identity(2));

        let es = eigh(&herm(&[vec![2.0, -1.0], vec![-1.0, 1.0]])).unwrap();
        let s5 = 5f64.sqrt();
        assert!((es.values[0] - (3.0 + s5) / 2.0).abs() < 1e-14);
        assert!((es.values[1] - (3.0 - s5) / 2.0).abs() < 1e-14);

        let es = eigh(&herm(&[vec![2.0, 1.0], vec![1.0, 2.0]])).unwrap();
        assert!((es.values[0] - 3.0).abs() < 1e-14 && (es.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn ties_keep_index_order() {
        let es = eigh(&HermitianMatrix::from_diag(&[1.0, 2.0, 1.0])).unwrap();
        assert_eq!(es.values, vec![2.0, 1.0, 1.0]);
        assert_eq!(es.vectors[(0, 1)], C64::new(1.0, 0.0));
        assert_eq!(es.vectors[(2, 2)], C64::new(1.0, 0.0));
    }

    #[test]
    fn complex_entries() {
        // [[2, i], [-i, 2]] has eigenvalues 3 and 1
        let m = CMatrix::from_rows(vec![
            vec![C64::new(2.0, 0.0), C64::new(0.0, 1.0)],
            vec![C64::new(0.0, -1.0), C64::new(2.0, 0.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::new(m).unwrap();
        let es = eigh(&h).unwrap();
        assert!((es.values[0] - 3.0).abs() < 1e-14 && (es.values[1] - 1.0).abs() < 1e-14);
        let back = es.reconstruct();
        assert!(back.matrix().sub(h.matrix()).unwrap().frobenius() < 1e-14);
        let v0 = es.vector(0);
        let av = h.matrix().mat_vec(&v0).unwrap();
        for (x, y) in av.iter().zip(&v0) {
            assert!((x - y * 3.0).norm() < 1e-14);
        }
    }

    #[test]
    fn functional_calculus() {
        let dom = Interval::closed(0.0, 100.0).unwrap();
        let a = herm(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let id = apply_fn(&a, &Fn1D::parse("x", dom).unwrap()).unwrap();
        assert!(id.matrix().sub(a.matrix()).unwrap().max_abs() < 1e-10);
        let sq = apply_fn(&a, &Fn1D::parse("x^2", dom).unwrap()).unwrap();
        let direct = a.matrix().matmul(a.matrix()).unwrap();
        assert!(sq.matrix().sub(&direct).unwrap().max_abs() < 1e-13);
        let root = apply_fn(&a, &Fn1D::parse("sqrt(x)", dom).unwrap()).unwrap();
        let back = root.matrix().matmul(root.matrix()).unwrap();
        assert!(back.sub(a.matrix()).unwrap().max_abs() < 1e-9);

        let err = apply_fn(&herm(&[vec![-1.0, 0.0], vec![0.0, 1.0]]), &Fn1D::parse("sqrt(x)", dom).unwrap());
        assert!(matches!(err, Err(Error::OutOfDomain { x, .. }) if x == -1.0));
        // float-noise negatives are clamped onto the closed end
        let tiny = HermitianMatrix::from_diag(&[1.0, -1e-13]);
        assert!(apply_fn(&tiny, &Fn1D::parse("sqrt(x)", dom).unwrap()).is_ok());
    }

    mod props {
        use super::*;
        use crate::matanalysis::random::{random_hermitian, trial_rng};
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(60))]

            #[test]
            fn reconstruction_and_trace(n in 1usize..=12, seed in any::<u64>()) {
                let a = random_hermitian(n, &mut trial_rng(seed, 0));
                let es = eigh(&a).unwrap();
                let scale = a.matrix().frobenius();
                let err = es.reconstruct().matrix().sub(a.matrix()).unwrap().frobenius();
                prop_assert!(err <= 1e-9 * (1.0 + scale), "reconstruction error {err}");
                let sum: f64 = es.values.iter().sum();
                prop_assert!((sum - a.trace()).abs() <= 1e-10 * (1.0 + scale));
                prop_assert!(es.values.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}
