use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diag(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(n, r.len()));
        }
        Ok(CMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    fn check_dim(&self, other: &CMatrix) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.n, other.n))
        }
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    m.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(m)
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        Ok(CMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        Ok(CMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, s: f64) -> CMatrix {
        CMatrix { n: self.n, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, a| m.max(a.norm()))
    }

    pub fn mat_vec(&self, x: &[C64]) -> Result<Vec<C64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(self.n, x.len()));
        }
        Ok((0..self.n).map(|i| (0..self.n).map(|j| self[(i, j)] * x[j]).sum()).collect())
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::io::format_matrix(self))
    }
}

/// `⟨x, y⟩ = Σ xᵢ conj(yᵢ)`.
pub fn inner(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

/// A Hermitian matrix; the constructor replaces `A` by `(A + A*)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    m: CMatrix,
    adjustment: f64,
}

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        let skew = m.sub(&m.adjoint())?.max_abs();
        let scale = m.max_abs();
        if !(skew <= 1e-12 * (1.0 + scale)) {
            return Err(Error::InvalidInput(format!("matrix is not Hermitian: max |A - A*| = {skew:e}")));
        }
        Ok(Self::symmetrize(m))
    }

    /// Symmetrize without the tolerance check; for matrices Hermitian by construction.
    pub(crate) fn symmetrize(m: CMatrix) -> Self {
        let adj = m.adjoint();
        let sym = m.add(&adj).expect("same dimension").scale(0.5);
        let adjustment = sym.sub(&m).expect("same dimension").max_abs();
        let mut sym = sym;
        for i in 0..sym.n {
            sym[(i, i)].im = 0.0;
        }
        HermitianMatrix { m: sym, adjustment }
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(CMatrix::from_real_rows(rows)?)
    }

    pub fn from_diag(d: &[f64]) -> Self {
        Self::symmetrize(CMatrix::from_diag(d))
    }

    pub fn identity(n: usize) -> Self {
        Self::symmetrize(CMatrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.m.n
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    /// Largest entry change made by symmetrization.
    pub fn adjustment(&self) -> f64 {
        self.adjustment
    }

    pub fn add(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        Ok(Self::symmetrize(self.m.add(&other.m)?))
    }

    pub fn sub(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        Ok(Self::symmetrize(self.m.sub(&other.m)?))
    }

    pub fn scale(&self, s: f64) -> HermitianMatrix {
        Self::symmetrize(self.m.scale(s))
    }

    pub fn trace(&self) -> f64 {
        self.m.trace().re
    }

    /// `Σ wᵢ Aᵢ`.
    pub fn weighted_sum(ms: &[HermitianMatrix], ws: &[f64]) -> Result<HermitianMatrix> {
        if ms.len() != ws.len() {
            return Err(Error::DimensionMismatch(ms.len(), ws.len()));
        }
        let first = ms.first().ok_or_else(|| Error::InvalidInput("no matrices given".into()))?;
        let mut acc = CMatrix::zeros(first.dim());
        for (m, &w) in ms.iter().zip(ws) {
            acc = acc.add(&m.m.scale(w))?;
        }
        Ok(Self::symmetrize(acc))
    }

    /// `⟨Ax, x⟩`, real for Hermitian `A`.
    pub fn quadratic_form(&self, x: &[C64]) -> Result<f64> {
        Ok(inner(&self.m.mat_vec(x)?, x).re)
    }
}
