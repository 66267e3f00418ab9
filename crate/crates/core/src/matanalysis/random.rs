//! Seeded random matrices. Trial `i` of a run with seed `s` uses the stream `s + i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

use super::eigen::eigh;
use super::matrix::{CMatrix, HermitianMatrix, C64};

/// Ridge added to `G*G` so random PSD matrices are well conditioned.
pub const PSD_RIDGE: f64 = 1e-3;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

fn unit_entry<R: Rng>(rng: &mut R) -> C64 {
    C64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

/// Entries with real and imaginary parts uniform in `[−1, 1]`.
pub fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    let rows = (0..n).map(|_| (0..n).map(|_| unit_entry(rng)).collect()).collect();
    CMatrix::from_rows(rows).expect("square by construction")
}

pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> HermitianMatrix {
    HermitianMatrix::symmetrize(random_matrix(n, rng))
}

/// `G*G + εI`.
pub fn random_psd<R: Rng>(n: usize, rng: &mut R) -> HermitianMatrix {
    let g = random_matrix(n, rng);
    let gram = g.adjoint().matmul(&g).expect("same dimension");
    HermitianMatrix::symmetrize(gram.add(&CMatrix::identity(n).scale(PSD_RIDGE)).expect("same dimension"))
}

/// Random PSD matrix normalized to unit trace.
pub fn random_density<R: Rng>(n: usize, rng: &mut R) -> HermitianMatrix {
    let a = random_psd(n, rng);
    let t = a.trace();
    a.scale(1.0 / t)
}

pub fn random_unit_vector<R: Rng>(n: usize, rng: &mut R) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..n).map(|_| unit_entry(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Eigenvector matrix of a random Hermitian matrix.
pub fn random_unitary<R: Rng>(n: usize, rng: &mut R) -> Result<CMatrix> {
    Ok(eigh(&random_hermitian(n, rng))?.vectors)
}
