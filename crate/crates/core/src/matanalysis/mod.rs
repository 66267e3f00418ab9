//! Hermitian matrices: Jacobi eigendecomposition, spectral functional
//! calculus, weak majorization, unitarily invariant norms, and the matrix
//! forms of the g-convexity chains.

pub mod chains;
pub mod eigen;
pub mod io;
pub mod matrix;
pub mod norms;
pub mod random;
pub mod spectrum;

pub use chains::{
    jensen_inner_product, majorization_chain, norm_chain, norm_interpolation_scan, operator_chain_sample,
    power_sqrt_chain, InterpolationScan, MajorizationChain, OperatorCounterexample, OperatorSample, PowerChain,
};
pub use eigen::{apply_fn, apply_with, eigh, require_psd, EigenSystem};
pub use io::{format_matrix, parse_matrix, read_matrix_file};
pub use matrix::{inner, CMatrix, HermitianMatrix, C64};
pub use norms::{singular_values, uinorm, NormSpec};
pub use random::{random_density, random_hermitian, random_psd, random_unit_vector, random_unitary, trial_rng};
pub use spectrum::{majorization_slack, weak_majorize, SpectrumVector};
