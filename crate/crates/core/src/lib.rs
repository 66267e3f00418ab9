pub mod acceptance;
pub mod chains;
pub mod cli;
pub mod convindex;
pub mod error;
pub mod expr;
pub mod funcspace;
pub mod matanalysis;
pub mod qentropy;
pub mod quadrature;
pub mod report;

pub use error::{Error, Result};
