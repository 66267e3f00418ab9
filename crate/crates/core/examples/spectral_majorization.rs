//! Eigenvalue weak majorization for a weighted pair of 2x2 matrices, along
//! with the closed-form power chain.

use gconvex::funcspace::{Fn1D, GLink, Interval};
use gconvex::matanalysis::{majorization_chain, power_sqrt_chain, HermitianMatrix};

fn main() -> gconvex::Result<()> {
    let ms = vec![
        HermitianMatrix::from_real_rows(&[vec![2.0, -1.0], vec![-1.0, 1.0]])?,
        HermitianMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]])?,
    ];
    let ws = [0.5, 0.5];
    let f = Fn1D::parse("x^2", Interval::closed(0.0, 3.0)?)?;
    let g = GLink::concave("x+sqrt(x)", Interval::closed(0.0, 20.0)?, Some("(2*x+1-sqrt(4*x+1))/2"))?;
    let chain = majorization_chain(&ms, &ws, &f, &g)?;
    for (label, s) in chain.labels.iter().zip(&chain.spectra) {
        println!("{label:>18}: {s}");
    }
    println!("weakly majorized: {:?}", chain.majorized());

    let p = power_sqrt_chain(&ms, &ws, 2.0)?;
    println!("closed-form middle {} vs generic {} (gap {:e})", p.chain.spectra[1], p.generic_middle, p.path_gap);
    Ok(())
}
