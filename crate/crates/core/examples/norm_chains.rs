//! Unitarily invariant norm chains and the log-convex interpolation scan.

use gconvex::funcspace::{Fn1D, GLink, GridSpec, Interval};
use gconvex::matanalysis::{norm_chain, norm_interpolation_scan, CMatrix, HermitianMatrix, NormSpec};

fn main() -> gconvex::Result<()> {
    let a = HermitianMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]])?;
    let b = HermitianMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 3.0]])?;
    let f = Fn1D::parse("x^2", Interval::closed(0.0, 6.0)?)?;
    let g = GLink::concave("x^0.5", Interval::closed(0.0, 36.0)?, Some("x^2"))?;
    for norm in [NormSpec::Operator, NormSpec::Trace, NormSpec::KyFan(1), NormSpec::Schatten(3.0)] {
        let r = norm_chain(&a, &b, &f, &g, norm)?;
        println!("{:>10}: {:?} holds={}", norm.to_string(), r.values, r.holds());
    }

    let pa = HermitianMatrix::from_diag(&[4.0, 1.0]);
    let pb = HermitianMatrix::from_diag(&[1.0, 4.0]);
    let x = CMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]])?;
    let grid = GridSpec::with_points(11)?;
    for norm in [NormSpec::Trace, NormSpec::Operator, NormSpec::Frobenius] {
        let s = norm_interpolation_scan(&pa, &x, &pb, norm, &grid)?;
        println!("{:>10}: log-convex {} (min second difference {:.3e})", norm.to_string(), s.log_convex, s.min_second_difference);
    }
    Ok(())
}
