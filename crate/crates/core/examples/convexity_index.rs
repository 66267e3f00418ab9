//! Index of convexity from the differential criterion, checked against a
//! scan over exponents.

use gconvex::convindex::{exp_lower_bound, exponent_scan, index_differential, logconvex_index_check};
use gconvex::funcspace::{Fn1D, GridSpec, Interval};

fn main() -> gconvex::Result<()> {
    let grid = GridSpec::default();
    let dom = Interval::open(0.1, 10.0)?;
    let rs: Vec<f64> = (0..=20).map(|i| 1.0 + 0.25 * i as f64).collect();
    for text in ["x^2", "x^3+x", "x^4", "exp(x)", "exp(x^2)"] {
        let f = Fn1D::parse(text, dom)?;
        let r = index_differential(&f, &grid)?;
        let scan = exponent_scan(&f, &rs, &grid)?;
        let lc = logconvex_index_check(&f, &grid)?;
        println!(
            "{text:>9}: index {} (witness {:?}), convex exponents {:?}, log-convex {}",
            r.value,
            r.witness,
            scan.interval(),
            lc.log_convex
        );
    }
    let f = Fn1D::parse("exp(x^2)", Interval::open(0.1, 3.0)?)?;
    let b = exp_lower_bound(&f, 1.0, &grid)?;
    println!("exp(x^2) >= {:.6} exp({:.6} (x - 1)) on [1, 3): {}", b.alpha, b.beta, b.verified);
    Ok(())
}
