//! Both Hermite-Hadamard refinements for a log-convex function, with the
//! integral terms computed at two quadrature resolutions.

use gconvex::chains::{hh_chain_v1, hh_chain_v2};
use gconvex::funcspace::{Fn1D, GLink, Interval};
use gconvex::quadrature::QuadratureSpec;

fn main() -> gconvex::Result<()> {
    let (a, b) = (0.0, 2.0);
    let f = Fn1D::parse("exp(x^2/2)", Interval::closed(a, b)?)?;
    let g = GLink::concave("log(x)", Interval::closed(1.0, 8.0)?, Some("exp(x)"))?;
    for panels in [1000, 10000] {
        let q = QuadratureSpec::new(panels)?;
        for r in [hh_chain_v1(&f, &g, a, b, q)?, hh_chain_v2(&f, &g, a, b, q)?] {
            println!("{} with {panels} panels: {}", r.name, if r.holds() { "holds" } else { "violated" });
            for (label, v) in r.labels.iter().zip(&r.values) {
                println!("  {label:>22} = {v:.12}");
            }
        }
    }
    Ok(())
}
