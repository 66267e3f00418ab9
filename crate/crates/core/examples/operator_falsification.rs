//! Random search for PSD-order violations of the operator chain. The square
//! root is operator concave and passes; the square is not and fails.

use gconvex::funcspace::{Fn1D, GLink, Interval};
use gconvex::matanalysis::operator_chain_sample;

fn main() -> gconvex::Result<()> {
    let dom = Interval::closed(0.0, 50.0)?;
    let cases = [("x^0.5", "x^2", "x^0.5"), ("x^2", "x^2", "x^0.5")];
    for (ftext, gtext, ginv) in cases {
        let f = Fn1D::parse(ftext, dom)?;
        let g = GLink::convex(gtext, Interval::closed(0.0, 2500.0)?, Some(ginv))?;
        let s = operator_chain_sample(&f, &g, 3, 500, 42)?;
        println!(
            "f={ftext}, g={gtext}: {} counterexamples in {} trials, most negative eigenvalue {:.3e}",
            s.counterexamples.len(),
            s.trials,
            s.worst
        );
        if let Some(ce) = s.counterexamples.first() {
            println!("  first at trial {} (v = {:.4}, link {})", ce.trial, ce.v, ce.link);
        }
    }
    Ok(())
}
