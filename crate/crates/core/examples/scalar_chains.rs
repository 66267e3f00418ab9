//! Refined Jensen, Young, Heinz and superadditivity chains.

use gconvex::chains::{heinz_refined, jensen_chain, superadditivity_chain, young_refined, WeightedSample};
use gconvex::funcspace::{is_gconvex, Fn1D, GLink, GridSpec, Interval};
use gconvex::report::ChainReport;

fn show(r: &ChainReport) {
    println!("{} ({}):", r.name, if r.holds() { "holds" } else { "violated" });
    for (label, v) in r.labels.iter().zip(&r.values) {
        println!("  {label:>20} = {v:.12}");
    }
}

fn main() -> gconvex::Result<()> {
    let f = Fn1D::parse("exp(x)", Interval::closed(0.0, 1.0)?)?;
    let g = GLink::concave("x^0.5", Interval::closed(1.0, std::f64::consts::E)?, Some("x^2"))?;
    println!("exp is sqrt-convex on [0,1]: {}", is_gconvex(&f, &g, &GridSpec::default())?.holds());
    show(&jensen_chain(&f, &g, &WeightedSample::new(vec![0.0, 0.3, 1.0], vec![0.2, 0.5, 0.3])?)?);

    show(&young_refined(1.0, 9.0, 0.25, 0.5)?);
    show(&heinz_refined(1.0, 9.0, 0.25, 0.5)?);

    let sq = Fn1D::parse("x^2", Interval::closed(0.0, 4.0)?)?;
    let root = GLink::concave("x^0.5", Interval::closed(0.0, 16.0)?, Some("x^2"))?;
    show(&superadditivity_chain(&sq, &root, 1.0, 2.5)?);
    Ok(())
}
