//! Relative entropy, its trace lower bound, and the Jeffrey divergence bound
//! for two qubit states.

use gconvex::qentropy::{entropy_lower_bound, jeffrey_bound, DensityMatrix};

fn main() -> gconvex::Result<()> {
    let rho = DensityMatrix::from_real_rows(&[vec![2.0 / 7.0, 2.0 / 7.0], vec![2.0 / 7.0, 5.0 / 7.0]])?;
    let sigma = DensityMatrix::from_real_rows(&[vec![0.5, 1.0 / 6.0], vec![1.0 / 6.0, 0.5]])?;
    for (name, x, y) in [("rho|sigma", &rho, &sigma), ("sigma|rho", &sigma, &rho)] {
        let r = entropy_lower_bound(x, y)?;
        println!(
            "D({name}) = {:.6}, bound = {:.7}, S = ({:.6}, {:.6}), holds {}",
            r.divergence.value(),
            r.bound,
            r.entropy_rho,
            r.entropy_sigma,
            r.bound_holds()
        );
    }
    let j = jeffrey_bound(&rho, &sigma)?;
    println!("Jeffrey: bound = {:.7} <= J = {:.6}: {}", j.values[0], j.values[1], j.holds());
    Ok(())
}
