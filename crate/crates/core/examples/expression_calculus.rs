//! Parse an expression, differentiate it symbolically, and compare with a
//! central difference.

use gconvex::expr::parse;

fn main() -> gconvex::Result<()> {
    let f = parse("x^3*exp(-x)+sqrt(x)")?;
    let d1 = f.differentiate();
    let d2 = d1.differentiate();
    println!("f   = {f}");
    println!("f'  = {d1}");
    println!("f'' = {d2}");
    let h = 1e-5;
    for x in [0.5, 1.0, 2.0, 4.0] {
        let fd = (f.eval(x + h)? - f.eval(x - h)?) / (2.0 * h);
        println!("x={x}: f={:.10} f'={:.10} central difference={:.10}", f.eval(x)?, d1.eval(x)?, fd);
    }
    Ok(())
}
