use super::{BinaryOp, Expr, UnaryOp};

pub(super) fn differentiate(e: &Expr) -> Expr {
    match e {
        Expr::Const(_) => Expr::Const(0.0),
        Expr::Var => Expr::Const(1.0),
        Expr::Unary(op, u) => {
            let du = differentiate(u);
            let u = (**u).clone();
            match op {
                UnaryOp::Neg => du.neg(),
                UnaryOp::Exp => u.exp().mul(du),
                UnaryOp::Log => du.div(u),
                UnaryOp::Sqrt => du.div(Expr::Const(2.0).mul(u.sqrt())),
            }
        }
        Expr::Binary(op, u, v) => {
            let du = differentiate(u);
            let dv = differentiate(v);
            let (u, v) = ((**u).clone(), (**v).clone());
            match op {
                BinaryOp::Add => du.add(dv),
                BinaryOp::Sub => du.sub(dv),
                BinaryOp::Mul => du.mul(v).add(u.mul(dv)),
                BinaryOp::Div => du.mul(v.clone()).sub(u.mul(dv)).div(v.clone().mul(v)),
                BinaryOp::Pow => match v {
                    Expr::Const(c) if c == 0.0 => Expr::Const(0.0),
                    Expr::Const(c) => Expr::Const(c).mul(u.pow(Expr::Const(c - 1.0))).mul(du),
                    // d/dx exp(v log u)
                    v => {
                        let this = u.clone().pow(v.clone());
                        this.mul(dv.mul(u.clone().ln()).add(v.mul(du).div(u)))
                    }
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::expr::parse;

    fn d_at(s: &str, x: f64) -> f64 {
        parse(s).unwrap().differentiate().eval(x).unwrap()
    }

    fn central(s: &str, x: f64, h: f64) -> f64 {
        let e = parse(s).unwrap();
        (e.eval(x + h).unwrap() - e.eval(x - h).unwrap()) / (2.0 * h)
    }

    #[test]
    fn rule_examples() {
        assert_eq!(d_at("x^2", 3.0), 6.0);
        assert_eq!(d_at("log(x)", 2.0), 0.5);
        let v = d_at("exp(x)*x", 1.0);
        assert!((v - 2.0 * std::f64::consts::E).abs() < 1e-12);
        assert!((v - central("exp(x)*x", 1.0, 1e-6)).abs() < 1e-5);
    }

    #[test]
    fn variable_exponent_uses_log_rule() {
        // d/dx x^x = x^x (log x + 1)
        let x: f64 = 1.7;
        let expected = x.powf(x) * (x.ln() + 1.0);
        assert!((d_at("x^x", x) - expected).abs() < 1e-12);
        assert!((d_at("2^x", x) - 2f64.powf(x) * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn second_derivatives() {
        let e = parse("x^4").unwrap();
        let d2 = e.differentiate().differentiate();
        assert!((d2.eval(2.0).unwrap() - 48.0).abs() < 1e-12);
        let e = parse("x+sqrt(x)").unwrap();
        let d2 = e.differentiate().differentiate();
        let x: f64 = 4.0;
        assert!((d2.eval(x).unwrap() + 0.25 * x.powf(-1.5)).abs() < 1e-14);
    }
}
