//! Scalar expressions in one variable `x`.
//!
//! Grammar (loosest to tightest): `+ -`, `* /`, unary `-`, `^` (right
//! associative), then literals, `x`, parentheses and the calls `exp( )`,
//! `log( )`, `sqrt( )`. There are no user-defined names.
//!
//! Every tree is built through [`Expr::unary`] / [`Expr::binary`], which fold
//! constant subtrees. A tree therefore never holds an operator node whose
//! operands are all constants, unless evaluating it would fail.

mod diff;
mod parse;

use std::fmt;

use crate::error::{Error, Result};

pub use parse::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Neg,
    Exp,
    Log,
    Sqrt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn constant(c: f64) -> Self {
        Expr::Const(c)
    }

    pub fn var() -> Self {
        Expr::Var
    }

    pub fn unary(op: UnaryOp, child: Expr) -> Self {
        if let Expr::Const(c) = child {
            if let Ok(v) = apply_unary(op, c, 0.0) {
                return Expr::Const(v);
            }
        }
        Expr::Unary(op, Box::new(child))
    }

    pub fn binary(op: BinaryOp, left: Expr, right: Expr) -> Self {
        if let (Expr::Const(l), Expr::Const(r)) = (&left, &right) {
            if let Ok(v) = apply_binary(op, *l, *r, 0.0) {
                return Expr::Const(v);
            }
        }
        Expr::Binary(op, Box::new(left), Box::new(right))
    }

    pub fn neg(self) -> Self {
        Expr::unary(UnaryOp::Neg, self)
    }

    pub fn exp(self) -> Self {
        Expr::unary(UnaryOp::Exp, self)
    }

    pub fn ln(self) -> Self {
        Expr::unary(UnaryOp::Log, self)
    }

    pub fn sqrt(self) -> Self {
        Expr::unary(UnaryOp::Sqrt, self)
    }

    pub fn add(self, rhs: Expr) -> Self {
        Expr::binary(BinaryOp::Add, self, rhs)
    }

    pub fn sub(self, rhs: Expr) -> Self {
        Expr::binary(BinaryOp::Sub, self, rhs)
    }

    pub fn mul(self, rhs: Expr) -> Self {
        Expr::binary(BinaryOp::Mul, self, rhs)
    }

    pub fn div(self, rhs: Expr) -> Self {
        Expr::binary(BinaryOp::Div, self, rhs)
    }

    pub fn pow(self, rhs: Expr) -> Self {
        Expr::binary(BinaryOp::Pow, self, rhs)
    }

    pub fn is_const(&self) -> bool {
        matches!(self, Expr::Const(_))
    }

    /// Evaluate at `x`. Any operation leaving the real domain, and any
    /// non-finite intermediate, is reported as [`Error::Domain`].
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            Expr::Const(c) => Ok(*c),
            Expr::Var => {
                if x.is_finite() {
                    Ok(x)
                } else {
                    Err(Error::Domain { what: "non-finite argument", x })
                }
            }
            Expr::Unary(op, child) => apply_unary(*op, child.eval(x)?, x),
            Expr::Binary(op, l, r) => apply_binary(*op, l.eval(x)?, r.eval(x)?, x),
        }
    }

    /// Symbolic derivative with respect to `x`.
    pub fn differentiate(&self) -> Expr {
        diff::differentiate(self)
    }

    /// Replace every occurrence of `x` by `inner`, i.e. build `self ∘ inner`.
    pub fn compose(&self, inner: &Expr) -> Expr {
        match self {
            Expr::Const(c) => Expr::Const(*c),
            Expr::Var => inner.clone(),
            Expr::Unary(op, child) => Expr::unary(*op, child.compose(inner)),
            Expr::Binary(op, l, r) => Expr::binary(*op, l.compose(inner), r.compose(inner)),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var => 1,
            Expr::Unary(_, c) => 1 + c.size(),
            Expr::Binary(_, l, r) => 1 + l.size() + r.size(),
        }
    }
}

fn finite(v: f64, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain { what: "non-finite result", x })
    }
}

fn apply_unary(op: UnaryOp, a: f64, x: f64) -> Result<f64> {
    match op {
        UnaryOp::Neg => Ok(-a),
        UnaryOp::Exp => finite(a.exp(), x),
        UnaryOp::Log => {
            if a <= 0.0 {
                Err(Error::Domain { what: "log of nonpositive", x })
            } else {
                finite(a.ln(), x)
            }
        }
        UnaryOp::Sqrt => {
            if a < 0.0 {
                Err(Error::Domain { what: "sqrt of negative", x })
            } else {
                Ok(a.sqrt())
            }
        }
    }
}

fn apply_binary(op: BinaryOp, a: f64, b: f64, x: f64) -> Result<f64> {
    match op {
        BinaryOp::Add => finite(a + b, x),
        BinaryOp::Sub => finite(a - b, x),
        BinaryOp::Mul => finite(a * b, x),
        BinaryOp::Div => {
            if b == 0.0 {
                Err(Error::Domain { what: "division by zero", x })
            } else {
                finite(a / b, x)
            }
        }
        BinaryOp::Pow => {
            // 0^0 = 1 by convention (powf agrees).
            if a == 0.0 && b < 0.0 {
                Err(Error::Domain { what: "zero to a negative power", x })
            } else if a < 0.0 && b.fract() != 0.0 {
                Err(Error::Domain { what: "negative base with non-integer exponent", x })
            } else {
                finite(a.powf(b), x)
            }
        }
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesised form; parsing it back yields the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => {
                if c.is_sign_negative() {
                    write!(f, "(-{})", -c)
                } else {
                    write!(f, "{c}")
                }
            }
            Expr::Var => f.write_str("x"),
            Expr::Unary(op, c) => match op {
                UnaryOp::Neg => write!(f, "(-{c})"),
                UnaryOp::Exp => write!(f, "exp({c})"),
                UnaryOp::Log => write!(f, "log({c})"),
                UnaryOp::Sqrt => write!(f, "sqrt({c})"),
            },
            Expr::Binary(op, l, r) => {
                let sym = match op {
                    BinaryOp::Add => '+',
                    BinaryOp::Sub => '-',
                    BinaryOp::Mul => '*',
                    BinaryOp::Div => '/',
                    BinaryOp::Pow => '^',
                };
                write!(f, "({l}{sym}{r})")
            }
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(s: &str, x: f64) -> Result<f64> {
        parse(s).unwrap().eval(x)
    }

    #[test]
    fn evaluates_basic_forms() {
        assert_eq!(ev("x^2", 3.0).unwrap(), 9.0);
        assert_eq!(ev("exp(x)", 0.0).unwrap(), 1.0);
        assert_eq!(ev("0^0", 0.0).unwrap(), 1.0);
        assert_eq!(ev("x^0", 0.0).unwrap(), 1.0);
        assert_eq!(ev("(-2)^3", 0.0).unwrap(), -8.0);
    }

    #[test]
    fn domain_errors() {
        for (s, x) in [("log(x)", 0.0), ("sqrt(x)", -1.0), ("1/x", 0.0), ("x^(-1)", 0.0), ("x^0.5", -4.0)] {
            assert!(matches!(ev(s, x), Err(Error::Domain { .. })), "{s} at {x}");
        }
        assert!(matches!(ev("exp(x)", 1000.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn folding_keeps_failing_constants() {
        let e = parse("log(0-1)").unwrap();
        assert!(!e.is_const());
        assert_eq!(parse("2*3+1").unwrap(), Expr::Const(7.0));
    }

    #[test]
    fn compose_substitutes() {
        let g = parse("x+sqrt(x)").unwrap();
        let f = parse("x^2").unwrap();
        let h = g.compose(&f);
        assert!((h.eval(3.0).unwrap() - 12.0).abs() < 1e-15);
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            Just(Expr::Var),
            (-50.0f64..50.0).prop_map(Expr::Const),
            (0u32..20).prop_map(|n| Expr::Const(n as f64)),
        ];
        leaf.prop_recursive(5, 48, 2, |inner| {
            prop_oneof![
                (inner.clone(), 0..4u8).prop_map(|(c, k)| {
                    let op = [UnaryOp::Neg, UnaryOp::Exp, UnaryOp::Log, UnaryOp::Sqrt][k as usize];
                    Expr::unary(op, c)
                }),
                (inner.clone(), inner, 0..5u8).prop_map(|(l, r, k)| {
                    let op = [BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div, BinaryOp::Pow][k as usize];
                    Expr::binary(op, l, r)
                }),
            ]
        })
    }

    proptest! {
        #[test]
        fn serialize_then_parse_is_identity(e in arb_expr()) {
            let text = e.to_string();
            let back = parse(&text).unwrap();
            prop_assert_eq!(back, e);
        }
    }
}
