//! Convex exponents and the index of convexity.
//!
//! For positive convex `f`, `C_exp(f) = {r ≥ 1 : f^{1/r} convex}` and the
//! index is its supremum. With two derivatives, `f^{1/r}` is convex exactly
//! when `(1 − 1/r) f′² ≤ f f″`, so the index is `1/(1 − m)` with
//! `m = inf f f″ / f′²`, or unbounded when `m ≥ 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::funcspace::{check_convex_on_grid, convexity_of_samples, ConvexityVerdict, Fn1D, GridSpec, Interval};

/// Criterion values at or above `1 − INFINITE_INDEX_SLACK` count as `m ≥ 1`.
pub const INFINITE_INDEX_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexValue {
    Finite(f64),
    Infinite,
}

impl IndexValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, IndexValue::Infinite)
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            IndexValue::Finite(v) => Some(*v),
            IndexValue::Infinite => None,
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Finite(v) => write!(f, "{v}"),
            IndexValue::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexMethod {
    Differential,
    GridScan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexResult {
    pub value: IndexValue,
    /// `inf f f″/f′²` over constrained grid points; `None` when `f′` vanishes everywhere.
    pub infimum: Option<f64>,
    /// Grid point attaining the infimum (lowest `x` on ties).
    pub witness: Option<f64>,
    pub method: IndexMethod,
}

fn require_positive(xs: &[f64], ys: &[f64]) -> Result<()> {
    match xs.iter().zip(ys).find(|(_, y)| !(**y > 0.0)) {
        Some((x, y)) => Err(Error::Precondition(format!("f must be positive, f({x}) = {y}"))),
        None => Ok(()),
    }
}

fn require_convex(f: &Fn1D, grid: &GridSpec) -> Result<()> {
    match check_convex_on_grid(f, grid)? {
        ConvexityVerdict::Convex => Ok(()),
        ConvexityVerdict::NonConvex { witness, excess } => Err(Error::Precondition(format!(
            "f is not convex: midpoint excess {excess:e} at {witness:?}"
        ))),
    }
}

/// Index of convexity from the differential criterion.
pub fn index_differential(f: &Fn1D, grid: &GridSpec) -> Result<IndexResult> {
    let (xs, ys) = f.sample(grid)?;
    require_positive(&xs, &ys)?;
    require_convex(f, grid)?;
    let mut best: Option<(f64, f64)> = None;
    for (&x, &y) in xs.iter().zip(&ys) {
        let d1 = f.d1(x)?;
        // at stationary points the criterion's left side vanishes
        if d1.abs() <= 1e-8 * (1.0 + y.abs()) {
            continue;
        }
        let ratio = y * f.d2(x)? / (d1 * d1);
        if best.map_or(true, |(m, _)| ratio < m) {
            best = Some((ratio, x));
        }
    }
    let value = match best {
        Some((m, _)) if m < 1.0 - INFINITE_INDEX_SLACK => IndexValue::Finite((1.0 / (1.0 - m)).max(1.0)),
        _ => IndexValue::Infinite,
    };
    Ok(IndexResult {
        value,
        infimum: best.map(|b| b.0),
        witness: best.map(|b| b.1),
        method: IndexMethod::Differential,
    })
}

/// Grid convexity of `f^{1/r}` for each tested exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentScan {
    pub exponents: Vec<f64>,
    pub convex: Vec<bool>,
    /// Largest `r` such that every tested exponent up to it is convex.
    pub upper: Option<f64>,
    /// Flags never switch from false back to true along increasing `r`.
    pub monotone: bool,
}

impl ExponentScan {
    /// The estimated `[1, r*]`, `None` if even the smallest exponent failed.
    pub fn interval(&self) -> Option<(f64, f64)> {
        self.upper.map(|u| (1.0, u))
    }
}

pub fn exponent_scan(f: &Fn1D, exponents: &[f64], grid: &GridSpec) -> Result<ExponentScan> {
    if let Some(r) = exponents.iter().find(|r| !(**r >= 1.0)) {
        return Err(Error::InvalidInput(format!("convex exponents must be >= 1, got {r}")));
    }
    let (xs, ys) = f.sample(grid)?;
    require_positive(&xs, &ys)?;
    let convex: Vec<bool> = exponents
        .iter()
        .map(|r| {
            let root: Vec<f64> = ys.iter().map(|y| y.powf(1.0 / r)).collect();
            convexity_of_samples(&xs, &root).is_convex()
        })
        .collect();

    let mut order: Vec<usize> = (0..exponents.len()).collect();
    order.sort_by(|&i, &j| exponents[i].total_cmp(&exponents[j]));
    let mut upper = None;
    let mut seen_false = false;
    let mut monotone = true;
    for &i in &order {
        if convex[i] {
            if seen_false {
                monotone = false;
            } else {
                upper = Some(exponents[i]);
            }
        } else {
            seen_false = true;
        }
    }
    Ok(ExponentScan { exponents: exponents.to_vec(), convex, upper, monotone })
}

/// Grid-scan estimate of the index: the largest convex exponent among `rs`,
/// or unbounded when every tested exponent is convex.
pub fn index_grid_scan(f: &Fn1D, exponents: &[f64], grid: &GridSpec) -> Result<IndexResult> {
    let scan = exponent_scan(f, exponents, grid)?;
    let value = if scan.convex.iter().all(|c| *c) {
        IndexValue::Infinite
    } else {
        IndexValue::Finite(scan.upper.unwrap_or(1.0))
    };
    Ok(IndexResult { value, infimum: None, witness: None, method: IndexMethod::GridScan })
}

/// Closed-form solutions of the equality cases of the differential criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EqualityCase {
    /// `f(x) = ((c/r)x + d)^r`, equality in `(1 − 1/r) f′² = f f″`.
    FiniteR { c: f64, d: f64, r: f64 },
    /// `f(x) = α e^{βx}`, equality in `f′² = f f″`.
    Exponential { alpha: f64, beta: f64 },
}

impl EqualityCase {
    pub fn function(&self, domain: Interval) -> Fn1D {
        let formula = match *self {
            EqualityCase::FiniteR { c, d, r } => Expr::constant(c / r)
                .mul(Expr::var())
                .add(Expr::constant(d))
                .pow(Expr::constant(r)),
            EqualityCase::Exponential { alpha, beta } => {
                Expr::constant(alpha).mul(Expr::constant(beta).mul(Expr::var()).exp())
            }
        };
        Fn1D::new(formula, domain)
    }

    fn weight(&self) -> f64 {
        match *self {
            EqualityCase::FiniteR { r, .. } => 1.0 - 1.0 / r,
            EqualityCase::Exponential { .. } => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub max_residual: f64,
    /// Largest magnitude among the two sides, for relative judgement.
    pub scale: f64,
}

impl Residual {
    pub fn relative(&self) -> f64 {
        self.max_residual / (1.0 + self.scale)
    }
}

/// `max |w·f′² − f f″|` over the grid for an equality-case function.
pub fn equality_case_residual(case: EqualityCase, domain: Interval, grid: &GridSpec) -> Result<Residual> {
    let f = case.function(domain);
    let (xs, ys) = f.sample(grid)?;
    require_positive(&xs, &ys)?;
    let w = case.weight();
    let mut out = Residual { max_residual: 0.0, scale: 0.0 };
    for (&x, &y) in xs.iter().zip(&ys) {
        let d1 = f.d1(x)?;
        let lhs = w * d1 * d1;
        let rhs = y * f.d2(x)?;
        out.max_residual = out.max_residual.max((lhs - rhs).abs());
        out.scale = out.scale.max(lhs.abs()).max(rhs.abs());
    }
    Ok(out)
}

/// Exponential minorant `α e^{β(x − a)}` with `α = f(a)`, `β = f′(a)/f(a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpLowerBound {
    pub alpha: f64,
    pub beta: f64,
    pub anchor: f64,
    pub verified: bool,
    /// Smallest `f(x) − α e^{β(x−a)}` over grid points `x ≥ a`, and where.
    pub min_gap: (f64, f64),
}

impl ExpLowerBound {
    /// Coefficient of the bound written as `α′ e^{βx}`.
    pub fn alpha_at_zero(&self) -> f64 {
        self.alpha * (-self.beta * self.anchor).exp()
    }
}

pub fn exp_lower_bound(f: &Fn1D, a: f64, grid: &GridSpec) -> Result<ExpLowerBound> {
    let (xs, ys) = f.sample(grid)?;
    require_positive(&xs, &ys)?;
    for (i, (&x, &y)) in xs.iter().zip(&ys).enumerate() {
        let d1 = f.d1(x)?;
        if d1 < 0.0 || (i > 0 && y < ys[i - 1]) {
            return Err(Error::Precondition(format!("f is not increasing near x = {x} (f' = {d1})")));
        }
        let lhs = d1 * d1;
        let rhs = y * f.d2(x)?;
        if lhs > rhs + 1e-9 * (1.0 + lhs.abs().max(rhs.abs())) {
            return Err(Error::Precondition(format!("f'^2 = {lhs} exceeds f f'' = {rhs} at x = {x}")));
        }
    }
    let alpha = f.eval(a)?;
    let beta = f.d1(a)? / alpha;
    let mut verified = true;
    let mut min_gap = (f64::INFINITY, a);
    for (&x, &y) in xs.iter().zip(&ys).filter(|(x, _)| **x >= a) {
        let gap = y - alpha * (beta * (x - a)).exp();
        if gap < min_gap.0 {
            min_gap = (gap, x);
        }
        if gap < -1e-9 * (1.0 + y.abs()) {
            verified = false;
        }
    }
    Ok(ExpLowerBound { alpha, beta, anchor: a, verified, min_gap })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogConvexVerdict {
    /// Log-convex and the differential index is unbounded.
    Consistent,
    /// Log-convex but a finite index came out.
    Inconsistent,
    /// Not log-convex on the grid; nothing to check.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogConvexCheck {
    pub log_convex: bool,
    pub index: Option<IndexResult>,
    pub verdict: LogConvexVerdict,
}

/// Log-convexity forces an unbounded index.
pub fn logconvex_index_check(f: &Fn1D, grid: &GridSpec) -> Result<LogConvexCheck> {
    let (xs, ys) = f.sample(grid)?;
    require_positive(&xs, &ys)?;
    let logs: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    if !convexity_of_samples(&xs, &logs).is_convex() {
        return Ok(LogConvexCheck { log_convex: false, index: None, verdict: LogConvexVerdict::NotApplicable });
    }
    let index = index_differential(f, grid)?;
    let verdict = if index.value.is_infinite() {
        LogConvexVerdict::Consistent
    } else {
        LogConvexVerdict::Inconsistent
    };
    Ok(LogConvexCheck { log_convex: true, index: Some(index), verdict })
}
