//! Interval-domained functions, links, and grid convexity predicates.
//!
//! A link `g` is an increasing function that is concave (for g-convexity) or
//! convex (for g-concavity). `f` is g-convex when `g ∘ f` is convex. Every
//! verdict here is grid evidence: a found violation is a real witness, a pass
//! only says none was found at the grid resolution.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{self, Expr};

/// Relative slack of the midpoint convexity test.
pub const CONVEXITY_TOL: f64 = 1e-10;
/// Absolute/relative target of the bisection inverse.
pub const INVERSE_TOL: f64 = 1e-12;
/// Slack for `g(g⁻¹(y)) = y` during link validation.
pub const INVERSE_CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    pub fn new(lo: f64, hi: f64, lo_open: bool, hi_open: bool) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo > hi {
            return Err(Error::InvalidInput(format!("bad interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi, lo_open, hi_open })
    }

    pub fn closed(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn open(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    fn slack(&self) -> f64 {
        1e-12 * (1.0 + self.lo.abs().max(self.hi.abs()))
    }

    pub fn contains(&self, x: f64) -> bool {
        let s = self.slack();
        let above = if self.lo_open { x > self.lo } else { x >= self.lo - s };
        let below = if self.hi_open { x < self.hi } else { x <= self.hi + s };
        above && below
    }

    /// Snap values that sit within float noise of a closed endpoint onto it.
    pub fn clamp_noise(&self, x: f64, slack: f64) -> f64 {
        if x < self.lo && x >= self.lo - slack {
            self.lo
        } else if x > self.hi && x <= self.hi + slack {
            self.hi
        } else {
            x
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_open { '(' } else { '[' };
        let r = if self.hi_open { ')' } else { ']' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

/// Uniform evaluation grid. Open endpoints are pulled inwards by
/// `inset · width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub points: usize,
    pub inset: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { points: 257, inset: 1e-4 }
    }
}

impl GridSpec {
    pub fn new(points: usize, inset: f64) -> Result<Self> {
        if points < 3 {
            return Err(Error::InvalidInput(format!("grid needs at least 3 points, got {points}")));
        }
        if !(inset > 0.0 && inset < 0.5) {
            return Err(Error::InvalidInput(format!("grid inset must lie in (0, 0.5), got {inset}")));
        }
        Ok(GridSpec { points, inset })
    }

    pub fn with_points(points: usize) -> Result<Self> {
        Self::new(points, GridSpec::default().inset)
    }

    pub fn nodes(&self, dom: &Interval) -> Vec<f64> {
        let w = dom.width();
        let lo = if dom.lo_open { dom.lo + self.inset * w } else { dom.lo };
        let hi = if dom.hi_open { dom.hi - self.inset * w } else { dom.hi };
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
                }
            })
            .collect()
    }
}

/// A formula together with its domain and symbolic first and second
/// derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct Fn1D {
    formula: Expr,
    d1: Expr,
    d2: Expr,
    domain: Interval,
}

impl Fn1D {
    pub fn new(formula: Expr, domain: Interval) -> Self {
        let d1 = formula.differentiate();
        let d2 = d1.differentiate();
        Fn1D { formula, d1, d2, domain }
    }

    pub fn parse(text: &str, domain: Interval) -> Result<Self> {
        Ok(Self::new(expr::parse(text)?, domain))
    }

    pub fn formula(&self) -> &Expr {
        &self.formula
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn with_domain(&self, domain: Interval) -> Self {
        Fn1D { domain, ..self.clone() }
    }

    fn check(&self, x: f64) -> Result<()> {
        if self.domain.contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { x, domain: self.domain.to_string() })
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        self.formula.eval(x)
    }

    pub fn d1(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        self.d1.eval(x)
    }

    pub fn d2(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        self.d2.eval(x)
    }

    /// `outer ∘ self` on the same domain.
    pub fn then(&self, outer: &Expr) -> Fn1D {
        Fn1D::new(outer.compose(&self.formula), self.domain)
    }

    /// Values on the grid, failing on the first point that cannot be evaluated.
    pub fn sample(&self, grid: &GridSpec) -> Result<(Vec<f64>, Vec<f64>)> {
        let xs = grid.nodes(&self.domain);
        let ys = xs.iter().map(|&x| self.eval(x)).collect::<Result<Vec<_>>>()?;
        Ok((xs, ys))
    }

    /// `[min f, max f]` over the grid.
    pub fn grid_range(&self, grid: &GridSpec) -> Result<(f64, f64)> {
        let (_, ys) = self.sample(grid)?;
        Ok(ys.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &y| (lo.min(y), hi.max(y))))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConvexityVerdict {
    Convex,
    /// `f(x₂) > (f(x₁)+f(x₃))/2 + tol` at the midpoint triple `witness`.
    NonConvex { witness: [f64; 3], excess: f64 },
}

impl ConvexityVerdict {
    pub fn is_convex(&self) -> bool {
        matches!(self, ConvexityVerdict::Convex)
    }
}

/// Midpoint test over consecutive triples of uniformly spaced samples.
pub fn convexity_of_samples(xs: &[f64], ys: &[f64]) -> ConvexityVerdict {
    let mut worst: Option<([f64; 3], f64)> = None;
    for i in 1..xs.len().saturating_sub(1) {
        let (a, b, c) = (ys[i - 1], ys[i], ys[i + 1]);
        let scale = a.abs().max(b.abs()).max(c.abs());
        let excess = b - 0.5 * (a + c);
        if excess > CONVEXITY_TOL * (1.0 + scale) && worst.map_or(true, |(_, e)| excess > e) {
            worst = Some(([xs[i - 1], xs[i], xs[i + 1]], excess));
        }
    }
    match worst {
        None => ConvexityVerdict::Convex,
        Some((witness, excess)) => ConvexityVerdict::NonConvex { witness, excess },
    }
}

fn negated(ys: &[f64]) -> Vec<f64> {
    ys.iter().map(|y| -y).collect()
}

pub fn check_convex_on_grid(f: &Fn1D, grid: &GridSpec) -> Result<ConvexityVerdict> {
    let (xs, ys) = f.sample(grid)?;
    Ok(convexity_of_samples(&xs, &ys))
}

/// Concavity of `f`, reported as convexity of `-f` (the witness is the same triple).
pub fn check_concave_on_grid(f: &Fn1D, grid: &GridSpec) -> Result<ConvexityVerdict> {
    let (xs, ys) = f.sample(grid)?;
    Ok(convexity_of_samples(&xs, &negated(&ys)))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Inverse {
    Symbolic(Expr),
    /// Bisection on the link's domain.
    Numeric,
}

/// Whether the link bends down (used for g-convexity) or up (g-concavity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curvature {
    Concave,
    Convex,
}

/// Increasing link `g : J₂ → J₃` with an inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct GLink {
    g: Fn1D,
    inverse: Inverse,
    inverse_d1: Option<Expr>,
    curvature: Curvature,
}

impl GLink {
    pub fn new(g: Fn1D, inverse: Inverse, curvature: Curvature) -> Self {
        let inverse_d1 = match &inverse {
            Inverse::Symbolic(e) => Some(e.differentiate()),
            Inverse::Numeric => None,
        };
        GLink { g, inverse, inverse_d1, curvature }
    }

    /// Parse a link; `inverse = None` selects the bisection inverse.
    pub fn parse(text: &str, domain: Interval, inverse: Option<&str>, curvature: Curvature) -> Result<Self> {
        let g = Fn1D::parse(text, domain)?;
        let inverse = match inverse {
            Some(s) => Inverse::Symbolic(expr::parse(s)?),
            None => Inverse::Numeric,
        };
        Ok(Self::new(g, inverse, curvature))
    }

    pub fn concave(text: &str, domain: Interval, inverse: Option<&str>) -> Result<Self> {
        Self::parse(text, domain, inverse, Curvature::Concave)
    }

    pub fn convex(text: &str, domain: Interval, inverse: Option<&str>) -> Result<Self> {
        Self::parse(text, domain, inverse, Curvature::Convex)
    }

    pub fn g(&self) -> &Fn1D {
        &self.g
    }

    pub fn inverse(&self) -> &Inverse {
        &self.inverse
    }

    pub fn curvature(&self) -> Curvature {
        self.curvature
    }

    pub fn domain(&self) -> &Interval {
        self.g.domain()
    }

    pub fn apply(&self, x: f64) -> Result<f64> {
        self.g.eval(x)
    }

    /// Effective endpoint: the endpoint itself when `g` is defined there,
    /// otherwise a point nudged inwards.
    fn end(&self, upper: bool) -> Result<(f64, f64)> {
        let d = self.g.domain();
        let (x, open) = if upper { (d.hi, d.hi_open) } else { (d.lo, d.lo_open) };
        if let Ok(y) = self.g.formula().eval(x) {
            return Ok((x, y));
        }
        if !open {
            return Err(Error::Precondition(format!("link undefined at closed endpoint {x}")));
        }
        let nudge = 1e-12 * d.width().max(1e-300);
        let x = if upper { x - nudge } else { x + nudge };
        Ok((x, self.g.formula().eval(x)?))
    }

    /// `[g(lo), g(hi)]`, with an open endpoint where `g` is undefined
    /// reported as unbounded.
    pub fn range(&self) -> (f64, f64) {
        let bound = |upper: bool, unbounded: f64| {
            let d = self.g.domain();
            let x = if upper { d.hi } else { d.lo };
            self.g.formula().eval(x).unwrap_or(unbounded)
        };
        (bound(false, f64::NEG_INFINITY), bound(true, f64::INFINITY))
    }

    /// `g⁻¹(y)`.
    pub fn inverse_eval(&self, y: f64) -> Result<f64> {
        let slack = INVERSE_TOL * (1.0 + y.abs());
        match &self.inverse {
            Inverse::Symbolic(e) => {
                let (lo, hi) = self.range();
                let bound = 1e-9 * (1.0 + y.abs());
                if y < lo - bound || y > hi + bound {
                    return Err(Error::Range { y, lo, hi });
                }
                e.eval(y)
            }
            Inverse::Numeric => {
                let (mut x_lo, g_lo) = self.end(false)?;
                let (mut x_hi, g_hi) = self.end(true)?;
                if y < g_lo - slack || y > g_hi + slack {
                    return Err(Error::Range { y, lo: g_lo, hi: g_hi });
                }
                if (g_lo - y).abs() <= slack {
                    return Ok(x_lo);
                }
                if (g_hi - y).abs() <= slack {
                    return Ok(x_hi);
                }
                let mut mid = 0.5 * (x_lo + x_hi);
                for _ in 0..2000 {
                    mid = 0.5 * (x_lo + x_hi);
                    if mid <= x_lo || mid >= x_hi {
                        break;
                    }
                    let gm = self.g.formula().eval(mid)?;
                    if (gm - y).abs() <= slack {
                        break;
                    }
                    if gm < y {
                        x_lo = mid;
                    } else {
                        x_hi = mid;
                    }
                }
                Ok(mid)
            }
        }
    }

    /// `(g⁻¹)′(y)`: symbolic when the inverse is symbolic, else `1/g′(g⁻¹(y))`.
    pub fn inverse_derivative(&self, y: f64) -> Result<f64> {
        match &self.inverse_d1 {
            Some(d) => {
                self.inverse_eval(y)?;
                d.eval(y)
            }
            None => {
                let x = self.inverse_eval(y)?;
                let dg = self.g.formula().differentiate().eval(x)?;
                if dg == 0.0 {
                    Err(Error::DerivativeSingular { at: x })
                } else {
                    Ok(1.0 / dg)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkDiagnostics {
    pub increasing: bool,
    /// Smallest `g′` seen on the interior grid and where.
    pub min_slope: (f64, f64),
    pub curvature_ok: bool,
    pub curvature: ConvexityVerdict,
    pub inverse_consistent: bool,
    pub max_inverse_error: f64,
    /// First failure message if any check could not be evaluated.
    pub evaluation_error: Option<String>,
}

impl LinkDiagnostics {
    pub fn all_pass(&self) -> bool {
        self.increasing && self.curvature_ok && self.inverse_consistent && self.evaluation_error.is_none()
    }
}

/// Checks increasingness, the declared curvature, and inverse consistency.
pub fn validate_glink(g: &GLink, grid: &GridSpec) -> LinkDiagnostics {
    let mut diag = LinkDiagnostics {
        increasing: true,
        min_slope: (f64::INFINITY, f64::NAN),
        curvature_ok: false,
        curvature: ConvexityVerdict::Convex,
        inverse_consistent: true,
        max_inverse_error: 0.0,
        evaluation_error: None,
    };
    let xs = grid.nodes(g.domain());
    let d1 = g.g.formula().differentiate();
    for &x in &xs[1..xs.len() - 1] {
        match d1.eval(x) {
            Ok(s) => {
                if s < diag.min_slope.0 {
                    diag.min_slope = (s, x);
                }
                if s <= 0.0 {
                    diag.increasing = false;
                }
            }
            Err(e) => {
                diag.increasing = false;
                diag.evaluation_error.get_or_insert(e.to_string());
            }
        }
    }
    let ys = match xs.iter().map(|&x| g.apply(x)).collect::<Result<Vec<_>>>() {
        Ok(ys) => ys,
        Err(e) => {
            diag.evaluation_error.get_or_insert(e.to_string());
            diag.inverse_consistent = false;
            return diag;
        }
    };
    diag.curvature = match g.curvature {
        Curvature::Concave => convexity_of_samples(&xs, &negated(&ys)),
        Curvature::Convex => convexity_of_samples(&xs, &ys),
    };
    diag.curvature_ok = diag.curvature.is_convex();
    for &y in &ys {
        let err = g.inverse_eval(y).and_then(|x| g.g.formula().eval(x)).map(|gy| (gy - y).abs());
        match err {
            Ok(e) => {
                diag.max_inverse_error = diag.max_inverse_error.max(e);
                if e > INVERSE_CHECK_TOL * (1.0 + y.abs()) {
                    diag.inverse_consistent = false;
                }
            }
            Err(e) => {
                diag.inverse_consistent = false;
                diag.evaluation_error.get_or_insert(e.to_string());
            }
        }
    }
    diag
}

/// `g⁻¹(y)`; see [`GLink::inverse_eval`].
pub fn glink_inverse_eval(g: &GLink, y: f64) -> Result<f64> {
    g.inverse_eval(y)
}

/// Outcome of a g-convexity (or g-concavity) test.
#[derive(Debug, Clone, PartialEq)]
pub struct GVerdict {
    pub link: LinkDiagnostics,
    pub composition: ConvexityVerdict,
}

impl GVerdict {
    pub fn holds(&self) -> bool {
        self.link.all_pass() && self.composition.is_convex()
    }
}

/// `h = g ∘ f` as a function on `f`'s domain.
pub fn composition(f: &Fn1D, g: &GLink) -> Fn1D {
    f.then(g.g.formula())
}

fn composition_samples(f: &Fn1D, g: &GLink, grid: &GridSpec) -> Result<(Vec<f64>, Vec<f64>)> {
    let (xs, fs) = f.sample(grid)?;
    let hs = fs
        .iter()
        .zip(&xs)
        .map(|(&y, &x)| {
            if !g.domain().contains(y) {
                return Err(Error::Precondition(format!(
                    "f({x}) = {y} lies outside the link domain {}",
                    g.domain()
                )));
            }
            g.apply(y)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((xs, hs))
}

/// `f` is g-convex: `g` increasing and concave, `g ∘ f` convex.
pub fn is_gconvex(f: &Fn1D, g: &GLink, grid: &GridSpec) -> Result<GVerdict> {
    if g.curvature != Curvature::Concave {
        return Err(Error::Precondition("g-convexity needs a concave link".into()));
    }
    let (xs, hs) = composition_samples(f, g, grid)?;
    Ok(GVerdict { link: validate_glink(g, grid), composition: convexity_of_samples(&xs, &hs) })
}

/// `f` is g-concave: `g` increasing and convex, `g ∘ f` concave.
pub fn is_gconcave(f: &Fn1D, g: &GLink, grid: &GridSpec) -> Result<GVerdict> {
    if g.curvature != Curvature::Convex {
        return Err(Error::Precondition("g-concavity needs a convex link".into()));
    }
    let (xs, hs) = composition_samples(f, g, grid)?;
    Ok(GVerdict { link: validate_glink(g, grid), composition: convexity_of_samples(&xs, &negated(&hs)) })
}
