//! Matrix versions of the g-convexity chains: eigenvalue majorization,
//! norm superadditivity, inner-product Jensen, and sampled operator
//! orderings.

use rand::Rng;

use crate::convindex::IndexValue;
use crate::error::{Error, Result};
use crate::funcspace::{convexity_of_samples, Fn1D, GLink, GridSpec, Interval};
use crate::report::{ChainReport, Order};

use super::eigen::{eigh, require_psd, EigenSystem, PSD_CLAMP};
use super::matrix::{inner, CMatrix, HermitianMatrix, C64};
use super::norms::{uinorm, NormSpec};
use super::random::{random_psd, trial_rng};
use super::spectrum::{majorization_slack, SpectrumVector};

/// Relative slack on partial sums: `1e-9·(1 + largest |partial sum|)`.
pub const MAJORIZATION_REL_TOL: f64 = 1e-9;
/// Smallest allowed second difference of `log φ` in the interpolation scan.
pub const LOG_CONVEXITY_TOL: f64 = 1e-10;

fn check_weights(count: usize, ws: &[f64]) -> Result<()> {
    if count == 0 {
        return Err(Error::InvalidInput("no matrices given".into()));
    }
    if count != ws.len() {
        return Err(Error::DimensionMismatch(count, ws.len()));
    }
    if let Some(w) = ws.iter().find(|w| !(**w > 0.0)) {
        return Err(Error::InvalidInput(format!("weights must be positive, got {w}")));
    }
    let total: f64 = ws.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidInput(format!("weights must sum to 1, got {total}")));
    }
    Ok(())
}

/// `φ(λ)` with float-noise eigenvalues snapped onto a closed domain end.
fn eval_clamped(phi: &Fn1D, l: f64, slack: f64) -> Result<f64> {
    phi.eval(phi.domain().clamp_noise(l, slack)).map_err(|e| match e {
        Error::OutOfDomain { domain, .. } => Error::OutOfDomain { x: l, domain },
        other => other,
    })
}

fn slack_of(es: &EigenSystem) -> f64 {
    PSD_CLAMP * (1.0 + es.spectral_radius())
}

fn map_fn(es: &EigenSystem, f: &Fn1D) -> Result<HermitianMatrix> {
    let slack = slack_of(es);
    es.map(|l| eval_clamped(f, l, slack))
}

/// `(g∘f)(A)`.
fn map_link(es: &EigenSystem, f: &Fn1D, g: &GLink) -> Result<HermitianMatrix> {
    let slack = slack_of(es);
    es.map(|l| g.apply(g.domain().clamp_noise(eval_clamped(f, l, slack)?, slack)))
}

fn weighted(ms: &[HermitianMatrix], ws: &[f64]) -> Result<HermitianMatrix> {
    HermitianMatrix::weighted_sum(ms, ws)
}

/// Three spectra asserted to satisfy `first ≺_w second ≺_w third`.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationChain {
    pub labels: [String; 3],
    pub spectra: [SpectrumVector; 3],
    /// Smallest partial-sum slack of each link; negative means violated before tolerance.
    pub slack: [f64; 2],
    pub tolerance: f64,
    /// Largest absolute partial sum, the scale of `tolerance`.
    scale: f64,
}

impl MajorizationChain {
    fn new(labels: [&str; 3], spectra: [SpectrumVector; 3]) -> Result<Self> {
        let scale = spectra
            .iter()
            .flat_map(|s| s.partial_sums())
            .fold(0.0f64, |m, v| m.max(v.abs()));
        let slack = [majorization_slack(&spectra[0], &spectra[1])?, majorization_slack(&spectra[1], &spectra[2])?];
        Ok(MajorizationChain {
            labels: labels.map(String::from),
            spectra,
            slack,
            tolerance: MAJORIZATION_REL_TOL * (1.0 + scale),
            scale,
        })
    }

    /// Re-judge with tolerance `rel_tol·(1 + largest |partial sum|)`.
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.tolerance = rel_tol * (1.0 + self.scale);
        self
    }

    pub fn majorized(&self) -> [bool; 2] {
        self.slack.map(|s| s >= -self.tolerance)
    }

    pub fn holds(&self) -> bool {
        self.majorized().iter().all(|b| *b)
    }
}

/// `λ(f(Σwᵢ Aᵢ)) ≺_w λ(g⁻¹(Σwᵢ (g∘f)(Aᵢ))) ≺_w λ(Σwᵢ f(Aᵢ))`.
pub fn majorization_chain(ms: &[HermitianMatrix], ws: &[f64], f: &Fn1D, g: &GLink) -> Result<MajorizationChain> {
    check_weights(ms.len(), ws)?;
    let systems = ms.iter().map(eigh).collect::<Result<Vec<_>>>()?;

    let mean = eigh(&weighted(ms, ws)?)?;
    let slack = slack_of(&mean);
    let left = mean.values.iter().map(|&l| eval_clamped(f, l, slack)).collect::<Result<Vec<_>>>()?;

    let h = systems.iter().map(|es| map_link(es, f, g)).collect::<Result<Vec<_>>>()?;
    let middle = eigh(&weighted(&h, ws)?)?.values.iter().map(|&y| g.inverse_eval(y)).collect::<Result<Vec<_>>>()?;

    let fs = systems.iter().map(|es| map_fn(es, f)).collect::<Result<Vec<_>>>()?;
    let right = eigh(&weighted(&fs, ws)?)?.values;

    MajorizationChain::new(
        ["f(sum w A)", "ginv(sum w h(A))", "sum w f(A)"],
        [SpectrumVector::new(left), SpectrumVector::new(middle), SpectrumVector::new(right)],
    )
}

/// The power chain evaluated twice: with the closed-form middle term and
/// through the generic link path.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerChain {
    pub chain: MajorizationChain,
    pub generic_middle: SpectrumVector,
    /// Largest entrywise difference between the two middle spectra.
    pub path_gap: f64,
    pub paths_agree: bool,
}

impl PowerChain {
    pub fn holds(&self) -> bool {
        self.chain.holds() && self.paths_agree
    }
}

/// `λ((Σwᵢ Aᵢ)ʳ) ≺_w ½λ(2S + I − √(4S + I)) ≺_w λ(Σwᵢ Aᵢʳ)` with
/// `S = Σwᵢ(Aᵢʳ + Aᵢ^{r/2})`, for PSD `Aᵢ` and `r ≥ 2`.
pub fn power_sqrt_chain(ms: &[HermitianMatrix], ws: &[f64], r: f64) -> Result<PowerChain> {
    check_weights(ms.len(), ws)?;
    if !(r >= 2.0) {
        return Err(Error::InvalidInput(format!("power chain needs r >= 2, got {r}")));
    }
    let systems = ms.iter().map(eigh).collect::<Result<Vec<_>>>()?;
    for es in &systems {
        require_psd(es)?;
    }
    let top = systems.iter().map(|es| es.values[0]).fold(0.0f64, f64::max);
    let bound = top * (1.0 + 1e-9) + 1e-12;
    let dom = Interval::closed(0.0, bound)?;
    let pow = |e: f64| Fn1D::parse(&format!("x^{e}"), dom);
    let (f, half) = (pow(r)?, pow(r / 2.0)?);

    let mean = eigh(&weighted(ms, ws)?)?;
    let slack = slack_of(&mean);
    let left = mean.values.iter().map(|&l| eval_clamped(&f, l, slack)).collect::<Result<Vec<_>>>()?;

    let terms = systems
        .iter()
        .map(|es| map_fn(es, &f)?.add(&map_fn(es, &half)?))
        .collect::<Result<Vec<_>>>()?;
    let s = weighted(&terms, ws)?;
    let n = s.dim();
    let id = HermitianMatrix::identity(n);
    let inner_m = s.scale(4.0).add(&id)?;
    let inner_es = eigh(&inner_m)?;
    let root = inner_es.map(|l| Ok(l.max(0.0).sqrt()))?;
    let closed = s.scale(2.0).add(&id)?.sub(&root)?;
    let middle = SpectrumVector::new(eigh(&closed)?.values).scale(0.5);

    let fs = systems.iter().map(|es| map_fn(es, &f)).collect::<Result<Vec<_>>>()?;
    let right = eigh(&weighted(&fs, ws)?)?.values;

    let g_top = bound.powf(r) + bound.powf(r / 2.0) + 1.0;
    let g = GLink::concave("x+sqrt(x)", Interval::closed(0.0, g_top)?, Some("(2*x+1-sqrt(4*x+1))/2"))?;
    let generic = majorization_chain(ms, ws, &f, &g)?;
    let generic_middle = generic.spectra[1].clone();
    let path_gap = middle.max_abs_diff(&generic_middle);
    let scale = middle.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));

    Ok(PowerChain {
        chain: MajorizationChain::new(
            ["(sum w A)^r", "closed-form middle", "sum w A^r"],
            [SpectrumVector::new(left), middle, SpectrumVector::new(right)],
        )?,
        generic_middle,
        path_gap,
        paths_agree: path_gap <= 1e-9 * (1.0 + scale),
    })
}

/// `‖f(A)+f(B)‖ ≤ ‖g⁻¹((g∘f)(A)+(g∘f)(B))‖ ≤ ‖f(A+B)‖` for PSD `A`, `B`.
pub fn norm_chain(a: &HermitianMatrix, b: &HermitianMatrix, f: &Fn1D, g: &GLink, norm: NormSpec) -> Result<ChainReport> {
    norm.validate(a.dim())?;
    let dom = f.domain();
    if dom.lo != 0.0 || dom.lo_open {
        return Err(Error::Precondition(format!("f must be defined on [0, a], got {dom}")));
    }
    let h0 = g.apply(f.eval(0.0)?).map_err(|e| Error::Precondition(format!("(g∘f)(0) must exist: {e}")))?;
    if h0 > 1e-12 {
        return Err(Error::Precondition(format!("(g∘f)(0) = {h0} must be <= 0")));
    }
    let g0 = g.apply(0.0).map_err(|e| Error::Precondition(format!("g(0) must exist and be >= 0: {e}")))?;
    if g0 < 0.0 {
        return Err(Error::Precondition(format!("g(0) = {g0} must be >= 0")));
    }
    let (ea, eb) = (eigh(a)?, eigh(b)?);
    require_psd(&ea)?;
    require_psd(&eb)?;
    let sum = eigh(&a.add(b)?)?;

    let fa_fb = map_fn(&ea, f)?.add(&map_fn(&eb, f)?)?;
    let h = map_link(&ea, f, g)?.add(&map_link(&eb, f, g)?)?;
    let middle = eigh(&h)?.map(|y| g.inverse_eval(y))?;
    let f_sum = map_fn(&sum, f)?;
    Ok(ChainReport::new(
        "norm superadditivity",
        Order::Ascending,
        vec![
            ("|f(A)+f(B)|", uinorm(fa_fb.matrix(), norm)?),
            ("|ginv(h(A)+h(B))|", uinorm(middle.matrix(), norm)?),
            ("|f(A+B)|", uinorm(f_sum.matrix(), norm)?),
        ],
    ))
}

/// `f(⟨Ax,x⟩) ≤ g⁻¹(⟨(g∘f)(A)x,x⟩) ≤ ⟨f(A)x,x⟩` for a unit vector `x`.
pub fn jensen_inner_product(a: &HermitianMatrix, x: &[C64], f: &Fn1D, g: &GLink) -> Result<ChainReport> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch(a.dim(), x.len()));
    }
    let norm = inner(x, x).re.sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidInput(format!("x must be a unit vector, |x| = {norm}")));
    }
    let es = eigh(a)?;
    let slack = slack_of(&es);
    let ax = a.quadratic_form(x)?;
    let hx = map_link(&es, f, g)?.quadratic_form(x)?;
    let fx = map_fn(&es, f)?.quadratic_form(x)?;
    Ok(ChainReport::new(
        "inner-product jensen",
        Order::Ascending,
        vec![
            ("f(<Ax,x>)", eval_clamped(f, ax, slack)?),
            ("ginv(<h(A)x,x>)", g.inverse_eval(hx)?),
            ("<f(A)x,x>", fx),
        ],
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorCounterexample {
    pub trial: usize,
    pub v: f64,
    pub a: HermitianMatrix,
    pub b: HermitianMatrix,
    /// 0 for `f(C) ≥ g⁻¹(…)`, 1 for `g⁻¹(…) ≥ (1−v)f(A)+vf(B)`.
    pub link: usize,
    pub min_eigenvalue: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSample {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub counterexamples: Vec<OperatorCounterexample>,
    /// Most negative eigenvalue seen in either difference, over all trials.
    pub worst: f64,
}

impl OperatorSample {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Random falsification of
/// `f((1−v)A+vB) ≥ g⁻¹((1−v)(g∘f)(A)+v(g∘f)(B)) ≥ (1−v)f(A)+vf(B)`
/// in the PSD order. The operator hypotheses on `f` and `g` are the caller's.
pub fn operator_chain_sample(f: &Fn1D, g: &GLink, n: usize, trials: usize, seed: u64) -> Result<OperatorSample> {
    let mut out = OperatorSample { n, trials, seed, counterexamples: Vec::new(), worst: f64::INFINITY };
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let a = random_psd(n, &mut rng);
        let b = random_psd(n, &mut rng);
        let v: f64 = rng.gen_range(0.0..=1.0);
        let (ea, eb) = (eigh(&a)?, eigh(&b)?);
        let c = eigh(&a.scale(1.0 - v).add(&b.scale(v))?)?;
        let left = map_fn(&c, f)?;
        let h = map_link(&ea, f, g)?.scale(1.0 - v).add(&map_link(&eb, f, g)?.scale(v))?;
        let middle = eigh(&h)?.map(|y| g.inverse_eval(y))?;
        let right = map_fn(&ea, f)?.scale(1.0 - v).add(&map_fn(&eb, f)?.scale(v))?;
        let scale = [&left, &middle, &right].iter().map(|m| m.matrix().max_abs()).fold(0.0, f64::max);
        let tol = 1e-9 * (1.0 + scale);
        for (link, diff) in [left.sub(&middle)?, middle.sub(&right)?].iter().enumerate() {
            let min = *eigh(diff)?.values.last().expect("nonempty");
            out.worst = out.worst.min(min);
            if min < -tol {
                out.counterexamples.push(OperatorCounterexample {
                    trial,
                    v,
                    a: a.clone(),
                    b: b.clone(),
                    link,
                    min_eigenvalue: min,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationScan {
    pub ts: Vec<f64>,
    pub values: Vec<f64>,
    /// `log φ(t₋) − 2 log φ(t) + log φ(t₊)` at interior grid points.
    pub second_differences: Vec<f64>,
    pub min_second_difference: f64,
    /// `φ` vanished somewhere; nothing is asserted.
    pub degenerate: bool,
    pub log_convex: bool,
    /// Grid index estimate of `φ`; `None` when degenerate or `φ` is not convex on the grid.
    pub index: Option<IndexValue>,
}

impl InterpolationScan {
    pub fn holds(&self) -> bool {
        self.degenerate || self.log_convex
    }
}

fn positive_definite(name: &str, es: &EigenSystem) -> Result<()> {
    let min = es.values.last().copied().unwrap_or(0.0);
    if !(min > 1e-12 * es.spectral_radius().max(f64::MIN_POSITIVE)) {
        return Err(Error::Precondition(format!("{name} must be positive definite, smallest eigenvalue {min}")));
    }
    Ok(())
}

/// Samples `φ(t) = ‖AᵗXB^{1−t}‖` on `[0, 1]` and checks that `log φ` is
/// discretely convex.
pub fn norm_interpolation_scan(
    a: &HermitianMatrix,
    x: &CMatrix,
    b: &HermitianMatrix,
    norm: NormSpec,
    tgrid: &GridSpec,
) -> Result<InterpolationScan> {
    if x.dim() != a.dim() || b.dim() != a.dim() {
        return Err(Error::DimensionMismatch(a.dim(), x.dim().max(b.dim())));
    }
    norm.validate(a.dim())?;
    let (ea, eb) = (eigh(a)?, eigh(b)?);
    positive_definite("A", &ea)?;
    positive_definite("B", &eb)?;
    let ts = tgrid.nodes(&Interval::closed(0.0, 1.0)?);
    let values = ts
        .iter()
        .map(|&t| {
            let at = ea.map(|l| Ok(l.powf(t)))?;
            let bt = eb.map(|l| Ok(l.powf(1.0 - t)))?;
            uinorm(&at.matrix().matmul(x)?.matmul(bt.matrix())?, norm)
        })
        .collect::<Result<Vec<_>>>()?;
    let degenerate = x.max_abs() == 0.0 || values.iter().any(|v| !(*v > 0.0));
    if degenerate {
        return Ok(InterpolationScan {
            ts,
            values,
            second_differences: Vec::new(),
            min_second_difference: f64::NAN,
            degenerate,
            log_convex: false,
            index: None,
        });
    }
    let logs: Vec<f64> = values.iter().map(|v| v.ln()).collect();
    let second_differences: Vec<f64> = logs.windows(3).map(|w| w[0] - 2.0 * w[1] + w[2]).collect();
    let min_second_difference = second_differences.iter().copied().fold(f64::INFINITY, f64::min);
    let log_convex = min_second_difference >= -LOG_CONVEXITY_TOL;
    let index = if log_convex {
        Some(IndexValue::Infinite)
    } else if convexity_of_samples(&ts, &values).is_convex() {
        // largest tested r with every smaller one convex
        let ladder = (0..=10).map(|k| 2f64.powi(k));
        let mut best = 1.0;
        for r in ladder {
            let root: Vec<f64> = values.iter().map(|v| v.powf(1.0 / r)).collect();
            if !convexity_of_samples(&ts, &root).is_convex() {
                break;
            }
            best = r;
        }
        Some(IndexValue::Finite(best))
    } else {
        None
    };
    Ok(InterpolationScan { ts, values, second_differences, min_second_difference, degenerate, log_convex, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn herm(rows: &[Vec<f64>]) -> HermitianMatrix {
        HermitianMatrix::from_real_rows(rows).unwrap()
    }

    fn example_pair() -> Vec<HermitianMatrix> {
        vec![herm(&[vec![2.0, -1.0], vec![-1.0, 1.0]]), herm(&[vec![2.0, 1.0], vec![1.0, 2.0]])]
    }

    fn dom(hi: f64) -> Interval {
        Interval::closed(0.0, hi).unwrap()
    }

    #[test]
    fn single_matrix_collapses() {
        let a = herm(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let f = Fn1D::parse("x^2", dom(10.0)).unwrap();
        let g = GLink::concave("x+sqrt(x)", dom(200.0), Some("(2*x+1-sqrt(4*x+1))/2")).unwrap();
        let c = majorization_chain(&[a], &[1.0], &f, &g).unwrap();
        for s in &c.spectra {
            assert!(s.max_abs_diff(&SpectrumVector::new(vec![9.0, 1.0])) < 1e-12, "{s}");
        }
        assert!(c.holds());
    }

    #[test]
    fn power_chain_on_two_by_two_pair() {
        let p = power_sqrt_chain(&example_pair(), &[0.5, 0.5], 2.0).unwrap();
        // (A1 + A2)/2 = diag(2, 1.5)
        assert!(p.chain.spectra[0].max_abs_diff(&SpectrumVector::new(vec![4.0, 2.25])) < 1e-12);
        // (A1² + A2²)/2 = [[5, 1/2], [1/2, 7/2]] → 17/4 ± √13/4
        let s13 = 13f64.sqrt();
        let right = SpectrumVector::new(vec![(17.0 + s13) / 4.0, (17.0 - s13) / 4.0]);
        assert!(p.chain.spectra[2].max_abs_diff(&right) < 1e-12);
        assert!(p.paths_agree, "gap {}", p.path_gap);
        assert!(p.holds());
    }

    #[test]
    fn power_chain_trivial_inputs() {
        let id = HermitianMatrix::identity(3);
        let p = power_sqrt_chain(&[id.clone(), id], &[0.5, 0.5], 2.0).unwrap();
        for s in &p.chain.spectra {
            assert!(s.max_abs_diff(&SpectrumVector::new(vec![1.0; 3])) < 1e-12);
        }
        let d = HermitianMatrix::from_diag(&[2.0, 1.0]);
        let p = power_sqrt_chain(&[d], &[1.0], 2.0).unwrap();
        for s in &p.chain.spectra {
            assert!(s.max_abs_diff(&SpectrumVector::new(vec![4.0, 1.0])) < 1e-12);
        }
        let neg = HermitianMatrix::from_diag(&[1.0, -0.5]);
        assert!(matches!(power_sqrt_chain(&[neg], &[1.0], 2.0), Err(Error::NotPsd { .. })));
        assert!(power_sqrt_chain(&example_pair(), &[0.5, 0.6], 2.0).is_err());
    }

    #[test]
    fn norm_chain_diagonal_embedding() {
        let a = HermitianMatrix::from_diag(&[1.0, 0.0]);
        let f = Fn1D::parse("x^2", dom(10.0)).unwrap();
        let g = GLink::concave("x^0.5", dom(100.0), Some("x^2")).unwrap();
        let r = norm_chain(&a, &a, &f, &g, NormSpec::Operator).unwrap();
        let want = [2.0, 4.0, 4.0];
        for (v, w) in r.values.iter().zip(want) {
            assert!((v - w).abs() < 1e-12, "{:?}", r.values);
        }
        assert!(r.holds());

        let z = HermitianMatrix::from_diag(&[0.0, 0.0]);
        let b = HermitianMatrix::from_diag(&[3.0, 1.0]);
        let r = norm_chain(&z, &b, &f, &g, NormSpec::Trace).unwrap();
        assert!((r.values[0] - 10.0).abs() < 1e-12 && (r.values[1] - 10.0).abs() < 1e-12);

        let bad = Fn1D::parse("x^2+1", dom(10.0)).unwrap();
        assert!(matches!(norm_chain(&a, &a, &bad, &g, NormSpec::Trace), Err(Error::Precondition(_))));
    }

    #[test]
    fn inner_product_jensen() {
        let a = HermitianMatrix::from_diag(&[0.0, 1.0]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let x = [C64::new(h, 0.0), C64::new(h, 0.0)];
        let f = Fn1D::parse("exp(x)", dom(1.0)).unwrap();
        let g = GLink::concave("x^0.5", dom(100.0), Some("x^2")).unwrap();
        let r = jensen_inner_product(&a, &x, &f, &g).unwrap();
        let e = std::f64::consts::E;
        let want = [e.sqrt(), ((1.0 + e.sqrt()) / 2.0).powi(2), (1.0 + e) / 2.0];
        for (v, w) in r.values.iter().zip(want) {
            assert!((v - w).abs() < 1e-12, "{:?}", r.values);
        }
        assert!(r.holds());

        // eigenvector input: every term equals f(λ)
        let b = herm(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let fb = Fn1D::parse("x^2", dom(10.0)).unwrap();
        let r = jensen_inner_product(&b, &x, &fb, &g).unwrap();
        for v in &r.values {
            assert!((v - 9.0).abs() < 1e-12);
        }
        assert!(jensen_inner_product(&b, &[C64::new(1.0, 0.0), C64::new(1.0, 0.0)], &fb, &g).is_err());
    }

    #[test]
    fn operator_sampling() {
        let f = Fn1D::parse("sqrt(x)", dom(50.0)).unwrap();
        let g = GLink::convex("x^2", dom(10.0), Some("sqrt(x)")).unwrap();
        let s = operator_chain_sample(&f, &g, 3, 100, 42).unwrap();
        assert!(s.holds(), "{:?}", s.counterexamples.first());

        let f = Fn1D::parse("x^2", dom(50.0)).unwrap();
        let g = GLink::convex("x", dom(2500.0), Some("x")).unwrap();
        let s = operator_chain_sample(&f, &g, 3, 20, 42).unwrap();
        assert!(!s.holds());
        assert!(s.counterexamples.iter().all(|c| c.link == 0));
    }

    #[test]
    fn interpolation_scan_cases() {
        let grid = GridSpec::with_points(65).unwrap();
        let a = HermitianMatrix::from_diag(&[4.0, 1.0]);
        let b = HermitianMatrix::from_diag(&[1.0, 4.0]);
        let x = CMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let s = norm_interpolation_scan(&a, &x, &b, NormSpec::Trace, &grid).unwrap();
        assert!(s.log_convex && s.holds());
        assert_eq!(s.index, Some(IndexValue::Infinite));
        // AᵗXB^{1−t} = [[4^t, 4], [1, 4^{1−t}]] has rank one, so its trace norm
        // equals its Frobenius norm √(16^t + 17 + 16^{1−t})
        for (t, v) in s.ts.iter().zip(&s.values) {
            let want = (16f64.powf(*t) + 17.0 + 16f64.powf(1.0 - t)).sqrt();
            assert!((v - want).abs() < 1e-12 * want, "t = {t}: {v} vs {want}");
        }

        let id = HermitianMatrix::identity(2);
        let s = norm_interpolation_scan(&id, &x, &id, NormSpec::Frobenius, &grid).unwrap();
        assert!(s.values.iter().all(|v| (v - 2.0).abs() < 1e-12));
        assert!(s.log_convex);

        let s = norm_interpolation_scan(&a, &CMatrix::zeros(2), &b, NormSpec::Trace, &grid).unwrap();
        assert!(s.degenerate && s.holds());

        let singular = HermitianMatrix::from_diag(&[1.0, 0.0]);
        assert!(norm_interpolation_scan(&singular, &x, &b, NormSpec::Trace, &grid).is_err());
    }
}
