//! The acceptance battery: eight numbered criteria, each a self-contained
//! check with its own tolerances, run by the `suite` command and by the
//! `acceptance` test target.

use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::chains::{hh_chain_v1, hh_chain_v2, jensen_chain, superadditivity_chain, tangent_chain, TangentMode, WeightedSample};
use crate::convindex::{exponent_scan, index_differential, IndexValue};
use crate::error::Result;
use crate::expr::Expr;
use crate::funcspace::{is_gconvex, Fn1D, GLink, GridSpec, Interval};
use crate::matanalysis::{
    eigh, jensen_inner_product, majorization_chain, norm_chain, norm_interpolation_scan, power_sqrt_chain,
    random_density, random_hermitian, random_psd, random_unit_vector, trial_rng, weak_majorize, CMatrix,
    HermitianMatrix, NormSpec,
};
use crate::qentropy::{entropy_lower_bound, DensityMatrix};
use crate::quadrature::QuadratureSpec;
use crate::report::ChainReport;

pub const DEFAULT_SEED: u64 = 42;

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// One line per individual check.
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl Criterion {
    /// Failed checks only.
    pub fn failures(&self) -> impl Iterator<Item = &String> {
        self.details.iter().filter(|d| d.starts_with("FAIL"))
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {}: {} ({:.3} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64()
        )
    }
}

struct Checks {
    lines: Vec<String>,
    ok: bool,
}

impl Checks {
    fn new() -> Self {
        Checks { lines: Vec::new(), ok: true }
    }

    fn check(&mut self, ok: bool, msg: impl Into<String>) {
        self.ok &= ok;
        self.lines.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, msg.into()));
    }

    /// Record an error from the computation itself as a failed check.
    fn attempt<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, format!("{what}: {e}"));
                None
            }
        }
    }

    fn close(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        self.check((got - want).abs() <= tol, format!("{what} = {got:.7} (expected {want} +- {tol:e})"));
    }

    fn chain(&mut self, what: &str, r: Result<ChainReport>) -> bool {
        match r {
            Ok(r) if r.holds() => true,
            Ok(r) => {
                self.check(false, format!("{what}: {:?} at values {:?}", r.verdict, r.values));
                false
            }
            Err(e) => {
                self.check(false, format!("{what}: {e}"));
                false
            }
        }
    }

    fn finish(self, id: u8, title: &'static str, start: Instant, limit: Option<Duration>) -> Criterion {
        let mut c = self;
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            c.check(elapsed < limit, format!("runtime {:.3} s (limit {} s)", elapsed.as_secs_f64(), limit.as_secs_f64()));
        }
        Criterion { id, title, passed: c.ok, details: c.lines, elapsed }
    }
}

fn closed(a: f64, b: f64) -> Interval {
    Interval::closed(a, b).expect("valid interval")
}

fn density(rows: &[[f64; 2]; 2], scale: f64) -> Result<DensityMatrix> {
    DensityMatrix::from_real_rows(&rows.iter().map(|r| r.iter().map(|v| v / scale).collect()).collect::<Vec<_>>())
}

/// Relative entropy and its lower bound on the two-qubit example pair.
pub fn criterion_1() -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let pair = density(&[[2.0, 2.0], [2.0, 5.0]], 7.0).and_then(|r| Ok((r, density(&[[3.0, 1.0], [1.0, 3.0]], 6.0)?)));
    if let Some((rho, sigma)) = c.attempt("density matrices", pair) {
        for (name, (x, y), d_want, b_want) in [
            ("first pair", (&rho, &sigma), 0.14388, 0.0141518),
            ("swapped pair", (&sigma, &rho), 0.174615, 0.0155788),
        ] {
            if let Some(r) = c.attempt(name, entropy_lower_bound(x, y)) {
                c.close(&format!("{name}: D"), r.divergence.value(), d_want, 1e-4);
                c.close(&format!("{name}: lower bound"), r.bound, b_want, 1e-5);
            }
        }
    }
    c.finish(1, "relative entropy example reproduction", start, Some(Duration::from_secs(1)))
}

/// The two 2×2 matrices, equal weights, `f = x²`, `g = x + √x`.
pub fn criterion_2() -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let printed = [[4.0, 2.2], [4.5, 2.8], [5.1, 3.3]];
    let run = || -> Result<_> {
        let ms = vec![
            HermitianMatrix::from_real_rows(&[vec![2.0, -1.0], vec![-1.0, 1.0]])?,
            HermitianMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]])?,
        ];
        let f = Fn1D::parse("x^2", closed(0.0, 3.0))?;
        let g = GLink::concave("x+sqrt(x)", closed(0.0, 20.0), Some("(2*x+1-sqrt(4*x+1))/2"))?;
        let chain = majorization_chain(&ms, &[0.5, 0.5], &f, &g)?;
        let power = power_sqrt_chain(&ms, &[0.5, 0.5], 2.0)?;
        Ok((chain, power))
    };
    if let Some((chain, power)) = c.attempt("majorization chain", run()) {
        for (k, (s, want)) in chain.spectra.iter().zip(printed).enumerate() {
            for (i, (&got, w)) in s.values().iter().zip(want).enumerate() {
                c.close(&format!("spectrum {} ({}) entry {}", k + 1, chain.labels[k], i + 1), got, w, 0.06);
            }
        }
        for k in 0..2 {
            let holds = weak_majorize(&chain.spectra[k], &chain.spectra[k + 1], 1e-9).unwrap_or(false);
            c.check(holds, format!("spectrum {} weakly majorized by spectrum {} (partial sums, tol 1e-9)", k + 1, k + 2));
        }
        c.check(
            power.paths_agree,
            format!("closed-form and generic middle spectra agree (gap {:e})", power.path_gap),
        );
    }
    c.finish(2, "matrix majorization example reproduction", start, Some(Duration::from_secs(1)))
}

/// Index of convexity regression and monotone exponent scans.
pub fn criterion_3() -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let grid = GridSpec::default();
    let dom = Interval::open(0.1, 10.0).expect("valid interval");
    let ladder: Vec<f64> = (0..=28).map(|i| 1.0 + 0.25 * i as f64).chain([16.0, 64.0, 1000.0]).collect();
    let cases: [(&str, Option<f64>); 5] =
        [("x^2", Some(2.0)), ("x^3", Some(3.0)), ("x^4", Some(4.0)), ("exp(x)", None), ("1/x", None)];
    for (text, want) in cases {
        let Some(f) = c.attempt(text, Fn1D::parse(text, dom)) else { continue };
        if let Some(r) = c.attempt(text, index_differential(&f, &grid)) {
            match (want, r.value) {
                (Some(w), IndexValue::Finite(v)) => c.close(&format!("index({text})"), v, w, 1e-6),
                (None, IndexValue::Infinite) => c.check(true, format!("index({text}) = inf")),
                (_, v) => c.check(false, format!("index({text}) = {v}, expected {}", want.map_or("inf".into(), |w| w.to_string()))),
            }
        }
        if let Some(s) = c.attempt(text, exponent_scan(&f, &ladder, &grid)) {
            c.check(s.monotone, format!("exponent scan of {text} monotone, interval {:?}", s.interval()));
        }
    }
    c.finish(3, "index of convexity regression", start, None)
}

#[derive(Clone, Copy)]
enum LinkKind {
    Root,
    Power(f64),
    Log,
    RootPlus,
}

fn make_link(kind: LinkKind, dom: Interval) -> Result<GLink> {
    match kind {
        LinkKind::Root => GLink::concave("x^0.5", dom, Some("x^2")),
        LinkKind::Power(p) => GLink::concave(&format!("x^{p}"), dom, Some(&format!("x^{}", 1.0 / p))),
        LinkKind::Log => GLink::concave("log(x)", dom, Some("exp(x)")),
        LinkKind::RootPlus => GLink::concave("x+sqrt(x)", dom, Some("(2*x+1-sqrt(4*x+1))/2")),
    }
}

fn random_link<R: Rng>(rng: &mut R) -> LinkKind {
    match rng.gen_range(0..4) {
        0 => LinkKind::Root,
        1 => LinkKind::Power(rng.gen_range(0.1..0.95)),
        2 => LinkKind::Log,
        _ => LinkKind::RootPlus,
    }
}

fn random_scalar_f<R: Rng>(rng: &mut R) -> String {
    match rng.gen_range(0..5) {
        0 => "x^2".into(),
        1 => "x^3".into(),
        2 => "x^4".into(),
        3 => "exp(x)".into(),
        _ => format!("exp({}*x)", rng.gen_range(0.2..2.0)),
    }
}

/// `f` on `dom` with a link whose domain is `f`'s range there, kept only if g-convexity validates.
fn validated_pair(text: &str, dom: Interval, kind: LinkKind, grid: &GridSpec) -> Result<Option<(Fn1D, GLink)>> {
    let f = Fn1D::parse(text, dom)?;
    let (lo, hi) = f.grid_range(grid)?;
    let g = make_link(kind, closed(lo, hi))?;
    match is_gconvex(&f, &g, grid) {
        Ok(v) if v.holds() => Ok(Some((f, g))),
        _ => Ok(None),
    }
}

/// Randomized scalar chains: 500 trials.
pub fn criterion_4(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let grid = GridSpec::default();
    let quad = QuadratureSpec::default();
    let (mut trials, mut attempts, mut superadd_runs, mut checked) = (0usize, 0u64, 0usize, 0usize);
    while trials < 500 && attempts < 20_000 {
        let mut rng = trial_rng(seed, attempts);
        attempts += 1;
        let text = random_scalar_f(&mut rng);
        let kind = random_link(&mut rng);
        let lo = rng.gen_range(0.05..1.0);
        let hi = lo + rng.gen_range(0.5..2.5);
        let Ok(Some((f, g))) = validated_pair(&text, closed(lo, hi), kind, &grid) else { continue };
        trials += 1;
        let tag = format!("trial {trials} f={text} on [{lo:.3},{hi:.3}]");

        let k = rng.gen_range(2..=5);
        let points: Vec<f64> = (0..k).map(|_| rng.gen_range(lo..=hi)).collect();
        let raw: Vec<f64> = (0..k).map(|_| rng.gen_range(0.05..1.0)).collect();
        let total: f64 = raw.iter().sum();
        let sample = WeightedSample::new(points, raw.iter().map(|w| w / total).collect());
        c.chain(&format!("{tag}: jensen"), sample.and_then(|s| jensen_chain(&f, &g, &s)));
        let (u, v) = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
        let (a, b) = (u.min(v), u.max(v));
        c.chain(&format!("{tag}: hh1 on [{a},{b}]"), hh_chain_v1(&f, &g, a, b, quad));
        c.chain(&format!("{tag}: hh2 on [{a},{b}]"), hh_chain_v2(&f, &g, a, b, quad));
        c.chain(&format!("{tag}: tangent a={u} b={v}"), tangent_chain(&f, &g, u, v, TangentMode::GConvex));
        checked += 4;

        // superadditivity lives on [0, a] and needs h(0) <= 0 <= g(0)
        let top = rng.gen_range(0.5..3.0);
        if let Ok(Some((f0, g0))) = validated_pair(&text, closed(0.0, top), kind, &grid) {
            let x = rng.gen_range(0.0..=top);
            let y = rng.gen_range(0.0..=(top - x));
            match superadditivity_chain(&f0, &g0, x, y) {
                Ok(r) => {
                    superadd_runs += 1;
                    checked += 1;
                    c.chain(&format!("{tag}: superadditivity x={x} y={y}"), Ok(r));
                }
                Err(crate::Error::Precondition(_)) => {}
                Err(e) => {
                    c.chain(&format!("{tag}: superadditivity"), Err(e));
                }
            }
        }
    }
    c.check(trials == 500, format!("{trials} validated trials ({attempts} draws)"));
    c.check(superadd_runs > 0, format!("{checked} chains checked, {superadd_runs} superadditivity chains with preconditions met"));
    c.finish(4, "randomized scalar chains", start, Some(Duration::from_secs(30)))
}

fn matrix_family<R: Rng>(rng: &mut R) -> (&'static str, LinkKind) {
    let f = ["x^2", "x^3", "exp(x)"][rng.gen_range(0..3)];
    let kind = match (f, rng.gen_range(0..3)) {
        (_, 0) => LinkKind::Root,
        (_, 1) => LinkKind::RootPlus,
        ("exp(x)", _) => LinkKind::Log,
        ("x^2", _) => LinkKind::Power(rng.gen_range(0.5..0.95)),
        _ => LinkKind::Power(rng.gen_range(1.0 / 3.0..0.95)),
    };
    (f, kind)
}

fn scaled_psd<R: Rng>(n: usize, rng: &mut R) -> HermitianMatrix {
    random_psd(n, rng).scale(1.0 / n as f64)
}

fn top_eigenvalue(ms: &[&HermitianMatrix]) -> Result<f64> {
    let mut top = 0.0f64;
    for m in ms {
        top = top.max(eigh(m)?.values[0]);
    }
    Ok(top)
}

/// Randomized matrix chains: 200 trials with `n ≤ 8`.
pub fn criterion_5(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let grid = GridSpec::default();
    let norms = [NormSpec::Operator, NormSpec::Trace, NormSpec::KyFan(2), NormSpec::Schatten(3.0)];
    let mut worst_gap = 0.0f64;
    for trial in 0..200u64 {
        let mut rng = trial_rng(seed, trial);
        let n = rng.gen_range(2..=8);
        let k = rng.gen_range(2..=3);
        let ms: Vec<HermitianMatrix> = (0..k).map(|_| scaled_psd(n, &mut rng)).collect();
        let raw: Vec<f64> = (0..k).map(|_| rng.gen_range(0.05..1.0)).collect();
        let total: f64 = raw.iter().sum();
        let ws: Vec<f64> = raw.iter().map(|w| w / total).collect();
        let (text, kind) = matrix_family(&mut rng);
        let (a, b) = (scaled_psd(n, &mut rng), scaled_psd(n, &mut rng));
        let x = random_unit_vector(n, &mut rng);
        let r = rng.gen_range(2.0..4.0);
        let tag = format!("trial {trial} n={n} f={text}");

        let mut run = || -> Result<()> {
            let refs: Vec<&HermitianMatrix> = ms.iter().collect();
            let top = top_eigenvalue(&refs)? * (1.0 + 1e-9) + 1e-12;
            let Some((f, g)) = validated_pair(text, closed(0.0, top), kind, &grid)? else {
                return Err(crate::Error::Precondition(format!("{tag}: pair failed validation")));
            };
            let chain = majorization_chain(&ms, &ws, &f, &g)?;
            c.check(chain.holds(), format!("{tag}: majorization slack {:?}", chain.slack));
            c.chain(&format!("{tag}: inner-product jensen"), jensen_inner_product(&ms[0], &x, &f, &g));

            if text != "exp(x)" {
                let sum = a.add(&b)?;
                let top = top_eigenvalue(&[&a, &b, &sum])? * (1.0 + 1e-9) + 1e-12;
                let norm_kind = if matches!(kind, LinkKind::Log) { LinkKind::Root } else { kind };
                if let Some((f, g)) = validated_pair(text, closed(0.0, top), norm_kind, &grid)? {
                    for norm in norms {
                        c.chain(&format!("{tag}: norm chain {norm}"), norm_chain(&a, &b, &f, &g, norm));
                    }
                } else {
                    c.check(false, format!("{tag}: norm pair failed validation"));
                }
            }

            let p = power_sqrt_chain(&ms, &ws, r)?;
            worst_gap = worst_gap.max(p.path_gap);
            c.check(p.holds(), format!("{tag}: power chain r={r:.3} slack {:?} path gap {:e}", p.chain.slack, p.path_gap));
            Ok(())
        };
        let outcome = run();
        c.attempt(&format!("trial {trial}"), outcome);
    }
    c.lines.retain(|l| l.starts_with("FAIL"));
    c.check(true, format!("200 trials; worst closed-form vs generic middle gap {worst_gap:e}"));
    c.finish(5, "randomized matrix chains", start, Some(Duration::from_secs(60)))
}

/// `0 ≤ bound ≤ D(ρ|σ)` on random qubit and qutrit pairs, equality at `ρ = σ`.
pub fn criterion_6(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let (mut min_bound, mut min_gap, mut worst_eq) = (f64::INFINITY, f64::INFINITY, 0.0f64);
    for trial in 0..100u64 {
        let mut rng = trial_rng(seed, trial);
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let pair = DensityMatrix::from_matrix(random_density(n, &mut rng).matrix().clone())
            .and_then(|r| Ok((r, DensityMatrix::from_matrix(random_density(n, &mut rng).matrix().clone())?)));
        let Some((rho, sigma)) = c.attempt(&format!("trial {trial}"), pair) else { continue };
        if let Some(r) = c.attempt(&format!("trial {trial}"), entropy_lower_bound(&rho, &sigma)) {
            min_bound = min_bound.min(r.bound);
            min_gap = min_gap.min(r.gap);
            if !(r.bound >= -1e-9 && r.gap >= -1e-9) {
                c.check(false, format!("trial {trial} n={n}: bound {} D {}", r.bound, r.divergence));
            }
        }
        if let Some(r) = c.attempt(&format!("trial {trial}"), entropy_lower_bound(&rho, &rho)) {
            worst_eq = worst_eq.max(r.bound.abs()).max(r.divergence.value().abs());
        }
    }
    c.check(min_bound >= -1e-9, format!("smallest bound over 100 pairs {min_bound:e}"));
    c.check(min_gap >= -1e-9, format!("smallest D - bound over 100 pairs {min_gap:e}"));
    c.check(worst_eq <= 1e-12, format!("largest |bound|, |D| at rho = sigma {worst_eq:e}"));
    c.finish(6, "relative entropy lower bound on random states", start, None)
}

/// Random expression that stays finite and differentiable on `[−1, 1]`:
/// every log, sqrt, division and power acts on `s² + c` with `c > 0`.
fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.6) { Expr::var() } else { Expr::constant(rng.gen_range(-2.0..2.0)) };
    }
    let sub = |rng: &mut R| random_expr(rng, depth - 1);
    let positive = |rng: &mut R| {
        let s = random_expr(rng, depth - 1);
        s.clone().mul(s).add(Expr::constant(rng.gen_range(0.5..2.0)))
    };
    match rng.gen_range(0..9) {
        0 => sub(rng).add(sub(rng)),
        1 => sub(rng).sub(sub(rng)),
        2 => sub(rng).mul(sub(rng)),
        3 => sub(rng).div(positive(rng)),
        4 => sub(rng).exp(),
        5 => positive(rng).ln(),
        6 => positive(rng).sqrt(),
        7 => positive(rng).pow(Expr::constant(rng.gen_range(-2.0..2.0))),
        _ => sub(rng).neg(),
    }
}

/// Five-point central difference.
fn central_difference(e: &Expr, x: f64, h: f64) -> Result<f64> {
    let f = |t: f64| e.eval(t);
    Ok((-f(x + 2.0 * h)? + 8.0 * f(x + h)? - 8.0 * f(x - h)? + f(x - 2.0 * h)?) / (12.0 * h))
}

type HhChain = fn(&Fn1D, &GLink, f64, f64, QuadratureSpec) -> Result<ChainReport>;

/// Derivatives, the eigensolver, and quadrature against independent routes.
pub fn criterion_7(seed: u64) -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();

    let (mut samples, mut draws, mut worst) = (0usize, 0u64, 0.0f64);
    while samples < 1000 && draws < 100_000 {
        let mut rng = trial_rng(seed, draws);
        draws += 1;
        let e = random_expr(&mut rng, 4);
        let x = rng.gen_range(-1.0..1.0);
        let (Ok(sym), Ok(fd)) = (e.differentiate().eval(x), central_difference(&e, x, 1e-3)) else { continue };
        if !(sym.is_finite() && fd.is_finite()) || sym.abs() > 1e6 {
            continue;
        }
        samples += 1;
        let rel = (sym - fd).abs() / (1.0 + sym.abs());
        worst = worst.max(rel);
        if rel > 1e-4 {
            c.check(false, format!("d/dx {e} at {x}: symbolic {sym} vs difference {fd}"));
        }
    }
    c.check(samples == 1000 && worst <= 1e-4, format!("{samples} derivative samples, worst relative error {worst:e}"));

    let mut worst_rec = 0.0f64;
    let mut worst_trace = 0.0f64;
    let mut worst_orth = 0.0f64;
    for (t, n) in [1usize, 2, 3, 4, 5, 8, 12, 16, 24, 32].into_iter().enumerate() {
        let mut rng = trial_rng(seed, 10_000 + t as u64);
        let a = random_hermitian(n, &mut rng);
        let Some(es) = c.attempt(&format!("eigh n={n}"), eigh(&a)) else { continue };
        let scale = 1.0 + a.matrix().frobenius();
        let rec = es.reconstruct().matrix().sub(a.matrix()).map(|d| d.frobenius()).unwrap_or(f64::NAN);
        let vv = es.vectors.adjoint().matmul(&es.vectors).and_then(|p| p.sub(&CMatrix::identity(n)));
        let orth = vv.map(|d| d.frobenius()).unwrap_or(f64::NAN);
        let tr = (es.values.iter().sum::<f64>() - a.trace()).abs();
        worst_rec = worst_rec.max(rec / scale);
        worst_orth = worst_orth.max(orth);
        worst_trace = worst_trace.max(tr / scale);
        let sorted = es.values.windows(2).all(|w| w[0] >= w[1]);
        if !(rec <= 1e-9 * scale && tr <= 1e-9 * scale && orth <= 1e-10 && sorted) {
            c.check(false, format!("eigh n={n}: reconstruction {rec:e}, trace {tr:e}, orthogonality {orth:e}"));
        }
    }
    c.check(
        worst_rec <= 1e-9 && worst_trace <= 1e-9 && worst_orth <= 1e-10,
        format!("eigh n <= 32: reconstruction {worst_rec:e}, trace {worst_trace:e}, orthogonality {worst_orth:e}"),
    );

    let coarse = QuadratureSpec::default();
    let fine = QuadratureSpec { panels: coarse.panels * 8 };
    let cases = [("exp(x)", LinkKind::Root, 0.0, 1.0), ("x^2", LinkKind::RootPlus, 0.5, 2.0), ("exp(x)", LinkKind::Log, 0.0, 2.0)];
    for (text, kind, a, b) in cases {
        let pair = Fn1D::parse(text, closed(a, b)).and_then(|f| {
            let (lo, hi) = f.grid_range(&GridSpec::default())?;
            Ok((f, make_link(kind, closed(lo, hi))?))
        });
        let Some((f, g)) = c.attempt(text, pair) else { continue };
        let chains: [(&str, HhChain); 2] = [("hh1", hh_chain_v1), ("hh2", hh_chain_v2)];
        for (name, run) in chains {
            let (Some(r1), Some(r8)) = (c.attempt(name, run(&f, &g, a, b, coarse)), c.attempt(name, run(&f, &g, a, b, fine)))
            else {
                continue;
            };
            let drift = r1.values.iter().zip(&r8.values).map(|(x, y)| (x - y).abs() / (1.0 + y.abs())).fold(0.0, f64::max);
            c.check(drift <= 1e-9, format!("{name} f={text} on [{a},{b}]: 8x panel refinement drift {drift:e}"));
        }
    }
    c.finish(7, "oracle checks: derivatives, eigensolver, quadrature", start, None)
}

/// Discrete log-convexity of `t ↦ ‖AᵗXB^{1−t}‖` for `A = diag(4,1)`, `B = diag(1,4)`, `X` all ones.
pub fn criterion_8() -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let a = HermitianMatrix::from_diag(&[4.0, 1.0]);
    let b = HermitianMatrix::from_diag(&[1.0, 4.0]);
    let x = CMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).expect("square");
    let grid = GridSpec::default();
    for norm in [NormSpec::Trace, NormSpec::Operator, NormSpec::Frobenius] {
        if let Some(s) = c.attempt(&norm.to_string(), norm_interpolation_scan(&a, &x, &b, norm, &grid)) {
            c.check(
                !s.degenerate && s.log_convex && s.index == Some(IndexValue::Infinite),
                format!(
                    "{norm} norm: smallest second difference of log over {} interior points {:e}",
                    s.second_differences.len(),
                    s.min_second_difference
                ),
            );
        }
    }
    c.finish(8, "norm interpolation log-convexity", start, None)
}

/// All criteria in order.
pub fn run_all(seed: u64) -> Vec<Criterion> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(seed),
        criterion_5(seed),
        criterion_6(seed),
        criterion_7(seed),
        criterion_8(),
    ]
}
