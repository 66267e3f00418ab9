//! The `gconvex` command line: argument parsing, dispatch, and the
//! line-oriented report format.
//!
//! A report is a `key=value` header, a blank line, then a CSV block with
//! columns `term,label,value,gap,verdict`. Exit codes: 0 when every asserted
//! verdict holds, 1 on a violated verdict, 2 on any input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::acceptance;
use crate::chains::{
    heinz_refined, hh_chain_v1, hh_chain_v2, jensen_chain, superadditivity_chain, tangent_chain, young_refined,
    TangentMode, WeightedSample,
};
use crate::convindex::{exponent_scan, index_differential, logconvex_index_check, LogConvexVerdict};
use crate::error::{Error, Result};
use crate::funcspace::{Curvature, Fn1D, GLink, GridSpec, Interval};
use crate::matanalysis::{
    eigh, jensen_inner_product, majorization_chain, norm_chain, norm_interpolation_scan, operator_chain_sample,
    power_sqrt_chain, read_matrix_file, HermitianMatrix, MajorizationChain, NormSpec, C64,
};
use crate::qentropy::{entropy_lower_bound, jeffrey_bound, DensityMatrix};
use crate::quadrature::QuadratureSpec;
use crate::report::{ChainReport, Verdict, CHAIN_REL_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const TOL_ENV: &str = "GCONVEX_TOL";

#[derive(Debug, Parser)]
#[command(name = "gconvex", version, about = "Check g-convexity inequality chains, convexity indices, and matrix and entropy bounds")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Omit the timestamp so reruns are byte-identical.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Relative chain tolerance; overrides GCONVEX_TOL.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Grid points for convexity checks.
    #[arg(long, global = true, default_value_t = 257)]
    grid: usize,
    /// Simpson panels (even).
    #[arg(long, global = true, default_value_t = 2048)]
    panels: usize,
}

#[derive(Debug, Args)]
struct FnArgs {
    /// Function of x, e.g. "exp(x)".
    #[arg(long)]
    f: String,
}

#[derive(Debug, Args)]
struct LinkArgs {
    /// Increasing link g, e.g. "x^0.5".
    #[arg(long)]
    g: String,
    /// Closed-form inverse of g; bisection when omitted.
    #[arg(long)]
    ginv: Option<String>,
    /// Lower end of g's domain; defaults to the smallest sampled f value.
    #[arg(long)]
    glo: Option<f64>,
    /// Upper end of g's domain; defaults to the largest sampled f value.
    #[arg(long)]
    ghi: Option<f64>,
}

#[derive(Debug, Args)]
struct DomainArgs {
    /// Lower end of f's domain.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Upper end of f's domain.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Gconvex,
    Gconcave,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Refined Jensen chain at weighted points.
    Jensen {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        dom: DomainArgs,
        /// Comma-separated points.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        /// Comma-separated positive weights summing to 1.
        #[arg(long)]
        weights: String,
    },
    /// Refined Young inequality.
    Young(MeanArgs),
    /// Refined Heinz mean inequality.
    Heinz(MeanArgs),
    /// Superadditivity chain on [0, b].
    Superadd {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
    },
    /// Four-term Hermite-Hadamard chain on [a, b].
    Hh1(IntervalCmd),
    /// Five-term Hermite-Hadamard chain on [a, b].
    Hh2(IntervalCmd),
    /// Tangent-line chain between a and b.
    Tangent {
        #[command(flatten)]
        cmd: IntervalCmd,
        #[arg(long, value_enum, default_value = "gconvex")]
        mode: ModeArg,
    },
    /// Index of convexity on (a, b).
    Index(FnOnOpen),
    /// Convexity of f^(1/r) for each listed r on (a, b).
    Scan {
        #[command(flatten)]
        inner: FnOnOpen,
        /// Comma-separated exponents, each >= 1.
        #[arg(long)]
        rs: String,
    },
    /// Eigenvalue weak-majorization chain for weighted matrices.
    Majorize {
        #[arg(long)]
        mats: String,
        #[arg(long)]
        weights: String,
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Power chain with the closed-form square-root middle term.
    Powerchain {
        #[arg(long)]
        mats: String,
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 2.0)]
        r: f64,
    },
    /// Unitarily invariant norm chain for PSD A, B.
    Normchain {
        #[arg(long = "mat-a")]
        mat_a: PathBuf,
        #[arg(long = "mat-b")]
        mat_b: PathBuf,
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        link: LinkArgs,
        /// operator, trace, frobenius, kyfan:K or schatten:P.
        #[arg(long, default_value = "operator")]
        norm: String,
    },
    /// Inner-product Jensen chain; the vector is normalized before use.
    Innerjensen {
        #[arg(long)]
        mat: PathBuf,
        /// Comma-separated real entries.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Random search for PSD-order violations of the operator chain.
    Opcheck {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        link: LinkArgs,
        /// Upper end of f's domain [0, b].
        #[arg(long, default_value_t = 50.0)]
        b: f64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Log-convexity scan of t -> |A^t X B^(1-t)|.
    Interp {
        #[arg(long = "mat-a")]
        mat_a: PathBuf,
        #[arg(long = "mat-x")]
        mat_x: PathBuf,
        #[arg(long = "mat-b")]
        mat_b: PathBuf,
        #[arg(long, default_value = "trace")]
        norm: String,
    },
    /// Relative entropy and its trace lower bound.
    Entropy(DensityPair),
    /// Jeffrey divergence and its trace lower bound.
    Jeffrey(DensityPair),
    /// Run the full acceptance battery.
    Suite,
}

#[derive(Debug, Args)]
struct MeanArgs {
    #[arg(long)]
    x: f64,
    #[arg(long)]
    y: f64,
    #[arg(long)]
    t: f64,
    #[arg(long)]
    p: f64,
}

#[derive(Debug, Args)]
struct IntervalCmd {
    #[command(flatten)]
    f: FnArgs,
    #[command(flatten)]
    link: LinkArgs,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
}

#[derive(Debug, Args)]
struct FnOnOpen {
    #[command(flatten)]
    f: FnArgs,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
}

#[derive(Debug, Args)]
struct DensityPair {
    #[arg(long)]
    rho: PathBuf,
    #[arg(long)]
    sigma: PathBuf,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: String,
    pub seed: u64,
    pub rel_tol: f64,
    pub grid: GridSpec,
    pub quad: QuadratureSpec,
    pub deterministic: bool,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn from_common(command: &str, c: &Common, env_tol: Option<&str>) -> Result<Self> {
        let env_tol = match env_tol {
            Some(s) => Some(parse_decimal(s).map_err(|_| Error::InvalidInput(format!("{TOL_ENV}='{s}' is not a decimal")))?),
            None => None,
        };
        let rel_tol = c.tol.or(env_tol).unwrap_or(CHAIN_REL_TOL);
        if !(rel_tol > 0.0 && rel_tol.is_finite()) {
            return Err(Error::InvalidInput(format!("tolerance must be positive, got {rel_tol}")));
        }
        Ok(RunConfig {
            command: command.to_string(),
            seed: c.seed,
            rel_tol,
            grid: GridSpec::with_points(c.grid)?,
            quad: QuadratureSpec::new(c.panels)?,
            deterministic: c.deterministic,
            out: c.out.clone(),
        })
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub term: String,
    pub label: String,
    pub value: String,
    pub gap: String,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub header: Vec<(String, String)>,
    pub rows: Vec<Row>,
    /// Some asserted verdict failed.
    pub violated: bool,
}

pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:?}")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn verdict_word(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "violated"
    }
}

impl Report {
    fn new(cfg: &RunConfig) -> Self {
        let mut header = vec![
            ("command".to_string(), cfg.command.clone()),
            ("seed".to_string(), cfg.seed.to_string()),
            ("rel_tol".to_string(), fmt_num(cfg.rel_tol)),
            ("grid_points".to_string(), cfg.grid.points.to_string()),
            ("panels".to_string(), cfg.quad.panels.to_string()),
        ];
        if cfg.deterministic {
            header.push(("deterministic".into(), "true".into()));
        } else {
            let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            header.push(("timestamp".into(), secs.to_string()));
        }
        Report { header, rows: Vec::new(), violated: false }
    }

    fn set(&mut self, key: &str, value: impl ToString) {
        self.header.push((key.to_string(), value.to_string()));
    }

    fn row(&mut self, term: impl ToString, label: impl ToString, value: impl ToString, gap: impl ToString, verdict: &str) {
        self.rows.push(Row {
            term: term.to_string(),
            label: label.to_string(),
            value: value.to_string(),
            gap: gap.to_string(),
            verdict: verdict.to_string(),
        });
    }

    fn assert(&mut self, ok: bool) {
        self.violated |= !ok;
    }

    /// One row per term; the gap and verdict on row `i` describe the link to term `i + 1`.
    fn chain(&mut self, r: &ChainReport) {
        let broken = match r.verdict {
            Verdict::Holds => None,
            Verdict::Violated { index } => Some(index),
        };
        for (i, (label, v)) in r.labels.iter().zip(&r.values).enumerate() {
            let (gap, verdict) = match r.gaps.get(i) {
                Some(g) => (fmt_num(*g), verdict_word(*g >= -r.tolerance && broken != Some(i))),
                None => (String::new(), "-"),
            };
            self.row(format!("{}:{i}", r.name), label, fmt_num(*v), gap, verdict);
        }
        self.set(&format!("{}.verdict", r.name.replace(' ', "_")), verdict_word(r.holds()));
        self.assert(r.holds());
    }

    fn majorization(&mut self, name: &str, m: &MajorizationChain) {
        let ok = m.majorized();
        for (i, (label, s)) in m.labels.iter().zip(&m.spectra).enumerate() {
            let (gap, verdict) = match m.slack.get(i) {
                Some(g) => (fmt_num(*g), verdict_word(ok[i])),
                None => (String::new(), "-"),
            };
            self.row(format!("{name}:{i}"), label, s, gap, verdict);
        }
        self.set(&format!("{name}.verdict"), verdict_word(m.holds()));
        self.assert(m.holds());
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.header {
            let _ = writeln!(out, "{k}={v}");
        }
        out.push('\n');
        out.push_str("term,label,value,gap,verdict\n");
        for r in &self.rows {
            let fields = [&r.term, &r.label, &r.value, &r.gap, &r.verdict].map(|s| csv_field(s));
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.violated {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        }
    }
}

/// Write the rendered report to `out`, or stdout when `None`.
pub fn emit_report(report: &Report, out: Option<&Path>) -> Result<()> {
    let text = report.render();
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_decimal(s: &str) -> Result<f64> {
    let t = s.trim();
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::InvalidInput(format!("'{s}' is not a decimal number"))),
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(parse_decimal).collect()
}

fn closed(a: f64, b: f64) -> Result<Interval> {
    Interval::closed(a.min(b), a.max(b))
}

fn build_link(link: &LinkArgs, f: &Fn1D, grid: &GridSpec, curvature: Curvature) -> Result<GLink> {
    let (lo, hi) = match (link.glo, link.ghi) {
        (Some(lo), Some(hi)) => (lo, hi),
        (lo, hi) => {
            let (flo, fhi) = f.grid_range(grid)?;
            (lo.unwrap_or(flo), hi.unwrap_or(fhi))
        }
    };
    GLink::parse(&link.g, closed(lo, hi)?, link.ginv.as_deref(), curvature)
}

fn load_matrix(path: &Path) -> Result<HermitianMatrix> {
    HermitianMatrix::new(read_matrix_file(path)?)
}

fn load_density(path: &Path) -> Result<DensityMatrix> {
    DensityMatrix::from_matrix(read_matrix_file(path)?)
}

fn load_matrices(list: &str) -> Result<Vec<HermitianMatrix>> {
    list.split(',').map(|p| load_matrix(Path::new(p.trim()))).collect()
}

/// `[min(0, λ_min), λ_max]` over all given matrices, padded against rounding.
fn spectral_window(ms: &[&HermitianMatrix]) -> Result<Interval> {
    let (mut lo, mut hi) = (0.0f64, 0.0f64);
    for m in ms {
        let es = eigh(m)?;
        hi = hi.max(es.values[0]);
        lo = lo.min(*es.values.last().expect("nonempty"));
    }
    closed(lo - 1e-12 * (1.0 + lo.abs()), hi * (1.0 + 1e-9) + 1e-12)
}

fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Report> {
    let mut rep = Report::new(cfg);
    let grid = &cfg.grid;
    let tol = cfg.rel_tol;
    match cmd {
        Command::Jensen { f, link, dom, points, weights } => {
            let points = parse_list(points)?;
            let lo = dom.a.unwrap_or_else(|| points.iter().copied().fold(f64::INFINITY, f64::min));
            let hi = dom.b.unwrap_or_else(|| points.iter().copied().fold(f64::NEG_INFINITY, f64::max));
            let f = Fn1D::parse(&f.f, closed(lo, hi)?)?;
            let g = build_link(link, &f, grid, Curvature::Concave)?;
            let s = WeightedSample::new(points, parse_list(weights)?)?;
            rep.chain(&jensen_chain(&f, &g, &s)?.with_rel_tol(tol));
        }
        Command::Young(m) => rep.chain(&young_refined(m.x, m.y, m.t, m.p)?.with_rel_tol(tol)),
        Command::Heinz(m) => rep.chain(&heinz_refined(m.x, m.y, m.t, m.p)?.with_rel_tol(tol)),
        Command::Superadd { f, link, b, x, y } => {
            let f = Fn1D::parse(&f.f, closed(0.0, *b)?)?;
            let g = build_link(link, &f, grid, Curvature::Concave)?;
            rep.chain(&superadditivity_chain(&f, &g, *x, *y)?.with_rel_tol(tol));
        }
        Command::Hh1(c) | Command::Hh2(c) => {
            let f = Fn1D::parse(&c.f.f, closed(c.a, c.b)?)?;
            let g = build_link(&c.link, &f, grid, Curvature::Concave)?;
            let r = if matches!(cmd, Command::Hh1(_)) {
                hh_chain_v1(&f, &g, c.a, c.b, cfg.quad)?
            } else {
                hh_chain_v2(&f, &g, c.a, c.b, cfg.quad)?
            };
            rep.chain(&r.with_rel_tol(tol));
        }
        Command::Tangent { cmd: c, mode } => {
            let f = Fn1D::parse(&c.f.f, closed(c.a, c.b)?)?;
            let (curv, mode) = match mode {
                ModeArg::Gconvex => (Curvature::Concave, TangentMode::GConvex),
                ModeArg::Gconcave => (Curvature::Convex, TangentMode::GConcave),
            };
            let g = build_link(&c.link, &f, grid, curv)?;
            rep.chain(&tangent_chain(&f, &g, c.a, c.b, mode)?.with_rel_tol(tol));
        }
        Command::Index(c) => {
            let f = Fn1D::parse(&c.f.f, Interval::open(c.a, c.b)?)?;
            let r = index_differential(&f, grid)?;
            rep.set("domain", f.domain());
            rep.set("infimum", r.infimum.map_or("none".into(), fmt_num));
            rep.set("witness", r.witness.map_or("none".into(), fmt_num));
            let value = r.value.finite().map_or("inf".into(), fmt_num);
            rep.row("index", "I_conv(f)", value, "", "-");
            let lc = logconvex_index_check(&f, grid)?;
            let (label, verdict) = match lc.verdict {
                LogConvexVerdict::Consistent => ("log-convex, index infinite", "holds"),
                LogConvexVerdict::Inconsistent => ("log-convex, index finite", "violated"),
                LogConvexVerdict::NotApplicable => ("not log-convex", "-"),
            };
            rep.row("logconvex", label, lc.log_convex, "", verdict);
            rep.assert(lc.verdict != LogConvexVerdict::Inconsistent);
        }
        Command::Scan { inner: c, rs } => {
            let f = Fn1D::parse(&c.f.f, Interval::open(c.a, c.b)?)?;
            let s = exponent_scan(&f, &parse_list(rs)?, grid)?;
            rep.set("domain", f.domain());
            rep.set("monotone", s.monotone);
            rep.set("interval", s.interval().map_or("empty".into(), |(l, u)| format!("[{},{}]", fmt_num(l), fmt_num(u))));
            for (i, (r, ok)) in s.exponents.iter().zip(&s.convex).enumerate() {
                rep.row(format!("r:{i}"), format!("f^(1/{})", fmt_num(*r)), if *ok { "convex" } else { "not convex" }, "", "-");
            }
            rep.assert(s.monotone);
        }
        Command::Majorize { mats, weights, f, link } => {
            let ms = load_matrices(mats)?;
            let ws = parse_list(weights)?;
            let mean = HermitianMatrix::weighted_sum(&ms, &ws)?;
            let mut refs: Vec<&HermitianMatrix> = ms.iter().collect();
            refs.push(&mean);
            let f = Fn1D::parse(&f.f, spectral_window(&refs)?)?;
            let g = build_link(link, &f, grid, Curvature::Concave)?;
            rep.majorization("spectrum", &majorization_chain(&ms, &ws, &f, &g)?.with_rel_tol(tol));
        }
        Command::Powerchain { mats, weights, r } => {
            let ms = load_matrices(mats)?;
            let p = power_sqrt_chain(&ms, &parse_list(weights)?, *r)?;
            rep.set("r", fmt_num(*r));
            rep.majorization("spectrum", &p.chain.clone().with_rel_tol(tol));
            rep.row("generic_middle", "ginv(sum w h(A)) with h = x^r + x^(r/2)", &p.generic_middle, fmt_num(p.path_gap), verdict_word(p.paths_agree));
            rep.assert(p.paths_agree);
        }
        Command::Normchain { mat_a, mat_b, f, link, norm } => {
            let (a, b) = (load_matrix(mat_a)?, load_matrix(mat_b)?);
            let sum = a.add(&b)?;
            let window = spectral_window(&[&a, &b, &sum])?;
            let f = Fn1D::parse(&f.f, closed(0.0, window.hi)?)?;
            let g = build_link(link, &f, grid, Curvature::Concave)?;
            let norm: NormSpec = norm.parse()?;
            rep.set("norm", norm);
            rep.chain(&norm_chain(&a, &b, &f, &g, norm)?.with_rel_tol(tol));
        }
        Command::Innerjensen { mat, vector, f, link } => {
            let a = load_matrix(mat)?;
            let v = parse_list(vector)?;
            let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !(len > 0.0) {
                return Err(Error::InvalidInput("vector must be nonzero".into()));
            }
            let x: Vec<C64> = v.iter().map(|c| C64::new(c / len, 0.0)).collect();
            let f = Fn1D::parse(&f.f, spectral_window(&[&a])?)?;
            let g = build_link(link, &f, grid, Curvature::Concave)?;
            rep.chain(&jensen_inner_product(&a, &x, &f, &g)?.with_rel_tol(tol));
        }
        Command::Opcheck { f, link, b, n, trials } => {
            let f = Fn1D::parse(&f.f, closed(0.0, *b)?)?;
            let g = build_link(link, &f, grid, Curvature::Convex)?;
            let s = operator_chain_sample(&f, &g, *n, *trials, cfg.seed)?;
            rep.set("n", n);
            rep.set("trials", trials);
            rep.set("counterexamples", s.counterexamples.len());
            rep.set("worst_min_eigenvalue", fmt_num(s.worst));
            for (i, ce) in s.counterexamples.iter().take(20).enumerate() {
                rep.row(
                    format!("counterexample:{i}"),
                    format!("trial {} v={} link {}", ce.trial, fmt_num(ce.v), ce.link),
                    fmt_num(ce.min_eigenvalue),
                    "",
                    "violated",
                );
            }
            if s.holds() {
                rep.row("summary", "no PSD-order violation found", fmt_num(s.worst), "", "holds");
            }
            rep.assert(s.holds());
        }
        Command::Interp { mat_a, mat_x, mat_b, norm } => {
            let (a, b) = (load_matrix(mat_a)?, load_matrix(mat_b)?);
            let x = read_matrix_file(mat_x)?;
            let norm: NormSpec = norm.parse()?;
            let s = norm_interpolation_scan(&a, &x, &b, norm, grid)?;
            rep.set("norm", norm);
            rep.set("degenerate", s.degenerate);
            rep.set("log_convex", s.log_convex);
            rep.set("min_second_difference", fmt_num(s.min_second_difference));
            rep.set("index", s.index.map_or("none".into(), |v| v.to_string()));
            for (i, (t, v)) in s.ts.iter().zip(&s.values).enumerate() {
                let d = if i == 0 { None } else { s.second_differences.get(i - 1) };
                let (gap, verdict) = match d {
                    Some(d) => (fmt_num(*d), verdict_word(*d >= -crate::matanalysis::chains::LOG_CONVEXITY_TOL)),
                    None => (String::new(), "-"),
                };
                rep.row(format!("t:{i}"), fmt_num(*t), fmt_num(*v), gap, verdict);
            }
            rep.assert(s.holds());
        }
        Command::Entropy(p) => {
            let (rho, sigma) = (load_density(&p.rho)?, load_density(&p.sigma)?);
            let r = entropy_lower_bound(&rho, &sigma)?;
            rep.set("S_rho", fmt_num(r.entropy_rho));
            rep.set("S_sigma", fmt_num(r.entropy_sigma));
            rep.set("D", fmt_num(r.divergence.value()));
            rep.set("bound", fmt_num(r.bound));
            rep.set("gap", fmt_num(r.gap));
            // the bound's nonnegativity is a recorded claim, not an asserted verdict
            rep.set("bound_nonnegative", r.bound_nonnegative());
            rep.chain(&r.chain().with_rel_tol(tol));
        }
        Command::Jeffrey(p) => {
            let (rho, sigma) = (load_density(&p.rho)?, load_density(&p.sigma)?);
            rep.chain(&jeffrey_bound(&rho, &sigma)?.with_rel_tol(tol));
        }
        Command::Suite => {
            let results = acceptance::run_all(cfg.seed);
            let passed = results.iter().filter(|c| c.passed).count();
            rep.set("criteria_passed", passed);
            rep.set("criteria_failed", results.len() - passed);
            for c in &results {
                let total = c.details.len();
                let ok = total - c.failures().count();
                rep.row(format!("criterion:{}", c.id), c.title, format!("{ok}/{total} checks"), "", verdict_word(c.passed));
                for (i, line) in c.failures().enumerate() {
                    rep.row(format!("criterion:{}.fail:{i}", c.id), line.trim_start_matches("FAIL").trim(), "", "", "violated");
                }
                rep.assert(c.passed);
            }
        }
    }
    Ok(rep)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Jensen { .. } => "jensen",
        Command::Young(_) => "young",
        Command::Heinz(_) => "heinz",
        Command::Superadd { .. } => "superadd",
        Command::Hh1(_) => "hh1",
        Command::Hh2(_) => "hh2",
        Command::Tangent { .. } => "tangent",
        Command::Index(_) => "index",
        Command::Scan { .. } => "scan",
        Command::Majorize { .. } => "majorize",
        Command::Powerchain { .. } => "powerchain",
        Command::Normchain { .. } => "normchain",
        Command::Innerjensen { .. } => "innerjensen",
        Command::Opcheck { .. } => "opcheck",
        Command::Interp { .. } => "interp",
        Command::Entropy(_) => "entropy",
        Command::Jeffrey(_) => "jeffrey",
        Command::Suite => "suite",
    }
}

/// Parse `argv` (including the program name), execute, emit the report,
/// and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return code;
        }
    };
    let env_tol = std::env::var(TOL_ENV).ok();
    let outcome = RunConfig::from_common(command_name(&cli.command), &cli.common, env_tol.as_deref())
        .and_then(|cfg| Ok((execute(&cli.command, &cfg)?, cfg)))
        .and_then(|(rep, cfg)| emit_report(&rep, cfg.out.as_deref()).map(|_| rep));
    match outcome {
        Ok(rep) => rep.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        let c = Common { out: None, seed: 42, deterministic: true, tol: None, grid: 257, panels: 2048 };
        RunConfig::from_common("test", &c, None).unwrap()
    }

    #[test]
    fn tolerance_precedence() {
        let mut c = Common { out: None, seed: 1, deterministic: true, tol: None, grid: 257, panels: 2048 };
        assert_eq!(RunConfig::from_common("x", &c, None).unwrap().rel_tol, CHAIN_REL_TOL);
        assert_eq!(RunConfig::from_common("x", &c, Some("1e-6")).unwrap().rel_tol, 1e-6);
        c.tol = Some(1e-3);
        assert_eq!(RunConfig::from_common("x", &c, Some("1e-6")).unwrap().rel_tol, 1e-3);
        c.tol = None;
        assert!(RunConfig::from_common("x", &c, Some("abc")).is_err());
        assert!(RunConfig::from_common("x", &c, Some("-1")).is_err());
        c.panels = 7;
        assert!(RunConfig::from_common("x", &c, None).is_err());
    }

    #[test]
    fn report_layout() {
        let mut rep = Report::new(&cfg());
        let r = ChainReport::new("demo", crate::report::Order::Ascending, vec![("a,b", 1.0), ("c", 0.5)]);
        rep.chain(&r);
        let text = rep.render();
        assert!(text.starts_with("command=test\nseed=42\n"));
        assert!(text.contains("\n\nterm,label,value,gap,verdict\n"));
        assert!(text.contains("demo:0,\"a,b\",1.0,-0.5,violated\n"));
        assert!(text.contains("demo:1,c,0.5,,-\n"));
        assert!(!text.contains("timestamp"));
        assert_eq!(rep.exit_code(), EXIT_VIOLATION);
    }

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(2.0), "2.0");
        assert_eq!(fmt_num(f64::INFINITY), "inf");
        assert_eq!(fmt_num(0.1), "0.1");
        assert_eq!(parse_list("0, 1,-2.5").unwrap(), vec![0.0, 1.0, -2.5]);
        assert!(parse_list("1,,2").is_err());
    }
}
