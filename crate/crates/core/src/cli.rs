//! Command-line front end: `series`, `verify`, `bound` and `grid`.
//!
//! Exit codes are a stable contract: 0 on success, 1 when a computation
//! fails (a nonzero residual, an exhausted box budget), 2 on a usage error
//! (bad flags, invalid configuration, unwritable output path).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bound_optimizer::{
    certified_max_with, global_max, grid_max, BoundFunction, CertifiedConfig, OptimizationResult,
    OptimizeError, Region, DEFAULT_BOX_CAP, H31_INTRODUCTION_LABEL, H31_THEOREM_LABEL,
};
use crate::functionals::functional_reports;
use crate::grunsky::{
    lebedev_residuals, table_for, CoefficientVector, GrunskyTable, TestFunction, DEFAULT_CAP,
};
use crate::power_series::{sqrt_transform, Rational};

/// Environment variable overriding the branch-and-bound box cap.
pub const BOX_CAP_ENV: &str = "GRUNSKY_BOX_CAP";

/// Tolerance handed to the Newton and line-search route.
const NEWTON_TOL: f64 = 1e-12;

/// Points per axis for `--method grid`.
const BOUND_GRID_POINTS: usize = 2001;

#[derive(Debug, Parser)]
#[command(name = "grunsky", version, about = "Grunsky coefficients and certified coefficient bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print f, its odd square-root transform f2 and the Grunsky table.
    Series(SeriesArgs),
    /// Check the coefficient identities and the omega rewrites exactly.
    Verify(VerifyArgs),
    /// Reproduce a coefficient bound by maximizing over E.
    Bound(BoundArgs),
    /// Export an objective on a rectangular grid clipped to E as CSV.
    Grid(GridArgs),
}

#[derive(Debug, clap::Args)]
struct FunctionArgs {
    /// Custom coefficients a0,a1,...; integers or p/q, starting 0,1.
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    coeffs: Option<Vec<Rational>>,
    /// Truncation order of f.
    #[arg(long, value_parser = clap::value_parser!(u64).range(5..=64))]
    order: Option<u64>,
}

#[derive(Debug, clap::Args)]
struct SeriesArgs {
    #[arg(long = "fn", value_enum, default_value_t = FunctionChoice::Koebe)]
    function: FunctionChoice,
    #[command(flatten)]
    input: FunctionArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(long = "fn", value_enum, default_value_t = SelectorChoice::All)]
    function: SelectorChoice,
    #[command(flatten)]
    input: FunctionArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct BoundArgs {
    #[arg(long, value_enum, required_unless_present = "from_report")]
    target: Option<Target>,
    #[arg(long, value_enum, default_value_t = MethodChoice::Newton)]
    method: MethodChoice,
    /// Requested enclosure width for the certified method.
    #[arg(long, default_value_t = 1e-6, value_parser = parse_eps)]
    eps: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Re-run the configuration embedded in an earlier JSON report.
    #[arg(long, conflicts_with_all = ["target", "method", "eps"])]
    from_report: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct GridArgs {
    #[arg(long, value_parser = parse_objective)]
    target: BoundFunction,
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
    nx: u64,
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
    ny: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FunctionChoice {
    Koebe,
    Identity,
    Geometric,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SelectorChoice {
    Koebe,
    Identity,
    Geometric,
    Custom,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum MethodChoice {
    Newton,
    Grid,
    Certified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Target {
    Gamma3,
    Diff43,
    Zalcman23,
    H22,
    H31,
    All,
}

impl Target {
    const THEOREMS: [Target; 5] = [Target::Gamma3, Target::Diff43, Target::Zalcman23, Target::H22, Target::H31];

    fn name(self) -> &'static str {
        match self {
            Target::Gamma3 => "gamma3",
            Target::Diff43 => "diff43",
            Target::Zalcman23 => "zalcman23",
            Target::H22 => "h22",
            Target::H31 => "h31",
            Target::All => "all",
        }
    }

    /// Objective maximized for single-objective targets.
    fn objective(self) -> Option<BoundFunction> {
        match self {
            Target::Gamma3 => Some(BoundFunction::F1),
            Target::Diff43 => Some(BoundFunction::F2),
            Target::Zalcman23 => Some(BoundFunction::F3),
            Target::H22 => Some(BoundFunction::F4),
            Target::H31 | Target::All => None,
        }
    }

    /// The constant as printed in the published theorem.
    fn published(self) -> &'static str {
        match self {
            Target::Gamma3 => "0.5566178",
            Target::Diff43 => "1.751853",
            Target::Zalcman23 => "2.10064",
            Target::H22 => "1.3614356",
            Target::H31 => H31_THEOREM_LABEL,
            Target::All => "",
        }
    }
}

/// A failed command, carrying its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => m,
        }
    }
}

impl From<OptimizeError> for Failure {
    fn from(e: OptimizeError) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the CLI with process stdout and stderr; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against arbitrary writers; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let outcome = match cli.command {
        Command::Series(a) => cmd_series(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Bound(a) => cmd_bound(&a, out),
        Command::Grid(a) => cmd_grid(&a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.code()
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    s.parse::<Rational>()
        .map_err(|_| format!("'{s}' is not an integer or p/q rational"))
}

fn parse_eps(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("eps must be positive and finite, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_objective(s: &str) -> Result<BoundFunction, String> {
    s.parse()
}

/// Formats with 9 significant digits, dropping trailing zeros.
pub fn format_sig9(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (8 - exponent).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Rounds to the value printed by [`format_sig9`].
fn sig9(v: f64) -> f64 {
    format_sig9(v).parse().unwrap_or(v)
}

/// Writes `text` to `path`, or to `out` when no path is given.
fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn resolve_function(choice: FunctionChoice, input: &FunctionArgs) -> Result<(TestFunction, usize), Failure> {
    let order = input.order.map(|o| o as usize);
    let function = match (choice, &input.coeffs) {
        (FunctionChoice::Custom, None) => {
            return Err(Failure::Usage("--fn custom requires --coeffs".into()))
        }
        (FunctionChoice::Custom, Some(c)) => {
            let normalized = c.len() >= 2
                && c[0] == Rational::from_integer(0.into())
                && c[1] == Rational::from_integer(1.into());
            if !normalized {
                return Err(Failure::Usage("custom coefficients must begin 0,1".into()));
            }
            TestFunction::Custom(c.clone())
        }
        (_, Some(_)) => return Err(Failure::Usage("--coeffs is only valid with --fn custom".into())),
        (FunctionChoice::Koebe, None) => TestFunction::Koebe,
        (FunctionChoice::Identity, None) => TestFunction::Identity,
        (FunctionChoice::Geometric, None) => TestFunction::Geometric,
    };
    let order = match (&function, order) {
        (TestFunction::Custom(c), Some(o)) if c.len() > o + 1 => {
            return Err(Failure::Usage(format!(
                "{} coefficients given but --order {o} keeps only {}",
                c.len(),
                o + 1
            )))
        }
        (TestFunction::Custom(c), None) => (c.len() - 1).max(10),
        (_, Some(o)) => o,
        (_, None) => 10,
    };
    if !(5..=64).contains(&order) {
        return Err(Failure::Usage(format!("order must lie in [5, 64], got {order}")));
    }
    Ok((function, order))
}

fn warn_unverified(function: &TestFunction, err: &mut dyn Write) {
    if !function.univalence_verified() {
        let _ = writeln!(
            err,
            "warning: univalence of the {} function is not verified; identities hold formally but bounds need not",
            function.name()
        );
    }
}

#[derive(Serialize)]
struct SeriesReport {
    function: String,
    order: usize,
    univalence_verified: bool,
    f: Vec<String>,
    f2: Vec<String>,
    omega: BTreeMap<String, String>,
}

/// Odd-odd entries keyed "p,q".
fn odd_entries(table: &GrunskyTable) -> BTreeMap<String, String> {
    table
        .entries()
        .filter(|(p, q, _)| p % 2 == 1 && q % 2 == 1)
        .map(|(p, q, v)| (format!("{p},{q}"), v.to_string()))
        .collect()
}

fn cmd_series(args: &SeriesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let (function, order) = resolve_function(args.function, &args.input)?;
    warn_unverified(&function, err);
    let f = function.series(order);
    let f2 = sqrt_transform(&f).map_err(|e| Failure::Compute(e.to_string()))?;
    let table = table_for(&function, order).map_err(|e| Failure::Compute(e.to_string()))?;
    let report = SeriesReport {
        function: function.name().to_string(),
        order,
        univalence_verified: function.univalence_verified(),
        f: f.coeffs().iter().map(ToString::to_string).collect(),
        f2: f2.coeffs().iter().map(ToString::to_string).collect(),
        omega: odd_entries(&table),
    };
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("kind,p,q,value\n");
            for (n, c) in report.f.iter().enumerate() {
                s += &format!("f,{n},,{c}\n");
            }
            for (n, c) in report.f2.iter().enumerate() {
                s += &format!("f2,{n},,{c}\n");
            }
            for (p, q, v) in table.entries().filter(|(p, q, _)| p % 2 == 1 && q % 2 == 1) {
                s += &format!("omega,{p},{q},{v}\n");
            }
            s
        }
        Format::Text => {
            let mut s = format!("function: {} (order {order})\n", report.function);
            s += &format!("f  = {f}\n");
            s += &format!("f2 = {f2}\n");
            s += &format!("odd Grunsky coefficients (p + q <= {DEFAULT_CAP}):\n");
            for (p, q, v) in table.entries().filter(|(p, q, _)| p % 2 == 1 && q % 2 == 1) {
                s += &format!("  omega[{p},{q}] = {v}\n");
            }
            s
        }
    };
    emit(&text, args.out.as_deref(), out)?;
    Ok(0)
}

#[derive(Serialize)]
struct IdentityLine {
    name: String,
    residual: String,
}

#[derive(Serialize)]
struct AgreementLine {
    name: String,
    direct: String,
    via_omega: String,
    agrees: bool,
}

#[derive(Serialize)]
struct FunctionVerification {
    function: String,
    univalence_verified: bool,
    identities: Vec<IdentityLine>,
    functionals: Vec<AgreementLine>,
}

#[derive(Serialize)]
struct VerifyReport {
    order: usize,
    identities_checked: usize,
    all_zero: bool,
    functions: Vec<FunctionVerification>,
}

fn verify_one(function: &TestFunction, order: usize) -> Result<FunctionVerification, Failure> {
    let compute = |e: &dyn std::fmt::Display| Failure::Compute(e.to_string());
    let f = function.series(order);
    let table = table_for(function, order).map_err(|e| compute(&e))?;
    let a = CoefficientVector::from_series(&f).map_err(|e| compute(&e))?;
    let residuals = lebedev_residuals(&a, &table).map_err(|e| compute(&e))?;
    let reports = functional_reports(&f, &table).map_err(|e| compute(&e))?;
    Ok(FunctionVerification {
        function: function.name().to_string(),
        univalence_verified: function.univalence_verified(),
        identities: residuals
            .residuals
            .iter()
            .map(|r| IdentityLine { name: r.name.to_string(), residual: r.value.to_string() })
            .collect(),
        functionals: reports
            .iter()
            .map(|r| AgreementLine {
                name: r.name.to_string(),
                direct: r.direct.to_string(),
                via_omega: r.via_omega.to_string(),
                agrees: r.agrees(),
            })
            .collect(),
    })
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let functions = match args.function {
        SelectorChoice::All => {
            if args.input.coeffs.is_some() {
                return Err(Failure::Usage("--coeffs is only valid with --fn custom".into()));
            }
            let order = args.input.order.map_or(10, |o| o as usize);
            TestFunction::CATALOGUE.iter().cloned().map(|f| (f, order)).collect()
        }
        single => {
            let choice = match single {
                SelectorChoice::Koebe => FunctionChoice::Koebe,
                SelectorChoice::Identity => FunctionChoice::Identity,
                SelectorChoice::Geometric => FunctionChoice::Geometric,
                SelectorChoice::Custom | SelectorChoice::All => FunctionChoice::Custom,
            };
            vec![resolve_function(choice, &args.input)?]
        }
    };
    let order = functions[0].1;
    let mut checked = Vec::new();
    for (function, order) in &functions {
        warn_unverified(function, err);
        checked.push(verify_one(function, *order)?);
    }
    let all_zero = checked.iter().all(|v| {
        v.identities.iter().all(|i| i.residual == "0") && v.functionals.iter().all(|r| r.agrees)
    });
    let report = VerifyReport {
        order,
        identities_checked: checked.iter().map(|v| v.identities.len()).sum(),
        all_zero,
        functions: checked,
    };
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("function,check,direct,via_omega,ok\n");
            for v in &report.functions {
                for i in &v.identities {
                    s += &format!("{},{},{},,{}\n", v.function, i.name, i.residual, i.residual == "0");
                }
                for r in &v.functionals {
                    s += &format!("{},{},{},{},{}\n", v.function, r.name, r.direct, r.via_omega, r.agrees);
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for v in &report.functions {
                s += &format!("{}:\n", v.function);
                for i in &v.identities {
                    let mark = if i.residual == "0" { "ok" } else { "FAIL" };
                    s += &format!("  identity {:<12} residual {:<12} {mark}\n", i.name, i.residual);
                }
                for r in &v.functionals {
                    let mark = if r.agrees { "ok" } else { "FAIL" };
                    s += &format!("  {:<28} {} = {} {mark}\n", r.name, r.direct, r.via_omega);
                }
            }
            s += &format!(
                "{} identities checked; {}\n",
                report.identities_checked,
                if all_zero { "all residuals are exactly zero" } else { "nonzero residuals found" }
            );
            s
        }
    };
    emit(&text, args.out.as_deref(), out)?;
    Ok(if all_zero { 0 } else { 1 })
}

/// Everything needed to reproduce a bound report byte for byte.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct BoundConfig {
    target: Target,
    method: MethodChoice,
    eps: f64,
    box_cap: usize,
}

#[derive(Serialize)]
struct H31Components {
    b1: f64,
    phi2: f64,
    b2: f64,
    phi2_argmax: [f64; 2],
}

#[derive(Serialize)]
struct H31Labels {
    theorem: &'static str,
    introduction: &'static str,
}

#[derive(Serialize)]
struct BoundReport {
    target: &'static str,
    objective: &'static str,
    method: &'static str,
    value: f64,
    argmax: [f64; 2],
    edge: &'static str,
    /// Full precision: rounding would break the rigorous containment.
    enclosure: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<H31Components>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<H31Labels>,
    config: BoundConfig,
}

fn box_cap_from_env() -> Result<usize, Failure> {
    match std::env::var(BOX_CAP_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| Failure::Usage(format!("{BOX_CAP_ENV} must be a positive integer, got '{s}'"))),
        Err(_) => Ok(DEFAULT_BOX_CAP),
    }
}

fn maximize(function: BoundFunction, config: &BoundConfig) -> Result<OptimizationResult, Failure> {
    Ok(match config.method {
        MethodChoice::Newton => global_max(function, NEWTON_TOL)?,
        MethodChoice::Grid => grid_max(function, BOUND_GRID_POINTS, BOUND_GRID_POINTS),
        MethodChoice::Certified => certified_max_with(
            function,
            &CertifiedConfig { eps: config.eps, box_cap: config.box_cap },
        )?,
    })
}

fn pair((a, b): (f64, f64)) -> [f64; 2] {
    [sig9(a), sig9(b)]
}

fn bound_report(target: Target, config: BoundConfig) -> Result<BoundReport, Failure> {
    let config = BoundConfig { target, ..config };
    if let Some(function) = target.objective() {
        let r = maximize(function, &config)?;
        return Ok(BoundReport {
            target: target.name(),
            objective: function.name(),
            method: r.method.name(),
            value: sig9(r.value),
            argmax: pair(r.argmax),
            edge: r.location.name(),
            enclosure: r.enclosure.map(|(lo, hi)| [lo, hi]),
            components: None,
            labels: None,
            config,
        });
    }
    let b1 = maximize(BoundFunction::Phi1, &config)?;
    let phi2 = maximize(BoundFunction::Phi2, &config)?;
    let b2 = 4.0 * phi2.value * phi2.value;
    let enclosure = match (b1.enclosure, phi2.enclosure) {
        (Some((l1, h1)), Some((l2, h2))) => Some((l1 + 4.0 * l2 * l2, h1 + 4.0 * h2 * h2)),
        _ => None,
    };
    Ok(BoundReport {
        target: target.name(),
        objective: "phi1+4*phi2^2",
        method: b1.method.name(),
        value: sig9(b1.value + b2),
        argmax: pair(b1.argmax),
        edge: b1.location.name(),
        enclosure: enclosure.map(|(lo, hi)| [lo, hi]),
        components: Some(H31Components {
            b1: sig9(b1.value),
            phi2: sig9(phi2.value),
            b2: sig9(b2),
            phi2_argmax: pair(phi2.argmax),
        }),
        labels: Some(H31Labels { theorem: H31_THEOREM_LABEL, introduction: H31_INTRODUCTION_LABEL }),
        config,
    })
}

/// Whether `value` reproduces a published constant: both are cut to the
/// published number of decimals, at most 6, and compared as text.
pub fn matches_published(value: f64, published: &str) -> bool {
    let decimals = published.split_once('.').map_or(0, |(_, d)| d.len()).min(6);
    let cut = |s: &str| -> String {
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let frac: String = frac.chars().chain(std::iter::repeat('0')).take(decimals).collect();
        format!("{int}.{frac}")
    };
    cut(&format!("{value:.12}")) == cut(published)
}

fn render_bound_text(r: &BoundReport) -> String {
    let mut s = format!("target     {}\n", r.target);
    s += &format!("objective  {}\n", r.objective);
    s += &format!("method     {}\n", r.method);
    s += &format!("value      {}\n", format_sig9(r.value));
    s += &format!("argmax     ({}, {})\n", format_sig9(r.argmax[0]), format_sig9(r.argmax[1]));
    s += &format!("edge       {}\n", r.edge);
    if let Some([lo, hi]) = r.enclosure {
        s += &format!("enclosure  [{lo}, {hi}]\n");
    }
    if let Some(c) = &r.components {
        s += &format!("B1         {}\n", format_sig9(c.b1));
        s += &format!("max PHI2   {} at ({}, {})\n", format_sig9(c.phi2), format_sig9(c.phi2_argmax[0]), format_sig9(c.phi2_argmax[1]));
        s += &format!("B2         {}\n", format_sig9(c.b2));
    }
    if let Some(l) = &r.labels {
        s += &format!("label      {} (theorem)\n", l.theorem);
        s += &format!("label      {} (introduction, not reproduced)\n", l.introduction);
    }
    s
}

fn render_bound_csv(reports: &[BoundReport]) -> String {
    let mut s = String::from("target,objective,method,value,x,y,edge,lo,hi\n");
    for r in reports {
        let (lo, hi) = r
            .enclosure
            .map_or((String::new(), String::new()), |[l, h]| (l.to_string(), h.to_string()));
        s += &format!(
            "{},{},{},{},{},{},{},{lo},{hi}\n",
            r.target,
            r.objective,
            r.method,
            format_sig9(r.value),
            format_sig9(r.argmax[0]),
            format_sig9(r.argmax[1]),
            r.edge
        );
    }
    s
}

fn render_summary(reports: &[BoundReport]) -> String {
    let mut s = format!(
        "{:<10} {:<14} {:<10} {:<12} {:<10} {:<10} {}\n",
        "target", "objective", "method", "value", "published", "edge", "match"
    );
    for r in reports {
        let target = Target::THEOREMS.into_iter().find(|t| t.name() == r.target).unwrap_or(Target::All);
        let published = target.published();
        let verdict = if matches_published(r.value, published) { "yes" } else { "no" };
        s += &format!(
            "{:<10} {:<14} {:<10} {:<12.6} {:<10} {:<10} {verdict}\n",
            r.target, r.objective, r.method, r.value, published, r.edge
        );
    }
    if reports.iter().any(|r| r.labels.is_some()) {
        s += &format!(
            "h31 labels: {H31_THEOREM_LABEL} (theorem), {H31_INTRODUCTION_LABEL} (introduction, not reproduced)\n"
        );
    }
    s
}

fn read_config(path: &Path) -> Result<BoundConfig, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{} is not a JSON report: {e}", path.display())))?;
    let config = match &value {
        serde_json::Value::Array(items) => items.first().and_then(|r| r.get("config")).map(|c| {
            let mut c = c.clone();
            c["target"] = serde_json::Value::from("all");
            c
        }),
        other => other.get("config").cloned(),
    }
    .ok_or_else(|| Failure::Usage(format!("{} has no embedded config", path.display())))?;
    let config: BoundConfig = serde_json::from_value(config)
        .map_err(|e| Failure::Usage(format!("invalid embedded config: {e}")))?;
    if !(config.eps > 0.0) || config.box_cap == 0 {
        return Err(Failure::Usage("embedded config has a non-positive eps or box cap".into()));
    }
    Ok(config)
}

fn cmd_bound(args: &BoundArgs, out: &mut dyn Write) -> Outcome {
    let config = match &args.from_report {
        Some(path) => read_config(path)?,
        None => BoundConfig {
            target: args.target.expect("clap requires --target without --from-report"),
            method: args.method,
            eps: args.eps,
            box_cap: box_cap_from_env()?,
        },
    };
    let text = if config.target == Target::All {
        let reports = Target::THEOREMS
            .into_iter()
            .map(|t| bound_report(t, config))
            .collect::<Result<Vec<_>, _>>()?;
        match args.format {
            Format::Json => to_json(&reports),
            Format::Csv => render_bound_csv(&reports),
            Format::Text => render_summary(&reports),
        }
    } else {
        let report = bound_report(config.target, config)?;
        match args.format {
            Format::Json => to_json(&report),
            Format::Csv => render_bound_csv(std::slice::from_ref(&report)),
            Format::Text => render_bound_text(&report),
        }
    };
    emit(&text, args.out.as_deref(), out)?;
    Ok(0)
}

/// Rectangular `nx` by `ny` grid over `[0, 1] x [0, 1/sqrt 3]`, keeping
/// the points of `E`, x-major ascending.
pub fn clipped_grid(function: BoundFunction, nx: usize, ny: usize) -> Vec<(f64, f64, f64)> {
    let y_top = Region::y_max(0.0);
    let mut rows = Vec::new();
    for i in 0..nx {
        let x = i as f64 / (nx - 1) as f64;
        for j in 0..ny {
            let y = y_top * j as f64 / (ny - 1) as f64;
            if let Ok(v) = function.evaluate(x, y) {
                rows.push((x, y, v));
            }
        }
    }
    rows
}

fn cmd_grid(args: &GridArgs, out: &mut dyn Write) -> Outcome {
    if args.format != Format::Csv {
        return Err(Failure::Usage("grid output is CSV only".into()));
    }
    let rows = clipped_grid(args.target, args.nx as usize, args.ny as usize);
    let mut text = String::from("x,y,value\n");
    for (x, y, v) in rows {
        text += &format!("{},{},{}\n", format_sig9(x), format_sig9(y), format_sig9(v));
    }
    emit(&text, args.out.as_deref(), out)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig9_formatting() {
        assert_eq!(format_sig9(0.0), "0");
        assert_eq!(format_sig9(1.0), "1");
        assert_eq!(format_sig9(0.5), "0.5");
        assert_eq!(format_sig9(1.0 / 5f64.sqrt()), "0.447213595");
        assert_eq!(format_sig9(1.3614356236), "1.36143562");
        assert_eq!(format_sig9(-2.5e-3), "-0.0025");
        assert_eq!(format_sig9(123456.789012), "123456.789");
    }

    #[test]
    fn published_matching() {
        assert!(matches_published(0.556617863, "0.5566178"));
        assert!(matches_published(2.1006411, "2.10064"));
        assert!(!matches_published(1.83057131, "1.83056"));
    }

    #[test]
    fn clipped_grid_rows() {
        let rows = clipped_grid(BoundFunction::F1, 3, 3);
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[0].0, 0.0);
        assert!(rows.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
    }
}
