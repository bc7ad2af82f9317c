//! Command-line front end.
//!
//! [`run`] parses an argument vector, dispatches the subcommand and returns the
//! exit code together with everything that would be written to stdout and
//! stderr, so the binary is a thin wrapper and tests can call it in-process.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain or constraint error,
//! 3 failed verification.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::distribution::{Distribution, Positivity, UtilityVector, WeightVector};
use crate::duality::dual_check;
use crate::engine::{
    verify_composability, BranchSelector, PolyParams, VerificationReport, VERIFY_TOLERANCE,
};
use crate::error::Error;
use crate::io::read_vector;
use crate::registry::{self, MeasureFamily, MeasureInput, MeasureSpec, Param, UserParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "inforcer",
    version,
    about = "Generalized information, inaccuracy and certainty measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a measure on a distribution
    Compute(ComputeArgs),
    /// List the measure catalog
    List(ListArgs),
    /// Check composability on a pair of independent distributions
    Verify(VerifyArgs),
    /// Check the certainty-to-inaccuracy duality for a certainty measure
    Dual(DualArgs),
    /// Evaluate a measure over a parameter grid (CSV output)
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RawFamily {
    Inaccuracy,
    Certainty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFamily {
    Information,
    Inaccuracy,
    Certainty,
}

/// Measure selection: a catalog name, or raw engine parameters.
#[derive(Debug, Args)]
struct MeasureArgs {
    /// Catalog name or alias (see `list`)
    #[arg(long, conflicts_with = "family")]
    measure: Option<String>,
    /// Raw engine family; use with --tau, --lambda, --c, --e
    #[arg(long, value_enum)]
    family: Option<RawFamily>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    e: Option<f64>,
    /// Per-index exponents, inline or file
    #[arg(long, allow_hyphen_values = true)]
    betas: Option<String>,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    measure: MeasureArgs,
    /// Distribution P, inline (0.2,0.8 or [0.2,0.8]) or a CSV/JSON file
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// External weights U
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// Utilities V
    #[arg(long, allow_hyphen_values = true)]
    util: Option<String>,
    /// Rescale P and U to sum to 1
    #[arg(long)]
    renormalize: bool,
    /// Report logarithmic measures in nats
    #[arg(long)]
    nats: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[arg(long, value_enum)]
    family: Option<ListFamily>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    measure: MeasureArgs,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// External weights for P
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// External weights for Q
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    /// Utilities for P
    #[arg(long, allow_hyphen_values = true)]
    util: Option<String>,
    /// Utilities for Q
    #[arg(long, allow_hyphen_values = true)]
    util_q: Option<String>,
    /// Per-index exponents for Q
    #[arg(long, allow_hyphen_values = true)]
    betas_q: Option<String>,
    #[arg(long)]
    renormalize: bool,
    #[arg(long, allow_hyphen_values = true)]
    tolerance: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Args)]
struct DualArgs {
    #[command(flatten)]
    measure: MeasureArgs,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long)]
    renormalize: bool,
    #[arg(long, allow_hyphen_values = true)]
    tolerance: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    measure: MeasureArgs,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    util: Option<String>,
    /// Parameter to vary (alpha, beta, gamma, mu, tau, lambda, c, e)
    #[arg(long)]
    param: String,
    /// Strictly monotone comma-separated grid
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    #[arg(long)]
    renormalize: bool,
    #[arg(long)]
    nats: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs the CLI on `argv`, whose first element is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match &cli.command {
        Command::Compute(args) => compute(args),
        Command::List(args) => list(args),
        Command::Verify(args) => verify(args),
        Command::Dual(args) => dual(args),
        Command::Sweep(args) => sweep(args),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error[UsageError]: {msg}\n"),
        },
        Err(Failure::Lib(e)) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error[{}]: {e}\n", e.kind()),
        },
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownMeasure { .. } | Error::MissingInput(_) | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Formats `v` with 12 significant digits, shortest form.
pub fn format_value(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let rounded: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    format!("{rounded:?}")
}

// ---- measure resolution ----

enum Resolved {
    Named(&'static MeasureSpec),
    Raw(RawFamily),
}

struct Selection {
    resolved: Resolved,
    params: UserParams,
}

impl Selection {
    fn from_args(args: &MeasureArgs) -> CliResult<Self> {
        let params = UserParams {
            alpha: args.alpha,
            beta: args.beta,
            gamma: args.gamma,
            mu: args.mu,
            tau: args.tau,
            lambda: args.lambda,
            c: args.c,
            e: args.e,
            betas: args.betas.as_deref().map(read_vector).transpose()?,
        };
        let resolved = match (&args.measure, args.family) {
            (Some(name), _) => Resolved::Named(registry::lookup(name)?),
            (None, Some(family)) => Resolved::Raw(family),
            (None, None) => return Err(Failure::Usage("one of --measure or --family is required".into())),
        };
        let allowed: &[Param] = match &resolved {
            Resolved::Named(spec) => spec.params,
            Resolved::Raw(_) => &[Param::Tau, Param::Lambda, Param::C, Param::E],
        };
        if let Some(extra) = Param::ALL
            .into_iter()
            .find(|p| params.get(*p).is_some() && !allowed.contains(p))
        {
            return Err(Failure::Usage(format!("{} does not take --{extra}", describe(&resolved))));
        }
        let takes_betas = matches!(&resolved, Resolved::Named(spec) if spec.needs_betas());
        if params.betas.is_some() && !takes_betas {
            return Err(Failure::Usage(format!("{} does not take --betas", describe(&resolved))));
        }
        Ok(Self { resolved, params })
    }

    fn label(&self) -> String {
        match self.resolved {
            Resolved::Named(spec) => spec.name.to_string(),
            Resolved::Raw(_) => "raw".to_string(),
        }
    }

    fn family(&self) -> &'static str {
        match self.resolved {
            Resolved::Named(spec) => spec.family.as_str(),
            Resolved::Raw(RawFamily::Inaccuracy) => "inaccuracy",
            Resolved::Raw(RawFamily::Certainty) => "certainty",
        }
    }

    fn takes(&self, param: Param) -> bool {
        match self.resolved {
            Resolved::Named(spec) => spec.params.contains(&param),
            Resolved::Raw(_) => matches!(param, Param::Tau | Param::Lambda | Param::C | Param::E),
        }
    }

    fn engine(&self, params: &UserParams) -> crate::Result<PolyParams> {
        match self.resolved {
            Resolved::Named(spec) => spec.engine_params(params),
            Resolved::Raw(family) => {
                let tau = params.tau()?;
                let lambda = params.lambda.unwrap_or(0.0);
                match family {
                    RawFamily::Inaccuracy => match params.e.unwrap_or(0.0) {
                        0.0 => PolyParams::log_inaccuracy(tau, lambda),
                        e => PolyParams::inaccuracy(tau, lambda, params.c()?, e),
                    },
                    RawFamily::Certainty => PolyParams::certainty(tau, lambda, params.c()?, params.e()?),
                }
            }
        }
    }

    fn weights(&self, params: &UserParams, input: &MeasureInput<'_>) -> crate::Result<WeightVector> {
        match self.resolved {
            Resolved::Named(spec) => spec.weights(params, input),
            Resolved::Raw(_) => match input.u {
                Some(u) => {
                    input.u()?;
                    Ok(u.clone())
                }
                None => Ok(WeightVector::from(input.p)),
            },
        }
    }

    fn evaluate(&self, params: &UserParams, input: &MeasureInput<'_>) -> crate::Result<f64> {
        let engine = self.engine(params)?;
        let u = self.weights(params, input)?;
        engine.evaluate(&u, input.p, &BranchSelector::default())
    }
}

fn describe(resolved: &Resolved) -> String {
    match resolved {
        Resolved::Named(spec) => format!("measure `{}`", spec.name),
        Resolved::Raw(_) => "a raw measure".to_string(),
    }
}

fn load_distribution(source: &str, renormalize: bool) -> crate::Result<Distribution> {
    let values = read_vector(source)?;
    if renormalize {
        Distribution::renormalized(&values, Positivity::NonNegative)
    } else {
        Distribution::nonneg(values)
    }
}

fn load_weights(source: Option<&str>, renormalize: bool) -> crate::Result<Option<WeightVector>> {
    source
        .map(|s| {
            let values = read_vector(s)?;
            if renormalize {
                WeightVector::renormalized(&values)
            } else {
                WeightVector::new(values)
            }
        })
        .transpose()
}

fn load_utilities(source: Option<&str>) -> crate::Result<Option<UtilityVector>> {
    source.map(|s| UtilityVector::new(read_vector(s)?)).transpose()
}

fn check_tolerance(tolerance: Option<f64>) -> CliResult<f64> {
    match tolerance {
        None => Ok(VERIFY_TOLERANCE),
        Some(t) if t.is_finite() && t > 0.0 => Ok(t),
        Some(t) => Err(Failure::Usage(format!("--tolerance must be positive and finite, got {t}"))),
    }
}

fn nats_factor(nats: bool, engine: &PolyParams) -> CliResult<f64> {
    if !nats {
        Ok(1.0)
    } else if engine.is_logarithmic() {
        Ok(std::f64::consts::LN_2)
    } else {
        Err(Failure::Usage(
            "--nats applies only to logarithmic measures (e = 0 information/inaccuracy)".into(),
        ))
    }
}

fn csv_line(fields: &[&str]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(fields).expect("writing to memory");
    String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

// ---- compute ----

#[derive(Serialize)]
struct EngineJson {
    tau: f64,
    lambda: f64,
    c: Option<f64>,
    e: f64,
}

impl From<&PolyParams> for EngineJson {
    fn from(p: &PolyParams) -> Self {
        Self {
            tau: p.tau,
            lambda: p.lambda,
            c: if p.e == 0.0 { None } else { Some(p.c) },
            e: p.e,
        }
    }
}

#[derive(Serialize)]
struct ComputeJson<'a> {
    measure: String,
    value: f64,
    family: &'static str,
    engine: EngineJson,
    dimension: usize,
    user_params: &'a UserParams,
    unit: &'static str,
}

fn compute(args: &ComputeArgs) -> CliResult<(i32, String)> {
    let sel = Selection::from_args(&args.measure)?;
    let p = load_distribution(&args.p, args.renormalize)?;
    let u = load_weights(args.u.as_deref(), args.renormalize)?;
    let v = load_utilities(args.util.as_deref())?;
    let input = MeasureInput {
        p: &p,
        u: u.as_ref(),
        utilities: v.as_ref(),
    };
    let engine = sel.engine(&sel.params)?;
    let factor = nats_factor(args.nats, &engine)?;
    let value = sel.evaluate(&sel.params, &input)? * factor;
    let out = match args.format {
        Format::Plain => format!("{}\n", format_value(value)),
        Format::Csv => {
            csv_line(&["measure", "value"]) + &csv_line(&[&sel.label(), &format_value(value)])
        }
        Format::Json => to_json(&ComputeJson {
            measure: sel.label(),
            value,
            family: sel.family(),
            engine: EngineJson::from(&engine),
            dimension: p.len(),
            user_params: &sel.params,
            unit: if args.nats { "nats" } else { "bits" },
        }),
    };
    Ok((EXIT_OK, out))
}

// ---- list ----

fn list(args: &ListArgs) -> CliResult<(i32, String)> {
    let wanted = args.family.map(|f| match f {
        ListFamily::Information => MeasureFamily::Information,
        ListFamily::Inaccuracy => MeasureFamily::Inaccuracy,
        ListFamily::Certainty => MeasureFamily::Certainty,
    });
    let rows: Vec<_> = registry::list_measures()
        .into_iter()
        .filter(|s| wanted.is_none_or(|f| s.family == f))
        .collect();
    let params_of = |s: &registry::MeasureSummary| {
        let mut names: Vec<&str> = s.params.iter().map(|p| p.as_str()).collect();
        if s.needs_betas {
            names.push("betas");
        }
        if s.needs_weights {
            names.push("u");
        }
        if s.needs_utilities {
            names.push("util");
        }
        if names.is_empty() {
            "-".to_string()
        } else {
            names.join(",")
        }
    };
    let out = match args.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut out = csv_line(&[
                "name", "title", "family", "weight_rule", "inputs", "formula", "engine_map",
                "constraints", "adjustment",
            ]);
            for s in &rows {
                out += &csv_line(&[
                    s.name,
                    s.title,
                    s.family.as_str(),
                    s.weight_rule.as_str(),
                    &params_of(s),
                    s.formula,
                    s.engine_map,
                    s.constraints,
                    s.adjustment.unwrap_or(""),
                ]);
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for s in &rows {
                let mark = if s.sign_adjusted { " *" } else { "" };
                let _ = writeln!(
                    out,
                    "{:<27} {:<12} {:<20} {}{}",
                    s.name,
                    s.family.as_str(),
                    params_of(s),
                    s.formula,
                    mark
                );
            }
            if rows.iter().any(|s| s.sign_adjusted) {
                out.push_str("* engine parameters re-derived from the closed form\n");
            }
            out
        }
    };
    Ok((EXIT_OK, out))
}

// ---- verify / dual ----

#[derive(Serialize)]
struct ReportJson<'a> {
    measure: String,
    check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterpart: Option<String>,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

fn render_report(
    format: Format,
    measure: String,
    check: &'static str,
    counterpart: Option<String>,
    report: &VerificationReport,
) -> (i32, String) {
    let code = if report.passed { EXIT_OK } else { EXIT_VERIFY };
    let fields = [
        ("lhs", format_value(report.lhs)),
        ("rhs", format_value(report.rhs)),
        ("abs_err", format_value(report.abs_err)),
        ("rel_err", format_value(report.rel_err)),
        ("tolerance", format!("{:?}", report.tolerance)),
        ("passed", report.passed.to_string()),
    ];
    let out = match format {
        Format::Json => to_json(&ReportJson {
            measure,
            check,
            counterpart,
            report,
        }),
        Format::Plain => {
            let mut out = format!("measure: {measure}\ncheck: {check}\n");
            if let Some(c) = &counterpart {
                let _ = writeln!(out, "counterpart: {c}");
            }
            for (k, v) in &fields {
                let _ = writeln!(out, "{k}: {v}");
            }
            out
        }
        Format::Csv => {
            let mut header = vec!["measure", "check"];
            let mut row = vec![measure.as_str(), check];
            if let Some(c) = &counterpart {
                header.push("counterpart");
                row.push(c);
            }
            header.extend(fields.iter().map(|(k, _)| *k));
            row.extend(fields.iter().map(|(_, v)| v.as_str()));
            csv_line(&header) + &csv_line(&row)
        }
    };
    (code, out)
}

fn verify(args: &VerifyArgs) -> CliResult<(i32, String)> {
    let tolerance = check_tolerance(args.tolerance)?;
    let sel = Selection::from_args(&args.measure)?;
    let p = load_distribution(&args.p, args.renormalize)?;
    let q = load_distribution(&args.q, args.renormalize)?;
    let u = load_weights(args.u.as_deref(), args.renormalize)?;
    let v = load_weights(args.v.as_deref(), args.renormalize)?;
    let util_p = load_utilities(args.util.as_deref())?;
    let util_q = load_utilities(args.util_q.as_deref())?;

    let params_q = match (&sel.resolved, &args.betas_q) {
        (Resolved::Named(spec), Some(b)) if spec.needs_betas() => {
            sel.params.clone().with_betas(read_vector(b)?)
        }
        (Resolved::Named(spec), None) if spec.needs_betas() => {
            return Err(Error::MissingInput("per-index exponents for Q (--betas-q)".into()).into())
        }
        (_, Some(_)) => return Err(Failure::Usage(format!("{} does not take --betas-q", describe(&sel.resolved)))),
        _ => sel.params.clone(),
    };

    let engine = sel.engine(&sel.params)?;
    engine.validate()?;
    let input_p = MeasureInput {
        p: &p,
        u: u.as_ref(),
        utilities: util_p.as_ref(),
    };
    let input_q = MeasureInput {
        p: &q,
        u: v.as_ref(),
        utilities: util_q.as_ref(),
    };
    let wu = sel.weights(&sel.params, &input_p)?;
    let wv = sel.weights(&params_q, &input_q)?;
    let report = verify_composability(
        &engine.measure_params(),
        &wu,
        &p,
        &wv,
        &q,
        &BranchSelector::default(),
        tolerance,
    )?;
    Ok(render_report(args.format, sel.label(), "composability", None, &report))
}

fn dual(args: &DualArgs) -> CliResult<(i32, String)> {
    let tolerance = check_tolerance(args.tolerance)?;
    let sel = Selection::from_args(&args.measure)?;
    let p = load_distribution(&args.p, args.renormalize)?;
    let u = load_weights(args.u.as_deref(), args.renormalize)?;
    let (certainty, information, counterpart) = match sel.resolved {
        Resolved::Named(spec) => {
            let pair = registry::dual_pair(spec.name, &sel.params)?;
            let label = match pair.counterpart {
                Some(name) => {
                    let params: Vec<String> = Param::ALL
                        .into_iter()
                        .filter_map(|k| {
                            pair.counterpart_params.get(k).map(|v| format!("{k}={}", format_value(v)))
                        })
                        .collect();
                    format!("{name} {}", params.join(" "))
                }
                None => log_label(&pair.information),
            };
            (pair.certainty, pair.information, label)
        }
        Resolved::Raw(RawFamily::Certainty) => {
            let cert = sel.engine(&sel.params)?;
            let info = PolyParams::log_inaccuracy(cert.tau, cert.lambda)?;
            let label = log_label(&info);
            (cert, info, label)
        }
        Resolved::Raw(RawFamily::Inaccuracy) => {
            return Err(Failure::Usage("dual needs a certainty measure".into()))
        }
    };
    let input = MeasureInput {
        p: &p,
        u: u.as_ref(),
        utilities: None,
    };
    let weights = sel.weights(&sel.params, &input)?;
    let report = dual_check(
        &certainty,
        &information,
        &weights,
        &p,
        &BranchSelector::default(),
        tolerance,
    )?;
    Ok(render_report(args.format, sel.label(), "duality", Some(counterpart), &report))
}

fn log_label(info: &PolyParams) -> String {
    format!(
        "log_inaccuracy tau={} lambda={}",
        format_value(info.tau),
        format_value(info.lambda)
    )
}

// ---- sweep ----

#[derive(Serialize)]
struct SweepPoint<'a> {
    param: &'a str,
    at: f64,
    value: Option<f64>,
    error: Option<String>,
}

fn parse_grid(text: &str) -> CliResult<Vec<(String, f64)>> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    if tokens.is_empty() {
        return Err(Failure::Usage("--grid is empty".into()));
    }
    let mut grid = Vec::with_capacity(tokens.len());
    for t in tokens {
        let v: f64 = t
            .parse()
            .map_err(|_| Failure::Usage(format!("grid value `{t}` is not a number")))?;
        if !v.is_finite() {
            return Err(Failure::Usage(format!("grid value `{t}` is not finite")));
        }
        grid.push((t.to_string(), v));
    }
    let increasing = grid.windows(2).all(|w| w[0].1 < w[1].1);
    let decreasing = grid.windows(2).all(|w| w[0].1 > w[1].1);
    if !(increasing || decreasing) {
        return Err(Failure::Usage("--grid must be strictly monotone".into()));
    }
    Ok(grid)
}

fn sweep(args: &SweepArgs) -> CliResult<(i32, String)> {
    let sel = Selection::from_args(&args.measure)?;
    let param = Param::parse(&args.param)
        .ok_or_else(|| Failure::Usage(format!("unknown parameter `{}`", args.param)))?;
    if !sel.takes(param) {
        return Err(Failure::Usage(format!(
            "{} does not take parameter {param}",
            describe(&sel.resolved)
        )));
    }
    let grid = parse_grid(&args.grid)?;
    let p = load_distribution(&args.p, args.renormalize)?;
    let u = load_weights(args.u.as_deref(), args.renormalize)?;
    let v = load_utilities(args.util.as_deref())?;
    let input = MeasureInput {
        p: &p,
        u: u.as_ref(),
        utilities: v.as_ref(),
    };

    let at = |x: f64| sel.params.clone().with(param, x);
    let factor = if args.nats {
        let engine = sel.engine(&at(grid[0].1))?;
        nats_factor(true, &engine)?
    } else {
        1.0
    };
    let results: Vec<crate::Result<f64>> = grid
        .par_iter()
        .map(|(_, x)| sel.evaluate(&at(*x), &input).map(|v| v * factor))
        .collect();

    let name = param.as_str();
    let out = match args.format {
        Format::Json => {
            let points: Vec<SweepPoint<'_>> = grid
                .iter()
                .zip(&results)
                .map(|((_, x), r)| SweepPoint {
                    param: name,
                    at: *x,
                    value: r.as_ref().ok().copied(),
                    error: r.as_ref().err().map(|e| format!("{}: {e}", e.kind())),
                })
                .collect();
            to_json(&points)
        }
        Format::Plain | Format::Csv => {
            let with_errors = results.iter().any(|r| r.is_err());
            let mut header = vec![name, "value"];
            if with_errors {
                header.push("error");
            }
            let mut out = csv_line(&header);
            for ((token, _), r) in grid.iter().zip(&results) {
                let row = match r {
                    Ok(v) if with_errors => vec![token.clone(), format_value(*v), String::new()],
                    Ok(v) => vec![token.clone(), format_value(*v)],
                    Err(e) => vec![token.clone(), String::new(), format!("{}: {e}", e.kind())],
                };
                let row: Vec<&str> = row.iter().map(String::as_str).collect();
                out += &csv_line(&row);
            }
            out
        }
    };
    Ok((EXIT_OK, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("inforcer").chain(args.iter().copied()))
    }

    #[test]
    fn value_formatting() {
        assert_eq!(format_value(1.0), "1.0");
        assert_eq!(format_value(0.5), "0.5");
        assert_eq!(format_value(1.0 - 1e-15), "1.0");
        assert_eq!(format_value(-0.0), "0.0");
        assert_eq!(format_value(2.0f64.sqrt()), "1.41421356237");
        assert_eq!(format_value(1.0 / 3.0e9), "3.33333333333e-10");
    }

    #[test]
    fn documented_invocations() {
        let out = cli(&["compute", "--measure", "shannon", "--p", "0.5,0.5"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "1.0\n"));

        let out = cli(&["compute", "--measure", "tsallis", "--gamma", "2", "--p", "0.5,0.5", "--format", "json"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with(r#"{"measure":"tsallis","value":0.5,"#), "{}", out.stdout);

        let out = cli(&["verify", "--measure", "renyi", "--alpha", "2", "--p", "0.5,0.5", "--q", "0.5,0.5"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("passed: true"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["compute", "--measure", "nope", "--p", "0.5,0.5"]).code, EXIT_USAGE);
        assert_eq!(cli(&["compute", "--measure", "shannon", "--p", "0.5,0.6"]).code, EXIT_DOMAIN);
        assert_eq!(cli(&["compute", "--measure", "shannon", "--p", "0.5,0.5", "--renormalize"]).code, 0);
        assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(cli(&["--help"]).code, EXIT_OK);
        assert_eq!(cli(&["compute", "--p", "0.5,0.5"]).code, EXIT_USAGE);
        assert_eq!(cli(&["compute", "--measure", "shannon", "--alpha", "2", "--p", "0.5,0.5"]).code, EXIT_USAGE);
        assert_eq!(cli(&["compute", "--measure", "tsallis", "--gamma", "1", "--p", "0.5,0.5"]).code, EXIT_DOMAIN);
    }

    #[test]
    fn raw_family() {
        let out = cli(&["compute", "--family", "inaccuracy", "--tau", "-1", "--p", "0.25,0.25,0.25,0.25"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "2.0\n"), "{}", out.stderr);
        let out = cli(&["compute", "--family", "certainty", "--tau", "-1", "--lambda", "-1", "--c", "1", "--e", "1", "--p", "0.5,0.5"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "0.5\n"), "{}", out.stderr);
    }

    #[test]
    fn nats_only_for_logarithmic() {
        let out = cli(&["compute", "--measure", "shannon", "--p", "0.5,0.5", "--nats"]);
        assert_eq!(out.stdout, format!("{}\n", format_value(std::f64::consts::LN_2)));
        assert_eq!(cli(&["compute", "--measure", "onicescu", "--p", "0.5,0.5", "--nats"]).code, EXIT_USAGE);
    }

    #[test]
    fn sweep_rows() {
        let out = cli(&["sweep", "--measure", "tsallis", "--p", "0.5,0.5", "--param", "gamma", "--grid", "2"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "gamma,value\n2,0.5\n"));
        let out = cli(&["sweep", "--measure", "tsallis", "--p", "0.5,0.5", "--param", "gamma", "--grid", "1,2"]);
        assert_eq!(out.code, 0);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[0], "gamma,value,error");
        assert!(lines[1].starts_with("1,,\"ConstraintViolation"), "{}", lines[1]);
        assert_eq!(lines[2], "2,0.5,");
        assert_eq!(cli(&["sweep", "--measure", "renyi", "--p", "0.5,0.5", "--param", "alpha", "--grid", ""]).code, EXIT_USAGE);
        assert_eq!(cli(&["sweep", "--measure", "renyi", "--p", "0.5,0.5", "--param", "alpha", "--grid", "2,1,3"]).code, EXIT_USAGE);
        assert_eq!(cli(&["sweep", "--measure", "renyi", "--p", "0.5,0.5", "--param", "gamma", "--grid", "2"]).code, EXIT_USAGE);
    }

    #[test]
    fn dual_onicescu() {
        let out = cli(&["dual", "--measure", "onicescu", "--p", "0.2,0.8"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("counterpart: renyi alpha=2.0"), "{}", out.stdout);
        assert!(out.stdout.contains("passed: true"));
        assert_eq!(cli(&["dual", "--measure", "shannon", "--p", "0.2,0.8"]).code, EXIT_DOMAIN);
    }

    #[test]
    fn list_is_deterministic() {
        let a = cli(&["list"]);
        assert_eq!(a.code, 0);
        assert_eq!(a, cli(&["list"]));
        assert!(a.stdout.lines().any(|l| l.starts_with("shannon ")));
        let certainty = cli(&["list", "--family", "certainty", "--format", "csv"]);
        assert_eq!(certainty.stdout.lines().count(), 1 + 9);
    }
}
