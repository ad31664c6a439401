//! Job parsing, execution and report rendering for the `canal` binary.
//!
//! A spine file is TOML with two arrays of four coefficient lists each,
//! constant term first:
//!
//! ```toml
//! num = [[], [], [0, 8], [3, 0, -3]]
//! den = [[1], [1], [1, 0, 1], [1, 0, 1]]
//! ```
//!
//! Entries are integers or `"p/q"` strings. `den` may be omitted, in which
//! case every denominator is `1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::PathBuf;

use canal_core::canal::{
    canal_equation, dual_variety_equation, gamma_equation, general_type_check, make_spine, naive_envelope,
    naive_envelope_d, offset_dual_equation, predicted_degrees, ImplicitResult, PipelineOptions, SpineCurve,
};
use canal_core::exactalg::{canonical_form, Var};
use canal_core::scalar::parse_rational;
use canal_core::{MultiPoly, Rational, UniPoly};
use clap::{Parser, ValueEnum};
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("computation failed: {0}")]
    Compute(#[from] canal_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

fn input_err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Target {
    Dual,
    OffsetDual,
    Gamma,
    Canal,
    Offset,
    Naive,
    NaiveD,
    DegreeOnly,
    GeneralType,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Dual => "dual",
            Target::OffsetDual => "offset-dual",
            Target::Gamma => "gamma",
            Target::Canal => "canal",
            Target::Offset => "offset",
            Target::Naive => "naive",
            Target::NaiveD => "naive-d",
            Target::DegreeOnly => "degree-only",
            Target::GeneralType => "general-type",
        }
    }

    fn needs_d(self) -> bool {
        matches!(self, Target::OffsetDual | Target::Offset | Target::NaiveD)
    }

    fn emits_equation(self) -> bool {
        !matches!(self, Target::DegreeOnly | Target::GeneralType)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// Implicit equations of canal surfaces, their offsets and dual varieties.
#[derive(Clone, Debug, Parser)]
#[command(name = "canal", version)]
pub struct Args {
    /// Spine file (TOML).
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated targets; defaults to `canal`.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub target: Vec<Target>,
    /// Offset distance, an integer or `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Set `y0 = 1` in the canonical projective result.
    #[arg(long)]
    pub affine: bool,
    /// Set `y0 = 1` before eliminating `t`.
    #[arg(long)]
    pub affine_early: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Report predicted degrees only; no resultant is computed.
    #[arg(long)]
    pub degree_only: bool,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub spine: SpineCurve,
    pub targets: BTreeSet<Target>,
    pub d: Option<Rational>,
    pub format: Format,
    pub seed: u64,
    pub affine: bool,
    pub affine_early: bool,
}

fn parse_coeff(value: &toml::Value, field: &str) -> Result<Rational, CliError> {
    let parsed = match value {
        toml::Value::Integer(i) => Some(Rational::from_integer((*i).into())),
        toml::Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| input_err(format!("{field}: expected an integer or \"p/q\", got {value}")))
}

fn parse_poly_list(table: &toml::Table, key: &str) -> Result<Option<[UniPoly; 4]>, CliError> {
    let Some(value) = table.get(key) else {
        return Ok(None);
    };
    let lists = value
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| input_err(format!("{key}: expected four coefficient lists")))?;
    let mut polys: [UniPoly; 4] = std::array::from_fn(|_| UniPoly::zero());
    for (i, list) in lists.iter().enumerate() {
        let coeffs = list
            .as_array()
            .ok_or_else(|| input_err(format!("{key}[{i}]: expected a list of coefficients")))?;
        let coeffs = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| parse_coeff(c, &format!("{key}[{i}][{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        polys[i] = UniPoly::new(coeffs);
    }
    Ok(Some(polys))
}

/// Parses the text of a spine file.
pub fn parse_spine(text: &str) -> Result<SpineCurve, CliError> {
    let table: toml::Table = text.parse().map_err(|e| input_err(format!("malformed spine file: {e}")))?;
    if let Some(key) = table.keys().find(|k| *k != "num" && *k != "den") {
        return Err(input_err(format!("{key}: unknown field")));
    }
    let nums = parse_poly_list(&table, "num")?.ok_or_else(|| input_err("num: missing"))?;
    let dens = parse_poly_list(&table, "den")?.unwrap_or_else(|| std::array::from_fn(|_| UniPoly::one()));
    make_spine(&nums, &dens).map_err(|e| match e {
        canal_core::Error::ZeroDenominator(i) => input_err(format!("den[{}]: zero denominator", i.saturating_sub(1))),
        other => input_err(format!("num: {other}")),
    })
}

pub fn parse_spine_file(path: &std::path::Path) -> Result<SpineCurve, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    parse_spine(&text)
}

/// Validates the flags against each other and builds the job.
pub fn job_from_spine(args: &Args, spine: SpineCurve) -> Result<JobSpec, CliError> {
    let mut targets: BTreeSet<Target> = args.target.iter().copied().collect();
    if args.degree_only {
        targets.insert(Target::DegreeOnly);
    }
    if targets.contains(&Target::DegreeOnly) {
        if let Some(t) = targets.iter().find(|t| t.emits_equation()) {
            return Err(input_err(format!("degree-only excludes the equation target {}", t.name())));
        }
    }
    if targets.is_empty() {
        targets.insert(Target::Canal);
    }
    let d = match &args.d {
        Some(text) => Some(parse_rational(text).ok_or_else(|| input_err(format!("d: not a rational number: {text}")))?),
        None => None,
    };
    if d.is_none() {
        if let Some(t) = targets.iter().find(|t| t.needs_d()) {
            return Err(input_err(format!("d: required by target {}", t.name())));
        }
    }
    Ok(JobSpec {
        spine,
        targets,
        d,
        format: args.format,
        seed: args.seed,
        affine: args.affine,
        affine_early: args.affine_early,
    })
}

pub fn parse_job(args: &Args) -> Result<JobSpec, CliError> {
    let spine = parse_spine_file(&args.input)?;
    job_from_spine(args, spine)
}

/// One output record. Fields that do not apply to a target are `null`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TargetReport {
    pub target: String,
    pub equation: Option<String>,
    pub degree: Option<u32>,
    pub weighted_degree: Option<u32>,
    pub monomials: Option<usize>,
    pub k: Option<usize>,
    pub mu_degrees: Option<(usize, usize)>,
    pub flags: BTreeMap<String, Value>,
}

impl TargetReport {
    fn empty(target: Target) -> Self {
        Self {
            target: target.name().to_string(),
            equation: None,
            degree: None,
            weighted_degree: None,
            monomials: None,
            k: None,
            mu_degrees: None,
            flags: BTreeMap::new(),
        }
    }
}

fn equation_report(
    target: Target,
    job: &JobSpec,
    equation: MultiPoly,
    res: Option<&ImplicitResult>,
    d: Option<&Rational>,
) -> Result<TargetReport, CliError> {
    let mut report = TargetReport::empty(target);
    let equation = if job.affine {
        canonical_form(&equation.specialize(Var::Y0, &Rational::one()))?
    } else {
        equation
    };
    report.degree = equation.total_degree();
    report.monomials = Some(equation.num_terms());
    report.equation = Some(equation.to_string());
    if let Some(res) = res {
        report.weighted_degree = res.weighted_degree;
        report.k = Some(res.k);
        report.mu_degrees = res.mu_degrees;
    }
    report.flags.insert("affine".into(), json!(job.affine));
    // The naive resultants are always specialized after elimination.
    report.flags.insert("affine_early".into(), json!(job.affine_early && res.is_some()));
    if let Some(d) = d {
        report.flags.insert("d".into(), json!(d.to_string()));
    }
    Ok(report)
}

fn pipeline_report(target: Target, job: &JobSpec, res: ImplicitResult, d: Option<&Rational>) -> Result<TargetReport, CliError> {
    equation_report(target, job, res.equation.clone(), Some(&res), d)
}

fn run_target(target: Target, job: &JobSpec) -> Result<TargetReport, CliError> {
    let opts = PipelineOptions { seed: job.seed, affine_early: job.affine_early };
    let s = &job.spine;
    let zero = Rational::zero();
    let d = job.d.as_ref();
    match target {
        Target::Dual => pipeline_report(target, job, dual_variety_equation(s, &opts)?, None),
        Target::Gamma => pipeline_report(target, job, gamma_equation(s, &opts)?, None),
        Target::Canal => pipeline_report(target, job, canal_equation(s, &zero, &opts)?, Some(&zero)),
        Target::OffsetDual => {
            let d = d.expect("validated");
            pipeline_report(target, job, offset_dual_equation(s, d, &opts)?, Some(d))
        }
        Target::Offset => {
            let d = d.expect("validated");
            pipeline_report(target, job, canal_equation(s, d, &opts)?, Some(d))
        }
        Target::Naive => equation_report(target, job, naive_envelope(s)?, None, None),
        Target::NaiveD => {
            let d = d.expect("validated");
            equation_report(target, job, naive_envelope_d(s, d)?, None, Some(d))
        }
        Target::DegreeOnly => {
            let pred = predicted_degrees(s, job.seed)?;
            let mut report = TargetReport::empty(target);
            report.flags.insert("deg_v".into(), json!(pred.deg_v));
            report.flags.insert("deg_gamma".into(), json!(pred.deg_gamma));
            report.flags.insert("conjectured_deg_gamma".into(), json!(pred.conjectured_deg_gamma));
            Ok(report)
        }
        Target::GeneralType => {
            let g = general_type_check(s, job.seed)?;
            let mut report = TargetReport::empty(target);
            report.k = Some(g.k);
            let flags = [
                ("general_type", g.is_general_type),
                ("gcd_w_trivial", g.gcd_w_trivial),
                ("gcd_e0_e0prime_trivial", g.gcd_e0_e0prime_trivial),
                ("gcd_e0_ee_trivial", g.gcd_e0_ee_trivial),
                ("degree_match", g.degree_match),
                ("k_is_one", g.k_is_one),
            ];
            for (name, value) in flags {
                report.flags.insert(name.into(), json!(value));
            }
            report.flags.insert("gamma".into(), json!(g.gamma));
            Ok(report)
        }
    }
}

/// Runs every target in a fixed order.
pub fn run_job(job: &JobSpec) -> Result<Vec<TargetReport>, CliError> {
    job.targets.iter().map(|&t| run_target(t, job)).collect()
}

fn render_text(reports: &[TargetReport]) -> String {
    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "[{}]", r.target);
        if r.target == Target::DegreeOnly.name() {
            let _ = writeln!(out, "deg V = {}, deg Gamma = {}", r.flags["deg_v"], r.flags["deg_gamma"]);
            let _ = writeln!(out, "conjectured deg Gamma = {} (unproven)", r.flags["conjectured_deg_gamma"]);
            continue;
        }
        if let Some(eq) = &r.equation {
            let _ = writeln!(out, "equation: {eq}");
        }
        let fields = [
            ("degree", r.degree.map(|x| x.to_string())),
            ("weighted degree", r.weighted_degree.map(|x| x.to_string())),
            ("monomials", r.monomials.map(|x| x.to_string())),
            ("k", r.k.map(|x| x.to_string())),
            ("mu degrees", r.mu_degrees.map(|(a, b)| format!("({a}, {b})"))),
        ];
        for (name, value) in fields {
            if let Some(v) = value {
                let _ = writeln!(out, "{name}: {v}");
            }
        }
        for (name, value) in &r.flags {
            let _ = writeln!(out, "{name}: {value}");
        }
    }
    out
}

pub fn render(reports: &[TargetReport], format: Format) -> String {
    match format {
        Format::Text => render_text(reports),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

/// Parses, runs and renders; the error carries the exit code.
pub fn execute(args: &Args) -> Result<String, CliError> {
    let job = parse_job(args)?;
    let reports = run_job(&job)?;
    Ok(render(&reports, job.format))
}
