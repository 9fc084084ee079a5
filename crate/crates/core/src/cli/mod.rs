//! The `gsp4` command line: group verification, transfer chains, pole
//! orders and exponent classification, each producing a JSON report from
//! which the text and CSV views are derived.
//!
//! Exit codes: 0 success, 1 a structural constraint fails (the report names
//! it), 2 usage or input error.

pub mod render;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::isobaric::document::{descriptor_of, RepDocument};
use crate::isobaric::{
    constraint, pole_case_analysis, transfer, GSp4Descriptor, IsobaricError, Registry,
};
use crate::lfunc::estimate::{estimate_pole_order, EstimatorConfig, DEFAULT_X};
use crate::lfunc::euler::primes_up_to;
use crate::lfunc::io::{
    local_from_eigenvalues, read_eigenvalue_csv_path, write_sweep_csv, SweepSummary,
};
use crate::lfunc::synthetic::{rebind, with_synthetic_data, SyntheticConfig};
use crate::lfunc::LfuncError;
use crate::satake::character::{complex_multiset_eq, MATCH_TOL};
use crate::satake::{
    check_selfdual_twist, exponents, gsp4_to_gl4_embed, multiset_eq, rodier_class,
    theta_lift_params, transfer_gsp4_to_gl4, ExponentVector, GL2Param, GL4Param, Param, ParamDoc,
    PlaceData, UnramChar,
};
use crate::similitude::verify_gso_structure;

/// Environment variable capping the worker threads used internally.
pub const WORKERS_ENV: &str = "GSP4_WORKERS";

pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PoleMode {
    Symbolic,
    Numeric,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "gsp4", version, about = "GSp(4) to GL(4) transfer calculus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check GSO(4, F_q) = (GL2 x GL2) / {(cI, c^-1 I)} by exhaustive enumeration.
    VerifyGroups {
        #[arg(long)]
        q: u32,
    },
    /// Print the chain GL(2) x GL(2) -> GSO(4) -> GSp(4) -> GL(4) for a descriptor file.
    Transfer {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Pole order at s = 1 for the first two representations of a descriptor file.
    Poles {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: PoleMode,
        /// Truncation bound on the primes.
        #[arg(long = "X", default_value_t = DEFAULT_X)]
        x: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exponent vector and family of a GL(4) or GSp(4) parameter.
    Rodier {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Violation { constraint: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Violation { .. } => 1,
        }
    }
}

impl From<IsobaricError> for CliError {
    fn from(e: IsobaricError) -> Self {
        match e.constraint_id() {
            Some(id) => CliError::Violation {
                constraint: id.to_string(),
                message: e.to_string(),
            },
            None => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LfuncError> for CliError {
    fn from(e: LfuncError) -> Self {
        match e {
            LfuncError::Isobaric(inner) => inner.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// A finished command: its JSON report, an optional sweep, and the exit code.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub sweep: Option<(Vec<f64>, Vec<Complex64>, SweepSummary)>,
    pub exit_code: i32,
}

fn c2(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn chars(v: &[UnramChar]) -> Value {
    Value::Array(v.iter().map(|c| c2(c.value())).collect())
}

fn load_document(path: &Path) -> Result<(RepDocument, Registry), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let doc = RepDocument::from_json(&text)?;
    let mut reg = doc.registry()?;
    let base = path.parent().unwrap_or(Path::new("."));
    for s in &doc.symbols {
        if let Some(src) = &s.eigenvalues {
            let p = Path::new(&src.path);
            let p = if p.is_absolute() {
                p.to_path_buf()
            } else {
                base.join(p)
            };
            let rows = read_eigenvalue_csv_path(&p)?;
            let mut sym = s.to_symbol()?;
            sym.local.extend(local_from_eigenvalues(&rows, src.weight));
            reg.add(sym)?;
        }
    }
    Ok((doc, reg))
}

fn cmd_verify_groups(q: u32) -> Result<Report, CliError> {
    let report = verify_gso_structure(q).map_err(|e| CliError::Usage(e.to_string()))?;
    let exit_code = if report.all_passed { 0 } else { 1 };
    Ok(Report {
        json: serde_json::to_value(&report).expect("report serializes"),
        sweep: None,
        exit_code,
    })
}

fn unram(z: Complex64) -> Result<UnramChar, CliError> {
    UnramChar::from_complex(z).map_err(|e| CliError::Usage(e.to_string()))
}

fn transfer_chain(desc: &GSp4Descriptor) -> Result<Value, CliError> {
    let result = transfer(desc)?;
    let conditions = serde_json::to_value(&result.conditions).expect("conditions serialize");
    match desc {
        GSp4Descriptor::FromGso {
            pi1,
            pi2,
            chi_tilde,
            omega,
        } => {
            let mut places = Vec::new();
            for (&q, a) in &pi1.local {
                let Some(b) = pi2.local.get(&q) else { continue };
                let p1 = GL2Param::new(unram(a[0])?, unram(a[1])?);
                let p2 = GL2Param::new(unram(b[0])?, unram(b[1])?);
                let gsp4 = theta_lift_params(&p1, &p2).map_err(|e| CliError::Violation {
                    constraint: constraint::GSO_CENTRAL_CHAR.into(),
                    message: format!("q = {q}: {e}"),
                })?;
                let embedded = gsp4_to_gl4_embed(&gsp4);
                let via_torus = transfer_gsp4_to_gl4(gsp4.mu(), p1.alpha, p2.alpha);
                let commutes = multiset_eq(embedded.entries(), via_torus.entries(), MATCH_TOL);
                let pooled: Vec<Complex64> = a.iter().chain(b).copied().collect();
                let gl4: Vec<Complex64> = embedded.entries().iter().map(|c| c.value()).collect();
                let matches_sum = complex_multiset_eq(&pooled, &gl4, MATCH_TOL);
                if !commutes || !matches_sum {
                    return Err(CliError::Violation {
                        constraint: constraint::COMMUTING_DIAGRAM.into(),
                        message: format!("q = {q}: embedding and transfer disagree"),
                    });
                }
                places.push(json!({
                    "q": q,
                    "gl2_pair": [chars(&p1.entries()), chars(&p2.entries())],
                    "mu": c2(gsp4.mu().value()),
                    "gsp4_tuple": chars(&gsp4.to_tuple()),
                    "gl4": chars(embedded.entries()),
                    "commuting_diagram": commutes,
                    "matches_isobaric_sum": matches_sum,
                    "selfdual_twist": check_selfdual_twist(&embedded, gsp4.mu()),
                }));
            }
            Ok(json!({
                "from_gso": true,
                "gl2_data": [pi1.id.to_string(), pi2.id.to_string()],
                "gso_pair": {"pi": format!("{} ⊗ {}", pi1.id, pi2.id), "chi_tilde": chi_tilde.to_string()},
                "gsp4_central_char": omega.to_string(),
                "gl4_transfer": result.rep.to_string(),
                "side_conditions": conditions,
                "places": places,
            }))
        }
        GSp4Descriptor::Generic { transfer: t, omega } => {
            let mut places = Vec::new();
            for (&q, v) in &t.local {
                let entries = [unram(v[0])?, unram(v[1])?, unram(v[2])?, unram(v[3])?];
                let gl4 = GL4Param::new(entries);
                places.push(json!({
                    "q": q,
                    "gl4": chars(gl4.entries()),
                    "central_value": c2(gl4.product().value()),
                }));
            }
            Ok(json!({
                "from_gso": false,
                "gl4_transfer": result.rep.to_string(),
                "gsp4_central_char": omega.to_string(),
                "side_conditions": conditions,
                "places": places,
            }))
        }
    }
}

fn cmd_transfer(input: &Path) -> Result<Report, CliError> {
    let (doc, reg) = load_document(input)?;
    let specs = doc.representations();
    if specs.is_empty() {
        return Err(CliError::Usage(
            "the document names no representation".into(),
        ));
    }
    let chains = specs
        .iter()
        .map(|spec| transfer_chain(&descriptor_of(spec, &reg)?))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Report {
        json: json!({"status": "ok", "transfers": chains}),
        sweep: None,
        exit_code: 0,
    })
}

fn cmd_poles(input: &Path, mode: PoleMode, x: u64, seed: u64) -> Result<Report, CliError> {
    let (doc, reg) = load_document(input)?;
    let specs = doc.representations();
    if specs.len() < 2 {
        return Err(CliError::Usage(format!(
            "need two representations, found {}",
            specs.len()
        )));
    }
    let d1 = descriptor_of(&specs[0], &reg)?;
    let d2 = descriptor_of(&specs[1], &reg)?;
    let analysis = pole_case_analysis(&d1, &d2, &reg)?;
    let mut report = json!({
        "status": "ok",
        "case": analysis.case,
        "symbolic": analysis.report,
        "seed": seed,
        "X": x,
    });
    let mut sweep = None;
    if mode != PoleMode::Symbolic {
        let primes = primes_up_to(x);
        for s in doc.symbols.iter().filter(|s| s.eigenvalues.is_some()) {
            let sym = reg.get(&s.id.as_str().into())?;
            if let Some(&q) = primes.iter().find(|q| !sym.local.contains_key(q)) {
                return Err(CliError::Usage(format!(
                    "eigenvalue data for {} stops before q = {q} <= X",
                    s.id
                )));
            }
        }
        let filled = with_synthetic_data(&reg, &SyntheticConfig { seed, primes })?;
        let r1 = rebind(&transfer(&d1)?.rep, &filled)?;
        let r2 = rebind(&transfer(&d2)?.rep, &filled)?;
        let cfg = EstimatorConfig {
            x,
            ..Default::default()
        };
        let est = estimate_pole_order(&r1, &r2, &cfg)?;
        let summary = SweepSummary {
            estimate: est.estimate,
            symbolic_order: analysis.report.order,
            x,
            seed,
        };
        report["numeric"] = serde_json::to_value(&est).expect("estimate serializes");
        report["numeric_agrees"] =
            json!(est.estimate.round() as i64 == analysis.report.order as i64);
        report["summary"] = serde_json::to_value(&summary).expect("summary serializes");
        sweep = Some((est.grid.clone(), est.values.clone(), summary));
    }
    Ok(Report {
        json: report,
        sweep,
        exit_code: 0,
    })
}

fn exponent_json(e: &ExponentVector) -> Value {
    match e {
        ExponentVector::Exact(v) => {
            json!({"mode": "exact", "e": v.iter().map(|r| r.to_string()).collect::<Vec<_>>()})
        }
        ExponentVector::Float(v) => json!({"mode": "float", "e": v}),
    }
}

fn cmd_rodier(params: &Path, q: u64) -> Result<Report, CliError> {
    let text = fs::read_to_string(params)
        .map_err(|e| CliError::Usage(format!("{}: {e}", params.display())))?;
    let doc: ParamDoc = serde_json::from_str(&text).map_err(|e| CliError::Usage(e.to_string()))?;
    let param = Param::from_doc(&doc).map_err(|e| CliError::Usage(e.to_string()))?;
    let gl4 = match param {
        Param::Gl4(p) => p,
        Param::Gsp4(p) => gsp4_to_gl4_embed(&p),
        Param::Gl2(_) => return Err(CliError::Usage("expected a gl4 or gsp4 parameter".into())),
    };
    let place = PlaceData::new(q).map_err(|e| CliError::Usage(e.to_string()))?;
    let e = exponents(&gl4, place);
    let class = rodier_class(&e, 1e-9);
    Ok(Report {
        json: json!({
            "q": q,
            "exponents": exponent_json(&e),
            "classification": class,
            "forces_full_induction": class.forces_full_induction(),
        }),
        sweep: None,
        exit_code: 0,
    })
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::VerifyGroups { q } => cmd_verify_groups(*q),
        Command::Transfer { input } => cmd_transfer(input),
        Command::Poles {
            input,
            mode,
            x,
            seed,
        } => cmd_poles(input, *mode, *x, *seed),
        Command::Rodier { params, q } => cmd_rodier(params, *q),
    }
}

fn emit(path: Option<&Path>, body: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn render(cli: &Cli, report: &Report) -> Result<(), String> {
    match cli.format {
        Format::Json => emit(
            cli.out.as_deref(),
            &format!(
                "{}\n",
                serde_json::to_string_pretty(&report.json).expect("json")
            ),
        ),
        Format::Text => emit(cli.out.as_deref(), &render::to_text(&report.json)),
        Format::Csv => match &report.sweep {
            Some((grid, values, summary)) => {
                let mut buf = Vec::new();
                write_sweep_csv(grid, values, &mut buf).map_err(|e| e.to_string())?;
                let csv = String::from_utf8(buf).expect("utf-8");
                let summary = format!("{}\n", serde_json::to_string_pretty(summary).expect("json"));
                match &cli.out {
                    Some(p) => {
                        emit(Some(p), &csv)?;
                        let mut sp = p.clone().into_os_string();
                        sp.push(".summary.json");
                        emit(Some(Path::new(&sp)), &summary)
                    }
                    None => emit(None, &format!("{csv}{summary}")),
                }
            }
            None => emit(cli.out.as_deref(), &render::to_key_value_csv(&report.json)),
        },
    }
}

/// Parses arguments, runs the command, writes the report; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
        Err(CliError::Violation {
            constraint,
            message,
        }) => Report {
            json: json!({"status": "violation", "constraint": constraint, "message": message}),
            sweep: None,
            exit_code: 1,
        },
    };
    if let Err(msg) = render(&cli, &report) {
        eprintln!("error: {msg}");
        return 2;
    }
    report.exit_code
}
