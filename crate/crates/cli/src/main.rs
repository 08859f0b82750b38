//! Command-line driver: formulas, invariant tables, the brute-force oracle
//! and shape checks behind one binary.
//!
//! Exit codes: 0 success, 1 computation refusal (oracle limits, non-split
//! input on a formula path), 2 usage or parse error, 3 formula/oracle
//! mismatch from `compare` (or `fvector --method both`).

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyface_core::catalog::{
    self, build_matroid, family_catalog, result_document, CatalogError, MatroidSpec,
    ResultDocument,
};
use polyface_core::engine::{self, EngineError};
use polyface_core::matroid::{Matroid, MatroidError};
use polyface_core::oracle::{self, OracleLimits};
use polyface_core::poly::FPolynomial;

const EXIT_REFUSAL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_MISMATCH: i32 = 3;

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn refusal(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_REFUSAL,
            message: message.into(),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        CliError {
            code: catalog::refusal_exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        let code = match &e {
            EngineError::Matroid(MatroidError::NotSplit { .. })
            | EngineError::Matroid(MatroidError::NotConnected) => EXIT_REFUSAL,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<oracle::OracleError> for CliError {
    fn from(e: oracle::OracleError) -> Self {
        CliError::refusal(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "polyface",
    about = "Exact face enumeration for matroid base polytopes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Compute the f-vector of a matroid base polytope
    Fvector {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Report rank, connectivity, split flag and the cyclic-flat tables
    Invariants {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run both the formula and the oracle; exit 3 when they disagree
    Compare {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check shape properties of the f-vector
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Check unimodality only (default: both checks)
        #[arg(long)]
        unimodal: bool,
        /// Check log-concavity only (default: both checks)
        #[arg(long)]
        log_concave: bool,
    },
    /// Catalog inspection
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Process every .json matroid description in a directory
    Batch {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the named matroid families and their parameters
    List,
}

#[derive(Args)]
struct InputArgs {
    /// JSON file holding a matroid description
    #[arg(long, conflicts_with_all = ["family", "params"])]
    input: Option<PathBuf>,
    /// Named catalog family
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated family parameters (pg23 takes none and may omit this)
    #[arg(long, requires = "family")]
    params: Option<String>,
}

#[derive(Args)]
struct FormatArgs {
    /// JSON output (default)
    #[arg(long)]
    json: bool,
    /// CSV output: one dimension-indexed row per face count
    #[arg(long, conflicts_with = "json")]
    csv: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    fn tag(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

impl InputArgs {
    fn spec(&self) -> Result<MatroidSpec, CliError> {
        match (&self.input, &self.family) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::usage(format!("cannot read {}: {e}", path.display()))
                })?;
                Ok(MatroidSpec::from_json(&text)?)
            }
            (None, Some(family)) => {
                let params = parse_params(self.params.as_deref().unwrap_or(""))?;
                Ok(MatroidSpec::Family {
                    family: family.clone(),
                    params,
                })
            }
            (None, None) => Err(CliError::usage(
                "no input: pass --input FILE or --family NAME --params CSV",
            )),
            (Some(_), Some(_)) => unreachable!("clap conflicts_with prevents this"),
        }
    }

    fn matroid(&self) -> Result<Matroid, CliError> {
        Ok(build_matroid(&self.spec()?)?)
    }
}

fn parse_params(text: &str) -> Result<Vec<i64>, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| CliError::usage(format!("bad parameter {tok:?}: {e}")))
        })
        .collect()
}

fn oracle_limits() -> Result<OracleLimits, CliError> {
    match std::env::var("POLYFACE_ORACLE_LIMIT") {
        Ok(v) => {
            let n: usize = v.parse().map_err(|e| {
                CliError::usage(format!("bad POLYFACE_ORACLE_LIMIT value {v:?}: {e}"))
            })?;
            Ok(OracleLimits::with_max_ground_set(n))
        }
        Err(_) => Ok(OracleLimits::default()),
    }
}

fn compute_f(m: &Matroid, method: Method) -> Result<FPolynomial, CliError> {
    match method {
        Method::Formula => Ok(engine::matroid_f(m)?),
        Method::Oracle => Ok(oracle::f_vector_oracle(m, &oracle_limits()?)?),
        Method::Both => {
            let formula = engine::matroid_f(m)?;
            let oracle_f = oracle::f_vector_oracle(m, &oracle_limits()?)?;
            if formula != oracle_f {
                return Err(CliError {
                    code: EXIT_MISMATCH,
                    message: format!(
                        "formula and oracle disagree: formula {formula}, oracle {oracle_f}"
                    ),
                });
            }
            Ok(formula)
        }
    }
}

/// Builds the result document for a spec. The formula method evaluates
/// parameterized families analytically, so those reach ground sets far past
/// anything an explicit basis list could hold; explicit inputs, and any
/// method needing the oracle, build the matroid.
fn compute_document(spec: &MatroidSpec, method: Method) -> Result<ResultDocument, CliError> {
    let start = Instant::now();
    if method == Method::Formula {
        if let Some(ai) = catalog::analytic_instance(spec)? {
            let timing_ms = start.elapsed().as_secs_f64() * 1e3;
            return Ok(catalog::analytic_document(&ai, method.tag(), timing_ms));
        }
    }
    let m = build_matroid(spec)?;
    let f = compute_f(&m, method)?;
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(result_document(&m, Some(&f), method.tag(), timing_ms))
}

/// Writes one line to stdout; a closed pipe downstream ends the run
/// quietly instead of panicking.
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(0);
    }
}

fn print_document(doc: &ResultDocument) {
    emit(serde_json::to_string_pretty(doc).expect("document serialization cannot fail"));
}

fn print_csv(doc: &ResultDocument) {
    let mut text = String::from("dimension,count");
    if let Some(f) = &doc.f_vector {
        for (i, c) in f.iter().enumerate() {
            text.push_str(&format!("\n{i},{c}"));
        }
    }
    emit(text);
}

fn cmd_fvector(input: &InputArgs, method: Method, csv: bool) -> Result<(), CliError> {
    let doc = compute_document(&input.spec()?, method)?;
    if csv {
        print_csv(&doc);
    } else {
        print_document(&doc);
    }
    Ok(())
}

fn cmd_invariants(input: &InputArgs) -> Result<(), CliError> {
    let m = input.matroid()?;
    let start = Instant::now();
    let doc = result_document(&m, None, "invariants", 0.0);
    let doc = ResultDocument {
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
        ..doc
    };
    print_document(&doc);
    Ok(())
}

fn cmd_compare(input: &InputArgs) -> Result<(), CliError> {
    let doc = compute_document(&input.spec()?, Method::Both)?;
    print_document(&doc);
    Ok(())
}

fn cmd_check(
    input: &InputArgs,
    method: Method,
    unimodal: bool,
    log_concave: bool,
) -> Result<(), CliError> {
    let mut doc = compute_document(&input.spec()?, method)?;
    // when specific checks are requested, report only those
    if unimodal || log_concave {
        if !unimodal {
            doc.unimodal = None;
        }
        if !log_concave {
            doc.log_concave = None;
        }
    }
    print_document(&doc);
    Ok(())
}

fn cmd_catalog_list() {
    for info in family_catalog() {
        emit(format!(
            "{:<14} params: {:<28} {}",
            info.name, info.params, info.summary
        ));
    }
}

fn cmd_batch(dir: &Path, method: Method) -> Result<(), CliError> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    entries.sort();
    let mut worst = 0;
    for path in entries {
        let Ok(text) = std::fs::read_to_string(&path) else {
            emit(serde_json::json!({"file": path.display().to_string(), "error": "unreadable"}));
            worst = worst.max(EXIT_USAGE);
            continue;
        };
        let outcome = MatroidSpec::from_json(&text)
            .map_err(CliError::from)
            .and_then(|spec| compute_document(&spec, method));
        match outcome {
            Ok(doc) => {
                emit(serde_json::json!({"file": path.display().to_string(), "result": doc}))
            }
            Err(e) => {
                emit(serde_json::json!({
                    "file": path.display().to_string(),
                    "error": e.message,
                    "code": e.code,
                }));
                worst = worst.max(e.code);
            }
        }
    }
    if worst == 0 {
        Ok(())
    } else {
        Err(CliError {
            code: worst,
            message: "one or more batch entries failed".to_string(),
        })
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Commands::Fvector {
            input,
            method,
            format,
        } => cmd_fvector(&input, method, format.csv),
        Commands::Invariants { input } => cmd_invariants(&input),
        Commands::Compare { input } => cmd_compare(&input),
        Commands::Check {
            input,
            method,
            unimodal,
            log_concave,
        } => cmd_check(&input, method, unimodal, log_concave),
        Commands::Catalog {
            action: CatalogAction::List,
        } => {
            cmd_catalog_list();
            Ok(())
        }
        Commands::Batch { dir, method } => cmd_batch(&dir, method),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}
