use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use algsoliton_core::catalog::{self, CatalogError, SpaceType};
use algsoliton_core::checks::{self, CheckOutcome};
use algsoliton_core::report::{analyze, InputError, SpaceFile};
use algsoliton_core::soliton::SolitonError;
use algsoliton_core::{LieError, Matrix, Rational, ReductiveMetricSpace};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

/// Exact algebraic Ricci soliton analysis of metric Lie algebras and
/// reductive homogeneous spaces.
#[derive(Parser)]
#[command(name = "algsoliton", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a space, compute its Ricci operator and solve the soliton equation.
    Analyze(Source),
    /// List a basis of the derivation algebra.
    Derivations(Source),
    /// Run the invariant suite and report pass/fail per check.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Run every point of the built-in parameter grid instead of one point.
        #[arg(long)]
        grid: bool,
    },
    /// List the built-in space families and their parameters.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Source {
    /// Built-in family: A, B, C, D (or `all` for verify).
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    space: Option<String>,
    /// Family parameter as name=value with an exact rational value, e.g. delta=3/2.
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, Rational)>,
    /// JSON description of a user-defined space.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn parse_param(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let value = value
        .trim()
        .parse::<Rational>()
        .map_err(|e| e.to_string())?;
    Ok((name.trim().to_string(), value))
}

enum Failure {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1.
    Validation(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Json(_) | InputError::BadKey(_) => Failure::Usage(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::UnknownSpace(_)
            | CatalogError::MissingParameter { .. }
            | CatalogError::UnknownParameter { .. } => Failure::Usage(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<SolitonError> for Failure {
    fn from(e: SolitonError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::Validation(e.to_string())
    }
}

/// A space to analyze, with the name and parameters reported alongside it.
struct Target {
    name: String,
    parameters: BTreeMap<String, Rational>,
    space: ReductiveMetricSpace,
}

fn param_map(params: &[(String, Rational)]) -> Result<BTreeMap<String, Rational>, Failure> {
    let mut map = BTreeMap::new();
    for (k, v) in params {
        if map.insert(k.clone(), v.clone()).is_some() {
            return Err(Failure::Usage(format!("parameter {k:?} given twice")));
        }
    }
    Ok(map)
}

fn parse_space(name: &str) -> Result<SpaceType, Failure> {
    name.parse::<SpaceType>().map_err(Failure::from)
}

fn from_file(path: &PathBuf, params: &[(String, Rational)]) -> Result<Target, Failure> {
    if !params.is_empty() {
        return Err(Failure::Usage(
            "--param cannot be combined with --file".into(),
        ));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file = SpaceFile::from_json(&text)?;
    let space = file.to_space()?;
    Ok(Target {
        name: file.name,
        parameters: BTreeMap::new(),
        space,
    })
}

fn from_catalog(ty: SpaceType, parameters: BTreeMap<String, Rational>) -> Result<Target, Failure> {
    let space = catalog::build(ty, &parameters)?;
    Ok(Target {
        name: ty.to_string(),
        parameters,
        space,
    })
}

/// Resolves `--space`/`--file`. With `fill_defaults`, missing parameters are set to 1.
fn single_target(src: &Source, fill_defaults: bool) -> Result<Target, Failure> {
    if let Some(path) = &src.file {
        return from_file(path, &src.params);
    }
    let name = src
        .space
        .as_deref()
        .expect("clap enforces --space or --file");
    if name.eq_ignore_ascii_case("all") {
        return Err(Failure::Usage(
            "--space all is only accepted by verify".into(),
        ));
    }
    let ty = parse_space(name)?;
    let given = param_map(&src.params)?;
    let params = if fill_defaults {
        ty.with_defaults(&given)
    } else {
        given
    };
    from_catalog(ty, params)
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

fn params_json(p: &BTreeMap<String, Rational>) -> Value {
    Value::Object(
        p.iter()
            .map(|(k, v)| (k.clone(), Value::String(v.to_string())))
            .collect(),
    )
}

fn params_text(p: &BTreeMap<String, Rational>) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_analyze(src: &Source) -> Result<(), Failure> {
    let t = single_target(src, false)?;
    let report = analyze(&t.name, t.parameters, &t.space)?;
    if src.json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    Ok(())
}

fn cmd_derivations(src: &Source) -> Result<(), Failure> {
    let t = single_target(src, true)?;
    let der = t.space.algebra().derivation_space()?;
    if src.json {
        let out = json!({
            "space_name": t.name,
            "parameters": params_json(&t.parameters),
            "dimension": der.dimension(),
            "basis": der.basis.iter().map(matrix_json).collect::<Vec<_>>(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else {
        print!("space: {}", t.name);
        if !t.parameters.is_empty() {
            print!(" ({})", params_text(&t.parameters));
        }
        println!("\ndimension: {}", der.dimension());
        for (i, d) in der.basis.iter().enumerate() {
            println!("D{}:\n{d}", i + 1);
        }
    }
    Ok(())
}

fn verify_targets(src: &Source, grid: bool) -> Result<Vec<Target>, Failure> {
    if let Some(path) = &src.file {
        if grid {
            return Err(Failure::Usage("--grid applies to --space only".into()));
        }
        return Ok(vec![from_file(path, &src.params)?]);
    }
    let name = src
        .space
        .as_deref()
        .expect("clap enforces --space or --file");
    let types = if name.eq_ignore_ascii_case("all") {
        if !src.params.is_empty() {
            return Err(Failure::Usage(
                "--param cannot be combined with --space all".into(),
            ));
        }
        SpaceType::ALL.to_vec()
    } else {
        vec![parse_space(name)?]
    };
    let given = param_map(&src.params)?;
    let mut points = Vec::new();
    for ty in types {
        if grid {
            if !given.is_empty() {
                return Err(Failure::Usage(
                    "--param cannot be combined with --grid".into(),
                ));
            }
            points.extend(ty.sample_grid().into_iter().map(|p| (ty, p)));
        } else {
            points.push((ty, ty.with_defaults(&given)));
        }
    }
    points
        .into_iter()
        .map(|(ty, p)| from_catalog(ty, p))
        .collect()
}

fn cmd_verify(src: &Source, grid: bool) -> Result<(), Failure> {
    let targets = verify_targets(src, grid)?;
    let results: Vec<Vec<CheckOutcome>> = if grid {
        targets
            .par_iter()
            .map(|t| checks::run_all(&t.space))
            .collect()
    } else {
        targets.iter().map(|t| checks::run_all(&t.space)).collect()
    };

    let mut first_failure: Option<String> = None;
    let mut json_points = Vec::new();
    for (t, outcomes) in targets.iter().zip(&results) {
        let label = if t.parameters.is_empty() {
            t.name.clone()
        } else {
            format!("{} ({})", t.name, params_text(&t.parameters))
        };
        if !src.json {
            println!("{label}");
        }
        let mut json_checks = Vec::new();
        for o in outcomes {
            if let Err(detail) = &o.result {
                if first_failure.is_none() {
                    first_failure = Some(format!("{label}: {} failed: {detail}", o.invariant));
                }
            }
            if src.json {
                json_checks.push(json!({
                    "name": o.invariant.name(),
                    "passed": o.passed(),
                    "detail": o.result.as_ref().err(),
                }));
            } else {
                match &o.result {
                    Ok(()) => println!("  PASS {}", o.invariant),
                    Err(d) => println!("  FAIL {}: {d}", o.invariant),
                }
            }
        }
        if src.json {
            json_points.push(json!({
                "space_name": t.name,
                "parameters": params_json(&t.parameters),
                "checks": json_checks,
            }));
        }
    }
    if src.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json_points).expect("serializable")
        );
    }
    match first_failure {
        None => Ok(()),
        Some(msg) => Err(Failure::Validation(msg)),
    }
}

fn cmd_catalog(json_out: bool) {
    if json_out {
        let entries: Vec<Value> = SpaceType::ALL
            .iter()
            .map(|ty| {
                let s = catalog::build(*ty, &ty.default_parameters()).expect("defaults are valid");
                json!({
                    "space": ty.to_string(),
                    "dim": s.dim(),
                    "m_dim": s.m_dim(),
                    "signature": ty.signature(),
                    "parameters": ty.params().iter().map(|p| json!({"name": p.name, "domain": p.domain})).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&entries).expect("serializable")
        );
        return;
    }
    println!("space  dim  m_dim  parameters");
    for ty in SpaceType::ALL {
        let s = catalog::build(ty, &ty.default_parameters()).expect("defaults are valid");
        let params: Vec<String> = ty
            .params()
            .iter()
            .map(|p| format!("{} ({})", p.name, p.domain))
            .collect();
        println!(
            "{:<5}  {:<3}  {:<5}  {}",
            ty.to_string(),
            s.dim(),
            s.m_dim(),
            params.join("; ")
        );
        println!("{:<5}  signature {}", "", ty.signature());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(src) => cmd_analyze(src),
        Command::Derivations(src) => cmd_derivations(src),
        Command::Verify { source, grid } => cmd_verify(source, *grid),
        Command::Catalog { json } => {
            cmd_catalog(*json);
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
