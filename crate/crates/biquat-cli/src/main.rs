//! `qroot`: solve `X^n = A` for quaternions with complex components.
//!
//! Input is a quaternion and an exponent, inline or from a file/stdin;
//! output is the complete solution set (isolated roots, root families, or
//! an insolubility verdict) as text or as a structured JSON document.
//! Exit status: 0 solved (and verified when `--check` is set), 2 the
//! equation is insoluble, 1 any error.

mod input;
mod report;

use std::io::Read;
use std::process::ExitCode;

use biquat::{check_solution_set, oracle_roundtrip, solve_nth_root, Branch, CaseLabel};
use clap::{Parser, ValueEnum};

use input::{parse_input, InputError};
use report::{render_text, to_json, OracleDoc, ReportDoc};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BranchArg {
    Principal,
    Negated,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Principal => Branch::Principal,
            BranchArg::Negated => Branch::Negated,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    /// Structured single-line JSON document.
    #[value(alias = "structured")]
    Json,
}

/// Computes all n-th roots of a quaternion with complex components.
///
/// The quaternion is written as `a0,a1,a2,a3` with complex components like
/// `76`, `24i` or `-8+8i`; append `;n` to carry the exponent inline, or pass
/// `--n`. A JSON form `{"a": [[re,im],[re,im],[re,im],[re,im]], "n": k}` is
/// accepted as well.
#[derive(Debug, Parser)]
#[command(name = "qroot", version)]
struct Cli {
    /// Inline input, e.g. "76,24i,12i,-41i;3".
    #[arg(allow_hyphen_values = true)]
    inline: Option<String>,

    /// Read the input from a file, or from stdin with `-`.
    #[arg(long, value_name = "FILE", conflicts_with = "inline")]
    input: Option<String>,

    /// Root degree; required unless the input carries `;n`.
    #[arg(long)]
    n: Option<u32>,

    /// Scale-aware classification and verification tolerance.
    #[arg(long, default_value_t = biquat::DEFAULT_TOL)]
    tol: f64,

    /// Square-root branch used for the eigenvalue split; the solution set
    /// is the same either way.
    #[arg(long, value_enum, default_value_t = BranchArg::Principal)]
    branch: BranchArg,

    /// Deterministic samples emitted per root family.
    #[arg(long, default_value_t = 3)]
    samples: usize,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Self-verify every root (and family samples) by powering.
    #[arg(long)]
    check: bool,

    /// Run the seeded round-trip oracle instead of solving: `SEED,COUNT`
    /// random inputs per class, each solved and recovered. Requires --n.
    #[arg(long, value_name = "SEED,COUNT")]
    oracle: Option<String>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(arg) = &cli.oracle {
        return run_oracle(&cli, arg);
    }

    let text = read_input_text(&cli)?;
    let parsed = parse_input(&text)?;
    let n = match (parsed.n, cli.n) {
        (Some(inline), Some(flag)) if inline != flag => {
            return Err(CliError::Usage(format!(
                "conflicting exponents: input says {inline}, --n says {flag}"
            )));
        }
        (Some(inline), _) => inline,
        (None, Some(flag)) if flag >= 2 => flag,
        (None, Some(flag)) => {
            return Err(CliError::Usage(format!("n must be at least 2, got {flag}")));
        }
        (None, None) => {
            return Err(CliError::Usage(
                "no exponent: append `;n` to the input or pass --n".into(),
            ));
        }
    };
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {}",
            cli.tol
        )));
    }

    let set = solve_nth_root(parsed.a, n, cli.tol, cli.branch.into());
    let verification = if cli.check {
        let report = check_solution_set(parsed.a, n, &set, cli.tol, cli.samples.max(1))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Some(report)
    } else {
        None
    };

    match cli.format {
        OutputFormat::Json => {
            println!(
                "{}",
                to_json(&ReportDoc::new(
                    parsed.a,
                    &set,
                    cli.samples,
                    verification.as_ref()
                ))
            );
        }
        OutputFormat::Text => {
            print!(
                "{}",
                render_text(parsed.a, &set, cli.samples, verification.as_ref())
            );
        }
    }

    if set.case == CaseLabel::NilpotentSingular {
        return Ok(ExitCode::from(2));
    }
    if let Some(v) = &verification {
        if !v.pass {
            eprintln!(
                "error: verification failed, max residual {:.3e} exceeds {:e}",
                v.max_residual, v.tolerance
            );
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(cli: &Cli, arg: &str) -> Result<ExitCode, CliError> {
    let (seed, count) = arg
        .split_once(',')
        .and_then(|(s, c)| Some((s.trim().parse().ok()?, c.trim().parse().ok()?)))
        .ok_or_else(|| CliError::Usage(format!("--oracle expects SEED,COUNT, got {arg:?}")))?;
    let n = cli
        .n
        .ok_or_else(|| CliError::Usage("--oracle requires --n".into()))?;
    if n < 2 {
        return Err(CliError::Usage(format!("n must be at least 2, got {n}")));
    }

    let report = oracle_roundtrip(seed, n, count);
    let doc = OracleDoc {
        mode: "oracle-roundtrip",
        seed,
        n,
        count,
        trials: report.root_residuals.len(),
        pass: report.pass,
        max_recovery_distance: report.max_residual,
        tolerance: report.tolerance,
    };
    match cli.format {
        OutputFormat::Json => println!("{}", to_json(&doc)),
        OutputFormat::Text => println!(
            "oracle roundtrip: seed {seed}, n {n}, {} trials, max recovery distance {:.3e} (tol {:e}) -> {}",
            doc.trials,
            doc.max_recovery_distance,
            doc.tolerance,
            if doc.pass { "PASS" } else { "FAIL" }
        ),
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn read_input_text(cli: &Cli) -> Result<String, CliError> {
    if let Some(inline) = &cli.inline {
        return Ok(inline.clone());
    }
    match cli.input.as_deref() {
        Some("-") => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(buffer)
        }
        Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        }),
        None => Err(CliError::Usage(
            "no input: pass it inline or use --input <FILE|->".into(),
        )),
    }
}
