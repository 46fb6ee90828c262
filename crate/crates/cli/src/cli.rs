use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use litigacost_core::analysis::{
    break_even_fraction, builtin_presets, compare_regimes, find_preset, sweep_confirmation,
};
use litigacost_core::{DisputeScenario, Fraction, PolicyConfig};
use litigacost_io::{
    parse_policy_file, parse_scenario_file, render_break_even, render_comparison,
    render_evaluations, render_sweep, BreakEvenReport, EvaluationRecord, Format, Issue,
    LoadedDocument, PolicyOverrides,
};
use rust_decimal::Decimal;

use crate::service::{self, ServiceConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_IO: i32 = 3;

pub const POLICY_ENV: &str = "LITIGACOST_POLICY";

#[derive(Debug, Parser)]
#[command(
    name = "litigacost",
    version,
    about = "Transaction costs of trade litigation: settle or litigate?"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every scenario in a file.
    Eval {
        #[arg(long)]
        scenarios: PathBuf,
        #[arg(long, default_value = "table")]
        format: Format,
        /// Policy file; overrides the document's policy and $LITIGACOST_POLICY.
        #[arg(long)]
        policy: Option<PathBuf>,
    },
    /// Evaluate one scenario over a grid of confirmation shares.
    Sweep {
        #[arg(long)]
        scenarios: PathBuf,
        #[arg(long)]
        id: String,
        #[arg(long, value_parser = ["confirmation"], default_value = "confirmation")]
        param: String,
        #[arg(long)]
        min: Decimal,
        #[arg(long)]
        max: Decimal,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value = "table")]
        format: Format,
        #[arg(long)]
        policy: Option<PathBuf>,
    },
    /// Confirmation share at which TC / claim hits a target.
    Breakeven {
        #[arg(long)]
        scenarios: PathBuf,
        #[arg(long)]
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        target_fraction: Decimal,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Transaction cost of one scenario under two institutional regimes.
    Compare {
        #[arg(long)]
        scenarios: PathBuf,
        #[arg(long)]
        id: String,
        #[arg(long)]
        before: String,
        #[arg(long)]
        after: String,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Start the HTTP service.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        listen: String,
        #[arg(long)]
        policy: Option<PathBuf>,
        /// Origin allowed to call the API from a browser.
        #[arg(long)]
        allow_origin: Option<String>,
    },
}

/// A command failure, already mapped to its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub messages: Vec<String>,
}

impl Failure {
    fn validation(messages: Vec<String>) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            messages,
        }
    }

    fn io(message: String) -> Self {
        Failure {
            code: EXIT_IO,
            messages: vec![message],
        }
    }

    fn issues(source: &Path, issues: Vec<Issue>) -> Self {
        Failure::validation(
            issues
                .into_iter()
                .map(|i| format!("{}: {i}", source.display()))
                .collect(),
        )
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|err| Failure::io(format!("{}: {err}", path.display())))
}

fn load(path: &Path) -> Result<LoadedDocument, Failure> {
    parse_scenario_file(&read(path)?).map_err(|issues| Failure::issues(path, issues))
}

fn load_overrides(path: &Path) -> Result<PolicyOverrides, Failure> {
    parse_policy_file(&read(path)?).map_err(|issues| Failure::issues(path, issues))
}

/// Layers, lowest first: built-in defaults, `$LITIGACOST_POLICY`, the
/// document's own policy, the `--policy` flag.
fn resolve_policy(
    flag: Option<&Path>,
    env: Option<&Path>,
    document: Option<&PolicyOverrides>,
) -> Result<PolicyConfig, Failure> {
    let mut policy = PolicyConfig::default();
    let mut apply = |overrides: &PolicyOverrides| -> Result<(), Failure> {
        policy = overrides
            .apply(policy)
            .map_err(|err| Failure::validation(vec![err.to_string()]))?;
        Ok(())
    };
    if let Some(path) = env {
        apply(&load_overrides(path)?)?;
    }
    if let Some(overrides) = document {
        apply(overrides)?;
    }
    if let Some(path) = flag {
        apply(&load_overrides(path)?)?;
    }
    Ok(policy)
}

fn env_policy() -> Option<PathBuf> {
    std::env::var_os(POLICY_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

fn scenario<'a>(
    doc: &'a LoadedDocument,
    path: &Path,
    id: &str,
) -> Result<&'a DisputeScenario, Failure> {
    doc.scenario(id).ok_or_else(|| {
        Failure::validation(vec![format!(
            "{}: no scenario with id {id:?}",
            path.display()
        )])
    })
}

fn fraction(value: Decimal, flag: &str) -> Result<Fraction, Failure> {
    Fraction::new(value)
        .ok_or_else(|| Failure::validation(vec![format!("--{flag} {value} is outside [0, 1]")]))
}

fn model_failure(err: litigacost_core::ModelError) -> Failure {
    Failure::validation(vec![format!("{err} [{}]", err.code())])
}

/// Runs a non-serve command and returns what it would print on stdout.
pub fn execute(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Eval {
            scenarios,
            format,
            policy,
        } => {
            let doc = load(scenarios)?;
            let policy = resolve_policy(
                policy.as_deref(),
                env_policy().as_deref(),
                doc.document.policy.as_ref(),
            )?;
            let records: Vec<_> = doc
                .scenarios
                .iter()
                .map(|s| EvaluationRecord::new(s, &policy))
                .collect();
            Ok(render_evaluations(&records, *format))
        }
        Command::Sweep {
            scenarios,
            id,
            param: _,
            min,
            max,
            steps,
            format,
            policy,
        } => {
            let doc = load(scenarios)?;
            let policy = resolve_policy(
                policy.as_deref(),
                env_policy().as_deref(),
                doc.document.policy.as_ref(),
            )?;
            let s = scenario(&doc, scenarios, id)?;
            let series = sweep_confirmation(
                s,
                fraction(*min, "min")?,
                fraction(*max, "max")?,
                *steps,
                &policy,
            )
            .map_err(model_failure)?;
            Ok(render_sweep(s, &series, *format))
        }
        Command::Breakeven {
            scenarios,
            id,
            target_fraction,
            format,
        } => {
            let doc = load(scenarios)?;
            let s = scenario(&doc, scenarios, id)?;
            let confirmation = break_even_fraction(s, *target_fraction).map_err(model_failure)?;
            let report = BreakEvenReport {
                scenario_id: id.clone(),
                target_tc_fraction: *target_fraction,
                confirmation,
            };
            Ok(render_break_even(&report, *format))
        }
        Command::Compare {
            scenarios,
            id,
            before,
            after,
            format,
        } => {
            let doc = load(scenarios)?;
            let s = scenario(&doc, scenarios, id)?;
            let builtin = builtin_presets();
            let lookup = |name: &str| {
                find_preset(&doc.document.presets, &builtin, name)
                    .ok_or_else(|| Failure::validation(vec![format!("unknown preset {name:?}")]))
            };
            let cmp = compare_regimes(s, lookup(before)?, lookup(after)?).map_err(model_failure)?;
            Ok(render_comparison(&cmp, *format))
        }
        Command::Serve { .. } => unreachable!("serve is handled by run"),
    }
}

/// Entry point; returns the process exit code. Output is written only once a
/// command has fully succeeded.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Serve {
            listen,
            policy,
            allow_origin,
        } => serve(listen, policy.as_deref(), allow_origin.clone()).map(|()| String::new()),
        command => execute(command),
    };
    match result {
        Ok(text) => match stdout
            .write_all(text.as_bytes())
            .and_then(|()| stdout.flush())
        {
            Ok(()) => EXIT_OK,
            Err(err) => {
                let _ = writeln!(stderr, "litigacost: {err}");
                EXIT_IO
            }
        },
        Err(failure) => {
            for message in &failure.messages {
                let _ = writeln!(stderr, "litigacost: {message}");
            }
            failure.code
        }
    }
}

fn serve(listen: &str, policy: Option<&Path>, allow_origin: Option<String>) -> Result<(), Failure> {
    let policy = resolve_policy(policy, env_policy().as_deref(), None)?;
    let config = ServiceConfig {
        policy,
        allow_origin,
        ..ServiceConfig::default()
    };
    let runtime = tokio::runtime::Runtime::new().map_err(|err| Failure::io(err.to_string()))?;
    runtime
        .block_on(service::serve(listen, config))
        .map_err(|err| Failure::io(format!("{listen}: {err}")))
}
