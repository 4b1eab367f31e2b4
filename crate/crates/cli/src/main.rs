//! `peiffer`: certificates for precrossed modules from JSON instance files.
//!
//! Exit codes: 0 computed or property holds, 1 property fails, 2 invalid input.

mod commands;
mod document;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use peiffer_core::ambient::{set_max_order, FiniteGroup, LieAlgebra, Theory};
use peiffer_core::enumerate::{Property, DEFAULT_BOUND, DEFAULT_SEED};
use peiffer_core::{Error, Result};

use commands::{run_enumerate, run_task, run_verify, Options};
use document::{load, InstanceDocument};
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "peiffer", version, about = "Commutator calculus for finite precrossed modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized parts of `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Order cap for constructed objects; for `enumerate` and `verify`, the
    /// bound on |X|·|B| when `--bound` is absent.
    #[arg(long, global = true)]
    max_order: Option<u64>,
    /// Include element-level listings of every reported subobject.
    #[arg(long, global = true)]
    witness: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Omit timings, making reports byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoryArg {
    Group,
    Lie,
    All,
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load and validate every declaration.
    Validate(InputArgs),
    /// Crossed-module test with a violating pair.
    Crossed(InputArgs),
    /// Peiffer commutator of two submodules.
    Peiffer(InputArgs),
    /// Crossed-module reflection.
    Reflect(InputArgs),
    /// Centrality of an extension.
    Central(InputArgs),
    /// Centrality by both criteria; fails when they disagree.
    CentralCrosscheck(InputArgs),
    /// Universal central quotient of an extension.
    Centralize(InputArgs),
    /// Triviality of an extension.
    Trivial(InputArgs),
    /// Whether a square is a double extension.
    Double(InputArgs),
    DoubleCentral(InputArgs),
    DoubleCentralize(InputArgs),
    GaloisGroup(InputArgs),
    /// Second Hopf formula for a presentation.
    Hopf2(InputArgs),
    /// Third Hopf formula for a double presentation.
    Hopf3(InputArgs),
    FiveTerm(InputArgs),
    RelativeCommutator(InputArgs),
    /// Size the instance streams built from the catalog.
    Enumerate {
        #[arg(long, value_enum, default_value_t = TheoryArg::Group)]
        theory: TheoryArg,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Check named invariants over the catalog.
    Verify {
        /// Repeatable; all properties when omitted.
        #[arg(long)]
        property: Vec<String>,
        #[arg(long, value_enum, default_value_t = TheoryArg::Group)]
        theory: TheoryArg,
        #[arg(long)]
        bound: Option<u64>,
    },
}

impl Command {
    fn document_task(&self) -> Option<(&'static str, &InputArgs)> {
        use Command::*;
        Some(match self {
            Validate(a) => ("validate", a),
            Crossed(a) => ("crossed", a),
            Peiffer(a) => ("peiffer", a),
            Reflect(a) => ("reflect", a),
            Central(a) => ("central", a),
            CentralCrosscheck(a) => ("central-crosscheck", a),
            Centralize(a) => ("centralize", a),
            Trivial(a) => ("trivial", a),
            Double(a) => ("double", a),
            DoubleCentral(a) => ("double-central", a),
            DoubleCentralize(a) => ("double-centralize", a),
            GaloisGroup(a) => ("galois-group", a),
            Hopf2(a) => ("hopf2", a),
            Hopf3(a) => ("hopf3", a),
            FiveTerm(a) => ("five-term", a),
            RelativeCommutator(a) => ("relative-commutator", a),
            Enumerate { .. } | Verify { .. } => return None,
        })
    }
}

fn read_document(path: &PathBuf) -> Result<InstanceDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadSpec(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::BadSpec(format!("{}: {e}", path.display())))
}

fn document_report(task: &str, input: &PathBuf, opts: &Options) -> Result<Report> {
    let doc = read_document(input)?;
    if let Some(op) = doc.task.as_ref().and_then(|t| t.op.as_deref()) {
        if op != task {
            return Err(Error::BadSpec(format!(
                "document task is '{op}' but the command is '{task}'"
            )));
        }
    }
    match doc.theory()? {
        Theory::Group => run_task(task, &load::<FiniteGroup>(&doc)?, opts),
        Theory::Lie => run_task(task, &load::<LieAlgebra>(&doc)?, opts),
    }
}

fn merge(mut a: Report, b: Report) -> Report {
    a.theory = None;
    a.verdict = Some(a.verdict.unwrap_or(true) && b.verdict.unwrap_or(true));
    a.properties.extend(b.properties);
    for (k, v) in b.counts {
        a.counts.insert(format!("lie {k}"), v);
    }
    a
}

fn execute(cli: &Cli) -> Result<Report> {
    let opts = Options {
        witness: cli.witness,
    };
    if let Some((task, input)) = cli.command.document_task() {
        if let Some(cap) = cli.max_order {
            set_max_order(cap);
        }
        return document_report(task, &input.input, &opts);
    }
    match &cli.command {
        Command::Enumerate { theory, bound } => {
            let bound = bound.or(cli.max_order).unwrap_or(DEFAULT_BOUND);
            match theory {
                TheoryArg::Group => run_enumerate::<FiniteGroup>(cli.seed, bound, cli.witness),
                TheoryArg::Lie => run_enumerate::<LieAlgebra>(cli.seed, bound, cli.witness),
                TheoryArg::All => Ok(merge(
                    run_enumerate::<FiniteGroup>(cli.seed, bound, cli.witness)?,
                    run_enumerate::<LieAlgebra>(cli.seed, bound, cli.witness)?,
                )),
            }
        }
        Command::Verify {
            property,
            theory,
            bound,
        } => {
            let bound = bound.or(cli.max_order).unwrap_or(DEFAULT_BOUND);
            let props: Vec<Property> = if property.is_empty() {
                Property::ALL.to_vec()
            } else {
                property.iter().map(|p| p.parse()).collect::<Result<_>>()?
            };
            let timing = !cli.no_timing;
            match theory {
                TheoryArg::Group => run_verify::<FiniteGroup>(cli.seed, bound, &props, timing),
                TheoryArg::Lie => run_verify::<LieAlgebra>(cli.seed, bound, &props, timing),
                TheoryArg::All => Ok(merge(
                    run_verify::<FiniteGroup>(cli.seed, bound, &props, timing)?,
                    run_verify::<LieAlgebra>(cli.seed, bound, &props, timing)?,
                )),
            }
        }
        _ => unreachable!("document tasks handled above"),
    }
}

fn apply_env_cap() -> std::result::Result<(), String> {
    match std::env::var("PEIFFER_MAX_ORDER") {
        Ok(v) => {
            let cap: u64 = v
                .parse()
                .map_err(|_| format!("PEIFFER_MAX_ORDER must be a positive integer, got '{v}'"))?;
            set_max_order(cap);
            Ok(())
        }
        Err(_) => Ok(()),
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let text = match cli.format {
        Format::Text => report.render_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = apply_env_cap() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let mut report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            // A failed internal cross-check is a property failure, not bad input.
            return ExitCode::from(if matches!(e, Error::Invariant(_)) { 1 } else { 2 });
        }
    };
    if !cli.no_timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.verdict == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
