//! `gwscal`: evaluate, solve and analyse scalarized vector problems.

mod instance;
mod report;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use gerstewitz::corpus;
use gerstewitz::efficiency::{eff_finite, DominationSet, SAMPLE_SEED};
use gerstewitz::existence::existence_report;
use gerstewitz::parameters::sweep;
use gerstewitz::solver::solve;
use gerstewitz::{EvalOptions, Point, SolveResult};

use instance::Overrides;

const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_UNBOUNDED: u8 = 4;
const EXIT_NOT_CERTIFIED: u8 = 5;

#[derive(Parser)]
#[command(name = "gwscal", version, about = "Nonlinear scalarization of vector optimization problems")]
struct Cli {
    /// Bisection tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Largest |t| probed before a value is reported infinite.
    #[arg(long = "t-max", global = true)]
    t_max: Option<f64>,
    /// Sampling resolution of grid regions and builtin curves.
    #[arg(long, global = true)]
    resolution: Option<usize>,
    /// Write tables to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Suppress report text; tables are still written.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the functional at points.
    Eval {
        /// Instance JSON file or builtin example id.
        instance: String,
        /// Points as JSON (array of arrays) or CSV.
        points: Option<String>,
        /// Extra point as comma-separated coordinates; repeatable.
        #[arg(long = "point", allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Minimize the functional over the feasible set.
    Solve { instance: String },
    /// Run the existence rules.
    Check { instance: String },
    /// Solve over a grid of parameters (a, k).
    Sweep {
        instance: String,
        /// Sweep specification JSON.
        spec: String,
    },
    /// Efficient points of a finite set.
    Eff {
        /// Points as JSON (array of arrays) or CSV.
        points: String,
        /// `orthant`, a builtin set name, or a JSON set file.
        #[arg(long, default_value = "orthant")]
        domination: String,
        /// Dominate with D \ {0}.
        #[arg(long)]
        exclude_zero: bool,
    },
    /// Builtin example corpus.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// List example ids.
    List,
    /// Run every example against its expected outcome.
    RunAll,
}

/// Destination of report text and of tables.
struct Output {
    quiet: bool,
    table: Box<dyn Write>,
    to_file: bool,
}

impl Output {
    fn report(&self, line: impl std::fmt::Display) -> std::io::Result<()> {
        if !self.quiet {
            writeln!(std::io::stdout(), "{line}")?;
        }
        Ok(())
    }
}

fn seed() -> u64 {
    std::env::var("GW_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(SAMPLE_SEED)
}

fn run(cli: Cli) -> Result<u8> {
    let ov = Overrides { tol: cli.tol, t_max: cli.t_max, resolution: cli.resolution };
    let table: Box<dyn Write> = match &cli.out {
        Some(path) => {
            Box::new(std::fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?)
        }
        None => Box::new(std::io::stdout()),
    };
    let mut out = Output { quiet: cli.quiet, table, to_file: cli.out.is_some() };
    match cli.command {
        Command::Eval { instance, points, point } => {
            let pr = instance::load_instance(&instance, &ov)?;
            let mut pts = match points {
                Some(path) => instance::load_points(&path)?,
                None => Vec::new(),
            };
            for p in &point {
                pts.push(instance::parse_point_arg(p)?);
            }
            if pts.is_empty() {
                anyhow::bail!("no points given");
            }
            let mut rows = Vec::with_capacity(pts.len());
            for y in &pts {
                if y.dim() != pr.dim() {
                    anyhow::bail!("point {y}: expected {} coordinates, got {}", pr.dim(), y.dim());
                }
                rows.push((y.clone(), pr.g.phi(y)?, pr.g.classify(y)?));
            }
            report::eval_table(&mut out.table, pr.dim(), &rows, pr.g.options())?;
            Ok(0)
        }
        Command::Solve { instance } => {
            let pr = instance::load_instance(&instance, &ov)?;
            let r = solve(&pr)?;
            for line in report::solve_summary(&r) {
                out.report(line)?;
            }
            if out.to_file || !out.quiet {
                report::points_table(&mut out.table, pr.dim(), r.minimizers())?;
            }
            Ok(match r {
                SolveResult::Optimal { .. } | SolveResult::ApproximateOptimal { .. } => 0,
                SolveResult::Infeasible { .. } => EXIT_INFEASIBLE,
                SolveResult::UnboundedBelow { .. } | SolveResult::InfimumNotAttained { .. } => EXIT_UNBOUNDED,
            })
        }
        Command::Check { instance } => {
            let pr = instance::load_instance(&instance, &ov)?;
            let rep = existence_report(&pr)?;
            let text = report::existence_text(&rep);
            if out.to_file {
                out.table.write_all(text.as_bytes())?;
            } else {
                out.report(text.trim_end())?;
            }
            Ok(if rep.is_certified() { 0 } else { EXIT_NOT_CERTIFIED })
        }
        Command::Sweep { instance, spec } => {
            let pr = instance::load_instance(&instance, &ov)?;
            let spec = instance::load_sweep_spec(&spec, pr.dim())?;
            let rows = sweep(&pr.f, pr.g.h(), &spec, pr.g.options())?;
            report::sweep_table(&mut out.table, pr.dim(), &rows)?;
            Ok(0)
        }
        Command::Eff { points, domination, exclude_zero } => {
            let pts = instance::load_points(&points)?;
            let dim = pts.first().map(Point::dim).context("points file is empty")?;
            let base = instance::load_domination(&domination, dim)?;
            let d = DominationSet::with_seed(base, exclude_zero, seed())?;
            let eff = eff_finite(&pts, &d)?;
            report::points_table(&mut out.table, dim, &eff)?;
            Ok(0)
        }
        Command::Examples { action: ExamplesAction::List } => {
            for (id, description) in corpus::EXAMPLES {
                writeln!(out.table, "{id:<18} {description}")?;
            }
            Ok(0)
        }
        Command::Examples { action: ExamplesAction::RunAll } => {
            let options = ov.apply(EvalOptions::default());
            let outcomes = corpus::run_all(options)?;
            let passed = outcomes.iter().filter(|o| o.passed).count();
            for o in &outcomes {
                let mark = if o.passed { "PASS" } else { "FAIL" };
                writeln!(out.table, "{mark} {:<18} {}: {}", o.id, o.status, o.detail)?;
            }
            out.report(format!("{passed}/{} examples passed", outcomes.len()))?;
            Ok(if passed == outcomes.len() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        // a closed pipe downstream (`| head`) is not an error
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
