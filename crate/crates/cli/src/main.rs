//! `lmhs`: check, solve and render limiting mixed Hodge structure fixtures.
//!
//! Exit status is 0 when every check passes, 1 when some check fails and 2
//! for unreadable or mismatched input.

mod commands;
mod render;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lmhs_core::checks::CheckSet;
use lmhs_core::degeneration::Position;

use commands::{CliError, Exit, Outcome, Style};

#[derive(Parser)]
#[command(name = "lmhs", version, about = "Hodge-theoretic bookkeeping for degenerations")]
struct Cli {
    /// Colored verdicts.
    #[arg(long, global = true, env = "LMHS_COLOR", value_enum, default_value_t = Color::Never)]
    color: Color,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Color {
    Always,
    Never,
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks that apply to each fixture.
    Check {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Comma-separated check sets (default: all that apply).
        #[arg(long, value_delimiter = ',', value_parser = parse_check_set)]
        checks: Vec<CheckSet>,
    },
    /// Solve one slot of the sequences from the rest of a degeneration fixture.
    Solve {
        path: PathBuf,
        #[arg(long, short = 'k')]
        degree: i64,
        #[arg(long, value_parser = parse_position)]
        position: Position,
    },
    /// Draw the diagrams of a fixture, or one diagram given as JSON.
    Render {
        #[arg(required_unless_present = "diagram", conflicts_with = "diagram")]
        path: Option<PathBuf>,
        /// Diagram as `[[p, q, m], ...]`.
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long, short = 'k')]
        degree: Option<i64>,
    },
    /// Split a quiver fixture into indecomposables and compare the verdicts.
    QuiverDecompose { path: PathBuf },
    /// Cyclic base change of the limits in a degeneration fixture.
    BaseChange {
        #[arg(required_unless_present = "refine")]
        path: Option<PathBuf>,
        #[arg(long)]
        kappa: u64,
        /// Cyclotomic multiplicities `d:m,...` to refine.
        #[arg(long, value_parser = commands::parse_multiset)]
        refine: Option<std::collections::BTreeMap<u64, u64>>,
    },
    /// Koszul complex of a stratum's limit in a multi-parameter fixture.
    Koszul {
        path: PathBuf,
        /// Comma-separated 1-based directions of the stratum (default: none).
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        #[arg(long)]
        slot: Option<usize>,
        #[arg(long, short = 'k')]
        degree: Option<i64>,
    },
    /// Summarize the checks of several fixtures.
    Report {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_delimiter = ',', value_parser = parse_check_set)]
        checks: Vec<CheckSet>,
        /// JSON instead of a table.
        #[arg(long)]
        machine_readable: bool,
    },
}

fn parse_check_set(s: &str) -> Result<CheckSet, String> {
    s.parse()
}

fn parse_position(s: &str) -> Result<Position, String> {
    s.parse()
}

fn run(cli: Cli, stderr: &mut String) -> Result<Outcome, CliError> {
    let style = Style {
        color: match cli.color {
            Color::Always => true,
            Color::Never => false,
            Color::Auto => std::io::stdout().is_terminal(),
        },
    };
    match cli.command {
        Command::Check { paths, checks } => commands::check(&paths, &checks, style, stderr),
        Command::Solve { path, degree, position } => commands::solve(&path, degree, position),
        Command::Render { path, diagram, degree } => match (path, diagram) {
            (_, Some(text)) => commands::render_diagram(&text),
            (Some(path), None) => commands::render_fixture(&path, degree),
            (None, None) => Err(CliError::input("nothing to render")),
        },
        Command::QuiverDecompose { path } => commands::quiver_decompose(&path),
        Command::BaseChange { path, kappa, refine } => commands::base_change(path.as_deref(), kappa, refine.as_ref()),
        Command::Koszul { path, subset, slot, degree } => commands::koszul(&path, &subset, degree, slot),
        Command::Report { paths, checks, machine_readable } => {
            commands::report(&paths, &checks, machine_readable, style, stderr)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { Exit::Input } else { Exit::Pass };
            return ExitCode::from(code as u8);
        }
    };
    let mut stderr = String::new();
    let result = run(cli, &mut stderr);
    eprint!("{stderr}");
    match result {
        Ok(Outcome { stdout, exit }) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = out.write_all(stdout.as_bytes());
            ExitCode::from(exit as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit as u8)
        }
    }
}
