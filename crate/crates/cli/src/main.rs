use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use meadow_cli::commands::{self, CliError, Limits};
use meadow_cli::descriptor::Descriptor;
use meadow_cli::report::Report;

/// Finite commutative rings, generalized inverses and meadows.
///
/// Rings are named by descriptors: `zmod:N`, `gf:P^K` (P prime),
/// `prod:(D,D,...)` or `file:PATH` for a meadowspec table file.
#[derive(Parser, Debug)]
#[command(name = "meadow", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    /// Largest carrier to construct [default: 512 for table files, 4096 otherwise].
    #[arg(long, global = true)]
    max_order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the ring axioms and decide whether the ring is a meadow.
    Check { desc: Descriptor },
    /// Print the generalized inverse of every element.
    Invtable { desc: Descriptor },
    /// Split a meadow into Galois fields along its minimal idempotents.
    Decompose { desc: Descriptor },
    /// List every meadow of order N up to isomorphism.
    Classify { n: u64 },
    /// Decide whether two meadows are isomorphic.
    Isomorphic { left: Descriptor, right: Descriptor },
    /// Count self-inverse and invertible elements.
    Count { desc: Descriptor },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let limits = Limits::new(cli.max_order);
    match &cli.command {
        Command::Check { desc } => commands::check(desc, limits),
        Command::Invtable { desc } => commands::invtable(desc, limits),
        Command::Decompose { desc } => commands::decompose_cmd(desc, limits),
        Command::Classify { n } => commands::classify(*n),
        Command::Isomorphic { left, right } => commands::isomorphic(left, right, limits),
        Command::Count { desc } => commands::count(desc, limits),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Human => report.render_human(),
        Format::Machine => report.render_machine(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", render(&report, cli.format));
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(report)) => {
            print!("{}", render(&report, cli.format));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
