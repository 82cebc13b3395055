//! `vlink`: Gauss-code invariants, moves and presentations from the command
//! line. Every command prints one JSON document with sorted keys.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad code, failed axiom,
//! illegal move), 2 on a usage error.

mod commands;
mod targets;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(name = "vlink", version, about = "Virtual and welded knot invariants from Gauss codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    Quandle,
    Group,
    Biquandle,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Gauss code, catalog name, or JSON file (ribbon data,
    /// double point data, group, quandle or biquandle tables).
    Validate { input: String },
    /// Supporting genus and realizability.
    Genus { code: String },
    /// Genus, abelianization and coloring counts.
    Invariants {
        code: String,
        /// Target specs; defaults to the built-in libraries.
        #[arg(long, num_args = 1..)]
        targets: Vec<String>,
    },
    /// Diagram presentation.
    Present {
        code: String,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Abelianization of the link group.
    Abelianize { code: String },
    /// Reidemeister and forbidden moves.
    Move {
        #[command(subcommand)]
        action: MoveAction,
    },
    /// Ribbon data of the Tube map.
    Tube { code: String },
    /// Quandle presentation of ribbon data read from a JSON file.
    RibbonQuandle { ribbon: String },
    /// Double point data of the spun knot and its sheet biquandle.
    Spin { code: String },
    /// Built-in named codes.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum MoveAction {
    /// Every applicable move site.
    List {
        code: String,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Apply one move. `--site` is the site JSON (as printed by `move list`)
    /// or an index into the listed sites of that kind.
    Apply {
        code: String,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        site: String,
    },
    /// Breadth-first orbit up to `--depth` moves, deduplicated by canonical form.
    Orbit {
        code: String,
        #[arg(long)]
        depth: usize,
        /// Allow the forbidden move.
        #[arg(long)]
        welded: bool,
        /// Stop after this many distinct codes.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

fn run(cli: Cli) -> Result<serde_json::Value, CliError> {
    use commands::*;
    match cli.command {
        Command::Validate { input } => validate(&input),
        Command::Genus { code } => genus(&code),
        Command::Invariants { code, targets } => invariants(&code, &targets),
        Command::Present { code, kind } => present(&code, kind),
        Command::Abelianize { code } => abelianize(&code),
        Command::Move { action } => match action {
            MoveAction::List { code, kind } => move_list(&code, kind.as_deref()),
            MoveAction::Apply { code, kind, site } => move_apply(&code, &kind, &site),
            MoveAction::Orbit { code, depth, welded, cap } => move_orbit(&code, depth, welded, cap),
        },
        Command::Tube { code } => tube(&code),
        Command::RibbonQuandle { ribbon } => ribbon_quandle(&ribbon),
        Command::Spin { code } => spin(&code),
        Command::Catalog { action } => match action {
            CatalogAction::List => catalog_list(),
            CatalogAction::Show { name } => catalog_show(&name),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => {
            // A closed pipe downstream is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
