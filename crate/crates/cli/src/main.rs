use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gmr_cli::commands::{self, exit};
use gmr_cli::report::{emit_batch, Format};
use gmr_cli::{Command, Flags, MethodChoice, Suite};
use gmr_core::{Flavor, Method};

/// Finite generalized matrix rings: axioms, ideals, quotients and the Baer radical.
#[derive(Parser)]
#[command(name = "gmr", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Cap on group and ring orders.
    #[arg(long, global = true)]
    max_order: Option<usize>,

    /// Cap on ring order for ideal-lattice methods.
    #[arg(long, global = true)]
    max_lattice: Option<usize>,

    /// Cap on carrier size for m-step graphs.
    #[arg(long, global = true)]
    max_radical: Option<usize>,

    /// Run over every *.json spec in DIR instead of a single SPEC.
    #[arg(long, global = true, value_name = "DIR")]
    seed_corpus: Option<PathBuf>,

    /// Include wall-clock time (makes reports non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Γ-axioms and the assembled ring.
    Check { spec: Option<PathBuf> },
    /// Compute the Baer radical.
    Radical {
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// List ideals with their primality.
    Ideals {
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FlavorArg::Gm)]
        flavor: FlavorArg,
    },
    /// Quotient by a named ideal.
    Quotient {
        spec: Option<PathBuf>,
        #[arg(long)]
        ideal: String,
    },
    /// Baer radicals of the component Γ-rings.
    Components { spec: Option<PathBuf> },
    /// Verify the isomorphism and radical claims.
    Verify {
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    M,
    PrimesGm,
    PrimesRing,
    Nilpotent,
    GmMax,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Gm,
    Ring,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Iso,
    Radical,
    All,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::INVALID as u8 } else { 0 });
        }
    };
    let (spec, command) = match cli.command {
        Cmd::Check { spec } => (spec, Command::Check),
        Cmd::Radical { spec, method } => (
            spec,
            Command::Radical(match method {
                MethodArg::M => MethodChoice::One(Method::MNilpotent),
                MethodArg::PrimesGm => MethodChoice::One(Method::PrimesGm),
                MethodArg::PrimesRing => MethodChoice::One(Method::PrimesRing),
                MethodArg::Nilpotent => MethodChoice::One(Method::NilpotentIdeal),
                MethodArg::GmMax => MethodChoice::One(Method::GmMaximal),
                MethodArg::All => MethodChoice::All,
            }),
        ),
        Cmd::Ideals { spec, flavor } => (
            spec,
            Command::Ideals(match flavor {
                FlavorArg::Gm => Flavor::Gm,
                FlavorArg::Ring => Flavor::Ring,
            }),
        ),
        Cmd::Quotient { spec, ideal } => (spec, Command::Quotient(ideal)),
        Cmd::Components { spec } => (spec, Command::Components),
        Cmd::Verify { spec, suite } => (
            spec,
            Command::Verify(match suite {
                SuiteArg::Iso => Suite::Iso,
                SuiteArg::Radical => Suite::Radical,
                SuiteArg::All => Suite::All,
            }),
        ),
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let flags = Flags {
        max_order: cli.max_order,
        max_lattice: cli.max_lattice,
        max_radical: cli.max_radical,
        timing: cli.timing,
    };
    let code = match (spec, cli.seed_corpus) {
        (Some(path), None) => {
            let report = commands::run_file(&path, &command, &flags);
            print!("{}", report.emit(format));
            report.exit
        }
        (None, Some(dir)) => match commands::run_corpus(&dir, &command, &flags) {
            Ok(reports) => {
                let (text, code) = emit_batch(&reports, format);
                print!("{text}");
                code
            }
            Err(e) => {
                eprintln!("gmr: {e}");
                exit::INVALID
            }
        },
        _ => {
            eprintln!("gmr: give exactly one of SPEC or --seed-corpus DIR");
            exit::INVALID
        }
    };
    ExitCode::from(code as u8)
}
