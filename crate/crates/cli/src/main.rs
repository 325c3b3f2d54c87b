//! `nsplit`: derive the defining relations of split algebraic structures
//! (dendriform, tridendriform, NS) from a category presentation, and verify
//! operator identities on exact structure-constant algebras.
//!
//! Exit codes: 0 = all checks passed, 1 = a mathematical identity failed
//! (witnesses are printed), 2 = malformed input or usage error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "nsplit", version, about = "Splitting engine and exact operator workbench")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Tex,
}

#[derive(Subcommand)]
enum Commands {
    /// Derive the split relation system of a category presentation.
    Split {
        /// Bundled presentation name (associative, lie, leibniz, pre-lie,
        /// nap, commutative-associative).
        #[arg(long, conflicts_with = "spec")]
        catalog: Option<String>,
        /// Spec file with a `category` section.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Splitting scheme.
        #[arg(long, default_value = "ns")]
        scheme: String,
        /// Rewrite the derived system through the anticommutative reduction
        /// (single product ×).
        #[arg(long)]
        reduce_anticommutative: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the output to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check an operator identity or a membership property from a spec file.
    Check {
        /// Spec file describing the algebra and operator.
        #[arg(long, conflicts_with = "example")]
        spec: Option<PathBuf>,
        /// Bundled example name (see `nsplit catalog`).
        #[arg(long)]
        example: Option<String>,
        /// One of: category, bimodule, bimodule-algebra, cocycle, nijenhuis,
        /// rb, relative-rb, twisted, reynolds. Defaults to the operator kind.
        #[arg(long)]
        check: Option<String>,
        /// Product of the algebra to test for `--check category`.
        #[arg(long)]
        op: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a brute-force oracle against a spec file.
    Verify {
        #[arg(long, conflicts_with = "example")]
        spec: Option<PathBuf>,
        #[arg(long)]
        example: Option<String>,
        /// One of: xstar, pairsij, cross-check.
        #[arg(long)]
        oracle: String,
        /// Maximum monomial length for the xstar oracle (2..=5).
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Maximum total power for the pairsij oracle.
        #[arg(long, default_value_t = 6)]
        max_pow: usize,
        /// Worker threads for the xstar oracle.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List bundled presentations, algebras and operator examples.
    Catalog {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Outcome of a command: rendered output plus the exit status.
pub struct Outcome {
    pub output: String,
    pub failed: bool,
}

impl Outcome {
    fn pass(output: String) -> Self {
        Outcome {
            output,
            failed: false,
        }
    }

    fn fail(output: String) -> Self {
        Outcome {
            output,
            failed: true,
        }
    }
}

fn run() -> Result<Outcome, String> {
    let cli = Cli::parse();
    let (outcome, output_path) = match cli.command {
        Commands::Split {
            catalog,
            spec,
            scheme,
            reduce_anticommutative,
            format,
            output,
        } => (
            commands::cmd_split(catalog, spec, &scheme, reduce_anticommutative, format)?,
            output,
        ),
        Commands::Check {
            spec,
            example,
            check,
            op,
            output,
        } => (commands::cmd_check(spec, example, check, op)?, output),
        Commands::Verify {
            spec,
            example,
            oracle,
            max_len,
            max_pow,
            jobs,
            output,
        } => (
            commands::cmd_verify(spec, example, &oracle, max_len, max_pow, jobs)?,
            output,
        ),
        Commands::Catalog { json, output } => (commands::cmd_catalog(json)?, output),
    };
    if let Some(path) = output_path {
        std::fs::write(&path, &outcome.output)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    } else {
        print!("{}", outcome.output);
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    match run() {
        Ok(outcome) if outcome.failed => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
