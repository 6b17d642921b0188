use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ordbase::commands::{self, ApproxDomain, Domain};
use ordbase::json::{read_json, report_json, MultiUtilityFile, PosetFile};
use ordbase::suites::{run_suite, Suite};
use ordbase::CliError;
use ordbase_core::poset::DEFAULT_EXHAUSTIVE_BOUND;

/// Order-theoretic checks, enumerations and emitters.
#[derive(Parser)]
#[command(name = "ordbase", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a report suite on a poset file and write a JSON report.
    Check {
        /// Poset JSON file.
        file: PathBuf,
        /// Suite to run.
        #[arg(long, value_enum, default_value = "theorems")]
        suite: Suite,
        /// Largest poset handled by the exhaustive oracles.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BOUND)]
        bound: usize,
        /// Seed for randomized items.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Multi-utility JSON file for the mu suite.
        #[arg(long)]
        mu: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the first elements of an enumeration.
    Enumerate {
        #[arg(value_enum)]
        domain: Domain,
        /// Dimension for majorization, alphabet size for strings.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// How many elements.
        #[arg(long, default_value_t = 10)]
        count: u64,
    },
    /// Print the first outputs of a way-below emitter.
    Emit {
        #[arg(value_enum)]
        domain: Domain,
        /// Dimension for majorization, alphabet size for strings.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// How many steps.
        #[arg(long, default_value_t = 10)]
        steps: u64,
    },
    /// Approximate a point from below.
    Approx {
        #[arg(value_enum)]
        domain: ApproxDomain,
        /// `(p/q,...)` for majorization, `sqrt2` for reals.
        target: String,
        /// Tolerance for majorization.
        #[arg(long, default_value = "1/10")]
        eps: String,
        /// Interval width for reals.
        #[arg(long, default_value = "1/1024")]
        width: String,
    },
    /// Print the finite counterexample gallery.
    Gallery,
    /// Print a fixed walkthrough of the computable constructions.
    Demo,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let mut stdout = std::io::stdout().lock();
    let text = match cli.command {
        Command::Check { file, suite, bound, seed, mu, out } => {
            let poset = read_json::<PosetFile>(&file)?.to_poset()?;
            let extra = match mu {
                Some(path) => Some(read_json::<MultiUtilityFile>(&path)?.to_multi_utility(&poset)?),
                None => None,
            };
            let report = run_suite(&poset, suite, bound, seed, extra.as_ref())?;
            let json = report_json(suite.name(), poset.len(), bound, seed, &report);
            let mut text = serde_json::to_string_pretty(&json)?;
            text.push('\n');
            let ok = json.failures == 0;
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?,
                None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source })?,
            }
            return Ok(ok);
        }
        Command::Enumerate { domain, n, count } => commands::enumerate(domain, n, count)?,
        Command::Emit { domain, n, steps } => commands::emit(domain, n, steps)?,
        Command::Approx { domain: ApproxDomain::Majorization, target, eps, .. } => commands::approx_majorization(&target, &eps)?,
        Command::Approx { domain: ApproxDomain::Real, target, width, .. } => commands::approx_real(&target, &width)?,
        Command::Gallery => {
            let (text, ok) = commands::gallery_text();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source })?;
            return Ok(ok);
        }
        Command::Demo => commands::demo(),
    };
    stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source })?;
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
