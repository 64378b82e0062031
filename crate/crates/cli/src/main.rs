use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use difun_cli::enumerate::{cmd_enumerate, Selection};
use difun_cli::rank::{cmd_closure, cmd_rank};
use difun_cli::tables::{cmd_tables, Format};
use difun_cli::verify::{cmd_verify, Depth, VerificationPlan, DEFAULT_VERIFY_BUDGET};
use difun_cli::{CliError, CliResult};

/// Ranks of ideals of the inverse semigroup of difunctional relations.
#[derive(Parser)]
#[command(name = "difun", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rank(I_r) for 0 ≤ r ≤ n ≤ max-n and rank(D_n).
    Tables {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suites for one n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Depth::Closure)]
        depth: Depth,
        /// Budget in units of one product each, shared by all checks.
        #[arg(long, default_value_t = DEFAULT_VERIFY_BUDGET)]
        budget: u128,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Write the elements of J_r (or I_r with --ideal, or D_n without --r)
    /// as JSON Lines followed by a count line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        ideal: bool,
        /// Output file, `-` for stdout.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the rank report of I_r as JSON.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Close generators (a JSON array, or JSON Lines from `enumerate`) under the diamond product.
    Closure {
        #[arg(long)]
        gens: PathBuf,
    },
}

fn print_json(value: &impl serde::Serialize) -> CliResult<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Tables { max_n, format } => {
            print!("{}", cmd_tables(max_n, format)?);
        }
        Command::Verify {
            n,
            depth,
            budget,
            json,
        } => {
            let report = cmd_verify(VerificationPlan::new(n, depth, budget)?)?;
            if json {
                print_json(&report)?;
            } else {
                print!("{}", report.render_text());
            }
            return Ok(report.exit_code());
        }
        Command::Enumerate { n, r, ideal, out } => {
            let sel = Selection { n, r, ideal };
            if out.as_os_str() == "-" {
                cmd_enumerate(sel, &mut BufWriter::new(io::stdout().lock()))?;
            } else {
                let count = cmd_enumerate(sel, &mut BufWriter::new(File::create(&out)?))?;
                eprintln!("wrote {count} elements to {}", out.display());
            }
        }
        Command::Rank { n, r } => print_json(&cmd_rank(n, r)?)?,
        Command::Closure { gens } => print_json(&cmd_closure(&gens)?)?,
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
