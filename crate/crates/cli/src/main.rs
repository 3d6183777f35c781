use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use rsdprng::key::KeySource;
use rsdprng_cli::commands::{self, CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "rsdprng",
    version,
    about = "Rank-metric syndrome-decoding pseudo-random generator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in parameter sets.
    Params,
    /// Generate a random systematic parity-check matrix and write a key file.
    #[command(group(ArgGroup::new("source").required(true).args(["seed64", "os"])))]
    Keygen {
        #[arg(long)]
        preset: String,
        /// Reproducible key from a 64-bit seed.
        #[arg(long)]
        seed64: Option<u64>,
        /// Key from the operating system's entropy source.
        #[arg(long)]
        os: bool,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Produce pseudo-random bytes.
    Gen {
        #[arg(long)]
        key: PathBuf,
        /// Seed, hex, LSB-first within bytes.
        #[arg(long)]
        seed: String,
        /// Initialization vector, hex, LSB-first within bytes.
        #[arg(long)]
        iv: String,
        #[arg(long)]
        nbytes: usize,
        /// Output file; stdout when absent.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Measure throughput.
    Bench {
        #[arg(long, default_value = "fast-128")]
        preset: String,
        #[arg(long, default_value_t = 2.0)]
        seconds: f64,
    },
    /// Estimate attack costs for (n, k, w) with m = n.
    Estimate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        lambda: usize,
    },
    /// Monobit and runs tests on a file.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run built-in consistency checks.
    Selftest,
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Params => print!("{}", commands::params_table()),
        Command::Keygen {
            preset,
            seed64,
            os,
            out,
        } => {
            let source = match (seed64, os) {
                (Some(s), false) => KeySource::Seed64(s),
                (None, true) => KeySource::Os,
                _ => {
                    return Err(CliError::Validation(
                        "give exactly one of --seed64 or --os".into(),
                    ))
                }
            };
            let bytes = commands::keygen_bytes(&preset, source)?;
            fs::write(&out, bytes).map_err(io_err(&out))?;
        }
        Command::Gen {
            key,
            seed,
            iv,
            nbytes,
            out,
        } => {
            let key_bytes = fs::read(&key).map_err(io_err(&key))?;
            let bytes = commands::gen_bytes(&key_bytes, &seed, &iv, nbytes)?;
            match out {
                Some(path) => fs::write(&path, bytes).map_err(io_err(&path))?,
                None => {
                    let stdout = Path::new("<stdout>");
                    let mut lock = io::stdout().lock();
                    lock.write_all(&bytes).map_err(io_err(stdout))?;
                    lock.flush().map_err(io_err(stdout))?;
                }
            }
        }
        Command::Bench { preset, seconds } => {
            print!("{}", commands::bench_report(&preset, seconds)?)
        }
        Command::Estimate { n, k, w, lambda } => {
            println!("{}", commands::estimate_report(n, k, w, lambda)?);
        }
        Command::Stats { input } => {
            let bytes = fs::read(&input).map_err(io_err(&input))?;
            let report = commands::stats_report(&bytes)?;
            println!("{report}");
            return Ok(report.passes());
        }
        Command::Selftest => {
            let report = commands::selftest();
            print!("{report}");
            return Ok(report.passes());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
