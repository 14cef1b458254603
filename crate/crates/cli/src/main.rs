//! `partex`: exact partition tables, divisor-sum seeds, and triangular
//! Toeplitz exponentials from the command line.

mod output;
mod seqfile;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use partex::sequences::{divisor_sum, partition_count, seed_from_flavor};
use partex::toeplitz::{seed_matrix, toeplitz_exp, toeplitz_log};
use partex::{BandMatrix, BigInt, DivisorFlavor, Rational, SeedSequence, TransformedSequence};

use output::OutputFormat;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] partex::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    SequenceParse {
        path: String,
        line: usize,
        source: partex::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

#[derive(Parser)]
#[command(
    name = "partex",
    version,
    about = "Exact partition tables, sequence transforms, and band matrix exponentials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of partition counts or divisor sums
    Table(TableArgs),
    /// Exponentiate a seed sequence: emit the transformed sequence or the matrix
    Exp(ExpArgs),
    /// Recover the seed sequence from a transformed sequence
    Log(LogArgs),
    /// List the partitions of n in canonical order
    Partitions(PartitionsArgs),
    /// Run the built-in cross-checks and report pass/fail per invariant
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Partition counts p(0)..p(N)
    P,
    /// Divisor sums sigma(1)..sigma(N)
    Sigma,
    /// Scaled divisor sums sigma(k)/k for k = 1..N
    SigmaBar,
}

#[derive(Args)]
struct FlavorArgs {
    /// Admit odd divisors (or odd partition parts) only
    #[arg(long, conflicts_with = "not_div")]
    odd: bool,
    /// Admit only divisors (or parts) not divisible by Q (Q >= 2)
    #[arg(long, value_name = "Q")]
    not_div: Option<u64>,
}

impl FlavorArgs {
    fn resolve(&self) -> Result<DivisorFlavor, CliError> {
        match (self.odd, self.not_div) {
            (false, None) => Ok(DivisorFlavor::All),
            (true, None) => Ok(DivisorFlavor::Odd),
            (false, Some(q)) => Ok(DivisorFlavor::not_div(q)?),
            (true, Some(_)) => Err(usage("--odd conflicts with --not-div")),
        }
    }
}

#[derive(Args)]
struct TableArgs {
    /// What to tabulate
    #[arg(long, value_enum)]
    kind: TableKind,
    /// Largest index of the table
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    flavor: FlavorArgs,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["seed", "file"])))]
struct ExpArgs {
    /// Built-in divisor-sum seed: sigma, sigma-odd or sigma-not-div:<q>
    #[arg(long, value_parser = parse_seed_flavor)]
    seed: Option<DivisorFlavor>,
    /// Seed sequence file, one value per line starting with s_0 = 0
    #[arg(long)]
    file: Option<PathBuf>,
    /// Matrix order N; emits N terms. Defaults to the file length
    #[arg(long)]
    order: Option<usize>,
    /// Emit the resulting band matrix as JSON instead of the sequence
    #[arg(long)]
    matrix: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Args)]
struct LogArgs {
    /// Transformed sequence file, one value per line starting with t_0 = 1
    #[arg(long)]
    file: PathBuf,
    /// Matrix order N; defaults to the file length
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Args)]
struct PartitionsArgs {
    /// The integer to partition (n >= 1)
    #[arg(long)]
    n: u64,
    /// Restrict to exactly this many summands
    #[arg(long)]
    parts: Option<u64>,
    #[command(flatten)]
    flavor: FlavorArgs,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Bound for the sequence and counting checks
    #[arg(long, default_value_t = 40)]
    max_n: usize,
    /// Matrix order for the band and dense checks
    #[arg(long, default_value_t = 12)]
    order: usize,
}

fn parse_seed_flavor(text: &str) -> Result<DivisorFlavor, String> {
    match text {
        "sigma" => Ok(DivisorFlavor::All),
        "sigma-odd" => Ok(DivisorFlavor::Odd),
        _ => {
            let modulus = text
                .strip_prefix("sigma-not-div:")
                .and_then(|q| q.parse::<u64>().ok())
                .ok_or("expected sigma, sigma-odd or sigma-not-div:<q>")?;
            DivisorFlavor::not_div(modulus).map_err(|err| err.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        // a closed pipe on the reading side is not an error worth reporting
        Err(CliError::Output(err)) if err.kind() == std::io::ErrorKind::BrokenPipe => {
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Table(args) => cmd_table(args, &mut out)?,
        Command::Exp(args) => cmd_exp(args, &mut out)?,
        Command::Log(args) => cmd_log(args, &mut out)?,
        Command::Partitions(args) => cmd_partitions(args, &mut out)?,
        Command::Verify(args) => {
            let options = verify::VerifyOptions {
                max_n: args.max_n,
                order: args.order,
            };
            if !verify::run(&options, &mut out)? {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let flavor = args.flavor.resolve()?;
    let (first_index, values): (usize, Vec<String>) = match args.kind {
        TableKind::P => (
            0,
            partition_count(args.n, flavor)?
                .iter()
                .map(BigInt::to_string)
                .collect(),
        ),
        TableKind::Sigma => (
            1,
            (1..=args.n)
                .map(|k| divisor_sum(k as u64, flavor).map(|v| v.to_string()))
                .collect::<partex::Result<_>>()?,
        ),
        TableKind::SigmaBar => (
            1,
            (1..=args.n)
                .map(|k| {
                    divisor_sum(k as u64, flavor)
                        .map(|v| Rational::new(v, BigInt::from(k)).to_string())
                })
                .collect::<partex::Result<_>>()?,
        ),
    };
    output::emit_table(out, args.format, first_index, &values)?;
    Ok(())
}

fn cmd_exp(args: ExpArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let seed = match (&args.seed, &args.file) {
        (Some(flavor), None) => {
            let order = args
                .order
                .ok_or_else(|| usage("--order is required with --seed"))?;
            if order == 0 {
                return Err(usage("--order must be at least 1"));
            }
            seed_from_flavor(order - 1, *flavor)
        }
        (None, Some(path)) => SeedSequence::new(seqfile::read_terms(path)?)?,
        _ => unreachable!("clap enforces exactly one source"),
    };
    let order = args.order.unwrap_or_else(|| seed.terms().len());
    if order == 0 {
        return Err(usage("--order must be at least 1"));
    }
    let exponential = toeplitz_exp(&seed_matrix(&seed, order)?)?;
    if args.matrix {
        writeln!(out, "{}", exponential.to_json())?;
    } else {
        let values: Vec<String> = exponential.band().iter().map(Rational::to_string).collect();
        output::emit_sequence(out, args.format, &values)?;
    }
    Ok(())
}

fn cmd_log(args: LogArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let transformed = TransformedSequence::new(seqfile::read_terms(&args.file)?)?;
    let available = transformed.terms().len();
    let order = args.order.unwrap_or(available);
    if order == 0 {
        return Err(usage("--order must be at least 1"));
    }
    if order > available {
        return Err(partex::Error::OrderExceedsSequence {
            order,
            len: available,
        }
        .into());
    }
    let matrix = BandMatrix::new(transformed.terms()[..order].to_vec())?;
    let log_band = toeplitz_log(&matrix)?;
    // band entry n holds s_n / n; scale back to the seed terms
    let values: Vec<String> = log_band
        .band()
        .iter()
        .enumerate()
        .map(|(n, value)| {
            if n == 0 {
                value.to_string()
            } else {
                (value.clone() * BigInt::from(n)).to_string()
            }
        })
        .collect();
    output::emit_sequence(out, args.format, &values)?;
    Ok(())
}

fn cmd_partitions(args: PartitionsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if args.parts == Some(0) {
        return Err(usage("--parts must be at least 1"));
    }
    let flavor = args.flavor.resolve()?;
    let listing = partex::partitions::enumerate_partitions(args.n, args.parts, flavor);
    let rendered: Vec<String> = listing.iter().map(ToString::to_string).collect();
    output::emit_partitions(out, args.format, &rendered)?;
    Ok(())
}
