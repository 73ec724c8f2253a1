//! `invgen` command-line front end.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::action::{format_monomial, ActionSpec, GeneratingSet};
use crate::bench::{self, BenchConfig, CsvSink};
use crate::error::{Error, Result};
use crate::growth;
use crate::instance::{random_instance, InstanceFile};
use crate::oracle::{self, OracleConfig, DEFAULT_BOX_CAP};

#[derive(Debug, Parser)]
#[command(
    name = "invgen",
    version,
    about = "Minimal monomial generators of invariant rings of (Z/p)^k"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the minimal generating set of an instance file (`-` for stdin).
    Compute {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = DEFAULT_BOX_CAP)]
        oracle_cap: u64,
        file: PathBuf,
    },
    /// Emit a random full-rank instance.
    Random {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Time both strategies on random instances and write CSV.
    Bench {
        #[arg(long, default_value = "2x3,2x4,2x5")]
        sizes: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7,11,13")]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Output path; stdout when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BOX_CAP)]
        oracle_cap: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeOptions {
    pub format: Format,
    pub check: bool,
    pub oracle: OracleConfig,
}

pub type Pipeline = fn(&ActionSpec) -> Result<GeneratingSet>;

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

pub fn run_compute(input: &str, opts: &ComputeOptions, out: &mut impl Write) -> Result<()> {
    run_compute_with(input, opts, out, growth::compute_generators)
}

/// [`run_compute`] with the generator pipeline supplied by the caller, so the
/// `--check` path can be exercised against a deliberately wrong pipeline.
pub fn run_compute_with(
    input: &str,
    opts: &ComputeOptions,
    out: &mut impl Write,
    pipeline: Pipeline,
) -> Result<()> {
    let inst = InstanceFile::parse(input)?;
    let spec = inst.to_spec()?;
    let generators = pipeline(&spec)?;

    match opts.format {
        Format::Text => {
            let names = inst.variable_names();
            for g in &generators {
                writeln!(out, "{}", format_monomial(g, &names))?;
            }
        }
        Format::Json => writeln!(out, "{}", generators.to_json())?,
    }

    if opts.check {
        let expected = oracle::oracle_atoms_with(&spec, &opts.oracle)?;
        if expected != generators {
            return Err(Error::Mismatch);
        }
        writeln!(out, "VERIFIED")?;
    }
    Ok(())
}

pub fn run_random(
    k: usize,
    n: usize,
    p: u64,
    seed: u64,
    format: Format,
    out: &mut impl Write,
) -> Result<()> {
    let inst = random_instance(k, n, p, seed)?;
    match format {
        Format::Json => writeln!(out, "{}", inst.to_json())?,
        Format::Text => write!(out, "{}", inst.to_text())?,
    }
    Ok(())
}

/// Runs the benchmark, writing CSV to `out`. Fails with [`Error::Mismatch`]
/// after all rows are written if any pair disagreed.
pub fn run_bench(config: &BenchConfig, out: impl Write) -> Result<()> {
    for &p in &config.primes {
        if !crate::action::is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
    }
    let mut sink = CsvSink::new(out);
    let records = bench::run_bench(config, |r| sink.write(r))?;
    if bench::any_mismatch(&records) {
        return Err(Error::Mismatch);
    }
    Ok(())
}

/// Dispatches a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Compute {
            format,
            check,
            oracle_cap,
            file,
        } => read_input(&file).and_then(|text| {
            let opts = ComputeOptions {
                format,
                check,
                oracle: OracleConfig {
                    max_points: oracle_cap,
                },
            };
            run_compute(&text, &opts, &mut out)
        }),
        Command::Random {
            k,
            n,
            p,
            seed,
            format,
        } => run_random(k, n, p, seed, format, &mut out),
        Command::Bench {
            sizes,
            primes,
            trials,
            csv,
            seed,
            oracle_cap,
        } => bench::parse_sizes(&sizes).and_then(|sizes| {
            let config = BenchConfig {
                sizes,
                primes,
                trials,
                seed,
                oracle: OracleConfig {
                    max_points: oracle_cap,
                },
            };
            match csv {
                Some(path) => fs::File::create(&path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
                    .and_then(|f| run_bench(&config, io::BufWriter::new(f))),
                None => run_bench(&config, &mut out),
            }
        }),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("invgen: {e}");
            e.exit_code()
        }
    }
}
