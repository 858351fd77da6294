//! `wreathdet`: determinants of irreducible representations of `Z_r ≀ S_n`.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Resource guard: multipartitions enumerated per command.
const DEFAULT_CAP: u128 = 10_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "wreathdet",
    version,
    about = "Determinant characters of irreducible representations of G(n, r) = Z_r wr S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Refuse commands that would enumerate more multipartitions than this.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u128,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    /// CSV for tables, plain text otherwise.
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinant of one irreducible, e.g. `det '2,1;;1'`.
    Det {
        multipartition: String,
        /// Expected number of components.
        #[arg(long)]
        r: Option<usize>,
        /// Recompute through eigenvalue multiplicities and compare.
        #[arg(long)]
        check: bool,
    },
    /// Counts by determinant for one n, aggregate or over one composition.
    Count {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Restrict to multipartitions on the orderings of this composition.
        #[arg(long)]
        composition: Option<String>,
        /// Compare with the second counting path or the closed formulas.
        #[arg(long)]
        check: bool,
        /// Treat disagreements with published statements as failures.
        #[arg(long)]
        strict_paper: bool,
    },
    /// One row of counts per n = 1..=N.
    Table {
        #[arg(long)]
        r: usize,
        /// Largest n.
        #[arg(long)]
        n: usize,
        /// Also write log2 plot data here (defaults next to --out).
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Compare with the second counting path and the bundled published table.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        strict_paper: bool,
    },
    /// Sufficient conditions and special families for a composition.
    Classify {
        composition: String,
        /// Number of parts; the composition is padded with zeros up to it.
        #[arg(long)]
        r: Option<usize>,
        /// Enumerate every multipartition on every ordering and test the verdict.
        #[arg(long)]
        check: bool,
    },
    /// Run every formula-vs-enumeration check.
    Verify {
        /// Ranks to cover.
        #[arg(long, value_delimiter = ',', default_values_t = vec![2usize, 3, 5])]
        r: Vec<usize>,
        /// Largest n.
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long)]
        strict_paper: bool,
        /// Test hook: corrupt one count so the run must fail.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Irreducibles of degree prime to p: generating function and enumeration.
    Mp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: u64,
    },
}

/// A failed run: message for standard error and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

/// The result of a command: main output, diagnostics, and whether every
/// two-way comparison agreed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub extra_files: Vec<(PathBuf, String)>,
    pub mismatch: bool,
}

impl From<wreathdet::Error> for Failure {
    fn from(err: wreathdet::Error) -> Self {
        let code = match err {
            wreathdet::Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: err.to_string() }
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    if let Some(workers) = cli.common.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build_global()
            .map_err(|e| Failure { code: 2, message: format!("worker pool: {e}") })?;
    }
    let c = &cli.common;
    let json = c.format == Format::Json;
    match cli.command {
        Command::Det { multipartition, r, check } => commands::det(&multipartition, r, check, json),
        Command::Count { n, r, composition, check, strict_paper } => {
            commands::count(n, r, composition.as_deref(), check, strict_paper, json, c.cap)
        }
        Command::Table { r, n, plot, check, strict_paper } => {
            let plot = plot.or_else(|| c.out.as_ref().map(|o| o.with_extension("log2.csv")));
            commands::table(r, n, plot, check, strict_paper, json, c.cap)
        }
        Command::Classify { composition, r, check } => commands::classify(&composition, r, check, json, c.cap),
        Command::Verify { r, n, strict_paper, inject_fault } => {
            commands::verify(r, n, strict_paper, inject_fault, json, c.cap)
        }
        Command::Mp { n, r, p } => commands::mp(n, r, p, json, c.cap),
    }
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.common.out.clone();
    let result = run(cli).and_then(|outcome| {
        match &out {
            Some(path) => write_file(path, &outcome.stdout)?,
            None => {
                let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
            }
        }
        for (path, contents) in &outcome.extra_files {
            write_file(path, contents)?;
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
            if outcome.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
