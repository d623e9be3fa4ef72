//! The `rooted-partitions` command-line tool.
//!
//! ```text
//! rooted-partitions verify [--max-n 60] [--structural-max-n 25] [--identity a,b,c,d,fine] [--format pretty|tsv|json]
//! rooted-partitions table  --n N [--n-max M] [--r 1,2,3] [--k-max K] [--format ...]
//! rooted-partitions trace  <a|a-inv|b|b-inv|c|d> <partition>
//! rooted-partitions count  --n N [--n-max M] [--min-part R] [--format ...]
//! ```
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error. Data
//! goes to stdout, diagnostics to stderr. The sieve limit can be set with
//! the `ROOTED_PARTITIONS_SIEVE_LIMIT` environment variable.

mod trace;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::numtheory;
use crate::partitions::{partition_counts, statistic_row};
use crate::verify::{self, Identity, SuiteConfig};

pub use trace::{trace, MapName, TraceError};

pub const SIEVE_LIMIT_ENV: &str = "ROOTED_PARTITIONS_SIEVE_LIMIT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rooted-partitions",
    version,
    about = "Verify partition identities involving the totient and Moebius functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the identities and the maps behind them exhaustively.
    Verify(VerifyArgs),
    /// Print S_k^{>=r}(n), the number of parts equal to k over the
    /// partitions of n with smallest part at least r.
    Table(TableArgs),
    /// Apply one map to a partition and print every intermediate step.
    Trace(TraceArgs),
    /// Print the number of partitions of n.
    Count(CountArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    A,
    B,
    C,
    D,
    Fine,
}

impl From<IdentityArg> for Identity {
    fn from(arg: IdentityArg) -> Self {
        match arg {
            IdentityArg::A => Identity::A,
            IdentityArg::B => Identity::B,
            IdentityArg::C => Identity::C,
            IdentityArg::D => Identity::D,
            IdentityArg::Fine => Identity::Fine,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check the numeric identities for every n up to this bound.
    #[arg(long, default_value_t = 60)]
    pub max_n: u32,
    /// Check bijections and involutions for every n up to this bound.
    #[arg(long, default_value_t = 25)]
    pub structural_max_n: u32,
    /// Restrict to these identities (comma separated); default all.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub identity: Vec<IdentityArg>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: u32,
    /// Print every n from --n to this bound.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Minimum part sizes (comma separated).
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub r: Vec<u32>,
    /// Largest k to print; defaults to max(n, 1).
    #[arg(long)]
    pub k_max: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(value_enum)]
    pub map: MapName,
    /// Comma-separated parts with '^' marking the root, e.g. "4,4,2,1,1,^1,1,1";
    /// inverse maps take "<rooted partition> r=<residue>".
    #[arg(allow_hyphen_values = true)]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Count only partitions whose parts are all at least this large.
    #[arg(long, default_value_t = 1)]
    pub min_part: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Usage error raised after argument parsing.
#[derive(Debug)]
struct Usage(String);

type CmdResult = Result<i32, Usage>;

/// Entry point of the binary.
pub fn main() -> i32 {
    if let Some(value) = std::env::var_os(SIEVE_LIMIT_ENV) {
        match value.to_str().and_then(|s| s.trim().parse::<u64>().ok()) {
            Some(limit) if (1..=u64::from(u32::MAX)).contains(&limit) => numtheory::rebuild_sieve(limit),
            _ => {
                eprintln!("rooted-partitions: invalid {SIEVE_LIMIT_ENV}: {value:?}");
                return EXIT_USAGE;
            }
        }
    }
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first) and runs the command, writing data to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args, out),
        Command::Table(args) => cmd_table(args, out),
        Command::Trace(args) => cmd_trace(args, out),
        Command::Count(args) => cmd_count(args, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(message)) => {
            let _ = writeln!(err, "rooted-partitions: {message}");
            EXIT_USAGE
        }
    }
}

fn io_error(e: io::Error) -> Usage {
    Usage(format!("write failed: {e}"))
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let mut config = SuiteConfig::new(args.max_n, args.structural_max_n);
    if !args.identity.is_empty() {
        config.identities = args.identity.iter().map(|&i| i.into()).collect();
    }
    let suite = verify::run_suite_with(&config);
    let text = match args.format {
        Format::Tsv => verify::to_tsv(suite.rows()),
        Format::Json => verify::to_json(suite.rows()) + "\n",
        Format::Pretty => {
            let mut text = String::new();
            text.push_str(&format!(
                "{:<13} {:>4} {:>22} {:>22}  {:<6} {:>10}\n",
                "identity", "n", "lhs", "rhs", "result", "ms"
            ));
            for r in suite.rows() {
                text.push_str(&format!(
                    "{:<13} {:>4} {:>22} {:>22}  {:<6} {:>10.3}\n",
                    r.identity.to_string(),
                    r.n,
                    r.lhs,
                    r.rhs,
                    if r.passed { "pass" } else { "FAIL" },
                    r.elapsed_ms()
                ));
            }
            for s in &suite.structural {
                for f in &s.failures {
                    text.push_str(&format!("{} n={}: {f}\n", s.report.identity, s.report.n));
                }
            }
            let total = suite.rows().count();
            let failed = suite.rows().filter(|r| !r.passed).count();
            text.push_str(&format!("{} checks, {} failed\n", total, failed));
            text
        }
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(if suite.all_passed() { EXIT_OK } else { EXIT_FAILED })
}

fn range(n: u32, n_max: Option<u32>) -> Result<std::ops::RangeInclusive<u32>, Usage> {
    let hi = n_max.unwrap_or(n);
    if hi < n {
        return Err(Usage(format!("--n-max {hi} is smaller than --n {n}")));
    }
    Ok(n..=hi)
}

#[derive(Serialize)]
struct TableRow {
    n: u32,
    k: u32,
    r: u32,
    value: u128,
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> CmdResult {
    let ns = range(args.n, args.n_max)?;
    if args.r.contains(&0) {
        return Err(Usage("--r values must be positive".into()));
    }
    if args.k_max == Some(0) {
        return Err(Usage("--k-max must be positive".into()));
    }
    let mut rows = Vec::new();
    for &r in &args.r {
        for n in ns.clone() {
            let k_max = args.k_max.unwrap_or(n.max(1));
            let values = statistic_row(n, r, k_max).map_err(|e| Usage(e.to_string()))?;
            rows.extend((1..=k_max).zip(values).map(|(k, value)| TableRow { n, k, r, value }));
        }
    }
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Format::Tsv => {
            let mut text = String::from("n\tk\tr\tvalue\n");
            for row in &rows {
                text.push_str(&format!("{}\t{}\t{}\t{}\n", row.n, row.k, row.r, row.value));
            }
            text
        }
        Format::Pretty => {
            let mut text = String::new();
            for row in &rows {
                text.push_str(&format!(
                    "S_{}^(>={})({}) = {}\n",
                    row.k, row.r, row.n, row.value
                ));
            }
            text
        }
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_trace(args: &TraceArgs, out: &mut dyn Write) -> CmdResult {
    let text = trace(args.map, &args.input).map_err(|e| Usage(format!("trace: {e}")))?;
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CountRow {
    n: u32,
    min_part: u32,
    count: u128,
}

fn cmd_count(args: &CountArgs, out: &mut dyn Write) -> CmdResult {
    let ns = range(args.n, args.n_max)?;
    if args.min_part == 0 {
        return Err(Usage("--min-part must be positive".into()));
    }
    let counts = partition_counts(*ns.end(), args.min_part).map_err(|e| Usage(e.to_string()))?;
    let rows: Vec<CountRow> = ns
        .map(|n| CountRow { n, min_part: args.min_part, count: counts[n as usize] })
        .collect();
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Format::Tsv => {
            let mut text = String::from("n\tmin_part\tcount\n");
            for row in &rows {
                text.push_str(&format!("{}\t{}\t{}\n", row.n, row.min_part, row.count));
            }
            text
        }
        Format::Pretty => {
            let mut text = String::new();
            for row in &rows {
                if row.min_part == 1 {
                    text.push_str(&format!("p({}) = {}\n", row.n, row.count));
                } else {
                    text.push_str(&format!("p_(>={})({}) = {}\n", row.min_part, row.n, row.count));
                }
            }
            text
        }
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_OK)
}
