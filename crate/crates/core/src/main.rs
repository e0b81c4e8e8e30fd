use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use joinortho::cli::{self, Bounds, CliError, OutputFormat, RunConfig, EXIT_USAGE};
use joinortho::IntTuple;

/// Decide whether every pair of graphs with the given component sizes has a
/// join with exactly two distinct eigenvalues.
#[derive(Parser)]
#[command(name = "joinortho", version)]
struct Opt {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one pair of size tuples.
    Classify(PairArgs),
    /// Print a pair of compatible 0-1 matrices certifying a pair.
    Witness(PairArgs),
    /// Classify every pair within the bounds.
    Enumerate(RangeArgs),
    /// Check the implication chain over every pair within the bounds.
    VerifyChain(RangeArgs),
    /// List pairs separating the sufficient and necessary conditions.
    GapHunt(RangeArgs),
    /// Regenerate a reference table (available: pm-join-paths).
    Table(TableArgs),
}

#[derive(Args)]
struct Common {
    /// Node budget per exact search, or "unlimited".
    #[arg(long, default_value = "10000000", value_parser = cli::parse_budget)]
    budget: u64,
    /// Output format: json, csv or text.
    #[arg(long, default_value = "json")]
    format: OutputFormat,
}

#[derive(Args)]
struct PairArgs {
    /// Component sizes of the first graph, e.g. 2,2 or 3,1^5.
    #[arg(long)]
    m: IntTuple,
    /// Component sizes of the second graph.
    #[arg(long)]
    n: IntTuple,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct RangeArgs {
    /// Largest total of either tuple.
    #[arg(long, default_value_t = 7)]
    max_total: u32,
    /// Largest length of the shorter tuple.
    #[arg(long, default_value_t = 5)]
    max_k: usize,
    /// Largest length of the longer tuple.
    #[arg(long, default_value_t = 5)]
    max_l: usize,
    /// Only this length for the shorter tuple.
    #[arg(long)]
    k: Option<usize>,
    /// Only this length for the longer tuple.
    #[arg(long)]
    l: Option<usize>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TableArgs {
    id: String,
    #[command(flatten)]
    common: Common,
}

fn pair_config(a: PairArgs) -> RunConfig {
    RunConfig {
        m: Some(a.m),
        n: Some(a.n),
        budget: a.common.budget,
        format: a.common.format,
        ..RunConfig::default()
    }
}

fn range_config(a: RangeArgs) -> RunConfig {
    RunConfig {
        bounds: Bounds {
            max_total: a.max_total,
            max_k: a.max_k,
            max_l: a.max_l,
            k: a.k,
            l: a.l,
        },
        budget: a.common.budget,
        format: a.common.format,
        jobs: a.jobs,
        ..RunConfig::default()
    }
}

fn run(opt: Opt) -> Result<cli::CmdOutput, CliError> {
    match opt.command {
        Command::Classify(a) => cli::cmd_classify(&pair_config(a)),
        Command::Witness(a) => cli::cmd_witness(&pair_config(a)),
        Command::Enumerate(a) => cli::cmd_enumerate(&range_config(a)),
        Command::VerifyChain(a) => cli::cmd_verify_chain(&range_config(a)),
        Command::GapHunt(a) => cli::cmd_gap_hunt(&range_config(a)),
        Command::Table(a) => {
            let config = RunConfig {
                budget: a.common.budget,
                format: a.common.format,
                ..RunConfig::default()
            };
            cli::cmd_table(&a.id, &config)
        }
    }
}

fn main() -> ExitCode {
    let opt = match Opt::try_parse() {
        Ok(opt) => opt,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(opt) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
