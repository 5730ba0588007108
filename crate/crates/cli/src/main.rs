use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// LDPC codes from units in GF(2) group rings.
#[derive(Debug, Parser)]
#[command(name = "grldpc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Difference collection, 4-cycle certification and unit test for an element.
    Analyze(AnalyzeArgs),
    /// Random search for sparse elements without 4-cycles.
    Search(SearchArgs),
    /// Build a check matrix (and generator) from a unit.
    Construct(ConstructArgs),
    /// BER/BLER sweep over BPSK/AWGN with belief propagation.
    Simulate(SimulateArgs),
    /// Write a matrix as alist: the image of an element, a regenerated origin, or a re-read alist.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Element text such as "c15: g0 g1 g3 g7", or a file holding it.
    element: String,
    /// Print only the JSON record.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Group such as c15, c24x4 or d10.
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 3)]
    min_support: usize,
    #[arg(long, default_value_t = 6)]
    max_support: usize,
    #[arg(long, default_value_t = 1000)]
    candidates: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep only units.
    #[arg(long)]
    require_unit: bool,
    /// Print at most this many results.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Element text or a file holding it.
    #[arg(long)]
    element: String,
    /// Code rate p/q; p/q of the columns of φ(v) are deleted.
    #[arg(long, conflicts_with_all = ["delete_cols", "avoid_conflicts", "staircase"])]
    rate: Option<String>,
    /// Explicit deleted columns, e.g. "0,2,5-9".
    #[arg(long, conflicts_with_all = ["avoid_conflicts", "staircase"])]
    delete_cols: Option<String>,
    /// Draw the deleted columns at random (with --rate).
    #[arg(long, requires = "rate")]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep only the greedy conflict-free columns.
    #[arg(long, conflicts_with = "staircase")]
    avoid_conflicts: bool,
    /// Append an m×m dual-diagonal block to m kept columns of φ(v); needs no unit.
    #[arg(long, value_name = "M")]
    staircase: Option<usize>,
    /// Exit with status 4 if the check matrix has a 4-cycle.
    #[arg(long)]
    require_girth: bool,
    /// Check matrix output (alist).
    #[arg(long)]
    out: PathBuf,
    /// Generator matrix output (alist).
    #[arg(long)]
    generator: Option<PathBuf>,
    /// Origin record output (JSON).
    #[arg(long)]
    origin: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DecoderArg {
    Sp,
    Ms,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    AllZero,
    Random,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Check matrix (alist).
    #[arg(long)]
    alist: PathBuf,
    /// Eb/N0 points in dB, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    ebno: Vec<f64>,
    #[arg(long, value_enum, default_value_t = DecoderArg::Sp)]
    decoder: DecoderArg,
    #[arg(long, default_value_t = 50)]
    max_iter: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::AllZero)]
    mode: ModeArg,
    #[arg(long, default_value_t = 100)]
    min_block_errors: u64,
    #[arg(long, default_value_t = u64::MAX)]
    max_blocks: u64,
    #[arg(long, default_value_t = 10_000_000)]
    max_bits: u64,
    /// CSV output; a JSON summary is written next to it.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Element whose matrix φ(v) is exported. Give exactly one source.
    #[arg(long)]
    element: Option<String>,
    /// Origin record (JSON) to regenerate.
    #[arg(long)]
    origin: Option<PathBuf>,
    /// Existing alist file to validate and rewrite.
    #[arg(long)]
    alist: Option<PathBuf>,
    /// Output path; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => commands::analyze(a),
        Command::Search(a) => commands::search(a),
        Command::Construct(a) => commands::construct(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Export(a) => commands::export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
