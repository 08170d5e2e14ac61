use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fock_compress::coder::SymbolOrder;
use fock_compress::experiments::{self as ex, ExperimentConfig, OutputFormat};
use fock_compress::Error;

#[derive(Parser)]
#[command(name = "fock-compress", version, about = "One-to-one quantum compression into photon-number codewords")]
#[command(after_help = "Exit status: 0 success, 1 a property check failed, 2 invalid configuration.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Codebook for the three-letter source (default theta 45, n 3).
    #[command(after_help = ex::TABLE3_COLUMNS)]
    Table3 {
        #[command(flatten)]
        common: Common,
        /// Use the canonical counting rule instead of the published row order.
        #[arg(long)]
        canonical: bool,
    },
    /// Bounds, energy ratio and Landauer audit over a theta x n grid.
    #[command(after_help = ex::SWEEP_COLUMNS)]
    Sweep(Common),
    /// Seeded decode(encode(x)) fidelity suite.
    #[command(after_help = ex::ROUNDTRIP_COLUMNS)]
    Roundtrip {
        #[command(flatten)]
        common: Common,
        /// Random superpositions per grid point.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Typical-subspace baseline next to the 1-1 scheme.
    #[command(after_help = ex::SCHUMACHER_COLUMNS)]
    Schumacher(Common),
    /// Two-letter optical network, stage by stage.
    #[command(after_help = ex::CIRCUIT_COLUMNS)]
    CircuitDemo(Common),
    /// Lower bounds on the average codeword length.
    #[command(after_help = ex::BOUNDS_COLUMNS)]
    Bounds(Common),
}

#[derive(Copy, Clone, ValueEnum)]
enum Order {
    VFirst,
    HFirst,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    /// Source angle in degrees, exclusive range (0, 180). Repeat or comma-separate.
    #[arg(long, value_delimiter = ',')]
    theta: Vec<f64>,
    /// Letters per message. Repeat or comma-separate.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Typicality window for the schumacher baseline.
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, value_enum, default_value = "v-first")]
    symbol_order: Order,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Largest number of sequences to enumerate per grid point.
    #[arg(long, default_value_t = fock_compress::source::DEFAULT_ENUMERATION_CAP)]
    cap: u64,
}

impl Common {
    fn config(&self) -> ExperimentConfig {
        ExperimentConfig {
            theta_degrees: self.theta.clone(),
            n_values: self.n.clone(),
            epsilon: self.epsilon,
            symbol_order: match self.symbol_order {
                Order::VFirst => SymbolOrder::VFirst,
                Order::HFirst => SymbolOrder::HFirst,
            },
            format: match self.format {
                Format::Csv => OutputFormat::Csv,
                Format::Json => OutputFormat::Json,
            },
            seed: self.seed,
            cap: self.cap,
            ..Default::default()
        }
    }
}

fn run(cmd: Command) -> fock_compress::Result<(String, bool)> {
    let out = match cmd {
        Command::Table3 { common, canonical } => {
            let cfg = ExperimentConfig { canonical, ..common.config() };
            let t = ex::table3(&cfg)?;
            (t.render(cfg.format)?, t.failed)
        }
        Command::Sweep(c) => {
            let cfg = c.config();
            let t = ex::sweep(&cfg)?;
            (t.render(cfg.format)?, t.failed)
        }
        Command::Roundtrip { common, samples } => {
            let cfg = ExperimentConfig { samples, ..common.config() };
            let t = ex::roundtrip(&cfg)?;
            (t.render(cfg.format)?, t.failed)
        }
        Command::Schumacher(c) => {
            let cfg = c.config();
            let t = ex::schumacher(&cfg)?;
            (t.render(cfg.format)?, t.failed)
        }
        Command::CircuitDemo(c) => {
            let cfg = c.config();
            let d = ex::circuit_demo(&cfg)?;
            (d.render(cfg.format)?, d.failed())
        }
        Command::Bounds(c) => {
            let cfg = c.config();
            let t = ex::bounds(&cfg)?;
            (t.render(cfg.format)?, t.failed)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, failed)) => {
            print!("{text}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e @ Error::Config(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
