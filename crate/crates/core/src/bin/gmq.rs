use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gmq::assembly::{AssemblyParams, DEFAULT_DELTA};
use gmq::bench::{self, NodesConfig, SweepConfig};
use gmq::cube::CubeRuleKind;
use gmq::wce::DEFAULT_TRUNCATION;
use gmq::Error;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gmq",
    version,
    about = "Gaussian-measure quadrature: node generation, error sweeps, kernel checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the assembled rule as CSV.
    Nodes(NodesArgs),
    /// Worst-case error sweep over s and n, with fitted log-log slopes.
    Sweep(SweepArgs),
    /// Seeded property checks for the fractional kernel and the semigroup.
    KernelCheck(KernelCheckArgs),
    /// Emit a gnuplot script from a sweep CSV.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Midpoint,
    Fibonacci,
}

impl From<Base> for CubeRuleKind {
    fn from(b: Base) -> Self {
        match b {
            Base::Midpoint => CubeRuleKind::Midpoint1D,
            Base::Fibonacci => CubeRuleKind::Fibonacci2D,
        }
    }
}

#[derive(Args)]
struct RuleArgs {
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    delta: f64,
    #[arg(long, default_value_t = 1)]
    dim: usize,
    #[arg(long, value_enum, default_value = "midpoint")]
    base: Base,
    /// Apply the ψ change of variable to the base rule (default).
    #[arg(long, overrides_with = "no_psi")]
    psi: bool,
    #[arg(long = "no-psi")]
    no_psi: bool,
}

#[derive(Args)]
struct NodesArgs {
    #[arg(long)]
    n: u64,
    /// Target rate; defaults to --s.
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[command(flatten)]
    rule: RuleArgs,
    #[arg(long, default_value = "nodes.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated smoothness values.
    #[arg(long, value_delimiter = ',', default_values_t = bench::DEFAULT_S_VALUES)]
    s: Vec<f64>,
    /// Comma-separated node budgets (default 32,64,...,4096).
    #[arg(long, value_delimiter = ',')]
    grid: Vec<u64>,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    m: usize,
    #[command(flatten)]
    rule: RuleArgs,
    #[arg(long, default_value = "sweep.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct KernelCheckArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
}

#[derive(Args)]
struct PlotArgs {
    /// Sweep CSV.
    input: PathBuf,
    #[arg(long, default_value = "plot.gp")]
    out: PathBuf,
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Nodes(args) => {
            let a = args
                .a
                .or(args.s)
                .ok_or_else(|| Error::Usage("nodes needs --a or --s".into()))?;
            let cfg = NodesConfig {
                params: AssemblyParams::new(args.rule.dim, a, args.rule.delta, args.n)?,
                base: args.rule.base.into(),
                apply_psi: !args.rule.no_psi,
            };
            let summary = bench::cmd_nodes(&cfg, &args.out)?;
            println!("nodes: {}", summary.node_count);
            println!("radius bound: {:.6}", summary.radius_bound);
            println!("wrote {}", args.out.display());
        }
        Command::Sweep(args) => {
            let cfg = SweepConfig {
                s_values: args.s,
                n_grid: if args.grid.is_empty() {
                    bench::default_n_grid()
                } else {
                    args.grid
                },
                m: args.m,
                delta: args.rule.delta,
                dim: args.rule.dim,
                base: args.rule.base.into(),
                apply_psi: !args.rule.no_psi,
            };
            let result = bench::cmd_sweep(&cfg, &args.out)?;
            for (s, slope) in &result.slopes {
                match slope {
                    Some(v) => println!("s={s}: slope {v:.4}"),
                    None => println!("s={s}: slope unavailable"),
                }
            }
            println!("wrote {}", args.out.display());
        }
        Command::KernelCheck(args) => {
            let report = bench::cmd_kernel_check(args.seed, args.samples as usize)?;
            print!("{}", report.render());
            if !report.passed() {
                return Ok(EXIT_VIOLATION);
            }
        }
        Command::Plot(args) => {
            bench::cmd_plot(&args.input, &args.out)?;
            println!("wrote {}", args.out.display());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gmq: {e}");
            ExitCode::from(match e {
                Error::Domain(_) | Error::Usage(_) => EXIT_USAGE,
                Error::Io { .. } | Error::Parse { .. } => EXIT_IO,
                Error::Evaluation { .. } => EXIT_VIOLATION,
            })
        }
    }
}
