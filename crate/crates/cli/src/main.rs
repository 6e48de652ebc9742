use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use simdim::families::{sample_members, SampleMode};
use simdim::format::{parse_family, parse_graph, write_family, write_graph};
use simdim::products::{corona_named, join_named, Naming};
use simdim::resolving::{gamma, gamma_prime, min_generator_with, simultaneous_gamma, SearchConfig, DEFAULT_BUDGET};
use simdim::verify::{all_passed, choose_basis, load_suite, run_suite, BasisChoice};
use simdim::{Error, GraphFamily, MetricSelector, VertexSet};

/// Exact simultaneous metric and adjacency dimensions of small graph families.
///
/// Vertex labels in output are 0-based positions after the input labels are sorted.
#[derive(Parser)]
#[command(name = "simdim", version)]
struct Cli {
    #[command(flatten)]
    search: SearchFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SearchFlags {
    /// Maximum number of candidate sets an exact search may examine.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Run every search on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
}

impl SearchFlags {
    fn config(&self) -> SearchConfig {
        SearchConfig { budget: self.budget, parallel: !self.sequential }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of a single graph with a lexicographically first basis.
    Dim {
        file: PathBuf,
        /// `full`, `adj` or `t=<k>`.
        #[arg(long, default_value = "adj")]
        metric: MetricSelector,
    },
    /// Simultaneous dimension of a family file.
    Sdim {
        file: PathBuf,
        #[arg(long, default_value = "adj")]
        metric: MetricSelector,
    },
    /// Domination number, simultaneous domination number or γ'.
    Gamma {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GammaVariant::Gamma)]
        variant: GammaVariant,
    },
    /// Corona or join of two single-graph files.
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        g: PathBuf,
        h: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Name products with `_odot_` and `_plus_`.
        #[arg(long)]
        ascii: bool,
    },
    /// Permutation families.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Runs a suite file and prints one report per scenario.
    Verify { suite: PathBuf },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Samples members of G_B(G), starting with G itself.
    Gen {
        g: PathBuf,
        /// `auto` (first basis), `dom` (first dominating basis) or an explicit set like `{0,2,6}`.
        #[arg(long, default_value = "auto")]
        basis: String,
        #[arg(long, default_value = "relabel")]
        mode: SampleMode,
        #[arg(long, default_value_t = simdim::families::DEFAULT_SAMPLE_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaVariant {
    Gamma,
    Sgamma,
    GammaPrime,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Corona,
    Join,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io { path: path.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedMetric(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let cfg = cli.search.config();
    match cli.command {
        Command::Dim { file, metric } => {
            let g = parse_graph(&read(&file)?)?;
            let (k, basis) = min_generator_with(&GraphFamily::singleton(g), metric, &cfg)?;
            println!("dim={k} basis={basis}");
        }
        Command::Sdim { file, metric } => {
            let fam = parse_family(&read(&file)?)?;
            let (k, basis) = min_generator_with(&fam, metric, &cfg)?;
            println!("sdim={k} basis={basis}");
        }
        Command::Gamma { file, variant } => {
            let text = read(&file)?;
            let value = match variant {
                GammaVariant::Gamma => gamma(&parse_graph(&text)?),
                GammaVariant::Sgamma => simultaneous_gamma(&parse_family(&text)?),
                GammaVariant::GammaPrime => gamma_prime(&parse_graph(&text)?)?,
            };
            println!("gamma={value}");
        }
        Command::Product { op, g, h, out, ascii } => {
            let g = parse_graph(&read(&g)?)?;
            let h = parse_graph(&read(&h)?)?;
            let naming = if ascii { Naming::Ascii } else { Naming::Unicode };
            let product = match op {
                ProductOp::Corona => corona_named(&g, &h, naming)?.graph,
                ProductOp::Join => join_named(&g, &h, naming)?,
            };
            emit(out.as_deref(), &write_graph(&product))?;
        }
        Command::Family(FamilyCommand::Gen { g, basis, mode, seed, count, out }) => {
            let g = parse_graph(&read(&g)?)?;
            let choice = match basis.as_str() {
                "auto" => BasisChoice::First,
                "dom" => BasisChoice::Dominating,
                set => BasisChoice::Given(VertexSet::parse(g.order(), set)?),
            };
            let b = choose_basis(&g, &choice, &cfg)?;
            let fam = sample_members(&g, &b, mode, seed, count)?;
            emit(out.as_deref(), &write_family(&fam))?;
        }
        Command::Verify { suite } => {
            let suite = load_suite(&suite)?;
            let reports = run_suite(&suite, cfg.parallel);
            for r in &reports {
                println!("{r}");
                if !r.passed() {
                    for note in r.notes.iter().chain(&r.failures) {
                        eprintln!("  {}: {note}", r.id);
                    }
                }
            }
            return Ok(all_passed(&reports));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("simdim: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
