use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use ldc_core::lab::tables::type_table_tsv;
use ldc_core::lab::LabFamily;
use ldc_core::ld::gamma_l;
use ldc_core::partition::{coalition_graph, verify_ldc_partition};
use ldc_core::solver::{c_l_at_least_with, c_l_exact_with, Budget, Decision, SolveOptions, Status};
use ldc_core::{Error, Graph, Partition, Result};
use ldc_cli::input::GraphInput;
use ldc_cli::repro::{reproduce, ClaimStatus};
use ldc_cli::{decision_json, exit, exit_code};

#[derive(Parser)]
#[command(name = "ldc", version, about = "Locating-domination coalitions of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Locating-domination number and a minimum witness
    GammaL {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact C_L as a JSON report
    Cl {
        #[command(flatten)]
        input: GraphInput,
        /// Only decide whether an LDC-partition with exactly this many parts exists
        #[arg(long)]
        at_least: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify an LDC-partition (one part per line)
    CheckPartition {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Coalition graph of an LDC-partition in DOT
    CoalitionGraph {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Surviving part-size types of a cycle or path, as TSV
    TypeTable {
        #[arg(long)]
        family: LabFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        k: usize,
    },
    /// Run every claim of the reproduction suite
    Reproduce {
        /// Claim ids or groups to run; all when omitted
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Time cap for each search
        #[arg(long, env = "LDC_BUDGET_SECONDS", value_parser = positive_seconds)]
        budget_seconds: Option<f64>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct BudgetArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_nodes: Option<u64>,
    #[arg(long, env = "LDC_BUDGET_SECONDS", value_parser = positive_seconds)]
    max_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { max_nodes: self.max_nodes, max_time: self.max_seconds.map(Duration::from_secs_f64) }
    }
}

fn positive_seconds(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a positive number of seconds")),
    }
}

fn load_connected(input: &GraphInput) -> Result<Graph> {
    let g = input.load()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g)
}

fn load_partition(g: &Graph, path: &PathBuf) -> Result<Partition> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, message: format!("{}: {e}", path.display()) })?;
    Partition::parse(g.order(), &text)
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Precondition(format!("writing {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::GammaL { input } => {
            let g = load_connected(&input)?;
            let (value, witness) = gamma_l(&g)?;
            println!("{value}");
            println!("{witness}");
            Ok(exit::OK)
        }
        Command::Cl { input, at_least, budget, workers, output } => {
            let g = load_connected(&input)?;
            let opts = SolveOptions { budget: budget.budget(), workers: workers as usize };
            let (json, inconclusive) = match at_least {
                Some(k) => {
                    let r = c_l_at_least_with(&g, k, &opts)?;
                    (decision_json(k, &r), r.decision == Decision::Inconclusive)
                }
                None => {
                    let r = c_l_exact_with(&g, &opts)?;
                    (r.to_json(), r.status == Status::Inconclusive)
                }
            };
            emit(&format!("{}\n", serde_json::to_string_pretty(&json).expect("json")), &output)?;
            Ok(if inconclusive { exit::INCONCLUSIVE } else { exit::OK })
        }
        Command::CheckPartition { input, partition } => {
            let g = load_connected(&input)?;
            let p = load_partition(&g, &partition)?;
            match verify_ldc_partition(&g, &p)? {
                Ok(cert) => {
                    println!("pass: LDC-partition with {} parts", cert.len());
                    for (i, part) in cert.partition.parts().iter().enumerate() {
                        println!("  part {i} {part} partner {}", cert.partner[i]);
                    }
                    Ok(exit::OK)
                }
                Err(refusal) => {
                    println!("fail: {refusal}");
                    Ok(exit::CHECK_FAILED)
                }
            }
        }
        Command::CoalitionGraph { input, partition } => {
            let g = load_connected(&input)?;
            let p = load_partition(&g, &partition)?;
            if let Err(refusal) = verify_ldc_partition(&g, &p)? {
                eprintln!("fail: {refusal}");
                return Ok(exit::CHECK_FAILED);
            }
            print!("{}", coalition_graph(&g, &p)?.to_dot());
            Ok(exit::OK)
        }
        Command::TypeTable { family, n, k } => {
            println!("{}", type_table_tsv(n, family, k)?.trim_end());
            Ok(exit::OK)
        }
        Command::Reproduce { only, budget_seconds, workers, output } => {
            let budget = budget_seconds.map(Budget::seconds).unwrap_or_default();
            let opts = SolveOptions { budget, workers: workers as usize };
            let report = reproduce(&only, &opts);
            eprint!("{}", report.summary());
            let json = serde_json::to_string_pretty(&report).expect("json");
            emit(&format!("{json}\n"), &output)?;
            Ok(match report.overall {
                ClaimStatus::Pass => exit::OK,
                ClaimStatus::Fail => exit::CHECK_FAILED,
                ClaimStatus::Inconclusive => exit::INCONCLUSIVE,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    });
    ExitCode::from(code as u8)
}
