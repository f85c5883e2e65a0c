use std::process::ExitCode;

use bgmu_cli::commands;
use bgmu_cli::spec::{parse_mu, ProblemSpec};
use bgmu_cli::verify::{self, Sweep};
use bgmu_cli::CliError;
use bgmu_core::{Guard, Strategy};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bgmu",
    version,
    about = "Acceptable Newton points of twisted affine Weyl groups of type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ProblemArgs {
    /// `gl:8`, `pgl:4`, `gl:2*2`, ...
    #[arg(long)]
    group: String,
    /// Comma-separated dominant coweight.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// `superbasic:m/n`, `id`, or `tau=<element>;sigma0=<automorphism>`.
    #[arg(long, default_value = "id")]
    sigma: String,
    /// Report Newton points shifted by the central part of `λ^◇`.
    #[arg(long)]
    normalize: bool,
}

impl ProblemArgs {
    fn spec(&self) -> Result<ProblemSpec, CliError> {
        Ok(ProblemSpec {
            group: self.group.clone(),
            mu: parse_mu(&self.mu)?,
            sigma: self.sigma.clone(),
            normalize: self.normalize,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Newton point of `wσ`.
    Newton {
        #[arg(long)]
        group: String,
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "id")]
        sigma: String,
        #[arg(long)]
        normalize: bool,
    },
    /// The maximal acceptable point with an admissible witness and certificate.
    Max {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
    },
    /// The acceptable set with its Hasse diagram.
    Enumerate {
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Membership in, or enumeration of, the admissible set.
    Adm {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        w: Option<String>,
    },
    /// Newton polygon of `μ_{m,n}` as TSV.
    Polygon {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Cross-checks the solver against exhaustive oracles.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_entry: i64,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
        /// Worker threads (defaults to the number of cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn run(command: Command) -> Result<String, CliError> {
    let guard = Guard::from_env()?;
    match command {
        Command::Newton {
            group,
            w,
            sigma,
            normalize,
        } => commands::newton(&group, &w, &sigma, normalize),
        Command::Max { problem, strategy } => commands::max(&problem.spec()?, strategy, &guard),
        Command::Enumerate { problem } => commands::enumerate(&problem.spec()?, &guard),
        Command::Adm { group, mu, w } => {
            commands::adm(&group, &parse_mu(&mu)?, w.as_deref(), &guard)
        }
        Command::Polygon { mu, m, n } => commands::polygon_tsv(&parse_mu(&mu)?, m, n),
        Command::Verify {
            max_n,
            max_entry,
            max_length,
            jobs,
        } => {
            let sweep = Sweep {
                max_n,
                max_entry,
                max_length,
            };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                pool = pool.num_threads(j);
            }
            let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
            let report = pool.install(|| verify::run(&sweep, &guard));
            match report.minimal_failure() {
                Some(f) => Err(CliError::Mismatch(commands::counterexample(
                    &f.spec, f.check, &f.detail,
                ))),
                None => {
                    let counts: Vec<(&str, usize)> =
                        report.counts.iter().map(|(k, v)| (*k, *v)).collect();
                    Ok(commands::verify_summary(&counts, report.instances))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Mismatch(out)) if out.starts_with('{') => {
            print!("{out}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("bgmu: {e}");
            ExitCode::from(e.code())
        }
    }
}
