use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tauweave::export;
use tauweave::par::Exec;
use tauweave::silting::{build_isomorphism, SttiltPoset, VanishingTable};
use tauweave::verify::{self, CheckResult, VerifyConfig};
use tauweave::weak_order::WeakOrderLattice;
use tauweave::xi::{enumerate_xi, CriterionOptions};

#[derive(Parser)]
#[command(
    name = "tauweave",
    version,
    about = "Weak orders, two-term silting sets and their verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hasse diagram of the weak order on S_{n+1}.
    WeakOrder(Emit),
    /// Index set with g-vectors and the compatibility matrix.
    Xi(Emit),
    /// Silting poset labelled through the isomorphism with the weak order.
    Sttilt(Emit),
    /// Run the acceptance checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tsv,
}

#[derive(Args)]
struct Common {
    #[arg(long, env = "TAUWEAVE_N", value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Largest number of poset nodes to build.
    #[arg(long, env = "TAUWEAVE_BUDGET_NODES", default_value_t = 5040)]
    budget_nodes: usize,
    /// Run single-threaded.
    #[arg(long, env = "TAUWEAVE_SEQUENTIAL")]
    sequential: bool,
}

#[derive(Args)]
struct Emit {
    #[command(flatten)]
    common: Common,
    #[arg(long, env = "TAUWEAVE_FORMAT", value_enum, default_value = "json")]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long, env = "TAUWEAVE_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, env = "TAUWEAVE_N", default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Algebra selectors such as `preprojective:3`, `lambda:2:2`, `gamma`.
    #[arg(long, env = "TAUWEAVE_ALGEBRA", value_delimiter = ',')]
    algebra: Vec<String>,
    #[arg(long, env = "TAUWEAVE_FORMAT", value_enum, default_value = "tsv")]
    format: Format,
    #[arg(long, env = "TAUWEAVE_OUT")]
    out: Option<PathBuf>,
    /// Compare the direct mirrored rules with the oracle too.
    #[arg(long, env = "TAUWEAVE_CHECK_MIRROR", default_value_t = true, action = clap::ArgAction::Set)]
    check_mirror: bool,
    /// Run the checks that build algebras; otherwise only the combinatorial ones.
    #[arg(long, env = "TAUWEAVE_CHECK_ORACLE", default_value_t = true, action = clap::ArgAction::Set)]
    check_oracle: bool,
    #[arg(long, env = "TAUWEAVE_SEQUENTIAL")]
    sequential: bool,
    #[arg(long, hide = true, env = "TAUWEAVE_SABOTAGE")]
    sabotage: bool,
}

/// Exit statuses for scripts.
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn exec(sequential: bool) -> Exec {
    if sequential {
        Exec::Sequential
    } else {
        Exec::default()
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_budget(n: usize, budget: usize) -> anyhow::Result<()> {
    let mut nodes: usize = 1;
    for k in 2..=n + 1 {
        nodes = nodes.saturating_mul(k);
        if nodes > budget {
            return Err(tauweave::Error::BudgetExceeded {
                what: "poset nodes",
                requested: nodes,
                limit: budget,
            }
            .into());
        }
    }
    Ok(())
}

fn weak_order(args: &Emit) -> anyhow::Result<u8> {
    let n = args.common.n as usize;
    check_budget(n, args.common.budget_nodes)?;
    let lat = WeakOrderLattice::with_budget(n, usize::MAX)?;
    let text = match args.format {
        Format::Json => export::lattice_json(&lat),
        Format::Dot => export::lattice_dot(&lat),
        Format::Tsv => bail!(UsageError("weak-order supports json and dot".into())),
    };
    write_out(&args.out, &text)?;
    Ok(0)
}

fn xi(args: &Emit) -> anyhow::Result<u8> {
    let n = args.common.n as usize;
    let text = match args.format {
        Format::Tsv => export::xi_tsv(&enumerate_xi(n)?),
        Format::Json => {
            let table =
                VanishingTable::new(n, CriterionOptions::default(), exec(args.common.sequential))?;
            export::compatibility_json(&table)
        }
        Format::Dot => bail!(UsageError("xi supports json and tsv".into())),
    };
    write_out(&args.out, &text)?;
    Ok(0)
}

fn sttilt(args: &Emit) -> anyhow::Result<u8> {
    let n = args.common.n as usize;
    check_budget(n, args.common.budget_nodes)?;
    let ex = exec(args.common.sequential);
    let poset = SttiltPoset::build_with_budget(n, CriterionOptions::default(), ex, usize::MAX)?;
    let lat = WeakOrderLattice::with_budget(n, usize::MAX)?;
    let rho =
        build_isomorphism(&poset, &lat).context("building the isomorphism with the weak order")?;
    if !rho.is_bijective(poset.len()) {
        bail!("labelling is not a bijection");
    }
    let text = match args.format {
        Format::Json => export::poset_json(&poset, Some(&lat), Some(&rho)),
        Format::Dot => export::poset_dot(&poset, Some(&lat), Some(&rho)),
        Format::Tsv => bail!(UsageError("sttilt supports json and dot".into())),
    };
    write_out(&args.out, &text)?;
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> anyhow::Result<u8> {
    for sel in &args.algebra {
        tauweave::models::builtin(sel)?;
    }
    let cfg = VerifyConfig {
        exec: exec(args.sequential),
        criterion: CriterionOptions {
            sabotage: args.sabotage,
            ..CriterionOptions::default()
        },
        check_mirror: args.check_mirror,
        max_rank: args.n as usize,
        algebras: (!args.algebra.is_empty()).then(|| args.algebra.clone()),
    };
    let results: Vec<CheckResult> = if args.check_oracle {
        verify::run_all(&cfg)
    } else {
        vec![
            verify::check_weak_order(&cfg),
            verify::check_xi_census(),
            verify::check_main_theorem(&cfg),
            verify::check_interval_shapes(&cfg),
        ]
    };
    let text = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&results)?;
            s.push('\n');
            s
        }
        Format::Tsv => results.iter().map(|r| format!("{r}\n")).collect(),
        Format::Dot => bail!(UsageError("verify supports json and tsv".into())),
    };
    write_out(&args.out, &text)?;
    if args.out.is_some() {
        for r in &results {
            eprintln!("{r}");
        }
    }
    Ok(if results.iter().all(|r| r.passed) {
        0
    } else {
        EXIT_FAIL
    })
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<tauweave::Error>() {
        Some(tauweave::Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        Some(
            tauweave::Error::InvalidRank(_)
            | tauweave::Error::Presentation(_)
            | tauweave::Error::Parse { .. },
        ) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::WeakOrder(a) => weak_order(a),
        Command::Xi(a) => xi(a),
        Command::Sttilt(a) => sttilt(a),
        Command::Verify(a) => run_verify(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
