//! Command-line front end: computes any library object on demand, runs
//! verifications, and emits JSON or aligned text.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jtchar_core::{
    big_c, branching_multiplicity, gamma_set, jt_determinant, lr_coefficient, q_members,
    run_sweep, verify_main_with, verify_stable_with, weyl_character, ExecMode, Family,
    FamilySign, GroupInstance, Partition, SweepConfig,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "jtchar", about = "Exact character arithmetic for classical groups", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LambdaArg {
    /// Partition, e.g. "2,1" or "0" for the empty partition.
    #[arg(long)]
    lambda: String,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
    Lr {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Members of Q_{-1} or Q_1 up to a size bound.
    Qset {
        /// "+1" or "-1".
        #[arg(long, allow_hyphen_values = true)]
        sign: String,
        #[arg(long)]
        max_size: u32,
    },
    /// The index set Gamma(lambda, Psi_lambda).
    Gamma {
        #[command(flatten)]
        lambda: LambdaArg,
        /// "O" or "Sp".
        #[arg(long)]
        family: String,
    },
    /// The coefficient C^lambda_{nu,s} via the Littlewood-Richardson formula.
    Coeffs {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        family: String,
    },
    /// Branching multiplicity d^lambda_nu for the given family.
    Branch {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        family: String,
    },
    /// Jacobi-Trudi determinant H_lambda as a Laurent polynomial.
    Jt {
        #[command(flatten)]
        lambda: LambdaArg,
        /// Group, e.g. "B2", "C3", "D4".
        #[arg(long)]
        group: String,
    },
    /// Irreducible character of V_lambda as a Laurent polynomial.
    Char {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long)]
        group: String,
    },
    /// Verify the alternating-sum formula for one instance.
    Verify {
        #[command(flatten)]
        lambda: LambdaArg,
        /// Finite-rank group; mutually exclusive with --family.
        #[arg(long, conflicts_with = "family")]
        group: Option<String>,
        /// Stable verification for "O" or "Sp".
        #[arg(long)]
        family: Option<String>,
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Run the full verification grid and print a summary.
    Sweep {
        #[arg(long, default_value_t = 5)]
        max_size: u32,
        #[arg(long, default_value_t = 2)]
        max_rank_excess: usize,
        /// Disable the data-parallel driver.
        #[arg(long)]
        sequential: bool,
    },
}

fn parse<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| format!("{what} {s:?}: {e}"))
}

fn partition_json(p: &Partition) -> serde_json::Value {
    serde_json::to_value(p).expect("partition serializes")
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Lr { lambda, mu, nu } => {
            let lambda: Partition = parse(&lambda.lambda, "partition")?;
            let mu: Partition = parse(&mu, "partition")?;
            let nu: Partition = parse(&nu, "partition")?;
            let c = lr_coefficient(&lambda, &mu, &nu);
            if json {
                println!("{}", serde_json::json!({ "coefficient": c.to_string() }));
            } else {
                println!("{c}");
            }
        }
        Command::Qset { sign, max_size } => {
            let sign: FamilySign = parse(&sign, "sign")?;
            let members = q_members(sign, max_size);
            if json {
                let vals: Vec<_> = members.iter().map(partition_json).collect();
                println!("{}", serde_json::Value::Array(vals));
            } else {
                for m in &members {
                    println!("{m}");
                }
            }
        }
        Command::Gamma { lambda, family } => {
            let lambda: Partition = parse(&lambda.lambda, "partition")?;
            let family: Family = parse(&family, "family")?;
            let gamma = gamma_set(&lambda, family);
            if json {
                println!("{}", serde_json::to_string(&gamma).expect("serializes"));
            } else {
                for e in &gamma {
                    println!("nu=({})  s={}", e.nu, e.s);
                }
            }
        }
        Command::Coeffs { lambda, nu, family } => {
            let lambda: Partition = parse(&lambda.lambda, "partition")?;
            let nu: Partition = parse(&nu, "partition")?;
            let family: Family = parse(&family, "family")?;
            let c = big_c(&lambda, &nu, family).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::json!({ "coefficient": c.to_string() }));
            } else {
                println!("{c}");
            }
        }
        Command::Branch { lambda, nu, family } => {
            let lambda: Partition = parse(&lambda.lambda, "partition")?;
            let nu: Partition = parse(&nu, "partition")?;
            let family: Family = parse(&family, "family")?;
            let d = branching_multiplicity(&lambda, &nu, family);
            if json {
                println!("{}", serde_json::json!({ "multiplicity": d.to_string() }));
            } else {
                println!("{d}");
            }
        }
        Command::Jt { lambda, group } => {
            let lambda: Partition = parse(&lambda.lambda, "partition")?;
            let g: GroupInstance = parse(&group, "group")?;
            let h = jt_determinant(&lambda, &g).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string(&h).expect("serializes"));
            } else {
                println!("{h}");
            }
        }
        Command::Char { lambda, group } => {
            let lambda: Partition = parse(&lambda.lambda, "partition")?;
            let g: GroupInstance = parse(&group, "group")?;
            let chi = weyl_character(&g, &lambda).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string(&chi).expect("serializes"));
            } else {
                println!("{chi}");
            }
        }
        Command::Verify {
            lambda,
            group,
            family,
            perturb,
        } => {
            let lambda: Partition = parse(&lambda.lambda, "partition")?;
            let report = if let Some(g) = group {
                let g: GroupInstance = parse(&g, "group")?;
                verify_main_with(&lambda, &g, perturb).map_err(|e| e.to_string())?
            } else if let Some(f) = family {
                let f: Family = parse(&f, "family")?;
                verify_stable_with(&lambda, f, perturb)
            } else {
                return Err("verify requires --group or --family".to_string());
            };
            if json {
                println!("{}", serde_json::to_string(&report).expect("serializes"));
            } else {
                print!("{report}");
            }
            if !report.ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Sweep {
            max_size,
            max_rank_excess,
            sequential,
        } => {
            let cfg = SweepConfig {
                max_size,
                max_rank_excess,
                mode: if sequential {
                    ExecMode::Sequential
                } else {
                    ExecMode::Parallel
                },
                ..SweepConfig::default()
            };
            let outcome = run_sweep(&cfg).map_err(|e| e.to_string())?;
            let total = outcome.reports.len();
            let failed: Vec<_> = outcome.reports.iter().filter(|r| !r.ok).collect();
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "total": total,
                        "failed": failed.len(),
                        "ok": outcome.ok,
                        "reports": outcome.reports,
                    })
                );
            } else {
                for r in &outcome.reports {
                    println!(
                        "{:<10} lambda=({:<12}) {}",
                        r.group,
                        r.lambda.to_string(),
                        if r.ok { "ok" } else { "FAILED" }
                    );
                }
                println!("{total} instances, {} failed", failed.len());
            }
            if !outcome.ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
