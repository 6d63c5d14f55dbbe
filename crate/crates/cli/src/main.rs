use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use termrank::acceptance::{self, Scale};
use termrank::cover::Route;
use termrank::fuzz::{self, FuzzConfig};
use termrank::io::{self, Failure, Loaded, ModeTag, ResultFile};
use termrank::Grounds;

/// Feasibility checks and constructions for degree-constrained bipartite
/// augmentation with matroid constraints.
///
/// Exit status: 0 feasible, 1 infeasible (or fuzz counterexamples),
/// 2 input error, 3 internal disagreement between two routes.
#[derive(Parser)]
#[command(name = "termrank", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance; prints a witness or a violated inequality.
    Check {
        file: PathBuf,
        /// Override the mode stored in the file.
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a witness along a chosen route.
    Solve {
        file: PathBuf,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-validate the witness of a result file against its instance.
    Verify { file: PathBuf, result: PathBuf },
    /// Cross-check checkers against constructors on random instances.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_s: usize,
        #[arg(long, default_value_t = 3)]
        max_t: usize,
        /// Comma-separated modes; all by default.
        #[arg(long, value_delimiter = ',')]
        modes: Vec<String>,
        /// Where minimized reproducers are written.
        #[arg(long, default_value = "fuzz-reproducers")]
        out_dir: PathBuf,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Run the built-in acceptance suite; one pass/fail line per criterion.
    Selftest {
        #[arg(long, default_value_t = Scale::default().seed)]
        seed: u64,
        /// Smaller random families, for a quick smoke run.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Cover,
    Brute,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Cover => Route::Cover,
            RouteArg::Brute => Route::Brute,
            RouteArg::Both => Route::Both,
        }
    }
}

fn ground_cap() -> Result<usize, Failure> {
    match std::env::var("TERMRANK_MAX_GROUND") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Input(format!("TERMRANK_MAX_GROUND: not a number: {v}"))),
        Err(_) => Ok(Grounds::DEFAULT_CAP),
    }
}

fn parse_mode(name: &str) -> Result<ModeTag, Failure> {
    ModeTag::parse(name).ok_or_else(|| Failure::Input(format!("mode: unknown mode `{name}`")))
}

fn load(path: &Path, mode: Option<&str>) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut file = io::parse_instance(&text)?;
    if let Some(m) = mode {
        file.mode = parse_mode(m)?;
    }
    file.load(ground_cap()?)
}

fn emit(result: &ResultFile, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let json = serde_json::to_string_pretty(result).expect("result serializes");
    match out {
        Some(p) => std::fs::write(p, json + "\n")
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        None => println!("{json}"),
    }
    Ok(if result.feasible() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Check { file, mode, out } => {
            let loaded = load(&file, mode.as_deref())?;
            emit(&io::check(&loaded)?, out.as_deref())
        }
        Command::Solve {
            file,
            mode,
            route,
            out,
        } => {
            let loaded = load(&file, mode.as_deref())?;
            emit(&io::solve(&loaded, route.into())?, out.as_deref())
        }
        Command::Verify { file, result } => {
            let loaded = load(&file, None)?;
            let text = std::fs::read_to_string(&result)
                .map_err(|e| Failure::Input(format!("{}: {e}", result.display())))?;
            let parsed: ResultFile = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", result.display())))?;
            if !parsed.feasible() {
                return Err(Failure::Input("result has no witness to verify".into()));
            }
            match io::validate_witness(&loaded, &parsed) {
                Ok(()) => {
                    println!("witness ok");
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    println!("witness rejected: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Fuzz {
            seed,
            count,
            max_s,
            max_t,
            modes,
            out_dir,
            inject_fault,
        } => {
            let cap = ground_cap()?;
            if max_s == 0 || max_t == 0 || max_s + max_t > cap {
                return Err(Failure::Input(format!(
                    "max-s/max-t: need 1 ≤ sizes and a total of at most {cap}"
                )));
            }
            let modes = if modes.is_empty() {
                ModeTag::ALL.to_vec()
            } else {
                modes
                    .iter()
                    .map(|m| parse_mode(m))
                    .collect::<Result<_, _>>()?
            };
            let cfg = FuzzConfig {
                seed,
                count,
                max_s,
                max_t,
                modes,
                fault: inject_fault,
            };
            let report = fuzz::run(&cfg);
            if !report.clean() {
                std::fs::create_dir_all(&out_dir)
                    .map_err(|e| Failure::Input(format!("{}: {e}", out_dir.display())))?;
                for c in &report.counterexamples {
                    let path = out_dir.join(format!("repro-{}-{}.json", c.mode, c.index));
                    let json = serde_json::to_string_pretty(&c.reproducer).expect("serializes");
                    std::fs::write(&path, json + "\n")
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                }
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            Ok(if report.clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Selftest { seed, quick } => {
            let mut scale = Scale {
                seed,
                ..Scale::default()
            };
            if quick {
                scale.instances = 100;
                scale.brualdi = 100;
                scale.ore_random = 100;
                scale.lattice = 100;
                scale.prefix_side = 4;
                scale.solved = 50;
            }
            let results = acceptance::run(&scale);
            for r in &results {
                println!("{}", r.line());
                for s in &r.samples {
                    println!("    {s}");
                }
            }
            Ok(if results.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("termrank: {f}");
            match f {
                Failure::Input(_) => ExitCode::from(2),
                Failure::Internal(_) => ExitCode::from(3),
            }
        }
    }
}
