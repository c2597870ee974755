use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use finspace::io::{largest_balls_json, matrix_json, quasi_json, region_json, union_json};
use finspace::verify::{self, VerifyConfig};
use finspace::{
    enumerate_topologies, export_dot, parse_space, product, serialize_space, BallQuery, DotMode,
    FinSpace, PointSet,
};

#[derive(Parser)]
#[command(name = "finspace", version, about = "Finite topological spaces and furtherness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a space file describes a topology.
    Validate { file: PathBuf },
    /// Print the furtherness matrix.
    Matrix {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Boundary, interior, center and radius of a subset.
    Region {
        file: PathBuf,
        /// Comma-separated labels.
        #[arg(long)]
        subset: String,
    },
    /// Quasi-center and quasi-radius of a subset.
    Quasi {
        file: PathBuf,
        #[arg(long)]
        subset: String,
        /// Also list the largest forward balls inside the subset.
        #[arg(long)]
        balls: bool,
    },
    /// Center and radius of a union of separated subsets, predicted and direct.
    Union {
        file: PathBuf,
        /// Pipe-separated subsets of comma-separated labels, e.g. "a,b|d".
        #[arg(long)]
        subsets: String,
    },
    /// A forward (or backward) ball.
    Balls {
        file: PathBuf,
        #[arg(long)]
        center: String,
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        backward: bool,
    },
    /// T0 quotient as a space document.
    Quotient { file: PathBuf },
    /// Opposite space as a space document.
    Opposite { file: PathBuf },
    /// Core (beat points removed) as a space document.
    Core { file: PathBuf },
    /// Product of two spaces as a space document.
    Product { first: PathBuf, second: PathBuf },
    /// Graphviz output: Hasse diagram, or the open-set lattice.
    Dot {
        file: PathBuf,
        #[arg(long)]
        lattice: bool,
    },
    /// List every labeled topology on n points (n ≤ 5).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t0: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Run the property suite; one JSON line per property.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        sample_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        prop: Option<String>,
    },
}

/// An input problem: bad file, bad labels, violated preconditions.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn load(path: &Path) -> Result<FinSpace, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_space(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn subset(space: &FinSpace, list: &str) -> Result<PointSet, InputError> {
    let labels: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(space.set_from_labels(&labels)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn run(command: Command) -> Result<ExitCode, InputError> {
    match command {
        Command::Validate { file } => {
            let x = load(&file)?;
            println!("valid: {} points, {} open sets", x.n(), x.open_family().len());
        }
        Command::Matrix { file, json } => {
            let x = load(&file)?;
            let m = x.furtherness_matrix();
            if json {
                print_json(&matrix_json(&x, &m));
            } else {
                print!("{m}");
            }
        }
        Command::Region { file, subset: s } => {
            let x = load(&file)?;
            let a = subset(&x, &s)?;
            print_json(&region_json(&x, &x.region_report(a)));
        }
        Command::Quasi { file, subset: s, balls } => {
            let x = load(&file)?;
            let a = subset(&x, &s)?;
            let mut v = quasi_json(&x, &x.quasi_report(a));
            if balls {
                v["largest_balls"] = largest_balls_json(&x, &x.largest_forward_balls(a)?);
            }
            print_json(&v);
        }
        Command::Union { file, subsets } => {
            let x = load(&file)?;
            let sets = subsets
                .split('|')
                .map(|s| subset(&x, s))
                .collect::<Result<Vec<_>, _>>()?;
            print_json(&union_json(&x, &x.union_analysis(&sets)?));
        }
        Command::Balls { file, center, radius, backward } => {
            let x = load(&file)?;
            let c = x
                .index_of(&center)
                .ok_or_else(|| InputError(format!("unknown label `{center}`")))?;
            let q = if backward {
                BallQuery::backward(c, radius)
            } else {
                BallQuery::forward(c, radius)
            };
            let ball = x.ball(q)?;
            print_json(&json!({
                "center": center,
                "radius": radius,
                "direction": if backward { "backward" } else { "forward" },
                "ball": x.set_labels(ball),
            }));
        }
        Command::Quotient { file } => println!("{}", serialize_space(&load(&file)?.kolmogorov_quotient().space)),
        Command::Opposite { file } => println!("{}", serialize_space(&load(&file)?.opposite())),
        Command::Core { file } => println!("{}", serialize_space(&load(&file)?.core())),
        Command::Product { first, second } => {
            let (x, y) = (load(&first)?, load(&second)?);
            println!("{}", serialize_space(&product(&[&x, &y])?));
        }
        Command::Dot { file, lattice } => {
            let mode = if lattice { DotMode::Lattice } else { DotMode::Hasse };
            print!("{}", export_dot(&load(&file)?, mode));
        }
        Command::Enumerate { n, t0, count_only } => {
            let spaces = enumerate_topologies(n, t0)?;
            if count_only {
                println!("{}", spaces.count());
            } else {
                for s in spaces {
                    println!("{}", serialize_space(&s));
                }
            }
        }
        Command::Verify { max_n, samples, sample_n, seed, prop } => {
            let config = VerifyConfig { max_n, samples, sample_n, seed, prop };
            let reports = verify::run(&config)?;
            let mut failed = false;
            for r in &reports {
                failed |= !r.passed;
                println!("{}", serde_json::to_string(r).expect("reports serialize"));
            }
            if failed {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors; 2 is reserved for property failures
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
