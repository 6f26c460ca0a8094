//! Command-line front end: every subcommand is a thin wrapper over the
//! library with stable exit codes (0 ok, 1 invalid input, 2 unsupported
//! spec, 3 cross-check mismatch).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use germain::error::Error;
use germain::search::{brute_force, EquationSpec, SearchBounds, Solution};
use germain::{classical, mordell, primes, theorems};

const EXIT_INVALID: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Parser)]
#[command(
    name = "germain",
    about = "Solve, search, and cross-check (-1)^a p^x + (-1)^b (2^k(2p+1))^y = z^2 \
             over Sophie Germain primes"
)]
struct Cli {
    /// Output format; json is line-delimited and schema-stable
    #[arg(long, global = true, value_enum, env = "GERMAIN_FORMAT", default_value = "table")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// Sign exponent alpha of the p^x term (0 or 1)
    #[arg(short = 'a', long)]
    alpha: u8,
    /// Sign exponent beta of the (2^k(2p+1))^y term (0 or 1)
    #[arg(short = 'b', long)]
    beta: u8,
    /// Sophie Germain prime p
    #[arg(short = 'p', long)]
    p: BigInt,
    /// Exponent of 2 in the second base
    #[arg(short = 'k', long)]
    k: u32,
}

impl SpecArgs {
    fn build(&self) -> Result<EquationSpec, Error> {
        EquationSpec::new(self.alpha, self.beta, self.p.clone(), self.k)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form complete solution set for a covered spec
    Solve {
        #[command(flatten)]
        spec: SpecArgs,
        /// Expand each parametric family up to this n in table output
        #[arg(long, default_value_t = 10)]
        expand_limit: u64,
    },
    /// Brute-force search for solutions within exponent bounds
    Search {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 40)]
        xmax: u64,
        #[arg(long, default_value_t = 12)]
        ymax: u64,
    },
    /// Compare the closed form against brute force within bounds
    Crosscheck {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 40)]
        xmax: u64,
        #[arg(long, default_value_t = 12)]
        ymax: u64,
    },
    /// Enumerate Sophie Germain primes, residue classes, or densities
    Sg {
        /// Upper bound on p (inclusive)
        #[arg(long)]
        limit: u64,
        /// Power-of-two modulus for residue filtering
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// Odd residue class to select (requires --mod)
        #[arg(long)]
        class: Option<u64>,
        /// Print per-class counts instead of a listing (requires --mod)
        #[arg(long)]
        stats: bool,
    },
    /// Integral points on the Mordell curve y^2 = x^3 + n
    Mordell {
        #[arg(short = 'n', long, allow_hyphen_values = true)]
        n: BigInt,
        #[arg(long, default_value = "10000")]
        xbound: BigInt,
    },
    /// Search a^x - b^y = 1 with all entries > 1
    Catalan {
        #[arg(long, default_value_t = 100)]
        amax: u64,
        #[arg(long, default_value_t = 100)]
        bmax: u64,
        #[arg(long, default_value_t = 12)]
        xmax: u32,
        #[arg(long, default_value_t = 12)]
        ymax: u32,
    },
}

fn solution_json(s: &Solution) -> Value {
    let mut m = Map::new();
    m.insert("x".into(), Value::String(s.x.to_string()));
    m.insert("y".into(), Value::String(s.y.to_string()));
    m.insert("z".into(), Value::String(s.z.to_string()));
    m.insert("provenance".into(), Value::String(s.provenance.to_string()));
    Value::Object(m)
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Unsupported(_) => EXIT_UNSUPPORTED,
        _ => EXIT_INVALID,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_for(&err))
}

fn cmd_solve(spec: &SpecArgs, expand_limit: u64, format: OutputFormat) -> ExitCode {
    let spec = match spec.build() {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let set = match theorems::closed_form(&spec) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match format {
        OutputFormat::Json => println!("{}", set.to_json()),
        OutputFormat::Table => {
            println!("family: {} ({})", set.tag, set.applicability);
            println!("complete: {}", set.complete);
            println!("solutions for k = {}:", spec.k());
            for s in &set.sporadic {
                println!("  {s}");
            }
            if set.sporadic.is_empty() {
                println!("  (none)");
            }
            for family in &set.families {
                println!("family {}", family.describe());
                let hi = family.n_min.max(expand_limit);
                match theorems::expand_family(family, family.n_min, hi) {
                    Ok(members) => {
                        for m in members {
                            println!("  n-member k={} {m}", m.k);
                        }
                    }
                    Err(e) => return fail(e),
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_search(spec: &SpecArgs, xmax: u64, ymax: u64, format: OutputFormat) -> ExitCode {
    let spec = match spec.build() {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let sols = brute_force(&spec, SearchBounds::new(xmax, ymax));
    match format {
        OutputFormat::Json => {
            for s in &sols {
                println!("{}", solution_json(s));
            }
        }
        OutputFormat::Table => {
            println!("{} solution(s) with x <= {xmax}, y <= {ymax}", sols.len());
            for s in &sols {
                println!("  {s}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_crosscheck(spec: &SpecArgs, xmax: u64, ymax: u64, format: OutputFormat) -> ExitCode {
    let spec = match spec.build() {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let report = match theorems::cross_check(&spec, SearchBounds::new(xmax, ymax)) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match format {
        OutputFormat::Json => {
            let obj = json!({
                "equal": report.is_equal(),
                "closed": report.closed_in_bounds.iter().map(solution_json).collect::<Vec<_>>(),
                "brute": report.brute.iter().map(solution_json).collect::<Vec<_>>(),
                "missing_from_closed":
                    report.missing_from_closed.iter().map(solution_json).collect::<Vec<_>>(),
                "missing_from_brute":
                    report.missing_from_brute.iter().map(solution_json).collect::<Vec<_>>(),
            });
            println!("{obj}");
        }
        OutputFormat::Table => {
            println!("closed form ({}):", report.closed_in_bounds.len());
            for s in &report.closed_in_bounds {
                println!("  {s}");
            }
            println!("brute force ({}):", report.brute.len());
            for s in &report.brute {
                println!("  {s}");
            }
            if report.is_equal() {
                println!("verdict: equal");
            } else {
                println!("verdict: MISMATCH");
                for s in &report.missing_from_closed {
                    println!("  missing from closed form: {s}");
                }
                for s in &report.missing_from_brute {
                    println!("  missing from brute force: {s}");
                }
            }
        }
    }
    if report.is_equal() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn modulus_exponent(modulus: u64) -> Result<u32, Error> {
    if modulus >= 2 && modulus.is_power_of_two() && modulus.trailing_zeros() <= 62 {
        Ok(modulus.trailing_zeros())
    } else {
        Err(Error::Parse(format!(
            "--mod must be a power of two in [2, 2^62], got {modulus}"
        )))
    }
}

fn cmd_sg(
    limit: u64,
    modulus: Option<u64>,
    class: Option<u64>,
    stats: bool,
    format: OutputFormat,
) -> ExitCode {
    match (modulus, class, stats) {
        (Some(modulus), None, true) => {
            let m = match modulus_exponent(modulus) {
                Ok(m) => m,
                Err(e) => return fail(e),
            };
            let stats = primes::sg_density_stats(limit, m);
            match format {
                OutputFormat::Json => {
                    let counts: Map<String, Value> = stats
                        .counts
                        .iter()
                        .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "limit": limit.to_string(),
                            "modulus": stats.modulus.to_string(),
                            "counts": counts,
                        })
                    );
                }
                OutputFormat::Table => {
                    for (k, v) in &stats.counts {
                        println!("{k} mod {}: {v}", stats.modulus);
                    }
                }
            }
        }
        (Some(modulus), Some(class), false) => {
            let m = match modulus_exponent(modulus) {
                Ok(m) => m,
                Err(e) => return fail(e),
            };
            let list = match primes::sg_residue_class(limit, m, class) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            for p in list {
                match format {
                    OutputFormat::Json => println!("{}", json!({ "p": p.to_string() })),
                    OutputFormat::Table => println!("{p}"),
                }
            }
        }
        (None, None, false) => {
            for pair in primes::enumerate_sg(limit) {
                match format {
                    OutputFormat::Json => println!(
                        "{}",
                        json!({ "p": pair.p.to_string(), "q": pair.q.to_string() })
                    ),
                    OutputFormat::Table => println!("{} {}", pair.p, pair.q),
                }
            }
        }
        _ => {
            return fail(Error::Parse(
                "use --mod with --class for a listing, --mod with --stats for counts, \
                 or neither for all pairs"
                    .into(),
            ))
        }
    }
    ExitCode::SUCCESS
}

fn cmd_mordell(n: BigInt, xbound: BigInt, format: OutputFormat) -> ExitCode {
    let curve = match mordell::MordellCurve::new(n) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let points = mordell::integral_points(&curve, &xbound);
    for pt in &points {
        match format {
            OutputFormat::Json => println!(
                "{}",
                json!({ "x": pt.x.to_string(), "y": pt.y.to_string() })
            ),
            OutputFormat::Table => println!("({}, {})", pt.x, pt.y),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_catalan(amax: u64, bmax: u64, xmax: u32, ymax: u32, format: OutputFormat) -> ExitCode {
    if amax < 2 || bmax < 2 || xmax < 2 || ymax < 2 {
        return fail(Error::Parse("all catalan bounds must be >= 2".into()));
    }
    for s in classical::catalan_search(amax, bmax, xmax, ymax) {
        match format {
            OutputFormat::Json => println!(
                "{}",
                json!({
                    "a": s.a.to_string(),
                    "b": s.b.to_string(),
                    "x": s.x.to_string(),
                    "y": s.y.to_string(),
                })
            ),
            OutputFormat::Table => println!("({}, {}, {}, {})", s.a, s.b, s.x, s.y),
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are success, bad flags are invalid input
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INVALID,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match cli.command {
        Command::Solve { spec, expand_limit } => cmd_solve(&spec, expand_limit, format),
        Command::Search { spec, xmax, ymax } => cmd_search(&spec, xmax, ymax, format),
        Command::Crosscheck { spec, xmax, ymax } => cmd_crosscheck(&spec, xmax, ymax, format),
        Command::Sg {
            limit,
            modulus,
            class,
            stats,
        } => cmd_sg(limit, modulus, class, stats, format),
        Command::Mordell { n, xbound } => cmd_mordell(n, xbound, format),
        Command::Catalan {
            amax,
            bmax,
            xmax,
            ymax,
        } => cmd_catalan(amax, bmax, xmax, ymax, format),
    }
}
