//! `grassmorph`: classify, build and check morphisms `P² → Gr(2, C^4)`.

mod commands;
mod points;
mod render;
mod suite;

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grassmorph::cayley_bacharach::DEFAULT_BUDGET;
use grassmorph::classify::Mode;
use grassmorph::exactalg::SCAN_PRIMES;
use grassmorph::{Error, Seed};
use serde_json::{json, Value};

use commands::{Globals, Report};

#[derive(Parser, Debug)]
#[command(name = "grassmorph", version, about = "Morphisms from the projective plane to Gr(2,4)")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Primes for finite-field scans, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    prime: Vec<u64>,
    /// Largest number of point subsets to enumerate in position checks.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a class (q2, s2) is realized by a morphism.
    Classify {
        #[arg(required_unless_present = "table", requires = "s2")]
        q2: Option<u64>,
        s2: Option<u64>,
        /// Print every class with c = 1..=N instead.
        #[arg(long, value_name = "N", conflicts_with_all = ["q2", "build"])]
        table: Option<u64>,
        /// Skip the split-bundle pass for c >= 4.
        #[arg(long)]
        intervals_only: bool,
        /// Build and check the witness construction.
        #[arg(long)]
        build: bool,
    },
    /// Build the split surjection of degrees (a, b), or a tangent bundle surjection.
    Construct {
        #[arg(required_unless_present = "tangent", requires = "b")]
        a: Option<u32>,
        b: Option<u32>,
        #[arg(long, conflicts_with = "a")]
        tangent: bool,
        /// With --tangent, draw the sections from the seed instead of the fixed example.
        #[arg(long, requires = "tangent")]
        random: bool,
    },
    /// Test the Cayley-Bacharach condition of a points file for O(d).
    CbCheck {
        /// JSON array of triples; `-` reads standard input.
        file: PathBuf,
        d: u32,
    },
    /// Compare images of the split surjection over finite planes.
    Scan {
        a: u32,
        b: u32,
        /// Overrides --prime.
        p: Option<u64>,
        /// Sample this many affine points instead of the whole plane.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Generate the points of the point construction for a class.
    Genpoints {
        q2: u64,
        s2: u64,
        /// Also write the points file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in regression suite.
    VerifyPaper,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) => 2,
        Error::Unsurjective | Error::RankDeficient => 1,
        Error::BadPrime(_)
        | Error::Inconclusive(_)
        | Error::RetriesExhausted(_)
        | Error::CapExceeded { .. }
        | Error::CommonComponent
        | Error::DegenerateCoordinates => 3,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::BadPrime(_) => "bad-prime",
        Error::CommonComponent => "common-component",
        Error::DegenerateCoordinates => "degenerate-coordinates",
        Error::RankDeficient => "rank-deficient",
        Error::Unsurjective => "unsurjective",
        Error::Inconclusive(_) => "inconclusive",
        Error::RetriesExhausted(_) => "retries-exhausted",
        Error::CapExceeded { .. } => "cap-exceeded",
        Error::InvalidInput(_) => "invalid-input",
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Construct { .. } => "construct",
        Command::CbCheck { .. } => "cb-check",
        Command::Scan { .. } => "scan",
        Command::Genpoints { .. } => "genpoints",
        Command::VerifyPaper => "verify-paper",
    }
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn run(cli: &Cli, g: &Globals) -> Result<Report, Error> {
    match &cli.command {
        Command::Classify { q2, s2, table, intervals_only, build } => {
            let mode = if *intervals_only { Mode::IntervalsOnly } else { Mode::Full };
            match (table, q2, s2) {
                (Some(n), _, _) => commands::classify_table(*n, mode),
                (None, Some(q), Some(s)) => commands::classify(g, *q, *s, mode, *build),
                _ => Err(Error::InvalidInput("give q2 and s2, or --table N".into())),
            }
        }
        Command::Construct { a, b, tangent, random } => match (tangent, a, b) {
            (true, _, _) => commands::construct_tangent(g, *random),
            (false, Some(a), Some(b)) => commands::construct_split(g, *a, *b),
            _ => Err(Error::InvalidInput("give degrees a and b, or --tangent".into())),
        },
        Command::CbCheck { file, d } => commands::cb_check_file(&read_input(file)?, *d),
        Command::Scan { a, b, p, sample } => commands::scan(g, *a, *b, *p, *sample),
        Command::Genpoints { q2, s2, out } => {
            let (report, file) = commands::genpoints(g, *q2, *s2)?;
            if let (Some(path), Some(file)) = (out, file) {
                let text = serde_json::to_string_pretty(&file).expect("serializable") + "\n";
                std::fs::write(path, text)
                    .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(report)
        }
        Command::VerifyPaper => {
            let (checks, human, ok) = suite::run(g);
            Ok(Report { json: json!({ "checks": checks, "passed": ok }), human, code: if ok { 0 } else { 1 } })
        }
    }
}

fn emit(format: Format, header: &Value, body: Result<Report, Error>) -> u8 {
    let (mut json, human, code) = match body {
        Ok(r) => (r.json, r.human, r.code),
        Err(e) => {
            let code = exit_code(&e);
            let j = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } });
            if format == Format::Human {
                eprintln!("error: {e}");
                return code;
            }
            (j, String::new(), code)
        }
    };
    match format {
        Format::Json => {
            if let (Value::Object(m), Value::Object(h)) = (&mut json, header) {
                for (k, v) in h {
                    m.insert(k.clone(), v.clone());
                }
            }
            println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
        }
        Format::Human => {
            print!("{human}");
            println!("seed {}", header["seed"]);
        }
    }
    code
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let primes = if cli.prime.is_empty() { SCAN_PRIMES.to_vec() } else { cli.prime.clone() };
    let g = Globals { seed: Seed(cli.seed), primes, budget: cli.budget };
    let header = json!({
        "command": command_name(&cli.command),
        "seed": cli.seed,
        "primes": g.primes,
        "budget": g.budget.to_string(),
    });
    ExitCode::from(emit(cli.format, &header, run(&cli, &g)))
}
