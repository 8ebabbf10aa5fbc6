use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use trihex::counting::{self, CountReport};
use trihex::enumeration;
use trihex::graph::{self, ExportFormat};
use trihex::numtheory::{factorize, solve_fast, solve_naive};
use trihex::{Error, Signature};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "trihex",
    version,
    about = "Count, enumerate and build trihexes"
)]
struct Cli {
    /// Worker threads for per-V work (0 = one per core)
    #[arg(long, global = true, env = "TRIHEX_JOBS", default_value_t = 0)]
    jobs: usize,

    /// Write output here instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Increase diagnostic verbosity (repeatable)
    #[arg(long, short, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form counts, one row per vertex count
    Count {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Signature streams for one vertex count
    Enumerate {
        #[arg(long = "v")]
        v: u64,
        #[arg(long, value_enum, default_value_t = Stream::All)]
        stream: Stream,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Realize a signature as an embedded graph
    Build {
        /// Signature as `s,b,f`
        #[arg(long)]
        sig: String,
        #[arg(long, default_value = "planar_code")]
        format: ExportFormat,
    },
    /// Check every enumerated stream (and optionally every graph) against the formulas
    Verify {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        with_graphs: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Solve x^2 + x + 1 = 0 (mod n)
    Congruence {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
}

#[derive(Args, Debug)]
struct RangeArgs {
    /// A single vertex count
    #[arg(long = "v", conflicts_with_all = ["from", "to"])]
    v: Option<u64>,
    /// First vertex count of a range (step 4)
    #[arg(long, requires = "to")]
    from: Option<u64>,
    /// Last vertex count of a range, inclusive
    #[arg(long, requires = "from")]
    to: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Csv,
    Structured,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Stream {
    All,
    Reps,
    Coinciding,
    SelfMirror,
    Classes,
}

impl Stream {
    fn name(self) -> &'static str {
        match self {
            Stream::All => "all",
            Stream::Reps => "reps",
            Stream::Coinciding => "coinciding",
            Stream::SelfMirror => "self-mirror",
            Stream::Classes => "classes",
        }
    }
}

/// Failures mapped onto the exit-code contract.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroModulus
            | Error::InvalidVertexCount(_)
            | Error::InvalidSignature { .. }
            | Error::MalformedSignature(_) => Failure::Usage(e.to_string()),
            other => Failure::Other(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.into())
    }
}

fn vertex_counts(range: &RangeArgs) -> Result<Vec<u64>, Failure> {
    let (from, to) = match (range.v, range.from, range.to) {
        (Some(v), _, _) => (v, v),
        (None, Some(a), Some(b)) => (a, b),
        _ => return Err(Failure::Usage("give --v or both --from and --to".into())),
    };
    for v in [from, to] {
        if v < 4 || v % 4 != 0 {
            return Err(Error::InvalidVertexCount(v).into());
        }
    }
    if from > to {
        return Err(Failure::Usage(format!("empty range: {from} > {to}")));
    }
    Ok((from..=to).step_by(4).collect())
}

fn emit(output: &Option<PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, bytes)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Other),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn structured(doc: serde_json::Value) -> Vec<u8> {
    let mut text = serde_json::to_string_pretty(&doc).expect("json value serializes");
    text.push('\n');
    text.into_bytes()
}

fn cmd_count(vs: &[u64], format: TableFormat) -> Result<Vec<u8>, Failure> {
    let rows: Vec<CountReport> = vs
        .par_iter()
        .map(|&v| counting::report(v))
        .collect::<Result<_, _>>()?;
    Ok(match format {
        TableFormat::Csv => {
            let mut text = String::from(CountReport::CSV_HEADER);
            text.push('\n');
            for r in &rows {
                text.push_str(&r.csv_row());
                text.push('\n');
            }
            text.into_bytes()
        }
        TableFormat::Text => {
            let mut text = format!(
                "{:>8} {:>8} {:>6} {:>6} {:>3} {:>9} {:>7} {:>11}\n",
                "V", "sigma", "delta", "mu", "nu", "trihexes", "gamma", "rot_classes"
            );
            for r in &rows {
                text.push_str(&format!(
                    "{:>8} {:>8} {:>6} {:>6} {:>3} {:>9} {:>7} {:>11}\n",
                    r.v, r.sigma, r.delta, r.mu, r.nu, r.trihexes, r.gamma, r.rot_classes
                ));
            }
            text.into_bytes()
        }
        TableFormat::Structured => structured(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "count",
            "rows": rows,
        })),
    })
}

fn cmd_enumerate(v: u64, stream: Stream, format: TableFormat) -> Result<Vec<u8>, Failure> {
    let sigs = match stream {
        Stream::All => enumeration::all_signatures(v),
        Stream::Reps => enumeration::trihex_reps(v),
        Stream::Coinciding => enumeration::coinciding_signatures(v),
        Stream::SelfMirror => enumeration::self_mirror_signatures(v),
        Stream::Classes => enumeration::graph_class_reps(v),
    }?;
    Ok(match format {
        TableFormat::Text => sigs
            .iter()
            .map(|s| format!("{s}\n"))
            .collect::<String>()
            .into_bytes(),
        TableFormat::Csv => {
            let mut text = String::from("s,b,f\n");
            for s in &sigs {
                text.push_str(&format!("{},{},{}\n", s.s(), s.b(), s.f()));
            }
            text.into_bytes()
        }
        TableFormat::Structured => structured(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "enumerate",
            "V": v,
            "stream": stream.name(),
            "signatures": sigs,
        })),
    })
}

fn cmd_build(sig: &str, format: ExportFormat) -> Result<Vec<u8>, Failure> {
    let sig: Signature = sig.parse()?;
    let g = graph::build(sig)?;
    let census: Vec<String> = g
        .face_census()
        .iter()
        .map(|(len, count)| format!("{count} faces of length {len}"))
        .collect();
    eprintln!(
        "{sig}: {} vertices, {}",
        g.vertex_count(),
        census.join(", ")
    );
    Ok(graph::export(&g, format))
}

struct VerifyOutcome {
    v: u64,
    failures: Vec<(String, String, String)>,
}

fn verify_one(v: u64, with_graphs: bool) -> VerifyOutcome {
    let mut failures = Vec::new();
    match enumeration::verify(v) {
        Ok(_) => {}
        Err(Error::VerificationFailure {
            field,
            expected,
            actual,
            ..
        }) => failures.push((field.to_string(), expected.to_string(), actual.to_string())),
        Err(e) => failures.push(("enumeration".into(), "no error".into(), e.to_string())),
    }
    if with_graphs {
        match graph::check_graphs(v) {
            Ok(found) => failures.extend(
                found
                    .into_iter()
                    .map(|f| (f.check.to_string(), f.expected, f.actual)),
            ),
            Err(e) => failures.push(("graphs".into(), "no error".into(), e.to_string())),
        }
    }
    log::info!("V={v}: {} failed checks", failures.len());
    VerifyOutcome { v, failures }
}

fn cmd_verify(vs: &[u64], with_graphs: bool, format: TableFormat) -> (Vec<u8>, bool) {
    let outcomes: Vec<VerifyOutcome> = vs.par_iter().map(|&v| verify_one(v, with_graphs)).collect();
    let failed: usize = outcomes.iter().map(|o| o.failures.len()).sum();
    let bytes = match format {
        TableFormat::Structured => structured(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "with_graphs": with_graphs,
            "checked": vs.len(),
            "passed": failed == 0,
            "failures": outcomes.iter().flat_map(|o| o.failures.iter().map(move |(check, expected, actual)| json!({
                "V": o.v, "check": check, "expected": expected, "actual": actual,
            }))).collect::<Vec<_>>(),
        })),
        TableFormat::Text | TableFormat::Csv => {
            let mut text = String::new();
            if format == TableFormat::Csv {
                text.push_str("V,check,expected,actual\n");
            }
            for o in &outcomes {
                for (check, expected, actual) in &o.failures {
                    if format == TableFormat::Csv {
                        text.push_str(&format!("{},{check},{expected},{actual}\n", o.v));
                    } else {
                        text.push_str(&format!(
                            "FAIL V={} {check}: expected {expected}, got {actual}\n",
                            o.v
                        ));
                    }
                }
            }
            if format == TableFormat::Text {
                let scope = if with_graphs {
                    "streams and graphs"
                } else {
                    "streams"
                };
                if failed == 0 {
                    text.push_str(&format!(
                        "ok: {} vertex counts verified ({scope})\n",
                        vs.len()
                    ));
                } else {
                    text.push_str(&format!("{failed} checks failed ({scope})\n"));
                }
            }
            text.into_bytes()
        }
    };
    (bytes, failed == 0)
}

fn cmd_congruence(n: u64, format: TableFormat) -> Result<Vec<u8>, Failure> {
    let naive = solve_naive(n)?;
    let f = factorize(n)?;
    let fast = solve_fast(&f);
    if fast != naive || fast.len() as u64 != f.omega_count() {
        return Err(Failure::Other(anyhow::anyhow!(
            "solvers disagree for n={n}: naive {:?}, fast {:?}, formula {}",
            naive.roots,
            fast.roots,
            f.omega_count()
        )));
    }
    Ok(match format {
        TableFormat::Structured => structured(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "congruence",
            "n": n,
            "roots": fast.roots,
            "count": fast.len(),
        })),
        TableFormat::Text | TableFormat::Csv => {
            let roots: Vec<String> = fast.roots.iter().map(u64::to_string).collect();
            format!("{}\ncount: {}\n", roots.join(" "), fast.len()).into_bytes()
        }
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .context("starting worker pool")?;
    pool.install(|| {
        let bytes = match &cli.command {
            Command::Count { range, format } => cmd_count(&vertex_counts(range)?, *format)?,
            Command::Enumerate { v, stream, format } => cmd_enumerate(*v, *stream, *format)?,
            Command::Build { sig, format } => cmd_build(sig, *format)?,
            Command::Verify {
                range,
                with_graphs,
                format,
            } => {
                let (bytes, ok) = cmd_verify(&vertex_counts(range)?, *with_graphs, *format);
                emit(&cli.output, &bytes)?;
                return if ok {
                    Ok(())
                } else {
                    Err(Failure::Verification)
                };
            }
            Command::Congruence { n, format } => cmd_congruence(*n, *format)?,
        };
        emit(&cli.output, &bytes)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).init();

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
