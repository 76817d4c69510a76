//! The `qstr` command line: argument parsing and dispatch.
//!
//! [`run`] returns the exit code and both output streams so the binary stays
//! a thin wrapper and tests can drive commands in-process.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::bounds;
use crate::graph::{build_graph, GraphKind};
use crate::labeling::{label_of, string_of, Labeling, ENUMERATE_MAX_N};
use crate::render::{self, Format, SolveReport, StrengthReport};
use crate::solver::{self, SolveBudget, Status};
use crate::strength::{self, EDGE_SCAN_MAX_N, PAIR_SCAN_MAX_N};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_NOT_OPTIMAL: i32 = 3;

/// Environment variable capping the worker threads (0 or unset = one per core).
pub const THREADS_ENV: &str = "QSTR_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qstr", version, about = "Strength of hypercube labelings")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Markdown)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Look up labels, strings, or the whole label table.
    Label(LabelArgs),
    /// Strength of the canonical labeling of Q_n.
    Strength(StrengthArgs),
    /// Exact minimum strength of a small graph.
    Exact(ExactArgs),
    /// Lower and upper bounds on the strength of Q_n.
    Bounds(BoundsArgs),
    /// Run invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("query").required(true).args(["string", "value", "table"])))]
pub struct LabelArgs {
    #[arg(long)]
    pub n: usize,
    /// Bit string whose label to print.
    #[arg(long)]
    pub string: Option<String>,
    /// Label whose bit string to print.
    #[arg(long)]
    pub value: Option<String>,
    /// Print every string with its label.
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrengthMethod {
    Edges,
    Scan,
}

#[derive(Debug, Args)]
pub struct StrengthArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = StrengthMethod::Scan)]
    pub method: StrengthMethod,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long, value_enum)]
    pub graph: GraphKind,
    #[arg(long)]
    pub n: usize,
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 60.0)]
    pub time_limit: f64,
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// JSON array of labels, one per vertex, used as the starting labeling.
    #[arg(long)]
    pub seed_labeling: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
}

/// Result of a single `label --string` or `label --value` lookup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelLookup {
    pub n: usize,
    pub bit_string: String,
    #[serde(with = "crate::decimal")]
    pub label: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::usage(text)
            } else {
                Output::ok(text)
            };
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(msg) => return Output::usage(msg),
    };
    pool.install(|| execute(&cli))
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("{THREADS_ENV} must be a nonnegative integer, got {v:?}"))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())
}

pub fn execute(cli: &Cli) -> Output {
    let fmt = cli.format;
    match &cli.command {
        Command::Label(a) => label(a, fmt),
        Command::Strength(a) => strength(a, fmt),
        Command::Exact(a) => exact(a, fmt),
        Command::Bounds(a) => match bounds::comparison_table(a.n_min, a.n_max) {
            Ok(_) if a.n_min > a.n_max => Output::usage(format!(
                "empty range: n-min {} > n-max {}",
                a.n_min, a.n_max
            )),
            Ok(rows) => Output::ok(render::render_bounds(&rows, fmt)),
            Err(e) => Output::usage(e.to_string()),
        },
        Command::Verify(a) => {
            let reports = verify::run(a.suite, a.n_max);
            let mut out = Output::ok(render::render_verify(&reports, fmt));
            if !reports.iter().all(|r| r.passed()) {
                out.code = EXIT_VERIFY_FAILED;
                for r in &reports {
                    for c in r.checks.iter().filter(|c| !c.passed) {
                        out.stderr.push_str(&format!(
                            "{}: {} failed at {}\n",
                            r.suite,
                            c.name,
                            c.counterexample.as_deref().unwrap_or("?")
                        ));
                    }
                }
            }
            out
        }
    }
}

fn label(a: &LabelArgs, fmt: Format) -> Output {
    if a.n == 0 {
        return Output::usage("n must be at least 1");
    }
    if a.table {
        if a.n > ENUMERATE_MAX_N {
            return Output::usage(format!("--table supports n <= {ENUMERATE_MAX_N}"));
        }
        return match render::label_rows(a.n) {
            Ok(rows) => Output::ok(render::render_label_rows(&rows, fmt)),
            Err(e) => Output::usage(e.to_string()),
        };
    }
    let lookup = if let Some(s) = &a.string {
        s.parse::<BitString>()
            .and_then(|x| Ok((label_of(a.n, &x)?, x)))
            .map(|(label, x)| LabelLookup {
                n: a.n,
                bit_string: x.to_string(),
                label,
            })
    } else if let Some(v) = &a.value {
        let Ok(label) = v.trim().parse::<BigUint>() else {
            return Output::usage(format!("not a label: {v:?}"));
        };
        string_of(a.n, &label).map(|x| LabelLookup {
            n: a.n,
            bit_string: x.to_string(),
            label,
        })
    } else {
        unreachable!("clap requires one query")
    };
    match lookup {
        Ok(l) => Output::ok(render_lookup(&l, fmt, a.string.is_some())),
        Err(e) => Output::usage(e.to_string()),
    }
}

fn render_lookup(l: &LabelLookup, fmt: Format, by_string: bool) -> String {
    match fmt {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(l).expect("serializes")),
        Format::Csv => format!("n,bit_string,label\n{},{},{}\n", l.n, l.bit_string, l.label),
        Format::Markdown if by_string => format!("{}\n", l.label),
        Format::Markdown => format!("{}\n", l.bit_string),
    }
}

fn strength(a: &StrengthArgs, fmt: Format) -> Output {
    let (limit, other) = match a.method {
        StrengthMethod::Edges => (EDGE_SCAN_MAX_N, "scan"),
        StrengthMethod::Scan => (PAIR_SCAN_MAX_N, "edges"),
    };
    if a.n > limit {
        let hint = if a.method == StrengthMethod::Edges && a.n <= PAIR_SCAN_MAX_N {
            format!("; try --method {other}")
        } else {
            String::new()
        };
        return Output::usage(
            format!("--method {:?} supports n <= {limit}{hint}", a.method).to_lowercase(),
        );
    }
    let start = Instant::now();
    let result = match a.method {
        StrengthMethod::Edges => strength::strf_hypercube_edges(a.n),
        StrengthMethod::Scan => strength::strf_hypercube_scan(a.n),
    };
    match result {
        Ok(r) => {
            let report = StrengthReport::new(a.n, &r, elapsed_ms(start));
            Output::ok(render::render_strength(&report, fmt))
        }
        Err(e) => Output::usage(e.to_string()),
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX)
}

fn exact(a: &ExactArgs, fmt: Format) -> Output {
    let g = match build_graph(a.graph, a.n) {
        Ok(g) => g,
        Err(e) => return Output::usage(e.to_string()),
    };
    if !(a.time_limit.is_finite() && a.time_limit > 0.0) {
        return Output::usage("--time-limit must be a positive number of seconds");
    }
    let budget = match SolveBudget::new(Some(Duration::from_secs_f64(a.time_limit)), a.node_limit) {
        Ok(b) => b,
        Err(e) => return Output::usage(e.to_string()),
    };
    let seed = match &a.seed_labeling {
        None => solver::default_seed(&g),
        Some(path) => match read_seed(path) {
            Ok(s) => s,
            Err(msg) => return Output::usage(msg),
        },
    };
    let start = Instant::now();
    let outcome = match solver::min_strength_from(&g, seed, &budget) {
        Ok(o) => o,
        Err(e) => return Output::usage(e.to_string()),
    };
    let name = a
        .graph
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let report = SolveReport::new(&name, a.n, g.hypercube_dim(), &outcome, elapsed_ms(start));
    let mut out = Output::ok(render::render_solve(&report, fmt));
    if outcome.status != Status::Optimal {
        out.code = EXIT_NOT_OPTIMAL;
    }
    out
}

fn read_seed(path: &std::path::Path) -> Result<Labeling, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let labels: Vec<u64> =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Labeling::from_labels(labels, format!("seed from {}", path.display()))
        .map_err(|e| e.to_string())
}
