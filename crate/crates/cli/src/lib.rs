//! Command-line driver: generate graph families, check pattern freeness,
//! analyze degree structure and verify certificates.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use tritur_core::graph::{parse_graph, Graph};
use tritur_core::patterns::{SearchConfig, SearchError, DEFAULT_BUDGET};

mod analyze;
mod check;
mod gen;
mod report;
mod verify;

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const BUDGET: i32 = 2;
    pub const INFEASIBLE: i32 = 3;
    pub const WITNESS: i32 = 10;
    pub const MISMATCH: i32 = 11;
}

#[derive(Parser, Debug)]
#[command(name = "tritur", version, about = "Tripartite Turán toolkit")]
pub struct Cli {
    /// Worker threads for parallel search.
    #[arg(long, env = "TRITUR_THREADS", global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated graph.
    Gen(gen::GenArgs),
    /// Decide whether a graph contains a pattern.
    Check(check::CheckArgs),
    /// Regularisation, booster statistics and certificates.
    Analyze(analyze::AnalyzeArgs),
    /// Re-validate certificate records against a graph.
    VerifyCert(verify::VerifyArgs),
    /// Check many graphs and tabulate the verdicts.
    Report(report::ReportArgs),
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Maximum number of search nodes before giving up.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

impl BudgetArgs {
    pub fn config(&self) -> SearchConfig {
        SearchConfig::with_budget(self.budget)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Triangle,
    Ktt,
    Kttt,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure::new(exit::USAGE, message)
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => Failure::new(exit::BUDGET, e.to_string()),
            SearchError::InvalidArgument(_) => Failure::usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

pub type Outcome = Result<i32, Failure>;

pub(crate) fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub(crate) fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub(crate) fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn init_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // a second configuration in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = if code == exit::OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    init_threads(cli.threads);
    let res = match &cli.command {
        Command::Gen(a) => gen::run(a, out),
        Command::Check(a) => check::run(a, out),
        Command::Analyze(a) => analyze::run(a, out),
        Command::VerifyCert(a) => verify::run(a, out),
        Command::Report(a) => report::run(a, out),
    };
    match res {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
