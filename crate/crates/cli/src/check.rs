use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Args;
use tritur_core::certificate::{ktt_record, kttt_record, Record};
use tritur_core::graph::Graph;
use tritur_core::patterns::{contains_ktt_with, contains_kttt_with, find_triangle, SearchConfig};

use super::{exit, read_graph, with_suffix, write_file, BudgetArgs, Failure, Outcome, Pattern};

#[derive(Args, Debug, Clone)]
pub struct CheckArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Pattern::Kttt)]
    pub pattern: Pattern,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Where to write a witness; defaults to `<graph>.witness`.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

/// The witness record, if the pattern occurs.
pub(crate) fn detect(
    g: &Graph,
    pattern: Pattern,
    t: usize,
    cfg: &SearchConfig,
) -> Result<Option<Record>, Failure> {
    Ok(match (pattern, g) {
        (Pattern::Triangle, Graph::Tripartite(g)) => find_triangle(g).map(|w| kttt_record(&w)),
        (Pattern::Kttt, Graph::Tripartite(g)) => {
            contains_kttt_with(g, t, cfg)?.map(|w| kttt_record(&w))
        }
        (Pattern::Ktt, Graph::Bipartite(h)) => {
            contains_ktt_with(h, t, cfg)?.map(|w| ktt_record(&w))
        }
        (p, _) => {
            return Err(Failure::usage(format!(
                "pattern {p:?} does not apply to this graph"
            )))
        }
    })
}

pub(crate) fn witness_path(graph: &Path, explicit: &Option<PathBuf>) -> PathBuf {
    explicit
        .clone()
        .unwrap_or_else(|| with_suffix(graph, ".witness"))
}

pub fn run(args: &CheckArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    match detect(&g, args.pattern, args.t, &args.budget.config())? {
        None => {
            writeln!(out, "free")?;
            Ok(exit::OK)
        }
        Some(rec) => {
            let path = witness_path(&args.graph, &args.witness_out);
            write_file(&path, &format!("{rec}\n"))?;
            writeln!(out, "{rec}")?;
            Ok(exit::WITNESS)
        }
    }
}
