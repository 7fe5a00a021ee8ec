use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use tritur_core::graph::Graph;

use super::check::{detect, witness_path};
use super::{exit, read_graph, write_file, BudgetArgs, Failure, Outcome, Pattern};

#[derive(Args, Debug, Clone)]
pub struct ReportArgs {
    #[arg(required = true)]
    pub graphs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Pattern::Kttt)]
    pub pattern: Pattern,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// TSV destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record wall time per graph, which makes the output non-reproducible.
    #[arg(long)]
    pub timing: bool,
}

pub fn run(args: &ReportArgs, out: &mut dyn Write) -> Outcome {
    let cfg = args.budget.config();
    let mut tsv = format!(
        "# pattern={:?} t={} budget={} timing={}\n",
        args.pattern, args.t, args.budget.budget, args.timing
    )
    .to_lowercase();
    tsv.push_str("graph\tn\ttau\tmin_degree\tverdict\tartifact\twall_ms\n");
    for path in &args.graphs {
        let g = read_graph(path)?;
        let (n, delta) = match &g {
            Graph::Tripartite(g) => (
                g.balanced_size().map_or("-".into(), |n| n.to_string()),
                g.min_degree(),
            ),
            Graph::Bipartite(h) => (
                format!("{}x{}", h.left_size(), h.right_size()),
                h.min_degree(),
            ),
        };
        let tau = match (&g, delta) {
            (Graph::Tripartite(t), Some(_)) => t.tau_of().map_or("-".into(), |x| x.to_string()),
            _ => "-".into(),
        };
        let start = Instant::now();
        let found = detect(&g, args.pattern, args.t, &cfg);
        let ms = start.elapsed().as_millis();
        let (verdict, artifact) = match found {
            Ok(None) => ("free".to_string(), path.display().to_string()),
            Ok(Some(rec)) => {
                let w = witness_path(path, &None);
                write_file(&w, &format!("{rec}\n"))?;
                ("witness".to_string(), w.display().to_string())
            }
            Err(Failure {
                code: exit::BUDGET, ..
            }) => ("budget".to_string(), "-".to_string()),
            Err(f) => return Err(f),
        };
        let wall = if args.timing {
            ms.to_string()
        } else {
            "-".into()
        };
        let delta = delta.map_or("-".into(), |d| d.to_string());
        writeln!(
            tsv,
            "{}\t{n}\t{tau}\t{delta}\t{verdict}\t{artifact}\t{wall}",
            path.display()
        )
        .unwrap();
    }
    match &args.out {
        Some(p) => write_file(p, &tsv)?,
        None => out.write_all(tsv.as_bytes())?,
    }
    Ok(exit::OK)
}
