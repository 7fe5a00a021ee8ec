use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Args;
use tritur_core::booster::{
    certify_booster, classify_edges, default_tau, find_squads, initial_configuration, regularise,
    scale_k, BoosterError,
};
use tritur_core::certificate::{boost_record, icfg_record, squad_record};
use tritur_core::graph::{Graph, GraphError};

use super::{exit, read_graph, with_suffix, write_file, Failure, Outcome};

#[derive(Args, Debug, Clone)]
pub struct AnalyzeArgs {
    pub graph: PathBuf,
    /// Defaults to max(1, δ − n).
    #[arg(long, allow_negative_numbers = true)]
    pub tau: Option<i64>,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Squad f⁻ bounds; defaults to tau.
    #[arg(long)]
    pub r: Vec<usize>,
    /// Defaults to `<graph>.analysis`.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Also run the initial-configuration case analysis.
    #[arg(long)]
    pub initial_config: bool,
    /// Number of booster certificates to emit.
    #[arg(long, default_value_t = 8)]
    pub sample: usize,
}

fn booster_failure(e: BoosterError) -> Failure {
    match e {
        BoosterError::TauTooSmall(_) | BoosterError::Infeasible { .. } => {
            Failure::new(exit::INFEASIBLE, e.to_string())
        }
        other => Failure::usage(other.to_string()),
    }
}

fn file_name(p: &Path) -> String {
    p.file_name().map_or_else(
        || p.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

pub fn run(args: &AnalyzeArgs, out: &mut dyn Write) -> Outcome {
    let Graph::Tripartite(g) = read_graph(&args.graph)? else {
        return Err(Failure::usage("analyze needs a tripartite graph"));
    };
    let (tau, source) = match args.tau {
        Some(t) => (t, "override"),
        None => match default_tau(&g) {
            Ok(t) => (t, "default"),
            Err(e @ GraphError::Unbalanced(_)) => return Err(Failure::usage(e.to_string())),
            Err(e) => return Err(Failure::usage(e.to_string())),
        },
    };
    let reg = regularise(&g, tau).map_err(booster_failure)?;
    let tau = reg.tau;
    let labels = classify_edges(&g, &reg);
    let dir = args
        .out_dir
        .clone()
        .unwrap_or_else(|| with_suffix(&args.graph, ".analysis"));
    let meta = format!(
        "# graph={} tau={tau} tau_source={source} t={}\n",
        file_name(&args.graph),
        args.t
    );

    let mut regs = meta.clone() + "vertex\tpart\tdeg_plus\tdeg_minus\tf_plus\tf_minus\n";
    for v in 0..g.order() {
        writeln!(
            regs,
            "{v}\t{}\t{}\t{}\t{}\t{}",
            g.part_of(v).number(),
            g.forward_degree(v),
            g.backward_degree(v),
            reg.f_plus[v],
            reg.f_minus[v]
        )
        .unwrap();
    }

    // level -> (edges, min codegree)
    let mut by_level: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    let mut by_codegree: BTreeMap<usize, usize> = BTreeMap::new();
    for l in &labels {
        let e = by_level.entry(l.booster_level).or_insert((0, usize::MAX));
        e.0 += 1;
        e.1 = e.1.min(l.heavy_level);
        *by_codegree.entry(l.heavy_level).or_default() += 1;
    }
    let mut boosters = meta.clone() + "booster_level\tedges\tmin_codegree\tmin_slack\n";
    for (level, (edges, minc)) in &by_level {
        let slack = if *level >= 0 {
            (*minc as i64 - tau as i64 - level).to_string()
        } else {
            "-".into()
        };
        writeln!(boosters, "{level}\t{edges}\t{minc}\t{slack}").unwrap();
    }
    let mut heavy = meta.clone() + "codegree\tedges\n";
    for (c, edges) in &by_codegree {
        writeln!(heavy, "{c}\t{edges}").unwrap();
    }

    let mut ranked: Vec<(usize, _)> = labels
        .iter()
        .enumerate()
        .filter(|(_, l)| l.is_booster())
        .collect();
    ranked.sort_by_key(|&(rank, l)| (std::cmp::Reverse(l.booster_level), rank));
    let mut certs = meta.clone();
    for &(rank, l) in ranked.iter().take(args.sample) {
        let c = certify_booster(&g, &reg, l.u, l.v).map_err(booster_failure)?;
        writeln!(certs, "{}", boost_record(&c, rank)).unwrap();
    }
    let k = scale_k(&reg);
    let icfg = args
        .initial_config
        .then(|| icfg_record(&initial_configuration(&g, &reg), tau));
    if let Some(rec) = &icfg {
        writeln!(certs, "{rec}").unwrap();
    }
    let rs = if args.r.is_empty() {
        vec![tau]
    } else {
        args.r.clone()
    };
    let mut squads = 0;
    for &r in &rs {
        for s in find_squads(&g, &reg, args.t, k, r) {
            writeln!(certs, "{}", squad_record(&s)).unwrap();
            squads += 1;
        }
    }

    let min_booster = labels
        .iter()
        .filter(|l| l.is_booster())
        .map(|l| l.heavy_level)
        .min();
    let rows = [
        ("n", reg.n.to_string()),
        ("order", g.order().to_string()),
        ("min_degree", g.min_degree().unwrap_or(0).to_string()),
        ("tau", tau.to_string()),
        ("forward_edges", labels.len().to_string()),
        ("boosters", ranked.len().to_string()),
        (
            "min_booster_codegree",
            min_booster.map_or("-".into(), |c| c.to_string()),
        ),
        ("scale_k", k.to_string()),
        (
            "booster_certificates",
            ranked.len().min(args.sample).to_string(),
        ),
        ("squads", squads.to_string()),
    ];
    let mut summary = meta + "key\tvalue\n";
    for (k, v) in rows {
        writeln!(summary, "{k}\t{v}").unwrap();
    }

    write_file(&dir.join("summary.tsv"), &summary)?;
    write_file(&dir.join("regularisation.tsv"), &regs)?;
    write_file(&dir.join("boosters.tsv"), &boosters)?;
    write_file(&dir.join("heavy.tsv"), &heavy)?;
    write_file(&dir.join("certificates.txt"), &certs)?;
    out.write_all(summary.as_bytes())?;
    if let Some(rec) = icfg {
        writeln!(out, "{rec}")?;
    }
    Ok(exit::OK)
}
