#![allow(dead_code)]

use std::path::{Path, PathBuf};

use tritur_core::graph::TripartiteGraph;

pub struct Run {
    pub code: i32,
    pub out: String,
    pub err: String,
}

/// Runs the CLI in-process.
pub fn tritur(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tritur").chain(args.iter().copied());
    let code = tritur::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

pub fn write_graph(dir: &Path, name: &str, g: &TripartiteGraph) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, g.to_text()).unwrap();
    p
}

pub fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// K_{12,12,12} without the edges (j, 24 + j), j = 1..11; analysed at tau = 3
/// vertex 0 is the only heavy vertex.
pub fn heavy_fixture() -> TripartiteGraph {
    let n = 12;
    let edges: Vec<(usize, usize)> = TripartiteGraph::complete([n; 3])
        .edges()
        .filter(|&(u, v)| !(1..n).any(|j| (u, v) == (j, 2 * n + j)))
        .collect();
    TripartiteGraph::from_edges([n; 3], edges).unwrap()
}

/// K_{5,5,5} at tau = 5: every forward edge is a booster.
pub fn dense_fixture() -> TripartiteGraph {
    TripartiteGraph::complete([5; 3])
}

/// K_{4,4,4} where vertex 0 keeps a single forward edge; at tau = 1 it holds
/// one squad in V2.
pub fn squad_fixture() -> TripartiteGraph {
    let n = 4;
    let edges: Vec<(usize, usize)> = TripartiteGraph::complete([n; 3])
        .edges()
        .filter(|&(u, v)| !(u == 0 && (n + 1..2 * n).contains(&v)))
        .collect();
    TripartiteGraph::from_edges([n; 3], edges).unwrap()
}
