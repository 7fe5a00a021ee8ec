use crate::exec::{self, Strategy};
use crate::graph::TripartiteGraph;

use super::Regularisation;

/// A forward edge `u -> v` with its booster and heaviness levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoosterLabel {
    pub u: usize,
    pub v: usize,
    /// `f⁺(v) − f⁺(u)`; the edge is an `r`-booster iff this is at least `r`.
    pub booster_level: i64,
    /// `deg(u, v)`.
    pub heavy_level: usize,
}

impl BoosterLabel {
    pub fn is_booster(&self) -> bool {
        self.booster_level >= 0
    }

    pub fn is_r_booster(&self, r: i64) -> bool {
        self.booster_level >= r
    }
}

pub fn classify_edges(g: &TripartiteGraph, reg: &Regularisation) -> Vec<BoosterLabel> {
    classify_edges_with(g, reg, Strategy::default())
}

/// Labels every forward edge, ordered by `u` then `v`.
pub fn classify_edges_with(
    g: &TripartiteGraph,
    reg: &Regularisation,
    strategy: Strategy,
) -> Vec<BoosterLabel> {
    exec::map_range(strategy, g.order(), |u| {
        g.neighbours_in(u, g.part_of(u).next())
            .map(|v| BoosterLabel {
                u,
                v,
                booster_level: reg.f_plus[v] as i64 - reg.f_plus[u] as i64,
                heavy_level: g.row(u).and_count(g.row(v)),
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}
