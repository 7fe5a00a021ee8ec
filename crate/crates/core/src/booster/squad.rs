use crate::exec::{self, Strategy};
use crate::graph::{Part, TripartiteGraph};

use super::Regularisation;

/// Vertices of one part with `f⁻ ≤ r`, each on at least `⌈k/800⌉` backward
/// `2tr`-boosters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquadCertificate {
    pub tau: usize,
    pub t: usize,
    pub k: usize,
    pub r: usize,
    pub part: Part,
    pub vertices: Vec<usize>,
    /// Backward `2tr`-booster edges per vertex.
    pub counts: Vec<usize>,
    pub f_minus: Vec<usize>,
}

impl SquadCertificate {
    pub fn threshold(&self) -> usize {
        2 * self.t * self.r
    }
}

/// `(v, count)` for every `v` in `part` meeting both vertex conditions.
pub fn qualifying_vertices(
    g: &TripartiteGraph,
    reg: &Regularisation,
    t: usize,
    k: usize,
    r: usize,
    part: Part,
    strategy: Strategy,
) -> Vec<(usize, usize)> {
    let range = g.part_range(part);
    let need = k.div_ceil(800);
    exec::map_range(strategy, range.len(), |i| {
        let v = range.start + i;
        if reg.f_minus[v] > r {
            return None;
        }
        // backward edge at v: forward edge u -> v from the previous part
        let count = g
            .neighbours_in(v, part.prev())
            .filter(|&u| reg.f_plus[u] + 2 * t * r <= reg.f_plus[v])
            .count();
        (count >= need).then_some((v, count))
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn find_squads(
    g: &TripartiteGraph,
    reg: &Regularisation,
    t: usize,
    k: usize,
    r: usize,
) -> Vec<SquadCertificate> {
    Part::ALL
        .into_iter()
        .filter_map(|part| {
            let found = qualifying_vertices(g, reg, t, k, r, part, Strategy::default());
            (!found.is_empty() && found.len() >= k.div_ceil(800)).then(|| SquadCertificate {
                tau: reg.tau,
                t,
                k,
                r,
                part,
                f_minus: found.iter().map(|&(v, _)| reg.f_minus[v]).collect(),
                vertices: found.iter().map(|&(v, _)| v).collect(),
                counts: found.into_iter().map(|(_, c)| c).collect(),
            })
        })
        .collect()
}
