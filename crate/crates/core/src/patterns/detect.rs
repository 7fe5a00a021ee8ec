use crate::bits::Bits;
use crate::graph::{BipartiteGraph, Part, TripartiteGraph, VertexSet};

use super::search::{
    first_biclique, first_biclique_nested, ColexSearch, Counter, SearchConfig, SearchError,
};
use super::witness::{KttWitness, KtttWitness};

/// Brute-force triangle search. The first triangle in `(V1, V2, V3)`
/// lexicographic order is returned.
pub fn find_triangle(g: &TripartiteGraph) -> Option<KtttWitness> {
    for u in g.part_range(Part::V1) {
        let row = g.row(u);
        for v in g.neighbours_in(u, Part::V2) {
            if let Some(w) = row.and(g.row(v)).iter().next() {
                return Some(KtttWitness {
                    t: 1,
                    a: vec![u],
                    b: vec![v],
                    c: vec![w],
                });
            }
        }
    }
    None
}

pub fn contains_ktt(h: &BipartiteGraph, t: usize) -> Result<Option<KttWitness>, SearchError> {
    contains_ktt_with(h, t, &SearchConfig::default())
}

/// Exact `K_{t,t}` detection by enumerating `t`-subsets of the smaller side
/// (the left side on ties).
pub fn contains_ktt_with(
    h: &BipartiteGraph,
    t: usize,
    cfg: &SearchConfig,
) -> Result<Option<KttWitness>, SearchError> {
    let on_left = h.left_size() <= h.right_size();
    let (rows, other) = if on_left {
        (h.left_rows(), h.right_size())
    } else {
        (h.right_cols(), h.left_size())
    };
    let cands: Vec<usize> = (0..rows.len()).collect();
    let mask = Bits::with_range(other, 0..other);
    let hit = first_biclique(rows, &cands, &mask, t, cfg)?;
    Ok(hit.map(|(chosen, common)| {
        let across = common.first_n(t);
        let (left, right) = if on_left {
            (chosen, across)
        } else {
            (across, chosen)
        };
        KttWitness { t, left, right }
    }))
}

pub fn contains_kttt(g: &TripartiteGraph, t: usize) -> Result<Option<KtttWitness>, SearchError> {
    contains_kttt_with(g, t, &SearchConfig::default())
}

pub fn contains_kttt_with(
    g: &TripartiteGraph,
    t: usize,
    cfg: &SearchConfig,
) -> Result<Option<KtttWitness>, SearchError> {
    let sets = Part::ALL.map(|p| g.part_set(p));
    contains_kttt_within(g, &sets, t, cfg)
}

/// Exact `K_{t,t,t}` detection inside `sets[0] × sets[1] × sets[2]`, where
/// `sets[i]` lies in part `i`.
///
/// The outer search runs over `t`-subsets of `sets[2]` whose common
/// neighbourhood still meets both other sets in at least `t` vertices; for
/// each, a `K_{t,t}` is sought in the common-neighbourhood bipartite graph.
pub fn contains_kttt_within(
    g: &TripartiteGraph,
    sets: &[VertexSet; 3],
    t: usize,
    cfg: &SearchConfig,
) -> Result<Option<KtttWitness>, SearchError> {
    for p in Part::ALL {
        let s = &sets[p.index()];
        if s.universe() != g.order() || !s.bits().is_subset(g.part_mask(p)) {
            return Err(SearchError::InvalidArgument(format!(
                "set {} does not lie in part {p}",
                p.number()
            )));
        }
    }
    let s1 = sets[0].bits();
    let s2 = sets[1].bits();
    let mut start = s1.clone();
    start.or_assign(s2);
    let cands = sets[2].ids();
    ColexSearch {
        rows: g.rows(),
        cands: &cands,
        t,
        start: &start,
        keep: |acc: &Bits| acc.and_count(s1) >= t && acc.and_count(s2) >= t,
        leaf: |c: &[usize], acc: &Bits, ctr: &mut Counter| {
            let x = acc.and(s1);
            let y = acc.and(s2);
            let swap = y.count() < x.count();
            let (inner, mask) = if swap { (y, x) } else { (x, y) };
            let inner_ids: Vec<usize> = inner.iter().collect();
            let hit = first_biclique_nested(g.rows(), &inner_ids, &mask, t, ctr)?;
            Ok(hit.map(|(chosen, common)| {
                let across = common.first_n(t);
                let (a, b) = if swap {
                    (across, chosen)
                } else {
                    (chosen, across)
                };
                KtttWitness {
                    t,
                    a,
                    b,
                    c: c.to_vec(),
                }
            }))
        },
    }
    .run(cfg)
}
