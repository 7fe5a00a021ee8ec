use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::TripartiteGraph;

use super::ConstructionError;

/// Each cross-part pair independently with probability `p`, scanned in
/// lexicographic order from a ChaCha stream seeded with `seed`.
pub fn sample_tripartite(sizes: [usize; 3], p: f64, seed: u64) -> TripartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = TripartiteGraph::complete(sizes);
    let edges: Vec<(usize, usize)> = full.edges().filter(|_| rng.gen_bool(p)).collect();
    TripartiteGraph::from_edges(sizes, edges).expect("edges of the complete graph")
}

/// Adds uniformly random cross-part edges at each vertex, in index order,
/// until every degree is at least `target`.
pub fn raise_min_degree(
    g: &TripartiteGraph,
    target: usize,
    seed: u64,
) -> Result<TripartiteGraph, ConstructionError> {
    let sizes = g.part_sizes();
    if let Some(v) = (0..g.order()).find(|&v| g.order() - sizes[g.part_of(v).index()] < target) {
        return Err(ConstructionError::InvalidArgument(format!(
            "vertex {v} cannot reach degree {target}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = g.to_builder();
    for v in 0..g.order() {
        let mut missing: Vec<usize> = (0..g.order())
            .filter(|&u| b.part_of(u) != b.part_of(v) && !b.has_edge(u, v))
            .collect();
        let mut deg = g.order() - sizes[g.part_of(v).index()] - missing.len();
        while deg < target {
            let u = missing.swap_remove(rng.gen_range(0..missing.len()));
            b.add_edge(u, v)?;
            deg += 1;
        }
    }
    Ok(b.build())
}
