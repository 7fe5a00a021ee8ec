use std::ops::Range;

use crate::graph::{Part, TripartiteBuilder, TripartiteGraph};

use super::{BaseGraph, ConstructionError, Weighting};

/// The weighted blowup `(G, σ·ω)` together with the index range `I_v` of
/// every base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub graph: TripartiteGraph,
    pub classes: Vec<Range<usize>>,
}

/// Replaces base vertex `v` by an independent set of size `σ·ω(v)` and each
/// edge by a complete bipartite graph. Classes are contiguous and follow base
/// order within each part.
pub fn blowup(
    base: &BaseGraph,
    weighting: &Weighting,
    sigma: usize,
) -> Result<Blowup, ConstructionError> {
    let parts = base.parts().ok_or_else(|| {
        ConstructionError::InvalidArgument("base graph has no declared parts".into())
    })?;
    if weighting.len() != base.order() {
        return Err(ConstructionError::InvalidArgument(
            "weighting size differs from base order".into(),
        ));
    }
    if sigma == 0 {
        return Err(ConstructionError::InvalidArgument(
            "sigma must be at least 1".into(),
        ));
    }
    let w = weighting.scaled(sigma);
    let mut sizes = [0usize; 3];
    for (v, p) in parts.iter().enumerate() {
        sizes[p.index()] += w.get(v);
    }
    let mut next = [0, sizes[0], sizes[0] + sizes[1]];
    let mut classes = vec![0..0; base.order()];
    for p in Part::ALL {
        for v in (0..base.order()).filter(|&v| parts[v] == p) {
            let start = next[p.index()];
            next[p.index()] += w.get(v);
            classes[v] = start..next[p.index()];
        }
    }
    let mut b = TripartiteBuilder::new(sizes);
    for (u, v) in base.edges() {
        for x in classes[u].clone() {
            for y in classes[v].clone() {
                b.add_edge(x, y)?;
            }
        }
    }
    Ok(Blowup {
        graph: b.build(),
        classes,
    })
}
