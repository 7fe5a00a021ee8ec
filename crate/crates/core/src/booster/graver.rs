use crate::graph::TripartiteGraph;
use crate::patterns::KtttWitness;

use super::{regularise, BoosterError};

/// Triangle from `δ ≥ n + 1`: take `u` of minimal `f⁺`, its smallest forward
/// neighbour `v` (so `uv` is a booster) and their smallest common neighbour.
pub fn graver_triangle(g: &TripartiteGraph) -> Result<KtttWitness, BoosterError> {
    let reg = regularise(g, 1)?;
    let u = (0..g.order())
        .min_by_key(|&v| (reg.f_plus[v], v))
        .expect("non-empty graph");
    let v = g
        .neighbours_in(u, g.part_of(u).next())
        .next()
        .ok_or_else(|| BoosterError::Invariant(format!("vertex {u} has no forward neighbour")))?;
    let w = g
        .row(u)
        .and(g.row(v))
        .iter()
        .next()
        .ok_or_else(|| BoosterError::Invariant(format!("booster {u} -> {v} has codegree 0")))?;
    let mut parts = [Vec::new(), Vec::new(), Vec::new()];
    for x in [u, v, w] {
        parts[g.part_of(x).index()].push(x);
    }
    Ok(KtttWitness::from_parts(1, parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_n2() {
        let g = TripartiteGraph::complete([2; 3]);
        let w = graver_triangle(&g).unwrap();
        assert_eq!(w.triangle(), Some((0, 2, 4)));
        w.validate(&g).unwrap();
    }

    #[test]
    fn needs_min_degree() {
        let g = TripartiteGraph::from_edges([1; 3], [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            graver_triangle(&g),
            Err(BoosterError::Infeasible { .. })
        ));
    }
}
