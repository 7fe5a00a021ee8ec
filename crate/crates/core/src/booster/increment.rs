//! One codegree-reduction step on a dense subgraph of boosters.

use crate::graph::{Part, TripartiteGraph, VertexSet};
use crate::patterns::{contains_kttt_within, KtttWitness, SearchConfig};

use super::structure::{structure_extract, CrossSubgraph, StructureResult};
use super::{BoosterError, Regularisation};

#[derive(Clone, Debug, PartialEq)]
pub struct Refinement {
    pub tuple: Vec<usize>,
    /// Output of the structure step.
    pub a_prime: VertexSet,
    /// After sparsification.
    pub a_star: VertexSet,
    pub b_star: VertexSet,
    /// Vertices of `b_star` with few neighbours in `u1`.
    pub b_star2: VertexSet,
    pub u1: VertexSet,
    pub u2: VertexSet,
    pub sparse_threshold: f64,
    /// The sparse edges of `H[A*, B**]`, over the original `A` and `B`.
    pub h_prime: CrossSubgraph,
    pub max_codegree: usize,
    pub input_max_codegree: usize,
    /// `K (d |B|^{-1/t²} + n^{1-1/t})`, reported only.
    pub reported_bound: f64,
    /// `K_{t,t,t}` searches that were run and came back empty.
    pub attempts: Vec<&'static str>,
    /// Both halving hypotheses held, so `h_prime` has edges.
    pub precondition_held: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum IncrementOutcome {
    Witness {
        witness: KtttWitness,
        stage: &'static str,
    },
    Refined(Box<Refinement>),
}

fn max_codegree(g: &TripartiteGraph, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    edges
        .map(|(a, b)| g.row(a).and_count(g.row(b)))
        .max()
        .unwrap_or(0)
}

fn attempt(
    g: &TripartiteGraph,
    parts: [(Part, &VertexSet); 3],
    t: usize,
    cfg: &SearchConfig,
) -> Result<Option<KtttWitness>, BoosterError> {
    let mut sets = [
        VertexSet::new(g.order()),
        VertexSet::new(g.order()),
        VertexSet::new(g.order()),
    ];
    for (p, s) in parts {
        sets[p.index()] = s.clone();
    }
    Ok(contains_kttt_within(g, &sets, t, cfg)?)
}

/// Runs the structure step, the sparsification, the split of the third part
/// and the sparse-edge filter on `H`, where every edge of `H` is a booster of
/// codegree at most `d`.
pub fn increment_step(
    g: &TripartiteGraph,
    reg: &Regularisation,
    h: &CrossSubgraph,
    d: usize,
    t: usize,
    k: f64,
    cfg: &SearchConfig,
) -> Result<IncrementOutcome, BoosterError> {
    let (pa, pb) = (h.a_part(g), h.b_part(g));
    if pb != pa.next() {
        return Err(BoosterError::InvalidArgument(
            "B must lie in the part after A".into(),
        ));
    }
    let e = h.edge_count();
    if e == 0 {
        return Err(BoosterError::InvalidArgument("H has no edges".into()));
    }
    for (a, b) in h.edges() {
        if reg.f_plus[a] > reg.f_plus[b] {
            return Err(BoosterError::InvalidArgument(format!(
                "H edge {a}-{b} is not a booster"
            )));
        }
    }
    let input_max_codegree = max_codegree(g, h.edges());
    if input_max_codegree > d {
        return Err(BoosterError::InvalidArgument(format!(
            "H has codegree {input_max_codegree} > d = {d}"
        )));
    }
    let pc = pb.next();
    let v3 = g.part_set(pc);
    let sets = match structure_extract(g, reg, h, &v3, t, k, cfg)? {
        StructureResult::Witness(witness) => {
            return Ok(IncrementOutcome::Witness {
                witness,
                stage: "structure",
            })
        }
        StructureResult::Sets(s) => s,
    };

    // λ = e / (|A||B|); comparisons are cleared of denominators
    let (na, nb) = (h.a_ids.len(), h.b_ids.len());
    let a_prime_len = sets.a_star.len();
    let mut a_s = sets.a_star.clone();
    let mut b_s = VertexSet::from_ids(g.order(), h.b_ids.iter().copied());
    loop {
        let drop_a: Vec<usize> = a_s
            .iter()
            .filter(|&a| 4 * na * b_s.iter().filter(|&b| h.has_edge(a, b)).count() < e)
            .collect();
        let drop_b: Vec<usize> = b_s
            .iter()
            .filter(|&b| {
                4 * na * nb * a_s.iter().filter(|&a| h.has_edge(a, b)).count() < e * a_prime_len
            })
            .collect();
        if drop_a.is_empty() && drop_b.is_empty() {
            break;
        }
        drop_a.into_iter().for_each(|a| _ = a_s.remove(a));
        drop_b.into_iter().for_each(|b| _ = b_s.remove(b));
    }
    if a_prime_len > 0 && (a_s.is_empty() || b_s.is_empty()) {
        return Err(BoosterError::Invariant(
            "sparsification removed every edge".into(),
        ));
    }

    let mut common = v3.clone();
    for &b in &sets.tuple {
        common = common.intersection(&g.neighbour_set(b));
    }
    let rest = v3.difference(&common);
    let scale = 8 * na * nb;
    let (mut u1, mut u2) = (VertexSet::new(g.order()), VertexSet::new(g.order()));
    for v in rest.iter() {
        if scale * g.degree_into(v, &a_s) >= (scale - e) * a_s.len() {
            u1.insert(v);
        } else {
            u2.insert(v);
        }
    }

    let n = g.balanced_size().unwrap_or(g.part_sizes()[pc.index()]) as f64;
    let tf = t as f64;
    let root = n.powf(1.0 - 1.0 / tf);
    let b_star2 = VertexSet::from_ids(
        g.order(),
        b_s.iter()
            .filter(|&b| (g.degree_into(b, &u1) as f64) < 4.0 * k * root),
    );
    let mut attempts = Vec::new();
    let mut precondition_held = a_prime_len > 0;
    if 2 * b_star2.len() < b_s.len() {
        precondition_held = false;
        if let Some(w) = attempt(g, [(pa, &a_s), (pb, &b_s), (pc, &u1)], t, cfg)? {
            return Ok(IncrementOutcome::Witness {
                witness: w,
                stage: "U1",
            });
        }
        attempts.push("U1");
    }

    let lambda = e as f64 / (na * nb) as f64;
    let sparse_threshold = (128.0 * k * tf * tf * d as f64 / (lambda * lambda)
        * (lambda / 8.0 * nb as f64).powf(-1.0 / (tf * tf)))
    .max(tf);
    let mut total = 0;
    let mut sparse = Vec::new();
    for (a, b) in h.edges() {
        if a_s.contains(a) && b_star2.contains(b) {
            total += 1;
            if g.row(a).and2_count(g.row(b), u2.bits()) as f64 <= sparse_threshold {
                sparse.push((a, b));
            }
        }
    }
    if 2 * sparse.len() < total {
        precondition_held = false;
        if let Some(w) = attempt(g, [(pa, &a_s), (pb, &b_star2), (pc, &u2)], t, cfg)? {
            return Ok(IncrementOutcome::Witness {
                witness: w,
                stage: "U2",
            });
        }
        attempts.push("U2");
    }
    let a_all = VertexSet::from_ids(g.order(), h.a_ids.iter().copied());
    let b_all = VertexSet::from_ids(g.order(), h.b_ids.iter().copied());
    let h_prime = CrossSubgraph::from_edges(g, &a_all, &b_all, sparse)?;
    if precondition_held && h_prime.edge_count() == 0 {
        return Err(BoosterError::Invariant("no sparse edges survived".into()));
    }
    Ok(IncrementOutcome::Refined(Box::new(Refinement {
        tuple: sets.tuple,
        a_prime: sets.a_star,
        a_star: a_s,
        b_star: b_s,
        b_star2,
        u1,
        u2,
        sparse_threshold,
        max_codegree: max_codegree(g, h_prime.edges()),
        h_prime,
        input_max_codegree,
        reported_bound: k * (d as f64 * (nb as f64).powf(-1.0 / (tf * tf)) + root),
        attempts,
        precondition_held,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::booster::regularise;

    #[test]
    fn complete_graph_witness_first() {
        let g = TripartiteGraph::complete([4; 3]);
        let reg = regularise(&g, 4).unwrap();
        let h = CrossSubgraph::induced(&g, &g.part_set(Part::V1), &g.part_set(Part::V2)).unwrap();
        match increment_step(&g, &reg, &h, 4, 2, 2.0, &SearchConfig::default()).unwrap() {
            IncrementOutcome::Witness { witness, stage } => {
                assert_eq!(stage, "structure");
                witness.validate(&g).unwrap();
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = TripartiteGraph::complete([3; 3]);
        let reg = regularise(&g, 3).unwrap();
        let h = CrossSubgraph::induced(&g, &g.part_set(Part::V1), &g.part_set(Part::V2)).unwrap();
        assert!(increment_step(&g, &reg, &h, 2, 2, 2.0, &SearchConfig::default()).is_err());
        let back =
            CrossSubgraph::induced(&g, &g.part_set(Part::V2), &g.part_set(Part::V1)).unwrap();
        assert!(increment_step(&g, &reg, &back, 3, 2, 2.0, &SearchConfig::default()).is_err());
    }
}
