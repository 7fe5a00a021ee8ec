//! `K_{t,t}`-free bipartite gadgets and the surgery that fits them to `σ × n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::Bits;
use crate::graph::BipartiteGraph;
use crate::patterns::{contains_ktt_with, SearchConfig};

use super::{ConstructionError, ConstructionRecipe, GadgetKind};

fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Nonzero vectors of `F_q^3` whose first nonzero coordinate is 1, in
/// lexicographic order.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Point-line incidence graph of `PG(2, q)` for prime `q`: point `p` is
/// adjacent to line `l` when `p · l = 0` over `F_q`.
pub fn pg_incidence(q: u64) -> Result<BipartiteGraph, ConstructionError> {
    if !is_prime(q) {
        return Err(ConstructionError::InvalidArgument(format!(
            "q = {q} is not prime"
        )));
    }
    let pts = projective_points(q);
    let m = pts.len();
    let edges = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let (a, b) = (pts[i], pts[j]);
            (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0
        });
    Ok(BipartiteGraph::from_edges(m, m, edges)?)
}

/// Edge probability `½ n^{-2/(t+1)}` for the deletion method.
pub fn deletion_probability(n: usize, t: usize) -> f64 {
    0.5 * (n as f64).powf(-2.0 / (t as f64 + 1.0))
}

/// Samples `n × n` with probability [`deletion_probability`] from a ChaCha
/// stream seeded with `seed`, scanning pairs in lexicographic order.
pub fn sample_bipartite(n: usize, p: f64, seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for l in 0..n {
        for r in 0..n {
            if rng.gen_bool(p) {
                edges.push((l, r));
            }
        }
    }
    BipartiteGraph::from_edges(n, n, edges).expect("ids in range")
}

/// Random `K_{t,t}`-free graph: sample, then repeatedly take the colex-least
/// remaining `K_{t,t}` and delete the edge between its two smallest vertices.
pub fn random_deletion_free(
    n: usize,
    t: usize,
    seed: u64,
    cfg: &SearchConfig,
) -> Result<BipartiteGraph, ConstructionError> {
    if t < 2 || n < t {
        return Err(ConstructionError::InvalidArgument(format!(
            "need n >= t >= 2, got n={n}, t={t}"
        )));
    }
    let mut h = sample_bipartite(n, deletion_probability(n, t), seed);
    let mut rows: Vec<Bits> = (0..n)
        .map(|l| Bits::from_iter_in(n, h.left_neighbours(l)))
        .collect();
    while let Some(w) = contains_ktt_with(&h, t, cfg)? {
        rows[w.left[0]].remove(w.right[0]);
        let edges = rows
            .iter()
            .enumerate()
            .flat_map(|(l, r)| r.iter().map(move |x| (l, x)));
        h = BipartiteGraph::from_edges(n, n, edges)?;
    }
    Ok(h)
}

/// Result of [`trim_min_degree`]: the core and the original ids it keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trimmed {
    pub graph: BipartiteGraph,
    pub left_kept: Vec<usize>,
    pub right_kept: Vec<usize>,
}

/// Repeatedly deletes vertices of degree at most `threshold`. The surviving
/// core is the unique maximal induced subgraph of minimum degree above the
/// threshold, so the deletion order does not matter.
pub fn trim_min_degree(h: &BipartiteGraph, threshold: usize) -> Trimmed {
    let (nl, nr) = (h.left_size(), h.right_size());
    let mut alive = [vec![true; nl], vec![true; nr]];
    let mut deg = [
        (0..nl).map(|l| h.left_degree(l)).collect::<Vec<_>>(),
        (0..nr).map(|r| h.right_degree(r)).collect::<Vec<_>>(),
    ];
    let mut stack: Vec<(usize, usize)> = (0..2)
        .flat_map(|s| (0..deg[s].len()).map(move |v| (s, v)))
        .filter(|&(s, v)| deg[s][v] <= threshold)
        .collect();
    for &(s, v) in &stack {
        alive[s][v] = false;
    }
    while let Some((side, v)) = stack.pop() {
        let nbrs: Vec<usize> = if side == 0 {
            h.left_neighbours(v).collect()
        } else {
            h.right_neighbours(v).collect()
        };
        let other = 1 - side;
        for u in nbrs {
            if alive[other][u] {
                deg[other][u] -= 1;
                if deg[other][u] <= threshold {
                    alive[other][u] = false;
                    stack.push((other, u));
                }
            }
        }
    }
    let left_kept: Vec<usize> = (0..nl).filter(|&l| alive[0][l]).collect();
    let right_kept: Vec<usize> = (0..nr).filter(|&r| alive[1][r]).collect();
    Trimmed {
        graph: h.induced(&left_kept, &right_kept),
        left_kept,
        right_kept,
    }
}

/// Source graph for the recipe's gadget kind.
pub fn gadget_source(
    recipe: &ConstructionRecipe,
    cfg: &SearchConfig,
) -> Result<BipartiteGraph, ConstructionError> {
    match recipe.gadget {
        GadgetKind::Pg => pg_incidence(recipe.q),
        GadgetKind::Random => random_deletion_free(recipe.n(), recipe.t, recipe.seed, cfg),
        GadgetKind::Supplied => Err(ConstructionError::InvalidArgument(
            "gadget=supplied needs a source graph from the caller".into(),
        )),
    }
}

pub fn make_gadget(recipe: &ConstructionRecipe) -> Result<BipartiteGraph, ConstructionError> {
    let cfg = SearchConfig::default();
    make_gadget_from(recipe, &gadget_source(recipe, &cfg)?)
}

/// Fits `source` to `σ × n`: trim, drop excess left vertices (lowest degree
/// first, ties by smallest index), then pad the right side with isolated
/// vertices.
pub fn make_gadget_from(
    recipe: &ConstructionRecipe,
    source: &BipartiteGraph,
) -> Result<BipartiteGraph, ConstructionError> {
    recipe.validate()?;
    let (sigma, n) = (recipe.sigma, recipe.n());
    let core = trim_min_degree(source, recipe.trim).graph;
    if core.left_size() < sigma {
        return Err(ConstructionError::Infeasible(format!(
            "gadget core has {} left vertices after trimming at {}, need sigma = {sigma}",
            core.left_size(),
            recipe.trim
        )));
    }
    if core.right_size() > n {
        return Err(ConstructionError::Infeasible(format!(
            "gadget core has {} right vertices, more than n = {n}",
            core.right_size()
        )));
    }
    let mut order: Vec<usize> = (0..core.left_size()).collect();
    order.sort_by_key(|&l| (core.left_degree(l), l));
    let mut keep = order[core.left_size() - sigma..].to_vec();
    keep.sort_unstable();
    let right: Vec<usize> = (0..core.right_size()).collect();
    Ok(core.induced(&keep, &right).pad_right(n))
}
