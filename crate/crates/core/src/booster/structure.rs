//! Structural extraction inside a dense booster subgraph.

use crate::bits::Bits;
use crate::graph::{BipartiteBuilder, BipartiteGraph, Part, TripartiteGraph, VertexSet};
use crate::patterns::search::first_biclique;
use crate::patterns::{extract_dense_core, KtttWitness, SearchConfig};

use super::{BoosterError, Regularisation};

/// Default for the single constant standing in for every existential constant.
pub const DEFAULT_K: f64 = 2.0;

/// A bipartite subgraph `H ⊆ G[A, B]` stored with local indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSubgraph {
    pub a_ids: Vec<usize>,
    pub b_ids: Vec<usize>,
    pub h: BipartiteGraph,
}

fn single_part(g: &TripartiteGraph, ids: &[usize], what: &str) -> Result<Part, BoosterError> {
    let first = *ids
        .first()
        .ok_or_else(|| BoosterError::InvalidArgument(format!("{what} is empty")))?;
    let p = g.part_of(first);
    if ids.iter().any(|&v| g.part_of(v) != p) {
        return Err(BoosterError::InvalidArgument(format!(
            "{what} spans several parts"
        )));
    }
    Ok(p)
}

impl CrossSubgraph {
    /// `G[A, B]` itself.
    pub fn induced(
        g: &TripartiteGraph,
        a: &VertexSet,
        b: &VertexSet,
    ) -> Result<Self, BoosterError> {
        let edges: Vec<(usize, usize)> = a
            .iter()
            .flat_map(|x| {
                b.iter()
                    .filter(move |&y| g.has_edge(x, y))
                    .map(move |y| (x, y))
            })
            .collect();
        Self::from_edges(g, a, b, edges)
    }

    /// The subgraph on `A × B` with the given global edges, each of which must
    /// be an edge of `g`.
    pub fn from_edges(
        g: &TripartiteGraph,
        a: &VertexSet,
        b: &VertexSet,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, BoosterError> {
        let (a_ids, b_ids) = (a.ids(), b.ids());
        if single_part(g, &a_ids, "A")? == single_part(g, &b_ids, "B")? {
            return Err(BoosterError::InvalidArgument(
                "A and B lie in the same part".into(),
            ));
        }
        let mut bld = BipartiteBuilder::new(a_ids.len(), b_ids.len());
        for (x, y) in edges {
            let (Ok(i), Ok(j)) = (a_ids.binary_search(&x), b_ids.binary_search(&y)) else {
                return Err(BoosterError::InvalidArgument(format!(
                    "edge {x}-{y} leaves A x B"
                )));
            };
            if !g.has_edge(x, y) {
                return Err(BoosterError::InvalidArgument(format!(
                    "{x}-{y} is not an edge of G"
                )));
            }
            bld.add_edge(i, j)?;
        }
        Ok(CrossSubgraph {
            a_ids,
            b_ids,
            h: bld.build(),
        })
    }

    pub fn a_part(&self, g: &TripartiteGraph) -> Part {
        g.part_of(self.a_ids[0])
    }

    pub fn b_part(&self, g: &TripartiteGraph) -> Part {
        g.part_of(self.b_ids[0])
    }

    pub fn edge_count(&self) -> usize {
        self.h.edge_count()
    }

    /// Global edges `(a, b)` in local lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.h.edges().map(|(i, j)| (self.a_ids[i], self.b_ids[j]))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        match (self.a_ids.binary_search(&a), self.b_ids.binary_search(&b)) {
            (Ok(i), Ok(j)) => self.h.has_edge(i, j),
            _ => false,
        }
    }

    /// `e_H(a, B)` for a global `a`.
    pub fn degree_of_a(&self, a: usize) -> usize {
        self.a_ids
            .binary_search(&a)
            .map_or(0, |i| self.h.left_degree(i))
    }

    pub fn density(&self) -> f64 {
        self.edge_count() as f64 / (self.a_ids.len() * self.b_ids.len()) as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureSets {
    /// `b_1 < … < b_t` in `B`.
    pub tuple: Vec<usize>,
    /// Good vertices of `A` adjacent in `H` to the whole tuple.
    pub a1: VertexSet,
    /// Members of `a1` with at least `degree_cap` neighbours in `C \ C*`.
    pub a2: VertexSet,
    pub a_star: VertexSet,
    /// `C` minus the common neighbourhood of the tuple.
    pub c_star: VertexSet,
    /// `t · max_b f(b)` with `f = f⁻` when `C` follows `B`, else `f⁺`.
    pub c_star_bound: usize,
    /// `K |C|^{1-1/t}`.
    pub degree_cap: f64,
    /// `½ (λ/e)^t |A| − |C|^{1/t}`, reported only.
    pub a_star_lower: f64,
    /// Whether a `K_{t,t}` between `a2` and `C \ C*` was searched for.
    pub searched: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StructureResult {
    Witness(KtttWitness),
    Sets(StructureSets),
}

fn c_bound(
    g: &TripartiteGraph,
    reg: &Regularisation,
    h: &CrossSubgraph,
    c_part: Part,
    t: usize,
) -> usize {
    let forward = c_part == h.b_part(g).next();
    let f = if forward { &reg.f_minus } else { &reg.f_plus };
    t * h.b_ids.iter().map(|&b| f[b]).max().unwrap_or(0)
}

/// Finds `b_1..b_t` in `B` with a large common `H`-neighbourhood `A*` in `A`
/// such that vertices of `A*` have few neighbours in the common
/// neighbourhood of the tuple in `C`, or else a `K_{t,t,t}`.
pub fn structure_extract(
    g: &TripartiteGraph,
    reg: &Regularisation,
    h: &CrossSubgraph,
    c: &VertexSet,
    t: usize,
    k: f64,
    cfg: &SearchConfig,
) -> Result<StructureResult, BoosterError> {
    let c_ids = c.ids();
    let c_part = single_part(g, &c_ids, "C")?;
    let (pa, pb) = (h.a_part(g), h.b_part(g));
    if c_part == pa || c_part == pb {
        return Err(BoosterError::InvalidArgument(
            "C must lie in the third part".into(),
        ));
    }
    let core = extract_dense_core(&h.h, t, cfg)?;
    let tuple: Vec<usize> = core.tuple.iter().map(|&j| h.b_ids[j]).collect();
    let a1 = VertexSet::from_ids(g.order(), core.a_prime.iter().map(|i| h.a_ids[i]));
    let mut common = c.bits().clone();
    for &b in &tuple {
        common.and_assign(g.row(b));
    }
    let c_star = VertexSet::from_bits(c.bits().difference(&common));
    let cn = c_ids.len() as f64;
    let degree_cap = k * cn.powf(1.0 - 1.0 / t as f64);
    let a2 = VertexSet::from_ids(
        g.order(),
        a1.iter()
            .filter(|&a| g.row(a).and_count(&common) as f64 >= degree_cap),
    );
    let mut searched = false;
    if a2.len() as f64 >= cn.powf(1.0 / t as f64) {
        searched = true;
        let cands = a2.ids();
        if let Some((chosen, across)) = first_biclique(g.rows(), &cands, &common, t, cfg)? {
            let mut parts = [Vec::new(), Vec::new(), Vec::new()];
            parts[pa.index()] = chosen;
            parts[pb.index()] = tuple;
            parts[c_part.index()] = across.first_n(t);
            return Ok(StructureResult::Witness(KtttWitness::from_parts(t, parts)));
        }
    }
    let lambda = h.density();
    let a_star_lower = 0.5 * (lambda / std::f64::consts::E).powi(t as i32) * h.a_ids.len() as f64
        - cn.powf(1.0 / t as f64);
    Ok(StructureResult::Sets(StructureSets {
        a_star: a1.difference(&a2),
        tuple,
        a1,
        a2,
        c_star,
        c_star_bound: c_bound(g, reg, h, c_part, t),
        degree_cap,
        a_star_lower,
        searched,
    }))
}

impl StructureSets {
    /// Checks the output invariants against raw adjacency.
    pub fn validate(
        &self,
        g: &TripartiteGraph,
        reg: &Regularisation,
        h: &CrossSubgraph,
        c: &VertexSet,
    ) -> Result<(), String> {
        let t = self.tuple.len();
        let c_part = g.part_of(c.iter().next().ok_or("C is empty")?);
        if self.c_star.len() > c_bound(g, reg, h, c_part, t) {
            return Err(format!(
                "|C*| = {} exceeds {}",
                self.c_star.len(),
                self.c_star_bound
            ));
        }
        let mut common = Bits::with_range(g.order(), 0..g.order());
        for &b in &self.tuple {
            common.and_assign(g.row(b));
        }
        let expect = c.bits().difference(&common);
        if &expect != self.c_star.bits() {
            return Err("C* is not C minus the common neighbourhood of the tuple".into());
        }
        let inside = c.bits().and(&common);
        let e = h.edge_count();
        for a in self.a_star.iter() {
            if let Some(&b) = self.tuple.iter().find(|&&b| !h.has_edge(a, b)) {
                return Err(format!("{a} in A* misses tuple vertex {b} in H"));
            }
            if g.row(a).and_count(&inside) as f64 >= self.degree_cap {
                return Err(format!("{a} in A* has too many neighbours in C \\ C*"));
            }
            if 2 * h.a_ids.len() * h.degree_of_a(a) < e {
                return Err(format!("{a} in A* has H-degree below λ|B|/2"));
            }
        }
        Ok(())
    }
}
