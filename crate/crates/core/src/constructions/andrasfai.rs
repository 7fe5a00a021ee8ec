use crate::bits::Bits;
use crate::graph::Part;

use super::ConstructionError;

/// A small simple graph with an optional declared 3-partition, used as the
/// base of a blowup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseGraph {
    adj: Vec<Bits>,
    parts: Option<Vec<Part>>,
}

impl BaseGraph {
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ConstructionError> {
        let mut adj = vec![Bits::new(order); order];
        for (u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(ConstructionError::InvalidArgument(format!(
                    "bad base edge {u}-{v}"
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(BaseGraph { adj, parts: None })
    }

    /// Declares a 3-partition; fails if some edge lies inside a part.
    pub fn with_parts(mut self, parts: Vec<Part>) -> Result<Self, ConstructionError> {
        if parts.len() != self.order() {
            return Err(ConstructionError::InvalidArgument(
                "one part per base vertex required".into(),
            ));
        }
        if let Some((u, v)) = self.edges().find(|&(u, v)| parts[u] == parts[v]) {
            return Err(ConstructionError::InvalidArgument(format!(
                "edge {u}-{v} lies inside a part"
            )));
        }
        self.parts = Some(parts);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn parts(&self) -> Option<&[Part]> {
        self.parts.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|r| r.contains(v))
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, r)| r.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Bits::count);
        self.adj.iter().all(|r| r.count() == d).then_some(d)
    }

    /// Brute-force triangle search over all edges.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        self.edges().find_map(|(u, v)| {
            self.adj[u]
                .and(&self.adj[v])
                .iter()
                .find(|&w| w > v)
                .map(|w| (u, v, w))
        })
    }
}

/// The Andrásfai graph `Γ_k`: `Z/(3k-1)` with `i ~ i+k, …, i+2k-1`, carrying
/// the partition `{0..k-1}, {k..2k-1}, {2k..3k-2}`.
pub fn andrasfai(k: usize) -> Result<BaseGraph, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::InvalidArgument(
            "k must be at least 1".into(),
        ));
    }
    let m = 3 * k - 1;
    let edges = (0..m).flat_map(|i| (k..2 * k).map(move |d| (i, (i + d) % m)));
    let mut adj = vec![Bits::new(m); m];
    for (u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let parts = (0..m)
        .map(|i| match i / k {
            0 => Part::V1,
            1 => Part::V2,
            _ => Part::V3,
        })
        .collect();
    BaseGraph { adj, parts: None }.with_parts(parts)
}

/// Positive integer vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighting {
    weights: Vec<usize>,
}

impl Weighting {
    pub fn new(weights: Vec<usize>) -> Result<Self, ConstructionError> {
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(ConstructionError::InvalidArgument(format!(
                "weight of vertex {v} is zero"
            )));
        }
        Ok(Weighting { weights })
    }

    pub fn uniform(order: usize) -> Self {
        Weighting {
            weights: vec![1; order],
        }
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn get(&self, v: usize) -> usize {
        self.weights[v]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn scaled(&self, sigma: usize) -> Weighting {
        Weighting {
            weights: self.weights.iter().map(|w| w * sigma).collect(),
        }
    }

    /// Sum of the weights of the neighbours of `v`.
    pub fn window_sum(&self, base: &BaseGraph, v: usize) -> usize {
        base.neighbours(v).map(|u| self.weights[u]).sum()
    }

    /// Total weight of each declared part.
    pub fn part_totals(&self, base: &BaseGraph) -> Option<[usize; 3]> {
        let parts = base.parts()?;
        let mut out = [0; 3];
        for (v, p) in parts.iter().enumerate() {
            out[p.index()] += self.weights[v];
        }
        Some(out)
    }
}

/// The two weight-1 vertices of the standard weighting on `Γ_{k+1}`.
pub fn light_vertices(k: usize) -> (usize, usize) {
    (0, 2 * k + 1)
}

/// The weighting of `Γ_{k+1}` that balances the three parts at `3k` each:
/// `ω(0) = ω(2k+1) = 1`, `ω(k) = ω(k+1) = 2`, and `3` elsewhere.
///
/// Every build is checked against the part totals and the window sums
/// `3k+1` (or `3k` at the two light vertices).
pub fn standard_weighting(k: usize) -> Result<Weighting, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::InvalidArgument(
            "standard weighting needs k >= 2".into(),
        ));
    }
    let m = 3 * k + 2;
    let (l, r) = light_vertices(k);
    let weights = (0..m)
        .map(|v| match v {
            _ if v == l || v == r => 1,
            _ if v == k || v == k + 1 => 2,
            _ => 3,
        })
        .collect();
    let w = Weighting { weights };
    let base = andrasfai(k + 1)?;
    check_standard(k, &base, &w).map_err(ConstructionError::Infeasible)?;
    Ok(w)
}

pub(crate) fn check_standard(k: usize, base: &BaseGraph, w: &Weighting) -> Result<(), String> {
    if w.part_totals(base) != Some([3 * k; 3]) {
        return Err(format!(
            "part totals {:?} differ from 3k = {}",
            w.part_totals(base),
            3 * k
        ));
    }
    let (l, r) = light_vertices(k);
    for v in 0..base.order() {
        let want = if v == l || v == r { 3 * k } else { 3 * k + 1 };
        let got = w.window_sum(base, v);
        if got != want {
            return Err(format!("window sum at {v} is {got}, expected {want}"));
        }
    }
    Ok(())
}
