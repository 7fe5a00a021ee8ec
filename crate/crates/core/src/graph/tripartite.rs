use std::ops::Range;

use crate::bits::Bits;

use super::{GraphError, Part, VertexSet};

fn offsets(sizes: [usize; 3]) -> [usize; 4] {
    [
        0,
        sizes[0],
        sizes[0] + sizes[1],
        sizes[0] + sizes[1] + sizes[2],
    ]
}

fn part_of(offsets: &[usize; 4], v: usize) -> Part {
    if v < offsets[1] {
        Part::V1
    } else if v < offsets[2] {
        Part::V2
    } else {
        Part::V3
    }
}

/// Mutable staging area for a [`TripartiteGraph`].
///
/// Vertices `0..n1` form `V1`, the next `n2` form `V2`, the rest `V3`.
#[derive(Clone, Debug)]
pub struct TripartiteBuilder {
    sizes: [usize; 3],
    offsets: [usize; 4],
    adj: Vec<Bits>,
}

impl TripartiteBuilder {
    pub fn new(sizes: [usize; 3]) -> Self {
        let offsets = offsets(sizes);
        let order = offsets[3];
        TripartiteBuilder {
            sizes,
            offsets,
            adj: vec![Bits::new(order); order],
        }
    }

    pub fn balanced(n: usize) -> Self {
        TripartiteBuilder::new([n; 3])
    }

    pub fn order(&self) -> usize {
        self.offsets[3]
    }

    pub fn part_of(&self, v: usize) -> Part {
        part_of(&self.offsets, v)
    }

    pub fn part_range(&self, p: Part) -> Range<usize> {
        self.offsets[p.index()]..self.offsets[p.index() + 1]
    }

    /// Adds `u`–`v`. Pairs inside one part are rejected.
    /// Returns false if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let order = self.order();
        for x in [u, v] {
            if x >= order {
                return Err(GraphError::OutOfRange { vertex: x, order });
            }
        }
        if self.part_of(u) == self.part_of(v) {
            return Err(GraphError::SamePart { u, v });
        }
        self.adj[v].insert(u);
        Ok(self.adj[u].insert(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    pub fn build(self) -> TripartiteGraph {
        let order = self.order();
        let part_masks = Part::ALL.map(|p| {
            let r = self.offsets[p.index()]..self.offsets[p.index() + 1];
            Bits::with_range(order, r)
        });
        let edges = self.adj.iter().map(Bits::count).sum::<usize>() / 2;
        TripartiteGraph {
            sizes: self.sizes,
            offsets: self.offsets,
            adj: self.adj,
            part_masks,
            edges,
        }
    }
}

/// Per-vertex degree split along the cyclic orientation `V1 -> V2 -> V3 -> V1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degree: Vec<usize>,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// An immutable tripartite graph with global vertex indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteGraph {
    sizes: [usize; 3],
    offsets: [usize; 4],
    adj: Vec<Bits>,
    part_masks: [Bits; 3],
    edges: usize,
}

impl TripartiteGraph {
    pub fn part_sizes(&self) -> [usize; 3] {
        self.sizes
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.offsets[3]
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> Part {
        part_of(&self.offsets, v)
    }

    pub fn part_range(&self, p: Part) -> Range<usize> {
        self.offsets[p.index()]..self.offsets[p.index() + 1]
    }

    pub fn part_set(&self, p: Part) -> VertexSet {
        VertexSet::from_bits(self.part_masks[p.index()].clone())
    }

    pub(crate) fn part_mask(&self, p: Part) -> &Bits {
        &self.part_masks[p.index()]
    }

    /// `n` when all three parts have size `n`.
    pub fn balanced_size(&self) -> Option<usize> {
        let [a, b, c] = self.sizes;
        (a == b && b == c).then_some(a)
    }

    fn require_balanced(&self) -> Result<usize, GraphError> {
        self.balanced_size()
            .ok_or(GraphError::Unbalanced(self.sizes))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    pub(crate) fn rows(&self) -> &[Bits] {
        &self.adj
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbour_set(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v].clone())
    }

    /// Neighbours of `v` inside part `p`.
    pub fn neighbours_in(&self, v: usize, p: Part) -> impl Iterator<Item = usize> + '_ {
        let r = self.part_range(p);
        self.adj[v]
            .iter()
            .skip_while(move |&x| x < r.start)
            .take_while(move |&x| x < r.end)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Degree of `v` into the part after its own.
    #[inline]
    pub fn forward_degree(&self, v: usize) -> usize {
        self.adj[v].and_count(self.part_mask(self.part_of(v).next()))
    }

    #[inline]
    pub fn backward_degree(&self, v: usize) -> usize {
        self.adj[v].and_count(self.part_mask(self.part_of(v).prev()))
    }

    /// `|N(v) ∩ set|`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].and_count(set.bits())
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let n = self.order();
        DegreeProfile {
            degree: (0..n).map(|v| self.degree(v)).collect(),
            forward: (0..n).map(|v| self.forward_degree(v)).collect(),
            backward: (0..n).map(|v| self.backward_degree(v)).collect(),
        }
    }

    /// Whether `u -> v` is a forward edge (`v` in the part after `u`'s).
    pub fn is_forward_edge(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && self.part_of(v) == self.part_of(u).next()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().skip_while(move |&v| v <= u).map(move |v| (u, v)))
    }

    /// Forward edges `(u, v)` ordered by `u` then `v`.
    pub fn forward_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbours_in(u, self.part_of(u).next())
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            return Err(GraphError::OutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    /// `|N(u) ∩ N(v)|` for vertices in different parts. Common neighbours of
    /// two vertices in different parts necessarily lie in the third part.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.part_of(u) == self.part_of(v) {
            return Err(GraphError::SamePart { u, v });
        }
        Ok(self.adj[u].and_count(&self.adj[v]))
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[u].and(&self.adj[v]))
    }

    /// `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).min()
    }

    /// `δ(G) − n` for a balanced `n × n × n` graph.
    pub fn tau_of(&self) -> Result<i64, GraphError> {
        let n = self.require_balanced()?;
        let delta = self.min_degree().unwrap_or(0);
        Ok(delta as i64 - n as i64)
    }

    /// Builder seeded with this graph's edges, for deriving new graphs.
    pub fn to_builder(&self) -> TripartiteBuilder {
        TripartiteBuilder {
            sizes: self.sizes,
            offsets: self.offsets,
            adj: self.adj.clone(),
        }
    }

    /// Compares every row against its transpose.
    pub fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, row)| row.iter().all(|v| self.adj[v].contains(u)))
    }

    pub fn complete(sizes: [usize; 3]) -> TripartiteGraph {
        let mut b = TripartiteBuilder::new(sizes);
        for u in 0..b.order() {
            for v in u + 1..b.order() {
                if b.part_of(u) != b.part_of(v) {
                    b.add_edge(u, v).expect("cross-part pair");
                }
            }
        }
        b.build()
    }

    pub fn from_edges(
        sizes: [usize; 3],
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<TripartiteGraph, GraphError> {
        let mut b = TripartiteBuilder::new(sizes);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }
}
