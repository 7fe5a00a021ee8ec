use crate::bits::Bits;

use super::GraphError;

/// Mutable staging area for a [`BipartiteGraph`].
#[derive(Clone, Debug)]
pub struct BipartiteBuilder {
    rows: Vec<Bits>,
    right: usize,
}

impl BipartiteBuilder {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteBuilder {
            rows: vec![Bits::new(right); left],
            right,
        }
    }

    /// Adds `l`–`r`; returns false if the edge was already present.
    pub fn add_edge(&mut self, l: usize, r: usize) -> Result<bool, GraphError> {
        if l >= self.rows.len() {
            return Err(GraphError::OutOfRange {
                vertex: l,
                order: self.rows.len(),
            });
        }
        if r >= self.right {
            return Err(GraphError::OutOfRange {
                vertex: r,
                order: self.right,
            });
        }
        Ok(self.rows[l].insert(r))
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.rows.get(l).is_some_and(|row| row.contains(r))
    }

    pub fn build(self) -> BipartiteGraph {
        BipartiteGraph::from_rows(self.rows, self.right)
    }
}

/// An immutable `left × right` bipartite graph. Left rows and right columns
/// are both materialised so either side can be scanned by popcount.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    rows: Vec<Bits>,
    cols: Vec<Bits>,
    edges: usize,
}

impl BipartiteGraph {
    fn from_rows(rows: Vec<Bits>, right: usize) -> Self {
        let mut cols = vec![Bits::new(rows.len()); right];
        let mut edges = 0;
        for (l, row) in rows.iter().enumerate() {
            for r in row.iter() {
                cols[r].insert(l);
                edges += 1;
            }
        }
        BipartiteGraph { rows, cols, edges }
    }

    /// The graph with no edges.
    pub fn empty(left: usize, right: usize) -> Self {
        BipartiteBuilder::new(left, right).build()
    }

    pub fn complete(left: usize, right: usize) -> Self {
        let rows = vec![Bits::with_range(right, 0..right); left];
        BipartiteGraph::from_rows(rows, right)
    }

    pub fn from_edges(
        left: usize,
        right: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut b = BipartiteBuilder::new(left, right);
        for (l, r) in edges {
            b.add_edge(l, r)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn left_size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn right_size(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.rows.get(l).is_some_and(|row| row.contains(r))
    }

    pub(crate) fn left_rows(&self) -> &[Bits] {
        &self.rows
    }

    pub(crate) fn right_cols(&self) -> &[Bits] {
        &self.cols
    }

    pub fn left_degree(&self, l: usize) -> usize {
        self.rows[l].count()
    }

    pub fn right_degree(&self, r: usize) -> usize {
        self.cols[r].count()
    }

    pub fn left_neighbours(&self, l: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[l].iter()
    }

    pub fn right_neighbours(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.cols[r].iter()
    }

    /// Minimum degree over left vertices; `None` when the left side is empty.
    pub fn min_left_degree(&self) -> Option<usize> {
        (0..self.left_size()).map(|l| self.left_degree(l)).min()
    }

    /// Minimum degree over all vertices of both sides.
    pub fn min_degree(&self) -> Option<usize> {
        let right = (0..self.right_size()).map(|r| self.right_degree(r));
        (0..self.left_size())
            .map(|l| self.left_degree(l))
            .chain(right)
            .min()
    }

    /// Edges as `(left, right)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(l, row)| row.iter().map(move |r| (l, r)))
    }

    /// Common neighbours of two left vertices.
    pub fn left_codegree(&self, a: usize, b: usize) -> Result<usize, GraphError> {
        self.check_left(a)?;
        self.check_left(b)?;
        if a == b {
            return Err(GraphError::InvalidArgument(format!(
                "codegree of {a} with itself"
            )));
        }
        Ok(self.rows[a].and_count(&self.rows[b]))
    }

    /// Common neighbours of two right vertices.
    pub fn right_codegree(&self, a: usize, b: usize) -> Result<usize, GraphError> {
        for v in [a, b] {
            if v >= self.right_size() {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    order: self.right_size(),
                });
            }
        }
        if a == b {
            return Err(GraphError::InvalidArgument(format!(
                "codegree of {a} with itself"
            )));
        }
        Ok(self.cols[a].and_count(&self.cols[b]))
    }

    fn check_left(&self, l: usize) -> Result<(), GraphError> {
        if l >= self.left_size() {
            return Err(GraphError::OutOfRange {
                vertex: l,
                order: self.left_size(),
            });
        }
        Ok(())
    }

    /// Swaps the roles of the two sides.
    pub fn transpose(&self) -> BipartiteGraph {
        BipartiteGraph::from_rows(self.cols.clone(), self.left_size())
    }

    /// The subgraph induced by the given vertices, relabelled `0..` in the
    /// order supplied.
    pub fn induced(&self, left: &[usize], right: &[usize]) -> BipartiteGraph {
        let mut b = BipartiteBuilder::new(left.len(), right.len());
        for (i, &l) in left.iter().enumerate() {
            for (j, &r) in right.iter().enumerate() {
                if self.has_edge(l, r) {
                    b.rows[i].insert(j);
                }
            }
        }
        b.build()
    }

    /// Pads the right side with isolated vertices up to `right` in total.
    pub fn pad_right(&self, right: usize) -> BipartiteGraph {
        assert!(right >= self.right_size());
        let mut b = BipartiteBuilder::new(self.left_size(), right);
        for (l, r) in self.edges() {
            b.rows[l].insert(r);
        }
        b.build()
    }

    /// Row and column views describe the same edge set.
    pub fn is_symmetric(&self) -> bool {
        self.edges().all(|(l, r)| self.cols[r].contains(l))
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(r, col)| col.iter().all(|l| self.rows[l].contains(r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c8() -> BipartiteGraph {
        // 8-cycle l0 r0 l1 r1 l2 r2 l3 r3
        BipartiteGraph::from_edges(4, 4, (0..4).flat_map(|i| [(i, i), ((i + 1) % 4, i)])).unwrap()
    }

    #[test]
    fn degrees_and_codegrees() {
        let g = c8();
        assert_eq!(g.edge_count(), 8);
        assert!(g.is_symmetric());
        assert!((0..4).all(|l| g.left_degree(l) == 2 && g.right_degree(l) == 2));
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(g.left_codegree(a, b).unwrap() <= 1);
            }
        }
        assert_eq!(g.left_codegree(0, 1).unwrap(), 1);
        assert_eq!(g.left_codegree(0, 2).unwrap(), 0);
        assert!(g.left_codegree(0, 0).is_err());
        assert!(g.left_codegree(0, 9).is_err());
    }

    #[test]
    fn degree_sum_and_transpose() {
        let g = c8();
        let sum: usize = (0..4).map(|l| g.left_degree(l)).sum();
        assert_eq!(sum, g.edge_count());
        let t = g.transpose();
        assert_eq!(t.transpose(), g);
        assert!(t.has_edge(0, 1));
    }

    #[test]
    fn out_of_range_edge_rejected() {
        let mut b = BipartiteBuilder::new(1, 1);
        assert!(b.add_edge(1, 0).is_err());
        assert!(b.add_edge(0, 1).is_err());
        assert_eq!(b.add_edge(0, 0), Ok(true));
        assert_eq!(b.add_edge(0, 0), Ok(false));
    }

    #[test]
    fn induced_and_pad() {
        let g = c8();
        let h = g.induced(&[0, 1], &[0]);
        assert_eq!(h.edge_count(), 2);
        let p = h.pad_right(5);
        assert_eq!(p.right_size(), 5);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.min_degree(), Some(0));
        assert_eq!(p.min_left_degree(), Some(1));
    }
}
