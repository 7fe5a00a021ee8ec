//! Bipartite and tripartite graphs over bitset adjacency rows.
//!
//! Graphs are assembled through a builder and are immutable once built, so
//! every analytic routine can share them freely across threads.

mod bipartite;
mod format;
mod tripartite;
mod vertex_set;

use std::fmt;

use thiserror::Error;

pub use bipartite::{BipartiteBuilder, BipartiteGraph};
pub use format::{format_ids, parse_graph, parse_ids, serialize_graph, Graph, ParseError};
pub use tripartite::{DegreeProfile, TripartiteBuilder, TripartiteGraph};
pub use vertex_set::VertexSet;

/// One of the three parts of a tripartite graph, in cyclic order
/// `V1 -> V2 -> V3 -> V1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    V1,
    V2,
    V3,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::V1, Part::V2, Part::V3];

    /// Zero-based index.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// One-based label used in text records.
    #[inline]
    pub fn number(self) -> usize {
        self.index() + 1
    }

    pub fn from_index(i: usize) -> Option<Part> {
        Part::ALL.get(i).copied()
    }

    pub fn from_number(i: usize) -> Option<Part> {
        i.checked_sub(1).and_then(Part::from_index)
    }

    /// The part that forward edges from `self` go to.
    #[inline]
    pub fn next(self) -> Part {
        Part::ALL[(self.index() + 1) % 3]
    }

    #[inline]
    pub fn prev(self) -> Part {
        Part::ALL[(self.index() + 2) % 3]
    }

    /// Shift by `s` steps forward.
    pub fn shift(self, s: usize) -> Part {
        Part::ALL[(self.index() + s) % 3]
    }

    /// The part distinct from both `a` and `b`, if they differ.
    pub fn third(a: Part, b: Part) -> Option<Part> {
        (a != b).then(|| Part::ALL[3 - a.index() - b.index()])
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    OutOfRange { vertex: usize, order: usize },
    #[error("vertices {u} and {v} lie in the same part")]
    SamePart { u: usize, v: usize },
    #[error("parts are unbalanced: {0:?}")]
    Unbalanced([usize; 3]),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn part_cycle() {
        assert_eq!(Part::V3.next(), Part::V1);
        assert_eq!(Part::V1.prev(), Part::V3);
        assert_eq!(Part::third(Part::V1, Part::V3), Some(Part::V2));
        assert_eq!(Part::third(Part::V2, Part::V2), None);
        assert_eq!(Part::V2.shift(2), Part::V1);
        assert_eq!(Part::from_number(3), Some(Part::V3));
        assert_eq!(Part::from_number(0), None);
    }
}
