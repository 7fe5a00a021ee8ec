use std::fmt;

use thiserror::Error;

use crate::graph::{format_ids, BipartiteGraph, Part, TripartiteGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("{field}: expected {expected} vertices, found {found}")]
    WrongSize {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{field}: ids must be strictly increasing")]
    NotSorted { field: &'static str },
    #[error("{field}: vertex {vertex} is out of range or in the wrong part")]
    WrongPart { field: &'static str, vertex: usize },
    #[error("missing edge {u}-{v}")]
    MissingEdge { u: usize, v: usize },
}

fn check_list(field: &'static str, ids: &[usize], t: usize) -> Result<(), WitnessError> {
    if ids.len() != t {
        return Err(WitnessError::WrongSize {
            field,
            expected: t,
            found: ids.len(),
        });
    }
    if ids.windows(2).any(|w| w[0] >= w[1]) {
        return Err(WitnessError::NotSorted { field });
    }
    Ok(())
}

/// A copy of `K_{t,t}`: every `left × right` pair is an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KttWitness {
    pub t: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl KttWitness {
    pub fn validate(&self, h: &BipartiteGraph) -> Result<(), WitnessError> {
        check_list("A", &self.left, self.t)?;
        check_list("B", &self.right, self.t)?;
        if let Some(&v) = self.left.iter().find(|&&l| l >= h.left_size()) {
            return Err(WitnessError::WrongPart {
                field: "A",
                vertex: v,
            });
        }
        if let Some(&v) = self.right.iter().find(|&&r| r >= h.right_size()) {
            return Err(WitnessError::WrongPart {
                field: "B",
                vertex: v,
            });
        }
        for &l in &self.left {
            for &r in &self.right {
                if !h.has_edge(l, r) {
                    return Err(WitnessError::MissingEdge { u: l, v: r });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for KttWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "KTT t={} A={} B={}",
            self.t,
            format_ids(self.left.iter().copied()),
            format_ids(self.right.iter().copied())
        )
    }
}

/// A copy of `K_{t,t,t}` with `a ⊆ V1`, `b ⊆ V2`, `c ⊆ V3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KtttWitness {
    pub t: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl KtttWitness {
    /// Assembles a witness from per-part vertex lists (sorted on the way in).
    pub fn from_parts(t: usize, mut parts: [Vec<usize>; 3]) -> Self {
        parts.iter_mut().for_each(|p| p.sort_unstable());
        let [a, b, c] = parts;
        KtttWitness { t, a, b, c }
    }

    pub fn part(&self, p: Part) -> &[usize] {
        match p {
            Part::V1 => &self.a,
            Part::V2 => &self.b,
            Part::V3 => &self.c,
        }
    }

    /// The triangle `(a, b, c)` of a `t = 1` witness.
    pub fn triangle(&self) -> Option<(usize, usize, usize)> {
        (self.t == 1 && self.a.len() == 1 && self.b.len() == 1 && self.c.len() == 1)
            .then(|| (self.a[0], self.b[0], self.c[0]))
    }

    pub fn validate(&self, g: &TripartiteGraph) -> Result<(), WitnessError> {
        const FIELDS: [&str; 3] = ["A", "B", "C"];
        for p in Part::ALL {
            let field = FIELDS[p.index()];
            let ids = self.part(p);
            check_list(field, ids, self.t)?;
            if let Some(&v) = ids.iter().find(|&&v| v >= g.order() || g.part_of(v) != p) {
                return Err(WitnessError::WrongPart { field, vertex: v });
            }
        }
        for (x, y) in [(&self.a, &self.b), (&self.a, &self.c), (&self.b, &self.c)] {
            for &u in x {
                for &v in y {
                    if !g.has_edge(u, v) {
                        return Err(WitnessError::MissingEdge { u, v });
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for KtttWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "KTTT t={} A={} B={} C={}",
            self.t,
            format_ids(self.a.iter().copied()),
            format_ids(self.b.iter().copied()),
            format_ids(self.c.iter().copied())
        )
    }
}
