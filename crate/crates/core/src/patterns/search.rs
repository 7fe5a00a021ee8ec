//! Budgeted colexicographic subset search with running-intersection pruning.
//!
//! A t-subset `{s1 < … < st}` of the candidate list is enumerated by choosing
//! the largest element first, in increasing order, then the next largest below
//! it, and so on. The first complete subset reached is therefore the colex
//! least one that passes the pruning predicate at every level.
//!
//! Work is split into strata by the largest element. Each stratum is explored
//! independently and results are folded in stratum order, so the reported
//! hit and the node count charged against the budget are the same for every
//! execution strategy.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::bits::Bits;
use crate::exec::{self, Strategy};

/// Default cap on examined subsets.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of (partial or complete) subsets the search may examine.
    pub budget: u64,
    pub strategy: Strategy,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            strategy: Strategy::default(),
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> Self {
        SearchConfig {
            budget,
            ..Default::default()
        }
    }

    pub fn sequential(self) -> Self {
        SearchConfig {
            strategy: Strategy::Sequential,
            ..self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exceeded: examined {examined} subsets, limit {limit}")]
    BudgetExceeded { examined: u64, limit: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug)]
pub(crate) struct Exceeded;

pub(crate) struct Counter {
    pub nodes: u64,
    cap: u64,
}

impl Counter {
    pub fn new(cap: u64) -> Self {
        Counter { nodes: 0, cap }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Exceeded> {
        self.nodes += 1;
        if self.nodes > self.cap {
            Err(Exceeded)
        } else {
            Ok(())
        }
    }
}

/// One colex subset search problem. `rows[cands[i]]` is the row of the i-th
/// candidate; `start` is intersected with each chosen row; `keep` decides
/// whether a partial intersection may still lead to a hit.
pub(crate) struct ColexSearch<'a, K, L> {
    pub rows: &'a [Bits],
    pub cands: &'a [usize],
    pub t: usize,
    pub start: &'a Bits,
    pub keep: K,
    pub leaf: L,
}

impl<K, L, R> ColexSearch<'_, K, L>
where
    K: Fn(&Bits) -> bool + Sync,
    L: Fn(&[usize], &Bits, &mut Counter) -> Result<Option<R>, Exceeded> + Sync,
    R: Send,
{
    fn step(
        &self,
        j: usize,
        level: usize,
        acc: &Bits,
        chosen: &mut Vec<usize>,
        ctr: &mut Counter,
    ) -> Result<Option<R>, Exceeded> {
        ctr.tick()?;
        let next = acc.and(&self.rows[self.cands[j]]);
        if !(self.keep)(&next) {
            return Ok(None);
        }
        chosen.push(self.cands[j]);
        let res = if level == 1 {
            let mut asc = chosen.clone();
            asc.reverse();
            (self.leaf)(&asc, &next, ctr)
        } else {
            self.descend(level - 1, j, &next, chosen, ctr)
        };
        chosen.pop();
        res
    }

    fn descend(
        &self,
        level: usize,
        upper: usize,
        acc: &Bits,
        chosen: &mut Vec<usize>,
        ctr: &mut Counter,
    ) -> Result<Option<R>, Exceeded> {
        for j in level - 1..upper {
            if let Some(r) = self.step(j, level, acc, chosen, ctr)? {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }

    /// Sequential search charging an existing counter (used when nested).
    pub fn run_nested(&self, ctr: &mut Counter) -> Result<Option<R>, Exceeded> {
        if self.t == 0 || self.cands.len() < self.t {
            return Ok(None);
        }
        self.descend(
            self.t,
            self.cands.len(),
            self.start,
            &mut Vec::with_capacity(self.t),
            ctr,
        )
    }

    /// Stratified search with its own budget, returning the colex-least hit.
    pub fn run(&self, cfg: &SearchConfig) -> Result<Option<R>, SearchError> {
        if self.t == 0 {
            return Err(SearchError::InvalidArgument("t must be at least 1".into()));
        }
        if self.cands.len() < self.t {
            return Ok(None);
        }
        let first = self.t - 1;
        let strata = self.cands.len() - first;
        let limit = cfg.budget;
        let mut total = 0u64;
        let out = exec::scan_strata(
            cfg.strategy,
            strata,
            |s| {
                let mut ctr = Counter::new(limit);
                let mut chosen = Vec::with_capacity(self.t);
                let r = self.step(first + s, self.t, self.start, &mut chosen, &mut ctr);
                (ctr.nodes, r)
            },
            |(nodes, r)| {
                total += nodes;
                if total > limit {
                    return ControlFlow::Break(Err(SearchError::BudgetExceeded {
                        examined: total,
                        limit,
                    }));
                }
                match r {
                    Err(Exceeded) => ControlFlow::Break(Err(SearchError::BudgetExceeded {
                        examined: total,
                        limit,
                    })),
                    Ok(Some(hit)) => ControlFlow::Break(Ok(hit)),
                    Ok(None) => ControlFlow::Continue(()),
                }
            },
        );
        match out {
            None => Ok(None),
            Some(Ok(hit)) => Ok(Some(hit)),
            Some(Err(e)) => Err(e),
        }
    }
}

/// Searches for `t` candidates whose rows share at least `t` members of
/// `mask`; returns the colex-least such subset and its common set.
pub(crate) fn first_biclique(
    rows: &[Bits],
    cands: &[usize],
    mask: &Bits,
    t: usize,
    cfg: &SearchConfig,
) -> Result<Option<(Vec<usize>, Bits)>, SearchError> {
    ColexSearch {
        rows,
        cands,
        t,
        start: mask,
        keep: |b: &Bits| b.count() >= t,
        leaf: |chosen: &[usize], common: &Bits, _: &mut Counter| {
            Ok(Some((chosen.to_vec(), common.clone())))
        },
    }
    .run(cfg)
}

/// Nested sequential variant of [`first_biclique`] charging `ctr`.
pub(crate) fn first_biclique_nested(
    rows: &[Bits],
    cands: &[usize],
    mask: &Bits,
    t: usize,
    ctr: &mut Counter,
) -> Result<Option<(Vec<usize>, Bits)>, Exceeded> {
    ColexSearch {
        rows,
        cands,
        t,
        start: mask,
        keep: |b: &Bits| b.count() >= t,
        leaf: |chosen: &[usize], common: &Bits, _: &mut Counter| {
            Ok(Some((chosen.to_vec(), common.clone())))
        },
    }
    .run_nested(ctr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(adj: &[&[usize]], right: usize) -> Vec<Bits> {
        adj.iter()
            .map(|r| {
                let mut b = Bits::new(right);
                r.iter().for_each(|&x| {
                    b.insert(x);
                });
                b
            })
            .collect()
    }

    #[test]
    fn finds_colex_least() {
        // pairs {0,1} and {2,3} both have codegree 2; {0,1} is colex-smaller
        // ({0,3} would be colex-larger than {1,2}).
        let r = rows(&[&[0, 1], &[0, 1], &[2, 3], &[2, 3]], 4);
        let mask = Bits::with_range(4, 0..4);
        let cands: Vec<usize> = (0..4).collect();
        for s in [Strategy::Sequential, Strategy::Parallel] {
            let cfg = SearchConfig {
                budget: 1000,
                strategy: s,
            };
            let (chosen, common) = first_biclique(&r, &cands, &mask, 2, &cfg).unwrap().unwrap();
            assert_eq!(chosen, vec![0, 1]);
            assert_eq!(common.iter().collect::<Vec<_>>(), vec![0, 1]);
        }
    }

    #[test]
    fn colex_not_lex() {
        // {0,3} and {1,2} qualify; colex-least is {1,2} (max 2 < 3).
        let r = rows(&[&[0, 1], &[2, 3], &[2, 3], &[0, 1]], 4);
        let mask = Bits::with_range(4, 0..4);
        let cands: Vec<usize> = (0..4).collect();
        let (chosen, _) = first_biclique(&r, &cands, &mask, 2, &SearchConfig::default())
            .unwrap()
            .unwrap();
        assert_eq!(chosen, vec![1, 2]);
    }

    #[test]
    fn budget_is_an_error_not_a_miss() {
        let r = rows(&[&[0], &[1], &[2], &[3]], 4);
        let mask = Bits::with_range(4, 0..4);
        let cands: Vec<usize> = (0..4).collect();
        let e = first_biclique(&r, &cands, &mask, 2, &SearchConfig::with_budget(2)).unwrap_err();
        assert!(matches!(e, SearchError::BudgetExceeded { limit: 2, .. }));
        assert_eq!(
            first_biclique(&r, &cands, &mask, 2, &SearchConfig::with_budget(100)).unwrap(),
            None
        );
    }

    #[test]
    fn node_counts_independent_of_strategy() {
        let r = rows(&[&[0, 1, 2], &[1, 2], &[0, 2], &[0, 1], &[2]], 3);
        let mask = Bits::with_range(3, 0..3);
        let cands: Vec<usize> = (0..5).collect();
        for budget in 0..40 {
            let a = first_biclique(
                &r,
                &cands,
                &mask,
                3,
                &SearchConfig {
                    budget,
                    strategy: Strategy::Sequential,
                },
            );
            let b = first_biclique(
                &r,
                &cands,
                &mask,
                3,
                &SearchConfig {
                    budget,
                    strategy: Strategy::Parallel,
                },
            );
            assert_eq!(a, b, "budget {budget}");
        }
    }
}
