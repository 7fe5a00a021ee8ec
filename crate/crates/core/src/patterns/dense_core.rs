//! Derandomised common-neighbourhood extraction.
//!
//! For a bipartite graph `(A, B)` of density `λ` with `λ|B| ≥ t`, a vertex of
//! `A` is good when it has at least `λ|B|/2` neighbours in `B`. Every
//! `t`-tuple of `B` is scored by the number of good vertices in its common
//! neighbourhood and the best tuple is returned. The maximum dominates the
//! average, which is at least `(λ/e)^t |A| / 2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::bits::Bits;
use crate::exec;
use crate::graph::{BipartiteGraph, VertexSet};

use super::search::{Counter, Exceeded, SearchConfig, SearchError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionResult {
    /// `b_1 < … < b_t`, right-side ids.
    pub tuple: Vec<usize>,
    /// Good vertices adjacent to the whole tuple, over the left universe.
    pub a_prime: VertexSet,
    pub score: usize,
}

/// Left vertices with at least half the average left degree.
pub fn good_vertices(h: &BipartiteGraph) -> VertexSet {
    let a = h.left_size();
    let e = h.edge_count();
    VertexSet::from_ids(a, (0..a).filter(|&l| 2 * a * h.left_degree(l) >= e))
}

struct Best {
    score: usize,
    tuple: Vec<usize>,
    common: Bits,
}

struct Scan<'a> {
    cols: &'a [Bits],
    t: usize,
}

impl Scan<'_> {
    // Lexicographic extension of `chosen` (last element `last`), keeping the
    // first tuple of strictly larger score.
    fn extend(
        &self,
        last: usize,
        acc: &Bits,
        chosen: &mut Vec<usize>,
        best: &mut Option<Best>,
        ctr: &mut Counter,
    ) -> Result<(), Exceeded> {
        if chosen.len() == self.t {
            let score = acc.count();
            if best.as_ref().is_none_or(|b| score > b.score) {
                *best = Some(Best {
                    score,
                    tuple: chosen.clone(),
                    common: acc.clone(),
                });
            }
            return Ok(());
        }
        let need = self.t - chosen.len();
        for j in last + 1..=self.cols.len() - need {
            ctr.tick()?;
            let next = acc.and(&self.cols[j]);
            if best.as_ref().is_some_and(|b| next.count() <= b.score) {
                continue;
            }
            chosen.push(j);
            self.extend(j, &next, chosen, best, ctr)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Returns the lexicographically least `t`-tuple of `B` maximising the number
/// of good common neighbours.
pub fn extract_dense_core(
    h: &BipartiteGraph,
    t: usize,
    cfg: &SearchConfig,
) -> Result<ExtractionResult, SearchError> {
    let (a, b) = (h.left_size(), h.right_size());
    if t == 0 || a == 0 || b == 0 {
        return Err(SearchError::InvalidArgument(
            "need t >= 1 and both sides non-empty".into(),
        ));
    }
    if h.edge_count() < t * a {
        return Err(SearchError::InvalidArgument(format!(
            "density too low: λ|B| = {}/{} < t = {t}",
            h.edge_count(),
            a
        )));
    }
    let good = good_vertices(h);
    let scan = Scan {
        cols: h.right_cols(),
        t,
    };
    let limit = cfg.budget;
    let strata = exec::map_range(cfg.strategy, b + 1 - t, |first| {
        let mut ctr = Counter::new(limit);
        let mut best = None;
        let res = (|| {
            ctr.tick()?;
            let acc = good.bits().and(&scan.cols[first]);
            let mut chosen = vec![first];
            scan.extend(first, &acc, &mut chosen, &mut best, &mut ctr)
        })();
        (ctr.nodes, res.map(|_| best))
    });
    let mut total = 0u64;
    let mut best: Option<Best> = None;
    for (nodes, res) in strata {
        total += nodes;
        let local = match res {
            Ok(local) if total <= limit => local,
            _ => {
                return Err(SearchError::BudgetExceeded {
                    examined: total,
                    limit,
                })
            }
        };
        if let Some(l) = local {
            if best.as_ref().is_none_or(|b| l.score > b.score) {
                best = Some(l);
            }
        }
    }
    let best = best.expect("some t-tuple exists since |B| >= t");
    Ok(ExtractionResult {
        tuple: best.tuple,
        a_prime: VertexSet::from_bits(best.common),
        score: best.score,
    })
}

/// A rational strictly below `e`, so the comparison below is sufficient.
fn e_lower() -> BigRational {
    let num: BigInt = "271828182845904523536".parse().unwrap();
    let den: BigInt = BigInt::from(10u32).pow(20);
    BigRational::new(num, den)
}

/// Exact check of `score ≥ ½ (λ/e)^t |A|` with `λ = edges / (|A||B|)`.
pub fn meets_dense_core_bound(
    score: usize,
    edges: usize,
    left: usize,
    right: usize,
    t: usize,
) -> bool {
    if left == 0 || right == 0 {
        return true;
    }
    let lambda = BigRational::new(BigInt::from(edges), BigInt::from(left * right));
    let ratio = lambda / e_lower();
    let mut pow = BigRational::one();
    for _ in 0..t {
        pow *= &ratio;
    }
    let rhs = pow * BigRational::from_integer(BigInt::from(left))
        / BigRational::from_integer(BigInt::from(2));
    let lhs = BigRational::from_integer(BigInt::from(score));
    lhs >= rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Strategy;

    fn brute(h: &BipartiteGraph, t: usize) -> (Vec<usize>, usize) {
        let good = good_vertices(h);
        let mut best: Option<(Vec<usize>, usize)> = None;
        // lex order via recursion
        fn rec(
            h: &BipartiteGraph,
            good: &VertexSet,
            t: usize,
            from: usize,
            cur: &mut Vec<usize>,
            best: &mut Option<(Vec<usize>, usize)>,
        ) {
            if cur.len() == t {
                let score = good
                    .iter()
                    .filter(|&a| cur.iter().all(|&r| h.has_edge(a, r)))
                    .count();
                if best.as_ref().is_none_or(|(_, s)| score > *s) {
                    *best = Some((cur.clone(), score));
                }
                return;
            }
            for j in from..h.right_size() {
                cur.push(j);
                rec(h, good, t, j + 1, cur, best);
                cur.pop();
            }
        }
        rec(h, &good, t, 0, &mut Vec::new(), &mut best);
        best.unwrap()
    }

    fn half_density() -> BipartiteGraph {
        // l ~ r iff (l + r) is even, plus a diagonal tweak for asymmetry
        let mut e: Vec<(usize, usize)> = (0..8)
            .flat_map(|l| (0..8).map(move |r| (l, r)))
            .filter(|(l, r)| (l + r) % 2 == 0)
            .collect();
        e.retain(|&(l, r)| !(l == 0 && r == 6));
        e.push((1, 6));
        BipartiteGraph::from_edges(8, 8, e).unwrap()
    }

    #[test]
    fn complete_graph_keeps_everything() {
        let h = BipartiteGraph::complete(5, 4);
        let r = extract_dense_core(&h, 2, &SearchConfig::default()).unwrap();
        assert_eq!(r.tuple, vec![0, 1]);
        assert_eq!(r.score, 5);
        assert!(meets_dense_core_bound(r.score, 20, 5, 4, 2));
    }

    #[test]
    fn matches_exhaustive_argmax() {
        let h = half_density();
        for t in 1..=3 {
            let r = extract_dense_core(&h, t, &SearchConfig::default()).unwrap();
            assert_eq!((r.tuple.clone(), r.score), brute(&h, t), "t={t}");
            assert_eq!(r.a_prime.len(), r.score);
            assert!(meets_dense_core_bound(r.score, h.edge_count(), 8, 8, t));
            let s = extract_dense_core(
                &h,
                t,
                &SearchConfig {
                    strategy: Strategy::Sequential,
                    ..Default::default()
                },
            );
            assert_eq!(s.unwrap(), r);
        }
    }

    #[test]
    fn dominating_vertex() {
        // right vertex 2 sees all of A, others see one vertex each
        let h = BipartiteGraph::from_edges(4, 3, [(0, 2), (1, 2), (2, 2), (3, 2), (0, 0), (1, 1)])
            .unwrap();
        let r = extract_dense_core(&h, 1, &SearchConfig::default()).unwrap();
        assert_eq!(r.tuple, vec![2]);
        assert_eq!(r.a_prime, good_vertices(&h));
    }

    #[test]
    fn precondition_and_budget() {
        let sparse = BipartiteGraph::from_edges(3, 3, [(0, 0)]).unwrap();
        assert!(matches!(
            extract_dense_core(&sparse, 1, &SearchConfig::default()),
            Err(SearchError::InvalidArgument(_))
        ));
        let h = BipartiteGraph::complete(4, 6);
        assert!(matches!(
            extract_dense_core(&h, 2, &SearchConfig::with_budget(3)),
            Err(SearchError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn bound_is_exact_rational() {
        // λ = 1, t = 1: need score >= |A| / (2e), i.e. 1 of 5
        assert!(meets_dense_core_bound(1, 25, 5, 5, 1));
        assert!(!meets_dense_core_bound(0, 25, 5, 5, 1));
    }
}
