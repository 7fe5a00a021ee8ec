use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{GraphError, Part, TripartiteGraph, VertexSet};

/// `C(n, k)` exactly.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn part_of_set(g: &TripartiteGraph, s: &VertexSet) -> Result<Option<Part>, GraphError> {
    if s.universe() != g.order() {
        return Err(GraphError::InvalidArgument(
            "vertex set has the wrong universe".into(),
        ));
    }
    let Some(first) = s.iter().next() else {
        return Ok(None);
    };
    let p = g.part_of(first);
    if !s.bits().is_subset(g.part_mask(p)) {
        return Err(GraphError::InvalidArgument(
            "vertex set spans several parts".into(),
        ));
    }
    Ok(Some(p))
}

/// Number of `K_{1,1,t}` copies with one vertex in `a`, one in `b` and `t`
/// in `c`: the sum over edges `xy` of `a × b` of `C(|N(x) ∩ N(y) ∩ c|, t)`.
pub fn count_k11t(
    g: &TripartiteGraph,
    a: &VertexSet,
    b: &VertexSet,
    c: &VertexSet,
    t: usize,
) -> Result<BigUint, GraphError> {
    let parts = [part_of_set(g, a)?, part_of_set(g, b)?, part_of_set(g, c)?];
    let known: Vec<Part> = parts.iter().flatten().copied().collect();
    for (i, p) in known.iter().enumerate() {
        if known[..i].contains(p) {
            return Err(GraphError::InvalidArgument(
                "A, B and C must lie in distinct parts".into(),
            ));
        }
    }
    if known.len() < 3 {
        return Ok(binomial(0, t));
    }
    let table: Vec<BigUint> = (0..=c.len()).map(|d| binomial(d, t)).collect();
    let mut total = BigUint::zero();
    for x in a.iter() {
        let row = g.row(x);
        for y in row.and(b.bits()).iter() {
            let d = c.bits().and2_count(row, g.row(y));
            total += &table[d];
        }
    }
    Ok(total)
}

/// Integer `r` with `r^t = n`, if any.
fn exact_root(n: u64, t: u32) -> Option<u64> {
    let guess = (n as f64).powf(1.0 / t as f64).round() as u64;
    (guess.saturating_sub(1)..=guess + 1).find(|&r| r.checked_pow(t) == Some(n))
}

/// `⌈K (m n^{1-1/t} + n)⌉`.
///
/// When `n` is a perfect `t`-th power the bracket is an exact integer and only
/// the multiplication by `K` is done in floating point. Otherwise the power is
/// evaluated in `f64`. In both cases a product within a relative `1e-12` of an
/// integer is snapped to it before rounding up, so representable inputs like
/// `K = 1.5` give the exact answer.
pub fn kst_threshold(m: u64, n: u64, t: u32, k: f64) -> u64 {
    assert!(
        m >= 1 && n >= 1 && t >= 1 && k > 0.0,
        "kst_threshold needs m, n, t >= 1 and K > 0"
    );
    let bracket = match exact_root(n, t) {
        Some(r) => (m * r.pow(t - 1) + n) as f64,
        None => m as f64 * (n as f64).powf(1.0 - 1.0 / t as f64) + n as f64,
    };
    let x = k * bracket;
    let nearest = x.round();
    if (x - nearest).abs() <= 1e-12 * x.max(1.0) {
        nearest as u64
    } else {
        x.ceil() as u64
    }
}
