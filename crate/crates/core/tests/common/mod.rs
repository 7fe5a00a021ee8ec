#![allow(dead_code)]

use tritur_core::graph::{BipartiteGraph, Part, TripartiteGraph};

/// All `t`-subsets of `0..n` as sorted vectors, by bitmask.
pub fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == t)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

pub fn naive_ktt(h: &BipartiteGraph, t: usize) -> bool {
    subsets(h.left_size(), t).into_iter().any(|ls| {
        (0..h.right_size())
            .filter(|&r| ls.iter().all(|&l| h.has_edge(l, r)))
            .count()
            >= t
    })
}

pub fn naive_kttt(g: &TripartiteGraph, t: usize) -> bool {
    let [s1, s2, _] = g.part_sizes();
    let (r1, r2, r3) = (
        g.part_range(Part::V1),
        g.part_range(Part::V2),
        g.part_range(Part::V3),
    );
    let xs = subsets(s1, t);
    let ys = subsets(s2, t);
    xs.iter().any(|x| {
        ys.iter().any(|y| {
            let x: Vec<usize> = x.iter().map(|&i| r1.start + i).collect();
            let y: Vec<usize> = y.iter().map(|&i| r2.start + i).collect();
            x.iter().all(|&a| y.iter().all(|&b| g.has_edge(a, b)))
                && r3
                    .clone()
                    .filter(|&c| x.iter().chain(&y).all(|&v| g.has_edge(v, c)))
                    .count()
                    >= t
        })
    })
}

pub fn naive_triangles(g: &TripartiteGraph) -> usize {
    let mut count = 0;
    for a in g.part_range(Part::V1) {
        for b in g.part_range(Part::V2) {
            for c in g.part_range(Part::V3) {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}
