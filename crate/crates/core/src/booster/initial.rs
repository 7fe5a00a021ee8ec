//! The initial-configuration case analysis, run literally.
//!
//! Fractional thresholds round up for "at least" cardinalities and down for
//! "at most" bounds. The dichotomy only holds for large `k`, so on small
//! inputs the walk may end without an outcome; that is reported as a value.

use crate::graph::{Part, TripartiteGraph, VertexSet};

use super::Regularisation;

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrailEntry {
    pub name: &'static str,
    pub set: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Booster edges from `a ⊆ V_i` to `b ⊆ V_{i+1}`.
    DenseBoosters {
        a: VertexSet,
        b: VertexSet,
        part: Part,
        booster_edges: usize,
    },
    /// Vertices of one part with their numbers of heavy backward edges.
    HeavyVertices {
        x: VertexSet,
        part: Part,
        heavy_counts: Vec<usize>,
        forward_degrees: Vec<usize>,
    },
    Inconclusive {
        trail: Vec<TrailEntry>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialConfigOutcome {
    pub k: usize,
    /// Index of the part relabelled as the first one.
    pub shift: usize,
    /// `f⁻(v_k)`.
    pub fk: usize,
    pub variant: Variant,
    /// Hypotheses that were met but whose candidate failed validation.
    pub notes: Vec<String>,
}

/// `min{i ≥ 1 : f⁻(v_i) ≤ 98 i}` over the `f⁺`-descending order.
pub fn scale_k(reg: &Regularisation) -> usize {
    let order = reg.order_by_f_plus();
    (1..=order.len())
        .find(|&i| reg.f_minus[order[i - 1]] <= 98 * i)
        .expect("f⁻ ≤ n ≤ 98 · 3n")
}

fn set_of(g: &TripartiteGraph, ids: impl IntoIterator<Item = usize>) -> VertexSet {
    VertexSet::from_ids(g.order(), ids)
}

fn heavy_backward(g: &TripartiteGraph, x: usize, level: usize) -> usize {
    g.neighbours_in(x, g.part_of(x).prev())
        .filter(|&u| g.row(u).and_count(g.row(x)) >= level)
        .count()
}

impl Variant {
    /// Checks the literal quantitative conditions of the two outcomes.
    pub fn validate(
        &self,
        g: &TripartiteGraph,
        reg: &Regularisation,
        k: usize,
    ) -> Result<(), String> {
        match self {
            Variant::DenseBoosters {
                a,
                b,
                part,
                booster_edges,
            } => {
                let edges = dense_boosters(g, reg, k, a, b, *part)?;
                if edges != *booster_edges {
                    return Err(format!("booster edge count {booster_edges} != {edges}"));
                }
                Ok(())
            }
            Variant::HeavyVertices {
                x,
                part,
                heavy_counts,
                forward_degrees,
            } => {
                let counts = heavy_vertices(g, reg, k, x, *part)?;
                if &counts != heavy_counts {
                    return Err("heavy counts do not match".into());
                }
                let fwd: Vec<usize> = x.iter().map(|v| g.forward_degree(v)).collect();
                if &fwd != forward_degrees {
                    return Err("forward degrees do not match".into());
                }
                Ok(())
            }
            Variant::Inconclusive { .. } => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Variant::DenseBoosters { .. } => "DenseBoosters",
            Variant::HeavyVertices { .. } => "HeavyVertices",
            Variant::Inconclusive { .. } => "Inconclusive",
        }
    }
}

/// Returns the number of booster edges if `a ⊆ part`, `b ⊆ part + 1` both
/// have size at least `⌈k/200⌉` and booster density at least `1/200`.
fn dense_boosters(
    g: &TripartiteGraph,
    reg: &Regularisation,
    k: usize,
    a: &VertexSet,
    b: &VertexSet,
    part: Part,
) -> Result<usize, String> {
    let need = ceil_div(k, 200).max(1);
    if a.len() < need || b.len() < need {
        return Err(format!(
            "parts of size {} and {} below {need}",
            a.len(),
            b.len()
        ));
    }
    if a.iter().any(|v| g.part_of(v) != part) || b.iter().any(|v| g.part_of(v) != part.next()) {
        return Err(format!("sets do not lie in {part} and {}", part.next()));
    }
    let edges = a
        .iter()
        .map(|u| {
            b.iter()
                .filter(|&v| g.has_edge(u, v) && reg.f_plus[u] <= reg.f_plus[v])
                .count()
        })
        .sum::<usize>();
    if 200 * edges < a.len() * b.len() {
        return Err(format!(
            "booster density {edges}/{} below 1/200",
            a.len() * b.len()
        ));
    }
    Ok(edges)
}

/// Returns the heavy backward counts if `x ⊆ part` has at least `⌈k/12⌉`
/// vertices, each with `f⁻ ≤ 100k` and at least `⌈k/200⌉` backward edges of
/// codegree at least `⌈k/100⌉`.
fn heavy_vertices(
    g: &TripartiteGraph,
    reg: &Regularisation,
    k: usize,
    x: &VertexSet,
    part: Part,
) -> Result<Vec<usize>, String> {
    if x.len() < ceil_div(k, 12).max(1) {
        return Err(format!(
            "{} vertices, fewer than {}",
            x.len(),
            ceil_div(k, 12)
        ));
    }
    let (level, need) = (ceil_div(k, 100), ceil_div(k, 200));
    let mut counts = Vec::with_capacity(x.len());
    for v in x.iter() {
        if g.part_of(v) != part {
            return Err(format!("vertex {v} is not in {part}"));
        }
        if reg.f_minus[v] > 100 * k {
            return Err(format!("vertex {v} has f- = {} > 100k", reg.f_minus[v]));
        }
        let c = heavy_backward(g, v, level);
        if c < need {
            return Err(format!(
                "vertex {v} has {c} heavy backward edges, fewer than {need}"
            ));
        }
        counts.push(c);
    }
    Ok(counts)
}

struct Walk<'a> {
    g: &'a TripartiteGraph,
    reg: &'a Regularisation,
    k: usize,
    notes: Vec<String>,
}

impl Walk<'_> {
    fn heavy(&mut self, label: &str, x: VertexSet, part: Part) -> Option<Variant> {
        match heavy_vertices(self.g, self.reg, self.k, &x, part) {
            Ok(heavy_counts) => {
                let forward_degrees = x.iter().map(|v| self.g.forward_degree(v)).collect();
                Some(Variant::HeavyVertices {
                    x,
                    part,
                    heavy_counts,
                    forward_degrees,
                })
            }
            Err(e) => {
                self.notes.push(format!("{label}: {e}"));
                None
            }
        }
    }

    fn dense(&mut self, label: &str, a: VertexSet, b: VertexSet, part: Part) -> Option<Variant> {
        match dense_boosters(self.g, self.reg, self.k, &a, &b, part) {
            Ok(booster_edges) => Some(Variant::DenseBoosters {
                a,
                b,
                part,
                booster_edges,
            }),
            Err(e) => {
                self.notes.push(format!("{label}: {e}"));
                None
            }
        }
    }
}

pub fn initial_configuration(g: &TripartiteGraph, reg: &Regularisation) -> InitialConfigOutcome {
    let order = reg.order_by_f_plus();
    let k = scale_k(reg);
    assert!(k >= ceil_div(reg.tau, 100), "k = {k} below tau/100");
    let fk = reg.f_minus[order[k - 1]];
    let f = &reg.f_minus;

    let window = &order[ceil_div(k, 2).max(1) - 1..k];
    let mut tally = [0usize; 3];
    for &v in window {
        tally[g.part_of(v).index()] += 1;
    }
    let shift = (0..3)
        .max_by_key(|&i| (tally[i], std::cmp::Reverse(i)))
        .unwrap();
    let p1 = Part::from_index(shift).unwrap();
    let (p2, p3) = (p1.next(), p1.next().next());

    let mut w = Walk {
        g,
        reg,
        k,
        notes: Vec::new(),
    };
    let mut trail = Vec::new();
    let done = |variant, notes| InitialConfigOutcome {
        k,
        shift,
        fk,
        variant,
        notes,
    };

    let a = set_of(g, window.iter().copied().filter(|&v| g.part_of(v) == p1));
    let b = set_of(
        g,
        g.part_range(p2)
            .filter(|&v| fk <= f[v] && f[v] <= fk + k / 50),
    );
    let c = set_of(
        g,
        g.part_range(p3)
            .filter(|&v| fk <= f[v] && f[v] <= fk + k / 100),
    );
    let outside_c = g.part_set(p3).difference(&c);
    let outside_b = g.part_set(p2).difference(&b);
    let x = set_of(
        g,
        a.iter().filter(|&v| g.degree_into(v, &outside_c) >= 10 * k),
    );
    let y = set_of(
        g,
        c.iter().filter(|&v| g.degree_into(v, &outside_b) >= 10 * k),
    );
    let small = ceil_div(k, 12).max(1);
    trail.extend([
        TrailEntry {
            name: "A",
            set: a.clone(),
        },
        TrailEntry {
            name: "B",
            set: b.clone(),
        },
        TrailEntry {
            name: "C",
            set: c.clone(),
        },
        TrailEntry {
            name: "X",
            set: x.clone(),
        },
        TrailEntry {
            name: "Y",
            set: y.clone(),
        },
    ]);
    if x.len() >= small {
        if let Some(v) = w.heavy("X", x.clone(), p1) {
            return done(v, w.notes);
        }
    }
    if y.len() >= small {
        if let Some(v) = w.heavy("Y", y.clone(), p3) {
            return done(v, w.notes);
        }
    }

    let a1 = a.difference(&x);
    let c1 = c.difference(&y);
    trail.push(TrailEntry {
        name: "A'",
        set: a1.clone(),
    });
    trail.push(TrailEntry {
        name: "C'",
        set: c1.clone(),
    });

    let many = set_of(
        g,
        b.iter()
            .filter(|&v| g.degree_into(v, &a1) >= ceil_div(k, 100)),
    );
    trail.push(TrailEntry {
        name: "B40",
        set: many.clone(),
    });
    if many.len() >= 40 * k {
        let chosen: Vec<usize> = many.iter().take(40 * k).collect();
        let heavy_to_a1 = |v: usize| {
            g.neighbour_set(v)
                .intersection(&a1)
                .iter()
                .filter(|&u| g.row(u).and_count(g.row(v)) >= k)
                .count()
        };
        let light = chosen
            .iter()
            .copied()
            .find(|&v| heavy_to_a1(v) < ceil_div(k, 200));
        match light {
            None => {
                if let Some(v) = w.heavy("B40", set_of(g, chosen), p2) {
                    return done(v, w.notes);
                }
            }
            Some(bv) => {
                let a2 = set_of(
                    g,
                    g.neighbour_set(bv)
                        .intersection(&a1)
                        .iter()
                        .filter(|&u| g.row(u).and_count(g.row(bv)) < k)
                        .take(ceil_div(k, 200).max(1)),
                );
                let d = g.part_set(p3).difference(&g.neighbour_set(bv));
                trail.push(TrailEntry {
                    name: "A''",
                    set: a2.clone(),
                });
                if let Some(v) = w.dense("A''", d, a2, p3) {
                    return done(v, w.notes);
                }
            }
        }
    }

    let b1 = set_of(g, b.iter().filter(|&v| g.degree_into(v, &a1) <= k / 100));
    trail.push(TrailEntry {
        name: "B'",
        set: b1.clone(),
    });
    let cross: usize = c1.iter().map(|v| g.degree_into(v, &a1)).sum();
    if !a1.is_empty() && !c1.is_empty() && 200 * cross >= a1.len() * c1.len() {
        if let Some(v) = w.dense("A'C'", c1.clone(), a1.clone(), p3) {
            return done(v, w.notes);
        }
    }

    let c2 = set_of(
        g,
        c1.iter()
            .filter(|&v| 100 * g.degree_into(v, &a1) < a1.len()),
    );
    trail.push(TrailEntry {
        name: "C''",
        set: c2.clone(),
    });
    if c2.len() >= small {
        if let Some(v) = w.heavy("C''", c2, p3) {
            return done(v, w.notes);
        }
    }
    done(Variant::Inconclusive { trail }, w.notes)
}
