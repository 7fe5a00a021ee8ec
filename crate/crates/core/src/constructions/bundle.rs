use crate::graph::{
    format_ids, parse_graph, parse_ids, BipartiteGraph, Graph, Part, TripartiteBuilder,
    TripartiteGraph, VertexSet,
};
use crate::patterns::{find_triangle, KttWitness, KtttWitness};

use super::{
    andrasfai, blowup, light_vertices, make_gadget, standard_weighting, ConstructionError,
    ConstructionRecipe,
};

/// The composed extremal graph: `G₀ = (Γ_{k+1}, σω)` plus a copy of the
/// gadget between `U₁` and `V₃` and another between `U₂` and `V₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalBundle {
    pub graph: TripartiteGraph,
    pub u1: VertexSet,
    pub u2: VertexSet,
    pub recipe: ConstructionRecipe,
    pub gadget: BipartiteGraph,
}

pub fn compose_extremal(recipe: &ConstructionRecipe) -> Result<ExtremalBundle, ConstructionError> {
    compose_with_gadget(recipe, make_gadget(recipe)?)
}

/// Builds the bundle around a ready `σ × n` gadget.
pub fn compose_with_gadget(
    recipe: &ConstructionRecipe,
    gadget: BipartiteGraph,
) -> Result<ExtremalBundle, ConstructionError> {
    recipe.validate()?;
    let (k, sigma, n) = (recipe.k, recipe.sigma, recipe.n());
    if (gadget.left_size(), gadget.right_size()) != (sigma, n) {
        return Err(ConstructionError::InvalidArgument(format!(
            "gadget is {}x{}, expected {sigma}x{n}",
            gadget.left_size(),
            gadget.right_size()
        )));
    }
    let base = andrasfai(k + 1)?;
    let b = blowup(&base, &standard_weighting(k)?, sigma)?;
    let (l, r) = light_vertices(k);
    let (c1, c2) = (b.classes[l].clone(), b.classes[r].clone());
    let mut bld = b.graph.to_builder();
    let v3 = 2 * n;
    for (i, j) in gadget.edges() {
        bld.add_edge(c1.start + i, v3 + j)?;
        bld.add_edge(c2.start + i, v3 + j)?;
    }
    let order = 3 * n;
    Ok(ExtremalBundle {
        graph: bld.build(),
        u1: VertexSet::range(order, c1),
        u2: VertexSet::range(order, c2),
        recipe: recipe.clone(),
        gadget,
    })
}

fn is_gadget_edge(u1: &VertexSet, u2: &VertexSet, g: &TripartiteGraph, x: usize, y: usize) -> bool {
    let in_v3 = |v: usize| g.part_of(v) == Part::V3;
    let in_u = |v: usize| u1.contains(v) || u2.contains(v);
    (in_u(x) && in_v3(y)) || (in_u(y) && in_v3(x))
}

/// Why a `K_{t,t,t}` in a bundle-shaped graph contradicts the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessTrace {
    /// `A ⊆ U₁`, so the gadget copy on `U₁` contains this `K_{t,t}`.
    GadgetCopyU1(KttWitness),
    /// `B ⊆ U₂`, so the gadget copy on `U₂` contains this `K_{t,t}`.
    GadgetCopyU2(KttWitness),
    /// `v₁ ∈ A \ U₁`, `v₂ ∈ B \ U₂`, `v₃ ∈ C` span a triangle of `G₀`.
    Triangle(usize, usize, usize),
}

/// Replays the freeness argument on a witness in `g` (which may be a mutated
/// bundle graph with the same `U₁`, `U₂`).
pub fn trace_freeness(
    g: &TripartiteGraph,
    u1: &VertexSet,
    u2: &VertexSet,
    w: &KtttWitness,
) -> Result<FreenessTrace, String> {
    w.validate(g).map_err(|e| format!("not a witness: {e}"))?;
    let n = g.part_range(Part::V3).start;
    let local = |us: &VertexSet, vs: &[usize]| -> Vec<usize> {
        let pos: Vec<usize> = us.iter().collect();
        vs.iter()
            .map(|v| pos.iter().position(|p| p == v).unwrap())
            .collect()
    };
    let v3: Vec<usize> = w.c.iter().map(|c| c - n).collect();
    if w.a.iter().all(|&a| u1.contains(a)) {
        return Ok(FreenessTrace::GadgetCopyU1(KttWitness {
            t: w.t,
            left: local(u1, &w.a),
            right: v3,
        }));
    }
    if w.b.iter().all(|&b| u2.contains(b)) {
        return Ok(FreenessTrace::GadgetCopyU2(KttWitness {
            t: w.t,
            left: local(u2, &w.b),
            right: v3,
        }));
    }
    let v1 = *w.a.iter().find(|&&a| !u1.contains(a)).unwrap();
    let v2 = *w.b.iter().find(|&&b| !u2.contains(b)).unwrap();
    let v3 = w.c[0];
    for (x, y) in [(v1, v2), (v1, v3), (v2, v3)] {
        if !g.has_edge(x, y) || is_gadget_edge(u1, u2, g, x, y) {
            return Err(format!("edge {x}-{y} is not an edge of G0"));
        }
    }
    Ok(FreenessTrace::Triangle(v1, v2, v3))
}

impl ExtremalBundle {
    pub fn n(&self) -> usize {
        self.recipe.n()
    }

    /// The graph with both gadget copies removed.
    pub fn g0(&self) -> TripartiteGraph {
        let n = self.n();
        let mut b = TripartiteBuilder::balanced(n);
        for (x, y) in self.graph.edges() {
            if !is_gadget_edge(&self.u1, &self.u2, &self.graph, x, y) {
                b.add_edge(x, y).expect("edge of a valid graph");
            }
        }
        b.build()
    }

    /// `n + min(σ, δ_left(gadget))`.
    pub fn predicted_min_degree(&self) -> usize {
        self.n()
            + self
                .recipe
                .sigma
                .min(self.gadget.min_left_degree().unwrap_or(0))
    }

    pub fn achieved_tau(&self) -> i64 {
        self.graph.min_degree().unwrap_or(0) as i64 - self.n() as i64
    }

    /// Minimum degree strictly above `n`.
    pub fn is_extremal(&self) -> bool {
        self.achieved_tau() > 0
    }

    /// Properties (1)-(4) of `(G₀, U₁, U₂)` and triangle-freeness of `G₀`.
    pub fn check_g0_properties(&self) -> Result<(), String> {
        let g0 = self.g0();
        let (n, sigma) = (self.n(), self.recipe.sigma);
        if self.u1.len() != sigma || self.u2.len() != sigma {
            return Err(format!(
                "|U1| = {}, |U2| = {}, sigma = {sigma}",
                self.u1.len(),
                self.u2.len()
            ));
        }
        for (us, own, other) in [
            (&self.u1, Part::V1, Part::V2),
            (&self.u2, Part::V2, Part::V1),
        ] {
            for v in us.iter() {
                if g0.part_of(v) != own || g0.neighbour_set(v) != g0.part_set(other) {
                    return Err(format!("vertex {v} does not have N(v) = {other}"));
                }
            }
        }
        for v in 0..3 * n {
            if !self.u1.contains(v) && !self.u2.contains(v) && g0.degree(v) < n + sigma {
                return Err(format!(
                    "vertex {v} has degree {} < n + sigma",
                    g0.degree(v)
                ));
            }
        }
        if let Some(w) = find_triangle(&g0) {
            return Err(format!("G0 has a triangle {w}"));
        }
        Ok(())
    }

    /// `U1=`, `U2=` and recipe lines that accompany the TRI block.
    pub fn sidecar_text(&self) -> String {
        format!(
            "U1={}\nU2={}\n{}\n",
            format_ids(self.u1.iter()),
            format_ids(self.u2.iter()),
            self.recipe
        )
    }

    pub fn to_text(&self) -> String {
        self.graph.to_text() + &self.sidecar_text()
    }

    /// Re-assembles a bundle from a TRI graph and its sidecar.
    pub fn from_parts(graph: TripartiteGraph, sidecar: &str) -> Result<Self, ConstructionError> {
        let bad = |m: String| ConstructionError::InvalidArgument(m);
        let mut u1 = None;
        let mut u2 = None;
        let mut recipe = None;
        for line in sidecar
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
        {
            if let Some(ids) = line.strip_prefix("U1=") {
                u1 = Some(parse_ids(ids).map_err(bad)?);
            } else if let Some(ids) = line.strip_prefix("U2=") {
                u2 = Some(parse_ids(ids).map_err(bad)?);
            } else {
                recipe = Some(line.parse::<ConstructionRecipe>()?);
            }
        }
        let (u1, u2, recipe) = match (u1, u2, recipe) {
            (Some(a), Some(b), Some(r)) => (a, b, r),
            _ => return Err(bad("sidecar needs U1=, U2= and a recipe line".into())),
        };
        let n = recipe.n();
        if graph.part_sizes() != [n; 3] || u1.len() != recipe.sigma || u2.len() != recipe.sigma {
            return Err(bad("sidecar does not match the graph".into()));
        }
        let order = graph.order();
        if u1.iter().chain(&u2).any(|&v| v >= order) {
            return Err(bad("U1/U2 id out of range".into()));
        }
        let gadget = BipartiteGraph::from_edges(
            recipe.sigma,
            n,
            u1.iter().enumerate().flat_map(|(i, &u)| {
                let g = &graph;
                (0..n)
                    .filter(move |&j| g.has_edge(u, 2 * n + j))
                    .map(move |j| (i, j))
            }),
        )?;
        Ok(ExtremalBundle {
            u1: VertexSet::from_ids(order, u1),
            u2: VertexSet::from_ids(order, u2),
            graph,
            recipe,
            gadget,
        })
    }
}

/// Parses the concatenated TRI block and sidecar written by
/// [`ExtremalBundle::to_text`].
pub fn parse_bundle(text: &str) -> Result<ExtremalBundle, ConstructionError> {
    let split = text
        .find("\nU1=")
        .map(|i| i + 1)
        .ok_or_else(|| ConstructionError::InvalidArgument("no U1= line".into()))?;
    let (tri, side) = text.split_at(split);
    let graph =
        match parse_graph(tri).map_err(|e| ConstructionError::InvalidArgument(e.to_string()))? {
            Graph::Tripartite(g) => g,
            Graph::Bipartite(_) => {
                return Err(ConstructionError::InvalidArgument(
                    "bundle graph must be TRI".into(),
                ))
            }
        };
    ExtremalBundle::from_parts(graph, side)
}
