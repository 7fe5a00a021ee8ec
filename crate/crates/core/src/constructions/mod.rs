//! Generators for the extremal family: Andrásfai graphs, weighted blowups,
//! `K_{t,t}`-free gadgets and the composed bundle.

mod andrasfai;
mod blowup;
mod bundle;
mod gadget;
mod random;
mod recipe;

use thiserror::Error;

use crate::graph::GraphError;
use crate::patterns::SearchError;

pub use andrasfai::{andrasfai, light_vertices, standard_weighting, BaseGraph, Weighting};
pub use blowup::{blowup, Blowup};
pub use bundle::{
    compose_extremal, compose_with_gadget, parse_bundle, trace_freeness, ExtremalBundle,
    FreenessTrace,
};
pub use gadget::{
    deletion_probability, gadget_source, make_gadget, make_gadget_from, pg_incidence,
    random_deletion_free, sample_bipartite, trim_min_degree, Trimmed,
};
pub use random::{raise_min_degree, sample_tripartite};
pub use recipe::{ConstructionRecipe, GadgetKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("construction infeasible: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Search(#[from] SearchError),
}
