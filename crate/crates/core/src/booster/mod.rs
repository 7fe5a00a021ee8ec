//! Degree regularisation, boosters, and the executable steps of the
//! structural argument.

mod certify;
mod classify;
mod graver;
mod increment;
mod initial;
mod regularise;
mod squad;
mod structure;

use thiserror::Error;

use crate::graph::GraphError;
use crate::patterns::SearchError;

pub use certify::{certify_booster, BoosterCertificate};
pub use classify::{classify_edges, classify_edges_with, BoosterLabel};
pub use graver::graver_triangle;
pub use increment::{increment_step, IncrementOutcome, Refinement};
pub use initial::{initial_configuration, scale_k, InitialConfigOutcome, TrailEntry, Variant};
pub use regularise::{default_tau, plus_value, regularise, Regularisation};
pub use squad::{find_squads, qualifying_vertices, SquadCertificate};
pub use structure::{structure_extract, CrossSubgraph, StructureResult, StructureSets, DEFAULT_K};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoosterError {
    #[error("tau must be at least 1, got {0}")]
    TauTooSmall(i64),
    #[error("infeasible tau: vertex {vertex} has degree {degree} < n + tau = {need}")]
    Infeasible {
        vertex: usize,
        degree: usize,
        need: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Search(#[from] SearchError),
}
