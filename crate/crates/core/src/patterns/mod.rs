//! Exact detection and counting of triangles, `K_{t,t}`, `K_{t,t,t}` and
//! `K_{1,1,t}`.

mod counting;
mod dense_core;
mod detect;
pub(crate) mod search;
mod witness;

pub use counting::{binomial, count_k11t, kst_threshold};
pub use dense_core::{extract_dense_core, good_vertices, meets_dense_core_bound, ExtractionResult};
pub use detect::{
    contains_ktt, contains_ktt_with, contains_kttt, contains_kttt_with, contains_kttt_within,
    find_triangle,
};
pub use search::{SearchConfig, SearchError, DEFAULT_BUDGET};
pub use witness::{KttWitness, KtttWitness, WitnessError};
