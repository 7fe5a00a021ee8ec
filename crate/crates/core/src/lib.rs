//! Extremal constructions, exact pattern detection and booster machinery for
//! minimum-degree problems in tripartite graphs.

mod bits;
pub mod booster;
pub mod certificate;
pub mod constructions;
pub mod exec;
pub mod graph;
pub mod patterns;

pub use exec::Strategy;
