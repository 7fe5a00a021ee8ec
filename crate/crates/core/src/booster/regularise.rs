use crate::graph::{GraphError, TripartiteGraph};

use super::BoosterError;

/// Per-vertex split `f⁺(v) + f⁻(v) = n + τ` with `τ ≤ f⁺ ≤ deg⁺` and
/// `τ ≤ f⁻ ≤ deg⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularisation {
    pub tau: usize,
    pub n: usize,
    pub f_plus: Vec<usize>,
    pub f_minus: Vec<usize>,
}

/// `max(τ, min(deg⁺, n))`.
///
/// Under `δ ≥ n + τ` neither clamp binds: `deg⁺ ≤ n` because the next part
/// has `n` vertices, and `deg⁺ = deg − deg⁻ ≥ n + τ − n = τ`.
pub fn plus_value(tau: usize, n: usize, forward_degree: usize) -> usize {
    tau.max(forward_degree.min(n))
}

/// `tau_of(g)` raised to at least 1.
pub fn default_tau(g: &TripartiteGraph) -> Result<i64, GraphError> {
    Ok(g.tau_of()?.max(1))
}

pub fn regularise(g: &TripartiteGraph, tau: i64) -> Result<Regularisation, BoosterError> {
    let n = g
        .balanced_size()
        .ok_or(GraphError::Unbalanced(g.part_sizes()))?;
    if tau < 1 {
        return Err(BoosterError::TauTooSmall(tau));
    }
    let tau = tau as usize;
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) < n + tau) {
        return Err(BoosterError::Infeasible {
            vertex: v,
            degree: g.degree(v),
            need: n + tau,
        });
    }
    let f_plus: Vec<usize> = (0..g.order())
        .map(|v| plus_value(tau, n, g.forward_degree(v)))
        .collect();
    let f_minus = f_plus.iter().map(|&p| n + tau - p).collect();
    Ok(Regularisation {
        tau,
        n,
        f_plus,
        f_minus,
    })
}

impl Regularisation {
    /// Checks the three defining chains at every vertex.
    pub fn validate(&self, g: &TripartiteGraph) -> Result<(), String> {
        if self.f_plus.len() != g.order() || self.f_minus.len() != g.order() {
            return Err("regularisation has the wrong length".into());
        }
        for v in 0..g.order() {
            let (p, m) = (self.f_plus[v], self.f_minus[v]);
            if !(self.tau <= p && p <= g.forward_degree(v)) {
                return Err(format!(
                    "vertex {v}: f+ = {p} outside [{}, {}]",
                    self.tau,
                    g.forward_degree(v)
                ));
            }
            if !(self.tau <= m && m <= g.backward_degree(v)) {
                return Err(format!(
                    "vertex {v}: f- = {m} outside [{}, {}]",
                    self.tau,
                    g.backward_degree(v)
                ));
            }
            if p + m != self.n + self.tau {
                return Err(format!("vertex {v}: f+ + f- = {} != n + tau", p + m));
            }
        }
        Ok(())
    }

    /// Vertices by decreasing `f⁺`, ties by index.
    pub fn order_by_f_plus(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.f_plus.len()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.f_plus[v]), v));
        order
    }
}
