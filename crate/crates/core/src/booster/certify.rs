use crate::graph::{Part, TripartiteGraph};

use super::{BoosterError, Regularisation};

/// Both sides of the two booster inequalities for one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoosterCertificate {
    pub u: usize,
    pub v: usize,
    pub tau: usize,
    /// Booster level `f⁺(v) − f⁺(u) ≥ 0`.
    pub r: usize,
    /// The part containing neither endpoint.
    pub third: Part,
    pub codegree: usize,
    /// `|V_i \ (N(u) ∪ N(v))|`.
    pub complement: usize,
}

impl BoosterCertificate {
    /// `deg(u, v) − τ − r`, which bounds the complement from above.
    pub fn slack(&self) -> i64 {
        self.codegree as i64 - self.tau as i64 - self.r as i64
    }

    /// Slack of the complement inequality.
    pub fn complement_slack(&self) -> i64 {
        self.slack() - self.complement as i64
    }
}

/// Certifies that a forward `r`-booster `u -> v` has codegree at least
/// `τ + r` and at most `deg(u, v) − τ − r` common non-neighbours in the third
/// part.
pub fn certify_booster(
    g: &TripartiteGraph,
    reg: &Regularisation,
    u: usize,
    v: usize,
) -> Result<BoosterCertificate, BoosterError> {
    if u >= g.order() || v >= g.order() || !g.is_forward_edge(u, v) {
        return Err(BoosterError::InvalidArgument(format!(
            "{u} -> {v} is not a forward edge"
        )));
    }
    let level = reg.f_plus[v] as i64 - reg.f_plus[u] as i64;
    if level < 0 {
        return Err(BoosterError::InvalidArgument(format!(
            "{u} -> {v} is not a booster (level {level})"
        )));
    }
    let third = Part::third(g.part_of(u), g.part_of(v)).expect("distinct parts");
    let mask = g.part_mask(third);
    let codegree = g.row(u).and_count(g.row(v));
    let covered = g.row(u).and_count(mask) + g.row(v).and_count(mask) - codegree;
    let cert = BoosterCertificate {
        u,
        v,
        tau: reg.tau,
        r: level as usize,
        third,
        codegree,
        complement: mask.count() - covered,
    };
    if cert.slack() < 0 || cert.complement_slack() < 0 {
        return Err(BoosterError::Invariant(format!(
            "booster inequalities fail at {u} -> {v}: codegree {}, complement {}, tau {}, r {}",
            cert.codegree, cert.complement, cert.tau, cert.r
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::booster::regularise;

    #[test]
    fn complete_graph_equality() {
        let g = TripartiteGraph::complete([3; 3]);
        let reg = regularise(&g, 3).unwrap();
        let c = certify_booster(&g, &reg, 0, 3).unwrap();
        assert_eq!(
            (c.codegree, c.complement, c.slack(), c.complement_slack()),
            (3, 0, 0, 0)
        );
        assert!(certify_booster(&g, &reg, 3, 0).is_err());
        assert!(certify_booster(&g, &reg, 0, 1).is_err());
    }
}
