//! Root multiplicity m(θ, G), the vertex taxonomy, and θ-criticality.
//!
//! For a root θ of μ(G), deleting a vertex moves the multiplicity by at
//! most one (interlacing through the path tree), so every vertex falls in
//! exactly one of three classes: essential (multiplicity drops), neutral
//! (unchanged), positive (rises). A non-essential vertex with an
//! essential neighbor is additionally "special". G is θ-critical when it
//! is connected, θ roots μ(G), and every vertex is essential.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::matching::{global_engine, MatchingEngine};
use crate::root::AlgebraicRoot;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CritError {
    #[error("theta-criticality is defined for connected graphs only")]
    Disconnected,
    #[error("theta is not a root of the matching polynomial")]
    NotARoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexKind {
    /// m(θ, G∖u) = m(θ, G) − 1.
    Essential,
    /// m(θ, G∖u) = m(θ, G).
    Neutral,
    /// m(θ, G∖u) = m(θ, G) + 1.
    Positive,
}

/// Classification of one vertex relative to a fixed root θ of μ(G).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    pub vertex: usize,
    pub kind: VertexKind,
    /// Not essential, but adjacent to an essential vertex.
    pub special: bool,
}

/// Full verdict for (G, θ). When θ is not a root of μ(G), `is_root` is
/// false and `classes` is empty. `critical` additionally requires G
/// connected: the all-essential condition alone is also met by disjoint
/// unions of critical graphs, where the multiplicity-one consequence
/// genuinely fails.
#[derive(Debug, Clone, Serialize)]
pub struct CriticalityVerdict {
    pub graph6: String,
    pub minpoly: String,
    pub is_root: bool,
    pub multiplicity: usize,
    pub classes: Vec<VertexClass>,
    pub critical: bool,
}

impl CriticalityVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }

    /// The class of vertex `u`, if classification ran.
    pub fn class_of(&self, u: usize) -> Option<VertexClass> {
        self.classes.get(u).copied()
    }
}

/// m(θ, G): multiplicity of θ as a root of μ(G, x). For a reducible
/// defining polynomial this is the minimum over its irreducible factors.
pub fn multiplicity(g: &Graph, theta: &AlgebraicRoot) -> usize {
    multiplicity_with_engine(global_engine(), g, theta)
}

pub fn multiplicity_with_engine(
    engine: &MatchingEngine,
    g: &Graph,
    theta: &AlgebraicRoot,
) -> usize {
    theta.multiplicity_in(&engine.matching_polynomial(g))
}

/// Classifies every vertex of G relative to θ.
pub fn classify_vertices(g: &Graph, theta: &AlgebraicRoot) -> CriticalityVerdict {
    classify_vertices_with_engine(global_engine(), g, theta)
}

pub fn classify_vertices_with_engine(
    engine: &MatchingEngine,
    g: &Graph,
    theta: &AlgebraicRoot,
) -> CriticalityVerdict {
    let graph6 = write_graph6(g);
    let minpoly = theta.to_string();
    let m = theta.multiplicity_in(&engine.matching_polynomial(g));
    if m == 0 {
        return CriticalityVerdict {
            graph6,
            minpoly,
            is_root: false,
            multiplicity: 0,
            classes: Vec::new(),
            critical: false,
        };
    }
    let kinds: Vec<VertexKind> = (0..g.n())
        .map(|u| {
            let sub = g.delete_vertex(u).expect("u in range");
            let mu = theta.multiplicity_in(&engine.matching_polynomial(&sub));
            match mu as isize - m as isize {
                -1 => VertexKind::Essential,
                0 => VertexKind::Neutral,
                1 => VertexKind::Positive,
                d => unreachable!("interlacing violated: delta {} at vertex {}", d, u),
            }
        })
        .collect();
    let classes: Vec<VertexClass> = (0..g.n())
        .map(|u| {
            let kind = kinds[u];
            let special = kind != VertexKind::Essential
                && g.neighbors(u).any(|v| kinds[v] == VertexKind::Essential);
            VertexClass {
                vertex: u,
                kind,
                special,
            }
        })
        .collect();
    let all_essential = classes.iter().all(|c| c.kind == VertexKind::Essential);
    let critical = all_essential && g.is_connected();
    CriticalityVerdict {
        graph6,
        minpoly,
        is_root: true,
        multiplicity: m,
        classes,
        critical,
    }
}

/// True iff connected G is θ-critical. Disconnected input is an error:
/// criticality is a property of connected graphs.
pub fn is_theta_critical(g: &Graph, theta: &AlgebraicRoot) -> Result<bool, CritError> {
    is_theta_critical_with_engine(global_engine(), g, theta)
}

pub fn is_theta_critical_with_engine(
    engine: &MatchingEngine,
    g: &Graph,
    theta: &AlgebraicRoot,
) -> Result<bool, CritError> {
    if !g.is_connected() {
        return Err(CritError::Disconnected);
    }
    Ok(classify_vertices_with_engine(engine, g, theta).critical)
}

/// The lowest-indexed θ-essential vertex. θ must root μ(G). A `None`
/// return contradicts the existence guarantee and is treated by callers
/// as a counterexample event, not swallowed here.
pub fn essential_exists(g: &Graph, theta: &AlgebraicRoot) -> Result<Option<usize>, CritError> {
    essential_exists_with_engine(global_engine(), g, theta)
}

pub fn essential_exists_with_engine(
    engine: &MatchingEngine,
    g: &Graph,
    theta: &AlgebraicRoot,
) -> Result<Option<usize>, CritError> {
    let verdict = classify_vertices_with_engine(engine, g, theta);
    if !verdict.is_root {
        return Err(CritError::NotARoot);
    }
    Ok(verdict
        .classes
        .iter()
        .find(|c| c.kind == VertexKind::Essential)
        .map(|c| c.vertex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    fn one() -> AlgebraicRoot {
        AlgebraicRoot::integer(1)
    }

    #[test]
    fn k2_is_1_critical() {
        let g = complete(2);
        assert_eq!(multiplicity(&g, &one()), 1);
        assert_eq!(is_theta_critical(&g, &one()), Ok(true));
        assert_eq!(essential_exists(&g, &one()), Ok(Some(0)));
        let v = classify_vertices(&g, &one());
        assert!(v.critical && v.is_root && v.multiplicity == 1);
        assert!(v.classes.iter().all(|c| c.kind == VertexKind::Essential && !c.special));
    }

    #[test]
    fn p3_not_root() {
        let g = path(3);
        let v = classify_vertices(&g, &one());
        assert!(!v.is_root);
        assert!(v.classes.is_empty());
        assert!(!v.critical);
        assert_eq!(is_theta_critical(&g, &one()), Ok(false));
        assert_eq!(essential_exists(&g, &one()), Err(CritError::NotARoot));
    }

    #[test]
    fn disconnected_criticality_errors() {
        let g = complete(2).disjoint_union(&complete(2));
        assert_eq!(is_theta_critical(&g, &one()), Err(CritError::Disconnected));
        // All-essential but disconnected: classified, not critical.
        let v = classify_vertices(&g, &one());
        assert_eq!(v.multiplicity, 2);
        assert!(v.classes.iter().all(|c| c.kind == VertexKind::Essential));
        assert!(!v.critical);
    }

    #[test]
    fn p4_at_one_has_neutral_ends() {
        // μ(P_4) = x^4-3x^2+1: 1 is not a root.
        let v = classify_vertices(&path(4), &one());
        assert!(!v.is_root);
        // μ(P_5) = x^5-4x^3+3x = x(x^2-1)(x^2-3): 1 is a simple root.
        let v5 = classify_vertices(&path(5), &one());
        assert!(v5.is_root && v5.multiplicity == 1);
        // Deleting the center of P_5 leaves 2K_2 with m(1) = 2? No:
        // μ(2K_2) = (x^2-1)^2, multiplicity 2 = 1 + 1, so center Positive.
        assert_eq!(v5.class_of(2).unwrap().kind, VertexKind::Positive);
        // Deleting an end leaves P_4 where 1 is not a root: Essential.
        assert_eq!(v5.class_of(0).unwrap().kind, VertexKind::Essential);
        assert_eq!(v5.class_of(4).unwrap().kind, VertexKind::Essential);
    }

    #[test]
    fn json_shape() {
        let v = classify_vertices(&complete(2), &one());
        let j = v.to_json();
        assert!(j.contains("\"graph6\":\"A_\""));
        assert!(j.contains("\"minpoly\":\"x-1\""));
        assert!(j.contains("\"multiplicity\":1"));
        assert!(j.contains("\"critical\":true"));
        assert!(j.contains("\"kind\":\"Essential\""));
    }

    #[test]
    fn special_requires_essential_neighbor() {
        // P_5 at θ = 1: deleting vertex 1 leaves K_1 ∪ P_3 with
        // μ = x·(x^3-2x), so m(1) drops to 0 and vertex 1 is Essential.
        // The Positive center then has an essential neighbor: special.
        let v = classify_vertices(&path(5), &one());
        assert_eq!(v.class_of(1).unwrap().kind, VertexKind::Essential);
        let center = v.class_of(2).unwrap();
        assert_eq!(center.kind, VertexKind::Positive);
        assert!(center.special);
    }
}
