//! Isomorph-free enumeration of small trees and connected graphs, the
//! search for minimum-order root-realizing graphs, and criticality
//! filters.
//!
//! Generation works level by level: every connected graph on n >= 2
//! vertices has a non-cut vertex (a leaf of any spanning tree), so
//! extending each connected (n-1)-vertex representative by one new
//! vertex joined to every nonempty neighbor subset reaches every class;
//! a canonical-code set rejects isomorphs. Trees use the same scheme
//! with single-leaf extensions and the cheaper tree code. The final
//! level is streamed; earlier levels are small enough to hold.

use std::collections::HashSet;

use thiserror::Error;

use crate::canon::{canonical_code, tree_code};
use crate::crit::{is_theta_critical_with_engine, multiplicity_with_engine};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::matching::global_engine;
use crate::root::AlgebraicRoot;

/// Native tree generation cap: the class counts are verified against the
/// published sequence through n = 18.
pub const MAX_TREE_N: usize = 18;

/// Native connected-graph generation cap.
pub const MAX_CONNECTED_N: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("tree enumeration supports 1 <= n <= {max} (got n = {n})", max = MAX_TREE_N)]
    TreesOutOfRange { n: usize },
    #[error("native connected enumeration supports 1 <= n <= {max} (got n = {n}); supply an external graph6 stream via --input for larger orders", max = MAX_CONNECTED_N)]
    ConnectedOutOfRange { n: usize },
}

/// All isomorphism classes of trees on `level` vertices, materialized.
fn tree_level(level: usize) -> Vec<Graph> {
    let mut current = vec![Graph::empty(1)];
    for k in 2..=level {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        for parent in &current {
            for v in 0..k - 1 {
                let child = parent.grow(1).add_edge(v, k - 1).expect("fresh vertex");
                let code = tree_code(&child).expect("leaf extension of a tree");
                if seen.insert(code) {
                    next.push(child);
                }
            }
        }
        current = next;
    }
    current
}

/// Streams one representative per isomorphism class of trees on n
/// vertices, in a deterministic order.
pub fn enum_trees(n: usize) -> Result<Box<dyn Iterator<Item = Graph> + Send>, EnumError> {
    if n == 0 || n > MAX_TREE_N {
        return Err(EnumError::TreesOutOfRange { n });
    }
    if n == 1 {
        return Ok(Box::new(std::iter::once(Graph::empty(1))));
    }
    let parents = tree_level(n - 1);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let iter = parents.into_iter().flat_map(move |parent| {
        (0..n - 1)
            .map(|v| parent.grow(1).add_edge(v, n - 1).expect("fresh vertex"))
            .collect::<Vec<_>>()
    });
    Ok(Box::new(iter.filter(move |child| {
        seen.insert(tree_code(child).expect("tree"))
    })))
}

/// All isomorphism classes of connected graphs on `level` vertices,
/// materialized.
fn connected_level(level: usize) -> Vec<Graph> {
    let mut current = vec![Graph::empty(1)];
    for k in 2..=level {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        for parent in &current {
            for subset in 1u64..(1u64 << (k - 1)) {
                let child = attach_vertex(parent, subset);
                let code = canonical_code(&child).0;
                if seen.insert(code) {
                    next.push(child);
                }
            }
        }
        current = next;
    }
    current
}

fn attach_vertex(parent: &Graph, subset: u64) -> Graph {
    let k = parent.n();
    let mut child = parent.grow(1);
    let mut s = subset;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        child = child.add_edge(v, k).expect("fresh vertex");
    }
    child
}

/// Streams one representative per isomorphism class of connected graphs
/// on n vertices, in a deterministic order.
pub fn enum_connected(n: usize) -> Result<Box<dyn Iterator<Item = Graph> + Send>, EnumError> {
    if n == 0 || n > MAX_CONNECTED_N {
        return Err(EnumError::ConnectedOutOfRange { n });
    }
    if n == 1 {
        return Ok(Box::new(std::iter::once(Graph::empty(1))));
    }
    let parents = connected_level(n - 1);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let iter = parents.into_iter().flat_map(move |parent| {
        (1u64..(1u64 << (n - 1))).map(move |subset| attach_vertex(&parent, subset))
    });
    Ok(Box::new(iter.filter(move |child| {
        seen.insert(canonical_code(child).0)
    })))
}

/// Keeps exactly the θ-critical graphs of the stream. Disconnected
/// inputs are never critical and are dropped.
pub fn filter_critical<'a, I>(
    stream: I,
    theta: &'a AlgebraicRoot,
) -> impl Iterator<Item = Graph> + 'a
where
    I: Iterator<Item = Graph> + 'a,
{
    let engine = global_engine();
    stream.filter(move |g| {
        is_theta_critical_with_engine(engine, g, theta).unwrap_or(false)
    })
}

/// A graph found during the n_θ scan where θ is a root of μ with
/// multiplicity other than 1. None can exist at small orders; any hit is
/// a cross-check failure worth surfacing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anomaly {
    pub n: usize,
    pub graph6: String,
    pub multiplicity: usize,
}

/// Result of the minimum-order scan: n_θ, every connected graph of that
/// order with m(θ, ·) = 1, and any multiplicity anomalies seen on the
/// way.
#[derive(Debug)]
pub struct NThetaResult {
    pub n_theta: usize,
    pub members: Vec<Graph>,
    pub anomalies: Vec<Anomaly>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NThetaError {
    #[error("no connected graph of order <= {n_max} has multiplicity exactly 1 at theta")]
    NotFound { n_max: usize, anomalies: Vec<Anomaly> },
    #[error(transparent)]
    Enum(#[from] EnumError),
}

/// Scans orders 1..=n_max for the first with a connected graph where
/// m(θ, G) = 1; returns that order and all realizers at it.
pub fn compute_n_theta(theta: &AlgebraicRoot, n_max: usize) -> Result<NThetaResult, NThetaError> {
    if n_max == 0 || n_max > MAX_CONNECTED_N {
        return Err(EnumError::ConnectedOutOfRange { n: n_max }.into());
    }
    let engine = global_engine();
    let mut anomalies = Vec::new();
    for n in 1..=n_max {
        let mut members = Vec::new();
        for g in enum_connected(n)? {
            let m = multiplicity_with_engine(engine, &g, theta);
            if m == 1 {
                members.push(g);
            } else if m >= 2 {
                anomalies.push(Anomaly {
                    n,
                    graph6: graph6_string(&g),
                    multiplicity: m,
                });
            }
        }
        if !members.is_empty() {
            return Ok(NThetaResult {
                n_theta: n,
                members,
                anomalies,
            });
        }
    }
    Err(NThetaError::NotFound { n_max, anomalies })
}

pub(crate) fn graph6_string(g: &Graph) -> String {
    write_graph6(g)
}

/// Brute-force connected classes by edge-subset sweep, for cross-checking
/// the generator at n <= 6.
pub fn connected_classes_bruteforce(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 6, "oracle domain");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges);
        if g.is_connected() && seen.insert(canonical_code(&g).0) {
            out.push(g);
        }
    }
    out
}

/// Brute-force tree classes by decoding every Prüfer sequence, for
/// cross-checking the tree generator at n <= 9.
pub fn tree_classes_prufer(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 9, "oracle domain");
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    if n == 2 {
        return vec![crate::graph::complete(2)];
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let g = prufer_decode(n, &seq);
        if seen.insert(tree_code(&g).expect("prufer decodes to a tree")) {
            out.push(g);
        }
        // Odometer step over [0, n)^len.
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).expect("leaf");
        edges.push((leaf, s));
        used[leaf] = true;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v] && degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}
