//! Simple undirected graphs on labeled vertices `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex: edge tests and
//! neighborhood scans dominate the matching recurrences, and bitset rows
//! make vertex deletion and induced subgraphs cheap at census scale.
//! Values are immutable after construction; every operation returns a
//! fresh graph.

use thiserror::Error;

/// Errors from structural operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge ({u},{v}) is absent")]
    EdgeAbsent { u: usize, v: usize },
    #[error("edge ({u},{v}) is already present")]
    EdgePresent { u: usize, v: usize },
    #[error("self-loops are not allowed (vertex {v})")]
    SelfLoop { v: usize },
}

/// A simple graph: no loops, no multi-edges, vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    row_words: usize,
    /// `n * row_words` words; row `v` occupies
    /// `bits[v*row_words .. (v+1)*row_words]`.
    bits: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let row_words = n.div_ceil(64).max(1);
        Graph {
            n,
            row_words,
            bits: vec![0; n * row_words],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    ///
    /// # Panics
    /// Panics on out-of-range endpoints or self-loops; edge lists in this
    /// crate are program constants, not user input.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            assert_ne!(u, v, "self-loop at {u}");
            g.set_edge(u, v, true);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    fn bit_index(&self, u: usize, v: usize) -> (usize, u64) {
        (u * self.row_words + v / 64, 1u64 << (v % 64))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        let (w, mask) = self.bit_index(u, v);
        self.bits[w] & mask != 0
    }

    fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        let had = self.has_edge(u, v);
        if had == present {
            return;
        }
        let (wu, mu) = self.bit_index(u, v);
        self.bits[wu] ^= mu;
        let (wv, mv) = self.bit_index(v, u);
        self.bits[wv] ^= mv;
        if present {
            self.m += 1;
        } else {
            self.m -= 1;
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.row_words..(v + 1) * self.row_words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Ascending degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[v * self.row_words..(v + 1) * self.row_words];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * 64;
            BitIter(w).map(move |b| base + b)
        })
    }

    /// All edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with the edge added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent { u, v });
        }
        let mut g = self.clone();
        g.set_edge(u, v, true);
        Ok(g)
    }

    /// New graph with the edge removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent { u, v });
        }
        let mut g = self.clone();
        g.set_edge(u, v, false);
        Ok(g)
    }

    /// Deletes a vertex; higher labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Deletes both endpoints of an edge (or any two distinct vertices).
    pub fn delete_two(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        debug_assert_ne!(u, v);
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != u && w != v).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on the given vertices, relabeled `0..k` in the
    /// order given. Callers pass strictly increasing lists when they want
    /// order-preserving relabeling.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Relabels: new label `k` gets the old vertex `order[k]`.
    /// `order` must be a permutation of `0..n`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        self.induced(order)
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v, true);
        }
        g
    }

    /// A copy with `extra` new isolated vertices appended after the
    /// existing ones.
    pub fn grow(&self, extra: usize) -> Graph {
        let mut g = Graph::empty(self.n + extra);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        g
    }

    /// Vertex sets of the connected components, each sorted ascending,
    /// ordered by least contained vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as induced subgraphs, ordered by least
    /// original vertex label.
    pub fn components(&self) -> Vec<Graph> {
        self.component_vertex_sets()
            .iter()
            .map(|c| self.induced(c))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.m == self.n - 1 && self.is_connected()
    }

    /// Vertex connectivity. Conventions: complete graphs give `n - 1`
    /// (so isolated `K_1` gives 0) and disconnected or empty graphs give 0.
    pub fn connectivity(&self) -> usize {
        if self.n == 0 || !self.is_connected() {
            return 0;
        }
        if self.m == self.n * (self.n - 1) / 2 {
            return self.n - 1;
        }
        // Menger: kappa = min over non-adjacent pairs of the max number of
        // internally disjoint paths, via unit-capacity vertex splitting.
        let mut best = self.n; // larger than any possible cut
        for s in 0..self.n {
            for t in 0..self.n {
                if s == t || self.has_edge(s, t) {
                    continue;
                }
                best = best.min(self.max_vertex_disjoint_paths(s, t));
            }
        }
        best
    }

    /// Maximum number of internally vertex-disjoint s-t paths for
    /// non-adjacent s, t (unit-capacity max flow on the split digraph).
    fn max_vertex_disjoint_paths(&self, s: usize, t: usize) -> usize {
        // Node v splits into v_in = 2v, v_out = 2v+1. Arcs:
        // v_in -> v_out (cap 1, except s and t which are uncapped),
        // u_out -> v_in for each edge uv (cap 1 each direction).
        let nn = 2 * self.n;
        let mut cap = vec![std::collections::HashMap::new(); nn];
        let inf = self.n as i64;
        for v in 0..self.n {
            let c = if v == s || v == t { inf } else { 1 };
            cap[2 * v].insert(2 * v + 1, c);
        }
        for (u, v) in self.edges() {
            cap[2 * u + 1].insert(2 * v, 1);
            cap[2 * v + 1].insert(2 * u, 1);
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0usize;
        loop {
            // BFS for an augmenting path of positive residual capacity.
            let mut prev = vec![usize::MAX; nn];
            prev[source] = source;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (&v, &c) in &cap[u] {
                    if c > 0 && prev[v] == usize::MAX {
                        prev[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                return flow;
            }
            let mut v = sink;
            while v != source {
                let u = prev[v];
                *cap[u].get_mut(&v).unwrap() -= 1;
                *cap[v].entry(u).or_insert(0) += 1;
                v = u;
            }
            flow += 1;
        }
    }

    /// An edge lying on a shortest cycle, or `None` for forests.
    ///
    /// The choice is deterministic: the BFS roots and neighbor scans run
    /// in label order and the first shortest cycle found wins.
    pub fn shortest_cycle_edge(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, (usize, usize))> = None; // (girth, edge)
        for root in 0..self.n {
            // BFS from root; a non-tree edge closing back at depths d1, d2
            // witnesses a cycle of length d1 + d2 + 1 through root.
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some((g, _)) = best {
                    if dist[u] * 2 >= g {
                        break;
                    }
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] {
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|(g, _)| len < g) {
                            best = Some((len, (u.min(v), u.max(v))));
                        }
                    }
                }
            }
        }
        best.map(|(_, e)| e)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterates set bit positions of one word, ascending.
struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Path graph `P_n` with edges along `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `C_n` (requires `n >= 3`).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edges(k + 1, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.degree_sequence(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn large_vertex_counts_cross_word_boundaries() {
        let n = 200;
        let g = path(n);
        assert_eq!(g.m(), n - 1);
        assert!(g.is_tree());
        assert_eq!(g.degree(100), 2);
        assert_eq!(g.neighbors(100).collect::<Vec<_>>(), vec![99, 101]);
    }

    #[test]
    fn delete_vertex_relabels_in_order() {
        let g = path(4);
        let h = g.delete_vertex(1).unwrap();
        // Remaining vertices 0,2,3 -> labels 0,1,2; only edge 2-3 survives.
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert!(g.delete_vertex(7).is_err());

        let k3 = complete(3);
        assert_eq!(k3.delete_vertex(0).unwrap().edges(), vec![(0, 1)]);
        let s = star(4);
        assert_eq!(s.delete_vertex(0).unwrap().m(), 0);
    }

    #[test]
    fn edge_ops_check_preconditions() {
        let g = path(3);
        assert!(g.add_edge(0, 2).is_ok());
        assert_eq!(g.add_edge(0, 1), Err(GraphError::EdgePresent { u: 0, v: 1 }));
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop { v: 1 }));
        assert_eq!(g.delete_edge(0, 2), Err(GraphError::EdgeAbsent { u: 0, v: 2 }));
        let h = g.delete_edge(0, 1).unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(h.n(), 3);
    }

    #[test]
    fn components_partition() {
        let g = Graph::from_edges(5, &[(0, 3), (1, 4)]);
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].edges(), vec![(0, 1)]); // {0,3}
        assert_eq!(comps[1].edges(), vec![(0, 1)]); // {1,4}
        assert_eq!(comps[2].n(), 1); // {2}
        let total: usize = comps.iter().map(|c| c.n()).sum();
        assert_eq!(total, 5);
        assert_eq!(complete(4).components().len(), 1);
    }

    #[test]
    fn connectivity_conventions() {
        assert_eq!(cycle(5).connectivity(), 2);
        assert_eq!(path(5).connectivity(), 1);
        assert_eq!(complete(4).connectivity(), 3);
        assert_eq!(Graph::empty(3).connectivity(), 0);
        assert_eq!(Graph::empty(1).connectivity(), 0);
        assert_eq!(Graph::from_edges(2, &[(0, 1)]).connectivity(), 1);
        // K_4 minus an edge: connectivity 2.
        let g = complete(4).delete_edge(0, 1).unwrap();
        assert_eq!(g.connectivity(), 2);
        // Two triangles sharing one vertex: cut vertex gives 1.
        let b = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(b.connectivity(), 1);
    }

    #[test]
    fn shortest_cycle_edge_on_cyclic_graphs() {
        assert_eq!(path(6).shortest_cycle_edge(), None);
        assert!(cycle(5).shortest_cycle_edge().is_some());
        // Triangle hanging off a long cycle: the edge must lie on the triangle.
        let mut edges: Vec<_> = (1..8).map(|v| (v - 1, v)).collect();
        edges.push((7, 0)); // C_8 on 0..7
        edges.push((0, 8));
        edges.push((1, 8)); // triangle 0-1-8
        let g = Graph::from_edges(9, &edges);
        let (u, v) = g.shortest_cycle_edge().unwrap();
        let tri = [(0, 1), (0, 8), (1, 8)];
        assert!(tri.contains(&(u, v)), "({u},{v}) not on the triangle");
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let g = complete(3).disjoint_union(&path(2));
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 4);
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));
    }
}
