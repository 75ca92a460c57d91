//! Matching polynomials, path trees, and the independent counting oracle.
//!
//! The engine computes μ(G, x) = Σ_k (-1)^k p_G(k) x^(n-2k) exactly over
//! the integers. Components are handled independently (μ is multiplicative
//! over disjoint unions), tree components by a linear-pass rooted DP, and
//! cyclic components by deleting an edge on a shortest cycle:
//! μ(G) = μ(G - e) - μ(G \ {u, v}). Choosing e on a shortest cycle keeps
//! G - e connected and strictly reduces the cycle space, so the recursion
//! bottoms out in trees.
//!
//! Results for components are memoized under canonical keys, so isomorphic
//! components computed anywhere in a run are paid for once.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::canon::{canonical_code, tree_code};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("matching count oracle is restricted to n <= {max} vertices (got n = {n}); it exists to cross-check the engine, not to replace it")]
    OracleTooLarge { n: usize, max: usize },
    #[error("path tree would exceed {limit} nodes; pass a larger bound explicitly if this is intentional")]
    PathTreeTooLarge { limit: u64 },
    #[error("path trees are built only for graphs with at most {max} vertices (got n = {n})")]
    PathTreeSourceTooLarge { n: usize, max: usize },
    #[error("path tree root {u} is out of range for a graph on {n} vertices")]
    RootOutOfRange { u: usize, n: usize },
}

/// Default node budget for path tree construction. The tree for K_8 from
/// any root already has 109,601 nodes; the budget is a guard against
/// accidental exponential blowups, not a hard capability limit.
pub const DEFAULT_PATH_TREE_LIMIT: u64 = 1_000_000;

/// Vertex count cap for the counting oracle. 16 keeps the mask in a `u32`
/// and the worst case (K_16, about 46.2 million total matchings) cheap.
pub const ORACLE_MAX_N: usize = 16;

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

struct Memo {
    map: HashMap<Vec<u8>, (IntPolynomial, u64)>,
    tick: u64,
    cap: Option<usize>,
}

impl Memo {
    fn get(&mut self, key: &[u8]) -> Option<IntPolynomial> {
        self.tick += 1;
        let tick = self.tick;
        self.map.get_mut(key).map(|(p, stamp)| {
            *stamp = tick;
            p.clone()
        })
    }

    fn insert(&mut self, key: Vec<u8>, value: IntPolynomial) {
        if let Some(cap) = self.cap {
            if cap == 0 {
                return;
            }
            if self.map.len() >= cap {
                // Drop the least recently used half. Approximate LRU is
                // plenty: correctness never depends on what stays cached.
                let mut stamps: Vec<u64> = self.map.values().map(|(_, s)| *s).collect();
                let mid = stamps.len() / 2;
                let (_, median, _) = stamps.select_nth_unstable(mid);
                let median = *median;
                self.map.retain(|_, (_, s)| *s > median);
            }
        }
        self.tick += 1;
        let tick = self.tick;
        self.map.insert(key, (value, tick));
    }
}

/// Number of independently locked memo shards. Sixteen keeps worker
/// threads off each other's locks; correctness never depends on the
/// count.
const MEMO_SHARDS: usize = 16;

/// Shared, thread-safe matching polynomial computer with a canonical-form
/// memo table, sharded by key hash so parallel scans do not serialize on
/// one lock. Identical results regardless of thread interleaving: the
/// memo only ever caches values that each thread would compute itself.
pub struct MatchingEngine {
    shards: Vec<Mutex<Memo>>,
}

impl Default for MatchingEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl MatchingEngine {
    /// Engine with the memo capacity taken from `MATCHCRIT_MEMO_CAP`
    /// (entries; unset means unbounded; unparsable values warn and are
    /// ignored).
    pub fn new() -> Self {
        let cap = match std::env::var("MATCHCRIT_MEMO_CAP") {
            Ok(s) => match s.trim().parse::<usize>() {
                Ok(v) => Some(v),
                Err(_) => {
                    eprintln!(
                        "warning: ignoring unparsable MATCHCRIT_MEMO_CAP={:?} (want a nonnegative integer)",
                        s
                    );
                    None
                }
            },
            Err(_) => None,
        };
        Self::with_cap(cap)
    }

    /// Engine with an explicit memo capacity (`None` = unbounded). The
    /// capacity divides across the shards, so the total entry count
    /// stays at most `cap`; caps below the shard count disable caching.
    pub fn with_cap(cap: Option<usize>) -> Self {
        let per_shard = cap.map(|c| c / MEMO_SHARDS);
        MatchingEngine {
            shards: (0..MEMO_SHARDS)
                .map(|_| {
                    Mutex::new(Memo {
                        map: HashMap::new(),
                        tick: 0,
                        cap: per_shard,
                    })
                })
                .collect(),
        }
    }

    /// Number of memoized component polynomials.
    pub fn memo_len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().unwrap().map.len()).sum()
    }

    fn shard(&self, key: &[u8]) -> &Mutex<Memo> {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        key.hash(&mut h);
        &self.shards[h.finish() as usize % MEMO_SHARDS]
    }

    /// μ(G, x), exactly.
    pub fn matching_polynomial(&self, g: &Graph) -> IntPolynomial {
        if g.n() == 0 {
            return IntPolynomial::one();
        }
        let mut acc = IntPolynomial::one();
        for comp in g.components() {
            acc = acc.mul(&self.component_mu(&comp));
        }
        acc
    }

    /// The matching count vector p_G(0..=⌊n/2⌋), recovered from μ.
    pub fn matching_counts(&self, g: &Graph) -> Vec<BigInt> {
        counts_from_mu(g.n(), &self.matching_polynomial(g))
    }

    fn component_mu(&self, g: &Graph) -> IntPolynomial {
        debug_assert!(g.is_connected());
        let key = component_key(g);
        if let Some(k) = &key {
            if let Some(hit) = self.shard(k).lock().unwrap().get(k) {
                return hit;
            }
        }
        let result = if g.is_tree() {
            tree_mu(g)
        } else {
            let (u, v) = g
                .shortest_cycle_edge()
                .expect("connected non-tree has a cycle");
            let minus_edge = g.delete_edge(u, v).expect("edge exists");
            let minus_ends = g.delete_two(u, v).expect("vertices exist");
            self.matching_polynomial(&minus_edge)
                .sub(&self.matching_polynomial(&minus_ends))
        };
        if let Some(k) = key {
            self.shard(&k).lock().unwrap().insert(k, result.clone());
        }
        result
    }
}

/// Largest non-tree component the memo canonicalizes. Above this the
/// branch-and-bound key costs more than the recursion it would save
/// (sparse near-cycles are its worst case), so bigger components just
/// recurse: each edge step sheds a cycle, forests peel off as trees.
const MEMO_CANON_MAX: usize = 13;

/// Memo key for a connected graph: tree code for trees (cheap, any size),
/// canonical graph6 bytes for small non-trees. `None` disables
/// memoization for that component.
fn component_key(g: &Graph) -> Option<Vec<u8>> {
    if let Some(tc) = tree_code(g) {
        let mut k = Vec::with_capacity(tc.len() + 1);
        k.push(b'T');
        k.extend_from_slice(&tc);
        return Some(k);
    }
    if g.n() <= MEMO_CANON_MAX {
        let mut k = Vec::with_capacity(g.n() + 2);
        k.push(b'C');
        k.extend_from_slice(&canonical_code(g).0);
        return Some(k);
    }
    None
}

static GLOBAL_ENGINE: Lazy<MatchingEngine> = Lazy::new(MatchingEngine::new);

/// μ(G, x) via a process-wide shared engine.
pub fn matching_polynomial(g: &Graph) -> IntPolynomial {
    GLOBAL_ENGINE.matching_polynomial(g)
}

/// The process-wide engine itself, for callers that want its memo.
pub fn global_engine() -> &'static MatchingEngine {
    &GLOBAL_ENGINE
}

// ---------------------------------------------------------------------------
// Tree DP
// ---------------------------------------------------------------------------

/// μ of a tree by one post-order pass. For each vertex v with children c:
///   A_v = x·Π A_c - Σ_c B_c·Π_{c'≠c} A_{c'},    B_v = Π A_c,
/// where A_v = μ(T_v) and B_v = μ(T_v \ v). The inner sum and product are
/// folded together left to right so no division is needed.
fn tree_mu(g: &Graph) -> IntPolynomial {
    debug_assert!(g.is_tree());
    let (a, _) = tree_mu_rooted(g, 0);
    a
}

/// (μ(T), μ(T \ root)) for a tree, rooted at `root`.
fn tree_mu_rooted(g: &Graph, root: usize) -> (IntPolynomial, IntPolynomial) {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "tree is connected");
    let mut a: Vec<Option<IntPolynomial>> = vec![None; n];
    let mut b: Vec<Option<IntPolynomial>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut prod = IntPolynomial::one();
        let mut sum = IntPolynomial::zero();
        for w in g.neighbors(v) {
            if parent[w] == v {
                let aw = a[w].take().expect("child computed");
                let bw = b[w].take().expect("child computed");
                sum = sum.mul(&aw).add(&bw.mul(&prod));
                prod = prod.mul(&aw);
            }
        }
        a[v] = Some(IntPolynomial::x().mul(&prod).sub(&sum));
        b[v] = Some(prod);
    }
    (a[root].take().unwrap(), b[root].take().unwrap())
}

// ---------------------------------------------------------------------------
// Independent oracle and cross-check recursion
// ---------------------------------------------------------------------------

/// Counts k-matchings directly: every matching either misses the first
/// non-isolated vertex v or pairs it with a neighbor. Memoized on the
/// surviving vertex mask. Deliberately shares no code with the engine.
pub fn matching_counts_oracle(g: &Graph) -> Result<Vec<BigInt>, MatchingError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(MatchingError::OracleTooLarge { n, max: ORACLE_MAX_N });
    }
    let mut nbr = vec![0u32; n];
    for (u, v) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut memo: HashMap<u32, Vec<u64>> = HashMap::new();
    let counts = count_rec(full, &nbr, &mut memo);
    let mut out: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    out.resize(n / 2 + 1, BigInt::zero());
    Ok(out)
}

fn count_rec(mask: u32, nbr: &[u32], memo: &mut HashMap<u32, Vec<u64>>) -> Vec<u64> {
    let mut pick = None;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if nbr[v] & mask != 0 {
            pick = Some(v);
            break;
        }
    }
    let v = match pick {
        Some(v) => v,
        None => return vec![1],
    };
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let mut res = count_rec(mask & !(1 << v), nbr, memo);
    let mut partners = nbr[v] & mask;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        let sub = count_rec(mask & !(1 << v) & !(1 << u), nbr, memo);
        if res.len() < sub.len() + 1 {
            res.resize(sub.len() + 1, 0);
        }
        for (k, c) in sub.iter().enumerate() {
            res[k + 1] += c;
        }
    }
    memo.insert(mask, res.clone());
    res
}

/// Matching counts read back off μ: p(k) = (-1)^k · coefficient of
/// x^(n-2k), for k = 0..=⌊n/2⌋.
pub fn counts_from_mu(n: usize, mu: &IntPolynomial) -> Vec<BigInt> {
    (0..=n / 2)
        .map(|k| {
            let c = mu.coeff(n - 2 * k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// μ built from a matching count vector: coefficient of x^(n-2k) is
/// (-1)^k p(k).
pub fn mu_from_counts(n: usize, counts: &[BigInt]) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in counts.iter().enumerate() {
        debug_assert!(2 * k <= n || c.is_zero());
        if 2 * k <= n {
            let signed = if k % 2 == 0 { c.clone() } else { -c.clone() };
            coeffs[n - 2 * k] = signed;
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// μ by the raw vertex recursion μ(G) = x·μ(G\u) - Σ_{v~u} μ(G\{u,v}),
/// unmemoized. Exponential; exists purely as a second independent
/// cross-check for small graphs.
pub fn naive_vertex_rule_mu(g: &Graph) -> IntPolynomial {
    let n = g.n();
    if n == 0 {
        return IntPolynomial::one();
    }
    let u = 0;
    let mut res = IntPolynomial::x().mul(&naive_vertex_rule_mu(&g.delete_vertex(u).unwrap()));
    for v in g.neighbors(u).collect::<Vec<_>>() {
        res = res.sub(&naive_vertex_rule_mu(&g.delete_two(u, v).unwrap()));
    }
    res
}

// ---------------------------------------------------------------------------
// Path trees
// ---------------------------------------------------------------------------

/// The path tree T(G, u): one node per path in G starting at u, a node's
/// parent being the path with the last vertex removed. Stored as a parent
/// array because path trees get large while every node has one parent.
#[derive(Debug)]
pub struct PathTree {
    /// `parent[i]` is the parent node of node `i`; node 0 is the root and
    /// has `parent[0] == 0`.
    pub parent: Vec<u32>,
    /// The graph vertex at the end of each node's path.
    pub vertex: Vec<u32>,
}

impl PathTree {
    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    /// Dense materialization. Only sensible for small trees; the caller
    /// owns that judgement.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (1..self.parent.len())
            .map(|i| (self.parent[i] as usize, i))
            .collect();
        Graph::from_edges(self.parent.len(), &edges)
    }

    /// (μ(T), μ(T \ root)) straight off the parent array, no dense graph.
    pub fn matching_polynomials(&self) -> (IntPolynomial, IntPolynomial) {
        let n = self.parent.len();
        let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
        for i in 1..n {
            children[self.parent[i] as usize].push(i as u32);
        }
        // Nodes were created parents-first, so descending index order is a
        // valid post-order.
        let mut a: Vec<Option<IntPolynomial>> = vec![None; n];
        let mut b: Vec<Option<IntPolynomial>> = vec![None; n];
        for v in (0..n).rev() {
            let mut prod = IntPolynomial::one();
            let mut sum = IntPolynomial::zero();
            for &w in &children[v] {
                let aw = a[w as usize].take().unwrap();
                let bw = b[w as usize].take().unwrap();
                sum = sum.mul(&aw).add(&bw.mul(&prod));
                prod = prod.mul(&aw);
            }
            a[v] = Some(IntPolynomial::x().mul(&prod).sub(&sum));
            b[v] = Some(prod);
        }
        (a[0].take().unwrap(), b[0].take().unwrap())
    }
}

/// Builds T(G, u) with the default node budget.
pub fn path_tree(g: &Graph, u: usize) -> Result<PathTree, MatchingError> {
    path_tree_with_limit(g, u, DEFAULT_PATH_TREE_LIMIT)
}

/// Builds T(G, u), refusing once more than `limit` nodes would exist.
/// Children of a node follow the neighbor order of the endpoint vertex,
/// so node numbering is deterministic (preorder).
pub fn path_tree_with_limit(g: &Graph, u: usize, limit: u64) -> Result<PathTree, MatchingError> {
    let n = g.n();
    if u >= n {
        return Err(MatchingError::RootOutOfRange { u, n });
    }
    if n > 128 {
        return Err(MatchingError::PathTreeSourceTooLarge { n, max: 128 });
    }
    let mut parent = vec![0u32];
    let mut vertex = vec![u as u32];
    let mut stack: Vec<(u32, u128)> = vec![(0, 1u128 << u)];
    while let Some((node, used)) = stack.pop() {
        let end = vertex[node as usize] as usize;
        // Reverse neighbor order on the stack so children are numbered in
        // ascending neighbor order.
        let nbrs: Vec<usize> = g.neighbors(end).collect();
        for &w in nbrs.iter().rev() {
            if used & (1u128 << w) != 0 {
                continue;
            }
            if parent.len() as u64 >= limit {
                return Err(MatchingError::PathTreeTooLarge { limit });
            }
            let id = parent.len() as u32;
            parent.push(node);
            vertex.push(w as u32);
            stack.push((id, used | (1u128 << w)));
        }
    }
    Ok(PathTree { parent, vertex })
}

/// Outcome of checking the two path tree identities for (G, u):
/// μ(G) divides μ(T) and μ(G\u)·μ(T) = μ(T\root)·μ(G).
pub struct PathTreeCheck {
    pub nodes: usize,
    pub quotient: Option<IntPolynomial>,
    pub ratio_identity: bool,
}

/// Verifies divisibility of μ(T(G,u)) by μ(G) and the deleted-vertex
/// ratio identity, exactly.
pub fn verify_path_tree_divisibility(
    engine: &MatchingEngine,
    g: &Graph,
    u: usize,
    limit: u64,
) -> Result<PathTreeCheck, MatchingError> {
    let t = path_tree_with_limit(g, u, limit)?;
    let (mu_t, mu_t_minus_root) = t.matching_polynomials();
    let mu_g = engine.matching_polynomial(g);
    let mu_g_minus_u = engine.matching_polynomial(&g.delete_vertex(u).expect("u in range"));
    let quotient = mu_t.divide_exact(&mu_g).ok();
    let ratio_identity = mu_g_minus_u.mul(&mu_t) == mu_t_minus_root.mul(&mu_g);
    Ok(PathTreeCheck {
        nodes: t.node_count(),
        quotient,
        ratio_identity,
    })
}

// ---------------------------------------------------------------------------
// Root multiplicity extrema
// ---------------------------------------------------------------------------

/// Maximum multiplicity over nonzero roots of μ(G), with the squarefree
/// product of every factor attaining it (the last part of the Yun
/// decomposition). Returns (0, None) when μ has no nonzero roots.
pub fn max_nonzero_root_multiplicity(
    engine: &MatchingEngine,
    g: &Graph,
) -> (usize, Option<IntPolynomial>) {
    let mu = engine.matching_polynomial(g);
    let trailing = mu
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    let stripped = IntPolynomial::from_coeffs(mu.coeffs()[trailing..].to_vec());
    if stripped.degree().unwrap_or(0) == 0 {
        return (0, None);
    }
    let (_, parts) = stripped
        .squarefree_decomposition()
        .expect("nonzero polynomial");
    // Yun yields one part per multiplicity, multiplicities strictly
    // increasing, so the last part carries the maximum.
    let (part, mult) = parts.last().expect("nonconstant").clone();
    (mult, Some(part))
}
