//! Canonical codes for isomorphism testing, memoization, and census set
//! comparison.
//!
//! `canonical_code` returns the graph6 bytes of the lexicographically
//! minimal adjacency bitstring over all vertex labelings, found by
//! branch-and-bound: vertices are placed label by label, candidates are
//! ordered by their adjacency column against the placed prefix, prefixes
//! are pruned against the incumbent, and interchangeable twin candidates
//! collapse to one branch. The result is the exact minimum, so two
//! graphs share a code iff they are isomorphic; `brute_force_code` is
//! the factorial-search oracle used to certify that at small orders.
//!
//! Trees get a cheaper canonical string (`tree_code`): the classic
//! center-rooted parenthesization, linear-time and valid at any order.

use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Isomorphism-invariant total key: two graphs share a code iff they are
/// isomorphic. The bytes are the graph6 encoding of the canonical
/// labeling, so a code is also a parseable graph6 token.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 bytes are ASCII")
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

/// Largest order the branch-and-bound accepts (mask width).
pub const MAX_CANON_N: usize = 128;

/// The canonically relabeled graph: minimal adjacency bitstring over all
/// labelings. Panics if `n > MAX_CANON_N`; census and family graphs stay
/// far below that, and the matching engine routes big components around
/// canonicalization.
pub fn canonical_form(g: &Graph) -> Graph {
    assert!(
        g.n() <= MAX_CANON_N,
        "canonical form limited to n <= {MAX_CANON_N}, got {}",
        g.n()
    );
    let order = Search::new(g).run();
    g.relabel(&order)
}

/// Canonical code: graph6 bytes of `canonical_form`.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode(write_graph6(&canonical_form(g)).into_bytes())
}

struct Search {
    n: usize,
    adj: Vec<u128>,
    placed: Vec<usize>,
    cols: Vec<u128>,
    used: u128,
    best_cols: Vec<u128>,
    best_perm: Vec<usize>,
    have_best: bool,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![0u128; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Search {
            n,
            adj,
            placed: Vec::with_capacity(n),
            cols: Vec::with_capacity(n),
            used: 0,
            best_cols: Vec::new(),
            best_perm: Vec::new(),
            have_best: false,
        }
    }

    fn run(mut self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        self.recurse();
        self.best_perm
    }

    /// Column bits of candidate `w` against the placed prefix: the first
    /// placed vertex contributes the most significant bit, matching the
    /// graph6 column order x(0,d), x(1,d), ..., x(d-1,d).
    fn column(&self, w: usize) -> u128 {
        let d = self.placed.len();
        let mut col = 0u128;
        for (i, &p) in self.placed.iter().enumerate() {
            if self.adj[w] >> p & 1 == 1 {
                col |= 1 << (d - 1 - i);
            }
        }
        col
    }

    fn recurse(&mut self) {
        let d = self.placed.len();
        if d == self.n {
            if !self.have_best || self.cols < self.best_cols {
                self.best_cols = self.cols.clone();
                self.best_perm = self.placed.clone();
                self.have_best = true;
            }
            return;
        }
        let mut cands: Vec<(u128, usize)> = (0..self.n)
            .filter(|&w| self.used >> w & 1 == 0)
            .map(|w| (self.column(w), w))
            .collect();
        cands.sort_unstable();
        // Twin collapse: swapping two unplaced vertices with identical
        // adjacency outside the pair is an automorphism fixing the placed
        // prefix, so only the first of each twin class needs exploring.
        let mut kept: Vec<(u128, usize)> = Vec::with_capacity(cands.len());
        'cand: for &(c, w) in &cands {
            for &(c2, w2) in kept.iter().rev() {
                if c2 != c {
                    break;
                }
                let mask = !((1u128 << w) | (1u128 << w2));
                if (self.adj[w] ^ self.adj[w2]) & mask == 0 {
                    continue 'cand;
                }
            }
            kept.push((c, w));
        }
        for (c, w) in kept {
            if self.have_best && d >= 1 {
                // Compare the candidate prefix against the incumbent.
                let pr = self.cols.as_slice().cmp(&self.best_cols[..d - 1]);
                match pr {
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {
                        if c > self.best_cols[d - 1] {
                            break; // candidates ascend, all later lose too
                        }
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
            self.placed.push(w);
            self.used |= 1 << w;
            if d >= 1 {
                self.cols.push(c);
            }
            self.recurse();
            self.placed.pop();
            self.used &= !(1 << w);
            if d >= 1 {
                self.cols.pop();
            }
        }
    }
}

/// Factorial-search oracle: minimum graph6 string over all `n!`
/// labelings. Testing only; keep `n` small (8! is the practical edge).
pub fn brute_force_code(g: &Graph) -> CanonicalCode {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u8>> = None;
    permute(&mut perm, 0, &mut |p| {
        let code = write_graph6(&g.relabel(p)).into_bytes();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    CanonicalCode(best.expect("at least the identity labeling"))
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Canonical string for trees: center-rooted AHU parenthesization
/// (minimum over both centers when the tree is bicentral). Linear in the
/// tree size and valid at any order. `None` when the graph is not a tree.
pub fn tree_code(g: &Graph) -> Option<Vec<u8>> {
    if !g.is_tree() {
        return None;
    }
    let centers = tree_centers(g);
    let codes: Vec<Vec<u8>> = centers.iter().map(|&c| rooted_tree_code(g, c)).collect();
    codes.into_iter().min()
}

/// The one or two middle vertices left by repeatedly peeling leaves.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut frontier: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// AHU code of the tree rooted at `root`, built iteratively (reverse BFS
/// order) so deep paths cannot overflow the stack.
pub fn rooted_tree_code(g: &Graph, root: usize) -> Vec<u8> {
    let n = g.n();
    debug_assert!(root < n);
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::from([root]);
    parent[root] = root;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "rooted_tree_code needs a connected tree");
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut codes = std::mem::take(&mut child_codes[u]);
        codes.sort_unstable();
        let mut code = Vec::with_capacity(2 + codes.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in codes {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        if u == root {
            return code;
        }
        child_codes[parent[u]].push(code);
    }
    unreachable!("root is always last in reverse BFS order")
}
