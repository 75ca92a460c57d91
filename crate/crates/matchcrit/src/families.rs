//! Deterministic constructors for the named graphs and families, plus
//! structural membership tests for the extremal characterizations.
//!
//! Labeling convention, fixed so graph6 outputs are byte-stable: spine
//! (path or cycle) vertices come first in path order, then pendant
//! vertices in attachment order. Hub-type constructions label the hub
//! vertices first, then the remaining pieces in listed order.
//!
//! Two distinct families share the letter F. The hub family (`make_f_family`)
//! is a hub vertex wired into disjoint edges; its members realize the
//! maximum root multiplicity at ±1. The tree family (`make_ftree`) is a
//! caterpillar appearing in the 1-critical census. The CLI exposes them
//! as `Fhub` and `F` respectively.

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::Mutex;

use once_cell::sync::Lazy;
use thiserror::Error;

use crate::crit::{is_theta_critical_with_engine, multiplicity_with_engine};
use crate::graph::{path, Graph};
use crate::matching::global_engine;
use crate::root::AlgebraicRoot;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires n >= {min} (got n = {n})")]
    OutOfDomain {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("{family} requires odd n (got n = {n})")]
    ParityOdd { family: &'static str, n: usize },
    #[error("attachment pattern has {got} entries but the family needs {expected}")]
    PatternLength { expected: usize, got: usize },
    #[error("hub {hub} has no edge into component {component}; every pair needs at least one")]
    MissingHubEdge { hub: usize, component: usize },
    #[error("component {index} must be connected and nonempty")]
    BadComponent { index: usize },
    #[error("wiring entry for component {component} is empty or out of range")]
    BadWiring { component: usize },
    #[error("twin construction needs at least 2 other components (got {got})")]
    TooFewComponents { got: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("inner hub edge ({a}, {b}) is invalid for {t} hub vertices")]
    BadInnerEdge { a: usize, b: usize, t: usize },
    #[error("graph is not 1-critical (clause: 1-critical input)")]
    NotCritical,
    #[error("vertex {u} has degree {degree}, not 3 (clause: cut vertex of degree three)")]
    DegreeNotThree { u: usize, degree: usize },
    #[error("deleting vertex {u} leaves {components} components, not 3 (clause: three components)")]
    NotCutIntoThree { u: usize, components: usize },
    #[error("no component of the deletion is trivial (clause: at least one trivial)")]
    NoTrivialComponent,
    #[error("unknown family name {0:?}")]
    UnknownName(String),
    #[error("{family} requires an order argument")]
    MissingOrder { family: &'static str },
    #[error("unknown attachment token {0:?} (want 1, 2, or 12)")]
    UnknownAttachment(String),
}

fn path_plus_pendants(spine: usize, pendants: &[usize]) -> Graph {
    let n = spine + pendants.len();
    let mut edges: Vec<(usize, usize)> = (0..spine - 1).map(|i| (i, i + 1)).collect();
    for (j, &at) in pendants.iter().enumerate() {
        edges.push((at, spine + j));
    }
    Graph::from_edges(n, &edges)
}

fn cycle_plus_pendants(len: usize, pendants: &[usize]) -> Graph {
    let n = len + pendants.len();
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    for (j, &at) in pendants.iter().enumerate() {
        edges.push((at, len + j));
    }
    Graph::from_edges(n, &edges)
}

fn domain(family: &'static str, n: usize, min: usize) -> Result<(), FamilyError> {
    if n < min {
        return Err(FamilyError::OutOfDomain { family, n, min });
    }
    Ok(())
}

/// W_n: the path on n-2 vertices with a pendant at each quasi-pendant.
pub fn make_w(n: usize) -> Result<Graph, FamilyError> {
    domain("W_n", n, 6)?;
    Ok(path_plus_pendants(n - 2, &[1, n - 4]))
}

/// Y_n: the path on n-1 vertices with a pendant at one quasi-pendant.
pub fn make_y(n: usize) -> Result<Graph, FamilyError> {
    domain("Y_n", n, 4)?;
    Ok(path_plus_pendants(n - 1, &[1]))
}

/// Y_n*: the path on n-2 vertices with two pendants at v1.
pub fn make_ystar(n: usize) -> Result<Graph, FamilyError> {
    domain("Y_n*", n, 4)?;
    Ok(path_plus_pendants(n - 2, &[1, 1]))
}

/// R_n: the path on n-3 vertices with pendants at v1, v2, v3.
pub fn make_r(n: usize) -> Result<Graph, FamilyError> {
    domain("R_n", n, 7)?;
    Ok(path_plus_pendants(n - 3, &[1, 2, 3]))
}

/// R_n*: the path on n-4 vertices with two pendants at each of v1, v2.
pub fn make_rstar(n: usize) -> Result<Graph, FamilyError> {
    domain("R_n*", n, 8)?;
    Ok(path_plus_pendants(n - 4, &[1, 1, 2, 2]))
}

/// F_n (tree family): the path on n-4 vertices with pendants at v1, v2,
/// v3 and at the far quasi-pendant v_{n-6}.
pub fn make_ftree(n: usize) -> Result<Graph, FamilyError> {
    domain("F_n (tree)", n, 10)?;
    Ok(path_plus_pendants(n - 4, &[1, 2, 3, n - 6]))
}

/// F_n*: the path on n-6 vertices with two pendants at each of v1, v2,
/// and the far quasi-pendant v_{n-8}.
pub fn make_fstar(n: usize) -> Result<Graph, FamilyError> {
    domain("F_n*", n, 11)?;
    Ok(path_plus_pendants(n - 6, &[1, 1, 2, 2, n - 8, n - 8]))
}

/// C_n*: the cycle on n-3 vertices with two pendants at v0 and one at v2.
pub fn make_cstar(n: usize) -> Result<Graph, FamilyError> {
    domain("C_n*", n, 6)?;
    Ok(cycle_plus_pendants(n - 3, &[0, 0, 2]))
}

/// Ĉ_n: the cycle on n-5 vertices with pendants at v0, v3, v4 and two
/// pendants at v2.
pub fn make_chat(n: usize) -> Result<Graph, FamilyError> {
    domain("Ĉ_n", n, 10)?;
    Ok(cycle_plus_pendants(n - 5, &[0, 3, 4, 2, 2]))
}

/// C_n^+: the cycle on n-1 vertices with one pendant.
pub fn make_cplus(n: usize) -> Result<Graph, FamilyError> {
    domain("C_n^+", n, 5)?;
    Ok(cycle_plus_pendants(n - 1, &[0]))
}

/// H_1: a triangle with a path of length 2 hanging off one corner.
pub fn make_h1() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])
}

/// H_2: a 4-cycle with one pendant.
pub fn make_h2() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])
}

/// G*: the 12-vertex graph whose √3-classification exhibits all three
/// vertex kinds at once. Vertex 0 is u; 1, 2 are v1, v2; 3, 4, 5 are
/// w1..w3; 6 and 9 root the two triangles (z1, z2).
pub fn make_gstar() -> Graph {
    Graph::from_edges(
        12,
        &[
            (0, 1),
            (0, 2),
            (0, 6),
            (0, 9),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (6, 7),
            (6, 8),
            (7, 8),
            (9, 10),
            (9, 11),
            (10, 11),
        ],
    )
}

/// How the hub reaches one K_2 of the hub family: its first endpoint,
/// its second, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attach {
    First,
    Second,
    Both,
}

impl Attach {
    fn endpoints(self) -> (bool, bool) {
        match self {
            Attach::First => (true, false),
            Attach::Second => (false, true),
            Attach::Both => (true, true),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Attach::First => "1",
            Attach::Second => "2",
            Attach::Both => "12",
        }
    }
}

impl FromStr for Attach {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s {
            "1" => Ok(Attach::First),
            "2" => Ok(Attach::Second),
            "12" | "21" | "both" => Ok(Attach::Both),
            other => Err(FamilyError::UnknownAttachment(other.to_string())),
        }
    }
}

/// A member of the hub family on n vertices.
///
/// Odd n: hub vertex 0 plus (n-1)/2 disjoint edges, the hub joined to the
/// chosen endpoints of each. Even n: distinguished vertex w = 0 with its
/// own partner 1, plus (n-2)/2 further disjoint edges reached the same
/// way; w's partner receives no extra edges. The i-th K_2 has vertices
/// (2i+1, 2i+2) for odd n and (2i+2, 2i+3) for even n.
pub fn make_f_family(n: usize, pattern: &[Attach]) -> Result<Graph, FamilyError> {
    domain("hub family F_n", n, 3)?;
    let t = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    if pattern.len() != t {
        return Err(FamilyError::PatternLength {
            expected: t,
            got: pattern.len(),
        });
    }
    let base = if n % 2 == 1 { 1 } else { 2 };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n % 2 == 0 {
        edges.push((0, 1));
    }
    for (i, att) in pattern.iter().enumerate() {
        let a = base + 2 * i;
        let b = a + 1;
        edges.push((a, b));
        let (first, second) = att.endpoints();
        if first {
            edges.push((0, a));
        }
        if second {
            edges.push((0, b));
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// T_n: the unique tree in the hub family, the hub joined to exactly one
/// endpoint of each K_2 (both parities; the two endpoint choices give
/// isomorphic trees).
pub fn make_t(n: usize) -> Result<Graph, FamilyError> {
    domain("T_n", n, 3)?;
    let t = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    make_f_family(n, &vec![Attach::First; t])
}

/// Wiring for hub constructions: `wiring[h][c]` lists the vertices of
/// component c (local indices) joined to hub h. Every list must be
/// nonempty.
pub type HubWiring = Vec<Vec<Vec<usize>>>;

/// The all-minimal wiring: each hub reaches local vertex 0 of each
/// component.
pub fn minimal_wiring(t: usize, k: usize) -> HubWiring {
    vec![vec![vec![0]; k]; t]
}

/// A member of the hub-over-components family: t hub vertices (labeled
/// 0..t-1, with an arbitrary edge set among themselves), each joined to
/// at least one vertex of every listed component. Components keep their
/// internal labeling, offset after the hubs in listed order.
pub fn make_h_family(
    components: &[Graph],
    t: usize,
    wiring: &HubWiring,
    inner_edges: &[(usize, usize)],
) -> Result<Graph, FamilyError> {
    if t < 1 {
        return Err(FamilyError::OutOfDomain {
            family: "hub count t",
            n: t,
            min: 1,
        });
    }
    let k = components.len();
    if wiring.len() != t || wiring.iter().any(|w| w.len() != k) {
        return Err(FamilyError::PatternLength {
            expected: t * k,
            got: wiring.iter().map(|w| w.len()).sum(),
        });
    }
    for (i, c) in components.iter().enumerate() {
        if c.n() == 0 || !c.is_connected() {
            return Err(FamilyError::BadComponent { index: i });
        }
    }
    let mut offsets = Vec::with_capacity(k);
    let mut next = t;
    for c in components {
        offsets.push(next);
        next += c.n();
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in inner_edges {
        if a >= t || b >= t || a == b {
            return Err(FamilyError::BadInnerEdge { a, b, t });
        }
        edges.push((a, b));
    }
    for (ci, c) in components.iter().enumerate() {
        for (a, b) in c.edges() {
            edges.push((offsets[ci] + a, offsets[ci] + b));
        }
    }
    for (h, per_comp) in wiring.iter().enumerate() {
        for (ci, targets) in per_comp.iter().enumerate() {
            if targets.is_empty() {
                return Err(FamilyError::MissingHubEdge {
                    hub: h,
                    component: ci,
                });
            }
            for &v in targets {
                if v >= components[ci].n() {
                    return Err(FamilyError::BadWiring { component: ci });
                }
                edges.push((h, offsets[ci] + v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_edges(next, &edges))
}

/// A member of the twin family: take g0prime, append a twin of vertex v
/// (duplicating v's closed neighborhood), then a hub u joined to v and
/// its twin and to at least one vertex of each of the k >= 2 other
/// components. Labels: u = 0, g0prime at 1..=n0, the twin at n0+1,
/// others following in listed order.
pub fn make_q(
    g0prime: &Graph,
    v: usize,
    others: &[Graph],
    wiring: &[Vec<usize>],
) -> Result<Graph, FamilyError> {
    let n0 = g0prime.n();
    if n0 == 0 || !g0prime.is_connected() {
        return Err(FamilyError::BadComponent { index: 0 });
    }
    if v >= n0 {
        return Err(FamilyError::VertexOutOfRange { v, n: n0 });
    }
    if others.len() < 2 {
        return Err(FamilyError::TooFewComponents { got: others.len() });
    }
    if wiring.len() != others.len() {
        return Err(FamilyError::PatternLength {
            expected: others.len(),
            got: wiring.len(),
        });
    }
    for (i, c) in others.iter().enumerate() {
        if c.n() == 0 || !c.is_connected() {
            return Err(FamilyError::BadComponent { index: i + 1 });
        }
    }
    let v_label = 1 + v;
    let twin = n0 + 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (a, b) in g0prime.edges() {
        edges.push((1 + a, 1 + b));
    }
    edges.push((twin, v_label));
    for w in g0prime.neighbors(v) {
        edges.push((twin, 1 + w));
    }
    edges.push((0, v_label));
    edges.push((0, twin));
    let mut next = n0 + 2;
    for (ci, c) in others.iter().enumerate() {
        for (a, b) in c.edges() {
            edges.push((next + a, next + b));
        }
        if wiring[ci].is_empty() {
            return Err(FamilyError::MissingHubEdge {
                hub: 0,
                component: ci + 1,
            });
        }
        for &w in &wiring[ci] {
            if w >= c.n() {
                return Err(FamilyError::BadWiring { component: ci + 1 });
            }
            edges.push((0, next + w));
        }
        next += c.n();
    }
    Ok(Graph::from_edges(next, &edges))
}

/// Structural membership in the hub family: some vertex's deletion
/// leaves only K_2 components (odd n), or exactly one isolated vertex
/// plus K_2 components with the hub adjacent to the isolated one (even
/// n); the hub must reach every component.
pub fn is_member_f(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    'hub: for h in 0..n {
        let rest = match g.delete_vertex(h) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let back = |local: usize| if local < h { local } else { local + 1 };
        let comps = rest.component_vertex_sets();
        let mut seen_k1 = 0usize;
        let mut seen_k2 = 0usize;
        for comp in &comps {
            let reaches_hub = comp.iter().any(|&w| g.has_edge(h, back(w)));
            match comp.len() {
                1 => {
                    seen_k1 += 1;
                    if n % 2 == 1 || seen_k1 > 1 || !reaches_hub {
                        continue 'hub;
                    }
                }
                2 => {
                    if !rest.has_edge(comp[0], comp[1]) || !reaches_hub {
                        continue 'hub;
                    }
                    seen_k2 += 1;
                }
                _ => continue 'hub,
            }
        }
        if seen_k2 >= 1 && (n % 2 == 1) == (seen_k1 == 0) {
            return true;
        }
    }
    false
}

static N_THETA_CACHE: Lazy<Mutex<HashMap<String, Option<usize>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn cached_n_theta(theta: &AlgebraicRoot) -> Option<usize> {
    let key = theta.minpoly().to_string();
    if let Some(hit) = N_THETA_CACHE.lock().unwrap().get(&key) {
        return *hit;
    }
    let val = crate::enumerate::compute_n_theta(theta, 9)
        .ok()
        .map(|r| r.n_theta);
    N_THETA_CACHE.lock().unwrap().insert(key, val);
    val
}

/// Structural membership in the hub-over-components family with t hubs:
/// some t-set A of vertices whose deletion leaves components that are
/// all of order n_θ with m(θ, ·) = 1, every hub adjacent to every
/// component. n_θ is computed (and cached) from the enumeration search.
pub fn is_member_h(g: &Graph, theta: &AlgebraicRoot, t: usize) -> bool {
    match cached_n_theta(theta) {
        Some(n_theta) => is_member_h_with_ntheta(g, theta, n_theta, t),
        None => false,
    }
}

pub fn is_member_h_with_ntheta(
    g: &Graph,
    theta: &AlgebraicRoot,
    n_theta: usize,
    t: usize,
) -> bool {
    let n = g.n();
    if t == 0 || n <= t || (n - t) % n_theta != 0 {
        return false;
    }
    let engine = global_engine();
    let mut subset: Vec<usize> = (0..t).collect();
    loop {
        if hub_set_works(g, theta, n_theta, &subset, engine) {
            return true;
        }
        // Next t-combination of 0..n in lexicographic order.
        let mut i = t;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if subset[i] != i + n - t {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        subset[i] += 1;
        for j in i + 1..t {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn hub_set_works(
    g: &Graph,
    theta: &AlgebraicRoot,
    n_theta: usize,
    hubs: &[usize],
    engine: &crate::matching::MatchingEngine,
) -> bool {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !hubs.contains(v)).collect();
    let rest = g.induced(&keep);
    let comps = rest.component_vertex_sets();
    for comp in &comps {
        if comp.len() != n_theta {
            return false;
        }
        let sub = rest.induced(comp);
        if multiplicity_with_engine(engine, &sub, theta) != 1 {
            return false;
        }
        for &h in hubs {
            let reaches = comp.iter().any(|&w| g.has_edge(h, keep[w]));
            if !reaches {
                return false;
            }
        }
    }
    !comps.is_empty()
}

/// Catalogued minimum-order components for the standard roots: θ = 0, ±1,
/// ±√2, ±√3, and the quartic with roots ±1, ±2 (as the squarefree part
/// of μ(H_1)/x). Returns (n_θ, known members).
pub fn h_theta_prime_catalog(theta: &AlgebraicRoot) -> Option<(usize, Vec<Graph>)> {
    let p = theta.minpoly().to_string();
    match p.as_str() {
        "x" => Some((1, vec![Graph::empty(1)])),
        "x-1" | "x+1" => Some((2, vec![crate::graph::complete(2)])),
        "x^2-2" => Some((3, vec![path(3)])),
        "x^2-3" => Some((3, vec![crate::graph::complete(3)])),
        "x^4-5x^2+4" => Some((5, vec![make_h1(), make_h2()])),
        _ => None,
    }
}

/// The edge addition that preserves 1-criticality: for a 1-critical G
/// with a cut vertex u of degree three whose deletion leaves three
/// components at least one of which is trivial, join u's two neighbors
/// outside the (lowest-labeled) trivial component.
pub fn add_branch_edge(g: &Graph, u: usize) -> Result<Graph, FamilyError> {
    if u >= g.n() {
        return Err(FamilyError::VertexOutOfRange { v: u, n: g.n() });
    }
    let one = AlgebraicRoot::integer(1);
    match is_theta_critical_with_engine(global_engine(), g, &one) {
        Ok(true) => {}
        _ => return Err(FamilyError::NotCritical),
    }
    let degree = g.degree(u);
    if degree != 3 {
        return Err(FamilyError::DegreeNotThree { u, degree });
    }
    let rest = g.delete_vertex(u).expect("u in range");
    let back = |local: usize| if local < u { local } else { local + 1 };
    let comps = rest.component_vertex_sets();
    if comps.len() != 3 {
        return Err(FamilyError::NotCutIntoThree {
            u,
            components: comps.len(),
        });
    }
    let trivial = comps
        .iter()
        .position(|c| c.len() == 1)
        .ok_or(FamilyError::NoTrivialComponent)?;
    let mut endpoints = Vec::with_capacity(2);
    for (i, comp) in comps.iter().enumerate() {
        if i == trivial {
            continue;
        }
        let w = comp
            .iter()
            .map(|&l| back(l))
            .find(|&w| g.has_edge(u, w))
            .expect("connected graph: u reaches every component of its deletion");
        endpoints.push(w);
    }
    Ok(g
        .add_edge(endpoints[0], endpoints[1])
        .expect("endpoints lie in distinct components"))
}

/// A parsed family request: which named construction, at which order,
/// with which parameters. This is what the CLI turns its arguments into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    W(usize),
    Y(usize),
    YStar(usize),
    R(usize),
    RStar(usize),
    FTree(usize),
    FStar(usize),
    CStar(usize),
    CHat(usize),
    CPlus(usize),
    H1,
    H2,
    GStar,
    T(usize),
    FHub(usize, Vec<Attach>),
}

impl FamilySpec {
    /// Parses a family name plus optional order and pattern, as the CLI
    /// receives them.
    pub fn parse(name: &str, n: Option<usize>, pattern: Option<&str>) -> Result<Self, FamilyError> {
        let need_n = |family: &'static str| n.ok_or(FamilyError::MissingOrder { family });
        match name {
            "W" => Ok(FamilySpec::W(need_n("W_n")?)),
            "Y" => Ok(FamilySpec::Y(need_n("Y_n")?)),
            "Ystar" => Ok(FamilySpec::YStar(need_n("Y_n*")?)),
            "R" => Ok(FamilySpec::R(need_n("R_n")?)),
            "Rstar" => Ok(FamilySpec::RStar(need_n("R_n*")?)),
            "F" => Ok(FamilySpec::FTree(need_n("F_n (tree)")?)),
            "Fstar" => Ok(FamilySpec::FStar(need_n("F_n*")?)),
            "Cstar" => Ok(FamilySpec::CStar(need_n("C_n*")?)),
            "Chat" => Ok(FamilySpec::CHat(need_n("Ĉ_n")?)),
            "Cplus" => Ok(FamilySpec::CPlus(need_n("C_n^+")?)),
            "H1" => Ok(FamilySpec::H1),
            "H2" => Ok(FamilySpec::H2),
            "Gstar" => Ok(FamilySpec::GStar),
            "T" => Ok(FamilySpec::T(need_n("T_n")?)),
            "Fhub" => {
                let n = need_n("hub family F_n")?;
                let pat = match pattern {
                    Some(s) => s
                        .split(',')
                        .map(|tok| tok.trim().parse::<Attach>())
                        .collect::<Result<Vec<_>, _>>()?,
                    None => {
                        let t = if n % 2 == 1 { n.saturating_sub(1) / 2 } else { n.saturating_sub(2) / 2 };
                        vec![Attach::First; t]
                    }
                };
                Ok(FamilySpec::FHub(n, pat))
            }
            other => Err(FamilyError::UnknownName(other.to_string())),
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::W(n) => make_w(*n),
            FamilySpec::Y(n) => make_y(*n),
            FamilySpec::YStar(n) => make_ystar(*n),
            FamilySpec::R(n) => make_r(*n),
            FamilySpec::RStar(n) => make_rstar(*n),
            FamilySpec::FTree(n) => make_ftree(*n),
            FamilySpec::FStar(n) => make_fstar(*n),
            FamilySpec::CStar(n) => make_cstar(*n),
            FamilySpec::CHat(n) => make_chat(*n),
            FamilySpec::CPlus(n) => make_cplus(*n),
            FamilySpec::H1 => Ok(make_h1()),
            FamilySpec::H2 => Ok(make_h2()),
            FamilySpec::GStar => Ok(make_gstar()),
            FamilySpec::T(n) => make_t(*n),
            FamilySpec::FHub(n, pat) => make_f_family(*n, pat),
        }
    }

    /// JSON descriptor {name, n, params} for the CLI.
    pub fn descriptor(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            FamilySpec::W(n) => json!({"name": "W", "n": n, "params": {}}),
            FamilySpec::Y(n) => json!({"name": "Y", "n": n, "params": {}}),
            FamilySpec::YStar(n) => json!({"name": "Ystar", "n": n, "params": {}}),
            FamilySpec::R(n) => json!({"name": "R", "n": n, "params": {}}),
            FamilySpec::RStar(n) => json!({"name": "Rstar", "n": n, "params": {}}),
            FamilySpec::FTree(n) => json!({"name": "F", "n": n, "params": {}}),
            FamilySpec::FStar(n) => json!({"name": "Fstar", "n": n, "params": {}}),
            FamilySpec::CStar(n) => json!({"name": "Cstar", "n": n, "params": {}}),
            FamilySpec::CHat(n) => json!({"name": "Chat", "n": n, "params": {}}),
            FamilySpec::CPlus(n) => json!({"name": "Cplus", "n": n, "params": {}}),
            FamilySpec::H1 => json!({"name": "H1", "n": 5, "params": {}}),
            FamilySpec::H2 => json!({"name": "H2", "n": 5, "params": {}}),
            FamilySpec::GStar => json!({"name": "Gstar", "n": 12, "params": {}}),
            FamilySpec::T(n) => json!({"name": "T", "n": n, "params": {}}),
            FamilySpec::FHub(n, pat) => json!({
                "name": "Fhub",
                "n": n,
                "params": {"pattern": pat.iter().map(|a| a.token()).collect::<Vec<_>>()},
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};
    use crate::matching::matching_polynomial;

    fn mu(g: &Graph) -> String {
        matching_polynomial(g).to_string()
    }

    #[test]
    fn w6_shape_and_polynomial() {
        let g = make_w(6).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree_sequence(), vec![1, 1, 1, 1, 3, 3]);
        assert_eq!(mu(&g), "x^6-5x^4+4x^2");
        assert!(matches!(
            make_w(5),
            Err(FamilyError::OutOfDomain { min: 6, .. })
        ));
    }

    #[test]
    fn y_family_goldens() {
        assert_eq!(make_y(4).unwrap().degree_sequence(), vec![1, 1, 1, 3]);
        assert_eq!(mu(&make_y(5).unwrap()), "x^5-4x^3+2x");
        assert_eq!(mu(&make_y(6).unwrap()), "x^6-5x^4+5x^2");
        assert_eq!(mu(&make_y(7).unwrap()), "x^7-6x^5+9x^3-2x");
        assert!(make_y(4).unwrap().is_tree());
    }

    #[test]
    fn r_family_goldens() {
        let r7 = make_r(7).unwrap();
        assert!(r7.is_tree());
        assert_eq!(mu(&r7), "x^7-6x^5+8x^3-2x");
        assert_eq!(mu(&make_r(8).unwrap()), "x^8-7x^6+12x^4-4x^2");
    }

    #[test]
    fn star_variants_are_trees_of_right_order() {
        for n in [8, 9, 10, 11] {
            let g = make_rstar(n).unwrap();
            assert!(g.is_tree());
            assert_eq!(g.n(), n);
        }
        for n in [4, 5, 6, 7] {
            let g = make_ystar(n).unwrap();
            assert!(g.is_tree());
            assert_eq!(g.n(), n);
        }
        for n in [10, 11, 12, 13] {
            let g = make_ftree(n).unwrap();
            assert!(g.is_tree());
            assert_eq!(g.n(), n);
        }
    }

    #[test]
    fn fstar_11_golden() {
        let g = make_fstar(11).unwrap();
        assert!(g.is_tree());
        assert_eq!(mu(&g), "x^11-10x^9+27x^7-18x^5");
    }

    #[test]
    fn cycle_families_shapes() {
        let c6 = make_cstar(6).unwrap();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert_eq!(c6.degree_sequence(), vec![1, 1, 1, 2, 3, 4]);
        let chat10 = make_chat(10).unwrap();
        assert_eq!((chat10.n(), chat10.m()), (10, 10));
        assert_eq!(chat10.degree_sequence(), vec![1, 1, 1, 1, 1, 2, 3, 3, 3, 4]);
        let cp5 = make_cplus(5).unwrap();
        assert_eq!((cp5.n(), cp5.m()), (5, 5));
        // C_5^+ is the 4-cycle with a pendant: the same graph as H_2.
        assert_eq!(
            crate::canon::canonical_code(&cp5),
            crate::canon::canonical_code(&make_h2())
        );
    }

    #[test]
    fn h1_h2_share_mu() {
        assert_eq!(mu(&make_h1()), "x^5-5x^3+4x");
        assert_eq!(mu(&make_h2()), "x^5-5x^3+4x");
        assert_eq!(make_h1().degree_sequence(), vec![1, 2, 2, 2, 3]);
        assert_eq!(make_h2().degree_sequence(), vec![1, 2, 2, 2, 3]);
    }

    #[test]
    fn gstar_golden() {
        let g = make_gstar();
        assert_eq!((g.n(), g.m()), (12, 17));
        assert_eq!(mu(&g), "x^12-17x^10+97x^8-227x^6+198x^4-36x^2");
    }

    #[test]
    fn f_hub_family_construction() {
        let all_both = make_f_family(7, &[Attach::Both; 3]).unwrap();
        assert_eq!((all_both.n(), all_both.m()), (7, 9));
        let t7 = make_t(7).unwrap();
        assert!(t7.is_tree());
        assert_eq!(
            crate::canon::canonical_code(&t7),
            crate::canon::canonical_code(&make_f_family(7, &[Attach::First; 3]).unwrap())
        );
        // Deleting the hub of an odd member leaves a perfect matching.
        let rest = all_both.delete_vertex(0).unwrap();
        assert!(rest.component_vertex_sets().iter().all(|c| c.len() == 2));
        // Even member: mu = (x^2-1)^(t-1) (x^4-(s+1)x^2+1) with t = 3.
        let even = make_f_family(8, &[Attach::First, Attach::Both, Attach::First]).unwrap();
        let s = even.degree(0);
        assert_eq!(s, 1 + 4);
        let expect = "x^2-1"
            .parse::<crate::poly::IntPolynomial>()
            .unwrap()
            .pow(2)
            .mul(
                &crate::poly::IntPolynomial::from_i64(&[1, 0, -(s as i64 + 1), 0, 1]),
            );
        assert_eq!(matching_polynomial(&even), expect);
        assert!(matches!(
            make_f_family(7, &[Attach::First; 2]),
            Err(FamilyError::PatternLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn f_membership() {
        assert!(is_member_f(&make_t(9).unwrap()));
        assert!(is_member_f(&make_f_family(7, &[Attach::Both; 3]).unwrap()));
        assert!(is_member_f(&make_f_family(8, &[Attach::Second; 3]).unwrap()));
        assert!(!is_member_f(&cycle(9)));
        assert!(!is_member_f(&complete(4)));
        assert!(is_member_f(&path(5)));
        // Disconnected all-K_2-after-deletion impostor: K_2 with a P_5.
        let fake = complete(2).disjoint_union(&path(5));
        assert!(!is_member_f(&fake));
    }

    #[test]
    fn h_family_construction_and_membership() {
        let k2 = complete(2);
        let t7 = make_h_family(&[k2.clone(), k2.clone(), k2.clone()], 1, &minimal_wiring(1, 3), &[])
            .unwrap();
        assert_eq!(
            crate::canon::canonical_code(&t7),
            crate::canon::canonical_code(&make_t(7).unwrap())
        );
        let one = AlgebraicRoot::integer(1);
        assert!(is_member_h_with_ntheta(&t7, &one, 2, 1));
        let r3 = AlgebraicRoot::sqrt(3).unwrap();
        let k3 = complete(3);
        let h7 = make_h_family(&[k3.clone(), k3.clone()], 1, &minimal_wiring(1, 2), &[]).unwrap();
        assert_eq!(h7.n(), 7);
        assert!(is_member_h_with_ntheta(&h7, &r3, 3, 1));
        assert!(!is_member_h_with_ntheta(&cycle(7), &one, 2, 1));
        // Missing hub edge is rejected at construction.
        let mut bad = minimal_wiring(1, 2);
        bad[0][1] = vec![];
        assert!(matches!(
            make_h_family(&[k3.clone(), k3.clone()], 1, &bad, &[]),
            Err(FamilyError::MissingHubEdge { hub: 0, component: 1 })
        ));
    }

    #[test]
    fn q_family_zero_case() {
        // θ = 0: g0prime = K_1, twin makes K_2, two further K_1 parts.
        let k1 = Graph::empty(1);
        let g = make_q(&k1, 0, &[k1.clone(), k1.clone()], &[vec![0], vec![0]]).unwrap();
        assert_eq!(g.n(), 5);
        // K_1 joined to everything of K_2 ∪ 2K_1: hub degree 4.
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.m(), 5);
        assert!(matches!(
            make_q(&k1, 0, &[k1.clone()], &[vec![0]]),
            Err(FamilyError::TooFewComponents { got: 1 })
        ));
    }

    #[test]
    fn q_family_sqrt3_case() {
        let k3 = complete(3);
        let g = make_q(&k3, 0, &[k3.clone(), k3.clone()], &[vec![0], vec![0]]).unwrap();
        assert_eq!(g.n(), 11);
        // g0prime + twin = K_4.
        let core = g.induced(&[1, 2, 3, 4]);
        assert_eq!(core.m(), 6);
    }

    #[test]
    fn branch_edge_addition() {
        let w6 = make_w(6).unwrap();
        // Vertex 1 is a degree-3 cut vertex isolating pendant 4 and end 0.
        let plus = add_branch_edge(&w6, 1).unwrap();
        assert_eq!(plus.m(), w6.m() + 1);
        // Clause errors, by clause.
        assert!(matches!(
            add_branch_edge(&path(4), 1),
            Err(FamilyError::NotCritical)
        ));
        let w9 = make_w(9).unwrap();
        assert!(matches!(
            add_branch_edge(&w9, 0),
            Err(FamilyError::DegreeNotThree { u: 0, degree: 1 })
        ));
        let plus9 = add_branch_edge(&w9, 1).unwrap();
        assert_eq!(plus9.n(), 9);
        assert_eq!(plus9.m(), w9.m() + 1);
    }

    #[test]
    fn family_spec_roundtrip() {
        let spec = FamilySpec::parse("W", Some(6), None).unwrap();
        assert_eq!(spec.build().unwrap().n(), 6);
        let spec = FamilySpec::parse("Fhub", Some(7), Some("1,12,2")).unwrap();
        assert_eq!(
            spec,
            FamilySpec::FHub(7, vec![Attach::First, Attach::Both, Attach::Second])
        );
        assert!(spec.descriptor().to_string().contains("\"pattern\""));
        assert!(matches!(
            FamilySpec::parse("Z", Some(5), None),
            Err(FamilyError::UnknownName(_))
        ));
        assert!(matches!(
            FamilySpec::parse("W", None, None),
            Err(FamilyError::MissingOrder { .. })
        ));
    }
}
