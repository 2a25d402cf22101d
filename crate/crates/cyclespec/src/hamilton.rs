//! Hamiltonian cycle and path search: exact subset DP inside the
//! exact-mode range, budgeted backtracking above it, and the
//! constructive rotation–extension procedure for connected graphs with
//! independence number at most 2.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::recognition;
use crate::spectrum::{self, DEFAULT_EXACT_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamiltonError {
    #[error("hamiltonian cycles need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("cycle length {len} outside 3..={n}")]
    LengthOutOfRange { len: usize, n: usize },
    #[error("order {n} above the exact-mode limit {limit}")]
    AboveExactLimit { n: usize, limit: usize },
    #[error("sequence is not a valid cycle of {0:?}")]
    InvalidCycle(Vec<usize>),
    #[error("sequence is not a valid path of {0:?}")]
    InvalidPath(Vec<usize>),
}

/// Why the α ≤ 2 path construction refused its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Alpha2Error {
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected; vertices {unreachable} are unreachable from 0")]
    Disconnected { unreachable: VertexSet },
    #[error("independent triple {0:?} violates the independence-2 precondition")]
    IndependentTriple([usize; 3]),
}

/// A hamiltonian cycle as a cyclic vertex ordering.
///
/// The stored rotation places the root first; cycles produced by the
/// harness are rooted at the smallest-label maximum-degree vertex and
/// oriented so the second vertex is the smaller of the root's two cycle
/// neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamCycle {
    order: Vec<usize>,
    positions: Vec<usize>,
}

impl HamCycle {
    /// Validates that `order` is a permutation of 0..n traversing edges
    /// of `g`, and keeps the rotation exactly as given.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self, HamiltonError> {
        let n = g.n();
        if n < 3 {
            return Err(HamiltonError::TooSmall(n));
        }
        if order.len() != n {
            return Err(HamiltonError::InvalidCycle(order));
        }
        let mut positions = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || positions[v] != usize::MAX {
                return Err(HamiltonError::InvalidCycle(order));
            }
            positions[v] = i;
        }
        for i in 0..n {
            if !g.has_edge(order[i], order[(i + 1) % n]) {
                return Err(HamiltonError::InvalidCycle(order));
            }
        }
        Ok(HamCycle { order, positions })
    }

    /// Rotates to start at the smallest-label maximum-degree vertex and
    /// orients toward its smaller cycle neighbor, then validates.
    pub fn rooted_at_max_degree(g: &Graph, mut order: Vec<usize>) -> Result<Self, HamiltonError> {
        let n = order.len();
        if n != g.n() || n < 3 {
            return Err(HamiltonError::InvalidCycle(order));
        }
        let delta = g.max_degree().map_err(|_| HamiltonError::TooSmall(0))?;
        let root = (0..n)
            .filter(|&v| g.degree(v) == delta)
            .min()
            .expect("nonempty graph has a max-degree vertex");
        let pos = order
            .iter()
            .position(|&v| v == root)
            .ok_or_else(|| HamiltonError::InvalidCycle(order.clone()))?;
        order.rotate_left(pos);
        if order[1] > order[n - 1] {
            order[1..].reverse();
        }
        HamCycle::new(g, order)
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// The designated first vertex.
    pub fn root(&self) -> usize {
        self.order[0]
    }

    pub fn position_of(&self, v: usize) -> usize {
        self.positions[v]
    }
}

/// A simple path as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, HamiltonError> {
        let mut seen = VertexSet::EMPTY;
        for &v in &vertices {
            if v >= g.n() || seen.contains(v) {
                return Err(HamiltonError::InvalidPath(vertices));
            }
            seen.insert(v);
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(HamiltonError::InvalidPath(vertices));
            }
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_spanning(&self, g: &Graph) -> bool {
        self.vertices.len() == g.n()
    }
}

/// Outcome of a hamiltonicity search. `Unknown` can only occur above
/// the exact-mode range, when the backtracking node budget runs out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamSearch {
    Found(HamCycle),
    NotFound,
    Unknown,
}

impl HamSearch {
    pub fn found(&self) -> Option<&HamCycle> {
        match self {
            HamSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Search knobs: orders up to `exact_limit` get the exact subset DP,
/// larger ones a backtracker that gives up after `node_budget` expanded
/// nodes.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub exact_limit: usize,
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            exact_limit: DEFAULT_EXACT_LIMIT,
            node_budget: 2_000_000,
        }
    }
}

/// Finds a hamiltonian cycle, rooted at the smallest-label
/// maximum-degree vertex. Exact (Found/NotFound) for n within the
/// exact-mode limit; budgeted backtracking with a three-valued answer
/// beyond it.
pub fn find_hamiltonian_cycle(g: &Graph) -> Result<HamSearch, HamiltonError> {
    find_hamiltonian_cycle_with(g, &SearchConfig::default())
}

pub fn find_hamiltonian_cycle_with(
    g: &Graph,
    cfg: &SearchConfig,
) -> Result<HamSearch, HamiltonError> {
    let n = g.n();
    if n < 3 {
        return Err(HamiltonError::TooSmall(n));
    }
    if n <= cfg.exact_limit {
        return Ok(match spectrum::witness_of_length(g, n) {
            Some(order) => HamSearch::Found(HamCycle::rooted_at_max_degree(g, order)?),
            None => HamSearch::NotFound,
        });
    }
    Ok(match backtrack_hamiltonian(g, cfg.node_budget) {
        BacktrackResult::Found(order) => {
            HamSearch::Found(HamCycle::rooted_at_max_degree(g, order)?)
        }
        BacktrackResult::Exhausted => HamSearch::NotFound,
        BacktrackResult::BudgetOut => HamSearch::Unknown,
    })
}

enum BacktrackResult {
    Found(Vec<usize>),
    Exhausted,
    BudgetOut,
}

/// Depth-first search for a hamiltonian cycle anchored at vertex 0,
/// with degree and connectivity pruning and a node budget.
fn backtrack_hamiltonian(g: &Graph, budget: u64) -> BacktrackResult {
    let n = g.n();
    if !g.is_connected() || (0..n).any(|v| g.degree(v) < 2) {
        return BacktrackResult::Exhausted;
    }
    let mut path = vec![0usize];
    let mut visited = VertexSet::singleton(0);
    let mut nodes = 0u64;
    match extend_cycle(g, &mut path, &mut visited, &mut nodes, budget) {
        Some(true) => BacktrackResult::Found(path),
        Some(false) => BacktrackResult::Exhausted,
        None => BacktrackResult::BudgetOut,
    }
}

fn extend_cycle(
    g: &Graph,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let n = g.n();
    let current = *path.last().unwrap();
    if path.len() == n {
        return Some(g.has_edge(current, 0));
    }

    let unvisited = VertexSet::full(n).difference(*visited);
    // Every unvisited vertex still needs two usable cycle neighbors
    // among the unvisited vertices, the current endpoint, and the
    // anchor.
    let usable = unvisited
        .union(VertexSet::singleton(current))
        .union(VertexSet::singleton(0));
    for w in unvisited.iter() {
        if g.neighbors(w).intersection(usable).len() < 2 {
            return Some(false);
        }
    }
    // The unvisited region must hang together with the endpoint.
    let region = unvisited.union(VertexSet::singleton(current));
    if reachable_within(g, current, region) != region {
        return Some(false);
    }

    for w in g.neighbors(current).intersection(unvisited).iter() {
        path.push(w);
        visited.insert(w);
        match extend_cycle(g, path, visited, nodes, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        path.pop();
        visited.remove(w);
    }
    Some(false)
}

fn reachable_within(g: &Graph, start: usize, within: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next = next.union(g.neighbors(v).intersection(within));
        }
        frontier = next.difference(seen);
        seen = seen.union(next);
    }
    seen
}

/// Builds a hamiltonian path in a connected graph with no independent
/// triple, by rotation–extension: grow a maximal path; when it is not
/// yet spanning, pick an off-path vertex u with a neighbor v_i on the
/// path, use the forced endpoint edge to re-route as
/// u, v_i, …, v_ℓ, v_1, …, v_{i−1}, and extend again.
///
/// Each re-route strictly lengthens the path, so at most n rotations
/// happen overall.
pub fn hamiltonian_path_alpha2(g: &Graph) -> Result<Path, Alpha2Error> {
    let n = g.n();
    if n == 0 {
        return Err(Alpha2Error::Empty);
    }
    let reachable = g.reachable_from(0);
    if reachable.len() != n {
        return Err(Alpha2Error::Disconnected {
            unreachable: VertexSet::full(n).difference(reachable),
        });
    }
    if let Some(triple) = recognition::find_independent_triple(g) {
        return Err(Alpha2Error::IndependentTriple(triple));
    }

    let mut path = vec![0usize];
    let mut on_path = VertexSet::singleton(0);
    extend_maximal(g, &mut path, &mut on_path);

    while path.len() < n {
        let off = VertexSet::full(n).difference(on_path);
        let (u, i) = off
            .iter()
            .find_map(|u| {
                g.neighbors(u)
                    .intersection(on_path)
                    .smallest()
                    .map(|v| (u, path.iter().position(|&p| p == v).unwrap()))
            })
            .expect("connected graph has an off-path vertex with an on-path neighbor");
        // Maximality keeps u away from both endpoints, so the endpoints
        // must be adjacent or they would form an independent triple
        // with u.
        debug_assert!(i != 0 && i != path.len() - 1);
        let first = path[0];
        let last = *path.last().unwrap();
        assert!(
            g.has_edge(first, last),
            "independence-2 forces the endpoint edge"
        );
        let mut rerouted = Vec::with_capacity(path.len() + 1);
        rerouted.push(u);
        rerouted.extend_from_slice(&path[i..]);
        rerouted.extend_from_slice(&path[..i]);
        path = rerouted;
        on_path.insert(u);
        extend_maximal(g, &mut path, &mut on_path);
    }
    Ok(Path::new(g, path).expect("construction yields a valid path"))
}

/// Greedily extends both ends with the smallest absent neighbor until
/// the path is maximal.
fn extend_maximal(g: &Graph, path: &mut Vec<usize>, on_path: &mut VertexSet) {
    loop {
        let last = *path.last().unwrap();
        if let Some(w) = g.neighbors(last).difference(*on_path).smallest() {
            path.push(w);
            on_path.insert(w);
            continue;
        }
        let first = path[0];
        if let Some(w) = g.neighbors(first).difference(*on_path).smallest() {
            path.insert(0, w);
            on_path.insert(w);
            continue;
        }
        break;
    }
}

/// Finds a cycle on exactly `len` vertices, or `None` when no such
/// cycle exists. Exact within the exact-mode limit, via the spectrum
/// DP's witness reconstruction.
pub fn find_cycle_of_length(g: &Graph, len: usize) -> Result<Option<Vec<usize>>, HamiltonError> {
    find_cycle_of_length_with(g, len, DEFAULT_EXACT_LIMIT)
}

pub fn find_cycle_of_length_with(
    g: &Graph,
    len: usize,
    exact_limit: usize,
) -> Result<Option<Vec<usize>>, HamiltonError> {
    let n = g.n();
    if len < 3 || len > n {
        return Err(HamiltonError::LengthOutOfRange { len, n });
    }
    if n > exact_limit {
        return Err(HamiltonError::AboveExactLimit {
            n,
            limit: exact_limit,
        });
    }
    Ok(spectrum::witness_of_length(g, len))
}
