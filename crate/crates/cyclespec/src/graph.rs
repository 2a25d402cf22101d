//! Finite simple undirected graphs on dense integer labels `0..n`,
//! stored as per-vertex adjacency bit rows.
//!
//! Graphs are immutable once constructed and cheap to share between
//! workers. Everything downstream (spectrum DP, claw scans, cycle
//! certification) is index arithmetic over these rows, so the vertex
//! count is capped at [`MAX_VERTICES`]. The exact-spectrum machinery is
//! intended for n ≤ 20; larger graphs only run the sampling and
//! certification paths.

use std::fmt;

use thiserror::Error;

/// Hard upper bound on the number of vertices, fixed by the `u128`
/// adjacency rows.
pub const MAX_VERTICES: usize = 128;

/// Construction errors; each names the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge ({0},{1}) has an endpoint out of range for order {2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge ({0},{0}) is a self-loop")]
    SelfLoop(usize),
    #[error("operation requires at least one vertex")]
    EmptyGraph,
}

/// A set of vertices from `0..n`, backed by a single 128-bit mask.
///
/// Membership tests and set algebra are O(1); iteration yields members
/// in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u128 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

/// Iterates members in increasing order.
pub struct VertexSetIter(u128);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simple undirected graph.
///
/// The adjacency relation is symmetric and irreflexive by construction;
/// the edge count `m` is maintained alongside.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0u128; n],
            m: 0,
        })
    }

    /// Builds a graph from an unordered edge list; duplicate edges
    /// collapse silently, self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    /// Adds an edge during construction. Callers guarantee `u != v` and
    /// range validity; duplicates are ignored.
    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.adj[u] >> v & 1 == 0 {
            self.adj[u] |= 1u128 << v;
            self.adj[v] |= 1u128 << u;
            self.m += 1;
        }
    }

    pub(crate) fn remove_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.adj[u] >> v & 1 == 1 {
            self.adj[u] &= !(1u128 << v);
            self.adj[v] &= !(1u128 << u);
            self.m -= 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u128 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Maximum degree Δ. Rejects the empty graph, where Δ is undefined.
    pub fn max_degree(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok((0..self.n).map(|v| self.degree(v)).max().unwrap())
    }

    /// Smallest-label vertex of maximum degree.
    pub fn max_degree_vertex(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut best = 0;
        for v in 1..self.n {
            if self.degree(v) > self.degree(best) {
                best = v;
            }
        }
        Ok(best)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges as ordered pairs (u, v) with u < v, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let above = if u + 1 == MAX_VERTICES {
                0
            } else {
                self.adj[u] >> (u + 1) << (u + 1)
            };
            for v in VertexSet(above).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Whether every vertex is reachable from vertex 0 (vacuously true
    /// for n ≤ 1).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reachable_from(0).len() == self.n
    }

    /// Set of vertices reachable from `start`.
    pub fn reachable_from(&self, start: usize) -> VertexSet {
        let mut seen = 1u128 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u128;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    /// Induced subgraph on `keep`, together with the map from new labels
    /// to old ones (ascending).
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph::empty(labels.len()).expect("subset of a valid graph");
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_mut(i, j);
                }
            }
        }
        (g, labels)
    }

    /// Sum of degrees; equals 2m for every simple graph.
    pub fn degree_sum(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}
