//! Instance generators: the tight extremal family of claw-free
//! hamiltonian graphs, a seeded random claw-free hamiltonian sampler,
//! line graphs, and exhaustive labeled enumeration of small graphs.

use serde::Serialize;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
use crate::hamilton::HamCycle;
use crate::recognition::{self, claw_centered_at};
use crate::spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("extremal parameters out of range: need n-2 >= delta >= 2, got n={n}, delta={delta}")]
    BadExtremalParams { n: usize, delta: usize },
    #[error("sampler needs n >= 3, got {0}")]
    SamplerTooSmall(usize),
    #[error("line graph of an edgeless graph is undefined")]
    Edgeless,
    #[error("line graph would have {edges} vertices, above the maximum {MAX_VERTICES}")]
    LineGraphTooLarge { edges: usize },
    #[error("exhaustive enumeration supports n <= {limit}, got {n}")]
    TooLargeForExhaustive { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parameters of the extremal family; the order must leave room for a
/// nonempty connecting path, so n − 2 ≥ Δ ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    n: usize,
    delta: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, delta: usize) -> Result<Self, ConstructionError> {
        if delta < 2 || n < delta + 2 || n > MAX_VERTICES {
            return Err(ConstructionError::BadExtremalParams { n, delta });
        }
        Ok(ExtremalParams { n, delta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }
}

/// The generated extremal graph together with its structure: the hub
/// v₀ = 0, two cliques covering N(v₀), the connecting path, and the
/// canonical hamiltonian cycle.
#[derive(Debug, Clone)]
pub struct ExtremalGraph {
    graph: Graph,
    ham: HamCycle,
    clique1: VertexSet,
    clique2: VertexSet,
    path: Vec<usize>,
}

impl ExtremalGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn ham_cycle(&self) -> &HamCycle {
        &self.ham
    }

    /// The clique of order ⌈Δ/2⌉ (labels 1..=⌈Δ/2⌉).
    pub fn clique1(&self) -> VertexSet {
        self.clique1
    }

    /// The clique of order ⌊Δ/2⌋.
    pub fn clique2(&self) -> VertexSet {
        self.clique2
    }

    /// The connecting path, in path order (n − Δ − 1 vertices).
    pub fn path_vertices(&self) -> &[usize] {
        &self.path
    }
}

/// Builds the tight example: a hub v₀ joined to two disjoint cliques of
/// orders ⌈Δ/2⌉ and ⌊Δ/2⌋, whose smallest members are hooked to the two
/// ends of a path through the remaining n − Δ − 1 vertices.
///
/// The output is machine-checked on return: claw-free, hamiltonian
/// (with the canonical cycle attached), order n, maximum degree Δ.
pub fn extremal_graph(p: ExtremalParams) -> ExtremalGraph {
    let (n, delta) = (p.n, p.delta);
    let c1_size = delta.div_ceil(2);
    let c1: Vec<usize> = (1..=c1_size).collect();
    let c2: Vec<usize> = (c1_size + 1..=delta).collect();
    let path: Vec<usize> = (delta + 1..n).collect();

    let mut g = Graph::empty(n).expect("n <= MAX_VERTICES by params");
    for &v in c1.iter().chain(&c2) {
        g.add_edge_mut(0, v);
    }
    for (i, &u) in c1.iter().enumerate() {
        for &v in &c1[i + 1..] {
            g.add_edge_mut(u, v);
        }
    }
    for (i, &u) in c2.iter().enumerate() {
        for &v in &c2[i + 1..] {
            g.add_edge_mut(u, v);
        }
    }
    for w in path.windows(2) {
        g.add_edge_mut(w[0], w[1]);
    }
    // Designated attachment vertices: the smallest label per clique.
    g.add_edge_mut(c1[0], path[0]);
    g.add_edge_mut(c2[0], *path.last().unwrap());

    // Canonical hamiltonian cycle: hub, clique 1 ending at its
    // attachment vertex, the path, then clique 2 from its attachment.
    let mut order = vec![0usize];
    order.extend(c1.iter().rev());
    order.extend(&path);
    order.extend(&c2);
    let ham = HamCycle::rooted_at_max_degree(&g, order).expect("constructed cycle is valid");

    assert_eq!(g.n(), n);
    assert_eq!(g.max_degree().unwrap(), delta, "hub degree must be the maximum");
    assert_eq!(recognition::find_claw(&g), None, "extremal family is claw-free");
    assert_eq!(ham.root(), 0);

    ExtremalGraph {
        graph: g,
        ham,
        clique1: c1.into_iter().collect(),
        clique2: c2.into_iter().collect(),
        path,
    }
}

/// Per-instance seed derivation (splitmix64 of seed and index), so
/// suites parallelize without coupling results to worker scheduling.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sampler statistics, emitted by the CLI as a JSON sidecar.
#[derive(Debug, Clone, Serialize)]
pub struct SamplerStats {
    pub seed: u64,
    pub target_edges: usize,
    pub final_edges: usize,
    pub accepted_chords: usize,
    pub rejected_claw: usize,
    pub rejected_duplicate: usize,
    pub stalled: bool,
    pub achieved_delta: usize,
}

/// A sampled claw-free hamiltonian graph with its known cycle and the
/// sampling trace.
#[derive(Debug, Clone)]
pub struct SampledGraph {
    pub graph: Graph,
    pub ham: HamCycle,
    pub stats: SamplerStats,
}

/// Grows a random claw-free hamiltonian graph from Cₙ: proposes uniform
/// random chords and keeps one exactly when the graph stays claw-free.
/// A fresh claw must use the new edge as one of its star edges, so
/// rechecking the claws centered at the two endpoints is sound.
///
/// The output always contains the starting cycle (hence is hamiltonian
/// with a known cycle), is reproducible from the seed, and may stop
/// short of `edge_budget` after a stall; the stats say which. The
/// sampler is biased — it makes no uniformity claim over claw-free
/// hamiltonian graphs.
pub fn random_claw_free_hamiltonian(
    n: usize,
    edge_budget: usize,
    seed: u64,
) -> Result<SampledGraph, ConstructionError> {
    if n < 3 || n > MAX_VERTICES {
        return Err(ConstructionError::SamplerTooSmall(n));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        g.add_edge_mut(i, (i + 1) % n);
    }
    let target = edge_budget.clamp(n, n * (n - 1) / 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stall_limit = 20 * n + 100;
    let mut stall = 0usize;
    let mut accepted = 0usize;
    let mut rejected_claw = 0usize;
    let mut rejected_duplicate = 0usize;

    while g.m() < target && stall < stall_limit {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || g.has_edge(u, v) {
            rejected_duplicate += 1;
            stall += 1;
            continue;
        }
        g.add_edge_mut(u, v);
        if claw_centered_at(&g, u).is_some() || claw_centered_at(&g, v).is_some() {
            g.remove_edge_mut(u, v);
            rejected_claw += 1;
            stall += 1;
        } else {
            accepted += 1;
            stall = 0;
        }
    }

    let ham = HamCycle::rooted_at_max_degree(&g, (0..n).collect())
        .expect("the starting cycle stays intact");
    let stats = SamplerStats {
        seed,
        target_edges: target,
        final_edges: g.m(),
        accepted_chords: accepted,
        rejected_claw,
        rejected_duplicate,
        stalled: g.m() < target,
        achieved_delta: g.max_degree().expect("n >= 3"),
    };
    Ok(SampledGraph { graph: g, ham, stats })
}

/// The line graph L(h): one vertex per edge of `h` (in lexicographic
/// edge order), adjacent when the edges share an endpoint.
pub fn line_graph(h: &Graph) -> Result<Graph, ConstructionError> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(ConstructionError::Edgeless);
    }
    if edges.len() > MAX_VERTICES {
        return Err(ConstructionError::LineGraphTooLarge { edges: edges.len() });
    }
    let mut l = Graph::empty(edges.len())?;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                l.add_edge_mut(i, j);
            }
        }
    }
    Ok(l)
}

/// Cheap filters applied during enumeration, cheapest first.
#[derive(Debug, Clone, Copy, Default)]
pub struct EnumFilters {
    pub connected: bool,
    pub claw_free: bool,
    pub hamiltonian: bool,
}

/// Largest order accepted by [`enumerate_small_graphs`]; n = 7 already
/// means 2,097,152 labeled graphs.
pub const ENUMERATION_LIMIT: usize = 7;

/// Number of vertex pairs, i.e. bits in an edge mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Builds the labeled graph selected by an edge bitmask, pairs ordered
/// lexicographically: (0,1), (0,2), …, (n−2,n−1).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("enumeration orders are tiny");
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge_mut(i, j);
            }
            bit += 1;
        }
    }
    g
}

/// Streams every labeled graph on n vertices that passes the filters,
/// by counting through edge bitmasks. No isomorphism rejection:
/// universal claims quantify over labeled graphs anyway.
pub fn enumerate_small_graphs(
    n: usize,
    filters: EnumFilters,
) -> Result<impl Iterator<Item = Graph>, ConstructionError> {
    if n > ENUMERATION_LIMIT {
        return Err(ConstructionError::TooLargeForExhaustive {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let masks = 0..1u64 << pair_count(n);
    Ok(masks.filter_map(move |mask| {
        let g = graph_from_mask(n, mask);
        if filters.connected && !g.is_connected() {
            return None;
        }
        if filters.claw_free && recognition::find_claw(&g).is_some() {
            return None;
        }
        if filters.hamiltonian && (n < 3 || !spectrum::has_hamiltonian_cycle(&g)) {
            return None;
        }
        Some(g)
    }))
}
