//! Constructive certification of spectrum lower bounds.
//!
//! Everything here produces explicit cycles that are re-verified edge
//! by edge: pigeonhole cycles through a high-degree off-cycle vertex,
//! long arc-closing cycles over a hamiltonian cycle's chords, the
//! two-cliques path decomposition with its claw-freeness-forced
//! shortcuts, insertion cycles threading clique segments between path
//! prefixes, and a composed certifier whose output is sound by
//! construction and honest about whether it reached its target.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::hamilton::{self, HamCycle, SearchConfig};
use crate::recognition::{self, AbxPartition, Claw, NeighborhoodSplit, SplitKind};
use crate::spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("input is not claw-free: center {c}, leaves {l:?}", c = .0.center, l = .0.leaves)]
    NotClawFree(Claw),
    #[error("input has no hamiltonian cycle")]
    NotHamiltonian,
    #[error("hamiltonicity search exhausted its budget; supply a cycle explicitly")]
    HamiltonicityUnknown,
    #[error("certification needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("cycle is rooted at {got}, expected the split center {expected}")]
    RootMismatch { expected: usize, got: usize },
    #[error("lemma 1 needs deg(u) > (n-1)/2: deg({u}) = {degree}, n = {n}")]
    Lemma1DegreeTooSmall { u: usize, degree: usize, n: usize },
    #[error("lemma 1 needs a cycle through all vertices but {u}")]
    Lemma1BadCycle { u: usize },
    #[error("shortcut forced edge missing; input has claw at {c}: leaves {l:?}", c = .0.center, l = .0.leaves)]
    ShortcutClaw(Claw),
    #[error("path endpoint {0} lies outside the A/B/X partition")]
    EndpointOutsidePartition(usize),
    #[error("neighbors {remainder} of the root are outside A, B, and X")]
    RemainderNotEmpty { remainder: VertexSet },
    #[error("operation requires a two-cliques neighborhood split")]
    NotTwoCliques,
    #[error(transparent)]
    Hamilton(#[from] hamilton::HamiltonError),
}

/// True exactly when the sequence lists at least 3 distinct vertices
/// whose consecutive pairs (cyclically) are edges of `g`. The soundness
/// gate for every certificate entry.
pub fn verify_cycle(g: &Graph, cyc: &[usize]) -> bool {
    if cyc.len() < 3 {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &v in cyc {
        if v >= g.n() || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..cyc.len()).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]))
}

/// Pigeonhole cycles: given an (n−1)-cycle `c` and the off-cycle vertex
/// `u` with more than (n−1)/2 neighbors, produces a verified cycle of
/// every length 3..=n — a constructive pancyclicity witness.
///
/// For length ℓ the construction closes an arc of ℓ−1 cycle vertices
/// through u, so it needs an index i with c[i] and c[i+ℓ−2] both
/// adjacent to u (indices mod n−1); the degree hypothesis makes such an
/// index exist for every ℓ.
pub fn lemma1_cycles(
    g: &Graph,
    c: &[usize],
    u: usize,
) -> Result<Vec<(usize, Vec<usize>)>, CertifyError> {
    let n = g.n();
    if c.len() + 1 != n || c.contains(&u) || !verify_cycle(g, c) {
        return Err(CertifyError::Lemma1BadCycle { u });
    }
    let degree = g.degree(u);
    if 2 * degree <= n - 1 {
        return Err(CertifyError::Lemma1DegreeTooSmall { u, degree, n });
    }
    let m = n - 1;
    let mut out = Vec::with_capacity(n - 2);
    for len in 3..=n {
        let d = len - 2;
        let i = (0..m)
            .find(|&i| g.has_edge(c[i], u) && g.has_edge(c[(i + d) % m], u))
            .expect("pigeonhole: deg(u) > (n-1)/2 guarantees an arc of every span");
        let mut cyc: Vec<usize> = (0..=d).map(|t| c[(i + t) % m]).collect();
        cyc.push(u);
        debug_assert!(verify_cycle(g, &cyc));
        out.push((len, cyc));
    }
    Ok(out)
}

/// Long arc cycles: for every chord neighbor v_i of the root, the
/// longer of the two cycles closing an arc of the hamiltonian cycle
/// through the chord, plus the hamiltonian cycle itself. Yields at
/// least ⌈deg(root)/2⌉ distinct lengths, all at least ⌈(n+2)/2⌉, since
/// every arc length arises from at most two chords.
pub fn lemma2_long_cycles(g: &Graph, ham: &HamCycle) -> Vec<(usize, Vec<usize>)> {
    let order = ham.order();
    let n = order.len();
    let v0 = order[0];
    let mut by_len: BTreeMap<usize, (usize, Vec<usize>)> = BTreeMap::new();
    for (seq, i) in (2..=n - 2).enumerate() {
        if !g.has_edge(v0, order[i]) {
            continue;
        }
        let (len, cyc) = if n - i + 1 >= i + 1 {
            let mut c = vec![v0];
            c.extend_from_slice(&order[i..]);
            (n - i + 1, c)
        } else {
            let mut c = vec![v0];
            c.extend(order[1..=i].iter().rev());
            (i + 1, c)
        };
        debug_assert!(2 * len >= n + 2);
        debug_assert!(verify_cycle(g, &cyc));
        by_len.entry(len).or_insert((seq, cyc));
    }
    let mut out: Vec<(usize, Vec<usize>)> = by_len
        .into_iter()
        .map(|(len, (_, cyc))| (len, cyc))
        .collect();
    out.push((n, order.to_vec()));
    assert!(
        out.len() >= g.degree(v0).div_ceil(2),
        "arc-closing must reach the ceil(deg/2) floor"
    );
    out
}

/// Which decomposition produced a path collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionCase {
    /// Two-cliques neighborhood; shortcuts applied, all paths of order
    /// at least 3 with distinct endpoints.
    CaseOne,
    /// A/B/X split of an oriented cycle; no shortcuts, crossing paths
    /// may have order 2.
    CaseTwo,
}

/// One path of a decomposition, with its classification tags. The
/// vertex order records the orientation it inherited from the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedPath {
    vertices: Vec<usize>,
    crossing: bool,
    reversed: Option<bool>,
}

impl TaggedPath {
    pub(crate) fn new(vertices: Vec<usize>, crossing: bool, reversed: Option<bool>) -> Self {
        TaggedPath {
            vertices,
            crossing,
            reversed,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of internal vertices (p_i).
    pub fn internal_count(&self) -> usize {
        self.vertices.len().saturating_sub(2)
    }

    pub fn is_crossing(&self) -> bool {
        self.crossing
    }

    /// Case-2 only: whether the oriented path begins in B∪X and ends in
    /// A∪X.
    pub fn is_reversed(&self) -> Option<bool> {
        self.reversed
    }
}

/// Vertex-disjoint paths with endpoints in a designated set and
/// internal vertices outside the closed neighborhood of the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCollection {
    paths: Vec<TaggedPath>,
    endpoint_set: VertexSet,
    removed: VertexSet,
    case: DecompositionCase,
}

impl PathCollection {
    pub(crate) fn from_parts(
        paths: Vec<TaggedPath>,
        endpoint_set: VertexSet,
        removed: VertexSet,
        case: DecompositionCase,
    ) -> Self {
        PathCollection {
            paths,
            endpoint_set,
            removed,
            case,
        }
    }

    pub fn paths(&self) -> &[TaggedPath] {
        &self.paths
    }

    /// k, the number of paths.
    pub fn k(&self) -> usize {
        self.paths.len()
    }

    /// The designated endpoint set (A∪B, or A∪B∪X in case 2).
    pub fn endpoint_set(&self) -> VertexSet {
        self.endpoint_set
    }

    /// Vertices dropped by shortcutting (case 1 only).
    pub fn removed(&self) -> VertexSet {
        self.removed
    }

    pub fn case(&self) -> DecompositionCase {
        self.case
    }

    /// Σ p_i over the collection.
    pub fn total_internal(&self) -> usize {
        self.paths.iter().map(TaggedPath::internal_count).sum()
    }

    pub fn crossing_count(&self) -> usize {
        self.paths.iter().filter(|p| p.crossing).count()
    }
}

/// Case-1 decomposition: delete the root from its hamiltonian cycle,
/// drop cycle edges lying inside either clique, split at neighborhood
/// vertices, then iterate the claw-forced shortcut — whenever a vertex
/// ends two paths, its two path neighbors must be adjacent, so the
/// paths merge and the vertex drops out. Single-vertex pieces are
/// discarded.
///
/// The result has paths of order ≥ 3 with pairwise distinct endpoints
/// in A∪B and internal vertices exactly the non-neighborhood vertices:
/// Σ p_i = n − Δ − 1, asserted on return.
pub fn path_decomposition(
    g: &Graph,
    ham: &HamCycle,
    split: &NeighborhoodSplit,
) -> Result<PathCollection, CertifyError> {
    let SplitKind::TwoCliques { clique_a, clique_b } = split.kind else {
        return Err(CertifyError::NotTwoCliques);
    };
    let v0 = split.center;
    if ham.root() != v0 {
        return Err(CertifyError::RootMismatch {
            expected: v0,
            got: ham.root(),
        });
    }
    let order = ham.order();
    let n = order.len();
    let ab = clique_a.union(clique_b);
    let line = &order[1..];

    let marks: Vec<usize> = (0..line.len())
        .filter(|&i| ab.contains(line[i]))
        .collect();
    assert_eq!(marks.first(), Some(&0), "v1 neighbors the root");
    assert_eq!(marks.last(), Some(&(n - 2)), "v(n-1) neighbors the root");

    let mut paths: Vec<Vec<usize>> = Vec::new();
    for w in marks.windows(2) {
        let (p, q) = (w[0], w[1]);
        if q == p + 1 {
            // A cycle edge between two neighborhood vertices lies
            // inside one clique (the cliques span no edges) — cut it.
            debug_assert_eq!(
                clique_a.contains(line[p]),
                clique_a.contains(line[q]),
                "two-cliques splits admit no A-B edge"
            );
        } else {
            debug_assert!(line[p + 1..q].iter().all(|&x| !ab.contains(x)));
            paths.push(line[p..=q].to_vec());
        }
    }

    // Shortcut iteration, smallest shared endpoint first.
    let mut removed = VertexSet::EMPTY;
    loop {
        let shared = ab.iter().filter(|&v| !removed.contains(v)).find_map(|v| {
            let at: Vec<usize> = (0..paths.len())
                .filter(|&i| paths[i][0] == v || *paths[i].last().unwrap() == v)
                .collect();
            (at.len() == 2).then(|| (v, at[0], at[1]))
        });
        let Some((v, i, j)) = shared else { break };
        let orient = |mut p: Vec<usize>| {
            if p[0] != v {
                p.reverse();
            }
            debug_assert_eq!(p[0], v);
            p
        };
        let p = orient(paths[i].clone());
        let q = orient(paths[j].clone());
        let (x1, y1) = (p[1], q[1]);
        if !g.has_edge(x1, y1) {
            let mut leaves = [x1, y1, v0];
            leaves.sort_unstable();
            return Err(CertifyError::ShortcutClaw(Claw { center: v, leaves }));
        }
        let mut merged: Vec<usize> = p[1..].iter().rev().copied().collect();
        merged.extend_from_slice(&q[1..]);
        paths[i] = merged;
        paths.remove(j);
        removed.insert(v);
    }

    let tagged: Vec<TaggedPath> = paths
        .into_iter()
        .map(|p| {
            let crossing = clique_a.contains(p[0]) != clique_a.contains(*p.last().unwrap());
            TaggedPath::new(p, crossing, None)
        })
        .collect();

    let coll = PathCollection::from_parts(tagged, ab, removed, DecompositionCase::CaseOne);
    // Conservation: internal vertices plus {v0} ∪ A ∪ B partition V.
    assert_eq!(
        coll.total_internal() + ab.len() + 1,
        n,
        "every non-neighborhood vertex is internal to exactly one path"
    );
    for p in coll.paths() {
        debug_assert!(p.order() >= 3);
    }
    Ok(coll)
}

/// Case-2 decomposition along an oriented hamiltonian cycle: delete the
/// root, cut cycle edges lying inside one of A, B, X, and split at
/// partition vertices. No shortcuts; crossing paths may have order 2,
/// and classification tags are filled in directly.
pub fn case2_decomposition(
    g: &Graph,
    ham: &HamCycle,
    abx: &AbxPartition,
) -> Result<PathCollection, CertifyError> {
    if !abx.remainder.is_empty() {
        return Err(CertifyError::RemainderNotEmpty {
            remainder: abx.remainder,
        });
    }
    let order = ham.order();
    let n = order.len();
    let line = &order[1..];
    let abx_set = abx.a.union(abx.b).union(abx.x);

    let marks: Vec<usize> = (0..line.len())
        .filter(|&i| abx_set.contains(line[i]))
        .collect();
    assert_eq!(marks.first(), Some(&0));
    assert_eq!(marks.last(), Some(&(n - 2)));

    let set_index = |v: usize| -> usize {
        if abx.a.contains(v) {
            0
        } else if abx.b.contains(v) {
            1
        } else {
            2
        }
    };
    let mut paths = Vec::new();
    for w in marks.windows(2) {
        let (p, q) = (w[0], w[1]);
        if q == p + 1 && set_index(line[p]) == set_index(line[q]) {
            continue; // same-set cycle edge, cut
        }
        debug_assert!(line[p + 1..q]
            .iter()
            .all(|&x| !g.neighbors(ham.root()).contains(x)));
        paths.push(line[p..=q].to_vec());
    }

    let tagged = paths
        .into_iter()
        .map(|p| tag_for(&p, abx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PathCollection::from_parts(
        tagged,
        abx_set,
        VertexSet::EMPTY,
        DecompositionCase::CaseTwo,
    ))
}

fn tag_for(vertices: &[usize], abx: &AbxPartition) -> Result<TaggedPath, CertifyError> {
    let membership = |v: usize| -> Result<u8, CertifyError> {
        if abx.a.contains(v) {
            Ok(0)
        } else if abx.b.contains(v) {
            Ok(1)
        } else if abx.x.contains(v) {
            Ok(2)
        } else {
            Err(CertifyError::EndpointOutsidePartition(v))
        }
    };
    let first = membership(vertices[0])?;
    let last = membership(*vertices.last().unwrap())?;
    let crossing = first != last;
    // Reversed: begins in B∪X and ends in A∪X. An X-to-X path is
    // non-crossing as well as reversed.
    let reversed = (first == 1 || first == 2) && (last == 0 || last == 2);
    Ok(TaggedPath::new(
        vertices.to_vec(),
        crossing,
        Some(reversed),
    ))
}

/// Re-tags every oriented path of a collection against an A/B/X
/// partition. Tag assignment is a pure function of endpoint membership
/// and the stored orientation.
pub fn classify_paths(
    coll: &PathCollection,
    abx: &AbxPartition,
) -> Result<PathCollection, CertifyError> {
    let tagged = coll
        .paths
        .iter()
        .map(|p| tag_for(&p.vertices, abx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PathCollection::from_parts(
        tagged,
        abx.a.union(abx.b).union(abx.x),
        coll.removed,
        coll.case,
    ))
}

/// Result of an insertion-cycle construction; `truncated` records why
/// the interval stopped early, if it did.
#[derive(Debug, Clone)]
pub struct InsertionOutcome {
    pub cycles: Vec<(usize, Vec<usize>)>,
    pub truncated: Option<String>,
}

/// Cycles through the root, the first `prefix` paths of the collection,
/// and any number of further clique vertices: every length from
/// 1 + 2·prefix + Σp_j to 1 + Δ + Σp_j gets an explicit cycle, threaded
/// through the cliques (complete, so segments of any residual size are
/// available).
///
/// `prefix = 0` degenerates to the cycles inside the root plus the
/// larger clique, lengths 3..=⌈Δ/2⌉+1.
///
/// The first prefix path must be crossing; the caller orders the
/// collection that way.
pub fn insertion_cycles(
    g: &Graph,
    v0: usize,
    split: &NeighborhoodSplit,
    coll: &PathCollection,
    prefix: usize,
) -> InsertionOutcome {
    let SplitKind::TwoCliques { clique_a, clique_b } = split.kind else {
        return InsertionOutcome {
            cycles: Vec::new(),
            truncated: Some("neighborhood split is not two cliques".into()),
        };
    };

    if prefix == 0 {
        let big = if clique_a.len() >= clique_b.len() {
            clique_a
        } else {
            clique_b
        };
        let members: Vec<usize> = big.iter().collect();
        let mut cycles = Vec::new();
        for t in 2..=members.len() {
            let mut cyc = vec![v0];
            cyc.extend_from_slice(&members[..t]);
            debug_assert!(verify_cycle(g, &cyc));
            cycles.push((t + 1, cyc));
        }
        return InsertionOutcome {
            cycles,
            truncated: None,
        };
    }

    if prefix > coll.k() {
        return InsertionOutcome {
            cycles: Vec::new(),
            truncated: Some(format!("prefix {} exceeds k = {}", prefix, coll.k())),
        };
    }
    let paths = &coll.paths()[..prefix];
    if !paths[0].is_crossing() {
        return InsertionOutcome {
            cycles: Vec::new(),
            truncated: Some("first path of the prefix is not crossing".into()),
        };
    }

    let in_a = |v: usize| clique_a.contains(v);
    let oriented = |p: &TaggedPath, start_in_a: bool| -> Vec<usize> {
        let mut v = p.vertices.to_vec();
        if in_a(v[0]) != start_in_a {
            v.reverse();
        }
        v
    };

    // Traversal plan: A-A paths first, the crossing P1 (A to B), then
    // B-B paths, then any further crossing paths alternating sides.
    let p1 = oriented(&paths[0], true);
    let mut aa = Vec::new();
    let mut bb = Vec::new();
    let mut more_crossings = Vec::new();
    for p in &paths[1..] {
        match (in_a(p.first()), in_a(p.last())) {
            (true, true) => aa.push(p.vertices.to_vec()),
            (false, false) => bb.push(p.vertices.to_vec()),
            _ => more_crossings.push(p),
        }
    }
    let mut items: Vec<Vec<usize>> = aa;
    let p1_index = items.len();
    items.push(p1);
    items.extend(bb);
    let mut side_a = false;
    for p in more_crossings {
        items.push(oriented(p, side_a));
        side_a = !side_a;
    }

    let mut used = VertexSet::EMPTY;
    for item in &items {
        used.insert(item[0]);
        used.insert(*item.last().unwrap());
    }
    let avail_a: Vec<usize> = clique_a.difference(used).iter().collect();
    let avail_b: Vec<usize> = clique_b.difference(used).iter().collect();

    let mut cycles = Vec::new();
    for extra in 0..=avail_a.len() + avail_b.len() {
        let take_a = extra.min(avail_a.len());
        let take_b = extra - take_a;
        let mut cyc = vec![v0];
        cyc.extend_from_slice(&avail_a[..take_a]);
        for (idx, item) in items.iter().enumerate() {
            cyc.extend_from_slice(item);
            if idx == p1_index {
                cyc.extend_from_slice(&avail_b[..take_b]);
            }
        }
        if !verify_cycle(g, &cyc) {
            return InsertionOutcome {
                cycles,
                truncated: Some(format!(
                    "constructed cycle of length {} failed verification",
                    cyc.len()
                )),
            };
        }
        cycles.push((cyc.len(), cyc));
    }
    InsertionOutcome {
        cycles,
        truncated: None,
    }
}

/// One certified length with its explicit cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub length: usize,
    pub cycle: Vec<usize>,
}

/// A verified list of (length, cycle) pairs witnessing a spectrum lower
/// bound; `reached` reports honestly whether the composed machinery hit
/// the target min{n, ⌈3Δ/2⌉} − 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub delta: usize,
    pub target: usize,
    pub reached: bool,
    pub certified_count: usize,
    pub entries: Vec<CertificateEntry>,
}

impl Certificate {
    /// The certified lengths, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.length).collect()
    }

    /// Third-party re-verification from the graph alone: entry cycles
    /// are valid and of the stated lengths, lengths are strictly
    /// increasing, and the counts and flags are consistent.
    pub fn verify_against(&self, g: &Graph) -> bool {
        if self.n != g.n() || g.max_degree() != Ok(self.delta) {
            return false;
        }
        if self.certified_count != self.entries.len() {
            return false;
        }
        if self.reached != (self.certified_count >= self.target) {
            return false;
        }
        let mut prev = 0usize;
        for e in &self.entries {
            if e.length <= prev || e.cycle.len() != e.length || !verify_cycle(g, &e.cycle) {
                return false;
            }
            prev = e.length;
        }
        true
    }
}

/// Composes the constructive machinery into a spectrum lower-bound
/// certificate: clique cycles for the short lengths, insertion cycles
/// over path-decomposition prefixes for the middle lengths, arc-closing
/// cycles for the long lengths, and pigeonhole pancyclicity whenever an
/// (n−1)-cycle with a high-degree off-cycle vertex materializes.
///
/// When the root's neighborhood is connected instead of two cliques,
/// the certifier falls back to a hamiltonian path of the neighborhood
/// (lengths 3..=Δ+1) plus the arc cycles; that route is sound but may
/// report `reached = false`.
pub fn certify_spectrum_lower_bound(
    g: &Graph,
    ham: Option<&HamCycle>,
) -> Result<Certificate, CertifyError> {
    certify_spectrum_lower_bound_with(g, ham, &SearchConfig::default())
}

pub fn certify_spectrum_lower_bound_with(
    g: &Graph,
    ham: Option<&HamCycle>,
    cfg: &SearchConfig,
) -> Result<Certificate, CertifyError> {
    if let Some(claw) = recognition::find_claw(g) {
        return Err(CertifyError::NotClawFree(claw));
    }
    let n = g.n();
    if n < 3 {
        return Err(CertifyError::TooSmall(n));
    }
    let ham = match ham {
        Some(h) => HamCycle::rooted_at_max_degree(g, h.order().to_vec())?,
        None => match hamilton::find_hamiltonian_cycle_with(g, cfg)? {
            hamilton::HamSearch::Found(h) => h,
            hamilton::HamSearch::NotFound => return Err(CertifyError::NotHamiltonian),
            hamilton::HamSearch::Unknown => return Err(CertifyError::HamiltonicityUnknown),
        },
    };
    let v0 = ham.root();
    let delta = g.max_degree().expect("n >= 3");
    debug_assert_eq!(g.degree(v0), delta);
    let target =
        spectrum::theorem1_lower_bound(n, delta).expect("hamiltonian graphs have 2 <= delta < n");

    let mut entries: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let add = |batch: Vec<(usize, Vec<usize>)>, entries: &mut BTreeMap<usize, Vec<usize>>| {
        for (len, cyc) in batch {
            debug_assert!(verify_cycle(g, &cyc) && cyc.len() == len);
            entries.entry(len).or_insert(cyc);
        }
    };

    let split = recognition::neighborhood_split(g, v0)
        .expect("claw-free graph with a hamiltonian cycle has the neighborhood dichotomy");
    match split.kind {
        SplitKind::TwoCliques { .. } => {
            let empty =
                PathCollection::from_parts(Vec::new(), g.neighbors(v0), VertexSet::EMPTY,
                    DecompositionCase::CaseOne);
            add(insertion_cycles(g, v0, &split, &empty, 0).cycles, &mut entries);

            let order = ham.order();
            let (v1, vlast) = (order[1], order[n - 1]);
            if g.has_edge(v1, vlast) {
                // The cycle minus the root closes to an (n−1)-cycle.
                if 2 * delta > n - 1 {
                    add(lemma1_cycles(g, &order[1..], v0)?, &mut entries);
                } else if let Some(sub) = crossing_subpath(g, &ham, &split) {
                    let coll = PathCollection::from_parts(
                        vec![TaggedPath::new(sub, true, None)],
                        g.neighbors(v0),
                        VertexSet::EMPTY,
                        DecompositionCase::CaseOne,
                    );
                    add(insertion_cycles(g, v0, &split, &coll, 1).cycles, &mut entries);
                }
            } else {
                let coll = reorder_for_insertion(path_decomposition(g, &ham, &split)?);
                for i in 1..=coll.k() {
                    add(insertion_cycles(g, v0, &split, &coll, i).cycles, &mut entries);
                }
            }
        }
        SplitKind::Connected => {
            // Claw-freeness bounds the neighborhood's independence by 2,
            // so it has a hamiltonian path; windows of that path close
            // through the root into cycles of every length 3..=Δ+1.
            let (h, labels) = g.induced(g.neighbors(v0));
            let path = hamilton::hamiltonian_path_alpha2(&h)
                .expect("connected claw-free neighborhood satisfies lemma 3");
            let nbr_path: Vec<usize> = path.vertices().iter().map(|&i| labels[i]).collect();
            let mut batch = Vec::new();
            for end in 1..nbr_path.len() {
                let mut cyc = vec![v0];
                cyc.extend_from_slice(&nbr_path[..=end]);
                batch.push((end + 2, cyc));
            }
            add(batch, &mut entries);
        }
    }

    add(lemma2_long_cycles(g, &ham), &mut entries);

    // Opportunistic pigeonhole: an (n−1)-length entry leaves one vertex
    // off-cycle; if that vertex has high degree, everything follows.
    if let Some(c) = entries.get(&(n - 1)).cloned() {
        let off: VertexSet = VertexSet::full(n).difference(c.iter().copied().collect());
        let u = off.smallest().expect("one vertex is off an (n-1)-cycle");
        if 2 * g.degree(u) > n - 1 {
            add(lemma1_cycles(g, &c, u)?, &mut entries);
        }
    }

    let entries: Vec<CertificateEntry> = entries
        .into_iter()
        .map(|(length, cycle)| CertificateEntry { length, cycle })
        .collect();
    let certified_count = entries.len();
    Ok(Certificate {
        n,
        delta,
        target,
        reached: certified_count >= target,
        certified_count,
        entries,
    })
}

/// Orders a case-1 collection for insertion: the first crossing path
/// leads, the rest follow by decreasing internal count (stable).
fn reorder_for_insertion(coll: PathCollection) -> PathCollection {
    let mut paths = coll.paths.clone();
    if let Some(first_crossing) = paths.iter().position(TaggedPath::is_crossing) {
        let p1 = paths.remove(first_crossing);
        paths.sort_by_key(|p| std::cmp::Reverse(p.internal_count()));
        paths.insert(0, p1);
    }
    PathCollection::from_parts(paths, coll.endpoint_set, coll.removed, coll.case)
}

/// First subpath of the cycle line between the two cliques whose
/// interior avoids the closed neighborhood of the root.
fn crossing_subpath(g: &Graph, ham: &HamCycle, split: &NeighborhoodSplit) -> Option<Vec<usize>> {
    let SplitKind::TwoCliques { clique_a, .. } = split.kind else {
        return None;
    };
    let order = ham.order();
    let line = &order[1..];
    let nbrs = g.neighbors(split.center);
    let mut last_mark = 0usize;
    for pos in 1..line.len() {
        if !nbrs.contains(line[pos]) {
            continue;
        }
        if clique_a.contains(line[pos]) == clique_a.contains(line[last_mark]) {
            last_mark = pos;
        } else {
            debug_assert!(pos > last_mark + 1, "A-B cycle edges cannot exist");
            return Some(line[last_mark..=pos].to_vec());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_graph, ExtremalParams};
    use crate::graph::Graph;
    use crate::recognition::{abx_partition, find_claw, neighborhood_split};
    use crate::spectrum::cycle_spectrum_exact;

    fn cycle_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn verify_cycle_basics() {
        let k3 = complete_graph(3);
        assert!(verify_cycle(&k3, &[0, 1, 2]));
        let c4 = cycle_graph(4);
        assert!(!verify_cycle(&c4, &[0, 1, 3]), "1-3 is not an edge");
        assert!(!verify_cycle(&k3, &[0, 1]));
        assert!(!verify_cycle(&k3, &[0, 1, 1]));
    }

    #[test]
    fn lemma1_on_c5_plus_vertex() {
        // C5 on 0..4 plus u=5 adjacent to 0,1,2: deg 3 > (6-1)/2.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2)],
        )
        .unwrap();
        let out = lemma1_cycles(&g, &[0, 1, 2, 3, 4], 5).unwrap();
        let lengths: Vec<usize> = out.iter().map(|(l, _)| *l).collect();
        assert_eq!(lengths, vec![3, 4, 5, 6]);
        for (l, c) in &out {
            assert_eq!(c.len(), *l);
            assert!(verify_cycle(&g, c));
        }
        // Cross-check: the graph really is pancyclic.
        let s = cycle_spectrum_exact(&g).unwrap();
        assert!(s.is_pancyclic());
    }

    #[test]
    fn lemma1_on_wheel_hub() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let g = Graph::from_edges(6, &edges).unwrap();
        let out = lemma1_cycles(&g, &[0, 1, 2, 3, 4], 5).unwrap();
        assert_eq!(out.len(), 4, "all lengths 3..=6");
    }

    #[test]
    fn lemma1_rejects_low_degree() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0)]).unwrap();
        assert_eq!(
            lemma1_cycles(&g, &[0, 1, 2, 3, 4], 5),
            Err(CertifyError::Lemma1DegreeTooSmall {
                u: 5,
                degree: 1,
                n: 6
            })
        );
    }

    #[test]
    fn lemma2_on_k6() {
        let g = complete_graph(6);
        let ham = HamCycle::new(&g, (0..6).collect()).unwrap();
        let out = lemma2_long_cycles(&g, &ham);
        let lengths: Vec<usize> = out.iter().map(|(l, _)| *l).collect();
        assert_eq!(lengths, vec![4, 5, 6]);
        assert!(out.len() >= 3, "ceil(5/2) = 3");
        for (l, c) in &out {
            assert_eq!(c.len(), *l);
            assert!(verify_cycle(&g, c));
        }
    }

    #[test]
    fn lemma2_on_chordless_cycle() {
        let g = cycle_graph(9);
        let ham = HamCycle::new(&g, (0..9).collect()).unwrap();
        let out = lemma2_long_cycles(&g, &ham);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0, 9);
    }

    #[test]
    fn lemma2_on_extremal_60_24() {
        let ex = extremal_graph(ExtremalParams::new(60, 24).unwrap());
        let out = lemma2_long_cycles(ex.graph(), ex.ham_cycle());
        assert!(out.len() >= 12, "ceil(24/2) = 12, got {}", out.len());
        for (l, c) in &out {
            assert!(*l >= 31, "length {l} below ceil((60+2)/2)");
            assert!(verify_cycle(ex.graph(), c));
        }
    }

    #[test]
    fn decomposition_on_extremal_14_4() {
        let ex = extremal_graph(ExtremalParams::new(14, 4).unwrap());
        let split = neighborhood_split(ex.graph(), 0).unwrap();
        let coll = path_decomposition(ex.graph(), ex.ham_cycle(), &split).unwrap();
        assert_eq!(coll.k(), 1);
        assert!(coll.paths()[0].is_crossing());
        assert_eq!(coll.paths()[0].internal_count(), 9);
        assert_eq!(coll.total_internal(), 14 - 4 - 1);
        assert!(coll.removed().is_empty());
    }

    #[test]
    fn decomposition_two_cliques_two_paths() {
        // Two 3-cliques on the hub joined by two disjoint outside paths.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
                (1, 2), (1, 3), (2, 3),
                (4, 5), (4, 6), (5, 6),
                (1, 7), (7, 4),
                (2, 8), (8, 5),
            ],
        )
        .unwrap();
        let ham = HamCycle::new(&g, vec![0, 2, 8, 5, 6, 4, 7, 1, 3]).unwrap();
        let split = neighborhood_split(&g, 0).unwrap();
        let coll = path_decomposition(&g, &ham, &split).unwrap();
        assert_eq!(coll.k(), 2);
        assert!(coll.paths().iter().all(TaggedPath::is_crossing));
        assert_eq!(coll.total_internal(), 2);
    }

    #[test]
    fn shortcut_merges_and_removes_the_shared_endpoint() {
        // Hub 0; A = {1,2,3}, B = {4,5}; chain of A-A segments sharing
        // endpoints 2 and 3, with the claw-forced edges 7-8 and 8-9.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                (1, 2), (1, 3), (2, 3),
                (4, 5),
                (1, 6), (6, 2), (2, 7), (7, 3), (3, 8), (8, 5),
                (6, 7), (7, 8),
            ],
        )
        .unwrap();
        let ham = HamCycle::new(&g, vec![0, 1, 6, 2, 7, 3, 8, 5, 4]).unwrap();
        let split = neighborhood_split(&g, 0).unwrap();
        let coll = path_decomposition(&g, &ham, &split).unwrap();
        assert_eq!(coll.k(), 1);
        assert!(coll.paths()[0].is_crossing());
        assert_eq!(coll.removed(), [2, 3].into_iter().collect());
        let endpoints = [coll.paths()[0].first(), coll.paths()[0].last()];
        assert!(!endpoints.contains(&2) && !endpoints.contains(&3));
        assert_eq!(coll.total_internal(), 9 - 5 - 1);
    }

    #[test]
    fn shortcut_without_forced_edge_reports_claw() {
        // Same construction minus the forced edge 6-7: shortcutting at 2
        // must expose the claw {2; 0,6,7}.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                (1, 2), (1, 3), (2, 3),
                (4, 5),
                (1, 6), (6, 2), (2, 7), (7, 3), (3, 8), (8, 5),
                (7, 8),
            ],
        )
        .unwrap();
        let ham = HamCycle::new(&g, vec![0, 1, 6, 2, 7, 3, 8, 5, 4]).unwrap();
        let split = neighborhood_split(&g, 0).unwrap();
        match path_decomposition(&g, &ham, &split) {
            Err(CertifyError::ShortcutClaw(claw)) => {
                assert_eq!(claw.center, 2);
                assert_eq!(claw.leaves, [0, 6, 7]);
                assert_eq!(find_claw(&g).map(|c| c.center), Some(0).map(|_| claw.center).or(Some(claw.center)));
            }
            other => panic!("expected shortcut claw, got {other:?}"),
        }
    }

    #[test]
    fn case2_decomposition_on_wheel_minus_spoke() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
        )
        .unwrap();
        let ham = HamCycle::new(&g, vec![1, 2, 3, 4, 0, 5]).unwrap();
        let abx = abx_partition(&g, &ham).unwrap();
        let coll = case2_decomposition(&g, &ham, &abx).unwrap();
        assert_eq!(coll.k(), 2);
        // The X vertex 0 ends one path and begins the other.
        let ends_at_x = coll.paths().iter().filter(|p| p.last() == 0).count();
        let starts_at_x = coll.paths().iter().filter(|p| p.first() == 0).count();
        assert_eq!((ends_at_x, starts_at_x), (1, 1));
        // The order-2 crossing path [0, 5] exists.
        assert!(coll
            .paths()
            .iter()
            .any(|p| p.vertices() == [0, 5] && p.is_crossing()));
    }

    #[test]
    fn classification_rules() {
        let abx = AbxPartition {
            a: [1].into_iter().collect(),
            b: [2].into_iter().collect(),
            x: [3].into_iter().collect(),
            remainder: VertexSet::EMPTY,
        };
        let coll = PathCollection::from_parts(
            vec![
                TaggedPath::new(vec![1, 9, 2], false, None), // A to B
                TaggedPath::new(vec![2, 8, 1], false, None), // B to A
                TaggedPath::new(vec![3, 7, 3], false, None), // X to X (synthetic)
            ],
            [1, 2, 3].into_iter().collect(),
            VertexSet::EMPTY,
            DecompositionCase::CaseTwo,
        );
        let tagged = classify_paths(&coll, &abx).unwrap();
        let p = tagged.paths();
        assert!(p[0].is_crossing() && p[0].is_reversed() == Some(false));
        assert!(p[1].is_crossing() && p[1].is_reversed() == Some(true));
        assert!(!p[2].is_crossing() && p[2].is_reversed() == Some(true));

        let bad = PathCollection::from_parts(
            vec![TaggedPath::new(vec![1, 5], false, None)],
            [1].into_iter().collect(),
            VertexSet::EMPTY,
            DecompositionCase::CaseTwo,
        );
        assert_eq!(
            classify_paths(&bad, &abx),
            Err(CertifyError::EndpointOutsidePartition(5))
        );
    }

    #[test]
    fn insertion_on_two_clique_toy() {
        // Hub 0, cliques {1,2} and {3,4}, one crossing path 1-5-3.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4), (1, 5), (5, 3)],
        )
        .unwrap();
        let split = neighborhood_split(&g, 0).unwrap();
        let coll = PathCollection::from_parts(
            vec![TaggedPath::new(vec![1, 5, 3], true, None)],
            g.neighbors(0),
            VertexSet::EMPTY,
            DecompositionCase::CaseOne,
        );
        let out = insertion_cycles(&g, 0, &split, &coll, 1);
        assert!(out.truncated.is_none());
        let lengths: Vec<usize> = out.cycles.iter().map(|(l, _)| *l).collect();
        assert_eq!(lengths, vec![4, 5, 6]);
    }

    #[test]
    fn insertion_prefix_zero_is_the_clique_block() {
        let ex = extremal_graph(ExtremalParams::new(14, 4).unwrap());
        let split = neighborhood_split(ex.graph(), 0).unwrap();
        let empty = PathCollection::from_parts(
            Vec::new(),
            ex.graph().neighbors(0),
            VertexSet::EMPTY,
            DecompositionCase::CaseOne,
        );
        let out = insertion_cycles(ex.graph(), 0, &split, &empty, 0);
        let lengths: Vec<usize> = out.cycles.iter().map(|(l, _)| *l).collect();
        assert_eq!(lengths, vec![3], "ceil(4/2)+1 = 3 caps the clique block");
    }

    #[test]
    fn insertion_interval_on_extremal_14_4() {
        let ex = extremal_graph(ExtremalParams::new(14, 4).unwrap());
        let split = neighborhood_split(ex.graph(), 0).unwrap();
        let coll =
            path_decomposition(ex.graph(), ex.ham_cycle(), &split).unwrap();
        let out = insertion_cycles(ex.graph(), 0, &split, &coll, 1);
        let lengths: Vec<usize> = out.cycles.iter().map(|(l, _)| *l).collect();
        assert_eq!(lengths, vec![12, 13, 14], "p1 + 3 .. p1 + delta + 1");
    }

    #[test]
    fn certificate_on_extremal_14_4_matches_exact_spectrum() {
        let ex = extremal_graph(ExtremalParams::new(14, 4).unwrap());
        let cert =
            certify_spectrum_lower_bound(ex.graph(), Some(ex.ham_cycle())).unwrap();
        assert_eq!(cert.target, 4);
        assert!(cert.reached);
        assert_eq!(cert.lengths(), vec![3, 12, 13, 14]);
        assert!(cert.verify_against(ex.graph()));
        let exact = cycle_spectrum_exact(ex.graph()).unwrap();
        let exact_lengths: Vec<usize> = exact.lengths().iter().copied().collect();
        assert_eq!(cert.lengths(), exact_lengths);
    }

    #[test]
    fn certificate_on_extremal_60_24_reaches_target() {
        let ex = extremal_graph(ExtremalParams::new(60, 24).unwrap());
        let cert =
            certify_spectrum_lower_bound(ex.graph(), Some(ex.ham_cycle())).unwrap();
        assert_eq!(cert.target, 34);
        assert_eq!(cert.certified_count, 34);
        assert!(cert.reached);
        assert!(cert.verify_against(ex.graph()));
        let expect: Vec<usize> = (3..=13).chain(38..=60).collect();
        assert_eq!(cert.lengths(), expect);
    }

    #[test]
    fn certificate_on_complete_graphs() {
        for n in [5usize, 9, 12] {
            let g = complete_graph(n);
            let cert = certify_spectrum_lower_bound(&g, None).unwrap();
            assert!(cert.reached, "K{n} must reach its target");
            assert_eq!(cert.certified_count, n - 2, "K{n} is pancyclic");
            assert!(cert.verify_against(&g));
        }
    }

    #[test]
    fn certificate_on_plain_cycles() {
        for n in [4usize, 6, 11] {
            let g = cycle_graph(n);
            let cert = certify_spectrum_lower_bound(&g, None).unwrap();
            assert_eq!(cert.target, 1);
            assert!(cert.reached);
            assert_eq!(cert.lengths(), vec![n]);
        }
    }

    #[test]
    fn certificate_via_lemma1_when_endpoints_adjacent() {
        // Hub with cliques {1,2}, {3,4} and two crossing routes; the
        // canonical rooting has adjacent cycle neighbors and 2Δ > n−1,
        // so the pigeonhole route certifies full pancyclicity.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4),
                (1, 2), (3, 4),
                (1, 5), (5, 3),
                (2, 6), (6, 4),
            ],
        )
        .unwrap();
        assert_eq!(find_claw(&g), None);
        let ham = HamCycle::new(&g, vec![0, 1, 5, 3, 4, 6, 2]).unwrap();
        let cert = certify_spectrum_lower_bound(&g, Some(&ham)).unwrap();
        assert_eq!(cert.lengths(), vec![3, 4, 5, 6, 7]);
        assert!(cert.reached);
        assert!(cycle_spectrum_exact(&g).unwrap().is_pancyclic());
    }

    #[test]
    fn certificate_adjacent_endpoints_small_delta() {
        // Longer crossing routes push 2Δ ≤ n−1: the crossing-subpath
        // insertion route runs instead of the pigeonhole.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4),
                (1, 2), (3, 4),
                (1, 5), (5, 6), (6, 3),
                (2, 7), (7, 8), (8, 4),
            ],
        )
        .unwrap();
        assert_eq!(find_claw(&g), None);
        let ham = HamCycle::new(&g, vec![0, 1, 5, 6, 3, 4, 8, 7, 2]).unwrap();
        let cert = certify_spectrum_lower_bound(&g, Some(&ham)).unwrap();
        assert!(cert.verify_against(&g));
        let exact = cycle_spectrum_exact(&g).unwrap();
        for e in &cert.entries {
            assert!(exact.contains(e.length));
        }
        assert!(cert.reached, "target {} vs {}", cert.target, cert.certified_count);
    }

    #[test]
    fn certifier_rejects_bad_inputs() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(
            certify_spectrum_lower_bound(&claw, None),
            Err(CertifyError::NotClawFree(_))
        ));
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(
            certify_spectrum_lower_bound(&bowtie, None),
            Err(CertifyError::NotHamiltonian)
        );
    }

    #[test]
    fn certificate_serialization_round_trips() {
        let ex = extremal_graph(ExtremalParams::new(14, 4).unwrap());
        let cert = certify_spectrum_lower_bound(ex.graph(), Some(ex.ham_cycle())).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(cert, back);
        assert!(back.verify_against(ex.graph()));
    }
}
