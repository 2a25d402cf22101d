//! Cycle spectrum computation and the bounds it is measured against.
//!
//! The exact spectrum is computed by a subset DP: for each root r
//! (the smallest vertex of a would-be cycle) paths are grown through
//! vertices larger than r while tracking the reachable endpoints of
//! every visited subset; a subset of size ≥ 3 whose endpoint set meets
//! N(r) contributes its size as a cycle length. Pinning the smallest
//! vertex removes the cyclic and reflective symmetry. A brute-force
//! enumeration oracle validates the DP at small orders, and a seeded
//! sampling mode produces verified spectrum subsets above the exact
//! range.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certify::verify_cycle;
use crate::graph::Graph;
use crate::hamilton::{self, HamCycle, SearchConfig};
use crate::recognition;

/// Default exact-mode order limit; the 2^n subset DP is comfortable to
/// about here.
pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Hard cap on the exact-mode limit. At n = 24 the DP tables reach
/// hundreds of megabytes; front ends should warn before going past the
/// default.
pub const EXACT_HARD_CAP: usize = 24;

/// Orders the naive enumeration oracle accepts; cycle counts explode
/// beyond this.
pub const NAIVE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("order {n} is above the exact-mode limit {limit}; use cycle_spectrum_partial for a certified subset")]
    OrderAboveLimit { n: usize, limit: usize },
    #[error("exact-mode limit {limit} exceeds the hard cap {EXACT_HARD_CAP}")]
    LimitAboveHardCap { limit: usize },
    #[error("order {n} is above the enumeration oracle limit {NAIVE_LIMIT}")]
    OrderAboveNaiveLimit { n: usize },
    #[error("bound arguments out of range: n={n}, delta={delta} (need n >= 3 and 2 <= delta <= n-1)")]
    BadBoundArgs { n: usize, delta: usize },
}

/// The set of cycle lengths S(G) of a host graph of order n, with
/// s(G) = |S(G)| derived.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    n: usize,
    lengths: BTreeSet<usize>,
}

impl Spectrum {
    pub fn new(n: usize, lengths: BTreeSet<usize>) -> Self {
        debug_assert!(lengths.iter().all(|&l| (3..=n).contains(&l)));
        Spectrum { n, lengths }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> &BTreeSet<usize> {
        &self.lengths
    }

    /// s(G), the number of distinct cycle lengths.
    pub fn s(&self) -> usize {
        self.lengths.len()
    }

    pub fn contains(&self, len: usize) -> bool {
        self.lengths.contains(&len)
    }

    /// S(G) = {3, …, n}.
    pub fn is_pancyclic(&self) -> bool {
        self.n >= 3 && self.lengths.len() == self.n - 2
    }

    /// S(G) = {3, …, max S(G)}; vacuously true for an empty spectrum
    /// (acyclic graphs), by documented convention.
    pub fn is_subpancyclic(&self) -> bool {
        match self.lengths.iter().next_back() {
            None => true,
            Some(&max) => self.lengths.len() == max - 2,
        }
    }

    pub fn is_subset_of(&self, other: &Spectrum) -> bool {
        self.lengths.is_subset(&other.lengths)
    }
}

/// Exact cycle spectrum at the default exact-mode limit.
pub fn cycle_spectrum_exact(g: &Graph) -> Result<Spectrum, SpectrumError> {
    cycle_spectrum_exact_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Exact cycle spectrum with a caller-chosen limit (hard-capped).
pub fn cycle_spectrum_exact_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Spectrum, SpectrumError> {
    if limit > EXACT_HARD_CAP {
        return Err(SpectrumError::LimitAboveHardCap { limit });
    }
    if g.n() > limit {
        return Err(SpectrumError::OrderAboveLimit { n: g.n(), limit });
    }
    Ok(Spectrum::new(g.n(), spectrum_lengths(g)))
}

/// The subset-DP engine: all cycle lengths of `g`.
pub(crate) fn spectrum_lengths(g: &Graph) -> BTreeSet<usize> {
    let n = g.n();
    let mut found = 0u32; // bit l set <=> a cycle of length l exists
    for root in 0..n.saturating_sub(2) {
        root_dp(g, root, &mut found, None);
    }
    (3..=n).filter(|&l| found >> l & 1 == 1).collect()
}

/// Whether `g` has a cycle through all n vertices; the root-0 slice of
/// the spectrum DP.
pub(crate) fn has_hamiltonian_cycle(g: &Graph) -> bool {
    witness_of_length(g, g.n()).is_some()
}

/// Reconstructs a cycle of exactly `len` vertices, smallest admissible
/// root and lexicographically smallest DP states first. `None` if no
/// such cycle exists.
pub(crate) fn witness_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if len < 3 || len > n {
        return None;
    }
    for root in 0..=(n - len) {
        let mut found = 0u32;
        let mut table = Vec::new();
        root_dp(g, root, &mut found, Some(&mut table));
        if found >> len & 1 == 0 {
            continue;
        }
        let m = n - root - 1;
        let radj = above_mask(g, root, root);
        // Smallest final state of the right size whose endpoints close
        // back to the root.
        let (mask, endpoints) = (0u32..1 << m)
            .filter(|&mask| mask.count_ones() as usize == len - 1)
            .find_map(|mask| {
                let close = table[mask as usize] & radj;
                (close != 0).then_some((mask, close))
            })
            .expect("recorded length has a witness state");
        let mut cycle = Vec::with_capacity(len);
        let mut mask = mask;
        let mut e = endpoints.trailing_zeros() as usize;
        cycle.push(root + 1 + e);
        while mask.count_ones() > 1 {
            let rest = mask & !(1 << e);
            let prev_candidates = table[rest as usize] & above_mask(g, root, root + 1 + e);
            debug_assert!(prev_candidates != 0, "DP state has a predecessor");
            let p = prev_candidates.trailing_zeros() as usize;
            cycle.push(root + 1 + p);
            mask = rest;
            e = p;
        }
        cycle.push(root);
        cycle.reverse();
        return Some(cycle);
    }
    None
}

/// Neighbors of `v` strictly above `root`, as a shifted bitmask.
fn above_mask(g: &Graph, root: usize, v: usize) -> u32 {
    let mut mask = 0u32;
    for w in g.neighbors(v).iter() {
        if w > root {
            mask |= 1 << (w - root - 1);
        }
    }
    mask
}

/// Endpoint-set DP over subsets of the vertices above `root`. Records
/// achievable cycle lengths into `found`, and optionally keeps the full
/// table for witness reconstruction.
fn root_dp(g: &Graph, root: usize, found: &mut u32, keep: Option<&mut Vec<u32>>) {
    let n = g.n();
    let m = n - root - 1;
    let radj = above_mask(g, root, root);
    if (radj.count_ones() as usize) < 2 {
        if let Some(table) = keep {
            table.clear();
            table.resize(1usize << m, 0);
        }
        return;
    }
    let adj: Vec<u32> = (0..m).map(|k| above_mask(g, root, root + 1 + k)).collect();

    let mut dp = vec![0u32; 1usize << m];
    for k in 0..m {
        if radj >> k & 1 == 1 {
            dp[1usize << k] = 1 << k;
        }
    }
    for mask in 1u32..(1 << m) as u32 {
        let endpoints = dp[mask as usize];
        if endpoints == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size >= 2 && endpoints & radj != 0 {
            *found |= 1 << (size + 1);
        }
        if size + 1 == n - root {
            continue; // no room to grow
        }
        let mut es = endpoints;
        while es != 0 {
            let e = es.trailing_zeros() as usize;
            es &= es - 1;
            let mut cand = adj[e] & !mask;
            while cand != 0 {
                let w = cand.trailing_zeros();
                cand &= cand - 1;
                dp[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    if let Some(table) = keep {
        *table = dp;
    }
}

/// Independent enumeration oracle: exhaustive DFS over all cycles in
/// canonical representation (smallest vertex first, smaller second
/// vertex than last). Only for validating the DP; limited to n ≤ 10.
pub fn cycle_spectrum_naive(g: &Graph) -> Result<Spectrum, SpectrumError> {
    let n = g.n();
    if n > NAIVE_LIMIT {
        return Err(SpectrumError::OrderAboveNaiveLimit { n });
    }
    let mut lengths = BTreeSet::new();
    let mut visited = vec![false; n];
    for start in 0..n {
        visited[start] = true;
        for second in g.neighbors(start).iter() {
            if second < start {
                continue;
            }
            visited[second] = true;
            naive_dfs(g, start, second, second, 2, &mut visited, &mut lengths);
            visited[second] = false;
        }
        visited[start] = false;
    }
    Ok(Spectrum::new(n, lengths))
}

fn naive_dfs(
    g: &Graph,
    start: usize,
    second: usize,
    current: usize,
    depth: usize,
    visited: &mut [bool],
    lengths: &mut BTreeSet<usize>,
) {
    for w in g.neighbors(current).iter() {
        if w == start {
            if depth >= 3 && second < current {
                lengths.insert(depth);
            }
        } else if w > start && !visited[w] {
            visited[w] = true;
            naive_dfs(g, start, second, w, depth + 1, visited, lengths);
            visited[w] = false;
        }
    }
}

/// Seeded sampling mode: a verified subset of S(G) for graphs beyond
/// the exact range. Combines greedy clique cycles, a budgeted
/// hamiltonicity attempt, and `budget` independent randomized DFS
/// probes; every reported length is backed by an explicitly verified
/// cycle. Deterministic in `seed`, monotone in `budget`.
pub fn cycle_spectrum_partial(g: &Graph, budget: u64, seed: u64) -> Spectrum {
    let n = g.n();
    let mut lengths = BTreeSet::new();
    let record = |cycle: &[usize], lengths: &mut BTreeSet<usize>| {
        debug_assert!(verify_cycle(g, cycle));
        if verify_cycle(g, cycle) {
            lengths.insert(cycle.len());
        }
    };

    // Greedy clique around every vertex: a clique of size k yields
    // cycles of every length 3..=k.
    for v in 0..n {
        let mut clique = vec![v];
        for u in g.neighbors(v).iter() {
            if clique.iter().all(|&c| g.has_edge(u, c)) {
                clique.push(u);
            }
        }
        for t in 3..=clique.len() {
            record(&clique[..t], &mut lengths);
        }
    }

    // One budgeted hamiltonicity attempt.
    if n >= 3 {
        let cfg = SearchConfig {
            exact_limit: DEFAULT_EXACT_LIMIT.min(n.saturating_sub(1)),
            node_budget: budget.max(1),
        };
        if let Ok(search) = hamilton::find_hamiltonian_cycle_with(g, &cfg) {
            if let Some(cyc) = search.found() {
                record(cyc.order(), &mut lengths);
            }
        }
    }

    // Independent randomized probes: each grows a random simple path
    // and records every closure back to its start. Per-probe seeding
    // keeps the output monotone in the budget.
    for probe in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(crate::constructions::derive_seed(seed, probe));
        if n < 3 {
            break;
        }
        let start = rng.random_range(0..n);
        let mut path = vec![start];
        let mut visited = crate::graph::VertexSet::singleton(start);
        loop {
            let current = *path.last().unwrap();
            let choices: Vec<usize> = g
                .neighbors(current)
                .difference(visited)
                .iter()
                .collect();
            if choices.is_empty() {
                break;
            }
            let next = choices[rng.random_range(0..choices.len())];
            path.push(next);
            visited.insert(next);
            if path.len() >= 3 && g.has_edge(next, start) {
                record(&path, &mut lengths);
            }
        }
    }

    Spectrum::new(n, lengths)
}

/// Whether S(G) = {3, …, n}; exact-mode only.
pub fn is_pancyclic(g: &Graph) -> Result<bool, SpectrumError> {
    Ok(cycle_spectrum_exact(g)?.is_pancyclic())
}

/// Whether S(G) = {3, …, max S(G)}; exact-mode only. True on acyclic
/// graphs by convention.
pub fn is_subpancyclic(g: &Graph) -> Result<bool, SpectrumError> {
    Ok(cycle_spectrum_exact(g)?.is_subpancyclic())
}

/// Outcome of checking the degree-sum trichotomy on one hamiltonian
/// graph. `Violation` would falsify the implementation, not the
/// theorem; the harness treats any occurrence as a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HsClassification {
    Pancyclic,
    Bipartite,
    MissingOnlyNMinus1,
    NotApplicable { max_degree_sum: usize },
    Violation { pair: (usize, usize), missing: usize },
}

/// Checks the Hakimi–Schmeichel trichotomy against the consecutive
/// cycle pair of maximum degree sum: sum > n must force pancyclicity;
/// sum = n allows pancyclic, bipartite, or a spectrum missing exactly
/// the length n−1; smaller sums are out of the theorem's range.
pub fn check_hakimi_schmeichel(
    g: &Graph,
    ham: &HamCycle,
) -> Result<HsClassification, SpectrumError> {
    let n = g.n();
    let order = ham.order();
    let (mut best_pair, mut best_sum) = ((order[0], order[1]), 0usize);
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        let sum = g.degree(u) + g.degree(v);
        if sum > best_sum {
            best_sum = sum;
            best_pair = (u, v);
        }
    }
    if best_sum < n {
        return Ok(HsClassification::NotApplicable {
            max_degree_sum: best_sum,
        });
    }
    let spectrum = cycle_spectrum_exact(g)?;
    if spectrum.is_pancyclic() {
        return Ok(HsClassification::Pancyclic);
    }
    let smallest_missing = |skip: Option<usize>| {
        (3..=n)
            .find(|&l| Some(l) != skip && !spectrum.contains(l))
            .expect("non-pancyclic spectrum misses a length")
    };
    if best_sum > n {
        return Ok(HsClassification::Violation {
            pair: best_pair,
            missing: smallest_missing(None),
        });
    }
    if recognition::is_bipartite(g).is_bipartite() {
        return Ok(HsClassification::Bipartite);
    }
    if spectrum.s() == n - 3 && !spectrum.contains(n - 1) {
        return Ok(HsClassification::MissingOnlyNMinus1);
    }
    Ok(HsClassification::Violation {
        pair: best_pair,
        missing: smallest_missing(Some(n - 1)),
    })
}

/// min{n, ⌈3Δ/2⌉} − 2: the claw-free lower bound on s(G) for Δ ≥ 24.
pub fn theorem1_lower_bound(n: usize, delta: usize) -> Result<usize, SpectrumError> {
    check_bound_args(n, delta)?;
    Ok(n.min((3 * delta).div_ceil(2)) - 2)
}

/// The general hamiltonian lower bound on s(G): Δ − 1 when Δ ≤ n/2,
/// and n/2 + Δ/2 − 3/2 beyond, as an exact rational in halves.
pub fn mw_lower_bound(n: usize, delta: usize) -> Result<HalfInt, SpectrumError> {
    check_bound_args(n, delta)?;
    if 2 * delta <= n {
        Ok(HalfInt::from_int(delta as i64 - 1))
    } else {
        Ok(HalfInt::from_twice((n + delta) as i64 - 3))
    }
}

fn check_bound_args(n: usize, delta: usize) -> Result<(), SpectrumError> {
    if n < 3 || delta < 2 || delta > n - 1 {
        return Err(SpectrumError::BadBoundArgs { n, delta });
    }
    Ok(())
}

/// A rational with denominator 1 or 2, stored as twice its value.
/// Comparisons against integer counts cross-multiply, so no floats are
/// involved anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn from_int(v: i64) -> Self {
        HalfInt { twice: 2 * v }
    }

    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn ceil(self) -> i64 {
        self.twice.div_euclid(2) + self.twice.rem_euclid(2)
    }

    /// s ≥ value, compared exactly.
    pub fn is_met_by(self, s: usize) -> bool {
        2 * s as i64 >= self.twice
    }
}

impl fmt::Display for HalfInt {
    /// Serializes as "p/q" with q ∈ {1, 2}.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}/1", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_graph, ExtremalParams};
    use crate::graph::Graph;

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

    fn k33() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap()
    }

    fn lengths(spec: &Spectrum) -> Vec<usize> {
        spec.lengths().iter().copied().collect()
    }

    #[test]
    fn k4_spectrum() {
        let s = cycle_spectrum_exact(&complete_graph(4)).unwrap();
        assert_eq!(lengths(&s), vec![3, 4]);
        assert!(s.is_pancyclic());
    }

    #[test]
    fn c6_spectrum_is_only_six() {
        let s = cycle_spectrum_exact(&cycle_graph(6)).unwrap();
        assert_eq!(lengths(&s), vec![6]);
        assert!(!s.is_pancyclic());
        assert!(!s.is_subpancyclic());
    }

    #[test]
    fn k33_spectrum_matches_oracle() {
        let g = k33();
        let exact = cycle_spectrum_exact(&g).unwrap();
        let naive = cycle_spectrum_naive(&g).unwrap();
        assert_eq!(exact, naive);
        assert_eq!(lengths(&exact), vec![4, 6]);
        assert!(!exact.is_subpancyclic());
    }

    #[test]
    fn tree_spectrum_is_empty() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = cycle_spectrum_naive(&claw).unwrap();
        assert_eq!(s.s(), 0);
        assert!(s.is_subpancyclic(), "forest convention");
    }

    #[test]
    fn wheel_w5_spectrum() {
        let mut edges: Vec<_> = (1..=5).map(|i| (0, i)).collect();
        edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let g = Graph::from_edges(6, &edges).unwrap();
        let naive = cycle_spectrum_naive(&g).unwrap();
        assert_eq!(lengths(&naive), vec![3, 4, 5, 6]);
        assert_eq!(cycle_spectrum_exact(&g).unwrap(), naive);
    }

    #[test]
    fn oracle_equivalence_exhaustive_to_n5() {
        for n in 0..=5usize {
            let pairs: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            for mask in 0..1usize << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(
                    cycle_spectrum_exact(&g).unwrap(),
                    cycle_spectrum_naive(&g).unwrap(),
                    "mask {mask} at n={n}"
                );
            }
        }
    }

    #[test]
    fn exact_rejects_large_orders() {
        let g = Graph::empty(21).unwrap();
        assert_eq!(
            cycle_spectrum_exact(&g),
            Err(SpectrumError::OrderAboveLimit { n: 21, limit: 20 })
        );
        assert_eq!(
            cycle_spectrum_exact_with_limit(&g, 25),
            Err(SpectrumError::LimitAboveHardCap { limit: 25 })
        );
        assert!(cycle_spectrum_exact_with_limit(&g, 21).is_ok());
    }

    #[test]
    fn extremal_14_4_spectrum_frozen() {
        let ex = extremal_graph(ExtremalParams::new(14, 4).unwrap());
        let s = cycle_spectrum_exact(ex.graph()).unwrap();
        assert_eq!(lengths(&s), vec![3, 12, 13, 14]);
        assert_eq!(s.s(), 4);
        assert_eq!(s.s(), theorem1_lower_bound(14, 4).unwrap());
        assert!(!s.is_pancyclic());
    }

    #[test]
    fn extremal_9_3_spectrum_frozen() {
        let ex = extremal_graph(ExtremalParams::new(9, 3).unwrap());
        let s = cycle_spectrum_naive(ex.graph()).unwrap();
        assert_eq!(lengths(&s), vec![3, 8, 9]);
        assert_eq!(s.s(), theorem1_lower_bound(9, 3).unwrap());
    }

    #[test]
    fn partial_is_sound_and_finds_known_lengths() {
        let g = cycle_graph(30);
        let s = cycle_spectrum_partial(&g, 50, 7);
        assert_eq!(lengths(&s), vec![30], "C30 has only its hamiltonian cycle");

        let ex = extremal_graph(ExtremalParams::new(60, 24).unwrap());
        let s = cycle_spectrum_partial(ex.graph(), 200, 7);
        for l in 3..=13 {
            assert!(s.contains(l), "clique cycles must cover length {l}");
        }
    }

    #[test]
    fn partial_subset_of_exact_and_monotone() {
        let ex = extremal_graph(ExtremalParams::new(16, 6).unwrap());
        let exact = cycle_spectrum_exact(ex.graph()).unwrap();
        let small = cycle_spectrum_partial(ex.graph(), 20, 11);
        let large = cycle_spectrum_partial(ex.graph(), 80, 11);
        assert!(small.is_subset_of(&exact));
        assert!(large.is_subset_of(&exact));
        assert!(small.is_subset_of(&large), "monotone in budget");
    }

    #[test]
    fn pancyclicity_predicates() {
        assert!(is_pancyclic(&complete_graph(5)).unwrap());
        assert!(!is_pancyclic(&cycle_graph(6)).unwrap());
        assert!(!is_subpancyclic(&cycle_graph(6)).unwrap());
        assert!(!is_subpancyclic(&k33()).unwrap());
        let ex = extremal_graph(ExtremalParams::new(14, 4).unwrap());
        assert!(!is_pancyclic(ex.graph()).unwrap());
    }

    #[test]
    fn hakimi_schmeichel_examples() {
        let k6 = complete_graph(6);
        let ham = HamCycle::new(&k6, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(
            check_hakimi_schmeichel(&k6, &ham).unwrap(),
            HsClassification::Pancyclic
        );

        let c6 = cycle_graph(6);
        let ham = HamCycle::new(&c6, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(
            check_hakimi_schmeichel(&c6, &ham).unwrap(),
            HsClassification::NotApplicable { max_degree_sum: 4 }
        );

        let g = k33();
        let ham = HamCycle::new(&g, vec![0, 3, 1, 4, 2, 5]).unwrap();
        assert_eq!(
            check_hakimi_schmeichel(&g, &ham).unwrap(),
            HsClassification::Bipartite
        );
    }

    #[test]
    fn theorem1_bound_values() {
        assert_eq!(theorem1_lower_bound(60, 24).unwrap(), 34);
        assert_eq!(theorem1_lower_bound(14, 4).unwrap(), 4);
        assert_eq!(theorem1_lower_bound(9, 3).unwrap(), 3);
        assert!(theorem1_lower_bound(2, 2).is_err());
        assert!(theorem1_lower_bound(10, 1).is_err());
        assert!(theorem1_lower_bound(10, 10).is_err());
    }

    #[test]
    fn mw_bound_values() {
        let b = mw_lower_bound(10, 6).unwrap();
        assert_eq!(b.twice(), 13);
        assert_eq!(b.to_string(), "13/2");
        assert!(b.is_met_by(7));
        assert!(!b.is_met_by(6));
        assert_eq!(b.ceil(), 7);

        let b = mw_lower_bound(10, 4).unwrap();
        assert_eq!(b.to_string(), "3/1");
        assert!(b.is_met_by(3));
        assert!(!b.is_met_by(2));
    }

    #[test]
    fn bipartite_graphs_have_even_spectra() {
        let s = cycle_spectrum_exact(&k33()).unwrap();
        assert!(s.lengths().iter().all(|l| l % 2 == 0));
        let s = cycle_spectrum_exact(&cycle_graph(8)).unwrap();
        assert!(s.lengths().iter().all(|l| l % 2 == 0));
    }
}
