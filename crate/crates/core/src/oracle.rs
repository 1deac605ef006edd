//! Brute-force ground truth, independent of the constructive machinery:
//! fixed-length cycle search, exhaustive cycle enumeration, girth, BFS
//! distances, structural property checks, and a minimal unsigned-pancake
//! graph.
//!
//! Cycle counting convention: a cycle is a set of vertices with a cyclic
//! adjacency, counted once regardless of start vertex or direction. The
//! `through_identity` figure counts only cycles containing the identity
//! vertex (rank 0); by vertex-transitivity `total * length = through * |V|`.

use crate::error::{Error, Result};
use crate::graph::{self, ExplicitGraph};
use crate::perm::{check_cycle, CycleCheck, GenWord, SignedPerm};
use crate::synthesis::CycleWitness;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

/// Default cap on explicit-graph vertex counts for oracle work.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;
/// Default DFS node budget before giving up with a resource error.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Validates a word as a simple cycle from `start`, reporting the facts.
pub fn is_simple_cycle(start: &SignedPerm, word: &GenWord) -> Result<CycleCheck> {
    check_cycle(start, word)
}

/// Unsigned prefix reversal: the first `i` symbols are reversed, signs
/// untouched. `r_1` is the identity in the unsigned graph and is excluded
/// from its generator set.
pub fn unsigned_apply_reversal(p: &[u8], i: usize) -> Result<Vec<u8>> {
    if i < 1 || i > p.len() {
        return Err(Error::InvalidGenerator {
            i: i as i64,
            n: p.len(),
        });
    }
    let mut out = p.to_vec();
    out[..i].reverse();
    Ok(out)
}

fn unsigned_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut r = 0usize;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

fn unsigned_unrank(n: usize, mut r: usize) -> Vec<u8> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        digits[i] = r % (n - i);
        r /= n - i;
    }
    let mut avail: Vec<u8> = (1..=n as u8).collect();
    digits.into_iter().map(|d| avail.remove(d)).collect()
}

/// Materializes the unsigned pancake graph P_n (generators r_2..r_n).
pub fn build_unsigned_explicit(n: usize, vertex_cap: usize) -> Result<ExplicitGraph> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let count = graph::factorial(n) as usize;
    if count > vertex_cap {
        return Err(Error::ResourceLimit(format!(
            "P_{n} has {count} vertices, over the cap {vertex_cap}"
        )));
    }
    let mut adj = Vec::with_capacity(count);
    for r in 0..count {
        let p = unsigned_unrank(n, r);
        adj.push(
            (2..=n)
                .map(|i| unsigned_rank(&unsigned_apply_reversal(&p, i).expect("in range")) as u32)
                .collect(),
        );
    }
    Ok(ExplicitGraph {
        n,
        adj,
        labels: (2..=n).collect(),
    })
}

/// Materializes BP_n under the oracle vertex cap.
pub fn build_signed_explicit(n: usize, vertex_cap: usize) -> Result<ExplicitGraph> {
    let count = graph::vertex_count(n);
    if count > vertex_cap as u128 {
        return Err(Error::ResourceLimit(format!(
            "BP_{n} has {count} vertices, over the cap {vertex_cap}"
        )));
    }
    graph::build_explicit(n, n)
}

fn bfs_all(g: &ExplicitGraph, src: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    dist[src as usize] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(v) = q.pop_front() {
        for &u in &g.adj[v as usize] {
            if dist[u as usize] == u32::MAX {
                dist[u as usize] = dist[v as usize] + 1;
                q.push_back(u);
            }
        }
    }
    dist
}

/// Length of the shortest cycle in the graph.
pub fn girth(g: &ExplicitGraph) -> Option<usize> {
    let mut best = usize::MAX;
    for s in 0..g.vertex_count() as u32 {
        // BFS from s; a non-tree edge closing at depths d(u), d(w) bounds a
        // cycle of length d(u)+d(w)+1 through s. The minimum over all roots
        // is exact.
        let mut dist = vec![u32::MAX; g.vertex_count()];
        let mut parent = vec![u32::MAX; g.vertex_count()];
        dist[s as usize] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            if (dist[v as usize] as usize) * 2 >= best {
                continue;
            }
            for &u in &g.adj[v as usize] {
                if dist[u as usize] == u32::MAX {
                    dist[u as usize] = dist[v as usize] + 1;
                    parent[u as usize] = v;
                    q.push_back(u);
                } else if parent[v as usize] != u {
                    best = best.min((dist[u as usize] + dist[v as usize] + 1) as usize);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Shortest-path distance between two vertices of BP_n via implicit BFS.
pub fn bfs_distance(u: &SignedPerm, v: &SignedPerm, vertex_cap: usize) -> Result<usize> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    if graph::vertex_count(u.n()) > vertex_cap as u128 {
        return Err(Error::ResourceLimit(format!(
            "BFS over BP_{} exceeds the vertex cap {vertex_cap}",
            u.n()
        )));
    }
    if u == v {
        return Ok(0);
    }
    let target = graph::rank(v);
    let mut dist = std::collections::HashMap::new();
    dist.insert(graph::rank(u), 0usize);
    let mut q = VecDeque::from([u.clone()]);
    while let Some(w) = q.pop_front() {
        let d = dist[&graph::rank(&w)];
        for nb in graph::neighbors(&w) {
            let r = graph::rank(&nb);
            if r == target {
                return Ok(d + 1);
            }
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(r) {
                e.insert(d + 1);
                q.push_back(nb);
            }
        }
    }
    Err(Error::Construction("graph is connected; unreachable".into()))
}

/// Deterministic DFS for a simple cycle of exact length `len` through the
/// identity of BP_n. Neighbors are tried in ascending generator order, so
/// the returned witness is stable. Exploits vertex-transitivity: a cycle of
/// a given length exists iff one exists through the identity.
pub fn find_cycle_dfs(n: usize, len: u64, node_budget: u64) -> Result<Option<CycleWitness>> {
    if n > 4 {
        return Err(Error::ResourceLimit(format!(
            "exhaustive cycle search is capped at n <= 4 (requested n = {n})"
        )));
    }
    if n < 2 || len < 3 || len > graph::vertex_count(n) as u64 {
        return Ok(None);
    }
    let g = graph::build_explicit(n, 4)?;
    let dist = bfs_all(&g, 0);
    let len = len as usize;
    let mut visited = vec![false; g.vertex_count()];
    visited[0] = true;
    let mut letters: Vec<u8> = Vec::with_capacity(len);
    let mut budget = node_budget;
    let found = dfs_exact(&g, &dist, 0, len, &mut visited, &mut letters, &mut budget)?;
    if !found {
        return Ok(None);
    }
    let word = GenWord::new(letters, n)?;
    let start = SignedPerm::identity(n)?;
    debug_assert!(check_cycle(&start, &word)?.is_simple_cycle());
    Ok(Some(CycleWitness::new_validated(start, word)?))
}

fn dfs_exact(
    g: &ExplicitGraph,
    dist: &[u32],
    v: u32,
    remaining: usize,
    visited: &mut [bool],
    letters: &mut Vec<u8>,
    budget: &mut u64,
) -> Result<bool> {
    if *budget == 0 {
        return Err(Error::ResourceLimit(
            "cycle search exceeded its node budget".into(),
        ));
    }
    *budget -= 1;
    for (j, &u) in g.adj[v as usize].iter().enumerate() {
        let label = g.labels[j] as u8;
        if u == 0 {
            if remaining == 1 {
                letters.push(label);
                return Ok(true);
            }
            continue;
        }
        if remaining <= 1 || visited[u as usize] || dist[u as usize] as usize > remaining - 1 {
            continue;
        }
        visited[u as usize] = true;
        letters.push(label);
        if dfs_exact(g, dist, u, remaining - 1, visited, letters, budget)? {
            return Ok(true);
        }
        letters.pop();
        visited[u as usize] = false;
    }
    Ok(false)
}

/// Result of exhaustive fixed-length cycle enumeration.
#[derive(Debug, Clone)]
pub struct CycleEnumeration {
    pub length: usize,
    /// Distinct cycles, each counted once (vertex set with cyclic
    /// adjacency; rotations and directions quotiented).
    pub total: u64,
    /// Cycles through the identity vertex (rank 0). This anchored figure is
    /// what a DFS rooted at the identity reports.
    pub through_identity: u64,
    /// Sorted vertex sets, when collection was requested.
    pub cycles: Option<Vec<Vec<u32>>>,
}

/// Counts all simple cycles of exact length `len`. Each cycle is found once
/// from its minimum-rank vertex, with the two traversal directions
/// deduplicated by requiring the first step to be smaller than the last.
pub fn enumerate_cycles_of_length(
    g: &ExplicitGraph,
    len: usize,
    collect: bool,
    node_budget: u64,
) -> Result<CycleEnumeration> {
    if len < 3 || len > g.vertex_count() {
        return Ok(CycleEnumeration {
            length: len,
            total: 0,
            through_identity: 0,
            cycles: collect.then(Vec::new),
        });
    }
    let mut total = 0u64;
    let mut through_identity = 0u64;
    let mut cycles = collect.then(Vec::new);
    let mut budget = node_budget;
    let mut path: Vec<u32> = Vec::with_capacity(len);
    let mut visited = vec![false; g.vertex_count()];
    for anchor in 0..g.vertex_count() as u32 {
        visited[anchor as usize] = true;
        path.push(anchor);
        enumerate_from(
            g,
            anchor,
            anchor,
            len,
            &mut visited,
            &mut path,
            &mut budget,
            &mut |path| {
                total += 1;
                if anchor == 0 {
                    through_identity += 1;
                }
                if let Some(list) = cycles.as_mut() {
                    let mut c = path.to_vec();
                    c.sort_unstable();
                    list.push(c);
                }
            },
        )?;
        path.pop();
        visited[anchor as usize] = false;
    }
    Ok(CycleEnumeration {
        length: len,
        total,
        through_identity,
        cycles,
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate_from(
    g: &ExplicitGraph,
    anchor: u32,
    v: u32,
    remaining: usize,
    visited: &mut [bool],
    path: &mut Vec<u32>,
    budget: &mut u64,
    emit: &mut impl FnMut(&[u32]),
) -> Result<()> {
    if *budget == 0 {
        return Err(Error::ResourceLimit(
            "cycle enumeration exceeded its node budget".into(),
        ));
    }
    *budget -= 1;
    for &u in &g.adj[v as usize] {
        if u == anchor {
            // close only in the canonical direction: first step < last step
            if remaining == 1 && path.len() >= 3 && path[1] < *path.last().expect("nonempty") {
                emit(path);
            }
            continue;
        }
        if remaining <= 1 || u < anchor || visited[u as usize] {
            continue;
        }
        visited[u as usize] = true;
        path.push(u);
        enumerate_from(g, anchor, u, remaining - 1, visited, path, budget, emit)?;
        path.pop();
        visited[u as usize] = false;
    }
    Ok(())
}

/// One verified structural property.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub checked: u64,
    pub passed: bool,
    pub detail: String,
}

/// Report over the distance/copy lemmas used by the 8-cycle classification.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub n: usize,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn total_checked(&self) -> u64 {
        self.checks.iter().map(|c| c.checked).sum()
    }
}

/// Verifies the structural facts behind the 8-cycle classification:
/// the last symbol changes absolute value under r_n; the distance-3
/// same-first-symbol characterization; block swaps are at distance >= 3;
/// and close vertices of one copy land in distinct copies under r_n.
/// Exhaustive for n = 3, exhaustive-or-sampled for n = 4.
pub fn check_lemma_properties(n: usize, min_samples: u64) -> Result<PropertyReport> {
    if !(n == 3 || n == 4) {
        return Err(Error::ResourceLimit(
            "property suite runs at n = 3 (exhaustive) or n = 4".into(),
        ));
    }
    let g = graph::build_explicit(n, 4)?;
    let count = g.vertex_count();
    let all_dist: Vec<Vec<u32>> = (0..count as u32).map(|s| bfs_all(&g, s)).collect();
    let perms: Vec<SignedPerm> = (0..count)
        .map(|r| graph::unrank(n, r as u128).expect("rank in range"))
        .collect();
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x8c1e5);

    // |last(w)| != |last(w r_n)| for every vertex
    {
        let mut checked = 0;
        let mut passed = true;
        for w in &perms {
            let flipped = w.apply_reversal(n)?;
            if w.last().unsigned_abs() == flipped.last().unsigned_abs() {
                passed = false;
            }
            checked += 1;
        }
        checks.push(PropertyCheck {
            name: "copy-abs-changes-under-full-flip",
            checked,
            passed,
            detail: format!("all {checked} vertices"),
        });
    }

    // d(pi,tau)=3 with equal first symbols iff tau = pi r_j r_i r_j, i<j
    {
        let mut checked = 0;
        let mut passed = true;
        for (pr, pi) in perms.iter().enumerate() {
            let mut expected: std::collections::BTreeSet<u128> = std::collections::BTreeSet::new();
            for j in 2..=n {
                for i in 1..j {
                    let tau = pi.apply_reversal(j)?.apply_reversal(i)?.apply_reversal(j)?;
                    expected.insert(graph::rank(&tau));
                }
            }
            for (tr, tau) in perms.iter().enumerate() {
                if tau.window()[0] != pi.window()[0] || tr == pr {
                    continue;
                }
                let d3 = all_dist[pr][tr] == 3;
                if d3 != expected.contains(&graph::rank(tau)) {
                    passed = false;
                }
                checked += 1;
            }
        }
        checks.push(PropertyCheck {
            name: "distance-3-same-head-is-middle-block-flip",
            checked,
            passed,
            detail: "all same-head vertex pairs".into(),
        });
    }

    // block swap [ABC] -> [BAC] with nonempty blocks is at distance >= 3
    {
        let mut checked = 0;
        let mut passed = true;
        for (pr, pi) in perms.iter().enumerate() {
            for alen in 1..n {
                for blen in 1..n - alen {
                    let win = pi.window();
                    let mut swapped = Vec::with_capacity(n);
                    swapped.extend_from_slice(&win[alen..alen + blen]);
                    swapped.extend_from_slice(&win[..alen]);
                    swapped.extend_from_slice(&win[alen + blen..]);
                    let tau = SignedPerm::new(swapped)?;
                    if all_dist[pr][graph::rank(&tau) as usize] < 3 {
                        passed = false;
                    }
                    checked += 1;
                }
            }
        }
        checks.push(PropertyCheck {
            name: "block-swap-distance-at-least-3",
            checked,
            passed,
            detail: "all vertices x nonempty block decompositions".into(),
        });
    }

    // same-copy vertices at distance <= 2 split into distinct copies
    // under the full flip
    {
        let mut checked = 0;
        let mut passed = true;
        if n == 3 {
            for (ar, a) in perms.iter().enumerate() {
                for (br, b) in perms.iter().enumerate() {
                    if ar == br || a.last() != b.last() || all_dist[ar][br] > 2 {
                        continue;
                    }
                    let ca = graph::copy_of(&a.apply_reversal(n)?)?;
                    let cb = graph::copy_of(&b.apply_reversal(n)?)?;
                    if ca == cb {
                        passed = false;
                    }
                    checked += 1;
                }
            }
        } else {
            while checked < min_samples {
                let a = &perms[rng.gen_range(0..count)];
                let i = rng.gen_range(1..n);
                let b = if rng.gen_bool(0.5) {
                    a.apply_reversal(i)?
                } else {
                    let mut j = rng.gen_range(1..n);
                    while j == i {
                        j = rng.gen_range(1..n);
                    }
                    a.apply_reversal(i)?.apply_reversal(j)?
                };
                if b == *a {
                    continue;
                }
                debug_assert_eq!(a.last(), b.last());
                let ca = graph::copy_of(&a.apply_reversal(n)?)?;
                let cb = graph::copy_of(&b.apply_reversal(n)?)?;
                if ca == cb {
                    passed = false;
                }
                checked += 1;
            }
        }
        checks.push(PropertyCheck {
            name: "close-pairs-split-into-distinct-copies",
            checked,
            passed,
            detail: if n == 3 {
                "all same-copy pairs at distance <= 2".into()
            } else {
                format!("{checked} sampled same-copy pairs at distance <= 2")
            },
        });
    }

    // top up with random re-checks of the first property so the sampled
    // run size is explicit for n = 4
    if n == 4 {
        let mut checked = 0;
        let mut passed = true;
        while checked < min_samples {
            let w = &perms[rng.gen_range(0..count)];
            let flipped = w.apply_reversal(n)?;
            if w.last().unsigned_abs() == flipped.last().unsigned_abs() {
                passed = false;
            }
            checked += 1;
        }
        checks.push(PropertyCheck {
            name: "copy-abs-changes-under-full-flip-sampled",
            checked,
            passed,
            detail: format!("{checked} sampled vertices"),
        });
    }

    Ok(PropertyReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Corpus;

    #[test]
    fn validates_corpus_23_cycle() {
        let e = Corpus::builtin().lookup(3, 23).unwrap();
        let c = is_simple_cycle(&SignedPerm::identity(3).unwrap(), &e.word).unwrap();
        assert!(c.is_simple_cycle());
        assert_eq!(c.length, 23);
    }

    #[test]
    fn rejects_immediate_backtrack() {
        let word = GenWord::parse("11", 3).unwrap();
        let c = is_simple_cycle(&SignedPerm::identity(3).unwrap(), &word).unwrap();
        assert!(!c.simple);
        assert_eq!(c.first_violation, Some(1));
    }

    #[test]
    fn unsigned_reversal_basics() {
        assert_eq!(
            unsigned_apply_reversal(&[1, 2, 3, 4], 4).unwrap(),
            vec![4, 3, 2, 1]
        );
        assert_eq!(
            unsigned_apply_reversal(&[1, 2, 3, 4], 2).unwrap(),
            vec![2, 1, 3, 4]
        );
        assert!(unsigned_apply_reversal(&[1, 2], 3).is_err());
    }

    #[test]
    fn girth_values() {
        let bp3 = graph::build_explicit(3, 4).unwrap();
        assert_eq!(girth(&bp3), Some(8));
        let p4 = build_unsigned_explicit(4, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(girth(&p4), Some(6));
    }

    #[test]
    fn bfs_distance_basics() {
        let e = SignedPerm::identity(3).unwrap();
        assert_eq!(bfs_distance(&e, &e, DEFAULT_VERTEX_CAP).unwrap(), 0);
        let nb = e.apply_reversal(2).unwrap();
        assert_eq!(bfs_distance(&e, &nb, DEFAULT_VERTEX_CAP).unwrap(), 1);
        // block swap [1|2|3] -> [2 1 3] sits at distance exactly 3
        let t = SignedPerm::parse("[2 1 3]").unwrap();
        assert_eq!(bfs_distance(&e, &t, DEFAULT_VERTEX_CAP).unwrap(), 3);
    }

    #[test]
    fn dfs_finds_girth_cycle_and_nothing_below() {
        for len in 3..8 {
            assert!(find_cycle_dfs(3, len, DEFAULT_NODE_BUDGET)
                .unwrap()
                .is_none());
        }
        let w = find_cycle_dfs(3, 8, DEFAULT_NODE_BUDGET).unwrap().unwrap();
        assert_eq!(w.word.len(), 8);
    }

    #[test]
    fn enumerate_bp2_single_8_cycle() {
        let g = graph::build_explicit(2, 4).unwrap();
        let e = enumerate_cycles_of_length(&g, 8, true, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(e.total, 1);
        assert_eq!(e.through_identity, 1);
        assert_eq!(e.cycles.unwrap()[0].len(), 8);
    }

    #[test]
    fn property_suite_exhaustive_n3() {
        let report = check_lemma_properties(3, 0).unwrap();
        assert!(report.all_passed(), "{:#?}", report.checks);
    }
}
