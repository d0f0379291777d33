use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::witness::{CycleWitness, PathWitness};

/// Default size cap for the exact solvers.
pub const DEFAULT_EXACT_THRESHOLD: usize = 18;

/// Hard cap imposed by the bitmask representation.
pub const EXACT_HARD_CAP: usize = 63;

/// Result of an exact longest-cycle query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleSearch {
    Cycle(CycleWitness),
    Acyclic,
}

impl CycleSearch {
    pub fn cycle(&self) -> Option<&CycleWitness> {
        match self {
            CycleSearch::Cycle(c) => Some(c),
            CycleSearch::Acyclic => None,
        }
    }

    pub fn length(&self) -> usize {
        self.cycle().map_or(0, |c| c.len())
    }
}

fn mask_of(n: usize) -> u64 {
    debug_assert!(n <= EXACT_HARD_CAP);
    (1u64 << n) - 1
}

/// Graph indexed into 0..n with bitmask adjacency, for the solvers.
pub(crate) struct Indexed {
    pub(crate) labels: Vec<Vertex>,
    pub(crate) adj: Vec<u64>,
}

impl Indexed {
    pub(crate) fn new(g: &Graph) -> Indexed {
        let labels: Vec<Vertex> = g.vertices().collect();
        let index: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![0u64; labels.len()];
        for (u, v) in g.edges() {
            let (i, j) = (index[&u], index[&v]);
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Indexed { labels, adj }
    }

    pub(crate) fn n(&self) -> usize {
        self.labels.len()
    }

    pub(crate) fn reachable(&self, from: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & allowed & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }
}

fn check_threshold(g: &Graph, threshold: usize) -> Result<()> {
    let cap = threshold.min(EXACT_HARD_CAP);
    if g.n() > cap {
        return Err(Error::InstanceTooLarge { n: g.n(), threshold: cap });
    }
    Ok(())
}

/// Usable vertex set for extending a path at `cur`: reachable through the
/// available vertices, with vertices of too-low degree peeled off. `anchors`
/// are vertices allowed to end up with a single usable neighbor.
fn prune_usable(ix: &Indexed, cur: usize, avail: u64, anchors: u64) -> u64 {
    let mut usable = ix.reachable(cur, avail) & avail;
    loop {
        let mut removed = false;
        let mut u = usable & !anchors;
        while u != 0 {
            let v = u.trailing_zeros() as usize;
            u &= u - 1;
            if (ix.adj[v] & (usable | (1 << cur) | anchors)).count_ones() < 2 {
                usable &= !(1 << v);
                removed = true;
            }
        }
        if !removed {
            return usable;
        }
        usable = ix.reachable(cur, usable) & usable;
    }
}

/// Exact longest cycle. Deterministic: among the longest cycles, the
/// lexicographically smallest canonical vertex sequence is returned (a second
/// bounded search pinned to the optimal length finds it).
pub fn exact_longest_cycle(g: &Graph, threshold: usize) -> Result<CycleSearch> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    check_threshold(g, threshold)?;
    let ix = Indexed::new(g);
    let n = ix.n();

    let mut best_len = 0usize;
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for v0 in 0..n {
        let allowed = (!0u64 << v0) & mask_of(n);
        if (ix.adj[v0] & allowed).count_ones() < 2 {
            continue;
        }
        path.clear();
        path.push(v0);
        dfs_cycle_len(&ix, v0, allowed, 1 << v0, &mut path, &mut best_len);
    }
    if best_len == 0 {
        return Ok(CycleSearch::Acyclic);
    }

    // Second pass: first cycle of length best_len in ascending-label DFS
    // order is the lexicographically smallest.
    for v0 in 0..n {
        let allowed = (!0u64 << v0) & mask_of(n);
        path.clear();
        path.push(v0);
        if let Some(found) = dfs_cycle_pinned(&ix, v0, allowed, 1 << v0, &mut path, best_len) {
            let verts: Vec<Vertex> = found.iter().map(|&i| ix.labels[i]).collect();
            return Ok(CycleSearch::Cycle(CycleWitness::in_graph(g, verts)?));
        }
    }
    Err(Error::Internal("cycle of optimal length vanished in second pass".into()))
}

fn dfs_cycle_len(
    ix: &Indexed,
    v0: usize,
    allowed: u64,
    visited: u64,
    path: &mut Vec<usize>,
    best_len: &mut usize,
) {
    let cur = *path.last().unwrap();
    if path.len() >= 3 && ix.adj[cur] & (1 << v0) != 0 && path.len() > *best_len {
        *best_len = path.len();
    }
    let avail = allowed & !visited;
    if avail == 0 {
        return;
    }
    let usable = prune_usable(ix, cur, avail, 1 << v0);
    let closers = usable | (1 << cur);
    let mut can_close = false;
    let mut u = closers;
    while u != 0 {
        let v = u.trailing_zeros() as usize;
        u &= u - 1;
        if ix.adj[v] & (1 << v0) != 0 {
            can_close = true;
            break;
        }
    }
    if !can_close {
        return;
    }
    if path.len() + usable.count_ones() as usize <= *best_len {
        return;
    }
    let mut cand = ix.adj[cur] & usable;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        dfs_cycle_len(ix, v0, allowed, visited | (1 << v), path, best_len);
        path.pop();
    }
}

fn dfs_cycle_pinned(
    ix: &Indexed,
    v0: usize,
    allowed: u64,
    visited: u64,
    path: &mut Vec<usize>,
    target: usize,
) -> Option<Vec<usize>> {
    let cur = *path.last().unwrap();
    if path.len() == target {
        if ix.adj[cur] & (1 << v0) != 0 {
            return Some(path.clone());
        }
        return None;
    }
    let avail = allowed & !visited;
    let usable = prune_usable(ix, cur, avail, 1 << v0);
    if path.len() + (usable.count_ones() as usize) < target {
        return None;
    }
    let mut cand = ix.adj[cur] & usable;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        let res = dfs_cycle_pinned(ix, v0, allowed, visited | (1 << v), path, target);
        path.pop();
        if res.is_some() {
            return res;
        }
    }
    None
}

/// Exact longest (s,t)-path; among the longest, the lexicographically
/// smallest sequence read from s.
pub fn exact_longest_st_path(g: &Graph, s: Vertex, t: Vertex, threshold: usize) -> Result<PathWitness> {
    if s == t {
        return Err(Error::Precondition("s and t must differ".into()));
    }
    if !g.contains_vertex(s) {
        return Err(Error::MissingVertex(s));
    }
    if !g.contains_vertex(t) {
        return Err(Error::MissingVertex(t));
    }
    check_threshold(g, threshold)?;
    let ix = Indexed::new(g);
    let si = ix.labels.iter().position(|&v| v == s).unwrap();
    let ti = ix.labels.iter().position(|&v| v == t).unwrap();

    let mut best_len: Option<usize> = None;
    let mut path = vec![si];
    dfs_st_len(&ix, ti, 1 << si, &mut path, &mut best_len);
    let Some(best_len) = best_len else {
        return Err(Error::DisconnectedPair(s, t));
    };
    path.clear();
    path.push(si);
    let found = dfs_st_pinned(&ix, ti, 1 << si, &mut path, best_len + 1)
        .ok_or_else(|| Error::Internal("st-path of optimal length vanished in second pass".into()))?;
    let verts: Vec<Vertex> = found.iter().map(|&i| ix.labels[i]).collect();
    PathWitness::in_graph(g, verts)
}

fn dfs_st_len(ix: &Indexed, ti: usize, visited: u64, path: &mut Vec<usize>, best: &mut Option<usize>) {
    let cur = *path.last().unwrap();
    if cur == ti {
        let len = path.len() - 1;
        if best.map_or(true, |b| len > b) {
            *best = Some(len);
        }
        return;
    }
    let avail = mask_of(ix.n()) & !visited;
    let usable = prune_usable(ix, cur, avail, 1 << ti);
    if usable & (1 << ti) == 0 {
        return;
    }
    if let Some(b) = *best {
        if path.len() + usable.count_ones() as usize <= b + 1 {
            return;
        }
    }
    let mut cand = ix.adj[cur] & usable;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        dfs_st_len(ix, ti, visited | (1 << v), path, best);
        path.pop();
    }
}

// target counts vertices, not edges.
fn dfs_st_pinned(
    ix: &Indexed,
    ti: usize,
    visited: u64,
    path: &mut Vec<usize>,
    target: usize,
) -> Option<Vec<usize>> {
    let cur = *path.last().unwrap();
    if cur == ti {
        return (path.len() == target).then(|| path.clone());
    }
    if path.len() >= target {
        return None;
    }
    let avail = mask_of(ix.n()) & !visited;
    let usable = prune_usable(ix, cur, avail, 1 << ti);
    if usable & (1 << ti) == 0 || path.len() + (usable.count_ones() as usize) < target {
        return None;
    }
    let mut cand = ix.adj[cur] & usable;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        let res = dfs_st_pinned(ix, ti, visited | (1 << v), path, target);
        path.pop();
        if res.is_some() {
            return res;
        }
    }
    None
}

/// Exact longest path with free endpoints (used for report optima).
pub fn exact_longest_path(g: &Graph, threshold: usize) -> Result<PathWitness> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    check_threshold(g, threshold)?;
    let ix = Indexed::new(g);
    let n = ix.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut path = vec![s];
        dfs_free_path(&ix, 1 << s, &mut path, &mut best);
    }
    let p = best.expect("nonempty graph has a one-vertex path");
    let verts: Vec<Vertex> = p.iter().map(|&i| ix.labels[i]).collect();
    PathWitness::in_graph(g, verts)
}

fn dfs_free_path(ix: &Indexed, visited: u64, path: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
    let cur = *path.last().unwrap();
    if best.as_ref().map_or(true, |b| path.len() > b.len()) {
        *best = Some(path.clone());
    }
    let avail = mask_of(ix.n()) & !visited;
    let usable = ix.reachable(cur, avail) & avail;
    if path.len() + usable.count_ones() as usize <= best.as_ref().map_or(0, |b| b.len()) {
        return;
    }
    let mut cand = ix.adj[cur] & usable;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        dfs_free_path(ix, visited | (1 << v), path, best);
        path.pop();
    }
}

/// Independent brute-force solvers with a different enumeration order
/// (bitmask dynamic programming and plain recursion), used to cross-check the
/// branch-and-bound solvers. Kept deliberately separate from the production
/// search path.
pub mod crosscheck {
    use super::*;
    use std::collections::BTreeSet;

    /// Longest (s,t)-path length via DP over (mask, endpoint); None if t is
    /// unreachable from s.
    pub fn longest_st_path_len(g: &Graph, s: Vertex, t: Vertex) -> Option<usize> {
        let ix = Indexed::new(g);
        let n = ix.n();
        assert!(n <= 20, "crosscheck DP is for small instances");
        let si = ix.labels.iter().position(|&v| v == s)?;
        let ti = ix.labels.iter().position(|&v| v == t)?;
        let size = 1usize << n;
        let mut dp = vec![0u64; size]; // dp[mask] = endpoints of s-paths covering mask
        dp[1 << si] = 1 << si;
        let mut best: Option<usize> = None;
        for mask in 0..size {
            let ends = dp[mask];
            if ends == 0 {
                continue;
            }
            if ends & (1 << ti) != 0 {
                let len = mask.count_ones() as usize - 1;
                if best.map_or(true, |b| len > b) {
                    best = Some(len);
                }
            }
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut ext = ix.adj[v] & !(mask as u64);
                while ext != 0 {
                    let u = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    dp[mask | (1 << u)] |= 1 << u;
                }
            }
        }
        best
    }

    /// Longest cycle length via anchored DP; 0 means acyclic.
    pub fn longest_cycle_len(g: &Graph) -> usize {
        let ix = Indexed::new(g);
        let n = ix.n();
        assert!(n <= 20, "crosscheck DP is for small instances");
        let mut best = 0usize;
        for v0 in 0..n {
            let shifted = n - v0;
            let size = 1usize << shifted;
            let mut dp = vec![0u64; size]; // local masks over v0..n-1
            dp[1] = 1;
            for mask in 1..size {
                let ends = dp[mask];
                if mask & 1 == 0 || ends == 0 {
                    continue;
                }
                let mut e = ends;
                while e != 0 {
                    let v_local = e.trailing_zeros() as usize;
                    e &= e - 1;
                    let v = v_local + v0;
                    if mask.count_ones() >= 3 && ix.adj[v] & (1 << v0) != 0 {
                        let len = mask.count_ones() as usize;
                        if len > best {
                            best = len;
                        }
                    }
                    let mut ext = ix.adj[v] >> v0;
                    ext &= !(mask as u64);
                    while ext != 0 {
                        let u_local = ext.trailing_zeros() as usize;
                        ext &= ext - 1;
                        dp[mask | (1 << u_local)] |= 1 << u_local;
                    }
                }
            }
        }
        best
    }

    /// Exhaustive maximum total length over vertex-disjoint path pairs, one
    /// per pairing of A-endpoints to B-endpoints; None if no pair exists.
    pub fn max_total_disjoint_pair(
        g: &Graph,
        pair_a: (Vertex, Vertex),
        pair_b: (Vertex, Vertex),
    ) -> Option<usize> {
        let mut best: Option<usize> = None;
        let (a1, a2) = pair_a;
        let (b1, b2) = pair_b;
        for (x1, y1, x2, y2) in [(a1, b1, a2, b2), (a1, b2, a2, b1)] {
            let mut p1 = vec![x1];
            let mut seen1 = BTreeSet::from([x1]);
            enum_paths(g, y1, &mut p1, &mut seen1, &mut |path1, used| {
                if used.contains(&x2) || used.contains(&y2) {
                    return;
                }
                let len1 = path1.len() - 1;
                let mut p2 = vec![x2];
                let mut seen2 = used.clone();
                seen2.insert(x2);
                enum_paths(g, y2, &mut p2, &mut seen2, &mut |path2, _| {
                    let total = len1 + path2.len() - 1;
                    if best.map_or(true, |b| total > b) {
                        best = Some(total);
                    }
                });
            });
        }
        best
    }

    fn enum_paths(
        g: &Graph,
        target: Vertex,
        path: &mut Vec<Vertex>,
        seen: &mut BTreeSet<Vertex>,
        f: &mut impl FnMut(&[Vertex], &BTreeSet<Vertex>),
    ) {
        let cur = *path.last().unwrap();
        if cur == target {
            f(path, seen);
            return;
        }
        let nbrs: Vec<Vertex> = match g.neighbors(cur) {
            Ok(set) => set.iter().copied().collect(),
            Err(_) => return,
        };
        for u in nbrs {
            if seen.contains(&u) {
                continue;
            }
            path.push(u);
            seen.insert(u);
            enum_paths(g, target, path, seen, f);
            path.pop();
            seen.remove(&u);
        }
    }

    /// All simple (s,t)-paths of a small graph, for exhaustive property tests.
    pub fn all_st_paths(g: &Graph, s: Vertex, t: Vertex) -> Vec<PathWitness> {
        let mut out = Vec::new();
        if !g.contains_vertex(s) || !g.contains_vertex(t) || s == t {
            return out;
        }
        let mut path = vec![s];
        let mut seen = BTreeSet::from([s]);
        enum_paths(g, t, &mut path, &mut seen, &mut |p, _| {
            out.push(PathWitness::new(p.to_vec()).unwrap());
        });
        out
    }

    /// All cycles of a small graph, canonicalized and deduplicated.
    pub fn all_cycles(g: &Graph) -> Vec<CycleWitness> {
        let mut out: BTreeSet<CycleWitness> = BTreeSet::new();
        let vs: Vec<Vertex> = g.vertices().collect();
        for &v0 in &vs {
            let mut path = vec![v0];
            let mut seen = BTreeSet::from([v0]);
            cycle_enum(g, v0, &mut path, &mut seen, &mut out);
        }
        out.into_iter().collect()
    }

    fn cycle_enum(
        g: &Graph,
        v0: Vertex,
        path: &mut Vec<Vertex>,
        seen: &mut BTreeSet<Vertex>,
        out: &mut BTreeSet<CycleWitness>,
    ) {
        let cur = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(cur, v0) {
            out.insert(CycleWitness::new(path.clone()).unwrap());
        }
        let nbrs: Vec<Vertex> = g.neighbors(cur).map(|s| s.iter().copied().collect()).unwrap_or_default();
        for u in nbrs {
            if u <= v0 || seen.contains(&u) {
                continue;
            }
            path.push(u);
            seen.insert(u);
            cycle_enum(g, v0, path, seen, out);
            path.pop();
            seen.remove(&u);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_hamiltonian() {
        let res = exact_longest_cycle(&fixtures::complete(4), DEFAULT_EXACT_THRESHOLD).unwrap();
        assert_eq!(res.length(), 4);
    }

    #[test]
    fn tree_acyclic() {
        let res = exact_longest_cycle(&fixtures::path_graph(5), DEFAULT_EXACT_THRESHOLD).unwrap();
        assert_eq!(res, CycleSearch::Acyclic);
    }

    #[test]
    fn petersen_longest_cycle_nine() {
        let res = exact_longest_cycle(&fixtures::petersen(), DEFAULT_EXACT_THRESHOLD).unwrap();
        assert_eq!(res.length(), 9);
        assert_eq!(crosscheck::longest_cycle_len(&fixtures::petersen()), 9);
    }

    #[test]
    fn st_path_basics() {
        let g = fixtures::complete(4);
        let p = exact_longest_st_path(&g, 1, 2, DEFAULT_EXACT_THRESHOLD).unwrap();
        assert_eq!(p.len(), 3);
        let g = fixtures::path_graph(3);
        let p = exact_longest_st_path(&g, 1, 3, DEFAULT_EXACT_THRESHOLD).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn petersen_st_paths_computed() {
        // Computed, not assumed. Adjacent endpoints cap at 8: a Hamiltonian
        // path between adjacent s,t plus the edge st would be a Hamiltonian
        // cycle, and Petersen has none. Non-adjacent pairs reach 9.
        let g = fixtures::petersen();
        let p = exact_longest_st_path(&g, 1, 2, DEFAULT_EXACT_THRESHOLD).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(crosscheck::longest_st_path_len(&g, 1, 2), Some(8));
        let p = exact_longest_st_path(&g, 1, 3, DEFAULT_EXACT_THRESHOLD).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(crosscheck::longest_st_path_len(&g, 1, 3), Some(9));
    }

    #[test]
    fn threshold_enforced() {
        let g = fixtures::complete(6);
        let err = exact_longest_cycle(&g, 5).unwrap_err();
        assert!(matches!(err, Error::InstanceTooLarge { n: 6, threshold: 5 }));
    }

    #[test]
    fn lexicographic_tie_break() {
        let g = fixtures::cycle(6);
        let a = exact_longest_cycle(&g, 18).unwrap();
        assert_eq!(a.cycle().unwrap().vertices(), &[1, 2, 3, 4, 5, 6]);
        // K4 has several longest (1,2)-paths; 1-3-4-2 is lexicographically first.
        let p = exact_longest_st_path(&fixtures::complete(4), 1, 2, 18).unwrap();
        assert_eq!(p.vertices(), &[1, 3, 4, 2]);
    }

    #[test]
    fn disconnected_pair_errors() {
        let g = Graph::new([1, 2, 3, 4], [(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            exact_longest_st_path(&g, 1, 3, 18),
            Err(Error::DisconnectedPair(1, 3))
        );
    }

    #[test]
    fn bb_matches_dp_on_fixtures() {
        for g in [
            fixtures::petersen(),
            fixtures::complete(6),
            fixtures::cycle(7),
            fixtures::barbell(3, 1),
            fixtures::complete_bipartite(3, 4),
        ] {
            let bb = exact_longest_cycle(&g, 18).unwrap().length();
            assert_eq!(bb, crosscheck::longest_cycle_len(&g));
        }
    }
}
