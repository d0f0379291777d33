use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::exact::exact_longest_st_path;
use crate::graph::{Graph, Vertex};
use crate::witness::PathWitness;

/// Below this size the min-total query is answered by exhaustive
/// maximization; above it, by the bounded existence search.
const EXACT_PAIR_N: usize = 14;

/// Answer to a two-disjoint-paths query. `No` is exact: no qualifying pair
/// exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisjointPair {
    Found(PathWitness, PathWitness),
    No,
}

impl DisjointPair {
    pub fn found(&self) -> Option<(&PathWitness, &PathWitness)> {
        match self {
            DisjointPair::Found(a, b) => Some((a, b)),
            DisjointPair::No => None,
        }
    }

    pub fn total(&self) -> Option<usize> {
        self.found().map(|(a, b)| a.len() + b.len())
    }
}

/// Two vertex-disjoint paths, one per pairing of A-endpoints to B-endpoints,
/// of total length at least `k`; or `No` iff no such pair exists. Paths of
/// length zero are legal where an A-endpoint coincides with a B-endpoint.
///
/// Small instances are answered by exhaustive maximization (the returned pair
/// has maximum total length); larger ones by a bounded exact existence search
/// that returns the first qualifying pair in deterministic order.
pub fn two_disjoint_paths_min_total(
    g: &Graph,
    pair_a: (Vertex, Vertex),
    pair_b: (Vertex, Vertex),
    k: usize,
) -> Result<DisjointPair> {
    let (a1, a2) = pair_a;
    let (b1, b2) = pair_b;
    for v in [a1, a2, b1, b2] {
        if !g.contains_vertex(v) {
            return Err(Error::MissingVertex(v));
        }
    }
    if a1 == a2 || b1 == b2 {
        return Err(Error::Precondition("endpoint pairs must contain two distinct vertices".into()));
    }

    let pairings = [[(a1, b1), (a2, b2)], [(a1, b2), (a2, b1)]];

    if g.n() <= EXACT_PAIR_N {
        let mut best: Option<(PathWitness, PathWitness)> = None;
        for pairing in pairings {
            max_total_pair(g, pairing[0], pairing[1], &mut best);
        }
        return Ok(match best {
            Some((p1, p2)) if p1.len() + p2.len() >= k => DisjointPair::Found(p1, p2),
            _ => DisjointPair::No,
        });
    }

    for pairing in pairings {
        if let Some((p1, p2)) = bounded_pair_search(g, pairing[0], pairing[1], k)? {
            return Ok(DisjointPair::Found(p1, p2));
        }
    }
    Ok(DisjointPair::No)
}

/// Exhaustive max-total search for one pairing (small graphs): enumerate the
/// first path, solve the second exactly on the rest.
fn max_total_pair(
    g: &Graph,
    leg1: (Vertex, Vertex),
    leg2: (Vertex, Vertex),
    best: &mut Option<(PathWitness, PathWitness)>,
) {
    let (x1, y1) = leg1;
    let (x2, y2) = leg2;
    // Shared endpoints force trivial legs.
    if x1 == y1 && x2 == y2 {
        if x1 != x2 {
            consider(
                best,
                PathWitness::new(vec![x1]).unwrap(),
                PathWitness::new(vec![x2]).unwrap(),
            );
        }
        return;
    }
    if x1 == y1 || x2 == y2 {
        let (triv, other) = if x1 == y1 { ((x1, y1), leg2) } else { ((x2, y2), leg1) };
        if other.0 == triv.0 || other.1 == triv.0 {
            return;
        }
        let rest = g.without(&BTreeSet::from([triv.0]));
        if let Ok(p) = exact_longest_st_path(&rest, other.0, other.1, usize::MAX) {
            let trivial = PathWitness::new(vec![triv.0]).unwrap();
            let (p1, p2) = if x1 == y1 { (trivial, p) } else { (p, trivial) };
            consider(best, p1, p2);
        }
        return;
    }
    if x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 {
        return; // nontrivial legs cannot share an endpoint
    }
    let mut path = vec![x1];
    let mut seen = BTreeSet::from([x1]);
    enum_leg1(g, y1, (x2, y2), &mut path, &mut seen, best);
}

fn enum_leg1(
    g: &Graph,
    target: Vertex,
    leg2: (Vertex, Vertex),
    path: &mut Vec<Vertex>,
    seen: &mut BTreeSet<Vertex>,
    best: &mut Option<(PathWitness, PathWitness)>,
) {
    let cur = *path.last().unwrap();
    if cur == target {
        let rest = g.without(seen);
        if let Ok(p2) = exact_longest_st_path(&rest, leg2.0, leg2.1, usize::MAX) {
            let p1 = PathWitness::new(path.clone()).unwrap();
            consider(best, p1, p2);
        }
        return;
    }
    let nbrs: Vec<Vertex> = g.neighbors(cur).map(|s| s.iter().copied().collect()).unwrap_or_default();
    for u in nbrs {
        if seen.contains(&u) || u == leg2.0 || u == leg2.1 {
            continue;
        }
        path.push(u);
        seen.insert(u);
        enum_leg1(g, target, leg2, path, seen, best);
        path.pop();
        seen.remove(&u);
    }
}

fn consider(best: &mut Option<(PathWitness, PathWitness)>, p1: PathWitness, p2: PathWitness) {
    let total = p1.len() + p2.len();
    let better = match best {
        None => true,
        Some((q1, q2)) => total > q1.len() + q2.len(),
    };
    if better {
        *best = Some((p1, p2));
    }
}

/// Exact existence search for one pairing: a pair of total length >= k, or
/// None. Complete: any qualifying pair either has |π1| <= k (part A) or its
/// k-edge prefix extends to one (part B).
fn bounded_pair_search(
    g: &Graph,
    leg1: (Vertex, Vertex),
    leg2: (Vertex, Vertex),
    k: usize,
) -> Result<Option<(PathWitness, PathWitness)>> {
    let (x1, y1) = leg1;
    let (x2, y2) = leg2;
    if x1 == y1 && x2 == y2 {
        if x1 != x2 && k == 0 {
            return Ok(Some((
                PathWitness::new(vec![x1]).unwrap(),
                PathWitness::new(vec![x2]).unwrap(),
            )));
        }
        return Ok(None);
    }
    if x1 == y1 || x2 == y2 {
        let (triv, other, flip) = if x1 == y1 { ((x1, y1), leg2, false) } else { ((x2, y2), leg1, true) };
        if other.0 == triv.0 || other.1 == triv.0 {
            return Ok(None);
        }
        let rest = g.without(&BTreeSet::from([triv.0]));
        let Some(p) = exists_path_at_least(&rest, other.0, other.1, k) else {
            return Ok(None);
        };
        let trivial = PathWitness::new(vec![triv.0]).unwrap();
        return Ok(Some(if flip { (p, trivial) } else { (trivial, p) }));
    }
    if x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 {
        return Ok(None);
    }

    // Part A: |π1| <= k.
    let mut found = None;
    let mut path = vec![x1];
    let mut seen = BTreeSet::from([x1]);
    part_a(g, y1, (x2, y2), k, &mut path, &mut seen, &mut found);
    if found.is_some() {
        return Ok(found);
    }

    // Part B: |π1| > k; enumerate k-edge prefixes and complete by feasibility.
    let mut found = None;
    let mut path = vec![x1];
    let mut seen = BTreeSet::from([x1]);
    part_b(g, (x1, y1), (x2, y2), k, &mut path, &mut seen, &mut found);
    Ok(found)
}

fn part_a(
    g: &Graph,
    target: Vertex,
    leg2: (Vertex, Vertex),
    k: usize,
    path: &mut Vec<Vertex>,
    seen: &mut BTreeSet<Vertex>,
    found: &mut Option<(PathWitness, PathWitness)>,
) {
    if found.is_some() {
        return;
    }
    let cur = *path.last().unwrap();
    let len = path.len() - 1;
    if cur == target {
        let need = k.saturating_sub(len);
        let rest = g.without(seen);
        if let Some(p2) = exists_path_at_least(&rest, leg2.0, leg2.1, need) {
            *found = Some((PathWitness::new(path.clone()).unwrap(), p2));
        }
        return;
    }
    if len >= k {
        return;
    }
    let nbrs: Vec<Vertex> = g.neighbors(cur).map(|s| s.iter().copied().collect()).unwrap_or_default();
    for u in nbrs {
        if found.is_some() {
            return;
        }
        if seen.contains(&u) || u == leg2.0 || u == leg2.1 {
            continue;
        }
        path.push(u);
        seen.insert(u);
        part_a(g, target, leg2, k, path, seen, found);
        path.pop();
        seen.remove(&u);
    }
}

fn part_b(
    g: &Graph,
    leg1: (Vertex, Vertex),
    leg2: (Vertex, Vertex),
    k: usize,
    path: &mut Vec<Vertex>,
    seen: &mut BTreeSet<Vertex>,
    found: &mut Option<(PathWitness, PathWitness)>,
) {
    if found.is_some() {
        return;
    }
    let cur = *path.last().unwrap();
    let len = path.len() - 1;
    if len == k {
        // complete π1 from cur to y1 and find any disjoint π2
        let mut interior = seen.clone();
        interior.remove(&cur);
        let rest = g.without(&interior);
        if let Some((tail, p2)) = feasible_pair(&rest, (cur, leg1.1), leg2) {
            let mut full = path.clone();
            full.extend(&tail.vertices()[1..]);
            if full.len() > path.len() {
                *found = Some((PathWitness::new(full).unwrap(), p2));
            }
        }
        return;
    }
    let nbrs: Vec<Vertex> = g.neighbors(cur).map(|s| s.iter().copied().collect()).unwrap_or_default();
    for u in nbrs {
        if found.is_some() {
            return;
        }
        // the prefix may not contain y1 or touch leg2's endpoints
        if seen.contains(&u) || u == leg1.1 || u == leg2.0 || u == leg2.1 {
            continue;
        }
        path.push(u);
        seen.insert(u);
        part_b(g, leg1, leg2, k, path, seen, found);
        path.pop();
        seen.remove(&u);
    }
}

/// Exact: a simple (x,y)-path of length at least `r`, or None. Any such path
/// either is a shortest path (when shortest >= r), or has an r-edge prefix
/// from which y stays reachable.
pub fn exists_path_at_least(g: &Graph, x: Vertex, y: Vertex, r: usize) -> Option<PathWitness> {
    if !g.contains_vertex(x) || !g.contains_vertex(y) {
        return None;
    }
    if x == y {
        return (r == 0).then(|| PathWitness::new(vec![x]).unwrap());
    }
    let shortest = g.shortest_path(x, y)?;
    if shortest.len() - 1 >= r {
        return PathWitness::new(shortest).ok();
    }
    let mut path = vec![x];
    let mut seen = BTreeSet::from([x]);
    prefix_search(g, y, r, &mut path, &mut seen)
}

fn prefix_search(
    g: &Graph,
    y: Vertex,
    r: usize,
    path: &mut Vec<Vertex>,
    seen: &mut BTreeSet<Vertex>,
) -> Option<PathWitness> {
    let cur = *path.last().unwrap();
    if path.len() - 1 == r {
        if cur == y {
            return PathWitness::new(path.clone()).ok();
        }
        if seen.contains(&y) {
            return None;
        }
        let mut interior = seen.clone();
        interior.remove(&cur);
        let rest = g.without(&interior);
        let tail = rest.shortest_path(cur, y)?;
        let mut full = path.clone();
        full.extend(&tail[1..]);
        return PathWitness::new(full).ok();
    }
    let nbrs: Vec<Vertex> = g.neighbors(cur).map(|s| s.iter().copied().collect()).unwrap_or_default();
    for u in nbrs {
        if seen.contains(&u) {
            continue;
        }
        path.push(u);
        seen.insert(u);
        let res = prefix_search(g, y, r, path, seen);
        path.pop();
        seen.remove(&u);
        if res.is_some() {
            return res;
        }
    }
    None
}

/// Pairing-specific feasibility: vertex-disjoint (x1,y1)- and (x2,y2)-paths,
/// by DFS over the first leg with connectivity pruning.
pub fn feasible_pair(
    g: &Graph,
    leg1: (Vertex, Vertex),
    leg2: (Vertex, Vertex),
) -> Option<(PathWitness, PathWitness)> {
    let (x1, y1) = leg1;
    let (x2, y2) = leg2;
    for v in [x1, y1, x2, y2] {
        if !g.contains_vertex(v) {
            return None;
        }
    }
    if x1 == y1 {
        if x2 == x1 || y2 == x1 {
            return None;
        }
        let rest = g.without(&BTreeSet::from([x1]));
        let p2 = rest.shortest_path(x2, y2)?;
        return Some((
            PathWitness::new(vec![x1]).unwrap(),
            PathWitness::new(p2).unwrap(),
        ));
    }
    if x2 == y2 {
        let (p2, p1) = feasible_pair(g, leg2, leg1)?;
        return Some((p1, p2));
    }
    if x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 {
        return None;
    }
    let mut path = vec![x1];
    let mut seen = BTreeSet::from([x1]);
    feas_dfs(g, y1, (x2, y2), &mut path, &mut seen)
}

fn feas_dfs(
    g: &Graph,
    target: Vertex,
    leg2: (Vertex, Vertex),
    path: &mut Vec<Vertex>,
    seen: &mut BTreeSet<Vertex>,
) -> Option<(PathWitness, PathWitness)> {
    let cur = *path.last().unwrap();
    if cur == target {
        let rest = g.without(seen);
        let p2 = rest.shortest_path(leg2.0, leg2.1)?;
        return Some((
            PathWitness::new(path.clone()).unwrap(),
            PathWitness::new(p2).unwrap(),
        ));
    }
    // prune: leg2 endpoints must stay connected avoiding current leg1 vertices
    {
        let rest = g.without(seen);
        if rest.shortest_path(leg2.0, leg2.1).is_none() {
            return None;
        }
        // and the target must stay reachable from cur avoiding leg2 endpoints
        let mut blocked = seen.clone();
        blocked.remove(&cur);
        blocked.insert(leg2.0);
        blocked.insert(leg2.1);
        let avail = g.without(&blocked);
        if avail.shortest_path(cur, target).is_none() {
            return None;
        }
    }
    let nbrs: Vec<Vertex> = g.neighbors(cur).map(|s| s.iter().copied().collect()).unwrap_or_default();
    for u in nbrs {
        if seen.contains(&u) || u == leg2.0 || u == leg2.1 {
            continue;
        }
        path.push(u);
        seen.insert(u);
        let res = feas_dfs(g, target, leg2, path, seen);
        path.pop();
        seen.remove(&u);
        if res.is_some() {
            return res;
        }
    }
    None
}

/// Three mutually vertex-disjoint paths, one per leg; legs with equal
/// endpoints yield trivial one-vertex paths. Used for the ordered two-
/// component reachability certificate.
pub fn three_disjoint_paths(
    g: &Graph,
    legs: [(Vertex, Vertex); 3],
) -> Option<[PathWitness; 3]> {
    for (x, y) in legs {
        if !g.contains_vertex(x) || !g.contains_vertex(y) {
            return None;
        }
    }
    // Trivial legs first: their single vertex must be avoided by the rest.
    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..3).collect();
        idx.sort_by_key(|&i| (legs[i].0 != legs[i].1, i));
        idx
    };
    let mut endpoint_use: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (x, y) in legs {
        for v in if x == y { vec![x] } else { vec![x, y] } {
            *endpoint_use.entry(v).or_insert(0) += 1;
        }
    }
    if endpoint_use.values().any(|&c| c > 1) {
        return None; // a vertex cannot serve two legs
    }
    let mut result: [Option<PathWitness>; 3] = [None, None, None];
    let used = BTreeSet::new();
    if solve_legs(g, &legs, &order, 0, &used, &mut result) {
        Some([
            result[0].take().unwrap(),
            result[1].take().unwrap(),
            result[2].take().unwrap(),
        ])
    } else {
        None
    }
}

fn solve_legs(
    g: &Graph,
    legs: &[(Vertex, Vertex); 3],
    order: &[usize],
    pos: usize,
    used: &BTreeSet<Vertex>,
    result: &mut [Option<PathWitness>; 3],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let li = order[pos];
    let (x, y) = legs[li];
    if used.contains(&x) || used.contains(&y) {
        return false;
    }
    if x == y {
        result[li] = Some(PathWitness::new(vec![x]).unwrap());
        let mut used2 = used.clone();
        used2.insert(x);
        if solve_legs(g, legs, order, pos + 1, &used2, result) {
            return true;
        }
        result[li] = None;
        return false;
    }
    // enumerate paths for this leg avoiding used vertices and later endpoints
    let mut forbidden = used.clone();
    for &lj in &order[pos + 1..] {
        let (a, b) = legs[lj];
        forbidden.insert(a);
        forbidden.insert(b);
    }
    let sub = {
        let mut keep: BTreeSet<Vertex> = g.vertices().filter(|v| !forbidden.contains(v)).collect();
        keep.insert(x);
        keep.insert(y);
        g.induced(&keep)
    };
    let mut path = vec![x];
    let mut seen = BTreeSet::from([x]);
    leg_dfs(g, &sub, legs, order, pos, used, result, y, &mut path, &mut seen)
}

#[allow(clippy::too_many_arguments)]
fn leg_dfs(
    g: &Graph,
    sub: &Graph,
    legs: &[(Vertex, Vertex); 3],
    order: &[usize],
    pos: usize,
    used: &BTreeSet<Vertex>,
    result: &mut [Option<PathWitness>; 3],
    target: Vertex,
    path: &mut Vec<Vertex>,
    seen: &mut BTreeSet<Vertex>,
) -> bool {
    let cur = *path.last().unwrap();
    if cur == target {
        let li = order[pos];
        result[li] = Some(PathWitness::new(path.clone()).unwrap());
        let mut used2 = used.clone();
        used2.extend(seen.iter().copied());
        if solve_legs(g, legs, order, pos + 1, &used2, result) {
            return true;
        }
        result[li] = None;
        return false;
    }
    // connectivity prune for remaining legs
    {
        let mut blocked = used.clone();
        blocked.extend(seen.iter().copied());
        let rest = g.without(&blocked);
        for &lj in &order[pos + 1..] {
            let (a, b) = legs[lj];
            if a == b {
                if blocked.contains(&a) {
                    return false;
                }
            } else if rest.shortest_path(a, b).is_none() {
                return false;
            }
        }
    }
    let nbrs: Vec<Vertex> = sub.neighbors(cur).map(|s| s.iter().copied().collect()).unwrap_or_default();
    for u in nbrs {
        if seen.contains(&u) {
            continue;
        }
        path.push(u);
        seen.insert(u);
        if leg_dfs(g, sub, legs, order, pos, used, result, target, path, seen) {
            return true;
        }
        path.pop();
        seen.remove(&u);
    }
    false
}

/// Two vertex-disjoint connector paths from s and t to a target set, each
/// meeting the target set only in its final vertex (Menger, via two rounds of
/// unit-capacity augmentation on the vertex-split digraph).
pub fn two_connectors_to_set(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    targets: &BTreeSet<Vertex>,
) -> Option<(PathWitness, PathWitness)> {
    if s == t || targets.is_empty() {
        return None;
    }
    // Trivial connector when an endpoint already sits on the target set.
    if targets.contains(&s) || targets.contains(&t) {
        let (on, off, flip) = if targets.contains(&s) { (s, t, false) } else { (t, s, true) };
        let trivial = PathWitness::new(vec![on]).unwrap();
        if targets.contains(&off) {
            let other = PathWitness::new(vec![off]).unwrap();
            return Some(if flip { (other, trivial) } else { (trivial, other) });
        }
        let rest = g.without(&BTreeSet::from([on]));
        let other = connector_bfs(&rest, off, targets)?;
        return Some(if flip { (other, trivial) } else { (trivial, other) });
    }

    // Unit-capacity flow; node ids: 2v = v_in, 2v+1 = v_out.
    let max_label = g.max_label()? + 1;
    let source = 2 * max_label;
    let sink = source + 1;
    let mut cap: BTreeMap<(usize, usize), i32> = BTreeMap::new();
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut add = |a: usize, b: usize, c: i32, cap: &mut BTreeMap<(usize, usize), i32>, adj: &mut BTreeMap<usize, BTreeSet<usize>>| {
        *cap.entry((a, b)).or_insert(0) += c;
        cap.entry((b, a)).or_insert(0);
        adj.entry(a).or_default().insert(b);
        adj.entry(b).or_default().insert(a);
    };
    for v in g.vertices() {
        add(2 * v, 2 * v + 1, 1, &mut cap, &mut adj);
        if targets.contains(&v) {
            add(2 * v + 1, sink, 1, &mut cap, &mut adj);
        }
    }
    for (u, v) in g.edges() {
        add(2 * u + 1, 2 * v, 1, &mut cap, &mut adj);
        add(2 * v + 1, 2 * u, 1, &mut cap, &mut adj);
    }
    add(source, 2 * s, 1, &mut cap, &mut adj);
    add(source, 2 * t, 1, &mut cap, &mut adj);

    let mut flow = 0;
    while flow < 2 {
        // BFS augmenting path
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([source]);
        let mut seen = BTreeSet::from([source]);
        let mut reached = false;
        'bfs: while let Some(a) = queue.pop_front() {
            if let Some(nbrs) = adj.get(&a) {
                for &b in nbrs {
                    if !seen.contains(&b) && cap.get(&(a, b)).copied().unwrap_or(0) > 0 {
                        seen.insert(b);
                        prev.insert(b, a);
                        if b == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                }
            }
        }
        if !reached {
            return None;
        }
        let mut b = sink;
        while b != source {
            let a = prev[&b];
            *cap.get_mut(&(a, b)).unwrap() -= 1;
            *cap.get_mut(&(b, a)).unwrap() += 1;
            b = a;
        }
        flow += 1;
    }

    // Decompose: follow saturated edges from s and from t.
    let trace = |start: Vertex| -> Option<PathWitness> {
        let mut verts = vec![start];
        let mut cur = start;
        loop {
            if targets.contains(&cur) {
                return PathWitness::new(verts).ok();
            }
            // v_out edges with used capacity (residual on reverse > 0)
            let out = 2 * cur + 1;
            let mut next = None;
            if let Some(nbrs) = adj.get(&out) {
                for &b in nbrs {
                    if b != 2 * cur && b != sink && cap.get(&(b, out)).copied().unwrap_or(0) > 0
                        && b % 2 == 0
                    {
                        next = Some(b / 2);
                        break;
                    }
                }
            }
            let nxt = next?;
            verts.push(nxt);
            cur = nxt;
        }
    };
    let p1 = trace(s)?;
    let p2 = trace(t)?;
    Some((p1, p2))
}

fn connector_bfs(g: &Graph, from: Vertex, targets: &BTreeSet<Vertex>) -> Option<PathWitness> {
    let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = BTreeSet::from([from]);
    if targets.contains(&from) {
        return PathWitness::new(vec![from]).ok();
    }
    while let Some(v) = queue.pop_front() {
        let Ok(nbrs) = g.neighbors(v) else { continue };
        for &u in nbrs {
            if seen.insert(u) {
                prev.insert(u, v);
                if targets.contains(&u) {
                    let mut path = vec![u];
                    let mut cur = u;
                    while let Some(&p) = prev.get(&cur) {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return PathWitness::new(path).ok();
                }
                queue.push_back(u);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::crosscheck;
    use crate::fixtures;

    #[test]
    fn c4_trivial_pair() {
        let g = fixtures::cycle(4);
        let res = two_disjoint_paths_min_total(&g, (1, 3), (2, 4), 0).unwrap();
        let (p1, p2) = res.found().expect("pair exists");
        assert!(p1.len() + p2.len() >= 2);
        assert!(p1.check(&g).is_ok() && p2.check(&g).is_ok());
    }

    #[test]
    fn c4_k3_is_no() {
        // Exhaustive enumeration shows max total 2 on C4 for these pairs.
        let g = fixtures::cycle(4);
        assert_eq!(crosscheck::max_total_disjoint_pair(&g, (1, 3), (2, 4)), Some(2));
        let res = two_disjoint_paths_min_total(&g, (1, 3), (2, 4), 3).unwrap();
        assert_eq!(res, DisjointPair::No);
    }

    #[test]
    fn c6_k4_found() {
        // (1-6-5),(4-3-2): total 4.
        let g = fixtures::cycle(6);
        assert_eq!(crosscheck::max_total_disjoint_pair(&g, (1, 4), (2, 5)), Some(4));
        let res = two_disjoint_paths_min_total(&g, (1, 4), (2, 5), 4).unwrap();
        let (p1, p2) = res.found().expect("pair exists");
        assert_eq!(p1.len() + p2.len(), 4);
        let (s1, s2) = (p1.vertex_set(), p2.vertex_set());
        assert!(s1.is_disjoint(&s2));
    }

    #[test]
    fn shared_endpoints_trivial_paths() {
        // pairs {s,t} and {s,y}: leg s->s is trivial
        let g = fixtures::complete(5);
        let res = two_disjoint_paths_min_total(&g, (1, 2), (1, 3), 0).unwrap();
        let (p1, p2) = res.found().expect("pair exists");
        assert!(p1.len() == 0 || p2.len() == 0);
    }

    #[test]
    fn identical_pairs_no_for_positive_k() {
        let g = fixtures::complete(5);
        let res = two_disjoint_paths_min_total(&g, (1, 2), (1, 2), 1).unwrap();
        assert_eq!(res, DisjointPair::No);
        let res = two_disjoint_paths_min_total(&g, (1, 2), (1, 2), 0).unwrap();
        assert!(res.found().is_some());
    }

    #[test]
    fn three_paths_on_k6() {
        let g = fixtures::complete(6);
        let legs = [(1, 2), (3, 4), (5, 6)];
        let paths = three_disjoint_paths(&g, legs).expect("feasible");
        let mut all = BTreeSet::new();
        for p in &paths {
            for &v in p.vertices() {
                assert!(all.insert(v), "vertex {v} reused");
            }
        }
    }

    #[test]
    fn three_paths_infeasible_on_path_graph() {
        let g = fixtures::path_graph(6);
        assert!(three_disjoint_paths(&g, [(1, 2), (3, 4), (5, 6)]).is_some());
        assert!(three_disjoint_paths(&g, [(1, 6), (2, 3), (4, 5)]).is_none());
    }

    #[test]
    fn connectors_to_cycle() {
        // Petersen: connectors from two off-cycle vertices to a 5-cycle.
        let g = fixtures::petersen();
        let targets: BTreeSet<Vertex> = [1, 2, 3, 4, 5].into();
        let (p1, p2) = two_connectors_to_set(&g, 6, 8, &targets).expect("2-connected");
        assert_eq!(p1.s(), 6);
        assert_eq!(p2.s(), 8);
        assert!(targets.contains(&p1.t()) && targets.contains(&p2.t()));
        assert_eq!(p1.vertices().iter().filter(|v| targets.contains(v)).count(), 1);
        let (s1, s2) = (p1.vertex_set(), p2.vertex_set());
        assert!(s1.is_disjoint(&s2));
    }

    #[test]
    fn bounded_search_matches_exhaustive_small() {
        // random-ish fixed fixtures, all pairs, k <= 6
        for g in [fixtures::cycle(6), fixtures::petersen(), fixtures::complete_bipartite(3, 3)] {
            let vs: Vec<Vertex> = g.vertices().collect();
            for &a1 in vs.iter().take(3) {
                for &a2 in vs.iter().skip(3).take(2) {
                    for &b1 in vs.iter().skip(5).take(2) {
                        for &b2 in vs.iter().skip(7).take(1) {
                            if a1 == a2 || b1 == b2 {
                                continue;
                            }
                            let brute = crosscheck::max_total_disjoint_pair(&g, (a1, a2), (b1, b2));
                            for k in 0..=6usize {
                                let res =
                                    two_disjoint_paths_min_total(&g, (a1, a2), (b1, b2), k).unwrap();
                                let expect = brute.map_or(false, |b| b >= k);
                                assert_eq!(
                                    res.found().is_some(),
                                    expect,
                                    "pairs ({a1},{a2}),({b1},{b2}) k={k}"
                                );
                                if let Some((p1, p2)) = res.found() {
                                    assert!(p1.len() + p2.len() >= k);
                                    assert!(p1.check(&g).is_ok() && p2.check(&g).is_ok());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
