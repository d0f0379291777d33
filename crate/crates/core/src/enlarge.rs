//! Rotation–extension local search for paths and cycles: insertion moves,
//! Pósa rotations, and the constructive Dirac closure. These are the
//! polynomial "main path" behind the exact fallbacks.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::witness::{CycleWitness, PathWitness};

/// Improves an (s,t)-path without moving its endpoints: single and double
/// insertions plus bounded detour splices, greedily to a fixpoint or until
/// `target` edges are reached.
pub fn improve_st_path(g: &Graph, path: &PathWitness, target: Option<usize>) -> PathWitness {
    let mut cur: Vec<Vertex> = path.vertices().to_vec();
    loop {
        if let Some(t) = target {
            if cur.len() - 1 >= t {
                break;
            }
        }
        if let Some(next) = insertion_step(g, &cur).or_else(|| splice_step(g, &cur)) {
            cur = next;
        } else {
            break;
        }
    }
    PathWitness::new(cur).expect("moves preserve path validity")
}

fn insertion_step(g: &Graph, path: &[Vertex]) -> Option<Vec<Vertex>> {
    let on_path: BTreeSet<Vertex> = path.iter().copied().collect();
    for i in 0..path.len() - 1 {
        let (a, b) = (path[i], path[i + 1]);
        let na = g.neighbors(a).ok()?;
        let nb = g.neighbors(b).ok()?;
        // single insertion
        for &v in na.intersection(nb) {
            if !on_path.contains(&v) {
                let mut next = path.to_vec();
                next.insert(i + 1, v);
                return Some(next);
            }
        }
        // double insertion a-v-w-b
        for &v in na {
            if on_path.contains(&v) {
                continue;
            }
            for &w in g.neighbors(v).ok()? {
                if w != a && !on_path.contains(&w) && nb.contains(&w) {
                    let mut next = path.to_vec();
                    next.splice(i + 1..i + 1, [v, w]);
                    return Some(next);
                }
            }
        }
    }
    None
}

// Replace one path edge by a longer detour through the off-path region.
fn splice_step(g: &Graph, path: &[Vertex]) -> Option<Vec<Vertex>> {
    let on_path: BTreeSet<Vertex> = path.iter().copied().collect();
    for i in 0..path.len() - 1 {
        let (a, b) = (path[i], path[i + 1]);
        let mut keep: BTreeSet<Vertex> = g.vertices().filter(|v| !on_path.contains(v)).collect();
        keep.insert(a);
        keep.insert(b);
        let sub = g.induced(&keep);
        let region = sub.reachable_from(a);
        if !region.contains(&b) {
            continue;
        }
        // exact detour when the region is small, else a short probe
        let detour = if region.len() <= 16 {
            crate::exact::exact_longest_st_path(&sub.induced(&region), a, b, 16).ok()
        } else {
            crate::disjoint::exists_path_at_least(&sub, a, b, 4)
        };
        if let Some(d) = detour {
            if d.len() > 1 {
                let mut next: Vec<Vertex> = path[..=i].to_vec();
                next.extend(&d.vertices()[1..]);
                next.extend(&path[i + 2..]);
                let distinct: BTreeSet<_> = next.iter().collect();
                if distinct.len() == next.len() {
                    return Some(next);
                }
            }
        }
    }
    None
}

/// Longest-path heuristic with free endpoints: greedy extension plus Pósa
/// rotations at both ends.
pub fn posa_longest_path(g: &Graph, start: Vertex) -> PathWitness {
    let mut path = vec![start];
    loop {
        let before = path.len();
        extend_and_rotate(g, &mut path);
        path.reverse();
        extend_and_rotate(g, &mut path);
        path.reverse();
        if path.len() == before {
            break;
        }
    }
    PathWitness::new(path).expect("rotations preserve path validity")
}

// Extends the tail endpoint, applying rotations when stuck. The head stays fixed.
fn extend_and_rotate(g: &Graph, path: &mut Vec<Vertex>) {
    loop {
        let on_path: BTreeSet<Vertex> = path.iter().copied().collect();
        let tail = *path.last().unwrap();
        let ext = g
            .neighbors(tail)
            .ok()
            .and_then(|ns| ns.iter().copied().find(|v| !on_path.contains(v)));
        if let Some(v) = ext {
            path.push(v);
            continue;
        }
        // rotations: try every derived endpoint once
        let mut tried: BTreeSet<Vertex> = BTreeSet::from([tail]);
        let mut frontier: Vec<Vec<Vertex>> = vec![path.clone()];
        let mut improved: Option<Vec<Vertex>> = None;
        'search: while let Some(p) = frontier.pop() {
            let t = *p.last().unwrap();
            let Ok(nbrs) = g.neighbors(t) else { break };
            for &u in nbrs {
                let Some(i) = p.iter().position(|&x| x == u) else { continue };
                if i + 2 >= p.len() {
                    continue;
                }
                // rotate: p0..p_i, t, .., p_{i+1}
                let mut rotated: Vec<Vertex> = p[..=i].to_vec();
                rotated.extend(p[i + 1..].iter().rev());
                let new_tail = *rotated.last().unwrap();
                if !tried.insert(new_tail) {
                    continue;
                }
                let rot_set: BTreeSet<Vertex> = rotated.iter().copied().collect();
                if g.neighbors(new_tail)
                    .map(|ns| ns.iter().any(|v| !rot_set.contains(v)))
                    .unwrap_or(false)
                {
                    improved = Some(rotated);
                    break 'search;
                }
                frontier.push(rotated);
            }
        }
        match improved {
            Some(p) => *path = p,
            None => return,
        }
    }
}

/// Any cycle of the graph, if one exists: the first edge whose endpoints stay
/// connected without it yields a shortest such cycle through that edge.
pub fn initial_cycle(g: &Graph) -> Option<CycleWitness> {
    for (u, v) in g.edges() {
        let without = g.without_edge(u, v).ok()?;
        if let Some(path) = without.shortest_path(u, v) {
            if path.len() >= 3 {
                return CycleWitness::in_graph(g, path).ok();
            }
        }
    }
    None
}

/// One enlargement step: a strictly longer cycle via insertion or
/// open–extend–close, or None at a local optimum.
pub fn grow_cycle(g: &Graph, c: &CycleWitness) -> Option<CycleWitness> {
    let on: BTreeSet<Vertex> = c.vertex_set();
    let vs = c.vertices();
    let n = vs.len();
    // insertion
    for i in 0..n {
        let (a, b) = (vs[i], vs[(i + 1) % n]);
        let na = g.neighbors(a).ok()?;
        let nb = g.neighbors(b).ok()?;
        for &v in na.intersection(nb) {
            if !on.contains(&v) {
                let mut verts = Vec::with_capacity(n + 1);
                verts.extend(&vs[..=i]);
                verts.push(v);
                verts.extend(&vs[i + 1..]);
                return CycleWitness::new(verts).ok();
            }
        }
    }
    // open at each edge, extend the path, re-close
    for i in 0..n {
        let mut path: Vec<Vertex> = Vec::with_capacity(n);
        for j in 0..n {
            path.push(vs[(i + 1 + j) % n]);
        }
        let mut p = path.clone();
        let before = p.len();
        extend_and_rotate(g, &mut p);
        p.reverse();
        extend_and_rotate(g, &mut p);
        if p.len() > before {
            if let Some(cyc) = close_path(g, &p) {
                if cyc.len() > c.len() {
                    return Some(cyc);
                }
            }
            // rotations at the tail may enable closure even without adjacency
            let tail_rotations = closing_rotations(g, &p);
            for q in tail_rotations {
                if let Some(cyc) = close_path(g, &q) {
                    if cyc.len() > c.len() {
                        return Some(cyc);
                    }
                }
            }
        }
    }
    None
}

fn close_path(g: &Graph, path: &[Vertex]) -> Option<CycleWitness> {
    if path.len() >= 3 && g.has_edge(path[0], *path.last().unwrap()) {
        CycleWitness::in_graph(g, path.to_vec()).ok()
    } else {
        None
    }
}

// Rotations of the tail endpoint, for closure attempts.
fn closing_rotations(g: &Graph, path: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let t = *path.last().unwrap();
    if let Ok(nbrs) = g.neighbors(t) {
        for &u in nbrs {
            if let Some(i) = path.iter().position(|&x| x == u) {
                if i + 2 < path.len() {
                    let mut rotated: Vec<Vertex> = path[..=i].to_vec();
                    rotated.extend(path[i + 1..].iter().rev());
                    out.push(rotated);
                }
            }
        }
    }
    out
}

/// Repeated enlargement until the cycle has at least `target` vertices or a
/// local optimum is reached.
pub fn grow_cycle_to(g: &Graph, mut c: CycleWitness, target: usize) -> CycleWitness {
    while c.len() < target {
        match grow_cycle(g, &c) {
            Some(longer) => c = longer,
            None => break,
        }
    }
    c
}

/// Constructive Dirac/Ore closure: a Hamiltonian cycle of a graph with
/// 2δ(G) ≥ n ≥ 3. The classic argument (maximal path, crossing chords,
/// absorb off-cycle vertices) is followed literally.
pub fn dirac_hamiltonian_cycle(g: &Graph) -> Result<CycleWitness> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition("need at least 3 vertices".into()));
    }
    if 2 * g.min_degree()? < n {
        return Err(Error::Precondition("2δ(G) ≥ n required".into()));
    }
    let start = g.vertices().next().unwrap();
    let mut path = posa_longest_path(g, start).into_vertices();
    loop {
        // close the current path into a cycle on its vertex set
        let cycle = if g.has_edge(path[0], *path.last().unwrap()) {
            path.clone()
        } else {
            crossing_closure(g, &path).ok_or_else(|| {
                Error::Internal("crossing pair must exist under the Dirac precondition".into())
            })?
        };
        if cycle.len() == n {
            return CycleWitness::in_graph(g, cycle);
        }
        // absorb: some off-cycle vertex neighbors the cycle (connectivity)
        let on: BTreeSet<Vertex> = cycle.iter().copied().collect();
        let mut absorbed = false;
        'outer: for (j, &cv) in cycle.iter().enumerate() {
            for &v in g.neighbors(cv)? {
                if !on.contains(&v) {
                    // reopen as a path ending at v's neighborhood
                    let mut p = vec![v];
                    for k in 0..cycle.len() {
                        p.push(cycle[(j + k) % cycle.len()]);
                    }
                    let w = PathWitness::new(p).expect("distinct by construction");
                    path = improve_st_path_free(g, w);
                    absorbed = true;
                    break 'outer;
                }
            }
        }
        if !absorbed {
            return Err(Error::Internal(
                "non-spanning cycle with no outside neighbor in a connected graph".into(),
            ));
        }
    }
}

fn improve_st_path_free(g: &Graph, p: PathWitness) -> Vec<Vertex> {
    let mut path = p.into_vertices();
    extend_and_rotate(g, &mut path);
    path.reverse();
    extend_and_rotate(g, &mut path);
    path
}

// Pigeonhole crossing pair: path v0..vk with endpoint neighborhoods on the
// path; find i with vk ~ v_i and v0 ~ v_{i+1}; the rotation closes a cycle on
// the same vertex set.
fn crossing_closure(g: &Graph, path: &[Vertex]) -> Option<Vec<Vertex>> {
    let k = path.len() - 1;
    let (v0, vk) = (path[0], path[k]);
    for i in 0..k {
        if g.has_edge(vk, path[i]) && g.has_edge(v0, path[i + 1]) {
            let mut cycle: Vec<Vertex> = path[..=i].to_vec();
            cycle.extend(path[i + 1..].iter().rev());
            return Some(cycle);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn insertion_grows_clique_path() {
        let g = fixtures::complete(6);
        let p = PathWitness::in_graph(&g, vec![1, 2]).unwrap();
        let improved = improve_st_path(&g, &p, None);
        assert_eq!(improved.len(), 5, "K6 path should become Hamiltonian");
        assert_eq!(improved.s(), 1);
        assert_eq!(improved.t(), 2);
    }

    #[test]
    fn dirac_closure_on_dense_graphs() {
        for n in [4, 5, 6, 8, 10] {
            let g = fixtures::complete(n);
            let c = dirac_hamiltonian_cycle(&g).unwrap();
            assert_eq!(c.len(), n);
        }
        let g = fixtures::complete_bipartite(4, 4);
        let c = dirac_hamiltonian_cycle(&g).unwrap();
        assert_eq!(c.len(), 8);
    }

    #[test]
    fn grow_cycle_inserts() {
        // C5 plus an apex adjacent to two consecutive vertices
        let mut edges: Vec<(Vertex, Vertex)> = vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];
        edges.push((6, 1));
        edges.push((6, 2));
        let g = Graph::from_edges(edges).unwrap();
        let c = CycleWitness::in_graph(&g, vec![1, 2, 3, 4, 5]).unwrap();
        let grown = grow_cycle(&g, &c).expect("insertion applies");
        assert_eq!(grown.len(), 6);
    }

    #[test]
    fn initial_cycle_exists() {
        assert!(initial_cycle(&fixtures::petersen()).is_some());
        assert!(initial_cycle(&fixtures::path_graph(5)).is_none());
    }

    #[test]
    fn posa_reaches_hamiltonian_path_on_petersen() {
        let g = fixtures::petersen();
        let p = posa_longest_path(&g, 1);
        assert!(p.len() >= 8, "got {}", p.len());
        assert!(p.check(&g).is_ok());
    }
}
