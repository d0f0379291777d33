use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Stable opaque vertex label. Labels survive subgraph extraction and
/// contraction; they are never re-numbered.
pub type Vertex = usize;

/// Immutable simple undirected graph with adjacency sets.
///
/// All constructors check simplicity (no loops, symmetric adjacency); every
/// derived quantity (`n`, `m`, `min_degree`) is computed from the adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from explicit vertices and an edge list. Duplicate
    /// edges are merged; self-loops are rejected.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            if !adj.contains_key(&u) {
                return Err(Error::MissingVertex(u));
            }
            if !adj.contains_key(&v) {
                return Err(Error::MissingVertex(v));
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        let g = Graph { adj };
        g.assert_simple();
        Ok(g)
    }

    /// Builds a graph from an edge list alone; the vertex set is the union of
    /// the endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)> + Clone) -> Result<Self> {
        let vertices: BTreeSet<Vertex> = edges.clone().into_iter().flat_map(|(u, v)| [u, v]).collect();
        Graph::new(vertices, edges)
    }

    // Simplicity is an invariant of every constructor exit.
    fn assert_simple(&self) {
        for (&v, nbrs) in &self.adj {
            assert!(!nbrs.contains(&v), "self-loop at {v}");
            for &u in nbrs {
                assert!(
                    self.adj.get(&u).map_or(false, |s| s.contains(&v)),
                    "asymmetric adjacency {v}-{u}"
                );
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).map_or(false, |s| s.contains(&v))
    }

    /// Edges as ordered pairs (u < v), in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&BTreeSet<Vertex>> {
        self.adj.get(&v).ok_or(Error::MissingVertex(v))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// Minimum degree δ(G). Errors on the empty graph.
    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .values()
            .map(|s| s.len())
            .min()
            .ok_or(Error::EmptyGraph)
    }

    /// Induced subgraph on `keep`. Vertices absent from the graph are ignored.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.intersection(keep).copied().collect()))
            .collect();
        Graph { adj }
    }

    /// The graph minus a vertex set, G − X.
    pub fn without(&self, removed: &BTreeSet<Vertex>) -> Graph {
        let keep: BTreeSet<Vertex> = self.vertices().filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    /// Copy of the graph with one extra edge (endpoints must exist).
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        if u == v {
            return Err(Error::Precondition(format!("self-loop at vertex {u}")));
        }
        if !g.adj.contains_key(&u) {
            return Err(Error::MissingVertex(u));
        }
        if !g.adj.contains_key(&v) {
            return Err(Error::MissingVertex(v));
        }
        g.adj.get_mut(&u).unwrap().insert(v);
        g.adj.get_mut(&v).unwrap().insert(u);
        Ok(g)
    }

    /// Copy of the graph with one extra (isolated) vertex.
    pub fn with_vertex(&self, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.adj.entry(v).or_default();
        g
    }

    /// Copy without one edge; errors if the edge is absent.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj.get_mut(&u).unwrap().remove(&v);
        g.adj.get_mut(&v).unwrap().remove(&u);
        Ok(g)
    }

    /// Largest vertex label, for allocating fresh labels.
    pub fn max_label(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// Connected components as sorted vertex sets, ordered by minimum vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp = self.reachable_from(v);
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// BFS reachability set from `start` (includes `start`).
    pub fn reachable_from(&self, start: Vertex) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::new();
        if !self.contains_vertex(start) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[&v] {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => false,
            Some(v) => self.reachable_from(v).len() == self.n(),
        }
    }

    /// 2-connected: at least 3 vertices, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n() < 3 || !self.is_connected() {
            return false;
        }
        self.vertices().all(|v| {
            let rest = self.without(&BTreeSet::from([v]));
            rest.is_connected()
        })
    }

    /// Shortest path between two vertices (BFS), as a vertex sequence.
    pub fn shortest_path(&self, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
        if !self.contains_vertex(s) || !self.contains_vertex(t) {
            return None;
        }
        if s == t {
            return Some(vec![s]);
        }
        let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        let mut seen = BTreeSet::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[&v] {
                if seen.insert(u) {
                    prev.insert(u, v);
                    if u == t {
                        let mut path = vec![t];
                        let mut cur = t;
                        while let Some(&p) = prev.get(&cur) {
                            path.push(p);
                            cur = p;
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(u);
                }
            }
        }
        None
    }
}

/// Result of `connectivity_profile`: the components of G − removed plus a
/// 2-connectivity flag for G itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityProfile {
    pub components: Vec<BTreeSet<Vertex>>,
    pub two_connected: bool,
}

/// Minimum degree δ(G) of a nonempty graph.
pub fn min_degree(g: &Graph) -> Result<usize> {
    g.min_degree()
}

/// Components of g − removed, and whether g itself is 2-connected (the flag
/// ignores `removed`).
pub fn connectivity_profile(g: &Graph, removed: &BTreeSet<Vertex>) -> Result<ConnectivityProfile> {
    for &v in removed {
        if !g.contains_vertex(v) {
            return Err(Error::MissingVertex(v));
        }
    }
    Ok(ConnectivityProfile {
        components: g.without(removed).components(),
        two_connected: g.is_two_connected(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn min_degree_basics() {
        assert_eq!(fixtures::complete(4).min_degree().unwrap(), 3);
        assert_eq!(fixtures::cycle(6).min_degree().unwrap(), 2);
        let empty = Graph::new([], []).unwrap();
        assert_eq!(empty.min_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn min_degree_petersen() {
        // Direct degree scan of the standard edge list: 3-regular.
        let p = fixtures::petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.m(), 15);
        assert!(p.vertices().all(|v| p.degree(v).unwrap() == 3));
        assert_eq!(p.min_degree().unwrap(), 3);
    }

    #[test]
    fn self_loop_rejected() {
        assert!(Graph::from_edges([(1, 1)]).is_err());
    }

    #[test]
    fn connectivity_profile_cases() {
        let c6 = fixtures::cycle(6);
        let prof = connectivity_profile(&c6, &BTreeSet::new()).unwrap();
        assert_eq!(prof.components.len(), 1);
        assert!(prof.two_connected);

        let path = fixtures::path_graph(3);
        let prof = connectivity_profile(&path, &BTreeSet::from([2])).unwrap();
        assert_eq!(prof.components, vec![BTreeSet::from([1]), BTreeSet::from([3])]);
        assert!(!prof.two_connected);
    }

    #[test]
    fn petersen_three_connected() {
        // Removing any 2 vertices leaves one component.
        let p = fixtures::petersen();
        let vs: Vec<_> = p.vertices().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                let prof = connectivity_profile(&p, &BTreeSet::from([u, v])).unwrap();
                assert_eq!(prof.components.len(), 1, "removing {{{u},{v}}}");
            }
        }
    }

    #[test]
    fn two_connected_agrees_with_bruteforce_small() {
        // n <= 12 spot checks over assorted fixtures.
        for g in [
            fixtures::complete(4),
            fixtures::cycle(5),
            fixtures::path_graph(6),
            fixtures::petersen(),
            fixtures::two_triangles_shared_vertex(),
        ] {
            let brute = g.n() >= 3
                && g.is_connected()
                && g.vertices().all(|v| g.without(&BTreeSet::from([v])).is_connected());
            assert_eq!(g.is_two_connected(), brute);
        }
    }
}
