//! Named graphs used across tests and the CLI generators.

use crate::graph::{Graph, Vertex};

/// Complete graph K_n on vertices 1..=n.
pub fn complete(n: usize) -> Graph {
    let vs: Vec<Vertex> = (1..=n).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((vs[i], vs[j]));
        }
    }
    Graph::new(vs, edges).unwrap()
}

/// Cycle C_n on vertices 1..=n.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (1..=n).map(|i| (i, if i == n { 1 } else { i + 1 })).collect();
    Graph::from_edges(edges).unwrap()
}

/// Path graph 1-2-...-n.
pub fn path_graph(n: usize) -> Graph {
    assert!(n >= 2);
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(edges).unwrap()
}

/// Star K_{1,n}: center 1, leaves 2..=n+1.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (2..=n + 1).map(|i| (1, i)).collect();
    Graph::from_edges(edges).unwrap()
}

/// The Petersen graph on vertices 1..=10 (outer 1..=5, inner 6..=10).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i + 1, (i + 1) % 5 + 1)); // outer cycle
        edges.push((i + 1, i + 6)); // spokes
        edges.push((i + 6, (i + 2) % 5 + 6)); // inner pentagram
    }
    Graph::from_edges(edges).unwrap()
}

/// Two triangles {1,2,3} and {3,4,5} sharing the cut vertex 3.
pub fn two_triangles_shared_vertex() -> Graph {
    Graph::from_edges([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
}

/// Barbell: two K_k cliques joined by a bridge path with `bridge` internal
/// vertices. Vertices 1..=k (left), k+1..=k+bridge (path), then the right clique.
pub fn barbell(k: usize, bridge: usize) -> Graph {
    assert!(k >= 3);
    let left: Vec<Vertex> = (1..=k).collect();
    let mid: Vec<Vertex> = (k + 1..=k + bridge).collect();
    let right: Vec<Vertex> = (k + bridge + 1..=2 * k + bridge).collect();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((left[i], left[j]));
            edges.push((right[i], right[j]));
        }
    }
    let mut chain = vec![left[k - 1]];
    chain.extend(&mid);
    chain.push(right[0]);
    for w in chain.windows(2) {
        edges.push((w[0], w[1]));
    }
    Graph::from_edges(edges).unwrap()
}

/// Complete bipartite K_{a,b}: side A = 1..=a, side B = a+1..=a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=a {
        for v in a + 1..=a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(edges).unwrap()
}

/// Host of the two-clique Erdős–Gallai family: cliques A and B of size
/// `block`, plus s adjacent to the first vertex of each and t adjacent to the
/// last vertex of each. Returns (graph, s, t, clique A, clique B).
pub fn two_clique_eg_host(
    block: usize,
) -> (
    Graph,
    Vertex,
    Vertex,
    Vec<Vertex>,
    Vec<Vertex>,
) {
    assert!(block >= 3);
    let s: Vertex = 1;
    let t: Vertex = 2;
    let a: Vec<Vertex> = (3..3 + block).collect();
    let b: Vec<Vertex> = (3 + block..3 + 2 * block).collect();
    let mut edges = Vec::new();
    for i in 0..block {
        for j in i + 1..block {
            edges.push((a[i], a[j]));
            edges.push((b[i], b[j]));
        }
    }
    edges.push((s, a[0]));
    edges.push((s, b[0]));
    edges.push((t, a[block - 1]));
    edges.push((t, b[block - 1]));
    let g = Graph::new(
        std::iter::once(s).chain([t]).chain(a.iter().copied()).chain(b.iter().copied()),
        edges,
    )
    .unwrap();
    (g, s, t, a, b)
}
