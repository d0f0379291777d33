use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// An explicit vertex sequence certifying an (s,t)-path. Distinctness is
/// checked at construction; adjacency is checked against a host graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWitness {
    vertices: Vec<Vertex>,
}

impl fmt::Debug for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{:?}", self.vertices)
    }
}

impl PathWitness {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Precondition("empty path witness".into()));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Precondition("vertices not distinct".into()));
        }
        Ok(PathWitness { vertices })
    }

    /// Constructs and validates against a host graph in one step.
    pub fn in_graph(g: &Graph, vertices: Vec<Vertex>) -> Result<Self> {
        let w = PathWitness::new(vertices)?;
        w.check(g)
            .map_err(|v| Error::Precondition(format!("invalid path witness: {v}")))?;
        Ok(w)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    pub fn s(&self) -> Vertex {
        *self.vertices.first().unwrap()
    }

    pub fn t(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    /// Interior vertices (everything but the endpoints).
    pub fn interior(&self) -> BTreeSet<Vertex> {
        self.vertices[1..self.vertices.len() - 1].iter().copied().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn reversed(&self) -> PathWitness {
        let mut v = self.vertices.clone();
        v.reverse();
        PathWitness { vertices: v }
    }

    /// Same path, oriented to start at `s`. Errors if `s` is not an endpoint.
    pub fn oriented_from(&self, s: Vertex) -> Result<PathWitness> {
        if self.s() == s {
            Ok(self.clone())
        } else if self.t() == s {
            Ok(self.reversed())
        } else {
            Err(Error::Precondition(format!("{s} is not an endpoint")))
        }
    }

    /// Index of a vertex on the path.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Subpath between positions i <= j (inclusive).
    pub fn subpath(&self, i: usize, j: usize) -> PathWitness {
        assert!(i <= j && j < self.vertices.len());
        PathWitness { vertices: self.vertices[i..=j].to_vec() }
    }

    pub fn check(&self, g: &Graph) -> std::result::Result<(), WitnessViolation> {
        check_path_vertices(g, &self.vertices)
    }

    /// Concatenation of path pieces sharing consecutive endpoints.
    /// Fails if the result repeats a vertex or breaks adjacency.
    pub fn concat(g: &Graph, pieces: &[&PathWitness]) -> Result<PathWitness> {
        let mut vertices: Vec<Vertex> = Vec::new();
        for piece in pieces {
            if let Some(&last) = vertices.last() {
                if piece.s() != last {
                    return Err(Error::Precondition(format!(
                        "concat pieces do not share endpoint: {} vs {}",
                        last,
                        piece.s()
                    )));
                }
                vertices.extend(&piece.vertices[1..]);
            } else {
                vertices.extend(&piece.vertices);
            }
        }
        PathWitness::in_graph(g, vertices)
    }
}

/// A cyclic vertex sequence certifying a cycle; stored in canonical form
/// (lexicographically smallest rotation/reflection) so equal cycles compare
/// equal and tie-breaking is reproducible.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleWitness {
    vertices: Vec<Vertex>,
}

impl fmt::Debug for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.vertices)
    }
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::Precondition("cycle needs at least 3 vertices".into()));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Precondition("vertices not distinct".into()));
        }
        Ok(CycleWitness { vertices: canonical_rotation(vertices) })
    }

    pub fn in_graph(g: &Graph, vertices: Vec<Vertex>) -> Result<Self> {
        let c = CycleWitness::new(vertices)?;
        c.check(g)
            .map_err(|v| Error::Precondition(format!("invalid cycle witness: {v}")))?;
        Ok(c)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Length L = number of edges = number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % n];
            (u.min(v), u.max(v))
        })
    }

    /// Offset k = L − 2δ(host); negative values are clamped to the signed result.
    pub fn offset(&self, host: &Graph) -> Result<i64> {
        Ok(self.len() as i64 - 2 * host.min_degree()? as i64)
    }

    pub fn check(&self, g: &Graph) -> std::result::Result<(), WitnessViolation> {
        check_path_vertices(g, &self.vertices)?;
        let (u, v) = (self.vertices[0], *self.vertices.last().unwrap());
        if !g.has_edge(u, v) {
            return Err(WitnessViolation::NonAdjacent(v, u));
        }
        Ok(())
    }

    /// The two arcs between distinct cycle vertices s and t, each an
    /// (s,t)-path. The longer arc first; ties broken lexicographically.
    pub fn arcs(&self, s: Vertex, t: Vertex) -> Result<(PathWitness, PathWitness)> {
        let i = self.vertices.iter().position(|&x| x == s).ok_or(Error::MissingVertex(s))?;
        let j = self.vertices.iter().position(|&x| x == t).ok_or(Error::MissingVertex(t))?;
        if i == j {
            return Err(Error::Precondition("arc endpoints equal".into()));
        }
        let n = self.vertices.len();
        let mut fwd = Vec::new();
        let mut k = i;
        loop {
            fwd.push(self.vertices[k]);
            if k == j {
                break;
            }
            k = (k + 1) % n;
        }
        let mut bwd = Vec::new();
        let mut k = i;
        loop {
            bwd.push(self.vertices[k]);
            if k == j {
                break;
            }
            k = (k + n - 1) % n;
        }
        let a = PathWitness::new(fwd)?;
        let b = PathWitness::new(bwd)?;
        Ok(if (a.len(), &a) > (b.len(), &b) { (a, b) } else { (b, a) })
    }
}

fn canonical_rotation(vertices: Vec<Vertex>) -> Vec<Vertex> {
    let n = vertices.len();
    let mut best: Option<Vec<Vertex>> = None;
    for rev in [false, true] {
        let seq: Vec<Vertex> = if rev {
            vertices.iter().rev().copied().collect()
        } else {
            vertices.clone()
        };
        for start in 0..n {
            let rot: Vec<Vertex> = (0..n).map(|i| seq[(start + i) % n]).collect();
            if best.as_ref().map_or(true, |b| &rot < b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

fn check_path_vertices(g: &Graph, vertices: &[Vertex]) -> std::result::Result<(), WitnessViolation> {
    let mut seen = BTreeSet::new();
    for &v in vertices {
        if !g.contains_vertex(v) {
            return Err(WitnessViolation::MissingVertex(v));
        }
        if !seen.insert(v) {
            return Err(WitnessViolation::NotDistinct(v));
        }
    }
    for w in vertices.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(WitnessViolation::NonAdjacent(w[0], w[1]));
        }
    }
    Ok(())
}

/// First violated witness clause, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessViolation {
    MissingVertex(Vertex),
    NotDistinct(Vertex),
    NonAdjacent(Vertex, Vertex),
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessViolation::MissingVertex(v) => write!(f, "vertex {v} not in host graph"),
            WitnessViolation::NotDistinct(v) => write!(f, "vertices not distinct (vertex {v} repeats)"),
            WitnessViolation::NonAdjacent(u, v) => {
                write!(f, "non-adjacent consecutive pair ({u}, {v})")
            }
        }
    }
}

/// Either kind of witness, by reference.
#[derive(Debug, Clone, Copy)]
pub enum WitnessRef<'a> {
    Path(&'a PathWitness),
    Cycle(&'a CycleWitness),
}

/// Validates a witness against a host graph; `Err` carries the first
/// violated clause.
pub fn validate_witness(g: &Graph, w: WitnessRef<'_>) -> std::result::Result<(), WitnessViolation> {
    match w {
        WitnessRef::Path(p) => p.check(g),
        WitnessRef::Cycle(c) => c.check(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn path_witness_on_c6() {
        let g = fixtures::cycle(6);
        let w = PathWitness::new(vec![1, 2, 3]).unwrap();
        assert!(validate_witness(&g, WitnessRef::Path(&w)).is_ok());
        assert_eq!(w.len(), 2);

        let bad = PathWitness::new(vec![1, 3]).unwrap();
        assert_eq!(
            validate_witness(&g, WitnessRef::Path(&bad)),
            Err(WitnessViolation::NonAdjacent(1, 3))
        );
    }

    #[test]
    fn repeated_vertex_rejected() {
        assert!(PathWitness::new(vec![1, 2, 1]).is_err());
        assert!(CycleWitness::new(vec![1, 2, 2]).is_err());
    }

    #[test]
    fn cycle_canonical_form() {
        let a = CycleWitness::new(vec![2, 3, 1]).unwrap();
        let b = CycleWitness::new(vec![1, 2, 3]).unwrap();
        let c = CycleWitness::new(vec![3, 2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn arcs_of_c6() {
        let g = fixtures::cycle(6);
        let c = CycleWitness::in_graph(&g, vec![1, 2, 3, 4, 5, 6]).unwrap();
        let (long, short) = c.arcs(1, 2).unwrap();
        assert_eq!(long.len(), 5);
        assert_eq!(short.len(), 1);
        assert!(long.check(&g).is_ok());
    }
}
