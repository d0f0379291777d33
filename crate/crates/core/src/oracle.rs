use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::blocks::block_cut_tree;
use crate::disjoint::two_connectors_to_set;
use crate::enlarge::{grow_cycle_to, improve_st_path, initial_cycle};
use crate::error::{Error, Result};
use crate::exact::{exact_longest_cycle, CycleSearch};
use crate::graph::{Graph, Vertex};
use crate::witness::{CycleWitness, PathWitness};

/// A pluggable black-box longest-cycle approximation together with its
/// normalized guarantee descriptor f (used for reporting and bound checks,
/// never consulted by the algorithms themselves).
#[derive(Clone)]
pub struct ApproximatorHandle {
    name: String,
    invoke_fn: Arc<dyn Fn(&Graph) -> Result<CycleSearch> + Send + Sync>,
    guarantee_fn: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for ApproximatorHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ApproximatorHandle({})", self.name)
    }
}

impl ApproximatorHandle {
    /// Wraps an oracle. The guarantee is clamped to f(x) := min(x, f(x))
    /// and checked for monotonicity and subadditivity on sampled points.
    pub fn new(
        name: impl Into<String>,
        invoke: impl Fn(&Graph) -> Result<CycleSearch> + Send + Sync + 'static,
        guarantee: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let handle = ApproximatorHandle {
            name: name.into(),
            invoke_fn: Arc::new(invoke),
            guarantee_fn: Arc::new(guarantee),
        };
        handle.check_guarantee_samples()?;
        Ok(handle)
    }

    fn check_guarantee_samples(&self) -> Result<()> {
        let f = |x: f64| self.guarantee(x);
        for x in 0..=64u32 {
            let fx = f(x as f64);
            if fx < 0.0 {
                return Err(Error::Precondition(format!("guarantee negative at {x}")));
            }
            if x > 0 && f((x - 1) as f64) > fx + 1e-9 {
                return Err(Error::Precondition(format!("guarantee not non-decreasing at {x}")));
            }
        }
        for x in 0..=32u32 {
            for y in 0..=32u32 {
                if f((x + y) as f64) > f(x as f64) + f(y as f64) + 1e-9 {
                    return Err(Error::Precondition(format!(
                        "guarantee not subadditive at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Normalized guarantee: min(x, f(x)).
    pub fn guarantee(&self, x: f64) -> f64 {
        x.min((self.guarantee_fn)(x)).max(0.0)
    }

    /// Runs the oracle and validates the returned witness against `g`.
    pub fn invoke(&self, g: &Graph) -> Result<CycleSearch> {
        let res = (self.invoke_fn)(g)?;
        if let CycleSearch::Cycle(c) = &res {
            c.check(g).map_err(|v| {
                Error::Internal(format!("oracle {} returned an invalid cycle: {v}", self.name))
            })?;
        }
        Ok(res)
    }

    /// The exact oracle (f = identity), backed by branch-and-bound up to
    /// `threshold` vertices.
    pub fn exact(threshold: usize) -> Self {
        ApproximatorHandle {
            name: "exact".into(),
            invoke_fn: Arc::new(move |g: &Graph| exact_longest_cycle(g, threshold)),
            guarantee_fn: Arc::new(|x| x),
        }
    }

    /// Deterministic DFS + enlargement heuristic; report-only guarantee
    /// floor of min(x, 3) (any graph with a cycle yields one of length >= 3).
    pub fn dfs_heuristic() -> Self {
        ApproximatorHandle {
            name: "dfs-heuristic".into(),
            invoke_fn: Arc::new(|g: &Graph| match initial_cycle(g) {
                None => Ok(CycleSearch::Acyclic),
                Some(c) => {
                    let n = g.n();
                    Ok(CycleSearch::Cycle(grow_cycle_to(g, c, n)))
                }
            }),
            guarantee_fn: Arc::new(|x| x.min(3.0)),
        }
    }
}

/// Report wrapper: the witness plus, when an exact reference was computable,
/// the optimum and the realized offset above the guarantee baseline.
#[derive(Debug, Clone)]
pub struct OracleReport<W> {
    pub witness: W,
    pub exact_optimum: Option<usize>,
    pub offset_k: Option<i64>,
}

impl<W> OracleReport<W> {
    pub fn new(witness: W, exact_optimum: Option<usize>, offset_k: Option<i64>) -> Self {
        OracleReport { witness, exact_optimum, offset_k }
    }
}

/// An (s,t)-path of length at least ⌈|V(c)|/2⌉ when both endpoints lie on the
/// cycle (longest arc), and at least |V(c)|/2 otherwise (two disjoint
/// connectors to the cycle plus the longer arc between their hits).
pub fn path_between_via_cycle(
    g: &Graph,
    c: &CycleWitness,
    s: Vertex,
    t: Vertex,
) -> Result<PathWitness> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    if s == t {
        return Err(Error::Precondition("s and t must differ".into()));
    }
    c.check(g)
        .map_err(|v| Error::Precondition(format!("cycle invalid in host: {v}")))?;
    let on_cycle = c.vertex_set();
    let result = if on_cycle.contains(&s) && on_cycle.contains(&t) {
        let (long, _) = c.arcs(s, t)?;
        long.oriented_from(s)?
    } else {
        let (ps, pt) = two_connectors_to_set(g, s, t, &on_cycle)
            .ok_or_else(|| Error::Internal("Menger connectors must exist in a 2-connected graph".into()))?;
        let (x, y) = (ps.t(), pt.t());
        let (long, short) = c.arcs(x, y)?;
        let arc = if splice_ok(&ps, &pt, &long) { long } else { short };
        let mut verts = ps.vertices().to_vec();
        verts.extend(&arc.oriented_from(x)?.vertices()[1..]);
        verts.extend(pt.reversed().vertices().iter().skip_while(|&&v| v != y).skip(1));
        PathWitness::in_graph(g, verts)?
    };
    // Lemma floor: 2·len >= |V(c)| (and >= ceil when s,t on the cycle).
    if 2 * result.len() < c.len() {
        return Err(Error::Internal(format!(
            "cycle-to-path bound violated: len {} vs cycle {}",
            result.len(),
            c.len()
        )));
    }
    Ok(result)
}

// Connectors only meet the cycle at their final vertex, so any arc between
// the two hit points splices cleanly; kept as a guard.
fn splice_ok(ps: &PathWitness, pt: &PathWitness, arc: &PathWitness) -> bool {
    let arc_set = arc.vertex_set();
    ps.vertices()[..ps.vertices().len() - 1].iter().all(|v| !arc_set.contains(v))
        && pt.vertices()[..pt.vertices().len() - 1].iter().all(|v| !arc_set.contains(v))
}

/// The doubling reduction: an (s,t)-path of length at least ½·f(2L) from a
/// longest-cycle oracle, by gluing two copies of g at s and t and splitting
/// the oracle's cycle in the block containing both glue points.
pub fn st_path_from_cycle_oracle(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    oracle: &ApproximatorHandle,
) -> Result<PathWitness> {
    if s == t {
        return Err(Error::Precondition("s and t must differ".into()));
    }
    if !g.contains_vertex(s) {
        return Err(Error::MissingVertex(s));
    }
    if !g.contains_vertex(t) {
        return Err(Error::MissingVertex(t));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    // A bridge st means the single edge is the unique (s,t)-path.
    if g.has_edge(s, t) {
        let cut = g.without_edge(s, t)?;
        if cut.shortest_path(s, t).is_none() {
            return PathWitness::in_graph(g, vec![s, t]);
        }
    }

    let offset = g.max_label().unwrap() + 1;
    let map2 = |v: Vertex| if v == s || v == t { v } else { v + offset };
    let mut vertices: BTreeSet<Vertex> = g.vertex_set();
    vertices.extend(g.vertices().map(map2));
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    edges.extend(g.edges().map(|(u, v)| (map2(u), map2(v))));
    let glued = Graph::new(vertices, edges)?;

    let tree = block_cut_tree(&glued)?;
    let bi = tree
        .block_containing(s, t)
        .ok_or_else(|| Error::Internal("glue points must share a block".into()))?;
    let block = glued.induced(&tree.blocks[bi]);

    let cycle = match oracle.invoke(&block)? {
        CycleSearch::Cycle(c) => c,
        CycleSearch::Acyclic => return Err(Error::UnexpectedAcyclic),
    };
    let path = path_between_via_cycle(&block, &cycle, s, t)?;

    // {s,t} separates the copies, so the interior lives in exactly one copy.
    let interior = path.interior();
    let in_copy2 = interior.iter().any(|&v| v >= offset);
    let in_copy1 = interior.iter().any(|&v| v < offset);
    if in_copy1 && in_copy2 {
        return Err(Error::Internal("doubled-path interior crosses both copies".into()));
    }
    let verts: Vec<Vertex> = path
        .vertices()
        .iter()
        .map(|&v| if v >= offset { v - offset } else { v })
        .collect();
    PathWitness::in_graph(g, verts)
}

/// Constructive Erdős–Gallai path: an (s,t)-path of length at least δ(g−B) in
/// a 2-connected graph. Rotation–extension is the main path; below the exact
/// threshold the exhaustive solver is the fallback. The bound is asserted.
pub fn eg_long_st_path(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    excluded: &BTreeSet<Vertex>,
    threshold: usize,
) -> Result<PathWitness> {
    if s == t {
        return Err(Error::Precondition("s and t must differ".into()));
    }
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let rest = g.without(excluded);
    let bound = if rest.is_empty() { 0 } else { rest.min_degree()? };

    let init = g
        .shortest_path(s, t)
        .ok_or(Error::DisconnectedPair(s, t))?;
    let start = PathWitness::in_graph(g, init)?;
    let improved = improve_st_path(g, &start, Some(bound));
    if improved.len() >= bound {
        return Ok(improved);
    }
    if g.n() <= threshold {
        let exact = crate::exact::exact_longest_st_path(g, s, t, threshold)?;
        if exact.len() >= bound {
            return Ok(exact);
        }
    }
    Err(Error::Internal(format!(
        "Erdős–Gallai bound not reached: need {bound}, best {}",
        improved.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::DEFAULT_EXACT_THRESHOLD as T;
    use crate::fixtures;

    #[test]
    fn exact_handle_on_named() {
        let h = ApproximatorHandle::exact(T);
        assert_eq!(h.invoke(&fixtures::complete(4)).unwrap().length(), 4);
        assert_eq!(h.invoke(&fixtures::path_graph(4)).unwrap(), CycleSearch::Acyclic);
        assert_eq!(h.invoke(&fixtures::petersen()).unwrap().length(), 9);
        assert_eq!(h.guarantee(7.0), 7.0);
    }

    #[test]
    fn heuristic_handle_valid() {
        let h = ApproximatorHandle::dfs_heuristic();
        let res = h.invoke(&fixtures::petersen()).unwrap();
        assert!(res.length() >= 3);
        assert_eq!(h.guarantee(10.0), 3.0);
        assert_eq!(h.guarantee(2.0), 2.0);
    }

    #[test]
    fn guarantee_validation_rejects_decreasing() {
        let bad = ApproximatorHandle::new("bad", |_| Ok(CycleSearch::Acyclic), |x| 10.0 - x);
        assert!(bad.is_err());
    }

    #[test]
    fn arc_selection_on_c6() {
        let g = fixtures::cycle(6);
        let c = CycleWitness::in_graph(&g, vec![1, 2, 3, 4, 5, 6]).unwrap();
        let p = path_between_via_cycle(&g, &c, 1, 2).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!((p.s(), p.t()), (1, 2));
    }

    #[test]
    fn chorded_c6_antipodal() {
        let g = fixtures::cycle(6).with_edge(1, 4).unwrap();
        let c = CycleWitness::in_graph(&g, vec![1, 2, 3, 4, 5, 6]).unwrap();
        let p = path_between_via_cycle(&g, &c, 1, 4).unwrap();
        assert!(p.len() >= 3);
    }

    #[test]
    fn connector_case_on_petersen() {
        // 9-cycle avoiding vertex 10 == exact longest; endpoints 10 and 1.
        let g = fixtures::petersen();
        let c = match exact_longest_cycle(&g, T).unwrap() {
            CycleSearch::Cycle(c) => c,
            CycleSearch::Acyclic => unreachable!(),
        };
        assert_eq!(c.len(), 9);
        let off: Vec<Vertex> = g.vertices().filter(|v| !c.contains(*v)).collect();
        assert_eq!(off.len(), 1);
        let p = path_between_via_cycle(&g, &c, off[0], 1).unwrap();
        assert!(2 * p.len() >= 9, "got {}", p.len());
    }

    #[test]
    fn bridge_case_single_edge() {
        // path 1-2: bridge; unique (1,2)-path has length one
        let g = fixtures::path_graph(2);
        let oracle = ApproximatorHandle::exact(T);
        let p = st_path_from_cycle_oracle(&g, 1, 2, &oracle).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn doubling_on_c6_antipodal() {
        // glued C6 has a 12-cycle; both arcs give length-3 paths, so the
        // returned path has length >= 3 (here exactly 3).
        let g = fixtures::cycle(6);
        let oracle = ApproximatorHandle::exact(2 * T);
        let p = st_path_from_cycle_oracle(&g, 1, 4, &oracle).unwrap();
        assert!(p.len() >= 3);
        assert_eq!((p.s(), p.t()), (1, 4));
    }

    #[test]
    fn doubling_on_k4_exact() {
        // glued K4 block has 6 vertices; brute force there gives a cycle of
        // length 6, so the path has length >= 3 = the exact optimum.
        let g = fixtures::complete(4);
        let oracle = ApproximatorHandle::exact(2 * T);
        let p = st_path_from_cycle_oracle(&g, 1, 2, &oracle).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn eg_path_bounds() {
        let none = BTreeSet::new();
        let p = eg_long_st_path(&fixtures::complete(5), 1, 2, &none, T).unwrap();
        assert!(p.len() >= 4);
        let p = eg_long_st_path(&fixtures::cycle(6), 1, 4, &none, T).unwrap();
        assert!(p.len() >= 2);
        let p = eg_long_st_path(&fixtures::petersen(), 1, 2, &none, T).unwrap();
        assert!(p.len() >= 3);
    }

    #[test]
    fn eg_path_excluded_set() {
        let g = fixtures::petersen();
        let b = BTreeSet::from([1, 2]);
        let p = eg_long_st_path(&g, 3, 4, &b, T).unwrap();
        let rest = g.without(&b);
        assert!(p.len() >= rest.min_degree().unwrap());
    }
}
