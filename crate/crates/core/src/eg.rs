//! Erdős–Gallai decompositions: clause-level validation, component instance
//! extraction, the find-or-enlarge routine with its two-component
//! reachability certificate, long paths in separable components, and the
//! boost construction for paths avoiding every component.

use std::collections::BTreeSet;
use std::fmt;

use crate::blocks::block_cut_tree;
use crate::disjoint::three_disjoint_paths;
use crate::enlarge::improve_st_path;
use crate::error::{Error, Result};
use crate::exact::exact_longest_st_path;
use crate::graph::{Graph, Vertex};
use crate::oracle::eg_long_st_path;
use crate::witness::PathWitness;

/// Component types of Definition 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgComponentType {
    R1,
    R2,
    R3,
}

#[derive(Debug, Clone)]
pub struct TypedComponent {
    pub vertices: BTreeSet<Vertex>,
    pub kind: EgComponentType,
}

/// An Erdős–Gallai component: an R1 component wholesale, or a leaf block of
/// an R2/R3 component (then `leaf_cut` is its cut vertex).
#[derive(Debug, Clone)]
pub struct EgComponent {
    pub vertices: BTreeSet<Vertex>,
    pub origin: usize,
    pub leaf_cut: Option<Vertex>,
}

/// A validated Erdős–Gallai decomposition.
#[derive(Debug, Clone)]
pub struct EGDecomposition {
    pub host: Graph,
    pub s: Vertex,
    pub t: Vertex,
    pub path: PathWitness,
    pub p1: PathWitness,
    pub p2: PathWitness,
    pub components: Vec<TypedComponent>,
    pub eg_components: Vec<EgComponent>,
}

impl EGDecomposition {
    pub fn delta_st(&self) -> usize {
        let removed = BTreeSet::from([self.s, self.t]);
        let rest = self.host.without(&removed);
        if rest.is_empty() {
            0
        } else {
            rest.min_degree().unwrap()
        }
    }

    pub fn separator(&self) -> BTreeSet<Vertex> {
        let mut sep = self.p1.vertex_set();
        sep.extend(self.p2.vertex_set());
        sep
    }

    /// Edge-sense entering: the path uses an edge with both ends in the
    /// component.
    pub fn enters(path: &PathWitness, component: &BTreeSet<Vertex>) -> bool {
        path.edges().any(|(u, v)| component.contains(&u) && component.contains(&v))
    }
}

/// First violated clause of Definition 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EgViolation {
    PathInvalid(String),
    NotPrefixAtS,
    NotSuffixAtT,
    PiecesOverlap,
    InnerPathTooShort { need: usize, got: usize },
    TooFewComponents { got: usize },
    ComponentTooSmall { component: BTreeSet<Vertex> },
    MatchingToP1NotOne { component: BTreeSet<Vertex> },
    MatchingToP2NotOne { component: BTreeSet<Vertex> },
    SeparableAttachment { component: BTreeSet<Vertex> },
    InnerLeafBlockTouchesP2 { component: BTreeSet<Vertex> },
    InnerLeafBlockTouchesP1 { component: BTreeSet<Vertex> },
}

impl fmt::Display for EgViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EgViolation::PathInvalid(m) => write!(f, "P is not a valid (s,t)-path: {m}"),
            EgViolation::NotPrefixAtS => write!(f, "P1 is not a prefix of P starting at s"),
            EgViolation::NotSuffixAtT => write!(f, "P2 is not a suffix of P ending at t"),
            EgViolation::PiecesOverlap => write!(f, "P1 and P2 are not disjoint"),
            EgViolation::InnerPathTooShort { need, got } => {
                write!(f, "inner path has {got} edges, needs at least δ(G−{{s,t}}) = {need}")
            }
            EgViolation::TooFewComponents { got } => {
                write!(f, "at least two connected components required, found {got}")
            }
            EgViolation::ComponentTooSmall { component } => {
                write!(f, "|V(H)| ≥ 3 violated by component {component:?}")
            }
            EgViolation::MatchingToP1NotOne { component } => {
                write!(f, "matching size between component {component:?} and P1 is not one")
            }
            EgViolation::MatchingToP2NotOne { component } => {
                write!(f, "matching size between component {component:?} and P2 is not one")
            }
            EgViolation::SeparableAttachment { component } => write!(
                f,
                "separable component {component:?} attaches to neither path at a single vertex"
            ),
            EgViolation::InnerLeafBlockTouchesP2 { component } => write!(
                f,
                "inner leaf-block vertex of component {component:?} has a neighbor in P2"
            ),
            EgViolation::InnerLeafBlockTouchesP1 { component } => write!(
                f,
                "inner leaf-block vertex of component {component:?} has a neighbor in P1"
            ),
        }
    }
}

/// Maximum matching size of a small bipartite edge list (augmenting paths).
fn matching_size(edges: &[(Vertex, Vertex)]) -> usize {
    let lefts: Vec<Vertex> = edges.iter().map(|e| e.0).collect::<BTreeSet<_>>().into_iter().collect();
    let mut matched_right: std::collections::BTreeMap<Vertex, Vertex> = Default::default();
    fn augment(
        u: Vertex,
        edges: &[(Vertex, Vertex)],
        matched_right: &mut std::collections::BTreeMap<Vertex, Vertex>,
        seen: &mut BTreeSet<Vertex>,
    ) -> bool {
        for &(a, b) in edges {
            if a != u || seen.contains(&b) {
                continue;
            }
            seen.insert(b);
            let free = match matched_right.get(&b) {
                None => true,
                Some(&w) => augment(w, edges, matched_right, seen),
            };
            if free {
                matched_right.insert(b, u);
                return true;
            }
        }
        false
    }
    let mut size = 0;
    for &u in &lefts {
        let mut seen = BTreeSet::new();
        if augment(u, edges, &mut matched_right, &mut seen) {
            size += 1;
        }
    }
    size
}

fn edges_between(g: &Graph, a: &BTreeSet<Vertex>, b: &BTreeSet<Vertex>) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for &u in a {
        if let Ok(nbrs) = g.neighbors(u) {
            for &v in nbrs {
                if b.contains(&v) {
                    out.push((u, v));
                }
            }
        }
    }
    out
}

/// Clause-by-clause validation of Definition 2. On success the decomposition
/// is returned fully typed, with its Erdős–Gallai components extracted.
pub fn validate_eg_decomposition(
    host: &Graph,
    s: Vertex,
    t: Vertex,
    path: &PathWitness,
    p1: &PathWitness,
    p2: &PathWitness,
) -> std::result::Result<EGDecomposition, EgViolation> {
    if let Err(v) = path.check(host) {
        return Err(EgViolation::PathInvalid(v.to_string()));
    }
    if path.s() != s || path.t() != t {
        return Err(EgViolation::PathInvalid("endpoints do not match s, t".into()));
    }
    let pv = path.vertices();
    let a = p1.len();
    if pv.len() < p1.vertices().len() || &pv[..=a] != p1.vertices() {
        return Err(EgViolation::NotPrefixAtS);
    }
    let bl = p2.vertices().len();
    if pv.len() < bl || &pv[pv.len() - bl..] != p2.vertices() {
        return Err(EgViolation::NotSuffixAtT);
    }
    let b = pv.len() - bl; // index where P2 starts on P
    if a >= b {
        return Err(EgViolation::PiecesOverlap);
    }
    let delta_st = {
        let rest = host.without(&BTreeSet::from([s, t]));
        if rest.is_empty() {
            0
        } else {
            rest.min_degree().unwrap()
        }
    };
    let inner_edges = b - a;
    if inner_edges < delta_st {
        return Err(EgViolation::InnerPathTooShort { need: delta_st, got: inner_edges });
    }

    let mut separator = p1.vertex_set();
    separator.extend(p2.vertex_set());
    let rest = host.without(&separator);
    let comps = rest.components();
    if comps.len() < 2 {
        return Err(EgViolation::TooFewComponents { got: comps.len() });
    }

    let p1set = p1.vertex_set();
    let p2set = p2.vertex_set();
    let mut typed = Vec::new();
    let mut eg_components = Vec::new();
    for comp in comps {
        if comp.len() < 3 {
            return Err(EgViolation::ComponentTooSmall { component: comp });
        }
        let h = host.induced(&comp);
        let e1 = edges_between(host, &comp, &p1set);
        let e2 = edges_between(host, &comp, &p2set);
        if h.is_two_connected() {
            if matching_size(&e1) != 1 {
                return Err(EgViolation::MatchingToP1NotOne { component: comp });
            }
            if matching_size(&e2) != 1 {
                return Err(EgViolation::MatchingToP2NotOne { component: comp });
            }
            let origin = typed.len();
            eg_components.push(EgComponent { vertices: comp.clone(), origin, leaf_cut: None });
            typed.push(TypedComponent { vertices: comp, kind: EgComponentType::R1 });
            continue;
        }
        // separable: R2 or R3
        let n1: BTreeSet<Vertex> = e1.iter().map(|e| e.1).collect();
        let n2: BTreeSet<Vertex> = e2.iter().map(|e| e.1).collect();
        let tree = block_cut_tree(&h).expect("component is connected");
        let leaf_inner = tree.leaf_inner_vertices();
        let kind = if n1.len() == 1 {
            // R2 candidate: no inner leaf-block vertex neighbors P2
            if leaf_inner.iter().any(|&v| {
                host.neighbors(v).map(|ns| ns.iter().any(|u| p2set.contains(u))).unwrap_or(false)
            }) {
                return Err(EgViolation::InnerLeafBlockTouchesP2 { component: comp });
            }
            EgComponentType::R2
        } else if n2.len() == 1 {
            if leaf_inner.iter().any(|&v| {
                host.neighbors(v).map(|ns| ns.iter().any(|u| p1set.contains(u))).unwrap_or(false)
            }) {
                return Err(EgViolation::InnerLeafBlockTouchesP1 { component: comp });
            }
            EgComponentType::R3
        } else {
            return Err(EgViolation::SeparableAttachment { component: comp });
        };
        let origin = typed.len();
        for &bidx in &tree.leaf_blocks {
            let cut = tree.leaf_block_cut_vertex(bidx);
            eg_components.push(EgComponent {
                vertices: tree.blocks[bidx].clone(),
                origin,
                leaf_cut: cut,
            });
        }
        typed.push(TypedComponent { vertices: comp, kind });
    }

    Ok(EGDecomposition {
        host: host.clone(),
        s,
        t,
        path: path.clone(),
        p1: p1.clone(),
        p2: p2.clone(),
        components: typed,
        eg_components,
    })
}

/// A component instance (K, s′, t′): the 2-connected environment of an
/// Erdős–Gallai component that behaves like a fresh (s,t)-path instance.
#[derive(Debug, Clone)]
pub struct ComponentInstance {
    /// host[V(M) ∪ {s′,t′}] plus the entry edge s′t′ when the host lacks it.
    pub graph: Graph,
    pub s_entry: Vertex,
    pub t_entry: Vertex,
    /// True when the s′t′ edge is not a host edge; witnesses must avoid it.
    pub virtual_entry_edge: bool,
    pub origin: usize,
}

impl ComponentInstance {
    pub fn entry_pair(&self) -> BTreeSet<Vertex> {
        BTreeSet::from([self.s_entry, self.t_entry])
    }

    pub fn delta_inner(&self) -> usize {
        let rest = self.graph.without(&self.entry_pair());
        if rest.is_empty() {
            0
        } else {
            rest.min_degree().unwrap()
        }
    }

    /// Interior vertices: everything but the entry pair.
    pub fn interior(&self) -> BTreeSet<Vertex> {
        self.graph.vertices().filter(|v| *v != self.s_entry && *v != self.t_entry).collect()
    }
}

// A single vertex covering all the listed edges: the common endpoint on the
// chosen side, if one exists.
fn common_endpoint(edges: &[(Vertex, Vertex)], right_side: bool) -> Option<Vertex> {
    let pick = |e: &(Vertex, Vertex)| if right_side { e.1 } else { e.0 };
    let first = pick(edges.first()?);
    edges.iter().all(|e| pick(e) == first).then_some(first)
}

/// Lemma-8 substitute: builds the 2-connected instance (K, s′, t′) for an
/// Erdős–Gallai component. The König cover vertex is used for R1 components
/// (preferring the path-side endpoint); the unique path attachment plus the
/// leaf-block cut vertex for R2/R3.
pub fn eg_component_to_instance(d: &EGDecomposition, idx: usize) -> Result<ComponentInstance> {
    let comp = d
        .eg_components
        .get(idx)
        .ok_or_else(|| Error::Precondition(format!("no eg_component with index {idx}")))?;
    let origin = &d.components[comp.origin];
    let p1set = d.p1.vertex_set();
    let p2set = d.p2.vertex_set();

    let (s_entry, t_entry) = match origin.kind {
        EgComponentType::R1 => {
            let e1 = edges_between(&d.host, &comp.vertices, &p1set);
            let e2 = edges_between(&d.host, &comp.vertices, &p2set);
            let s_entry = common_endpoint(&e1, true)
                .or_else(|| common_endpoint(&e1, false))
                .ok_or_else(|| Error::Internal("R1 component lost its P1 cover".into()))?;
            let t_entry = common_endpoint(&e2, true)
                .or_else(|| common_endpoint(&e2, false))
                .ok_or_else(|| Error::Internal("R1 component lost its P2 cover".into()))?;
            (s_entry, t_entry)
        }
        EgComponentType::R2 | EgComponentType::R3 => {
            let attach_set = if origin.kind == EgComponentType::R2 { &p1set } else { &p2set };
            let e = edges_between(&d.host, &origin.vertices, attach_set);
            let w = common_endpoint(&e, true)
                .ok_or_else(|| Error::Internal("separable component lost its attachment".into()))?;
            let c = comp
                .leaf_cut
                .ok_or_else(|| Error::Internal("leaf block without a cut vertex".into()))?;
            if origin.kind == EgComponentType::R2 {
                (w, c)
            } else {
                (c, w)
            }
        }
    };
    if s_entry == t_entry {
        return Err(Error::Internal("entry vertices coincide".into()));
    }

    let mut keep = comp.vertices.clone();
    keep.insert(s_entry);
    keep.insert(t_entry);
    let induced = d.host.induced(&keep);
    let virtual_entry_edge = !induced.has_edge(s_entry, t_entry);
    let graph = if virtual_entry_edge {
        induced.with_edge(s_entry, t_entry)?
    } else {
        induced
    };

    let instance = ComponentInstance { graph, s_entry, t_entry, virtual_entry_edge, origin: idx };

    // Contract assertions: 2-connectivity and the degree bound.
    if !instance.graph.is_two_connected() {
        return Err(Error::Internal(format!(
            "component instance not 2-connected (entries {s_entry}, {t_entry})"
        )));
    }
    let delta_host = d.delta_st();
    if instance.delta_inner() + 2 < delta_host {
        return Err(Error::Internal(format!(
            "degree bound violated: δ(K−{{s′,t′}}) = {} < δ(host−{{s,t}}) − 2 = {}",
            instance.delta_inner(),
            delta_host as i64 - 2
        )));
    }
    Ok(instance)
}

/// Outcome of the find-or-enlarge routine.
#[derive(Debug, Clone)]
pub enum PathOrDecomposition {
    Path(PathWitness),
    Decomposition(EGDecomposition),
}

/// Either an (s,t)-path of length ≥ min{5/4·δ(g−{s,t})−3, |V(g)|−1}, or an
/// Erdős–Gallai decomposition certified so that no (s,t)-path enters two of
/// its components (ordered pairs checked by a three-disjoint-paths search; a
/// hit is converted into the long combined path instead).
pub fn long_path_or_eg_decomposition(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    threshold: usize,
) -> Result<PathOrDecomposition> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    if s == t {
        return Err(Error::Precondition("s and t must differ".into()));
    }
    let delta_st = {
        let rest = g.without(&BTreeSet::from([s, t]));
        if rest.is_empty() {
            0
        } else {
            rest.min_degree()?
        }
    };
    if delta_st < 16 {
        return Err(Error::Precondition(format!(
            "δ(G−{{s,t}}) = {delta_st} < 16"
        )));
    }
    let n = g.n();
    let long_enough = |len: usize| 4 * len + 12 >= 5 * delta_st || len >= n - 1;

    // (a) rotation–extension enlargement
    let init = PathWitness::in_graph(g, g.shortest_path(s, t).ok_or(Error::DisconnectedPair(s, t))?)?;
    let target = (5 * delta_st).saturating_sub(12).div_ceil(4).min(n - 1);
    let grown = improve_st_path(g, &init, Some(target));
    if long_enough(grown.len()) {
        return Ok(PathOrDecomposition::Path(grown));
    }

    // (b) split enumeration on the stuck path
    if let Some(out) = try_splits(g, s, t, &grown, delta_st, threshold)? {
        return Ok(out);
    }

    // (c) exact fallback at desk scale
    if n <= threshold {
        let exact = exact_longest_st_path(g, s, t, threshold)?;
        if long_enough(exact.len()) {
            return Ok(PathOrDecomposition::Path(exact));
        }
        if let Some(out) = try_splits(g, s, t, &exact, delta_st, threshold)? {
            return Ok(out);
        }
    }
    Err(Error::Inconclusive(
        "no qualifying path found and no path split induces an Erdős–Gallai decomposition".into(),
    ))
}

// Enumerate (P1, P2) splits of the path, smallest combined end length first,
// and validate Definition 2; certified decompositions are returned, two-
// component traversals are converted into the long combined path.
fn try_splits(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    path: &PathWitness,
    delta_st: usize,
    threshold: usize,
) -> Result<Option<PathOrDecomposition>> {
    let len = path.len();
    if len < delta_st {
        return Ok(None);
    }
    for total_ends in 0..=(len - delta_st) {
        for a in 0..=total_ends {
            let tail = total_ends - a;
            let b = len - tail;
            let p1 = path.subpath(0, a);
            let p2 = path.subpath(b, len);
            let Ok(d) = validate_eg_decomposition(g, s, t, path, &p1, &p2) else {
                continue;
            };
            match certify_or_bridge(&d, threshold)? {
                None => return Ok(Some(PathOrDecomposition::Decomposition(d))),
                Some(long_path) => return Ok(Some(PathOrDecomposition::Path(long_path))),
            }
        }
    }
    Ok(None)
}

/// The certificate behind the decomposition outcome: for every ordered pair
/// of components and every entry permutation, no three disjoint paths realize
/// an (s,t)-path through both. A hit is turned into a path of length at least
/// 2·δ(G−{s,t})−4.
fn certify_or_bridge(d: &EGDecomposition, threshold: usize) -> Result<Option<PathWitness>> {
    let g = &d.host;
    let m = d.eg_components.len();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let ki = eg_component_to_instance(d, i)?;
            let kj = eg_component_to_instance(d, j)?;
            for (a1, b1) in [(ki.s_entry, ki.t_entry), (ki.t_entry, ki.s_entry)] {
                for (a2, b2) in [(kj.s_entry, kj.t_entry), (kj.t_entry, kj.s_entry)] {
                    // Search graph: interiors are only reachable through the
                    // entries, so removing them is complete.
                    let mut removed: BTreeSet<Vertex> = ki
                        .interior()
                        .into_iter()
                        .chain(kj.interior())
                        .collect();
                    removed.remove(&a1);
                    removed.remove(&b1);
                    removed.remove(&a2);
                    removed.remove(&b2);
                    let outer = g.without(&removed);
                    let legs = [(d.s, a1), (b1, a2), (b2, d.t)];
                    if legs.iter().any(|(x, y)| !outer.contains_vertex(*x) || !outer.contains_vertex(*y)) {
                        continue;
                    }
                    let Some([l1, l2, l3]) = three_disjoint_paths(&outer, legs) else {
                        continue;
                    };
                    let inside1 = instance_long_path(&ki, a1, b1, threshold)?;
                    let inside2 = instance_long_path(&kj, a2, b2, threshold)?;
                    let combined = PathWitness::concat(
                        g,
                        &[&l1, &inside1, &l2, &inside2, &l3],
                    )?;
                    let floor = (2 * d.delta_st()).saturating_sub(4);
                    if combined.len() < floor {
                        return Err(Error::Internal(format!(
                            "combined two-component path too short: {} < {floor}",
                            combined.len()
                        )));
                    }
                    return Ok(Some(combined));
                }
            }
        }
    }
    Ok(None)
}

/// Long (a,b)-path inside a component instance, never using a virtual entry
/// edge.
pub(crate) fn instance_long_path(
    inst: &ComponentInstance,
    a: Vertex,
    b: Vertex,
    threshold: usize,
) -> Result<PathWitness> {
    let bound_set = BTreeSet::from([inst.s_entry, inst.t_entry]);
    let p = eg_long_st_path(&inst.graph, a, b, &bound_set, threshold)?;
    if inst.virtual_entry_edge && p.len() == 1 {
        // the only path using the virtual edge is the edge itself
        let interior = inst.interior();
        let via = inst
            .graph
            .without_edge(inst.s_entry, inst.t_entry)?
            .shortest_path(a, b)
            .ok_or_else(|| Error::Internal("no real entry-to-entry path through the component".into()))?;
        let candidate = PathWitness::in_graph(&inst.graph, via)?;
        debug_assert!(candidate.vertices().iter().any(|v| interior.contains(v)));
        return Ok(candidate);
    }
    Ok(p)
}

/// Lemma-6 substitute: a (c,v)-path of length at least ½(δ(H)−|S|) ending at
/// the cut vertex of some leaf block, avoiding that block's inner vertices.
/// When the bound is nonpositive any shortest connection qualifies.
pub fn long_path_in_separable(
    h: &Graph,
    s_set: &BTreeSet<Vertex>,
    v: Vertex,
    threshold: usize,
) -> Result<(Vertex, PathWitness)> {
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let tree = block_cut_tree(h)?;
    if tree.cut_vertices.is_empty() {
        return Err(Error::Precondition("H has no cut vertex".into()));
    }
    let leaf_inner = tree.leaf_inner_vertices();
    if leaf_inner.contains(&v) {
        return Err(Error::Precondition("v is an inner vertex of a leaf block".into()));
    }
    if s_set.iter().any(|x| leaf_inner.contains(x)) {
        return Err(Error::Precondition("S intersects leaf-block inner vertices".into()));
    }
    let delta = h.min_degree()?;
    let bound2 = delta as i64 - s_set.len() as i64; // 2·len ≥ bound2

    let mut best: Option<(Vertex, PathWitness)> = None;
    for &bidx in &tree.leaf_blocks {
        let Some(c) = tree.leaf_block_cut_vertex(bidx) else { continue };
        let inner = &tree.inner_vertices[bidx];
        if inner.contains(&v) {
            continue;
        }
        let sub = h.without(inner);
        if v == c {
            let p = PathWitness::new(vec![c]).unwrap();
            if 2 * 0 >= bound2 {
                return Ok((c, p));
            }
            continue;
        }
        let Some(init) = sub.shortest_path(c, v) else { continue };
        let start = PathWitness::in_graph(&sub, init)?;
        let improved = improve_st_path(&sub, &start, Some(bound2.max(0) as usize));
        let candidate = if 2 * improved.len() as i64 >= bound2 {
            improved
        } else if sub.n() <= threshold {
            exact_longest_st_path(&sub, c, v, threshold)?
        } else {
            improved
        };
        if 2 * candidate.len() as i64 >= bound2 {
            let cand = candidate.oriented_from(c)?;
            if best.as_ref().map_or(true, |(_, b)| cand.len() > b.len()) {
                best = Some((c, cand));
            }
        }
    }
    best.ok_or_else(|| {
        Error::Internal(format!(
            "no leaf block admits a (c,v)-path meeting the ½(δ(H)−|S|) bound (δ={delta}, |S|={})",
            s_set.len()
        ))
    })
}

/// The boost construction: turns an (s,t)-path Q that avoids every
/// Erdős–Gallai component into one of length at least
/// min{δ(G−{s,t})+k−1, 3/2·δ(G−{s,t})−5/2·k−1}.
pub fn boost_non_entering_path(
    d: &EGDecomposition,
    q: &PathWitness,
    k: usize,
    threshold: usize,
) -> Result<PathWitness> {
    let g = &d.host;
    q.check(g)
        .map_err(|v| Error::Precondition(format!("Q invalid: {v}")))?;
    if q.s() != d.s || q.t() != d.t {
        return Err(Error::Precondition("Q endpoints must be s and t".into()));
    }
    let delta_st = d.delta_st();
    if d.path.len() > delta_st + k {
        return Err(Error::Precondition(format!(
            "P longer than δ(G−{{s,t}})+k = {}",
            delta_st + k
        )));
    }
    if q.len() < 4 * k + 5 {
        return Err(Error::Precondition(format!("Q shorter than 4k+5 = {}", 4 * k + 5)));
    }
    for comp in &d.eg_components {
        if EGDecomposition::enters(q, &comp.vertices) {
            return Err(Error::Precondition("Q enters an Erdős–Gallai component".into()));
        }
    }

    let qv = q.vertices();
    let mut st_union: BTreeSet<Vertex> = qv[..k].iter().copied().collect();
    st_union.extend(qv[qv.len() - k..].iter().copied());
    let separator = d.separator();

    // An edge on the middle of Q avoiding P1 ∪ P2 entirely.
    let mid_range = k..qv.len() - 1 - k;
    let (u, v) = mid_range
        .clone()
        .map(|i| (qv[i], qv[i + 1]))
        .find(|&(a, b)| !separator.contains(&a) && !separator.contains(&b))
        .ok_or_else(|| Error::Internal("middle of Q must contain a separator-free edge".into()))?;

    // Its component must be separable.
    let comp_idx = d
        .components
        .iter()
        .position(|c| c.vertices.contains(&u))
        .ok_or_else(|| Error::Internal("edge endpoint outside every component".into()))?;
    let comp = &d.components[comp_idx];
    if comp.kind == EgComponentType::R1 || !comp.vertices.contains(&v) {
        return Err(Error::Internal("selected edge is not inside a separable component".into()));
    }

    // Mirror R3 into the R2 orientation: the attach side carries the unique
    // path attachment, the other side the leaf blocks' outside neighbors.
    let (attach, other, mirrored) = match comp.kind {
        EgComponentType::R2 => (&d.p1, &d.p2, false),
        EgComponentType::R3 => (&d.p2, &d.p1, true),
        EgComponentType::R1 => unreachable!(),
    };

    let h = g.induced(&comp.vertices);
    let tree = block_cut_tree(&h)?;
    let attach_set = attach.vertex_set();
    let other_set = other.vertex_set();
    let w1 = {
        let e = edges_between(g, &comp.vertices, &attach_set);
        common_endpoint(&e, true)
            .ok_or_else(|| Error::Internal("separable component lost its unique attachment".into()))?
    };

    let s_h: BTreeSet<Vertex> =
        st_union.iter().copied().filter(|x| comp.vertices.contains(x)).collect();
    let h_avail = h.without(&s_h);
    let leaf_cuts: BTreeSet<Vertex> = tree
        .leaf_blocks
        .iter()
        .filter_map(|&b| tree.leaf_block_cut_vertex(b))
        .collect();

    // Case B when u or v reaches a leaf-block cut vertex avoiding S ∪ T.
    let reach_of = |x: Vertex| -> Option<Vertex> {
        if !h_avail.contains_vertex(x) {
            return None;
        }
        let r = h_avail.reachable_from(x);
        leaf_cuts.iter().copied().find(|c| r.contains(c))
    };
    let case_b = [v, u].into_iter().find_map(|x| reach_of(x).map(|c| (x, c)));

    let result = match case_b {
        Some((x, c)) => boost_case_b(d, q, threshold, &h, &h_avail, &tree, x, c, w1, attach, mirrored)?,
        None => boost_case_a(d, threshold, &h, &tree, &s_h, w1, attach, &other_set, mirrored)?,
    };

    // min{δ'+k−1, 3/2·δ' − 5/2·k − 1} as exact integer comparisons
    let len = result.len() as i64;
    let dd = delta_st as i64;
    let kk = k as i64;
    if !(len >= dd + kk - 1 || 2 * len >= 3 * dd - 5 * kk - 2) {
        return Err(Error::Internal(format!(
            "boost bound violated: len {len}, δ'={dd}, k={kk}"
        )));
    }
    Ok(result)
}

// Case A: S ∪ T separates the chosen edge from every leaf-block cut vertex.
// Lemma 6 gives a long (c,w)-path toward a vertex attached to the other
// path; the leaf block contributes another δ(L−c) edges.
#[allow(clippy::too_many_arguments)]
fn boost_case_a(
    d: &EGDecomposition,
    threshold: usize,
    h: &Graph,
    tree: &crate::blocks::BlockTree,
    s_h: &BTreeSet<Vertex>,
    w1: Vertex,
    attach: &PathWitness,
    other_set: &BTreeSet<Vertex>,
    mirrored: bool,
) -> Result<PathWitness> {
    let g = &d.host;
    let leaf_inner = tree.leaf_inner_vertices();
    // w: a component vertex attached to the other path (never leaf-inner).
    let w = h
        .vertices()
        .filter(|&x| !leaf_inner.contains(&x))
        .find(|&x| {
            g.neighbors(x).map(|ns| ns.iter().any(|y| other_set.contains(y))).unwrap_or(false)
        })
        .ok_or_else(|| Error::Internal("no attachment to the other path in the component".into()))?;

    let (c, h_path) = long_path_in_separable(h, s_h, w, threshold)?;
    let block_idx = tree
        .leaf_blocks
        .iter()
        .copied()
        .find(|&b| tree.leaf_block_cut_vertex(b) == Some(c))
        .ok_or_else(|| Error::Internal("cut vertex without its leaf block".into()))?;
    let block_set = &tree.blocks[block_idx];
    let z = block_set
        .iter()
        .copied()
        .find(|&x| x != c && g.has_edge(x, w1))
        .ok_or_else(|| Error::Internal("leaf block has no vertex adjacent to the attachment".into()))?;
    let inside = leaf_block_path(g, block_set, c, z, c, threshold)?.reversed(); // z → c

    // attach[outer..w1] + (w1 z) + inside(z..c) + h_path(c..w) + (w y) + other[y..outer]
    let attach_prefix = attach_outer_to(attach, w1, mirrored)?;
    let y = g
        .neighbors(w)?
        .iter()
        .copied()
        .find(|x| other_set.contains(x))
        .expect("w chosen for its other-path neighbor");
    let other_tail = other_from(d, y, mirrored)?;

    let mut verts = attach_prefix;
    verts.push(z);
    verts.extend(&inside.vertices()[1..]);
    verts.extend(&h_path.vertices()[1..]);
    verts.push(y);
    verts.extend(&other_tail[1..]);
    if mirrored {
        verts.reverse();
    }
    PathWitness::in_graph(g, verts)
}

// Case B: a leaf-block cut vertex c is reachable from x avoiding S ∪ T. Build
// the detour Q' = x → c → (leaf block) → w → w1 → attach path, then splice Q'
// into Q between its last Q-vertex before c and first Q-vertex after w.
#[allow(clippy::too_many_arguments)]
fn boost_case_b(
    d: &EGDecomposition,
    q: &PathWitness,
    threshold: usize,
    _h: &Graph,
    h_avail: &Graph,
    tree: &crate::blocks::BlockTree,
    x: Vertex,
    c: Vertex,
    w1: Vertex,
    attach: &PathWitness,
    mirrored: bool,
) -> Result<PathWitness> {
    let g = &d.host;
    let block_idx = tree
        .leaf_blocks
        .iter()
        .copied()
        .find(|&b| tree.leaf_block_cut_vertex(b) == Some(c))
        .ok_or_else(|| Error::Internal("cut vertex without its leaf block".into()))?;
    let block_set = &tree.blocks[block_idx];
    let w = block_set
        .iter()
        .copied()
        .find(|&z| z != c && g.has_edge(z, w1))
        .ok_or_else(|| Error::Internal("leaf block has no vertex adjacent to the attachment".into()))?;

    // A simple path cannot enter the leaf block before reaching c, so this
    // BFS stays clear of the block interior.
    let to_c = h_avail
        .shortest_path(x, c)
        .ok_or_else(|| Error::Internal("certified reachability vanished".into()))?;
    let inside = leaf_block_path(g, block_set, c, w, c, threshold)?; // c → w

    let mut qprime: Vec<Vertex> = to_c;
    qprime.extend(&inside.vertices()[1..]);
    qprime.push(w1);
    let outer_to_w1 = attach_outer_to(attach, w1, mirrored)?;
    qprime.extend(outer_to_w1.iter().rev().skip(1)); // w1 → outer end

    // x' = last Q-vertex at position ≤ pos(c); y = first Q-vertex after w.
    let qset = q.vertex_set();
    let pos_c = qprime.iter().position(|&z| z == c).unwrap();
    let pos_w = qprime.iter().position(|&z| z == w).unwrap();
    let xi = (0..=pos_c)
        .rev()
        .find(|&i| qset.contains(&qprime[i]))
        .ok_or_else(|| Error::Internal("Q' must start on Q".into()))?;
    let yi = (pos_w + 1..qprime.len())
        .find(|&i| qset.contains(&qprime[i]))
        .ok_or_else(|| Error::Internal("Q' must rejoin Q".into()))?;
    let xv = qprime[xi];
    let yv = qprime[yi];
    let qx = q.position(xv).unwrap();
    let qy = q.position(yv).unwrap();

    let mut verts: Vec<Vertex> = Vec::new();
    if qy <= qx {
        // Q[s..y] + Q'[y down to x] + Q[x..t]
        verts.extend(&q.vertices()[..=qy]);
        verts.extend(qprime[xi..=yi].iter().rev().skip(1));
        verts.extend(&q.vertices()[qx + 1..]);
    } else {
        // Q[s..x] + Q'[x..y] + Q[y..t]
        verts.extend(&q.vertices()[..=qx]);
        verts.extend(&qprime[xi + 1..=yi]);
        verts.extend(&q.vertices()[qy + 1..]);
    }
    PathWitness::in_graph(g, verts)
}

// Corollary-3 path inside a leaf block between a and b, where `cut` is the
// block's cut vertex (excluded from the degree bound); K2 blocks are the edge.
fn leaf_block_path(
    g: &Graph,
    block: &BTreeSet<Vertex>,
    a: Vertex,
    b: Vertex,
    cut: Vertex,
    threshold: usize,
) -> Result<PathWitness> {
    let sub = g.induced(block);
    if block.len() == 2 {
        return PathWitness::in_graph(&sub, vec![a, b]);
    }
    eg_long_st_path(&sub, a, b, &BTreeSet::from([cut]), threshold)
}

// The attach path runs between an outer endpoint (s for P1, t for P2) and
// the middle of P; return outer end → w1 inclusive.
fn attach_outer_to(attach: &PathWitness, w1: Vertex, mirrored: bool) -> Result<Vec<Vertex>> {
    let pos = attach
        .position(w1)
        .ok_or_else(|| Error::Internal("attachment vertex not on its path".into()))?;
    let verts = attach.vertices();
    Ok(if mirrored {
        // attach = P2 runs ...→ t; the outer end is t
        verts[pos..].iter().rev().copied().collect()
    } else {
        verts[..=pos].to_vec()
    })
}

// The other path piece from y to its outer end (t for P2, s for P1 mirrored).
fn other_from(d: &EGDecomposition, y: Vertex, mirrored: bool) -> Result<Vec<Vertex>> {
    let other = if mirrored { &d.p1 } else { &d.p2 };
    let pos = other
        .position(y)
        .ok_or_else(|| Error::Internal("other-path vertex not on its path".into()))?;
    let verts = other.vertices();
    Ok(if mirrored {
        verts[..=pos].iter().rev().copied().collect()
    } else {
        verts[pos..].to_vec()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn two_clique_decomposition(block: usize) -> (Graph, Vertex, Vertex, PathWitness, PathWitness, PathWitness) {
        let (g, s, t, a, _b) = fixtures::two_clique_eg_host(block);
        let mut pv = vec![s];
        pv.extend(&a);
        pv.push(t);
        let p = PathWitness::in_graph(&g, pv).unwrap();
        let p1 = PathWitness::new(vec![s]).unwrap();
        let p2 = PathWitness::new(vec![t]).unwrap();
        (g, s, t, p, p1, p2)
    }

    #[test]
    fn two_clique_family_validates() {
        let (g, s, t, p, p1, p2) = two_clique_decomposition(3);
        let d = validate_eg_decomposition(&g, s, t, &p, &p1, &p2).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d.components.iter().all(|c| c.kind == EgComponentType::R1));
        assert_eq!(d.eg_components.len(), 2);
        assert_eq!(d.delta_st(), 2);
    }

    #[test]
    fn single_component_rejected() {
        // remove clique B: only one component remains
        let (g, s, t, p, p1, p2) = two_clique_decomposition(3);
        let bset: BTreeSet<Vertex> = (6..9).collect();
        let host = g.without(&bset);
        let err = validate_eg_decomposition(&host, s, t, &p, &p1, &p2).unwrap_err();
        assert_eq!(err, EgViolation::TooFewComponents { got: 1 });
    }

    #[test]
    fn small_component_rejected() {
        // shrink clique B to two vertices
        let (g, s, t, p, p1, p2) = two_clique_decomposition(3);
        let host = g.without(&BTreeSet::from([8]));
        let err = validate_eg_decomposition(&host, s, t, &p, &p1, &p2).unwrap_err();
        assert!(matches!(err, EgViolation::ComponentTooSmall { .. }));
    }

    #[test]
    fn matching_violation_detected() {
        // an extra s-edge into clique A is fine (still a star at s); an extra
        // vertex on P1 with its own edge into A breaks the matching clause.
        let (g, s, t, p, _p1, p2) = two_clique_decomposition(3);
        // extend P: s, x, a1, a2, a3, t where x is a new P1 vertex
        let x = 100;
        let host = g.with_vertex(x);
        let host = host.with_edge(s, x).unwrap();
        let host = host.with_edge(x, 3).unwrap(); // a1 = 3
        let host = host.with_edge(x, 4).unwrap(); // chord to keep x on P
        let pv = {
            let mut v = vec![s, x];
            v.extend(&p.vertices()[1..]);
            v
        };
        let path = PathWitness::in_graph(&host, pv).unwrap();
        let p1 = PathWitness::new(vec![s, x]).unwrap();
        let err = validate_eg_decomposition(&host, s, t, &path, &p1, &p2).unwrap_err();
        // A attaches to both s and x: matching 2
        assert!(matches!(err, EgViolation::MatchingToP1NotOne { .. }));
    }

    #[test]
    fn component_instances_of_two_clique_family() {
        let (g, s, t, p, p1, p2) = two_clique_decomposition(3);
        let d = validate_eg_decomposition(&g, s, t, &p, &p1, &p2).unwrap();
        for i in 0..d.eg_components.len() {
            let inst = eg_component_to_instance(&d, i).unwrap();
            assert_eq!(inst.s_entry, s);
            assert_eq!(inst.t_entry, t);
            assert_eq!(inst.graph.n(), 5);
            assert!(inst.virtual_entry_edge);
            assert!(inst.graph.is_two_connected());
            assert!(inst.delta_inner() + 2 >= d.delta_st());
        }
        let _ = g;
    }

    #[test]
    fn or_tunnel_on_complete_graph_returns_path() {
        // K20: Hamiltonian path exists; δ(G−{s,t}) = 17 ≥ 16
        let g = fixtures::complete(20);
        match long_path_or_eg_decomposition(&g, 1, 2, 18).unwrap() {
            PathOrDecomposition::Path(p) => {
                assert!(p.len() >= 19, "expected Hamiltonian-length path, got {}", p.len());
            }
            PathOrDecomposition::Decomposition(_) => panic!("complete graph cannot decompose"),
        }
    }

    #[test]
    fn or_tunnel_on_planted_family_decomposes() {
        // block 22: longest path b+1 = 23 < 5/4·21 − 3 = 23.25, so the path
        // outcome is unreachable and the decomposition must be found.
        let (g, s, t, _, _, _) = two_clique_decomposition(22);
        match long_path_or_eg_decomposition(&g, s, t, 18).unwrap() {
            PathOrDecomposition::Decomposition(d) => {
                assert_eq!(d.components.len(), 2);
                assert!(d.components.iter().all(|c| c.kind == EgComponentType::R1));
            }
            PathOrDecomposition::Path(p) => panic!("unexpected path of length {}", p.len()),
        }
    }

    #[test]
    fn or_tunnel_rejects_low_degree() {
        let g = fixtures::cycle(8);
        let err = long_path_or_eg_decomposition(&g, 1, 2, 18).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn separable_long_path_barbell() {
        // two K5s joined by a 3-edge bridge path; v = middle bridge vertex
        let h = fixtures::barbell(5, 2);
        let v = 6; // first internal bridge vertex
        let (c, p) = long_path_in_separable(&h, &BTreeSet::new(), v, 18).unwrap();
        assert!(p.len() >= 1);
        assert_eq!(p.s(), c);
        assert_eq!(p.t(), v);
        let delta = h.min_degree().unwrap() as i64;
        assert!(2 * p.len() as i64 >= delta);
    }

    #[test]
    fn separable_with_excluded_set() {
        let h = fixtures::barbell(5, 2);
        let v = 6;
        let s_set = BTreeSet::from([7]); // other bridge vertex separates v from the right K5
        let (c, p) = long_path_in_separable(&h, &s_set, v, 18).unwrap();
        let delta = h.min_degree().unwrap() as i64;
        assert!(2 * p.len() as i64 >= delta - 1);
        assert_eq!(p.s(), c);
    }
}
