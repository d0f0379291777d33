use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::witness::PathWitness;

/// One edge contraction: `removed` was merged into `survivor`.
/// `original_edge` is the edge as named by the caller (before any merges in
/// the same log resolved its endpoints).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractionRecord {
    pub survivor: Vertex,
    pub removed: Vertex,
    pub original_edge: (Vertex, Vertex),
}

/// Ordered list of contractions. Replaying the log forward on the original
/// graph reproduces the contracted graph; `reverse_path` maps witnesses back.
#[derive(Debug, Clone, Default)]
pub struct ContractionLog {
    records: Vec<ContractionRecord>,
}

impl ContractionLog {
    pub fn records(&self) -> &[ContractionRecord] {
        &self.records
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Representative of `v` after all contractions in the log.
    pub fn representative(&self, v: Vertex) -> Vertex {
        let mut cur = v;
        for rec in &self.records {
            if cur == rec.removed {
                cur = rec.survivor;
            }
        }
        cur
    }

    /// Replays the log on a graph, returning each intermediate graph;
    /// result[0] is the input, result[len] the fully contracted graph.
    pub fn replay(&self, g: &Graph) -> Result<Vec<Graph>> {
        let mut stages = vec![g.clone()];
        for rec in &self.records {
            let cur = stages.last().unwrap();
            stages.push(contract_one(cur, rec.survivor, rec.removed)?);
        }
        Ok(stages)
    }
}

fn contract_one(g: &Graph, survivor: Vertex, removed: Vertex) -> Result<Graph> {
    if !g.has_edge(survivor, removed) {
        return Err(Error::MissingEdge(survivor.min(removed), survivor.max(removed)));
    }
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        if v == removed {
            continue;
        }
        adj.entry(v).or_default();
    }
    for (u, v) in g.edges() {
        let a = if u == removed { survivor } else { u };
        let b = if v == removed { survivor } else { v };
        if a == b {
            continue; // the contracted edge itself
        }
        adj.get_mut(&a).unwrap().push(b);
        adj.get_mut(&b).unwrap().push(a);
    }
    let vertices: Vec<Vertex> = adj.keys().copied().collect();
    let edges: Vec<(Vertex, Vertex)> = adj
        .iter()
        .flat_map(|(&a, nbrs)| nbrs.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
        .collect();
    Graph::new(vertices, edges)
}

/// Contracts the listed edges in order. Endpoints are resolved through
/// earlier contractions of the same call, so callers may name edges in the
/// original labels. The smaller label survives each merge.
pub fn contract_edges(g: &Graph, edges: &[(Vertex, Vertex)]) -> Result<(Graph, ContractionLog)> {
    let mut current = g.clone();
    let mut log = ContractionLog::default();
    for &(u0, v0) in edges {
        let u = log.representative(u0);
        let v = log.representative(v0);
        if u == v {
            return Err(Error::Precondition(format!(
                "edge {{{u0}, {v0}}} already merged into one vertex"
            )));
        }
        if !current.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let survivor = u.min(v);
        let removed = u.max(v);
        current = contract_one(&current, survivor, removed)?;
        log.records.push(ContractionRecord { survivor, removed, original_edge: (u0, v0) });
    }
    Ok((current, log))
}

/// Maps a path witness in the contracted graph back to one in the original
/// graph, expanding each merged vertex the path visits. The result is at
/// least as long as the input. `endpoints`, when given, pins which original
/// vertex each end of the path must resolve to.
pub fn reverse_path(
    original: &Graph,
    log: &ContractionLog,
    path: &PathWitness,
    endpoints: Option<(Vertex, Vertex)>,
) -> Result<PathWitness> {
    let stages = log.replay(original)?;
    let n_rec = log.records.len();

    // Representative of a vertex after the first `t` records.
    let rep_after = |v: Vertex, t: usize| -> Vertex {
        let mut cur = v;
        for rec in &log.records[..t] {
            if cur == rec.removed {
                cur = rec.survivor;
            }
        }
        cur
    };

    let mut vertices: Vec<Vertex> = path.vertices().to_vec();
    // Walk records backward; after undoing record t the path must be valid in
    // stages[t].
    for t in (0..n_rec).rev() {
        let rec = log.records[t];
        let pre = &stages[t]; // graph before this contraction
        let Some(pos) = vertices.iter().position(|&v| v == rec.survivor) else {
            continue; // record does not affect the path
        };
        let prev = if pos > 0 { Some(vertices[pos - 1]) } else { None };
        let next = if pos + 1 < vertices.len() { Some(vertices[pos + 1]) } else { None };

        // Endpoint requirements at this stage.
        let required_here = |is_start: bool| -> Option<Vertex> {
            endpoints.map(|(s, t_end)| rep_after(if is_start { s } else { t_end }, t))
        };

        let (u, w) = (rec.survivor, rec.removed);
        // Candidate expansions, longest first so expansion is preferred.
        let mut candidates: Vec<Vec<Vertex>> =
            vec![vec![u, w], vec![w, u], vec![u], vec![w]];
        candidates.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));

        let fits = |seq: &[Vertex]| -> bool {
            if let Some(p) = prev {
                if !pre.has_edge(p, seq[0]) {
                    return false;
                }
            } else if let Some(req) = required_here(true) {
                if seq[0] != req {
                    return false;
                }
            }
            if let Some(nx) = next {
                if !pre.has_edge(*seq.last().unwrap(), nx) {
                    return false;
                }
            } else if let Some(req) = required_here(false) {
                if *seq.last().unwrap() != req {
                    return false;
                }
            }
            true
        };

        let chosen = candidates
            .into_iter()
            .find(|c| fits(c))
            .ok_or_else(|| Error::Internal(format!("cannot expand merged vertex {u} at record {t}")))?;
        vertices.splice(pos..=pos, chosen);
    }

    let out = PathWitness::in_graph(original, vertices)?;
    if out.len() < path.len() {
        return Err(Error::Internal("reverse shortened the path".into()));
    }
    if let Some((s, t_end)) = endpoints {
        if out.s() != s || out.t() != t_end {
            return Err(Error::Internal("reverse lost the required endpoints".into()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn contract_triangle_edge() {
        let g = fixtures::cycle(3);
        let (h, log) = contract_edges(&g, &[(1, 2)]).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 1);
        assert_eq!(log.records().len(), 1);
        assert_eq!(log.records()[0].survivor, 1);
        assert_eq!(log.records()[0].removed, 2);
    }

    #[test]
    fn contract_c4_gives_triangle() {
        let g = fixtures::cycle(4);
        let (h, _) = contract_edges(&g, &[(1, 2)]).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
    }

    #[test]
    fn missing_edge_named() {
        let g = fixtures::cycle(4);
        let err = contract_edges(&g, &[(1, 3)]).unwrap_err();
        assert_eq!(err, Error::MissingEdge(1, 3));
    }

    #[test]
    fn replay_reproduces_contracted_graph() {
        let g = fixtures::petersen();
        let (h, log) = contract_edges(&g, &[(1, 2), (6, 9)]).unwrap();
        let stages = log.replay(&g).unwrap();
        assert_eq!(stages.last().unwrap(), &h);
    }

    #[test]
    fn reverse_expands_merged_vertex() {
        // C4 1-2-3-4, contract {1,2}: path 4-1-3 in the triangle uses the
        // merged vertex; reversal restores edge 1-2, gaining one edge.
        let g = fixtures::cycle(4);
        let (h, log) = contract_edges(&g, &[(1, 2)]).unwrap();
        let p = PathWitness::in_graph(&h, vec![4, 1, 3]).unwrap();
        let back = reverse_path(&g, &log, &p, Some((4, 3))).unwrap();
        assert_eq!(back.vertices(), &[4, 1, 2, 3]);
        assert_eq!(back.len(), p.len() + 1);
    }

    #[test]
    fn reverse_skips_untouched_records() {
        let g = fixtures::cycle(6);
        let (h, log) = contract_edges(&g, &[(1, 2)]).unwrap();
        let p = PathWitness::in_graph(&h, vec![4, 5, 6]).unwrap();
        let back = reverse_path(&g, &log, &p, Some((4, 6))).unwrap();
        assert_eq!(back.vertices(), &[4, 5, 6]);
    }
}
