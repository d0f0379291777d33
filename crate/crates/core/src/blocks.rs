use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Block–cut structure of a connected graph: blocks (vertex sets), cut
/// vertices, which blocks are leaves of the block–cut tree, and the inner
/// (non-cut) vertices of each block.
#[derive(Debug, Clone)]
pub struct BlockTree {
    pub blocks: Vec<BTreeSet<Vertex>>,
    pub cut_vertices: BTreeSet<Vertex>,
    /// Indices into `blocks`.
    pub leaf_blocks: Vec<usize>,
    /// Per-block inner vertices (block vertices that are not cut vertices).
    pub inner_vertices: Vec<BTreeSet<Vertex>>,
}

impl BlockTree {
    /// Union of inner vertices over leaf blocks.
    pub fn leaf_inner_vertices(&self) -> BTreeSet<Vertex> {
        self.leaf_blocks
            .iter()
            .flat_map(|&b| self.inner_vertices[b].iter().copied())
            .collect()
    }

    /// The unique cut vertex of a leaf block, when the graph has >= 2 blocks.
    pub fn leaf_block_cut_vertex(&self, block: usize) -> Option<Vertex> {
        let cuts: Vec<Vertex> = self.blocks[block]
            .iter()
            .copied()
            .filter(|v| self.cut_vertices.contains(v))
            .collect();
        if cuts.len() == 1 {
            Some(cuts[0])
        } else {
            None
        }
    }

    pub fn block_containing(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.contains(&u) && b.contains(&v))
    }
}

/// Blocks and cut vertices of a connected graph (Hopcroft–Tarjan lowpoint
/// DFS). Errors on a disconnected input.
pub fn block_cut_tree(g: &Graph) -> Result<BlockTree> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.n() == 1 {
        let v = g.vertices().next().unwrap();
        return Ok(BlockTree {
            blocks: vec![BTreeSet::from([v])],
            cut_vertices: BTreeSet::new(),
            leaf_blocks: vec![0],
            inner_vertices: vec![BTreeSet::from([v])],
        });
    }

    let mut disc: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut low: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut cut_vertices: BTreeSet<Vertex> = BTreeSet::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks: Vec<BTreeSet<Vertex>> = Vec::new();
    let mut timer = 0usize;

    let root = g.vertices().next().unwrap();
    // Iterative DFS; frame = (vertex, parent, neighbor iterator position).
    let mut stack: Vec<(Vertex, Option<Vertex>, Vec<Vertex>, usize)> = Vec::new();
    disc.insert(root, timer);
    low.insert(root, timer);
    timer += 1;
    let root_nbrs: Vec<Vertex> = g.neighbors(root)?.iter().copied().collect();
    stack.push((root, None, root_nbrs, 0));
    let mut root_children = 0usize;

    while let Some(frame) = stack.last_mut() {
        let (v, parent, nbrs, idx) = (frame.0, frame.1, frame.2.clone(), frame.3);
        if idx < nbrs.len() {
            frame.3 += 1;
            let u = nbrs[idx];
            if Some(u) == parent {
                continue;
            }
            if let Some(&du) = disc.get(&u) {
                // back edge
                if du < disc[&v] {
                    edge_stack.push((v, u));
                    let lv = low[&v].min(du);
                    low.insert(v, lv);
                }
            } else {
                edge_stack.push((v, u));
                disc.insert(u, timer);
                low.insert(u, timer);
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                let u_nbrs: Vec<Vertex> = g.neighbors(u)?.iter().copied().collect();
                stack.push((u, Some(v), u_nbrs, 0));
            }
        } else {
            stack.pop();
            if let Some(pframe) = stack.last() {
                let p = pframe.0;
                let lv = low[&v];
                if lv < low[&p] {
                    low.insert(p, lv);
                }
                if lv >= disc[&p] {
                    // p closes a block: everything pushed after edge (p, v)
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    blocks.push(block);
                    if p != root {
                        cut_vertices.insert(p);
                    }
                }
            }
        }
    }
    if root_children > 1 {
        cut_vertices.insert(root);
    }

    let inner_vertices: Vec<BTreeSet<Vertex>> = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|v| !cut_vertices.contains(v)).collect())
        .collect();
    // A block is a leaf iff it contains at most one cut vertex (a single
    // block is its own leaf).
    let leaf_blocks: Vec<usize> = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.iter().filter(|v| cut_vertices.contains(v)).count() <= 1)
        .map(|(i, _)| i)
        .collect();

    let tree = BlockTree { blocks, cut_vertices, leaf_blocks, inner_vertices };
    debug_assert!(block_invariants_hold(g, &tree));
    Ok(tree)
}

fn block_invariants_hold(g: &Graph, t: &BlockTree) -> bool {
    // Every edge in exactly one block; blocks pairwise share at most one vertex.
    let mut edge_count: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for b in &t.blocks {
        let sub = g.induced(b);
        for e in sub.edges() {
            *edge_count.entry(e).or_insert(0) += 1;
        }
    }
    if g.edges().any(|e| edge_count.get(&e) != Some(&1)) {
        return false;
    }
    for i in 0..t.blocks.len() {
        for j in i + 1..t.blocks.len() {
            if t.blocks[i].intersection(&t.blocks[j]).count() > 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn path_graph_blocks() {
        let t = block_cut_tree(&fixtures::path_graph(3)).unwrap();
        assert_eq!(t.blocks.len(), 2);
        assert!(t.blocks.contains(&BTreeSet::from([1, 2])));
        assert!(t.blocks.contains(&BTreeSet::from([2, 3])));
        assert_eq!(t.cut_vertices, BTreeSet::from([2]));
        assert_eq!(t.leaf_blocks.len(), 2);
    }

    #[test]
    fn triangle_single_block() {
        let t = block_cut_tree(&fixtures::cycle(3)).unwrap();
        assert_eq!(t.blocks.len(), 1);
        assert!(t.cut_vertices.is_empty());
        assert_eq!(t.leaf_blocks, vec![0]);
    }

    #[test]
    fn two_triangles_cut_vertex() {
        // Exhaustive cut-vertex scan agrees with the block structure.
        let g = fixtures::two_triangles_shared_vertex();
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks.len(), 2);
        assert_eq!(t.cut_vertices, BTreeSet::from([3]));
        assert_eq!(t.leaf_blocks.len(), 2);
        for &b in &t.leaf_blocks {
            let inner = &t.inner_vertices[b];
            assert_eq!(inner.len(), 2);
            assert!(!inner.contains(&3));
        }
        for v in g.vertices() {
            let brute_cut = !g.without(&BTreeSet::from([v])).is_connected();
            assert_eq!(t.cut_vertices.contains(&v), brute_cut, "vertex {v}");
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new([1, 2, 3, 4], [(1, 2), (3, 4)]).unwrap();
        assert_eq!(block_cut_tree(&g).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn barbell_blocks() {
        let g = fixtures::barbell(4, 2);
        let t = block_cut_tree(&g).unwrap();
        // two K4 blocks + 3 bridge-edge blocks
        assert_eq!(t.blocks.len(), 5);
        assert_eq!(t.leaf_blocks.len(), 2);
        for &b in &t.leaf_blocks {
            assert_eq!(t.blocks[b].len(), 4);
            assert!(t.leaf_block_cut_vertex(b).is_some());
        }
    }
}
