use serde::{Deserialize, Serialize};

use super::MultiGraph;

/// An edge-cut: the edges crossing a vertex bipartition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    /// Edge indices, ascending.
    pub edges: Vec<usize>,
    /// The two sides; `sides.0` contains the smallest vertex id.
    pub sides: (Vec<usize>, Vec<usize>),
    /// Removing the cut leaves no isolated vertex.
    pub proper: bool,
}

/// A block together with the original ids of its vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: MultiGraph,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

struct Lowpoint {
    bridges: Vec<usize>,
    cut_vertex: Vec<bool>,
    /// Edge sets of the loopless biconnected pieces (loops are not included).
    pieces: Vec<Vec<usize>>,
}

/// One iterative Tarjan pass computing bridges, cut vertices and biconnected
/// edge sets. Parallel edges are told apart by index, so a doubled edge is
/// never a bridge.
fn lowpoint(g: &MultiGraph) -> Lowpoint {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut_vertex = vec![false; n];
    let mut bridges = Vec::new();
    let mut pieces = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut time = 0;

    // frame: (vertex, parent edge, next incidence position, tree children)
    let mut stack: Vec<(usize, usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0, 0));
        while let Some(frame) = stack.last_mut() {
            let (u, pe, pos, _) = *frame;
            if pos < inc[u].len() {
                frame.2 += 1;
                let (w, ei) = inc[u][pos];
                if ei == pe || w == u {
                    continue;
                }
                if disc[w] == usize::MAX {
                    frame.3 += 1;
                    edge_stack.push(ei);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, ei, 0, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(ei);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                let (w, tree_edge, _, children) = stack.pop().unwrap();
                if let Some(parent) = stack.last() {
                    let u = parent.0;
                    low[u] = low[u].min(low[w]);
                    if low[w] > disc[u] {
                        bridges.push(tree_edge);
                    }
                    if low[w] >= disc[u] {
                        if parent.1 != usize::MAX {
                            cut_vertex[u] = true;
                        }
                        let mut piece = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            piece.push(e);
                            if e == tree_edge {
                                break;
                            }
                        }
                        piece.sort_unstable();
                        pieces.push(piece);
                    }
                } else if children >= 2 {
                    cut_vertex[w] = true;
                }
            }
        }
    }
    bridges.sort_unstable();
    Lowpoint {
        bridges,
        cut_vertex,
        pieces,
    }
}

/// Indices of the cut edges (edges lying on no cycle). Loops are never bridges.
pub fn bridges(g: &MultiGraph) -> Vec<usize> {
    lowpoint(g).bridges
}

/// Vertices whose removal increases the number of components.
pub fn articulation_points(g: &MultiGraph) -> Vec<usize> {
    let lp = lowpoint(g);
    (0..g.vertex_count())
        .filter(|&v| lp.cut_vertex[v])
        .collect()
}

/// Block decomposition.
///
/// Every loop is its own block (a copy of `L`), every vertex without any
/// incident edge is a trivial one-vertex block, and the remaining blocks are
/// the biconnected pieces of the loopless part. Block edge sets partition
/// `E(G)`.
pub fn blocks(g: &MultiGraph) -> Vec<Block> {
    let lp = lowpoint(g);
    let mut out = Vec::new();
    for piece in lp.pieces {
        let (graph, vertices) = g.edge_subgraph(&piece);
        out.push(Block {
            graph,
            vertices,
            edges: piece,
        });
    }
    let deg = g.degrees();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            out.push(Block {
                graph: super::families::loop_graph(),
                vertices: vec![u],
                edges: vec![i],
            });
        }
    }
    for (v, &d) in deg.iter().enumerate() {
        if d == 0 {
            out.push(Block {
                graph: MultiGraph::empty(1),
                vertices: vec![v],
                edges: Vec::new(),
            });
        }
    }
    out.sort_by(|a, b| {
        let ka = (a.edges.first().copied(), a.vertices[0]);
        let kb = (b.edges.first().copied(), b.vertices[0]);
        ka.cmp(&kb)
    });
    out
}

/// `L`, or connected, loopless and free of cut vertices.
pub fn is_nonseparable(g: &MultiGraph) -> bool {
    if g.vertex_count() == 1 && g.edge_count() == 1 {
        return g.is_loop(0);
    }
    if g.has_loop() || !g.is_connected() {
        return false;
    }
    !lowpoint(g).cut_vertex.iter().any(|&c| c)
}

/// Connected, bridgeless and without a 2-edge-cut.
pub fn is_3_edge_connected(g: &MultiGraph) -> bool {
    if !g.is_connected() || !bridges(g).is_empty() {
        return false;
    }
    // {e, f} is a 2-edge-cut iff e is a bridge of G - f.
    (0..g.edge_count()).all(|f| g.is_loop(f) || bridges(&g.delete_edge(f).unwrap()).is_empty())
}

/// All distinct edge subsets of the given size that are exactly the crossing
/// set of some bipartition of `V`. Intended for connected graphs.
pub fn edge_cuts(g: &MultiGraph, size: usize) -> Vec<EdgeCut> {
    let candidates: Vec<usize> = (0..g.edge_count()).filter(|&i| !g.is_loop(i)).collect();
    let mut out = Vec::new();
    if size == 0 || size > candidates.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let subset: Vec<usize> = idx.iter().map(|&k| candidates[k]).collect();
        if let Some(cut) = as_edge_cut(g, &subset) {
            out.push(cut);
        }
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + candidates.len() - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// First proper 3-edge-cut, if any.
pub fn has_proper_three_cut(g: &MultiGraph) -> Option<EdgeCut> {
    edge_cuts(g, 3).into_iter().find(|c| c.proper)
}

/// Decide whether `subset` is the crossing set of a bipartition and build it.
fn as_edge_cut(g: &MultiGraph, subset: &[usize]) -> Option<EdgeCut> {
    let rest = g.delete_edges(subset).ok()?;
    let label = rest.component_labels();
    let comps = label.iter().max().map_or(0, |&l| l + 1);
    // two-colour the component graph spanned by the subset
    let mut adj = vec![Vec::new(); comps];
    for &i in subset {
        let (u, v) = g.edge(i);
        let (a, b) = (label[u], label[v]);
        if a == b {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour = vec![u8::MAX; comps];
    for start in 0..comps {
        if colour[start] != u8::MAX {
            continue;
        }
        colour[start] = 0;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &d in &adj[c] {
                if colour[d] == u8::MAX {
                    colour[d] = 1 - colour[c];
                    stack.push(d);
                } else if colour[d] == colour[c] {
                    return None;
                }
            }
        }
    }
    let flip = colour[label[0]];
    let mut sides = (Vec::new(), Vec::new());
    for v in 0..g.vertex_count() {
        if colour[label[v]] == flip {
            sides.0.push(v);
        } else {
            sides.1.push(v);
        }
    }
    if sides.1.is_empty() {
        return None;
    }
    let proper = rest.degrees().iter().all(|&d| d > 0);
    let mut edges = subset.to_vec();
    edges.sort_unstable();
    Some(EdgeCut {
        edges,
        sides,
        proper,
    })
}
