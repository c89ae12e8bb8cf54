//! Multigraph data model and structural algorithms.
//!
//! Vertices are the ids `0..n`; edges are an ordered list of unordered vertex
//! pairs. Loops (`u == v`) and parallel edges are allowed everywhere, and edge
//! order is preserved by every operation that does not explicitly re-index.

mod canon;
mod chordal;
mod dual;
pub mod families;
mod structure;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub use canon::{canonical_code, CanonicalCode};
pub use chordal::{is_chordal, perfect_elimination_order};
pub use dual::{build_dual, FaceStructure};
pub use structure::{
    articulation_points, blocks, bridges, edge_cuts, has_proper_three_cut, is_3_edge_connected,
    is_nonseparable, Block, EdgeCut,
};

/// An undirected multigraph with loops and parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertices: n,
                    });
                }
            }
        }
        Ok(MultiGraph { n, edges })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        MultiGraph {
            n,
            edges: Vec::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < n && v < n));
        MultiGraph { n, edges }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    #[inline]
    pub fn is_loop(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        u == v
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == v).count()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Degree sequence indexed by vertex; a loop contributes 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a == u && b == v) || (a == v && b == u))
            .count()
    }

    /// Symmetric matrix of edge multiplicities; loops sit on the diagonal.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u16>> {
        let mut a = vec![vec![0u16; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] += 1;
            if u != v {
                a[v][u] += 1;
            }
        }
        a
    }

    /// Neighbour lists of (neighbour, edge index); a loop appears twice at its vertex.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((v, i));
            inc[v].push((u, i));
        }
        inc
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    vertices: self.n,
                });
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    /// Remove edge `i`; remaining edges keep their relative order.
    pub fn delete_edge(&self, i: usize) -> Result<MultiGraph, GraphError> {
        self.check_edge(i)?;
        let mut edges = self.edges.clone();
        edges.remove(i);
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Remove a set of edges at once.
    pub fn delete_edges(&self, remove: &[usize]) -> Result<MultiGraph, GraphError> {
        let mut drop = vec![false; self.edges.len()];
        for &i in remove {
            self.check_edge(i)?;
            drop[i] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(&e, _)| e)
            .collect();
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Contract non-loop edge `i`.
    ///
    /// The higher endpoint is merged into the lower one and vertex ids above it
    /// shift down by one. Other edges between the two endpoints become loops;
    /// nothing is simplified.
    pub fn contract_edge(&self, i: usize) -> Result<MultiGraph, GraphError> {
        self.check_edge(i)?;
        let (a, b) = self.edges[i];
        if a == b {
            return Err(GraphError::ContractLoop(i));
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .collect();
        Ok(MultiGraph {
            n: self.n - 1,
            edges,
        })
    }

    /// Merge every vertex of `group` into a single vertex. Edges inside the
    /// group become loops when `keep_loops` is set and vanish otherwise.
    pub fn collapse_vertices(&self, group: &[usize], keep_loops: bool) -> MultiGraph {
        let mut in_group = vec![false; self.n];
        for &v in group {
            in_group[v] = true;
        }
        let mut map = vec![0; self.n];
        let mut next = 0;
        let mut rep = None;
        for v in 0..self.n {
            if in_group[v] {
                let r = *rep.get_or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                map[v] = r;
            } else {
                map[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep_loops || !(in_group[u] && in_group[v]))
            .map(|&(u, v)| (map[u], map[v]))
            .collect();
        MultiGraph { n: next, edges }
    }

    /// Subgraph spanned by the given edge indices, with vertices re-indexed in
    /// increasing order of their original ids. Returns the graph and the
    /// original id of each new vertex.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> (MultiGraph, Vec<usize>) {
        let mut used = vec![false; self.n];
        for &i in edge_ids {
            let (u, v) = self.edges[i];
            used[u] = true;
            used[v] = true;
        }
        self.subgraph_on(&used, edge_ids)
    }

    /// Subgraph induced by the marked vertices.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (MultiGraph, Vec<usize>) {
        let ids: Vec<usize> = (0..self.edges.len())
            .filter(|&i| {
                let (u, v) = self.edges[i];
                keep[u] && keep[v]
            })
            .collect();
        self.subgraph_on(keep, &ids)
    }

    fn subgraph_on(&self, keep: &[bool], edge_ids: &[usize]) -> (MultiGraph, Vec<usize>) {
        let mut map = vec![usize::MAX; self.n];
        let mut orig = Vec::new();
        for v in 0..self.n {
            if keep[v] {
                map[v] = orig.len();
                orig.push(v);
            }
        }
        let edges = edge_ids
            .iter()
            .map(|&i| {
                let (u, v) = self.edges[i];
                (map[u], map[v])
            })
            .collect();
        (
            MultiGraph {
                n: orig.len(),
                edges,
            },
            orig,
        )
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let label = self.component_labels();
        let count = label.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut out = vec![Vec::new(); count];
        for (v, &l) in label.iter().enumerate() {
            out[l].push(v);
        }
        out
    }

    /// Component id of every vertex, numbered in order of least vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut root_label = vec![usize::MAX; self.n];
        let mut next = 0;
        (0..self.n)
            .map(|v| {
                let r = uf.find(v);
                if root_label[r] == usize::MAX {
                    root_label[r] = next;
                    next += 1;
                }
                root_label[r]
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        let mut count = self.n;
        for &(u, v) in &self.edges {
            if uf.union(u, v) {
                count -= 1;
            }
        }
        count
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// Every vertex has even degree.
    pub fn is_even(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// Apply a vertex relabelling `v -> perm[v]`, keeping edge order.
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        MultiGraph { n: self.n, edges }
    }

    fn check_edge(&self, i: usize) -> Result<(), GraphError> {
        if i >= self.edges.len() {
            Err(GraphError::EdgeOutOfRange {
                index: i,
                edges: self.edges.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Render in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Parses the edge-list format: optional `#` comment lines, a header `n m`,
/// then `m` lines `u v` with 0-based vertex ids.
impl FromStr for MultiGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = data_lines(s);
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            column: 1,
            message: "missing header line `n m`".into(),
        })?;
        let nums = parse_usizes(hline, header)?;
        if nums.len() != 2 {
            return Err(GraphError::Parse {
                line: hline,
                column: 1,
                message: format!("header must be `n m`, found {} fields", nums.len()),
            });
        }
        let (n, m) = (nums[0], nums[1]);
        let mut edges = Vec::with_capacity(m);
        for (lineno, text) in lines.by_ref() {
            let pair = parse_usizes(lineno, text)?;
            if pair.len() != 2 {
                return Err(GraphError::Parse {
                    line: lineno,
                    column: 1,
                    message: format!("edge line must be `u v`, found {} fields", pair.len()),
                });
            }
            for (k, &w) in pair.iter().enumerate() {
                if w >= n {
                    return Err(GraphError::Parse {
                        line: lineno,
                        column: field_column(text, k),
                        message: format!("vertex {w} out of range 0..{n}"),
                    });
                }
            }
            edges.push((pair[0], pair[1]));
            if edges.len() == m {
                break;
            }
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: s.lines().count().max(1),
                column: 1,
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(GraphError::Parse {
                line: lineno,
                column: 1,
                message: "unexpected data after the last edge".into(),
            });
        }
        Ok(MultiGraph { n, edges })
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn data_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, l))
        }
    })
}

pub(crate) fn parse_usizes(line: usize, text: &str) -> Result<Vec<usize>, GraphError> {
    let mut out = Vec::new();
    let mut col = 0;
    for tok in text.split_whitespace() {
        let start = text[col..].find(tok).map(|p| p + col).unwrap_or(col);
        col = start + tok.len();
        out.push(tok.parse::<usize>().map_err(|_| GraphError::Parse {
            line,
            column: start + 1,
            message: format!("expected a non-negative integer, found {tok:?}"),
        })?);
    }
    Ok(out)
}

fn field_column(text: &str, k: usize) -> usize {
    let mut col = 0;
    for (j, tok) in text.split_whitespace().enumerate() {
        let start = text[col..].find(tok).map(|p| p + col).unwrap_or(col);
        if j == k {
            return start + 1;
        }
        col = start + tok.len();
    }
    1
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn delete_examples() {
        let z2 = zk(3).delete_edge(0).unwrap();
        assert_eq!(z2, zk(2));
        let p3 = cycle(3).delete_edge(2).unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        let bare = loop_graph().delete_edge(0).unwrap();
        assert_eq!((bare.vertex_count(), bare.edge_count()), (1, 0));
        assert!(matches!(
            zk(3).delete_edge(3),
            Err(GraphError::EdgeOutOfRange { .. })
        ));
    }

    #[test]
    fn contract_examples() {
        let l = zk(2).contract_edge(0).unwrap();
        assert_eq!(l, loop_graph());
        let c = complete(4).contract_edge(0).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (3, 5));
        let a = c.multiplicity_matrix();
        let parallel_pairs = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] == 2)
            .count();
        // the two surviving vertices were each adjacent to both endpoints
        assert_eq!(parallel_pairs, 2);
        assert_eq!(c.loop_count(), 0);
        let two_loops = zk(3).contract_edge(1).unwrap();
        assert_eq!(two_loops.vertex_count(), 1);
        assert_eq!(two_loops.loop_count(), 2);
        assert_eq!(
            loop_graph().contract_edge(0),
            Err(GraphError::ContractLoop(0))
        );
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let g: MultiGraph = "# K4\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n".parse().unwrap();
        assert_eq!(g, complete(4));
        assert_eq!(g.to_edge_list().parse::<MultiGraph>().unwrap(), g);
        let loopy: MultiGraph = "1 1\n0 0".parse().unwrap();
        assert!(loopy.is_loop(0));

        match "2 1\n0 x\n".parse::<MultiGraph>() {
            Err(GraphError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        match "2 1\n0 5\n".parse::<MultiGraph>() {
            Err(GraphError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!("3 2\n0 1\n".parse::<MultiGraph>().is_err());
        assert!("".parse::<MultiGraph>().is_err());
    }

    #[test]
    fn contraction_counts() {
        let g = prism();
        for i in 0..g.edge_count() {
            let c = g.contract_edge(i).unwrap();
            assert_eq!(c.vertex_count(), g.vertex_count() - 1);
            assert_eq!(c.edge_count(), g.edge_count() - 1);
        }
    }
}
