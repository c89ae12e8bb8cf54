//! Named graphs used throughout tests, fixtures and audits.

use super::MultiGraph;

/// `L`: one vertex carrying one loop.
pub fn loop_graph() -> MultiGraph {
    MultiGraph::from_parts_unchecked(1, vec![(0, 0)])
}

/// `Z_k`: two vertices joined by `k` parallel edges.
pub fn zk(k: usize) -> MultiGraph {
    MultiGraph::from_parts_unchecked(2, vec![(0, 1); k])
}

/// Cycle `C_n` for `n >= 1` (`C_1` is a loop, `C_2` is `Z_2`).
pub fn cycle(n: usize) -> MultiGraph {
    assert!(n >= 1);
    let edges = (0..n).map(|i| (i, (i + 1) % n)).map(order).collect();
    MultiGraph::from_parts_unchecked(n, edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> MultiGraph {
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    MultiGraph::from_parts_unchecked(n, edges)
}

/// Complete graph `K_n` with edges listed lexicographically.
pub fn complete(n: usize) -> MultiGraph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    MultiGraph::from_parts_unchecked(n, edges)
}

/// `H_s`: `K_s` with the edge `{0, 1}` subdivided by a new vertex `s`.
pub fn h_s(s: usize) -> MultiGraph {
    assert!(s >= 3, "H_s needs s >= 3");
    let mut edges: Vec<(usize, usize)> = complete(s)
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != (0, 1))
        .collect();
    edges.push((0, s));
    edges.push((1, s));
    MultiGraph::from_parts_unchecked(s + 1, edges)
}

/// Triangular prism: triangles 0-1-2 and 3-4-5 with rungs i -- i+3.
pub fn prism() -> MultiGraph {
    MultiGraph::from_parts_unchecked(
        6,
        vec![
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// The 3-cube `Q_3`: bottom square 0-1-2-3, top square 4-5-6-7, rungs i -- i+4.
pub fn cube() -> MultiGraph {
    MultiGraph::from_parts_unchecked(
        8,
        vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
}

/// Octahedron `K_{2,2,2}`: opposite pairs {0,1}, {2,3}, {4,5}.
pub fn octahedron() -> MultiGraph {
    let edges = (0..6)
        .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
        .filter(|&(i, j)| i / 2 != j / 2)
        .collect();
    MultiGraph::from_parts_unchecked(6, edges)
}

/// Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(order((i, (i + 1) % 5)));
        edges.push(order((5 + i, 5 + (i + 2) % 5)));
        edges.push((i, i + 5));
    }
    MultiGraph::from_parts_unchecked(10, edges)
}

/// Wheel with `spokes` rim vertices; hub is vertex 0.
pub fn wheel(spokes: usize) -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (1..=spokes).map(|i| (0, i)).collect();
    for i in 0..spokes {
        edges.push(order((1 + i, 1 + (i + 1) % spokes)));
    }
    MultiGraph::from_parts_unchecked(spokes + 1, edges)
}

/// Disjoint union, second graph's vertices shifted after the first's.
pub fn disjoint_union(a: &MultiGraph, b: &MultiGraph) -> MultiGraph {
    let off = a.vertex_count();
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + off, v + off)));
    MultiGraph::from_parts_unchecked(off + b.vertex_count(), edges)
}

/// Glue `b`'s vertex 0 onto `a`'s vertex `at`.
pub fn one_point_union(a: &MultiGraph, at: usize, b: &MultiGraph) -> MultiGraph {
    let off = a.vertex_count() - 1;
    let map = |v: usize| if v == 0 { at } else { v + off };
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (map(u), map(v))));
    MultiGraph::from_parts_unchecked(a.vertex_count() + b.vertex_count() - 1, edges)
}

fn order((u, v): (usize, usize)) -> (usize, usize) {
    (u.min(v), u.max(v))
}
