#![allow(dead_code)]

use flowroots::graph::{bridges, MultiGraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random edges on `n` vertices; loops with probability about 1/(n+1).
pub fn random_multigraph(rng: &mut TestRng, n: usize, m: usize) -> MultiGraph {
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    MultiGraph::new(n, edges).unwrap()
}

/// A random spanning tree plus `extra` random edges (loops allowed).
pub fn random_connected(rng: &mut TestRng, n: usize, extra: usize) -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend((0..extra).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))));
    MultiGraph::new(n, edges).unwrap()
}

/// A Hamiltonian cycle in random order plus `extra` chords; always bridgeless.
pub fn random_bridgeless(rng: &mut TestRng, n: usize, extra: usize) -> MultiGraph {
    if n == 1 {
        return MultiGraph::new(1, vec![(0, 0); extra + 1]).unwrap();
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    edges.extend((0..extra).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))));
    let g = MultiGraph::new(n, edges).unwrap();
    debug_assert!(bridges(&g).is_empty());
    g
}

/// Disjoint union: `b`'s vertices are shifted past `a`'s.
pub fn disjoint(a: &MultiGraph, b: &MultiGraph) -> (MultiGraph, usize) {
    let off = a.vertex_count();
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + off, v + off)));
    (MultiGraph::new(off + b.vertex_count(), edges).unwrap(), off)
}

/// `g` plus the listed edges, with `extra_vertices` new vertices appended.
pub fn with_edges(g: &MultiGraph, extra_vertices: usize, add: &[(usize, usize)]) -> MultiGraph {
    let mut edges = g.edges().to_vec();
    edges.extend_from_slice(add);
    MultiGraph::new(g.vertex_count() + extra_vertices, edges).unwrap()
}

/// Identify vertex `b_at` of `b` with vertex `a_at` of `a`.
pub fn glue(a: &MultiGraph, a_at: usize, b: &MultiGraph, b_at: usize) -> (MultiGraph, Vec<usize>) {
    let off = a.vertex_count();
    let map: Vec<usize> = (0..b.vertex_count())
        .map(|v| match v.cmp(&b_at) {
            std::cmp::Ordering::Equal => a_at,
            std::cmp::Ordering::Less => off + v,
            std::cmp::Ordering::Greater => off + v - 1,
        })
        .collect();
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (map[u], map[v])));
    (
        MultiGraph::new(off + b.vertex_count() - 1, edges).unwrap(),
        map,
    )
}

/// Two bridgeless pieces sharing one vertex: `(G, [A, B])`.
pub fn plant_block(rng: &mut TestRng) -> (MultiGraph, [MultiGraph; 2]) {
    let (a_n, a_x) = (rng.gen_range(1..=4), rng.gen_range(0..=3));
    let a = random_bridgeless(rng, a_n, a_x);
    let (b_n, b_x) = (rng.gen_range(1..=4), rng.gen_range(0..=3));
    let b = random_bridgeless(rng, b_n, b_x);
    let (at_a, at_b) = (
        rng.gen_range(0..a.vertex_count()),
        rng.gen_range(0..b.vertex_count()),
    );
    let (g, _) = glue(&a, at_a, &b, at_b);
    (g, [a, b])
}

/// A bridgeless graph with a planted edge-cut of size `k` between two
/// connected sides of at least two vertices, and the two contractions.
pub fn plant_cut(rng: &mut TestRng, k: usize) -> (MultiGraph, [MultiGraph; 2]) {
    loop {
        let (h1_n, h1_x) = (rng.gen_range(2..=4), rng.gen_range(0..=3));
        let h1 = random_connected(rng, h1_n, h1_x);
        let (h2_n, h2_x) = (rng.gen_range(2..=4), rng.gen_range(0..=3));
        let h2 = random_connected(rng, h2_n, h2_x);
        let (n1, n2) = (h1.vertex_count(), h2.vertex_count());
        let ends: Vec<(usize, usize)> = (0..k)
            .map(|_| (rng.gen_range(0..n1), rng.gen_range(0..n2)))
            .collect();
        let (u, off) = disjoint(&h1, &h2);
        let cross: Vec<(usize, usize)> = ends.iter().map(|&(a, b)| (a, b + off)).collect();
        let g = with_edges(&u, 0, &cross);
        if !bridges(&g).is_empty() {
            continue;
        }
        let g1 = with_edges(
            &h1,
            1,
            &ends.iter().map(|&(a, _)| (a, n1)).collect::<Vec<_>>(),
        );
        let g2 = with_edges(
            &h2,
            1,
            &ends.iter().map(|&(_, b)| (b, n2)).collect::<Vec<_>>(),
        );
        return (g, [g1, g2]);
    }
}

/// `H1` and `H2` share a vertex `v`, plus an edge `u1 u2` between them;
/// returns `(G, [H1 + v u1, H2 + v u2])`.
pub fn plant_v_edge(rng: &mut TestRng) -> (MultiGraph, [MultiGraph; 2]) {
    loop {
        let (h1_n, h1_x) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let h1 = random_connected(rng, h1_n, h1_x);
        let (h2_n, h2_x) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let h2 = random_connected(rng, h2_n, h2_x);
        let (v1, v2) = (
            rng.gen_range(0..h1.vertex_count()),
            rng.gen_range(0..h2.vertex_count()),
        );
        let (u1, u2) = (
            rng.gen_range(0..h1.vertex_count()),
            rng.gen_range(0..h2.vertex_count()),
        );
        let (glued, map) = glue(&h1, v1, &h2, v2);
        let g = with_edges(&glued, 0, &[(u1, map[u2])]);
        if !bridges(&g).is_empty() {
            continue;
        }
        return (
            g,
            [
                with_edges(&h1, 0, &[(v1, u1)]),
                with_edges(&h2, 0, &[(v2, u2)]),
            ],
        );
    }
}
