use crate::graph::{bridges, MultiGraph};
use crate::poly::IntPoly;

/// `F(G, λ)` by the plain recursion: empty, bridge, disconnected product,
/// loop, then `F(G/e) - F(G-e)` on the first edge. No memo, no shortcuts.
pub fn flow_poly_naive(g: &MultiGraph) -> IntPoly {
    if g.edge_count() == 0 {
        return IntPoly::one();
    }
    if !bridges(g).is_empty() {
        return IntPoly::zero();
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut keep = vec![false; g.vertex_count()];
        let mut p = IntPoly::one();
        for c in comps {
            keep.iter_mut().for_each(|k| *k = false);
            for &v in &c {
                keep[v] = true;
            }
            p = &p * &flow_poly_naive(&g.induced_subgraph(&keep).0);
        }
        return p;
    }
    if let Some(e) = (0..g.edge_count()).find(|&i| g.is_loop(i)) {
        return &IntPoly::linear(1) * &flow_poly_naive(&g.delete_edge(e).unwrap());
    }
    let contracted = flow_poly_naive(&g.contract_edge(0).unwrap());
    &contracted - &flow_poly_naive(&g.delete_edge(0).unwrap())
}
