//! Flow and chromatic polynomials.
//!
//! [`flow_poly`] runs deletion–contraction behind a ladder of structural
//! reductions (blocks, loops, 2-edge-cuts, proper 3-edge-cuts, vertex–edge
//! separations) and memoizes on canonical codes. [`flow_poly_naive`] uses the
//! bare recursion and serves as an oracle.

mod chromatic;
mod naive;
mod oracle;
mod trace;

use std::collections::HashMap;

use crate::graph::{
    articulation_points, blocks, bridges, canonical_code, has_proper_three_cut, CanonicalCode,
    MultiGraph,
};
use crate::poly::IntPoly;

pub use crate::graph::families::h_s as build_h_s;
pub use chromatic::chromatic_poly;
pub use naive::flow_poly_naive;
pub use oracle::count_flows_oracle;
pub use trace::{ReductionTrace, Rule, TraceStep};

/// `F(G, λ)` with a fresh memo cache.
pub fn flow_poly(g: &MultiGraph) -> IntPoly {
    FlowEngine::new().flow_poly(g)
}

/// `F(G, λ)` together with the reductions that produced it.
pub fn flow_poly_traced(g: &MultiGraph) -> (IntPoly, ReductionTrace) {
    let mut engine = FlowEngine::new();
    engine.trace = Some(TraceState::default());
    let (p, _) = engine.eval(g);
    let steps = engine.trace.take().unwrap().steps;
    (p, ReductionTrace::new(steps))
}

#[derive(Default)]
struct TraceState {
    steps: Vec<TraceStep>,
    by_code: HashMap<CanonicalCode, usize>,
}

/// Memoizing flow-polynomial evaluator. The cache persists across calls, so
/// one engine per worker amortizes work over a batch of related graphs.
#[derive(Default)]
pub struct FlowEngine {
    cache: HashMap<CanonicalCode, IntPoly>,
    trace: Option<TraceState>,
}

impl FlowEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn flow_poly(&mut self, g: &MultiGraph) -> IntPoly {
        self.eval(g).0
    }

    fn record(
        &mut self,
        rule: Rule,
        g: &MultiGraph,
        children: Vec<Option<usize>>,
        result: &IntPoly,
    ) -> Option<usize> {
        let t = self.trace.as_mut()?;
        t.steps.push(TraceStep {
            rule,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            children: children
                .into_iter()
                .map(|c| c.expect("traced child"))
                .collect(),
            result: result.clone(),
        });
        Some(t.steps.len() - 1)
    }

    fn eval(&mut self, g: &MultiGraph) -> (IntPoly, Option<usize>) {
        if g.edge_count() == 0 {
            let p = IntPoly::one();
            let s = self.record(Rule::Empty, g, vec![], &p);
            return (p, s);
        }
        if !bridges(g).is_empty() {
            let p = IntPoly::zero();
            let s = self.record(Rule::BridgeZero, g, vec![], &p);
            return (p, s);
        }

        let parts: Vec<MultiGraph> = blocks(g)
            .into_iter()
            .filter(|b| !b.edges.is_empty())
            .map(|b| b.graph)
            .collect();
        if parts.len() == 1 && parts[0].vertex_count() == 1 {
            // bridgeless one-edge block on one vertex: L
            let p = IntPoly::linear(1);
            let s = self.record(Rule::LoopFactor, g, vec![], &p);
            return (p, s);
        }
        if parts.len() > 1 || parts[0].vertex_count() < g.vertex_count() {
            let mut p = IntPoly::one();
            let mut kids = Vec::with_capacity(parts.len());
            for b in &parts {
                let (q, s) = self.eval(b);
                p = &p * &q;
                kids.push(s);
                if p.is_zero() {
                    break;
                }
            }
            let s = self.record(Rule::BlockSplit, g, kids, &p);
            return (p, s);
        }

        // g is now a loopless non-separable graph on at least two vertices
        if let Some(e) = two_cut_edge(g) {
            let (p, c) = self.eval(&g.contract_edge(e).expect("not a loop"));
            let s = self.record(Rule::TwoCutContract, g, vec![c], &p);
            return (p, s);
        }
        if let Some(cut) = has_proper_three_cut(g) {
            let g1 = g.collapse_vertices(&cut.sides.1, false);
            let g2 = g.collapse_vertices(&cut.sides.0, false);
            let (p1, c1) = self.eval(&g1);
            let (p2, c2) = self.eval(&g2);
            let p = (&p1 * &p2)
                .div_exact(&IntPoly::from_roots(&[1, 2]))
                .expect("3-edge-cut factorization must divide exactly");
            let s = self.record(Rule::ThreeCutSplit, g, vec![c1, c2], &p);
            return (p, s);
        }
        if let Some((g1, g2)) = vertex_edge_split(g) {
            let (p1, c1) = self.eval(&g1);
            let (p2, c2) = self.eval(&g2);
            let p = (&p1 * &p2)
                .div_exact(&IntPoly::linear(1))
                .expect("vertex-edge factorization must divide exactly");
            let s = self.record(Rule::VertexEdgeSplit, g, vec![c1, c2], &p);
            return (p, s);
        }

        let code = canonical_code(g);
        if let Some(p) = self.cache.get(&code).cloned() {
            let earlier = self.trace.as_ref().map(|t| t.by_code[&code]);
            let s = self.record(Rule::MemoHit, g, vec![earlier], &p);
            return (p, s);
        }
        let e = pivot_edge(g);
        let (pc, cc) = self.eval(&g.contract_edge(e).expect("not a loop"));
        let (pd, cd) = self.eval(&g.delete_edge(e).expect("in range"));
        let p = &pc - &pd;
        let s = self.record(Rule::DeleteContract, g, vec![cc, cd], &p);
        if let (Some(t), Some(i)) = (self.trace.as_mut(), s) {
            t.by_code.insert(code.clone(), i);
        }
        self.cache.insert(code, p.clone());
        (p, s)
    }
}

/// An edge lying in some 2-edge-cut of a bridgeless connected loopless graph.
fn two_cut_edge(g: &MultiGraph) -> Option<usize> {
    let deg = g.degrees();
    if let Some(v) = deg.iter().position(|&d| d == 2) {
        return g.edges().iter().position(|&(a, b)| a == v || b == v);
    }
    (0..g.edge_count()).find(|&f| !bridges(&g.delete_edge(f).unwrap()).is_empty())
}

/// For some edge `e = u1u2` with `G - e` separable at `v`, the pair
/// `(H1 + vu1, H2 + vu2)` where `H_i` is the side of `v` containing `u_i`.
fn vertex_edge_split(g: &MultiGraph) -> Option<(MultiGraph, MultiGraph)> {
    for e in 0..g.edge_count() {
        let h = g.delete_edge(e).unwrap();
        let Some(&v) = articulation_points(&h).first() else {
            continue;
        };
        let (u1, u2) = g.edge(e);
        // components of h - v
        let mut uf = crate::graph::UnionFind::new(h.vertex_count());
        for &(a, b) in h.edges() {
            if a != v && b != v {
                uf.union(a, b);
            }
        }
        let side1 = uf.find(u1);
        let (mut e1, mut e2) = (Vec::new(), Vec::new());
        for (i, &(a, b)) in h.edges().iter().enumerate() {
            let w = if a == v { b } else { a };
            if uf.find(w) == side1 {
                e1.push(i);
            } else {
                e2.push(i);
            }
        }
        return Some((
            with_extra_edge(&h, &e1, (v, u1)),
            with_extra_edge(&h, &e2, (v, u2)),
        ));
    }
    None
}

/// Subgraph on the given edges plus one extra edge between two host vertices.
fn with_extra_edge(h: &MultiGraph, edge_ids: &[usize], extra: (usize, usize)) -> MultiGraph {
    let mut map = vec![usize::MAX; h.vertex_count()];
    let mut next = 0;
    let mut id = |w: usize, map: &mut Vec<usize>| {
        if map[w] == usize::MAX {
            map[w] = next;
            next += 1;
        }
        map[w]
    };
    let mut edges = Vec::with_capacity(edge_ids.len() + 1);
    for &i in edge_ids {
        let (a, b) = h.edge(i);
        edges.push((id(a, &mut map), id(b, &mut map)));
    }
    edges.push((id(extra.0, &mut map), id(extra.1, &mut map)));
    MultiGraph::from_parts_unchecked(next, edges)
}

/// An edge of a largest parallel class; ties go to the smallest endpoint pair.
fn pivot_edge(g: &MultiGraph) -> usize {
    let mut best: Option<(usize, (usize, usize), usize)> = None;
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let key = (a.min(b), a.max(b));
        let mult = g.multiplicity(a, b);
        let better = match best {
            None => true,
            Some((m, k, _)) => mult > m || (mult == m && key < k),
        };
        if better {
            best = Some((mult, key, i));
        }
    }
    best.expect("nonempty edge set").2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_examples() {
        assert_eq!(flow_poly(&loop_graph()), p(&[-1, 1]));
        assert_eq!(flow_poly(&zk(3)), p(&[2, -3, 1]));
        assert_eq!(flow_poly(&complete(4)), p(&[-6, 11, -6, 1]));
        assert_eq!(flow_poly(&MultiGraph::empty(3)), IntPoly::one());
        for n in 1..8 {
            assert_eq!(flow_poly(&cycle(n)), p(&[-1, 1]));
        }
        let bridged = MultiGraph::new(
            6,
            vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)],
        )
        .unwrap();
        assert!(flow_poly(&bridged).is_zero());
    }

    #[test]
    fn z4_has_complex_factor() {
        let f = flow_poly(&zk(4));
        assert_eq!(f, &IntPoly::linear(1) * &p(&[3, -3, 1]));
    }

    #[test]
    fn matches_naive_on_named_graphs() {
        for g in [
            prism(),
            cube(),
            petersen(),
            wheel(5),
            octahedron(),
            complete(5),
            zk(6),
        ] {
            assert_eq!(flow_poly(&g), flow_poly_naive(&g), "{g}");
        }
    }

    #[test]
    fn trace_replays() {
        for g in [complete(4), prism(), petersen(), wheel(4), zk(5)] {
            let (f, trace) = flow_poly_traced(&g);
            assert_eq!(trace.replay().unwrap(), f);
            assert!(!trace.to_text().is_empty());
        }
        let (_, t) = flow_poly_traced(&prism());
        assert!(t.steps().iter().any(|s| s.rule == Rule::ThreeCutSplit));
        let (_, t) = flow_poly_traced(&cycle(5));
        assert!(t.steps().iter().any(|s| s.rule == Rule::TwoCutContract));
    }

    #[test]
    fn engine_reuses_cache() {
        let mut engine = FlowEngine::new();
        let a = engine.flow_poly(&petersen());
        let filled = engine.cache_len();
        assert!(filled > 0);
        assert_eq!(
            engine.flow_poly(&petersen().relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0])),
            a
        );
        assert_eq!(engine.cache_len(), filled);
    }
}
