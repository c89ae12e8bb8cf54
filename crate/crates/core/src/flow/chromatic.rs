use std::collections::HashMap;

use crate::graph::{canonical_code, CanonicalCode, MultiGraph};
use crate::poly::IntPoly;

/// Chromatic polynomial `P(G, λ)`; zero when `G` has a loop. Parallel edges
/// are collapsed first.
pub fn chromatic_poly(g: &MultiGraph) -> IntPoly {
    if g.has_loop() {
        return IntPoly::zero();
    }
    assert!(
        g.vertex_count() <= 64,
        "chromatic_poly supports at most 64 vertices"
    );
    let mut adj = vec![0u64; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Chromatic::default().eval(Simple { adj })
}

/// Simple graph as adjacency bitmasks.
#[derive(Clone)]
struct Simple {
    adj: Vec<u64>,
}

impl Simple {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn remove_vertex(&self, v: usize) -> Simple {
        let low = (1u64 << v) - 1;
        let squeeze = |a: u64| (a & low) | ((a >> 1) & !low);
        let adj = (0..self.n())
            .filter(|&w| w != v)
            .map(|w| squeeze(self.adj[w]))
            .collect();
        Simple { adj }
    }

    fn with_edge(&self, u: usize, v: usize, present: bool) -> Simple {
        let mut s = self.clone();
        if present {
            s.adj[u] |= 1 << v;
            s.adj[v] |= 1 << u;
        } else {
            s.adj[u] &= !(1 << v);
            s.adj[v] &= !(1 << u);
        }
        s
    }

    /// Merge `v` into `u` and drop `v`; the edge `uv` (if any) disappears.
    fn identify(&self, u: usize, v: usize) -> Simple {
        let mut s = self.clone();
        let nv = s.adj[v] & !(1 << u);
        s.adj[u] = (s.adj[u] | nv) & !(1 << v);
        for w in 0..s.n() {
            if nv >> w & 1 == 1 {
                s.adj[w] |= 1 << u;
            }
        }
        s.remove_vertex(v)
    }

    fn component_of_first(&self) -> u64 {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    fn restrict(&self, keep: u64) -> Simple {
        let mut s = self.clone();
        for v in (0..self.n()).rev() {
            if keep >> v & 1 == 0 {
                s = s.remove_vertex(v);
            }
        }
        s
    }

    fn code(&self) -> CanonicalCode {
        let mut edges = Vec::new();
        for u in 0..self.n() {
            let mut row = self.adj[u] >> (u + 1);
            while row != 0 {
                let v = u + 1 + row.trailing_zeros() as usize;
                row &= row - 1;
                edges.push((u, v));
            }
        }
        canonical_code(&MultiGraph::from_parts_unchecked(self.n(), edges))
    }
}

#[derive(Default)]
struct Chromatic {
    cache: HashMap<CanonicalCode, IntPoly>,
}

impl Chromatic {
    fn eval(&mut self, g: Simple) -> IntPoly {
        let n = g.n();
        if n == 0 {
            return IntPoly::one();
        }
        let m = g.m();
        if m == n * (n - 1) / 2 {
            return IntPoly::falling(0, n);
        }
        let lam = IntPoly::linear(0);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let comp = g.component_of_first();
        if comp != full {
            let a = self.eval(g.restrict(comp));
            let b = self.eval(g.restrict(full & !comp));
            return &a * &b;
        }
        if m == n - 1 {
            return &lam * &IntPoly::linear(1).pow((n - 1) as u32);
        }
        // a pendant vertex contributes a factor λ - 1
        if let Some(v) = (0..n).find(|&v| g.adj[v].count_ones() == 1) {
            return &IntPoly::linear(1) * &self.eval(g.remove_vertex(v));
        }
        let code = g.code();
        if let Some(p) = self.cache.get(&code) {
            return p.clone();
        }
        let p = if 4 * m > n * (n - 1) {
            // addition–contraction towards complete graphs
            let (u, v) = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .find(|&(u, v)| g.adj[u] >> v & 1 == 0)
                .expect("not complete");
            let added = self.eval(g.with_edge(u, v, true));
            &added + &self.eval(g.identify(u, v))
        } else {
            // deletion–contraction on an edge at a minimum-degree vertex
            let u = (0..n).min_by_key(|&v| g.adj[v].count_ones()).unwrap();
            let v = g.adj[u].trailing_zeros() as usize;
            let deleted = self.eval(g.with_edge(u, v, false));
            &deleted - &self.eval(g.identify(u, v))
        };
        self.cache.insert(code, p.clone());
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn brute_colourings(g: &MultiGraph, q: usize) -> u64 {
        let n = g.vertex_count();
        let mut col = vec![0usize; n];
        let mut count = 0;
        loop {
            if g.edges().iter().all(|&(u, v)| col[u] != col[v]) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                col[i] += 1;
                if col[i] < q {
                    break;
                }
                col[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            chromatic_poly(&cycle(4)),
            IntPoly::from_i64s(&[0, -3, 6, -4, 1])
        );
        assert_eq!(
            chromatic_poly(&complete(4)),
            IntPoly::from_roots(&[0, 1, 2, 3])
        );
        let h3 = &IntPoly::from_roots(&[0, 1]) * &IntPoly::from_i64s(&[3, -3, 1]);
        assert_eq!(chromatic_poly(&h_s(3)), h3);
        assert!(chromatic_poly(&loop_graph()).is_zero());
        assert_eq!(chromatic_poly(&zk(3)), IntPoly::from_roots(&[0, 1]));
        assert_eq!(
            chromatic_poly(&MultiGraph::empty(2)),
            IntPoly::from_i64s(&[0, 0, 1])
        );
    }

    #[test]
    fn agrees_with_counting() {
        for g in [petersen(), prism(), wheel(5), cube(), octahedron(), h_s(4)] {
            let p = chromatic_poly(&g);
            for q in 0..5 {
                let v = p.eval_int(&(q as i64).into());
                assert_eq!(v, brute_colourings(&g, q).into(), "{g} q={q}");
            }
        }
    }
}
