mod common;

use common::*;
use flowroots::flow::{chromatic_poly, flow_poly, flow_poly_naive, flow_poly_traced, Rule};
use flowroots::graph::{bridges, MultiGraph};
use flowroots::num_bigint::BigInt;
use flowroots::poly::IntPoly;
use flowroots::search::{enumerate_connected, EnumBounds};
use rand::Rng;

fn sorted_edges(g: &MultiGraph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort();
    e
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let id: Vec<usize> = (0..b.vertex_count()).collect();
    let target = sorted_edges(b, &id);
    permutations(a.vertex_count())
        .iter()
        .any(|p| sorted_edges(a, p) == target)
}

/// Every multiset of `m` slots on `n` labeled vertices.
fn labeled(n: usize, m: usize) -> Vec<MultiGraph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; m];
    fn rec(
        i: usize,
        start: usize,
        pick: &mut Vec<usize>,
        slots: &[(usize, usize)],
        n: usize,
        out: &mut Vec<MultiGraph>,
    ) {
        if i == pick.len() {
            out.push(MultiGraph::new(n, pick.iter().map(|&s| slots[s]).collect()).unwrap());
            return;
        }
        for s in start..slots.len() {
            pick[i] = s;
            rec(i + 1, s, pick, slots, n, out);
        }
    }
    rec(0, 0, &mut pick, &slots, n, &mut out);
    out
}

#[test]
fn enumeration_matches_brute_force_isomorphism_classes() {
    let mut classes: Vec<MultiGraph> = Vec::new();
    for n in 1..=3 {
        for m in 1..=4 {
            for g in labeled(n, m).into_iter().filter(MultiGraph::is_connected) {
                if !classes.iter().any(|h| isomorphic(h, &g)) {
                    classes.push(g);
                }
            }
        }
    }
    let b = EnumBounds {
        max_vertices: 3,
        max_edges: 4,
        max_multiplicity: 4,
    };
    let got = enumerate_connected(&b, 1e8).unwrap();
    assert_eq!(got.len(), classes.len());
    for g in &got {
        assert!(classes.iter().any(|h| isomorphic(h, g)));
    }
}

#[test]
fn two_edge_cut_factorization() {
    let mut rng = rng(22);
    for _ in 0..50 {
        let (g, [g1, g2]) = plant_cut(&mut rng, 2);
        assert_eq!(
            &flow_poly_naive(&g) * &IntPoly::from_i64s(&[-1, 1]),
            &flow_poly_naive(&g1) * &flow_poly_naive(&g2)
        );
        assert_eq!(flow_poly(&g), flow_poly_naive(&g));
    }
}

#[test]
fn components_multiply() {
    let mut rng = rng(23);
    for _ in 0..50 {
        let (an, ax) = (rng.gen_range(1..=4), rng.gen_range(0..=4));
        let a = random_connected(&mut rng, an, ax);
        let (bn, bx) = (rng.gen_range(1..=4), rng.gen_range(0..=4));
        let b = random_connected(&mut rng, bn, bx);
        let (g, _) = disjoint(&a, &b);
        assert_eq!(flow_poly(&g), &flow_poly_naive(&a) * &flow_poly_naive(&b));
    }
}

#[test]
fn trace_replays_and_ends_at_result() {
    let mut rng = rng(24);
    for _ in 0..60 {
        let (n, x) = (rng.gen_range(2..=7), rng.gen_range(2..=7));
        let g = random_bridgeless(&mut rng, n, x);
        let (f, trace) = flow_poly_traced(&g);
        assert_eq!(trace.replay().unwrap(), f);
        assert_eq!(trace.steps().last().unwrap().result, f);
        for (i, s) in trace.steps().iter().enumerate() {
            assert!(s.children.iter().all(|&c| c < i));
            if s.rule == Rule::MemoHit {
                assert_eq!(s.children.len(), 1);
            }
        }
    }
}

#[test]
fn bridges_force_zero() {
    let mut rng = rng(25);
    for _ in 0..30 {
        let (n, x) = (rng.gen_range(2..=6), rng.gen_range(0..=2));
        let g = random_connected(&mut rng, n, x);
        assert_eq!(flow_poly(&g).is_zero(), !bridges(&g).is_empty());
    }
}

fn proper_colourings(g: &MultiGraph, q: usize) -> u64 {
    let n = g.vertex_count();
    let mut colour = vec![0usize; n];
    let mut count = 0;
    loop {
        if g.edges().iter().all(|&(u, v)| colour[u] != colour[v]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            colour[i] += 1;
            if colour[i] < q {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn chromatic_counts_colourings() {
    let mut rng = rng(26);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(0..=9);
        let g = random_multigraph(&mut rng, n, m);
        let p = chromatic_poly(&g);
        for q in 1..=4 {
            assert_eq!(
                p.eval_int(&BigInt::from(q)),
                BigInt::from(proper_colourings(&g, q as usize)),
                "{g:?} q={q}"
            );
        }
    }
}
