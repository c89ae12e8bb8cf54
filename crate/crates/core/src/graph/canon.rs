//! Canonical codes for small multigraphs.
//!
//! The code is the lexicographically least column-wise upper-triangular
//! multiplicity matrix over all vertex orders compatible with an equitable
//! colour refinement, prefixed by the vertex count, the edge count and the
//! sorted colour signature. Twin vertices (identical rows) are
//! interchangeable, so only one representative per twin class is branched on.

use super::MultiGraph;

/// Isomorphism-invariant byte string.
pub type CanonicalCode = Vec<u8>;

pub fn canonical_code(g: &MultiGraph) -> CanonicalCode {
    canonical_code_of_matrix(&g.multiplicity_matrix(), g.edge_count())
}

pub(crate) fn canonical_code_of_matrix(a: &[Vec<u16>], m: usize) -> CanonicalCode {
    let n = a.len();
    let colour = refine(a);
    // positions grouped by colour: slot t must hold a vertex of colour slot_colour[t]
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();

    let mut header = Vec::with_capacity(8 + 2 * n);
    push_u32(&mut header, n as u32);
    push_u32(&mut header, m as u32);
    for &c in &slot_colour {
        push_u16(&mut header, c as u16);
    }

    let twin = twin_classes(a);
    let mut search = Search {
        a,
        colour: &colour,
        slot_colour: &slot_colour,
        twin: &twin,
        order: Vec::with_capacity(n),
        placed: vec![false; n],
        current: Vec::with_capacity(n * (n + 1) / 2),
        best: None,
    };
    search.run();
    let best = search.best.unwrap_or_default();
    header.reserve(best.len() * 2);
    for x in best {
        push_u16(&mut header, x);
    }
    header
}

struct Search<'a> {
    a: &'a [Vec<u16>],
    colour: &'a [usize],
    slot_colour: &'a [usize],
    twin: &'a [usize],
    order: Vec<usize>,
    placed: Vec<bool>,
    current: Vec<u16>,
    best: Option<Vec<u16>>,
}

#[derive(PartialEq)]
enum Prefix {
    Less,
    Equal,
    Greater,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.a.len();
        let t = self.order.len();
        if t == n {
            self.best = Some(self.current.clone());
            return;
        }
        let want = self.slot_colour[t];
        let mut tried_twin: Vec<usize> = Vec::new();
        for v in 0..n {
            if self.placed[v] || self.colour[v] != want || tried_twin.contains(&self.twin[v]) {
                continue;
            }
            tried_twin.push(self.twin[v]);
            let mark = self.current.len();
            for &p in &self.order {
                self.current.push(self.a[p][v]);
            }
            self.current.push(self.a[v][v]);
            if self.compare_prefix() != Prefix::Greater {
                self.order.push(v);
                self.placed[v] = true;
                self.run();
                self.placed[v] = false;
                self.order.pop();
            }
            self.current.truncate(mark);
        }
    }

    fn compare_prefix(&self) -> Prefix {
        match &self.best {
            None => Prefix::Less,
            Some(best) => match self.current.as_slice().cmp(&best[..self.current.len()]) {
                std::cmp::Ordering::Less => Prefix::Less,
                std::cmp::Ordering::Equal => Prefix::Equal,
                std::cmp::Ordering::Greater => Prefix::Greater,
            },
        }
    }
}

/// Equitable colour refinement. Colours are ranks of sorted signatures, so
/// they are invariant under relabelling.
fn refine(a: &[Vec<u16>]) -> Vec<usize> {
    let n = a.len();
    let deg: Vec<u32> = (0..n)
        .map(|v| {
            a[v].iter()
                .enumerate()
                .map(|(w, &x)| if w == v { 2 * x as u32 } else { x as u32 })
                .sum()
        })
        .collect();
    let mut sig: Vec<Vec<u32>> = (0..n).map(|v| vec![deg[v], a[v][v] as u32]).collect();
    let mut colour = rank(&sig);
    let mut classes = count_classes(&colour);
    loop {
        sig = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u32)> = (0..n)
                    .filter(|&w| w != v && a[v][w] > 0)
                    .map(|w| (colour[w] as u32, a[v][w] as u32))
                    .collect();
                nb.sort_unstable();
                let mut s = vec![colour[v] as u32];
                for (c, x) in nb {
                    s.push(c);
                    s.push(x);
                }
                s
            })
            .collect();
        let next = rank(&sig);
        let next_classes = count_classes(&next);
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

fn rank(sig: &[Vec<u32>]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<u32>> = sig.iter().collect();
    sorted.sort();
    sorted.dedup();
    sig.iter()
        .map(|s| sorted.binary_search(&s).unwrap())
        .collect()
}

fn count_classes(c: &[usize]) -> usize {
    c.iter().max().map_or(0, |&x| x + 1)
}

/// Twin class id per vertex: `x ~ y` when `a[x][z] == a[y][z]` for every
/// other `z` and their loop counts agree. Swapping twins is an automorphism.
fn twin_classes(a: &[Vec<u16>]) -> Vec<usize> {
    let n = a.len();
    let mut class = vec![usize::MAX; n];
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        class[x] = x;
        for y in x + 1..n {
            if class[y] == usize::MAX
                && a[x][x] == a[y][y]
                && (0..n).all(|z| z == x || z == y || a[x][z] == a[y][z])
            {
                class[y] = x;
            }
        }
    }
    class
}

fn push_u32(out: &mut Vec<u8>, x: u32) {
    out.extend_from_slice(&x.to_be_bytes());
}

fn push_u16(out: &mut Vec<u8>, x: u16) {
    out.extend_from_slice(&x.to_be_bytes());
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reversed_edge_order() {
        let z3 = zk(3);
        let mut e = z3.edges().to_vec();
        e.reverse();
        assert_eq!(
            canonical_code(&z3),
            canonical_code(&MultiGraph::new(2, e).unwrap())
        );
    }

    #[test]
    fn distinguishes_c4_from_two_digons() {
        let digons = disjoint_union(&zk(2), &zk(2));
        assert_ne!(canonical_code(&cycle(4)), canonical_code(&digons));
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn k4_all_relabelings() {
        let k4 = complete(4);
        let c = canonical_code(&k4);
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        for p in perms {
            assert_eq!(canonical_code(&k4.relabel(&p)), c);
        }
    }

    fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> MultiGraph {
        let edges = (0..m)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        MultiGraph::new(n, edges).unwrap()
    }

    #[test]
    fn invariant_under_random_relabelings() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..=7);
            let m = rng.gen_range(0..=12);
            let g = random_multigraph(&mut rng, n, m);
            let c = canonical_code(&g);
            for _ in 0..50 {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut rng);
                let mut h = g.relabel(&p);
                let mut e = h.edges().to_vec();
                e.shuffle(&mut rng);
                h = MultiGraph::new(n, e).unwrap();
                assert_eq!(canonical_code(&h), c);
            }
        }
    }

    /// Exhaustive isomorphism test by trying every permutation.
    fn isomorphic_brute(g: &MultiGraph, h: &MultiGraph) -> bool {
        if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
            return false;
        }
        let a = g.multiplicity_matrix();
        let b = h.multiplicity_matrix();
        let n = g.vertex_count();
        permutations(n)
            .into_iter()
            .any(|p| (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]])))
    }

    #[test]
    fn codes_agree_with_brute_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let graphs: Vec<MultiGraph> = (0..120)
            .map(|_| {
                let n = rng.gen_range(3..=5);
                let m = rng.gen_range(3..=6);
                random_multigraph(&mut rng, n, m)
            })
            .collect();
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                assert_eq!(
                    canonical_code(g) == canonical_code(h),
                    isomorphic_brute(g, h),
                    "{g:?} vs {h:?}"
                );
            }
        }
    }

    #[test]
    fn vertex_transitive_graphs_terminate() {
        for g in [complete(9), petersen(), cube(), octahedron(), cycle(10)] {
            let c = canonical_code(&g);
            let mut p: Vec<usize> = (0..g.vertex_count()).collect();
            p.reverse();
            assert_eq!(canonical_code(&g.relabel(&p)), c);
        }
    }
}
