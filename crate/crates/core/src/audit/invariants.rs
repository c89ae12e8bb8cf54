use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{blocks, bridges, edge_cuts, MultiGraph};

/// Counting invariants of a connected bridgeless graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    /// Cycle rank `m - n + 1`.
    pub r: i64,
    /// `2m - 3n`, which equals `sum_{i>=3} (i-3) v_i` when every degree is at least 3.
    pub alpha: i64,
    /// Number of edge subsets of size 3 that are edge-cuts.
    pub gamma: usize,
    /// Vertices of degree greater than 3.
    pub k: usize,
    /// Number of blocks.
    pub b: usize,
    /// `v_hist[i]` vertices of degree `i`.
    pub v_hist: Vec<usize>,
    /// Mean degree over the `k` high-degree vertices, `(2m - 3(n-k)) / k`.
    #[serde(with = "opt_rational")]
    pub mean_degree_w: Option<BigRational>,
}

impl Invariants {
    /// Compute without checking connectivity or bridges.
    pub fn compute_unchecked(g: &MultiGraph) -> Invariants {
        let (n, m) = (g.vertex_count(), g.edge_count());
        let deg = g.degrees();
        let mut v_hist = vec![0; deg.iter().max().map_or(1, |d| d + 1)];
        for &d in &deg {
            v_hist[d] += 1;
        }
        let k = deg.iter().filter(|&&d| d > 3).count();
        let mean_degree_w = (k > 0).then(|| {
            let num = 2 * m as i64 - 3 * (n - k) as i64;
            BigRational::new(BigInt::from(num), BigInt::from(k))
        });
        Invariants {
            n,
            m,
            r: m as i64 - n as i64 + 1,
            alpha: 2 * m as i64 - 3 * n as i64,
            gamma: edge_cuts(g, 3).len(),
            k,
            b: blocks(g).len(),
            v_hist,
            mean_degree_w,
        }
    }

    pub fn v(&self, i: usize) -> usize {
        self.v_hist.get(i).copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.v_hist.iter().position(|&c| c > 0)
    }

    /// `sum_{i>=3} (i-3) v_i` straight from the histogram.
    pub fn alpha_from_histogram(&self) -> i64 {
        self.v_hist
            .iter()
            .enumerate()
            .skip(3)
            .map(|(i, &c)| (i as i64 - 3) * c as i64)
            .sum()
    }
}

/// Invariants of a connected bridgeless graph.
pub fn compute_invariants(g: &MultiGraph) -> Result<Invariants, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Precondition("graph is not connected".into()));
    }
    if let Some(&e) = bridges(g).first() {
        return Err(GraphError::Precondition(format!("edge {e} is a bridge")));
    }
    let inv = Invariants::compute_unchecked(g);
    debug_assert_eq!(inv.n as i64, 2 * inv.r - 2 - inv.alpha);
    debug_assert_eq!(inv.m as i64, 3 * inv.r - 3 - inv.alpha);
    Ok(inv)
}

pub(crate) mod opt_rational {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|x| x.to_string()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| crate::poly::parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn examples() {
        let k4 = compute_invariants(&complete(4)).unwrap();
        assert_eq!(
            (k4.n, k4.m, k4.r, k4.alpha, k4.gamma, k4.k, k4.b),
            (4, 6, 3, 0, 4, 0, 1)
        );
        let z3 = compute_invariants(&zk(3)).unwrap();
        assert_eq!(
            (z3.n, z3.m, z3.r, z3.alpha, z3.gamma, z3.k, z3.b),
            (2, 3, 2, 0, 1, 0, 1)
        );
        let l = compute_invariants(&loop_graph()).unwrap();
        assert_eq!((l.n, l.m, l.r, l.alpha, l.k, l.b), (1, 1, 1, -1, 0, 1));
        assert!(l.mean_degree_w.is_none());
    }

    #[test]
    fn mean_degree_and_histogram() {
        let w = compute_invariants(&wheel(5)).unwrap();
        assert_eq!(w.k, 1);
        assert_eq!(w.mean_degree_w, Some(BigRational::from_integer(5.into())));
        assert_eq!(w.v(3), 5);
        assert_eq!(w.alpha_from_histogram(), w.alpha);
        assert_eq!(w.n, w.v_hist.iter().sum::<usize>());
    }

    #[test]
    fn preconditions() {
        assert!(compute_invariants(&path(3)).is_err());
        assert!(compute_invariants(&disjoint_union(&zk(3), &zk(3))).is_err());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(compute_invariants(&wheel(4)).unwrap()).unwrap();
        assert_eq!(v["mean_degree_w"], "4");
        assert_eq!(v["gamma"], 4);
    }
}
