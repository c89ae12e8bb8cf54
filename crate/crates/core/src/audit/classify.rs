use serde::{Deserialize, Serialize};

use crate::graph::families::{complete, loop_graph, zk};
use crate::graph::{
    bridges, canonical_code, has_proper_three_cut, is_3_edge_connected, is_nonseparable, MultiGraph,
};
use crate::poly::{IntPoly, RootProfile};

/// Membership flags for `𝔾` and `𝔾₀`, plus the structural facts behind them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub bridgeless: bool,
    pub real_rooted: bool,
    pub nonseparable: bool,
    pub three_edge_connected: bool,
    pub proper_three_cut: bool,
    /// `G - e` is non-separable for every edge `e`.
    pub deletions_nonseparable: bool,
    pub in_g: bool,
    pub in_g0: bool,
    pub integral_roots: bool,
    /// Isomorphic to one of `L`, `Z_3`, `K_4`.
    pub exceptional: bool,
}

/// Is `g` isomorphic to `L`, `Z_3` or `K_4`?
pub fn is_exceptional(g: &MultiGraph) -> bool {
    if g.edge_count() > 6 || g.vertex_count() > 4 {
        return false;
    }
    let code = canonical_code(g);
    [loop_graph(), zk(3), complete(4)]
        .iter()
        .any(|h| canonical_code(h) == code)
}

/// Classify `g` given its flow polynomial and, when nonzero, its root profile.
///
/// The edgeless graph is kept out of `𝔾₀`.
pub fn classify_g_and_g0(
    g: &MultiGraph,
    f: &IntPoly,
    prof: Option<&RootProfile>,
) -> Classification {
    debug_assert_eq!(f.is_zero(), prof.is_none());
    let bridgeless = bridges(g).is_empty();
    let real_rooted = prof.is_some_and(|p| p.real_rooted);
    let integral_roots = prof.is_some_and(|p| p.all_roots_integral());
    let in_g = bridgeless && real_rooted;
    let nonseparable = is_nonseparable(g);
    let three_edge_connected = is_3_edge_connected(g);
    // only evaluated on the path to 𝔾₀ membership; reported false otherwise
    let structural = in_g && nonseparable && three_edge_connected && g.edge_count() >= 1;
    let proper_three_cut = three_edge_connected && has_proper_three_cut(g).is_some();
    let deletions_nonseparable = structural
        && !proper_three_cut
        && (0..g.edge_count()).all(|e| is_nonseparable(&g.delete_edge(e).unwrap()));
    let in_g0 = structural && !proper_three_cut && deletions_nonseparable;
    Classification {
        bridgeless,
        real_rooted,
        nonseparable,
        three_edge_connected,
        proper_three_cut,
        deletions_nonseparable,
        in_g,
        in_g0,
        integral_roots,
        exceptional: is_exceptional(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::flow_poly;
    use crate::graph::families::*;
    use crate::poly::{root_profile, ten_pow_neg};

    fn run(g: &MultiGraph) -> Classification {
        let f = flow_poly(g);
        let prof = (!f.is_zero()).then(|| root_profile(&f, &ten_pow_neg(9)).unwrap());
        classify_g_and_g0(g, &f, prof.as_ref())
    }

    #[test]
    fn examples() {
        let k4 = run(&complete(4));
        assert!(k4.in_g && k4.in_g0 && k4.integral_roots && k4.exceptional);
        assert!(run(&loop_graph()).in_g0);
        assert!(run(&zk(3)).in_g0);
        assert!(!run(&zk(4)).in_g);
        assert!(!run(&MultiGraph::empty(1)).in_g0);
        let c4 = run(&cycle(4));
        assert!(c4.in_g && !c4.in_g0 && !c4.three_edge_connected);
        let prism = run(&prism());
        assert!(prism.proper_three_cut && !prism.in_g0);
        assert!(!run(&path(2)).bridgeless);
    }
}
