use crate::error::WorkError;
use crate::graph::MultiGraph;

/// Largest number of assignments the oracle will enumerate.
pub const ORACLE_LIMIT: u64 = 50_000_000;

/// Number of nowhere-zero `Z_q`-flows, by exhaustive assignment.
///
/// Each edge `(u, v)` is oriented `u -> v`. Loops carry any nonzero value and
/// take no part in conservation.
pub fn count_flows_oracle(g: &MultiGraph, q: u64) -> Result<u64, WorkError> {
    if q < 2 {
        return Err(WorkError::Invalid(format!(
            "group order must be >= 2, got {q}"
        )));
    }
    let arcs: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, v)| u != v).collect();
    let loops = (g.edge_count() - arcs.len()) as u32;
    let total = (q - 1)
        .checked_pow(arcs.len() as u32)
        .filter(|&t| t <= ORACLE_LIMIT)
        .ok_or_else(|| WorkError::TooLarge(format!("{}^{} assignments", q - 1, arcs.len())))?;
    let loop_factor = (q - 1)
        .checked_pow(loops)
        .ok_or_else(|| WorkError::TooLarge(format!("{}^{loops} loop values", q - 1)))?;

    // net[v] = inflow - outflow mod q, kept current as the odometer turns
    let mut net = vec![0u64; g.vertex_count()];
    let mut val = vec![1u64; arcs.len()];
    let shift = |net: &mut [u64], (u, v): (usize, usize), old: u64, new: u64| {
        net[v] = (net[v] + q - old + new) % q;
        net[u] = (net[u] + old + q - new) % q;
    };
    for &arc in &arcs {
        shift(&mut net, arc, 0, 1);
    }
    let mut count = 0u64;
    for _ in 0..total {
        if net.iter().all(|&x| x == 0) {
            count += 1;
        }
        for (i, &arc) in arcs.iter().enumerate() {
            let old = val[i];
            let new = if old + 1 == q { 1 } else { old + 1 };
            shift(&mut net, arc, old, new);
            val[i] = new;
            if new != 1 {
                break;
            }
        }
    }
    count
        .checked_mul(loop_factor)
        .ok_or_else(|| WorkError::TooLarge("flow count overflows u64".into()))
}
