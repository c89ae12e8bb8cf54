use super::MultiGraph;

fn simple_adjacency(g: &MultiGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        if u != v {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    adj
}

/// Maximum-cardinality search order, reversed, if it is a perfect
/// elimination ordering of the underlying simple graph.
pub fn perfect_elimination_order(g: &MultiGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let adj = simple_adjacency(g);
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[v] = true;
        visit.push(v);
        for w in 0..n {
            if adj[v][w] && !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    let peo: Vec<usize> = visit.into_iter().rev().collect();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    // each vertex's later neighbours must form a clique
    for (i, &v) in peo.iter().enumerate() {
        let later: Vec<usize> = (0..n).filter(|&w| adj[v][w] && pos[w] > i).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !adj[parent][w]) {
            return None;
        }
    }
    Some(peo)
}

/// No induced cycle of length greater than three. Loops and parallel edges
/// are ignored.
pub fn is_chordal(g: &MultiGraph) -> bool {
    perfect_elimination_order(g).is_some()
}
