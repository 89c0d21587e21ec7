//! Distance-based predicates: bipartiteness, medians, forests.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

/// BFS distances from `s`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, s: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Two-colorability by BFS.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// True iff `g` is a forest.
pub fn is_acyclic(g: &Graph) -> bool {
    // A forest has exactly |V| - (#components) edges.
    g.edge_count() + g.components().len() == g.vertex_count()
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// All-pairs BFS distance table; `None` marks unreachable pairs.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.vertex_count()).map(|s| bfs_distances(g, s)).collect()
}

/// Vertices lying on shortest paths between each pair of `a`, `b`, `c`.
pub fn medians(g: &Graph, a: Vertex, b: Vertex, c: Vertex) -> Result<Vec<Vertex>, GraphError> {
    let da = bfs_distances(g, a);
    let db = bfs_distances(g, b);
    let dc = bfs_distances(g, c);
    let (Some(ab), Some(ac)) = (da[b], da[c]) else {
        return Err(GraphError::Disconnected { a, b, c });
    };
    let bc = db[c].unwrap();
    Ok((0..g.vertex_count())
        .filter(|&m| match (da[m], db[m], dc[m]) {
            (Some(x), Some(y), Some(z)) => x + y == ab && y + z == bc && x + z == ac,
            _ => false,
        })
        .collect())
}

/// True iff every triple of vertices has exactly one median. Requires a connected graph.
pub fn is_median_graph(g: &Graph) -> Result<bool, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    Ok(first_non_median_triple(g).is_none())
}

/// A triple with zero or several medians, if any. Assumes `g` is connected.
pub fn first_non_median_triple(g: &Graph) -> Option<(Vertex, Vertex, Vertex, usize)> {
    let n = g.vertex_count();
    let d: Vec<Vec<usize>> = distance_matrix(g)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.unwrap_or(usize::MAX / 4)).collect())
        .collect();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let count = (0..n)
                    .filter(|&m| {
                        d[a][m] + d[m][b] == d[a][b]
                            && d[b][m] + d[m][c] == d[b][c]
                            && d[a][m] + d[m][c] == d[a][c]
                    })
                    .count();
                if count != 1 {
                    return Some((a, b, c, count));
                }
            }
        }
    }
    None
}
