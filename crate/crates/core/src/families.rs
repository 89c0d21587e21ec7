//! Named graph families: Johnson graphs, hypercubes, gear graphs, Fibonacci cubes.

use itertools::Itertools;

use crate::error::GraphError;
use crate::graph::Graph;

/// `J(n, k)`: the `k`-subsets of `{0..n}` in lexicographic order, adjacent when
/// they share exactly `k - 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k > n {
        return Err(GraphError::InvalidParameter(format!(
            "johnson({n}, {k}) needs k <= n"
        )));
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let mut g = Graph::new(subsets.len());
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            let shared = subsets[i].iter().filter(|x| subsets[j].contains(x)).count();
            if shared + 1 == k {
                g.add_edge(i, j);
            }
        }
    }
    g.set_names(
        subsets
            .iter()
            .map(|s| format!("{{{}}}", s.iter().join(",")))
            .collect(),
    );
    Ok(g)
}

/// `Q_n`: vertex `i` is the binary string of `i`, edges join strings at Hamming distance 1.
pub fn hypercube(n: usize) -> Graph {
    assert!(n < usize::BITS as usize - 1, "hypercube dimension too large");
    let size = 1usize << n;
    let mut g = Graph::new(size);
    for v in 0..size {
        for bit in 0..n {
            let u = v ^ (1 << bit);
            if u > v {
                g.add_edge(v, u);
            }
        }
    }
    g
}

/// Gear graph on `2n + 1` vertices: hub 0, rim cycle `1..=2n` where the odd
/// rim vertices carry the spokes.
pub fn gear(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("gear({n}) needs n >= 3")));
    }
    let mut g = Graph::new(2 * n + 1);
    for i in 1..=2 * n {
        let next = if i == 2 * n { 1 } else { i + 1 };
        g.add_edge(i, next);
        if i % 2 == 1 {
            g.add_edge(0, i);
        }
    }
    Ok(g)
}

/// `Γ_n`: subgraph of `Q_n` induced by strings with no two consecutive ones,
/// vertices in increasing numeric order.
pub fn fibonacci_cube(n: usize) -> Graph {
    let strings: Vec<usize> = (0..1usize << n).filter(|&s| s & (s >> 1) == 0).collect();
    let mut g = Graph::new(strings.len());
    for i in 0..strings.len() {
        for j in i + 1..strings.len() {
            if (strings[i] ^ strings[j]).count_ones() == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}
