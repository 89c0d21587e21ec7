//! Strategies and brute-force oracles shared by unit tests.

use proptest::prelude::*;

use crate::graph::Graph;

/// Uniformly random labeled graphs on at most `max_n` vertices.
pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

/// Every vertex subset of size `k` that is a clique, by scanning all `2^n` subsets.
pub(crate) fn naive_k_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = (0u32..(1u32 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| g.is_clique(s))
        .collect();
    out.sort();
    out
}
