//! Planarity decision.
//!
//! Backed by the left-right planarity test from `rustworkx-core`. Debug builds
//! cross-check every positive answer against the Euler bound `|E| <= 3|V| - 6`.

use rustworkx_core::petgraph::graph::UnGraph;

use crate::graph::Graph;

pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    // Euler: a simple planar graph with at least 3 vertices has at most 3n - 6 edges.
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    if n <= 4 {
        return true;
    }
    let mut pg = UnGraph::<(), ()>::with_capacity(n, m);
    let nodes: Vec<_> = (0..n).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    let planar = rustworkx_core::planar::is_planar(&pg);
    debug_assert!(!planar || n < 3 || m <= 3 * n - 6);
    planar
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    /// Wagner's theorem, brute force: `g` is non-planar iff it has a K5 or K3,3
    /// minor, i.e. disjoint connected branch sets with the required adjacencies.
    /// Exponential; only for graphs with at most 7 vertices.
    fn minor_oracle_planar(g: &Graph) -> bool {
        !(has_minor(g, &[0, 5], &|i, j| i != j)
            || has_minor(g, &[0, 3, 6], &|i, j| (i < 3) != (j < 3)))
    }

    /// `groups` lists boundaries of interchangeable branch-set labels; within a
    /// group label `i` may be used only once label `i - 1` is in use.
    fn has_minor(g: &Graph, groups: &[usize], need: &dyn Fn(usize, usize) -> bool) -> bool {
        let parts = *groups.last().unwrap();
        let mut assign = vec![parts; g.vertex_count()];
        rec(g, 0, parts, groups, &mut assign, need)
    }

    fn rec(
        g: &Graph,
        v: usize,
        parts: usize,
        groups: &[usize],
        assign: &mut Vec<usize>,
        need: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if v == g.vertex_count() {
            return check(g, parts, assign, need);
        }
        for a in 0..=parts {
            if a < parts && !groups.contains(&a) && !assign[..v].contains(&(a - 1)) {
                continue;
            }
            assign[v] = a;
            if rec(g, v + 1, parts, groups, assign, need) {
                return true;
            }
        }
        assign[v] = parts;
        false
    }

    fn check(g: &Graph, parts: usize, assign: &[usize], need: &dyn Fn(usize, usize) -> bool) -> bool {
        let sets: Vec<Vec<usize>> = (0..parts)
            .map(|p| (0..assign.len()).filter(|&v| assign[v] == p).collect())
            .collect();
        if sets.iter().any(|s| s.is_empty() || !g.induced_subgraph(s).is_connected()) {
            return false;
        }
        for i in 0..parts {
            for j in i + 1..parts {
                if need(i, j) && !sets[i].iter().any(|&u| sets[j].iter().any(|&v| g.has_edge(u, v))) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn classical_cases() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        let octahedron = Graph::new(2).join(&Graph::new(2)).join(&Graph::new(2));
        assert!(is_planar(&octahedron));
        assert!(!is_planar(&Graph::petersen()));
        assert!(is_planar(&Graph::path(3).cartesian_product(&Graph::path(3))));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        let k33 = Graph::complete_bipartite(3, 3);
        let mut g = Graph::new(7);
        for (u, v) in k33.edges() {
            if (u, v) == (0, 3) {
                g.add_edge(0, 6);
                g.add_edge(6, 3);
            } else {
                g.add_edge(u, v);
            }
        }
        assert!(!is_planar(&g));
        assert!(!minor_oracle_planar(&g));
    }

    #[test]
    fn oracle_sanity() {
        assert!(minor_oracle_planar(&Graph::complete(4)));
        assert!(!minor_oracle_planar(&Graph::complete(5)));
        assert!(!minor_oracle_planar(&Graph::complete_bipartite(3, 3)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_minor_oracle(g in arb_graph(7)) {
            prop_assert_eq!(is_planar(&g), minor_oracle_planar(&g));
        }

        #[test]
        fn planar_graphs_obey_euler(g in arb_graph(12)) {
            if is_planar(&g) && g.vertex_count() >= 3 {
                prop_assert!(g.edge_count() <= 3 * g.vertex_count() - 6);
            }
        }
    }
}
