//! Reconfiguration graphs of cliques under token sliding (TS), token jumping
//! (TJ), and token addition/removal (TAR), plus token graphs.
//!
//! Nodes are listed in clique enumeration order: by size, then
//! lexicographically. TS and TJ edges are found by bucketing every clique under
//! each of its `(k-1)`-subsets; two distinct `k`-cliques are TJ-adjacent iff
//! they share a bucket, and each adjacent pair shares exactly one.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::clique::{enumerate_k_cliques, Clique};
use crate::error::ReconfError;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "ts")]
    TokenSliding,
    #[serde(rename = "tj")]
    TokenJumping,
    /// `TAR_k`: cliques of size at least `k`.
    #[serde(rename = "tar-lower")]
    TarLower,
    /// `TAR^k`: cliques of size at most `k`.
    #[serde(rename = "tar-upper")]
    TarUpper,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::TokenSliding => "ts",
            Rule::TokenJumping => "tj",
            Rule::TarLower => "tar-lower",
            Rule::TarUpper => "tar-upper",
        }
    }

    /// The adjacency predicate of the rule with size parameter `k`.
    pub fn adjacent(self, base: &Graph, k: usize, a: &Clique, b: &Clique) -> bool {
        match self {
            Rule::TokenSliding | Rule::TokenJumping => {
                let (ab, ba) = (a.difference(b), b.difference(a));
                ab.len() == 1
                    && ba.len() == 1
                    && (self == Rule::TokenJumping || base.has_edge(ab[0], ba[0]))
            }
            Rule::TarLower | Rule::TarUpper => {
                let sym = a.difference(b).len() + b.difference(a).len();
                let ok = if self == Rule::TarLower {
                    a.len().min(b.len()) >= k
                } else {
                    a.len().max(b.len()) <= k
                };
                sym == 1 && ok
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = ReconfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ts" => Ok(Rule::TokenSliding),
            "tj" => Ok(Rule::TokenJumping),
            "tar-lower" => Ok(Rule::TarLower),
            "tar-upper" => Ok(Rule::TarUpper),
            other => Err(ReconfError::InvalidInput(format!("unknown rule {other:?}"))),
        }
    }
}

/// A reconfiguration graph whose nodes carry the cliques of `base` they stand for.
#[derive(Debug, Clone)]
pub struct LabeledReconfGraph {
    base: Graph,
    rule: Rule,
    k: usize,
    graph: Graph,
    labels: Vec<Clique>,
    index: HashMap<Clique, usize>,
}

/// Byte-deterministic JSON form of a [`LabeledReconfGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconfGraphJson {
    pub rule: Rule,
    pub k: usize,
    pub nodes: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

impl LabeledReconfGraph {
    fn assemble(base: &Graph, rule: Rule, k: usize, labels: Vec<Clique>, edges: Vec<(usize, usize)>) -> Self {
        let mut graph = Graph::with_names(labels.iter().map(|c| c.display(base)).collect());
        for (i, j) in edges {
            graph.add_edge(i, j);
        }
        let index = labels.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        LabeledReconfGraph {
            base: base.clone(),
            rule,
            k,
            graph,
            labels,
            index,
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn labels(&self) -> &[Clique] {
        &self.labels
    }

    pub fn label(&self, node: usize) -> &Clique {
        &self.labels[node]
    }

    pub fn node_of(&self, clique: &Clique) -> Option<usize> {
        self.index.get(clique).copied()
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn to_json(&self) -> ReconfGraphJson {
        ReconfGraphJson {
            rule: self.rule,
            k: self.k,
            nodes: self
                .labels
                .iter()
                .map(|c| c.members().iter().map(|&v| self.base.name(v).into_owned()).collect())
                .collect(),
            edges: self.graph.edges().map(|(i, j)| [i, j]).collect(),
        }
    }

    /// Recomputes the rule predicate over every node pair. Quadratic; for tests
    /// and small graphs.
    pub fn check_rule_consistency(&self) -> Result<(), String> {
        for i in 0..self.node_count() {
            for j in i + 1..self.node_count() {
                let want = self.rule.adjacent(&self.base, self.k, &self.labels[i], &self.labels[j]);
                if want != self.graph.has_edge(i, j) {
                    return Err(format!(
                        "nodes {} and {}: rule says {want}",
                        self.labels[i].display(&self.base),
                        self.labels[j].display(&self.base)
                    ));
                }
            }
        }
        Ok(())
    }
}

fn require_positive(k: usize) -> Result<(), ReconfError> {
    if k == 0 {
        return Err(ReconfError::InvalidK {
            k,
            reason: "token sliding and jumping need k >= 1".into(),
        });
    }
    Ok(())
}

/// Pairs of `k`-sets sharing a `(k-1)`-subset, with the two differing elements.
fn shared_subset_pairs(sets: &[Vec<Vertex>]) -> Vec<(usize, usize, Vertex, Vertex)> {
    let mut buckets: HashMap<Vec<Vertex>, Vec<(usize, Vertex)>> = HashMap::new();
    for (i, s) in sets.iter().enumerate() {
        for pos in 0..s.len() {
            let mut key = s.clone();
            let dropped = key.remove(pos);
            buckets.entry(key).or_default().push((i, dropped));
        }
    }
    let mut out = Vec::new();
    for members in buckets.values() {
        for (a, &(i, u)) in members.iter().enumerate() {
            for &(j, v) in &members[a + 1..] {
                out.push((i.min(j), i.max(j), u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

fn build_same_size(g: &Graph, k: usize, rule: Rule) -> Result<LabeledReconfGraph, ReconfError> {
    require_positive(k)?;
    let labels = enumerate_k_cliques(g, k);
    let sets: Vec<Vec<Vertex>> = labels.iter().map(|c| c.members().to_vec()).collect();
    let edges = shared_subset_pairs(&sets)
        .into_iter()
        .filter(|&(_, _, u, v)| rule == Rule::TokenJumping || g.has_edge(u, v))
        .map(|(i, j, _, _)| (i, j))
        .collect();
    Ok(LabeledReconfGraph::assemble(g, rule, k, labels, edges))
}

/// `TS_k(G)`.
pub fn build_ts(g: &Graph, k: usize) -> Result<LabeledReconfGraph, ReconfError> {
    build_same_size(g, k, Rule::TokenSliding)
}

/// `TJ_k(G)`.
pub fn build_tj(g: &Graph, k: usize) -> Result<LabeledReconfGraph, ReconfError> {
    build_same_size(g, k, Rule::TokenJumping)
}

fn build_tar(g: &Graph, rule: Rule, k: usize) -> LabeledReconfGraph {
    let (lo, hi) = match rule {
        Rule::TarLower => (k, usize::MAX),
        _ => (0, k),
    };
    let mut labels = Vec::new();
    let mut size = lo;
    while size <= hi {
        let layer = enumerate_k_cliques(g, size);
        if layer.is_empty() {
            break;
        }
        labels.extend(layer);
        size += 1;
    }
    let index: HashMap<&Clique, usize> = labels.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, c) in labels.iter().enumerate() {
        for &v in c.members() {
            if let Some(&j) = index.get(&c.without(v)) {
                edges.push((j.min(i), j.max(i)));
            }
        }
    }
    edges.sort_unstable();
    LabeledReconfGraph::assemble(g, rule, k, labels, edges)
}

/// `TAR_k(G)`: cliques of size at least `k`.
pub fn build_tar_lower(g: &Graph, k: usize) -> LabeledReconfGraph {
    build_tar(g, Rule::TarLower, k)
}

/// `TAR^k(G)`: cliques of size at most `k`.
pub fn build_tar_upper(g: &Graph, k: usize) -> LabeledReconfGraph {
    build_tar(g, Rule::TarUpper, k)
}

/// The simplex graph `TAR(G) = TAR_0(G)` over all cliques including `∅`.
pub fn build_simplex(g: &Graph) -> LabeledReconfGraph {
    build_tar_lower(g, 0)
}

/// Token graph `F_k(G)`: every `k`-subset of `V(G)` under TS moves.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    pub graph: Graph,
    /// `subsets[i]` is the vertex subset of node `i`, sorted.
    pub subsets: Vec<Vec<Vertex>>,
}

pub fn token_graph(g: &Graph, k: usize) -> Result<TokenGraph, ReconfError> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(ReconfError::InvalidK {
            k,
            reason: format!("token graphs need 1 <= k <= |V| = {n}"),
        });
    }
    let subsets: Vec<Vec<Vertex>> = (0..n).combinations(k).collect();
    let mut graph = Graph::with_names(
        subsets
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|&v| g.name(v)).join(",")))
            .collect(),
    );
    for (i, j, u, v) in shared_subset_pairs(&subsets) {
        if g.has_edge(u, v) {
            graph.add_edge(i, j);
        }
    }
    Ok(TokenGraph { graph, subsets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::count_k_cliques;
    use crate::families::johnson;
    use crate::iso::are_isomorphic;
    use crate::metric::is_bipartite;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn labels(r: &LabeledReconfGraph) -> Vec<Vec<usize>> {
        r.labels().iter().map(|c| c.members().to_vec()).collect()
    }

    #[test]
    fn ts_of_triangle_is_triangle() {
        let r = build_ts(&Graph::complete(3), 2).unwrap();
        assert_eq!(labels(&r), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(r.graph().edge_count(), 3);
    }

    #[test]
    fn ts_of_k4_is_johnson_4_2() {
        let r = build_ts(&Graph::complete(4), 2).unwrap();
        assert_eq!((r.node_count(), r.graph().edge_count()), (6, 12));
        assert!(are_isomorphic(r.graph(), &johnson(4, 2).unwrap()));
    }

    #[test]
    fn ts_of_diamond_is_two_triangles_sharing_bc() {
        let r = build_ts(&Graph::diamond(), 2).unwrap();
        // Edges of the diamond: 01 02 12 13 23; node {1,2} is index 2.
        assert_eq!(labels(&r), vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let edges: Vec<_> = r.graph().edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn tj_small_cases() {
        let r = build_tj(&Graph::diamond(), 3).unwrap();
        assert_eq!(labels(&r), vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(r.graph().edge_count(), 1);

        let r = build_tj(&Graph::complete(4), 4).unwrap();
        assert_eq!((r.node_count(), r.graph().edge_count()), (1, 0));

        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let r = build_tj(&two, 3).unwrap();
        assert_eq!((r.node_count(), r.graph().edge_count()), (2, 0));
    }

    #[test]
    fn k_zero_is_rejected_for_ts_and_tj() {
        assert!(build_ts(&Graph::complete(3), 0).is_err());
        assert!(build_tj(&Graph::complete(3), 0).is_err());
    }

    #[test]
    fn simplex_small_cases() {
        let r = build_simplex(&Graph::complete(2));
        assert_eq!(labels(&r), vec![vec![], vec![0], vec![1], vec![0, 1]]);
        assert_eq!(r.graph().edge_count(), 4);

        let r = build_simplex(&Graph::cycle(5));
        assert_eq!((r.node_count(), r.graph().edge_count()), (11, 15));

        let r = build_tar_upper(&Graph::complete(3), 1);
        assert_eq!(r.node_count(), 4);
        assert_eq!(r.graph().degree(0), 3);
        assert_eq!(r.graph().edge_count(), 3);
    }

    #[test]
    fn tar_lower_drops_small_cliques() {
        let r = build_tar_lower(&Graph::complete(3), 2);
        assert_eq!(labels(&r), vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
        assert_eq!(r.graph().edge_count(), 3);
    }

    #[test]
    fn token_graph_small_cases() {
        let t = token_graph(&Graph::path(3), 2).unwrap();
        assert_eq!(t.subsets, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(are_isomorphic(&t.graph, &Graph::path(3)));
        assert_eq!(token_graph(&Graph::cycle(5), 5).unwrap().graph.vertex_count(), 1);
        assert!(token_graph(&Graph::cycle(5), 6).is_err());
        for n in 1..=5 {
            for k in 1..=n {
                let kn = Graph::complete(n);
                assert!(are_isomorphic(&token_graph(&kn, k).unwrap().graph, build_ts(&kn, k).unwrap().graph()));
            }
        }
    }

    #[test]
    fn json_export_is_stable() {
        let mut g = Graph::complete(3);
        g.set_names(vec!["a".into(), "b".into(), "c".into()]);
        let json = serde_json::to_string(&build_tj(&g, 2).unwrap().to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"rule":"tj","k":2,"nodes":[["a","b"],["a","c"],["b","c"]],"edges":[[0,1],[0,2],[1,2]]}"#
        );
    }

    proptest! {
        #[test]
        fn builders_match_rule_predicate(g in arb_graph(7), k in 0usize..5) {
            if k >= 1 {
                build_ts(&g, k).unwrap().check_rule_consistency().map_err(TestCaseError::fail)?;
                build_tj(&g, k).unwrap().check_rule_consistency().map_err(TestCaseError::fail)?;
            }
            build_tar_lower(&g, k).check_rule_consistency().map_err(TestCaseError::fail)?;
            build_tar_upper(&g, k).check_rule_consistency().map_err(TestCaseError::fail)?;
        }

        #[test]
        fn ts_edges_are_tj_edges(g in arb_graph(8), k in 1usize..5) {
            let ts = build_ts(&g, k).unwrap();
            let tj = build_tj(&g, k).unwrap();
            prop_assert_eq!(ts.labels(), tj.labels());
            for (i, j) in ts.graph().edges() {
                prop_assert!(tj.graph().has_edge(i, j));
            }
        }

        #[test]
        fn simplex_counts_and_parity(g in arb_graph(8)) {
            let s = build_simplex(&g);
            let total: usize = (0..=g.vertex_count()).map(|k| count_k_cliques(&g, k)).sum();
            prop_assert_eq!(s.node_count(), total);
            for (i, j) in s.graph().edges() {
                prop_assert_eq!(s.label(i).len().abs_diff(s.label(j).len()), 1);
            }
            prop_assert!(is_bipartite(s.graph()));
        }
    }
}
