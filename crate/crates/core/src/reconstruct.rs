//! Recovering `TS_{k-1}(G)` from the unlabeled graph `TJ_k(G)`, `k = ω(G)`.
//!
//! A graph `T` is k-good when every neighborhood `N(u)` splits into at most `k`
//! cliques with no edges between them. [`partition_neighbors`] decides this
//! greedily and produces the parts; [`build_msets`] turns the parts into the
//! multiset of node sets `Msets(T)`, and [`msets_to_graph`] intersects its
//! members to obtain `H`, with `TS_{k-1}(G) ≅ H + cK_1`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::clique::{clique_number, enumerate_k_cliques, Clique};
use crate::error::ReconfError;
use crate::graph::{Graph, Vertex};
use crate::iso::is_isomorphic;
use crate::reconf::{build_tj, build_ts, LabeledReconfGraph, Rule};
use crate::report::Report;

/// Neighborhood parts `S_1(u)..S_k(u)` for every node `u`; empty parts included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborPartition {
    k: usize,
    parts: Vec<Vec<Vec<Vertex>>>,
}

impl NeighborPartition {
    pub fn k(&self) -> usize {
        self.k
    }

    /// The `k` parts of `N(u)`, each sorted.
    pub fn parts(&self, u: Vertex) -> &[Vec<Vertex>] {
        &self.parts[u]
    }

    pub fn node_count(&self) -> usize {
        self.parts.len()
    }

    /// Checks disjointness, coverage of `N(u)`, cliqueness, and the absence of
    /// edges between parts.
    pub fn validate(&self, t: &Graph) -> Result<(), String> {
        if self.parts.len() != t.vertex_count() {
            return Err("partition size differs from node count".into());
        }
        for (u, parts) in self.parts.iter().enumerate() {
            if parts.len() != self.k {
                return Err(format!("node {u} has {} parts, expected {}", parts.len(), self.k));
            }
            let mut owner = vec![None; t.vertex_count()];
            for (i, part) in parts.iter().enumerate() {
                for &x in part {
                    if !t.has_edge(u, x) {
                        return Err(format!("part {i} of node {u} contains non-neighbor {x}"));
                    }
                    if owner[x].replace(i).is_some() {
                        return Err(format!("node {x} appears twice among the parts of {u}"));
                    }
                }
                if !t.is_clique(part) {
                    return Err(format!("part {i} of node {u} is not a clique"));
                }
            }
            for x in t.neighbors(u) {
                let Some(i) = owner[x] else {
                    return Err(format!("neighbor {x} of node {u} is in no part"));
                };
                if let Some(y) = t.neighbors(x).find(|&y| matches!(owner[y], Some(j) if j != i)) {
                    return Err(format!("edge {x}-{y} joins two parts of node {u}"));
                }
            }
        }
        Ok(())
    }
}

/// Which step of the greedy partition failed at a node `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum KGoodViolation {
    /// `v`, `a`, `b` all neighbor `u`, `a` and `b` both neighbor `v`, but `ab` is not an edge.
    NonCliqueComponent { v: Vertex, a: Vertex, b: Vertex },
    /// `a` joined the part of `v`, `b` did not (`vb` is not an edge), yet `ab` is an edge.
    CrossEdge { v: Vertex, a: Vertex, b: Vertex },
    /// `k + 1` pairwise nonadjacent neighbors of `u`.
    TooManyComponents { representatives: Vec<Vertex> },
}

/// Certificate that a graph is not k-good.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotKGood {
    pub vertex: Vertex,
    pub k: usize,
    pub violation: KGoodViolation,
}

impl NotKGood {
    /// Re-checks the certificate against `t` without rerunning the partition.
    pub fn confirm(&self, t: &Graph) -> bool {
        let n = t.vertex_count();
        let u = self.vertex;
        let near = |x: Vertex| x < n && x != u && t.has_edge(u, x);
        match self.violation {
            KGoodViolation::NonCliqueComponent { v, a, b } => {
                near(v)
                    && near(a)
                    && near(b)
                    && a != b
                    && t.has_edge(v, a)
                    && t.has_edge(v, b)
                    && !t.has_edge(a, b)
            }
            KGoodViolation::CrossEdge { v, a, b } => {
                near(v)
                    && near(a)
                    && near(b)
                    && t.has_edge(v, a)
                    && !t.has_edge(v, b)
                    && t.has_edge(a, b)
            }
            KGoodViolation::TooManyComponents { ref representatives } => {
                representatives.len() == self.k + 1
                    && representatives.iter().all(|&x| near(x))
                    && representatives.iter().enumerate().all(|(i, &x)| {
                        representatives[i + 1..].iter().all(|&y| x != y && !t.has_edge(x, y))
                    })
            }
        }
    }
}

impl fmt::Display for NotKGood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not {}-good at node {}: ", self.k, self.vertex)?;
        match &self.violation {
            KGoodViolation::NonCliqueComponent { v, a, b } => {
                write!(f, "part of {v} is not a clique ({a} and {b} nonadjacent)")
            }
            KGoodViolation::CrossEdge { v, a, b } => {
                write!(f, "edge {a}-{b} leaves the part of {v}")
            }
            KGoodViolation::TooManyComponents { representatives } => {
                write!(f, "pairwise nonadjacent neighbors {representatives:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("{0}")]
    NotKGood(NotKGood),
    #[error(transparent)]
    Reconf(#[from] ReconfError),
}

/// Greedy k-goodness test. Each part is seeded by the lowest-index node still
/// unassigned, so the result is deterministic.
pub fn partition_neighbors(t: &Graph, k: usize) -> Result<NeighborPartition, NotKGood> {
    let mut parts = Vec::with_capacity(t.vertex_count());
    for u in 0..t.vertex_count() {
        let mut remain = t.neighbor_set(u).clone();
        let mut mine = Vec::with_capacity(k);
        let mut seeds = Vec::with_capacity(k + 1);
        for _ in 0..k {
            let Some(v) = remain.ones().next() else {
                mine.push(Vec::new());
                continue;
            };
            seeds.push(v);
            let mut part = remain.clone();
            part.intersect_with(t.neighbor_set(v));
            part.insert(v);
            remain.difference_with(&part);
            let members: Vec<Vertex> = part.ones().collect();
            for (i, &a) in members.iter().enumerate() {
                if let Some(&b) = members[i + 1..].iter().find(|&&b| !t.has_edge(a, b)) {
                    return Err(NotKGood {
                        vertex: u,
                        k,
                        violation: KGoodViolation::NonCliqueComponent { v, a, b },
                    });
                }
            }
            for &a in &members {
                let mut cross = t.neighbor_set(a).clone();
                cross.intersect_with(&remain);
                if let Some(b) = cross.ones().next() {
                    return Err(NotKGood {
                        vertex: u,
                        k,
                        violation: KGoodViolation::CrossEdge { v, a, b },
                    });
                }
            }
            mine.push(members);
        }
        if let Some(extra) = remain.ones().next() {
            seeds.push(extra);
            return Err(NotKGood {
                vertex: u,
                k,
                violation: KGoodViolation::TooManyComponents { representatives: seeds },
            });
        }
        parts.push(mine);
    }
    Ok(NeighborPartition { k, parts })
}

/// A multiset of node sets, stored as sorted set → multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Msets {
    counts: BTreeMap<Vec<Vertex>, usize>,
}

impl Msets {
    pub fn new() -> Self {
        Msets::default()
    }

    /// Adds one copy of `set` (sorted and deduplicated first).
    pub fn insert(&mut self, mut set: Vec<Vertex>) {
        set.sort_unstable();
        set.dedup();
        *self.counts.entry(set).or_insert(0) += 1;
    }

    pub fn count(&self, set: &[Vertex]) -> usize {
        self.counts.get(set).copied().unwrap_or(0)
    }

    pub fn distinct_sets(&self) -> impl Iterator<Item = (&[Vertex], usize)> {
        self.counts.iter().map(|(s, &c)| (s.as_slice(), c))
    }

    /// Total number of members, counting multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Members with copies expanded, ordered by size, then content.
    pub fn members(&self) -> Vec<&[Vertex]> {
        let mut out: Vec<&[Vertex]> = self
            .counts
            .iter()
            .flat_map(|(s, &c)| std::iter::repeat_n(s.as_slice(), c))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Relabels every node through `f`.
    pub fn map_nodes(&self, f: impl Fn(Vertex) -> Vertex) -> Msets {
        let mut out = Msets::new();
        for (s, &c) in &self.counts {
            let mut mapped: Vec<Vertex> = s.iter().map(|&x| f(x)).collect();
            mapped.sort_unstable();
            *out.counts.entry(mapped).or_insert(0) += c;
        }
        out
    }

    /// Checks that sets of two or more nodes occur once and are pairwise
    /// almost disjoint (a), induce cliques (b), cover every node exactly `k`
    /// times with multiplicity (c), and cover every edge exactly once (d).
    pub fn validate(&self, t: &Graph, k: usize) -> Result<(), String> {
        let n = t.vertex_count();
        let mut per_node = vec![0usize; n];
        let mut per_pair: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        for (set, count) in self.distinct_sets() {
            if set.is_empty() {
                return Err("empty member set".into());
            }
            if let Some(&x) = set.iter().find(|&&x| x >= n) {
                return Err(format!("member set {set:?} names unknown node {x}"));
            }
            if set.len() >= 2 && count != 1 {
                return Err(format!("set {set:?} of size {} occurs {count} times", set.len()));
            }
            if !t.is_clique(set) {
                return Err(format!("(b) set {set:?} is not a clique"));
            }
            for &x in set {
                per_node[x] += count;
            }
            for (i, &x) in set.iter().enumerate() {
                for &y in &set[i + 1..] {
                    *per_pair.entry((x, y)).or_insert(0) += 1;
                }
            }
        }
        if let Some((&(x, y), _)) = per_pair.iter().filter(|(_, &c)| c > 1).min() {
            return Err(format!("(a) nodes {x} and {y} lie in two distinct sets"));
        }
        if let Some(x) = (0..n).find(|&x| per_node[x] != k) {
            return Err(format!("(c) node {x} lies in {} sets, expected {k}", per_node[x]));
        }
        if let Some((x, y)) = t.edges().find(|e| !per_pair.contains_key(e)) {
            return Err(format!("(d) edge {x}-{y} lies in no set"));
        }
        Ok(())
    }
}

/// `M_i(u) = S_i(u) ∪ {u}` for every node and part. Singletons keep every copy,
/// larger sets are added once. The result is validated before returning.
pub fn build_msets(t: &Graph, k: usize, p: &NeighborPartition) -> Result<Msets, ReconfError> {
    if p.k() != k || p.node_count() != t.vertex_count() {
        return Err(ReconfError::InvalidInput("partition does not match the graph and k".into()));
    }
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut m = Msets::new();
    for u in 0..t.vertex_count() {
        for part in p.parts(u) {
            let mut set = part.clone();
            set.push(u);
            set.sort_unstable();
            // Singletons keep their multiplicity; larger sets are added once.
            if set.len() == 1 || seen.insert(set.clone()) {
                m.insert(set);
            }
        }
    }
    m.validate(t, k).map_err(ReconfError::Invariant)?;
    Ok(m)
}

/// One node per member (copies are separate nodes), adjacent when the member
/// sets intersect. Node names list the member set, with `#i` for the `i`-th
/// extra copy.
pub fn msets_to_graph(m: &Msets) -> Graph {
    let members = m.members();
    let mut names = Vec::with_capacity(members.len());
    let mut copy = 0;
    for (i, s) in members.iter().enumerate() {
        copy = if i > 0 && members[i - 1] == *s { copy + 1 } else { 0 };
        let body = s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        names.push(if copy == 0 { format!("{{{body}}}") } else { format!("{{{body}}}#{copy}") });
    }
    let mut g = Graph::with_names(names);
    let mut containing: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, s) in members.iter().enumerate() {
        for &x in *s {
            containing.entry(x).or_default().push(i);
        }
    }
    for holders in containing.values() {
        for (a, &i) in holders.iter().enumerate() {
            for &j in &holders[a + 1..] {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Reconstructs `H` with `TS_{k-1}(G) ≅ H + cK_1` from `t ≅ TJ_k(G)`, `k = ω(G)`.
pub fn reconstruct_ts(t: &Graph, k: usize) -> Result<Graph, ReconstructError> {
    if k < 2 {
        return Err(ReconfError::InvalidK {
            k,
            reason: "reconstruction needs k >= 2".into(),
        }
        .into());
    }
    let p = partition_neighbors(t, k).map_err(ReconstructError::NotKGood)?;
    let m = build_msets(t, k, &p)?;
    Ok(msets_to_graph(&m))
}

fn require_tj_of_size(t: &LabeledReconfGraph, w: &Clique) -> Result<(), ReconfError> {
    if t.rule() != Rule::TokenJumping {
        return Err(ReconfError::RuleMismatch {
            expected: Rule::TokenJumping.to_string(),
            found: t.rule().to_string(),
        });
    }
    if w.len() + 1 != t.k() {
        return Err(ReconfError::InvalidInput(format!(
            "expected a clique of size {}, got {}",
            t.k().saturating_sub(1),
            w.len()
        )));
    }
    if w.members().iter().any(|&v| v >= t.base().vertex_count()) || !t.base().is_clique(w.members()) {
        return Err(ReconfError::NotAClique {
            members: w.members().to_vec(),
        });
    }
    Ok(())
}

fn expand_unchecked(t: &LabeledReconfGraph, w: &Clique) -> Vec<usize> {
    (0..t.node_count()).filter(|&i| w.is_subset_of(t.label(i))).collect()
}

/// `Expand(w)`: nodes of `TJ_k(G)` whose clique contains the `(k-1)`-clique `w`.
pub fn expand(t: &LabeledReconfGraph, w: &Clique) -> Result<Vec<usize>, ReconfError> {
    require_tj_of_size(t, w)?;
    Ok(expand_unchecked(t, w))
}

/// The multiset of nonempty `Expand(w)` over all `(k-1)`-cliques `w` of the base.
pub fn msets_reference(t: &LabeledReconfGraph) -> Result<Msets, ReconfError> {
    if t.k() == 0 {
        return Err(ReconfError::InvalidK {
            k: 0,
            reason: "Expand needs k >= 1".into(),
        });
    }
    let mut m = Msets::new();
    for (i, w) in enumerate_k_cliques(t.base(), t.k() - 1).into_iter().enumerate() {
        if i == 0 {
            require_tj_of_size(t, &w)?;
        }
        let e = expand_unchecked(t, &w);
        if !e.is_empty() {
            m.insert(e);
        }
    }
    Ok(m)
}

/// Runs the whole pipeline on `TJ_ω(g)` with labels stripped and compares
/// against `TS_{ω-1}(g)` built directly. Also checks that `build_msets`
/// reproduces the `Expand` multiset and that cliques with empty `Expand` are
/// isolated in `TS_{ω-1}(g)`.
pub fn verify_reconstruction(g: &Graph) -> Result<Report, ReconfError> {
    let k = clique_number(g);
    if k < 2 {
        return Err(ReconfError::InvalidInput(format!(
            "reconstruction needs clique number >= 2, got {k}"
        )));
    }
    let tj = build_tj(g, k)?;
    let ts = build_ts(g, k - 1)?;
    let t = tj.graph().unlabeled();
    let mut report = Report::new("reconstruct").value("k", k).value("tj_nodes", t.vertex_count());

    let partition = match partition_neighbors(&t, k) {
        Ok(p) => p,
        Err(e) => {
            report.fail(json!({ "stage": "partition", "not_k_good": e }));
            return Ok(report);
        }
    };
    let built = match build_msets(&t, k, &partition) {
        Ok(m) => m,
        Err(e) => {
            report.fail(json!({ "stage": "msets", "error": e.to_string() }));
            return Ok(report);
        }
    };
    let reference = msets_reference(&tj)?;
    if built != reference {
        report.fail(json!({ "stage": "msets-reference", "built": built, "reference": reference }));
    }
    let h = msets_to_graph(&built);

    let mut empty_expand = Vec::new();
    for w in ts.labels() {
        if expand_unchecked(&tj, w).is_empty() {
            empty_expand.push(w);
        }
    }
    let c = empty_expand.len();
    for w in &empty_expand {
        let node = ts.node_of(w).expect("every (k-1)-clique is a TS node");
        if ts.graph().degree(node) != 0 {
            report.fail(json!({ "stage": "empty-expand-isolated", "clique": w.display(g) }));
        }
    }

    report.set("c", c);
    report.set("h_nodes", h.vertex_count());
    report.set("h_edges", h.edge_count());
    report.set("ts_nodes", ts.node_count());
    report.set("ts_edges", ts.graph().edge_count());
    report.set("msets_members", built.len());
    if is_isomorphic(&h.add_isolated(c).unlabeled(), &ts.graph().unlabeled()).is_none() {
        report.fail(json!({
            "stage": "isomorphism",
            "h_nodes": h.vertex_count(),
            "h_edges": h.edge_count(),
            "c": c,
        }));
    }
    Ok(report)
}

/// Checks that `Expand(w) ∩ Expand(r) ≠ ∅` exactly when `w` and `r` are
/// adjacent in `TS_{k-1}(g)`, for all pairs of `(k-1)`-cliques, `k = ω(g)`.
pub fn verify_expand_intersections(g: &Graph) -> Result<Report, ReconfError> {
    let k = clique_number(g);
    if k < 2 {
        return Err(ReconfError::InvalidInput(format!(
            "Expand needs clique number >= 2, got {k}"
        )));
    }
    let tj = build_tj(g, k)?;
    let ts = build_ts(g, k - 1)?;
    let expands: Vec<Vec<usize>> = ts.labels().iter().map(|w| expand_unchecked(&tj, w)).collect();
    let mut report = Report::new("expand-intersections").value("k", k);
    let mut pairs = 0usize;
    for i in 0..expands.len() {
        for j in i + 1..expands.len() {
            pairs += 1;
            let meet = expands[i].iter().any(|x| expands[j].contains(x));
            if meet != ts.graph().has_edge(i, j) {
                report.fail(json!({
                    "w": ts.label(i).display(g),
                    "r": ts.label(j).display(g),
                    "expand_meet": meet,
                }));
            }
        }
    }
    report.set("pairs", pairs);
    Ok(report)
}

/// `g ⊕ K_{n-ω(g)}`: raises the clique number to `n` without changing the
/// token jumping graph of maximum cliques.
pub fn join_lift(g: &Graph, n: usize) -> Result<Graph, ReconfError> {
    let omega = clique_number(g);
    if n < omega {
        return Err(ReconfError::InvalidK {
            k: n,
            reason: format!("target clique number is below ω = {omega}"),
        });
    }
    Ok(g.join(&Graph::complete(n - omega)))
}
