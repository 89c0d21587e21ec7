//! Checkers for structural properties of clique reconfiguration graphs.
//!
//! Every checker returns a [`Report`]; preconditions that the caller got wrong
//! (non-planar input where planarity is required, `k` out of range) are errors.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use serde_json::{json, Value};

use crate::clique::{clique_number, count_k3, count_k4, enumerate_k_cliques, Clique};
use crate::coloring::chromatic_number;
use crate::error::ReconfError;
use crate::families::johnson;
use crate::graph::{Graph, Vertex};
use crate::metric::{first_non_median_triple, is_acyclic, is_bipartite};
use crate::planar::is_planar;
use crate::reconf::{build_simplex, build_tj, build_ts, LabeledReconfGraph, Rule};
use crate::reconstruct::verify_reconstruction;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecompositionKind {
    /// Cliques are `core - a_i` for a `(k+1)`-clique `core`.
    Uni,
    /// Cliques are `core + a_i` for a `(k-1)`-clique `core`.
    Int,
}

/// Shape of a complete subgraph of `TS_k(G)` with at least three nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDecomposition {
    pub kind: DecompositionKind,
    pub core: Clique,
    pub attachments: Vec<Vertex>,
}

impl CliqueDecomposition {
    /// True iff the `i`-th node is `core ∓ attachments[i]` and the attachments are distinct.
    pub fn describes(&self, nodes: &[Clique]) -> bool {
        let mut seen = self.attachments.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.attachments.len()
            && nodes.len() == self.attachments.len()
            && nodes.iter().zip(&self.attachments).all(|(c, &a)| match self.kind {
                DecompositionKind::Uni => self.core.contains(a) && *c == self.core.without(a),
                DecompositionKind::Int => !self.core.contains(a) && *c == self.core.with(a),
            })
    }
}

/// Splits a complete subgraph of `TS_k(g)` into a common core plus one vertex
/// per node. The `Int` form is preferred when both forms exist.
pub fn decompose_ts_clique(
    g: &Graph,
    nodes: &[Clique],
    k: usize,
) -> Result<CliqueDecomposition, ReconfError> {
    if nodes.len() < 3 {
        return Err(ReconfError::InvalidInput(format!(
            "need at least 3 cliques, got {}",
            nodes.len()
        )));
    }
    for c in nodes {
        if c.len() != k {
            return Err(ReconfError::InvalidInput(format!(
                "clique {} does not have size {k}",
                c.display(g)
            )));
        }
        if c.members().iter().any(|&v| v >= g.vertex_count()) || !g.is_clique(c.members()) {
            return Err(ReconfError::NotAClique {
                members: c.members().to_vec(),
            });
        }
    }
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            if !Rule::TokenSliding.adjacent(g, k, a, b) {
                return Err(ReconfError::InvalidInput(format!(
                    "{} and {} are not adjacent under token sliding",
                    a.display(g),
                    b.display(g)
                )));
            }
        }
    }

    let common = nodes[1..].iter().fold(nodes[0].clone(), |acc, c| acc.intersection(c));
    if common.len() + 1 == k {
        let attachments = nodes.iter().map(|c| c.difference(&common)[0]).collect();
        return Ok(CliqueDecomposition {
            kind: DecompositionKind::Int,
            core: common,
            attachments,
        });
    }
    let union = nodes[1..].iter().fold(nodes[0].clone(), |acc, c| acc.union(c));
    if union.len() == k + 1 {
        let attachments = nodes.iter().map(|c| union.difference(c)[0]).collect();
        return Ok(CliqueDecomposition {
            kind: DecompositionKind::Uni,
            core: union,
            attachments,
        });
    }
    Err(ReconfError::Invariant(format!(
        "no decomposition for {} cliques of size {k}: common part has {} vertices, union has {}",
        nodes.len(),
        common.len(),
        union.len()
    )))
}

/// `ω(TS_k(G))` as a function of `ω(G)` and `k`; 0 when there are no `k`-cliques.
pub fn omega_formula(omega: usize, k: usize) -> usize {
    match k.cmp(&omega) {
        std::cmp::Ordering::Greater => 0,
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Less => (k + 1).max(omega + 1 - k),
    }
}

pub fn verify_omega_formula(g: &Graph, k: usize) -> Result<Report, ReconfError> {
    let omega = clique_number(g);
    let ts = build_ts(g, k)?;
    let computed = clique_number(ts.graph());
    let expected = omega_formula(omega, k);
    let mut r = Report::new("omega-formula")
        .value("k", k)
        .value("omega", omega)
        .value("computed", computed)
        .value("expected", expected);
    if computed != expected {
        r.fail(json!({ "k": k, "computed": computed, "expected": expected }));
    }
    Ok(r)
}

/// `ω(TJ_k(G)) ≥ max{k+1, ω(G)-k+1}` for `1 ≤ k < ω(G)`.
pub fn verify_tj_omega_lower_bound(g: &Graph, k: usize) -> Result<Report, ReconfError> {
    let omega = clique_number(g);
    if k == 0 || k >= omega {
        return Err(ReconfError::InvalidK {
            k,
            reason: format!("the bound needs 1 <= k < ω = {omega}"),
        });
    }
    let computed = clique_number(build_tj(g, k)?.graph());
    let bound = omega_formula(omega, k);
    let mut r = Report::new("tj-omega-bound")
        .value("k", k)
        .value("computed", computed)
        .value("bound", bound);
    if computed < bound {
        r.fail(json!({ "k": k, "computed": computed, "bound": bound }));
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    /// `χ(J(ω(G), k))`.
    pub lower: usize,
    /// `χ(TS_k(G))`.
    pub exact: usize,
    /// `χ(J(χ(G), k))`.
    pub upper: usize,
}

fn johnson_chromatic(n: usize, k: usize) -> usize {
    match johnson(n, k) {
        Ok(j) => chromatic_number(&j),
        // No k-subsets: the empty graph.
        Err(_) => 0,
    }
}

/// Exact `χ` of `TS_k(g)` between the two Johnson graph bounds. All three values
/// come from exact search, so only small inputs are practical.
pub fn chromatic_sandwich(g: &Graph, k: usize) -> Result<Sandwich, ReconfError> {
    let ts = build_ts(g, k)?;
    Ok(Sandwich {
        lower: johnson_chromatic(clique_number(g), k),
        exact: chromatic_number(ts.graph()),
        upper: johnson_chromatic(chromatic_number(g), k),
    })
}

pub fn verify_chromatic_sandwich(g: &Graph, k: usize) -> Result<Report, ReconfError> {
    let s = chromatic_sandwich(g, k)?;
    let mut r = Report::new("sandwich")
        .value("k", k)
        .value("lower", s.lower)
        .value("exact", s.exact)
        .value("upper", s.upper);
    if !(s.lower <= s.exact && s.exact <= s.upper) {
        r.fail(json!({ "k": k, "sandwich": s }));
    }
    Ok(r)
}

/// An induced `K_4 - e` as `[a, b, c, d]` with `ad` the missing edge. Scans each
/// edge `bc` for two nonadjacent common neighbors.
pub fn has_induced_diamond(g: &Graph) -> Option<[Vertex; 4]> {
    for (b, c) in g.edges() {
        let mut common = g.neighbor_set(b).clone();
        common.intersect_with(g.neighbor_set(c));
        for a in common.ones() {
            let mut rest: FixedBitSet = common.clone();
            rest.difference_with(g.neighbor_set(a));
            rest.set_range(..a + 1, false);
            if let Some(d) = rest.ones().next() {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

fn require_maximum_tj(t: &LabeledReconfGraph) -> Result<(), ReconfError> {
    if t.rule() != Rule::TokenJumping {
        return Err(ReconfError::RuleMismatch {
            expected: Rule::TokenJumping.to_string(),
            found: t.rule().to_string(),
        });
    }
    let omega = clique_number(t.base());
    if t.k() != omega {
        return Err(ReconfError::InvalidK {
            k: t.k(),
            reason: format!("expected k = ω(base) = {omega}"),
        });
    }
    Ok(())
}

/// Every triangle `A, B, C` of `TJ_ω(G)` has `A ∩ B = B ∩ C = A ∩ C`.
pub fn verify_tj_triangle_intersections(t: &LabeledReconfGraph) -> Result<Report, ReconfError> {
    require_maximum_tj(t)?;
    let g = t.graph();
    let mut r = Report::new("triangle-intersections").value("k", t.k());
    let mut triangles = 0usize;
    for (a, b) in g.edges() {
        let mut third = g.neighbor_set(a).clone();
        third.intersect_with(g.neighbor_set(b));
        third.set_range(..b + 1, false);
        for c in third.ones() {
            triangles += 1;
            let (la, lb, lc) = (t.label(a), t.label(b), t.label(c));
            let ab = la.intersection(lb);
            if ab != lb.intersection(lc) || ab != la.intersection(lc) {
                r.fail(json!({
                    "triangle": [la.display(t.base()), lb.display(t.base()), lc.display(t.base())]
                }));
            }
        }
    }
    r.set("triangles", triangles);
    Ok(r)
}

/// `TJ_ω(G)` has no induced diamond.
pub fn verify_tj_diamond_free(t: &LabeledReconfGraph) -> Result<Report, ReconfError> {
    require_maximum_tj(t)?;
    let mut r = Report::new("diamond-free")
        .value("k", t.k())
        .value("nodes", t.node_count());
    if let Some(w) = has_induced_diamond(t.graph()) {
        let names: Vec<String> = w.iter().map(|&i| t.label(i).display(t.base())).collect();
        r.fail(json!({ "diamond": names }));
    }
    Ok(r)
}

/// For `(k-1)`-cliques `A`, `B`: `AB` is a `TS_{k-1}` edge iff `A ∪ B` is a
/// `TJ_k` node. Pairs with `|A ∪ B| ≠ k` satisfy neither side and are counted
/// as vacuous.
pub fn verify_ts_tj_vertex_edge_duality(g: &Graph, k: usize) -> Result<Report, ReconfError> {
    let omega = clique_number(g);
    if k < 2 || k > omega {
        return Err(ReconfError::InvalidK {
            k,
            reason: format!("duality needs 2 <= k <= ω = {omega}"),
        });
    }
    let ts = build_ts(g, k - 1)?;
    let tj = build_tj(g, k)?;
    let mut r = Report::new("duality").value("k", k);
    let (mut checked, mut vacuous) = (0usize, 0usize);
    for i in 0..ts.node_count() {
        for j in i + 1..ts.node_count() {
            let (a, b) = (ts.label(i), ts.label(j));
            let union = a.union(b);
            let edge = ts.graph().has_edge(i, j);
            let node = tj.node_of(&union).is_some();
            if union.len() == k {
                checked += 1;
            } else {
                vacuous += 1;
            }
            if edge != node {
                r.fail(json!({
                    "a": a.display(g),
                    "b": b.display(g),
                    "ts_edge": edge,
                    "tj_node": node,
                }));
            }
        }
    }
    r.set("pairs_checked", checked);
    r.set("pairs_vacuous", vacuous);
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct Bound {
    lhs: i64,
    rhs: i64,
    holds: bool,
    applicable: bool,
}

impl Bound {
    fn new(lhs: usize, rhs: i64, applicable: bool) -> Self {
        let lhs = lhs as i64;
        Bound {
            lhs,
            rhs,
            holds: lhs <= rhs,
            applicable,
        }
    }
}

/// Triangle-count bounds for planar graphs, derived from the Euler bound on the
/// planar graphs `TS_2(G)` (`|E|` nodes, `3F_3` edges) and `TS_3(G)` (`F_3`
/// nodes, `6F_4` edges):
///
/// - `F_3 ≤ |E| - 2`, applicable when `|E| ≥ 3`;
/// - `2F_4 ≤ F_3 - 2`, applicable when `F_3 ≥ 3`;
/// - `F_3 ≤ 3|V| - 8`, applicable when `|V| ≥ 3`.
///
/// The Euler bound needs at least three nodes, so a bound outside its range
/// is not counted against the result; if it fails literally there, the report
/// lists it under `literal_failures`.
pub fn triangle_bounds_check(g: &Graph) -> Result<Report, ReconfError> {
    if !is_planar(g) {
        return Err(ReconfError::NotPlanar);
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    let (f3, f4) = (count_k3(g), count_k4(g));
    let bounds = [
        ("f3_le_e_minus_2", Bound::new(f3, m as i64 - 2, m >= 3)),
        ("2f4_le_f3_minus_2", Bound::new(2 * f4, f3 as i64 - 2, f3 >= 3)),
        ("f3_le_3v_minus_8", Bound::new(f3, 3 * n as i64 - 8, n >= 3)),
    ];
    let mut r = Report::new("triangle-bounds")
        .value("vertices", n)
        .value("edges", m)
        .value("f3", f3)
        .value("f4", f4);
    let mut literal_failures = Vec::new();
    for (name, b) in &bounds {
        if !b.holds {
            if b.applicable {
                r.fail(json!({ "bound": name, "lhs": b.lhs, "rhs": b.rhs }));
            } else {
                literal_failures.push(*name);
            }
        }
        r.set(name, b);
    }
    r.set("literal_failures", literal_failures);
    Ok(r)
}

/// `TJ_4(G)` of a planar graph is a forest with maximum degree at most 4.
pub fn tj4_structure_check(g: &Graph) -> Result<Report, ReconfError> {
    if !is_planar(g) {
        return Err(ReconfError::NotPlanar);
    }
    let tj = build_tj(g, 4)?;
    let acyclic = is_acyclic(tj.graph());
    let max_degree = tj.graph().max_degree();
    let mut r = Report::new("tj4")
        .value("nodes", tj.node_count())
        .value("edges", tj.graph().edge_count())
        .value("acyclic", acyclic)
        .value("max_degree", max_degree);
    if !acyclic || max_degree > 4 {
        r.fail(json!({ "acyclic": acyclic, "max_degree": max_degree }));
    }
    Ok(r)
}

/// `TS_k(G)` is planar for planar `G` and `1 ≤ k ≤ 4`.
pub fn ts_planarity_check(g: &Graph, k: usize) -> Result<Report, ReconfError> {
    if !(1..=4).contains(&k) {
        return Err(ReconfError::InvalidK {
            k,
            reason: "planarity is preserved only for 1 <= k <= 4".into(),
        });
    }
    if !is_planar(g) {
        return Err(ReconfError::NotPlanar);
    }
    let ts = build_ts(g, k)?;
    let planar = is_planar(ts.graph());
    let mut r = Report::new("ts-planar")
        .value("k", k)
        .value("nodes", ts.node_count())
        .value("edges", ts.graph().edge_count());
    if !planar {
        r.fail(json!({ "k": k }));
    }
    Ok(r)
}

/// The simplex graph `TAR(G)` is bipartite and median.
pub fn verify_simplex_median(g: &Graph) -> Report {
    let s = build_simplex(g);
    let bipartite = is_bipartite(s.graph());
    // ∅ is adjacent to every singleton, so the simplex graph is connected.
    let bad = first_non_median_triple(s.graph());
    let mut r = Report::new("median")
        .value("nodes", s.node_count())
        .value("edges", s.graph().edge_count())
        .value("bipartite", bipartite)
        .value("median", bad.is_none());
    if let Some((a, b, c, count)) = bad {
        r.fail(json!({
            "triple": [s.label(a).display(g), s.label(b).display(g), s.label(c).display(g)],
            "medians": count,
        }));
    }
    if !bipartite {
        r.fail(json!({ "bipartite": false }));
    }
    r
}

/// Decomposes every complete subgraph of `TS_k(g)` with at least three nodes;
/// those with more than `k + 1` nodes must come out as `Int`.
pub fn verify_decompositions(g: &Graph, k: usize) -> Result<Report, ReconfError> {
    let ts = build_ts(g, k)?;
    let mut r = Report::new("decompose").value("k", k);
    let mut counts = [0usize; 2];
    let top = clique_number(ts.graph());
    for size in 3..=top {
        for sub in enumerate_k_cliques(ts.graph(), size) {
            let nodes: Vec<Clique> = sub.members().iter().map(|&i| ts.label(i).clone()).collect();
            let names: Vec<String> = nodes.iter().map(|c| c.display(g)).collect();
            match decompose_ts_clique(g, &nodes, k) {
                Ok(d) => {
                    counts[(d.kind == DecompositionKind::Int) as usize] += 1;
                    if !d.describes(&nodes) {
                        r.fail(json!({ "nodes": names, "invalid": d }));
                    } else if size > k + 1 && d.kind != DecompositionKind::Int {
                        r.fail(json!({ "nodes": names, "expected_int": d }));
                    }
                }
                Err(e) => r.fail(json!({ "nodes": names, "error": e.to_string() })),
            }
        }
    }
    r.set("uni", counts[0]);
    r.set("int", counts[1]);
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    OmegaFormula,
    Sandwich,
    DiamondFree,
    TriangleIntersections,
    Duality,
    TriangleBounds,
    Tj4,
    TsPlanar,
    Median,
    Decompose,
    Reconstruct,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::OmegaFormula,
        Theorem::Sandwich,
        Theorem::DiamondFree,
        Theorem::TriangleIntersections,
        Theorem::Duality,
        Theorem::TriangleBounds,
        Theorem::Tj4,
        Theorem::TsPlanar,
        Theorem::Median,
        Theorem::Decompose,
        Theorem::Reconstruct,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::OmegaFormula => "omega-formula",
            Theorem::Sandwich => "sandwich",
            Theorem::DiamondFree => "diamond-free",
            Theorem::TriangleIntersections => "triangle-intersections",
            Theorem::Duality => "duality",
            Theorem::TriangleBounds => "triangle-bounds",
            Theorem::Tj4 => "tj4",
            Theorem::TsPlanar => "ts-planar",
            Theorem::Median => "median",
            Theorem::Decompose => "decompose",
            Theorem::Reconstruct => "reconstruct",
        }
    }

    /// Whether the check is only defined for planar inputs.
    pub fn needs_planar(self) -> bool {
        matches!(self, Theorem::TriangleBounds | Theorem::Tj4 | Theorem::TsPlanar)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = ReconfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| ReconfError::InvalidInput(format!("unknown theorem {s:?}")))
    }
}

/// Runs one check per `k` and folds the results: pass iff all pass, witness of
/// the first failure, per-`k` values under `cases`.
fn over_ks<F>(theorem: Theorem, ks: Vec<usize>, mut check: F) -> Result<Report, ReconfError>
where
    F: FnMut(usize) -> Result<Report, ReconfError>,
{
    let mut out = Report::new(theorem.as_str()).value("ks", &ks);
    let mut cases = Vec::with_capacity(ks.len());
    for k in ks {
        let sub = check(k)?;
        if let Some(w) = &sub.witness {
            out.fail(json!({ "k": k, "witness": w }));
        } else if !sub.pass {
            out.fail(json!({ "k": k }));
        }
        cases.push(Value::Object(sub.values));
    }
    out.set("cases", cases);
    Ok(out)
}

fn vacuous(theorem: Theorem, why: &str) -> Report {
    Report::new(theorem.as_str()).value("vacuous", why)
}

/// Runs `theorem` on `g`. With `k = None`, every meaningful `k` is checked:
/// `1..=ω+1` for the ω formula, `1..=ω` for the sandwich and decompositions,
/// `2..=ω` for duality, `1..=4` for planarity preservation.
pub fn verify_theorem(theorem: Theorem, g: &Graph, k: Option<usize>) -> Result<Report, ReconfError> {
    let omega = clique_number(g);
    let ks = |default: std::ops::RangeInclusive<usize>| k.map_or_else(|| default.collect(), |k| vec![k]);
    match theorem {
        Theorem::OmegaFormula => over_ks(theorem, ks(1..=omega + 1), |k| verify_omega_formula(g, k)),
        Theorem::Sandwich => over_ks(theorem, ks(1..=omega), |k| verify_chromatic_sandwich(g, k)),
        Theorem::Decompose => over_ks(theorem, ks(1..=omega), |k| verify_decompositions(g, k)),
        Theorem::Duality => over_ks(theorem, ks(2..=omega), |k| verify_ts_tj_vertex_edge_duality(g, k)),
        Theorem::TsPlanar => over_ks(theorem, ks(1..=4), |k| ts_planarity_check(g, k)),
        Theorem::DiamondFree | Theorem::TriangleIntersections => {
            if let Some(k) = k.filter(|&k| k != omega) {
                return Err(ReconfError::InvalidK {
                    k,
                    reason: format!("this check uses k = ω = {omega}"),
                });
            }
            if omega == 0 {
                return Ok(vacuous(theorem, "graph has no vertices"));
            }
            let tj = build_tj(g, omega)?;
            if theorem == Theorem::DiamondFree {
                verify_tj_diamond_free(&tj)
            } else {
                verify_tj_triangle_intersections(&tj)
            }
        }
        Theorem::TriangleBounds => triangle_bounds_check(g),
        Theorem::Tj4 => tj4_structure_check(g),
        Theorem::Median => Ok(verify_simplex_median(g)),
        Theorem::Reconstruct => {
            if omega < 2 {
                Ok(vacuous(theorem, "clique number below 2"))
            } else {
                verify_reconstruction(g)
            }
        }
    }
}
