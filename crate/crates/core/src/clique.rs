//! Clique enumeration, maximal cliques, and the clique number.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::ReconfError;
use crate::graph::{Graph, Vertex};

/// A vertex set in canonical strictly increasing order.
///
/// [`Clique::new`] checks pairwise adjacency in a host graph; the builders
/// produce cliques by construction and skip the check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Clique(Vec<Vertex>);

impl Clique {
    pub fn new<I>(g: &Graph, members: I) -> Result<Clique, ReconfError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut m: Vec<Vertex> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        if m.iter().any(|&v| v >= g.vertex_count()) || !g.is_clique(&m) {
            return Err(ReconfError::NotAClique { members: m });
        }
        Ok(Clique(m))
    }

    /// The size-0 clique.
    pub fn empty() -> Clique {
        Clique(Vec::new())
    }

    /// Wraps an already sorted, duplicate-free vertex list without validation.
    pub fn from_sorted_unchecked(members: Vec<Vertex>) -> Clique {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Clique(members)
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_members(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self - v`.
    pub fn without(&self, v: Vertex) -> Clique {
        Clique(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    /// `self + v`; the caller is responsible for adjacency.
    pub fn with(&self, v: Vertex) -> Clique {
        let mut m = self.0.clone();
        if let Err(pos) = m.binary_search(&v) {
            m.insert(pos, v);
        }
        Clique(m)
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &Clique) -> Vec<Vertex> {
        self.0.iter().copied().filter(|&v| !other.contains(v)).collect()
    }

    pub fn intersection(&self, other: &Clique) -> Clique {
        Clique(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &Clique) -> Clique {
        let mut m: Vec<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        m.sort_unstable();
        m.dedup();
        Clique(m)
    }

    pub fn is_subset_of(&self, other: &Clique) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Member names joined as `{a,b,c}`.
    pub fn display(&self, g: &Graph) -> String {
        let names: Vec<_> = self.0.iter().map(|&v| g.name(v).into_owned()).collect();
        format!("{{{}}}", names.join(","))
    }
}

fn higher_neighbors(g: &Graph) -> Vec<FixedBitSet> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            let mut row = g.neighbor_set(v).clone();
            row.set_range(..v + 1, false);
            row
        })
        .collect()
}

/// Every clique of size `k`, each once, in lexicographic order.
/// `k = 0` yields the single empty clique.
pub fn enumerate_k_cliques(g: &Graph, k: usize) -> Vec<Clique> {
    let mut out = Vec::new();
    visit_k_cliques(g, k, |c| out.push(Clique(c.to_vec())));
    out
}

/// Number of `k`-cliques, counted without materializing them.
pub fn count_k_cliques(g: &Graph, k: usize) -> usize {
    let mut count = 0usize;
    visit_k_cliques(g, k, |_| count += 1);
    count
}

/// `F_3`: number of triangles.
pub fn count_k3(g: &Graph) -> usize {
    count_k_cliques(g, 3)
}

/// `F_4`: number of `K_4` subgraphs.
pub fn count_k4(g: &Graph) -> usize {
    count_k_cliques(g, 4)
}

fn visit_k_cliques<F: FnMut(&[Vertex])>(g: &Graph, k: usize, mut f: F) {
    let n = g.vertex_count();
    if k == 0 {
        f(&[]);
        return;
    }
    if k > n {
        return;
    }
    let hi = higher_neighbors(g);
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut current = Vec::with_capacity(k);
    extend(&hi, k, &mut current, &all, &mut f);
}

fn extend<F: FnMut(&[Vertex])>(
    hi: &[FixedBitSet],
    k: usize,
    current: &mut Vec<Vertex>,
    cand: &FixedBitSet,
    f: &mut F,
) {
    for v in cand.ones() {
        current.push(v);
        if current.len() == k {
            f(current);
        } else {
            let mut next = cand.clone();
            next.intersect_with(&hi[v]);
            if current.len() + next.count_ones(..) >= k {
                extend(hi, k, current, &next, f);
            }
        }
        current.pop();
    }
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted lexicographically.
/// The edgeless graph on zero vertices has the single maximal clique `∅`.
pub fn maximal_cliques(g: &Graph) -> Vec<Clique> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, p, x, &mut out);
    for c in &mut out {
        c.0.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<Vertex>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Clique>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(Clique(r.clone()));
        }
        return;
    }
    // Pivot: the vertex of P ∪ X with the most neighbors in P.
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (g.neighbor_set(u).intersection_count(&p), std::cmp::Reverse(u)))
        .unwrap();
    let mut todo = p.clone();
    todo.difference_with(g.neighbor_set(pivot));
    for v in todo.ones() {
        let nv = g.neighbor_set(v);
        let mut p2 = p.clone();
        p2.intersect_with(nv);
        let mut x2 = x.clone();
        x2.intersect_with(nv);
        r.push(v);
        bron_kerbosch(g, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// A maximum clique (lexicographically first among those found by the search).
pub fn maximum_clique(g: &Graph) -> Clique {
    let n = g.vertex_count();
    let mut best: Vec<Vertex> = Vec::new();
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    let mut current = Vec::new();
    max_clique_search(g, &mut current, cand, &mut best);
    best.sort_unstable();
    Clique(best)
}

fn max_clique_search(
    g: &Graph,
    current: &mut Vec<Vertex>,
    mut cand: FixedBitSet,
    best: &mut Vec<Vertex>,
) {
    if cand.is_clear() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring of the candidates bounds the clique that can still be added.
    let order: Vec<Vertex> = cand.ones().collect();
    let mut color_of = vec![0usize; order.len()];
    let mut classes: Vec<FixedBitSet> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let slot = classes
            .iter()
            .position(|cls| cls.intersection_count(g.neighbor_set(v)) == 0);
        let c = match slot {
            Some(c) => c,
            None => {
                classes.push(FixedBitSet::with_capacity(g.vertex_count()));
                classes.len() - 1
            }
        };
        classes[c].insert(v);
        color_of[i] = c + 1;
    }
    let mut ranked: Vec<(usize, Vertex)> = color_of.into_iter().zip(order).collect();
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (bound, v) in ranked {
        if current.len() + bound <= best.len() {
            return;
        }
        let mut next = cand.clone();
        next.intersect_with(g.neighbor_set(v));
        current.push(v);
        max_clique_search(g, current, next, best);
        current.pop();
        cand.set(v, false);
    }
}

/// `ω(G)`; 0 for the graph with no vertices.
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{arb_graph, naive_k_cliques};
    use proptest::prelude::*;

    fn members(cs: &[Clique]) -> Vec<Vec<usize>> {
        cs.iter().map(|c| c.members().to_vec()).collect()
    }

    #[test]
    fn k_cliques_small_cases() {
        assert_eq!(enumerate_k_cliques(&Graph::complete(4), 3).len(), 4);
        assert_eq!(enumerate_k_cliques(&Graph::cycle(5), 2).len(), 5);
        let mut k5e = Graph::complete(5);
        k5e.remove_edge(0, 1);
        assert_eq!(
            members(&enumerate_k_cliques(&k5e, 4)),
            vec![vec![0, 2, 3, 4], vec![1, 2, 3, 4]]
        );
        assert_eq!(enumerate_k_cliques(&Graph::cycle(5), 0), vec![Clique::empty()]);
        assert_eq!(enumerate_k_cliques(&Graph::cycle(5), 1).len(), 5);
        assert!(enumerate_k_cliques(&Graph::cycle(5), 3).is_empty());
    }

    #[test]
    fn maximal_cliques_small_cases() {
        assert_eq!(members(&maximal_cliques(&Graph::complete(4))), vec![vec![0, 1, 2, 3]]);
        assert_eq!(members(&maximal_cliques(&Graph::path(3))), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(
            members(&maximal_cliques(&Graph::diamond())),
            vec![vec![0, 1, 2], vec![1, 2, 3]]
        );
    }

    #[test]
    fn clique_number_small_cases() {
        assert_eq!(clique_number(&Graph::complete(6)), 6);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::petersen()), 2);
        assert_eq!(clique_number(&Graph::new(3)), 1);
        assert_eq!(clique_number(&Graph::new(0)), 0);
    }

    #[test]
    fn triangle_and_k4_counts() {
        assert_eq!((count_k3(&Graph::complete(4)), count_k4(&Graph::complete(4))), (4, 1));
        assert_eq!(count_k3(&Graph::cycle(6)), 0);
        let octahedron = Graph::new(2).join(&Graph::new(2)).join(&Graph::new(2));
        assert_eq!((count_k3(&octahedron), count_k4(&octahedron)), (8, 0));
    }

    #[test]
    fn clique_validation() {
        let g = Graph::diamond();
        assert!(Clique::new(&g, [2, 1, 0]).is_ok());
        assert!(Clique::new(&g, [0, 3]).is_err());
        assert!(Clique::new(&g, [0, 9]).is_err());
    }

    proptest! {
        #[test]
        fn k_cliques_match_subset_oracle(g in arb_graph(10)) {
            for k in 0..=g.vertex_count() {
                prop_assert_eq!(members(&enumerate_k_cliques(&g, k)), naive_k_cliques(&g, k));
                prop_assert_eq!(count_k_cliques(&g, k), naive_k_cliques(&g, k).len());
            }
        }

        #[test]
        fn maximal_cliques_are_maximal_and_complete(g in arb_graph(10)) {
            let cliques = maximal_cliques(&g);
            for c in &cliques {
                prop_assert!(g.is_clique(c.members()));
                let extendable = (0..g.vertex_count())
                    .any(|v| !c.contains(v) && c.members().iter().all(|&u| g.has_edge(u, v)));
                prop_assert!(!extendable);
            }
            // Oracle: every maximal clique among all cliques found by brute force.
            let mut naive = Vec::new();
            for k in 0..=g.vertex_count() {
                for s in naive_k_cliques(&g, k) {
                    let maximal = (0..g.vertex_count())
                        .all(|v| s.contains(&v) || !s.iter().all(|&u| g.has_edge(u, v)));
                    if maximal {
                        naive.push(s);
                    }
                }
            }
            naive.sort();
            prop_assert_eq!(members(&cliques), naive);
        }

        #[test]
        fn clique_number_is_largest_nonempty_size(g in arb_graph(10)) {
            let omega = clique_number(&g);
            let by_enum = (0..=g.vertex_count())
                .rev()
                .find(|&k| !enumerate_k_cliques(&g, k).is_empty())
                .unwrap();
            prop_assert_eq!(omega, by_enum);
            prop_assert!(g.is_clique(maximum_clique(&g).members()));
        }
    }
}
