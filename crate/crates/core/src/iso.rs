//! Graph isomorphism by joint color refinement and individualization.
//!
//! Both graphs are colored with a shared palette: start from degrees, then
//! repeatedly split classes by the multiset of neighbor colors until stable.
//! If the class sizes disagree the graphs are not isomorphic. Otherwise the
//! lowest-index vertex of the smallest non-trivial class of the first graph is
//! paired in turn with each same-colored vertex of the second graph, both are
//! given a fresh color, and the search recurses.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};

/// A bijection `V(g) -> V(h)` that preserves adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    /// `mapping[v]` is the image of vertex `v` of the first graph.
    pub mapping: Vec<Vertex>,
}

impl IsoWitness {
    /// Checks the witness independently of how it was found.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.vertex_count();
        if h.vertex_count() != n || self.mapping.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &w in &self.mapping {
            if w >= n || std::mem::replace(&mut hit[w], true) {
                return false;
            }
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(self.mapping[u], self.mapping[v]))
        })
    }
}

/// Returns an isomorphism `g -> h` if one exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<IsoWitness> {
    let n = g.vertex_count();
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    let mut cg: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut ch: Vec<u32> = (0..n).map(|v| h.degree(v) as u32).collect();
    if !refine(g, h, &mut cg, &mut ch) {
        return None;
    }
    search(g, h, cg, ch)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    is_isomorphic(g, h).is_some()
}

fn search(g: &Graph, h: &Graph, cg: Vec<u32>, ch: Vec<u32>) -> Option<IsoWitness> {
    let n = g.vertex_count();
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &cg {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(&c, &s)| (s, c))
        .map(|(&c, _)| c);

    let Some(color) = target else {
        // Discrete coloring: the bijection is forced.
        let mut by_color: BTreeMap<u32, Vertex> = BTreeMap::new();
        for (w, &c) in ch.iter().enumerate() {
            by_color.insert(c, w);
        }
        let witness = IsoWitness {
            mapping: cg.iter().map(|c| by_color[c]).collect(),
        };
        return witness.verify(g, h).then_some(witness);
    };

    let v = (0..n).find(|&v| cg[v] == color).unwrap();
    let fresh = cg.iter().chain(ch.iter()).copied().max().unwrap_or(0) + 1;
    for w in (0..n).filter(|&w| ch[w] == color) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[v] = fresh;
        ch2[w] = fresh;
        if refine(g, h, &mut cg2, &mut ch2) {
            if let Some(found) = search(g, h, cg2, ch2) {
                return Some(found);
            }
        }
    }
    None
}

/// Refines both colorings to a joint equitable partition. Returns false as soon
/// as the two graphs disagree on some class size.
fn refine(g: &Graph, h: &Graph, cg: &mut [u32], ch: &mut [u32]) -> bool {
    let mut classes = count_classes(cg);
    loop {
        let sig_g = signatures(g, cg);
        let sig_h = signatures(h, ch);
        let mut palette: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in sig_g.iter().chain(sig_h.iter()) {
            palette.entry(s).or_insert(0);
        }
        for (i, id) in palette.values_mut().enumerate() {
            *id = i as u32;
        }
        let next_g: Vec<u32> = sig_g.iter().map(|s| palette[s]).collect();
        let next_h: Vec<u32> = sig_h.iter().map(|s| palette[s]).collect();
        cg.copy_from_slice(&next_g);
        ch.copy_from_slice(&next_h);
        if !same_histogram(cg, ch) {
            return false;
        }
        let now = count_classes(cg);
        if now == classes {
            return true;
        }
        classes = now;
    }
}

fn signatures(g: &Graph, colors: &[u32]) -> Vec<(u32, Vec<u32>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut around: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
            around.sort_unstable();
            (colors[v], around)
        })
        .collect()
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn same_histogram(a: &[u32], b: &[u32]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}
