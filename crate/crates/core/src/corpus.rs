//! Seeded random graph families for property runs.
//!
//! Graph `i` of a corpus is drawn from its own ChaCha stream `i` under the
//! corpus seed, so any graph can be regenerated alone and generation order does
//! not matter.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorpusFamily {
    RandomGnp,
    /// Random stacked triangulation, randomized by edge flips, then thinned by
    /// random edge deletions. Planar by construction.
    Planar,
    Bipartite,
    Trees,
}

impl CorpusFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            CorpusFamily::RandomGnp => "random-gnp",
            CorpusFamily::Planar => "planar",
            CorpusFamily::Bipartite => "bipartite",
            CorpusFamily::Trees => "trees",
        }
    }
}

impl fmt::Display for CorpusFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CorpusFamily {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            CorpusFamily::RandomGnp,
            CorpusFamily::Planar,
            CorpusFamily::Bipartite,
            CorpusFamily::Trees,
        ]
        .into_iter()
        .find(|f| f.as_str() == s)
        .ok_or_else(|| GraphError::InvalidParameter(format!("unknown corpus family {s:?}")))
    }
}

/// `count` graphs on exactly `n` vertices with the default edge probability.
pub fn generate_corpus(family: CorpusFamily, n: usize, count: usize, seed: u64) -> Result<Vec<Graph>, GraphError> {
    generate_corpus_with(family, n, count, seed, DEFAULT_EDGE_PROBABILITY)
}

/// Like [`generate_corpus`]; `p` is the edge probability of the G(n, p) and
/// bipartite families and is ignored by the others.
pub fn generate_corpus_with(
    family: CorpusFamily,
    n: usize,
    count: usize,
    seed: u64,
    p: f64,
) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("corpus graphs need n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    Ok((0..count).map(|i| generate_one(family, n, seed, i as u64, p)).collect())
}

/// Graph number `index` of the corpus `(family, n, seed, p)`.
pub fn generate_one(family: CorpusFamily, n: usize, seed: u64, index: u64, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    match family {
        CorpusFamily::RandomGnp => gnp(n, p, &mut rng),
        CorpusFamily::Planar => planar(n, &mut rng),
        CorpusFamily::Bipartite => bipartite(n, p, &mut rng),
        CorpusFamily::Trees => tree(n, &mut rng),
    }
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn relabeled(n: usize, edges: &[(Vertex, Vertex)], rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Graph::new(n);
    for &(u, v) in edges {
        g.add_edge(perm[u], perm[v]);
    }
    g
}

fn tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    relabeled(n, &edges, rng)
}

fn bipartite(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let left = if n < 2 { n } else { rng.random_range(1..n) };
    let mut edges = Vec::new();
    for u in 0..left {
        for v in left..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    relabeled(n, &edges, rng)
}

fn planar(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n < 3 {
        let edges = if n == 2 && rng.random_bool(0.5) { vec![(0, 1)] } else { vec![] };
        return relabeled(n, &edges, rng);
    }
    // Faces of a triangulation, the outer face included.
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let f = rng.random_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let mut g = Graph::new(n);
    for f in &faces {
        g.add_edge(f[0], f[1]);
        g.add_edge(f[1], f[2]);
        g.add_edge(f[0], f[2]);
    }

    let flips = rng.random_range(0..=n);
    for _ in 0..flips {
        let edges: Vec<_> = g.edges().collect();
        let (a, b) = edges[rng.random_range(0..edges.len())];
        let sides: Vec<usize> = (0..faces.len())
            .filter(|&i| faces[i].contains(&a) && faces[i].contains(&b))
            .collect();
        let [f1, f2] = sides[..] else { continue };
        let third = |f: [Vertex; 3]| f.into_iter().find(|&x| x != a && x != b).unwrap();
        let (c, d) = (third(faces[f1]), third(faces[f2]));
        if c == d || g.has_edge(c, d) {
            continue;
        }
        g.remove_edge(a, b);
        g.add_edge(c, d);
        faces[f1] = [a, c, d];
        faces[f2] = [b, c, d];
    }

    let drop = rng.random_range(0.0..0.5);
    let kept: Vec<_> = g.edges().filter(|_| !rng.random_bool(drop)).collect();
    let out = relabeled(n, &kept, rng);
    debug_assert!(crate::planar::is_planar(&out));
    out
}
