//! Exact vertex coloring: DSATUR branch and bound seeded with a maximum clique.

use crate::clique::maximum_clique;
use crate::graph::{Graph, Vertex};

const UNCOLORED: usize = usize::MAX;

/// A proper coloring with colors `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| c < self.num_colors)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// `χ(G)`. The graph with no vertices has χ = 0; an edgeless nonempty graph has χ = 1.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).num_colors
}

/// A proper coloring using exactly `χ(G)` colors.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    if n == 0 {
        return Coloring {
            colors: Vec::new(),
            num_colors: 0,
        };
    }
    let clique = maximum_clique(g);
    let lower = clique.len();

    let mut best = greedy_dsatur(g);
    if best.num_colors == lower {
        return best;
    }

    let mut state = State::new(g);
    // Any coloring can be permuted so the maximum clique takes colors 0..ω.
    for (c, &v) in clique.members().iter().enumerate() {
        state.assign(v, c);
    }
    state.used = lower;
    branch(&mut state, lower, &mut best);
    best
}

struct State<'g> {
    g: &'g Graph,
    colors: Vec<usize>,
    // neighbor_colors[v][c]: colored neighbors of v with color c.
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    used: usize,
    remaining: usize,
}

impl<'g> State<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        State {
            g,
            colors: vec![UNCOLORED; n],
            neighbor_colors: vec![vec![0; n]; n],
            saturation: vec![0; n],
            used: 0,
            remaining: n,
        }
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.colors[v] = c;
        self.remaining -= 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.neighbor_colors[u][c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let c = std::mem::replace(&mut self.colors[v], UNCOLORED);
        self.remaining += 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.neighbor_colors[u][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation; ties by uncolored degree, then index.
    fn pick(&self) -> Vertex {
        let n = self.g.vertex_count();
        (0..n)
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| {
                let free_deg = self
                    .g
                    .neighbors(v)
                    .filter(|&u| self.colors[u] == UNCOLORED)
                    .count();
                (self.saturation[v], free_deg, std::cmp::Reverse(v))
            })
            .expect("at least one uncolored vertex")
    }
}

fn branch(state: &mut State<'_>, lower: usize, best: &mut Coloring) {
    if best.num_colors == lower {
        return;
    }
    if state.remaining == 0 {
        if state.used < best.num_colors {
            *best = Coloring {
                colors: state.colors.clone(),
                num_colors: state.used,
            };
        }
        return;
    }
    let v = state.pick();
    let used = state.used;
    for c in 0..=used {
        // A new color is allowed only if it still beats the incumbent.
        if c == used && used + 1 >= best.num_colors {
            break;
        }
        if c < used && state.neighbor_colors[v][c] > 0 {
            continue;
        }
        state.assign(v, c);
        if c == used {
            state.used += 1;
        }
        branch(state, lower, best);
        if c == used {
            state.used -= 1;
        }
        state.unassign(v);
        if best.num_colors == lower {
            return;
        }
    }
}

fn greedy_dsatur(g: &Graph) -> Coloring {
    let mut state = State::new(g);
    while state.remaining > 0 {
        let v = state.pick();
        let c = (0..).find(|&c| c >= state.used || state.neighbor_colors[v][c] == 0).unwrap();
        state.assign(v, c);
        state.used = state.used.max(c + 1);
    }
    Coloring {
        colors: state.colors,
        num_colors: state.used,
    }
}
