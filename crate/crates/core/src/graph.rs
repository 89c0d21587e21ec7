//! Simple undirected graphs over dense vertex indices.

use std::borrow::Cow;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::GraphError;

/// Vertex index. Vertices of a graph with `n` vertices are `0..n`.
pub type Vertex = usize;

/// A simple undirected graph stored as dense adjacency bitset rows.
///
/// The adjacency relation is always symmetric and irreflexive. Vertex names
/// are carried for display only; every algorithm works on indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            names: None,
        }
    }

    /// Edgeless graph whose vertices carry the given names.
    pub fn with_names(names: Vec<String>) -> Self {
        let mut g = Graph::new(names.len());
        g.names = Some(names);
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Adds the edge `uv`. Duplicate insertions are no-ops.
    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                count: n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Panicking variant of [`Graph::try_add_edge`] for internal constructions
    /// whose indices are known to be valid.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.try_add_edge(u, v)
            .unwrap_or_else(|e| panic!("invalid edge ({u}, {v}): {e}"));
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighbors of `v` in increasing index order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    /// Adjacency row of `v` as a bitset of length `vertex_count()`.
    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// True iff every pair of the given vertices is adjacent.
    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Display name of `v`; falls back to the decimal index.
    pub fn name(&self, v: Vertex) -> Cow<'_, str> {
        match &self.names {
            Some(names) => Cow::Borrowed(names[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn set_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.vertex_count(), "one name per vertex");
        self.names = Some(names);
    }

    /// Copy of the graph with display names dropped.
    pub fn unlabeled(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            names: None,
        }
    }

    /// Same vertex set; `uv` is an edge iff `u != v` and `uv` is not an edge of `self`.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut out = Graph {
            adj: Vec::with_capacity(n),
            names: self.names.clone(),
        };
        for (v, row) in self.adj.iter().enumerate() {
            let mut c = row.clone();
            c.toggle_range(..);
            c.set(v, false);
            out.adj.push(c);
        }
        out
    }

    /// Disjoint union of `self` and `other` plus every edge between them.
    /// Vertices of `other` are shifted by `self.vertex_count()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.vertex_count(), other.vertex_count());
        let mut g = self.disjoint_union(other);
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let a = self.vertex_count();
        let mut g = Graph::new(a + other.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(a + u, a + v);
        }
        if self.names.is_some() || other.names.is_some() {
            let names = (0..a)
                .map(|v| self.name(v).into_owned())
                .chain((0..other.vertex_count()).map(|v| other.name(v).into_owned()))
                .collect();
            g.names = Some(names);
        }
        g
    }

    /// Cartesian product. Vertex `(a, x)` gets index `a * |V(other)| + x`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.vertex_count();
        let mut g = Graph::new(self.vertex_count() * m);
        for (a, b) in self.edges() {
            for x in 0..m {
                g.add_edge(a * m + x, b * m + x);
            }
        }
        for a in 0..self.vertex_count() {
            for (x, y) in other.edges() {
                g.add_edge(a * m + x, a * m + y);
            }
        }
        g
    }

    /// `self + cK_1`: appends `c` isolated vertices.
    pub fn add_isolated(&self, c: usize) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n + c);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        if let Some(names) = &self.names {
            let mut names = names.clone();
            names.extend((n..n + c).map(|v| format!("_{v}")));
            g.names = Some(names);
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if self.names.is_some() {
            g.names = Some(vertices.iter().map(|&v| self.name(v).into_owned()).collect());
        }
        g
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    // Named small graphs used throughout the checks and tests.

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a).join(&Graph::new(b))
    }

    /// `K_4` minus the edge `{0, 3}`.
    pub fn diamond() -> Graph {
        let mut g = Graph::complete(4);
        g.remove_edge(0, 3);
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &edges)
            .finish()
    }
}
