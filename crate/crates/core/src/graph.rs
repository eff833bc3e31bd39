//! Simple graphs and edge-coloured graphs on vertices `0..n`.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};

/// An unordered vertex pair, always stored with `u < v`.
pub type Edge = (usize, usize);

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        let all = VertexSet::prefix(n);
        for v in 0..n {
            let mut row = all;
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::empty(a).join(&Self::empty(b))
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::complete_bipartite(1, leaves)
    }

    /// `t` vertex-disjoint copies of `K_s`.
    pub fn disjoint_cliques(t: usize, s: usize) -> Self {
        let mut g = Self::empty(0);
        for _ in 0..t {
            g = g.disjoint_union(&Self::complete(s));
        }
        g
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Adds `{u, v}`; returns whether it was new.
    ///
    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range for n={}", self.n);
        let new = !self.adj[u].contains(v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        new
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.has_edge(u, v);
        if had {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
        had
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)))
    }

    /// Absent pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let all = self.vertices();
        (0..self.n).flat_map(move |u| {
            all.above(u)
                .difference(&self.adj[u])
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut row = all.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Disjoint union plus every pair between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - S`, with the surviving vertices relabelled in increasing order.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Graph {
        let keep: Vec<usize> = self.vertices().difference(removed).iter().collect();
        self.induced(&keep)
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.delete_vertices(&VertexSet::singleton(v))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Ordered vertex sequence `order` becomes `0..n` (inverse of [`Graph::relabel`]).
    pub fn permuted(&self, order: &[usize]) -> Graph {
        self.induced(order)
    }

    pub(crate) fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// A colour. Only the partition of edges into colour classes is meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorId(pub u32);

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const NO_COLOR: u32 = u32::MAX;

/// A graph together with a colour on every edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoredGraph {
    graph: Graph,
    // Row-major n x n, symmetric; NO_COLOR on non-edges.
    colors: Vec<u32>,
}

impl EdgeColoredGraph {
    pub fn empty(n: usize) -> Self {
        EdgeColoredGraph {
            graph: Graph::empty(n),
            colors: vec![NO_COLOR; n * n],
        }
    }

    pub fn from_colored_edges(n: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v, c) in edges {
            g.set_edge(u, v, ColorId(c));
        }
        g
    }

    /// Every edge of `g` in its own colour class: `ℛ(g)`.
    pub fn rainbow(g: &Graph) -> Self {
        let mut out = Self::empty(g.vertex_count());
        for (i, (u, v)) in g.edges().enumerate() {
            out.set_edge(u, v, ColorId(i as u32));
        }
        out
    }

    pub fn monochromatic(g: &Graph, c: ColorId) -> Self {
        let mut out = Self::empty(g.vertex_count());
        for (u, v) in g.edges() {
            out.set_edge(u, v, c);
        }
        out
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.graph.n
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<ColorId> {
        if u >= self.graph.n || v >= self.graph.n {
            return None;
        }
        match self.colors[u * self.graph.n + v] {
            NO_COLOR => None,
            c => Some(ColorId(c)),
        }
    }

    /// Raw colour lookup for hot loops; `u32::MAX` on non-edges.
    #[inline]
    pub(crate) fn raw_color(&self, u: usize, v: usize) -> u32 {
        self.colors[u * self.graph.n + v]
    }

    /// Adds or recolours `{u, v}`.
    pub fn set_edge(&mut self, u: usize, v: usize, c: ColorId) {
        assert!(c.0 != NO_COLOR, "colour id {} is reserved", NO_COLOR);
        self.graph.add_edge(u, v);
        let n = self.graph.n;
        self.colors[u * n + v] = c.0;
        self.colors[v * n + u] = c.0;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.graph.remove_edge(u, v);
        if had {
            let n = self.graph.n;
            self.colors[u * n + v] = NO_COLOR;
            self.colors[v * n + u] = NO_COLOR;
        }
        had
    }

    /// `(u, v, colour)` in lexicographic edge order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, ColorId)> + '_ {
        self.graph
            .edges()
            .map(move |(u, v)| (u, v, ColorId(self.raw_color(u, v))))
    }

    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.graph.non_edges()
    }

    /// Distinct colours present, ascending.
    pub fn colors(&self) -> Vec<ColorId> {
        let mut cs: Vec<ColorId> = self.edges().map(|(_, _, c)| c).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    pub fn color_count(&self) -> usize {
        self.colors().len()
    }

    /// One more than the largest colour present (0 on an edgeless graph).
    pub fn fresh_color(&self) -> ColorId {
        self.edges()
            .map(|(_, _, c)| ColorId(c.0 + 1))
            .max()
            .unwrap_or(ColorId(0))
    }

    /// Colour classes ordered by their first edge in lexicographic order.
    pub fn color_classes(&self) -> Vec<Vec<Edge>> {
        let mut index: HashMap<u32, usize> = HashMap::new();
        let mut classes: Vec<Vec<Edge>> = Vec::new();
        for (u, v, c) in self.edges() {
            let i = *index.entry(c.0).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[i].push((u, v));
        }
        classes
    }

    /// Re-indexes colours densely as `0..c` by first occurrence in
    /// lexicographic edge order. The partition into classes is unchanged.
    pub fn normalized(&self) -> Self {
        let mut out = Self::empty(self.vertex_count());
        for (i, class) in self.color_classes().into_iter().enumerate() {
            for (u, v) in class {
                out.set_edge(u, v, ColorId(i as u32));
            }
        }
        out
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalized()
    }

    /// Whether both graphs have the same edges and the same colour partition.
    pub fn same_partition(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vertex_count());
        let mut out = Self::empty(self.vertex_count());
        for (u, v, c) in self.edges() {
            out.set_edge(perm[u], perm[v], c);
        }
        out
    }

    /// Applies `f` to every colour.
    pub fn recolor(&self, mut f: impl FnMut(ColorId) -> ColorId) -> Self {
        let mut out = Self::empty(self.vertex_count());
        for (u, v, c) in self.edges() {
            out.set_edge(u, v, f(c));
        }
        out
    }

    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut out = Self::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if let Some(c) = self.color(u, v) {
                    out.set_edge(i, j, c);
                }
            }
        }
        out
    }

    pub fn delete_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Disjoint union; the colours of `other` are shifted past those of `self`
    /// so no class of one side merges with a class of the other.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let n = self.vertex_count();
        let shift = self.fresh_color().0;
        let mut out = Self::empty(n + other.vertex_count());
        for (u, v, c) in self.edges() {
            out.set_edge(u, v, c);
        }
        for (u, v, c) in other.edges() {
            out.set_edge(u + n, v + n, ColorId(c.0 + shift));
        }
        out
    }

    /// Complete join of `a` and `b`. With `fresh`, every cross edge gets a
    /// colour class of its own; otherwise all cross edges share one new colour.
    pub fn complete_join(a: &Self, b: &Self, fresh: bool) -> Self {
        let mut out = a.disjoint_union(b);
        let mut next = out.fresh_color().0;
        let na = a.vertex_count();
        for u in 0..na {
            for v in 0..b.vertex_count() {
                out.set_edge(u, na + v, ColorId(next));
                if fresh {
                    next += 1;
                }
            }
        }
        out
    }
}

impl fmt::Debug for EdgeColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "EdgeColoredGraph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges().map(|(u, v, c)| (u, v, c.0)).collect::<Vec<_>>()
        )
    }
}

impl From<&Graph> for EdgeColoredGraph {
    fn from(g: &Graph) -> Self {
        EdgeColoredGraph::rainbow(g)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
