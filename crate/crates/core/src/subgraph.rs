//! Ordinary (non-induced) subgraph containment for small patterns.

use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::rainbow::find_clique;
use crate::report::{VerificationReport, Witness};

pub const MAX_PATTERN_VERTICES: usize = 12;

/// A forbidden pattern `H`.
#[derive(Clone, PartialEq, Eq)]
pub struct PatternGraph {
    graph: Graph,
    complete: bool,
    // Pattern vertices in search order: each one after the first is, where
    // possible, adjacent to an earlier one.
    order: Vec<usize>,
}

impl PatternGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        let n = graph.vertex_count();
        if n > MAX_PATTERN_VERTICES {
            return Err(Error::Resource(format!(
                "pattern has {n} vertices, limit is {MAX_PATTERN_VERTICES}"
            )));
        }
        let complete = graph.edge_count() == n * n.saturating_sub(1) / 2;
        let order = search_order(&graph);
        Ok(PatternGraph {
            graph,
            complete,
            order,
        })
    }

    /// `K_r`.
    pub fn clique(r: usize) -> Self {
        Self::new(Graph::complete(r)).expect("clique pattern within limits")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `Some(r)` when the pattern is `K_r`.
    pub fn clique_order(&self) -> Option<usize> {
        self.complete.then_some(self.graph.vertex_count())
    }
}

impl fmt::Debug for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.clique_order() {
            Some(r) => write!(f, "K{r}"),
            None => write!(f, "{:?}", self.graph),
        }
    }
}

fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        // Prefer vertices with most placed neighbours, then highest degree.
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (h.neighbors(v).intersection_len(&placed), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(v);
        placed.insert(v);
    }
    order
}

pub fn contains_subgraph(g: &Graph, h: &PatternGraph) -> VerificationReport {
    match find_embedding(g, h, None) {
        Some(map) => VerificationReport::holds(Witness::Embedding(map)),
        None => VerificationReport::fails(Witness::Holds),
    }
}

/// An embedding of `h` into `g` whose image uses the edge `through`, which
/// must be present in `g`.
pub fn embed_through(g: &Graph, h: &PatternGraph, through: Edge) -> Option<Vec<usize>> {
    find_embedding(g, h, Some(through))
}

pub(crate) fn find_embedding(g: &Graph, h: &PatternGraph, through: Option<Edge>) -> Option<Vec<usize>> {
    let hn = h.graph.vertex_count();
    if hn > g.vertex_count() {
        return None;
    }
    if let Some(r) = h.clique_order() {
        let clique = match through {
            None => find_clique(g, r, g.vertices())?,
            Some((u, v)) => {
                if r < 2 || !g.has_edge(u, v) {
                    return None;
                }
                let common = g.neighbors(u).intersection(&g.neighbors(v));
                let mut c = find_clique(g, r - 2, common)?;
                c.push(u);
                c.push(v);
                c
            }
        };
        return Some(clique);
    }

    let mut state = Embedder {
        g,
        h: &h.graph,
        order: &h.order,
        map: vec![usize::MAX; hn],
        used: VertexSet::EMPTY,
    };
    match through {
        None => state.extend(0).then_some(state.map),
        Some((u, v)) => {
            if !g.has_edge(u, v) {
                return None;
            }
            for (a, b) in h.graph.edges() {
                for (x, y) in [(u, v), (v, u)] {
                    if g.degree(x) < h.graph.degree(a) || g.degree(y) < h.graph.degree(b) {
                        continue;
                    }
                    state.map.fill(usize::MAX);
                    state.used = VertexSet::EMPTY;
                    state.map[a] = x;
                    state.map[b] = y;
                    state.used.insert(x);
                    state.used.insert(y);
                    if state.extend(0) {
                        return Some(state.map);
                    }
                }
            }
            None
        }
    }
}

struct Embedder<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    map: Vec<usize>,
    used: VertexSet,
}

impl Embedder<'_> {
    fn extend(&mut self, i: usize) -> bool {
        let Some(&p) = self.order.get(i) else {
            return true;
        };
        if self.map[p] != usize::MAX {
            return self.extend(i + 1);
        }
        let mut cand = self.g.vertices().difference(&self.used);
        for q in self.h.neighbors(p).iter() {
            if self.map[q] != usize::MAX {
                cand = cand.intersection(&self.g.neighbors(self.map[q]));
            }
        }
        let need = self.h.degree(p);
        for x in cand.iter() {
            if self.g.degree(x) < need {
                continue;
            }
            self.map[p] = x;
            self.used.insert(x);
            if self.extend(i + 1) {
                return true;
            }
            self.used.remove(x);
        }
        self.map[p] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> PatternGraph {
        PatternGraph::new(Graph::cycle(4)).unwrap()
    }

    fn is_embedding(g: &Graph, h: &Graph, map: &[usize]) -> bool {
        let mut seen = map.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == map.len() && h.edges().all(|(a, b)| g.has_edge(map[a], map[b]))
    }

    #[test]
    fn cycle_examples() {
        assert!(contains_subgraph(&Graph::complete(4), &c4()).verdict);
        assert!(!contains_subgraph(&Graph::star(3), &c4()).verdict);
        let r = contains_subgraph(&Graph::complete_bipartite(2, 2), &c4());
        match r.witness {
            Witness::Embedding(map) => assert!(is_embedding(&Graph::complete_bipartite(2, 2), &Graph::cycle(4), &map)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pattern_limit() {
        assert!(matches!(PatternGraph::new(Graph::empty(13)), Err(Error::Resource(_))));
    }

    #[test]
    fn through_an_edge() {
        // Triangle 0-1-2 plus pendant edge 2-3.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let k3 = PatternGraph::clique(3);
        assert!(embed_through(&g, &k3, (0, 1)).is_some());
        assert!(embed_through(&g, &k3, (2, 3)).is_none());
        let p3 = PatternGraph::new(Graph::path(3)).unwrap();
        let map = embed_through(&g, &p3, (2, 3)).unwrap();
        assert!(is_embedding(&g, &Graph::path(3), &map));
        assert!(map.contains(&3));
        let star = PatternGraph::new(Graph::star(4)).unwrap();
        assert!(!contains_subgraph(&g, &star).verdict);
    }
}
