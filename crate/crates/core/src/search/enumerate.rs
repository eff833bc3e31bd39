//! Orderly generation of graphs up to isomorphism by canonical deletion.
//!
//! A graph on `n + 1` vertices is kept as a child of the canonical graph `P`
//! on `n` vertices exactly when deleting the vertex in the last canonical
//! position gives a graph isomorphic to `P`. Every isomorphism class then has
//! exactly one parent; duplicates under one parent are removed by code.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use super::SearchBudget;
use crate::canon::{canonical_order, graph_code};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::{contains_subgraph, PatternGraph};

/// Largest vertex count [`enumerate_graphs`] accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 10;

type Predicate = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

/// Predicates on generated graphs. Hereditary ones (closed under deleting a
/// vertex) prune every level; the rest are checked on the last level only.
#[derive(Clone, Default)]
pub struct GraphFilter {
    hereditary: Vec<Predicate>,
    last_level: Vec<Predicate>,
}

impl GraphFilter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a predicate that every induced subgraph of a passing graph also
    /// passes.
    pub fn hereditary(mut self, f: impl Fn(&Graph) -> bool + Send + Sync + 'static) -> Self {
        self.hereditary.push(Arc::new(f));
        self
    }

    pub fn last_level(mut self, f: impl Fn(&Graph) -> bool + Send + Sync + 'static) -> Self {
        self.last_level.push(Arc::new(f));
        self
    }

    pub fn max_edges(self, m: usize) -> Self {
        self.hereditary(move |g| g.edge_count() <= m)
    }

    pub fn exact_edges(self, m: usize) -> Self {
        self.max_edges(m).last_level(move |g| g.edge_count() == m)
    }

    pub fn free_of(self, h: PatternGraph) -> Self {
        self.hereditary(move |g| !contains_subgraph(g, &h).verdict)
    }

    pub fn min_degree(self, d: usize) -> Self {
        self.last_level(move |g| g.min_degree() >= d)
    }

    fn keeps_prefix(&self, g: &Graph) -> bool {
        self.hereditary.iter().all(|f| f(g))
    }

    fn keeps_last(&self, g: &Graph) -> bool {
        self.last_level.iter().all(|f| f(g))
    }
}

/// One canonical representative per isomorphism class of `n`-vertex graphs
/// passing `filter`, in a deterministic order.
pub fn enumerate_graphs(n: usize, filter: &GraphFilter, budget: &SearchBudget) -> Result<Vec<Graph>> {
    let limit = budget.max_vertices.min(MAX_ENUMERATION_VERTICES);
    if n > limit {
        return Err(Error::Resource(format!("graph enumeration limited to {limit} vertices, got {n}")));
    }
    let expanded = AtomicU64::new(0);
    let mut level = vec![Graph::empty(0)];
    for _ in 0..n {
        let children: Vec<Vec<Graph>> = level
            .par_iter()
            .map(|parent| children_of(parent, filter, budget, &expanded))
            .collect::<Result<_>>()?;
        level = children.into_iter().flatten().collect();
        budget.check_time()?;
    }
    level.retain(|g| filter.keeps_last(g));
    Ok(level)
}

fn children_of(
    parent: &Graph,
    filter: &GraphFilter,
    budget: &SearchBudget,
    expanded: &AtomicU64,
) -> Result<Vec<Graph>> {
    let n = parent.vertex_count();
    let parent_code = graph_code(parent);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        let count = expanded.fetch_add(1, Ordering::Relaxed) + 1;
        if count > budget.max_nodes {
            return Err(Error::Budget {
                partial: format!("graph enumeration stopped after {} candidates on {} vertices", budget.max_nodes, n + 1),
            });
        }
        let mut child = Graph::empty(n + 1);
        for (u, v) in parent.edges() {
            child.add_edge(u, v);
        }
        for u in 0..n {
            if mask >> u & 1 == 1 {
                child.add_edge(u, n);
            }
        }
        if !filter.keeps_prefix(&child) {
            continue;
        }
        let order = canonical_order(&child);
        let last = *order.last().unwrap();
        if last != n && graph_code(&child.delete_vertex(last)) != parent_code {
            continue;
        }
        let canon = child.permuted(&order);
        if seen.insert(graph_code(&canon)) {
            out.push(canon);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut codes = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
            codes.insert(graph_code(&Graph::from_edges(n, &edges)));
        }
        codes.len()
    }

    #[test]
    fn class_counts() {
        let b = SearchBudget::default();
        let counts: Vec<usize> = (0..=7)
            .map(|n| enumerate_graphs(n, &GraphFilter::new(), &b).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        for (n, &c) in counts.iter().enumerate().take(6) {
            assert_eq!(c, brute_force_classes(n));
        }
    }

    #[test]
    fn filters() {
        let b = SearchBudget::default();
        let tri_free = GraphFilter::new().free_of(PatternGraph::clique(3));
        // Triangle-free graphs on 5 vertices: 14 classes.
        assert_eq!(enumerate_graphs(5, &tri_free, &b).unwrap().len(), 14);
        let three_edges = GraphFilter::new().exact_edges(3);
        assert_eq!(enumerate_graphs(5, &three_edges, &b).unwrap().len(), 4);
        let min2 = GraphFilter::new().min_degree(2);
        let all = enumerate_graphs(4, &min2, &b).unwrap();
        assert!(all.iter().all(|g| g.min_degree() >= 2));
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn limits() {
        let b = SearchBudget::default();
        assert!(matches!(enumerate_graphs(11, &GraphFilter::new(), &b), Err(Error::Resource(_))));
        let tight = SearchBudget {
            max_nodes: 10,
            ..SearchBudget::default()
        };
        assert!(matches!(enumerate_graphs(5, &GraphFilter::new(), &tight), Err(Error::Budget { .. })));
    }
}
