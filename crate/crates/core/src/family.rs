//! Membership tests for the graph families used in the bounds.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{parameter, Result};
use crate::graph::{EdgeColoredGraph, Graph};
use crate::rainbow::{clique_number, contains_rainbow_clique, max_clique, RainbowCliqueQuery};
use crate::report::{VerificationReport, Witness};

/// Properties 1–3 of `F̂_k`:
/// 1. no rainbow `K_{k+1}`;
/// 2. every vertex-deleted subgraph contains a rainbow `K_k`;
/// 3. every colour present is avoided by some rainbow `K_k`.
#[allow(non_snake_case)]
pub fn in_family_Fhat(g: &EdgeColoredGraph, k: usize) -> Result<VerificationReport> {
    if k == 0 {
        return Err(parameter("F-hat membership needs k >= 1"));
    }
    let fail = |number, vertex, color| {
        Ok(VerificationReport::fails(Witness::Property {
            number,
            vertex,
            color,
        }))
    };
    if contains_rainbow_clique(g, &RainbowCliqueQuery::new(k + 1)).verdict {
        return fail(1, None, None);
    }
    for v in 0..g.vertex_count() {
        let q = RainbowCliqueQuery::new(k).avoiding_vertex(v);
        if !contains_rainbow_clique(g, &q).verdict {
            return fail(2, Some(v), None);
        }
    }
    for c in g.colors() {
        let q = RainbowCliqueQuery::new(k).avoiding_color(c);
        if !contains_rainbow_clique(g, &q).verdict {
            return fail(3, None, Some(c));
        }
    }
    Ok(VerificationReport::holds(Witness::Holds))
}

/// `|V| = 2(r-2)`, `ω = r-2`, and the complement has a perfect matching.
#[allow(non_snake_case)]
pub fn in_family_F_doubleprime(g: &Graph, r: usize) -> Result<bool> {
    if r < 3 {
        return Err(parameter("F'' membership needs r >= 3"));
    }
    let n = g.vertex_count();
    Ok(n == 2 * (r - 2)
        && clique_number(g) == r - 2
        && max_matching(&g.complement()) * 2 == n)
}

/// `ω(G - v) = ω(G)` for every vertex `v`.
pub fn lemma2_hypothesis(g: &Graph) -> bool {
    let w = clique_number(g);
    (0..g.vertex_count()).all(|v| {
        let mut rest = g.vertices();
        rest.remove(v);
        max_clique(g, rest).len() == w
    })
}

/// The complement of `g` has a matching with `ω(G)` edges.
pub fn lemma2_conclusion(g: &Graph) -> bool {
    max_matching(&g.complement()) >= clique_number(g)
}

/// `ω(G - S) = ω(G)` for every vertex set `S` with `|S| <= t`.
pub fn robust_clique_check(g: &Graph, t: usize) -> bool {
    // Deleting vertices never raises ω, so sets of the largest size suffice.
    let n = g.vertex_count();
    let size = t.min(n);
    let w = clique_number(g);
    let mut chosen = Vec::with_capacity(size);
    subsets_keep_omega(g, w, size, 0, &mut chosen)
}

fn subsets_keep_omega(g: &Graph, w: usize, size: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == size {
        let removed: VertexSet = chosen.iter().copied().collect();
        return max_clique(g, g.vertices().difference(&removed)).len() == w;
    }
    for v in from..g.vertex_count() {
        chosen.push(v);
        let ok = subsets_keep_omega(g, w, size, v + 1, chosen);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Size of a maximum matching, by memoised exhaustive search (general
/// graphs, intended for a few dozen vertices at most).
pub fn max_matching(g: &Graph) -> usize {
    let mut memo = HashMap::new();
    matching_rec(g, g.vertices(), &mut memo)
}

fn matching_rec(g: &Graph, left: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
    // Vertices with no neighbour among the rest can never be matched.
    let mut live = left;
    for v in left.iter() {
        if g.neighbors(v).intersection_len(&left) == 0 {
            live.remove(v);
        }
    }
    let Some(v) = live.first() else {
        return 0;
    };
    if let Some(&m) = memo.get(&live) {
        return m;
    }
    let mut rest = live;
    rest.remove(v);
    let mut best = matching_rec(g, rest, memo);
    let cap = live.len() / 2;
    for w in g.neighbors(v).intersection(&rest).iter() {
        if best == cap {
            break;
        }
        let mut r2 = rest;
        r2.remove(w);
        best = best.max(1 + matching_rec(g, r2, memo));
    }
    memo.insert(live, best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColorId;

    fn lambda2() -> EdgeColoredGraph {
        EdgeColoredGraph::from_colored_edges(3, &[(0, 1, 0), (0, 2, 0), (1, 2, 1)])
    }

    #[test]
    fn fhat_examples() {
        assert!(in_family_Fhat(&lambda2(), 2).unwrap().verdict);
        let r = in_family_Fhat(&EdgeColoredGraph::rainbow(&Graph::complete(3)), 2).unwrap();
        assert!(!r.verdict);
        assert!(matches!(r.witness, Witness::Property { number: 1, .. }));
        assert!(in_family_Fhat(&EdgeColoredGraph::empty(2), 1).unwrap().verdict);
        assert!(!in_family_Fhat(&EdgeColoredGraph::empty(1), 1).unwrap().verdict);
        assert!(in_family_Fhat(&lambda2(), 0).is_err());
    }

    #[test]
    fn fhat_property_three() {
        // K_3 with one colour: rainbow K_2s exist but none avoids colour 0.
        let g = EdgeColoredGraph::monochromatic(&Graph::complete(3), ColorId(0));
        let r = in_family_Fhat(&g, 2).unwrap();
        assert_eq!(
            r.witness,
            Witness::Property {
                number: 3,
                vertex: None,
                color: Some(ColorId(0))
            }
        );
    }

    #[test]
    fn doubleprime_examples() {
        assert!(in_family_F_doubleprime(&Graph::cycle(4), 4).unwrap());
        assert!(!in_family_F_doubleprime(&Graph::complete(4), 4).unwrap());
        assert!(!in_family_F_doubleprime(&Graph::empty(4), 4).unwrap());
    }

    #[test]
    fn lemma2_examples() {
        let two_triangles = Graph::disjoint_cliques(2, 3);
        assert!(lemma2_hypothesis(&two_triangles));
        assert!(lemma2_conclusion(&two_triangles));
        assert!(!lemma2_hypothesis(&Graph::complete(3)));
        let pc = Graph::petersen().complement();
        assert!(lemma2_hypothesis(&pc) && lemma2_conclusion(&pc));
    }

    #[test]
    fn robust_examples() {
        assert!(robust_clique_check(&Graph::petersen().complement(), 2));
        assert!(!robust_clique_check(&Graph::petersen().complement(), 3));
        assert!(!robust_clique_check(&Graph::complete(5), 1));
        assert!(robust_clique_check(&Graph::disjoint_cliques(3, 4), 2));
        assert!(robust_clique_check(&Graph::complete(5), 0));
    }

    #[test]
    fn matchings() {
        assert_eq!(max_matching(&Graph::cycle(5)), 2);
        assert_eq!(max_matching(&Graph::petersen()), 5);
        assert_eq!(max_matching(&Graph::star(4)), 1);
        assert_eq!(max_matching(&Graph::empty(3)), 0);
        assert_eq!(max_matching(&Graph::complete_bipartite(3, 3)), 3);
    }
}
