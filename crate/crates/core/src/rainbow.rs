//! Clique and rainbow-clique search.

use crate::bitset::VertexSet;
use crate::graph::{ColorId, Edge, EdgeColoredGraph, Graph};
use crate::report::{VerificationReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RainbowCliqueQuery {
    pub k: usize,
    pub forbidden_vertex: Option<usize>,
    pub forbidden_color: Option<ColorId>,
}

impl RainbowCliqueQuery {
    pub fn new(k: usize) -> Self {
        RainbowCliqueQuery {
            k,
            forbidden_vertex: None,
            forbidden_color: None,
        }
    }

    pub fn avoiding_vertex(mut self, v: usize) -> Self {
        self.forbidden_vertex = Some(v);
        self
    }

    pub fn avoiding_color(mut self, c: ColorId) -> Self {
        self.forbidden_color = Some(c);
        self
    }
}

pub fn contains_rainbow_clique(g: &EdgeColoredGraph, q: &RainbowCliqueQuery) -> VerificationReport {
    let mut allowed = g.graph().vertices();
    if let Some(v) = q.forbidden_vertex {
        allowed.remove(v);
    }
    match find_rainbow_clique(g, q.k, &[], &[], allowed, q.forbidden_color.map(|c| c.0)) {
        Some(clique) => VerificationReport::holds(Witness::Clique(clique)),
        None => VerificationReport::fails(Witness::Holds),
    }
}

pub fn rainbow_clique_number(g: &EdgeColoredGraph) -> usize {
    let all = g.graph().vertices();
    let mut k = 0;
    while find_rainbow_clique(g, k + 1, &[], &[], all, None).is_some() {
        k += 1;
    }
    k
}

/// All `k`-sets inducing a rainbow clique, each sorted, in lexicographic order.
pub fn list_rainbow_cliques(g: &EdgeColoredGraph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut clique = Vec::new();
    let mut used = Vec::new();
    list_rec(g, k, g.graph().vertices(), &mut clique, &mut used, &mut out);
    out
}

fn list_rec(
    g: &EdgeColoredGraph,
    k: usize,
    cand: VertexSet,
    clique: &mut Vec<usize>,
    used: &mut Vec<u32>,
    out: &mut Vec<Vec<usize>>,
) {
    if clique.len() == k {
        out.push(clique.clone());
        return;
    }
    if clique.len() + cand.len() < k {
        return;
    }
    for w in cand.iter() {
        let next = filter_candidates(g, cand.above(w).intersection(&g.graph().neighbors(w)), clique, w, used, None);
        let mark = used.len();
        used.extend(clique.iter().map(|&c| g.raw_color(c, w)));
        clique.push(w);
        list_rec(g, k, next, clique, used, out);
        clique.pop();
        used.truncate(mark);
    }
}

/// Keeps the vertices `x` of `cand` that can join `clique + w`: the colours
/// from `x` into `clique + w` are pairwise distinct, avoid `used` and the
/// colours between `w` and `clique`, and avoid `forbidden`.
fn filter_candidates(
    g: &EdgeColoredGraph,
    cand: VertexSet,
    clique: &[usize],
    w: usize,
    used: &[u32],
    forbidden: Option<u32>,
) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    'x: for x in cand.iter() {
        let cxw = g.raw_color(x, w);
        if Some(cxw) == forbidden || used.contains(&cxw) {
            continue;
        }
        for &c in clique {
            if g.raw_color(w, c) == cxw {
                continue 'x;
            }
        }
        for (i, &c) in clique.iter().enumerate() {
            let cxc = g.raw_color(x, c);
            if cxc == cxw || used.contains(&cxc) {
                continue 'x;
            }
            for &d in clique {
                if g.raw_color(w, d) == cxc {
                    continue 'x;
                }
            }
            for &d in &clique[i + 1..] {
                if g.raw_color(x, d) == cxc {
                    continue 'x;
                }
            }
        }
        out.insert(x);
    }
    out
}

/// A rainbow `K_k` that uses the edge `uv`, if one exists.
pub fn rainbow_clique_through(g: &EdgeColoredGraph, k: usize, (u, v): Edge) -> Option<Vec<usize>> {
    if k < 2 || !g.has_edge(u, v) {
        return None;
    }
    find_rainbow_clique(g, k, &[u, v], &[], g.graph().vertices(), None)
}

/// Searches for a rainbow clique of order `k` containing all of `seed`.
///
/// The seed is trusted to be a clique; its internal colours are taken from
/// `g` unless `seed_colors` is non-empty, in which case those are the colours
/// inside the seed (this lets callers test a pair that is not yet an edge).
/// The remaining vertices come from `allowed`, and no edge may use
/// `forbidden`.
pub(crate) fn find_rainbow_clique(
    g: &EdgeColoredGraph,
    k: usize,
    seed: &[usize],
    seed_colors: &[u32],
    allowed: VertexSet,
    forbidden: Option<u32>,
) -> Option<Vec<usize>> {
    if seed.len() >= k {
        let mut c = seed.to_vec();
        c.sort_unstable();
        return Some(c);
    }
    let mut used: Vec<u32> = if seed_colors.is_empty() {
        let mut u = Vec::new();
        for (i, &a) in seed.iter().enumerate() {
            for &b in &seed[i + 1..] {
                u.push(g.raw_color(a, b));
            }
        }
        u
    } else {
        seed_colors.to_vec()
    };
    if forbidden.is_some_and(|f| used.contains(&f)) {
        return None;
    }
    let mut cand = allowed;
    for &s in seed {
        cand = cand.intersection(&g.graph().neighbors(s));
        cand.remove(s);
    }
    let mut clique: Vec<usize> = Vec::with_capacity(k);
    for &s in seed {
        cand = filter_seed(g, cand, &clique, s, &used, forbidden);
        clique.push(s);
    }
    let order = degeneracy_order(g.graph(), cand);
    let mut search = RainbowSearch {
        g,
        k,
        forbidden,
        order: &order,
    };
    if search.extend(&mut clique, &mut used, cand) {
        clique.sort_unstable();
        Some(clique)
    } else {
        None
    }
}

/// Keeps the vertices `x` of `cand` whose edge to `s` has a colour outside
/// `used`, other than `forbidden`, and unlike the colours from `x` to `partial`.
fn filter_seed(
    g: &EdgeColoredGraph,
    cand: VertexSet,
    partial: &[usize],
    s: usize,
    used: &[u32],
    forbidden: Option<u32>,
) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    'x: for x in cand.iter() {
        let cxs = g.raw_color(x, s);
        if Some(cxs) == forbidden || used.contains(&cxs) {
            continue;
        }
        for &p in partial {
            if g.raw_color(x, p) == cxs {
                continue 'x;
            }
        }
        out.insert(x);
    }
    out
}

struct RainbowSearch<'a> {
    g: &'a EdgeColoredGraph,
    k: usize,
    forbidden: Option<u32>,
    order: &'a [usize],
}

impl RainbowSearch<'_> {
    fn extend(&mut self, clique: &mut Vec<usize>, used: &mut Vec<u32>, cand: VertexSet) -> bool {
        if clique.len() >= self.k {
            return true;
        }
        if clique.len() + cand.len() < self.k {
            return false;
        }
        let mut remaining = cand;
        for &w in self.order {
            if !remaining.contains(w) {
                continue;
            }
            if clique.len() + remaining.len() < self.k {
                return false;
            }
            remaining.remove(w);
            let next = filter_candidates(
                self.g,
                remaining.intersection(&self.g.graph().neighbors(w)),
                clique,
                w,
                used,
                self.forbidden,
            );
            let mark = used.len();
            used.extend(clique.iter().map(|&c| self.g.raw_color(c, w)));
            clique.push(w);
            if self.extend(clique, used, next) {
                return true;
            }
            clique.pop();
            used.truncate(mark);
        }
        false
    }
}

/// Repeatedly removes a vertex of minimum degree within `within`; the
/// resulting order is reversed so that high-core vertices come first.
fn degeneracy_order(g: &Graph, within: VertexSet) -> Vec<usize> {
    let mut left = within;
    let mut order = Vec::with_capacity(within.len());
    while !left.is_empty() {
        let v = left
            .iter()
            .min_by_key(|&v| (g.neighbors(v).intersection_len(&left), v))
            .unwrap();
        order.push(v);
        left.remove(v);
    }
    order.reverse();
    order
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g, g.vertices()).len()
}

/// A maximum clique inside `within`, sorted.
pub fn max_clique(g: &Graph, within: VertexSet) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    mcq(g, within, &mut current, &mut best);
    best.sort_unstable();
    best
}

/// Some clique of order `s` inside `within`, if one exists.
pub fn find_clique(g: &Graph, s: usize, within: VertexSet) -> Option<Vec<usize>> {
    let mut current = Vec::with_capacity(s);
    if clique_of_order(g, s, within, &mut current) {
        current.sort_unstable();
        Some(current)
    } else {
        None
    }
}

fn clique_of_order(g: &Graph, s: usize, p: VertexSet, current: &mut Vec<usize>) -> bool {
    if current.len() >= s {
        return true;
    }
    let mut p = p;
    for &(v, color) in color_sort(g, p).iter().rev() {
        if current.len() + color < s {
            return false;
        }
        current.push(v);
        if clique_of_order(g, s, p.intersection(&g.neighbors(v)), current) {
            return true;
        }
        current.pop();
        p.remove(v);
    }
    false
}

/// Greedy sequential colouring of `p`; returns vertices with their colour
/// numbers, non-decreasing in colour.
fn color_sort(g: &Graph, p: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut uncolored = p;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q.remove(v);
            q = q.difference(&g.neighbors(v));
            uncolored.remove(v);
            out.push((v, color));
        }
    }
    out
}

fn mcq(g: &Graph, p: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let mut p = p;
    for &(v, color) in color_sort(g, p).iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let next = p.intersection(&g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            mcq(g, next, current, best);
        }
        current.pop();
        p.remove(v);
    }
}
