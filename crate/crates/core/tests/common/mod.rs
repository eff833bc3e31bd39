//! Slow, obviously-correct reference implementations used as oracles.
#![allow(dead_code)]

use rsat_core::{EdgeColoredGraph, Graph};

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Colour matrix; `None` on non-edges.
pub type Colors = Vec<Vec<Option<u64>>>;

pub fn matrix(g: &EdgeColoredGraph) -> Colors {
    let n = g.vertex_count();
    let mut m = vec![vec![None; n]; n];
    for (u, v, c) in g.edges() {
        m[u][v] = Some(c.0 as u64);
        m[v][u] = Some(c.0 as u64);
    }
    m
}

fn palette(m: &Colors, s: &[usize]) -> Option<Vec<u64>> {
    let mut cs = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            cs.push(m[a][b]?);
        }
    }
    Some(cs)
}

pub fn is_rainbow(m: &Colors, s: &[usize]) -> bool {
    match palette(m, s) {
        Some(mut cs) => {
            let len = cs.len();
            cs.sort_unstable();
            cs.dedup();
            cs.len() == len
        }
        None => false,
    }
}

pub fn has_rainbow(m: &Colors, k: usize, avoid_vertex: Option<usize>, avoid_color: Option<u64>) -> bool {
    subsets(m.len(), k).iter().any(|s| {
        avoid_vertex.is_none_or(|v| !s.contains(&v))
            && is_rainbow(m, s)
            && avoid_color.is_none_or(|c| !palette(m, s).unwrap().contains(&c))
    })
}

fn present_colors(m: &Colors) -> Vec<u64> {
    let mut cs: Vec<u64> = m.iter().flatten().flatten().copied().collect();
    cs.sort_unstable();
    cs.dedup();
    cs
}

pub fn fhat(g: &EdgeColoredGraph, k: usize) -> bool {
    let m = matrix(g);
    !has_rainbow(&m, k + 1, None, None)
        && (0..m.len()).all(|v| has_rainbow(&m, k, Some(v), None))
        && present_colors(&m).into_iter().all(|c| has_rainbow(&m, k, None, Some(c)))
}

/// ℛ(K_r)-saturation with `fresh` unused colours as candidates.
pub fn rainbow_saturated(g: &EdgeColoredGraph, r: usize, fresh: u64) -> bool {
    let mut m = matrix(g);
    if has_rainbow(&m, r, None, None) {
        return false;
    }
    let mut cands = present_colors(&m);
    let top = cands.last().map_or(0, |c| c + 1);
    cands.extend(top..top + fresh);
    let n = m.len();
    let sets = subsets(n, r);
    for u in 0..n {
        for v in u + 1..n {
            if m[u][v].is_some() {
                continue;
            }
            for &c in &cands {
                m[u][v] = Some(c);
                m[v][u] = Some(c);
                let made = sets.iter().any(|s| s.contains(&u) && s.contains(&v) && is_rainbow(&m, s));
                m[u][v] = None;
                m[v][u] = None;
                if !made {
                    return false;
                }
            }
        }
    }
    true
}

fn has_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// `K_r`-saturation by subset enumeration.
pub fn k_saturated(g: &Graph, r: usize) -> bool {
    let n = g.vertex_count();
    let sets = subsets(n, r);
    if sets.iter().any(|s| has_clique(g, s)) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut h = g.clone();
            h.add_edge(u, v);
            if !sets.iter().any(|s| s.contains(&u) && s.contains(&v) && has_clique(&h, s)) {
                return false;
            }
        }
    }
    true
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Labelled graphs with exactly `m` edges.
fn labelled(n: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs = all_pairs(n);
    subsets(pairs.len(), m)
        .into_iter()
        .map(|s| s.into_iter().map(|i| pairs[i]).collect())
        .collect()
}

/// All restricted growth strings of length `m`.
pub fn growth_strings(m: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for s in &out {
            let top = s.iter().copied().max().map_or(0, |x| x + 1);
            for c in 0..=top {
                let mut t = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// sat(n, K_r) over every labelled graph.
pub fn min_sat(n: usize, r: usize) -> usize {
    (0..).find(|&m| {
        labelled(n, m).iter().any(|es| k_saturated(&Graph::from_edges(n, es), r))
    })
    .unwrap()
}

/// sat(n, ℛ(K_r)) over every labelled graph and every colouring.
pub fn min_sat_rainbow(n: usize, r: usize) -> usize {
    let strings: Vec<Vec<Vec<u32>>> = (0..=n * (n - 1) / 2).map(growth_strings).collect();
    (0..)
        .find(|&m| {
            labelled(n, m).iter().any(|es| {
                strings[m].iter().any(|s| {
                    let triples: Vec<_> = es.iter().zip(s).map(|(&(u, v), &c)| (u, v, c)).collect();
                    rainbow_saturated(&EdgeColoredGraph::from_colored_edges(n, &triples), r, 1)
                })
            })
        })
        .unwrap()
}
