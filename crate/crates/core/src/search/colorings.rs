//! Edge colourings of a fixed graph up to colour renaming and automorphism.
//!
//! Colourings are restricted growth strings over the lexicographic edge list;
//! a string is kept when no automorphism maps it to a smaller normalised one.

use crate::error::{Error, Result};
use crate::graph::{ColorId, Edge, EdgeColoredGraph, Graph};

/// Edge bound for [`enumerate_colorings`].
pub const MAX_COLORING_EDGES: usize = 12;

/// Cap on the automorphism group size handled by the orbit test.
pub const MAX_GROUP_ORDER: usize = 200_000;

/// All automorphisms of `g`, isolated vertices held fixed (they do not act on
/// edges). The identity comes first.
pub fn automorphisms(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let movable: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let mut map: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend_automorphism(g, &movable, 0, &mut map, &mut used, &mut out, limit)?;
    Ok(out)
}

fn extend_automorphism(
    g: &Graph,
    movable: &[usize],
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    let Some(&v) = movable.get(i) else {
        if out.len() == limit {
            return Err(Error::Budget {
                partial: format!("automorphism group has more than {limit} elements"),
            });
        }
        out.push(map.clone());
        return Ok(());
    };
    // Try the identity image first so the identity is generated first.
    let images = std::iter::once(v).chain(movable.iter().copied().filter(|&w| w != v));
    for w in images {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = movable[..i].iter().all(|&p| g.has_edge(p, v) == g.has_edge(map[p], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        extend_automorphism(g, movable, i + 1, map, used, out, limit)?;
        used[w] = false;
    }
    map[v] = v;
    Ok(())
}

/// One colouring per orbit of edge partitions under `Aut(g)`.
pub fn enumerate_colorings(g: &Graph) -> Result<Vec<EdgeColoredGraph>> {
    enumerate_colorings_pruned(g, |_, _| true)
}

/// Like [`enumerate_colorings`], but a branch is cut as soon as `keep` rejects
/// the partial colouring after the edge just assigned. `keep` must be
/// invariant under isomorphism and stay false once false as more edges are
/// coloured; under that contract the orbits lost are exactly those whose
/// colourings all fail.
pub fn enumerate_colorings_pruned(
    g: &Graph,
    keep: impl Fn(&EdgeColoredGraph, Edge) -> bool,
) -> Result<Vec<EdgeColoredGraph>> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.len() > MAX_COLORING_EDGES {
        return Err(Error::Resource(format!(
            "colouring enumeration limited to {MAX_COLORING_EDGES} edges, got {}",
            edges.len()
        )));
    }
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let group: Vec<Vec<usize>> = automorphisms(g, MAX_GROUP_ORDER)?
        .into_iter()
        .skip(1)
        .map(|p| edges.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut state = Rgs {
        edges: &edges,
        group: &group,
        keep: &keep,
        partial: EdgeColoredGraph::empty(g.vertex_count()),
        string: Vec::with_capacity(edges.len()),
        out: Vec::new(),
    };
    state.extend(0);
    Ok(state.out)
}

struct Rgs<'a, F> {
    edges: &'a [Edge],
    group: &'a [Vec<usize>],
    keep: &'a F,
    partial: EdgeColoredGraph,
    string: Vec<u32>,
    out: Vec<EdgeColoredGraph>,
}

impl<F: Fn(&EdgeColoredGraph, Edge) -> bool> Rgs<'_, F> {
    fn extend(&mut self, blocks: u32) {
        let i = self.string.len();
        if i == self.edges.len() {
            if self.orbit_minimal() {
                self.out.push(self.partial.clone());
            }
            return;
        }
        let (u, v) = self.edges[i];
        for c in 0..=blocks {
            self.partial.set_edge(u, v, ColorId(c));
            self.string.push(c);
            if (self.keep)(&self.partial, (u, v)) {
                self.extend(blocks.max(c + 1));
            }
            self.string.pop();
        }
        self.partial.remove_edge(u, v);
    }

    fn orbit_minimal(&self) -> bool {
        let s = &self.string;
        let mut rename = vec![u32::MAX; s.len()];
        'perm: for perm in self.group {
            rename.fill(u32::MAX);
            let mut next = 0;
            for (j, &pj) in perm.iter().enumerate() {
                let c = s[pj] as usize;
                if rename[c] == u32::MAX {
                    rename[c] = next;
                    next += 1;
                }
                match rename[c].cmp(&s[j]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => continue 'perm,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }
}
