//! Canonical labelling by individualisation–refinement.
//!
//! Uncoloured graphs are labelled directly. An edge-coloured graph is
//! labelled through its incidence graph (original vertices, one vertex per
//! edge, one vertex per colour class, each in its own initial cell), which
//! reduces colour renaming to ordinary vertex relabelling.

use std::cmp::Ordering;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, Graph};

/// Largest vertex count accepted by the public code functions.
pub const MAX_CANON_VERTICES: usize = 12;

const TAG_GRAPH: u8 = 0;
const TAG_COLORED: u8 = 1;

/// Totally ordered isomorphism-class key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::Resource(format!(
            "canonical code limited to {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    Ok(())
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    check_size(g.vertex_count())?;
    Ok(graph_code(g))
}

pub fn colored_canonical_code(g: &EdgeColoredGraph) -> Result<CanonicalCode> {
    check_size(g.vertex_count())?;
    Ok(colored_code(g))
}

/// `order[i]` is the vertex placed at canonical position `i`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let cells = if g.vertex_count() == 0 {
        Vec::new()
    } else {
        vec![(0..g.vertex_count()).collect()]
    };
    Labeller::new(g.adjacency()).run(cells).order
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_order(g))
}

/// Code without the public size check (used by enumeration).
pub(crate) fn graph_code(g: &Graph) -> CanonicalCode {
    let order = canonical_order(g);
    let mut out = vec![TAG_GRAPH, g.vertex_count() as u8];
    pack_adjacency(g, &order, &mut out);
    CanonicalCode(out)
}

pub(crate) fn colored_code(g: &EdgeColoredGraph) -> CanonicalCode {
    let n = g.vertex_count();
    let classes = g.color_classes();
    let m = g.edge_count();
    let total = n + m + classes.len();
    let mut aux = Graph::empty(total);
    let mut e = n;
    for (ci, class) in classes.iter().enumerate() {
        let cv = n + m + ci;
        for &(u, v) in class {
            aux.add_edge(u, e);
            aux.add_edge(v, e);
            aux.add_edge(e, cv);
            e += 1;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for range in [0..n, n..n + m, n + m..total] {
        if !range.is_empty() {
            cells.push(range.collect());
        }
    }
    let full = Labeller::new(aux.adjacency()).run(cells).order;
    // Refinement never moves vertices across initial cells, so the original
    // vertices occupy the first n positions.
    let order: Vec<usize> = full[..n].to_vec();
    debug_assert!(order.iter().all(|&v| v < n));

    let relabelled = g.induced(&order).normalized();
    let mut out = vec![TAG_COLORED, n as u8];
    pack_adjacency(g.graph(), &order, &mut out);
    out.extend(relabelled.edges().map(|(_, _, c)| c.0 as u8));
    CanonicalCode(out)
}

fn pack_adjacency(g: &Graph, order: &[usize], out: &mut Vec<u8>) {
    let mut byte = 0u8;
    let mut bits = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            byte = byte << 1 | g.has_edge(order[i], order[j]) as u8;
            bits += 1;
            if bits == 8 {
                out.push(byte);
                byte = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(byte << (8 - bits));
    }
}

/// Generators (not necessarily a minimal set) of the automorphism group of
/// `g`, as vertex maps `v -> perm[v]`.
pub fn automorphism_generators(g: &Graph) -> Vec<Vec<usize>> {
    let cells = if g.vertex_count() == 0 {
        Vec::new()
    } else {
        vec![(0..g.vertex_count()).collect()]
    };
    Labeller::new(g.adjacency()).run(cells).automorphisms
}

/// Splits cells until the ordered partition is equitable. Depends only on
/// the structure and the current cell order, never on vertex labels.
fn refine(adj: &[VertexSet], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            let mut j = 0;
            while j < cells.len() {
                if cells[j].len() > 1 {
                    let mut keyed: Vec<(usize, usize)> = cells[j]
                        .iter()
                        .map(|&x| (adj[x].intersection_len(&splitter), x))
                        .collect();
                    keyed.sort_unstable();
                    if keyed[0].0 != keyed[keyed.len() - 1].0 {
                        let mut parts: Vec<Vec<usize>> = Vec::new();
                        let mut last = usize::MAX;
                        for (k, x) in keyed {
                            if k != last {
                                parts.push(Vec::new());
                                last = k;
                            }
                            parts.last_mut().unwrap().push(x);
                        }
                        let added = parts.len();
                        cells.splice(j..j + 1, parts);
                        j += added;
                        changed = true;
                        continue;
                    }
                }
                j += 1;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Labeller<'a> {
    adj: &'a [VertexSet],
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

struct Labelling {
    order: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Labeller<'a> {
    fn new(adj: &'a [VertexSet]) -> Self {
        Labeller {
            adj,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self, mut cells: Vec<Vec<usize>>) -> Labelling {
        refine(self.adj, &mut cells);
        let mut path = Vec::new();
        self.descend(cells, &mut path);
        Labelling {
            order: self.best.map(|l| l.order).unwrap_or_default(),
            automorphisms: self.automorphisms,
        }
    }

    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let words = n.div_ceil(64).max(1);
        let mut cert = vec![0u64; n * words];
        let mut pos = vec![0usize; self.adj.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = pos[w];
                cert[i * words + j / 64] |= 1u64 << (63 - j % 64);
            }
        }
        cert
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut perm = vec![0usize; self.adj.len()];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        self.automorphisms.push(perm);
    }

    /// Returns `Some(level)` to unwind the search back to `level`.
    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);

        let Some(t) = target else {
            return self.leaf(cells.into_iter().flatten().collect(), path);
        };

        let level = path.len();
        let mut candidates = cells[t].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if self.equivalent_to_tried(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[t].iter().copied().filter(|&x| x != v).collect();
            next.splice(t..t + 1, [vec![v], rest]);
            refine(self.adj, &mut next);
            path.push(v);
            let jump = self.descend(next, path);
            path.pop();
            match jump {
                Some(d) if d < level => return Some(d),
                _ => {}
            }
        }
        None
    }

    fn equivalent_to_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        if tried.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.adj.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for perm in &self.automorphisms {
            if prefix.iter().any(|&p| perm[p] != p) {
                continue;
            }
            for (a, &b) in perm.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, order: Vec<usize>, path: &[usize]) -> Option<usize> {
        let cert = self.certificate(&order);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                cert,
                order,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let (f_order, f_path) = (first.order.clone(), first.path.clone());
            self.record_automorphism(&f_order, &order);
            return Some(common_prefix(&f_path, path));
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            Ordering::Equal => {
                let (b_order, b_path) = (best.order.clone(), best.path.clone());
                self.record_automorphism(&b_order, &order);
                Some(common_prefix(&b_path, path))
            }
            Ordering::Greater => {
                self.best = Some(Leaf {
                    cert,
                    order,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Less => None,
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
