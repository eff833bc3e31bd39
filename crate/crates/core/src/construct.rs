//! Explicit extremal constructions.
//!
//! All coloured outputs are colour-normalised (first-occurrence order), except
//! that the non-stability graphs keep their shared "red" colour as colour 0.

use crate::error::{parameter, Error, Result};
use crate::family::in_family_Fhat;
use crate::graph::{binomial, ColorId, EdgeColoredGraph, Graph};
use crate::verify::{addition_creates, is_rainbow_saturated};

/// Shared colour of non-stability and dominant-vertex edges.
pub const RED: ColorId = ColorId(0);

/// `K_{r-2} + K̄_{n-r+2}`: clique on `0..r-2`, independent set after it.
pub fn ehm_graph(n: usize, r: usize) -> Result<Graph> {
    if r < 3 || n < r - 2 {
        return Err(parameter(format!("ehm graph needs n >= r-2 >= 1, got n={n}, r={r}")));
    }
    Ok(Graph::complete(r - 2).join(&Graph::empty(n - (r - 2))))
}

/// `K_{2,n-2}` for `r = 3`, `K_{r-1} + K̄_{n-r+1}` for `r >= 4`.
pub fn g_semisat(n: usize, r: usize) -> Result<Graph> {
    match r {
        3 if n >= 3 => Ok(Graph::complete_bipartite(2, n - 2)),
        r if r >= 4 && n >= r => Ok(Graph::complete(r - 1).join(&Graph::empty(n - r + 1))),
        _ => Err(parameter(format!("semisaturation graph needs r >= 3 and n >= max(3, r), got n={n}, r={r}"))),
    }
}

pub fn g_semisat_rainbow(n: usize, r: usize) -> Result<EdgeColoredGraph> {
    Ok(EdgeColoredGraph::rainbow(&g_semisat(n, r)?))
}

/// `overline((r-2)K_2) + K̄_{n-2(r-2)}`.
pub fn g_prime(n: usize, r: usize) -> Result<Graph> {
    if r < 3 || n < 2 * r - 4 {
        return Err(parameter(format!("G' needs r >= 3 and n >= 2r-4, got n={n}, r={r}")));
    }
    let core = Graph::disjoint_cliques(r - 2, 2).complement();
    Ok(core.join(&Graph::empty(n - 2 * (r - 2))))
}

pub fn g_prime_rainbow(n: usize, r: usize) -> Result<EdgeColoredGraph> {
    Ok(EdgeColoredGraph::rainbow(&g_prime(n, r)?))
}

/// `overline((r-2)K_{k+1}) + K̄_{n-(k+1)(r-2)}`.
pub fn satk_upper(n: usize, r: usize, k: usize) -> Result<Graph> {
    let core_n = (k + 1) * r.saturating_sub(2);
    if r < 3 || n < core_n {
        return Err(parameter(format!("sat_k graph needs r >= 3 and n >= (k+1)(r-2), got n={n}, r={r}, k={k}")));
    }
    let core = Graph::disjoint_cliques(r - 2, k + 1).complement();
    Ok(core.join(&Graph::empty(n - core_n)))
}

/// `K_3` with two edges in one colour.
pub fn lambda2() -> EdgeColoredGraph {
    EdgeColoredGraph::from_colored_edges(3, &[(0, 1, 0), (0, 2, 0), (1, 2, 1)])
}

/// `lambda2` joined to two independent vertices with fresh colours.
pub fn lambda3() -> EdgeColoredGraph {
    EdgeColoredGraph::complete_join(&lambda2(), &EdgeColoredGraph::empty(2), true).normalized()
}

/// Vertices `x=0, v1=1, v2=2, u1=3, u2=4`; non-edges `x v1`, `x v2`;
/// `v1 u1` and `v2 u2` share a colour, all other colours distinct.
pub fn lambda3_alt() -> EdgeColoredGraph {
    let mut g = EdgeColoredGraph::empty(5);
    let mut next = 1;
    for (u, v) in Graph::complete(5).edges() {
        match (u, v) {
            (0, 1) | (0, 2) => {}
            (1, 3) | (2, 4) => g.set_edge(u, v, ColorId(0)),
            _ => {
                g.set_edge(u, v, ColorId(next));
                next += 1;
            }
        }
    }
    g.normalized()
}

/// Smallest `t` with `(2t-1)^2 >= 4k-3`, i.e. `⌈(1+√(4k-3))/2⌉`.
fn subdivision_t(k: usize) -> usize {
    let target = 4 * k - 3;
    let mut t = 1;
    while (2 * t - 1) * (2 * t - 1) < target {
        t += 1;
    }
    t
}

/// Vertex count `k + ⌈(-1+√(4k-3))/2⌉` of [`subdivision_gamma`].
pub fn subdivision_order(k: usize) -> usize {
    k + subdivision_t(k) - 1
}

/// `K_t` with `m` edges subdivided twice and `ℓ` once, the end edges of each
/// path sharing a colour private to the path, completed with unique colours.
pub fn subdivision_gamma(k: usize) -> Result<EdgeColoredGraph> {
    if k < 4 {
        return Err(parameter(format!("subdivision construction needs k >= 4, got {k}")));
    }
    let t = subdivision_t(k);
    let pairs = t * (t - 1) / 2;
    let ell = 2 * pairs - (k - 1);
    let twice = (k - 1 - ell) / 2;
    let n = t + k - 1;
    let mut g = EdgeColoredGraph::empty(n);
    let mut next_vertex = t;
    let mut next_color = 0u32;
    let fresh = |g: &mut EdgeColoredGraph, u: usize, v: usize, c: &mut u32| {
        g.set_edge(u, v, ColorId(*c));
        *c += 1;
    };
    for (i, (x, y)) in Graph::complete(t).edges().enumerate() {
        let path_color = ColorId(next_color);
        next_color += 1;
        if i < twice {
            let (s1, s2) = (next_vertex, next_vertex + 1);
            next_vertex += 2;
            g.set_edge(x, s1, path_color);
            g.set_edge(s2, y, path_color);
            fresh(&mut g, s1, s2, &mut next_color);
        } else {
            let s = next_vertex;
            next_vertex += 1;
            g.set_edge(x, s, path_color);
            g.set_edge(s, y, path_color);
        }
    }
    debug_assert_eq!(next_vertex, n);
    let missing: Vec<_> = g.non_edges().collect();
    for (u, v) in missing {
        fresh(&mut g, u, v, &mut next_color);
    }
    Ok(g.normalized())
}

/// Default `F̂_{r-2}` core of [`gamma_rn`].
pub fn default_core(r: usize) -> Result<EdgeColoredGraph> {
    match r {
        0..=2 => Err(parameter(format!("Γ_(r,n) needs r >= 3, got {r}"))),
        3 => Ok(EdgeColoredGraph::empty(2)),
        4 => Ok(lambda2()),
        5 => Ok(lambda3()),
        _ => subdivision_gamma(r - 2),
    }
}

/// Adds non-edges greedily, in lexicographic order of (edge, colour) with
/// present colours before a fresh one, whenever no rainbow `K_{k+1}` appears.
/// One pass suffices: a pair rejected once stays rejected as edges are added.
pub fn complete_to_saturation(core: &EdgeColoredGraph, k: usize) -> EdgeColoredGraph {
    let mut g = core.clone();
    let pairs: Vec<_> = g.non_edges().collect();
    for e in pairs {
        let mut candidates: Vec<u32> = g.colors().into_iter().map(|c| c.0).collect();
        candidates.push(g.fresh_color().0);
        if let Some(c) = candidates.into_iter().find(|&c| !addition_creates(&g, k + 1, e, c)) {
            g.set_edge(e.0, e.1, ColorId(c));
        }
    }
    g
}

/// `Γ_{r,n}`: an `ℛ(K_{r-1})`-saturated member of `F̂_{r-2}` joined to an
/// independent set, every cross edge in its own colour.
pub fn gamma_rn(r: usize, n: usize, core: Option<&EdgeColoredGraph>) -> Result<EdgeColoredGraph> {
    let core = match core {
        None => default_core(r)?,
        Some(c) => {
            if r < 3 {
                return Err(parameter(format!("Γ_(r,n) needs r >= 3, got {r}")));
            }
            if !in_family_Fhat(c, r - 2)?.verdict {
                return Err(Error::Input(format!("core is not a member of F-hat_{}", r - 2)));
            }
            complete_to_saturation(c, r - 2)
        }
    };
    let f = core.vertex_count();
    if n < f + 2 {
        return Err(parameter(format!("Γ_(r,n) with this core needs n >= {}, got {n}", f + 2)));
    }
    Ok(EdgeColoredGraph::complete_join(&core, &EdgeColoredGraph::empty(n - f), true).normalized())
}

/// `Λ'_3` extended by two vertices and `n - 7` vertices joined to it.
pub fn alt_k5(n: usize) -> Result<EdgeColoredGraph> {
    if n < 9 {
        return Err(parameter(format!("alternative K_5 construction needs n >= 9, got {n}")));
    }
    let base = lambda3_alt();
    let mut g = EdgeColoredGraph::empty(n);
    for (u, v, c) in base.edges() {
        g.set_edge(u, v, c);
    }
    let mut next = base.fresh_color().0;
    let mut fresh = || {
        next += 1;
        ColorId(next - 1)
    };
    let (v1, v2, u1, u2, z1, z2) = (1, 2, 3, 4, 5, 6);
    let zv = fresh();
    let zu = fresh();
    g.set_edge(z1, v1, zv);
    g.set_edge(z2, v2, zv);
    g.set_edge(z1, u1, zu);
    g.set_edge(z2, u2, zu);
    g.set_edge(z1, z2, fresh());
    for z in [z1, z2] {
        for w in 0..5 {
            if !g.has_edge(z, w) {
                g.set_edge(z, w, fresh());
            }
        }
    }
    for extra in 7..n {
        for w in 0..5 {
            g.set_edge(extra, w, fresh());
        }
    }
    Ok(g.normalized())
}

/// Renames colours so that `red` becomes 0 and the others follow in
/// first-occurrence order.
fn normalized_with_red(g: &EdgeColoredGraph, red: ColorId) -> EdgeColoredGraph {
    let mut map = std::collections::HashMap::new();
    map.insert(red.0, 0u32);
    let mut next = 1;
    g.recolor(|c| {
        ColorId(*map.entry(c.0).or_insert_with(|| {
            next += 1;
            next - 1
        }))
    })
}

/// The graph `Λ'_r` with exactly one non-edge, which cannot be added in any
/// colour. Edge `0-1` is red.
pub fn nonstab_lambda(r: usize) -> Result<EdgeColoredGraph> {
    if r < 3 {
        return Err(parameter(format!("non-stability gadget needs r >= 3, got {r}")));
    }
    if r == 3 {
        // Five vertices a..e = 0..4; the missing pair is b-d.
        let (red, blue, green) = (0, 1, 2);
        return Ok(EdgeColoredGraph::from_colored_edges(
            5,
            &[
                (0, 1, red),
                (1, 2, red),
                (0, 3, blue),
                (3, 4, blue),
                (2, 4, green),
                (1, 4, green),
                (2, 3, green),
                (0, 4, green),
                (0, 2, green),
            ],
        ));
    }
    // Cliques A = {0, 2..r-2} and B = {1, r-1..2r-5}, joined to the
    // independent pair {2r-4, 2r-3}; A-B pairs are red.
    let s = r - 2;
    let side_a: Vec<usize> = std::iter::once(0).chain(2..s + 1).collect();
    let side_b: Vec<usize> = std::iter::once(1).chain(s + 1..2 * s).collect();
    let (p, q) = (2 * s, 2 * s + 1);
    let mut g = EdgeColoredGraph::empty(2 * s + 2);
    let mut next = 1;
    let mut fresh = || {
        next += 1;
        ColorId(next - 1)
    };
    for side in [&side_a, &side_b] {
        for (i, &a) in side.iter().enumerate() {
            for &b in &side[i + 1..] {
                g.set_edge(a, b, fresh());
            }
            g.set_edge(a, p, fresh());
            g.set_edge(a, q, fresh());
        }
    }
    for &a in &side_a {
        for &b in &side_b {
            g.set_edge(a, b, RED);
        }
    }
    Ok(normalized_with_red(&g, RED))
}

/// Adds `count` red dominant vertices.
fn with_dominant(g: &EdgeColoredGraph, count: usize) -> EdgeColoredGraph {
    let n = g.vertex_count();
    let mut out = EdgeColoredGraph::empty(n + count);
    for (u, v, c) in g.edges() {
        out.set_edge(u, v, c);
    }
    for d in n..n + count {
        for w in 0..d {
            out.set_edge(w, d, RED);
        }
    }
    out
}

/// `copies` disjoint copies of `Λ'_r`, pairwise joined in red.
fn red_joined_copies(r: usize, copies: usize) -> Result<EdgeColoredGraph> {
    let gadget = nonstab_lambda(r)?;
    let size = gadget.vertex_count();
    let mut g = EdgeColoredGraph::empty(size * copies);
    let shift = gadget.fresh_color().0 - 1;
    for i in 0..copies {
        for (u, v, c) in gadget.edges() {
            let c = if c == RED { RED } else { ColorId(c.0 + shift * i as u32) };
            g.set_edge(u + i * size, v + i * size, c);
        }
    }
    for i in 0..copies {
        for j in i + 1..copies {
            for u in 0..size {
                for v in 0..size {
                    g.set_edge(i * size + u, j * size + v, RED);
                }
            }
        }
    }
    Ok(g)
}

/// The base `Γ_{r,n'}` with colours shifted past red, plus `x` groups of
/// three red-cliqued copies and `y` red twins of independent vertices.
fn case_one(r: usize, base_n: usize, x: usize, y: usize) -> Result<EdgeColoredGraph> {
    let base = gamma_rn(r, base_n, None)?.recolor(|c| ColorId(c.0 + 1));
    let f = default_core(r)?.vertex_count();
    let mut g = EdgeColoredGraph::empty(base_n + 3 * x + y);
    for (u, v, c) in base.edges() {
        g.set_edge(u, v, c);
    }
    let mut next = base_n;
    let copy_of = |g: &mut EdgeColoredGraph, v: usize, u: usize| {
        for s in 0..f {
            let c = g.color(v, s).expect("independent vertices see the whole core");
            g.set_edge(u, s, c);
        }
    };
    for i in 0..x {
        let v = f + i;
        let group = [v, next, next + 1, next + 2];
        next += 3;
        for &u in &group[1..] {
            copy_of(&mut g, v, u);
        }
        for (j, &a) in group.iter().enumerate() {
            for &b in &group[j + 1..] {
                g.set_edge(a, b, RED);
            }
        }
    }
    for i in 0..y {
        let v = f + x + i;
        let twin = next;
        next += 1;
        copy_of(&mut g, v, twin);
        g.set_edge(v, twin, RED);
    }
    Ok(g)
}

fn self_verified(g: EdgeColoredGraph, r: usize, m: usize) -> Option<EdgeColoredGraph> {
    (g.edge_count() == m && is_rainbow_saturated(&g, r).map(|rep| rep.verdict).unwrap_or(false)).then_some(g)
}

/// Red join of two graphs with their non-red colours kept apart.
fn red_join(a: &EdgeColoredGraph, b: &EdgeColoredGraph) -> EdgeColoredGraph {
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let shift = a.fresh_color().0.max(1);
    let mut g = EdgeColoredGraph::empty(na + nb);
    for (u, v, c) in a.edges() {
        g.set_edge(u, v, c);
    }
    for (u, v, c) in b.edges() {
        let c = if c == RED { RED } else { ColorId(c.0 + shift) };
        g.set_edge(na + u, na + v, c);
    }
    for u in 0..na {
        for v in na..na + nb {
            g.set_edge(u, v, RED);
        }
    }
    g
}

/// An `n`-vertex, `m`-edge `ℛ(K_r)`-saturated graph, built by the
/// non-stability constructions and checked before it is returned.
///
/// Tried in order: `Γ_{r,n}` itself when `m` is its edge count; red-joined
/// copies of `Λ'_r` plus red dominant vertices; the base-plus-copies
/// construction over every base order `N` and extension size `a` that fit in
/// `n` vertices; and finally the red join of two graphs built by the
/// previous steps, which stays saturated because any clique meeting both
/// sides uses two red edges.
pub fn nonstab_assemble(r: usize, n: usize, m: usize) -> Result<EdgeColoredGraph> {
    let (f, floor, total) = nonstab_range(r, n)?;
    if m < floor || m > total {
        return Err(parameter(format!("m must lie in [{floor}, {total}] for n={n}, r={r}")));
    }
    if let Some(g) = nonstab_direct(r, n, m)? {
        return Ok(g);
    }
    for a in f + 2..=n / 2 {
        let b = n - a;
        let (_, floor_a, total_a) = nonstab_range(r, a)?;
        let (_, floor_b, total_b) = nonstab_range(r, b)?;
        for m1 in floor_a..=total_a {
            let Some(m2) = m.checked_sub(m1 + a * b) else {
                break;
            };
            if m2 < floor_b || m2 > total_b {
                continue;
            }
            let (Some(ga), Some(gb)) = (nonstab_direct(r, a, m1)?, nonstab_direct(r, b, m2)?) else {
                continue;
            };
            if let Some(g) = self_verified(normalized_with_red(&red_join(&ga, &gb), RED), r, m) {
                return Ok(g);
            }
        }
    }
    Err(Error::Infeasible(format!(
        "no verified non-stability construction with n={n}, m={m} for r={r} ({} missing edges)",
        total - m
    )))
}

/// `(f, least m, C(n,2))` for the constructions on `n` vertices.
fn nonstab_range(r: usize, n: usize) -> Result<(usize, usize, usize)> {
    let core = default_core(r)?;
    let f = core.vertex_count();
    if n < f + 2 {
        return Err(parameter(format!("n must be at least {} for r={r}", f + 2)));
    }
    Ok((f, core.edge_count() + f * (n - f), n * (n - 1) / 2))
}

fn nonstab_direct(r: usize, n: usize, m: usize) -> Result<Option<EdgeColoredGraph>> {
    let core = default_core(r)?;
    let f = core.vertex_count();
    let beta = core.edge_count();
    let floor = beta + f * (n - f);
    let missing = n * (n - 1) / 2 - m;

    if m == floor {
        if let Some(g) = self_verified(gamma_rn(r, n, None)?, r, m) {
            return Ok(Some(g));
        }
    }

    let gadget = nonstab_lambda(r)?.vertex_count();
    if missing * gadget <= n {
        let g = with_dominant(&red_joined_copies(r, missing)?, n - missing * gadget);
        if let Some(g) = self_verified(normalized_with_red(&g, RED), r, m) {
            return Ok(Some(g));
        }
    }

    for big_n in (f + 2..=n).rev() {
        let e_r = binomial(big_n as u64, 2) as usize - f * (big_n - f) - beta;
        for a in 0..=n - big_n {
            let ceiling = e_r + a * (big_n - f) + a * a.saturating_sub(1) / 2;
            if ceiling < missing {
                continue;
            }
            let b = ceiling - missing;
            for x in (0..=b / 6).rev() {
                let y = b - 6 * x;
                let Some(base_n) = (big_n + a).checked_sub(3 * x + y) else {
                    continue;
                };
                if base_n < f + 2 || x + y > base_n - f {
                    continue;
                }
                let g = with_dominant(&case_one(r, base_n, x, y)?, n - big_n - a);
                if let Some(g) = self_verified(normalized_with_red(&g, RED), r, m) {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}
