//! Saturation, semisaturation and weak saturation checks.

use rayon::prelude::*;

use crate::error::{parameter, Error, Result};
use crate::graph::{binomial, ColorId, Edge, EdgeColoredGraph, Graph};
use crate::rainbow::{contains_rainbow_clique, find_rainbow_clique, RainbowCliqueQuery};
use crate::report::{ColorChoice, VerificationReport, Witness};
use crate::subgraph::{contains_subgraph, find_embedding, PatternGraph};

/// Default cap on elementary membership tests for the exchange checks.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Non-edge bound for the weak-saturation check.
pub const MAX_WEAK_NON_EDGES: usize = 7;

/// Colours present plus one absent colour.
pub fn candidate_colors(g: &EdgeColoredGraph) -> Vec<ColorId> {
    let mut cs = g.colors();
    cs.push(g.fresh_color());
    cs
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(parameter(format!("clique order r must be at least 2, got {r}")));
    }
    Ok(())
}

pub fn is_rfree(g: &EdgeColoredGraph, r: usize) -> VerificationReport {
    let found = contains_rainbow_clique(g, &RainbowCliqueQuery::new(r));
    if found.verdict {
        VerificationReport::fails(found.witness)
    } else {
        VerificationReport::holds(Witness::Holds)
    }
}

/// Whether `g + uv` with `uv` coloured `c` has a rainbow `K_r` through `uv`.
pub(crate) fn addition_creates(g: &EdgeColoredGraph, r: usize, (u, v): Edge, c: u32) -> bool {
    find_rainbow_clique(g, r, &[u, v], &[c], g.graph().vertices(), None).is_some()
}

/// The least `(non-edge, colour)` whose addition creates no rainbow `K_r`.
///
/// One search with an absent colour settles every colour outside the found
/// clique's palette; only colours inside it are retried individually.
fn first_failing_addition(g: &EdgeColoredGraph, r: usize) -> Option<(Edge, ColorChoice)> {
    let colors = g.colors();
    let fresh = g.fresh_color().0;
    let all = g.graph().vertices();
    for (u, v) in g.non_edges() {
        let Some(clique) = find_rainbow_clique(g, r, &[u, v], &[fresh], all, None) else {
            let least = colors.first().map_or(ColorChoice::Fresh, |&c| ColorChoice::Existing(c));
            return Some(((u, v), least));
        };
        let mut palette: Vec<u32> = Vec::new();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                if (a, b) != (u, v) {
                    palette.push(g.raw_color(a, b));
                }
            }
        }
        for &c in &colors {
            if palette.contains(&c.0) && !addition_creates(g, r, (u, v), c.0) {
                return Some(((u, v), ColorChoice::Existing(c)));
            }
        }
    }
    None
}

/// ℛ(K_r)-free, and adding any non-edge in any colour creates a rainbow `K_r`.
pub fn is_rainbow_saturated(g: &EdgeColoredGraph, r: usize) -> Result<VerificationReport> {
    check_r(r)?;
    let free = is_rfree(g, r);
    if !free.verdict {
        return Ok(free);
    }
    is_rainbow_semisaturated(g, r)
}

/// Adding any non-edge in any colour creates a rainbow `K_r` through it.
pub fn is_rainbow_semisaturated(g: &EdgeColoredGraph, r: usize) -> Result<VerificationReport> {
    check_r(r)?;
    Ok(match first_failing_addition(g, r) {
        Some((edge, color)) => VerificationReport::fails(Witness::ColoredAddition { edge, color }),
        None => VerificationReport::holds(Witness::Holds),
    })
}

/// Saturation checked colour by colour against the present colours plus
/// `fresh` distinct absent colours, with no shortcut.
pub fn is_rainbow_saturated_with_fresh(
    g: &EdgeColoredGraph,
    r: usize,
    fresh: usize,
) -> Result<VerificationReport> {
    check_r(r)?;
    let free = is_rfree(g, r);
    if !free.verdict {
        return Ok(free);
    }
    let colors = g.colors();
    let base = g.fresh_color().0;
    for e in g.non_edges() {
        for &c in &colors {
            if !addition_creates(g, r, e, c.0) {
                return Ok(VerificationReport::fails(Witness::ColoredAddition {
                    edge: e,
                    color: ColorChoice::Existing(c),
                }));
            }
        }
        for i in 0..fresh as u32 {
            if !addition_creates(g, r, e, base + i) {
                return Ok(VerificationReport::fails(Witness::ColoredAddition {
                    edge: e,
                    color: ColorChoice::Fresh,
                }));
            }
        }
    }
    Ok(VerificationReport::holds(Witness::Holds))
}

/// Weak rainbow saturation: some ordering of the non-edges such that, for
/// every list of pairwise distinct colours, adding the non-edges in that
/// order creates a new rainbow `K_r` at every step.
///
/// Assignments are enumerated up to renaming of the absent colours, so at
/// each step the choices are the unused present colours and one new absent
/// colour.
pub fn is_weakly_rainbow_saturated(g: &EdgeColoredGraph, r: usize) -> Result<VerificationReport> {
    is_weakly_rainbow_saturated_within(g, r, DEFAULT_BUDGET)
}

pub fn is_weakly_rainbow_saturated_within(
    g: &EdgeColoredGraph,
    r: usize,
    budget: u64,
) -> Result<VerificationReport> {
    check_r(r)?;
    let non_edges: Vec<Edge> = g.non_edges().collect();
    let t = non_edges.len();
    if t > MAX_WEAK_NON_EDGES {
        return Err(Error::Resource(format!(
            "weak saturation check needs at most {MAX_WEAK_NON_EDGES} non-edges, got {t}"
        )));
    }
    let mut weak = Weak {
        base: g.clone(),
        r,
        non_edges: &non_edges,
        colors: g.colors().into_iter().map(|c| c.0).collect(),
        fresh_start: g.fresh_color().0,
        memo: vec![None; 1 << t],
        spent: 0,
        budget,
    };
    match weak.good((1usize << t) - 1)? {
        Some(order) => Ok(VerificationReport::holds(Witness::Ordering(
            order.into_iter().map(|i| non_edges[i]).collect(),
        ))),
        None => Ok(VerificationReport::fails(Witness::Note(format!(
            "no ordering of the {t} non-edges works"
        )))),
    }
}

struct Weak<'a> {
    base: EdgeColoredGraph,
    r: usize,
    non_edges: &'a [Edge],
    colors: Vec<u32>,
    fresh_start: u32,
    memo: Vec<Option<Option<Vec<usize>>>>,
    spent: u64,
    budget: u64,
}

impl Weak<'_> {
    /// An ordering of the non-edges in `set` that works, if any. Whether a
    /// step succeeds depends only on which edges precede it (all their
    /// colourings are quantified over), so this is a subset recursion.
    fn good(&mut self, set: usize) -> Result<Option<Vec<usize>>> {
        if set == 0 {
            return Ok(Some(Vec::new()));
        }
        if let Some(known) = &self.memo[set] {
            return Ok(known.clone());
        }
        let mut result = None;
        for last in 0..self.non_edges.len() {
            if set >> last & 1 == 0 {
                continue;
            }
            let rest = set & !(1 << last);
            let Some(mut order) = self.good(rest)? else {
                continue;
            };
            if self.last_step_always_works(rest, last)? {
                order.push(last);
                result = Some(order);
                break;
            }
        }
        self.memo[set] = Some(result.clone());
        Ok(result)
    }

    fn last_step_always_works(&mut self, earlier: usize, last: usize) -> Result<bool> {
        let edges: Vec<usize> = (0..self.non_edges.len())
            .filter(|&i| earlier >> i & 1 == 1)
            .chain(std::iter::once(last))
            .collect();
        let mut g = self.base.clone();
        let mut used = Vec::new();
        self.assign(&mut g, &edges, 0, &mut used, self.fresh_start)
    }

    fn assign(
        &mut self,
        g: &mut EdgeColoredGraph,
        edges: &[usize],
        i: usize,
        used: &mut Vec<u32>,
        next_fresh: u32,
    ) -> Result<bool> {
        if i == edges.len() {
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::Budget {
                    partial: format!("weak saturation undecided after {} colourings", self.budget),
                });
            }
            let (u, v) = self.non_edges[edges[i - 1]];
            let c = g.raw_color(u, v);
            g.remove_edge(u, v);
            let ok = addition_creates(g, self.r, (u, v), c);
            g.set_edge(u, v, ColorId(c));
            return Ok(ok);
        }
        let (u, v) = self.non_edges[edges[i]];
        let mut choices: Vec<u32> = self.colors.iter().copied().filter(|c| !used.contains(c)).collect();
        choices.push(next_fresh);
        for c in choices {
            g.set_edge(u, v, ColorId(c));
            used.push(c);
            let nf = if c == next_fresh { next_fresh + 1 } else { next_fresh };
            let ok = self.assign(g, edges, i + 1, used, nf)?;
            used.pop();
            g.remove_edge(u, v);
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn embeds_through_any(g: &Graph, h: &PatternGraph, through: &[Edge]) -> bool {
    through.iter().any(|&e| find_embedding(g, h, Some(e)).is_some())
}

/// `H`-free, and adding any non-edge creates a copy of `H`.
pub fn is_sat(g: &Graph, h: &PatternGraph) -> VerificationReport {
    let existing = contains_subgraph(g, h);
    if existing.verdict {
        return VerificationReport::fails(existing.witness);
    }
    is_semisat(g, h)
}

/// Adding any non-edge creates a copy of `H` through it.
pub fn is_semisat(g: &Graph, h: &PatternGraph) -> VerificationReport {
    let mut work = g.clone();
    for e in g.non_edges() {
        work.add_edge(e.0, e.1);
        let ok = embeds_through_any(&work, h, &[e]);
        work.remove_edge(e.0, e.1);
        if !ok {
            return VerificationReport::fails(Witness::Addition(e));
        }
    }
    VerificationReport::holds(Witness::Holds)
}

fn k_subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec<T: Copy>(items: &[T], k: usize, from: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order until it
/// returns `false`; returns whether all calls returned `true`.
fn all_k_subsets<T: Copy>(items: &[T], k: usize, mut f: impl FnMut(&[T]) -> bool) -> bool {
    fn rec<T: Copy>(items: &[T], k: usize, from: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in from..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            let ok = rec(items, k, i + 1, cur, f);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), &mut f)
}

pub fn is_k_sat(g: &Graph, h: &PatternGraph, k: usize) -> Result<VerificationReport> {
    is_k_sat_within(g, h, k, DEFAULT_BUDGET)
}

/// `(H, k)`-saturation: `H`-free, and removing any `k` edges then adding any
/// `k + 1` pairs absent from the result (removed edges may come back)
/// creates a copy of `H`.
///
/// `(H, k)`-saturation implies `(H, l)`-saturation for `l < k` once there are
/// `k` edges to remove; with fewer edges the level-`k` condition is vacuous,
/// so the deepest level that is not is checked instead.
pub fn is_k_sat_within(g: &Graph, h: &PatternGraph, k: usize, budget: u64) -> Result<VerificationReport> {
    let existing = contains_subgraph(g, h);
    if existing.verdict {
        return Ok(VerificationReport::fails(existing.witness));
    }
    let m = g.edge_count();
    let k = k.min(m);
    if k > 0 && m > 64 {
        return Err(Error::Resource(format!("exchange check limited to 64 edges, got {m}")));
    }
    let pool = g.non_edges().count() + k;
    let work = binomial(m as u64, k as u64).saturating_mul(binomial(pool as u64, k as u64 + 1));
    if work > budget {
        return Err(Error::Resource(format!(
            "exchange check needs {work} membership tests, budget is {budget}"
        )));
    }
    let edges: Vec<Edge> = g.edges().collect();
    let removals = k_subsets(&edges, k);
    let witness = removals.par_iter().find_map_first(|removed| {
        let mut base = g.clone();
        for &(u, v) in removed {
            base.remove_edge(u, v);
        }
        let absent: Vec<Edge> = base.non_edges().collect();
        let mut found = None;
        all_k_subsets(&absent, k + 1, |added| {
            let mut work = base.clone();
            for &(u, v) in added {
                work.add_edge(u, v);
            }
            if embeds_through_any(&work, h, added) {
                true
            } else {
                found = Some(added.to_vec());
                false
            }
        });
        found.map(|added| Witness::Exchange {
            removed: removed.clone(),
            added,
        })
    });
    Ok(match witness {
        Some(w) => VerificationReport::fails(w),
        None => VerificationReport::holds(Witness::Holds),
    })
}

/// `k = 0`: semisaturation. `k = 1`: additionally, removing any edge and
/// adding any two pairs absent from the result creates a copy of `H` through
/// one of the added pairs that was not an edge to begin with.
pub fn is_k_semisat(g: &Graph, h: &PatternGraph, k: usize) -> Result<VerificationReport> {
    if k > 1 {
        return Err(parameter(format!("k-semisaturation is defined for k in {{0, 1}}, got {k}")));
    }
    let semi = is_semisat(g, h);
    if !semi.verdict || k == 0 {
        return Ok(semi);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let witness = edges.par_iter().find_map_first(|&e| {
        let mut base = g.clone();
        base.remove_edge(e.0, e.1);
        let absent: Vec<Edge> = base.non_edges().collect();
        let mut found = None;
        all_k_subsets(&absent, 2, |added| {
            let mut work = base.clone();
            for &(u, v) in added {
                work.add_edge(u, v);
            }
            let new: Vec<Edge> = added.iter().copied().filter(|&a| a != e).collect();
            if embeds_through_any(&work, h, &new) {
                true
            } else {
                found = Some(added.to_vec());
                false
            }
        });
        found.map(|added| Witness::Exchange {
            removed: vec![e],
            added,
        })
    });
    Ok(match witness {
        Some(w) => VerificationReport::fails(w),
        None => VerificationReport::holds(Witness::Holds),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rainbow(g: &Graph) -> EdgeColoredGraph {
        EdgeColoredGraph::rainbow(g)
    }

    fn lambda2() -> EdgeColoredGraph {
        EdgeColoredGraph::from_colored_edges(3, &[(0, 1, 0), (0, 2, 0), (1, 2, 1)])
    }

    #[test]
    fn candidate_color_examples() {
        let g = EdgeColoredGraph::from_colored_edges(3, &[(0, 1, 0), (1, 2, 1)]);
        assert_eq!(candidate_colors(&g), vec![ColorId(0), ColorId(1), ColorId(2)]);
        assert_eq!(candidate_colors(&EdgeColoredGraph::empty(3)), vec![ColorId(0)]);
        assert_eq!(candidate_colors(&lambda2()), vec![ColorId(0), ColorId(1), ColorId(2)]);
    }

    #[test]
    fn rainbow_saturation_examples() {
        let c4 = rainbow(&Graph::cycle(4));
        assert!(is_rainbow_saturated(&c4, 3).unwrap().verdict);
        let star = rainbow(&Graph::star(3));
        let r = is_rainbow_saturated(&star, 3).unwrap();
        assert!(!r.verdict);
        // Replay: adding 1-2 in colour 0 (the colour of 0-1) leaves no rainbow triangle.
        assert_eq!(
            r.witness,
            Witness::ColoredAddition {
                edge: (1, 2),
                color: ColorChoice::Existing(ColorId(0))
            }
        );
        assert!(!addition_creates(&star, 3, (1, 2), 0));
        assert!(!is_rfree(&rainbow(&Graph::complete(4)), 4).verdict);
        assert!(is_rainbow_saturated(&EdgeColoredGraph::empty(2), 2).unwrap().verdict);
        assert!(is_rainbow_saturated(&c4, 1).is_err());
    }

    #[test]
    fn semisaturation_examples() {
        let g48 = rainbow(&Graph::complete(3).join(&Graph::empty(5)));
        assert!(is_rainbow_semisaturated(&g48, 4).unwrap().verdict);
        let k28 = rainbow(&Graph::complete_bipartite(2, 6));
        assert!(is_rainbow_semisaturated(&k28, 3).unwrap().verdict);
        assert!(!is_rainbow_semisaturated(&EdgeColoredGraph::empty(5), 3).unwrap().verdict);
    }

    #[test]
    fn weak_saturation_examples() {
        let g46 = rainbow(&Graph::complete(3).join(&Graph::empty(3)));
        let r = is_weakly_rainbow_saturated(&g46, 4).unwrap();
        assert!(r.verdict);
        assert!(is_weakly_rainbow_saturated(&rainbow(&Graph::complete(5)), 3).unwrap().verdict);
        assert!(!is_weakly_rainbow_saturated(&EdgeColoredGraph::empty(4), 3).unwrap().verdict);
        let too_many = rainbow(&Graph::complete(3).join(&Graph::empty(5)));
        assert!(matches!(
            is_weakly_rainbow_saturated(&too_many, 4),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn weak_needs_the_right_order() {
        // Path 0-1-2-3 in distinct colours: adding 0-2 first creates a
        // rainbow triangle, and so on; some orders fail, some succeed.
        let p = rainbow(&Graph::path(4));
        let r = is_weakly_rainbow_saturated(&p, 3).unwrap();
        assert!(!r.verdict, "0-3 can never close a triangle before a chord exists");
        let c4 = rainbow(&Graph::cycle(4));
        assert!(is_weakly_rainbow_saturated(&c4, 3).unwrap().verdict);
    }

    #[test]
    fn plain_saturation_examples() {
        let k3 = PatternGraph::clique(3);
        assert!(is_sat(&Graph::star(4), &k3).verdict);
        assert!(is_sat(&Graph::cycle(5), &k3).verdict);
        assert!(!is_sat(&Graph::complete(4), &k3).verdict);
    }

    #[test]
    fn exchange_examples() {
        let k4 = PatternGraph::clique(4);
        let gp = Graph::cycle(4).join(&Graph::empty(5));
        assert!(is_k_sat(&gp, &k4, 1).unwrap().verdict);

        let k3 = PatternGraph::clique(3);
        let satk = Graph::empty(6).join(&Graph::empty(3));
        assert!(is_k_sat(&satk, &k3, 2).unwrap().verdict);

        // Too few edges to remove: the check falls back to plain saturation.
        assert!(!is_k_sat(&Graph::empty(4), &k3, 1).unwrap().verdict);
        assert!(!is_k_sat(&Graph::from_edges(4, &[(0, 1)]), &k3, 2).unwrap().verdict);

        let r = is_k_sat(&Graph::star(5), &k3, 1).unwrap();
        assert!(!r.verdict);
        if let Witness::Exchange { removed, added } = &r.witness {
            let mut g = Graph::star(5);
            for &(u, v) in removed {
                g.remove_edge(u, v);
            }
            for &(u, v) in added {
                assert!(!g.has_edge(u, v));
                g.add_edge(u, v);
            }
            assert!(!contains_subgraph(&g, &k3).verdict);
        } else {
            panic!("{:?}", r.witness);
        }
        assert!(matches!(is_k_sat_within(&gp, &k4, 1, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn semisat_exchange_examples() {
        let k4 = PatternGraph::clique(4);
        let g49 = Graph::complete(3).join(&Graph::empty(6));
        assert!(is_k_semisat(&g49, &k4, 1).unwrap().verdict);
        let k3 = PatternGraph::clique(3);
        assert!(is_k_semisat(&Graph::complete_bipartite(2, 7), &k3, 1).unwrap().verdict);
        assert!(!is_k_semisat(&Graph::path(4), &k3, 0).unwrap().verdict);
        assert!(is_k_semisat(&Graph::path(4), &k3, 2).is_err());
    }
}
