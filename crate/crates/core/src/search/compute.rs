//! The searches behind f(k), g(k), g′(k) and the small saturation numbers.

use std::time::Instant;

use rayon::prelude::*;

use super::record::{pattern_name, Bound, Quantity, ResultRecord};
use super::{enumerate_colorings_pruned, enumerate_graphs, GraphFilter, SearchBudget, MAX_COLORING_EDGES};
use crate::canon::{colored_code, graph_code, CanonicalCode};
use crate::error::{parameter, Error, Result};
use crate::family::in_family_Fhat;
use crate::graph::{binomial, EdgeColoredGraph, Graph};
use crate::io::AnyGraph;
use crate::rainbow::{clique_number, rainbow_clique_through};
use crate::subgraph::PatternGraph;
use crate::verify::{is_k_sat, is_k_semisat, is_rainbow_saturated, is_sat, is_semisat};

struct Member {
    graph: EdgeColoredGraph,
    code: CanonicalCode,
    saturated: bool,
}

/// Members of `F̂_k` on exactly `n` vertices, one per isomorphism class.
///
/// A member of least order has every vertex in a rainbow `K_k` (a vertex in
/// none could be deleted), so only graphs of minimum degree `k - 1`
/// containing `K_k` are coloured.
fn members_on(k: usize, n: usize, budget: &SearchBudget) -> Result<Vec<Member>> {
    let filter = GraphFilter::new()
        .min_degree(k - 1)
        .last_level(move |g| clique_number(g) >= k);
    let graphs = enumerate_graphs(n, &filter, budget)?;
    let per_graph: Vec<Vec<Member>> = graphs
        .par_iter()
        .map(|g| -> Result<Vec<Member>> {
            budget.check_time()?;
            let colorings = enumerate_colorings_pruned(g, |p, e| rainbow_clique_through(p, k + 1, e).is_none())?;
            let mut out = Vec::new();
            for c in colorings {
                if in_family_Fhat(&c, k)?.verdict {
                    let saturated = is_rainbow_saturated(&c, k + 1)?.verdict;
                    out.push(Member {
                        code: colored_code(&c),
                        graph: c,
                        saturated,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}

fn least<'a>(members: impl Iterator<Item = &'a Member>) -> Option<&'a Member> {
    members.min_by(|a, b| (a.graph.edge_count(), &a.code).cmp(&(b.graph.edge_count(), &b.code)))
}

/// `f(k)`, `g(k)` and `g′(k)` from a single scan. The last two are `None`
/// when no member exists within `n_max` vertices, in which case the first is
/// a lower-bound record.
pub fn compute_f_g_gprime(
    k: usize,
    n_max: usize,
    budget: &SearchBudget,
) -> Result<(ResultRecord, Option<(ResultRecord, ResultRecord)>)> {
    if k == 0 {
        return Err(parameter("f(k) needs k >= 1"));
    }
    let start = Instant::now();
    // f(k) >= k + 1, and f(k) >= k + 2 once k >= 3.
    let lower = if k >= 3 { k + 2 } else { k + 1 };
    let kp = || vec![("k", k.to_string())];
    for n in lower..=n_max {
        let members = members_on(k, n, budget)?;
        let Some(first) = members.iter().min_by(|a, b| a.code.cmp(&b.code)) else {
            continue;
        };
        let elapsed = start.elapsed();
        let f = ResultRecord::new(
            Quantity::F,
            kp(),
            n as u64,
            Bound::Exact,
            Some(AnyGraph::Colored(first.graph.clone())),
            elapsed,
        );
        let with_n = || {
            let mut p = kp();
            p.push(("n", n.to_string()));
            p
        };
        let sparse = least(members.iter()).expect("members is non-empty");
        let gprime = ResultRecord::new(
            Quantity::GPrime,
            with_n(),
            sparse.graph.edge_count() as u64,
            Bound::Exact,
            Some(AnyGraph::Colored(sparse.graph.clone())),
            elapsed,
        );
        let sat = least(members.iter().filter(|m| m.saturated)).ok_or_else(|| {
            Error::Infeasible(format!("no member of F-hat_{k} on {n} vertices is saturated"))
        })?;
        let g = ResultRecord::new(
            Quantity::G,
            with_n(),
            sat.graph.edge_count() as u64,
            Bound::Exact,
            Some(AnyGraph::Colored(sat.graph.clone())),
            elapsed,
        );
        return Ok((f, Some((g, gprime))));
    }
    let f = ResultRecord::new(
        Quantity::F,
        kp(),
        lower.max(n_max + 1) as u64,
        Bound::Lower,
        None,
        start.elapsed(),
    );
    Ok((f, None))
}

/// Least order of a member of `F̂_k`, searching up to `n_max` vertices.
pub fn compute_f(k: usize, n_max: usize, budget: &SearchBudget) -> Result<ResultRecord> {
    Ok(compute_f_g_gprime(k, n_max, budget)?.0)
}

/// `(g(k), g′(k))`; requires `f(k) <= 6`.
pub fn compute_g_gprime(k: usize, budget: &SearchBudget) -> Result<(ResultRecord, ResultRecord)> {
    match compute_f_g_gprime(k, 6, budget)? {
        (_, Some(pair)) => Ok(pair),
        (f, None) => Err(Error::Infeasible(format!(
            "f({k}) >= {} exceeds the search range",
            f.value
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatVariant {
    Plain,
    OneSat,
    OneSemisat,
    KSat(usize),
}

impl SatVariant {
    pub fn quantity(self) -> Quantity {
        match self {
            SatVariant::Plain => Quantity::Sat,
            SatVariant::OneSat => Quantity::Sat1,
            SatVariant::OneSemisat => Quantity::SSat1,
            SatVariant::KSat(_) => Quantity::SatK,
        }
    }

    pub(crate) fn holds(self, g: &Graph, h: &PatternGraph) -> Result<bool> {
        Ok(match self {
            SatVariant::Plain => is_sat(g, h).verdict,
            SatVariant::OneSat => is_k_sat(g, h, 1)?.verdict,
            SatVariant::OneSemisat => is_k_semisat(g, h, 1)?.verdict,
            SatVariant::KSat(k) => is_k_sat(g, h, k)?.verdict,
        })
    }

    fn needs_free(self) -> bool {
        self != SatVariant::OneSemisat
    }
}

/// Least edge count of an `n`-vertex graph passing the variant's verifier.
pub fn compute_sat(n: usize, h: &PatternGraph, variant: SatVariant, budget: &SearchBudget) -> Result<ResultRecord> {
    let start = Instant::now();
    for m in 0..=binomial(n as u64, 2) as usize {
        let mut filter = GraphFilter::new().exact_edges(m);
        if variant.needs_free() {
            filter = filter.free_of(h.clone());
        }
        let graphs = enumerate_graphs(n, &filter, budget)?;
        let hits: Vec<Option<(CanonicalCode, &Graph)>> = graphs
            .par_iter()
            .map(|g| -> Result<_> {
                budget.check_time()?;
                Ok(variant.holds(g, h)?.then(|| (graph_code(g), g)))
            })
            .collect::<Result<_>>()?;
        if let Some((_, best)) = hits.into_iter().flatten().min_by(|a, b| a.0.cmp(&b.0)) {
            let mut params = vec![("n", n.to_string()), ("h", pattern_name(h))];
            if let SatVariant::KSat(k) = variant {
                params.push(("k", k.to_string()));
            }
            return Ok(ResultRecord::new(
                variant.quantity(),
                params,
                m as u64,
                Bound::Exact,
                Some(AnyGraph::Plain(best.clone())),
                start.elapsed(),
            ));
        }
    }
    Err(Error::Infeasible(format!("no {n}-vertex graph passes the {variant:?} check")))
}

/// Least edge count of an `n`-vertex ℛ(K_r)-saturated coloured graph.
pub fn compute_sat_rainbow(n: usize, r: usize, budget: &SearchBudget) -> Result<ResultRecord> {
    if r < 2 {
        return Err(parameter("clique order r must be at least 2"));
    }
    let start = Instant::now();
    let kr = PatternGraph::clique(r);
    for m in 0..=binomial(n as u64, 2) as usize {
        // Underlying graphs of saturated colourings are K_r-semisaturated.
        let kr = kr.clone();
        let filter = GraphFilter::new()
            .exact_edges(m)
            .last_level(move |g| is_semisat(g, &kr).verdict);
        let graphs = enumerate_graphs(n, &filter, budget)?;
        if m > MAX_COLORING_EDGES && !graphs.is_empty() {
            return Err(Error::Budget {
                partial: format!("sat(n={n}, R(K{r})) >= {m}; colourings of {m} edges are beyond the search limit"),
            });
        }
        let hits: Vec<Vec<(CanonicalCode, EdgeColoredGraph)>> = graphs
            .par_iter()
            .map(|g| -> Result<_> {
                budget.check_time()?;
                let mut out = Vec::new();
                for c in enumerate_colorings_pruned(g, |p, e| rainbow_clique_through(p, r, e).is_none())? {
                    if is_rainbow_saturated(&c, r)?.verdict {
                        out.push((colored_code(&c), c));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        if let Some((_, best)) = hits.into_iter().flatten().min_by(|a, b| a.0.cmp(&b.0)) {
            return Ok(ResultRecord::new(
                Quantity::SatRainbow,
                vec![("n", n.to_string()), ("r", r.to_string())],
                m as u64,
                Bound::Exact,
                Some(AnyGraph::Colored(best)),
                start.elapsed(),
            ));
        }
    }
    Err(Error::Infeasible(format!("no {n}-vertex colouring is R(K{r})-saturated")))
}
