use rsat_core::construct::{ehm_graph, g_prime};
use rsat_core::search::{
    compute_f, compute_sat, compute_sat_rainbow, enumerate_colorings, enumerate_graphs, verify_record, Bound,
    GraphFilter, Quantity, ResultCache, ResultRecord, SatVariant, SearchBudget,
};
use rsat_core::{canonical_code, AnyGraph, Error, Graph, PatternGraph};
use std::time::Duration;

#[test]
fn one_saturation_at_eight_vertices() {
    let b = SearchBudget::default();
    let rec = compute_sat(8, &PatternGraph::clique(3), SatVariant::OneSat, &b).unwrap();
    assert_eq!(rec.quantity, Quantity::Sat1);
    // The closed form 2(r-2)(n-r+1) at r=3, n=8.
    assert_eq!(rec.value, 12);
    assert!(verify_record(&rec).unwrap().verdict);
}

#[test]
fn semisaturation_exchange_at_seven_vertices() {
    let b = SearchBudget::default();
    let rec = compute_sat(7, &PatternGraph::clique(3), SatVariant::OneSemisat, &b).unwrap();
    assert_eq!(rec.value, 10);
}

#[test]
fn plain_sat_matches_ehm_witness_count() {
    let b = SearchBudget::default();
    let rec = compute_sat(6, &PatternGraph::clique(4), SatVariant::Plain, &b).unwrap();
    assert_eq!(rec.value as usize, ehm_graph(6, 4).unwrap().edge_count());
}

#[test]
fn k_sat_search_uses_k() {
    let b = SearchBudget::default();
    let rec = compute_sat(6, &PatternGraph::clique(3), SatVariant::KSat(1), &b).unwrap();
    assert_eq!(rec.param("k"), Some("1"));
    let one = compute_sat(6, &PatternGraph::clique(3), SatVariant::OneSat, &b).unwrap();
    assert_eq!(rec.value, one.value);
    assert!(rec.value as usize <= g_prime(6, 3).unwrap().edge_count());
}

#[test]
fn records_are_reproducible() {
    let b = SearchBudget::default();
    let a = compute_sat_rainbow(5, 3, &b).unwrap();
    let c = compute_sat_rainbow(5, 3, &b).unwrap();
    assert_eq!(a.value, c.value);
    assert_eq!(a.witness, c.witness);
    let f1 = compute_f(3, 5, &b).unwrap();
    let f2 = compute_f(3, 5, &b).unwrap();
    assert_eq!(f1.witness, f2.witness);
}

#[test]
fn cache_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ResultCache::new(dir.path());
    let b = SearchBudget::default();
    let mut f = compute_f(3, 6, &b).unwrap();
    cache.store(&mut f).unwrap();
    let mut lower = compute_f(3, 4, &b).unwrap();
    assert_eq!(lower.bound, Bound::Lower);
    cache.store(&mut lower).unwrap();
    let loaded = cache.load().unwrap();
    assert_eq!(loaded.len(), 2);
    assert_eq!(loaded[0].value, 5);
    assert_eq!(loaded[0].witness, f.witness);
    assert_eq!(loaded[1].bound, Bound::Lower);
    let found = cache.lookup(Quantity::F, &[("k", "3")]).unwrap().unwrap();
    assert_eq!(found.bound, Bound::Lower);

    // Drop one edge from the stored witness: replay must fail.
    let path = dir.path().join(f.witness_path.as_ref().unwrap());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let header = lines[0].split_whitespace().collect::<Vec<_>>();
    let m: usize = header[2].parse().unwrap();
    let new_header = format!("ecg {} {}", header[1], m - 1);
    lines[0] = &new_header;
    lines.pop();
    std::fs::write(&path, lines.join("\n")).unwrap();
    assert!(matches!(cache.load(), Err(Error::Integrity(_))));

    std::fs::write(&path, "garbage").unwrap();
    assert!(matches!(cache.load(), Err(Error::Integrity(_))));
}

#[test]
fn tampered_record_replays_false() {
    let b = SearchBudget::default();
    let mut rec = compute_sat(5, &PatternGraph::clique(3), SatVariant::Plain, &b).unwrap();
    // Same size, not saturated: the end pair of a path closes no triangle.
    let g = Graph::path(5);
    rec.witness = Some(AnyGraph::Plain(g));
    assert!(!verify_record(&rec).unwrap().verdict);

    let wrong_value = ResultRecord::new(
        Quantity::Sat,
        vec![("n", "5".into()), ("h", "K3".into())],
        3,
        Bound::Exact,
        Some(AnyGraph::Plain(Graph::star(4))),
        Duration::ZERO,
    );
    assert!(!verify_record(&wrong_value).unwrap().verdict);
}

#[test]
fn enumeration_is_isomorphism_complete() {
    let b = SearchBudget::default();
    for n in 0..=6 {
        let graphs = enumerate_graphs(n, &GraphFilter::new(), &b).unwrap();
        let mut codes: Vec<_> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), graphs.len());
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Orbits of edge partitions under every vertex permutation, by taking the
/// least normalised image of each growth string.
fn orbit_count(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let perms: Vec<Vec<usize>> = permutations(g.vertex_count())
        .into_iter()
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .collect();
    let mut strings = vec![Vec::<u32>::new()];
    for _ in 0..edges.len() {
        strings = strings
            .into_iter()
            .flat_map(|s| {
                let top = s.iter().max().map_or(0, |&x| x + 1);
                (0..=top).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    let mut reps = std::collections::BTreeSet::new();
    for s in &strings {
        let least = perms
            .iter()
            .map(|p| {
                let mut image = vec![0u32; edges.len()];
                for (i, &(u, v)) in edges.iter().enumerate() {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    image[edges.iter().position(|&e| e == (a, b)).unwrap()] = s[i];
                }
                let mut rename = std::collections::HashMap::new();
                image
                    .iter()
                    .map(|c| {
                        let next = rename.len() as u32;
                        *rename.entry(*c).or_insert(next)
                    })
                    .collect::<Vec<u32>>()
            })
            .min()
            .unwrap();
        reps.insert(least);
    }
    reps.len()
}

#[test]
fn coloring_orbits_match_brute_force() {
    for g in [
        Graph::complete(4),
        Graph::cycle(6),
        Graph::complete_bipartite(2, 3),
        Graph::petersen().induced(&[0, 1, 2, 3, 4, 5]),
    ] {
        assert_eq!(enumerate_colorings(&g).unwrap().len(), orbit_count(&g), "{g:?}");
    }
}
