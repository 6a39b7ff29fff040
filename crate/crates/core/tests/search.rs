use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use proptest::prelude::*;

use purple_ramsey::catalog::{enumerate_ramsey_graphs, load_graph6_catalog, Catalog};
use purple_ramsey::colouring::{is_st_free, recolour_purple, Colour, PurpleColouring};
use purple_ramsey::graph::{clique_number, independence_number, Graph};
use purple_ramsey::search::{
    brute_force_g, g_over_catalog, gm_over_catalog, max_purple_matching, max_purple_set, swapable_edges, Kind,
    SearchError, SearchOptions, SearchOutcome,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn complete_fixture(n: usize, s: usize, t: usize) -> Catalog {
    load_graph6_catalog(fixture(&format!("ramsey_{s}_{t}_{n}.g6")), n, s, t, true)
        .unwrap()
        .assert_complete(true)
}

fn unpruned() -> SearchOptions {
    SearchOptions {
        prune: false,
        ..SearchOptions::default()
    }
}

fn sweep(c: &Catalog, kind: Kind, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    match kind {
        Kind::Matching => gm_over_catalog(c, opts),
        Kind::General => g_over_catalog(c, opts),
    }
}

/// Every way of sending the purple edges to red or blue leaves a red graph
/// with `ω < s` and `α < t`.
fn check_recolourings(o: &SearchOutcome) {
    let red = o.witness_graph.without_edges(o.witness_purple.iter()).unwrap();
    let purple = Graph::from_edges(o.n, o.witness_purple.iter()).unwrap();
    let c = PurpleColouring::from_red_purple(red, purple).unwrap();
    assert!(is_st_free(&c, o.s, o.t).unwrap().free);
    let pairs: Vec<(usize, usize)> = o.witness_purple.iter().collect();
    assert!(pairs.len() <= 12);
    for mask in 0u32..1 << pairs.len() {
        let assignment: BTreeMap<(usize, usize), Colour> = pairs
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, if mask >> i & 1 == 1 { Colour::Red } else { Colour::Blue }))
            .collect();
        let r = recolour_purple(&c, &assignment).unwrap();
        assert!(clique_number(r.red(), Some(o.s)) < o.s);
        assert!(independence_number(r.red(), Some(o.t)) < o.t);
    }
}

#[test]
fn oracle_equivalence() {
    for n in 0..=7 {
        for s in 2..=4 {
            for t in 2..=4 {
                let c = enumerate_ramsey_graphs(n, s, t, true).unwrap();
                for kind in [Kind::Matching, Kind::General] {
                    let oracle = brute_force_g(n, s, t, kind).unwrap();
                    match (oracle, sweep(&c, kind, &SearchOptions::default())) {
                        (None, Err(SearchError::EmptyCatalog)) => assert!(c.is_empty()),
                        (Some(b), Ok(o)) => {
                            assert_eq!(o.value, b.value, "({n};{s},{t}) {kind:?}");
                            assert_eq!(b.purple.len(), b.value);
                            o.verify().unwrap();
                            assert_eq!(o.provenance(), "exact");
                        }
                        (a, b) => panic!("({n};{s},{t}) {kind:?}: oracle {a:?}, search {b:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn small_rows() {
    let c = enumerate_ramsey_graphs(5, 3, 3, true).unwrap();
    let o = gm_over_catalog(&c, &SearchOptions::default()).unwrap();
    assert_eq!(o.value, 0);
    assert_eq!(o.provenance(), "exact");
    let c = enumerate_ramsey_graphs(8, 3, 4, true).unwrap();
    let o = gm_over_catalog(&c, &SearchOptions::default()).unwrap();
    assert_eq!(o.value, 2);
    o.verify().unwrap();
    check_recolourings(&o);
}

#[test]
fn general_dominates_matching_and_pruning_is_transparent() {
    for (n, s, t) in [(5, 3, 3), (7, 3, 4), (8, 3, 4), (8, 4, 3), (7, 4, 4), (7, 3, 5)] {
        let c = enumerate_ramsey_graphs(n, s, t, true).unwrap();
        let gm = gm_over_catalog(&c, &SearchOptions::default()).unwrap();
        let g = g_over_catalog(&c, &SearchOptions::default()).unwrap();
        assert!(g.value >= gm.value, "({n};{s},{t})");
        assert_eq!(gm_over_catalog(&c, &unpruned()).unwrap().value, gm.value);
        assert_eq!(g_over_catalog(&c, &unpruned()).unwrap().value, g.value);
        gm.verify().unwrap();
        g.verify().unwrap();
        if g.value <= 12 {
            check_recolourings(&g);
        }
    }
}

#[test]
fn fixture_rows() {
    for (n, s, t, want) in [(13, 3, 5, 0), (17, 4, 4, 0), (17, 3, 6, 2), (22, 3, 7, 6)] {
        let c = complete_fixture(n, s, t);
        let o = gm_over_catalog(&c, &SearchOptions::default()).unwrap();
        assert_eq!(o.value, want, "({n};{s},{t})");
        assert_eq!(o.provenance(), "exact");
        o.verify().unwrap();
        check_recolourings(&o);
        assert_eq!(gm_over_catalog(&c, &unpruned()).unwrap().value, want);
    }
}

#[test]
fn fixture_rows_general() {
    for (n, s, t, want) in [(13, 3, 5, 0), (17, 4, 4, 0), (17, 3, 6, 2)] {
        let c = complete_fixture(n, s, t);
        let o = g_over_catalog(&c, &SearchOptions::default()).unwrap();
        assert_eq!(o.value, want, "({n};{s},{t})");
        o.verify().unwrap();
        assert_eq!(g_over_catalog(&c, &unpruned()).unwrap().value, want);
    }
}

#[test]
fn incomplete_catalogs_are_lower_bounds() {
    let c = load_graph6_catalog(fixture("ramsey_3_6_17.g6"), 17, 3, 6, true).unwrap();
    let o = gm_over_catalog(&c, &SearchOptions::default()).unwrap();
    assert_eq!(o.value, 2);
    assert!(!o.catalog_complete);
    assert_eq!(o.provenance(), "lower bound unless catalog complete");
}

#[test]
fn thread_count_does_not_change_results() {
    let many = SearchOptions {
        threads: 8,
        ..SearchOptions::default()
    };
    for (n, s, t) in [(8, 3, 4), (7, 4, 4)] {
        let c = enumerate_ramsey_graphs(n, s, t, true).unwrap();
        for kind in [Kind::Matching, Kind::General] {
            let a = sweep(&c, kind, &SearchOptions::default()).unwrap();
            let b = sweep(&c, kind, &many).unwrap();
            assert_eq!(a, b);
            assert_eq!(
                serde_json::to_string(&a.report(None)).unwrap(),
                serde_json::to_string(&b.report(None)).unwrap()
            );
        }
    }
    let c = complete_fixture(17, 3, 6);
    assert_eq!(
        gm_over_catalog(&c, &SearchOptions::default()).unwrap(),
        gm_over_catalog(&c, &many).unwrap()
    );
}

#[test]
fn expired_deadline_gives_a_lower_bound() {
    let c = complete_fixture(17, 3, 6);
    let opts = SearchOptions {
        deadline: Some(Instant::now()),
        ..SearchOptions::default()
    };
    let o = gm_over_catalog(&c, &opts).unwrap();
    assert!(!o.exhausted);
    assert!(o.value <= 2);
    assert_eq!(o.provenance(), "lower bound (deadline expired)");
    o.verify().unwrap();
}

#[test]
fn single_graph_searches_reject_non_members() {
    assert!(matches!(
        max_purple_matching(&Graph::complete(4), 3, 3),
        Err(SearchError::NotRamsey { .. })
    ));
    assert!(matches!(max_purple_set(&Graph::empty(4), 3, 3), Err(SearchError::NotRamsey { .. })));
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.2f64..=0.8).prop_flat_map(|(n, density)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn single_graph_invariants(g in arb_graph(2, 12)) {
        let s = clique_number(&g, None) + 1;
        let t = independence_number(&g, None) + 1;
        let m = max_purple_matching(&g, s, t).unwrap();
        let p = max_purple_set(&g, s, t).unwrap();
        m.verify().unwrap();
        p.verify().unwrap();
        prop_assert!(p.value >= m.value);
        prop_assert!(m.value <= g.n() / 2);
        // every purple edge is swapable on its own
        let sw = swapable_edges(&g, t);
        prop_assert!(p.witness_purple.iter().all(|e| sw.contains(e.0, e.1)));
        // no larger purple set survives: adding any further edge breaks α < t
        let red = g.without_edges(p.witness_purple.iter()).unwrap();
        for (u, v) in red.edges() {
            let smaller = red.without_edges([(u, v)]).unwrap();
            prop_assert!(independence_number(&smaller, Some(t)) >= t);
        }
    }
}

#[test]
#[ignore = "needs PURPLE_RAMSEY_CATALOG_DIR with the large lists"]
fn extended_rows() {
    let dir = PathBuf::from(std::env::var("PURPLE_RAMSEY_CATALOG_DIR").expect("catalog dir"));
    for (n, s, t, gm, g) in [
        (24, 4, 5, 12, Some(14)),
        (27, 3, 8, 7, Some(9)),
        (35, 3, 9, 0, None),
        (42, 5, 5, 6, None),
    ] {
        let path = dir.join(format!("ramsey_{s}_{t}_{n}.g6"));
        let c = load_graph6_catalog(&path, n, s, t, true).unwrap().assert_complete(true);
        let o = gm_over_catalog(&c, &SearchOptions::default()).unwrap();
        o.verify().unwrap();
        assert_eq!(o.value, gm, "({n};{s},{t})");
        if let Some(g) = g {
            let o = g_over_catalog(&c, &SearchOptions::default()).unwrap();
            o.verify().unwrap();
            assert_eq!(o.value, g, "({n};{s},{t})");
        }
    }
}
