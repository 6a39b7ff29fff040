use std::collections::HashSet;
use std::path::PathBuf;

use purple_ramsey::catalog::{
    are_isomorphic, canonical_graph6, enumerate_ramsey_graphs, load_graph6_catalog, parse_graph6_catalog,
    CatalogError, Provenance,
};
use purple_ramsey::constructions::andrasfai;
use purple_ramsey::graph::{circulant, graph6_encode, Graph};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn has_clique(g: &Graph, k: usize) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|m| {
        m.count_ones() as usize == k && {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            g.is_clique(&vs)
        }
    })
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

/// Smallest relabelled edge list over all vertex permutations.
fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap()
}

/// Labelled and unlabelled counts by exhausting every graph on `n` vertices.
fn brute_counts(n: usize, s: usize, t: usize) -> (usize, usize) {
    let m = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    let mut labelled = 0;
    let mut classes = HashSet::new();
    for mask in 0u32..1 << m {
        let g = graph_from_mask(n, mask);
        if !has_clique(&g, s) && !has_clique(&g.complement(), t) {
            labelled += 1;
            classes.insert(brute_canon(&g, &perms));
        }
    }
    (labelled, classes.len())
}

#[test]
fn enumeration_matches_exhaustion() {
    for n in 0..=6 {
        for s in 2..=4 {
            for t in 2..=4 {
                let (labelled, classes) = brute_counts(n, s, t);
                assert_eq!(enumerate_ramsey_graphs(n, s, t, false).unwrap().len(), labelled, "({n};{s},{t})");
                assert_eq!(enumerate_ramsey_graphs(n, s, t, true).unwrap().len(), classes, "({n};{s},{t})");
            }
        }
    }
}

#[test]
fn known_small_catalogs() {
    let c = enumerate_ramsey_graphs(5, 3, 3, true).unwrap();
    assert_eq!(c.len(), 1);
    assert!(c.graphs()[0].degrees().iter().all(|&d| d == 2));
    assert!(c.is_complete());
    assert_eq!(c.provenance(), &Provenance::Enumerated { dedup: true });

    let c = enumerate_ramsey_graphs(8, 3, 4, true).unwrap();
    assert_eq!(c.len(), 3);
    let gamma = andrasfai(3).unwrap();
    assert_eq!(c.graphs().iter().filter(|g| are_isomorphic(g, &gamma)).count(), 1);
    assert_eq!(enumerate_ramsey_graphs(9, 3, 4, true).unwrap().len(), 0);

    // P_3 and its complement K_2 + K_1, as labelled graphs: 3 + 3
    let c = enumerate_ramsey_graphs(3, 3, 3, false).unwrap();
    assert_eq!(c.len(), 6);
    let c = enumerate_ramsey_graphs(3, 3, 3, true).unwrap();
    assert_eq!(c.len(), 2);
    let mut ecounts: Vec<usize> = c.graphs().iter().map(Graph::edge_count).collect();
    ecounts.sort();
    assert_eq!(ecounts, [1, 2]);
}

#[test]
fn dedup_lists_are_pairwise_non_isomorphic() {
    for (n, s, t) in [(7, 3, 4), (8, 3, 4), (7, 4, 3), (6, 4, 4)] {
        let c = enumerate_ramsey_graphs(n, s, t, true).unwrap();
        let canon: HashSet<String> = c.graphs().iter().map(canonical_graph6).collect();
        assert_eq!(canon.len(), c.len());
        let all = enumerate_ramsey_graphs(n, s, t, false).unwrap();
        let all_canon: HashSet<String> = all.graphs().iter().map(canonical_graph6).collect();
        assert_eq!(all_canon, canon);
    }
}

#[test]
fn enumeration_limit() {
    assert!(matches!(
        enumerate_ramsey_graphs(11, 3, 5, true),
        Err(CatalogError::EnumerationLimit { n: 11, .. })
    ));
}

#[test]
fn fixtures_validate() {
    for (name, n, s, t, count) in [
        ("ramsey_3_5_13.g6", 13, 3, 5, 1),
        ("ramsey_4_4_17.g6", 17, 4, 4, 1),
        ("ramsey_3_6_17.g6", 17, 3, 6, 7),
    ] {
        let c = load_graph6_catalog(fixture(name), n, s, t, true).unwrap();
        assert_eq!(c.len(), count, "{name}");
        assert!(c.is_validated());
        assert!(!c.is_complete());
        assert!(c.assert_complete(true).is_complete());
        let canon: HashSet<String> = load_graph6_catalog(fixture(name), n, s, t, false)
            .unwrap()
            .graphs()
            .iter()
            .map(canonical_graph6)
            .collect();
        assert_eq!(canon.len(), count);
    }
    let c = load_graph6_catalog(fixture("ramsey_3_5_13.g6"), 13, 3, 5, true).unwrap();
    assert!(are_isomorphic(&c.graphs()[0], &circulant(13, &[1, 5]).unwrap()));
}

#[test]
fn checksums_are_stable() {
    let bytes = std::fs::read(fixture("ramsey_4_4_17.g6")).unwrap();
    let a = parse_graph6_catalog(&bytes, "a".into(), 17, 4, 4, true).unwrap();
    let b = parse_graph6_catalog(&bytes, "b".into(), 17, 4, 4, false).unwrap();
    assert_eq!(a.checksum(), b.checksum());
    let mut other = bytes.clone();
    other.push(b'\n');
    let c = parse_graph6_catalog(&other, "c".into(), 17, 4, 4, true).unwrap();
    assert_ne!(a.checksum(), c.checksum());
    assert_eq!(a.manifest().count, 1);
}

#[test]
fn rejects_non_members() {
    let k5 = graph6_encode(&Graph::complete(5)).unwrap();
    let err = parse_graph6_catalog(k5.as_bytes(), "k5".into(), 5, 3, 3, true).unwrap_err();
    assert_eq!(
        err,
        CatalogError::Clique {
            line: 1,
            s: 3,
            clique: vec![0, 1, 2]
        }
    );
    // unvalidated loading only checks the vertex count
    assert_eq!(parse_graph6_catalog(k5.as_bytes(), "k5".into(), 5, 3, 3, false).unwrap().len(), 1);

    let e5 = graph6_encode(&Graph::empty(5)).unwrap();
    let err = parse_graph6_catalog(e5.as_bytes(), "e5".into(), 5, 3, 3, true).unwrap_err();
    assert!(matches!(err, CatalogError::Independent { line: 1, t: 3, .. }));

    let err = parse_graph6_catalog(b"Dhc\n@\n", "x".into(), 5, 3, 3, true).unwrap_err();
    assert_eq!(
        err,
        CatalogError::VertexCount {
            line: 2,
            got: 1,
            expected: 5
        }
    );
    assert!(matches!(
        parse_graph6_catalog(b"Dhc\n!!\n", "x".into(), 5, 3, 3, true),
        Err(CatalogError::Decode { line: 2, .. })
    ));
    assert!(matches!(
        load_graph6_catalog("/nonexistent/list.g6", 5, 3, 3, true),
        Err(CatalogError::Io { .. })
    ));
}

#[test]
fn empty_file_warns() {
    let c = parse_graph6_catalog(b"", "empty.g6".into(), 6, 3, 3, true).unwrap();
    assert!(c.is_empty());
    assert_eq!(c.warnings().len(), 1);
    assert!(c.warnings()[0].contains("empty"));
}
