use proptest::prelude::*;

use purple_ramsey::colouring::{is_st_free, PurpleColouring};
use purple_ramsey::constructions::{
    andrasfai, andrasfai_special_vertices, blow_up_colouring, canonical_blowup, canonical_blowup_colouring,
    canonical_edge_count, sprinkled_even_colouring, strong_product_colouring, subsample_colouring, sublinear_params,
    triangle_free_process, turan_graph, CanonicalBlowupParams,
};
use purple_ramsey::graph::{circulant, clique_number, independence_number, Graph};

fn arb_base() -> impl Strategy<Value = Graph> {
    (1usize..=10, 0.0f64..=1.0).prop_flat_map(|(k, density)| {
        let pairs = k * (k - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..k {
                for v in u + 1..k {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(k, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn blow_up_colouring_contracts((g, n) in arb_base().prop_flat_map(|g| { let k = g.n(); (Just(g), k..=120) })) {
        let c = blow_up_colouring(&g, n).unwrap();
        let k = g.n() as f64;
        let e = g.edge_count() as f64;
        let nf = n as f64;
        prop_assert_eq!(clique_number(&c.red_purple(), None), clique_number(&g, None));
        let alpha_r = independence_number(c.red(), None);
        prop_assert_eq!(alpha_r, clique_number(&c.blue_purple(), None));
        prop_assert!(alpha_r <= n.div_ceil(g.n()) * independence_number(&g, None));
        let p = c.purple().edge_count() as f64;
        prop_assert!((p - e * nf * nf / (k * k)).abs() <= 3.0 * e * nf / k);
        prop_assert!(c.red().edge_count() as f64 <= e * (nf / k + 1.0));
    }
}

#[test]
fn blow_up_of_c4() {
    let c4 = circulant(4, &[1]).unwrap();
    let c = blow_up_colouring(&c4, 10).unwrap();
    assert_eq!(c.red().edge_count(), 9);
    assert_eq!(c.purple().edge_count(), 16);
    assert_eq!(c.blue().edge_count(), 45 - 25);

    let c = blow_up_colouring(&c4, 4).unwrap();
    assert_eq!(c.purple().edge_count(), 0);
    assert_eq!(c.red(), &c4);
    assert_eq!(c.blue(), &c4.complement());

    let c5 = circulant(5, &[1]).unwrap();
    let c = blow_up_colouring(&c5, 25).unwrap();
    assert_eq!(clique_number(&c.red_purple(), None), 2);
    assert!(independence_number(c.red(), None) <= 10);
}

#[test]
fn turan_and_andrasfai() {
    let t = turan_graph(10, 3).unwrap();
    assert_eq!(t.edge_count(), 33);
    let t = turan_graph(6, 3).unwrap();
    assert_eq!(t.edge_count(), 12);
    assert_eq!(independence_number(&t, None), 2);
    assert_eq!(turan_graph(7, 1).unwrap().edge_count(), 0);
    for n in 0..15 {
        for r in 1..6 {
            let t = turan_graph(n, r).unwrap();
            assert_eq!(clique_number(&t, None), r.min(n));
            assert_eq!(independence_number(&t, None), n.div_ceil(r));
        }
    }

    assert_eq!(andrasfai(2).unwrap(), circulant(5, &[2, 3]).unwrap());
    let g3 = andrasfai(3).unwrap();
    assert_eq!((g3.n(), g3.edge_count()), (8, 12));
    let g5 = andrasfai(5).unwrap();
    assert_eq!((g5.n(), g5.edge_count()), (14, 35));
    for k in 2..=6 {
        let g = andrasfai(k).unwrap();
        assert!(g.degrees().iter().all(|&d| d == k));
        assert!(g.is_triangle_free());
        assert_eq!(independence_number(&g, None), k);
    }
    assert!(andrasfai(1).is_err());
}

/// Every independent k-set of Γ_k meets the special vertices.
#[test]
fn andrasfai_independent_sets_meet_special_vertices() {
    for k in 2..=6 {
        let g = andrasfai(k).unwrap();
        let special = andrasfai_special_vertices(k);
        assert_eq!(special, [1, k, 2 * k]);
        let n = g.n();
        let mut count = 0;
        for m in 0u32..1 << n {
            if m.count_ones() as usize != k {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            if g.is_independent(&vs) {
                count += 1;
                assert!(vs.iter().any(|v| special.contains(v)), "k = {k}: {vs:?}");
            }
        }
        assert!(count > 0);
    }
}

#[test]
fn canonical_examples() {
    let b = canonical_blowup(10, 2, 4).unwrap();
    assert_eq!(b.graph.n(), 10);
    assert_eq!(b.graph.edge_count(), 20);
    assert_eq!(canonical_edge_count(10, 2, 4), 20);
    assert_eq!(independence_number(&b.graph, None), 4);

    let p = CanonicalBlowupParams::new(11, 2, 5).unwrap();
    assert_eq!((p.heavy_size, p.light_size), (1, 4));
    assert_eq!(canonical_blowup(11, 2, 5).unwrap().graph.edge_count(), 26);
    assert_eq!(canonical_edge_count(11, 2, 5), 26);

    let c = canonical_blowup_colouring(10, 2, 4).unwrap();
    assert_eq!(clique_number(&c.red_purple(), None), 2);
    assert!(independence_number(c.red(), None) <= 4);
    assert_eq!(c.purple().edge_count(), 20 - c.red().edge_count());

    let err = CanonicalBlowupParams::new(10, 2, 6).unwrap_err().to_string();
    assert!(err.contains("kn/(3k-1) <= t < (k-1)n/(3k-4)"), "{err}");
}

/// Every valid (n, k, t) with n <= 60 and k <= 5.
#[test]
fn canonical_blowup_sweep() {
    let mut checked = 0;
    for k in 2..=5 {
        for n in 1..=60 {
            for t in 0..=n {
                let Ok(p) = CanonicalBlowupParams::new(n, k, t) else {
                    continue;
                };
                assert_eq!(3 * p.heavy_size + (3 * k - 4) * p.light_size, n);
                let b = canonical_blowup(n, k, t).unwrap();
                assert_eq!(b.graph.edge_count() as i128, canonical_edge_count(n, k, t), "({n},{k},{t})");
                assert_eq!(independence_number(&b.graph, None), t, "({n},{k},{t})");
                if p.light_size >= 1 {
                    let c = canonical_blowup_colouring(n, k, t).unwrap();
                    assert_eq!(&c.red_purple(), &b.graph);
                    assert!(independence_number(c.red(), None) <= t);
                    assert!(c.red().edge_count() <= 3 * k * k * n);
                    if n <= 30 {
                        assert!(is_st_free(&c, 3, t + 1).unwrap().free);
                    }
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

fn from_red(red: Graph) -> PurpleColouring {
    PurpleColouring::from_red(red)
}

#[test]
fn strong_product_identities() {
    let c5 = from_red(circulant(5, &[1]).unwrap());
    assert_eq!(strong_product_colouring(&c5, 1).unwrap(), c5);
    let p = strong_product_colouring(&c5, 2).unwrap();
    assert_eq!(p.n(), 10);
    let cross_red = p.red().edges().filter(|&(u, v)| u < 5 && v >= 5).count();
    assert_eq!(cross_red, 2 * 5 + 5);
    assert!(independence_number(p.red(), None) <= 2);
    assert_eq!(p.blue().edges().filter(|&(u, v)| u < 5 && v >= 5).count(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn strong_product_counts(g in arb_base(), purple_bits in proptest::collection::vec(any::<bool>(), 45), ell in 1usize..=3) {
        prop_assume!(g.n() * ell <= 15);
        let k = g.n();
        let mut red = Vec::new();
        let mut purple = Vec::new();
        for (i, (u, v)) in g.edges().enumerate() {
            if purple_bits[i % 45] { purple.push((u, v)) } else { red.push((u, v)) }
        }
        let c = PurpleColouring::from_red_purple(
            Graph::from_edges(k, red).unwrap(),
            Graph::from_edges(k, purple).unwrap(),
        ).unwrap();
        let p = strong_product_colouring(&c, ell).unwrap();
        for i in 0..ell {
            for j in i + 1..ell {
                let cross = p.red().edges()
                    .filter(|&(u, v)| u / k == i && v / k == j)
                    .count();
                prop_assert_eq!(cross, 2 * c.red().edge_count() + k);
            }
        }
        prop_assert!(independence_number(p.red(), None) <= independence_number(c.red(), None));
        prop_assert!(clique_number(&p.red_purple(), None) <= ell * clique_number(&c.red_purple(), None));
    }
}

#[test]
fn sprinkle_degenerate_probabilities() {
    let core4 = from_red(andrasfai(2).unwrap());
    let core3 = from_red(circulant(5, &[1]).unwrap());
    let s = sprinkled_even_colouring(&core4, &core3, 4, Some(0.0), 1).unwrap();
    assert_eq!(s.colouring.n(), 15);
    let cross = |g: &Graph| g.edges().filter(|&(u, v)| u / 5 != v / 5).count();
    assert_eq!(cross(s.colouring.red()), 0);
    assert_eq!(cross(s.colouring.purple()), 75);
    let s = sprinkled_even_colouring(&core4, &core3, 4, Some(1.0), 1).unwrap();
    assert_eq!(cross(s.colouring.red()), 75);
    assert!(s.cross.iter().all(|r| r.red_density == 1.0 && r.max_red_free_rectangle == Some(0)));
    let s = sprinkled_even_colouring(&core4, &core3, 2, None, 1).unwrap();
    assert_eq!(s.colouring, core4);

    let k4 = from_red(Graph::complete(4));
    assert!(sprinkled_even_colouring(&k4, &core3, 3, None, 1).is_err());
    assert!(sprinkled_even_colouring(&core4, &from_red(Graph::complete(3)), 3, None, 1).is_err());

    let a = sprinkled_even_colouring(&core4, &core3, 5, None, 42).unwrap();
    let b = sprinkled_even_colouring(&core4, &core3, 5, None, 42).unwrap();
    assert_eq!(a.colouring, b.colouring);
}

#[test]
fn subsample_statistics() {
    let g = andrasfai(6).unwrap();
    assert_eq!(subsample_colouring(&g, 0.0, 3).unwrap().purple().edge_count(), 0);
    assert_eq!(subsample_colouring(&g, 1.0, 3).unwrap().red().edge_count(), 0);
    let p = 0.018;
    let e = g.edge_count() as f64;
    let seeds = 1000;
    let mut total = 0.0;
    for seed in 0..seeds {
        let c = subsample_colouring(&g, p, seed).unwrap();
        assert_eq!(c.red_purple(), g);
        total += c.purple().edge_count() as f64;
    }
    let mean = total / seeds as f64;
    let sd_of_mean = (e * p * (1.0 - p) / seeds as f64).sqrt();
    assert!((mean - p * e).abs() <= 3.0 * sd_of_mean, "mean {mean} vs {}", p * e);
}

#[test]
fn triangle_free_process_small_cases() {
    for seed in 0..50 {
        let r = triangle_free_process(3, seed, None).unwrap();
        assert_eq!(r.edges.len(), 2);
        assert!(r.maximal);
        let g = triangle_free_process(4, seed, None).unwrap().graph();
        let degrees = {
            let mut d = g.degrees();
            d.sort();
            d
        };
        assert!(degrees == [2, 2, 2, 2] || degrees == [1, 1, 1, 3], "{degrees:?}");
    }
}

#[test]
fn triangle_free_process_prefixes() {
    for seed in 0..100 {
        let r = triangle_free_process(200, seed, None).unwrap();
        let mut adj = vec![vec![false; 200]; 200];
        for &(u, v) in &r.edges {
            assert!(!adj[u][v]);
            assert!((0..200).all(|w| !(adj[u][w] && adj[v][w])), "seed {seed}: ({u},{v}) closes a triangle");
            adj[u][v] = true;
            adj[v][u] = true;
        }
        assert!(r.maximal);
        for u in 0..200 {
            for v in u + 1..200 {
                if !adj[u][v] {
                    assert!((0..200).any(|w| adj[u][w] && adj[v][w]));
                }
            }
        }
    }
    let a = triangle_free_process(100, 9, Some(50)).unwrap();
    assert_eq!(a.edges.len(), 50);
    assert!(!a.maximal);
    assert_eq!(a, triangle_free_process(100, 9, Some(50)).unwrap());
}

#[test]
fn sublinear_parameters() {
    let eps = 0.1;
    let ratio = (1.0 + eps) / (1.0 - eps);
    let boundary = std::f64::consts::SQRT_2 * ratio * 2.5;
    assert!(sublinear_params(1000, boundary, eps).is_err());
    assert!(sublinear_params(1000, 4.0, eps).is_err());

    let mut last = 0.0;
    for i in 1..50 {
        let gamma = 6.0 + i as f64 * 0.5;
        let p = sublinear_params(1000, gamma, eps).unwrap();
        assert!(p.zeta > last);
        last = p.zeta;
    }

    let mut rng = purple_ramsey::constructions::SeededRng::new(5);
    for _ in 0..1000 {
        let n = 1 + rng.below(100_000) as usize;
        let eps = 0.01 + rng.unit() * 0.23;
        let min = 4.0 * (1.0 + eps) / (1.0 - eps);
        let gamma = min + 0.01 + rng.unit() * 20.0;
        let p = sublinear_params(n, gamma, eps).unwrap();
        let z2 = p.zeta * p.zeta;
        assert!(p.zeta > 2.0);
        assert!(z2 * (p.k as f64 - 1.0) < n as f64 && n as f64 <= z2 * p.k as f64);
    }
}
