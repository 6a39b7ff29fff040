use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::{check_probability, ConstructionError, SeededRng};
use crate::colouring::{PurpleColouring, Side, Violation};
use crate::graph::{find_clique, GraphBuilder};

/// `ell` copies of `c`; between copies the pair (u, w) is red when `u == w`
/// or `uw` is red in `c`, and purple otherwise. The red graph is `R ⊠ K_ell`.
pub fn strong_product_colouring(c: &PurpleColouring, ell: usize) -> Result<PurpleColouring, ConstructionError> {
    if ell == 0 {
        return Err(ConstructionError::Parameter("strong product needs ell >= 1".into()));
    }
    let n = c.n();
    let total = n * ell;
    let mut red = GraphBuilder::new(total)?;
    let mut purple = GraphBuilder::new(total)?;
    for i in 0..ell {
        let off = i * n;
        for (u, v) in c.red().edges() {
            red.add_edge(off + u, off + v)?;
        }
        for (u, v) in c.purple().edges() {
            purple.add_edge(off + u, off + v)?;
        }
        for j in i + 1..ell {
            let off2 = j * n;
            for u in 0..n {
                for w in 0..n {
                    if u == w || c.red().has_edge(u, w) {
                        red.add_edge(off + u, off2 + w)?;
                    } else {
                        purple.add_edge(off + u, off2 + w)?;
                    }
                }
            }
        }
    }
    Ok(PurpleColouring::from_red_purple(red.build(), purple.build())?)
}

/// Red statistics for one pair of parts of a sprinkled colouring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossPairReport {
    pub i: usize,
    pub j: usize,
    pub red: usize,
    pub pairs: usize,
    pub red_density: f64,
    /// Largest `|X||Y|` with `X ⊆ V_i`, `Y ⊆ V_j` and no red edge between
    /// them; only computed when the smaller part is small enough.
    pub max_red_free_rectangle: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Sprinkled {
    pub colouring: PurpleColouring,
    pub parts: Vec<Range<usize>>,
    pub p: f64,
    pub cross: Vec<CrossPairReport>,
}

const RECTANGLE_LIMIT: usize = 18;

/// One copy of `core4` followed by `ell - 2` copies of `core3`; pairs
/// between different parts are red with probability `p` (default
/// `N^{-1/2}` for `N` total vertices) and purple otherwise, drawn in
/// lexicographic pair order.
pub fn sprinkled_even_colouring(
    core4: &PurpleColouring,
    core3: &PurpleColouring,
    ell: usize,
    p: Option<f64>,
    seed: u64,
) -> Result<Sprinkled, ConstructionError> {
    if ell < 2 {
        return Err(ConstructionError::Parameter(format!("sprinkled colouring needs ell >= 2, got {ell}")));
    }
    if let Some(clique) = find_clique(&core4.red_purple(), 4) {
        return Err(ConstructionError::CoreNotFree {
            which: "K4",
            violation: Violation {
                side: Side::RedPurple,
                clique,
            },
        });
    }
    if ell > 2 {
        if let Some(clique) = find_clique(&core3.red_purple(), 3) {
            return Err(ConstructionError::CoreNotFree {
                which: "K3",
                violation: Violation {
                    side: Side::RedPurple,
                    clique,
                },
            });
        }
    }
    let mut parts = vec![0..core4.n()];
    for _ in 2..ell {
        let start = parts.last().map_or(0, |r| r.end);
        parts.push(start..start + core3.n());
    }
    let total = parts.last().map_or(0, |r| r.end);
    let p = p.unwrap_or(if total == 0 { 0.0 } else { 1.0 / (total as f64).sqrt() });
    check_probability(p)?;

    let mut red = GraphBuilder::new(total)?;
    let mut purple = GraphBuilder::new(total)?;
    for (idx, part) in parts.iter().enumerate() {
        let core = if idx == 0 { core4 } else { core3 };
        for (u, v) in core.red().edges() {
            red.add_edge(part.start + u, part.start + v)?;
        }
        for (u, v) in core.purple().edges() {
            purple.add_edge(part.start + u, part.start + v)?;
        }
    }
    let part_of = |v: usize| parts.partition_point(|r| r.end <= v);
    let mut rng = SeededRng::new(seed);
    for u in 0..total {
        for v in u + 1..total {
            if part_of(u) == part_of(v) {
                continue;
            }
            if rng.bernoulli(p) {
                red.add_edge(u, v)?;
            } else {
                purple.add_edge(u, v)?;
            }
        }
    }
    let colouring = PurpleColouring::from_red_purple(red.build(), purple.build())?;

    let mut cross = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (a, b) = (&parts[i], &parts[j]);
            let red = a
                .clone()
                .map(|u| b.clone().filter(|&v| colouring.red().has_edge(u, v)).count())
                .sum::<usize>();
            let pairs = a.len() * b.len();
            cross.push(CrossPairReport {
                i,
                j,
                red,
                pairs,
                red_density: red as f64 / pairs as f64,
                max_red_free_rectangle: red_free_rectangle(&colouring, a.clone(), b.clone(), RECTANGLE_LIMIT),
            });
        }
    }
    Ok(Sprinkled {
        colouring,
        parts,
        p,
        cross,
    })
}

/// Largest `|X||Y|` over `X ⊆ a`, `Y ⊆ b` with no red edge between `X` and
/// `Y`, by enumerating subsets of the smaller side. `None` when the smaller
/// side has more than `limit` vertices.
pub fn red_free_rectangle(c: &PurpleColouring, a: Range<usize>, b: Range<usize>, limit: usize) -> Option<usize> {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() > limit || small.len() >= 64 {
        return None;
    }
    let small: Vec<usize> = small.collect();
    let large: Vec<usize> = large.collect();
    let words = large.len().div_ceil(64);
    // red neighbourhood of each small-side vertex inside the large side
    let masks: Vec<Vec<u64>> = small
        .iter()
        .map(|&x| {
            let mut m = vec![0u64; words];
            for (idx, &y) in large.iter().enumerate() {
                if c.red().has_edge(x, y) {
                    m[idx >> 6] |= 1 << (idx & 63);
                }
            }
            m
        })
        .collect();
    let mut best = 0;
    let mut blocked = vec![0u64; words];
    for subset in 1u64..(1u64 << small.len()) {
        blocked.iter_mut().for_each(|w| *w = 0);
        for (bit, m) in masks.iter().enumerate() {
            if subset >> bit & 1 == 1 {
                for (d, s) in blocked.iter_mut().zip(m) {
                    *d |= s;
                }
            }
        }
        let free = large.len() - blocked.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        best = best.max(subset.count_ones() as usize * free);
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, independence_number, Graph};

    fn pentagon() -> PurpleColouring {
        PurpleColouring::from_red(circulant(5, &[1]).unwrap())
    }

    #[test]
    fn strong_product_counts() {
        let c = pentagon();
        assert_eq!(strong_product_colouring(&c, 1).unwrap(), c);
        let d = strong_product_colouring(&c, 2).unwrap();
        let cross = (0..5)
            .flat_map(|u| (5..10).map(move |v| (u, v)))
            .filter(|&(u, v)| d.red().has_edge(u, v))
            .count();
        assert_eq!(cross, 15);
        assert!(independence_number(d.red(), None) <= 2);
        assert!(strong_product_colouring(&c, 0).is_err());
    }

    #[test]
    fn sprinkle_degenerate_cases() {
        let core4 = PurpleColouring::from_red_purple(Graph::empty(4), circulant(4, &[1]).unwrap()).unwrap();
        let core3 = pentagon();
        let s = sprinkled_even_colouring(&core4, &core3, 2, None, 1).unwrap();
        assert_eq!(s.colouring, core4);
        assert!(s.cross.is_empty());

        let s = sprinkled_even_colouring(&core4, &core3, 3, Some(0.0), 1).unwrap();
        assert_eq!(s.cross[0].red, 0);
        assert_eq!(s.cross[0].max_red_free_rectangle, Some(20));
        let s = sprinkled_even_colouring(&core4, &core3, 3, Some(1.0), 1).unwrap();
        assert_eq!(s.cross[0].red, 20);
        assert_eq!(s.cross[0].max_red_free_rectangle, Some(0));

        let bad = PurpleColouring::from_red_purple(Graph::empty(3), Graph::complete(3)).unwrap();
        assert!(sprinkled_even_colouring(&core4, &bad, 3, None, 1).is_err());
        assert!(sprinkled_even_colouring(&core4, &core3, 1, None, 1).is_err());
    }
}
