//! Exhaustive reference values for tiny `n`, computed over every edge set
//! of `K_n` without catalogs, canonical forms or the search kernels.

use super::{Kind, SearchError};
use crate::graph::{EdgeSet, Graph, GraphBuilder};

/// Largest `n` accepted by [`brute_force_g`] (`2^21` edge sets at `n = 7`).
pub const ORACLE_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForce {
    pub value: usize,
    /// `R ∪ P`.
    pub graph: Graph,
    pub purple: EdgeSet,
}

struct Pairs {
    n: usize,
    index: Vec<Vec<usize>>,
    list: Vec<(usize, usize)>,
}

impl Pairs {
    fn new(n: usize) -> Pairs {
        let mut index = vec![vec![usize::MAX; n]; n];
        let mut list = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                index[u][v] = list.len();
                index[v][u] = list.len();
                list.push((u, v));
            }
        }
        Pairs { n, index, list }
    }

    /// Pair masks of every `k`-subset of the vertices.
    fn subsets(&self, k: usize) -> Vec<u32> {
        (0u32..1 << self.n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| {
                let vs: Vec<usize> = (0..self.n).filter(|&v| m >> v & 1 == 1).collect();
                let mut pm = 0u32;
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        pm |= 1 << self.index[u][v];
                    }
                }
                pm
            })
            .collect()
    }

    fn edges(&self, mask: u32) -> Vec<(usize, usize)> {
        self.list
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect()
    }

    fn graph(&self, mask: u32) -> Graph {
        let mut b = GraphBuilder::new(self.n).expect("tiny n");
        for (u, v) in self.edges(mask) {
            b.add_edge(u, v).expect("valid pair");
        }
        b.build()
    }
}

/// `g(n;s,t)` or `g_M(n;s,t)` by exhaustion; `None` when no graph on `n`
/// vertices has `ω < s` and `α < t`. The witness is the first optimal edge
/// set in mask order.
pub fn brute_force_g(n: usize, s: usize, t: usize, kind: Kind) -> Result<Option<BruteForce>, SearchError> {
    if n > ORACLE_LIMIT {
        return Err(SearchError::OracleLimit { n, limit: ORACLE_LIMIT });
    }
    let pairs = Pairs::new(n);
    let m = pairs.list.len();
    let cliques = pairs.subsets(s);
    let indeps = pairs.subsets(t);
    let clique_free = |a: u32| cliques.iter().all(|&pm| pm & !a != 0);
    let indep_free = |a: u32| indeps.iter().all(|&pm| pm & a != 0);
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };

    Ok(match kind {
        Kind::General => {
            // least[a] = fewest edges of a subgraph of `a` with α < t
            const NONE: u8 = u8::MAX;
            let mut least = vec![NONE; 1 << m];
            for a in 0..=full {
                if !indep_free(a) {
                    continue;
                }
                let mut best = a.count_ones() as u8;
                let mut rest = a;
                while rest != 0 {
                    let e = rest.trailing_zeros();
                    rest &= rest - 1;
                    best = best.min(least[(a ^ (1 << e)) as usize]);
                }
                least[a as usize] = best;
            }
            let mut top: Option<(usize, u32)> = None;
            for a in 0..=full {
                if least[a as usize] == NONE || !clique_free(a) {
                    continue;
                }
                let v = a.count_ones() as usize - least[a as usize] as usize;
                if top.is_none_or(|(b, _)| v > b) {
                    top = Some((v, a));
                }
            }
            top.map(|(value, a)| {
                // walk down to a minimal red subgraph
                let mut red = a;
                while least[red as usize] != red.count_ones() as u8 {
                    let mut rest = red;
                    loop {
                        let e = rest.trailing_zeros();
                        rest &= rest - 1;
                        if least[(red ^ (1 << e)) as usize] == least[red as usize] {
                            red ^= 1 << e;
                            break;
                        }
                    }
                }
                BruteForce {
                    value,
                    graph: pairs.graph(a),
                    purple: EdgeSet::from_pairs(pairs.edges(a & !red)).expect("pairs"),
                }
            })
        }
        Kind::Matching => {
            // up to relabelling a k-matching is {01, 23, ...}
            let mut top = None;
            for k in 0..=n / 2 {
                let matching: u32 = (0..k).map(|i| 1u32 << pairs.index[2 * i][2 * i + 1]).fold(0, |x, y| x | y);
                let hit = (0..=full)
                    .filter(|&c| c & matching == 0)
                    .find(|&c| indep_free(c) && clique_free(c | matching));
                match hit {
                    Some(c) => top = Some((k, c | matching, matching)),
                    None => break,
                }
            }
            top.map(|(value, a, matching)| BruteForce {
                value,
                graph: pairs.graph(a),
                purple: EdgeSet::from_pairs(pairs.edges(matching)).expect("pairs"),
            })
        }
    })
}
