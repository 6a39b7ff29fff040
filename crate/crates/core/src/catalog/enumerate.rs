use std::collections::HashSet;

use super::{canonical_graph6, Catalog, CatalogError, Provenance};
use crate::graph::{Graph, GraphBuilder};

/// Default cap on `n` for [`enumerate_ramsey_graphs`].
pub const ENUMERATION_LIMIT: usize = 10;
/// Hard cap for [`enumerate_ramsey_graphs_up_to`]; slot masks are single words.
pub const ENUMERATION_HARD_LIMIT: usize = 16;

/// All graphs on `n` labelled vertices with `ω < s` and `α < t`, or one
/// per isomorphism class when `dedup` is set (the first met in search order).
pub fn enumerate_ramsey_graphs(n: usize, s: usize, t: usize, dedup: bool) -> Result<Catalog, CatalogError> {
    enumerate_ramsey_graphs_up_to(n, s, t, dedup, ENUMERATION_LIMIT)
}

pub fn enumerate_ramsey_graphs_up_to(
    n: usize,
    s: usize,
    t: usize,
    dedup: bool,
    limit: usize,
) -> Result<Catalog, CatalogError> {
    if n > limit.min(ENUMERATION_HARD_LIMIT) {
        return Err(CatalogError::EnumerationLimit {
            n,
            limit: limit.min(ENUMERATION_HARD_LIMIT),
        });
    }
    let mut graphs = Vec::new();
    // a single vertex is already a 1-clique and a 1-independent set
    if n == 0 || (s >= 2 && t >= 2) {
        let mut st = State {
            n,
            s,
            t,
            adj: vec![0; n],
            non: vec![0; n],
            out: &mut graphs,
            seen: dedup.then(HashSet::new),
        };
        st.slot(1, 0);
    }
    Ok(Catalog::from_parts(n, s, t, graphs, Provenance::Enumerated { dedup }, true))
}

struct State<'a> {
    n: usize,
    s: usize,
    t: usize,
    adj: Vec<u64>,
    non: Vec<u64>,
    out: &'a mut Vec<Graph>,
    seen: Option<HashSet<String>>,
}

impl State<'_> {
    /// Slots are visited column by column: (0,1), (0,2), (1,2), (0,3), ...
    /// so at slot (u, v) every pair among vertices below `v` and every
    /// (w, v) with `w < u` is already decided.
    fn slot(&mut self, v: usize, u: usize) {
        if v >= self.n {
            self.leaf();
            return;
        }
        let (nv, nu) = if u + 1 < v { (v, u + 1) } else { (v + 1, 0) };
        let below = (1u64 << u) - 1;
        // non-edge: no independent (t-2)-set among common decided non-neighbours
        let common_non = self.non[u] & self.non[v] & below;
        if !has_clique(&self.non, common_non, self.t.saturating_sub(2)) {
            self.non[u] |= 1 << v;
            self.non[v] |= 1 << u;
            self.slot(nv, nu);
            self.non[u] &= !(1 << v);
            self.non[v] &= !(1 << u);
        }
        // edge: no (s-2)-clique among common neighbours
        let common = self.adj[u] & self.adj[v] & below;
        if !has_clique(&self.adj, common, self.s.saturating_sub(2)) {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.slot(nv, nu);
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    fn leaf(&mut self) {
        let mut b = GraphBuilder::new(self.n).expect("small n");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    b.add_edge(u, v).expect("valid pair");
                }
            }
        }
        let g = b.build();
        if let Some(seen) = &mut self.seen {
            if !seen.insert(canonical_graph6(&g)) {
                return;
            }
        }
        self.out.push(g);
    }
}

/// Whether `cand` contains an `r`-clique of the graph with rows `adj`.
fn has_clique(adj: &[u64], cand: u64, r: usize) -> bool {
    if r == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < r {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], r - 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_cases() {
        let c = enumerate_ramsey_graphs(0, 3, 3, true).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(enumerate_ramsey_graphs(1, 1, 3, false).unwrap().len(), 0);
        assert_eq!(enumerate_ramsey_graphs(1, 2, 2, false).unwrap().len(), 1);
        // s = 2 forbids edges, t = 2 forbids non-edges
        assert_eq!(enumerate_ramsey_graphs(2, 2, 2, false).unwrap().len(), 0);
        assert_eq!(enumerate_ramsey_graphs(3, 2, 4, false).unwrap().len(), 1);
        assert!(enumerate_ramsey_graphs(11, 3, 3, false).is_err());
    }

    #[test]
    fn labelled_pentagons() {
        // 5!/10 labelled 5-cycles
        assert_eq!(enumerate_ramsey_graphs(5, 3, 3, false).unwrap().len(), 12);
        assert_eq!(enumerate_ramsey_graphs(5, 3, 3, true).unwrap().len(), 1);
        assert_eq!(enumerate_ramsey_graphs(6, 3, 3, false).unwrap().len(), 0);
    }
}
