//! Canonical labelling by individualisation and refinement.
//!
//! The search tree individualises one vertex of the first smallest
//! non-singleton cell at each node and refines to an equitable partition.
//! Every leaf is a discrete partition, read as a relabelling; the canonical
//! form is the lexicographically smallest relabelled adjacency matrix.
//! Automorphisms found along the way (plus transpositions of twin
//! vertices) prune branches that lie in one orbit of the stabiliser of
//! the current prefix.

use crate::graph::{graph6_encode, Graph};

/// Canonical relabelling: `perm[v]` is the new label of vertex `v`.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbour_list(v)).collect();
    let mut search = Search {
        g,
        adj: &adj,
        best: None,
        first_leaf: None,
        generators: twin_transpositions(g),
    };
    let root = refine(&adj, vec![(0..n).collect()]);
    search.descend(root, &mut Vec::new());
    let (_, order) = search.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labelling(g))
}

/// graph6 string of [`canonical_form`]; equal iff the graphs are isomorphic.
pub fn canonical_graph6(g: &Graph) -> String {
    graph6_encode(&canonical_form(g)).expect("catalog graphs fit graph6")
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    adj: &'a [Vec<usize>],
    /// Smallest certificate so far, with the vertex order producing it.
    best: Option<(Vec<u64>, Vec<usize>)>,
    first_leaf: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms as permutations `v -> image`.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, partition: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = target_cell(&partition) else {
            self.leaf(&partition);
            return;
        };
        let cell = partition[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut next = partition.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            let next = refine(self.adj, next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` is in the orbit of an explored vertex under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let stab: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|p| prefix.iter().all(|&x| p[x] == x))
            .collect();
        if stab.is_empty() {
            return false;
        }
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut stack = explored.to_vec();
        for &x in explored {
            seen[x] = true;
        }
        while let Some(x) = stack.pop() {
            for p in &stab {
                let y = p[x];
                if !seen[y] {
                    if y == v {
                        return true;
                    }
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn leaf(&mut self, partition: &Partition) {
        let order: Vec<usize> = partition.iter().map(|c| c[0]).collect();
        let cert = certificate(self.g, &order);
        match &self.first_leaf {
            None => self.first_leaf = Some((cert.clone(), order.clone())),
            Some((c0, o0)) if *c0 == cert => {
                // same relabelled graph: o0[i] -> order[i] is an automorphism
                let mut p = vec![0; order.len()];
                for (i, &x) in o0.iter().enumerate() {
                    p[x] = order[i];
                }
                if p.iter().enumerate().any(|(i, &x)| i != x) {
                    self.generators.push(p);
                }
            }
            _ => {}
        }
        match &self.best {
            Some((b, bo)) if *b == cert => {
                let mut p = vec![0; order.len()];
                for (i, &x) in bo.iter().enumerate() {
                    p[x] = order[i];
                }
                if p.iter().enumerate().any(|(i, &x)| i != x) {
                    self.generators.push(p);
                }
            }
            Some((b, _)) if *b <= cert => {}
            _ => self.best = Some((cert, order)),
        }
    }
}

fn target_cell(p: &Partition) -> Option<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

/// Upper-triangle adjacency bits of `g` with vertex `order[i]` relabelled `i`.
fn certificate(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits[k >> 6] |= 1 << (63 - (k & 63));
            }
            k += 1;
        }
    }
    bits
}

/// Refines to the coarsest equitable partition finer than `p`. Cells are
/// split by neighbour count into each splitter cell, new pieces ordered by
/// count, so the result depends only on the isomorphism type of
/// (graph, ordered partition).
fn refine(adj: &[Vec<usize>], mut p: Partition) -> Partition {
    let n = adj.len();
    let mut count = vec![0usize; n];
    let mut s = 0;
    while s < p.len() {
        count.iter_mut().for_each(|c| *c = 0);
        for &x in &p[s] {
            for &y in &adj[x] {
                count[y] += 1;
            }
        }
        let mut next: Partition = Vec::with_capacity(p.len());
        for c in &p {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(usize, usize)> = c.iter().map(|&v| (count[v], v)).collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() != p.len() {
            p = next;
            s = 0;
        } else {
            s += 1;
        }
    }
    p
}

/// Transpositions `(u v)` of vertices with equal open or closed
/// neighbourhoods (apart from each other); each is an automorphism.
fn twin_transpositions(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let twins = (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| g.has_edge(u, w) == g.has_edge(v, w));
            if twins {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(u, v);
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::circulant;

    #[test]
    fn relabelled_copies_agree() {
        let g = circulant(13, &[1, 5]).unwrap();
        let perm: Vec<usize> = (0..13).map(|i| (i * 5 + 3) % 13).collect();
        let h = g.relabel(&perm);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = circulant(6, &[1]).unwrap();
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
        assert_eq!(canonical_form(&c6).edge_count(), 6);
    }

    #[test]
    fn pentagon_and_complement() {
        let c5 = circulant(5, &[1]).unwrap();
        assert_eq!(canonical_graph6(&c5), canonical_graph6(&c5.complement()));
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(canonical_labelling(&Graph::empty(0)), Vec::<usize>::new());
        assert_eq!(canonical_labelling(&Graph::empty(1)), vec![0]);
        assert!(are_isomorphic(&Graph::empty(4), &Graph::empty(4)));
        assert!(are_isomorphic(&Graph::complete(4), &Graph::complete(4)));
    }
}
