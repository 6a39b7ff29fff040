//! Exact `g_M` and `g` over Ramsey graphs, with re-checkable certificates.

mod driver;
mod kernel;
mod oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::Side;
use crate::graph::{find_clique, find_independent_set, graph6_encode, EdgeSet, Graph};

pub use driver::{g_over_catalog, gm_over_catalog, SearchOptions};
pub use oracle::{brute_force_g, BruteForce, ORACLE_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Purple edges form a matching (`g_M`).
    Matching,
    /// Any purple edge set (`g`).
    General,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("not a Ramsey({s},{t}) graph: {side:?} witness {witness:?}")]
    NotRamsey {
        s: usize,
        t: usize,
        side: Side,
        witness: Vec<usize>,
    },
    #[error("no Ramsey graphs: the catalog is empty")]
    EmptyCatalog,
    #[error("certificate check failed: {0}")]
    Certificate(String),
    #[error("brute force is limited to n <= {limit}, got {n}")]
    OracleLimit { n: usize, limit: usize },
}

/// A value together with the graph `R ∪ P` and purple set `P` realising it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub kind: Kind,
    pub value: usize,
    pub witness_graph: Graph,
    pub witness_purple: EdgeSet,
    /// Checksum of the catalog searched, if any.
    pub catalog_checksum: Option<String>,
    /// Position of the witness in the catalog, if any.
    pub catalog_index: Option<usize>,
    /// False when a deadline cut the search short (the value is then a
    /// lower bound).
    pub exhausted: bool,
    /// Whether the catalog was known to be complete.
    pub catalog_complete: bool,
}

impl SearchOutcome {
    /// Re-checks the certificate from scratch: `ω(G) < s`, `α(G) < t`,
    /// `P ⊆ E(G)`, `|P| = value`, `α(G - P) < t`, and `P` a matching for
    /// [`Kind::Matching`].
    pub fn verify(&self) -> Result<(), SearchError> {
        let g = &self.witness_graph;
        let fail = |m: String| Err(SearchError::Certificate(m));
        if g.n() != self.n {
            return fail(format!("witness has {} vertices, expected {}", g.n(), self.n));
        }
        if let Some(c) = find_clique(g, self.s) {
            return fail(format!("witness graph has clique {c:?}"));
        }
        if let Some(i) = find_independent_set(g, self.t) {
            return fail(format!("witness graph has independent set {i:?}"));
        }
        if self.witness_purple.len() != self.value {
            return fail(format!(
                "purple set has {} edges, value is {}",
                self.witness_purple.len(),
                self.value
            ));
        }
        if let Some((u, v)) = self.witness_purple.iter().find(|&(u, v)| v >= g.n() || !g.has_edge(u, v)) {
            return fail(format!("purple pair {u} {v} is not an edge of the witness graph"));
        }
        if self.kind == Kind::Matching && !self.witness_purple.is_matching() {
            return fail("purple set is not a matching".into());
        }
        let red = g
            .without_edges(self.witness_purple.iter())
            .map_err(|e| SearchError::Certificate(e.to_string()))?;
        if let Some(i) = find_independent_set(&red, self.t) {
            return fail(format!("red graph has independent set {i:?}"));
        }
        Ok(())
    }

    pub fn provenance(&self) -> &'static str {
        match (self.exhausted, self.catalog_complete) {
            (false, _) => "lower bound (deadline expired)",
            (true, true) => "exact",
            (true, false) => "lower bound unless catalog complete",
        }
    }

    pub fn report(&self, runtime_ms: Option<u128>) -> SearchReport {
        SearchReport {
            n: self.n,
            s: self.s,
            t: self.t,
            kind: self.kind,
            value: self.value,
            witness_graph6: graph6_encode(&self.witness_graph).unwrap_or_default(),
            witness_purple_edges: self.witness_purple.as_slice().to_vec(),
            catalog_checksum: self.catalog_checksum.clone(),
            exhausted: self.exhausted,
            catalog_complete: self.catalog_complete,
            provenance: self.provenance().to_string(),
            runtime_ms,
        }
    }
}

/// JSON shape of a [`SearchOutcome`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub kind: Kind,
    pub value: usize,
    pub witness_graph6: String,
    pub witness_purple_edges: Vec<(usize, usize)>,
    pub catalog_checksum: Option<String>,
    pub exhausted: bool,
    pub catalog_complete: bool,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

pub(crate) fn check_ramsey(g: &Graph, s: usize, t: usize) -> Result<(), SearchError> {
    if let Some(witness) = find_clique(g, s) {
        return Err(SearchError::NotRamsey {
            s,
            t,
            side: Side::RedPurple,
            witness,
        });
    }
    if let Some(witness) = find_independent_set(g, t) {
        return Err(SearchError::NotRamsey {
            s,
            t,
            side: Side::BluePurple,
            witness,
        });
    }
    Ok(())
}

/// Edges `e` of `g` whose removal keeps `α < t` (equivalently, adding `e`
/// to the complement keeps it `K_t`-free).
pub fn swapable_edges(g: &Graph, t: usize) -> EdgeSet {
    EdgeSet::from_pairs(kernel::swapable(g, t)).expect("graph edges")
}

fn single(g: &Graph, s: usize, t: usize, kind: Kind) -> Result<SearchOutcome, SearchError> {
    check_ramsey(g, s, t)?;
    let found = match kind {
        Kind::Matching => kernel::find_k(g, t, 0, None),
        Kind::General => kernel::max_purple_set(g, t, 0, None, None),
    };
    let kernel::Found::Value(value, w) = found else {
        unreachable!("floor 0 without deadline always yields a value")
    };
    Ok(SearchOutcome {
        n: g.n(),
        s,
        t,
        kind,
        value,
        witness_graph: g.clone(),
        witness_purple: EdgeSet::from_pairs(w).expect("graph edges"),
        catalog_checksum: None,
        catalog_index: None,
        exhausted: true,
        catalog_complete: false,
    })
}

/// Find_k for one Ramsey graph: the largest `k` such that deleting some
/// `k`-matching keeps `α < t`.
pub fn max_purple_matching(g: &Graph, s: usize, t: usize) -> Result<SearchOutcome, SearchError> {
    single(g, s, t, Kind::Matching)
}

/// Largest `P ⊆ E(g)` with `α(g - P) < t`.
pub fn max_purple_set(g: &Graph, s: usize, t: usize) -> Result<SearchOutcome, SearchError> {
    single(g, s, t, Kind::General)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::enumerate_ramsey_graphs;
    use crate::constructions::andrasfai;
    use crate::graph::circulant;

    #[test]
    fn swapable_extremes() {
        let c5 = circulant(5, &[1]).unwrap();
        assert!(swapable_edges(&c5, 3).is_empty());
        assert!(swapable_edges(&Graph::complete(4), 2).is_empty());
        assert_eq!(swapable_edges(&c5, 6).len(), 5);
    }

    #[test]
    fn pentagon_and_andrasfai() {
        let c5 = circulant(5, &[1]).unwrap();
        assert_eq!(max_purple_matching(&c5, 3, 3).unwrap().value, 0);
        assert_eq!(max_purple_set(&c5, 3, 3).unwrap().value, 0);
        // Γ_3 is the Möbius ladder on 8 vertices: α = 3, ω = 2
        let g = andrasfai(3).unwrap();
        let m = max_purple_matching(&g, 3, 4).unwrap();
        m.verify().unwrap();
        assert_eq!(m.value, 2);
        assert!(max_purple_matching(&g, 3, 3).is_err());
    }

    #[test]
    fn eight_vertex_catalog() {
        let c = enumerate_ramsey_graphs(8, 3, 4, true).unwrap();
        assert_eq!(c.len(), 3);
        let opts = SearchOptions::default();
        let m = gm_over_catalog(&c, &opts).unwrap();
        m.verify().unwrap();
        assert_eq!(m.value, 2);
        assert_eq!(m.provenance(), "exact");
        let g = g_over_catalog(&c, &opts).unwrap();
        g.verify().unwrap();
        assert_eq!(g.value, 2);
        let unpruned = SearchOptions {
            prune: false,
            ..SearchOptions::default()
        };
        assert_eq!(gm_over_catalog(&c, &unpruned).unwrap().value, 2);
        assert_eq!(g_over_catalog(&c, &unpruned).unwrap().value, g.value);
    }

    #[test]
    fn empty_catalog_is_an_error() {
        let c = enumerate_ramsey_graphs(6, 3, 3, true).unwrap();
        assert_eq!(gm_over_catalog(&c, &SearchOptions::default()), Err(SearchError::EmptyCatalog));
    }
}
