//! Lists of Ramsey(s,t)-graphs: exhaustive enumeration for small `n` and
//! validated graph6 ingestion.

mod canon;
mod enumerate;

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{find_clique, find_independent_set, graph6_decode, graph6_encode, Graph};

pub use canon::{are_isomorphic, canonical_form, canonical_graph6, canonical_labelling};
pub use enumerate::{
    enumerate_ramsey_graphs, enumerate_ramsey_graphs_up_to, ENUMERATION_HARD_LIMIT, ENUMERATION_LIMIT,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("n = {n} is above the enumeration limit {limit}; load a graph6 list instead")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("line {line}: {msg}")]
    Decode { line: usize, msg: String },
    #[error("line {line}: graph has {got} vertices, expected {expected}")]
    VertexCount { line: usize, got: usize, expected: usize },
    #[error("line {line}: clique {clique:?} of size {s}")]
    Clique { line: usize, s: usize, clique: Vec<usize> },
    #[error("line {line}: independent set {set:?} of size {t}")]
    Independent { line: usize, t: usize, set: Vec<usize> },
    #[error("line {line}: duplicate of line {first}")]
    Duplicate { line: usize, first: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Enumerated { dedup: bool },
    Ingested { path: String, checksum: String },
}

/// An ordered list of graphs on `n` vertices with `ω < s` and `α < t`.
#[derive(Clone, Debug)]
pub struct Catalog {
    n: usize,
    s: usize,
    t: usize,
    graphs: Vec<Graph>,
    provenance: Provenance,
    complete: bool,
    validated: bool,
    checksum: String,
    warnings: Vec<String>,
}

impl Catalog {
    pub(crate) fn from_parts(
        n: usize,
        s: usize,
        t: usize,
        graphs: Vec<Graph>,
        provenance: Provenance,
        validated: bool,
    ) -> Catalog {
        let checksum = match &provenance {
            Provenance::Ingested { checksum, .. } => checksum.clone(),
            Provenance::Enumerated { .. } => {
                let mut h = Sha256::new();
                for g in &graphs {
                    h.update(graph6_encode(g).expect("small graph").as_bytes());
                    h.update(b"\n");
                }
                hex::encode(h.finalize())
            }
        };
        let complete = matches!(provenance, Provenance::Enumerated { .. });
        Catalog {
            n,
            s,
            t,
            graphs,
            provenance,
            complete,
            validated,
            checksum,
            warnings: Vec::new(),
        }
    }

    /// Builds an in-memory catalog, checking every member.
    pub fn from_graphs(n: usize, s: usize, t: usize, graphs: Vec<Graph>) -> Result<Catalog, CatalogError> {
        let mut seen = HashMap::new();
        for (i, g) in graphs.iter().enumerate() {
            validate_member(g, n, s, t, i + 1)?;
            if let Some(first) = seen.insert(g.clone(), i + 1) {
                return Err(CatalogError::Duplicate { line: i + 1, first });
            }
        }
        let mut h = Sha256::new();
        for g in &graphs {
            h.update(graph6_encode(g).expect("graph6 range").as_bytes());
            h.update(b"\n");
        }
        let checksum = hex::encode(h.finalize());
        let mut c = Catalog::from_parts(
            n,
            s,
            t,
            graphs,
            Provenance::Ingested {
                path: "<memory>".into(),
                checksum,
            },
            true,
        );
        c.complete = false;
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Whether the list is known to contain every Ramsey graph for (n, s, t).
    /// Enumerated catalogs are complete; ingested ones only when the caller
    /// says so via [`Catalog::assert_complete`].
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn assert_complete(mut self, complete: bool) -> Catalog {
        self.complete = complete;
        self
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn min_edges(&self) -> Option<usize> {
        self.graphs.iter().map(Graph::edge_count).min()
    }

    pub fn max_edges(&self) -> Option<usize> {
        self.graphs.iter().map(Graph::edge_count).max()
    }

    pub fn manifest(&self) -> CatalogManifest {
        CatalogManifest {
            n: self.n,
            s: self.s,
            t: self.t,
            count: self.len(),
            checksum: self.checksum.clone(),
            provenance: self.provenance.clone(),
            complete: self.complete,
            validated: self.validated,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogManifest {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub count: usize,
    pub checksum: String,
    pub provenance: Provenance,
    pub complete: bool,
    pub validated: bool,
}

fn validate_member(g: &Graph, n: usize, s: usize, t: usize, line: usize) -> Result<(), CatalogError> {
    if g.n() != n {
        return Err(CatalogError::VertexCount {
            line,
            got: g.n(),
            expected: n,
        });
    }
    if let Some(clique) = find_clique(g, s) {
        return Err(CatalogError::Clique { line, s, clique });
    }
    if let Some(set) = find_independent_set(g, t) {
        return Err(CatalogError::Independent { line, t, set });
    }
    Ok(())
}

/// Reads newline-separated graph6 records (an optional `>>graph6<<` prefix
/// and blank lines are accepted). Every record must have `n` vertices;
/// with `validate` each graph is also checked for `ω < s` and `α < t`.
/// Repeated labelled graphs are rejected.
pub fn load_graph6_catalog(
    path: impl AsRef<Path>,
    n: usize,
    s: usize,
    t: usize,
    validate: bool,
) -> Result<Catalog, CatalogError> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| CatalogError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_graph6_catalog(&bytes, path.to_path_buf(), n, s, t, validate)
}

pub fn parse_graph6_catalog(
    bytes: &[u8],
    path: PathBuf,
    n: usize,
    s: usize,
    t: usize,
    validate: bool,
) -> Result<Catalog, CatalogError> {
    let checksum = hex::encode(Sha256::digest(bytes));
    let text = std::str::from_utf8(bytes).map_err(|e| CatalogError::Decode {
        line: 1 + bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count(),
        msg: "file is not ASCII".into(),
    })?;
    let mut graphs = Vec::new();
    let mut seen: HashMap<Graph, usize> = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6_decode(line).map_err(|e| CatalogError::Decode {
            line: line_no,
            msg: e.to_string(),
        })?;
        if g.n() != n {
            return Err(CatalogError::VertexCount {
                line: line_no,
                got: g.n(),
                expected: n,
            });
        }
        if validate {
            validate_member(&g, n, s, t, line_no)?;
        }
        if let Some(&first) = seen.get(&g) {
            return Err(CatalogError::Duplicate { line: line_no, first });
        }
        seen.insert(g.clone(), line_no);
        graphs.push(g);
    }
    let mut c = Catalog::from_parts(
        n,
        s,
        t,
        graphs,
        Provenance::Ingested {
            path: path.display().to_string(),
            checksum,
        },
        validate,
    );
    c.complete = false;
    if c.is_empty() {
        let msg = format!("{}: no graphs in file; the catalog is empty", path.display());
        log::warn!("{msg}");
        c.warnings.push(msg);
    }
    Ok(c)
}
