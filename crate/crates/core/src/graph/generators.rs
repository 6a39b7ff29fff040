use std::ops::Range;

use super::{bitset, Graph, GraphBuilder, GraphError};

/// Cayley graph on ℤ/mℤ: `i ~ j` iff `±(i - j) mod m` lies in `connection`.
/// The connection set is symmetrised automatically.
pub fn circulant(modulus: usize, connection: &[usize]) -> Result<Graph, GraphError> {
    if modulus == 0 {
        return Err(GraphError::ZeroModulus);
    }
    let mut steps = vec![false; modulus];
    for &r in connection {
        if r == 0 {
            return Err(GraphError::ZeroResidue);
        }
        if r >= modulus {
            return Err(GraphError::ResidueOutOfRange { residue: r, modulus });
        }
        steps[r] = true;
        steps[modulus - r] = true;
    }
    let mut b = GraphBuilder::new(modulus)?;
    for i in 0..modulus {
        for (d, _) in steps.iter().enumerate().filter(|(_, &on)| on) {
            let j = (i + d) % modulus;
            if i < j {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok(b.build())
}

/// A blow-up together with its part layout: vertex `i` of the base graph
/// becomes the contiguous block `parts[i]`.
#[derive(Clone, Debug)]
pub struct BlowUp {
    pub graph: Graph,
    pub parts: Vec<Range<usize>>,
}

impl BlowUp {
    /// Base vertex that `v` was copied from.
    pub fn part_of(&self, v: usize) -> usize {
        self.parts.partition_point(|r| r.end <= v)
    }
}

/// Replaces vertex `i` of `g` by an independent set of `sizes[i]` vertices and
/// every edge by a complete bipartite graph. Zero sizes delete the vertex.
pub fn blow_up(g: &Graph, sizes: &[usize]) -> Result<BlowUp, GraphError> {
    if sizes.len() != g.n() {
        return Err(GraphError::SizeListLength {
            got: sizes.len(),
            expected: g.n(),
        });
    }
    let total: usize = sizes.iter().sum();
    if total > super::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut parts = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        parts.push(start..start + s);
        start += s;
    }
    let words = bitset::words_for(total);
    let mut adj = vec![0u64; total * words];
    // row template per base vertex: union of the neighbouring parts
    for i in 0..g.n() {
        let mut template = vec![0u64; words];
        for j in bitset::ones(g.row(i)) {
            for v in parts[j].clone() {
                bitset::set(&mut template, v);
            }
        }
        for v in parts[i].clone() {
            adj[v * words..(v + 1) * words].copy_from_slice(&template);
        }
    }
    Ok(BlowUp {
        graph: Graph::from_rows(total, adj),
        parts,
    })
}

/// Vertex-disjoint union; vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let mut builder = GraphBuilder::new(a.n() + b.n()).expect("union size within limit");
    for (u, v) in a.edges() {
        builder.add_edge(u, v).expect("in range");
    }
    for (u, v) in b.edges() {
        builder.add_edge(u + shift, v + shift).expect("in range");
    }
    builder.build()
}

/// `n (log d - 1) / d` for average degree `d`, logarithm in the given base.
/// Returns 0 when `log d <= 1`, where the expression is vacuous.
/// For triangle-free graphs with the natural logarithm this is a lower
/// bound on the independence number; no triangle check is done here.
pub fn shearer_floor(g: &Graph, log_base: f64) -> f64 {
    let d = g.average_degree();
    if d <= 0.0 {
        return 0.0;
    }
    let l = d.ln() / log_base.ln();
    if l <= 1.0 {
        0.0
    } else {
        g.n() as f64 * (l - 1.0) / d
    }
}
