//! graph6 codec (McKay's printable format).
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, big-endian within each group, each group
//! offset by 63 and the final group zero-padded.

use super::{bitset, Graph, GraphError};

/// Largest vertex count representable with the 4-byte size header.
pub const GRAPH6_MAX_VERTICES: usize = 258_047;

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

pub fn graph6_encode(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(err(format!(
            "{n} vertices exceeds the graph6 limit of {GRAPH6_MAX_VERTICES}"
        )));
    }
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = (acc << 1) | bitset::test(row, i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted; anything else after the payload is an error.
pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty record"));
    }
    match bytes[0] {
        b':' => return Err(err("sparse6 records are not supported")),
        b'&' => return Err(err("digraph6 records are not supported")),
        _ => {}
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(format!(
                "byte {b:#04x} at offset {pos} is outside the printable range 63..=126"
            )));
        }
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(err("8-byte size header exceeds the supported vertex range"));
        }
        if bytes.len() < 4 {
            return Err(err("truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(err(format!("non-canonical long header for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n > super::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(err(format!(
            "truncated bit payload: expected {need} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(err(format!(
            "trailing data: {} bytes after the payload",
            body.len() - need
        )));
    }
    let words = bitset::words_for(n);
    let mut adj = vec![0u64; n * words];
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                bitset::set(&mut adj[i * words..(i + 1) * words], j);
                bitset::set(&mut adj[j * words..(j + 1) * words], i);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = body[need - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("non-zero padding bits"));
        }
    }
    Ok(Graph::from_rows(n, adj))
}
