//! Red/blue/purple colourings of `K_n`, the (s,t)-freeness verifier,
//! statistics and the line-oriented text format.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{clique_number, find_clique, independence_number, Graph, GraphBuilder, GraphError};

pub const FORMAT_HEADER: &str = "purple-colouring v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    Red,
    Blue,
    Purple,
}

impl Colour {
    pub fn letter(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
            Colour::Purple => 'P',
        }
    }

    pub fn from_letter(c: &str) -> Option<Colour> {
        match c {
            "R" => Some(Colour::Red),
            "B" => Some(Colour::Blue),
            "P" => Some(Colour::Purple),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("colour classes have different vertex counts")]
    VertexCountMismatch,
    #[error("edge {0} {1} has more than one colour")]
    Overlap(usize, usize),
    #[error("edge {0} {1} has no colour")]
    Missing(usize, usize),
    #[error("edge {0} {1} is not purple")]
    NotPurple(usize, usize),
    #[error("purple edge {0} {1} has no assigned colour")]
    Unassigned(usize, usize),
    #[error("purple edges can only be recoloured red or blue")]
    PurpleTarget,
    #[error("clique sizes must be at least 2 (got s = {s}, t = {t})")]
    BadTarget { s: usize, t: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A partition of `E(K_n)` into red, blue and purple graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurpleColouring {
    red: Graph,
    blue: Graph,
    purple: Graph,
}

impl PurpleColouring {
    /// Builds a colouring, checking that the three classes partition `E(K_n)`.
    pub fn new(red: Graph, blue: Graph, purple: Graph) -> Result<Self, ColouringError> {
        let c = PurpleColouring { red, blue, purple };
        c.validate()?;
        Ok(c)
    }

    /// Red and purple given; every remaining pair is blue.
    pub fn from_red_purple(red: Graph, purple: Graph) -> Result<Self, ColouringError> {
        if red.n() != purple.n() {
            return Err(ColouringError::VertexCountMismatch);
        }
        if let Some((u, v)) = red.edges().find(|&(u, v)| purple.has_edge(u, v)) {
            return Err(ColouringError::Overlap(u, v));
        }
        let blue = red.union(&purple)?.complement();
        Ok(PurpleColouring { red, blue, purple })
    }

    /// Two-colouring with no purple edges.
    pub fn from_red(red: Graph) -> Self {
        let blue = red.complement();
        let purple = Graph::empty(red.n());
        PurpleColouring { red, blue, purple }
    }

    /// Checks the partition invariant.
    pub fn validate(&self) -> Result<(), ColouringError> {
        let n = self.red.n();
        if self.blue.n() != n || self.purple.n() != n {
            return Err(ColouringError::VertexCountMismatch);
        }
        for (a, b) in [(&self.red, &self.blue), (&self.red, &self.purple), (&self.blue, &self.purple)] {
            if let Some((u, v)) = a.edges().find(|&(u, v)| b.has_edge(u, v)) {
                return Err(ColouringError::Overlap(u, v));
            }
        }
        let total = self.red.edge_count() + self.blue.edge_count() + self.purple.edge_count();
        if total != n * n.saturating_sub(1) / 2 {
            let union = self.red.union(&self.blue)?.union(&self.purple)?;
            let (u, v) = union
                .complement()
                .edges()
                .next()
                .expect("an uncovered pair exists when the count falls short");
            return Err(ColouringError::Missing(u, v));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    pub fn purple(&self) -> &Graph {
        &self.purple
    }

    pub fn red_purple(&self) -> Graph {
        self.red.union(&self.purple).expect("same vertex count")
    }

    pub fn blue_purple(&self) -> Graph {
        self.blue.union(&self.purple).expect("same vertex count")
    }

    pub fn colour(&self, u: usize, v: usize) -> Option<Colour> {
        if u == v || u >= self.n() || v >= self.n() {
            None
        } else if self.red.has_edge(u, v) {
            Some(Colour::Red)
        } else if self.purple.has_edge(u, v) {
            Some(Colour::Purple)
        } else {
            Some(Colour::Blue)
        }
    }

    pub fn into_parts(self) -> (Graph, Graph, Graph) {
        (self.red, self.blue, self.purple)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// A clique in `R ∪ P` of size `s`.
    RedPurple,
    /// A clique in `B ∪ P` of size `t`.
    BluePurple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub side: Side,
    pub clique: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeVerdict {
    pub free: bool,
    pub violations: Vec<Violation>,
}

/// Checks `ω(R ∪ P) < s` and `ω(B ∪ P) < t`; each failing side comes with a
/// witness clique.
pub fn is_st_free(c: &PurpleColouring, s: usize, t: usize) -> Result<FreeVerdict, ColouringError> {
    if s < 2 || t < 2 {
        return Err(ColouringError::BadTarget { s, t });
    }
    let mut violations = Vec::new();
    if let Some(clique) = find_clique(&c.red_purple(), s) {
        violations.push(Violation {
            side: Side::RedPurple,
            clique,
        });
    }
    if let Some(clique) = find_clique(&c.blue_purple(), t) {
        violations.push(Violation {
            side: Side::BluePurple,
            clique,
        });
    }
    Ok(FreeVerdict {
        free: violations.is_empty(),
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColouringStats {
    pub red: usize,
    pub blue: usize,
    pub purple: usize,
    pub omega_rp: usize,
    pub omega_bp: usize,
    pub alpha_r: usize,
    /// `n(t - 1)/2`, present when a target `t` was given.
    pub trivial_bound: Option<f64>,
}

/// Cutoffs let large instances stop early; a reported value equal to its
/// cutoff then means "at least".
#[derive(Clone, Copy, Debug, Default)]
pub struct StatsOptions {
    pub t: Option<usize>,
    pub omega_rp_cutoff: Option<usize>,
    pub omega_bp_cutoff: Option<usize>,
}

pub fn stats(c: &PurpleColouring, t: Option<usize>) -> ColouringStats {
    stats_with(
        c,
        StatsOptions {
            t,
            ..StatsOptions::default()
        },
    )
}

pub fn stats_with(c: &PurpleColouring, opts: StatsOptions) -> ColouringStats {
    let cap = |v: usize, cut: Option<usize>| cut.map_or(v, |r| v.min(r));
    let omega_rp = cap(clique_number(&c.red_purple(), opts.omega_rp_cutoff), opts.omega_rp_cutoff);
    // B ∪ P is the complement of R
    let alpha_r = cap(independence_number(&c.red, opts.omega_bp_cutoff), opts.omega_bp_cutoff);
    let omega_bp = alpha_r;
    ColouringStats {
        red: c.red.edge_count(),
        blue: c.blue.edge_count(),
        purple: c.purple.edge_count(),
        omega_rp,
        omega_bp,
        alpha_r,
        trivial_bound: opts.t.map(|t| trivial_bound(c.n(), t)),
    }
}

/// `n(t - 1)/2`.
pub fn trivial_bound(n: usize, t: usize) -> f64 {
    n as f64 * (t as f64 - 1.0) / 2.0
}

/// Moves every purple edge to the colour given by `assignment`.
pub fn recolour_purple(
    c: &PurpleColouring,
    assignment: &BTreeMap<(usize, usize), Colour>,
) -> Result<PurpleColouring, ColouringError> {
    let mut red = GraphBuilder::from_graph(&c.red);
    let mut blue = GraphBuilder::from_graph(&c.blue);
    for (&(a, b), &colour) in assignment {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if u == v || v >= c.n() || !c.purple.has_edge(u, v) {
            return Err(ColouringError::NotPurple(u, v));
        }
        match colour {
            Colour::Red => red.add_edge(u, v)?,
            Colour::Blue => blue.add_edge(u, v)?,
            Colour::Purple => return Err(ColouringError::PurpleTarget),
        };
    }
    let red = red.build();
    let blue = blue.build();
    if red.edge_count() + blue.edge_count() != c.red.edge_count() + c.blue.edge_count() + c.purple.edge_count() {
        let (u, v) = c
            .purple
            .edges()
            .find(|&(u, v)| !red.has_edge(u, v) && !blue.has_edge(u, v))
            .expect("some purple edge is unassigned");
        return Err(ColouringError::Unassigned(u, v));
    }
    Ok(PurpleColouring {
        purple: Graph::empty(c.n()),
        red,
        blue,
    })
}

pub fn encode_colouring(c: &PurpleColouring) -> String {
    let n = c.n();
    let mut out = String::with_capacity(32 + n * n.saturating_sub(1) / 2 * 10);
    writeln!(out, "{FORMAT_HEADER} n={n}").unwrap();
    for u in 0..n {
        for v in u + 1..n {
            let letter = c.colour(u, v).expect("valid pair").letter();
            writeln!(out, "{u} {v} {letter}").unwrap();
        }
    }
    out
}

/// Parses the v1 text format. Pairs may appear in any order; every pair of
/// `K_n` must appear exactly once.
pub fn decode_colouring(text: &str) -> Result<PurpleColouring, ColouringError> {
    let parse = |line: usize, msg: String| ColouringError::Parse { line, msg };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse(1, "missing header".into()))?;
    let n: usize = header
        .strip_prefix(FORMAT_HEADER)
        .and_then(|rest| rest.trim().strip_prefix("n="))
        .and_then(|num| num.parse().ok())
        .ok_or_else(|| parse(1, format!("expected \"{FORMAT_HEADER} n=<n>\", found {header:?}")))?;
    let mut red = GraphBuilder::new(n)?;
    let mut blue = GraphBuilder::new(n)?;
    let mut purple = GraphBuilder::new(n)?;
    let mut seen = 0usize;
    for (no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v, col] = fields[..] else {
            return Err(parse(no, format!("expected \"u v C\", found {line:?}")));
        };
        let u: usize = u.parse().map_err(|_| parse(no, format!("bad vertex {u:?}")))?;
        let v: usize = v.parse().map_err(|_| parse(no, format!("bad vertex {v:?}")))?;
        if u >= v || v >= n {
            return Err(parse(no, format!("pair {u} {v} must satisfy u < v < {n}")));
        }
        let colour =
            Colour::from_letter(col).ok_or_else(|| parse(no, format!("colour {col:?} is not one of R, B, P")))?;
        if red.has_edge(u, v)? || blue.has_edge(u, v)? || purple.has_edge(u, v)? {
            return Err(parse(no, format!("duplicate edge {u} {v}")));
        }
        match colour {
            Colour::Red => red.add_edge(u, v)?,
            Colour::Blue => blue.add_edge(u, v)?,
            Colour::Purple => purple.add_edge(u, v)?,
        };
        seen += 1;
    }
    let c = PurpleColouring {
        red: red.build(),
        blue: blue.build(),
        purple: purple.build(),
    };
    if seen != n * n.saturating_sub(1) / 2 {
        c.validate()?;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::circulant;

    fn c5() -> Graph {
        circulant(5, &[1]).unwrap()
    }

    #[test]
    fn partition_checks() {
        let r = c5();
        let c = PurpleColouring::from_red(r.clone());
        assert_eq!(c.blue().edge_count(), 5);
        assert!(PurpleColouring::new(r.clone(), r.clone(), Graph::empty(5)).is_err());
        assert_eq!(
            PurpleColouring::new(r.clone(), Graph::empty(5), Graph::empty(5)),
            Err(ColouringError::Missing(0, 2))
        );
        assert!(PurpleColouring::from_red_purple(r.clone(), r).is_err());
    }

    #[test]
    fn all_purple_triangle_fails_both_sides() {
        let c = PurpleColouring::from_red_purple(Graph::empty(3), Graph::complete(3)).unwrap();
        let v = is_st_free(&c, 3, 3).unwrap();
        assert!(!v.free);
        assert_eq!(v.violations.len(), 2);
        assert!(v.violations.iter().all(|w| w.clique == vec![0, 1, 2]));
        assert_eq!(v.violations[0].side, Side::RedPurple);
        assert_eq!(v.violations[1].side, Side::BluePurple);
    }

    #[test]
    fn pentagon_is_free() {
        let c = PurpleColouring::from_red(c5());
        assert!(is_st_free(&c, 3, 3).unwrap().free);
        assert!(is_st_free(&c, 1, 3).is_err());
    }

    #[test]
    fn stats_basics() {
        let c = PurpleColouring::from_red(Graph::empty(6));
        let s = stats(&c, Some(4));
        assert_eq!((s.red, s.purple, s.blue), (0, 0, 15));
        assert_eq!((s.omega_rp, s.omega_bp, s.alpha_r), (1, 6, 6));
        assert_eq!(s.trivial_bound, Some(9.0));
        assert_eq!(trivial_bound(10, 4), 15.0);
        let json = serde_json::to_value(&s).unwrap();
        for key in ["red", "blue", "purple", "omega_rp", "omega_bp", "alpha_r", "trivial_bound"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn recolouring() {
        let c = PurpleColouring::from_red(c5());
        assert_eq!(recolour_purple(&c, &BTreeMap::new()).unwrap(), c);

        let k2 = PurpleColouring::from_red_purple(Graph::empty(2), Graph::complete(2)).unwrap();
        let a = BTreeMap::from([((0, 1), Colour::Red)]);
        let r = recolour_purple(&k2, &a).unwrap();
        assert_eq!(r.red(), &Graph::complete(2));
        assert_eq!(r.purple().edge_count(), 0);

        assert_eq!(recolour_purple(&k2, &BTreeMap::new()), Err(ColouringError::Unassigned(0, 1)));
        let bad = BTreeMap::from([((0, 1), Colour::Purple)]);
        assert_eq!(recolour_purple(&k2, &bad), Err(ColouringError::PurpleTarget));
        let c3 = PurpleColouring::from_red_purple(Graph::empty(3), Graph::from_edges(3, [(0, 1)]).unwrap()).unwrap();
        let off = BTreeMap::from([((0, 1), Colour::Red), ((1, 2), Colour::Blue)]);
        assert_eq!(recolour_purple(&c3, &off), Err(ColouringError::NotPurple(1, 2)));
    }

    #[test]
    fn codec_round_trip_and_errors() {
        let purple = Graph::from_edges(5, [(0, 2)]).unwrap();
        let red = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let c = PurpleColouring::from_red_purple(red, purple).unwrap();
        let text = encode_colouring(&c);
        assert!(text.starts_with("purple-colouring v1 n=5\n0 1 R\n0 2 P\n0 3 B\n"));
        assert_eq!(text.lines().count(), 11);
        assert_eq!(decode_colouring(&text).unwrap(), c);
        assert_eq!(encode_colouring(&decode_colouring(&text).unwrap()), text);

        let missing = "purple-colouring v1 n=3\n0 2 B\n1 2 B\n";
        assert_eq!(decode_colouring(missing), Err(ColouringError::Missing(0, 1)));
        let dup = "purple-colouring v1 n=3\n0 1 R\n0 1 P\n0 2 B\n1 2 B\n";
        assert!(matches!(decode_colouring(dup), Err(ColouringError::Parse { line: 3, .. })));
        let letter = "purple-colouring v1 n=2\n0 1 G\n";
        assert!(matches!(decode_colouring(letter), Err(ColouringError::Parse { line: 2, .. })));
        assert!(decode_colouring("colouring n=2\n0 1 R\n").is_err());
        assert!(decode_colouring("purple-colouring v1 n=2\n1 0 R\n").is_err());
        assert!(decode_colouring("purple-colouring v1 n=2\n0 2 R\n").is_err());
    }
}
