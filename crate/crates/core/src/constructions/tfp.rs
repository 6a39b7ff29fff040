//! Triangle-free process and the colourings built on it.

use serde::{Deserialize, Serialize};

use super::{blow_up_colouring, ConstructionError, SeededRng};
use crate::colouring::PurpleColouring;
use crate::graph::{Graph, GraphBuilder};

/// Largest vertex count accepted by [`triangle_free_process`].
pub const TFP_MAX_VERTICES: usize = 10_000;

const CLOSED: u32 = u32::MAX;

/// The edges of one run, in insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TfpRun {
    pub n: usize,
    pub seed: u64,
    pub edges: Vec<(usize, usize)>,
    /// True when the run stopped because no pair could be added.
    pub maximal: bool,
}

impl TfpRun {
    pub fn graph(&self) -> Graph {
        self.prefix(self.edges.len())
    }

    /// `G_m`, the graph after the first `m` steps.
    pub fn prefix(&self, m: usize) -> Graph {
        Graph::from_edges(self.n, self.edges[..m].iter().copied()).expect("process edges are distinct")
    }
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    // u < v; rows of the strict upper triangle laid out consecutively
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Runs the triangle-free process on `n` vertices: repeatedly add a pair
/// chosen uniformly among those that close no triangle, until none is left
/// or `max_steps` edges have been added.
pub fn triangle_free_process(n: usize, seed: u64, max_steps: Option<usize>) -> Result<TfpRun, ConstructionError> {
    if n > TFP_MAX_VERTICES {
        return Err(ConstructionError::Parameter(format!(
            "triangle-free process is limited to {TFP_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut open: Vec<u32> = (0..pairs as u32).collect();
    let mut pos: Vec<u32> = (0..pairs as u32).collect();
    let mut from_index = Vec::with_capacity(pairs);
    for u in 0..n {
        for v in u + 1..n {
            from_index.push((u as u32, v as u32));
        }
    }
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut rng = SeededRng::new(seed);
    let mut edges = Vec::new();
    let limit = max_steps.unwrap_or(usize::MAX);

    let close = |open: &mut Vec<u32>, pos: &mut Vec<u32>, idx: usize| {
        let p = pos[idx];
        if p == CLOSED {
            return;
        }
        let last = open.pop().expect("open pair present");
        if last as usize != idx {
            open[p as usize] = last;
            pos[last as usize] = p;
        }
        pos[idx] = CLOSED;
    };

    while edges.len() < limit && !open.is_empty() {
        let pick = open[rng.below(open.len() as u64) as usize] as usize;
        let (u, v) = from_index[pick];
        let (u, v) = (u as usize, v as usize);
        close(&mut open, &mut pos, pick);
        for &w in &nbrs[u] {
            let (a, b) = if w < v { (w, v) } else { (v, w) };
            close(&mut open, &mut pos, pair_index(n, a, b));
        }
        for &w in &nbrs[v] {
            let (a, b) = if w < u { (w, u) } else { (u, w) };
            close(&mut open, &mut pos, pair_index(n, a, b));
        }
        nbrs[u].push(v);
        nbrs[v].push(u);
        edges.push((u, v));
    }
    Ok(TfpRun {
        n,
        seed,
        maximal: open.is_empty(),
        edges,
    })
}

/// `⌊(1/(2√2) - ε) n^{3/2} √(log₂ n)⌋`, clamped at 0.
pub fn m_star(n: usize, eps: f64) -> usize {
    if n < 2 {
        return 0;
    }
    let nf = n as f64;
    let v = (1.0 / (2.0 * std::f64::consts::SQRT_2) - eps) * nf.powf(1.5) * nf.log2().sqrt();
    if v <= 0.0 {
        0
    } else {
        v.floor() as usize
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TfpParams {
    pub n: usize,
    pub eps: f64,
    pub m_star: usize,
    pub seed: u64,
}

impl TfpParams {
    pub fn new(n: usize, eps: f64, seed: u64) -> Result<TfpParams, ConstructionError> {
        let cap = 1.0 / (2.0 * std::f64::consts::SQRT_2);
        if !(eps > 0.0 && eps < cap) {
            return Err(ConstructionError::Parameter(format!(
                "eps must lie in (0, 1/(2 sqrt 2)), got {eps}"
            )));
        }
        Ok(TfpParams {
            n,
            eps,
            m_star: m_star(n, eps),
            seed,
        })
    }
}

#[derive(Clone, Debug)]
pub struct TwoPhase {
    pub colouring: PurpleColouring,
    pub eps: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub m1: usize,
    pub m2: usize,
    pub run: TfpRun,
}

/// Runs the process for `m₂ = m*(ε₂)` steps; the first `m₁ = m*(ε²/100)`
/// edges are red, the next `m₂ - m₁` purple, all other pairs blue.
pub fn tfp_two_phase_colouring(n: usize, eps: f64, eps2: f64, seed: u64) -> Result<TwoPhase, ConstructionError> {
    let eps1 = eps * eps / 100.0;
    if !(eps2 > 0.0 && eps2 < eps1) {
        return Err(ConstructionError::Parameter(format!(
            "need 0 < eps2 < eps^2/100 = {eps1}, got eps2 = {eps2}"
        )));
    }
    let p1 = TfpParams::new(n, eps1, seed)?;
    let p2 = TfpParams::new(n, eps2, seed)?;
    let (m1, m2) = (p1.m_star, p2.m_star);
    if m1 < 1 || m2 <= m1 {
        return Err(ConstructionError::Parameter(format!(
            "n = {n} too small: m1 = {m1}, m2 = {m2} (need m2 > m1 >= 1)"
        )));
    }
    let run = triangle_free_process(n, seed, Some(m2))?;
    if run.edges.len() < m2 {
        return Err(ConstructionError::Exhausted {
            achieved: run.edges.len(),
            needed: m2,
        });
    }
    let mut red = GraphBuilder::new(n)?;
    let mut purple = GraphBuilder::new(n)?;
    for (i, &(u, v)) in run.edges.iter().enumerate() {
        if i < m1 {
            red.add_edge(u, v)?;
        } else {
            purple.add_edge(u, v)?;
        }
    }
    let colouring = PurpleColouring::from_red_purple(red.build(), purple.build())?;
    Ok(TwoPhase {
        colouring,
        eps,
        eps1,
        eps2,
        m1,
        m2,
        run,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SublinearParams {
    pub n: usize,
    pub gamma: f64,
    pub eps: f64,
    pub zeta: f64,
    pub k: usize,
}

/// Solves `γ = √2 (1+ε)/(1-ε) (ζ + 1/ζ)` for its root `ζ > 2` and takes the
/// smallest `k` with `n <= ζ² k`.
pub fn sublinear_params(n: usize, gamma: f64, eps: f64) -> Result<SublinearParams, ConstructionError> {
    if !(eps > 0.0 && eps < 0.25) {
        return Err(ConstructionError::Parameter(format!("eps must lie in (0, 1/4), got {eps}")));
    }
    if n == 0 {
        return Err(ConstructionError::Parameter("n must be positive".into()));
    }
    let ratio = (1.0 + eps) / (1.0 - eps);
    let min = 4.0 * ratio;
    if !(gamma > min) {
        return Err(ConstructionError::GammaTooSmall { gamma, min });
    }
    let c = gamma / (std::f64::consts::SQRT_2 * ratio);
    let zeta = (c + (c * c - 4.0).sqrt()) / 2.0;
    if !(zeta > 2.0) {
        return Err(ConstructionError::GammaTooSmall { gamma, min });
    }
    let z2 = zeta * zeta;
    let nf = n as f64;
    let mut k = (nf / z2).ceil().max(1.0) as usize;
    while z2 * (k as f64) < nf {
        k += 1;
    }
    while k > 1 && z2 * ((k - 1) as f64) >= nf {
        k -= 1;
    }
    Ok(SublinearParams { n, gamma, eps, zeta, k })
}

#[derive(Clone, Debug)]
pub struct TfpBlowup {
    pub params: SublinearParams,
    pub run: TfpRun,
    pub colouring: PurpleColouring,
}

/// `n`-blow-up colouring of a full triangle-free process on `k` vertices,
/// `k` from [`sublinear_params`].
pub fn tfp_blowup_colouring(n: usize, gamma: f64, eps: f64, seed: u64) -> Result<TfpBlowup, ConstructionError> {
    let params = sublinear_params(n, gamma, eps)?;
    let run = triangle_free_process(params.k, seed, None)?;
    let colouring = blow_up_colouring(&run.graph(), n)?;
    Ok(TfpBlowup { params, run, colouring })
}
