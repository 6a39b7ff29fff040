use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::colouring::PurpleColouring;
use crate::graph::{blow_up, circulant, BlowUp, Graph, GraphBuilder};

/// Equitable part sizes for an `n`-vertex blow-up of a `k`-vertex graph.
/// The first `n mod k` base vertices (in label order) get the larger parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupPlan {
    pub k: usize,
    pub n: usize,
    pub beta_minus: usize,
    pub beta_plus: usize,
    pub sizes: Vec<usize>,
}

impl BlowupPlan {
    pub fn equitable(k: usize, n: usize) -> Result<BlowupPlan, ConstructionError> {
        if k == 0 || n < k {
            return Err(ConstructionError::BlowupTooSmall { n, k });
        }
        let beta_minus = n / k;
        let beta_plus = n.div_ceil(k);
        let sizes = (0..k)
            .map(|i| if i < n % k { beta_plus } else { beta_minus })
            .collect();
        Ok(BlowupPlan {
            k,
            n,
            beta_minus,
            beta_plus,
            sizes,
        })
    }
}

/// Equitable complete `r`-partite graph on `n` vertices.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, ConstructionError> {
    if r == 0 {
        return Err(ConstructionError::Parameter("Turán graph needs r >= 1".into()));
    }
    let sizes: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    Ok(blow_up(&Graph::complete(r), &sizes)?.graph)
}

/// Andrásfai graph Γ_k: the circulant on ℤ/(3k-1) with connection set
/// `{k, ..., 2k-1}`.
pub fn andrasfai(k: usize) -> Result<Graph, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Parameter(format!("Andrásfai graph needs k >= 2, got {k}")));
    }
    let conn: Vec<usize> = (k..2 * k).collect();
    Ok(circulant(3 * k - 1, &conn)?)
}

/// The residues `{1, k, 2k}` that receive the heavy parts of Γ(n;k,t).
pub fn andrasfai_special_vertices(k: usize) -> [usize; 3] {
    [1, k, 2 * k]
}

/// Parameters of the canonical blow-up Γ(n;k,t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalBlowupParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    /// `(k-1)n - (3k-4)t`, the size of each of the three special parts.
    pub heavy_size: usize,
    /// `3t - n`, the size of every other part.
    pub light_size: usize,
}

impl CanonicalBlowupParams {
    pub fn new(n: usize, k: usize, t: usize) -> Result<Self, ConstructionError> {
        if k < 2 {
            return Err(ConstructionError::Parameter(format!("canonical blow-up needs k >= 2, got {k}")));
        }
        let (ni, ki, ti) = (n as i128, k as i128, t as i128);
        let lower_ok = ki * ni <= (3 * ki - 1) * ti;
        let upper_ok = (3 * ki - 4) * ti < (ki - 1) * ni;
        if !lower_ok || !upper_ok || n == 0 {
            return Err(ConstructionError::CanonicalRange {
                n,
                k,
                t,
                lo: (k * n) as f64 / (3 * k - 1) as f64,
                hi: ((k - 1) * n) as f64 / (3 * k - 4) as f64,
            });
        }
        let heavy = (ki - 1) * ni - (3 * ki - 4) * ti;
        let light = 3 * ti - ni;
        debug_assert!(heavy > 0 && light >= heavy);
        debug_assert_eq!(3 * heavy + (3 * ki - 4) * light, ni);
        Ok(CanonicalBlowupParams {
            n,
            k,
            t,
            heavy_size: heavy as usize,
            light_size: light as usize,
        })
    }

    /// Part size for each residue `0..3k-1`.
    pub fn sizes(&self) -> Vec<usize> {
        let special = andrasfai_special_vertices(self.k);
        (0..3 * self.k - 1)
            .map(|v| {
                if special.contains(&v) {
                    self.heavy_size
                } else {
                    self.light_size
                }
            })
            .collect()
    }
}

/// `½k(k-1)n² - k(3k-4)tn + ½(3k-4)(3k-1)t²`.
pub fn canonical_edge_count(n: usize, k: usize, t: usize) -> i128 {
    let (n, k, t) = (n as i128, k as i128, t as i128);
    k * (k - 1) * n * n / 2 - k * (3 * k - 4) * t * n + (3 * k - 4) * (3 * k - 1) * t * t / 2
}

pub fn canonical_blowup(n: usize, k: usize, t: usize) -> Result<BlowUp, ConstructionError> {
    let params = CanonicalBlowupParams::new(n, k, t)?;
    Ok(blow_up(&andrasfai(k)?, &params.sizes())?)
}

/// Blow-up colouring of `g` with the given part sizes: in every edge
/// `v_i v_j` of `g` the pairs `u_l^i u_l^j` are red, other cross pairs
/// purple, everything else blue.
pub fn blow_up_colouring_with_sizes(g: &Graph, sizes: &[usize]) -> Result<PurpleColouring, ConstructionError> {
    let h = blow_up(g, sizes)?;
    let mut red = GraphBuilder::new(h.graph.n())?;
    for (i, j) in g.edges() {
        let (pi, pj) = (&h.parts[i], &h.parts[j]);
        for l in 0..pi.len().min(pj.len()) {
            red.add_edge(pi.start + l, pj.start + l)?;
        }
    }
    let red = red.build();
    let purple = h.graph.difference(&red)?;
    Ok(PurpleColouring::from_red_purple(red, purple)?)
}

/// The `n`-blow-up colouring of `g` under the equitable [`BlowupPlan`].
pub fn blow_up_colouring(g: &Graph, n: usize) -> Result<PurpleColouring, ConstructionError> {
    let plan = BlowupPlan::equitable(g.n(), n)?;
    blow_up_colouring_with_sizes(g, &plan.sizes)
}

/// Blow-up colouring on the canonical blow-up Γ(n;k,t); the red graph is
/// `3t - n` disjoint copies of Γ_k, or of Γ_k without its special vertices.
pub fn canonical_blowup_colouring(n: usize, k: usize, t: usize) -> Result<PurpleColouring, ConstructionError> {
    let params = CanonicalBlowupParams::new(n, k, t)?;
    blow_up_colouring_with_sizes(&andrasfai(k)?, &params.sizes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equitable_plan() {
        let p = BlowupPlan::equitable(4, 10).unwrap();
        assert_eq!(p.sizes, vec![3, 3, 2, 2]);
        assert_eq!((p.beta_minus, p.beta_plus), (2, 3));
        assert!(BlowupPlan::equitable(4, 3).is_err());
        assert!(BlowupPlan::equitable(0, 3).is_err());
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan_graph(10, 3).unwrap().edge_count(), 33);
        assert_eq!(turan_graph(7, 1).unwrap(), Graph::empty(7));
        assert_eq!(turan_graph(6, 3).unwrap().edge_count(), 12);
        assert_eq!(turan_graph(0, 3).unwrap().n(), 0);
        assert!(turan_graph(3, 0).is_err());
    }

    #[test]
    fn andrasfai_examples() {
        assert_eq!(andrasfai(2).unwrap(), circulant(5, &[2, 3]).unwrap());
        let g3 = andrasfai(3).unwrap();
        assert_eq!((g3.n(), g3.edge_count()), (8, 12));
        let g5 = andrasfai(5).unwrap();
        assert_eq!((g5.n(), g5.edge_count()), (14, 35));
        assert!(andrasfai(1).is_err());
    }

    #[test]
    fn canonical_params() {
        let p = CanonicalBlowupParams::new(10, 2, 4).unwrap();
        assert_eq!((p.heavy_size, p.light_size), (2, 2));
        let p = CanonicalBlowupParams::new(11, 2, 5).unwrap();
        assert_eq!((p.heavy_size, p.light_size), (1, 4));
        assert_eq!(canonical_edge_count(10, 2, 4), 20);
        assert_eq!(canonical_edge_count(11, 2, 5), 26);
        // t too small, then too large
        assert!(matches!(
            CanonicalBlowupParams::new(10, 2, 3),
            Err(ConstructionError::CanonicalRange { .. })
        ));
        assert!(CanonicalBlowupParams::new(10, 2, 5).is_err());
        let msg = CanonicalBlowupParams::new(10, 2, 3).unwrap_err().to_string();
        assert!(msg.contains("kn/(3k-1) <= t < (k-1)n/(3k-4)"), "{msg}");
    }

    #[test]
    fn blow_up_colouring_of_c4() {
        let c4 = circulant(4, &[1]).unwrap();
        let c = blow_up_colouring(&c4, 10).unwrap();
        assert_eq!(
            (c.red().edge_count(), c.purple().edge_count(), c.blue().edge_count()),
            (9, 16, 20)
        );
        let same = blow_up_colouring(&c4, 4).unwrap();
        assert_eq!(same.red(), &c4);
        assert_eq!(same.purple().edge_count(), 0);
    }
}
