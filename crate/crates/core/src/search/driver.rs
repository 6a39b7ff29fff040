//! Catalog sweeps (Find_k / max purple set over every member).

use std::cmp::Reverse;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use super::kernel::{self, Found};
use super::{Kind, SearchError, SearchOutcome};
use crate::catalog::Catalog;
use crate::graph::EdgeSet;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads for the catalog sweep; 1 runs inline.
    pub threads: usize,
    pub deadline: Option<Instant>,
    /// Edge-count prunings; they only apply to complete catalogs.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 1,
            deadline: None,
            prune: true,
        }
    }
}

/// `g_M(n;s,t)` over a catalog. Members are visited by decreasing edge
/// count. On complete catalogs a member is skipped when
/// `|E(G)| - best < Min_size` (its `G - M` would fall below the smallest
/// Ramsey graph) and the sweep stops once `best = Max_size - Min_size`.
/// A perfect matching ends the sweep in any case.
///
/// The reported witness is the first member in visiting order that attains
/// the maximum, whatever the thread count.
pub fn gm_over_catalog(c: &Catalog, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    sweep(c, Kind::Matching, opts)
}

/// `g(n;s,t)` over a catalog, with the same prunings as [`gm_over_catalog`]
/// (since `G - P` is a Ramsey graph, `|P| <= |E(G)| - Min_size`).
pub fn g_over_catalog(c: &Catalog, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    sweep(c, Kind::General, opts)
}

struct Hit {
    pos: usize,
    value: usize,
    witness: Vec<(usize, usize)>,
}

fn sweep(c: &Catalog, kind: Kind, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    if c.is_empty() {
        return Err(SearchError::EmptyCatalog);
    }
    let graphs = c.graphs();
    let (n, s, t) = (c.n(), c.s(), c.t());
    let mut order: Vec<usize> = (0..graphs.len()).collect();
    order.sort_by_key(|&i| Reverse(graphs[i].edge_count()));
    let min_size = c.min_edges().expect("non-empty");
    let max_size = c.max_edges().expect("non-empty");
    let ceiling = max_size - min_size;
    let prune = opts.prune && c.is_complete();
    let half = n / 2;

    let best = AtomicUsize::new(0);
    let exit = AtomicUsize::new(usize::MAX);
    let timed_out = AtomicBool::new(false);
    let hits = Mutex::new(Vec::new());

    let visit = |pos: usize| {
        if exit.load(Ordering::SeqCst) < pos || timed_out.load(Ordering::SeqCst) {
            return;
        }
        if opts.deadline.is_some_and(|d| Instant::now() >= d) {
            timed_out.store(true, Ordering::SeqCst);
            return;
        }
        let g = &graphs[order[pos]];
        let e = g.edge_count();
        let floor = best.load(Ordering::SeqCst);
        if prune && e - floor.min(e) < min_size {
            return;
        }
        let found = match kind {
            Kind::Matching => kernel::find_k(g, t, floor, opts.deadline),
            Kind::General => {
                let cap = prune.then(|| e - min_size);
                kernel::max_purple_set(g, t, floor, cap, opts.deadline)
            }
        };
        let hit = match found {
            Found::Value(value, witness) => Some((value, witness)),
            Found::Below => None,
            Found::TimedOut(partial) => {
                timed_out.store(true, Ordering::SeqCst);
                partial
            }
        };
        if let Some((value, witness)) = hit {
            best.fetch_max(value, Ordering::SeqCst);
            if (kind == Kind::Matching && value == half) || (prune && value == ceiling) {
                exit.fetch_min(pos, Ordering::SeqCst);
            }
            hits.lock().expect("no poisoned lock").push(Hit { pos, value, witness });
        }
    };

    if opts.threads <= 1 {
        (0..order.len()).for_each(visit);
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| (0..order.len()).into_par_iter().for_each(visit));
    }

    let exhausted = !timed_out.load(Ordering::SeqCst);
    let hits = hits.into_inner().expect("no poisoned lock");
    let value = hits.iter().map(|h| h.value).max().unwrap_or(0);
    let winner = hits
        .into_iter()
        .filter(|h| h.value == value)
        .min_by_key(|h| h.pos);
    let (pos, witness) = match winner {
        Some(h) => (h.pos, h.witness),
        // only reachable when the deadline hit before any member finished
        None => (0, Vec::new()),
    };
    let g = &graphs[order[pos]];
    let witness = if kind == Kind::General && exhausted && value > 0 {
        // the branch-and-bound witness depends on the floor it started from;
        // recompute it from a fixed floor so the output is reproducible
        match kernel::max_purple_set(g, t, value, Some(value), None) {
            Found::Value(_, w) => w,
            _ => witness,
        }
    } else {
        witness
    };
    Ok(SearchOutcome {
        n,
        s,
        t,
        kind,
        value,
        witness_graph: g.clone(),
        witness_purple: EdgeSet::from_pairs(witness).expect("graph edges"),
        catalog_checksum: Some(c.checksum().to_string()),
        catalog_index: Some(order[pos]),
        exhausted,
        catalog_complete: c.is_complete(),
    })
}
