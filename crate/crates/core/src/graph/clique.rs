//! Exact maximum-clique search.
//!
//! The public entry points reduce the instance before searching: a graph
//! whose complement is disconnected is the join of its co-components (so
//! ω adds up over them), and vertices with identical closed neighbourhoods
//! collapse into one weighted vertex. What remains is solved by a
//! branch-and-bound over candidate bitsets with greedy-colouring bounds.
//! Independence queries run the same pipeline on the complement of each
//! connected component.

use std::collections::HashMap;

use super::bitset;
use super::Graph;

/// ω(g). With `cutoff = Some(r)` the search may stop as soon as a clique of
/// size `r` is known and return any value `>= r`; below `r` the answer is exact.
pub fn clique_number(g: &Graph, cutoff: Option<usize>) -> usize {
    clique_search(g, Goal::Maximum { stop_at: cutoff }).len()
}

/// A maximum clique, vertices ascending.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    clique_search(g, Goal::Maximum { stop_at: None })
}

/// Some clique of exactly `size` vertices, or `None` when ω(g) < size.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let mut c = clique_search(g, Goal::AtLeast(size));
    if c.len() >= size {
        c.truncate(size);
        Some(c)
    } else {
        None
    }
}

/// α(g), with the same cutoff contract as [`clique_number`].
pub fn independence_number(g: &Graph, cutoff: Option<usize>) -> usize {
    independent_search(g, Goal::Maximum { stop_at: cutoff }).len()
}

pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    independent_search(g, Goal::Maximum { stop_at: None })
}

/// Some independent set of exactly `size` vertices, or `None` when α(g) < size.
pub fn find_independent_set(g: &Graph, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let mut s = independent_search(g, Goal::AtLeast(size));
    if s.len() >= size {
        s.truncate(size);
        Some(s)
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug)]
enum Goal {
    /// Exact maximum, optionally stopping once `stop_at` is reached.
    Maximum { stop_at: Option<usize> },
    /// Only cliques of at least this size matter.
    AtLeast(usize),
}

impl Goal {
    fn satisfied(self, have: usize) -> bool {
        match self {
            Goal::Maximum { stop_at } => stop_at.is_some_and(|r| have >= r),
            Goal::AtLeast(r) => have >= r,
        }
    }

    fn remaining(self, have: usize) -> Goal {
        match self {
            Goal::Maximum { stop_at } => Goal::Maximum {
                stop_at: stop_at.map(|r| r.saturating_sub(have)),
            },
            // a part may contribute less than the remainder, so it must be solved exactly
            Goal::AtLeast(r) => Goal::Maximum {
                stop_at: Some(r.saturating_sub(have)),
            },
        }
    }
}

fn clique_search(g: &Graph, goal: Goal) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let parts = g.co_components();
    if parts.len() == 1 {
        return reduced_clique(g, goal);
    }
    // join of the parts: cliques of the parts combine freely
    let mut out = Vec::new();
    let total: usize = parts.len();
    for (i, part) in parts.iter().enumerate() {
        let sub = g.induced(part);
        let sub_goal = if i + 1 == total {
            goal.remaining(out.len())
        } else {
            Goal::Maximum { stop_at: None }
        };
        let c = reduced_clique(&sub, sub_goal);
        out.extend(c.into_iter().map(|v| part[v]));
        if goal.satisfied(out.len()) {
            break;
        }
    }
    out.sort_unstable();
    out
}

fn independent_search(g: &Graph, goal: Goal) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let parts = g.components();
    let mut out = Vec::new();
    let total = parts.len();
    for (i, part) in parts.iter().enumerate() {
        let co = if part.len() == g.n() {
            g.complement()
        } else {
            g.induced(part).complement()
        };
        let sub_goal = if i + 1 == total {
            goal.remaining(out.len())
        } else {
            Goal::Maximum { stop_at: None }
        };
        let c = reduced_clique(&co, sub_goal);
        out.extend(c.into_iter().map(|v| part[v]));
        if goal.satisfied(out.len()) {
            break;
        }
    }
    out.sort_unstable();
    out
}

/// Collapses true twins and runs the weighted search.
fn reduced_clique(g: &Graph, goal: Goal) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut class_of: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let mut closed = g.row(v).to_vec();
        bitset::set(&mut closed, v);
        let id = *class_of.entry(closed).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
    }
    let m = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let degree: Vec<usize> = reps
        .iter()
        .map(|&r| bitset::ones(g.row(r)).count())
        .collect();
    let order = min_width_order(g, &reps, &degree);
    let mw = bitset::words_for(m);
    let mut adj = vec![0u64; m * mw];
    for (i, &ci) in order.iter().enumerate() {
        for (j, &cj) in order.iter().enumerate() {
            if i != j && bitset::test(g.row(reps[ci]), reps[cj]) {
                bitset::set(&mut adj[i * mw..(i + 1) * mw], j);
            }
        }
    }
    let weights: Vec<u64> = order.iter().map(|&c| classes[c].len() as u64).collect();
    let (floor, stop) = match goal {
        Goal::Maximum { stop_at } => (0, stop_at.map(|r| r as u64)),
        Goal::AtLeast(r) => ((r as u64).saturating_sub(1), Some(r as u64)),
    };
    let mut search = Weighted {
        adj: &adj,
        words: mw,
        weights: &weights,
        best: Vec::new(),
        best_w: floor,
        stop,
        current: Vec::new(),
    };
    search.seed_greedy();
    let cand = bitset::full(m);
    if !search.done() {
        search.expand(cand, 0);
    }
    if search.best.is_empty() && floor > 0 {
        return Vec::new();
    }
    let mut out: Vec<usize> = search
        .best
        .iter()
        .flat_map(|&q| classes[order[q]].iter().copied())
        .collect();
    out.sort_unstable();
    out
}

/// Degeneracy order: repeatedly removes a vertex of least remaining degree
/// and places it last, so low positions hold the densest core.
fn min_width_order(g: &Graph, reps: &[usize], degree: &[usize]) -> Vec<usize> {
    let m = reps.len();
    let mut deg: Vec<usize> = degree.to_vec();
    let mut left = vec![true; m];
    let mut order = vec![0; m];
    let pos: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    for slot in (0..m).rev() {
        let v = (0..m)
            .filter(|&v| left[v])
            .min_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
            .expect("vertices left");
        left[v] = false;
        order[slot] = v;
        for u in bitset::ones(g.row(reps[v])) {
            if let Some(&j) = pos.get(&u) {
                if left[j] {
                    deg[j] -= 1;
                }
            }
        }
    }
    order
}

struct Weighted<'a> {
    adj: &'a [u64],
    words: usize,
    weights: &'a [u64],
    best: Vec<usize>,
    best_w: u64,
    stop: Option<u64>,
    current: Vec<usize>,
}

impl Weighted<'_> {
    fn done(&self) -> bool {
        !self.best.is_empty() && self.stop.is_some_and(|s| self.best_w >= s)
    }

    /// Greedy cliques from the densest start vertices, as an initial incumbent.
    fn seed_greedy(&mut self) {
        let m = self.weights.len();
        for start in 0..m.min(32) {
            let mut clique = vec![start];
            let mut w = self.weights[start];
            let mut cand = self.row(start).to_vec();
            while let Some(v) = bitset::ones(&cand)
                .max_by_key(|&v| (bitset::and_count(&cand, self.row(v)), std::cmp::Reverse(v)))
            {
                clique.push(v);
                w += self.weights[v];
                let row = self.row(v).to_vec();
                for (x, a) in cand.iter_mut().zip(&row) {
                    *x &= a;
                }
            }
            if w > self.best_w {
                self.best_w = w;
                self.best = clique;
                if self.done() {
                    return;
                }
            }
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn colour_sort(&self, cand: &[u64]) -> (Vec<usize>, Vec<u64>) {
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut uncoloured = cand.to_vec();
        let mut q = vec![0u64; self.words];
        let mut cum = 0u64;
        while !bitset::is_empty(&uncoloured) {
            q.copy_from_slice(&uncoloured);
            let start = order.len();
            let mut class_max = 0;
            while let Some(v) = bitset::first(&q) {
                bitset::clear(&mut q, v);
                bitset::clear(&mut uncoloured, v);
                for (x, a) in q.iter_mut().zip(self.row(v)) {
                    *x &= !a;
                }
                order.push(v);
                class_max = class_max.max(self.weights[v]);
            }
            cum += class_max;
            bounds.resize(order.len(), cum);
            debug_assert!(order.len() > start);
        }
        (order, bounds)
    }

    fn expand(&mut self, mut cand: Vec<u64>, cur_w: u64) {
        let (order, bounds) = self.colour_sort(&cand);
        for i in (0..order.len()).rev() {
            if cur_w + bounds[i] <= self.best_w {
                return;
            }
            let v = order[i];
            let w = cur_w + self.weights[v];
            self.current.push(v);
            let mut child = vec![0u64; self.words];
            bitset::and_into(&mut child, &cand, self.row(v));
            if bitset::is_empty(&child) {
                if w > self.best_w {
                    self.best_w = w;
                    self.best = self.current.clone();
                }
            } else {
                self.expand(child, w);
            }
            self.current.pop();
            if self.done() {
                return;
            }
            bitset::clear(&mut cand, v);
        }
    }
}

/// Reusable buffers for [`has_clique_within`].
#[derive(Default)]
pub(crate) struct CliqueScratch {
    levels: Vec<Level>,
}

#[derive(Default)]
struct Level {
    cand: Vec<u64>,
    tmp: Vec<u64>,
    q: Vec<u64>,
    order: Vec<usize>,
    bounds: Vec<usize>,
}

impl CliqueScratch {
    pub(crate) fn new() -> CliqueScratch {
        CliqueScratch::default()
    }
}

/// Decides whether the vertices in `cand` contain an `r`-clique of the graph
/// given by `rows` (`words` u64 per row). No reductions; meant for the many
/// small incremental checks done by the searches.
pub(crate) fn has_clique_within(
    rows: &[u64],
    words: usize,
    cand: &[u64],
    r: usize,
    scratch: &mut CliqueScratch,
) -> bool {
    if r == 0 {
        return true;
    }
    let count = bitset::count(cand);
    if count < r {
        return false;
    }
    if r == 1 {
        return true;
    }
    if r == 2 {
        return bitset::ones(cand).any(|v| {
            rows[v * words..(v + 1) * words]
                .iter()
                .zip(cand)
                .any(|(a, b)| a & b != 0)
        });
    }
    while scratch.levels.len() <= r {
        scratch.levels.push(Level::default());
    }
    for lvl in &mut scratch.levels {
        lvl.cand.resize(words, 0);
        lvl.tmp.resize(words, 0);
        lvl.q.resize(words, 0);
    }
    scratch.levels[0].cand.copy_from_slice(cand);
    decide(rows, words, 0, r, &mut scratch.levels)
}

fn decide(rows: &[u64], words: usize, depth: usize, need: usize, levels: &mut [Level]) -> bool {
    let colours = colour_level(rows, words, &mut levels[depth]);
    if colours < need {
        return false;
    }
    for i in (0..levels[depth].order.len()).rev() {
        let (bound, v) = (levels[depth].bounds[i], levels[depth].order[i]);
        if bound < need {
            return false;
        }
        let row = &rows[v * words..(v + 1) * words];
        if need == 2 {
            if row.iter().zip(&levels[depth].cand).any(|(a, b)| a & b != 0) {
                return true;
            }
        } else {
            let (head, tail) = levels.split_at_mut(depth + 1);
            bitset::and_into(&mut tail[0].cand, &head[depth].cand, row);
            if bitset::count(&tail[0].cand) >= need - 1
                && decide(rows, words, depth + 1, need - 1, levels)
            {
                return true;
            }
        }
        bitset::clear(&mut levels[depth].cand, v);
    }
    false
}

/// Greedy sequential colouring of `lvl.cand`; fills `order`/`bounds` and
/// returns the number of colours used.
fn colour_level(rows: &[u64], words: usize, lvl: &mut Level) -> usize {
    lvl.order.clear();
    lvl.bounds.clear();
    lvl.tmp.copy_from_slice(&lvl.cand);
    let mut colour = 0;
    while !bitset::is_empty(&lvl.tmp) {
        colour += 1;
        lvl.q.copy_from_slice(&lvl.tmp);
        while let Some(v) = bitset::first(&lvl.q) {
            bitset::clear(&mut lvl.q, v);
            bitset::clear(&mut lvl.tmp, v);
            let row = &rows[v * words..(v + 1) * words];
            for (x, a) in lvl.q.iter_mut().zip(row) {
                *x &= !a;
            }
            lvl.order.push(v);
            lvl.bounds.push(colour);
        }
    }
    colour
}
