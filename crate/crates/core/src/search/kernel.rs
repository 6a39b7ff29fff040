//! Per-graph searches. The blue side `complement(G) ∪ S` is kept as
//! bitset rows; adding an edge `uv` to it can only create a `K_t` through
//! `uv`, so each step is a `(t-2)`-clique test on the common blue
//! neighbourhood of `u` and `v`.

use std::time::Instant;

use crate::graph::{bitset, has_clique_within, CliqueScratch, Graph};

pub(crate) struct Blue {
    words: usize,
    rows: Vec<u64>,
    t: usize,
    scratch: CliqueScratch,
    common: Vec<u64>,
}

impl Blue {
    pub(crate) fn new(g: &Graph, t: usize) -> Blue {
        let c = g.complement();
        Blue {
            words: c.words(),
            rows: c.rows().to_vec(),
            t,
            scratch: CliqueScratch::new(),
            common: vec![0; c.words()],
        }
    }

    /// Whether adding `uv` to the blue side keeps it `K_t`-free.
    pub(crate) fn can_add(&mut self, u: usize, v: usize) -> bool {
        let w = self.words;
        bitset::and_into(&mut self.common, &self.rows[u * w..(u + 1) * w], &self.rows[v * w..(v + 1) * w]);
        !has_clique_within(&self.rows, w, &self.common, self.t.saturating_sub(2), &mut self.scratch)
    }

    pub(crate) fn add(&mut self, u: usize, v: usize) {
        let w = self.words;
        bitset::set(&mut self.rows[u * w..(u + 1) * w], v);
        bitset::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        let w = self.words;
        bitset::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bitset::clear(&mut self.rows[v * w..(v + 1) * w], u);
    }
}

/// Edges `e` of `g` with `α(g - e) < t`, lexicographic order.
pub(crate) fn swapable(g: &Graph, t: usize) -> Vec<(usize, usize)> {
    let mut blue = Blue::new(g, t);
    g.edges().filter(|&(u, v)| blue.can_add(u, v)).collect()
}

/// Result of one per-graph search.
pub(crate) enum Found {
    /// Exact maximum (at least the requested floor) with a witness.
    Value(usize, Vec<(usize, usize)>),
    /// The maximum is below the floor.
    Below,
    /// Deadline reached; best witness seen so far at or above the floor, if any.
    TimedOut(Option<(usize, Vec<(usize, usize)>)>),
}

pub(crate) struct Clock {
    deadline: Option<Instant>,
    ticks: u32,
    expired: bool,
}

impl Clock {
    pub(crate) fn new(deadline: Option<Instant>) -> Clock {
        Clock {
            deadline,
            ticks: 0,
            expired: false,
        }
    }

    pub(crate) fn expired(&mut self) -> bool {
        if self.expired {
            return true;
        }
        if let Some(d) = self.deadline {
            self.ticks += 1;
            if self.ticks >= 256 {
                self.ticks = 0;
                self.expired = Instant::now() >= d;
            }
        }
        self.expired
    }
}

/// Find_k: the largest `k` such that some `k`-matching of swapable edges
/// can be deleted from `g` keeping `α < t`. Tries `k = max(floor, 1), ...`
/// upwards and stops at the first `k` with no such matching; the witness
/// for the answer is the first successful matching in search order.
pub(crate) fn find_k(g: &Graph, t: usize, floor: usize, deadline: Option<Instant>) -> Found {
    let edges = swapable(g, t);
    let half = g.n() / 2;
    if edges.is_empty() {
        return if floor == 0 { Found::Value(0, Vec::new()) } else { Found::Below };
    }
    let mut clock = Clock::new(deadline);
    let mut best: Option<(usize, Vec<(usize, usize)>)> = (floor == 0).then(|| (0, Vec::new()));
    let mut k = floor.max(1);
    while k <= half {
        let mut blue = Blue::new(g, t);
        let mut used = vec![false; g.n()];
        let mut current = Vec::with_capacity(k);
        match matching_dfs(&edges, 0, k, &mut used, &mut current, &mut blue, &mut clock) {
            Some(true) => best = Some((k, current)),
            Some(false) => break,
            None => return Found::TimedOut(best),
        }
        k += 1;
    }
    match best {
        Some((v, w)) => Found::Value(v, w),
        None => Found::Below,
    }
}

/// Depth-first search for a `k`-matching; `None` on timeout. On success
/// `blue` and `used` are left dirty.
fn matching_dfs(
    edges: &[(usize, usize)],
    start: usize,
    k: usize,
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    blue: &mut Blue,
    clock: &mut Clock,
) -> Option<bool> {
    if current.len() == k {
        return Some(true);
    }
    if clock.expired() {
        return None;
    }
    let free = used.iter().filter(|&&x| !x).count();
    if free / 2 < k - current.len() {
        return Some(false);
    }
    for i in start..edges.len() {
        if edges.len() - i < k - current.len() {
            break;
        }
        let (u, v) = edges[i];
        if used[u] || used[v] || !blue.can_add(u, v) {
            continue;
        }
        used[u] = true;
        used[v] = true;
        blue.add(u, v);
        current.push((u, v));
        let r = matching_dfs(edges, i + 1, k, used, current, blue, clock);
        if r != Some(false) {
            // success keeps `current` as the witness
            return r;
        }
        current.pop();
        blue.remove(u, v);
        used[u] = false;
        used[v] = false;
    }
    Some(false)
}

/// Largest `S ⊆ E(g)` with `α(g - S) < t`, by branch and bound over the
/// swapable edges. Only values `>= floor` are searched for; `cap` is an
/// upper bound known from outside (search stops once it is reached).
pub(crate) fn max_purple_set(g: &Graph, t: usize, floor: usize, cap: Option<usize>, deadline: Option<Instant>) -> Found {
    let sw = swapable(g, t);
    let m = sw.len();
    let cap = cap.unwrap_or(usize::MAX).min(m);
    if cap < floor {
        return Found::Below;
    }
    // pairwise conflicts among swapable edges
    let mut blue = Blue::new(g, t);
    let mut conflict = vec![vec![false; m]; m];
    for i in 0..m {
        let (a, b) = sw[i];
        blue.add(a, b);
        for j in i + 1..m {
            let (c, d) = sw[j];
            if !blue.can_add(c, d) {
                conflict[i][j] = true;
                conflict[j][i] = true;
            }
        }
        blue.remove(a, b);
    }
    // branch on edges with few conflicts first
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (conflict[i].iter().filter(|&&c| c).count(), i));
    let mut bb = Bb {
        sw: &sw,
        conflict: &conflict,
        blue,
        clock: Clock::new(deadline),
        best_len: floor.checked_sub(1),
        best: None,
        stop_at: cap,
        current: Vec::new(),
        timed_out: false,
    };
    if floor == 0 {
        bb.best_len = Some(0);
        bb.best = Some(Vec::new());
    }
    bb.branch(order);
    let best = bb.best.map(|s| {
        let mut w: Vec<(usize, usize)> = s.iter().map(|&i| sw[i]).collect();
        w.sort_unstable();
        (w.len(), w)
    });
    if bb.timed_out {
        return Found::TimedOut(best.filter(|(v, _)| *v >= floor));
    }
    match best {
        Some((v, w)) if v >= floor => Found::Value(v, w),
        _ => Found::Below,
    }
}

struct Bb<'a> {
    sw: &'a [(usize, usize)],
    conflict: &'a [Vec<bool>],
    blue: Blue,
    clock: Clock,
    /// Size to beat; `None` means any size (including 0) counts.
    best_len: Option<usize>,
    best: Option<Vec<usize>>,
    stop_at: usize,
    current: Vec<usize>,
    timed_out: bool,
}

impl Bb<'_> {
    fn done(&self) -> bool {
        self.timed_out || self.best_len.is_some_and(|b| b >= self.stop_at)
    }

    fn beats(&self, size: usize) -> bool {
        self.best_len.is_none_or(|b| size > b)
    }

    /// Greedy clique cover of the candidates in the conflict graph: each
    /// class contributes at most one edge.
    fn cover_bound(&self, cands: &[usize]) -> usize {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'next: for &c in cands {
            for class in classes.iter_mut() {
                if class.iter().all(|&x| self.conflict[c][x]) {
                    class.push(c);
                    continue 'next;
                }
            }
            classes.push(vec![c]);
        }
        classes.len()
    }

    fn branch(&mut self, cands: Vec<usize>) {
        if self.done() {
            return;
        }
        if self.clock.expired() {
            self.timed_out = true;
            return;
        }
        if cands.is_empty() {
            if self.beats(self.current.len()) {
                self.best_len = Some(self.current.len());
                self.best = Some(self.current.clone());
            }
            return;
        }
        if !self.beats(self.current.len() + cands.len()) {
            return;
        }
        if !self.beats(self.current.len() + self.cover_bound(&cands)) {
            return;
        }
        let e = cands[0];
        let rest = &cands[1..];
        // include e
        let (u, v) = self.sw[e];
        self.blue.add(u, v);
        self.current.push(e);
        let mut next = Vec::with_capacity(rest.len());
        for &c in rest {
            if self.conflict[e][c] {
                continue;
            }
            let (a, b) = self.sw[c];
            if self.blue.can_add(a, b) {
                next.push(c);
            }
        }
        self.branch(next);
        self.current.pop();
        self.blue.remove(u, v);
        if self.done() {
            return;
        }
        // exclude e
        self.branch(rest.to_vec());
    }
}
