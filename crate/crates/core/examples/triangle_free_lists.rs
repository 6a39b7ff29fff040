//! Builds complete lists of triangle-free graphs with `α < t` on `n`
//! vertices, one graph per isomorphism class, written as canonical graph6.
//!
//! Every such graph `G` has a vertex `v` of maximum degree `d`, and
//! `G - N[v]` is a triangle-free graph with `α < t - 1` on `n - 1 - d`
//! vertices. So the lists for `t` are obtained by gluing `d` independent
//! neighbours of a new vertex onto each graph of the lists for `t - 1`.
//!
//! usage: triangle_free_lists <t> <n> <out-file>
//!
//! With `TF_CACHE=<dir>` the intermediate lists are kept in `<dir>`.

use std::collections::{BTreeSet, HashMap};
use std::io::Write;
use std::path::PathBuf;

use purple_ramsey::catalog::canonical_graph6;
use purple_ramsey::graph::{find_clique, find_independent_set, graph6_decode, graph6_encode, Graph, GraphBuilder};

struct Lists {
    memo: HashMap<(usize, usize), Vec<Graph>>,
    cache: Option<PathBuf>,
}

impl Lists {
    fn get(&mut self, t: usize, n: usize) -> Vec<Graph> {
        if let Some(l) = self.memo.get(&(t, n)) {
            return l.clone();
        }
        let file = self.cache.as_ref().map(|d| d.join(format!("tf_{t}_{n}.g6")));
        if let Some(text) = file.as_ref().and_then(|f| std::fs::read_to_string(f).ok()) {
            let list: Vec<Graph> = text.lines().map(|l| graph6_decode(l).expect("cached list")).collect();
            self.memo.insert((t, n), list.clone());
            return list;
        }
        let list = if t <= 1 {
            if n == 0 {
                vec![Graph::empty(0)]
            } else {
                Vec::new()
            }
        } else if n == 0 {
            vec![Graph::empty(0)]
        } else {
            let mut out = BTreeSet::new();
            for d in 0..t.min(n) {
                let hs = self.get(t - 1, n - 1 - d);
                for (i, h) in hs.iter().enumerate() {
                    glue(h, d, t, &mut out);
                    if (i + 1) % 1000 == 0 {
                        eprintln!("  t = {t}, n = {n}, d = {d}: {}/{} glued, {} found", i + 1, hs.len(), out.len());
                    }
                }
            }
            out.iter().map(|s| graph6_decode(s).expect("own encoding")).collect()
        };
        eprintln!("t = {t}, n = {n}: {} graphs", list.len());
        if let Some(f) = file {
            let text: String = list.iter().map(|g| graph6_encode(g).expect("graph6") + "\n").collect();
            std::fs::write(f, text).expect("cache write");
        }
        self.memo.insert((t, n), list.clone());
        list
    }
}

fn independent_sets(rows: &[u32], cand: u32, cur: u32, out: &mut Vec<u32>) {
    out.push(cur);
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        independent_sets(rows, rest & !rows[v as usize], cur | 1 << v, out);
    }
}

struct Glue<'a> {
    h: usize,
    d: usize,
    rows: &'a [u32],
    cands: Vec<u32>,
    words: usize,
    /// per candidate, the independent sets `J` it misses, as a bitset
    miss: Vec<u64>,
    budget: Vec<u8>,
    count: Vec<u8>,
    load: Vec<usize>,
    deg: Vec<usize>,
    /// new neighbours every vertex of `h` must receive
    need: usize,
    chosen: Vec<u32>,
}

/// Adds every graph `G` with `G - N[v] = h`, `deg(v) = d = Δ(G)`, triangle
/// free and `α(G) < t`.
fn glue(hg: &Graph, d: usize, t: usize, out: &mut BTreeSet<String>) {
    let h = hg.n();
    if hg.max_degree().unwrap_or(0) > d {
        return;
    }
    let rows: Vec<u32> = (0..h)
        .map(|u| hg.neighbour_list(u).iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    if d == 0 {
        if hg.edge_count() == 0 {
            emit(h, &rows, &[], out);
        }
        return;
    }
    let mut all = Vec::new();
    independent_sets(&rows, if h == 0 { 0 } else { u32::MAX >> (32 - h) }, 0, &mut all);
    let cands: Vec<u32> = all.iter().copied().filter(|s| s.count_ones() as usize <= d - 1).collect();
    // an independent j-set of h may be missed by at most t-1-j of the new vertices
    let lo = t - d;
    let js: Vec<u32> = all
        .iter()
        .copied()
        .filter(|s| {
            let j = s.count_ones() as usize;
            j >= lo.max(1) && j <= t - 2
        })
        .collect();
    let budget: Vec<u8> = js.iter().map(|s| (t - 1 - s.count_ones() as usize) as u8).collect();
    // a vertex missed by more than t-2 new vertices lies in too large an independent set
    let need = (d + 2).saturating_sub(t);
    let deg: Vec<usize> = (0..h).map(|u| hg.degree(u)).collect();
    if deg.iter().any(|&k| k + need > d) {
        return;
    }
    let words = js.len().div_ceil(64);
    let mut miss = vec![0u64; words * cands.len()];
    for (ci, &c) in cands.iter().enumerate() {
        for (i, &j) in js.iter().enumerate() {
            if c & j == 0 {
                miss[ci * words + i / 64] |= 1 << (i % 64);
            }
        }
    }
    let mut g = Glue {
        h,
        d,
        rows: &rows,
        count: vec![0; js.len()],
        cands,
        words,
        miss,
        budget,
        load: deg.clone(),
        deg,
        need,
        chosen: Vec::new(),
    };
    let avail: Vec<usize> = (0..g.cands.len()).collect();
    g.dfs(&avail, out);
}

impl Glue<'_> {
    fn dfs(&mut self, avail: &[usize], out: &mut BTreeSet<String>) {
        if self.chosen.len() == self.d {
            emit(self.h, self.rows, &self.chosen, out);
            return;
        }
        let left = self.d - self.chosen.len() - 1;
        let w = self.words;
        let mut saturated = vec![0u64; w];
        for (k, &ci) in avail.iter().enumerate() {
            let c = self.cands[ci];
            saturated.iter_mut().for_each(|x| *x = 0);
            for wi in 0..w {
                let mut bits = self.miss[ci * w + wi];
                while bits != 0 {
                    let i = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    self.count[i] += 1;
                    if self.count[i] == self.budget[i] {
                        saturated[wi] |= 1 << (i % 64);
                    }
                }
            }
            let mut full = 0u32;
            let mut needy = 0u32;
            for v in 0..self.h {
                if c >> v & 1 == 1 {
                    self.load[v] += 1;
                }
                if self.load[v] == self.d {
                    full |= 1 << v;
                }
                if self.load[v] < self.deg[v] + self.need {
                    needy |= 1 << v;
                }
            }
            let feasible = needy.count_ones() as usize <= left * (self.d - 1);
            let next: Vec<usize> = if feasible {
                avail[k..]
                    .iter()
                    .copied()
                    .filter(|&x| {
                        self.cands[x] & full == 0
                            && (0..w).all(|wi| self.miss[x * w + wi] & saturated[wi] == 0)
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let reach = next.iter().fold(0u32, |m, &x| m | self.cands[x]);
            if feasible && needy & !reach == 0 && (left == 0 || !next.is_empty()) {
                self.chosen.push(c);
                self.dfs(&next, out);
                self.chosen.pop();
            }
            for v in 0..self.h {
                if c >> v & 1 == 1 {
                    self.load[v] -= 1;
                }
            }
            for wi in 0..w {
                let mut bits = self.miss[ci * w + wi];
                while bits != 0 {
                    let i = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    self.count[i] -= 1;
                }
            }
        }
    }
}

fn emit(h: usize, rows: &[u32], chosen: &[u32], out: &mut BTreeSet<String>) {
    let v = h;
    let mut b = GraphBuilder::new(h + 1 + chosen.len()).expect("small");
    for u in 0..h {
        for w in u + 1..h {
            if rows[u] >> w & 1 == 1 {
                b.add_edge(u, w).expect("pair");
            }
        }
    }
    for (i, &s) in chosen.iter().enumerate() {
        let x = h + 1 + i;
        b.add_edge(v, x).expect("pair");
        for u in 0..h {
            if s >> u & 1 == 1 {
                b.add_edge(u, x).expect("pair");
            }
        }
    }
    let g = b.build();
    if g.max_degree().unwrap_or(0) == chosen.len() {
        out.insert(canonical_graph6(&g));
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.len() != 4 {
        eprintln!("usage: triangle_free_lists <t> <n> <out-file>");
        std::process::exit(2);
    }
    let t: usize = args[1].parse().expect("t");
    let n: usize = args[2].parse().expect("n");
    let mut lists = Lists {
        memo: HashMap::new(),
        cache: std::env::var_os("TF_CACHE").map(PathBuf::from),
    };
    let list = lists.get(t, n);
    let mut f = std::fs::File::create(&args[3]).expect("output file");
    for g in &list {
        assert!(find_clique(g, 3).is_none() && find_independent_set(g, t).is_none());
        writeln!(f, "{}", graph6_encode(g).expect("graph6")).expect("write");
    }
    eprintln!("wrote {} graphs", list.len());
}
