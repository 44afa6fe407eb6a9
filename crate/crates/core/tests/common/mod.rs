//! Brute-force oracles. Nothing here calls into the search routines it is
//! used to check: patterns are found by scanning vertex subsets, isomorphism
//! classes by trying every permutation, and the game by depth-bounded
//! minimax over explicit positions.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use copnum::Graph;

/// Connected graph counts per order, from an independent enumeration
/// (graph atlas for n <= 7; known sequence value for n = 8).
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

/// Frozen class counts over connected graphs, computed independently by
/// brute-force subset scans on the graph atlas (n <= 7) and by vertex
/// extension with isomorphism dedup for the 2K2-free graphs on 8 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    pub two_k2_free: usize,
    pub diam3: usize,
    pub diam2: usize,
    pub c4_free: usize,
    pub c5_free: usize,
    pub triangle_free_with_c5: usize,
    pub cop_win: usize,
}

/// Counts restricted to connected 2K2-free graphs, index = n - 1.
pub const TWO_K2_FREE: [ClassCounts; 8] = [
    cc(1, 0, 0, 1, 1, 0, 1),
    cc(1, 0, 0, 1, 1, 0, 1),
    cc(2, 0, 1, 2, 2, 0, 2),
    cc(6, 1, 4, 5, 6, 0, 5),
    cc(18, 4, 13, 13, 17, 1, 13),
    cc(72, 23, 48, 36, 68, 1, 45),
    cc(341, 121, 219, 110, 304, 3, 189),
    cc(2133, 797, 1335, 397, 1771, 5, 1057),
];

/// Dismantlable connected graphs per order, n <= 7.
pub const COP_WIN_CONNECTED: [usize; 7] = [1, 1, 2, 5, 16, 68, 403];

/// Connected P5-free graphs per order, n <= 7.
pub const P5_FREE_CONNECTED: [usize; 7] = [1, 1, 2, 6, 20, 93, 515];

/// Connected 3K2-free graphs per order, n <= 7.
pub const THREE_K2_FREE_CONNECTED: [usize; 7] = [1, 1, 2, 6, 21, 112, 849];

const fn cc(
    two_k2_free: usize,
    diam3: usize,
    diam2: usize,
    c4_free: usize,
    c5_free: usize,
    triangle_free_with_c5: usize,
    cop_win: usize,
) -> ClassCounts {
    ClassCounts { two_k2_free, diam3, diam2, c4_free, c5_free, triangle_free_with_c5, cop_win }
}

pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, size, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, size, 0, &mut Vec::new(), &mut out);
    out
}

fn induced_degrees(g: &Graph, s: &[usize]) -> Vec<usize> {
    s.iter().map(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count()).collect()
}

fn induced_connected(g: &Graph, s: &[usize]) -> bool {
    let mut seen = vec![s[0]];
    let mut stack = vec![s[0]];
    while let Some(u) = stack.pop() {
        for &v in s {
            if g.has_edge(u, v) && !seen.contains(&v) {
                seen.push(v);
                stack.push(v);
            }
        }
    }
    seen.len() == s.len()
}

pub fn naive_mk2(g: &Graph, m: usize) -> bool {
    subsets(g.n(), 2 * m).iter().any(|s| induced_degrees(g, s).iter().all(|&d| d == 1))
}

pub fn naive_cycle(g: &Graph, k: usize) -> bool {
    subsets(g.n(), k).iter().any(|s| induced_degrees(g, s).iter().all(|&d| d == 2) && induced_connected(g, s))
}

pub fn naive_path(g: &Graph, t: usize) -> bool {
    subsets(g.n(), t).iter().any(|s| {
        let d = induced_degrees(g, s);
        d.iter().sum::<usize>() == 2 * (t - 1) && d.iter().all(|&x| x <= 2) && induced_connected(g, s)
    })
}

#[allow(clippy::needless_range_loop)]
pub fn naive_diameter(g: &Graph) -> Option<usize> {
    // Floyd-Warshall
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    (m < inf).then_some(m)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest adjacency bit string over all relabellings.
pub fn brute_canonical(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = (code << 1) | u64::from(adj[p[i]][p[j]]);
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}

/// Isomorphism classes of connected labelled graphs on `n` vertices, by
/// trying all `2^(n choose 2)` edge sets and all `n!` relabellings.
pub fn brute_connected_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        if naive_diameter(&g).is_some() {
            classes.insert(brute_canonical(n, &edges, &perms));
        }
    }
    classes.len()
}

/// All labelled graphs on `n` vertices (n <= 7 keeps this small enough).
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..(1 << pairs.len())).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// graph6 written straight from the format definition.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push(char::from(63 + n as u8));
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc * 2 + u8::from(b));
        s.push(char::from(63 + v));
    }
    s
}

/// Depth-bounded minimax: do `k` cops, choosing a placement first, capture
/// every robber placement within `depth` cop phases?
pub struct Minimax<'a> {
    g: &'a Graph,
    memo: HashMap<(Vec<usize>, usize, u32), bool>,
}

impl<'a> Minimax<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Minimax { g, memo: HashMap::new() }
    }

    fn closed(&self, v: usize) -> Vec<usize> {
        (0..self.g.n()).filter(|&w| w == v || self.g.has_edge(v, w)).collect()
    }

    fn cop_moves(&self, cops: &[usize]) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![]];
        for &c in cops {
            out = out
                .into_iter()
                .flat_map(|p| {
                    self.closed(c).into_iter().map(move |w| {
                        let mut q = p.clone();
                        q.push(w);
                        q
                    })
                })
                .collect();
        }
        for m in &mut out {
            m.sort_unstable();
        }
        out.sort();
        out.dedup();
        out
    }

    /// Cops to move at `(cops, robber)` capture within `depth` phases.
    pub fn cops_win(&mut self, cops: Vec<usize>, robber: usize, depth: u32) -> bool {
        if cops.contains(&robber) {
            return true;
        }
        if depth == 0 {
            return false;
        }
        let key = (cops.clone(), robber, depth);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut win = false;
        for next in self.cop_moves(&cops) {
            if next.contains(&robber) {
                win = true;
                break;
            }
            let replies = self.closed(robber);
            if replies.into_iter().all(|r| self.cops_win(next.clone(), r, depth - 1)) {
                win = true;
                break;
            }
        }
        self.memo.insert(key, win);
        win
    }

    fn placements(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|p| {
                    let last = p.last().copied().unwrap_or(0);
                    (last..self.g.n()).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Iterative deepening up to the number of positions, which bounds any
    /// optimal capture time.
    pub fn k_cops_win(&mut self, k: usize) -> bool {
        let placements = self.placements(k);
        let limit = (placements.len() * self.g.n()) as u32;
        for depth in 0..=limit {
            if placements.iter().any(|p| (0..self.g.n()).all(|r| self.cops_win(p.clone(), r, depth))) {
                return true;
            }
            // a fixpoint in the winning sets at this depth means no deeper win
            if depth > 0 && self.stable_at(k, depth) {
                return false;
            }
        }
        false
    }

    fn stable_at(&mut self, k: usize, depth: u32) -> bool {
        let placements = self.placements(k);
        let n = self.g.n();
        placements
            .iter()
            .all(|p| (0..n).all(|r| self.cops_win(p.clone(), r, depth) == self.cops_win(p.clone(), r, depth - 1)))
    }

    pub fn cop_number(&mut self, k_max: usize) -> Option<usize> {
        (1..=k_max).find(|&k| self.k_cops_win(k))
    }
}
