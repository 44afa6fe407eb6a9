//! Exact detection of the forbidden induced patterns: `mK2`, short induced
//! cycles and induced paths.
//!
//! Every search is a backtracking enumeration over bit sets; candidate
//! vertices are pruned by intersecting neighbourhoods so that each partial
//! selection is already induced.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Whether `g` contains `m` pairwise disjoint, pairwise non-adjacent edges
/// as an induced subgraph.
pub fn has_induced_mk2(g: &Graph, m: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if 2 * m > g.n() {
        return Ok(false);
    }
    Ok(extend_matching(g, m, &g.vertices(), 0))
}

/// Edges are chosen in increasing order of their smaller endpoint; `allowed`
/// holds the vertices outside the closed neighbourhoods of all chosen edges.
fn extend_matching(g: &Graph, remaining: usize, allowed: &VertexSet, start: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    if allowed.len() < 2 * remaining {
        return false;
    }
    for a in allowed.iter().filter(|&a| a >= start) {
        let partners = g.neighbors(a).intersection(allowed);
        for b in partners.iter().filter(|&b| b > a) {
            let mut next = allowed.difference(&g.closed_neighbors(a));
            next.difference_with(&g.closed_neighbors(b));
            if extend_matching(g, remaining - 1, &next, a + 1) {
                return true;
            }
        }
    }
    false
}

/// Size of the largest induced matching plus one: the least `m` for which
/// `g` is `mK2`-free.
pub fn mk2_free_level(g: &Graph) -> usize {
    (1..).find(|&m| !has_induced_mk2(g, m).expect("m >= 1")).expect("every graph is mK2-free for large m")
}

/// Whether `g` has an induced cycle of length `k` for `k` in `{3, 4, 5}`.
pub fn has_induced_cycle(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_induced_cycle(g, k)?.is_some())
}

/// The first induced `k`-cycle in search order, listed in cyclic order.
///
/// Search order is lexicographic in the cycle's smallest vertex, then in its
/// two neighbours on the cycle, so the witness is deterministic.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    match k {
        3 => Ok(find_triangle(g)),
        4 => Ok(find_c4(g)),
        5 => Ok(find_c5(g)),
        _ => Err(Error::InvalidArgument(format!("induced cycle length must be 3, 4 or 5, got {k}"))),
    }
}

fn find_triangle(g: &Graph) -> Option<Vec<usize>> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if let Some(w) = common.iter().find(|&w| w > v) {
            return Some(vec![u, v, w]);
        }
    }
    None
}

/// `a - b - c - d` with `a` the smallest vertex and `b < d` its cycle
/// neighbours; `c` is a common neighbour of `b` and `d` outside `N[a]`.
fn find_c4(g: &Graph) -> Option<Vec<usize>> {
    for a in 0..g.n() {
        let above: VertexSet = (a + 1..g.n()).collect();
        let nbrs = g.neighbors(a).intersection(&above);
        for b in nbrs.iter() {
            for d in nbrs.iter().filter(|&d| d > b && !g.has_edge(b, d)) {
                let mut opposite = g.neighbors(b).intersection(g.neighbors(d));
                opposite.difference_with(&g.closed_neighbors(a));
                opposite.intersect_with(&above);
                if let Some(c) = opposite.first() {
                    return Some(vec![a, b, c, d]);
                }
            }
        }
    }
    None
}

/// `a - b - c - d - e` with `a` the smallest vertex and `b < e`.
fn find_c5(g: &Graph) -> Option<Vec<usize>> {
    for a in 0..g.n() {
        let above: VertexSet = (a + 1..g.n()).collect();
        let nbrs = g.neighbors(a).intersection(&above);
        let outside_a = above.difference(g.neighbors(a));
        for b in nbrs.iter() {
            for e in nbrs.iter().filter(|&e| e > b && !g.has_edge(b, e)) {
                let mut cs = g.neighbors(b).intersection(&outside_a);
                cs.difference_with(&g.closed_neighbors(e));
                let mut ds = g.neighbors(e).intersection(&outside_a);
                ds.difference_with(&g.closed_neighbors(b));
                for c in cs.iter() {
                    if let Some(d) = g.neighbors(c).intersection(&ds).first() {
                        return Some(vec![a, b, c, d, e]);
                    }
                }
            }
        }
    }
    None
}

/// Whether `g` contains an induced path on `t` vertices.
pub fn has_induced_path(g: &Graph, t: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::InvalidArgument("path order must be at least 1".into()));
    }
    if t > g.n() {
        return Ok(false);
    }
    let none = VertexSet::new(g.n());
    Ok((0..g.n()).any(|v| extend_path(g, t - 1, v, &none, &VertexSet::singleton(g.n(), v))))
}

/// `blocked` is the union of closed neighbourhoods of all path vertices
/// except the current endpoint `last`; `used` is the path itself.
fn extend_path(g: &Graph, remaining: usize, last: usize, blocked: &VertexSet, used: &VertexSet) -> bool {
    if remaining == 0 {
        return true;
    }
    let mut next = g.neighbors(last).difference(blocked);
    next.difference_with(used);
    let mut blocked_next = blocked.clone();
    blocked_next.union_with(&g.closed_neighbors(last));
    next.iter().any(|w| {
        let mut used_next = used.clone();
        used_next.insert(w);
        extend_path(g, remaining - 1, w, &blocked_next, &used_next)
    })
}
