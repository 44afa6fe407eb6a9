//! Isomorphism-free enumeration of small connected graphs.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves a
//! connected graph, so the connected graphs on `n` vertices are exactly the
//! one-vertex extensions (by a non-empty neighbourhood) of connected graphs
//! on `n - 1` vertices. Extensions are deduplicated by canonical code.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the built-in enumeration supports.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Largest order [`canonical_code`] supports (the code must fit in 64 bits).
pub const MAX_CANONICAL_ORDER: usize = 11;

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).low_word()).collect()
}

/// Upper-triangle bits in graph6 order, first pair in the most significant
/// position, with vertex `order[i]` relabelled `i`.
fn code_for(adj: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | ((adj[order[i]] >> order[j]) & 1);
        }
    }
    code
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * (n.saturating_sub(1)) / 2;
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if (code >> (total - 1 - k)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("decoded code is a valid graph")
}

/// Splits cells by neighbour counts into other cells until the ordered
/// partition is equitable. The procedure depends only on the partition and
/// the counts, so it commutes with relabelling.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut groups = [0u64; MAX_CANONICAL_ORDER + 1];
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    groups[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                if groups.iter().filter(|&&m| m != 0).count() > 1 {
                    cells.splice(c..=c, groups.into_iter().filter(|&m| m != 0));
                    continue 'restart;
                }
            }
        }
        return;
    }
}

fn search(adj: &[u64], mut cells: Vec<u64>, best: &mut Option<(u64, Vec<usize>)>) {
    refine(adj, &mut cells);
    match cells.iter().position(|c| c.count_ones() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = code_for(adj, &order);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, order));
            }
        }
        Some(t) => {
            let cell = cells[t];
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut branch = Vec::with_capacity(cells.len() + 1);
                branch.extend_from_slice(&cells[..t]);
                branch.push(1 << v);
                branch.push(cell & !(1 << v));
                branch.extend_from_slice(&cells[t + 1..]);
                search(adj, branch, best);
            }
        }
    }
}

fn canonical(adj: &[u64]) -> (u64, Vec<usize>) {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = None;
    search(adj, vec![all], &mut best);
    best.expect("search reaches at least one leaf")
}

/// An isomorphism invariant that separates non-isomorphic graphs: the
/// largest adjacency code over the leaves of an individualisation-refinement
/// search.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.n() > MAX_CANONICAL_ORDER {
        return Err(Error::UnsupportedSize(g.n()));
    }
    Ok(canonical(&masks(g)).0)
}

/// The canonical relabelling of `g`. Isomorphic graphs map to equal graphs.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.n(), canonical_code(g)?))
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical form, ordered by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_up_to(n)?.pop().unwrap_or_default())
}

/// The connected graphs of every order `1..=n_max`, one vector per order.
pub fn enumerate_connected_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n_max) {
        return Err(Error::InvalidArgument(format!(
            "built-in enumeration covers 1..={MAX_ENUMERATION_ORDER} vertices, got {n_max}"
        )));
    }
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    for n in 2..=n_max {
        let mut seen = BTreeSet::new();
        for &code in &levels[n - 2] {
            let base = masks(&graph_from_code(n - 1, code));
            let mut adj = base.clone();
            adj.push(0);
            for attach in 1u64..(1 << (n - 1)) {
                for (v, m) in adj[..n - 1].iter_mut().enumerate() {
                    *m = base[v] | (((attach >> v) & 1) << (n - 1));
                }
                adj[n - 1] = attach;
                seen.insert(canonical(&adj).0);
            }
        }
        levels.push(seen.into_iter().collect());
    }
    Ok(levels
        .into_iter()
        .enumerate()
        .map(|(i, codes)| codes.into_iter().map(|c| graph_from_code(i + 1, c)).collect())
        .collect())
}
