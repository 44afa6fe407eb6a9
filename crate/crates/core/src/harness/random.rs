//! Seeded sampling of connected `2K2`-free graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::induced::has_induced_mk2;
use crate::graph::Graph;

/// Rejection attempts before giving up.
pub const REJECTION_BUDGET: usize = 10_000;

const P_START: f64 = 0.5;
const P_STEP: f64 = 0.01;

/// A connected `2K2`-free graph on `n` vertices, determined by `seed`.
///
/// Half of the seeds draw a random split graph (always `2K2`-free); the rest
/// use rejection sampling over `G(n, p)`, raising `p` after every rejection.
pub fn random_2k2free(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 1 {
        return Graph::empty(1);
    }
    if rng.gen_bool(0.5) {
        return random_split(n, &mut rng);
    }
    let mut p = P_START;
    for _ in 0..REJECTION_BUDGET {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() && !has_induced_mk2(&g, 2)? {
            return Ok(g);
        }
        p = (p + P_STEP).min(1.0);
    }
    Err(Error::ResourceExceeded { states: REJECTION_BUDGET as u128, budget: REJECTION_BUDGET as u128 })
}

/// A clique of random size plus a stable set, each stable vertex attached to
/// a random non-empty subset of the clique, under a random relabelling.
fn random_split(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let clique = rng.gen_range(1..=n);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((label[u], label[v]));
        }
    }
    for s in clique..n {
        let mut attached: Vec<usize> = (0..clique).filter(|_| rng.gen_bool(0.5)).collect();
        if attached.is_empty() {
            attached.push(rng.gen_range(0..clique));
        }
        edges.extend(attached.into_iter().map(|c| (label[s], label[c])));
    }
    Graph::from_edges(n, edges)
}
