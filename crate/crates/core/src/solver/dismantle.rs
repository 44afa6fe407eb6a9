use crate::graph::{Graph, VertexSet};

/// Whether `g` reduces to a single vertex by repeatedly deleting a corner,
/// a vertex `u` whose closed neighbourhood lies inside that of another
/// remaining vertex.
///
/// Deleting a corner never destroys dismantlability, so the greedy order is
/// exact. Connected graphs are dismantlable exactly when one cop wins.
pub fn is_dismantlable(g: &Graph) -> bool {
    let mut alive = g.vertices();
    while alive.len() > 1 {
        let closed = |v: usize| -> VertexSet {
            let mut s = g.closed_neighbors(v);
            s.intersect_with(&alive);
            s
        };
        let corner = alive.iter().find(|&u| {
            let nu = closed(u);
            alive.iter().any(|v| v != u && nu.is_subset(&closed(v)))
        });
        match corner {
            Some(u) => alive.remove(u),
            None => return false,
        }
    }
    true
}
