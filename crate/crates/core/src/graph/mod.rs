//! Immutable simple graphs with bit-set adjacency.

mod families;
pub mod graph6;
pub mod induced;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use vertex_set::{Iter as VertexSetIter, VertexSet};

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; the structure cannot be mutated
/// after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::UnsupportedSize(0));
        }
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, [])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v]`: the neighbourhood of `v` together with `v`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Complement graph: an edge wherever this graph has a non-edge.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut s = all.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        let verts = keep.to_vec();
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let pos = |v: usize| verts.binary_search(&v).ok();
        let edges = verts
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| self.adj[u].iter().filter_map(pos).filter(move |&j| j > i).map(move |j| (i, j)));
        let edges: Vec<_> = edges.collect();
        Graph::from_edges(verts.len(), edges)
    }

    /// Shortest-path distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(root)?;
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([root]);
        dist[root] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// All-pairs distance matrix. Fails on disconnected graphs.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.n)
            .map(|v| self.distances_from(v)?.into_iter().collect::<Option<Vec<_>>>().ok_or(Error::Disconnected))
            .collect()
    }

    /// BFS layers from `root`: layer `i` holds the vertices at distance `i`.
    ///
    /// Vertices unreachable from `root` are not in any layer.
    pub fn bfs_layers(&self, root: usize) -> Result<Vec<VertexSet>> {
        self.check_vertex(root)?;
        let mut seen = VertexSet::singleton(self.n, root);
        let mut layers = vec![seen.clone()];
        loop {
            let mut next = VertexSet::new(self.n);
            for v in layers.last().into_iter().flat_map(VertexSet::iter) {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            if next.is_empty() {
                return Ok(layers);
            }
            seen.union_with(&next);
            layers.push(next);
        }
    }

    pub fn is_connected(&self) -> bool {
        // layer 0 always exists since n >= 1
        let reached: usize = self.bfs_layers(0).map(|layers| layers.iter().map(VertexSet::len).sum()).unwrap_or(0);
        reached == self.n
    }

    /// Maximum shortest-path length over all vertex pairs.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.n {
            let layers = self.bfs_layers(v)?;
            if layers.iter().map(VertexSet::len).sum::<usize>() != self.n {
                return Err(Error::Disconnected);
            }
            best = best.max(layers.len() - 1);
        }
        Ok(best)
    }

    pub fn is_stable(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    fn check_disjoint(a: &VertexSet, b: &VertexSet) -> Result<()> {
        if a.intersects(b) {
            return Err(Error::InvalidArgument(format!("sets {a:?} and {b:?} overlap")));
        }
        Ok(())
    }

    /// Every vertex of `a` is adjacent to every vertex of `b`.
    pub fn complete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        Self::check_disjoint(a, b)?;
        Ok(a.iter().all(|v| b.is_subset(&self.adj[v])))
    }

    /// No vertex of `a` is adjacent to any vertex of `b`.
    pub fn anticomplete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        Self::check_disjoint(a, b)?;
        Ok(a.iter().all(|v| !self.adj[v].intersects(b)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}
