//! Certified structural decompositions of `2K2`-free graphs.
//!
//! Each constructor computes a witness and re-checks every structural
//! property it promises before returning it, so downstream strategies can
//! rely on the witness without re-deriving it. A failed check means the
//! input was outside the class the decomposition is defined for.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::induced::find_induced_cycle;
use crate::graph::{Graph, VertexSet};

/// Layering of a diameter-3 graph from one end of a diametral path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diam3Layers {
    pub v0: usize,
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    #[serde(rename = "L0")]
    pub l0: VertexSet,
    #[serde(rename = "L1")]
    pub l1: VertexSet,
    #[serde(rename = "L2")]
    pub l2: VertexSet,
    #[serde(rename = "L3")]
    pub l3: VertexSet,
    /// Vertices of `L2` with a neighbour in `L3`.
    #[serde(rename = "B")]
    pub b: VertexSet,
    /// `L2 \ B`.
    #[serde(rename = "A")]
    pub a: VertexSet,
    /// Vertices of `A` adjacent to `v1`.
    #[serde(rename = "A1")]
    pub a1: VertexSet,
    #[serde(rename = "A2")]
    pub a2: VertexSet,
}

fn claim(holds: bool, what: &str) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::ClaimViolated(what.to_string()))
    }
}

/// Layers a connected diameter-3 graph and checks the four structural claims
/// the two-cop diameter-3 strategy depends on.
///
/// `v0 < v3` is the lexicographically least pair at distance 3; `v1` is the
/// smallest neighbour of `v0` at distance 2 from `v3`, and `v2` the smallest
/// neighbour of `v1` adjacent to `v3`.
pub fn diam3_decompose(g: &Graph) -> Result<Diam3Layers> {
    let dist = g.distance_matrix()?;
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    if diameter != 3 {
        return Err(Error::Precondition(format!("diameter is {diameter}, expected 3")));
    }
    let n = g.n();
    let (v0, v3) = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| dist[a][b] == 3)
        .expect("a pair at distance 3 exists");
    let v1 = g.neighbors(v0).iter().find(|&w| dist[w][v3] == 2).expect("shortest path");
    let v2 = g.neighbors(v1).iter().find(|&w| dist[w][v3] == 1).expect("shortest path");

    let layers = g.bfs_layers(v0)?;
    claim(layers.len() == 4, "L4 is empty")?;
    let [l0, l1, l2, l3]: [VertexSet; 4] = layers.try_into().expect("four layers");

    let b: VertexSet = l2.iter().filter(|&v| g.neighbors(v).intersects(&l3)).collect();
    claim(b.contains(v2), "v2 lies in B")?;
    let a = l2.difference(&b);
    let a1 = a.intersection(g.neighbors(v1));
    let a2 = a.difference(&a1);

    claim(g.is_stable(&l3), "claim (1): L3 is stable")?;
    claim(g.complete_between(&b, &l1)?, "claim (2): B is complete to L1")?;
    claim(g.is_stable(&a2), "claim (3): A2 is stable")?;
    // every edge inside A meets N(v2) iff A \ N(v2) is stable
    claim(
        g.is_stable(&a.difference(g.neighbors(v2))),
        "claim (4): every edge inside A has an endpoint adjacent to v2",
    )?;

    Ok(Diam3Layers { v0, v1, v2, v3, l0, l1, l2, l3, b, a, a1, a2 })
}

/// Structure of a connected `(2K2, C4)`-free graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C4FreeStructure {
    /// Empty, or an induced 5-cycle.
    #[serde(rename = "A")]
    pub a: VertexSet,
    /// A clique complete to `A`.
    #[serde(rename = "B")]
    pub b: VertexSet,
    /// A stable set anticomplete to `A`.
    #[serde(rename = "C")]
    pub c: VertexSet,
}

/// Splits `g` into a clique and a stable set by the degree-sequence test:
/// with degrees sorted non-increasingly, the first `m = max{i : d_i >= i-1}`
/// vertices form the clique. Ties in degree go to the smaller index.
///
/// At most one clique vertex can have no neighbour on the stable side; if
/// there is one and the clique has another vertex, it moves across, so the
/// stable side is maximal.
pub fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order.iter().enumerate().filter(|&(i, &v)| g.degree(v) >= i).map(|(i, _)| i + 1).max().unwrap_or(0);
    let mut clique: VertexSet = order[..m].iter().copied().collect();
    let mut stable: VertexSet = order[m..].iter().copied().collect();
    if clique.len() >= 2 {
        let loose = clique.iter().filter(|&w| !g.neighbors(w).intersects(&stable)).last();
        if let Some(w) = loose {
            clique.remove(w);
            stable.insert(w);
        }
    }
    (g.is_clique(&clique) && g.is_stable(&stable)).then_some((clique, stable))
}

pub fn c4free_decompose(g: &Graph) -> Result<C4FreeStructure> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let outside = |why: &str| Error::Class(format!("not a (2K2, C4)-free structure: {why}"));
    let (a, b, c) = match find_induced_cycle(g, 5)? {
        Some(cycle) => {
            let a: VertexSet = cycle.into_iter().collect();
            let rest = g.vertices().difference(&a);
            let b: VertexSet = rest.iter().filter(|&v| a.is_subset(g.neighbors(v))).collect();
            let c = rest.difference(&b);
            (a, b, c)
        }
        None => {
            let (b, c) = split_partition(g).ok_or_else(|| outside("no 5-cycle and not split"))?;
            (VertexSet::new(n), b, c)
        }
    };
    if !a.is_empty() && find_induced_cycle(&g.induced_subgraph(&a)?, 5)?.is_none() {
        return Err(outside("A does not induce a 5-cycle"));
    }
    if !g.is_clique(&b) {
        return Err(outside("B is not a clique"));
    }
    if !g.is_stable(&c) {
        return Err(outside("C is not stable"));
    }
    if !g.complete_between(&a, &b)? {
        return Err(outside("A is not complete to B"));
    }
    if !g.anticomplete_between(&a, &c)? {
        return Err(outside("A is not anticomplete to C"));
    }
    Ok(C4FreeStructure { a, b, c })
}

/// Partition of the vertices around the edge `uv`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    pub u: usize,
    pub v: usize,
    /// `N(u) \ N[v]`
    #[serde(rename = "A")]
    pub a: VertexSet,
    /// `N(v) \ N[u]`
    #[serde(rename = "B")]
    pub b: VertexSet,
    /// `N(u) ∩ N(v)`
    #[serde(rename = "C")]
    pub c: VertexSet,
    /// vertices adjacent to neither
    #[serde(rename = "D")]
    pub d: VertexSet,
}

impl EdgePartition {
    /// `D` is stable whenever the graph is `2K2`-free.
    pub fn d_is_stable(&self, g: &Graph) -> bool {
        g.is_stable(&self.d)
    }
}

pub fn edge_partition(g: &Graph, u: usize, v: usize) -> Result<EdgePartition> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::InvalidArgument(format!("{u}{v} is not an edge")));
    }
    let (nu, nv) = (g.closed_neighbors(u), g.closed_neighbors(v));
    let a = nu.difference(&nv);
    let b = nv.difference(&nu);
    let mut c = g.neighbors(u).intersection(g.neighbors(v));
    c.remove(u);
    c.remove(v);
    let d = g.vertices().difference(&nu.union(&nv));
    Ok(EdgePartition { u, v, a, b, c, d })
}

/// A graph whose vertices split into five stable parts arranged in a cycle,
/// consecutive parts complete and the rest anticomplete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Blowup5 {
    pub parts: [VertexSet; 5],
}

impl Blowup5 {
    /// The part containing `v`, as an index `0..5`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }
}

/// Recognises blow-ups of `C5` by grouping false twins.
///
/// Parts are listed in cyclic order starting from the part of vertex 0 and
/// heading towards whichever neighbouring part has the smaller least vertex.
pub fn recognize_blowup_c5(g: &Graph) -> Option<Blowup5> {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        match reps.iter().position(|&r| g.neighbors(r) == g.neighbors(v)) {
            Some(i) => classes[i].insert(v),
            None => {
                reps.push(v);
                classes.push(VertexSet::singleton(g.n(), v));
            }
        }
    }
    if classes.len() != 5 {
        return None;
    }
    let adjacent = |i: usize, j: usize| g.has_edge(reps[i], reps[j]);
    let nbrs: Vec<Vec<usize>> = (0..5).map(|i| (0..5).filter(|&j| adjacent(i, j)).collect()).collect();
    if nbrs.iter().any(|ns| ns.len() != 2) {
        return None;
    }
    // classes are ordered by least vertex, so nbrs[0][0] is the smaller neighbour
    let mut order = vec![0, nbrs[0][0]];
    while order.len() < 5 {
        let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        if order.contains(&next) {
            return None;
        }
        order.push(next);
    }
    if !adjacent(order[4], order[0]) {
        return None;
    }
    let parts: [VertexSet; 5] = std::array::from_fn(|i| classes[order[i]].clone());

    let ok = (0..5).all(|i| {
        let next = &parts[(i + 1) % 5];
        let across = &parts[(i + 2) % 5];
        g.is_stable(&parts[i])
            && g.complete_between(&parts[i], next).unwrap_or(false)
            && g.anticomplete_between(&parts[i], across).unwrap_or(false)
    });
    ok.then_some(Blowup5 { parts })
}
