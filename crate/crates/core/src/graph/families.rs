//! Named graph families used throughout tests, benches and examples.

use super::Graph;

impl Graph {
    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid complete graph")
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
    }

    /// Blow-up of `C5` where cyclic part `i` has `sizes[i]` vertices.
    ///
    /// Vertices are numbered part by part.
    pub fn blowup_c5(sizes: [usize; 5]) -> Graph {
        assert!(sizes.iter().all(|&s| s > 0), "parts must be non-empty");
        let mut start = [0; 5];
        for i in 1..5 {
            start[i] = start[i - 1] + sizes[i - 1];
        }
        let n = start[4] + sizes[4];
        let mut edges = Vec::new();
        for i in 0..5 {
            let j = (i + 1) % 5;
            for a in start[i]..start[i] + sizes[i] {
                for b in start[j]..start[j] + sizes[j] {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(n, edges).expect("valid blow-up")
    }
}
