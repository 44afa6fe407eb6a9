//! Fixed inputs for the benchmarks.

use copnum::harness::random_2k2free;
use copnum::Graph;

/// A seeded 2K2-free graph, identical across runs.
pub fn two_k2_free(n: usize) -> Graph {
    random_2k2free(n, 0xC0B5).expect("generator succeeds")
}

/// Graphs of growing order for the pattern detectors.
pub fn detector_inputs() -> Vec<(String, Graph)> {
    vec![
        ("petersen".into(), Graph::petersen()),
        ("cycle-40".into(), Graph::cycle(40)),
        ("2k2free-24".into(), two_k2_free(24)),
        ("2k2free-80".into(), two_k2_free(80)),
    ]
}
