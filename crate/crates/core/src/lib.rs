//! Exact cops-and-robbers analysis for `2K2`-free graphs.
//!
//! The crate bundles four layers:
//!
//! * [`graph`]: immutable bit-set graphs, graph6 I/O and induced-pattern
//!   detection;
//! * [`solver`]: an exact retrograde solver for the `k`-cop game;
//! * [`decompose`] and [`strategy`]: certified structural decompositions of
//!   `2K2`-free graphs and the explicit cop strategies built on them;
//! * [`harness`]: enumeration, random generation, adversarial verification
//!   and class-wide sweeps.

pub mod decompose;
pub mod error;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod strategy;

pub use decompose::{Blowup5, C4FreeStructure, Diam3Layers, EdgePartition};
pub use error::{Error, Result};
pub use graph::graph6::{parse_graph6, read_graph6, write_graph6};
pub use graph::induced::{has_induced_cycle, has_induced_mk2, has_induced_path, mk2_free_level};
pub use graph::{Graph, VertexSet};
pub use harness::{SweepMode, SweepReport, Verdict};
pub use solver::{
    best_robber_response, cop_number, is_dismantlable, optimal_cop_move, solve, GameState, Label, SolveResult, Turn,
};
pub use strategy::{select_strategy, Branch, CopPolicy, Provenance, Strategy, StrategyTrace};
