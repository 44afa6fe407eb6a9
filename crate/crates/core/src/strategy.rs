//! Explicit cop strategies for `2K2`-free graphs.
//!
//! A strategy fixes a cop placement and a deterministic move rule. The only
//! memory a strategy keeps is the [`Branch`] it latches when the robber
//! places; every later move is a function of the latched branch and the
//! current positions. Every rule is total: whatever the robber does, the
//! policy returns a legal move (each cop stays or crosses one edge).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decompose::{
    c4free_decompose, diam3_decompose, edge_partition, recognize_blowup_c5, Blowup5, C4FreeStructure, Diam3Layers,
    EdgePartition,
};
use crate::error::{Error, Result};
use crate::graph::induced::{has_induced_cycle, has_induced_mk2};
use crate::graph::Graph;
use crate::solver::{cop_number, optimal_cop_move, solve, GameState, SolveResult, Turn};

/// Which argument produced a strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Provenance {
    /// Three cops: two guard an edge, one walks to the frozen robber.
    Prop1,
    /// Two cops on the middle of a diametral path of a diameter-3 graph.
    Thm1Diam3,
    /// Two cops on the clique side of a `(2K2, C4)`-free graph.
    #[serde(rename = "THM2_C4FREE")]
    Thm2C4Free,
    /// Two cops on an edge of a `(2K2, C5)`-free graph.
    #[serde(rename = "THM2_C5FREE")]
    Thm2C5Free,
    /// Two cops on a blow-up of `C5`.
    Thm2Blowup5,
    /// Moves extracted from the exact solver.
    SolverFallback,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Prop1 => "PROP1",
            Provenance::Thm1Diam3 => "THM1_DIAM3",
            Provenance::Thm2C4Free => "THM2_C4FREE",
            Provenance::Thm2C5Free => "THM2_C5FREE",
            Provenance::Thm2Blowup5 => "THM2_BLOWUP5",
            Provenance::SolverFallback => "SOLVER_FALLBACK",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The plan a strategy commits to once the robber has placed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The robber started next to a cop.
    Dominated,
    /// The robber cannot move safely; cop `walker` walks to it while the
    /// other cops hold their vertices.
    Frozen { walker: usize },
    /// One coordinated move to `target`, after which every robber option is
    /// next to a cop. `swapped` records that the symmetric variant was used.
    Trap { target: Vec<usize>, swapped: bool },
    /// Solver-optimal play.
    Optimal,
}

impl Branch {
    pub fn label(&self) -> &'static str {
        match self {
            Branch::Dominated => "dominated",
            Branch::Frozen { .. } => "frozen",
            Branch::Trap { swapped: false, .. } => "trap",
            Branch::Trap { swapped: true, .. } => "trap-swapped",
            Branch::Optimal => "optimal",
        }
    }
}

/// A cop strategy as seen by the verifier.
pub trait CopPolicy {
    fn cop_count(&self) -> usize;

    /// Starting vertex of each cop, indexed by cop.
    fn placement(&self) -> &[usize];

    /// Chooses the branch once the robber has placed at `robber`.
    fn begin(&self, robber: usize) -> Branch;

    /// Next position of each cop, indexed like `cops`.
    fn next_move(&self, branch: &Branch, cops: &[usize], robber: usize) -> Vec<usize>;
}

/// Whether moving cop `i` from `from[i]` to `to[i]` is legal for every cop.
pub fn is_legal_move(g: &Graph, from: &[usize], to: &[usize]) -> bool {
    from.len() == to.len() && from.iter().zip(to).all(|(&a, &b)| b < g.n() && (a == b || g.has_edge(a, b)))
}

#[derive(Clone, Debug)]
enum Plan {
    Prop1,
    Thm1(Box<Diam3Layers>),
    Clique,
    EdgeTrap(Option<Box<EdgePartition>>),
    Blowup(Box<Blowup5>),
    Solver(Box<SolveResult>),
}

/// A deterministic cop strategy on one graph.
#[derive(Clone, Debug)]
pub struct Strategy {
    graph: Graph,
    dist: Vec<Vec<usize>>,
    placement: Vec<usize>,
    provenance: Provenance,
    plan: Plan,
}

impl Strategy {
    fn new(g: &Graph, placement: Vec<usize>, provenance: Provenance, plan: Plan) -> Result<Self> {
        Ok(Strategy { dist: g.distance_matrix()?, graph: g.clone(), placement, provenance, plan })
    }

    pub fn k(&self) -> usize {
        self.placement.len()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Next vertex on the lexicographically first shortest path.
    fn step_toward(&self, from: usize, to: usize) -> usize {
        if from == to {
            return from;
        }
        let d = self.dist[from][to];
        self.graph
            .neighbors(from)
            .iter()
            .find(|&w| self.dist[w][to] + 1 == d)
            .expect("connected graph has a shortest path")
    }

    fn pursue(&self, walker: usize, cops: &[usize], robber: usize) -> Vec<usize> {
        let mut next = cops.to_vec();
        next[walker] = self.step_toward(cops[walker], robber);
        next
    }

    fn solver_move(&self, res: &SolveResult, cops: &[usize], robber: usize) -> Vec<usize> {
        let state = GameState::new(cops.to_vec(), robber, Turn::CopMove);
        optimal_cop_move(res, &state)
            .ok()
            .and_then(|target| assign_cops(&self.graph, cops, &target))
            .unwrap_or_else(|| cops.to_vec())
    }
}

impl CopPolicy for Strategy {
    fn cop_count(&self) -> usize {
        self.placement.len()
    }

    fn placement(&self) -> &[usize] {
        &self.placement
    }

    fn begin(&self, robber: usize) -> Branch {
        if let Plan::Solver(_) = self.plan {
            return Branch::Optimal;
        }
        let g = &self.graph;
        if self.placement.iter().any(|&c| g.closed_neighbors(c).contains(robber)) {
            return Branch::Dominated;
        }
        let pursue = Branch::Frozen { walker: self.k() - 1 };
        match &self.plan {
            Plan::Thm1(d) if d.a2.contains(robber) => {
                let y = g.neighbors(robber).intersection(&d.l1).first().expect("every L2 vertex has a neighbour in L1");
                Branch::Trap { target: vec![d.v2, y], swapped: false }
            }
            Plan::EdgeTrap(Some(p)) => {
                let exits = g.neighbors(robber).intersection(&p.a.union(&p.b));
                match exits.first() {
                    Some(y) if p.b.contains(y) => Branch::Trap { target: vec![p.v, y], swapped: false },
                    Some(y) => Branch::Trap { target: vec![y, p.u], swapped: true },
                    None => pursue,
                }
            }
            Plan::Blowup(b) => {
                let w = b.parts[1].first().expect("non-empty part");
                let (x, y) = (self.placement[0], self.placement[1]);
                match b.part_of(robber) {
                    Some(0) => Branch::Trap { target: vec![x, w], swapped: false },
                    Some(2) => Branch::Trap { target: vec![w, y], swapped: true },
                    _ => pursue,
                }
            }
            _ => pursue,
        }
    }

    fn next_move(&self, branch: &Branch, cops: &[usize], robber: usize) -> Vec<usize> {
        if let (Plan::Solver(res), Branch::Optimal) = (&self.plan, branch) {
            return self.solver_move(res, cops, robber);
        }
        if let Some(i) = cops.iter().position(|&c| self.graph.closed_neighbors(c).contains(robber)) {
            let mut next = cops.to_vec();
            next[i] = robber;
            return next;
        }
        let last = cops.len() - 1;
        match branch {
            Branch::Frozen { walker } => self.pursue((*walker).min(last), cops, robber),
            Branch::Trap { target, .. }
                if cops == self.placement.as_slice() && is_legal_move(&self.graph, cops, target) =>
            {
                target.clone()
            }
            _ => self.pursue(last, cops, robber),
        }
    }
}

/// Matches the sorted target tuple to individual cops so every cop makes a
/// legal move.
fn assign_cops(g: &Graph, cops: &[usize], target: &[usize]) -> Option<Vec<usize>> {
    fn rec(g: &Graph, cops: &[usize], target: &[usize], used: &mut [bool], out: &mut Vec<usize>) -> bool {
        let i = out.len();
        if i == cops.len() {
            return true;
        }
        for j in 0..target.len() {
            if !used[j] && (target[j] == cops[i] || g.has_edge(cops[i], target[j])) {
                used[j] = true;
                out.push(target[j]);
                if rec(g, cops, target, used, out) {
                    return true;
                }
                out.pop();
                used[j] = false;
            }
        }
        false
    }
    let mut out = Vec::with_capacity(cops.len());
    rec(g, cops, target, &mut vec![false; target.len()], &mut out).then_some(out)
}

fn require_2k2_free(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if has_induced_mk2(g, 2)? {
        return Err(Error::Class("graph contains an induced 2K2".into()));
    }
    Ok(())
}

/// Three cops: two stationary on the least edge `uv`, the third starting on
/// `u` and walking to the robber. Outside `N[u] ∪ N[v]` lies a stable set, so
/// a robber placed there cannot move without stepping next to a guard.
pub fn strategy_prop1(g: &Graph) -> Result<Strategy> {
    require_2k2_free(g)?;
    let (u, v) = g.edges().next().unwrap_or((0, 0));
    Strategy::new(g, vec![u, v, u], Provenance::Prop1, Plan::Prop1)
}

/// Two cops on `v1, v2` of the diametral path.
///
/// A robber in `L3` is frozen (its neighbours are in `B`, all adjacent to
/// `v1`), so the `v2` cop walks to it. A robber in `A2` is trapped by moving
/// the cops to `(v2, y)` with `y` its least neighbour in `L1`.
pub fn strategy_thm1(g: &Graph, layers: &Diam3Layers) -> Result<Strategy> {
    let placement = vec![layers.v1, layers.v2];
    Strategy::new(g, placement, Provenance::Thm1Diam3, Plan::Thm1(Box::new(layers.clone())))
}

/// One cop holds the least clique vertex `b`, which dominates `A ∪ B`; the
/// other walks from `b` to the robber, which is frozen in `C`. With `B`
/// empty the graph is `C5` and the blow-up strategy takes over.
pub fn strategy_c4free(g: &Graph, s: &C4FreeStructure) -> Result<Strategy> {
    match s.b.first() {
        Some(b) => Strategy::new(g, vec![b, b], Provenance::Thm2C4Free, Plan::Clique),
        None => {
            let blowup =
                recognize_blowup_c5(g).ok_or_else(|| Error::Class("empty clique side but graph is not C5".into()))?;
            let mut st = strategy_blowup_c5(g, &blowup)?;
            st.provenance = Provenance::Thm2C4Free;
            Ok(st)
        }
    }
}

/// Two cops on the least edge `uv`. A robber in `D` next to some `y` in
/// `B` is trapped by the move `v -> y, u -> v` (its `A`-neighbours are all
/// adjacent to `y` in a `C5`-free graph); the case `y` in `A` is the mirror
/// image. A robber with no neighbour in `A ∪ B` is frozen.
pub fn strategy_c5free(g: &Graph) -> Result<Strategy> {
    require_2k2_free(g)?;
    if has_induced_cycle(g, 5)? {
        return Err(Error::Class("graph contains an induced C5".into()));
    }
    match g.edges().next() {
        Some((u, v)) => {
            let p = edge_partition(g, u, v)?;
            if !p.d_is_stable(g) {
                return Err(Error::ClaimViolated("D is stable".into()));
            }
            Strategy::new(g, vec![u, v], Provenance::Thm2C5Free, Plan::EdgeTrap(Some(Box::new(p))))
        }
        None => Strategy::new(g, vec![0, 0], Provenance::Thm2C5Free, Plan::EdgeTrap(None)),
    }
}

/// Cops on the least vertices `x` of the first part and `y` of the third.
/// Their neighbourhoods cover the other three parts, so the robber starts in
/// the first or third part; the far cop then steps into the second part and
/// every robber option is adjacent to a cop.
pub fn strategy_blowup_c5(g: &Graph, b: &Blowup5) -> Result<Strategy> {
    let x = b.parts[0].first().ok_or_else(|| Error::InvalidArgument("empty part".into()))?;
    let y = b.parts[2].first().ok_or_else(|| Error::InvalidArgument("empty part".into()))?;
    Strategy::new(g, vec![x, y], Provenance::Thm2Blowup5, Plan::Blowup(Box::new(b.clone())))
}

/// Cops play solver-optimal moves with `cop_number(g, k_max)` cops.
pub fn strategy_solver(g: &Graph, k_max: usize) -> Result<Strategy> {
    let k = cop_number(g, k_max)?;
    let res = solve(g, k)?;
    let placement = res.best_initial().expect("cop number wins").to_vec();
    Strategy::new(g, placement, Provenance::SolverFallback, Plan::Solver(Box::new(res)))
}

/// Picks the first applicable explicit strategy: diameter 3, then
/// `C4`-free, `C5`-free, triangle-free, and otherwise the solver.
pub fn select_strategy(g: &Graph) -> Result<Strategy> {
    require_2k2_free(g)?;
    if g.diameter()? == 3 {
        return strategy_thm1(g, &diam3_decompose(g)?);
    }
    if !has_induced_cycle(g, 4)? {
        return strategy_c4free(g, &c4free_decompose(g)?);
    }
    if !has_induced_cycle(g, 5)? {
        return strategy_c5free(g);
    }
    if !has_induced_cycle(g, 3)? {
        let b = recognize_blowup_c5(g)
            .ok_or_else(|| Error::Class("triangle-free with C5 but not a blow-up of C5".into()))?;
        return strategy_blowup_c5(g, &b);
    }
    strategy_solver(g, 3)
}

/// One position in a play: where each cop and the robber stand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    pub cops: Vec<usize>,
    pub robber: usize,
}

/// A recorded play. `rounds[0]` is the placement; every later snapshot is
/// taken after a cop phase and the robber's reply (or right after the cop
/// phase when it captured).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyTrace {
    pub rounds: Vec<Snapshot>,
    pub captured: bool,
    pub cop_phases: u32,
    pub branch: String,
}

#[derive(Serialize)]
struct TraceLine<'a> {
    phase: usize,
    cops: &'a [usize],
    robber: usize,
    branch: &'a str,
}

impl StrategyTrace {
    /// One JSON object per snapshot.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for (phase, s) in self.rounds.iter().enumerate() {
            let line = TraceLine { phase, cops: &s.cops, robber: s.robber, branch: &self.branch };
            out.push_str(&serde_json::to_string(&line).expect("trace serializes"));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let rounds: Vec<_> = self
            .rounds
            .iter()
            .enumerate()
            .map(|(phase, s)| TraceLine { phase, cops: &s.cops, robber: s.robber, branch: &self.branch })
            .collect();
        serde_json::to_value(rounds).expect("trace serializes")
    }
}
