//! Exact cops-and-robbers solver.
//!
//! Positions are `(cops, robber)` pairs where `cops` is a sorted multiset of
//! `k` vertices. A cop phase moves every cop to a vertex of its closed
//! neighbourhood simultaneously; a robber phase moves the robber likewise.
//! Capture happens when a cop and the robber share a vertex, whichever side
//! moved last.
//!
//! [`solve`] labels every cop-to-move position with the number of cop phases
//! the cops need to force capture (or [`Label::RobberWins`]), by retrograde
//! analysis from the capture positions.

mod dismantle;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use dismantle::is_dismantlable;

/// Default cap on `n^(k+1)`, the size of the ordered position space.
pub const DEFAULT_STATE_BUDGET: u128 = 1 << 26;

const UNREACHED: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Turn {
    CopMove,
    RobberMove,
}

/// A position of the game with the cops stored as a sorted tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    cops: Vec<usize>,
    robber: usize,
    turn: Turn,
}

impl GameState {
    pub fn new(cops: impl Into<Vec<usize>>, robber: usize, turn: Turn) -> Self {
        let mut cops = cops.into();
        cops.sort_unstable();
        GameState { cops, robber, turn }
    }

    pub fn cops(&self) -> &[usize] {
        &self.cops
    }

    pub fn robber(&self) -> usize {
        self.robber
    }

    pub fn turn(&self) -> Turn {
        self.turn
    }

    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

/// Value of a position under optimal play.
///
/// Orders finite capture times before `RobberWins`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// Cops capture within this many cop phases.
    Capture(u32),
    /// The robber evades forever.
    RobberWins,
}

impl Label {
    fn from_raw(raw: u32) -> Label {
        if raw == UNREACHED {
            Label::RobberWins
        } else {
            Label::Capture(raw)
        }
    }

    pub fn capture_time(self) -> Option<u32> {
        match self {
            Label::Capture(t) => Some(t),
            Label::RobberWins => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Capture(t) => write!(f, "{t}"),
            Label::RobberWins => f.write_str("robber-wins"),
        }
    }
}

/// Complete solution of the `k`-cop game on one graph.
#[derive(Clone, Debug)]
pub struct SolveResult {
    k: usize,
    n: usize,
    closed: Vec<Vec<usize>>,
    /// Sorted cop tuples in lexicographic order, `k` entries per config.
    configs: Vec<usize>,
    /// Ordered cop tuple (mixed radix `n`) to config id.
    index: Vec<u32>,
    succ: Vec<Vec<u32>>,
    occupied: Vec<bool>,
    labels: Vec<u32>,
    best_initial: Option<Vec<usize>>,
    capture_time: Option<u32>,
}

impl SolveResult {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether some placement of the cops beats every robber placement.
    pub fn cop_win(&self) -> bool {
        self.best_initial.is_some()
    }

    /// The placement minimising the worst-case capture time, ties broken by
    /// the lexicographically smallest sorted tuple.
    pub fn best_initial(&self) -> Option<&[usize]> {
        self.best_initial.as_deref()
    }

    /// Worst-case number of cop phases from the best placement.
    pub fn capture_time(&self) -> Option<u32> {
        self.capture_time
    }

    /// Number of labelled cop-to-move positions.
    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    fn config(&self, id: usize) -> &[usize] {
        &self.configs[id * self.k..(id + 1) * self.k]
    }

    fn config_id(&self, cops: &[usize]) -> Result<usize> {
        if cops.len() != self.k {
            return Err(Error::InvalidArgument(format!("expected {} cops, got {}", self.k, cops.len())));
        }
        let mut code = 0usize;
        for &c in cops.iter().rev() {
            if c >= self.n {
                return Err(Error::VertexOutOfRange { vertex: c, n: self.n });
            }
            code = code * self.n + c;
        }
        Ok(self.index[code] as usize)
    }

    fn robber_value(&self, config: usize, robber: usize) -> u32 {
        if self.occupied[config * self.n + robber] {
            return 0;
        }
        self.closed[robber].iter().map(|&r| self.labels[config * self.n + r]).max().unwrap_or(0)
    }

    /// Label of `state`: cop phases to capture with the cops to move, or the
    /// value of the robber's best reply when the robber is to move.
    pub fn label(&self, state: &GameState) -> Result<Label> {
        let id = self.config_id(state.cops())?;
        if state.robber >= self.n {
            return Err(Error::VertexOutOfRange { vertex: state.robber, n: self.n });
        }
        let raw = match state.turn {
            Turn::CopMove => self.labels[id * self.n + state.robber],
            Turn::RobberMove => self.robber_value(id, state.robber),
        };
        Ok(Label::from_raw(raw))
    }

    /// Sorted cop tuples reachable in one cop phase, in lexicographic order.
    pub fn cop_successors(&self, cops: &[usize]) -> Result<Vec<Vec<usize>>> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let id = self.config_id(&sorted)?;
        Ok(self.succ[id].iter().map(|&s| self.config(s as usize).to_vec()).collect())
    }
}

/// Decides the `k`-cop game on `g` with the default state budget.
pub fn solve(g: &Graph, k: usize) -> Result<SolveResult> {
    solve_with_budget(g, k, DEFAULT_STATE_BUDGET)
}

/// Like [`solve`] with an explicit cap on `n^(k+1)`.
#[allow(clippy::needless_range_loop)]
pub fn solve_with_budget(g: &Graph, k: usize, budget: u128) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = g.n();
    let states = (n as u128).checked_pow(k as u32 + 1).unwrap_or(u128::MAX);
    if states > budget {
        return Err(Error::ResourceExceeded { states, budget });
    }

    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighbors(v).to_vec()).collect();

    let configs = sorted_tuples(n, k);
    let config_count = configs.len() / k;
    let ordered = n.pow(k as u32);
    let mut index = vec![0u32; ordered];
    let mut digits = vec![0usize; k];
    let tuples: Vec<&[usize]> = configs.chunks_exact(k).collect();
    for (code, slot) in index.iter_mut().enumerate() {
        let mut rest = code;
        for d in digits.iter_mut() {
            *d = rest % n;
            rest /= n;
        }
        digits.sort_unstable();
        *slot = tuples.binary_search(&digits.as_slice()).expect("every sorted tuple is a config") as u32;
    }

    let succ: Vec<Vec<u32>> = configs
        .chunks_exact(k)
        .map(|cops| {
            let mut out = Vec::new();
            let mut choice = vec![0usize; k];
            loop {
                let code = (0..k).rev().fold(0usize, |acc, i| acc * n + closed[cops[i]][choice[i]]);
                out.push(index[code]);
                // advance the mixed-radix choice counter
                let mut i = 0;
                while i < k {
                    choice[i] += 1;
                    if choice[i] < closed[cops[i]].len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();

    let total = config_count * n;
    let mut occupied = vec![false; total];
    for (id, cops) in configs.chunks_exact(k).enumerate() {
        for &c in cops {
            occupied[id * n + c] = true;
        }
    }

    let mut labels = vec![UNREACHED; total];
    // robber-to-move positions: neighbours of the robber not yet labelled
    let mut pending = vec![0u32; total];
    for id in 0..config_count {
        for r in 0..n {
            let s = id * n + r;
            if occupied[s] {
                labels[s] = 0;
            } else {
                pending[s] = closed[r].iter().filter(|&&x| !occupied[id * n + x]).count() as u32;
            }
        }
    }

    // A cop phase that lands on the robber captures at once.
    let mut queue = VecDeque::new();
    for id in 0..config_count {
        for r in 0..n {
            let s = id * n + r;
            if labels[s] == UNREACHED && succ[id].iter().any(|&t| occupied[t as usize * n + r]) {
                labels[s] = 1;
                queue.push_back(s);
            }
        }
    }

    // Labels leave the queue in non-decreasing order, so a robber position
    // resolves at the maximum of its replies and a cop position is first
    // reached through its minimising successor. Cop moves are reversible,
    // so the successor lists double as predecessor lists.
    while let Some(s) = queue.pop_front() {
        let (id, r) = (s / n, s % n);
        let label = labels[s];
        for &x in &closed[r] {
            let rs = id * n + x;
            if occupied[rs] {
                continue;
            }
            pending[rs] -= 1;
            if pending[rs] == 0 {
                for &p in &succ[id] {
                    let ps = p as usize * n + x;
                    if labels[ps] == UNREACHED {
                        labels[ps] = label + 1;
                        queue.push_back(ps);
                    }
                }
            }
        }
    }

    let (best_id, worst) = (0..config_count)
        .map(|id| (id, labels[id * n..(id + 1) * n].iter().copied().max().unwrap_or(0)))
        .min_by_key(|&(id, worst)| (worst, id))
        .expect("at least one placement");
    let cop_win = worst != UNREACHED;

    Ok(SolveResult {
        k,
        n,
        best_initial: cop_win.then(|| configs[best_id * k..(best_id + 1) * k].to_vec()),
        capture_time: cop_win.then_some(worst),
        closed,
        configs,
        index,
        succ,
        occupied,
        labels,
    })
}

/// All non-decreasing `k`-tuples over `0..n` in lexicographic order, flat.
fn sorted_tuples(n: usize, k: usize) -> Vec<usize> {
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<usize>) {
        if cur.len() == k {
            out.extend_from_slice(cur);
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// A cop move achieving the optimal label from a cop-to-move position.
///
/// Returns the sorted successor tuple; among optimal moves the
/// lexicographically smallest is chosen. A position that is already a
/// capture keeps the cops where they are.
pub fn optimal_cop_move(res: &SolveResult, state: &GameState) -> Result<Vec<usize>> {
    if state.turn != Turn::CopMove {
        return Err(Error::InvalidArgument("cops are not to move".into()));
    }
    let label = match res.label(state)? {
        Label::RobberWins => return Err(Error::NoWinningMove),
        Label::Capture(0) => return Ok(state.cops.clone()),
        Label::Capture(t) => t,
    };
    let id = res.config_id(&state.cops)?;
    res.succ[id]
        .iter()
        .map(|&t| t as usize)
        .find(|&t| res.robber_value(t, state.robber) == label - 1)
        .map(|t| res.config(t).to_vec())
        .ok_or(Error::NoWinningMove)
}

/// The robber reply from a robber-to-move position that maximises the
/// remaining capture time, preferring escape, ties to the smallest vertex.
pub fn best_robber_response(res: &SolveResult, state: &GameState) -> usize {
    debug_assert_eq!(state.turn, Turn::RobberMove);
    let id = res.config_id(&state.cops).expect("cop tuple must be valid for this solve");
    let mut best = state.robber;
    let mut best_raw = None;
    for &x in &res.closed[state.robber] {
        let raw = res.labels[id * res.n + x];
        if best_raw.is_none_or(|b| raw > b) {
            best = x;
            best_raw = Some(raw);
        }
    }
    best
}

/// Least `k <= k_max` for which `k` cops win on the connected graph `g`.
pub fn cop_number(g: &Graph, k_max: usize) -> Result<usize> {
    cop_number_with_budget(g, k_max, DEFAULT_STATE_BUDGET)
}

pub fn cop_number_with_budget(g: &Graph, k_max: usize, budget: u128) -> Result<usize> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for k in 1..=k_max {
        if solve_with_budget(g, k, budget)?.cop_win() {
            return Ok(k);
        }
    }
    Err(Error::BoundExceeded { k_max })
}
