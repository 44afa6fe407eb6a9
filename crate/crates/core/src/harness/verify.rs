//! Adversarial verification of cop strategies.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{best_robber_response, solve, GameState, SolveResult, Turn};
use crate::strategy::{is_legal_move, CopPolicy, Snapshot, StrategyTrace};

/// Proof that the robber survives: the play up to the repeated position (or
/// up to the phase cap).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscapeWitness {
    pub trace: StrategyTrace,
    /// Index in `trace.rounds` where the repeated cycle starts; `None` when
    /// the phase cap ran out first.
    pub cycle_start: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Captured(StrategyTrace),
    Escaped(EscapeWitness),
}

impl Verdict {
    pub fn is_capture(&self) -> bool {
        matches!(self, Verdict::Captured(_))
    }

    pub fn trace(&self) -> &StrategyTrace {
        match self {
            Verdict::Captured(t) => t,
            Verdict::Escaped(w) => &w.trace,
        }
    }

    /// Cop phases to capture, if captured.
    pub fn capture_phases(&self) -> Option<u32> {
        match self {
            Verdict::Captured(t) => Some(t.cop_phases),
            Verdict::Escaped(_) => None,
        }
    }
}

/// Default phase cap: `n^2`.
pub fn default_phase_cap(g: &Graph) -> u32 {
    (g.n() * g.n()).max(1) as u32
}

/// Plays `policy` against the solver-optimal robber from every robber
/// placement and returns the worst play: any escape, otherwise the longest
/// capture (ties to the smallest starting vertex).
pub fn verify_adversarial<P: CopPolicy + ?Sized>(g: &Graph, policy: &P, phase_cap: u32) -> Result<Verdict> {
    let res = solve(g, policy.cop_count())?;
    let mut worst: Option<Verdict> = None;
    for r0 in 0..g.n() {
        let verdict = play(g, policy, &res, r0, phase_cap)?;
        let replace = match (&worst, &verdict) {
            (None, _) => true,
            (Some(Verdict::Escaped(_)), _) => false,
            (Some(Verdict::Captured(_)), Verdict::Escaped(_)) => true,
            (Some(Verdict::Captured(a)), Verdict::Captured(b)) => b.cop_phases > a.cop_phases,
        };
        if replace {
            worst = Some(verdict);
        }
    }
    Ok(worst.expect("graph has a vertex"))
}

fn play<P: CopPolicy + ?Sized>(g: &Graph, policy: &P, res: &SolveResult, r0: usize, phase_cap: u32) -> Result<Verdict> {
    let branch = policy.begin(r0);
    let mut cops = policy.placement().to_vec();
    let mut robber = r0;
    let mut trace = StrategyTrace {
        rounds: vec![Snapshot { cops: cops.clone(), robber }],
        captured: false,
        cop_phases: 0,
        branch: branch.label().to_string(),
    };
    let mut seen: HashMap<(Vec<usize>, usize), usize> = HashMap::new();
    loop {
        if cops.contains(&robber) {
            trace.captured = true;
            return Ok(Verdict::Captured(trace));
        }
        let here = trace.rounds.len() - 1;
        if let Some(&start) = seen.get(&(cops.clone(), robber)) {
            return Ok(Verdict::Escaped(EscapeWitness { trace, cycle_start: Some(start) }));
        }
        if trace.cop_phases >= phase_cap {
            return Ok(Verdict::Escaped(EscapeWitness { trace, cycle_start: None }));
        }
        seen.insert((cops.clone(), robber), here);

        let next = policy.next_move(&branch, &cops, robber);
        if !is_legal_move(g, &cops, &next) {
            return Err(Error::IllegalMove { from: cops, to: next });
        }
        cops = next;
        trace.cop_phases += 1;
        if !cops.contains(&robber) {
            robber = best_robber_response(res, &GameState::new(cops.clone(), robber, Turn::RobberMove));
        }
        trace.rounds.push(Snapshot { cops: cops.clone(), robber });
    }
}

/// Worst-case capture time of `policy` over every robber behaviour (all
/// placements, all moves), or `None` if some robber evades forever.
pub fn worst_case_capture<P: CopPolicy + ?Sized>(g: &Graph, policy: &P) -> Result<Option<u32>> {
    let mut worst = 0;
    for r0 in 0..g.n() {
        let cops = policy.placement().to_vec();
        if cops.contains(&r0) {
            continue;
        }
        let branch = policy.begin(r0);
        let mut search = Exhaustive { g, policy, branch: &branch, memo: HashMap::new(), on_path: HashSet::new() };
        match search.value(cops, r0)? {
            Some(t) => worst = worst.max(t),
            None => return Ok(None),
        }
    }
    Ok(Some(worst))
}

struct Exhaustive<'a, P: ?Sized> {
    g: &'a Graph,
    policy: &'a P,
    branch: &'a crate::strategy::Branch,
    memo: HashMap<(Vec<usize>, usize), Option<u32>>,
    on_path: HashSet<(Vec<usize>, usize)>,
}

impl<P: CopPolicy + ?Sized> Exhaustive<'_, P> {
    /// Cop phases to capture from a cop-to-move position with the robber
    /// free; `None` if the robber can force a repeated position.
    fn value(&mut self, cops: Vec<usize>, robber: usize) -> Result<Option<u32>> {
        let key = (cops, robber);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        if !self.on_path.insert(key.clone()) {
            return Ok(None);
        }
        let next = self.policy.next_move(self.branch, &key.0, robber);
        if !is_legal_move(self.g, &key.0, &next) {
            return Err(Error::IllegalMove { from: key.0, to: next });
        }
        let mut result = Some(1);
        if !next.contains(&robber) {
            for r in self.g.closed_neighbors(robber).iter() {
                if next.contains(&r) {
                    continue;
                }
                match self.value(next.clone(), r)? {
                    Some(t) => result = result.map(|w: u32| w.max(t + 1)),
                    None => {
                        result = None;
                        break;
                    }
                }
            }
        }
        self.on_path.remove(&key);
        self.memo.insert(key, result);
        Ok(result)
    }
}
