//! Class-wide sweeps: cop numbers, strategy verification and bound checks
//! over a stream of graphs, producing a JSON-lines report.
//!
//! A bound violation is a finding recorded in the report, never a panic.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::graph6::write_graph6;
use crate::graph::induced::{has_induced_cycle, has_induced_mk2, has_induced_path, mk2_free_level};
use crate::graph::Graph;
use crate::harness::verify::{default_phase_cap, verify_adversarial};
use crate::solver::cop_number;
use crate::strategy::{select_strategy, Provenance};

/// Which graph class a sweep covers, and its bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SweepMode {
    /// Connected `2K2`-free graphs; bound 2.
    #[serde(rename = "CONJ1_2K2")]
    Conj1TwoK2,
    /// Connected `P5`-free graphs; bound 2.
    #[serde(rename = "CONJ2_P5")]
    Conj2P5,
    /// Connected `2K2`-free graphs of diameter 2; bound 2, tabulated.
    Diam2Report,
    /// Connected `mK2`-free graphs; bound `2m - 1`.
    #[serde(rename = "MK2")]
    Mk2 { m: usize },
}

/// Membership flags for the classes the sweeps care about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub connected: bool,
    pub two_k2_free: bool,
    pub p5_free: bool,
    pub c3_free: bool,
    pub c4_free: bool,
    pub c5_free: bool,
    pub diameter: Option<usize>,
    /// Least `m` such that the graph is `mK2`-free.
    pub mk2_free_level: usize,
}

impl ClassFlags {
    pub fn of(g: &Graph) -> Result<Self> {
        Ok(ClassFlags {
            connected: g.is_connected(),
            two_k2_free: !has_induced_mk2(g, 2)?,
            p5_free: !has_induced_path(g, 5)?,
            c3_free: !has_induced_cycle(g, 3)?,
            c4_free: !has_induced_cycle(g, 4)?,
            c5_free: !has_induced_cycle(g, 5)?,
            diameter: g.diameter().ok(),
            mk2_free_level: mk2_free_level(g),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    /// 1-based position in the input stream.
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub classes: ClassFlags,
    pub cop_number: Option<usize>,
    pub provenance: Option<Provenance>,
    pub strategy_k: Option<usize>,
    pub capture_phases: Option<u32>,
    pub bound: usize,
    pub bound_satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub line: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub mode: SweepMode,
    pub inputs: usize,
    pub in_class: usize,
    pub bound: usize,
    pub cop_number_counts: BTreeMap<usize, usize>,
    pub provenance_counts: BTreeMap<Provenance, usize>,
    pub max_cop_number: Option<usize>,
    pub max_capture_phases: Option<u32>,
    pub input_errors: Vec<InputError>,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub records: Vec<GraphRecord>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.summary.violations.is_empty()
    }

    /// One JSON record per in-class graph, then `{"summary": ...}`.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, &serde_json::json!({ "summary": self.summary }))?;
        out.write_all(b"\n")
    }
}

/// A graph from an input stream together with its 1-based line number.
pub type SweepInput = (usize, Result<Graph>);

/// Numbers graphs `1..` for use as sweep input.
pub fn numbered(graphs: impl IntoIterator<Item = Graph>) -> Vec<SweepInput> {
    graphs.into_iter().enumerate().map(|(i, g)| (i + 1, Ok(g))).collect()
}

/// Sweeps one graph class: every in-class graph gets its exact cop
/// number (at most 3) and, when `2K2`-free, the dispatched strategy is
/// verified against the optimal robber. Any broken bound is recorded as a
/// violation.
pub fn sweep_conjecture(graphs: impl IntoIterator<Item = SweepInput>, mode: SweepMode) -> Result<SweepReport> {
    if let SweepMode::Mk2 { m } = mode {
        return sweep_mk2(graphs, m);
    }
    Ok(run(graphs, mode, 2))
}

/// Sweeps the `mK2`-free graphs with `k_max = 2m - 1`.
pub fn sweep_mk2(graphs: impl IntoIterator<Item = SweepInput>, m: usize) -> Result<SweepReport> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m must be at least 2, got {m}")));
    }
    Ok(run(graphs, SweepMode::Mk2 { m }, 2 * m - 1))
}

enum Outcome {
    Skipped,
    Failed(InputError),
    Record(GraphRecord, Vec<String>),
}

fn run(graphs: impl IntoIterator<Item = SweepInput>, mode: SweepMode, bound: usize) -> SweepReport {
    let inputs: Vec<SweepInput> = graphs.into_iter().collect();
    let outcomes: Vec<Outcome> = inputs
        .par_iter()
        .map(|(line, g)| match g {
            Err(e) => Outcome::Failed(InputError { line: *line, message: e.to_string() }),
            Ok(g) => examine(*line, g, mode, bound)
                .unwrap_or_else(|e| Outcome::Failed(InputError { line: *line, message: e.to_string() })),
        })
        .collect();

    let mut summary = SweepSummary {
        mode,
        inputs: inputs.len(),
        in_class: 0,
        bound,
        cop_number_counts: BTreeMap::new(),
        provenance_counts: BTreeMap::new(),
        max_cop_number: None,
        max_capture_phases: None,
        input_errors: Vec::new(),
        violations: Vec::new(),
    };
    let mut records = Vec::new();
    for outcome in outcomes {
        match outcome {
            Outcome::Skipped => {}
            Outcome::Failed(e) => summary.input_errors.push(e),
            Outcome::Record(r, reasons) => {
                summary.in_class += 1;
                if let Some(c) = r.cop_number {
                    *summary.cop_number_counts.entry(c).or_default() += 1;
                    summary.max_cop_number = summary.max_cop_number.max(Some(c));
                }
                if let Some(p) = r.provenance {
                    *summary.provenance_counts.entry(p).or_default() += 1;
                }
                summary.max_capture_phases = summary.max_capture_phases.max(r.capture_phases);
                summary.violations.extend(reasons.into_iter().map(|reason| Violation {
                    line: r.line,
                    graph6: r.graph6.clone(),
                    reason,
                }));
                records.push(r);
            }
        }
    }
    SweepReport { records, summary }
}

fn examine(line: usize, g: &Graph, mode: SweepMode, bound: usize) -> Result<Outcome> {
    let classes = ClassFlags::of(g)?;
    let in_class = classes.connected
        && match mode {
            SweepMode::Conj1TwoK2 => classes.two_k2_free,
            SweepMode::Conj2P5 => classes.p5_free,
            SweepMode::Diam2Report => classes.two_k2_free && classes.diameter == Some(2),
            SweepMode::Mk2 { m } => classes.mk2_free_level <= m,
        };
    if !in_class {
        return Ok(Outcome::Skipped);
    }

    let mut reasons = Vec::new();
    let k_max = match mode {
        SweepMode::Mk2 { .. } => bound,
        _ => 3,
    };
    let cop_number = match cop_number(g, k_max) {
        Ok(c) => Some(c),
        Err(e) => {
            reasons.push(format!("cop number not determined: {e}"));
            None
        }
    };
    if let Some(c) = cop_number.filter(|&c| c > bound) {
        reasons.push(format!("cop number {c} exceeds {bound}"));
    }

    let (mut provenance, mut strategy_k, mut capture_phases) = (None, None, None);
    if classes.two_k2_free && !matches!(mode, SweepMode::Mk2 { .. }) {
        let strategy = select_strategy(g)?;
        provenance = Some(strategy.provenance());
        strategy_k = Some(strategy.k());
        let verdict = verify_adversarial(g, &strategy, default_phase_cap(g))?;
        capture_phases = verdict.capture_phases();
        if capture_phases.is_none() {
            reasons.push(format!("{} strategy failed to capture", strategy.provenance()));
        }
        if let Some(c) = cop_number.filter(|&c| capture_phases.is_some() && c > strategy.k()) {
            reasons.push(format!("strategy with {} cops captured but cop number is {c}", strategy.k()));
        }
    }

    let record = GraphRecord {
        line,
        graph6: write_graph6(g)?,
        n: g.n(),
        classes,
        cop_number,
        provenance,
        strategy_k,
        capture_phases,
        bound,
        bound_satisfied: reasons.is_empty(),
    };
    Ok(Outcome::Record(record, reasons))
}
