//! Acceptance gate. Prints one line per criterion and exits non-zero if any
//! criterion fails. Every tolerance is exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use copnum::decompose::{c4free_decompose, diam3_decompose, recognize_blowup_c5};
use copnum::harness::sweep::numbered;
use copnum::harness::verify::default_phase_cap;
use copnum::harness::{
    enumerate_connected_up_to, random_2k2free, sweep_conjecture, sweep_mk2, verify_adversarial, worst_case_capture,
    SweepMode,
};
use copnum::strategy::{
    is_legal_move, select_strategy, strategy_blowup_c5, strategy_c4free, strategy_c5free, strategy_prop1,
    strategy_thm1, CopPolicy, Strategy,
};
use copnum::{
    cop_number, has_induced_cycle, has_induced_mk2, is_dismantlable, parse_graph6, solve, write_graph6, Graph, Result,
};

use common::{Minimax, CONNECTED_COUNTS, COP_WIN_CONNECTED, THREE_K2_FREE_CONNECTED, TWO_K2_FREE};

type Outcome = std::result::Result<String, String>;

struct Corpus {
    /// Connected graphs by order, index = n - 1, n <= 8.
    by_order: Vec<Vec<Graph>>,
}

impl Corpus {
    fn upto(&self, n_max: usize) -> impl Iterator<Item = &Graph> {
        self.by_order[..n_max].iter().flatten()
    }

    fn two_k2_free(&self, n_max: usize) -> Vec<&Graph> {
        self.upto(n_max).filter(|g| !has_induced_mk2(g, 2).unwrap()).collect()
    }
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g6(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|e| format!("<{e}>"))
}

/// Captures against the solver-optimal robber within `limit` phases, and
/// against every robber behaviour within the same limit.
fn captures_within(g: &Graph, s: &Strategy, limit: u32) -> std::result::Result<u32, String> {
    let verdict = verify_adversarial(g, s, default_phase_cap(g)).map_err(|e| format!("{}: {e}", g6(g)))?;
    let phases = verdict.capture_phases().ok_or_else(|| format!("{}: {} strategy escaped", g6(g), s.provenance()))?;
    let worst = worst_case_capture(g, s)
        .map_err(|e| format!("{}: {e}", g6(g)))?
        .ok_or_else(|| format!("{}: {} strategy evaded by some robber", g6(g), s.provenance()))?;
    check(phases <= limit && worst <= limit, || {
        format!("{}: {} took {phases} phases (worst {worst}), limit {limit}", g6(g), s.provenance())
    })?;
    Ok(worst)
}

fn par_all<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> std::result::Result<u32, String> + Sync + Send,
) -> std::result::Result<u32, String> {
    items.par_iter().map(f).try_reduce(|| 0, |a, b| Ok(a.max(b)))
}

fn criterion_1(c: &Corpus) -> Outcome {
    let graphs = c.two_k2_free(8);
    let expected: usize = TWO_K2_FREE.iter().map(|t| t.two_k2_free).sum();
    check(graphs.len() == expected, || format!("{} 2K2-free graphs, expected {expected}", graphs.len()))?;
    let worst = par_all(&graphs, |g| {
        let c = cop_number(g, 3).map_err(|e| format!("{}: {e}", g6(g)))?;
        check(c <= 3, || format!("{}: cop number {c}", g6(g)))?;
        let s = strategy_prop1(g).map_err(|e| e.to_string())?;
        check(s.k() == 3, || "three cops".into())?;
        captures_within(g, &s, 4)
    })?;
    Ok(format!("{} graphs, cop number <= 3, worst capture {worst} <= 4 phases", graphs.len()))
}

fn criterion_2(c: &Corpus) -> Outcome {
    let graphs: Vec<&Graph> = c.two_k2_free(8).into_iter().filter(|g| g.diameter().unwrap() == 3).collect();
    let expected: usize = TWO_K2_FREE.iter().map(|t| t.diam3).sum();
    check(graphs.len() == expected, || format!("{} diameter-3 graphs, expected {expected}", graphs.len()))?;
    let worst = par_all(&graphs, |g| {
        let layers = diam3_decompose(g).map_err(|e| format!("{}: {e}", g6(g)))?;
        let s = strategy_thm1(g, &layers).map_err(|e| e.to_string())?;
        check(s.k() == 2, || "two cops".into())?;
        let w = captures_within(g, &s, 4)?;
        check(solve(g, 2).map_err(|e| e.to_string())?.cop_win(), || format!("{}: 2 cops lose", g6(g)))?;
        Ok(w)
    })?;
    Ok(format!("{} graphs, claims hold, 2 cops win, worst capture {worst} <= 4 phases", graphs.len()))
}

fn criterion_3(c: &Corpus) -> Outcome {
    let all = c.two_k2_free(8);
    let c4_free: Vec<&Graph> = all.iter().copied().filter(|g| !has_induced_cycle(g, 4).unwrap()).collect();
    let c5_free: Vec<&Graph> = all.iter().copied().filter(|g| !has_induced_cycle(g, 5).unwrap()).collect();
    let blowups: Vec<&Graph> =
        all.iter().copied().filter(|g| !has_induced_cycle(g, 3).unwrap() && has_induced_cycle(g, 5).unwrap()).collect();
    let sum = |f: fn(&common::ClassCounts) -> usize| TWO_K2_FREE.iter().map(f).sum::<usize>();
    check(c4_free.len() == sum(|t| t.c4_free), || format!("{} C4-free graphs", c4_free.len()))?;
    check(c5_free.len() == sum(|t| t.c5_free), || format!("{} C5-free graphs", c5_free.len()))?;
    check(blowups.len() == sum(|t| t.triangle_free_with_c5), || format!("{} blow-ups", blowups.len()))?;

    let w4 = par_all(&c4_free, |g| {
        let st = c4free_decompose(g).map_err(|e| format!("{}: {e}", g6(g)))?;
        let s = strategy_c4free(g, &st).map_err(|e| e.to_string())?;
        check(s.k() == 2, || "two cops".into())?;
        captures_within(g, &s, 2 + g.diameter().unwrap() as u32)
    })?;
    let w5 = par_all(&c5_free, |g| {
        let s = strategy_c5free(g).map_err(|e| format!("{}: {e}", g6(g)))?;
        check(s.k() == 2, || "two cops".into())?;
        captures_within(g, &s, 4)
    })?;
    let wb = par_all(&blowups, |g| {
        let b = recognize_blowup_c5(g).ok_or_else(|| format!("{}: not recognised as a blow-up", g6(g)))?;
        let s = strategy_blowup_c5(g, &b).map_err(|e| e.to_string())?;
        check(s.k() == 2, || "two cops".into())?;
        captures_within(g, &s, 3)
    })?;
    Ok(format!(
        "C4-free {} (worst {w4}), C5-free {} (worst {w5} <= 4), blow-ups {} (worst {wb} <= 3)",
        c4_free.len(),
        c5_free.len(),
        blowups.len()
    ))
}

fn criterion_4() -> Outcome {
    let c = cop_number(&Graph::cycle(5), 3).map_err(|e| e.to_string())?;
    check(c == 2, || format!("cop number of C5 is {c}"))?;
    Ok("cop number of C5 = 2".into())
}

fn criterion_5(c: &Corpus) -> Outcome {
    for n in 1..=7 {
        let graphs = &c.by_order[n - 1];
        check(graphs.len() == CONNECTED_COUNTS[n - 1], || format!("n={n}: {} graphs", graphs.len()))?;
        let wins: Vec<bool> = graphs
            .par_iter()
            .map(|g| {
                let w = solve(g, 1).map_err(|e| e.to_string())?.cop_win();
                check(w == is_dismantlable(g), || format!("{}: solver {w}, dismantlable {}", g6(g), !w))?;
                Ok(w)
            })
            .collect::<std::result::Result<_, String>>()?;
        let count = wins.iter().filter(|&&w| w).count();
        check(count == COP_WIN_CONNECTED[n - 1], || format!("n={n}: {count} cop-win graphs"))?;
    }
    let small: Vec<&Graph> = c.upto(6).collect();
    small.par_iter().try_for_each(|g| {
        let ours = cop_number(g, 3).map_err(|e| e.to_string())?;
        let theirs = Minimax::new(g).cop_number(3);
        check(theirs == Some(ours), || format!("{}: solver {ours}, minimax {theirs:?}", g6(g)))
    })?;
    Ok(format!("1-cop-win == dismantlable on {} graphs; minimax agrees on {}", c.upto(7).count(), small.len()))
}

fn validate_jsonl(text: &str) -> std::result::Result<usize, String> {
    let lines: Vec<&str> = text.lines().collect();
    let (last, records) = lines.split_last().ok_or("empty report")?;
    for line in records {
        let v: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        for key in ["line", "graph6", "n", "classes", "cop_number", "provenance", "capture_phases", "bound_satisfied"] {
            check(v.get(key).is_some(), || format!("record lacks {key}: {line}"))?;
        }
        let g = parse_graph6(v["graph6"].as_str().ok_or("graph6 not a string")?).map_err(|e| e.to_string())?;
        check(g.n() as u64 == v["n"].as_u64().unwrap_or(0), || format!("n mismatch: {line}"))?;
    }
    let summary: serde_json::Value = serde_json::from_str(last).map_err(|e| e.to_string())?;
    let summary = summary.get("summary").ok_or("last line is not a summary")?;
    check(summary["in_class"].as_u64() == Some(records.len() as u64), || "summary count mismatch".into())?;
    check(summary["violations"].is_array(), || "summary lacks violations".into())?;
    Ok(records.len())
}

fn criterion_6(c: &Corpus) -> Outcome {
    let render = || -> std::result::Result<(String, bool), String> {
        let report =
            sweep_conjecture(numbered(c.upto(8).cloned()), SweepMode::Conj1TwoK2).map_err(|e| e.to_string())?;
        let mut out = Vec::new();
        report.write_jsonl(&mut out).map_err(|e| e.to_string())?;
        for v in &report.summary.violations {
            println!("  violation: {} {}", v.graph6, v.reason);
        }
        Ok((String::from_utf8(out).map_err(|e| e.to_string())?, report.is_clean()))
    };
    let (first, clean) = render()?;
    let (second, _) = render()?;
    check(first == second, || "two runs differ".into())?;
    let records = validate_jsonl(&first)?;
    let expected: usize = TWO_K2_FREE.iter().map(|t| t.two_k2_free).sum();
    check(records == expected, || format!("{records} in-class records, expected {expected}"))?;
    check(clean, || "violations reported".into())?;
    Ok(format!("{records} graphs, deterministic, report valid, 0 violations"))
}

fn criterion_7(c: &Corpus) -> Outcome {
    let report = sweep_mk2(numbered(c.upto(7).cloned()), 3).map_err(|e| e.to_string())?;
    let expected: usize = THREE_K2_FREE_CONNECTED.iter().sum();
    check(report.summary.in_class == expected, || format!("{} 3K2-free graphs", report.summary.in_class))?;
    check(report.summary.input_errors.is_empty(), || "input errors".into())?;
    let max = report.summary.max_cop_number.ok_or("no cop numbers")?;
    check(max <= 5 && report.is_clean(), || format!("max cop number {max}"))?;
    Ok(format!("{} graphs, max cop number {max} <= 5", report.summary.in_class))
}

const FUZZ_PLAYS: usize = 100_000;

/// Plays `s` against a uniformly random robber; returns phases to capture.
fn fuzz_play(g: &Graph, s: &Strategy, rng: &mut ChaCha8Rng) -> std::result::Result<u32, String> {
    let n = g.n();
    let mut robber = rng.gen_range(0..n);
    let branch = s.begin(robber);
    let mut cops = s.placement().to_vec();
    let cap = default_phase_cap(g);
    let mut phases = 0;
    while !cops.contains(&robber) {
        if phases == cap {
            return Err(format!("{}: robber survived {cap} phases", g6(g)));
        }
        let next = s.next_move(&branch, &cops, robber);
        check(is_legal_move(g, &cops, &next), || format!("{}: illegal move {cops:?} -> {next:?}", g6(g)))?;
        cops = next;
        phases += 1;
        if !cops.contains(&robber) {
            let options = g.closed_neighbors(robber).to_vec();
            robber = options[rng.gen_range(0..options.len())];
        }
    }
    Ok(phases)
}

fn criterion_8(c: &Corpus) -> Outcome {
    let small: Vec<&Graph> = c.upto(7).collect();
    small.par_iter().try_for_each(|g| -> std::result::Result<(), String> {
        let text = write_graph6(g).map_err(|e| e.to_string())?;
        check(parse_graph6(&text).map_err(|e| e.to_string())? == **g, || format!("{text}: round trip"))?;
        check(text == common::reference_graph6(g), || format!("{text}: encoding"))?;
        let co = g.complement();
        check(co.complement() == **g, || format!("{text}: complement"))?;
        check(has_induced_mk2(g, 2).unwrap() == has_induced_cycle(&co, 4).unwrap(), || format!("{text}: 2K2 duality"))?;
        for root in 0..g.n() {
            let layers = g.bfs_layers(root).map_err(|e| e.to_string())?;
            let dist = g.distances_from(root).map_err(|e| e.to_string())?;
            let total: usize = layers.iter().map(|l| l.len()).sum();
            check(total == g.n(), || format!("{text}: layers do not cover"))?;
            for (i, layer) in layers.iter().enumerate() {
                for v in layer.iter() {
                    check(dist[v] == Some(i), || format!("{text}: {v} in layer {i}"))?;
                }
            }
            for (u, v) in g.edges() {
                let (a, b) = (dist[u].unwrap(), dist[v].unwrap());
                check(a.abs_diff(b) <= 1, || format!("{text}: edge {u}-{v} skips a layer"))?;
            }
        }
        Ok(())
    })?;

    // fuzz over the enumerated class plus random larger members
    let mut pool: Vec<Graph> = c.two_k2_free(8).into_iter().cloned().collect();
    for seed in 0..200u64 {
        let n = 9 + (seed as usize % 12);
        pool.push(random_2k2free(n, seed).map_err(|e| e.to_string())?);
    }
    let strategies: Vec<Strategy> =
        pool.par_iter().map(select_strategy).collect::<Result<_>>().map_err(|e| e.to_string())?;
    let worst = (0..FUZZ_PLAYS)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            let s = &strategies[i % strategies.len()];
            fuzz_play(s.graph(), s, &mut rng)
        })
        .try_reduce(|| 0, |a, b| Ok(a.max(b)))?;
    Ok(format!(
        "properties on {} graphs; {FUZZ_PLAYS} fuzz plays on {} graphs all captured (max {worst} phases)",
        small.len(),
        pool.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let by_order = match enumerate_connected_up_to(8) {
        Ok(v) => v,
        Err(e) => {
            println!("enumeration failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let corpus = Corpus { by_order };
    println!("enumerated connected graphs n <= 8 in {:.1?}", start.elapsed());

    let criteria: [(&str, &dyn Fn() -> Outcome); 8] = [
        ("2K2-free graphs need at most 3 cops", &|| criterion_1(&corpus)),
        ("diameter-3 strategy", &|| criterion_2(&corpus)),
        ("C4-free, C5-free and triangle-free strategies", &|| criterion_3(&corpus)),
        ("cop number of C5", &criterion_4),
        ("solver cross-validation", &|| criterion_5(&corpus)),
        ("2K2-free sweep", &|| criterion_6(&corpus)),
        ("3K2-free probe", &|| criterion_7(&corpus)),
        ("property suites and fuzzing", &|| criterion_8(&corpus)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {}: PASS [{name}] {detail} ({:.1?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL [{name}] {why} ({:.1?})", i + 1, t.elapsed());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
