//! The `copnum` command line. [`run`] takes its streams as arguments so the
//! integration tests can drive it in-process.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use copnum::harness::sweep::{numbered, ClassFlags, SweepInput};
use copnum::harness::verify::default_phase_cap;
use copnum::harness::{enumerate_connected_up_to, random_2k2free, sweep_conjecture, SweepMode, SweepReport, Verdict};
use copnum::strategy::select_strategy;
use copnum::{cop_number, read_graph6, write_graph6, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

const MAX_K: usize = 8;
const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "copnum", version, about = "Cops and robbers on 2K2-free graphs")]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Human-readable table instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,

    /// Worker threads for per-graph work.
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class membership flags for each input graph.
    Check(InputArgs),
    /// Exact cop number of each input graph.
    CopNumber {
        #[command(flatten)]
        input: InputArgs,
        /// Largest number of cops to try.
        #[arg(long, default_value_t = 3, value_name = "K")]
        k_max: usize,
    },
    /// Play the dispatched strategy against the optimal robber.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Give up after this many cop phases (default n^2).
        #[arg(long, value_name = "PHASES")]
        phase_cap: Option<u32>,
    },
    /// Sweep a graph class and check its cop-number bound.
    Sweep {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Read graphs from a graph6 file ("-" for standard input).
        #[arg(long, value_name = "PATH", conflicts_with = "n_max")]
        input: Option<String>,
        /// Sweep every connected graph with at most this many vertices.
        #[arg(long, value_name = "N")]
        n_max: Option<usize>,
        /// Matching size for `--mode mk2`.
        #[arg(long, value_name = "M")]
        m: Option<usize>,
    },
    /// Emit graphs as graph6 lines.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// graph6 input file, or "-" for standard input.
    #[arg(long, default_value = "-", value_name = "PATH")]
    input: String,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Every connected graph with at most this many vertices.
    #[arg(long, value_name = "N", required_unless_present = "random", conflicts_with = "random")]
    n_max: Option<usize>,
    /// Random connected 2K2-free graphs instead of an enumeration.
    #[arg(long, requires_all = ["n", "seed"])]
    random: bool,
    /// Order of each random graph.
    #[arg(long, value_name = "N", requires = "random")]
    n: Option<usize>,
    /// Number of random graphs.
    #[arg(long, default_value_t = 1, value_name = "COUNT", requires = "random")]
    count: u64,
    /// Seed of the first random graph; graph `i` uses `seed + i`.
    #[arg(long, value_name = "SEED", requires = "random")]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Conj1,
    Conj2,
    Diam2,
    Mk2,
}

/// Failure classes, each with its own exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> Result<i32, Failure> {
    validate(&cli)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| usage(format!("cannot start {} workers: {e}", cli.jobs)))?;

    let inputs = match &cli.command {
        Command::Check(input) | Command::CopNumber { input, .. } | Command::Verify { input, .. } => {
            read_input(&input.input, stdin)?
        }
        Command::Sweep { input: Some(path), .. } => read_input(path, stdin)?,
        Command::Sweep { n_max: Some(n), .. } => enumerated(*n)?,
        Command::Sweep { .. } => return Err(usage("sweep needs --input or --n-max")),
        Command::Gen(_) => Vec::new(),
    };

    let pretty = cli.pretty;
    let mut buf = Vec::new();
    let code = pool.install(|| -> Result<i32, Failure> {
        let out = &mut buf;
        match &cli.command {
            Command::Check(_) => check(&inputs, pretty, out),
            Command::CopNumber { k_max, .. } => cop_numbers(&inputs, *k_max, pretty, out),
            Command::Verify { phase_cap, .. } => verify(&inputs, *phase_cap, pretty, out),
            Command::Sweep { mode, m, .. } => sweep(inputs, *mode, *m, pretty, out),
            Command::Gen(args) => generate(args, out),
        }
    })?;

    match &cli.output {
        Some(path) => {
            let mut f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            f.write_all(&buf).with_context(|| format!("cannot write {}", path.display()))?;
        }
        None => {
            stdout.write_all(&buf)?;
            stdout.flush()?;
        }
    }
    Ok(code)
}

fn validate(cli: &Cli) -> Result<(), Failure> {
    if cli.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    match &cli.command {
        Command::CopNumber { k_max, .. } if !(1..=MAX_K).contains(k_max) => {
            Err(usage(format!("--k-max must be between 1 and {MAX_K}")))
        }
        Command::Verify { phase_cap: Some(0), .. } => Err(usage("--phase-cap must be at least 1")),
        Command::Sweep { mode, n_max, m, .. } => {
            if let Some(n) = n_max {
                check_order(*n)?;
            }
            match (mode, m) {
                (Mode::Mk2, None) => Err(usage("--mode mk2 needs --m")),
                (Mode::Mk2, Some(m)) if *m < 2 => Err(usage("--m must be at least 2")),
                (Mode::Mk2, Some(m)) if 2 * m - 1 > MAX_K => {
                    Err(usage(format!("--m must be at most {}", MAX_K.div_ceil(2))))
                }
                (Mode::Conj1 | Mode::Conj2 | Mode::Diam2, Some(_)) => Err(usage("--m only applies to --mode mk2")),
                _ => Ok(()),
            }
        }
        Command::Gen(GenArgs { n_max: Some(n), .. }) => check_order(*n),
        Command::Gen(GenArgs { n: Some(0), .. }) => Err(usage("--n must be at least 1")),
        _ => Ok(()),
    }
}

fn check_order(n: usize) -> Result<(), Failure> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(usage(format!("--n-max must be between 1 and {MAX_ENUMERATION_ORDER}")))
    }
}

fn read_input(path: &str, stdin: &mut dyn BufRead) -> anyhow::Result<Vec<SweepInput>> {
    if path == "-" {
        return Ok(read_graph6(stdin).collect());
    }
    let file = File::open(path).with_context(|| format!("cannot open {path}"))?;
    Ok(read_graph6(BufReader::new(file)).collect())
}

fn enumerated(n_max: usize) -> anyhow::Result<Vec<SweepInput>> {
    Ok(numbered(enumerate_connected_up_to(n_max)?.into_iter().flatten()))
}

fn g6(g: &Graph) -> String {
    write_graph6(g).unwrap_or_default()
}

/// Runs `f` on every parsed graph in parallel, keeping input order. Lines
/// that failed to parse, or where `f` fails, become error records.
fn per_graph<F>(inputs: &[SweepInput], f: F) -> (Vec<Value>, bool)
where
    F: Fn(&Graph) -> copnum::Result<Value> + Sync,
{
    use rayon::prelude::*;
    let rows: Vec<(Value, bool)> = inputs
        .par_iter()
        .map(|(line, parsed)| {
            let result = parsed.as_ref().map_err(Clone::clone).and_then(|g| {
                let mut v = f(g)?;
                v["graph6"] = json!(g6(g));
                Ok(v)
            });
            match result {
                Ok(mut v) => {
                    v["line"] = json!(line);
                    (v, true)
                }
                Err(e) => (json!({ "line": line, "error": e.to_string() }), false),
            }
        })
        .collect();
    let clean = rows.iter().all(|(_, ok)| *ok);
    (rows.into_iter().map(|(v, _)| v).collect(), clean)
}

fn emit(rows: &[Value], columns: &[&str], pretty: bool, out: &mut dyn Write) -> io::Result<()> {
    if !pretty {
        for row in rows {
            serde_json::to_writer(&mut *out, row)?;
            out.write_all(b"\n")?;
        }
        return Ok(());
    }
    let cell = |row: &Value, col: &str| match row.get(col) {
        None | Some(Value::Null) => "-".to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(v) => v.to_string(),
    };
    let widths: Vec<usize> =
        columns.iter().map(|c| rows.iter().map(|r| cell(r, c).len()).chain([c.len()]).max().unwrap_or(0)).collect();
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(columns.iter().map(|c| c.to_string()).collect()))?;
    for row in rows {
        if let Some(err) = row.get("error") {
            writeln!(out, "{:<w$}  error: {}", cell(row, "line"), err.as_str().unwrap_or_default(), w = widths[0])?;
        } else {
            writeln!(out, "{}", line(columns.iter().map(|c| cell(row, c)).collect()))?;
        }
    }
    Ok(())
}

fn exit_code(clean: bool) -> i32 {
    if clean {
        EXIT_OK
    } else {
        EXIT_INPUT
    }
}

fn check(inputs: &[SweepInput], pretty: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let (rows, clean) = per_graph(inputs, |g| {
        let flags = ClassFlags::of(g)?;
        let mut v = serde_json::to_value(&flags).expect("flags serialize");
        v["n"] = json!(g.n());
        Ok(v)
    });
    let columns = [
        "line",
        "graph6",
        "n",
        "connected",
        "two_k2_free",
        "p5_free",
        "c3_free",
        "c4_free",
        "c5_free",
        "diameter",
        "mk2_free_level",
    ];
    emit(&rows, &columns, pretty, out)?;
    Ok(exit_code(clean))
}

fn cop_numbers(inputs: &[SweepInput], k_max: usize, pretty: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let (rows, clean) = per_graph(inputs, |g| Ok(json!({ "n": g.n(), "cop_number": cop_number(g, k_max)? })));
    emit(&rows, &["line", "graph6", "n", "cop_number"], pretty, out)?;
    Ok(exit_code(clean))
}

fn verify(inputs: &[SweepInput], phase_cap: Option<u32>, pretty: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let (rows, clean) = per_graph(inputs, |g| {
        let strategy = select_strategy(g)?;
        let cap = phase_cap.unwrap_or_else(|| default_phase_cap(g));
        let verdict = copnum::harness::verify_adversarial(g, &strategy, cap)?;
        let cycle_start = match &verdict {
            Verdict::Escaped(w) => json!(w.cycle_start),
            Verdict::Captured(_) => Value::Null,
        };
        Ok(json!({
            "n": g.n(),
            "provenance": strategy.provenance().as_str(),
            "k": strategy.k(),
            "captured": verdict.is_capture(),
            "capture_phases": verdict.capture_phases(),
            "branch": verdict.trace().branch,
            "cycle_start": cycle_start,
            "trace": verdict.trace().to_json_value(),
        }))
    });
    let columns = ["line", "graph6", "n", "provenance", "k", "captured", "capture_phases", "branch"];
    emit(&rows, &columns, pretty, out)?;
    let escaped = rows.iter().any(|r| r["captured"] == json!(false));
    Ok(if escaped { EXIT_VIOLATION } else { exit_code(clean) })
}

fn sweep(
    graphs: Vec<SweepInput>,
    mode: Mode,
    m: Option<usize>,
    pretty: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mode = match mode {
        Mode::Conj1 => SweepMode::Conj1TwoK2,
        Mode::Conj2 => SweepMode::Conj2P5,
        Mode::Diam2 => SweepMode::Diam2Report,
        Mode::Mk2 => SweepMode::Mk2 { m: m.expect("validated") },
    };
    let report = sweep_conjecture(graphs, mode).context("sweep failed")?;
    if pretty {
        let rows: Vec<Value> =
            report.records.iter().map(|r| serde_json::to_value(r).expect("record serializes")).collect();
        let columns = ["line", "graph6", "n", "cop_number", "provenance", "capture_phases", "bound_satisfied"];
        emit(&rows, &columns, true, out)?;
        let s = &report.summary;
        writeln!(out, "inputs {}, in class {}, bound {}", s.inputs, s.in_class, s.bound)?;
        writeln!(out, "cop numbers {:?}, max capture phases {:?}", s.cop_number_counts, s.max_capture_phases)?;
        for v in &s.violations {
            writeln!(out, "violation line {}: {} {}", v.line, v.graph6, v.reason)?;
        }
        for e in &s.input_errors {
            writeln!(out, "input error line {}: {}", e.line, e.message)?;
        }
    } else {
        report.write_jsonl(&mut *out)?;
    }
    Ok(report_code(&report))
}

/// Violations outrank unreadable input lines.
fn report_code(report: &SweepReport) -> i32 {
    if !report.is_clean() {
        EXIT_VIOLATION
    } else {
        exit_code(report.summary.input_errors.is_empty())
    }
}

fn generate(args: &GenArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if args.random {
        let (n, seed) = (args.n.expect("required by clap"), args.seed.expect("required by clap"));
        for i in 0..args.count {
            let g = random_2k2free(n, seed.wrapping_add(i)).context("random generation failed")?;
            writeln!(out, "{}", g6(&g))?;
        }
        return Ok(EXIT_OK);
    }
    let Some(n_max) = args.n_max else {
        return Err(usage("gen needs --n-max or --random"));
    };
    for g in enumerate_connected_up_to(n_max).context("enumeration failed")?.iter().flatten() {
        writeln!(out, "{}", g6(g))?;
    }
    Ok(EXIT_OK)
}
