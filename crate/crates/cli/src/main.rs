//! `holeforge`: odd holes, perfection and shortest even holes from the
//! command line. One JSON object per input graph on stdout.

mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;

use holeforge::even::{phase1_scan, shortest_even_hole_desk_report, NoPhase2, OraclePhase2, Phase2};
use holeforge::io::{encode_dimacs, encode_edgelist, encode_graph6, parse_graphs, Format};
use holeforge::odd::{
    contains_odd_hole, find_deep_shortest, find_general, find_medium, find_shallow, is_perfect,
    shortest_odd_hole_report, PipelineReport,
};
use holeforge::oracle::{oracle_is_perfect, oracle_shortest_even_hole, oracle_shortest_odd_hole};
use holeforge::{gen, Graph, Side};

use report::{Report, Verdict};

const ORACLE_HOLE_CAP: usize = 16;
const ORACLE_COLORING_CAP: usize = 10;
const SUITE_CAP: usize = 64;
const DEEP_FREE_CAP: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "holeforge", version, about = "Odd holes, perfect graphs and shortest even holes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads (default: HOLEFORGE_THREADS, else all cores).
    #[arg(long, global = true, env = "HOLEFORGE_THREADS")]
    threads: Option<usize>,
    /// Human-readable output instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,
    /// Leave `timings_ms` empty so reports are byte-reproducible.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; `-` or absent reads stdin.
    path: Option<PathBuf>,
    #[arg(long, default_value = "auto", value_parser = parse_format)]
    format: Format,
    /// Lift the size caps.
    #[arg(long)]
    unsafe_size: bool,
}

#[derive(Args, Debug)]
struct SuiteInput {
    #[command(flatten)]
    input: Input,
    /// Allow the deep detector on graphs with more than 24 vertices.
    #[arg(long)]
    enable_deep: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether the graph has an odd hole (stops at the first certificate).
    OddHole(SuiteInput),
    /// A shortest odd hole.
    ShortestOddHole(SuiteInput),
    /// Perfection via odd holes in the graph and its complement.
    IsPerfect(SuiteInput),
    /// Shortest even hole at desk scale.
    EvenHoleDesk {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "oracle")]
        phase2: Phase2Choice,
    },
    /// Brute-force answers.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        query: OracleQuery,
    },
    /// Emit a gadget or random graph.
    Gen(GenArgs),
    /// Compare the suites against the oracles on a generated family.
    Difftest(DiffArgs),
    /// Time one detector on cycles of growing size.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Phase2Choice {
    Oracle,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleQuery {
    ShortestOddHole,
    ShortestEvenHole,
    IsPerfect,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Gadget {
    Pyramid,
    Cycle,
    Spade,
    Medium,
    Petersen,
    RandomGnp,
    SparseLongHole,
    SparseConnected,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutFormat {
    Edgelist,
    Graph6,
    Dimacs,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    gadget: Gadget,
    #[arg(long, default_value_t = 1)]
    t1: usize,
    #[arg(long, default_value_t = 7)]
    t2: usize,
    #[arg(long, default_value_t = 7)]
    t3: usize,
    /// Vertex count for cycles and random families.
    #[arg(long, default_value_t = 15)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "edgelist")]
    out_format: OutFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    RandomGnp,
    SparseLongHole,
    SparseConnected,
    Gadgets,
}

#[derive(Args, Debug)]
struct DiffArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    #[arg(long)]
    unsafe_size: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Detector {
    Shallow,
    Medium,
    General,
    Deep,
    Pipeline,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "medium")]
    detector: Detector,
    #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
    sizes: Vec<usize>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: holeforge::io::ParseError| e.to_string())
}

/// Input problems (exit 2) as opposed to internal failures.
#[derive(Debug)]
struct InputError(anyhow::Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

fn input_err(e: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow::Error::new(InputError(e.into()))
}

/// A differential mismatch (exit 3).
#[derive(Debug)]
struct Mismatch;

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("differential mismatch")
    }
}

impl std::error::Error for Mismatch {}

fn read_graphs(input: &Input, cap: usize, what: &str) -> Result<Vec<Graph>> {
    let text = match &input.path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display())).map_err(input_err)?
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin").map_err(input_err)?;
            s
        }
    };
    let graphs = parse_graphs(&text, input.format).map_err(input_err)?;
    if !input.unsafe_size {
        if let Some(g) = graphs.iter().find(|g| g.n() > cap) {
            return Err(input_err(anyhow!(
                "{what} is capped at {cap} vertices, input has {} (pass --unsafe-size to override)",
                g.n()
            )));
        }
    }
    Ok(graphs)
}

fn read_suite(s: &SuiteInput) -> Result<Vec<Graph>> {
    let graphs = read_graphs(&s.input, SUITE_CAP, "the odd-hole suite")?;
    if !s.enable_deep && !s.input.unsafe_size {
        if let Some(g) = graphs.iter().find(|g| g.n() > DEEP_FREE_CAP) {
            return Err(input_err(anyhow!(
                "graphs above {DEEP_FREE_CAP} vertices need the deep detector; pass --enable-deep (input has {})",
                g.n()
            )));
        }
    }
    Ok(graphs)
}

fn pipeline_report(g: &Graph, command: &'static str, r: PipelineReport) -> Result<Report> {
    let mut out = match &r.hole {
        Some(h) => Report::new(g, command, Verdict::OddHole).with_hole(g, h, Side::Graph)?,
        None => Report::new(g, command, Verdict::None),
    };
    if let Some(p) = r.provenance {
        out = out.provenance(p.as_str());
    }
    for (stage, d) in r.timings {
        out = out.timing(stage.as_str(), d);
    }
    Ok(out)
}

fn analyze(cli: &Cli) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    match &cli.command {
        Command::OddHole(s) => {
            for g in read_suite(s)? {
                reports.push(pipeline_report(&g, "odd-hole", contains_odd_hole(&g))?);
            }
        }
        Command::ShortestOddHole(s) => {
            for g in read_suite(s)? {
                reports.push(pipeline_report(&g, "shortest-odd-hole", shortest_odd_hole_report(&g))?);
            }
        }
        Command::IsPerfect(s) => {
            for g in read_suite(s)? {
                let t = Instant::now();
                let r = is_perfect(&g);
                let mut out = match &r.witness {
                    None => Report::new(&g, "is-perfect", Verdict::Perfect),
                    Some((side, h)) => Report::new(&g, "is-perfect", Verdict::OddHole).with_hole(&g, h, *side)?,
                };
                if let Some(p) = r.provenance {
                    out = out.provenance(p.as_str());
                }
                reports.push(out.timing("total", t.elapsed()));
            }
        }
        Command::EvenHoleDesk { input, phase2 } => {
            for g in read_graphs(input, SUITE_CAP, "the even-hole suite")? {
                let t = Instant::now();
                let p2: &dyn Phase2 = match phase2 {
                    Phase2Choice::Oracle => &OraclePhase2,
                    Phase2Choice::None => &NoPhase2,
                };
                let r = shortest_even_hole_desk_report(&g, p2);
                let out = match (&r.hole, r.source) {
                    (Some(h), Some(src)) => Report::new(&g, "even-hole-desk", Verdict::EvenHole)
                        .with_hole(&g, h, Side::Graph)?
                        .provenance(src.as_str()),
                    _ => Report::new(&g, "even-hole-desk", Verdict::None),
                };
                reports.push(out.timing("total", t.elapsed()));
            }
        }
        Command::Oracle { input, query } => {
            let cap = match query {
                OracleQuery::IsPerfect => ORACLE_COLORING_CAP,
                _ => ORACLE_HOLE_CAP,
            };
            for g in read_graphs(input, cap, "the oracle")? {
                let t = Instant::now();
                let out = match query {
                    OracleQuery::ShortestOddHole => match oracle_shortest_odd_hole(&g) {
                        Some(h) => Report::new(&g, "oracle", Verdict::OddHole).with_hole(&g, &h, Side::Graph)?,
                        None => Report::new(&g, "oracle", Verdict::None),
                    },
                    OracleQuery::ShortestEvenHole => match oracle_shortest_even_hole(&g) {
                        Some(h) => Report::new(&g, "oracle", Verdict::EvenHole).with_hole(&g, &h, Side::Graph)?,
                        None => Report::new(&g, "oracle", Verdict::None),
                    },
                    OracleQuery::IsPerfect => {
                        let v = oracle_is_perfect(&g);
                        Report::new(&g, "oracle", if v.perfect { Verdict::Perfect } else { Verdict::OddHole })
                    }
                };
                reports.push(out.provenance("oracle").timing("total", t.elapsed()));
            }
        }
        Command::Gen(_) | Command::Difftest(_) | Command::Bench(_) => unreachable!(),
    }
    if cli.no_timings {
        reports.iter_mut().for_each(Report::strip_timings);
    }
    Ok(reports)
}

fn generate(a: &GenArgs) -> Result<Graph> {
    let mut rng = gen::rng(a.seed);
    let g = match a.gadget {
        Gadget::Pyramid => {
            if a.t1 == 0 || a.t2 == 0 || a.t3 == 0 {
                bail!("pyramid path lengths must be positive");
            }
            gen::pyramid(a.t1, a.t2, a.t3)
        }
        Gadget::Cycle if a.n >= 3 => gen::cycle(a.n),
        Gadget::Cycle => bail!("a cycle needs at least 3 vertices"),
        Gadget::Spade => gen::spade_gadget(),
        Gadget::Medium => gen::medium_gadget(),
        Gadget::Petersen => gen::petersen(),
        Gadget::RandomGnp if (0.0..=1.0).contains(&a.p) => gen::gnp(a.n, a.p, &mut rng),
        Gadget::RandomGnp => bail!("--p must lie in [0, 1]"),
        Gadget::SparseLongHole if a.n >= 3 => gen::sparse_long_hole(a.n, &mut rng),
        Gadget::SparseConnected if a.n >= 1 => gen::sparse_connected(a.n, 3, &mut rng),
        _ => bail!("--n is too small for this family"),
    };
    Ok(g)
}

fn encode(g: &Graph, f: OutFormat) -> String {
    match f {
        OutFormat::Edgelist => encode_edgelist(g),
        OutFormat::Graph6 => encode_graph6(g) + "\n",
        OutFormat::Dimacs => encode_dimacs(g),
    }
}

#[derive(Serialize)]
struct DiffSummary {
    family: String,
    trials: usize,
    seed: u64,
    checks: BTreeMap<&'static str, usize>,
    mismatches: usize,
}

fn diff_one(g: &Graph, checks: &mut BTreeMap<&'static str, usize>) -> Option<String> {
    let got = shortest_odd_hole_report(g).hole.map(|h| h.len());
    let want = oracle_shortest_odd_hole(g).map(|h| h.len());
    *checks.entry("shortest-odd-hole").or_default() += 1;
    if got != want {
        return Some(format!("shortest odd hole: suite {got:?}, oracle {want:?}"));
    }
    if g.n() <= ORACLE_COLORING_CAP {
        *checks.entry("is-perfect").or_default() += 1;
        let (a, b) = (is_perfect(g).perfect, oracle_is_perfect(g).perfect);
        if a != b {
            return Some(format!("perfection: suite {a}, oracle {b}"));
        }
    }
    if let Some(rec) = phase1_scan(g) {
        *checks.entry("even-phase1").or_default() += 1;
        let best = oracle_shortest_even_hole(g).map(|h| h.len());
        if best.is_none_or(|b| b > rec.length) {
            return Some(format!("phase-1 record {} below oracle {best:?}", rec.length));
        }
    }
    None
}

fn difftest(a: &DiffArgs, pretty: bool) -> Result<()> {
    if a.family != Family::Gadgets {
        if a.min_n == 0 || a.min_n > a.max_n {
            return Err(clap_usage("need 1 <= --min-n <= --max-n"));
        }
        if a.max_n > ORACLE_HOLE_CAP && !a.unsafe_size {
            return Err(clap_usage(&format!("--max-n above the oracle cap {ORACLE_HOLE_CAP} needs --unsafe-size")));
        }
    }
    let mut rng = gen::rng(a.seed);
    let graphs: Vec<(String, Graph)> = match a.family {
        Family::Gadgets => gen::named_gadgets(),
        fam => (0..a.trials)
            .map(|i| {
                let n = rng.gen_range(a.min_n..=a.max_n);
                let g = match fam {
                    Family::RandomGnp => {
                        let p = rng.gen_range(0.1..0.9);
                        gen::gnp(n, p, &mut rng)
                    }
                    Family::SparseLongHole => gen::sparse_long_hole(n.max(3), &mut rng),
                    _ => {
                        let extra = rng.gen_range(0..=4);
                        gen::sparse_connected(n, extra, &mut rng)
                    }
                };
                (format!("trial-{i}"), g)
            })
            .collect(),
    };
    let mut checks = BTreeMap::new();
    for (label, g) in &graphs {
        if let Some(why) = diff_one(g, &mut checks) {
            eprintln!("mismatch on {label}: {why}");
            eprintln!("graph6: {}", encode_graph6(g));
            eprint!("{}", encode_edgelist(g));
            return Err(Mismatch.into());
        }
    }
    let summary = DiffSummary {
        family: a.family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
        trials: graphs.len(),
        seed: a.seed,
        checks,
        mismatches: 0,
    };
    if pretty {
        println!("{} graphs, zero mismatches ({:?})", summary.trials, summary.checks);
    } else {
        println!("{}", serde_json::to_string(&summary)?);
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    detector: String,
    n: usize,
    ms: f64,
    length: Option<usize>,
}

fn bench(a: &BenchArgs) -> Result<()> {
    for &n in &a.sizes {
        if n < 3 {
            return Err(clap_usage("cycle sizes must be at least 3"));
        }
        let g = gen::cycle(n);
        let t = Instant::now();
        let length = match a.detector {
            Detector::Shallow => find_shallow(&g).len(),
            Detector::Medium => find_medium(&g).len(),
            Detector::General => find_general(&g).len(),
            Detector::Deep => find_deep_shortest(&g).len(),
            Detector::Pipeline => shortest_odd_hole_report(&g).hole.map(|h| h.len()),
        };
        let row = BenchRow {
            detector: a.detector.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
            n,
            ms: t.elapsed().as_secs_f64() * 1e3,
            length,
        };
        println!("{}", serde_json::to_string(&row)?);
    }
    Ok(())
}

/// Marks an argument-level problem so it exits with the usage code.
fn clap_usage(msg: &str) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.to_string()))
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn run(cli: &Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(clap_usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("configuring the worker pool")?;
    }
    let stdout = io::stdout();
    match &cli.command {
        Command::Gen(a) => {
            let g = generate(a).map_err(|e| clap_usage(&e.to_string()))?;
            stdout.lock().write_all(encode(&g, a.out_format).as_bytes())?;
        }
        Command::Difftest(a) => difftest(a, cli.pretty)?,
        Command::Bench(a) => bench(a)?,
        _ => {
            let reports = analyze(cli)?;
            let mut out = stdout.lock();
            for r in reports {
                if cli.pretty {
                    writeln!(out, "{}", r.pretty())?;
                } else {
                    writeln!(out, "{}", serde_json::to_string(&r)?)?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Mismatch>() {
                ExitCode::from(3)
            } else if e.is::<InputError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
