//! The `onecross` command line: parse a graph, run a decision or sweep, and
//! print a JSON report.

pub mod input;
pub mod render;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use onecross::budget::Budget;
use onecross::characterize::{
    check_theorem3_with, crossing_number_le_1_with, oracle_crossing_pair, CharacterizeError, CrossingVerdict,
    FailureReason,
};
use onecross::corpus::{sweep, CorpusSpec, SweepOptions};
use onecross::kuratowski::{BranchStructure, KuratowskiFamily};
use onecross::parallel::Parallelism;
use onecross::planarity::{is_planar, test_planarity, KuratowskiCert, Planarity};
use onecross::{EdgeId, EdgePair, Multigraph, VertexId};

use input::{parse, to_graph6, Format};

pub const SCHEMA: u32 = 1;

pub mod exit {
    pub const PLANAR: i32 = 0;
    pub const EXACTLY_ONE: i32 = 1;
    pub const AT_LEAST_TWO: i32 = 2;
    pub const VERIFY_FAILED: i32 = 3;
    pub const INTERNAL: i32 = 4;
    pub const PARSE: i32 = 64;
    pub const PLANAR_INPUT: i32 = 65;
    pub const NOT_A_CROSSING_PAIR: i32 = 66;
    pub const BUDGET: i32 = 69;
    pub const INCONSISTENT: i32 = 70;
}

#[derive(Parser, Debug)]
#[command(name = "onecross", version, about = "Decide crossing number at most one and certify crossing pairs")]
pub struct Cli {
    /// Input format; `auto` recognises graph6 by its character set.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    pub format: Format,
    /// Re-check every certificate in the report before printing it.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Step budget for the exhaustive searches.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_STEPS)]
    pub budget_steps: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Planar, crossing number one, or at least two.
    Decide {
        /// Graph file; standard input when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Every vertex-disjoint edge pair with the three-way condition check.
    Pairs { input: Option<PathBuf> },
    /// A 1-drawing with the given crossing pair, as DOT and optionally SVG.
    Draw {
        input: Option<PathBuf>,
        /// The two edges, each an edge id or `u,v`.
        #[arg(long, num_args = 2, value_names = ["E", "F"], required = true)]
        pair: Vec<String>,
        /// Write DOT here instead of standard output.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// Also write an SVG drawing.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Equivalence sweep over an exhaustive or random corpus.
    Corpus {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Only connected graphs (exhaustive corpora).
        #[arg(long)]
        connected: bool,
        /// Number of random graphs; exhaustive when absent.
        #[arg(long)]
        count: Option<usize>,
        /// Edge bound for random graphs.
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

/// What the process prints and returns.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        stderr.push('\n');
        Self { code, stdout: String::new(), stderr }
    }
}

/// Parses arguments and runs; usage errors exit with the parse code.
pub fn run_args<I, T>(args: I, stdin: &mut dyn std::io::Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin),
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

struct Loaded {
    graph: Multigraph,
    digest: String,
}

fn load(path: &Option<PathBuf>, format: Format, stdin: &mut dyn std::io::Read) -> Result<Loaded, Outcome> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Outcome::error(exit::PARSE, format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Outcome::error(exit::PARSE, format!("standard input: {e}")))?;
            s
        }
    };
    let graph = parse(&text, format).map_err(|e| Outcome::error(exit::PARSE, format!("parse error: {e}")))?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    Ok(Loaded { graph, digest })
}

struct Reporter<'a> {
    cli: &'a Cli,
    start: Instant,
}

impl Reporter<'_> {
    fn finish(&self, command: &str, input: Option<&Loaded>, mut body: Value) -> String {
        let obj = body.as_object_mut().expect("report bodies are objects");
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("command".into(), json!(command));
        if let Some(l) = input {
            obj.insert(
                "input".into(),
                json!({
                    "sha256": l.digest,
                    "vertices": l.graph.vertex_count(),
                    "edges": l.graph.edge_count(),
                    "edge_list": l.graph.edges().map(|(e, u, v)| json!([e, u, v])).collect::<Vec<_>>(),
                }),
            );
        }
        if self.cli.verify {
            obj.insert("verified".into(), json!(true));
        }
        if self.cli.timing {
            obj.insert("timing_ms".into(), json!(self.start.elapsed().as_secs_f64() * 1e3));
        }
        let mut s = serde_json::to_string_pretty(&body).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn std::io::Read) -> Outcome {
    let rep = Reporter { cli, start: Instant::now() };
    let result = match &cli.command {
        Command::Decide { input } => load(input, cli.format, stdin).and_then(|l| decide(cli, &rep, &l)),
        Command::Pairs { input } => load(input, cli.format, stdin).and_then(|l| pairs(cli, &rep, &l)),
        Command::Draw { input, pair, output, svg } => {
            load(input, cli.format, stdin).and_then(|l| draw(&l, pair, output.as_ref(), svg.as_ref()))
        }
        Command::Corpus { min_n, max_n, connected, count, max_m, seed, sequential } => {
            let spec = match count {
                Some(count) => CorpusSpec::Random {
                    count: *count,
                    min_n: *min_n,
                    max_n: *max_n,
                    max_m: *max_m,
                    seed: *seed,
                },
                None => CorpusSpec::Exhaustive { min_n: *min_n, max_n: *max_n, connected_only: *connected },
            };
            let mode = if *sequential { Parallelism::Sequential } else { Parallelism::Rayon };
            Ok(corpus(cli, &rep, &spec, mode))
        }
    };
    result.unwrap_or_else(|o| o)
}

fn characterize_failure(e: CharacterizeError) -> Outcome {
    match e {
        e if e.is_budget() => Outcome::error(exit::BUDGET, format!("budget exceeded: {e}")),
        CharacterizeError::PlanarInput => Outcome::error(exit::PLANAR_INPUT, "planar: no crossing pairs"),
        CharacterizeError::Inconsistency(r) => Outcome::error(
            exit::INCONSISTENT,
            format!(
                "inconsistent conditions on {}: {}",
                r.pair,
                serde_json::to_string(&*r).unwrap_or_default()
            ),
        ),
        e => Outcome::error(exit::INTERNAL, format!("error: {e}")),
    }
}

fn verify_failed(what: impl std::fmt::Display) -> Outcome {
    Outcome::error(exit::VERIFY_FAILED, format!("verification failed: {what}"))
}

fn verify_kuratowski(g: &Multigraph, h: &KuratowskiCert) -> Result<(), Outcome> {
    h.verify(g).map_err(|e| verify_failed(format!("Kuratowski subgraph: {e}")))
}

fn verify_nonplanar(g: &Multigraph, what: &str) -> Result<(), Outcome> {
    match test_planarity(g) {
        Planarity::NonPlanar(h) => h.verify(g).map_err(|e| verify_failed(format!("{what}: {e}"))),
        Planarity::Planar(_) => Err(verify_failed(format!("{what} is planar"))),
    }
}

fn pair_json(g: &Multigraph, p: EdgePair) -> Value {
    json!({
        "e": p.e(),
        "f": p.f(),
        "endpoints": [g.endpoints(p.e()), g.endpoints(p.f())],
    })
}

fn decide(cli: &Cli, rep: &Reporter<'_>, l: &Loaded) -> Result<Outcome, Outcome> {
    let g = &l.graph;
    let verdict =
        crossing_number_le_1_with(g, Parallelism::Sequential, cli.budget_steps).map_err(characterize_failure)?;
    let (code, body) = match &verdict {
        CrossingVerdict::Planar(r) => {
            if cli.verify && (!r.is_planar() || r.graph() != g) {
                return Err(verify_failed("embedding"));
            }
            (
                exit::PLANAR,
                json!({
                    "verdict": "planar",
                    "crossing_number": 0,
                    "certificates": { "embedding": r.rotations() },
                }),
            )
        }
        CrossingVerdict::ExactlyOne { drawing, kuratowski } => {
            if cli.verify {
                drawing.verify(g).map_err(|e| verify_failed(format!("drawing: {e}")))?;
                verify_kuratowski(g, kuratowski)?;
                let p = drawing.crossing_pair;
                if !BranchStructure::new(kuratowski.clone()).is_crossing_pair(p.e(), p.f()).unwrap_or(false) {
                    return Err(verify_failed("the pair does not cross in the Kuratowski subgraph"));
                }
            }
            (
                exit::EXACTLY_ONE,
                json!({
                    "verdict": "exactly_one",
                    "crossing_number": 1,
                    "crossing_pair": pair_json(g, drawing.crossing_pair),
                    "certificates": { "drawing": drawing, "kuratowski": kuratowski },
                }),
            )
        }
        CrossingVerdict::AtLeastTwo { kuratowski, failures } => {
            if cli.verify {
                verify_kuratowski(g, kuratowski)?;
                let expected: Vec<(EdgeId, EdgeId)> = BranchStructure::new(kuratowski.clone()).crossing_pairs();
                let listed: Vec<(EdgeId, EdgeId)> = failures.iter().map(|f| (f.pair.e(), f.pair.f())).collect();
                if expected != listed {
                    return Err(verify_failed("failures do not cover the crossing pairs of the subgraph"));
                }
                for f in failures {
                    let del = |x: EdgeId| g.delete_edges(&[x]).expect("edge exists");
                    match &f.reason {
                        FailureReason::DeletingENonplanar => verify_nonplanar(&del(f.pair.e()), "G - e")?,
                        FailureReason::DeletingFNonplanar => verify_nonplanar(&del(f.pair.f()), "G - f")?,
                        FailureReason::Separated(w) => w
                            .verify(g, f.pair)
                            .map_err(|e| verify_failed(format!("separation of {}: {e}", f.pair)))?,
                    }
                }
            }
            let fails: Vec<Value> = failures
                .iter()
                .map(|f| {
                    let mut v = pair_json(g, f.pair);
                    v["reason"] = serde_json::to_value(&f.reason).expect("serializes");
                    v
                })
                .collect();
            (
                exit::AT_LEAST_TWO,
                json!({
                    "verdict": "at_least_two",
                    "crossing_number_at_least": 2,
                    "certificates": { "kuratowski": kuratowski, "failures": fails },
                }),
            )
        }
    };
    Ok(Outcome {
        code,
        stdout: rep.finish("decide", Some(l), body),
        stderr: String::new(),
    })
}

fn disjoint_pairs(g: &Multigraph) -> Vec<EdgePair> {
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let mut out = Vec::new();
    for (i, &e) in ids.iter().enumerate() {
        for &f in &ids[i + 1..] {
            if !g.edges_touch(e, f) {
                out.push(EdgePair::new(e, f).expect("distinct"));
            }
        }
    }
    out
}

fn pairs(cli: &Cli, rep: &Reporter<'_>, l: &Loaded) -> Result<Outcome, Outcome> {
    let g = &l.graph;
    if is_planar(g) {
        return Err(characterize_failure(CharacterizeError::PlanarInput));
    }
    let mut budget = Budget::new(cli.budget_steps);
    let family = KuratowskiFamily::enumerate(g, &mut budget).map_err(|e| characterize_failure(e.into()))?;
    let mut reports = Vec::new();
    let mut crossing = Vec::new();
    for p in disjoint_pairs(g) {
        let r = check_theorem3_with(g, &family, p, &mut budget).map_err(characterize_failure)?;
        if cli.verify {
            if let Some(d) = &r.drawing {
                d.verify(g).map_err(|e| verify_failed(format!("drawing of {p}: {e}")))?;
            }
            if let Some(w) = r.cond_ii.separation.witness() {
                w.verify(g, p).map_err(|e| verify_failed(format!("separation of {p}: {e}")))?;
            }
            for h in r.cond_ii.failing.iter().chain(&r.cond_iii.witness) {
                verify_kuratowski(g, h)?;
            }
        }
        if r.cond_i {
            crossing.push(pair_json(g, p));
        }
        let mut v = serde_json::to_value(&r).expect("serializes");
        v["agree"] = json!(r.agree());
        v["crossing"] = json!(r.cond_i);
        reports.push(v);
    }
    let body = json!({
        "kuratowski_count": family.len(),
        "crossing_pairs": crossing,
        "pairs": reports,
    });
    Ok(Outcome {
        code: 0,
        stdout: rep.finish("pairs", Some(l), body),
        stderr: String::new(),
    })
}

/// An edge id, or `u,v` naming the first edge between two vertices.
pub fn resolve_edge(g: &Multigraph, s: &str) -> Result<EdgeId, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once([',', '-']) {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad vertex `{x}`"));
        let (a, b) = (num(a)?, num(b)?);
        if a >= g.vertex_count() || b >= g.vertex_count() {
            return Err(format!("no vertex pair {a},{b}"));
        }
        g.edges_between(VertexId(a), VertexId(b))
            .first()
            .copied()
            .ok_or_else(|| format!("no edge between {a} and {b}"))
    } else {
        let id: usize = s.parse().map_err(|_| format!("bad edge `{s}`"))?;
        let e = EdgeId(id);
        if g.contains_edge(e) {
            Ok(e)
        } else {
            Err(format!("no edge {e}"))
        }
    }
}

fn draw(l: &Loaded, pair: &[String], output: Option<&PathBuf>, svg: Option<&PathBuf>) -> Result<Outcome, Outcome> {
    let g = &l.graph;
    let edges: Vec<EdgeId> = pair
        .iter()
        .map(|s| resolve_edge(g, s))
        .collect::<Result<_, _>>()
        .map_err(|e| Outcome::error(exit::PARSE, format!("--pair: {e}")))?;
    let p = EdgePair::new(edges[0], edges[1]).map_err(|e| Outcome::error(exit::PARSE, format!("--pair: {e}")))?;
    let drawing = oracle_crossing_pair(g, p)
        .map_err(characterize_failure)?
        .ok_or_else(|| Outcome::error(exit::NOT_A_CROSSING_PAIR, format!("{p} is not a crossing pair")))?;
    drawing.verify(g).map_err(|e| verify_failed(format!("drawing: {e}")))?;
    let dot = render::to_dot(&drawing);
    let write = |path: &PathBuf, text: &str| {
        std::fs::write(path, text).map_err(|e| Outcome::error(exit::INTERNAL, format!("{}: {e}", path.display())))
    };
    if let Some(path) = svg {
        write(path, &render::to_svg(&drawing))?;
    }
    let stdout = match output {
        Some(path) => {
            write(path, &dot)?;
            String::new()
        }
        None => dot,
    };
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}

fn corpus(cli: &Cli, rep: &Reporter<'_>, spec: &CorpusSpec, mode: Parallelism) -> Outcome {
    let s = sweep(spec, SweepOptions { parallelism: mode, budget_steps: cli.budget_steps });
    let minimal = s.minimal_inconsistency().map(|i| {
        let g = i.graph.to_simple().to_multigraph();
        json!({ "graph6": to_graph6(&g), "pair": i.pair, "detail": i.detail })
    });
    let body = json!({
        "corpus": spec,
        "summary": {
            "graphs": s.graphs,
            "nonplanar": s.nonplanar,
            "pairs_checked": s.pairs_checked,
            "crossing_pairs": s.crossing_pairs,
            "crossing_number_one": s.crossing_number_one,
            "inconsistencies": s.inconsistencies.len(),
            "budget_exhausted": s.budget_exhausted,
            "refused": s.refused,
        },
        "minimal_inconsistency": minimal.clone(),
    });
    let stdout = rep.finish("corpus", None, body);
    let (code, stderr) = if !s.consistent() {
        let m = minimal.expect("inconsistent sweeps have a minimal instance");
        (exit::INCONSISTENT, format!("inconsistency on {}\n", m["graph6"].as_str().unwrap_or("")))
    } else if !s.complete() {
        let why = s.refused.clone().unwrap_or_else(|| format!("{} graphs ran out of budget", s.budget_exhausted));
        (exit::BUDGET, format!("budget exceeded: {why}\n"))
    } else {
        (0, String::new())
    };
    Outcome { code, stdout, stderr }
}
