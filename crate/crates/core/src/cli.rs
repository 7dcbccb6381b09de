//! The `nbhd` command line.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomp::decompose;
use crate::family::FamilySpec;
use crate::graph::{parse_json, parse_text, write_json, write_text, Graph};
use crate::hardness::{reduce_alpha_to_an, reduce_vc_to_pn};
use crate::optimal::{lists_for, write_certificates, OptimalLists};
use crate::oracle::{self, ParamKind, MASK_LIMIT};
use crate::recognition::{verdict, Analysis, RecognitionError};

#[derive(Debug, Parser)]
#[command(name = "nbhd", version, about = "Neighborhood-perfect graph toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input graph file; standard input when absent.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Graph format for input and output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edge)]
    pub format: Format,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Oracle size guard override (`oracle`), or largest n (`selftest`).
    #[arg(long = "max-n", global = true)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edge,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    /// Independent set to neighborhood independence.
    Alpha,
    /// Vertex cover to neighborhood cover.
    Vc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class and neighborhood-perfectness verdict with witness.
    Recognize,
    /// The four optimal certificate lists.
    Sets,
    /// Lengths of the optimal lists.
    Params,
    /// Emit a family member, e.g. `starfish(4,path(4))` or `random_treecograph(50)`.
    Generate { spec: String },
    /// Brute-force parameter value.
    Oracle {
        #[arg(long, value_parser = parse_param)]
        param: ParamKind,
    },
    /// Emit a co-bipartite reduction instance of the input graph.
    Reduce {
        #[arg(long, value_enum)]
        kind: ReduceKind,
    },
    /// Timing curve over unions of random tree-cographs of doubling size.
    Bench {
        #[arg(long, default_value_t = 10_000)]
        start: usize,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        /// Repetitions per size; the fastest is kept.
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Exhaustive comparison against the brute-force oracles.
    Selftest,
}

fn parse_param(s: &str) -> Result<ParamKind, String> {
    s.parse().map_err(|e: oracle::OracleError| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unsupported(_) | CliError::Check(_) => 1,
            _ => 2,
        }
    }
}

impl From<RecognitionError> for CliError {
    fn from(e: RecognitionError) -> CliError {
        match e {
            RecognitionError::UnsupportedClass => CliError::Unsupported(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub decompose_us: u64,
    pub recognize_us: u64,
    pub sets_us: u64,
}

/// Everything one run produced. Absent fields did not apply.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub class: Option<String>,
    pub perfect: Option<bool>,
    pub witness: Option<String>,
    pub params: BTreeMap<String, usize>,
    pub certificates: Option<OptimalLists>,
    pub timing_us: BTreeMap<String, u64>,
    pub bench: Vec<BenchRow>,
    pub output: Option<String>,
    pub warnings: Vec<String>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `argv` (including the program name) and never panics on bad input.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                render_text(&report)
            };
            let stderr = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Outcome { code: 0, stdout, stderr }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn micros(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

fn read_graph(cli: &Cli, report: &mut RunReport) -> Result<Graph, CliError> {
    let mut text = String::new();
    match &cli.input {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            report.input = Some(p.display().to_string());
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Io(e.to_string()))?;
            report.input = Some("<stdin>".into());
        }
    }
    let g = match cli.format {
        Format::Edge => parse_text(&text).map_err(|e| CliError::Parse(e.to_string()))?,
        Format::Json => parse_json(&text).map_err(|e| CliError::Parse(e.to_string()))?,
    };
    report.n = Some(g.n());
    report.m = Some(g.m());
    Ok(g)
}

fn emit_graph(g: &Graph, format: Format, comments: &[String]) -> String {
    match format {
        Format::Edge => write_text(g, comments),
        Format::Json => write_json(g) + "\n",
    }
}

fn record_lists(report: &mut RunReport, l: &OptimalLists) {
    report.params.insert("rho_n".into(), l.r_n.len());
    report.params.insert("alpha_n".into(), l.a_n.len());
    report.params.insert("alpha_2".into(), l.a_2.len());
    report.params.insert("gamma".into(), l.d.len());
}

pub fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    let mut report = RunReport::default();
    match &cli.command {
        Command::Recognize | Command::Sets | Command::Params => {
            let g = read_graph(cli, &mut report)?;
            report.command = match cli.command {
                Command::Recognize => "recognize",
                Command::Sets => "sets",
                _ => "params",
            }
            .into();
            let t0 = Instant::now();
            let tree = decompose(&g).map_err(|e| CliError::Parse(e.to_string()))?;
            report.timing_us.insert("decompose".into(), micros(t0));
            let t1 = Instant::now();
            let a = Analysis::new(tree)?;
            report.class = Some(a.class.to_string());
            if matches!(cli.command, Command::Recognize) {
                let v = verdict(&a);
                report.perfect = Some(v.perfect);
                report.witness = v.witness.map(|w| w.to_string());
                report.timing_us.insert("recognize".into(), micros(t1));
            } else {
                let (l, _) = lists_for(&a);
                report.timing_us.insert("sets".into(), micros(t1));
                record_lists(&mut report, &l);
                if matches!(cli.command, Command::Sets) {
                    l.validate(&g).map_err(CliError::Check)?;
                    report.certificates = Some(l);
                }
            }
        }
        Command::Generate { spec } => {
            report.command = "generate".into();
            let spec = FamilySpec::parse(spec, cli.seed).map_err(|e| CliError::Parse(e.to_string()))?;
            let g = spec.generate().map_err(|e| CliError::Parse(e.to_string()))?;
            report.input = Some(spec.to_string());
            report.n = Some(g.n());
            report.m = Some(g.m());
            report.output = Some(emit_graph(&g, cli.format, &[format!("spec {spec}")]));
        }
        Command::Oracle { param } => {
            let g = read_graph(cli, &mut report)?;
            report.command = "oracle".into();
            let mut limit = param.default_limit();
            if let Some(k) = cli.max_n {
                limit = k.min(MASK_LIMIT);
                report.warnings.push(format!(
                    "size guard for {} raised from {} to {limit}; runtime is exponential",
                    param.name(),
                    param.default_limit()
                ));
            }
            let t0 = Instant::now();
            let v = oracle::brute_param_with_limit(&g, *param, limit).map_err(|e| match e {
                oracle::OracleError::SizeGuard { .. } => CliError::Guard(e.to_string()),
                other => CliError::Check(other.to_string()),
            })?;
            report.timing_us.insert("oracle".into(), micros(t0));
            report.params.insert(param.name().into(), v.value);
        }
        Command::Reduce { kind } => {
            let g = read_graph(cli, &mut report)?;
            report.command = "reduce".into();
            let r = match kind {
                ReduceKind::Alpha => reduce_alpha_to_an(&g),
                ReduceKind::Vc => reduce_vc_to_pn(&g).map_err(|e| CliError::Usage(e.to_string()))?,
            };
            let source = format!(
                "{} of {} (n {} m {})",
                if *kind == ReduceKind::Alpha { "alpha" } else { "vc" },
                report.input.clone().unwrap_or_default(),
                g.n(),
                g.m()
            );
            report.output = Some(match cli.format {
                Format::Edge => r.to_text(&source),
                Format::Json => write_json(&r.graph) + "\n",
            });
        }
        Command::Bench { start, steps, reps } => {
            report.command = "bench".into();
            let seed = cli.seed.ok_or_else(|| CliError::Usage("bench needs --seed".into()))?;
            if *start == 0 || *steps == 0 {
                return Err(CliError::Usage("--start and --steps must be positive".into()));
            }
            for i in 0..*steps {
                report.bench.push(bench_row(*start << i, seed, *reps));
            }
        }
        Command::Selftest => {
            report.command = "selftest".into();
            let max_n = cli.max_n.unwrap_or(6);
            if max_n > 7 {
                return Err(CliError::Guard(format!("selftest refuses n = {max_n}: the limit is 7")));
            }
            let t0 = Instant::now();
            for n in 1..=max_n {
                let s = sweep(n);
                report.params.insert(format!("graphs_{n}"), s.graphs);
                report.params.insert(format!("checked_{n}"), s.in_class);
                if let Some(first) = s.mismatches.first() {
                    return Err(CliError::Check(format!(
                        "{} mismatches on n = {n}, first: {first}",
                        s.mismatches.len()
                    )));
                }
            }
            report.timing_us.insert("selftest".into(), micros(t0));
        }
    }
    Ok(report)
}

/// Union of random tree-cographs on about 200 vertices each, `n` in total.
pub fn bench_graph(n: usize, seed: u64) -> Graph {
    let parts: Vec<Graph> = (0..n.div_ceil(200))
        .map(|i| {
            let size = (n - i * 200).min(200);
            let spec = FamilySpec::RandomTreeCograph { n: size, seed: seed.wrapping_add(i as u64) };
            spec.generate().expect("random tree-cographs always generate")
        })
        .collect();
    Graph::disjoint_union_all(&parts).expect("small parts")
}

/// Times decomposition, recognition and list construction on one instance,
/// keeping the fastest of `reps` runs for each phase.
pub fn bench_row(n: usize, seed: u64, reps: usize) -> BenchRow {
    let g = bench_graph(n, seed);
    let mut row = BenchRow { n, m: g.m(), decompose_us: u64::MAX, recognize_us: u64::MAX, sets_us: u64::MAX };
    for _ in 0..reps.max(1) {
        let t0 = Instant::now();
        let tree = decompose(&g).expect("decomposition succeeds");
        row.decompose_us = row.decompose_us.min(micros(t0));
        let t1 = Instant::now();
        let a = Analysis::for_class(tree, crate::recognition::GraphClass::TreeCograph).expect("tree-cograph");
        let v = verdict(&a);
        let recognize_us = micros(t1);
        let t2 = Instant::now();
        let (l, _) = lists_for(&a);
        row.recognize_us = row.recognize_us.min(recognize_us);
        row.sets_us = row.sets_us.min(micros(t2) + recognize_us);
        std::hint::black_box((v, l));
    }
    row
}

/// Outcome of comparing every graph on `n` labeled vertices with the oracles.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sweep {
    pub graphs: usize,
    pub in_class: usize,
    pub mismatches: Vec<String>,
}

/// Compares the verdict and the list lengths of one graph with brute force.
/// Returns `Ok(false)` for graphs outside both classes.
pub fn check_graph(g: &Graph) -> Result<bool, String> {
    let tree = decompose(g).map_err(|e| e.to_string())?;
    let a = match Analysis::new(tree) {
        Ok(a) => a,
        Err(RecognitionError::UnsupportedClass) => return Ok(false),
        Err(e) => return Err(e.to_string()),
    };
    let v = verdict(&a);
    let truth = oracle::brute_is_np_with_limit(g, 10).map_err(|e| e.to_string())?;
    if v.perfect != truth {
        return Err(format!("verdict {} but brute force says {truth} on {g:?}", v.perfect));
    }
    let (l, _) = lists_for(&a);
    l.validate(g).map_err(|e| format!("{e} on {g:?}"))?;
    let pairs = [
        (ParamKind::Pn, l.r_n.len()),
        (ParamKind::An, l.a_n.len()),
        (ParamKind::A2, l.a_2.len()),
        (ParamKind::Gamma, l.d.len()),
    ];
    for (kind, ours) in pairs {
        let brute = oracle::brute_param_with_limit(g, kind, MASK_LIMIT).map_err(|e| e.to_string())?;
        if brute.value != ours {
            return Err(format!("{kind}: lists give {ours}, brute force {} on {g:?}", brute.value));
        }
    }
    Ok(true)
}

/// Checks every labeled graph on `n` vertices, in parallel.
pub fn sweep(n: usize) -> Sweep {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    let results: Vec<Result<bool, String>> = (0..total)
        .into_par_iter()
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            check_graph(&Graph::from_edges(n, edges).expect("valid pairs"))
        })
        .collect();
    let mut s = Sweep { graphs: results.len(), ..Sweep::default() };
    for r in results {
        match r {
            Ok(true) => s.in_class += 1,
            Ok(false) => {}
            Err(e) => s.mismatches.push(e),
        }
    }
    s
}

/// Line-oriented rendering of a report.
pub fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    match r.command.as_str() {
        "recognize" => {
            let verdict = if r.perfect == Some(true) { "neighborhood-perfect" } else { "not neighborhood-perfect" };
            out.push_str(&format!("{}, {verdict}", r.class.as_deref().unwrap_or("?")));
            if let Some(w) = &r.witness {
                out.push_str(&format!(", witness {w}"));
            }
            out.push('\n');
        }
        "sets" => {
            out.push_str(&format!("class {}\n", r.class.as_deref().unwrap_or("?")));
            if let Some(l) = &r.certificates {
                out.push_str(&write_certificates(l));
            }
        }
        "bench" => {
            out.push_str("n m decompose_us recognize_us sets_us\n");
            for b in &r.bench {
                out.push_str(&format!("{} {} {} {} {}\n", b.n, b.m, b.decompose_us, b.recognize_us, b.sets_us));
            }
        }
        "generate" | "reduce" => out.push_str(r.output.as_deref().unwrap_or("")),
        "selftest" => {
            for (k, v) in &r.params {
                if let Some(n) = k.strip_prefix("checked_") {
                    let total = r.params.get(&format!("graphs_{n}")).copied().unwrap_or(0);
                    out.push_str(&format!("n {n}: {v} class members of {total} graphs agree with brute force\n"));
                }
            }
        }
        _ => {
            if let Some(c) = &r.class {
                out.push_str(&format!("class {c}\n"));
            }
            for (k, v) in &r.params {
                out.push_str(&format!("{k} {v}\n"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips() {
        let r = RunReport {
            command: "params".into(),
            params: [("rho_n".to_string(), 3)].into_iter().collect(),
            certificates: Some(OptimalLists::default()),
            ..RunReport::default()
        };
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<RunReport>(&text).unwrap(), r);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["nbhd", "frobnicate"]).code, 2);
        assert_eq!(run(["nbhd", "--help"]).code, 0);
        assert_eq!(run(["nbhd", "bench"]).code, 2);
        assert_eq!(run(["nbhd", "generate", "random_tree(5)"]).code, 2);
        let g = run(["nbhd", "generate", "random_tree(5)", "--seed", "3"]);
        assert_eq!(g.code, 0);
        assert!(g.stdout.starts_with("c spec random_tree(5,3)\np 5 4\n"));
    }
}
