// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `imlab` command line. [`run`] is the whole program; the binary only
//! forwards process arguments and standard streams to it.
//!
//! Every flag can also be set through an `IMLAB_*` environment variable.
//! Precedence is flag, then environment, then default.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{evaluate_all, format_rational, BoundReport};
use crate::error::{Error, Result};
use crate::graph::generators::{complete_bipartite, family_gpqr, random_regular};
use crate::graph::{encode_graph6, parse_edge_list, parse_graph6, Graph, Graph6Reader, VertexSet};
use crate::invariants::{all_maximum_independent_sets, compute_record, Budget, InvariantRecord};
use crate::lemmas::{hall_saturating_matching, telescoping_matching, IntersectionChain, TelescopingTrace};
use crate::search::{
    connected_cubic_graphs, graph_id, scan_stream, Check, Filter, ReportHeader, ScanOptions,
    SearchReport, Source,
};

/// Exit status for malformed invocations.
pub const EXIT_USAGE: i32 = 64;
/// Exit status for I/O, parse and budget failures.
pub const EXIT_FAILURE: i32 = 3;
/// Exit status when a proven inequality fails.
pub const EXIT_DEFECT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "imlab", version, about = "Independence and matching invariants of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format; defaults to text for family and hall-demo, json otherwise.
    #[arg(long, global = true, value_enum, env = "IMLAB_FORMAT")]
    pub format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, global = true, env = "IMLAB_OUTPUT")]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1, env = "IMLAB_SEED")]
    pub seed: u64,
    /// Worker threads for per-graph checks.
    #[arg(long, global = true, default_value_t = 1, env = "IMLAB_WORKERS")]
    pub workers: usize,
    /// Search-tree node limit per solver call.
    #[arg(long, global = true, default_value_t = Budget::default().nodes, env = "IMLAB_BUDGET_NODES")]
    pub budget_nodes: u64,
    /// Limit on enumerated independent sets per graph.
    #[arg(long, global = true, default_value_t = Budget::default().max_sets, env = "IMLAB_BUDGET_SETS")]
    pub budget_sets: usize,
}

/// Where a subcommand reads graphs from. With neither flag, graph6 lines are
/// read from standard input.
#[derive(Debug, Args)]
pub struct Input {
    /// Inline graph6 string; may be repeated.
    #[arg(long = "graph6", conflicts_with = "input")]
    pub graph6: Vec<String>,
    /// File of graph6 lines (or an edge list with --edge-list).
    #[arg(long, env = "IMLAB_INPUT")]
    pub input: Option<PathBuf>,
    /// Read --input as an edge list: `n m` then one `u v` per line.
    #[arg(long, requires = "input")]
    pub edge_list: bool,
}

#[derive(Debug, Args)]
pub struct Corpus {
    #[command(flatten)]
    pub input: Input,
    /// Every labelled graph on 1..=N vertices (with --n-max).
    #[arg(long, conflicts_with_all = ["graph6", "input", "cubic", "random"])]
    pub exhaustive: bool,
    /// Connected cubic graphs up to isomorphism on 4..=N vertices (with --n-max).
    #[arg(long, conflicts_with_all = ["graph6", "input", "random"])]
    pub cubic: bool,
    /// This many seeded random graphs on 1..=N vertices (with --n-max).
    #[arg(long, value_name = "COUNT", conflicts_with_all = ["graph6", "input"])]
    pub random: Option<usize>,
    /// Largest order generated; for graph6 input, larger graphs are filtered out.
    #[arg(long, value_name = "N", env = "IMLAB_N_MAX")]
    pub n_max: Option<usize>,
    /// Comma-separated filters: connected, regular, regular=R, cubic,
    /// positive-regular, isolate-free, n>=K, n<=K.
    #[arg(long, value_name = "LIST")]
    pub filter: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the invariant record of each input graph.
    Invariants {
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate every bound on each input graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Checks shown in text and csv output (json always has all).
        #[arg(long, value_name = "LIST", default_value = "all", env = "IMLAB_CHECK")]
        check: String,
    },
    /// Run checks over a corpus and report defects, findings and equality cases.
    Scan {
        #[command(flatten)]
        corpus: Corpus,
        /// Comma-separated checks: thm1, thm2, chain1, ratio2, eq3, corollary2,
        /// thm3, fournier, conjecture1, question1, problem1, problem2, or all.
        #[arg(long, value_name = "LIST", default_value = "all", env = "IMLAB_CHECK")]
        check: String,
        /// Also write the graph6 strings of conjecture and question violations here.
        #[arg(long, value_name = "PATH")]
        witness_out: Option<PathBuf>,
    },
    /// Emit generated graphs as graph6 lines.
    Family {
        /// The sharpness family G(p,q,r).
        #[arg(long, num_args = 3, value_names = ["P", "Q", "R"])]
        gpqr: Option<Vec<usize>>,
        /// K_{a,b}.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        bipartite: Option<Vec<usize>>,
        /// Seeded random r-regular graphs on n vertices.
        #[arg(long, num_args = 2, value_names = ["N", "R"])]
        regular: Option<Vec<usize>>,
        /// Connected cubic graphs on 4..=N vertices (with --n-max).
        #[arg(long)]
        cubic: bool,
        #[arg(long, value_name = "N")]
        n_max: Option<usize>,
        /// Number of random graphs for --regular.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Print the saturating-matching constructions step by step.
    HallDemo {
        #[command(flatten)]
        input: Input,
        /// Use at most this many maximum independent sets in the chain.
        #[arg(long, value_name = "K")]
        sets: Option<usize>,
    },
    /// Collect equality instances: 1 for cubic α = μ, 2 for δα = Δμ.
    Witnesses {
        #[command(flatten)]
        corpus: Corpus,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        problem: u8,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status. Diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match execute(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "imlab: {e}");
            exit_code_for(&e)
        }
    }
}

/// Maps an error that aborted a command to its exit status.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidParameter(_) | Error::Contract(_) | Error::Graph6Unsupported(_) => EXIT_USAGE,
        Error::Internal(_) => EXIT_DEFECT,
        _ => EXIT_FAILURE,
    }
}

fn execute(cli: &Cli, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> Result<i32> {
    let common = &cli.common;
    if common.budget_nodes == 0 || common.budget_sets == 0 || common.workers == 0 {
        return Err(Error::InvalidParameter("budgets and --workers must be positive".into()));
    }
    let mut file;
    let out: &mut dyn Write = match &common.output {
        Some(path) => {
            file = io::BufWriter::new(File::create(path)?);
            &mut file
        }
        None => stdout,
    };
    let code = match &cli.command {
        Command::Invariants { input } => invariants(common, input, stdin, out)?,
        Command::Verify { input, check } => verify(common, input, check, stdin, out)?,
        Command::Scan { corpus, check, witness_out } => {
            let checks = Check::parse_list(check)?;
            let report = run_scan(common, corpus, &checks, stdin)?;
            if let Some(path) = witness_out {
                let mut w = io::BufWriter::new(File::create(path)?);
                for g6 in report.conjecture1.violations.iter().chain(&report.question1.violations) {
                    writeln!(w, "{g6}")?;
                }
                w.flush()?;
            }
            emit_search_report(&report, common.format.unwrap_or(Format::Json), out)?;
            report.exit_code()
        }
        Command::Family { gpqr, bipartite, regular, cubic, n_max, count } => {
            let graphs = family(gpqr, bipartite, regular, *cubic, *n_max, *count, common.seed)?;
            for g in graphs {
                writeln!(out, "{}", encode_graph6(&g)?)?;
            }
            0
        }
        Command::HallDemo { input, sets } => hall_demo(common, input, *sets, stdin, out)?,
        Command::Witnesses { corpus, problem } => {
            let check = if *problem == 1 { Check::Problem1 } else { Check::Problem2 };
            let report = run_scan(common, corpus, &[check], stdin)?;
            let list = if *problem == 1 {
                &report.problem1_witnesses
            } else {
                &report.problem2_witnesses
            };
            if common.format == Some(Format::Json) {
                serde_json::to_writer_pretty(&mut *out, list).map_err(io::Error::from)?;
                writeln!(out)?;
            } else {
                for g6 in list {
                    writeln!(out, "{g6}")?;
                }
            }
            if report.skipped.is_empty() { 0 } else { EXIT_FAILURE }
        }
    };
    out.flush()?;
    Ok(code)
}

fn budget(common: &Common) -> Budget {
    Budget { nodes: common.budget_nodes, max_sets: common.budget_sets }
}

/// Streams the graphs named by `input` into `visit`.
fn for_each_input<F>(input: &Input, stdin: &mut dyn BufRead, mut visit: F) -> Result<()>
where
    F: FnMut(Graph) -> Result<()>,
{
    if !input.graph6.is_empty() {
        for s in &input.graph6 {
            visit(parse_graph6(s.trim())?)?;
        }
    } else if let Some(path) = &input.input {
        let reader = BufReader::new(File::open(path)?);
        if input.edge_list {
            visit(parse_edge_list(reader)?)?;
        } else {
            for item in Graph6Reader::new(reader) {
                visit(item?.1)?;
            }
        }
    } else {
        for item in Graph6Reader::new(stdin) {
            visit(item?.1)?;
        }
    }
    Ok(())
}

fn invariants(common: &Common, input: &Input, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let budget = budget(common);
    let format = common.format.unwrap_or(Format::Json);
    let mut csv = (format == Format::Csv).then(|| csv::Writer::from_writer(Vec::new()));
    for_each_input(input, stdin, |g| {
        let record = compute_record(&g, &budget)?;
        match format {
            Format::Json => write_json_line(&mut *out, &record)?,
            Format::Csv => csv.as_mut().unwrap().serialize(&record).map_err(csv_err)?,
            Format::Text => writeln!(out, "{}", record_text(&record))?,
        }
        Ok(())
    })?;
    if let Some(w) = csv {
        out.write_all(&w.into_inner().map_err(|e| io::Error::other(e.to_string()))?)?;
    }
    Ok(0)
}

fn csv_err(e: csv::Error) -> Error {
    Error::from(io::Error::other(e.to_string()))
}

fn write_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn record_text(r: &InvariantRecord) -> String {
    format!(
        "{} n={} m={} alpha={} mu={} mu*={} i={} a={} delta={} Delta={} core={} {} \
         well_covered={} konig_egervary={} maximum_sets={}",
        r.graph6.as_deref().unwrap_or("-"),
        r.n,
        r.m,
        r.alpha,
        r.mu,
        r.mu_star,
        r.idom,
        r.annihilation,
        r.delta,
        r.big_delta,
        r.core_size,
        r.edge_class,
        r.well_covered,
        r.konig_egervary,
        r.max_ind_set_count
    )
}

fn verify(
    common: &Common,
    input: &Input,
    check: &str,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32> {
    let checks = Check::parse_list(check)?;
    let budget = budget(common);
    let format = common.format.unwrap_or(Format::Json);
    let mut defects = false;
    let mut csv_header = format == Format::Csv;
    for_each_input(input, stdin, |g| {
        let report = evaluate_all(&graph_id(&g), &g, &budget)?;
        defects |= !report.defects.is_empty();
        match format {
            Format::Json => write_json_line(&mut *out, &report)?,
            Format::Text => {
                for line in verify_lines(&report, &checks) {
                    writeln!(out, "{line}")?;
                }
            }
            Format::Csv => {
                if csv_header {
                    let names: Vec<&str> = checks.iter().map(|c| c.name()).collect();
                    writeln!(out, "graph6,{},defects", names.join(","))?;
                    csv_header = false;
                }
                let cells: Vec<String> =
                    checks.iter().map(|&c| verify_cell(&report, c).replace(',', ";")).collect();
                writeln!(out, "{},{},{}", report.id, cells.join(","), report.defects.join(";"))?;
            }
        }
        Ok(())
    })?;
    Ok(if defects { EXIT_DEFECT } else { 0 })
}

/// One-cell summary of a check for csv output.
fn verify_cell(r: &BoundReport, check: Check) -> String {
    let rec = &r.record;
    match check {
        Check::Thm1 => format!("{} (slack {})", r.thm1_core.bound, r.thm1_core.slack),
        Check::Thm2 => format!("{} <= {} (slack {})", r.thm2.lhs, r.thm2.rhs, r.thm2.slack),
        Check::Chain1 => format!("{:?}", r.chain1.0),
        Check::Ratio2 => r.ratio2.as_ref().map_or("n/a".into(), format_rational),
        Check::Eq3 => {
            if r.eq3.applicable {
                format!("{} <= {}", r.eq3.lhs, r.eq3.rhs)
            } else {
                "n/a".into()
            }
        }
        Check::Corollary2 => format!("{} <= {}", rec.alpha, rec.mu),
        Check::Thm3 => r.thm3_witness.map_or("n/a".into(), |k| k.to_string()),
        Check::Fournier => r.fournier_cycle.map_or("class1".into(), |c| format!("cycle={c}")),
        Check::Conjecture1 => {
            if r.regular_chain.is_some() {
                format!("{} <= {}", rec.idom, rec.mu_star)
            } else {
                "n/a".into()
            }
        }
        Check::Question1 => format!("{} <= {}", rec.delta * rec.idom, rec.big_delta * rec.mu_star),
        Check::Problem1 => r.equality.problem1.to_string(),
        Check::Problem2 => r.equality.problem2.to_string(),
    }
}

fn verify_lines(r: &BoundReport, checks: &[Check]) -> Vec<String> {
    let rec = &r.record;
    let mut lines = vec![format!(
        "{}: n={} m={} alpha={} mu={} mu*={} i={}",
        r.id, rec.n, rec.m, rec.alpha, rec.mu, rec.mu_star, rec.idom
    )];
    for &c in checks {
        let line = match c {
            Check::Thm1 => {
                let mut s = format!(
                    "  thm1: core bound {} slack {}{}",
                    r.thm1_core.bound,
                    r.thm1_core.slack,
                    if r.equality.thm1_core { " [equality]" } else { "" }
                );
                if let Some(p) = r.thm1_best_pair {
                    s += &format!(
                        "; best pairwise bound {} slack {} over {} pairs",
                        p.bound, p.slack, r.thm1_pairs_checked
                    );
                }
                s
            }
            Check::Thm2 => format!(
                "  thm2: delta*alpha {} <= Delta*mu {} slack {}{}",
                r.thm2.lhs,
                r.thm2.rhs,
                r.thm2.slack,
                if r.equality.problem2 { " [equality]" } else { "" }
            ),
            Check::Chain1 => format!("  chain1: {:?}", r.chain1.0),
            Check::Ratio2 => match &r.ratio2 {
                Some(q) => format!("  ratio2: alpha {} <= {}", rec.alpha, format_rational(q)),
                None => "  ratio2: n/a (delta = 0)".into(),
            },
            Check::Eq3 => format!(
                "  eq3: n - 2mu* = {} vs mu = {}{}",
                r.eq3.lhs,
                r.eq3.rhs,
                if r.eq3.applicable { "" } else { " (not asserted)" }
            ),
            Check::Corollary2 => format!(
                "  corollary2: alpha {} vs mu {} (core {}, well_covered {})",
                rec.alpha, rec.mu, rec.core_size, rec.well_covered
            ),
            Check::Thm3 => match (&r.regular_chain, r.thm3_witness) {
                (Some(chain), Some(k)) => {
                    format!("  thm3: saturating matching of size {k}; chain {chain}")
                }
                _ => "  thm3: n/a (not regular)".into(),
            },
            Check::Fournier => match r.fournier_cycle {
                Some(c) => format!("  fournier: class2, G_Delta has a cycle: {c}"),
                None => "  fournier: class1".into(),
            },
            Check::Conjecture1 => {
                if r.regular_chain.is_some() {
                    format!("  conjecture1: i {} <= mu* {}: {}", rec.idom, rec.mu_star, rec.idom <= rec.mu_star)
                } else {
                    "  conjecture1: n/a (not regular)".into()
                }
            }
            Check::Question1 => {
                let (l, rr) = (rec.delta * rec.idom, rec.big_delta * rec.mu_star);
                format!("  question1: delta*i {l} <= Delta*mu* {rr}: {}", l <= rr)
            }
            Check::Problem1 => format!("  problem1: {}", r.equality.problem1),
            Check::Problem2 => format!("  problem2: {}", r.equality.problem2),
        };
        lines.push(line);
    }
    if !r.defects.is_empty() {
        lines.push(format!("  DEFECTS: {}", r.defects.join(", ")));
    }
    lines
}

fn run_scan(common: &Common, corpus: &Corpus, checks: &[Check], stdin: &mut dyn BufRead) -> Result<SearchReport> {
    let filters: Vec<Filter> = match &corpus.filter {
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let opts = ScanOptions {
        budget: budget(common),
        workers: common.workers,
        keep_rows: common.format == Some(Format::Csv),
    };
    let need_n = |what: &str| {
        corpus
            .n_max
            .ok_or_else(|| Error::InvalidParameter(format!("{what} needs --n-max")))
    };
    let source = if corpus.exhaustive {
        Some(Source::LabelledUpTo { n_max: need_n("--exhaustive")? })
    } else if corpus.cubic {
        Some(Source::ConnectedCubic { n_max: need_n("--cubic")? })
    } else if let Some(count) = corpus.random {
        Some(Source::RandomGnp { count, n_min: 1, n_max: need_n("--random")?, seed: common.seed })
    } else if !corpus.input.graph6.is_empty() {
        Some(Source::Graph6Lines(corpus.input.graph6.clone()))
    } else {
        corpus.input.input.as_ref().map(|path| {
            if corpus.input.edge_list {
                Source::EdgeListFile(path.clone())
            } else {
                Source::Graph6File(path.clone())
            }
        })
    };
    let mut filters = filters;
    if let (Some(n), Some(Source::Graph6File(_) | Source::Graph6Lines(_)) | None) = (corpus.n_max, &source) {
        filters.push(Filter::MaxOrder(n));
    }
    match source {
        Some(src) => {
            let header = ReportHeader { source: src.to_string(), labelled_corpus: src.is_labelled() };
            scan_stream(src.stream()?, header, &filters, checks, &opts)
        }
        None => {
            let header = ReportHeader { source: "graph6 lines on standard input".into(), labelled_corpus: false };
            let stream = Graph6Reader::new(stdin).map(|r| r.map(|(_, g)| g));
            scan_stream(stream, header, &filters, checks, &opts)
        }
    }
}

/// Writes a scan report. Json and text are deterministic; csv is the per-graph table.
pub fn emit_search_report(report: &SearchReport, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &report.rows {
                w.serialize(row).map_err(csv_err)?;
            }
            out.write_all(&w.into_inner().map_err(|e| io::Error::other(e.to_string()))?)?;
        }
        Format::Text => {
            writeln!(out, "source: {}", report.source)?;
            if report.labelled_corpus {
                writeln!(out, "note: labelled enumeration, isomorphic graphs are counted repeatedly")?;
            }
            if !report.filters.is_empty() {
                writeln!(out, "filters: {}", report.filters.join(", "))?;
            }
            writeln!(out, "checks: {}", report.checks.join(", "))?;
            writeln!(out, "graphs scanned: {}, checked: {}", report.graphs_scanned, report.graphs_checked)?;
            writeln!(out, "defects: {}", report.defects.len())?;
            for d in &report.defects {
                writeln!(out, "  {} {}: {}", d.graph6, d.check, d.detail)?;
            }
            writeln!(out, "skipped: {}", report.skipped.len())?;
            for s in &report.skipped {
                writeln!(out, "  {}: {}", s.graph6, s.reason)?;
            }
            for (name, p) in [("conjecture1", &report.conjecture1), ("question1", &report.question1)] {
                writeln!(out, "{name}: {} checked, {} violations", p.checked, p.violations.len())?;
                for v in &p.violations {
                    writeln!(out, "  {v}")?;
                }
            }
            writeln!(out, "problem1 witnesses: {}", report.problem1_witnesses.len())?;
            writeln!(out, "problem2 witnesses: {}", report.problem2_witnesses.len())?;
            for (k, v) in &report.sharpness {
                writeln!(out, "equality {k}: {v}")?;
            }
        }
    }
    Ok(())
}

fn family(
    gpqr: &Option<Vec<usize>>,
    bipartite: &Option<Vec<usize>>,
    regular: &Option<Vec<usize>>,
    cubic: bool,
    n_max: Option<usize>,
    count: usize,
    seed: u64,
) -> Result<Vec<Graph>> {
    let chosen = [gpqr.is_some(), bipartite.is_some(), regular.is_some(), cubic];
    if chosen.iter().filter(|&&c| c).count() != 1 {
        return Err(Error::InvalidParameter(
            "family needs exactly one of --gpqr, --bipartite, --regular, --cubic".into(),
        ));
    }
    if let Some(v) = gpqr {
        return Ok(vec![family_gpqr(v[0], v[1], v[2])?.0]);
    }
    if let Some(v) = bipartite {
        return Ok(vec![complete_bipartite(v[0], v[1])?]);
    }
    if let Some(v) = regular {
        return (0..count as u64)
            .map(|i| random_regular(v[0], v[1], seed.wrapping_add(i)))
            .collect();
    }
    let n_max = n_max.ok_or_else(|| Error::InvalidParameter("--cubic needs --n-max".into()))?;
    let mut out = Vec::new();
    for n in (4..=n_max).step_by(2) {
        out.extend(connected_cubic_graphs(n)?);
    }
    Ok(out)
}

#[derive(Serialize)]
struct HallDemo {
    graph6: String,
    alpha: usize,
    maximum_sets: usize,
    /// Saturating matching from A − X into X − A.
    hall: Option<HallStep>,
    telescoping: TelescopingTrace,
}

#[derive(Serialize)]
struct HallStep {
    a: VertexSet,
    x: VertexSet,
    edges: Vec<(usize, usize)>,
}

/// Uses the lexicographically last maximum independent set as A, the first
/// as X for the Hall step, and up to `limit` maximum sets for the chain.
fn hall_demo(
    common: &Common,
    input: &Input,
    limit: Option<usize>,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32> {
    let budget = budget(common);
    let format = common.format.unwrap_or(Format::Text);
    if format == Format::Csv {
        return Err(Error::InvalidParameter("hall-demo supports json and text output".into()));
    }
    for_each_input(input, stdin, |g| {
        let maximum = all_maximum_independent_sets(&g, &budget)?;
        let alpha = maximum[0].len();
        let a = *maximum.last().unwrap();
        let x = maximum[0];
        let hall = hall_saturating_matching(&g, a, x, &budget)?;
        let k = limit.unwrap_or(maximum.len()).clamp(1, maximum.len());
        let chain = IntersectionChain::new(&g, maximum[..k].to_vec(), a, &budget)?;
        let trace = telescoping_matching(&g, &chain)?;
        let demo = HallDemo {
            graph6: graph_id(&g),
            alpha,
            maximum_sets: maximum.len(),
            hall: Some(HallStep { a, x, edges: hall.edges().to_vec() }),
            telescoping: trace,
        };
        match format {
            Format::Json => write_json_line(&mut *out, &demo)?,
            _ => {
                writeln!(out, "graph {} (alpha = {}, {} maximum independent sets)", demo.graph6, alpha, demo.maximum_sets)?;
                let h = demo.hall.as_ref().unwrap();
                writeln!(
                    out,
                    "Hall step: A = {}, X = {}; A - X = {} matched into X - A = {}: {:?}",
                    h.a,
                    h.x,
                    h.a.difference(h.x),
                    h.x.difference(h.a),
                    h.edges
                )?;
                writeln!(out, "telescoping chain over {k} maximum independent sets:")?;
                write!(out, "{}", demo.telescoping)?;
            }
        }
        Ok(())
    })?;
    Ok(0)
}
