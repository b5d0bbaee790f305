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

//! Corpus scans: every proven inequality is re-checked on every graph (a
//! failure is a defect in this crate), while the open conjecture and question
//! are probed and equality instances are collected.

pub mod cubic;
mod source;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph, VertexSet};
use crate::invariants::{
    all_maximum_independent_sets, core, edge_chromatic_class, independence_number,
    independent_domination_number, matching_number, maximum_independent_set,
    minimum_maximal_matching, Budget, EdgeClass,
};
use crate::lemmas::{neighborhood_excess, regular_saturating_matching};

pub use cubic::connected_cubic_graphs;
pub use source::{GraphStream, Source, MAX_LABELLED_ORDER};

/// Graphs evaluated per parallel batch.
const BATCH: usize = 4096;

/// One verification or probe applied to each scanned graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// α ≤ μ + |X| − μ(G[N[X]]) for X = core and every pairwise intersection.
    Thm1,
    /// δα ≤ Δμ.
    Thm2,
    /// n − 2μ ≤ n − 2μ* ≤ α ≤ n − μ.
    Chain1,
    /// α ≤ Δμ/δ when δ ≥ 1.
    Ratio2,
    /// n − 2μ* ≤ μ on regular, isolate-free well-covered or empty-core graphs.
    Eq3,
    /// α ≤ μ on isolate-free well-covered and on empty-core graphs.
    Corollary2,
    /// Regular graphs: a maximum independent set saturates into its complement.
    Thm3,
    /// Class-2 graphs have a cycle among their maximum-degree vertices.
    Fournier,
    /// Regular graphs: i ≤ μ* (open).
    Conjecture1,
    /// δ·i ≤ Δ·μ* (open).
    Question1,
    /// Cubic graphs with α = μ.
    Problem1,
    /// Graphs with δα = Δμ.
    Problem2,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Thm1,
        Check::Thm2,
        Check::Chain1,
        Check::Ratio2,
        Check::Eq3,
        Check::Corollary2,
        Check::Thm3,
        Check::Fournier,
        Check::Conjecture1,
        Check::Question1,
        Check::Problem1,
        Check::Problem2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2 => "thm2",
            Check::Chain1 => "chain1",
            Check::Ratio2 => "ratio2",
            Check::Eq3 => "eq3",
            Check::Corollary2 => "corollary2",
            Check::Thm3 => "thm3",
            Check::Fournier => "fournier",
            Check::Conjecture1 => "conjecture1",
            Check::Question1 => "question1",
            Check::Problem1 => "problem1",
            Check::Problem2 => "problem2",
        }
    }

    /// Parses a comma-separated list; `all` expands to every check.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A predicate restricting which graphs are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    Connected,
    /// Regular of any degree, or of the given degree.
    Regular(Option<usize>),
    /// Regular of positive degree.
    PositiveRegular,
    IsolateFree,
    MinOrder(usize),
    MaxOrder(usize),
}

impl Filter {
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            Filter::Connected => g.n() > 0 && g.is_connected(),
            Filter::Regular(None) => g.regularity().is_some(),
            Filter::Regular(Some(r)) => g.regularity() == Some(r),
            Filter::PositiveRegular => g.regularity().is_some_and(|r| r > 0),
            Filter::IsolateFree => !g.has_isolated_vertex(),
            Filter::MinOrder(k) => g.n() >= k,
            Filter::MaxOrder(k) => g.n() <= k,
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    /// `connected`, `regular`, `regular=R`, `cubic`, `positive-regular`,
    /// `isolate-free`, `n>=K`, `n<=K`.
    fn from_str(s: &str) -> Result<Filter> {
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad number in filter `{s}`")))
        };
        Ok(match s {
            "connected" => Filter::Connected,
            "regular" => Filter::Regular(None),
            "cubic" => Filter::Regular(Some(3)),
            "positive-regular" => Filter::PositiveRegular,
            "isolate-free" => Filter::IsolateFree,
            _ => {
                if let Some(r) = s.strip_prefix("regular=") {
                    Filter::Regular(Some(num(r)?))
                } else if let Some(k) = s.strip_prefix("n>=") {
                    Filter::MinOrder(num(k)?)
                } else if let Some(k) = s.strip_prefix("n<=") {
                    Filter::MaxOrder(num(k)?)
                } else {
                    return Err(Error::InvalidParameter(format!("unknown filter `{s}`")));
                }
            }
        })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Connected => write!(f, "connected"),
            Filter::Regular(None) => write!(f, "regular"),
            Filter::Regular(Some(r)) => write!(f, "regular={r}"),
            Filter::PositiveRegular => write!(f, "positive-regular"),
            Filter::IsolateFree => write!(f, "isolate-free"),
            Filter::MinOrder(k) => write!(f, "n>={k}"),
            Filter::MaxOrder(k) => write!(f, "n<={k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub budget: Budget,
    /// Worker threads; 1 runs on the calling thread.
    pub workers: usize,
    /// Keep one summary row per checked graph in the report.
    pub keep_rows: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { budget: Budget::default(), workers: 1, keep_rows: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Defect {
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Skip {
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProbeStatus {
    pub checked: u64,
    pub violations: Vec<String>,
}

/// One line of the per-graph table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GraphRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: Option<usize>,
    pub mu: usize,
    pub status: String,
}

/// Corpus-level result of [`scan`]. Every list is sorted, so reports compare
/// byte-for-byte regardless of worker count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub source: String,
    pub labelled_corpus: bool,
    pub filters: Vec<String>,
    pub checks: Vec<String>,
    pub graphs_scanned: u64,
    pub graphs_checked: u64,
    pub defects: Vec<Defect>,
    pub skipped: Vec<Skip>,
    pub conjecture1: ProbeStatus,
    pub question1: ProbeStatus,
    pub problem1_witnesses: Vec<String>,
    pub problem2_witnesses: Vec<String>,
    /// Zero-slack instances per bound.
    pub sharpness: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<GraphRow>,
}

impl SearchReport {
    /// 0 clean, 1 open-problem finding, 2 defect, 3 budget-skipped graphs.
    pub fn exit_code(&self) -> i32 {
        if !self.defects.is_empty() {
            2
        } else if !self.skipped.is_empty() {
            3
        } else if !self.conjecture1.violations.is_empty() || !self.question1.violations.is_empty() {
            1
        } else {
            0
        }
    }

    fn absorb(&mut self, o: GraphOutcome) {
        self.graphs_scanned += 1;
        if !o.accepted {
            return;
        }
        if let Some(reason) = o.skipped {
            self.skipped.push(Skip { graph6: o.id.clone(), reason });
        } else {
            self.graphs_checked += 1;
        }
        for (check, detail) in o.defects {
            self.defects.push(Defect { graph6: o.id.clone(), check, detail });
        }
        for (status, probe) in [(&mut self.conjecture1, o.conjecture1), (&mut self.question1, o.question1)] {
            if let Some(holds) = probe {
                status.checked += 1;
                if !holds {
                    status.violations.push(o.id.clone());
                }
            }
        }
        if o.problem1 {
            self.problem1_witnesses.push(o.id.clone());
        }
        if o.problem2 {
            self.problem2_witnesses.push(o.id.clone());
        }
        for key in o.sharp {
            *self.sharpness.entry(key.to_string()).or_default() += 1;
        }
        if let Some(row) = o.row {
            self.rows.push(row);
        }
    }

    fn canonicalize(&mut self) {
        self.defects.sort();
        self.skipped.sort();
        for list in [
            &mut self.conjecture1.violations,
            &mut self.question1.violations,
            &mut self.problem1_witnesses,
            &mut self.problem2_witnesses,
        ] {
            list.sort();
            list.dedup();
        }
        self.rows.sort();
    }
}

/// graph6 where available, otherwise an explicit edge list.
pub fn graph_id(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| {
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("n{}:{}", g.n(), edges.join(","))
    })
}

#[derive(Default)]
struct GraphOutcome {
    id: String,
    accepted: bool,
    skipped: Option<String>,
    defects: Vec<(String, String)>,
    conjecture1: Option<bool>,
    question1: Option<bool>,
    problem1: bool,
    problem2: bool,
    sharp: Vec<&'static str>,
    row: Option<GraphRow>,
}

/// Lazily computed invariants of one graph.
struct Ctx<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    mu: usize,
    alpha: Option<usize>,
    maximum: Option<Vec<VertexSet>>,
    core: Option<VertexSet>,
    mu_star: Option<usize>,
    idom: Option<usize>,
    class: Option<EdgeClass>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, budget: &'a Budget) -> Self {
        Ctx {
            g,
            budget,
            mu: matching_number(g),
            alpha: None,
            maximum: None,
            core: None,
            mu_star: None,
            idom: None,
            class: None,
        }
    }

    fn alpha(&mut self) -> Result<usize> {
        if self.alpha.is_none() {
            self.alpha = Some(independence_number(self.g, self.budget)?);
        }
        Ok(self.alpha.unwrap())
    }

    fn maximum(&mut self) -> Result<&[VertexSet]> {
        if self.maximum.is_none() {
            self.maximum = Some(all_maximum_independent_sets(self.g, self.budget)?);
        }
        Ok(self.maximum.as_deref().unwrap())
    }

    fn core(&mut self) -> Result<VertexSet> {
        if self.core.is_none() {
            self.core = Some(core(self.g, self.budget)?);
        }
        Ok(self.core.unwrap())
    }

    fn mu_star(&mut self) -> Result<usize> {
        if self.mu_star.is_none() {
            self.mu_star = Some(minimum_maximal_matching(self.g, self.budget)?.len());
        }
        Ok(self.mu_star.unwrap())
    }

    fn idom(&mut self) -> Result<usize> {
        if self.idom.is_none() {
            self.idom = Some(independent_domination_number(self.g, self.budget)?);
        }
        Ok(self.idom.unwrap())
    }

    fn class(&mut self) -> Result<EdgeClass> {
        if self.class.is_none() {
            self.class = Some(edge_chromatic_class(self.g, self.budget)?);
        }
        Ok(self.class.unwrap())
    }
}

fn run_check(ctx: &mut Ctx, check: Check, out: &mut GraphOutcome) -> Result<()> {
    let g = ctx.g;
    let (n, mu) = (g.n() as i64, ctx.mu as i64);
    let (delta, big_delta) = (g.min_degree() as i64, g.max_degree() as i64);
    let mut defect = |name: &str, detail: String| out.defects.push((name.to_string(), detail));
    match check {
        Check::Thm1 => {
            let alpha = ctx.alpha()? as i64;
            let core = ctx.core()?;
            let bound = mu + neighborhood_excess(g, core);
            if bound < alpha {
                defect("thm1", format!("X = core {core}: bound {bound} < alpha {alpha}"));
            } else if bound == alpha {
                out.sharp.push("thm1_core");
            }
            let maximum = ctx.maximum()?.to_vec();
            let mut best = None::<i64>;
            for (i, a) in maximum.iter().enumerate() {
                for b in &maximum[i + 1..] {
                    let x = a.intersection(*b);
                    let bound = mu + neighborhood_excess(g, x);
                    if bound < alpha {
                        out.defects.push((
                            "thm1".into(),
                            format!("X = {a} ∩ {b}: bound {bound} < alpha {alpha}"),
                        ));
                    }
                    best = Some(best.map_or(bound, |v| v.min(bound)));
                }
            }
            if best == Some(alpha) {
                out.sharp.push("thm1_pair");
            }
        }
        Check::Thm2 => {
            let lhs = delta * ctx.alpha()? as i64;
            let rhs = big_delta * mu;
            if lhs > rhs {
                defect("thm2", format!("delta*alpha {lhs} > Delta*mu {rhs}"));
            } else if lhs == rhs {
                out.sharp.push("thm2");
            }
        }
        Check::Chain1 => {
            let alpha = ctx.alpha()? as i64;
            let mu_star = ctx.mu_star()? as i64;
            let v = [n - 2 * mu, n - 2 * mu_star, alpha, n - mu];
            if !v.windows(2).all(|w| w[0] <= w[1]) {
                defect("chain1", format!("{v:?} not non-decreasing"));
            }
            if v[1] == v[2] {
                out.sharp.push("chain1_lower");
            }
            if v[2] == v[3] {
                out.sharp.push("chain1_upper");
            }
        }
        Check::Ratio2 => {
            if delta >= 1 {
                let alpha = ctx.alpha()? as i64;
                // α ≤ Δμ/δ  ⇔  δα ≤ Δμ, compared without division.
                if alpha * delta > big_delta * mu {
                    defect("ratio2", format!("alpha {alpha} > {}/{delta}", big_delta * mu));
                } else if alpha * delta == big_delta * mu {
                    out.sharp.push("ratio2");
                }
            }
        }
        Check::Eq3 => {
            let regular = g.regularity().is_some_and(|r| r > 0);
            let mut applicable = regular || ctx.core()?.is_empty();
            if !applicable && !g.has_isolated_vertex() {
                applicable = ctx.idom()? == ctx.alpha()?;
            }
            if applicable {
                let lhs = n - 2 * ctx.mu_star()? as i64;
                if lhs > mu {
                    defect("eq3", format!("n - 2mu* = {lhs} > mu = {mu}"));
                } else if lhs == mu {
                    out.sharp.push("eq3");
                }
            }
        }
        Check::Corollary2 => {
            let empty_core = ctx.core()?.is_empty();
            let well_covered_isolate_free =
                !g.has_isolated_vertex() && ctx.idom()? == ctx.alpha()?;
            if empty_core || well_covered_isolate_free {
                let alpha = ctx.alpha()? as i64;
                if alpha > mu {
                    defect("corollary2", format!("alpha {alpha} > mu {mu}"));
                } else if alpha == mu {
                    out.sharp.push("corollary2");
                }
            }
        }
        Check::Thm3 => {
            if g.regularity().is_some_and(|r| r > 0) {
                let alpha = ctx.alpha()?;
                let x = maximum_independent_set(g, ctx.budget)?;
                match regular_saturating_matching(g, x, ctx.budget) {
                    Ok(m) if m.validate(g).is_ok() && x.is_subset(m.saturated()) => {
                        if alpha > ctx.mu {
                            defect("thm3", format!("alpha {alpha} > mu {}", ctx.mu));
                        } else if alpha == ctx.mu {
                            out.sharp.push("thm3");
                        }
                    }
                    Ok(m) => defect("thm3", format!("witness {:?} does not saturate {x}", m.edges())),
                    Err(e) if e.is_budget() => return Err(e),
                    Err(e) => defect("thm3", e.to_string()),
                }
            }
        }
        Check::Fournier => {
            if ctx.class()? == EdgeClass::Class2 && !g.max_degree_subgraph().has_cycle() {
                defect("fournier", "class 2 but G_Delta is a forest".into());
            }
        }
        Check::Conjecture1 => {
            if g.regularity().is_some_and(|r| r > 0) {
                let (i, mu_star) = (ctx.idom()?, ctx.mu_star()?);
                out.conjecture1 = Some(i <= mu_star);
                if i == mu_star {
                    out.sharp.push("conjecture1");
                }
            }
        }
        Check::Question1 => {
            let lhs = delta * ctx.idom()? as i64;
            let rhs = big_delta * ctx.mu_star()? as i64;
            out.question1 = Some(lhs <= rhs);
            if lhs == rhs {
                out.sharp.push("question1");
            }
        }
        Check::Problem1 => {
            if g.regularity() == Some(3) && ctx.alpha()? == ctx.mu {
                out.problem1 = true;
            }
        }
        Check::Problem2 => {
            if delta * ctx.alpha()? as i64 == big_delta * mu {
                out.problem2 = true;
            }
        }
    }
    Ok(())
}

fn evaluate(g: &Graph, filters: &[Filter], checks: &[Check], opts: &ScanOptions) -> GraphOutcome {
    let mut out = GraphOutcome { id: graph_id(g), ..Default::default() };
    if !filters.iter().all(|f| f.accepts(g)) {
        return out;
    }
    out.accepted = true;
    let mut ctx = Ctx::new(g, &opts.budget);
    for &check in checks {
        match run_check(&mut ctx, check, &mut out) {
            Ok(()) => {}
            Err(e) if e.is_budget() => {
                // A graph is either a defect or skipped, never both.
                if out.defects.is_empty() {
                    out.skipped = Some(format!("{check}: {e}"));
                }
                break;
            }
            Err(e) => out.defects.push((check.name().to_string(), e.to_string())),
        }
    }
    if opts.keep_rows {
        let status = if !out.defects.is_empty() {
            "defect"
        } else if out.skipped.is_some() {
            "skipped"
        } else if out.conjecture1 == Some(false) || out.question1 == Some(false) {
            "finding"
        } else {
            "ok"
        };
        out.row = Some(GraphRow {
            graph6: out.id.clone(),
            n: g.n(),
            m: g.m(),
            alpha: ctx.alpha,
            mu: ctx.mu,
            status: status.to_string(),
        });
    }
    out
}

/// Streams `source`, applies `filters`, runs `checks` on every accepted graph
/// and merges the outcomes. Output is identical for any worker count.
pub fn scan(
    source: &Source,
    filters: &[Filter],
    checks: &[Check],
    opts: &ScanOptions,
) -> Result<SearchReport> {
    let header = ReportHeader { source: source.to_string(), labelled_corpus: source.is_labelled() };
    scan_stream(source.stream()?, header, filters, checks, opts)
}

/// Describes the corpus behind a stream passed to [`scan_stream`].
#[derive(Clone, Debug, Default)]
pub struct ReportHeader {
    pub source: String,
    pub labelled_corpus: bool,
}

/// [`scan`] over an arbitrary graph stream. The first stream error aborts the
/// scan.
pub fn scan_stream<I>(
    stream: I,
    header: ReportHeader,
    filters: &[Filter],
    checks: &[Check],
    opts: &ScanOptions,
) -> Result<SearchReport>
where
    I: Iterator<Item = Result<Graph>>,
{
    let mut report = SearchReport {
        source: header.source,
        labelled_corpus: header.labelled_corpus,
        filters: filters.iter().map(Filter::to_string).collect(),
        checks: checks.iter().map(Check::to_string).collect(),
        ..Default::default()
    };
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?,
        )
    } else {
        None
    };
    let mut stream = stream;
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        for item in stream.by_ref().take(BATCH) {
            batch.push(item?);
        }
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<GraphOutcome> = match &pool {
            Some(pool) => pool.install(|| {
                batch.par_iter().map(|g| evaluate(g, filters, checks, opts)).collect()
            }),
            None => batch.iter().map(|g| evaluate(g, filters, checks, opts)).collect(),
        };
        for o in outcomes {
            report.absorb(o);
        }
    }
    report.canonicalize();
    Ok(report)
}

/// `(i, μ*, i ≤ μ*)` for an r-regular graph with r > 0; `None` otherwise.
pub fn check_conjecture1(g: &Graph, budget: &Budget) -> Result<Option<(usize, usize, bool)>> {
    if !g.regularity().is_some_and(|r| r > 0) {
        return Ok(None);
    }
    let i = independent_domination_number(g, budget)?;
    let mu_star = minimum_maximal_matching(g, budget)?.len();
    Ok(Some((i, mu_star, i <= mu_star)))
}

/// `(δ·i, Δ·μ*, δ·i ≤ Δ·μ*)`.
pub fn check_question1(g: &Graph, budget: &Budget) -> Result<(usize, usize, bool)> {
    let lhs = g.min_degree() * independent_domination_number(g, budget)?;
    let rhs = g.max_degree() * minimum_maximal_matching(g, budget)?.len();
    Ok((lhs, rhs, lhs <= rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Cubic, α = μ.
    Problem1,
    /// δα = Δμ.
    Problem2,
}

/// Sorted, de-duplicated graph6 strings of the equality instances in `source`.
pub fn collect_equality_witnesses(
    source: &Source,
    which: WitnessKind,
    opts: &ScanOptions,
) -> Result<Vec<String>> {
    let check = match which {
        WitnessKind::Problem1 => Check::Problem1,
        WitnessKind::Problem2 => Check::Problem2,
    };
    let report = scan(source, &[], &[check], opts)?;
    Ok(match which {
        WitnessKind::Problem1 => report.problem1_witnesses,
        WitnessKind::Problem2 => report.problem2_witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn check_and_filter_parsing() {
        assert_eq!(Check::parse_list("thm2, thm1,thm1").unwrap(), vec![Check::Thm1, Check::Thm2]);
        assert_eq!(Check::parse_list("all").unwrap().len(), 12);
        assert!(Check::parse_list("thm9").is_err());
        assert_eq!("cubic".parse::<Filter>().unwrap(), Filter::Regular(Some(3)));
        assert_eq!("n<=8".parse::<Filter>().unwrap(), Filter::MaxOrder(8));
        assert_eq!("regular=4".parse::<Filter>().unwrap().to_string(), "regular=4");
        assert!("n<=x".parse::<Filter>().is_err());
    }

    #[test]
    fn empty_source() {
        let r = scan(&Source::Graphs(vec![]), &[], &Check::ALL, &ScanOptions::default()).unwrap();
        assert_eq!(r.graphs_scanned, 0);
        assert!(r.defects.is_empty() && r.problem2_witnesses.is_empty());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn probes() {
        let b = Budget::default();
        assert_eq!(check_conjecture1(&cycle(6).unwrap(), &b).unwrap(), Some((2, 2, true)));
        assert_eq!(check_conjecture1(&petersen(), &b).unwrap(), Some((3, 3, true)));
        assert_eq!(check_conjecture1(&complete(4).unwrap(), &b).unwrap(), Some((1, 2, true)));
        assert_eq!(check_conjecture1(&path(3).unwrap(), &b).unwrap(), None);
        assert_eq!(check_question1(&complete_bipartite(1, 3).unwrap(), &b).unwrap(), (1, 3, true));
        assert_eq!(check_question1(&cycle(5).unwrap(), &b).unwrap(), (4, 4, true));
        assert_eq!(check_question1(&empty(3).unwrap(), &b).unwrap(), (0, 0, true));
    }

    #[test]
    fn witnesses() {
        let bip: Vec<Graph> = (1..=4)
            .flat_map(|a| (a..=4).map(move |b| complete_bipartite(a, b).unwrap()))
            .collect();
        let w = collect_equality_witnesses(&Source::Graphs(bip.clone()), WitnessKind::Problem2, &ScanOptions::default())
            .unwrap();
        assert_eq!(w.len(), bip.len());
        let w = collect_equality_witnesses(&Source::ConnectedCubic { n_max: 8 }, WitnessKind::Problem1, &ScanOptions::default())
            .unwrap();
        assert!(!w.contains(&encode_graph6(&complete(4).unwrap()).unwrap()));
        let k33 = complete_bipartite(3, 3).unwrap();
        let w33 = collect_equality_witnesses(&Source::Graphs(vec![k33.clone()]), WitnessKind::Problem1, &ScanOptions::default())
            .unwrap();
        assert_eq!(w33, vec![encode_graph6(&k33).unwrap()]);
        assert!(collect_equality_witnesses(&Source::Graphs(vec![]), WitnessKind::Problem1, &ScanOptions::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn budget_skips_are_recorded() {
        let opts = ScanOptions { budget: Budget { nodes: 1, max_sets: 10 }, ..Default::default() };
        let r = scan(&Source::Graphs(vec![petersen()]), &[], &[Check::Thm1], &opts).unwrap();
        assert_eq!(r.skipped.len(), 1);
        assert!(r.defects.is_empty());
        assert_eq!(r.exit_code(), 3);
    }

    #[test]
    fn filters_restrict_checks() {
        let src = Source::Labelled { n: 4 };
        let r = scan(&src, &["connected".parse().unwrap()], &[Check::Thm2], &ScanOptions::default()).unwrap();
        assert_eq!(r.graphs_scanned, 64);
        // Connected labelled graphs on 4 vertices.
        assert_eq!(r.graphs_checked, 38);
    }
}
