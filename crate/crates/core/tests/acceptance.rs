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

//! Acceptance runner: one `[PASS]`/`[FAIL]` line per criterion, non-zero exit
//! if any criterion fails.

use std::io::{BufReader, Write};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use imlab::bounds::check_gpqr;
use imlab::graph::generators::{complete, complete_bipartite, cycle, empty, random_gnp};
use imlab::graph::{encode_graph6, Graph6Reader};
use imlab::invariants::oracle::{brute_independence_number, brute_matching_number};
use imlab::invariants::{
    all_maximal_independent_sets, all_maximum_independent_sets, compute_record, core,
    edge_chromatic_class, independence_number, is_well_covered, matching_number,
    maximum_independent_set, maximum_matching, minimum_maximal_matching, EdgeClass,
};
use imlab::lemmas::{
    hall_saturating_matching, neighborhood_excess, regular_saturating_matching, telescoping_matching,
    IntersectionChain,
};
use imlab::search::{scan, Check, ScanOptions, SearchReport, Source};
use imlab::{Budget, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))
}

fn labelled6() -> Vec<Graph> {
    Source::Labelled { n: 6 }.stream().unwrap().map(|g| g.unwrap()).collect()
}

fn random_corpus() -> Source {
    Source::RandomGnp { count: 1000, n_min: 1, n_max: 12, seed: 0x5eed }
}

fn clean(report: &SearchReport, what: &str) -> Result<(), String> {
    ensure(report.defects.is_empty(), || format!("{what}: defects {:?}", report.defects))?;
    ensure(report.skipped.is_empty(), || format!("{what}: skipped {:?}", report.skipped))
}

fn c1_empty_and_complete() -> Outcome {
    let start = Instant::now();
    let b = Budget::default();
    for n in 1..=10 {
        let e = compute_record(&empty(n).unwrap(), &b).map_err(|e| e.to_string())?;
        ensure((e.alpha, e.mu) == (n, 0), || format!("E_{n}: alpha {} mu {}", e.alpha, e.mu))?;
        let k = compute_record(&complete(n).unwrap(), &b).map_err(|e| e.to_string())?;
        ensure((k.alpha, k.mu) == (1, n / 2), || format!("K_{n}: alpha {} mu {}", k.alpha, k.mu))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("E_n and K_n, n = 1..10, in {:?}", start.elapsed()))
}

fn c2_oracles() -> Outcome {
    let start = Instant::now();
    let b = Budget::default();
    let mut mismatches = 0;
    let corpus = labelled6();
    for g in &corpus {
        let m = maximum_matching(g);
        if m.validate(g).is_err() || m.len() != brute_matching_number(g).unwrap() {
            mismatches += 1;
        }
        if independence_number(g, &b).unwrap() != brute_independence_number(g).unwrap() {
            mismatches += 1;
        }
    }
    ensure(corpus.len() == 32768, || format!("corpus has {} graphs", corpus.len()))?;
    ensure(mismatches == 0, || format!("{mismatches} discrepancies"))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("32768 labelled graphs, 0 discrepancies, {:?}", start.elapsed()))
}

fn c3_intersection_bound() -> Outcome {
    let opts = ScanOptions::default();
    let a = scan(&Source::Labelled { n: 6 }, &[], &[Check::Thm1], &opts).map_err(|e| e.to_string())?;
    let b = scan(&random_corpus(), &[], &[Check::Thm1], &opts).map_err(|e| e.to_string())?;
    clean(&a, "exhaustive")?;
    clean(&b, "random")?;
    ensure(a.graphs_checked == 32768 && b.graphs_checked == 1000, || "coverage".into())?;
    Ok(format!(
        "core and pairwise intersections on {} graphs, 0 defects",
        a.graphs_checked + b.graphs_checked
    ))
}

fn c4_degree_product() -> Outcome {
    let opts = ScanOptions::default();
    let a = scan(&Source::Labelled { n: 6 }, &[], &[Check::Thm2], &opts).map_err(|e| e.to_string())?;
    let b = scan(&random_corpus(), &[], &[Check::Thm2], &opts).map_err(|e| e.to_string())?;
    clean(&a, "exhaustive")?;
    clean(&b, "random")?;
    let bb = Budget::default();
    let mut sharp = 0;
    for d in 1..=4 {
        for other in d..=6 {
            let g = complete_bipartite(d, other).unwrap();
            let alpha = independence_number(&g, &bb).unwrap();
            let slack = (g.max_degree() * matching_number(&g)) as i64 - (g.min_degree() * alpha) as i64;
            ensure(slack == 0, || format!("K_{{{d},{other}}} slack {slack}"))?;
            sharp += 1;
        }
    }
    Ok(format!("0 defects on 33768 graphs; {sharp} complete bipartite graphs with slack 0"))
}

fn c5_family() -> Outcome {
    let start = Instant::now();
    let b = Budget::default();
    let (mut cells, mut findings, mut failures) = (0, Vec::new(), Vec::new());
    for p in 0..=3 {
        for q in 0..=4 {
            for r in 0..=5 {
                if p + r < 2 {
                    continue;
                }
                cells += 1;
                let o = check_gpqr(p, q, r, &b).map_err(|e| e.to_string())?;
                if !o.items_abc_match() {
                    failures.push(format!("G({p},{q},{r}) closed forms: alpha {} mu {}", o.alpha, o.mu));
                }
                let loose: Vec<String> = o
                    .intersections
                    .iter()
                    .filter(|t| t.2 != 0)
                    .map(|(x, _, s)| format!("X = {x} slack {s}"))
                    .collect();
                if !o.parity_exact {
                    if !loose.is_empty() {
                        findings.push(format!("G({p},{q},{r}) {}", loose.join(", ")));
                    }
                } else if !loose.is_empty() {
                    failures.push(format!("G({p},{q},{r}) {}", loose.join(", ")));
                }
            }
        }
    }
    for f in &findings {
        println!("       finding (odd q - r): {f}");
    }
    within(start, Duration::from_secs(120))?;
    ensure(failures.is_empty(), || {
        format!("{} of {cells} cells: {}", failures.len(), failures.join("; "))
    })?;
    Ok(format!("{cells} cells, {} odd-parity findings logged", findings.len()))
}

fn c6_lemmas() -> Outcome {
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let mut done = 0;
    while done < 500 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.1..0.8);
        let g = random_gnp(n, p, &mut rng).unwrap();
        let maximum = all_maximum_independent_sets(&g, &b).unwrap();
        let maximal = all_maximal_independent_sets(&g, &b).unwrap();
        let pick = |rng: &mut ChaCha8Rng, v: &[VertexSet]| v[rng.gen_range(0..v.len())];

        // Hall step: any independent A against any maximum X.
        let a = VertexSet::from_bits(pick(&mut rng, &maximal).bits() & rng.gen::<u64>());
        let x = pick(&mut rng, &maximum);
        let m = hall_saturating_matching(&g, a, x, &b).map_err(|e| e.to_string())?;
        m.validate(&g).map_err(|e| e.to_string())?;
        ensure(a.difference(x).is_subset(m.saturated()), || format!("A = {a} X = {x}: not saturated"))?;

        // Telescoping: k maximum sets, base an independent superset of their meet.
        let k = rng.gen_range(1..=maximum.len().min(4));
        let sets: Vec<VertexSet> = (0..k).map(|_| pick(&mut rng, &maximum)).collect();
        let meet = sets.iter().fold(g.vertices(), |acc, s| acc.intersection(*s));
        let hosts: Vec<VertexSet> = maximal.iter().copied().filter(|s| meet.is_subset(*s)).collect();
        let base = meet.union(VertexSet::from_bits(pick(&mut rng, &hosts).bits() & rng.gen::<u64>()));
        let chain = IntersectionChain::new(&g, sets, base, &b).map_err(|e| e.to_string())?;
        let t = telescoping_matching(&g, &chain).map_err(|e| e.to_string())?;
        t.matching.validate(&g).map_err(|e| e.to_string())?;
        ensure(t.matching.len() >= t.guaranteed, || format!("|M| {} < {}", t.matching.len(), t.guaranteed))?;
        let (ea, ex) = (neighborhood_excess(&g, base), neighborhood_excess(&g, meet));
        ensure(ea <= ex, || format!("monotonicity: {ea} > {ex} for A = {base}, X = {meet}"))?;
        done += 1;
    }
    Ok("500 seeded instances: valid, saturating, size bound and monotonicity hold".into())
}

fn c7_regular() -> Outcome {
    let b = Budget::default();
    let mut graphs: Vec<Graph> = Source::RandomRegular { count: 200, degrees: vec![2, 3, 4], n_max: 16, seed: 77 }
        .stream()
        .unwrap()
        .map(|g| g.unwrap())
        .collect();
    graphs.extend((3..=20).map(|n| cycle(n).unwrap()));
    for g in &graphs {
        let x = maximum_independent_set(g, &b).unwrap();
        let m = regular_saturating_matching(g, x, &b).map_err(|e| e.to_string())?;
        m.validate(g).map_err(|e| e.to_string())?;
        ensure(x.is_subset(m.saturated()), || format!("{x} not saturated"))?;
        let mu = matching_number(g);
        ensure(x.len() == m.len() && m.len() <= mu, || format!("alpha {} mu {mu}", x.len()))?;
    }
    Ok(format!("{} regular graphs, witness saturates and alpha <= mu", graphs.len()))
}

fn exhaustive6() -> impl Iterator<Item = Graph> {
    Source::LabelledUpTo { n_max: 6 }.stream().unwrap().map(|g| g.unwrap())
}

fn c8_class_two_cycle() -> Outcome {
    let b = Budget::default();
    let mut class2 = 0;
    for g in exhaustive6() {
        if edge_chromatic_class(&g, &b).unwrap() == EdgeClass::Class2 {
            class2 += 1;
            let id = encode_graph6(&g).unwrap();
            ensure(g.max_degree_subgraph().has_cycle(), || format!("{id}: G_Delta is a forest"))?;
        }
    }
    Ok(format!("{class2} class-2 graphs, each G_Delta has a cycle"))
}

fn c9_corollary() -> Outcome {
    let b = Budget::default();
    let (mut qualifying, mut eq3) = (0, 0);
    for g in exhaustive6() {
        let id = encode_graph6(&g).unwrap();
        let alpha = independence_number(&g, &b).unwrap();
        let mu = matching_number(&g);
        let empty_core = core(&g, &b).unwrap().is_empty();
        let wc = !g.has_isolated_vertex() && is_well_covered(&g, &b).unwrap();
        if empty_core || wc {
            qualifying += 1;
            ensure(alpha <= mu, || format!("{id}: alpha {alpha} > mu {mu}"))?;
        }
        if wc || empty_core || g.regularity().is_some_and(|r| r > 0) {
            eq3 += 1;
            let mu_star = minimum_maximal_matching(&g, &b).unwrap().len();
            ensure(g.n() <= 2 * mu_star + mu, || format!("{id}: n - 2mu* > mu"))?;
        }
    }
    Ok(format!("alpha <= mu on {qualifying} graphs, n - 2mu* <= mu on {eq3}"))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("imlab").chain(args.iter().copied());
    let code = imlab::cli::run(argv, &mut std::io::empty(), &mut out, &mut err);
    (code, out)
}

fn c10_conjecture() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("violations.g6");
    let p = path.to_str().unwrap();
    let (code, out) = run_cli(&["scan", "--cubic", "--n-max", "12", "--check", "conjecture1", "--witness-out", p]);
    let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let checked = v["conjecture1"]["checked"].as_u64().unwrap_or(0);
    let violations = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    ensure(checked == 1 + 2 + 5 + 19 + 85, || format!("checked {checked}"))?;
    ensure(code == 0 && violations.is_empty(), || format!("exit {code}, witnesses:\n{violations}"))?;
    Ok(format!("{checked} connected cubic graphs, i <= mu* everywhere"))
}

fn c11_graph6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut text = String::new();
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=40);
        let p = rng.gen_range(0.0..1.0);
        text += &encode_graph6(&random_gnp(n, p, &mut rng).unwrap()).unwrap();
        text.push('\n');
    }
    let mut file = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
    file.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    let reader = BufReader::new(file.reopen().map_err(|e| e.to_string())?);
    let mut again = String::new();
    for item in Graph6Reader::new(reader) {
        let (_, g) = item.map_err(|e| e.to_string())?;
        again += &encode_graph6(&g).unwrap();
        again.push('\n');
    }
    ensure(again == text, || "re-encoded corpus differs".into())?;
    Ok("10000 lines byte-exact".into())
}

fn c12_determinism() -> Outcome {
    let mut sizes = Vec::new();
    for corpus in [
        vec!["--exhaustive", "--n-max", "6"],
        vec!["--random", "500", "--n-max", "12", "--seed", "12"],
    ] {
        let mut runs = Vec::new();
        for workers in ["1", "4", "4"] {
            let mut args = vec!["scan", "--check", "all", "--workers", workers];
            args.extend(&corpus);
            let (code, out) = run_cli(&args);
            ensure(code == 0, || format!("{args:?} exited {code}"))?;
            runs.push(out);
        }
        ensure(runs.windows(2).all(|w| w[0] == w[1]), || format!("{corpus:?}: reports differ"))?;
        sizes.push(runs[0].len());
    }
    Ok(format!("serial and 4-worker reports byte-identical ({sizes:?} bytes)"))
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        (1, "empty and complete graphs", c1_empty_and_complete),
        (2, "oracle equivalence on 6 vertices", c2_oracles),
        (3, "intersection bound", c3_intersection_bound),
        (4, "degree-product bound", c4_degree_product),
        (5, "G(p,q,r) grid", c5_family),
        (6, "saturating and telescoping matchings", c6_lemmas),
        (7, "regular-graph witness", c7_regular),
        (8, "class 2 implies a cycle in G_Delta", c8_class_two_cycle),
        (9, "empty core and well-covered graphs", c9_corollary),
        (10, "cubic scan for i <= mu*", c10_conjecture),
        (11, "graph6 round trip", c11_graph6),
        (12, "scan determinism", c12_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, name, f) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("[PASS] {id:>2} {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id:>2} {name}: {detail}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
