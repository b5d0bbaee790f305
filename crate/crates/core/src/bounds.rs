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

//! Exact evaluation of the independence/matching inequalities for one graph.
//!
//! Slack is always `upper bound − lower side`, so a proven inequality has
//! non-negative slack and a negative value means the implementation is wrong.
//! Ratios are exact rationals; nothing here touches floating point.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::generators::{family_gpqr, GpqrLayout};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    all_maximum_independent_sets, compute_record, core, independence_number, matching_number,
    minimum_maximal_matching, Budget, EdgeClass, InvariantRecord,
};
use crate::lemmas::{neighborhood_excess, regular_saturating_matching};

pub type Rational = Ratio<i64>;

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&format_rational(r)),
        None => s.serialize_none(),
    }
}

/// A bound on α together with `bound − α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    pub bound: i64,
    pub slack: i64,
}

impl BoundValue {
    fn new(bound: i64, alpha: usize) -> Self {
        BoundValue { bound, slack: bound - alpha as i64 }
    }
}

/// δα ≤ Δμ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProductCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
}

/// `(n − 2μ, n − 2μ*, α, n − μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainOne(pub [i64; 4]);

impl ChainOne {
    pub fn non_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

/// α ≤ μ ≤ n/2 ≤ a ≤ n − m/Δ for r-regular graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegularChain {
    pub alpha: usize,
    pub mu: usize,
    #[serde(serialize_with = "ser_rational")]
    pub half_order: Rational,
    pub annihilation: usize,
    #[serde(serialize_with = "ser_rational")]
    pub degree_bound: Rational,
}

impl RegularChain {
    pub fn values(&self) -> [Rational; 5] {
        [
            Rational::from_integer(self.alpha as i64),
            Rational::from_integer(self.mu as i64),
            self.half_order,
            Rational::from_integer(self.annihilation as i64),
            self.degree_bound,
        ]
    }

    /// Whether each adjacent pair is ordered: `[α≤μ, μ≤n/2, n/2≤a, a≤n−m/Δ]`.
    pub fn links(&self) -> [bool; 4] {
        let v = self.values();
        [v[0] <= v[1], v[1] <= v[2], v[2] <= v[3], v[3] <= v[4]]
    }

    pub fn non_decreasing(&self) -> bool {
        self.links().iter().all(|&l| l)
    }
}

impl fmt::Display for RegularChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `n − 2μ* ≤ μ`, asserted only when the graph is r-regular with r > 0,
/// isolate-free and well-covered, or has an empty core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EqThree {
    pub lhs: i64,
    pub rhs: i64,
    pub applicable: bool,
}

/// Prior-work bounds kept for comparison only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    /// μ + |core| − 1.
    pub core_minus_one: i64,
    /// μ + |core| − |N(core)|.
    pub core_minus_neighbors: i64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EqualityFlags {
    /// The intersection bound with X = core equals α.
    pub thm1_core: bool,
    /// Cubic and α = μ.
    pub problem1: bool,
    /// δα = Δμ.
    pub problem2: bool,
}

/// Every bound evaluation for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub id: String,
    pub record: InvariantRecord,
    pub thm1_core: BoundValue,
    /// Best bound over pairwise intersections; `None` with a unique maximum
    /// independent set.
    pub thm1_best_pair: Option<BoundValue>,
    pub thm1_pairs_checked: usize,
    pub thm2: DegreeProductCheck,
    pub chain1: ChainOne,
    /// Δμ/δ when δ ≥ 1.
    #[serde(serialize_with = "ser_opt_rational")]
    pub ratio2: Option<Rational>,
    pub eq3: EqThree,
    pub regular_chain: Option<RegularChain>,
    /// Size of the saturating matching for r-regular graphs.
    pub thm3_witness: Option<usize>,
    /// For class-2 graphs: does G_Δ contain a cycle?
    pub fournier_cycle: Option<bool>,
    pub comparison: Comparison,
    pub equality: EqualityFlags,
    /// Names of proven inequalities that failed. Empty on a correct build.
    pub defects: Vec<String>,
}

/// μ(G) + |X| − μ(G[N[X]]) without checking where X came from.
fn intersection_value(g: &Graph, mu: usize, x: VertexSet) -> i64 {
    mu as i64 + neighborhood_excess(g, x)
}

/// True when `x` is the intersection of the maximum independent sets that contain it.
pub fn is_intersection_of(maximum: &[VertexSet], x: VertexSet) -> bool {
    let mut containing = maximum.iter().filter(|s| x.is_subset(**s)).peekable();
    containing.peek().is_some() && containing.fold(VertexSet::full(64), |acc, s| acc.intersection(*s)) == x
}

/// μ(G) + |X| − μ(G[N[X]]) for an intersection X of maximum independent sets.
pub fn theorem1_bound(g: &Graph, x: VertexSet, budget: &Budget) -> Result<i64> {
    let maximum = all_maximum_independent_sets(g, budget)?;
    if !is_intersection_of(&maximum, x) {
        return Err(Error::Contract(format!(
            "{x} is not an intersection of maximum independent sets"
        )));
    }
    Ok(intersection_value(g, matching_number(g), x))
}

/// The Theorem-1 bound at X = core(G); equals μ(G) when the core is empty.
pub fn core_bound(g: &Graph, budget: &Budget) -> Result<i64> {
    Ok(intersection_value(g, matching_number(g), core(g, budget)?))
}

fn best_pair(g: &Graph, mu: usize, maximum: &[VertexSet]) -> (Option<i64>, usize) {
    let mut best = None::<i64>;
    let mut checked = 0;
    let mut seen = BTreeSet::new();
    for (i, a) in maximum.iter().enumerate() {
        for b in &maximum[i + 1..] {
            checked += 1;
            let x = a.intersection(*b);
            if seen.insert(x) {
                let v = intersection_value(g, mu, x);
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
    }
    (best, checked)
}

/// μ(G) + min over pairs {A, B} of maximum independent sets of
/// |A∩B| − μ(G[N[A∩B]]). `None` when the maximum independent set is unique.
pub fn best_pair_bound(g: &Graph, budget: &Budget) -> Result<Option<i64>> {
    let maximum = all_maximum_independent_sets(g, budget)?;
    Ok(best_pair(g, matching_number(g), &maximum).0)
}

/// For a family of maximum independent sets, the best pair bound never
/// exceeds the bound of the whole family's intersection.
pub fn pair_dominates_family(g: &Graph, family: &[VertexSet]) -> bool {
    if family.len() < 2 {
        return true;
    }
    let mu = matching_number(g);
    let all = family.iter().fold(VertexSet::full(64), |acc, s| acc.intersection(*s));
    best_pair(g, mu, family).0.unwrap() <= intersection_value(g, mu, all)
}

pub fn theorem2_check(g: &Graph, budget: &Budget) -> Result<DegreeProductCheck> {
    let alpha = independence_number(g, budget)? as i64;
    let lhs = g.min_degree() as i64 * alpha;
    let rhs = g.max_degree() as i64 * matching_number(g) as i64;
    Ok(DegreeProductCheck { lhs, rhs, slack: rhs - lhs })
}

/// Δμ/δ, defined when δ ≥ 1.
pub fn ratio_bound(g: &Graph) -> Option<Rational> {
    let delta = g.min_degree() as i64;
    (delta >= 1).then(|| Rational::new(g.max_degree() as i64 * matching_number(g) as i64, delta))
}

pub fn chain1_values(g: &Graph, budget: &Budget) -> Result<ChainOne> {
    let n = g.n() as i64;
    let mu = matching_number(g) as i64;
    let mu_star = minimum_maximal_matching(g, budget)?.len() as i64;
    let alpha = independence_number(g, budget)? as i64;
    Ok(ChainOne([n - 2 * mu, n - 2 * mu_star, alpha, n - mu]))
}

/// Defined for r-regular graphs with r > 0.
pub fn regular_chain(g: &Graph, budget: &Budget) -> Result<Option<RegularChain>> {
    let Some(r) = g.regularity().filter(|&r| r > 0) else {
        return Ok(None);
    };
    let n = g.n() as i64;
    Ok(Some(RegularChain {
        alpha: independence_number(g, budget)?,
        mu: matching_number(g),
        half_order: Rational::new(n, 2),
        annihilation: crate::invariants::annihilation_number(g),
        degree_bound: Rational::from_integer(n) - Rational::new(g.m() as i64, r as i64),
    }))
}

fn eq3_applicable(g: &Graph, well_covered: bool, core_empty: bool) -> bool {
    let regular = g.regularity().is_some_and(|r| r > 0);
    regular || (well_covered && !g.has_isolated_vertex()) || core_empty
}

pub fn eq3_check(g: &Graph, budget: &Budget) -> Result<EqThree> {
    let n = g.n() as i64;
    let lhs = n - 2 * minimum_maximal_matching(g, budget)?.len() as i64;
    let rhs = matching_number(g) as i64;
    let well_covered = crate::invariants::is_well_covered(g, budget)?;
    let core_empty = core(g, budget)?.is_empty();
    Ok(EqThree { lhs, rhs, applicable: eq3_applicable(g, well_covered, core_empty) })
}

/// Evaluates every bound on `g`, recording failed proven inequalities in
/// [`BoundReport::defects`].
pub fn evaluate_all(id: &str, g: &Graph, budget: &Budget) -> Result<BoundReport> {
    let record = compute_record(g, budget)?;
    let maximum = all_maximum_independent_sets(g, budget).map_err(|e| e.in_field("thm1_best_pair"))?;
    let core = core(g, budget).map_err(|e| e.in_field("thm1_core"))?;
    let (alpha, mu, n) = (record.alpha, record.mu, g.n() as i64);
    let mut defects = Vec::new();

    let thm1_core = BoundValue::new(intersection_value(g, mu, core), alpha);
    let (pair, pairs_checked) = best_pair(g, mu, &maximum);
    let thm1_best_pair = pair.map(|b| BoundValue::new(b, alpha));
    if thm1_core.slack < 0 {
        defects.push("thm1_core".to_string());
    }
    if thm1_best_pair.is_some_and(|b| b.slack < 0) {
        defects.push("thm1_pair".to_string());
    }

    let lhs = record.delta as i64 * alpha as i64;
    let rhs = record.big_delta as i64 * mu as i64;
    let thm2 = DegreeProductCheck { lhs, rhs, slack: rhs - lhs };
    if thm2.slack < 0 {
        defects.push("thm2".to_string());
    }

    let (mu_i, mu_star) = (mu as i64, record.mu_star as i64);
    let chain1 = ChainOne([n - 2 * mu_i, n - 2 * mu_star, alpha as i64, n - mu_i]);
    if !chain1.non_decreasing() {
        defects.push("chain1".to_string());
    }

    let ratio2 = (record.delta >= 1).then(|| Rational::new(rhs, record.delta as i64));
    if ratio2.is_some_and(|r| r < Rational::from_integer(alpha as i64)) {
        defects.push("ratio2".to_string());
    }

    let eq3 = EqThree {
        lhs: n - 2 * mu_star,
        rhs: mu_i,
        applicable: eq3_applicable(g, record.well_covered, core.is_empty()),
    };
    if eq3.applicable && eq3.lhs > eq3.rhs {
        defects.push("eq3".to_string());
    }
    if (core.is_empty() || (record.well_covered && !g.has_isolated_vertex())) && alpha > mu {
        defects.push("corollary2".to_string());
    }

    let regular_chain = regular_chain(g, budget)?;
    let mut thm3_witness = None;
    if let Some(chain) = &regular_chain {
        // The n/2 ≤ a link is not asserted: a(K_3) = 1 < 3/2.
        let [a_le_mu, mu_le_half, _, a_le_bound] = chain.links();
        if !(a_le_mu && mu_le_half && a_le_bound) {
            defects.push("regular_chain".to_string());
        }
        let x = crate::invariants::maximum_independent_set(g, budget)?;
        match regular_saturating_matching(g, x, budget) {
            Ok(m) if m.len() >= alpha => thm3_witness = Some(m.len()),
            _ => defects.push("thm3".to_string()),
        }
    }

    let fournier_cycle = (record.edge_class == EdgeClass::Class2)
        .then(|| g.max_degree_subgraph().has_cycle());
    if fournier_cycle == Some(false) {
        defects.push("fournier".to_string());
    }

    let core_size = core.len() as i64;
    let comparison = Comparison {
        core_minus_one: mu_i + core_size - 1,
        core_minus_neighbors: mu_i + core_size - g.open_neighborhood(core).len() as i64,
    };
    let equality = EqualityFlags {
        thm1_core: thm1_core.slack == 0,
        problem1: g.regularity() == Some(3) && alpha == mu,
        problem2: thm2.slack == 0,
    };
    Ok(BoundReport {
        id: id.to_string(),
        record,
        thm1_core,
        thm1_best_pair,
        thm1_pairs_checked: pairs_checked,
        thm2,
        chain1,
        ratio2,
        eq3,
        regular_chain,
        thm3_witness,
        fournier_cycle,
        comparison,
        equality,
        defects,
    })
}

/// Every intersection of two or more maximum independent sets, sorted.
pub fn multi_intersections(maximum: &[VertexSet]) -> Vec<VertexSet> {
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    for (i, a) in maximum.iter().enumerate() {
        for b in &maximum[i + 1..] {
            found.insert(a.intersection(*b));
        }
    }
    let mut frontier: Vec<VertexSet> = found.iter().copied().collect();
    while let Some(s) = frontier.pop() {
        for m in maximum {
            let t = s.intersection(*m);
            if found.insert(t) {
                frontier.push(t);
            }
        }
    }
    found.into_iter().collect()
}

/// How the Theorem-1 bound behaves across intersections of maximum
/// independent sets.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionProfile {
    pub alpha: usize,
    pub maximum_sets: usize,
    /// Single maximum independent sets: always tight since they dominate.
    pub single_set_tight: usize,
    /// `(X, bound − α)` for each intersection of two or more sets.
    pub multi: Vec<(VertexSet, i64)>,
}

impl IntersectionProfile {
    pub fn multi_tight(&self) -> usize {
        self.multi.iter().filter(|(_, s)| *s == 0).count()
    }

    pub fn min_slack(&self) -> Option<i64> {
        self.multi.iter().map(|(_, s)| *s).min()
    }
}

pub fn intersection_profile(g: &Graph, budget: &Budget) -> Result<IntersectionProfile> {
    let maximum = all_maximum_independent_sets(g, budget)?;
    let alpha = maximum.first().map_or(0, |s| s.len());
    let mu = matching_number(g);
    let single_set_tight = maximum
        .iter()
        .filter(|&&s| intersection_value(g, mu, s) == alpha as i64)
        .count();
    let multi = multi_intersections(&maximum)
        .into_iter()
        .map(|x| (x, intersection_value(g, mu, x) - alpha as i64))
        .collect();
    Ok(IntersectionProfile { alpha, maximum_sets: maximum.len(), single_set_tight, multi })
}

/// Closed forms for G(p, q, r), reading the half-integers with floors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GpqrPrediction {
    pub alpha: usize,
    pub mu: usize,
    /// |X| − μ(G[N[X]]) for any intersection X.
    pub excess: i64,
}

impl GpqrPrediction {
    pub fn for_params(p: usize, q: usize, r: usize) -> Self {
        let (qi, ri) = (q as i64, r as i64);
        if r >= q {
            GpqrPrediction { alpha: p + r, mu: p + q, excess: ri - qi }
        } else {
            GpqrPrediction {
                alpha: p + r,
                mu: p + (r + q) / 2,
                excess: (ri - qi).div_euclid(2),
            }
        }
    }
}

/// Brute-force comparison of G(p, q, r) against its closed forms.
#[derive(Clone, Debug, Serialize)]
pub struct GpqrOutcome {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub predicted: GpqrPrediction,
    pub alpha: usize,
    pub mu: usize,
    pub core_is_independent_block: bool,
    /// Closed forms are exact: r ≥ q or q − r even.
    pub parity_exact: bool,
    /// `(X, |X| − μ(G[N[X]]), bound − α)` over single sets, every
    /// multi-set intersection and the core.
    pub intersections: Vec<(VertexSet, i64, i64)>,
}

impl GpqrOutcome {
    pub fn items_abc_match(&self) -> bool {
        self.core_is_independent_block
            && self.alpha == self.predicted.alpha
            && self.mu == self.predicted.mu
    }

    pub fn all_tight(&self) -> bool {
        self.intersections.iter().all(|&(_, _, slack)| slack == 0)
    }

    pub fn excess_matches_prediction(&self) -> bool {
        self.intersections
            .iter()
            .filter(|(x, _, _)| x.len() < self.alpha)
            .all(|&(_, e, _)| e == self.predicted.excess)
    }

    pub fn layout(&self) -> GpqrLayout {
        GpqrLayout { p: self.p, q: self.q, r: self.r }
    }
}

pub fn check_gpqr(p: usize, q: usize, r: usize, budget: &Budget) -> Result<GpqrOutcome> {
    let (g, layout) = family_gpqr(p, q, r)?;
    let maximum = all_maximum_independent_sets(&g, budget)?;
    let alpha = maximum[0].len();
    let mu = matching_number(&g);
    let core = core(&g, budget)?;
    let mut xs: BTreeSet<VertexSet> = maximum.iter().copied().collect();
    xs.extend(multi_intersections(&maximum));
    xs.insert(core);
    let intersections = xs
        .into_iter()
        .map(|x| {
            let e = neighborhood_excess(&g, x);
            (x, e, mu as i64 + e - alpha as i64)
        })
        .collect();
    Ok(GpqrOutcome {
        p,
        q,
        r,
        predicted: GpqrPrediction::for_params(p, q, r),
        alpha,
        mu,
        core_is_independent_block: core == layout.independent_r(),
        parity_exact: r >= q || (q - r).is_multiple_of(2),
        intersections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn intersection_bound_examples() {
        let (g, layout) = family_gpqr(2, 1, 3).unwrap();
        assert_eq!(theorem1_bound(&g, layout.independent_r(), &b()).unwrap(), 5);
        let (g, layout) = family_gpqr(1, 3, 1).unwrap();
        let x = layout.independent_r();
        assert_eq!(neighborhood_excess(&g, x), -1);
        let p = petersen();
        let a = crate::invariants::maximum_independent_set(&p, &b()).unwrap();
        assert_eq!(theorem1_bound(&p, a, &b()).unwrap(), 4);
        assert_eq!(theorem1_bound(&cycle(5).unwrap(), set(&[0]), &b()).unwrap(), 2);
        let e = theorem1_bound(&path(3).unwrap(), set(&[0]), &b()).unwrap_err();
        assert!(matches!(e, Error::Contract(_)));
    }

    #[test]
    fn core_and_pair_bounds() {
        assert_eq!(core_bound(&cycle(5).unwrap(), &b()).unwrap(), 2);
        assert_eq!(core_bound(&path(3).unwrap(), &b()).unwrap(), 2);
        assert_eq!(core_bound(&empty(4).unwrap(), &b()).unwrap(), 4);
        assert_eq!(best_pair_bound(&cycle(5).unwrap(), &b()).unwrap(), Some(2));
        let (g, _) = family_gpqr(2, 1, 3).unwrap();
        assert_eq!(best_pair_bound(&g, &b()).unwrap(), Some(5));
        assert_eq!(best_pair_bound(&complete(3).unwrap(), &b()).unwrap(), Some(1));
        assert_eq!(best_pair_bound(&path(3).unwrap(), &b()).unwrap(), None);
    }

    #[test]
    fn degree_product_examples() {
        let c = theorem2_check(&complete_bipartite(2, 5).unwrap(), &b()).unwrap();
        assert_eq!((c.lhs, c.rhs, c.slack), (10, 10, 0));
        let c = theorem2_check(&complete_bipartite(1, 3).unwrap(), &b()).unwrap();
        assert_eq!((c.lhs, c.rhs, c.slack), (3, 3, 0));
        let c = theorem2_check(&empty(5).unwrap(), &b()).unwrap();
        assert_eq!((c.lhs, c.rhs), (0, 0));
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_bound(&complete_bipartite(2, 5).unwrap()), Some(Rational::from_integer(5)));
        assert_eq!(ratio_bound(&cycle(6).unwrap()), Some(Rational::from_integer(3)));
        assert_eq!(ratio_bound(&complete(4).unwrap()), Some(Rational::from_integer(2)));
        assert_eq!(ratio_bound(&path(3).unwrap()), Some(Rational::new(2, 1)));
        assert_eq!(ratio_bound(&empty(2).unwrap()), None);
        let star = Graph::from_edge_list(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(format_rational(&ratio_bound(&star).unwrap()), "6");
        assert_eq!(format_rational(&Rational::new(9, 2)), "9/2");
    }

    #[test]
    fn chain1_examples() {
        assert_eq!(chain1_values(&cycle(5).unwrap(), &b()).unwrap().0, [1, 1, 2, 3]);
        assert_eq!(chain1_values(&path(4).unwrap(), &b()).unwrap().0, [0, 2, 2, 2]);
        assert_eq!(chain1_values(&empty(3).unwrap(), &b()).unwrap().0, [3, 3, 3, 3]);
    }

    #[test]
    fn regular_chain_examples() {
        let show = |g: &Graph| regular_chain(g, &b()).unwrap().unwrap().to_string();
        assert_eq!(show(&cycle(6).unwrap()), "(3, 3, 3, 3, 3)");
        assert_eq!(show(&petersen()), "(4, 5, 5, 5, 5)");
        assert_eq!(show(&complete(4).unwrap()), "(1, 2, 2, 2, 2)");
        assert!(regular_chain(&path(3).unwrap(), &b()).unwrap().is_none());
        assert!(regular_chain(&empty(3).unwrap(), &b()).unwrap().is_none());
        // Odd order breaks only the n/2 ≤ a link.
        let k3 = regular_chain(&complete(3).unwrap(), &b()).unwrap().unwrap();
        assert_eq!(k3.links(), [true, true, false, true]);
    }

    #[test]
    fn eq3_examples() {
        let e = eq3_check(&cycle(5).unwrap(), &b()).unwrap();
        assert_eq!((e.lhs, e.rhs, e.applicable), (1, 2, true));
        let e = eq3_check(&cycle(6).unwrap(), &b()).unwrap();
        assert_eq!((e.lhs, e.rhs, e.applicable), (2, 3, true));
        let e = eq3_check(&complete_bipartite(1, 3).unwrap(), &b()).unwrap();
        assert!(!e.applicable);
    }

    #[test]
    fn evaluate_examples() {
        let (g, _) = family_gpqr(2, 1, 3).unwrap();
        let r = evaluate_all("gpqr", &g, &b()).unwrap();
        assert!(r.equality.thm1_core);
        assert!(r.defects.is_empty());
        let r = evaluate_all("c5", &cycle(5).unwrap(), &b()).unwrap();
        assert_eq!((r.thm1_core.slack, r.thm2.slack), (0, 0));
        assert_eq!(r.fournier_cycle, Some(true));
        let r = evaluate_all("e2", &empty(2).unwrap(), &b()).unwrap();
        assert_eq!((r.record.alpha, r.record.mu, r.thm1_core.bound, r.thm1_core.slack), (2, 0, 2, 0));
        let r = evaluate_all("k33", &complete_bipartite(3, 3).unwrap(), &b()).unwrap();
        assert!(r.equality.problem1 && r.equality.problem2);
        assert_eq!(r.thm3_witness, Some(3));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""ratio2":"3""#));
    }

    #[test]
    fn remark_one_on_small_families() {
        let c7 = cycle(7).unwrap();
        let maximum = all_maximum_independent_sets(&c7, &b()).unwrap();
        for w in maximum.windows(3) {
            assert!(pair_dominates_family(&c7, w));
        }
        assert!(pair_dominates_family(&c7, &maximum));
    }

    #[test]
    fn intersection_closure() {
        let c5 = cycle(5).unwrap();
        let maximum = all_maximum_independent_sets(&c5, &b()).unwrap();
        let xs = multi_intersections(&maximum);
        assert!(xs.contains(&VertexSet::EMPTY));
        assert!(xs.contains(&set(&[0])));
        assert_eq!(xs.len(), 6);
    }

    #[test]
    fn prism_with_isolates_profile() {
        let p = intersection_profile(&prism_with_isolates(), &b()).unwrap();
        assert_eq!((p.alpha, p.maximum_sets), (5, 6));
        assert_eq!(p.single_set_tight, 6);
        // {a, 6, 7, 8} for each prism vertex a is tight; the isolated triple is not.
        assert_eq!(p.multi.len(), 7);
        assert_eq!(p.multi_tight(), 6);
        assert_eq!(p.multi.iter().find(|(_, s)| *s == 1).unwrap().0, set(&[6, 7, 8]));
    }

    #[test]
    fn gpqr_predictions() {
        assert_eq!(GpqrPrediction::for_params(2, 1, 3), GpqrPrediction { alpha: 5, mu: 3, excess: 2 });
        assert_eq!(GpqrPrediction::for_params(1, 3, 1).excess, -1);
        assert_eq!(GpqrPrediction::for_params(1, 2, 1).excess, -1);
        let out = check_gpqr(2, 1, 3, &b()).unwrap();
        assert!(out.items_abc_match() && out.all_tight() && out.excess_matches_prediction());
    }
}
