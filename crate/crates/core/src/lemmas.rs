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

//! Matching constructions between independent sets.
//!
//! * [`hall_saturating_matching`]: for an independent set `A` and a maximum
//!   independent set `X`, a matching from `A − X` into `X − A` saturating
//!   `A − X`. Hall's condition holds because a deficient `S ⊆ A − X` would make
//!   `(X ∪ S) − N(S)` a larger independent set.
//! * [`telescoping_matching`]: chains those matchings along prefix
//!   intersections `A_1 = A`, `A_{r+1} = A_r ∩ X_r` and adds a maximum matching
//!   of `G[N[X]]`, giving `μ(G[N[A]]) ≥ |A| − |X| + μ(G[N[X]])`.
//! * [`regular_saturating_matching`]: in an r-regular graph (r > 0) a maximum
//!   independent set can be matched into its complement, witnessing α ≤ μ.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, VertexSet};
use crate::invariants::{bipartite_matching, independence_number, maximum_matching_within, Budget};

/// |S| − μ(G[N[S]]), the quantity both sides of the telescoping inequality
/// are built from.
pub fn neighborhood_excess(g: &Graph, s: VertexSet) -> i64 {
    s.len() as i64 - maximum_matching_within(g, g.closed_neighborhood(s)).len() as i64
}

fn require_independent(g: &Graph, s: VertexSet, what: &str) -> Result<()> {
    if !g.is_independent(s) {
        return Err(Error::Contract(format!("{what} {s} is not independent")));
    }
    Ok(())
}

fn require_maximum(g: &Graph, x: VertexSet, alpha: usize, what: &str) -> Result<()> {
    require_independent(g, x, what)?;
    if x.len() != alpha {
        return Err(Error::Contract(format!(
            "{what} {x} has size {} but alpha = {alpha}",
            x.len()
        )));
    }
    Ok(())
}

fn saturate(g: &Graph, from: VertexSet, into: VertexSet, context: &str) -> Result<Matching> {
    let m = bipartite_matching(g, from, into);
    if !from.is_subset(m.saturated()) {
        return Err(Error::Internal(format!(
            "{context}: matched only {} of {} vertices of {from}",
            m.len(),
            from.len()
        )));
    }
    Ok(m)
}

/// A matching from `A − X` into `X − A` that saturates `A − X`.
///
/// `a` must be independent and `x` a maximum independent set. Failure to
/// saturate under those preconditions is reported as [`Error::Internal`].
pub fn hall_saturating_matching(
    g: &Graph,
    a: VertexSet,
    x: VertexSet,
    budget: &Budget,
) -> Result<Matching> {
    require_independent(g, a, "A")?;
    let alpha = independence_number(g, budget)?;
    require_maximum(g, x, alpha, "X")?;
    saturate(g, a.difference(x), x.difference(a), "Hall matching")
}

/// Maximum independent sets `X_1..X_k` together with an independent base `A`
/// containing their intersection, and the prefix intersections
/// `A_1 = A`, `A_{r+1} = A_r ∩ X_r`.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionChain {
    sets: Vec<VertexSet>,
    base: VertexSet,
    prefixes: Vec<VertexSet>,
}

impl IntersectionChain {
    pub fn new(g: &Graph, sets: Vec<VertexSet>, base: VertexSet, budget: &Budget) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Contract("a chain needs at least one maximum independent set".into()));
        }
        let alpha = independence_number(g, budget)?;
        for (i, &x) in sets.iter().enumerate() {
            require_maximum(g, x, alpha, &format!("X_{}", i + 1))?;
        }
        require_independent(g, base, "A")?;
        let mut prefixes = vec![base];
        for &x in &sets {
            prefixes.push(prefixes.last().unwrap().intersection(x));
        }
        let chain = IntersectionChain { sets, base, prefixes };
        if !chain.intersection().is_subset(base) {
            return Err(Error::Contract(format!(
                "intersection {} is not contained in A = {base}",
                chain.intersection()
            )));
        }
        Ok(chain)
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn base(&self) -> VertexSet {
        self.base
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `A_r` for `r` in `1..=k+1`; `A_{k+1}` equals the intersection X.
    pub fn prefix(&self, r: usize) -> VertexSet {
        self.prefixes[r - 1]
    }

    /// X = X_1 ∩ … ∩ X_k.
    pub fn intersection(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::full(64), |acc, &x| acc.intersection(x))
    }
}

/// Which difference set a step saturates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `A_r − X_r` is saturated, with partners in `X_r − A_r`.
    PrefixIntoMaximum,
}

#[derive(Clone, Debug, Serialize)]
pub struct TelescopeStep {
    pub r: usize,
    pub prefix: VertexSet,
    pub target: VertexSet,
    pub saturated: VertexSet,
    pub orientation: Orientation,
    pub matching: Matching,
}

/// Full construction record of [`telescoping_matching`].
#[derive(Clone, Debug, Serialize)]
pub struct TelescopingTrace {
    pub base: VertexSet,
    pub intersection: VertexSet,
    pub steps: Vec<TelescopeStep>,
    /// Maximum matching of G[N[X]].
    pub q: Matching,
    pub matching: Matching,
    /// |A| − |X| + μ(G[N[X]]).
    pub guaranteed: usize,
}

/// Builds `M = M_1 ∪ … ∪ M_k ∪ Q` and checks the guarantees: `M` is a
/// matching of `G[N[A]]` and `|M| ≥ |A| − |X| + μ(G[N[X]])`.
pub fn telescoping_matching(g: &Graph, chain: &IntersectionChain) -> Result<TelescopingTrace> {
    let mut steps = Vec::with_capacity(chain.len());
    let mut matching = Matching::default();
    for (i, &target) in chain.sets().iter().enumerate() {
        let r = i + 1;
        let prefix = chain.prefix(r);
        let saturated = prefix.difference(target);
        let m_r = saturate(g, saturated, target.difference(prefix), &format!("step {r}"))?;
        matching = matching.disjoint_union(&m_r)?;
        steps.push(TelescopeStep {
            r,
            prefix,
            target,
            saturated,
            orientation: Orientation::PrefixIntoMaximum,
            matching: m_r,
        });
    }
    let x = chain.intersection();
    let q = maximum_matching_within(g, g.closed_neighborhood(x));
    matching = matching.disjoint_union(&q)?;

    let a = chain.base();
    let guaranteed = a.len() - x.len() + q.len();
    let host = g.closed_neighborhood(a);
    matching.validate(g)?;
    if !matching.saturated().is_subset(host) {
        return Err(Error::Internal(format!("telescoping matching leaves N[A] = {host}")));
    }
    if matching.len() < guaranteed {
        return Err(Error::Internal(format!(
            "telescoping matching has {} edges, expected at least {guaranteed}",
            matching.len()
        )));
    }
    Ok(TelescopingTrace { base: a, intersection: x, steps, q, matching, guaranteed })
}

impl fmt::Display for TelescopingTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "A = {}  X = {}", self.base, self.intersection)?;
        for s in &self.steps {
            writeln!(
                f,
                "M_{}: A_{} = {} vs X_{} = {}; saturates {} ({:?}): {:?}",
                s.r, s.r, s.prefix, s.r, s.target, s.saturated, s.orientation,
                s.matching.edges()
            )?;
        }
        writeln!(f, "Q (maximum matching of G[N[X]]): {:?}", self.q.edges())?;
        let terms: Vec<String> = self.steps.iter().map(|s| s.saturated.len().to_string()).collect();
        writeln!(
            f,
            "|M| = {} = sum |A_r - X_r| ({}) + |Q| ({}); |A| - |X| + mu(G[N[X]]) = {} - {} + {} = {}",
            self.matching.len(),
            if terms.is_empty() { "0".into() } else { terms.join(" + ") },
            self.q.len(),
            self.base.len(),
            self.intersection.len(),
            self.q.len(),
            self.guaranteed
        )
    }
}

/// Matches a maximum independent set `x` of an r-regular graph (r > 0) into
/// its complement, ignoring edges inside the complement.
pub fn regular_saturating_matching(g: &Graph, x: VertexSet, budget: &Budget) -> Result<Matching> {
    match g.regularity() {
        Some(r) if r > 0 => {}
        _ => return Err(Error::Contract("graph is not r-regular with r > 0".into())),
    }
    let alpha = independence_number(g, budget)?;
    require_maximum(g, x, alpha, "X")?;
    saturate(g, x, g.vertices().difference(x), "regular saturating matching")
}
