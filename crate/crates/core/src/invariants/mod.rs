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

//! Exact graph invariants.
//!
//! Every exponential solver takes a [`Budget`] and fails with
//! [`Error::Budget`] once it is exhausted; no solver ever falls back to an
//! approximation.

pub mod coloring;
pub mod independence;
pub mod matching;
pub mod mmm;
pub mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph, MAX_VERTICES};

pub use coloring::{delta_edge_coloring, edge_chromatic_class, EdgeClass, EdgeColoring};
pub use independence::{
    all_maximal_independent_sets, all_maximum_independent_sets, core,
    for_each_maximal_independent_set, independence_number, independent_domination_number,
    is_well_covered, maximum_independent_set,
};
pub use matching::{bipartite_matching, matching_number, maximum_matching, maximum_matching_within};
pub use mmm::minimum_maximal_matching;
pub use oracle::brute_matching_number;

/// Limits for the exponential solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Search-tree nodes per solver call.
    pub nodes: u64,
    /// Sets an enumeration may return.
    pub max_sets: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { nodes: 50_000_000, max_sets: 1_000_000 }
    }
}

pub(crate) struct Ticker {
    used: u64,
    limit: u64,
    field: &'static str,
}

impl Ticker {
    pub(crate) fn new(limit: u64, field: &'static str) -> Self {
        Ticker { used: 0, limit, field }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::Budget { field: self.field.to_string(), limit: self.limit });
        }
        Ok(())
    }
}

/// a(G): the largest k such that the k smallest degrees sum to at most m(G).
pub fn annihilation_number(g: &Graph) -> usize {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    let mut sum = 0;
    degrees
        .iter()
        .take_while(|&&d| {
            sum += d;
            sum <= g.m()
        })
        .count()
}

/// α(G) + μ(G) = n(G).
pub fn is_konig_egervary(g: &Graph, budget: &Budget) -> Result<bool> {
    Ok(independence_number(g, budget)? + matching_number(g) == g.n())
}

/// All invariants of one graph. Serialized field order is the declaration
/// order below and doubles as the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub mu_star: usize,
    pub idom: usize,
    pub annihilation: usize,
    pub delta: usize,
    pub big_delta: usize,
    pub core_size: usize,
    pub edge_class: EdgeClass,
    pub well_covered: bool,
    pub konig_egervary: bool,
    pub max_ind_set_count: usize,
}

impl InvariantRecord {
    pub const CSV_HEADER: [&'static str; 15] = [
        "graph6",
        "n",
        "m",
        "alpha",
        "mu",
        "mu_star",
        "idom",
        "annihilation",
        "delta",
        "big_delta",
        "core_size",
        "edge_class",
        "well_covered",
        "konig_egervary",
        "max_ind_set_count",
    ];

    /// Relations every record must satisfy; returns the first one violated.
    pub fn consistency_violation(&self) -> Option<&'static str> {
        let (n, m) = (self.n as i64, self.m as i64);
        let (alpha, mu, mu_star) = (self.alpha as i64, self.mu as i64, self.mu_star as i64);
        let big_delta = self.big_delta as i64;
        let annihilation = self.annihilation as i64;
        if mu_star > mu {
            return Some("mu_star <= mu");
        }
        if !(n - 2 * mu <= n - 2 * mu_star && n - 2 * mu_star <= alpha && alpha <= n - mu) {
            return Some("n - 2mu <= n - 2mu* <= alpha <= n - mu");
        }
        if self.idom > self.alpha {
            return Some("idom <= alpha");
        }
        if self.alpha > self.annihilation {
            return Some("alpha <= annihilation");
        }
        if big_delta >= 1 && annihilation * big_delta > n * big_delta - m {
            return Some("annihilation <= n - m / big_delta");
        }
        if self.core_size > self.alpha {
            return Some("core_size <= alpha");
        }
        if self.well_covered != (self.idom == self.alpha) {
            return Some("well_covered iff idom = alpha");
        }
        None
    }
}

/// Computes every field of [`InvariantRecord`] and checks their mutual
/// consistency before returning.
pub fn compute_record(g: &Graph, budget: &Budget) -> Result<InvariantRecord> {
    debug_assert!(g.n() <= MAX_VERTICES);
    let alpha = independence_number(g, budget).map_err(|e| e.in_field("alpha"))?;
    let mu = matching_number(g);
    let mu_star = minimum_maximal_matching(g, budget).map_err(|e| e.in_field("mu_star"))?.len();
    let idom = independent_domination_number(g, budget).map_err(|e| e.in_field("idom"))?;
    let core_size = core(g, budget).map_err(|e| e.in_field("core_size"))?.len();
    let edge_class = edge_chromatic_class(g, budget).map_err(|e| e.in_field("edge_class"))?;
    let max_ind_set_count = all_maximum_independent_sets(g, budget)
        .map_err(|e| e.in_field("max_ind_set_count"))?
        .len();
    let record = InvariantRecord {
        graph6: encode_graph6(g).ok(),
        n: g.n(),
        m: g.m(),
        alpha,
        mu,
        mu_star,
        idom,
        annihilation: annihilation_number(g),
        delta: g.min_degree(),
        big_delta: g.max_degree(),
        core_size,
        edge_class,
        well_covered: idom == alpha,
        konig_egervary: alpha + mu == g.n(),
        max_ind_set_count,
    };
    if let Some(rule) = record.consistency_violation() {
        return Err(Error::Internal(format!("invariant record violates {rule}: {record:?}")));
    }
    Ok(record)
}
