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

//! Independent sets: exact α, maximum and maximal set enumeration, core,
//! independent domination and well-coveredness.

use super::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, VertexSet};

/// Branch-and-reduce α over bitmask candidate sets.
pub(crate) struct AlphaSolver<'a> {
    adj: &'a [u64],
    ticker: Ticker,
}

impl<'a> AlphaSolver<'a> {
    pub(crate) fn new(g: &'a Graph, budget: &Budget, field: &'static str) -> Self {
        AlphaSolver { adj: g.adjacency_words(), ticker: Ticker::new(budget.nodes, field) }
    }

    /// α of the subgraph induced by `mask`.
    pub(crate) fn alpha(&mut self, mask: u64) -> Result<usize> {
        if mask == 0 {
            return Ok(0);
        }
        self.ticker.tick()?;
        let (mut min_v, mut min_d, mut max_v, mut max_d) = (0, usize::MAX, 0, 0);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & mask).count_ones() as usize;
            if d < min_d {
                (min_v, min_d) = (v, d);
            }
            if d > max_d {
                (max_v, max_d) = (v, d);
            }
        }
        // A vertex of degree at most one lies in some maximum independent set.
        if min_d <= 1 {
            return Ok(1 + self.alpha(mask & !(self.adj[min_v] | 1 << min_v))?);
        }
        let without = self.alpha(mask & !(1 << max_v))?;
        let with = 1 + self.alpha(mask & !(self.adj[max_v] | 1 << max_v))?;
        Ok(without.max(with))
    }
}

/// α(G).
pub fn independence_number(g: &Graph, budget: &Budget) -> Result<usize> {
    AlphaSolver::new(g, budget, "alpha").alpha(low_mask(g.n()))
}

/// The lexicographically smallest maximum independent set.
pub fn maximum_independent_set(g: &Graph, budget: &Budget) -> Result<VertexSet> {
    let mut solver = AlphaSolver::new(g, budget, "alpha");
    let adj = g.adjacency_words();
    let mut need = solver.alpha(low_mask(g.n()))?;
    let mut cand = low_mask(g.n());
    let mut chosen = VertexSet::EMPTY;
    while need > 0 {
        let v = cand.trailing_zeros() as usize;
        let above = cand & !low_mask(v + 1);
        let after = above & !adj[v];
        if 1 + solver.alpha(after)? >= need {
            chosen.insert(v);
            need -= 1;
            cand = after;
        } else {
            cand = above;
        }
    }
    Ok(chosen)
}

/// Every maximum independent set, in lexicographic order.
pub fn all_maximum_independent_sets(g: &Graph, budget: &Budget) -> Result<Vec<VertexSet>> {
    let mut solver = AlphaSolver::new(g, budget, "maximum independent sets");
    let alpha = solver.alpha(low_mask(g.n()))?;
    let mut out = Vec::new();

    struct Walk<'s, 'a> {
        solver: &'s mut AlphaSolver<'a>,
        alpha: usize,
        max_sets: usize,
        out: &'s mut Vec<VertexSet>,
    }

    impl Walk<'_, '_> {
        fn go(&mut self, cand: u64, chosen: u64, size: usize) -> Result<()> {
            if size == self.alpha {
                if self.out.len() == self.max_sets {
                    return Err(Error::Budget {
                        field: "maximum independent sets".into(),
                        limit: self.max_sets as u64,
                    });
                }
                self.out.push(VertexSet::from_bits(chosen));
                return Ok(());
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let next = cand & !low_mask(v + 1) & !self.solver.adj[v];
                if size + 1 + self.solver.alpha(next)? >= self.alpha {
                    self.go(next, chosen | 1 << v, size + 1)?;
                }
            }
            Ok(())
        }
    }

    Walk { solver: &mut solver, alpha, max_sets: budget.max_sets, out: &mut out }.go(
        low_mask(g.n()),
        0,
        0,
    )?;
    Ok(out)
}

/// core(G): the vertices lying in every maximum independent set, found as
/// the vertices whose deletion lowers α.
pub fn core(g: &Graph, budget: &Budget) -> Result<VertexSet> {
    let mut solver = AlphaSolver::new(g, budget, "core");
    let all = low_mask(g.n());
    let alpha = solver.alpha(all)?;
    let mut core = VertexSet::EMPTY;
    for v in 0..g.n() {
        if solver.alpha(all & !(1 << v))? < alpha {
            core.insert(v);
        }
    }
    Ok(core)
}

/// Calls `visit` on every inclusion-maximal independent set, using pivoted
/// Bron–Kerbosch on the complement graph.
pub fn for_each_maximal_independent_set<F>(g: &Graph, budget: &Budget, mut visit: F) -> Result<()>
where
    F: FnMut(VertexSet) -> Result<()>,
{
    let all = low_mask(g.n());
    let adj = g.adjacency_words();
    let non_adj: Vec<u64> = (0..g.n()).map(|v| all & !adj[v] & !(1 << v)).collect();
    let mut ticker = Ticker::new(budget.nodes, "maximal independent sets");

    fn bk<F: FnMut(VertexSet) -> Result<()>>(
        non_adj: &[u64],
        ticker: &mut Ticker,
        r: u64,
        mut p: u64,
        mut x: u64,
        visit: &mut F,
    ) -> Result<()> {
        ticker.tick()?;
        if p == 0 {
            if x == 0 {
                visit(VertexSet::from_bits(r))?;
            }
            return Ok(());
        }
        let pivot = VertexSet::from_bits(p | x)
            .iter()
            .max_by_key(|&u| ((p & non_adj[u]).count_ones(), std::cmp::Reverse(u)))
            .expect("p is non-empty");
        let mut branch = p & !non_adj[pivot];
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            bk(non_adj, ticker, r | 1 << v, p & non_adj[v], x & non_adj[v], visit)?;
            p &= !(1 << v);
            x |= 1 << v;
        }
        Ok(())
    }

    bk(&non_adj, &mut ticker, 0, all, 0, &mut visit)
}

/// Every maximal independent set, in lexicographic order.
pub fn all_maximal_independent_sets(g: &Graph, budget: &Budget) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, budget, |s| {
        if out.len() == budget.max_sets {
            return Err(Error::Budget {
                field: "maximal independent sets".into(),
                limit: budget.max_sets as u64,
            });
        }
        out.push(s);
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

/// i(G): the smallest size of a maximal independent set.
pub fn independent_domination_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let mut best = g.n();
    for_each_maximal_independent_set(g, budget, |s| {
        best = best.min(s.len());
        Ok(())
    })
    .map_err(|e| e.in_field("independent domination number"))?;
    Ok(best)
}

/// Every maximal independent set is maximum, i.e. i(G) = α(G).
pub fn is_well_covered(g: &Graph, budget: &Budget) -> Result<bool> {
    Ok(independent_domination_number(g, budget)? == independence_number(g, budget)?)
}
