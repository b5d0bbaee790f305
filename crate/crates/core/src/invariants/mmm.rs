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

//! μ*(G): minimum maximal matchings by branch and bound.

use super::{independence_number, matching_number, Budget, Ticker};
use crate::error::Result;
use crate::graph::{low_mask, Graph, Matching};

/// Number of cliques in a greedy clique partition of `set`, an upper bound on
/// its independence number.
fn clique_cover(adj: &[u64], set: u64) -> usize {
    let mut rest = set;
    let mut cliques = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            rest &= !(1 << w);
            cand &= adj[w] & !(1 << w);
        }
        cliques += 1;
    }
    cliques
}

fn greedy_maximal(adj: &[u64], mut free: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut rest = free;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if free >> u & 1 == 0 {
            continue;
        }
        let nb = adj[u] & free;
        if nb != 0 {
            let v = nb.trailing_zeros() as usize;
            free &= !(1 << u | 1 << v);
            rest &= !(1 << v);
            out.push((u, v));
        }
    }
    out
}

struct Search<'a> {
    adj: &'a [u64],
    ticker: Ticker,
    chosen: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
    /// Proven lower bound on μ*(G); the search stops once `best` reaches it.
    floor: usize,
}

impl Search<'_> {
    fn go(&mut self, free: u64) -> Result<()> {
        if self.best.len() <= self.floor {
            return Ok(());
        }
        self.ticker.tick()?;
        // Lowest uncovered edge (u, v); some maximal extension must match u or v.
        let mut rest = free;
        let mut uncovered = None;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nb = self.adj[u] & free;
            if nb != 0 {
                uncovered = Some((u, nb.trailing_zeros() as usize));
                break;
            }
        }
        let Some((u, v)) = uncovered else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        };
        // Any maximal matching of the free part has at least half its matching
        // number, and leaves an independent set unmatched.
        let half = greedy_maximal(self.adj, free).len().div_ceil(2);
        let size = free.count_ones() as usize;
        let cover = (size - clique_cover(self.adj, free).min(size)).div_ceil(2);
        let lower = half.max(cover);
        if self.chosen.len() + lower >= self.best.len() {
            return Ok(());
        }
        for (a, skip) in [(u, usize::MAX), (v, u)] {
            let mut nb = self.adj[a] & free;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if w == skip {
                    continue;
                }
                self.chosen.push((a.min(w), a.max(w)));
                self.go(free & !(1 << a | 1 << w))?;
                self.chosen.pop();
            }
        }
        Ok(())
    }
}

/// A maximal matching of minimum cardinality.
pub fn minimum_maximal_matching(g: &Graph, budget: &Budget) -> Result<Matching> {
    let adj = g.adjacency_words();
    let all = low_mask(g.n());
    let alpha = independence_number(g, budget).map_err(|e| e.in_field("minimum maximal matching"))?;
    let floor = (g.n() - alpha).div_ceil(2).max(matching_number(g).div_ceil(2));
    let mut search = Search {
        adj,
        ticker: Ticker::new(budget.nodes, "minimum maximal matching"),
        chosen: Vec::new(),
        best: greedy_maximal(adj, all),
        floor,
    };
    search.go(all)?;
    Ok(Matching::from_edges(search.best))
}
