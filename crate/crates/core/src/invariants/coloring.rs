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

//! Edge-chromatic class: does a proper Δ-edge-colouring exist?

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Budget, Ticker};
use crate::error::Result;
use crate::graph::{low_mask, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    /// χ'(G) = Δ(G).
    Class1,
    /// χ'(G) = Δ(G) + 1.
    Class2,
}

impl std::fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EdgeClass::Class1 => "class1",
            EdgeClass::Class2 => "class2",
        })
    }
}

/// More edges than Δ colour classes of at most ⌊n/2⌋ edges each can hold.
fn overfull(g: &Graph) -> bool {
    g.m() > g.max_degree() * (g.n() / 2)
}

/// `((u, v), colour)` for every edge.
pub type EdgeColoring = Vec<((usize, usize), usize)>;

/// A proper edge colouring with Δ(G) colours, if one exists.
///
/// Overfull graphs are rejected outright. Otherwise a seeded Kempe-chain
/// pass runs first; if it stalls, an exact search colours edges
/// most-constrained first (fewest colours left, then most uncoloured edges at
/// the endpoints). Colours never used so far are interchangeable, so only the
/// lowest of them is tried.
pub fn delta_edge_coloring(g: &Graph, budget: &Budget) -> Result<Option<EdgeColoring>> {
    let k = g.max_degree();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if overfull(g) {
        return Ok(None);
    }
    if let Some(colors) = kempe_recolor(g.n(), &edges, k) {
        return Ok(Some(edges.into_iter().zip(colors).collect()));
    }
    let mut s = Search {
        k,
        edges: &edges,
        color: vec![None; edges.len()],
        used: vec![0u64; g.n()],
        open: g.degrees(),
        ticker: Ticker::new(budget.nodes, "edge class"),
    };
    if !s.go(edges.len(), 0)? {
        return Ok(None);
    }
    Ok(Some(edges.iter().copied().zip(s.color.into_iter().map(|c| c.unwrap())).collect()))
}

/// Seeded Kempe-chain recolouring: colour edges one at a time, swapping a
/// two-coloured path to free a colour when neither endpoint's missing colour
/// fits. A returned colouring is proper; `None` proves nothing.
fn kempe_recolor(n: usize, edges: &[(usize, usize)], k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b656d70);
    // at[v * k + c]: edge of colour c at v.
    let mut at = vec![usize::MAX; n * k];
    let mut color = vec![usize::MAX; edges.len()];
    let missing = |at: &[usize], v: usize| -> Vec<usize> { (0..k).filter(|&c| at[v * k + c] == usize::MAX).collect() };
    let mut pending: Vec<usize> = (0..edges.len()).rev().collect();
    let mut steps = 0;
    let limit = 64 * edges.len() * k + 1024;
    while let Some(e) = pending.pop() {
        steps += 1;
        if steps > limit {
            return None;
        }
        let (u, v) = edges[e];
        let (mu, mv) = (missing(&at, u), missing(&at, v));
        if let Some(&c) = mu.iter().find(|c| mv.contains(c)) {
            color[e] = c;
            at[u * k + c] = e;
            at[v * k + c] = e;
            continue;
        }
        // a is free at u but used at v; b is free at v but used at u. Flip
        // the a/b path leaving v so that a becomes free at v.
        let a = mu[rng.gen_range(0..mu.len())];
        let b = mv[rng.gen_range(0..mv.len())];
        let mut path = Vec::new();
        let (mut x, mut c) = (v, a);
        while at[x * k + c] != usize::MAX {
            let f = at[x * k + c];
            path.push(f);
            x = if edges[f].0 == x { edges[f].1 } else { edges[f].0 };
            c = if c == a { b } else { a };
        }
        for &f in &path {
            let (p, q) = edges[f];
            at[p * k + color[f]] = usize::MAX;
            at[q * k + color[f]] = usize::MAX;
        }
        for &f in &path {
            let (p, q) = edges[f];
            color[f] = if color[f] == a { b } else { a };
            at[p * k + color[f]] = f;
            at[q * k + color[f]] = f;
        }
        pending.push(e);
        if x == u {
            // The path ended at u, so u lost its free a. Evict a random
            // coloured edge at u to keep the search moving.
            let c = rng.gen_range(0..k);
            let f = at[u * k + c];
            if f != usize::MAX {
                let (p, q) = edges[f];
                at[p * k + c] = usize::MAX;
                at[q * k + c] = usize::MAX;
                color[f] = usize::MAX;
                pending.insert(0, f);
            }
        }
    }
    Some(color)
}

struct Search<'a> {
    k: usize,
    edges: &'a [(usize, usize)],
    color: Vec<Option<usize>>,
    used: Vec<u64>,
    /// Uncoloured edges at each vertex.
    open: Vec<usize>,
    ticker: Ticker,
}

impl Search<'_> {
    fn go(&mut self, remaining: usize, highest: usize) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        self.ticker.tick()?;
        let full = low_mask(self.k);
        let mut best: Option<(usize, u32, usize)> = None;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if self.color[i].is_some() {
                continue;
            }
            let free = (full & !(self.used[u] | self.used[v])).count_ones();
            if free == 0 {
                return Ok(false);
            }
            let pressure = self.open[u] + self.open[v];
            if best.is_none_or(|(_, f, p)| free < f || (free == f && pressure > p)) {
                best = Some((i, free, pressure));
            }
        }
        let (i, _, _) = best.expect("an uncoloured edge remains");
        let (u, v) = self.edges[i];
        let mut avail = low_mask(self.k.min(highest + 1)) & !(self.used[u] | self.used[v]);
        self.open[u] -= 1;
        self.open[v] -= 1;
        while avail != 0 {
            let c = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            self.color[i] = Some(c);
            if self.go(remaining - 1, highest.max(c + 1))? {
                return Ok(true);
            }
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
        }
        self.color[i] = None;
        self.open[u] += 1;
        self.open[v] += 1;
        Ok(false)
    }
}

/// Class 1 iff a proper Δ(G)-edge-colouring exists; otherwise class 2.
///
/// Components of smaller maximum degree always fit into Δ(G) colours, so
/// only components attaining Δ(G) are searched.
pub fn edge_chromatic_class(g: &Graph, budget: &Budget) -> Result<EdgeClass> {
    let delta = g.max_degree();
    for comp in g.components() {
        let h = g.induced_subgraph(comp).graph;
        if h.max_degree() == delta && delta_edge_coloring(&h, budget)?.is_none() {
            return Ok(EdgeClass::Class2);
        }
    }
    Ok(EdgeClass::Class1)
}
