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

//! Connected cubic graphs up to isomorphism.
//!
//! Candidates are built in breadth-first labelled form: vertex 0 is the root,
//! and each processed vertex either joins later, already-discovered vertices
//! or discovers fresh ones with the next labels. Every connected cubic graph
//! has such a labelling, and each has only a few, so the candidate stream stays
//! small. Duplicates are removed with an invariant bucket plus an exact
//! isomorphism test.

use std::collections::HashMap;

use petgraph::graph::UnGraph;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    UnGraph::from_edges(g.edges().map(|(u, v)| (u as u32, v as u32)))
}

/// Per-vertex triangle count and distance profile, sorted: equal for isomorphic graphs.
fn invariant_key(g: &Graph) -> InvariantKey {
    let mut key: Vec<_> = (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            let triangles = nb.iter().map(|w| g.neighbors(w).intersection(nb).len()).sum::<usize>() / 2;
            let mut layers = Vec::new();
            let mut seen = VertexSet::singleton(v);
            let mut frontier = seen;
            while !frontier.is_empty() {
                frontier = g.open_neighborhood(frontier).difference(seen);
                seen = seen.union(frontier);
                layers.push(frontier.len());
            }
            (triangles, layers)
        })
        .collect();
    key.sort();
    key
}

struct Builder {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
    labelled: usize,
    found: Vec<Graph>,
}

impl Builder {
    fn go(&mut self, cur: usize) {
        if cur == self.n {
            self.found.push(Graph::from_adjacency(self.adj.clone()));
            return;
        }
        if cur >= self.labelled {
            return; // disconnected
        }
        let need = 3 - self.deg[cur];
        let existing: Vec<usize> = (cur + 1..self.labelled)
            .filter(|&w| self.deg[w] < 3 && self.adj[cur] >> w & 1 == 0)
            .collect();
        for take in 0..=need.min(existing.len()) {
            let fresh = need - take;
            if self.labelled + fresh > self.n {
                continue;
            }
            for combo in combinations(&existing, take) {
                let first_new = self.labelled;
                let partners: Vec<usize> = combo.into_iter().chain(first_new..first_new + fresh).collect();
                for &w in &partners {
                    self.join(cur, w);
                }
                self.labelled += fresh;
                self.go(cur + 1);
                self.labelled -= fresh;
                for &w in &partners {
                    self.split(cur, w);
                }
            }
        }
    }

    fn join(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    fn split(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Triangle count and distance layers per vertex, sorted; equal for isomorphic graphs.
type InvariantKey = Vec<(usize, Vec<usize>)>;

/// Every connected cubic graph on `n` vertices, one per isomorphism class,
/// in a deterministic order.
pub fn connected_cubic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n % 2 == 1 || n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("no cubic graphs supported on {n} vertices")));
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut b = Builder { n, adj: vec![0; n], deg: vec![0; n], labelled: 1, found: Vec::new() };
    b.go(0);

    let mut buckets: HashMap<InvariantKey, Vec<UnGraph<(), ()>>> = HashMap::new();
    let mut reps = Vec::new();
    for g in b.found {
        let pg = to_petgraph(&g);
        let bucket = buckets.entry(invariant_key(&g)).or_default();
        if !bucket.iter().any(|h| petgraph::algo::is_isomorphic(h, &pg)) {
            bucket.push(pg);
            reps.push(g);
        }
    }
    Ok(reps)
}
