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

//! Maximum-cardinality matchings: Edmonds' blossom search for general graphs
//! and an augmenting-path search for bipartite pieces.

use crate::graph::{Graph, Matching, VertexSet};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: std::collections::VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Default::default(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the free endpoint of
    /// an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }

    fn run(mut self) -> Matching {
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        let mates: Vec<Option<usize>> =
            self.mate.iter().map(|&w| (w != NONE).then_some(w)).collect();
        Matching::from_mates(&mates)
    }
}

/// A maximum matching of `g`. Deterministic for a given labelling.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

/// μ(G).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// μ(G[S]), with the matching expressed in original labels.
pub fn maximum_matching_within(g: &Graph, s: VertexSet) -> Matching {
    let sub = g.induced_subgraph(s);
    sub.lift_matching(&maximum_matching(&sub.graph))
}

/// Maximum matching using only edges between `left` and `right` (which must be
/// disjoint). Left vertices are processed in ascending order; each first takes
/// its smallest free neighbour, otherwise an augmenting path is searched.
pub fn bipartite_matching(g: &Graph, left: VertexSet, right: VertexSet) -> Matching {
    debug_assert!(left.is_disjoint(right));
    let mut mate = vec![None; g.n()];

    fn augment(
        g: &Graph,
        v: usize,
        right: VertexSet,
        visited: &mut VertexSet,
        mate: &mut [Option<usize>],
    ) -> bool {
        let candidates = g.neighbors(v).intersection(right);
        if let Some(w) = candidates.iter().find(|&w| mate[w].is_none()) {
            mate[w] = Some(v);
            mate[v] = Some(w);
            return true;
        }
        for w in candidates {
            if visited.contains(w) {
                continue;
            }
            visited.insert(w);
            let free = match mate[w] {
                None => true,
                Some(u) => augment(g, u, right, visited, mate),
            };
            if free {
                mate[w] = Some(v);
                mate[v] = Some(w);
                return true;
            }
        }
        false
    }

    for v in left {
        let mut visited = VertexSet::EMPTY;
        augment(g, v, right, &mut visited, &mut mate);
    }
    Matching::from_mates(&mate)
}
