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

//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.

mod edgelist;
pub mod generators;
mod graph6;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{encode_graph6, parse_graph6, Graph6Reader};

/// Largest supported vertex count. Vertex sets are single `u64` words.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices, iterated in ascending order.
///
/// Ordering is lexicographic on the ascending member sequence, so
/// `{0,2} < {0,3} < {1}` and a proper prefix sorts first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest member index plus one, or zero for the empty set.
    pub fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`,
/// kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Normalizes edge orientation and order. Does not check disjointness;
    /// see [`Matching::validate`].
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    /// Builds a matching from a mate array (`mate[v] == Some(w)` iff `vw` matched).
    pub fn from_mates(mate: &[Option<usize>]) -> Self {
        Self::from_edges(
            mate.iter()
                .enumerate()
                .filter_map(|(v, w)| w.filter(|&w| v < w).map(|w| (v, w))),
        )
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn saturated(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Union of two matchings, failing if they share a vertex.
    pub fn disjoint_union(&self, other: &Matching) -> Result<Matching> {
        if !self.saturated().is_disjoint(other.saturated()) {
            return Err(Error::Internal(format!(
                "matchings {:?} and {:?} share a vertex",
                self.edges, other.edges
            )));
        }
        Ok(Matching::from_edges(self.edges.iter().chain(&other.edges).copied()))
    }

    /// Checks that every edge exists in `g` and no two edges share an endpoint.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = VertexSet::EMPTY;
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(Error::Contract(format!("({u},{v}) is not an edge")));
            }
            if seen.contains(u) || seen.contains(v) {
                return Err(Error::Contract(format!("({u},{v}) shares an endpoint")));
            }
            seen.insert(u);
            seen.insert(v);
        }
        Ok(())
    }

    /// True when no edge of `g` has both endpoints unsaturated.
    pub fn is_maximal_in(&self, g: &Graph) -> bool {
        let free = VertexSet::full(g.n()).difference(self.saturated());
        free.iter().all(|v| g.neighbors(v).is_disjoint(free))
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n], m: 0 })
    }

    /// Builds a graph, collapsing duplicate edges and rejecting loops.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.recount();
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let mut g = Graph { n: adj.len(), adj, m: 0 };
        debug_assert!(g.n <= MAX_VERTICES);
        debug_assert!((0..g.n).all(|v| g.adj[v] >> v & 1 == 0));
        g.recount();
        g
    }

    fn recount(&mut self) {
        let total: usize = self.adj.iter().map(|a| a.count_ones() as usize).sum();
        self.m = total / 2;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Δ(G); zero for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !low_mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// The common degree if the graph is regular (and non-null).
    pub fn regularity(&self) -> Option<usize> {
        let d = self.min_degree();
        (self.n > 0 && d == self.max_degree()).then_some(d)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// N(S): every vertex adjacent to some member of `s`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    /// N[S] = S ∪ N(S).
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.union(self.open_neighborhood(s))
    }

    /// G[S], relabelled order-preservingly to `0..|S|`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Induced {
        let old_of_new = s.to_vec();
        let mut new_of_old = vec![None; self.n];
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = Some(i);
        }
        let adj = old_of_new
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v])
                    .intersection(s)
                    .iter()
                    .fold(0u64, |acc, w| acc | 1 << new_of_old[w].unwrap())
            })
            .collect();
        Induced {
            graph: Graph::from_adjacency(adj),
            old_of_new,
            new_of_old,
        }
    }

    /// G_Δ: the subgraph induced by the vertices of maximum degree.
    pub fn max_degree_subgraph(&self) -> Graph {
        let d = self.max_degree();
        let top: VertexSet = (0..self.n).filter(|&v| self.degree(v) == d).collect();
        self.induced_subgraph(top).graph
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph::from_adjacency(adj)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.open_neighborhood(frontier).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when the graph contains a cycle, i.e. it is not a forest.
    pub fn has_cycle(&self) -> bool {
        self.m + self.components().len() > self.n
    }

    pub(crate) fn adjacency_words(&self) -> &[u64] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// Original index of each new vertex (ascending).
    pub old_of_new: Vec<usize>,
    /// New index of each original vertex, `None` when outside the subset.
    pub new_of_old: Vec<Option<usize>>,
}

impl Induced {
    /// Maps a matching of the induced subgraph back to original labels.
    pub fn lift_matching(&self, m: &Matching) -> Matching {
        Matching::from_edges(
            m.edges()
                .iter()
                .map(|&(u, v)| (self.old_of_new[u], self.old_of_new[v])),
        )
    }
}
