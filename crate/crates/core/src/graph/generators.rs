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

//! Named graphs and graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Pairing-model attempts before [`random_regular`] gives up.
pub const MAX_PAIRING_ATTEMPTS: usize = 10_000;

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!(
            "complete_bipartite needs both parts non-empty, got ({a}, {b})"
        )));
    }
    Graph::from_edge_list(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edge_list(10, outer.chain(inner).chain(spokes)).expect("static edge list")
}

/// Uniform-ish simple r-regular graph from the pairing model, rejecting
/// pairings that produce loops or repeated edges. Deterministic in `seed`.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if n * r % 2 == 1 {
        return Err(Error::InvalidParameter(format!("n*r must be even, got n={n}, r={r}")));
    }
    if n > 0 && r >= n {
        return Err(Error::InvalidParameter(format!("need r < n, got n={n}, r={r}")));
    }
    Graph::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut adj = vec![0u64; n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u] >> v & 1 == 1 {
                continue 'attempt;
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        return Ok(Graph::from_adjacency(adj));
    }
    Err(Error::RetriesExhausted(MAX_PAIRING_ATTEMPTS))
}

/// Erdős–Rényi G(n, p) drawn from `rng`.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
    }
    g.recount();
    Ok(g)
}

/// Vertex blocks of [`family_gpqr`], in layout order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GpqrLayout {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl GpqrLayout {
    pub fn clique_p(&self) -> VertexSet {
        (0..self.p).collect()
    }

    /// Pendant `p + i` hangs off clique vertex `i`.
    pub fn pendants(&self) -> VertexSet {
        (self.p..2 * self.p).collect()
    }

    pub fn clique_q(&self) -> VertexSet {
        (2 * self.p..2 * self.p + self.q).collect()
    }

    pub fn independent_r(&self) -> VertexSet {
        let s = 2 * self.p + self.q;
        (s..s + self.r).collect()
    }

    pub fn order(&self) -> usize {
        2 * self.p + self.q + self.r
    }
}

/// The sharpness family G(p, q, r): K_p with a pendant on each vertex (G_1),
/// every vertex of G_1 joined to every vertex of K_q (G_2), and an independent
/// set of r vertices (G_3) joined to every vertex of K_q.
///
/// Layout: `0..p` is K_p, `p..2p` the pendants, then K_q, then G_3.
pub fn family_gpqr(p: usize, q: usize, r: usize) -> Result<(Graph, GpqrLayout)> {
    if p + r < 2 {
        return Err(Error::InvalidParameter(format!(
            "G(p,q,r) needs p + r >= 2, got p={p}, r={r}"
        )));
    }
    let layout = GpqrLayout { p, q, r };
    let kp = layout.clique_p().to_vec();
    let kq = layout.clique_q().to_vec();
    let g1 = layout.clique_p().union(layout.pendants());
    let mut edges = Vec::new();
    for (i, &u) in kp.iter().enumerate() {
        edges.extend(kp[i + 1..].iter().map(|&v| (u, v)));
        edges.push((u, p + i));
    }
    for (i, &u) in kq.iter().enumerate() {
        edges.extend(kq[i + 1..].iter().map(|&v| (u, v)));
        edges.extend(g1.iter().map(|v| (v, u)));
        edges.extend(layout.independent_r().iter().map(|v| (v, u)));
    }
    Ok((Graph::from_edge_list(layout.order(), edges)?, layout))
}

/// A triangular prism on `0..6` (triangles
/// `{0,1,2}` and `{3,4,5}`, rungs `i -- i+3`) plus isolated vertices 6, 7, 8.
pub fn prism_with_isolates() -> Graph {
    let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
    Graph::from_edge_list(9, edges).expect("static edge list")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families() {
        let kb = complete_bipartite(2, 5).unwrap();
        assert_eq!((kb.min_degree(), kb.max_degree()), (2, 5));
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.regularity(), c5.m()), (Some(2), 5));
        assert_eq!(complete(7).unwrap().m(), 21);
        let p = petersen();
        assert_eq!((p.regularity(), p.m()), (Some(3), 15));
        assert!(complete_bipartite(0, 3).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn random_regular_is_regular_and_seeded() {
        let g = random_regular(10, 3, 7).unwrap();
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(g, random_regular(10, 3, 7).unwrap());
        assert!(matches!(random_regular(5, 3, 1), Err(Error::InvalidParameter(_))));
        assert!(random_regular(4, 4, 1).is_err());
        assert_eq!(random_regular(6, 0, 1).unwrap().m(), 0);
    }

    #[test]
    fn gpqr_layout() {
        let (g, l) = family_gpqr(2, 1, 3).unwrap();
        assert_eq!(g.n(), 2 * 2 + 1 + 3);
        for v in l.pendants() {
            assert_eq!(g.degree(v), 1 + l.q);
        }
        assert!(g.is_independent(l.independent_r()));
        assert!(family_gpqr(1, 4, 0).is_err());
        assert!(family_gpqr(0, 0, 2).is_ok());
    }

    #[test]
    fn prism_with_isolates_shape() {
        let g = prism_with_isolates();
        assert_eq!((g.n(), g.m()), (9, 9));
        assert_eq!(g.induced_subgraph((0..6).collect()).graph.regularity(), Some(3));
    }
}
