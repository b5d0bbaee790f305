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

//! Graph corpora behind a single streaming interface.

use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cubic::connected_cubic_graphs;
use crate::error::{Error, Result};
use crate::graph::generators::{random_gnp, random_regular};
use crate::graph::{parse_edge_list, parse_graph6, Graph, Graph6Reader};

pub type GraphStream = Box<dyn Iterator<Item = Result<Graph>>>;

/// Where a scan reads its graphs from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    /// A graph6 file, one graph per line.
    Graph6File(PathBuf),
    /// graph6 lines held in memory.
    Graph6Lines(Vec<String>),
    /// A single graph in edge-list form.
    EdgeListFile(PathBuf),
    /// Every labelled graph on exactly `n` vertices (2^(n(n-1)/2) of them).
    Labelled { n: usize },
    /// Every labelled graph on 1..=n_max vertices.
    LabelledUpTo { n_max: usize },
    /// Connected cubic graphs on 4..=n_max vertices, up to isomorphism.
    ConnectedCubic { n_max: usize },
    /// `count` Erdős–Rényi graphs with order in n_min..=n_max and edge
    /// probability drawn per graph.
    RandomGnp { count: usize, n_min: usize, n_max: usize, seed: u64 },
    /// `count` random r-regular graphs, r cycling through `degrees`, order in
    /// (r+1)..=n_max with n·r even.
    RandomRegular { count: usize, degrees: Vec<usize>, n_max: usize, seed: u64 },
    /// Graphs supplied by the caller.
    Graphs(Vec<Graph>),
}

/// Largest `n` accepted for labelled enumeration.
pub const MAX_LABELLED_ORDER: usize = 7;

impl Source {
    /// Whether the corpus enumerates labelled graphs (isomorphic copies repeat).
    pub fn is_labelled(&self) -> bool {
        matches!(self, Source::Labelled { .. } | Source::LabelledUpTo { .. })
    }

    pub fn stream(&self) -> Result<GraphStream> {
        Ok(match self {
            Source::Graph6File(path) => {
                let file = File::open(path).map_err(|source| Error::Io { line: 0, source })?;
                Box::new(Graph6Reader::new(BufReader::new(file)).map(|r| r.map(|(_, g)| g)))
            }
            Source::Graph6Lines(lines) => {
                let lines = lines.clone();
                Box::new(
                    lines
                        .into_iter()
                        .enumerate()
                        .filter(|(_, l)| !l.trim().is_empty())
                        .map(|(i, l)| {
                            parse_graph6(&l).map_err(|e| match e {
                                Error::Graph6 { offset, reason } => Error::Graph6 {
                                    offset,
                                    reason: format!("line {}: {reason}", i + 1),
                                },
                                other => other,
                            })
                        }),
                )
            }
            Source::EdgeListFile(path) => {
                let file = File::open(path).map_err(|source| Error::Io { line: 0, source })?;
                Box::new(std::iter::once(parse_edge_list(BufReader::new(file))))
            }
            Source::Labelled { n } => labelled(*n)?,
            Source::LabelledUpTo { n_max } => {
                let mut parts = Vec::new();
                for n in 1..=*n_max {
                    parts.push(labelled(n)?);
                }
                Box::new(parts.into_iter().flatten())
            }
            Source::ConnectedCubic { n_max } => {
                let orders: Vec<usize> = (4..=*n_max).step_by(2).collect();
                Box::new(orders.into_iter().flat_map(|n| match connected_cubic_graphs(n) {
                    Ok(gs) => gs.into_iter().map(Ok).collect::<Vec<_>>(),
                    Err(e) => vec![Err(e)],
                }))
            }
            Source::RandomGnp { count, n_min, n_max, seed } => {
                if n_min > n_max {
                    return Err(Error::InvalidParameter(format!("n_min {n_min} > n_max {n_max}")));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let (count, lo, hi) = (*count, *n_min, *n_max);
                Box::new((0..count).map(move |_| {
                    let n = rng.gen_range(lo..=hi);
                    let p = rng.gen_range(0.05..0.95);
                    random_gnp(n, p, &mut rng)
                }))
            }
            Source::RandomRegular { count, degrees, n_max, seed } => {
                if degrees.is_empty() || degrees.iter().any(|&r| r + 1 > *n_max) {
                    return Err(Error::InvalidParameter(format!(
                        "degrees {degrees:?} need at least one order up to {n_max}"
                    )));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let (count, degrees, n_max) = (*count, degrees.clone(), *n_max);
                Box::new((0..count).map(move |i| {
                    let r = degrees[i % degrees.len()];
                    let orders: Vec<usize> = (r + 1..=n_max).filter(|n| n * r % 2 == 0).collect();
                    let n = orders[rng.gen_range(0..orders.len())];
                    random_regular(n, r, rng.gen())
                }))
            }
            Source::Graphs(gs) => Box::new(gs.clone().into_iter().map(Ok)),
        })
    }
}

fn labelled(n: usize) -> Result<GraphStream> {
    if n > MAX_LABELLED_ORDER {
        return Err(Error::InvalidParameter(format!(
            "labelled enumeration is limited to n <= {MAX_LABELLED_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(Box::new((0u64..1 << pairs.len()).map(move |mask| {
        let mut adj = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Ok(Graph::from_adjacency(adj))
    })))
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Graph6File(p) => write!(f, "graph6 file {}", p.display()),
            Source::Graph6Lines(l) => write!(f, "{} inline graph6 lines", l.len()),
            Source::EdgeListFile(p) => write!(f, "edge-list file {}", p.display()),
            Source::Labelled { n } => write!(f, "all labelled graphs on {n} vertices"),
            Source::LabelledUpTo { n_max } => write!(f, "all labelled graphs on 1..={n_max} vertices"),
            Source::ConnectedCubic { n_max } => {
                write!(f, "connected cubic graphs on 4..={n_max} vertices up to isomorphism")
            }
            Source::RandomGnp { count, n_min, n_max, seed } => {
                write!(f, "{count} random G(n,p) graphs, n in {n_min}..={n_max}, seed {seed}")
            }
            Source::RandomRegular { count, degrees, n_max, seed } => write!(
                f,
                "{count} random regular graphs, degrees {degrees:?}, n <= {n_max}, seed {seed}"
            ),
            Source::Graphs(gs) => write!(f, "{} supplied graphs", gs.len()),
        }
    }
}
