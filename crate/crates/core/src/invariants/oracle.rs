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

//! Exhaustive reference computations, kept independent of the fast solvers.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest edge count [`brute_matching_number`] accepts.
pub const MATCHING_ORACLE_MAX_EDGES: usize = 24;
/// Largest order [`brute_independence_number`] accepts.
pub const INDEPENDENCE_ORACLE_MAX_ORDER: usize = 24;

/// μ(G) by exhaustive search over edge subsets, pruning only subsets that
/// already reuse a vertex.
pub fn brute_matching_number(g: &Graph) -> Result<usize> {
    let edges: Vec<_> = g.edges().collect();
    if edges.len() > MATCHING_ORACLE_MAX_EDGES {
        return Err(Error::Contract(format!(
            "matching oracle limited to {MATCHING_ORACLE_MAX_EDGES} edges, got {}",
            edges.len()
        )));
    }
    fn go(edges: &[(usize, usize)], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = go(rest, used);
                let both = 1u64 << u | 1u64 << v;
                if used & both == 0 {
                    skip.max(1 + go(rest, used | both))
                } else {
                    skip
                }
            }
        }
    }
    Ok(go(&edges, 0))
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() > INDEPENDENCE_ORACLE_MAX_ORDER {
        return Err(Error::Contract(format!(
            "independence oracle limited to {INDEPENDENCE_ORACLE_MAX_ORDER} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Every independent set of `g`, by scanning all 2^n vertex subsets.
pub fn brute_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    check_order(g)?;
    Ok((0u64..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| g.is_independent(s))
        .collect())
}

/// α(G) by scanning all vertex subsets.
pub fn brute_independence_number(g: &Graph) -> Result<usize> {
    Ok(brute_independent_sets(g)?.iter().map(|s| s.len()).max().unwrap_or(0))
}
