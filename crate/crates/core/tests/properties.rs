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

use imlab::bounds::{chain1_values, core_bound, theorem2_check};
use imlab::graph::{encode_graph6, parse_edge_list, parse_graph6, write_edge_list};
use imlab::invariants::oracle::{brute_independence_number, brute_matching_number};
use imlab::invariants::{
    all_maximum_independent_sets, annihilation_number, core, independence_number,
    independent_domination_number, maximum_matching, minimum_maximal_matching,
};
use imlab::lemmas::{hall_saturating_matching, neighborhood_excess, telescoping_matching, IntersectionChain};
use imlab::{Budget, Graph, VertexSet};
use proptest::prelude::*;
use proptest::sample::Index;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e));
            Graph::from_edge_list(n, edges).unwrap()
        })
    })
}

fn budget() -> Budget {
    Budget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
        prop_assert_eq!(encode_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        prop_assert_eq!(parse_edge_list(buf.as_slice()).unwrap(), g);
    }

    #[test]
    fn solvers_match_oracles(g in graph(7)) {
        let m = maximum_matching(&g);
        m.validate(&g).unwrap();
        prop_assert_eq!(m.len(), brute_matching_number(&g).unwrap());
        prop_assert_eq!(independence_number(&g, &budget()).unwrap(), brute_independence_number(&g).unwrap());
    }

    #[test]
    fn chain_and_degree_bounds(g in graph(10)) {
        let b = budget();
        prop_assert!(chain1_values(&g, &b).unwrap().non_decreasing());
        prop_assert!(theorem2_check(&g, &b).unwrap().slack >= 0);
        let alpha = independence_number(&g, &b).unwrap();
        prop_assert!(core_bound(&g, &b).unwrap() >= alpha as i64);
        let i = independent_domination_number(&g, &b).unwrap();
        prop_assert!(i <= alpha && alpha <= annihilation_number(&g));
    }

    #[test]
    fn minimum_maximal_matching_is_maximal(g in graph(9)) {
        let m = minimum_maximal_matching(&g, &budget()).unwrap();
        m.validate(&g).unwrap();
        prop_assert!(m.is_maximal_in(&g));
        let mu = maximum_matching(&g).len();
        prop_assert!(m.len() <= mu && mu <= 2 * m.len());
    }

    #[test]
    fn core_is_the_intersection_of_maximum_sets(g in graph(10)) {
        let b = budget();
        let maximum = all_maximum_independent_sets(&g, &b).unwrap();
        let c = core(&g, &b).unwrap();
        let meet = maximum.iter().fold(g.vertices(), |acc, s| acc.intersection(*s));
        prop_assert_eq!(c, meet);
        prop_assert!(maximum.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn hall_matching_saturates(g in graph(10), ai in any::<Index>(), xi in any::<Index>(), mask in any::<u64>()) {
        let b = budget();
        let maximum = all_maximum_independent_sets(&g, &b).unwrap();
        let a = VertexSet::from_bits(maximum[ai.index(maximum.len())].bits() & mask);
        let x = maximum[xi.index(maximum.len())];
        let m = hall_saturating_matching(&g, a, x, &b).unwrap();
        m.validate(&g).unwrap();
        prop_assert!(a.difference(x).is_subset(m.saturated()));
        prop_assert!(m.saturated().is_subset(a.symmetric_parts(x)));
    }

    #[test]
    fn telescoping_bound_and_monotonicity(
        g in graph(10),
        picks in prop::collection::vec(any::<Index>(), 1..4),
        mask in any::<u64>(),
    ) {
        let b = budget();
        let maximum = all_maximum_independent_sets(&g, &b).unwrap();
        let sets: Vec<VertexSet> = picks.iter().map(|i| maximum[i.index(maximum.len())]).collect();
        let x = sets.iter().fold(g.vertices(), |acc, s| acc.intersection(*s));
        let base = x.union(VertexSet::from_bits(sets[0].bits() & mask));
        let chain = IntersectionChain::new(&g, sets, base, &b).unwrap();
        let trace = telescoping_matching(&g, &chain).unwrap();
        trace.matching.validate(&g).unwrap();
        prop_assert!(trace.matching.saturated().is_subset(g.closed_neighborhood(base)));
        prop_assert!(trace.matching.len() >= trace.guaranteed);
        prop_assert!(neighborhood_excess(&g, base) <= neighborhood_excess(&g, x));
    }
}

trait Parts {
    fn symmetric_parts(self, other: VertexSet) -> VertexSet;
}

impl Parts for VertexSet {
    /// (A − X) ∪ (X − A).
    fn symmetric_parts(self, other: VertexSet) -> VertexSet {
        self.difference(other).union(other.difference(self))
    }
}
