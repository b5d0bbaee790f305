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

// The saturating matchings behind the intersection bound, traced step by
// step on the Petersen graph.

use std::error::Error;

use imlab::graph::generators::petersen;
use imlab::invariants::{all_maximum_independent_sets, matching_number};
use imlab::lemmas::{hall_saturating_matching, neighborhood_excess, telescoping_matching, IntersectionChain};
use imlab::Budget;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    let g = petersen();
    let maximum = all_maximum_independent_sets(&g, &budget)?;
    println!("Petersen: {} maximum independent sets of size {}", maximum.len(), maximum[0].len());

    let (a, x) = (maximum[0], maximum[3]);
    let m = hall_saturating_matching(&g, a, x, &budget)?;
    println!("A = {a}, X = {x}: A - X saturated by {:?}", m.edges());
    assert!(a.difference(x).is_subset(m.saturated()));

    let chain = IntersectionChain::new(&g, maximum[1..4].to_vec(), maximum[0], &budget)?;
    let trace = telescoping_matching(&g, &chain)?;
    print!("{trace}");
    // |A| - mu(G[N[A]]) never exceeds |X| - mu(G[N[X]]).
    assert!(neighborhood_excess(&g, chain.base()) <= neighborhood_excess(&g, chain.intersection()));
    assert!(trace.matching.len() <= matching_number(&g));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
