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

// Regular graphs: a maximum independent set matched into its complement,
// and the chain α ≤ μ ≤ n/2 ≤ a ≤ n − m/Δ with exact rationals.

use std::error::Error;

use imlab::bounds::regular_chain;
use imlab::graph::generators::{cycle, random_regular};
use imlab::invariants::maximum_independent_set;
use imlab::lemmas::regular_saturating_matching;
use imlab::Budget;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    let mut graphs = vec![("C7".to_string(), cycle(7)?)];
    for (i, (n, r)) in [(10, 3), (12, 4), (9, 2)].into_iter().enumerate() {
        graphs.push((format!("random {r}-regular on {n}"), random_regular(n, r, 100 + i as u64)?));
    }
    for (name, g) in &graphs {
        let x = maximum_independent_set(g, &budget)?;
        let m = regular_saturating_matching(g, x, &budget)?;
        let chain = regular_chain(g, &budget)?.ok_or("not regular")?;
        println!("{name}: X = {x}, witness {:?}", m.edges());
        println!("  (alpha, mu, n/2, a, n - m/Delta) = {chain}, links {:?}", chain.links());
        assert!(x.is_subset(m.saturated()));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
