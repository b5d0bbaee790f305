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

// Invariant records for a handful of named graphs.

use std::error::Error;

use imlab::graph::generators::{complete, complete_bipartite, cycle, empty, path, petersen};
use imlab::invariants::compute_record;
use imlab::Budget;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    let graphs = [
        ("E5", empty(5)?),
        ("K5", complete(5)?),
        ("P4", path(4)?),
        ("C5", cycle(5)?),
        ("K3,3", complete_bipartite(3, 3)?),
        ("Petersen", petersen()),
    ];
    println!("{:<9} {:>2} {:>2} {:>5} {:>3} {:>4} {:>2} {:>2} {:>5} {:>6}", "graph", "n", "m", "alpha", "mu", "mu*", "i", "a", "core", "class");
    for (name, g) in &graphs {
        let r = compute_record(g, &budget)?;
        println!(
            "{:<9} {:>2} {:>2} {:>5} {:>3} {:>4} {:>2} {:>2} {:>5} {:>6}",
            name, r.n, r.m, r.alpha, r.mu, r.mu_star, r.idom, r.annihilation, r.core_size, r.edge_class
        );
    }
    let e5 = compute_record(&graphs[0].1, &budget)?;
    assert_eq!((e5.alpha, e5.mu), (5, 0));
    let k5 = compute_record(&graphs[1].1, &budget)?;
    assert_eq!((k5.alpha, k5.mu), (1, 2));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
