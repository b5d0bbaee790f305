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

// The G(p,q,r) family: brute-forced α, μ and core against the closed
// forms, and how tight the intersection bound is on each member.

use std::error::Error;

use imlab::bounds::check_gpqr;
use imlab::Budget;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    println!(" p  q  r | alpha  mu | items  tight  excess");
    for p in 0..=3 {
        for q in 0..=4 {
            for r in 0..=5 {
                if p + r < 2 {
                    continue;
                }
                let o = check_gpqr(p, q, r, &budget)?;
                println!(
                    "{:>2} {:>2} {:>2} | {:>5} {:>3} | {:>5} {:>6} {:>7}{}",
                    p,
                    q,
                    r,
                    o.alpha,
                    o.mu,
                    o.items_abc_match(),
                    o.all_tight(),
                    o.excess_matches_prediction(),
                    if o.parity_exact { "" } else { "  (odd q - r)" }
                );
                assert!(o.items_abc_match());
                for (x, _, slack) in o.intersections.iter().filter(|t| t.2 != 0) {
                    println!("          X = {x} leaves slack {slack}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
