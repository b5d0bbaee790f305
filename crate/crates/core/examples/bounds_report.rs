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

// Every bound on one graph, plus the intersection profile of a prism with
// three isolated vertices.

use std::error::Error;

use imlab::bounds::{evaluate_all, format_rational, intersection_profile};
use imlab::graph::generators::{family_gpqr, prism_with_isolates};
use imlab::Budget;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    let (g, _) = family_gpqr(2, 1, 3)?;
    let report = evaluate_all("G(2,1,3)", &g, &budget)?;
    println!("{}: alpha = {}, mu = {}", report.id, report.record.alpha, report.record.mu);
    println!("  core bound {} (slack {})", report.thm1_core.bound, report.thm1_core.slack);
    println!("  delta*alpha = {} <= Delta*mu = {}", report.thm2.lhs, report.thm2.rhs);
    if let Some(r) = &report.ratio2 {
        println!("  alpha <= {}", format_rational(r));
    }
    println!("  chain {:?}, comparison {:?}", report.chain1.0, report.comparison);
    assert!(report.defects.is_empty() && report.equality.thm1_core);

    let prism = prism_with_isolates();
    let profile = intersection_profile(&prism, &budget)?;
    println!(
        "prism + 3 isolated: alpha = {}, {} maximum sets, {} multi-set intersections",
        profile.alpha,
        profile.maximum_sets,
        profile.multi.len()
    );
    for (x, slack) in &profile.multi {
        println!("  X = {x}: slack {slack}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
