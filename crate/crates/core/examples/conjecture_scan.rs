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

// Scans connected cubic graphs for i ≤ μ* and δi ≤ Δμ*.

use std::error::Error;

use imlab::search::{scan, Check, ScanOptions, Source};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let source = Source::ConnectedCubic { n_max: 10 };
    let checks = [Check::Conjecture1, Check::Question1, Check::Thm3];
    let report = scan(&source, &[], &checks, &ScanOptions::default())?;
    println!("{}: {} graphs", report.source, report.graphs_scanned);
    println!(
        "conjecture1: {} checked, {} violations; question1: {} checked, {} violations",
        report.conjecture1.checked,
        report.conjecture1.violations.len(),
        report.question1.checked,
        report.question1.violations.len()
    );
    println!("equality counts: {:?}", report.sharpness);
    assert_eq!(report.graphs_scanned, 1 + 2 + 5 + 19);
    assert_eq!(report.exit_code(), 0);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
