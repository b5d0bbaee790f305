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

// Equality instances: cubic graphs with α = μ, and graphs with δα = Δμ.

use std::error::Error;

use imlab::search::{collect_equality_witnesses, ScanOptions, Source, WitnessKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = ScanOptions::default();
    let cubic = collect_equality_witnesses(&Source::ConnectedCubic { n_max: 10 }, WitnessKind::Problem1, &opts)?;
    println!("cubic graphs on <= 10 vertices with alpha = mu: {}", cubic.len());
    for g6 in &cubic {
        println!("  {g6}");
    }
    let degree = collect_equality_witnesses(&Source::LabelledUpTo { n_max: 5 }, WitnessKind::Problem2, &opts)?;
    println!("labelled graphs on <= 5 vertices with delta*alpha = Delta*mu: {}", degree.len());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
