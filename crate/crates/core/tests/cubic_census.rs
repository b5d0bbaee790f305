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

use imlab::search::connected_cubic_graphs;

#[test]
fn connected_cubic_counts_through_twelve() {
    let counts: Vec<usize> = [4, 6, 8, 10, 12]
        .iter()
        .map(|&n| connected_cubic_graphs(n).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 2, 5, 19, 85]);
}

#[test]
fn generated_graphs_are_cubic_and_connected() {
    for g in connected_cubic_graphs(10).unwrap() {
        assert_eq!(g.regularity(), Some(3));
        assert!(g.is_connected());
    }
    assert!(connected_cubic_graphs(2).unwrap().is_empty());
    assert!(connected_cubic_graphs(7).is_err());
}
