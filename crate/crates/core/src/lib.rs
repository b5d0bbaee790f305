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

//! Exact independence and matching invariants for small graphs, executable
//! versions of the matching constructions that relate them, and a harness for
//! checking the resulting inequalities over graph corpora.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod lemmas;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, Matching, VertexSet};
pub use invariants::{Budget, InvariantRecord};
