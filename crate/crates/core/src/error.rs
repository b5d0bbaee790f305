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

use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge ({0}, {0}) rejected: graphs are simple")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6Unsupported(usize),

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("gave up after {0} pairing attempts")]
    RetriesExhausted(usize),

    #[error("budget exceeded while computing {field} (limit {limit})")]
    Budget { field: String, limit: u64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("internal defect: {0}")]
    Internal(String),

    #[error("I/O error on line {line}: {source}")]
    Io {
        line: usize,
        #[source]
        source: io::Error,
    },
}

impl Error {
    /// Renames the field carried by a budget error, leaving other errors as-is.
    pub fn in_field(self, field: &str) -> Error {
        match self {
            Error::Budget { limit, .. } => Error::Budget {
                field: field.to_string(),
                limit,
            },
            other => other,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

impl From<io::Error> for Error {
    fn from(source: io::Error) -> Self {
        Error::Io { line: 0, source }
    }
}
