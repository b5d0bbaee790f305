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

//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.

use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

fn pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let bad = |reason: &str| Error::EdgeList { line: line_no, reason: reason.to_string() };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
    Ok((a, b))
}

/// Reads one graph in edge-list form. Blank lines are skipped.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut lines = reader
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l)).map_err(|source| Error::Io { line: i + 1, source }))
        .filter(|r| r.as_ref().map_or(true, |(_, l)| !l.trim().is_empty()));

    let (hline, header) = lines.next().transpose()?.ok_or(Error::EdgeList {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let (n, m) = pair(&header, hline)?;
    let mut edges = Vec::with_capacity(m);
    for item in lines {
        let (line_no, line) = item?;
        if edges.len() == m {
            return Err(Error::EdgeList { line: line_no, reason: format!("more than {m} edges") });
        }
        edges.push(pair(&line, line_no)?);
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: hline,
            reason: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, edges).map_err(|e| match e {
        Error::LoopEdge(_) | Error::VertexOutOfRange { .. } => Error::EdgeList {
            line: hline,
            reason: e.to_string(),
        },
        other => other,
    })
}

pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> std::io::Result<()> {
    writeln!(w, "{} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}
