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

//! graph6 short form (n ≤ 62): one byte `n + 63`, then the upper triangle of
//! the adjacency matrix in column order, six bits per byte, each byte + 63.

use std::io::BufRead;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_SHORT: usize = 62;

fn bit_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let (offset, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.trim_end().as_bytes();
    let err = |pos: usize, reason: String| Error::Graph6 { offset: offset + pos, reason };

    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input".into()));
    };
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(pos, format!("byte {b} outside 63..=126")));
        }
    }
    if first == 126 {
        return Err(err(0, "long-form vertex count (n > 62) is not supported".into()));
    }
    let n = (first - 63) as usize;
    let nbits = bit_len(n);
    let expected = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(err(
            1 + data.len().min(expected),
            format!("expected {expected} data bytes for n={n}, found {}", data.len()),
        ));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if let Some(&last) = data.last() {
        let pad = expected * 6 - nbits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(err(data.len(), "non-zero padding bits".into()));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Encodes `g` in graph6 short form, without header or newline.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT {
        return Err(Error::Graph6Unsupported(n));
    }
    let nbits = bit_len(n);
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Streams graphs from a graph6 file, one per non-blank line.
pub struct Graph6Reader<R> {
    inner: R,
    line_no: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader { inner, line_no: 0, buf: String::new() }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    /// `(1-based line number, graph)`.
    type Item = Result<(usize, Graph)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line_no += 1;
            match self.inner.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(source) => return Some(Err(Error::Io { line: self.line_no, source })),
            }
            let line = self.buf.trim_end_matches(['\n', '\r']);
            if line.trim().is_empty() {
                continue;
            }
            let line_no = self.line_no;
            return Some(parse_graph6(line).map(|g| (line_no, g)).map_err(|e| match e {
                Error::Graph6 { offset, reason } => Error::Graph6 {
                    offset,
                    reason: format!("line {line_no}: {reason}"),
                },
                other => other,
            }));
        }
    }
}
