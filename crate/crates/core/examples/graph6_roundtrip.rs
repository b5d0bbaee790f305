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

// graph6 and edge-list encodings, both directions.

use std::error::Error;
use std::io::Cursor;

use imlab::graph::generators::petersen;
use imlab::graph::{encode_graph6, parse_edge_list, parse_graph6, write_edge_list, Graph6Reader};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = petersen();
    let line = encode_graph6(&g)?;
    println!("Petersen graph6: {line}");
    assert_eq!(line, "IheA@GUAo");
    assert_eq!(parse_graph6(&line)?, g);
    assert_eq!(parse_graph6(&format!(">>graph6<<{line}"))?, g);

    let mut text = Vec::new();
    write_edge_list(&g, &mut text)?;
    println!("edge list:\n{}", String::from_utf8_lossy(&text));
    assert_eq!(parse_edge_list(Cursor::new(&text))?, g);

    let corpus = "A_\nBw\n\nDhc\n";
    for item in Graph6Reader::new(Cursor::new(corpus)) {
        let (line_no, h) = item?;
        println!("line {line_no}: n = {}, m = {}", h.n(), h.m());
    }
    match parse_graph6("A`") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("nonzero padding accepted".into()),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
