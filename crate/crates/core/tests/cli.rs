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

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn imlab(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_imlab"))
        .args(args)
        .env_remove("IMLAB_FORMAT")
        .env_remove("IMLAB_CHECK")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn imlab");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_record_for_empty_graph() {
    let o = imlab(&["invariants", "--graph6", "D??"], "");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["alpha"], 5);
    assert_eq!(v["mu"], 0);
}

#[test]
fn family_piped_into_verify() {
    let family = imlab(&["family", "--gpqr", "2", "1", "3"], "");
    assert!(family.status.success());
    let o = imlab(&["verify", "--check", "thm1", "--format", "json"], &stdout(&family));
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["equality"]["thm1_core"], true);
}

#[test]
fn exhaustive_scan_is_clean() {
    let o = imlab(&["scan", "--n-max", "6", "--exhaustive", "--check", "all"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["defects"].as_array().unwrap().len(), 0);
    assert_eq!(v["graphs_scanned"], 33867);
    assert_eq!(v["labelled_corpus"], true);
}

#[test]
fn environment_supplies_defaults_and_flags_win() {
    let run = |env: &[(&str, &str)], args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_imlab"))
            .args(args)
            .envs(env.iter().copied())
            .output()
            .unwrap();
        stdout(&o)
    };
    let text = run(&[("IMLAB_FORMAT", "text")], &["invariants", "--graph6", "A_"]);
    assert!(text.starts_with("A_ n=2"), "{text}");
    let json = run(&[("IMLAB_FORMAT", "text")], &["invariants", "--graph6", "A_", "--format", "json"]);
    assert!(json.starts_with('{'), "{json}");
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(imlab(&["scan", "--exhaustive", "--input", "x.g6"], "").status.code(), Some(64));
    assert_eq!(imlab(&["invariants", "--budget-nodes", "0", "--graph6", "A_"], "").status.code(), Some(64));
    let o = imlab(&["invariants"], "A_\nzz~\n");
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn budget_exhaustion_exits_three() {
    let o = imlab(&["scan", "--graph6", "IheA@GUAo", "--budget-nodes", "2", "--check", "thm1"], "");
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["skipped"].as_array().unwrap().len(), 1);
}

#[test]
fn files_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    let out = dir.path().join("out.csv");
    std::fs::write(&input, "A_\nBw\nDhc\n").unwrap();
    let o = imlab(
        &["invariants", "--input", input.to_str().unwrap(), "--format", "csv", "--output", out.to_str().unwrap()],
        "",
    );
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("graph6,n,m,alpha,mu,mu_star"));
    assert_eq!(lines.count(), 3);

    let el = dir.path().join("p3.txt");
    std::fs::write(&el, "3 2\n0 1\n1 2\n").unwrap();
    let o = imlab(&["invariants", "--input", el.to_str().unwrap(), "--edge-list", "--format", "text"], "");
    assert!(stdout(&o).contains("alpha=2 mu=1"), "{}", stdout(&o));
}

#[test]
fn cubic_scan_persists_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("violations.g6");
    let o = imlab(
        &["scan", "--cubic", "--n-max", "10", "--check", "conjecture1", "--witness-out", w.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&w).unwrap(), "");
}

#[test]
fn family_and_witness_listings() {
    let o = imlab(&["family", "--cubic", "--n-max", "8"], "");
    assert_eq!(stdout(&o).lines().count(), 1 + 2 + 5);
    let o = imlab(&["family", "--regular", "8", "3", "--count", "3", "--seed", "9"], "");
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = imlab(&["witnesses", "--problem", "1", "--cubic", "--n-max", "6"], "");
    // K_4 has α = 1 < μ = 2; only K_{3,3} qualifies on six vertices.
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 1);
    let g = imlab::graph::parse_graph6(&lines[0]).unwrap();
    assert_eq!((g.n(), g.regularity()), (6, Some(3)));
    assert_eq!(imlab::invariants::independence_number(&g, &Default::default()).unwrap(), 3);
}

#[test]
fn hall_demo_trace() {
    let o = imlab(&["hall-demo", "--graph6", "IheA@GUAo", "--sets", "3"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("M_3") && text.contains("Q (maximum matching"), "{text}");
}
