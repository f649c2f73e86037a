use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rboss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rboss")).args(args).output().expect("run rboss")
}

fn ok_json(args: &[&str]) -> Value {
    let out = rboss(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn fig1_overlaps_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let fa = dir.path().join("reads.fa");
    std::fs::write(&fa, ">R1\natttggagta\n>R2\ngtattggaaa\n>R3\nagtattggaa\n>R4\ncaatactcca\n").unwrap();
    let idx = dir.path().join("fig1.idx");
    ok_json(&["build", "-k", "11", "-m", "2", "-o", p(&idx), p(&fa)]);

    let stats = ok_json(&["stats", p(&idx)]);
    assert_eq!(stats["n"], 75);
    assert_eq!(stats["solid"], 8);
    assert_eq!(stats["linker"], 67);

    let ov = ok_json(&["overlaps", p(&idx), "--read", "1", "--dir", "fwd"]);
    let mut got: Vec<(String, u64)> = ov["forward"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| (o["label"].as_str().unwrap().to_string(), o["o"].as_u64().unwrap()))
        .collect();
    got.sort();
    let want = [("agtattggaa", 4), ("gtattggaaa", 3), ("tggagtattg", 7)];
    assert_eq!(got, want.iter().map(|(l, o)| (l.to_string(), *o)).collect::<Vec<_>>());
    assert!(ov.get("backward").is_none());

    let ov = ok_json(&["overlaps", p(&idx), "--read", "3", "--weighted"]);
    assert_eq!(ov["forward"].as_array().unwrap().len(), 1);
    assert_eq!(ov["forward"][0]["o"], 9);
    assert_eq!(ov["backward"].as_array().unwrap().len(), 2);
}

#[test]
fn simulate_build_assemble_bench() {
    let dir = tempfile::tempdir().unwrap();
    let fq = dir.path().join("reads.fq");
    let sim = ok_json(&["simulate", "--len", "1500", "--cov", "10", "--rlen", "60", "--seed", "3", "-o", p(&fq)]);
    assert!(sim["reads"].as_u64().unwrap() >= 250);
    let idx = dir.path().join("sim.idx");
    ok_json(&["build", "-k", "41", "-m", "15", "-o", p(&idx), p(&fq), "--keep-lcs", "--keep-rc-perm"]);
    let fa = dir.path().join("contigs.fa");
    let asm = ok_json(&["assemble", p(&idx), "-o", p(&fa), "--threads", "2"]);
    assert!(asm["contigs"].as_u64().unwrap() >= 1);
    let text = std::fs::read_to_string(&fa).unwrap();
    assert_eq!(text.matches('>').count() as u64, asm["contigs"].as_u64().unwrap());
    let bench = ok_json(&["bench", p(&idx), "--samples", "50"]);
    assert_eq!(bench["samples"], 50);
    assert!(bench["comparisons"].as_array().unwrap().len() == 3);
}

#[test]
fn errors_are_json_with_nonzero_exit() {
    let out = rboss(&["stats", "/nonexistent/index"]);
    assert!(!out.status.success());
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is json");
    assert!(err["error"].as_str().unwrap().contains("loading index"));

    let dir = tempfile::tempdir().unwrap();
    let fa = dir.path().join("reads.fa");
    std::fs::write(&fa, ">a\nacgtacgt\n>b\nttgcattg\n").unwrap();
    let out = rboss(&["build", "-k", "20", "-m", "2", "-o", p(&dir.path().join("x")), p(&fa)]);
    assert!(!out.status.success());
    serde_json::from_slice::<Value>(&out.stderr).expect("stderr is json");
}
