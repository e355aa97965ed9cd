//! End-to-end tests of the binary: exit codes, document shapes and
//! byte-level determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn okbodies(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_okbodies"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn roots_a2_golden() {
    let out = okbodies(&["roots", "--type", "A2", "--order", "1,2"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let words: Vec<&str> = doc["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["word"].as_str().unwrap())
        .collect();
    assert_eq!(words, vec!["1", "12", "2"]);
}

#[test]
fn roots_inversion_set_order_213() {
    let out = okbodies(&[
        "roots", "--type", "A3", "--order", "2,1,3", "--w", "2,1,3,2",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let inv: Vec<Vec<i64>> = doc["inversion_set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r["root"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_i64().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(
        inv,
        vec![vec![0, 1, 0], vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]
    );
}

#[test]
fn usage_and_unsupported_exit_codes() {
    let out = okbodies(&["roots", "--type", "E9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = okbodies(&["roots", "--type", "G2", "--order", "2,1"]);
    assert_eq!(out.status.code(), Some(3));

    let out = okbodies(&["seed", "--type", "A2", "--w", "1,1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = okbodies(&["seed", "--type", "A2", "--w", "1,2,1", "--mutate", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = okbodies(&["verify", "--type", "A3", "--w", "w0", "--cap", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_a2_golden_and_mutation() {
    let out = okbodies(&["seed", "--type", "A2", "--w", "1,2,1"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(
        doc["psi"],
        serde_json::json!([[1, 0, 0], [0, 1, 0], [1, 0, 1]])
    );
    assert_eq!(doc["frozen"], serde_json::json!([2, 3]));

    let out = okbodies(&["seed", "--type", "A2", "--w", "1,2,1", "--mutate", "1"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["psi"][0], serde_json::json!([0, 0, 1]));
    assert_eq!(doc["depth"], serde_json::json!(1));
}

#[test]
fn seed_b_column_order_213() {
    let out = okbodies(&["seed", "--type", "A3", "--order", "2,1,3", "--w", "2,1,3,2"]);
    let doc = stdout_json(&out);
    let b = doc["B"].as_array().unwrap();
    let col: Vec<i64> = (0..4).map(|i| b[i][0].as_i64().unwrap()).collect();
    assert_eq!(col, vec![0, 1, 1, -1]);
}

#[test]
fn enumerate_counts_and_cap() {
    let out = okbodies(&["enumerate", "--type", "A3", "--w", "1,2,3,1,2"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["count"], serde_json::json!(5));
    assert_eq!(doc["finite"], serde_json::json!(true));

    let out = okbodies(&["enumerate", "--type", "A3", "--w", "w0", "--cap", "3"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["count"], serde_json::json!(3));
    assert_eq!(doc["finite"], serde_json::json!(false));
}

#[test]
fn verify_worked_example() {
    let out = okbodies(&[
        "verify", "--type", "A3", "--order", "2,1,3", "--w", "2,1,3,2",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], serde_json::json!(true));
    assert_eq!(doc["seeds"], serde_json::json!(2));
    assert_eq!(doc["corhook"]["lhs"], serde_json::json!("2/1"));
    assert_eq!(doc["corhook"]["rhs"], serde_json::json!("2/1"));
    assert_eq!(doc["peterson_proctor"]["hook"], serde_json::json!("2/1"));
    assert_eq!(
        doc["peterson_proctor"]["reduced_words"],
        serde_json::json!("2")
    );
    assert_eq!(doc["peterson_proctor"]["match"], serde_json::json!(true));
}

#[test]
fn verify_corrupted_seed_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let seeds_path = dir.path().join("seeds.json");
    let out = okbodies(&[
        "enumerate",
        "--type",
        "A3",
        "--order",
        "2,1,3",
        "--w",
        "2,1,3,2",
        "--out",
        seeds_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    // clean file verifies
    let out = okbodies(&[
        "verify",
        "--type",
        "A3",
        "--order",
        "2,1,3",
        "--w",
        "2,1,3,2",
        "--seeds",
        seeds_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    // corrupt one valuation entry
    let mut doc: Value =
        serde_json::from_str(&std::fs::read_to_string(&seeds_path).unwrap()).unwrap();
    doc["seeds"][1]["psi"][0][3] = serde_json::json!(7);
    let corrupt_path = dir.path().join("corrupt.json");
    std::fs::write(&corrupt_path, serde_json::to_string(&doc).unwrap()).unwrap();

    let out = okbodies(&[
        "verify",
        "--type",
        "A3",
        "--order",
        "2,1,3",
        "--w",
        "2,1,3,2",
        "--seeds",
        corrupt_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], serde_json::json!(false));
}

#[test]
fn polytopes_volumes_and_projection() {
    let out = okbodies(&["polytopes", "--type", "A2", "--w", "1,2,1"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["total"]["volume"], serde_json::json!("1/2"));
    let volumes: Vec<&str> = doc["seeds"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["volume"].as_str().unwrap())
        .collect();
    assert_eq!(volumes, vec!["1/4", "1/4"]);

    // --float adds a decimal rendering without replacing the exact one
    let out = okbodies(&["polytopes", "--type", "A2", "--w", "1,2,1", "--float"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["total"]["volume"], serde_json::json!("1/2"));
    assert_eq!(doc["total"]["volume_float"], serde_json::json!(0.5));

    let dir = tempfile::tempdir().unwrap();
    let out = okbodies(&[
        "polytopes",
        "--type",
        "A3",
        "--w",
        "1,2,3,1,2",
        "--out",
        dir.path().to_str().unwrap(),
        "--project",
        "3,1",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    for name in [
        "total.json",
        "seed_000.json",
        "seed_004.json",
        "total.off",
        "seed_004.off",
    ] {
        assert!(dir.path().join(name).exists(), "{} missing", name);
    }
    let off = std::fs::read_to_string(dir.path().join("seed_000.off")).unwrap();
    let mut lines = off.lines();
    assert_eq!(lines.next(), Some("OFF"));
    let counts: Vec<usize> = lines
        .next()
        .unwrap()
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(counts.len(), 3);
    assert!(counts[0] >= 3 && counts[1] >= 1);

    // projection must land in 3 dimensions
    let out = okbodies(&[
        "polytopes",
        "--type",
        "A2",
        "--w",
        "1,2,1",
        "--out",
        dir.path().to_str().unwrap(),
        "--project",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // and needs somewhere to write the OFF files
    let out = okbodies(&[
        "polytopes",
        "--type",
        "A3",
        "--w",
        "1,2,3,1,2",
        "--project",
        "3,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["roots", "--type", "B2"],
        vec![
            "enumerate",
            "--type",
            "A3",
            "--order",
            "2,1,3",
            "--w",
            "2,1,3,2",
        ],
        vec!["verify", "--type", "B2", "--w", "w0"],
        vec!["polytopes", "--type", "A3", "--w", "1,2,3,1,2"],
    ] {
        let a = okbodies(&args);
        let b = okbodies(&args);
        assert_eq!(a.stdout, b.stdout, "{:?}", args);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn w0_keyword_resolves_to_order_induced_word() {
    let out = okbodies(&["seed", "--type", "A2", "--w", "w0"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["word"], serde_json::json!([1, 2, 1]));

    let out = okbodies(&["enumerate", "--type", "B2", "--w", "w0"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["word"], serde_json::json!([1, 2, 1, 2]));
    assert_eq!(doc["count"], serde_json::json!(6));
}
