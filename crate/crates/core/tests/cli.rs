use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn binvote() -> Command {
    Command::cargo_bin("binvote").unwrap()
}

/// Runs the CLI and returns (exit code, parsed stdout).
fn run(args: &[&str]) -> (i32, Value) {
    let out = binvote().args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"))
    };
    (code, value)
}

fn lists(v: &Value) -> Vec<Vec<u64>> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn validate_exit_codes() {
    let (code, v) = run(&["validate", &fixture("job_market.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["valid"], true);

    let (code, v) = run(&["validate", &fixture("disjoint_singletons.json")]);
    assert_eq!(code, 1);
    assert!(v["report"]["moulin"]["counterexample"].is_array());

    let (code, _) = run(&["validate", &fixture("malformed.json")]);
    assert_eq!(code, 2);

    let (code, v) = run(&["validate", &fixture("s1.json")]);
    assert_eq!((code, &v["kind"]), (0, &Value::from("sequence")));
}

#[test]
fn validate_reads_stdin() {
    let text = std::fs::read_to_string(fixture("job_market.json")).unwrap();
    binvote()
        .args(["validate", "-"])
        .write_stdin(text)
        .assert()
        .success();
}

#[test]
fn out_of_range_voter_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"schema_version":1,"n":3,"coalitions":[[1,2],[2,9]]}"#,
    )
    .unwrap();
    let out = binvote()
        .args(["validate", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("coalitions[1]"), "{err}");
}

#[test]
fn scripted_sequences() {
    let game = fixture("job_market.json");
    let script = format!("script={}", fixture("script_s1.json"));
    let (code, v) = run(&["to-sequence", &game, "--policy", &script]);
    assert_eq!(code, 0);
    assert_eq!(
        lists(&v["sequence"]),
        vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![7]]
    );
    assert_eq!(v["trace"]["backstop"], 7);

    let script = format!("script={}", fixture("script_s2.json"));
    let (_, v) = run(&["to-sequence", &game, "--policy", &script]);
    assert_eq!(
        lists(&v["sequence"]),
        vec![
            vec![1, 2],
            vec![3, 5, 7],
            vec![3, 6, 7],
            vec![3, 5, 6],
            vec![4]
        ]
    );

    let script = format!("script={}", fixture("script_s3.json"));
    let (_, v) = run(&["to-sequence", &game, "--policy", &script]);
    let seq = lists(&v["sequence"]);
    assert_eq!(seq.len(), 8);
    assert_eq!(seq[7], vec![2]);

    let script = format!("script={}", fixture("script_backstop8.json"));
    let (_, v) = run(&[
        "to-sequence",
        &fixture("non_weighted_eight.json"),
        "--policy",
        &script,
    ]);
    let seq = lists(&v["sequence"]);
    assert_eq!(&seq[6..], &[vec![2, 5, 6], vec![1, 2], vec![1, 3], vec![8]]);
}

#[test]
fn rejected_script_names_criterion() {
    let script = format!("script={}", fixture("script_bad.json"));
    let out = binvote()
        .args([
            "to-sequence",
            &fixture("job_market.json"),
            "--policy",
            &script,
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("(iii)"));
}

#[test]
fn policies_are_deterministic() {
    let game = fixture("non_weighted_eight.json");
    for policy in ["lex", "seed=5"] {
        let a = binvote()
            .args(["to-sequence", &game, "--policy", policy])
            .output()
            .unwrap();
        let b = binvote()
            .args(["to-sequence", &game, "--policy", policy])
            .output()
            .unwrap();
        assert_eq!(a.stdout, b.stdout);
        assert!(a.status.success());
    }
    let (code, _) = run(&["to-sequence", &game, "--policy", "greedy"]);
    assert_eq!(code, 2);
}

#[test]
fn enumerate_family() {
    let (code, v) = run(&[
        "to-sequence",
        &fixture("job_market.json"),
        "--enumerate",
        "--max=3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["sequences"].as_array().unwrap().len(), 3);
    assert_eq!(v["truncated"], true);
}

#[test]
fn to_coalitions() {
    let expected = run(&["validate", &fixture("job_market.json")]);
    assert_eq!(expected.0, 0);
    let game: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("job_market.json")).unwrap())
            .unwrap();
    for seq in ["s1.json", "s2.json", "s3.json"] {
        let (code, v) = run(&["to-coalitions", &fixture(seq)]);
        assert_eq!(code, 0);
        let mut got = lists(&v["coalitions"]);
        let mut want = lists(&game["coalitions"]);
        got.sort();
        want.sort();
        assert_eq!(got, want, "{seq}");
    }
    let (_, v) = run(&["to-coalitions", &fixture("s2.json")]);
    let pruned: Vec<&Value> = v["trace"]["iterations"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|it| it["pruned"].as_array().unwrap())
        .collect();
    assert!(pruned
        .iter()
        .any(|p| p["coalition"] == serde_json::json!([1, 3, 4, 5]) && p["reason"] == "superset"));

    let (_, v) = run(&["to-coalitions", &fixture("dictator.json")]);
    assert_eq!(lists(&v["coalitions"]), vec![vec![1]]);

    let (code, _) = run(&["to-coalitions", &fixture("s2.json"), "--path-limit", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn check_equivalence_and_properties() {
    let game = format!("game={}", fixture("job_market.json"));
    let s1 = format!("seq={}", fixture("s1.json"));
    let (code, v) = run(&["check", "equiv", &game, &s1]);
    assert_eq!(code, 0);
    assert_eq!(v["equivalence"]["verdict"], "equal");
    assert_eq!(v["equivalence"]["profiles"], 128);

    let (code, v) = run(&["check", &game, &s1]);
    assert_eq!(
        (code, &v["equivalence"]["verdict"]),
        (0, &Value::from("equal"))
    );

    let (code, v) = run(&["check", &s1, "--sp", "--neutral", "--essential"]);
    assert_eq!(code, 0);
    assert_eq!(v["rules"][0]["essential"]["verdict"], "essential");

    let nested = format!("seq={}", fixture("nested.json"));
    let (code, v) = run(&["check", "essential", &nested]);
    assert_eq!(code, 1);
    assert_eq!(
        v["rules"][0]["essential"]["superfluous"],
        serde_json::json!([10])
    );

    let dictator = format!("seq={}", fixture("dictator.json"));
    let (code, v) = run(&["check", "equiv", &game, &dictator]);
    assert_eq!(code, 2, "{v}");
}

#[test]
fn check_counterexample_exit_code() {
    let game = format!("game={}", fixture("job_market.json"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d7.json");
    std::fs::write(&path, r#"{"schema_version":1,"n":7,"sequence":[[7]]}"#).unwrap();
    let other = format!("seq={}", path.display());
    let (code, v) = run(&["check", &game, &other]);
    assert_eq!(code, 1);
    assert_eq!(v["equivalence"]["verdict"], "counterexample");
}

#[test]
fn check_ternary_domain() {
    let game = format!("game={}", fixture("job_market.json"));
    let s1 = format!("seq={}", fixture("s1.json"));
    let (code, v) = run(&[
        "check",
        &game,
        &s1,
        "--domain",
        "ternary",
        "--default",
        "majority",
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["equivalence"]["profiles"], 2187);

    let (code, _) = run(&["check", &game, &s1, "--domain", "ternary"]);
    assert_eq!(code, 2);
}

#[test]
fn check_trade_and_weights() {
    let nw = format!("game={}", fixture("non_weighted_eight.json"));
    let (code, v) = run(&["check", "trade", &nw]);
    assert_eq!(code, 1);
    let trade = &v["rules"][0]["trade"];
    assert_eq!(trade["verdict"], "certificate");
    let listed = serde_json::json!({"c1": [2, 3, 6], "c2": [3, 4, 7], "i": 6, "j": 7});
    assert!(trade["all"].as_array().unwrap().contains(&listed));

    let jm = format!("game={}", fixture("job_market.json"));
    let (code, v) = run(&["check", "weights", &jm, "--weights=4"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["rules"][0]["weights"]["weights"],
        serde_json::json!([4, 4, 2, 2, 1, 1, 1])
    );
    assert_eq!(v["rules"][0]["weights"]["threshold"], 8);

    let (code, v) = run(&["check", "weights", &nw, "--weights=3"]);
    assert_eq!(code, 1);
    assert_eq!(v["rules"][0]["weights"]["verdict"], "none_within_bound");

    let (code, _) = run(&["check", "weights", &nw, "--weights=3", "--budget=5"]);
    assert_eq!(code, 3);

    let (code, _) = run(&["check", "weights", &jm]);
    assert_eq!(code, 2);
}

#[test]
fn eval_outcomes() {
    let s1 = format!("seq={}", fixture("s1.json"));
    let (code, v) = run(&["eval", &s1, "abaabbb"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "a");
    assert_eq!(v["decided_by"]["index"], 2);

    let jm = format!("game={}", fixture("job_market.json"));
    let (_, v) = run(&["eval", &jm, "aabbbbb"]);
    assert_eq!(v["outcome"], "a");
    assert_eq!(v["decided_by"]["witness"], serde_json::json!([1, 2]));

    let (_, v) = run(&["eval", &s1, "0000000", "--default", "majority"]);
    assert_eq!(v["outcome"], "0");
    assert_eq!(v["decided_by"]["kind"], "default");

    assert_eq!(run(&["eval", &s1, "abx"]).0, 2);
    assert_eq!(run(&["eval", &s1, "ab"]).0, 2);
    assert_eq!(run(&["eval", &s1, "ab0abab"]).0, 2);
}

#[test]
fn bound_exceeded_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    std::fs::write(&path, r#"{"schema_version":1,"n":21,"coalitions":[[1]]}"#).unwrap();
    let (code, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 3);
}

#[test]
fn canonical_documents_round_trip() {
    let (_, v) = run(&["to-coalitions", &fixture("s1.json")]);
    let doc = serde_json::json!({
        "schema_version": v["schema_version"],
        "n": v["n"],
        "coalitions": v["coalitions"],
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let (_, again) = run(&["to-coalitions", &{
        let seq = dir.path().join("s.json");
        std::fs::copy(fixture("s1.json"), &seq).unwrap();
        seq.to_string_lossy().into_owned()
    }]);
    assert_eq!(again["coalitions"], doc["coalitions"]);
    let text = std::fs::read_to_string(fixture("job_market.json")).unwrap();
    let parsed = binvote::doc::GameDocument::parse(&text).unwrap();
    let reparsed = binvote::doc::GameDocument::parse(&parsed.to_json()).unwrap();
    assert_eq!(parsed, reparsed);
    assert_eq!(parsed.to_json(), reparsed.to_json());
}
