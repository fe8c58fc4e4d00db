use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krcrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_code(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"]["code"].as_str().unwrap().to_string()
}

#[test]
fn verify_reports_eleven_minimal_elements() {
    let out = run(&["verify", "--n", "4", "--s", "2"]);
    assert!(out.status.success());
    let r = json(&out);
    let part5 = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["criterion"] == "part5_bijections")
        .unwrap();
    assert_eq!(part5["witness"]["b_min"], 11);
    assert_eq!(part5["verdict"], "pass");
}

#[test]
fn command_flag_and_positional_agree() {
    let a = run(&["build", "--n", "4", "--s", "1"]);
    let b = run(&["--command", "build", "--n", "4", "--s", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["build", "--command", "verify"]);
    assert_eq!(c.status.code(), Some(2));
    assert_eq!(error_code(&c), "INVALID_CONFIG");
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &["build", "--n", "4", "--s", "2"][..],
        &["bc-graph", "--n", "4", "--s", "2", "--format", "dot"][..],
        &["verify", "--n", "4", "--s", "1"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn build_exports() {
    let j = json(&run(&["build", "--n", "4", "--s", "1"]));
    assert_eq!(j["vertices"].as_array().unwrap().len(), 29);
    let dot = run(&["build", "--n", "4", "--s", "1", "--format", "dot"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("label=0"));
    let bc = json(&run(&["bc-graph", "--n", "4", "--s", "2"]));
    assert_eq!(bc["vertices"].as_array().unwrap().len(), 15);
}

#[test]
fn one_dimensional_sums() {
    for (k, e) in [(0, "-1"), (1, "0")] {
        let lam = format!("{k}ϖ2");
        let j = json(&run(&["xsum", "--n", "4", "--s", "1", "--factors", "1", "--lambda", &lam]));
        assert_eq!(j["polynomial"], serde_json::json!({ e: 1 }));
    }
    let a = json(&run(&["xsum", "--n", "4", "--factors", "2,1", "--lambda", "1w2"]));
    let b = json(&run(&["xsum", "--n", "4", "--factors", "1,2", "--lambda", "0,1,0,0"]));
    assert_eq!(a["polynomial"], b["polynomial"]);
    let c = json(&run(&["xsum", "--n", "4", "--s", "1", "--lambda", "0,0,0,0,0"]));
    assert_eq!(c["polynomial"], serde_json::json!({"-4": 1, "-2": 1}));
}

#[test]
fn rmatrix_and_energy_tables() {
    let r = json(&run(&["rmatrix", "--n", "4", "--factors", "2,1"]));
    let rows = r["rmatrix"].as_array().unwrap();
    assert_eq!(rows.len(), 329 * 29);
    let e = json(&run(&["energy", "--n", "4", "--s", "1"]));
    let h = e["local_energy"].as_array().unwrap();
    assert_eq!(h.len(), 29 * 29);
    assert!(h.iter().all(|x| (-2..=0).contains(&x["h"].as_i64().unwrap())));
    let d = e["intrinsic_energy"]["1"].as_array().unwrap();
    assert_eq!(d.iter().filter(|x| x["d"] == -1).count(), 1);
}

#[test]
fn worked_examples_replay() {
    let out = run(&["example", "--id", "lecouvey-iota"]);
    assert!(out.status.success());
    let j = json(&out);
    let ex = &j["examples"]["lecouvey-iota"];
    assert_eq!(ex["computed"], ex["expected"]);
    assert_eq!(ex["computed"].as_array().unwrap().len(), 5);
    assert!(run(&["example"]).status.success());
}

#[test]
fn errors_are_json_with_nonzero_exit() {
    let cases: [(&[&str], &str); 5] = [
        (&["build", "--n", "3"], "UNSUPPORTED_RANK"),
        (&["build", "--n", "4", "--s", "2", "--budget", "10"], "BUDGET_EXCEEDED"),
        (&["xsum", "--n", "4"], "INVALID_CONFIG"),
        (&["example", "--id", "nope"], "INVALID_CONFIG"),
        (&["verify", "--format", "dot"], "INVALID_CONFIG"),
    ];
    for (args, code) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error_code(&out), code, "{args:?}");
    }
}

#[test]
fn writes_to_the_output_file() {
    let dir = std::env::temp_dir().join(format!("krcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.json");
    let out = run(&["build", "--n", "4", "--s", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["s"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
