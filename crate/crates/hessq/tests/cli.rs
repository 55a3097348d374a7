//! End-to-end tests driving the compiled binary: the documented commands,
//! exit codes, output determinism, and JSON round-trips.

use std::process::{Command, Output};

fn hessq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hessq"))
        .args(args)
        .env_remove("HESSQ_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("stdout is JSON")
}

#[test]
fn flagship_poincare_json() {
    let out = hessq(&[
        "poincare", "--type", "A", "--rank", "9", "--K", "2,4,5,8", "--h", "4,5,5,8,10",
        "--method", "all", "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["type"], "A");
    assert_eq!(v["rank"], 9);
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["agree"], true);
    let expected = serde_json::json!([1, 2, 4, 4, 4, 2, 1]);
    for method in ["cells", "weyltype", "product", "height-dist", "qbinomial"] {
        assert_eq!(v["methods"][method]["coeffs"], expected, "{method}");
    }
    assert_eq!(v["hessenberg"]["extended"], serde_json::json!([4, 4, 5, 5, 5, 8, 8, 8, 10, 10]));
    assert_eq!(v["theta"], serde_json::json!([1, 3, 6, 7, 9]));
    // factored form of the height-distribution product: [2]^-1 [3]^2 [4]
    assert_eq!(v["factored"], serde_json::json!([[2, -1], [3, 2], [4, 1]]));
}

#[test]
fn full_flag_a2_product() {
    let out = hessq(&[
        "poincare", "--type", "A", "--rank", "2", "--ideal", "0,1,2", "--method", "product",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["methods"]["product"]["coeffs"], serde_json::json!([1, 2, 2, 1]));
}

#[test]
fn g2_two_simples_cells() {
    let out = hessq(&[
        "poincare", "--type", "G", "--rank", "2", "--ideal", "0,1", "--method", "cells",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["methods"]["cells"]["coeffs"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["dimension"], 2);
}

#[test]
fn ideal_count_and_roots() {
    let out = hessq(&["ideals", "--type", "A", "--rank", "3", "--count", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["count"], 14);

    let out = hessq(&["roots", "--type", "G", "--rank", "2", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    let heights: Vec<u64> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["height"].as_u64().unwrap())
        .collect();
    assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
}

#[test]
fn verify_commands_and_exit_codes() {
    let out = hessq(&["verify", "--type", "B", "--rank", "3", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["thetas"], 8);

    let out = hessq(&["verify", "--type", "A", "--rank", "2", "--theta", "1", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["ideals_checked"], 2);
    assert_eq!(v["failures"], 0);

    let out = hessq(&["verify", "--type", "E", "--rank", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stderr.clone()).unwrap()).unwrap();
    assert_eq!(err["error"]["kind"], "cap-exceeded");
}

#[test]
fn invalid_inputs_exit_2() {
    let out = hessq(&["poincare", "--type", "A", "--rank", "2", "--ideal", "1,2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hessq(&["poincare", "--type", "Z", "--rank", "2", "--ideal", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hessq(&["roots", "--type", "E", "--rank", "5"]);
    assert_eq!(out.status.code(), Some(2));

    // clap usage errors also exit 2
    let out = hessq(&["poincare", "--type", "A"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_flag_and_env_are_honored() {
    let out = hessq(&[
        "poincare", "--type", "A", "--rank", "9", "--K", "2,4,5,8", "--h", "4,5,5,8,10",
        "--method", "cells", "--cap", "100",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_hessq"))
        .args(["ideals", "--type", "A", "--rank", "3", "--count"])
        .env("HESSQ_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exponents_example() {
    let out = hessq(&[
        "exponents", "--type", "A", "--rank", "9", "--ideal",
        "0,2,3,5,6,7,8,11,14,15,16,23", "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["exponents"], serde_json::json!([3, 2, 2, 2, 1, 1, 1, 0, 0]));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "poincare", "--type", "B", "--rank", "3", "--ideal", "0,1,2,3", "--format", "json",
        "--show-roots",
    ];
    let a = hessq(&args);
    let b = hessq(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));

    // verify output is byte-identical modulo the wall-time field
    let args = ["verify", "--type", "A", "--rank", "3", "--format", "json"];
    let mut a = json(&hessq(&args));
    let mut b = json(&hessq(&args));
    a["elapsed_ms"] = 0.into();
    b["elapsed_ms"] = 0.into();
    assert_eq!(a, b);
}

#[test]
fn json_round_trip_ideals_into_poincare() {
    // every emitted ideal parses back and is accepted by the poincare command
    let out = hessq(&["ideals", "--type", "B", "--rank", "2", "--theta", "1", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    let ideals = v["ideals"].as_array().unwrap();
    assert!(!ideals.is_empty());
    for ideal in ideals {
        let list: Vec<String> = ideal
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap().to_string())
            .collect();
        let arg = list.join(",");
        let out = hessq(&[
            "poincare", "--type", "B", "--rank", "2", "--theta", "1", "--ideal", &arg,
            "--format", "json",
        ]);
        assert!(out.status.success(), "ideal {arg}");
        let p = json(&out);
        assert_eq!(p["agree"], true);
        assert_eq!(p["ideal"].as_array().unwrap().len(), list.len());
    }
}

#[test]
fn csv_rows_per_method() {
    let out = hessq(&[
        "poincare", "--type", "A", "--rank", "2", "--ideal", "0,1,2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // four general methods plus the recovered type-A q-binomial route
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"cells,1,2,2,1"));
    assert!(lines.contains(&"product,1,2,2,1"));
    assert!(lines.contains(&"qbinomial,1,2,2,1"));
}
