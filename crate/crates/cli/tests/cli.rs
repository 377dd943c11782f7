use std::process::{Command, Output};

use serde_json::Value;

fn dunkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn hermite_subcommand() {
    assert_eq!(stdout(&dunkl(&["hermite", "--n", "2"])), "-2,0,4\n");
    assert_eq!(stdout(&dunkl(&["hermite", "--n", "0"])), "1\n");
    // H^1_2 = 4x^2/3 - 2
    assert_eq!(
        stdout(&dunkl(&["hermite", "--n", "2", "--mu", "1"])),
        "-2,0,4/3\n"
    );
    assert_eq!(
        stdout(&dunkl(&["genhermite", "--n", "1", "--mu", "1/2"])),
        "0,1\n"
    );
    assert_eq!(
        dunkl(&["hermite", "--n", "2", "--mu", "-3/2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dunkl(&["hermite", "--n", "2", "--mu", "one"]).status.code(),
        Some(2)
    );
    let v = json(&dunkl(&["hermite", "--n", "3", "--json"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["coefficients"], serde_json::json!(["0", "-12", "0", "8"]));
}

#[test]
fn intertwine_subcommand() {
    let out = dunkl(&[
        "intertwine",
        "--mu",
        "0",
        "--method",
        "boson",
        "--poly",
        "0,0,1",
    ]);
    assert_eq!(stdout(&out), "0,0,1\n");
    let out = dunkl(&[
        "intertwine",
        "--mu",
        "1/2",
        "--method",
        "monomial",
        "--poly",
        "0,0,1",
    ]);
    assert_eq!(stdout(&out), "0,0,1/2\n");

    let outputs: Vec<Vec<u8>> = ["monomial", "hermite", "boson"]
        .iter()
        .map(|m| {
            dunkl(&[
                "intertwine",
                "--mu",
                "-2/3",
                "--method",
                m,
                "--poly",
                "-1,3,0,2/5,7,0,1",
            ])
            .stdout
        })
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));

    let v = json(&dunkl(&[
        "intertwine",
        "--mu",
        "1",
        "--method",
        "hermite",
        "--poly",
        "-2,0,4",
        "--json",
    ]));
    assert_eq!(v["mu"], "1");
    assert_eq!(v["method"], "hermite");
    assert_eq!(v["input"], serde_json::json!(["-2", "0", "4"]));
    // (H_2 - 4 H_0) / 3
    assert_eq!(v["output"], serde_json::json!(["-2", "0", "4/3"]));

    assert_eq!(
        dunkl(&["intertwine", "--mu", "-1/2", "--poly", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dunkl(&["intertwine", "--mu", "1", "--poly", "1,x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dunkl(&[
            "intertwine",
            "--mu",
            "1",
            "--method",
            "laplace",
            "--poly",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn integral_method_evaluates_at_a_point() {
    let out = dunkl(&[
        "intertwine",
        "--mu",
        "1",
        "--method",
        "integral",
        "--poly",
        "0,0,1",
        "--x0",
        "1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let value = v["value"].as_f64().unwrap();
    assert!((value - 1.0 / 3.0).abs() < 1e-12);
}

#[test]
fn apply_subcommand() {
    let out = dunkl(&["apply", "--op", "dunkl", "--mu", "1/3", "--poly", "0,1"]);
    assert_eq!(stdout(&out), "5/3\n");
    let out = dunkl(&["apply", "--op", "b-op", "--poly", "0,-12,0,8"]);
    assert_eq!(stdout(&out), "0,8\n");
    let out = dunkl(&[
        "apply",
        "--op",
        "gauged-hamiltonian",
        "--mu",
        "0",
        "--poly",
        "-2,0,4",
    ]);
    assert_eq!(stdout(&out), "-5,0,10\n");
    assert_eq!(
        dunkl(&["apply", "--op", "dunkl", "--poly", "0,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dunkl(&["apply", "--op", "number-op", "--mu", "1", "--poly", "0,1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_lemmas() {
    let out = dunkl(&["verify", "--suite", "lemmas", "--max-degree", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "lemmas");
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["cases_run"].as_u64().unwrap() > 1000);
    // default sample is sized to the degree: 30/2 + 2 = 17, but never below the 14 base values
    assert_eq!(v["mu_samples"].as_array().unwrap().len(), 17);
}

#[test]
fn verify_quadrature_with_explicit_samples() {
    let out = dunkl(&[
        "verify",
        "--suite",
        "quadrature",
        "--max-degree",
        "20",
        "--mu-samples",
        "1/4,1,5/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cases_run"], 3);
    assert_eq!(v["mu_samples"], serde_json::json!(["1/4", "1", "5/2"]));
}

#[test]
fn verify_all_is_deterministic() {
    let run = || {
        let mut v = json(&dunkl(&["verify", "--suite", "all", "--max-degree", "12"]));
        v.as_object_mut().unwrap().remove("wall_time");
        v
    };
    let first = run();
    assert_eq!(first["failures"], serde_json::json!([]));
    assert_eq!(first, run());
}

#[test]
fn verify_bad_arguments() {
    assert_eq!(
        dunkl(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
    assert_eq!(
        dunkl(&["verify", "--suite", "lemmas", "--mu-samples", "1,-1/2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dunkl(&["verify", "--max-degree", "-3"]).status.code(),
        Some(2)
    );
}

#[test]
fn quadrature_subcommand() {
    let out = dunkl(&["quadrature", "--mu", "1", "--nodes", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    let mut total = 0.0;
    for line in &lines {
        let (node, weight) = line.split_once(',').unwrap();
        // 17 significant digits: d.dddddddddddddddde±x
        assert_eq!(
            weight
                .split('e')
                .next()
                .unwrap()
                .replace(['.', '-'], "")
                .len(),
            17
        );
        assert!(node.parse::<f64>().unwrap().abs() < 1.0);
        total += weight.parse::<f64>().unwrap();
    }
    assert!((total - 1.0).abs() < 1e-14);

    assert_eq!(
        stdout(&dunkl(&["quadrature", "--mu", "0.5", "--nodes", "1"]))
            .lines()
            .count(),
        1
    );
    assert_eq!(
        dunkl(&["quadrature", "--mu", "-1", "--nodes", "4"])
            .status
            .code(),
        Some(2)
    );

    let v = json(&dunkl(&[
        "quadrature",
        "--mu",
        "2.5",
        "--nodes",
        "3",
        "--emit-rule",
    ]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["weights"].as_array().unwrap().len(), 3);
}

#[test]
fn compare_subcommand() {
    let out = dunkl(&["compare", "--mu", "1", "--max-degree", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert!(v["worst_relative_error"].as_f64().unwrap() <= 1e-11);
    assert_eq!(v["per_degree"].as_array().unwrap().len(), 11);

    let v = json(&dunkl(&[
        "compare",
        "--mu",
        "0.25",
        "--max-degree",
        "20",
        "--grid",
        "0,0.5,-0.5,1,-1",
    ]));
    assert!(v["worst_relative_error"].as_f64().unwrap() <= 1e-10);
    assert_eq!(
        dunkl(&["compare", "--mu", "-1/3", "--max-degree", "4"])
            .status
            .code(),
        Some(2)
    );
}
