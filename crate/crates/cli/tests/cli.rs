use std::process::{Command, Output};

use serde_json::Value;

fn rimhook(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rimhook"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = rimhook(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    rimhook(args).status.code().unwrap()
}

#[test]
fn core_of_staircase_is_empty() {
    assert_eq!(stdout(&["core", "3,2,1", "--ell", "3", "--plain"]), "-\n");
    let v: Value = serde_json::from_str(&stdout(&["core", "3,2,1", "--ell", "3"])).unwrap();
    assert_eq!(v["parts"], serde_json::json!([]));
    assert_eq!(v["text"], "-");
}

#[test]
fn boolean_queries() {
    assert_eq!(
        stdout(&["is-jm", "10,8,3,2,2,1,1,1,1,1", "--ell", "3"]),
        "true\n"
    );
    assert_eq!(
        stdout(&["is-generalized", "3,1,1,1", "--ell", "3"]),
        "false\n"
    );
    assert_eq!(code(&["is-jm", "2,1", "--ell", "3", "--assert"]), 1);
    assert_eq!(code(&["is-jm", "1,1,1", "--ell", "3", "--assert"]), 0);
    assert_eq!(stdout(&["is-weak", "2,1", "--ell", "3"]), "true\n");
}

#[test]
fn compose_worked_example() {
    let out = stdout(&[
        "compose", "--mu", "1", "--r", "3", "--s", "2", "--rho", "2,1,1,1", "--sigma", "2,1",
        "--ell", "3", "--plain",
    ]);
    assert_eq!(out, "15,10,8,6,2,2,2,2,2,1,1,1,1,1\n");
}

#[test]
fn decompose_feeds_compose() {
    for lam in ["15,10,8,6,2,2,2,2,2,1,1,1,1,1", "1,1,1", "3", "4,2", "-"] {
        let q: Value = serde_json::from_str(&stdout(&["decompose", lam, "--ell", "3"])).unwrap();
        let text = |key: &str| {
            let parts: Vec<String> = q[key]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect();
            if parts.is_empty() {
                "-".to_string()
            } else {
                parts.join(",")
            }
        };
        let (mu, rho, sigma) = (text("mu"), text("rho"), text("sigma"));
        let (r, s) = (q["r"].to_string(), q["s"].to_string());
        let back = stdout(&[
            "compose", "--mu", &mu, "--r", &r, "--s", &s, "--rho", &rho, "--sigma", &sigma,
            "--ell", "3", "--plain",
        ]);
        assert_eq!(back.trim(), lam);
    }
}

#[test]
fn crystal_exports() {
    let dot = stdout(&[
        "crystal", "--model", "reg", "--ell", "3", "--max-n", "1", "--format", "dot",
    ]);
    assert_eq!(dot.matches("->").count(), 1);
    assert!(dot.contains("\"-\" -> \"1\" [label=\"0\"];"));

    let ladd: Value = serde_json::from_str(&stdout(&[
        "crystal", "--model", "ladd", "--ell", "3", "--max-n", "4", "--format", "json",
    ]))
    .unwrap();
    let node = ladd["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .find(|n| n["partition"] == "1,1,1,1")
        .expect("1,1,1,1 is a ladder node");
    assert_eq!(node["flags"]["jm"], true);

    // 3-regular partitions of rank <= 4, by hand.
    let reg: Value = serde_json::from_str(&stdout(&[
        "crystal", "--model", "reg", "--ell", "3", "--max-n", "4", "--format", "json",
    ]))
    .unwrap();
    let names: Vec<&str> = reg["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["partition"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["-", "1", "2", "1,1", "3", "2,1", "4", "3,1", "2,2", "2,1,1"]
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "crystal",
        "--model",
        "ladd",
        "--ell",
        "4",
        "--max-n",
        "6",
        "--format",
        "dot",
        "--flag-nodes",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify_reports() {
    let out = stdout(&[
        "verify",
        "main_theorem_JM",
        "--ell",
        "3,4,5",
        "--max-n",
        "14",
    ]);
    let reports: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 3);
    for r in &reports {
        assert_eq!(r["checked"], 508);
        assert_eq!(r["violations"], serde_json::json!([]));
    }
    assert_eq!(code(&["verify", "--all", "--ell", "3", "--max-n", "10"]), 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["verify", "bogus"]), 2);
    assert_eq!(code(&["core", "1,2", "--ell", "3"]), 2);
    assert_eq!(code(&["core", "2,1", "--ell", "2"]), 2);
    assert_eq!(code(&["sig", "2,1", "--ell", "3", "--residue", "3"]), 2);
    assert_eq!(code(&["decompose", "2,1", "--ell", "3"]), 2);
    assert_eq!(
        code(&["crystal", "--model", "bogus", "--ell", "3", "--max-n", "2"]),
        2
    );
}
