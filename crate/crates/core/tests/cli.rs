use std::process::{Command, Output};

fn projrich(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projrich"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn genfun_examples() {
    let o = projrich(&["genfun", "--family", "typeA", "--k", "1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,3,3");
    let o = projrich(&["genfun", "--family", "typeC", "--n", "2", "--at-one"]);
    assert_eq!(stdout(&o).trim(), "13");
    let o = projrich(&["genfun", "--family", "typeB", "--n", "1", "--rank-poly"]);
    assert_eq!(stdout(&o).trim(), "2,1");
    let o = projrich(&["genfun", "--family", "typeD", "--n", "2", "--rank-poly"]);
    assert_eq!(stdout(&o).trim(), "4,4,1");
}

#[test]
fn genfun_formats() {
    let o = projrich(&[
        "genfun", "--family", "typeA", "--k", "2", "--n", "4", "--format", "csv",
    ]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("type,params,F,A,F(1)"));
    assert_eq!(
        lines.next(),
        Some("typeA,k=2;n=4,\"1,4,10,12,6\",\"6,12,10,4,1\",33")
    );
    let o = projrich(&[
        "genfun",
        "--family",
        "brute",
        "--type",
        "A",
        "--rank",
        "2",
        "--coweight",
        "1,0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "brute");
    assert_eq!(v["f"], serde_json::json!([1, 3, 3]));
    assert_eq!(v["f_at_one"], 7);
}

#[test]
fn genfun_input_errors() {
    assert_eq!(
        projrich(&["genfun", "--family", "typeA", "--k", "3", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projrich(&["genfun", "--family", "typeC", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projrich(&["genfun", "--family", "typeE", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projrich(&["genfun", "--family", "brute", "--type", "A"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn poset_dumps() {
    let o = projrich(&["poset", "--type", "A", "--rank", "2", "--coweight", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 7);
    assert_eq!(v["admissible"].as_array().unwrap().len(), 7);
    assert_eq!(v["diagnostics"]["eulerian"], true);
    let o = projrich(&["poset", "--type", "A", "--rank", "2", "--coweight", "0,0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 1);
    let o = projrich(&[
        "poset",
        "--type",
        "A",
        "--rank",
        "2",
        "--coweight",
        "1,0",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn poset_input_errors() {
    assert_eq!(
        projrich(&["poset", "--type", "A", "--rank", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projrich(&["poset", "--type", "A", "--rank", "2", "--coweight", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projrich(&["poset", "--type", "A", "--rank", "2", "--coweight", "-1,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projrich(&["poset", "--type", "G", "--rank", "2", "--coweight", "1,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projrich(&["poset", "--type", "D", "--rank", "2", "--coweight", "1,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_suites_pass() {
    for suite in [
        "combinatorics",
        "cohomology",
        "ktheory",
        "genfun",
        "demazure",
    ] {
        let o = projrich(&[
            "verify",
            "--suite",
            suite,
            "--type",
            "A",
            "--rank",
            "2",
            "--coweight",
            "1,0",
            "--max-len",
            "4",
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{suite}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        for r in v.as_array().unwrap() {
            assert_eq!(r["n_failed"], 0);
            assert!(r["failures"].as_array().unwrap().is_empty());
        }
    }
}

#[test]
fn injected_sign_flip_fails() {
    let o = projrich(&[
        "verify",
        "--suite",
        "ktheory",
        "--type",
        "A",
        "--rank",
        "2",
        "--coweight",
        "1,0",
        "--max-len",
        "3",
        "--inject-sign-flip",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let main = &v[0];
    assert!(main["n_failed"].as_u64().unwrap() > 0);
    assert!(!main["failures"].as_array().unwrap().is_empty());
}

#[test]
fn printed_matrix_identity_is_reported_failing() {
    let o = projrich(&[
        "verify",
        "--suite",
        "matrix",
        "--type",
        "A",
        "--rank",
        "1",
        "--coweight",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["n_failed"], 1);
    assert_eq!(v[1]["n_failed"], 0);
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "demazure",
        "--type",
        "B",
        "--rank",
        "2",
        "--coweight",
        "1,0",
        "--seed",
        "9",
    ];
    assert_eq!(projrich(&args).stdout, projrich(&args).stdout);
}

#[test]
fn verify_csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("projrich-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let o = projrich(&[
        "verify",
        "--suite",
        "genfun",
        "--type",
        "A",
        "--rank",
        "3",
        "--coweight",
        "0,1,0",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("theorem,instance,n_checked,n_failed\n"));
    assert!(text.contains(",0\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_bounds_are_input_errors() {
    let o = projrich(&[
        "verify",
        "--suite",
        "demazure",
        "--type",
        "A",
        "--rank",
        "2",
        "--coweight",
        "1,0",
        "--max-len",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = projrich(&[
        "verify",
        "--suite",
        "nothing",
        "--type",
        "A",
        "--rank",
        "2",
        "--coweight",
        "1,0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
