use std::process::{Command, Output};

fn gradekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradekit"))
        .args(args)
        .env_remove("GRADEKIT_SEED")
        .output()
        .unwrap()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn catalog_filters_by_order() {
    let o = gradekit(&["catalog", "--max-order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("S3:A3") && text.contains("C4:C2"));
    assert!(!text.contains("S4:V4"));

    let o = gradekit(&["catalog", "--json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 8);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--catalog", "S4:V4", "-p", "2", "--seed", "7"];
    let a = gradekit(&args);
    let b = gradekit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let env = Command::new(env!("CARGO_BIN_EXE_gradekit"))
        .args(["verify", "--catalog", "S4:V4", "-p", "2"])
        .env("GRADEKIT_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
}

#[test]
fn sweep_is_deterministic() {
    let a = gradekit(&["sweep", "--bound", "12", "--json"]);
    let b = gradekit(&["sweep", "--bound", "12", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_fields() {
    let o = gradekit(&["verify", "--catalog", "S3:A3", "-p", "3", "--l", "1:0", "--s", "1:1", "--which", "factorization"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &reports.as_array().unwrap()[0];
    assert_eq!(r["kind"], "graded-factorization");
    assert_eq!(r["instance"]["p"], 3);
    assert_eq!(r["instance"]["s"]["index"], 1);
    assert!(r.get("wall_time_ms").is_none());
    for c in r["claims"].as_array().unwrap() {
        if c["outcome"] == "pass" {
            assert!(c["witness"].is_string(), "{c}");
        }
    }

    let timed = gradekit(&["verify", "--catalog", "S3:A3", "-p", "3", "--timing"]);
    let reports: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(reports[0]["wall_time_ms"].is_u64());
}

#[test]
fn report_written_to_file() {
    let dir = std::env::temp_dir().join(format!("gradekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = gradekit(&["verify", "--catalog", "C4:C2", "-p", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&body).is_ok());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn splitting_degree() {
    // chosen automatically when omitted
    let o = gradekit(&["verify", "--catalog", "S3:A3", "-p", "5", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports[0]["instance"]["k"], 2);

    let o = gradekit(&["verify", "--catalog", "S3:A3", "-p", "5", "-k", "1"]);
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("-k 2"));
}

#[test]
fn unresolvable_inputs() {
    for args in [
        &["verify", "--catalog", "NOPE", "-p", "2"][..],
        &["verify", "--catalog", "S3:A3", "-p", "4"],
        &["verify", "--catalog", "S3:A3", "-p", "3", "--l", "5:0"],
        &["verify", "--catalog", "S3:A3", "-p", "3", "--s", "1:9"],
    ] {
        assert_eq!(gradekit(args).status.code(), Some(64), "{args:?}");
    }
}

#[test]
fn spec_files() {
    let groups = data("groups.txt");
    for (g, n, code) in [("D8", "C4", 0), ("D8", "Z", 0), ("D8", "F", 64), ("A4", "V4", 0)] {
        let o = gradekit(&["verify", "--spec", &groups, "--group", g, "--subgroup", n, "-p", "2"]);
        assert_eq!(o.status.code(), Some(code), "{g}:{n}");
    }
}

#[test]
fn pair_file() {
    let o = gradekit(&["verify", "--algebra", &data("dual_numbers_pair.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let claims = report["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 4);
    assert!(claims.iter().all(|c| c["outcome"] == "pass"));
}
