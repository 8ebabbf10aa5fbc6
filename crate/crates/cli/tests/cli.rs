use std::process::{Command, Output};

fn trihex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trihex"))
        .args(args)
        .env_remove("TRIHEX_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_single_row() {
    let out = trihex(&["count", "--v", "28"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "V,sigma,delta,mu,nu,trihexes,gamma,rot_classes\n28,8,2,2,0,4,3,1\n"
    );
}

#[test]
fn count_golden_rows() {
    let text = stdout(&trihex(&["count", "--from", "100", "--to", "120"]));
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 1 + 6);
    let v112: Vec<u64> = rows[4].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!((v112[0], v112[1], v112[5], v112[6]), (112, 56, 20, 13));
    let last: Vec<u64> = rows[6].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!((last[0], last[5], last[6]), (120, 24, 14));
    assert!(!text.contains('\r'));
}

#[test]
fn count_is_deterministic_across_jobs() {
    let args = |jobs: &'static str| ["--jobs", jobs, "count", "--from", "4", "--to", "2000"];
    let one = trihex(&args("1")).stdout;
    assert_eq!(one, trihex(&args("4")).stdout);
    assert_eq!(one, trihex(&args("0")).stdout);
    let verify = |jobs| {
        trihex(&[
            "--jobs",
            jobs,
            "verify",
            "--from",
            "4",
            "--to",
            "80",
            "--with-graphs",
        ])
        .stdout
    };
    assert_eq!(verify("1"), verify("3"));
}

#[test]
fn count_structured_has_schema_version() {
    let out = trihex(&["count", "--v", "144", "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["rows"][0]["V"], 144);
    assert_eq!(doc["rows"][0]["nu"], 1);
}

#[test]
fn bad_vertex_counts_exit_2() {
    for args in [
        &["count", "--v", "6"][..],
        &["count", "--v", "0"],
        &["count", "--from", "8", "--to", "4"],
        &["count", "--from", "4", "--to", "10"],
        &["count"],
        &["enumerate", "--v", "30"],
        &["verify", "--v", "2"],
    ] {
        let out = trihex(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(trihex(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(trihex(&["build", "--sig", "1,0,2"]).status.code(), Some(2));
    assert_eq!(trihex(&["build", "--sig", "a,b"]).status.code(), Some(2));
    assert_eq!(trihex(&["congruence", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn enumerate_streams() {
    let text = stdout(&trihex(&[
        "enumerate",
        "--v",
        "28",
        "--stream",
        "coinciding",
    ]));
    assert_eq!(text, "(6,0,2)\n(6,0,4)\n");
    let reps = stdout(&trihex(&["enumerate", "--v", "112", "--stream", "reps"]));
    assert_eq!(reps.lines().count(), 20);
    let classes = stdout(&trihex(&["enumerate", "--v", "112", "--stream", "classes"]));
    assert_eq!(classes.lines().count(), 13);
    let all = stdout(&trihex(&["enumerate", "--v", "16"]));
    assert_eq!(all.lines().count(), 7);

    let out = trihex(&[
        "enumerate",
        "--v",
        "28",
        "--stream",
        "self-mirror",
        "--format",
        "structured",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["stream"], "self-mirror");
    for sig in doc["signatures"].as_array().unwrap() {
        let [s, b, f] = [0, 1, 2].map(|i| sig[i].as_u64().unwrap());
        assert_eq!((2 * f + b + 1) % (s + 1), 0);
    }
}

#[test]
fn build_writes_planar_code_and_census() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.plc");
    let out = trihex(&[
        "build",
        "--sig",
        "6,2,1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("84 vertices"), "{stderr}");
    assert!(stderr.contains("4 faces of length 3") && stderr.contains("40 faces of length 6"));
    let bytes = std::fs::read(&path).unwrap();
    assert!(bytes.starts_with(b">>planar_code<<"));
    assert_eq!(bytes.len(), 15 + 1 + 4 * 84);
}

#[test]
fn build_dot_and_structured() {
    let dot = stdout(&trihex(&["build", "--sig", "3,1,2", "--format", "dot"]));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 48);
    let out = trihex(&["build", "--sig", "(0,0,0)", "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["faces"], serde_json::json!({"3": 4}));
}

#[test]
fn verify_passes() {
    let out = trihex(&["verify", "--from", "4", "--to", "200"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("ok: 50 vertex counts"));
    let out = trihex(&[
        "verify",
        "--v",
        "48",
        "--with-graphs",
        "--format",
        "structured",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["failures"], serde_json::json!([]));
}

#[test]
fn congruence_examples() {
    assert_eq!(
        stdout(&trihex(&["congruence", "--n", "7"])),
        "2 4\ncount: 2\n"
    );
    assert_eq!(
        stdout(&trihex(&["congruence", "--n", "3"])),
        "1\ncount: 1\n"
    );
    assert_eq!(stdout(&trihex(&["congruence", "--n", "9"])), "\ncount: 0\n");
    let text = stdout(&trihex(&["congruence", "--n", "91"]));
    assert!(text.ends_with("count: 4\n"));
}
