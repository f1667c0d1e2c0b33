use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affinekit"))
        .args(args)
        .env_remove("AFFINEKIT_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn record<'a>(report: &'a serde_json::Value, name: &str) -> &'a serde_json::Value {
    report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == name)
        .unwrap_or_else(|| panic!("no record {name}"))
}

#[test]
fn roots_window_counts() {
    let out = run(&["roots", "--algebra", "A1x1", "--window", "-2:2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["command"], "roots");
    assert_eq!(record(&r, "real_roots")["actual"], "10");
    assert_eq!(record(&r, "imaginary_roots")["actual"], "4");
}

#[test]
fn prop42_csv_matches_case_split() {
    let out = run(&["prop42", "--n", "6", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let n = 6;
    let mut rows = 0;
    for (i, row) in rdr.records().enumerate() {
        let row = row.unwrap();
        let k = i as i64 + 1;
        assert_eq!(row[0].parse::<i64>().unwrap(), k);
        for l in 1..n {
            let expect = if l > k && n < k + l {
                "4"
            } else if l <= k && n >= k + l {
                "-4"
            } else {
                "0"
            };
            assert_eq!(&row[l as usize], expect, "entry ({k},{l})");
        }
        rows += 1;
    }
    assert_eq!(rows, 5);
}

#[test]
fn multinomial_suite_passes() {
    let out = run(&["identities", "--suite", "multinomial", "--max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let recs = r["records"].as_array().unwrap();
    assert_eq!(recs.len(), 5 * 6 * 3);
    assert!(recs.iter().all(|x| x["status"] == "pass"));
}

#[test]
fn verification_failure_exits_with_2() {
    // The literal pairing vanishes identically, so the case split fails.
    let out = run(&["prop42", "--n", "5", "--literal", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["records"]
        .as_array()
        .unwrap()
        .iter()
        .any(|x| x["status"] == "fail"));
}

#[test]
fn input_errors_exit_with_1() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["roots", "--window", "3:1"]).status.code(), Some(1));
    assert_eq!(run(&["roots", "--algebra", "G7x1"]).status.code(), Some(1));
    assert_eq!(run(&["probe-bounded", "--factors", "3"]).status.code(), Some(1));
    // Tables only for tabular commands.
    assert_eq!(run(&["identities", "--suite", "multinomial", "--format", "csv"]).status.code(), Some(1));
}

#[test]
fn config_file_and_reruns_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("affinekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.json");
    std::fs::write(&cfg, r#"{"command": "identities", "suite": "composition", "samples": 6, "seed": 11}"#).unwrap();
    let a = run(&["--config", cfg.to_str().unwrap()]);
    let b = run(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["config_echo"]["seed"], 11);
    assert_eq!(r["config_echo"]["command"]["identities"]["samples"], 6);
    // A different seed draws different samples but still passes.
    let c = run(&["--config", cfg.to_str().unwrap(), "--seed", "12"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(json(&c)["config_echo"]["seed"], 12);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn demo_commands_report_passes() {
    for args in [
        &["algebra-info", "--algebra", "A2x2", "--samples", "10"][..],
        &["parabolic-classify", "--algebra", "A2x1", "--phi1", "1,2,4"],
        &["cone-certificate", "--algebra", "A2x1", "--phi1", "0,0,1", "--window", "-2:2", "--samples", "10"],
        &["loop-mult", "--dense", "1/3,1/2", "--dims", "1", "--scalars", "1,2", "--samples", "40"],
        &["imverma-mult", "--lambda", "3/2"],
        &["localize-demo", "--x", "-2/3"],
        &["pm-build", "--module", "verma"],
        &["probe-bounded", "--windows", "2,3,4"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let r = json(&run(&["pm-build", "--module", "verma"]));
    assert_eq!(record(&r, "tag")["actual"], "standard");
    let csv_out = run(&["localize-demo", "--format", "csv"]);
    let text = String::from_utf8(csv_out.stdout).unwrap();
    assert!(text.starts_with("side,h,d,multiplicity"));
    assert!(text.contains("before,1/3,0,1"));
    assert!(text.contains("after,4/3,0,1"));
}

#[test]
fn thread_cap_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_affinekit"))
        .args(["roots"])
        .env("AFFINEKIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_affinekit"))
        .args(["identities", "--suite", "conjugation", "--samples", "4"])
        .env("AFFINEKIT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
