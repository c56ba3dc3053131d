use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const ROUND4: &str = r#"{"type":"round","n":4}"#;

fn yamabe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yamabe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is one JSON object")
}

#[test]
fn report_on_round_s4() {
    let o = yamabe(&["report", "--metric", ROUND4]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert!((v["lb_ricci"].as_f64().unwrap() - 61.562).abs() < 1e-3);
    assert!(v["margin"].as_f64().unwrap().abs() < 1e-6 * 61.562);
    assert_eq!(v["applicable"], Value::Bool(true));
    assert_eq!(v["ub_label"], "restricted upper bound");
}

#[test]
fn product_sweep_shape() {
    let o = yamabe(&[
        "sweep",
        "--family",
        "product",
        "--param",
        "delta",
        "--range",
        "0.5:2.0:0.1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("delta,rho,V,lb_ricci,const_fn_value"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 16);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), 5);
        assert!((row[0] - (0.5 + 0.1 * i as f64)).abs() < 1e-12);
    }
    // delta = 2 is the last row: lb = 8π√2, constant function = 12π√2
    let last = rows.last().unwrap();
    let pi = std::f64::consts::PI;
    assert!((last[3] - 8.0 * pi * 2f64.sqrt()).abs() < 1e-9 * last[3]);
    assert!((last[4] - 12.0 * pi * 2f64.sqrt()).abs() < 1e-9 * last[4]);
}

#[test]
fn constants_for_n3() {
    let v = json(&yamabe(&["constants", "--n", "3"]));
    let row = &v["constants"][0];
    assert_eq!(row["a_n"].as_f64(), Some(8.0));
    assert_eq!(row["p_n"].as_f64(), Some(6.0));
    assert_eq!(row["a_n_exact"], "8");
    let csv = stdout(&yamabe(&["constants", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 1 + 8);
    assert!(csv.starts_with("n,a_n,a_n_exact,p_n,p_n_exact,V_n,Y_n\n"));
}

#[test]
fn input_errors_name_the_field() {
    let cases = [
        (r#"{"type":"round"}"#, "`n`"),
        (r#"{"type":"round","n":-1}"#, "`n`"),
        (r#"{"type":"cube","n":3}"#, "`type`"),
        (r#"{"type":"warped","n":3,"phi":[0.0,0.5,0.2]}"#, "`phi`"),
        (r#"{"type":"product","p":2,"a":1.0,"q":2}"#, "`b`"),
        ("{not json", "`metric`"),
    ];
    for (spec, field) in cases {
        let o = yamabe(&["report", "--metric", spec]);
        assert_eq!(o.status.code(), Some(2), "{spec}");
        assert!(stderr(&o).contains(field), "{spec}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let o = yamabe(&[
        "sweep", "--family", "product", "--param", "eps", "--range", "0:1:0.5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`param`"));
    let o = yamabe(&[
        "sweep", "--family", "warp", "--param", "eps", "--range", "0:1",
    ]);
    assert!(stderr(&o).contains("`range`"));
    let o = yamabe(&["rearrange", "--metric", ROUND4, "--levels", "4"]);
    assert!(stderr(&o).contains("`levels`"));
}

#[test]
fn negative_ricci_is_not_applicable() {
    let spec = r#"{"type":"warped","n":4,"phi":"sin","eps":0.4}"#;
    let o = yamabe(&["report", "--metric", spec]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["applicable"], Value::Bool(false));
    assert!(v["lb_ricci"].is_null());
    assert!(v["d_interval"][1].is_null());
    for sub in ["verify-chain", "isoprofile"] {
        let o = yamabe(&[sub, "--metric", spec, "--format", "json"]);
        assert_eq!(o.status.code(), Some(3), "{sub}");
        assert_eq!(json(&o)["applicable"], Value::Bool(false));
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "sweep",
        "--family",
        "warp",
        "--param",
        "eps",
        "--range",
        "0:0.1:0.05",
        "--grid-size",
        "256",
    ];
    assert_eq!(yamabe(&args).stdout, yamabe(&args).stdout);
    let args = [
        "verify-chain",
        "--metric",
        r#"{"type":"product","p":2,"a":1.2,"q":2,"b":1.0,"grid_size":256}"#,
    ];
    assert_eq!(yamabe(&args).stdout, yamabe(&args).stdout);
}

#[test]
fn numbers_round_trip() {
    let o = yamabe(&[
        "report",
        "--metric",
        r#"{"type":"warped","n":4,"phi":"sin","eps":0.05}"#,
    ]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    for key in ["V0", "rho", "lb_ricci", "ub_numeric", "margin"] {
        let x = v[key].as_f64().unwrap();
        let printed = v[key].to_string();
        assert_eq!(printed.parse::<f64>().unwrap().to_bits(), x.to_bits());
        assert!(text.contains(&printed));
    }
}

#[test]
fn verify_chain_passes_on_positive_metrics() {
    for spec in [
        ROUND4,
        r#"{"type":"warped","n":4,"phi":"sin","eps":0.1,"grid_size":512}"#,
    ] {
        let o = yamabe(&["verify-chain", "--metric", spec]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let v = json(&o);
        assert_eq!(v["all_ok"], Value::Bool(true));
        assert_eq!(v["results"].as_array().unwrap().len(), 24);
    }
    let o = yamabe(&["verify-chain", "--metric", ROUND4, "--d-choice", "1.0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`d-choice`"));
}

#[test]
fn isoprofile_csv() {
    let o = yamabe(&[
        "isoprofile",
        "--metric",
        r#"{"type":"warped","n":4,"phi":"sin","eps":0.05}"#,
        "--d-choice",
        "pole",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("beta,h_lower,h_candidate,A,d_used"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 50);
    assert!(rows
        .iter()
        .all(|r| r[2] >= r[1] * (1.0 - 1e-6) && r[3] > 1.0));
}

#[test]
fn rearrange_outputs_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let metric = dir.path().join("metric.json");
    std::fs::write(&metric, r#"{"type":"round","n":3,"grid_size":128}"#).unwrap();
    let function = dir.path().join("f.json");
    let nodes: Vec<f64> = (0..=10)
        .map(|i| std::f64::consts::PI * i as f64 / 10.0)
        .collect();
    let values: Vec<f64> = nodes.iter().map(|r| 1.0 + r.sin()).collect();
    std::fs::write(
        &function,
        serde_json::json!({ "nodes": nodes, "values": values }).to_string(),
    )
    .unwrap();
    let out = dir.path().join("out.json");
    let m = format!("@{}", metric.display());
    let f = format!("@{}", function.display());
    let o = yamabe(&[
        "rearrange",
        "--metric",
        &m,
        "--function",
        &f,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let star: Vec<f64> = v["f_star"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(star.len(), 2 * 127 + 1);
    assert!(star.windows(2).all(|w| w[1] <= w[0]));
    assert!(star[0] <= 2.0 && star[0] > 1.99);

    let csv = stdout(&yamabe(&[
        "rearrange",
        "--metric",
        &m,
        "--function",
        "cos",
        "--format",
        "csv",
    ]));
    assert!(csv.starts_with("t,mu\n"));

    let missing = yamabe(&["report", "--metric", "@/nonexistent/metric.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!Path::new("/nonexistent").exists());
}
