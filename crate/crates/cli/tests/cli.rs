use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_digitlang"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn digitlang")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn specs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn spec(name: &str) -> String {
    specs().join(format!("{name}.json")).display().to_string()
}

fn temp_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("digitlang-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn count_l1_file() {
    let o = run(&["count", &spec("L1"), "--upto", "4"]);
    assert!(o.status.success());
    let col: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').nth(1).unwrap().to_string()).collect();
    assert_eq!(col, ["1", "9", "89", "881", "8721"]);
}

#[test]
fn count_with_oracle_columns_agree() {
    let o = run(&["count", "preset:L1", "--upto", "4", "--oracle", "--csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,count,oracle"));
    for l in lines {
        let f: Vec<&str> = l.split(',').collect();
        assert_eq!(f[1], f[2]);
    }
}

#[test]
fn count_evil_table() {
    let o = run(&["count", &spec("LJ"), "--upto", "20", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let counts: Vec<&str> = v["counts"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(counts[20], "41472");
    assert_eq!(counts[13], "1152");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(run(&["count", "preset:nope"]).status.code(), Some(2));
    assert_eq!(run(&["dfao", "preset:LJp"]).status.code(), Some(3));
    assert_eq!(run(&["eval", "preset:kempner", "--z", "1", "--depth", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn malformed_spec_reports_path() {
    let d = temp_dir("bad");
    let p = d.join("bad.json");
    std::fs::write(&p, r#"{"base": 10, "leading_zeros": "forbidden", "kind": "power_avoidance", "letter": 12, "exponent": 2}"#)
        .unwrap();
    let o = run(&["count", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("letter"));
}

#[test]
fn gf_examples() {
    let o = run(&["gf", "--base", "10", "--even", "12", "--odd", "89"]);
    assert_eq!(stdout(&o).lines().next(), Some("(1 + 10x - x^2) / (1 - 10x + x^2)"));
    let o = run(&["gf", "--base", "10", "--even", "12", "--odd", "21"]);
    assert_eq!(stdout(&o).lines().next(), Some("(1 + 11x + 9x^2) / (1 - 9x - 9x^2)"));
    let o = run(&["gf", "--base", "10", "--terms", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "20", "200", "2000"]));
}

#[test]
fn abscissa_examples() {
    let o = run(&["abscissa", &spec("kempner"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact"]["radicand"], "9");
    assert_eq!(v["exact"]["base"], 10);
    let o = run(&["abscissa", &spec("L2"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let lo: f64 = v["sigma"][0].as_str().unwrap().parse().unwrap();
    let hi: f64 = v["sigma"][1].as_str().unwrap().parse().unwrap();
    let want = (1.5 * (3.0 + 13f64.sqrt())).ln() / 10f64.ln();
    assert!(lo <= want + 1e-12 && want - 1e-12 <= hi);
    let o = run(&["abscissa", &spec("LJ"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact"]["radicand"], "24");
    assert_eq!(v["exact"]["root_index"], 6);
}

#[test]
fn manifest_written_next_to_output() {
    let d = temp_dir("manifest");
    let out = d.join("l1.txt");
    let o = run(&["count", "preset:L1", "--upto", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let m: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("l1.txt.manifest.json")).unwrap()).unwrap();
    assert_eq!(m["command"], "count");
    assert_eq!(m["parameters"]["upto"], 3);
    assert_eq!(m["spec"]["name"], "L1");
    assert_eq!(m["outputs"][0], out.display().to_string());
    let a = std::fs::read_to_string(&out).unwrap();
    run(&["count", "preset:L1", "--upto", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), a);
}

#[test]
fn oeis_offline_lookup_and_catalog() {
    let o = run(&["oeis", "counts", "preset:L1", "--upto", "10", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let numbers: Vec<&str> = v["matches"].as_array().unwrap().iter().map(|m| m["a_number"].as_str().unwrap()).collect();
    assert!(numbers.contains(&"A072256") && numbers.contains(&"A138288"));
    assert_eq!(v["degraded"], false);
    assert_eq!(run(&["oeis", "lookup", "1,9,89"]).status.code(), Some(2));
    assert!(run(&["oeis", "catalog"]).status.success());
}

#[test]
fn oeis_catalog_fails_on_missing_fixtures() {
    let d = temp_dir("fixtures");
    let o = run(&["oeis", "catalog", "--fixtures", d.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("Missing"));
}

#[test]
fn repro_subset_json() {
    let o = run(&["repro", "--only", "1,4,14", "--json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["criteria"].as_array().unwrap().len(), 3);
    assert_eq!(v["all_passed"], true);
}

#[test]
fn repro_corrupted_fixture_is_named() {
    let d = temp_dir("corrupt");
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/oeis");
    for e in std::fs::read_dir(&src).unwrap() {
        let p = e.unwrap().path();
        if p.extension().is_some_and(|x| x == "json") {
            std::fs::copy(&p, d.join(p.file_name().unwrap())).unwrap();
        }
    }
    let p = d.join("A086347.json");
    let text = std::fs::read_to_string(&p).unwrap().replacen("\"560\"", "\"561\"", 1);
    std::fs::write(&p, text).unwrap();
    let o = run(&["repro", "--only", "14", "--fixtures", d.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("A086347"));
}

#[test]
fn dfao_dot_and_linrep() {
    let o = run(&["dfao", "preset:L1", "--dot"]);
    assert!(stdout(&o).starts_with("digraph"));
    let o = run(&["linrep", "preset:L1", "--lift", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["base"], 100);
}

#[test]
fn poles_for_lifted_l1() {
    let o = run(&["poles", "preset:L1", "--lift", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dg"]["applicable"], true);
    let lo: f64 = v["simple_pole"][0].as_str().unwrap().parse().unwrap();
    assert!((lo - (5.0 + 2.0 * 6f64.sqrt()).ln() / 10f64.ln()).abs() < 1e-10);
    let o = run(&["poles", "preset:L1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dg"]["applicable"], false);
}

#[test]
fn evil_subcommands() {
    let o = run(&["evil", "count", "--upto", "100", "--closed", "--json"]);
    assert!(o.status.success());
    let o = run(&["evil", "witness", "--imax", "10"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["all_match"], true);
}

#[test]
fn summatory_and_eval() {
    assert_eq!(stdout(&run(&["summatory", "preset:L1", "100"])).trim(), "99");
    let o = run(&["eval", "preset:full", "--z", "2", "--depth", "4,30", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let z2 = std::f64::consts::PI.powi(2) / 6.0;
    assert!(v["lower"].as_f64().unwrap() <= z2 && z2 <= v["upper"].as_f64().unwrap());
}
