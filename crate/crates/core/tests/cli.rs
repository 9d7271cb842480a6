use std::process::{Command, Output};

fn wallcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wallcount")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn values(o: &Output) -> Vec<String> {
    stdout(o).lines().map(|l| l.split_whitespace().last().unwrap().to_string()).collect()
}

#[test]
fn fbar_determinant_bfile() {
    let o = wallcount(&["sequence", "--family", "fbar", "-m", "3", "--n-max", "2", "--method", "determinant"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0 1\n1 10\n2 281\n");
}

#[test]
fn q_catalan_by_genfun() {
    let o = wallcount(&["sequence", "--family", "q", "-k", "1", "-l", "1", "--n-max", "3", "--method", "genfun"]);
    assert!(o.status.success());
    assert_eq!(values(&o), ["1", "2", "5", "14"]);
}

#[test]
fn fr_zeroth_term() {
    let o = wallcount(&["sequence", "--family", "fr", "-k", "2", "-l", "2", "-r", "2", "--n-max", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0 1\n");
}

#[test]
fn offset_and_json() {
    let o = wallcount(&["sequence", "--family", "fbar", "-m", "2", "--n-max", "2", "--offset", "1"]);
    assert_eq!(stdout(&o), "1 1\n2 3\n3 22\n");
    let o = wallcount(&["sequence", "--family", "fbar", "-m", "3", "--n-max", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["family"], "fbar");
    assert_eq!(v["params"]["m"], 3);
    assert_eq!(v["method"], "dp");
    assert_eq!(v["values"], serde_json::json!(["1", "10", "281"]));
}

#[test]
fn every_method_prints_the_same_sequence() {
    let methods = ["tableaux", "dp", "determinant", "recursion", "genfun", "exp", "multisection"];
    let outputs: Vec<String> = methods
        .iter()
        .map(|m| stdout(&wallcount(&["sequence", "--family", "fbar", "-m", "2", "--n-max", "4", "--method", m])))
        .collect();
    assert!(outputs.iter().all(|o| o == &outputs[0]), "{outputs:?}");
    assert_eq!(outputs[0].lines().last(), Some("4 2306"));
}

#[test]
fn invalid_parameters() {
    assert_eq!(wallcount(&["sequence", "--family", "fr", "-l", "2", "-r", "5"]).status.code(), Some(2));
    assert_eq!(wallcount(&["sequence", "--family", "q", "--method", "determinant"]).status.code(), Some(2));
    assert_eq!(wallcount(&["sequence", "--family", "fbar", "-m", "1", "--method", "recursion"]).status.code(), Some(2));
    assert_eq!(wallcount(&["tutte", "NXE"]).status.code(), Some(2));
}

#[test]
fn crosscheck_fbar_grid_agrees() {
    let o = wallcount(&["crosscheck", "--family", "fbar", "--max-param", "3", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("all methods agree on 3 parameter sets"));
    assert!(!out.contains('✗'));
}

#[test]
fn crosscheck_fr_grid_agrees() {
    let o = wallcount(&["crosscheck", "--family", "fr", "--max-param", "3", "--n-max", "5", "--methods", "dp,genfun"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn crosscheck_reports_injected_fault() {
    let o = wallcount(&[
        "crosscheck", "--family", "fbar", "--max-param", "2", "--n-max", "3", "--inject-fault", "multisection",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("mismatch: fbar m=1 n=3 multisection="), "{out}");
    assert!(out.contains('✗'));
}

#[test]
fn identities_default_bounds_pass() {
    let o = wallcount(&["identities"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL"));
    for name in ["tutte-append-recursion", "binomial-lemma:weighted-sum", "tableaux-paths-partitions", "F_1=prod(w)"] {
        assert!(out.contains(name), "missing {name}");
    }
}

#[test]
fn identities_subsets() {
    let o = wallcount(&["identities", "--only", "tutte", "--max-len", "8"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pass  tutte-append-recursion  max-len=8 paths=511"));

    let a = wallcount(&["identities", "--only", "bijection", "-m", "8", "--samples", "16", "--seed", "7"]);
    let b = wallcount(&["identities", "--only", "bijection", "-m", "8", "--samples", "16", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 8);
}

#[test]
fn debug_commands() {
    let o = wallcount(&["tutte", "NE"]);
    assert_eq!(stdout(&o), "1·y + 1·z\nt(1,1) = 2\n");
    let o = wallcount(&["tableaux", "-m", "3", "--periodic", "2", "--count-only"]);
    assert_eq!(stdout(&o), "281\n");
    let o = wallcount(&["tableaux", "-m", "2", "--walls", "2"]);
    assert!(o.status.success());
    let o = wallcount(&["series", "--family", "q", "--order", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 3);
    assert_eq!(v["coefficients"][3]["num"], "14");
}
