use std::path::PathBuf;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::Value;

use ree_mobius_cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    let mut argv = vec!["ree-mobius"];
    argv.extend_from_slice(args);
    run(argv)
}

fn json(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.display().to_string()
}

#[test]
fn count_reports_d() {
    let doc = json(&["count", "--n", "3", "--target", "f2", "--d"]);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "count");
    assert_eq!(doc["results"]["d"], "3357637312");
    assert_eq!(doc["results"]["d_scope"], "published");
    assert_eq!(doc["results"]["agree"], true);

    let doc = json(&["count", "--n", "3", "--target", "c3c3", "--d"]);
    assert_eq!(doc["results"]["d_scope"], "extension beyond paper");

    let doc = json(&["count", "--n", "5", "--target", "hecke3"]);
    assert!(doc["results"].get("d").is_none());
}

#[test]
fn prob_is_exact() {
    let doc = json(&["prob", "--n", "3", "--spec", "2,3"]);
    assert_eq!(doc["results"]["probability"]["num"], "648");
    assert_eq!(doc["results"]["probability"]["den"], "703");
    assert_eq!(doc["results"]["decimal"], "0.921763869132");
}

#[test]
fn numbers_round_trip() {
    let doc = json(&["prob", "--n", "7", "--spec", "inf,inf"]);
    let p = &doc["results"]["probability"];
    let num: BigUint = p["num"].as_str().unwrap().parse().unwrap();
    let den: BigUint = p["den"].as_str().unwrap().parse().unwrap();
    let r = BigRational::new(num.clone().into(), den.clone().into());
    assert_eq!(r.numer().to_string(), num.to_string());
    assert_eq!(r.denom().to_string(), den.to_string());

    let doc = json(&["mobius", "--n", "9"]);
    for class in doc["results"]["classes"].as_array().unwrap() {
        for (k, v) in class.as_object().unwrap() {
            assert!(v.is_string(), "{k}");
        }
    }
}

#[test]
fn mobius_table_and_csv() {
    let doc = json(&["mobius", "--n", "3"]);
    let classes = doc["results"]["classes"].as_array().unwrap();
    let e = classes.iter().find(|c| c["tag"] == "E").unwrap();
    assert_eq!(e["class_size"], "59960979");
    assert_eq!(e["mobius"], "-21");
    assert_eq!(doc["results"]["group_order"], "10073444472");

    let out = cli(&["mobius", "--n", "3", "--format", "csv"]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next().unwrap(), "tag,h,label,subgroup_order,normaliser_order,mobius,class_size");
    assert_eq!(lines.count(), classes.len());

    let out = cli(&["count", "--n", "3", "--target", "f2", "--d", "--format", "csv"]);
    assert!(out.stdout.lines().nth(1).unwrap().contains(",3357637312,published"));
}

#[test]
fn verify_passes_with_discrepancy_channel() {
    let doc = json(&["verify", "--n", "9"]);
    let checks = doc["results"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    let c3 = checks.iter().find(|c| c["name"] == "closed_form c3-inf").unwrap();
    assert_eq!(c3["status"], "discrepancy");
    assert_eq!(doc["results"]["summary"]["fail"], "0");
}

#[test]
fn verify_deep() {
    let doc = json(&["verify", "--n", "3", "--deep"]);
    let checks = doc["results"]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "defining_relation n=45"));
    assert_eq!(doc["results"]["summary"]["fail"], "0");
}

#[test]
fn oracle_on_small_groups() {
    let doc = json(&["oracle", "--group", &data("a5.txt"), "--target", "f2"]);
    let r = &doc["results"];
    assert_eq!(r["group_order"], "60");
    assert_eq!(r["subgroup_count"], "59");
    assert_eq!(r["brute_force"], "2280");
    assert_eq!(r["inversion"], "2280");
    assert_eq!(r["maximal_intersection"], true);

    let doc = json(&["oracle", "--group", &data("s4.txt"), "--target", "hecke3"]);
    assert_eq!(doc["results"]["subgroup_count"], "30");
    assert_eq!(doc["results"]["brute_force"], "24");
}

#[test]
fn oracle_bound_and_bad_input() {
    let out = cli(&["oracle", "--group", &data("a5.txt"), "--bound", "50"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("exceeds"));

    let dir = std::env::temp_dir().join(format!("ree-mobius-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "(1 2)\n(1 2\n").unwrap();
    let out = cli(&["oracle", "--group", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"));

    let out = cli(&["oracle", "--group", dir.join("missing.txt").to_str().unwrap()]);
    assert_eq!(out.code, 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "--n", "4", "--target", "f2"][..],
        &["count", "--n", "1", "--target", "f2"],
        &["count", "--n", "3", "--target", "hecke4"],
        &["prob", "--n", "3", "--spec", "2,5"],
        &["prob", "--n", "3", "--spec", "2,3", "--format", "csv"],
        &["frobnicate"],
        &["count", "--target", "f2"],
    ] {
        assert_eq!(cli(args).code, 2, "{args:?}");
    }
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify"));
}

#[test]
fn output_is_deterministic() {
    let a = cli(&["verify", "--n", "15"]);
    let b = cli(&["verify", "--n", "15"]);
    assert_eq!(a, b);
}
