use std::path::PathBuf;
use std::process::{Command, Output};

use descartes_core::polycore::Poly;
use descartes_core::realize::Catalog;
use descartes_core::signs::{orbit, realizes, Couple};
use serde_json::Value;

fn descartes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descartes")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = descartes(&all);
    (serde_json::from_str(&stdout(&out)).expect("json output"), code(&out))
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("descartes-cli-{}-{name}", std::process::id()))
}

fn pairs_of(v: &Value) -> Vec<(u64, u64)> {
    v["admissible"].as_array().unwrap().iter().map(|p| (p[0].as_u64().unwrap(), p[1].as_u64().unwrap())).collect()
}

#[test]
fn pairs_lists_descartes_pair_and_admissible_pairs() {
    let (v, c) = json(&["pairs", "+----++++-"]);
    assert_eq!(c, 0);
    assert_eq!((v["c"].as_u64(), v["p"].as_u64()), (Some(3), Some(6)));
    let expected: Vec<(u64, u64)> = [1, 3].iter().flat_map(|&p| [0, 2, 4, 6].map(move |n| (p, n))).collect();
    assert_eq!(pairs_of(&v), expected);

    let (v, _) = json(&["pairs", "++-++"]);
    assert_eq!((v["c"].as_u64(), v["p"].as_u64()), (Some(2), Some(2)));
    assert_eq!(pairs_of(&v).len(), 4);

    let (v, _) = json(&["pairs", "+-"]);
    assert_eq!(pairs_of(&v), vec![(1, 0)]);
}

#[test]
fn malformed_patterns_are_usage_errors() {
    for bad in ["+x-", "-+", "+"] {
        let out = descartes(&["pairs", bad]);
        assert_eq!(code(&out), 2, "{bad}");
    }
    assert_eq!(code(&descartes(&["orbit", "+-+", "1", "0"])), 2);
    assert_eq!(code(&descartes(&["realize", "++", "1", "0"])), 2);
    assert_eq!(code(&descartes(&["catalog", "10"])), 2);
    assert_eq!(code(&descartes(&["paper-verify", "check_nothing"])), 2);
}

#[test]
fn orbit_members_and_generators() {
    let (v, c) = json(&["orbit", "+----++++-", "1", "6"]);
    assert_eq!(c, 0);
    let members = v["members"].as_array().unwrap();
    assert_eq!(members.len(), 2);
    assert_eq!(members[0]["action"], "identity");

    let grabiner = Couple::parse("++-++", 2, 0).unwrap();
    let (v, _) = json(&["orbit", "++-++", "2", "0"]);
    let listed: Vec<Couple> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| Couple::parse(m["pattern"].as_str().unwrap(), m["pos"].as_u64().unwrap() as usize, m["neg"].as_u64().unwrap() as usize).unwrap())
        .collect();
    let closure: Vec<Couple> = orbit(&grabiner).into_iter().map(|(c, _)| c).collect();
    assert_eq!(listed, closure);

    let (v, _) = json(&["orbit", "+-", "1", "0"]);
    assert_eq!(v["members"].as_array().unwrap().len(), 2);
}

fn coefficients(v: &Value) -> Vec<String> {
    v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect()
}

#[test]
fn realized_witnesses_reverify_through_verify() {
    let cases = [("+--+", 0, 1), ("+-+", 0, 0), ("++-++", 2, 2), ("+-+-+-", 3, 0), ("++--+--++", 4, 2)];
    for (pattern, pos, neg) in cases {
        let (pos_s, neg_s) = (pos.to_string(), neg.to_string());
        let (v, c) = json(&["realize", pattern, &pos_s, &neg_s]);
        assert_eq!(c, 0, "{pattern}");
        let coeffs = coefficients(&v);
        let poly = Poly::from_leading_texts(&coeffs).unwrap();
        assert!(realizes(&poly, &Couple::parse(pattern, pos, neg).unwrap()));

        let inline = coeffs.join(",");
        let out = descartes(&["verify", pattern, &pos_s, &neg_s, "--coeffs", &inline]);
        assert_eq!(code(&out), 0, "{pattern}: {}", stdout(&out));

        let path = temp_path(&format!("witness-{pos}-{neg}.json"));
        std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
        let out = descartes(&["verify", pattern, &pos_s, &neg_s, "--file", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        std::fs::remove_file(path).ok();
    }
}

#[test]
fn low_degree_examples() {
    let (v, _) = json(&["realize", "+-+", "0", "0"]);
    let poly = Poly::from_leading_texts(&coefficients(&v)).unwrap();
    assert_eq!(poly.deg(), 2);
    assert_eq!(v["report"]["pairs"], 1);

    let (v, _) = json(&["realize", "+--+", "0", "1"]);
    assert_eq!(coefficients(&v), ["1", "-2", "-3", "10"]);
}

#[test]
fn exceptional_couple_is_unknown_with_citation() {
    let (v, c) = json(&["realize", "+----++++-", "1", "6", "--budget", "100000"]);
    assert_eq!(c, 3);
    assert_eq!(v["status"], "unknown");
    assert_eq!(v["budget"], 100000);
    assert!(v["known_nonrealizable"].as_str().unwrap().contains("degree-9"));
}

#[test]
fn verify_examples() {
    let (v, c) = json(&["verify", "+-+", "0", "0", "--coeffs", "1,-1,1"]);
    assert_eq!((c, v["passed"].as_bool()), (0, Some(true)));
    let (v, c) = json(&["verify", "+-+", "2", "0", "--coeffs", "1,-1,1"]);
    assert_eq!((c, v["passed"].as_bool()), (1, Some(false)));
    assert_eq!(v["report"]["pairs"], 1);
    let (v, c) = json(&["verify", "+-+", "0", "0", "--coeffs", "1 0 1"]);
    assert_eq!(c, 1);
    assert_eq!(v["zero_coefficient"], 1);
    let out = descartes(&["verify", "+-+", "0", "0", "--coeffs", "1,-1,1/0"]);
    assert_eq!(code(&out), 2);
    let out = descartes(&["verify", "+-+", "0", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn catalogs_are_reproducible_across_job_counts() {
    let a = descartes(&["catalog", "4", "--deterministic", "--jobs", "1"]);
    let b = descartes(&["catalog", "4", "--deterministic", "--jobs", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let cat = Catalog::from_json(&stdout(&a)).expect("catalog reloads and re-verifies");
    assert_eq!(cat.degree, 4);
    assert!(cat.generated_at.is_none());
    assert!(String::from_utf8(a.stderr).unwrap().contains("degree 4"));

    let stamped = descartes(&["catalog", "2"]);
    assert!(stdout(&stamped).contains("\"generated-at\""));
}

#[test]
fn catalog_out_file_and_summary() {
    let path = temp_path("catalog3.json");
    let out = descartes(&["catalog", "3", "--deterministic", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("realized 16"));
    let cat = Catalog::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(cat.entries.iter().all(|e| e.status.is_realized()));
    std::fs::remove_file(path).ok();
}

#[test]
fn paper_verify_single_checks() {
    let (v, c) = json(&["paper-verify", "check_root_digits", "--deterministic"]);
    assert_eq!(c, 0);
    let check = &v["checks"][0];
    assert_eq!(check["status"], "pass");
    assert!(check["assertions"].as_u64().unwrap() >= 25);
    assert!(v.get("generated-at").is_none());

    let (v, c) = json(&["paper-verify", "check_resultants", "--deterministic"]);
    assert_eq!(c, 0);
    assert_eq!(v["checks"][0]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn paper_verify_all_reports_every_check_and_matching_exit() {
    let a = descartes(&["paper-verify", "--deterministic", "--points", "20"]);
    let b = descartes(&["paper-verify", "--deterministic", "--points", "20", "--jobs", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 7);
    let all_pass = checks.iter().all(|c| c["status"] == "pass");
    assert_eq!(code(&a), if all_pass { 0 } else { 1 });
}

#[test]
fn figure_data_is_csv() {
    let out = descartes(&["figure-data", "--nt", "3", "--nw", "3", "--t-min", "-1", "--t-max", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,w,sgnH,sgnA5,sgnA4");
    assert_eq!(lines.len(), 10);
    assert_eq!(code(&descartes(&["figure-data", "--nt", "1"])), 2);
    assert_eq!(code(&descartes(&["figure-data", "--format", "json"])), 2);
}
