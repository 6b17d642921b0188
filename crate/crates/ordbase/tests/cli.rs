use std::path::PathBuf;
use std::process::{Command, Output};

use ordbase::json::PosetFile;
use ordbase_core::gallery::two_blocks_poset;
use ordbase_core::poset::FinitePoset;
use ordbase_core::random::random_poset;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordbase")).args(args).output().expect("binary runs")
}

fn stdout_lines(args: &[&str]) -> Vec<String> {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().lines().map(String::from).collect()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ordbase-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn poset_file(name: &str, p: &FinitePoset) -> String {
    let path = temp_file(name, &serde_json::to_string(&PosetFile::from_poset(p)).unwrap());
    path.to_string_lossy().into_owned()
}

#[test]
fn enumerate_examples() {
    assert_eq!(stdout_lines(&["enumerate", "rationals01", "--count", "5"]), ["0", "1", "1/2", "1/3", "2/3"]);
    assert_eq!(stdout_lines(&["enumerate", "cantor-strings", "--count", "4"]), ["ε", "0", "1", "00"]);
    assert_eq!(stdout_lines(&["enumerate", "majorization", "--n", "2", "--count", "3"]), ["(1/2,1/2)", "(1,0)", "(2/3,1/3)"]);
}

#[test]
fn emit_step_zero_prints_zero() {
    let lines = stdout_lines(&["emit", "majorization", "--n", "2", "--steps", "3"]);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "0");
}

#[test]
fn approx_examples() {
    let lines = stdout_lines(&["approx", "majorization", "(1/2,1/2,0)", "--eps", "1/10"]);
    assert_eq!(lines[0], "x = (1/2,1/2,0)");
    assert!(lines[2].starts_with("q = ("));
    let lines = stdout_lines(&["approx", "real", "sqrt2", "--width", "1/1024"]);
    assert_eq!(lines[1], "width = 1/1024");
    assert_eq!(lines[3], "lo^2 < 2 < hi^2: true");
    let bottom = run(&["approx", "majorization", "(1/3,1/3,1/3)", "--eps", "1/10"]);
    assert_eq!(bottom.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bottom.stderr).contains("bottom"));
}

#[test]
fn check_chain_passes() {
    let file = poset_file("chain.json", &FinitePoset::chain(3));
    for suite in ["density", "conditional", "theorems", "mu"] {
        let out = run(&["check", &file, "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(json["failures"], 0);
    }
}

#[test]
fn check_grid_shows_density_structure() {
    let file = poset_file("grid.json", &two_blocks_poset());
    let out = run(&["check", &file, "--suite", "density"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entry = json["entries"].as_array().unwrap().iter().find(|e| e["property"] == "minimum_debreu_dense_subset").unwrap();
    let witness: Vec<&str> = entry["witness"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(witness.len(), 3);
    for (x, shifted) in [("0", "2"), ("1/2", "5/2"), ("1", "3")] {
        assert!(witness.contains(&x) || witness.contains(&shifted), "{witness:?}");
    }
}

#[test]
fn check_writes_report_file() {
    let file = poset_file("out_chain.json", &FinitePoset::chain(2));
    let out_path = std::env::temp_dir().join(format!("ordbase-cli-{}", std::process::id())).join("report.json");
    let out = run(&["check", &file, "--suite", "mu", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(json["suite"], "mu");
}

#[test]
fn user_multi_utility() {
    let file = poset_file("mu_chain.json", &FinitePoset::chain(2));
    let good = temp_file("good_mu.json", r#"{"functions":[{"name":"h","values":{"0":"0","1":"1/2"}}]}"#);
    let out = run(&["check", &file, "--suite", "mu", "--mu", good.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let strict = json["entries"].as_array().unwrap().iter().find(|e| e["property"] == "input.strict").unwrap();
    assert_eq!(strict["holds"], true);
    let constant = temp_file("const_mu.json", r#"{"functions":[{"name":"c","values":{"0":"1","1":"1"}}]}"#);
    let out = run(&["check", &file, "--suite", "mu", "--mu", constant.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let skipped = json["entries"].as_array().unwrap().iter().find(|e| e["property"] == "input.theorem4").unwrap();
    assert_eq!(skipped["kind"], "skipped");
}

#[test]
fn bad_inputs_exit_nonzero() {
    let cyclic = temp_file("cyclic.json", r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#);
    assert_eq!(run(&["check", cyclic.to_str().unwrap()]).status.code(), Some(2));
    let garbled = temp_file("garbled.json", "{\"elements\": [");
    assert_eq!(run(&["check", garbled.to_str().unwrap()]).status.code(), Some(2));
    let unknown = temp_file("unknown.json", r#"{"elements":["a"],"covers":[["a","b"]]}"#);
    assert_eq!(run(&["check", unknown.to_str().unwrap()]).status.code(), Some(2));
    let big = poset_file("big.json", &FinitePoset::antichain(20));
    assert_eq!(run(&["check", &big]).status.code(), Some(2));
}

#[test]
fn gallery_lists_instances() {
    let lines = stdout_lines(&["gallery"]);
    let names: Vec<&String> = lines.iter().filter(|l| l.starts_with("== ")).collect();
    assert!(names.len() >= 4);
    assert!(lines.iter().all(|l| !l.trim_start().starts_with("FAIL")));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poset_file_round_trip(seed in any::<u64>(), n in 0usize..10, prob in 0.0f64..1.0) {
        let p = random_poset(&mut ChaCha8Rng::seed_from_u64(seed), n, prob);
        let text = serde_json::to_string(&PosetFile::from_poset(&p)).unwrap();
        let back: PosetFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_poset().unwrap(), p);
    }
}
