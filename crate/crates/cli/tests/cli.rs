//! End-to-end runs of the `g2skein` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn core_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core")
}

fn diagram(name: &str) -> String {
    core_dir()
        .join("diagrams")
        .join(format!("{name}.txt"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2skein"))
        .args(args)
        .env_remove("SKEIN_RULE_PATH")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut a = args.to_vec();
    a.push("--format");
    a.push("json");
    let o = run(&a);
    (
        serde_json::from_slice(&o.stdout).expect("json output"),
        o.status.code().unwrap(),
    )
}

#[test]
fn eval_unknot_and_curl() {
    let o = run(&["eval", &diagram("unknot")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^5 + q^4 + q + 1 + q^-1 + q^-4 + q^-5\n");
    let o = run(&["eval", &diagram("kinked-unknot")]);
    assert_eq!(stdout(&o), "q^11 + q^10 + q^7 + q^6 + q^5 + q^2 + q\n");
}

#[test]
fn eval_uses_header_and_flag_rule_sets() {
    assert_eq!(
        stdout(&run(&["eval", &diagram("a1-unknot")])),
        "-q^(1/2) - q^(-1/2)\n"
    );
    assert_eq!(
        stdout(&run(&["eval", &diagram("unknot"), "--ruleset", "a1"])),
        "-q^(1/2) - q^(-1/2)\n"
    );
}

#[test]
fn eval_specializes() {
    let o = run(&["eval", &diagram("unknot"), "--at", "q=2"]);
    assert!(stdout(&o).contains("at q = 2: 1651/32"), "{}", stdout(&o));
    let (j, code) = json(&["eval", &diagram("unknot"), "--at", "q=1"]);
    assert_eq!(code, 0);
    assert_eq!(j["at"]["value"], "7");
}

#[test]
fn eval_reports_moves() {
    let (j, code) = json(&["eval", &diagram("borromean"), "--report-moves"]);
    assert_eq!(code, 0);
    assert_eq!(j["moves"]["crossings_expanded"], 6);
    let golden = std::fs::read_to_string(core_dir().join("golden/v1/borromean.golden")).unwrap();
    assert_eq!(j["value"], golden.trim());
}

#[test]
fn strategies_agree() {
    let a = stdout(&run(&["eval", &diagram("figure-eight")]));
    let b = stdout(&run(&[
        "eval",
        &diagram("figure-eight"),
        "--strategy",
        "random:7",
    ]));
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("g2skein-cli-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "X a b\n").unwrap();
    assert_eq!(run(&["eval", bad.to_str().unwrap()]).status.code(), Some(2));
    let tet = dir.join("tet.txt");
    std::fs::write(&tet, "T a a b b\n").unwrap();
    assert_eq!(run(&["eval", tet.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(
        run(&["eval", &diagram("unknot"), "--ruleset", "missing"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["eval", &diagram("unknot"), "--at", "q=0"])
            .status
            .code(),
        Some(4)
    );
    let (j, code) = json(&["eval", bad.to_str().unwrap()]);
    assert_eq!((code, j["exit_code"].as_i64()), (2, Some(2)));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn rule_path_search() {
    let dir = std::env::temp_dir().join(format!("g2skein-cli-rules-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy(core_dir().join("rules/g2.rules"), dir.join("mine.rules")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_g2skein"))
        .args(["eval", &diagram("unknot"), "--ruleset", "mine"])
        .env("SKEIN_RULE_PATH", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^5 + q^4 + q + 1 + q^-1 + q^-4 + q^-5\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_equations_and_identities() {
    let o = run(&["verify", "--suite", "equations"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("11/11 printed equations reproduced"));
    assert!(text.contains("1 holds, 1 fails as expected"));
    let (j, _) = json(&["verify", "--suite", "equations"]);
    let rows: Vec<String> = j["assignment"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            format!(
                "{} {} {}",
                r["rule"].as_str().unwrap(),
                r["diagram"].as_str().unwrap(),
                r["symbol"].as_str().unwrap()
            )
        })
        .collect();
    let golden =
        std::fs::read_to_string(core_dir().join("golden/v1/g2-assignment.golden")).unwrap();
    let want: Vec<&str> = golden.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, want);
    let o = run(&["verify", "--suite", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("5/5 quantum-integer identities hold"));
}

#[test]
fn verify_moves() {
    assert_eq!(run(&["verify", "--suite", "moves"]).status.code(), Some(0));
}

#[test]
fn verify_conjectures_small_n_pass() {
    let (j, code) = json(&["verify", "--suite", "conjectures", "--max-n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(j["dim_inv_g2"], serde_json::json!([1, 0, 1, 1, 4, 10]));
}

#[test]
fn verify_conjectures_names_first_failure() {
    let o = run(&["verify", "--suite", "conjectures", "--max-n", "6"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("first failing check: acyclic count n=6"));
}

#[test]
fn derive_targets() {
    let o = run(&["derive", "--target", "g2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("e2 = -1"));
    let o = run(&["derive", "--target", "g2-crossing"]);
    assert!(stdout(&o).contains("crossing A f2\ncrossing B g2\ncrossing C f1\ncrossing D g1\n"));
    let (j, code) = json(&["derive", "--target", "a1"]);
    assert_eq!(code, 0);
    assert_eq!(j["a"], "-q^(1/2) - q^(-1/2)");
    assert_eq!(j["b"], "-q^(1/4)");
    assert_eq!(j["c"], "-q^(-1/4)");
}

#[test]
fn enumeration() {
    assert_eq!(
        stdout(&run(&["enum", "--n", "4", "--kind", "acyclic"]))
            .lines()
            .count(),
        4
    );
    assert_eq!(
        stdout(&run(&[
            "enum",
            "--n",
            "5",
            "--kind",
            "nonpos",
            "--count-only"
        ])),
        "10\n"
    );
    assert_eq!(
        stdout(&run(&[
            "enum",
            "--n",
            "6",
            "--kind",
            "matchings",
            "--filter",
            "sixpoint",
            "--count-only"
        ])),
        "14\n"
    );
    assert_eq!(
        stdout(&run(&[
            "enum",
            "--n",
            "6",
            "--kind",
            "matchings",
            "--count-only"
        ])),
        "15\n"
    );
    assert_eq!(
        stdout(&run(&[
            "enum",
            "--n",
            "8",
            "--kind",
            "paths",
            "--count-only"
        ])),
        "84\n"
    );
    let (j, _) = json(&["enum", "--n", "4", "--kind", "paths"]);
    assert_eq!(j["count"], 3);
    assert_ne!(
        run(&["enum", "--n", "4", "--kind", "acyclic", "--filter", "sixpoint"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn dims_table() {
    let (j, code) = json(&["dims", "--max-n", "8"]);
    assert_eq!(code, 0);
    assert_eq!(
        j["G2"],
        serde_json::json!([1, 0, 1, 1, 4, 10, 35, 120, 455])
    );
    assert_eq!(j["C2"], serde_json::json!([1, 0, 1, 0, 3, 0, 14, 0, 84]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["eval", "BORR", "--format", "json"],
        vec!["verify", "--suite", "equations", "--format", "json"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| {
                if *a == "BORR" {
                    diagram("borromean")
                } else {
                    a.to_string()
                }
            })
            .collect();
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&a).stdout, run(&a).stdout);
    }
}
