//! Golden files under `golden/v1` agree with freshly computed values.

use std::path::PathBuf;

use g2skein::confluence::assignment_table;
use g2skein::planar::borromean;
use g2skein::repdim::RootSystem;
use g2skein::skein::{reduce_closed, RuleSet};

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("golden/v1")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

fn data_lines(text: &str) -> Vec<String> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(str::to_string)
        .collect()
}

#[test]
fn manifest_lists_every_golden_file() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden/v1");
    let mut listed: Vec<String> = data_lines(&golden("MANIFEST"))
        .iter()
        .map(|l| l.split('\t').next().unwrap().to_string())
        .collect();
    let mut present: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n != "MANIFEST")
        .collect();
    listed.sort();
    present.sort();
    assert_eq!(listed, present);
}

#[test]
fn assignment_table_matches() {
    let rows: Vec<String> = assignment_table(&RuleSet::g2())
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(rows, data_lines(&golden("g2-assignment.golden")));
}

#[test]
fn borromean_matches() {
    let v = reduce_closed(&borromean(), &RuleSet::g2()).unwrap();
    assert_eq!(v.to_string(), golden("borromean.golden").trim());
}

#[test]
fn root_normalization_matches() {
    let rows: Vec<String> = RootSystem::ALL
        .iter()
        .map(|r| {
            let d: Vec<String> = r.symmetrizer().iter().map(ToString::to_string).collect();
            format!("{r} {}", d.join(" "))
        })
        .collect();
    assert_eq!(rows, data_lines(&golden("repdim-normalization.golden")));
}
