//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Tolerances, seeds and time bounds are
//! the constants in `g2skein::acceptance`.
//!
//! Criteria can be selected by number: `cargo test --test acceptance -- 4 7`.

use std::process::ExitCode;

use g2skein::acceptance::run;

fn main() -> ExitCode {
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<usize> = if selected.is_empty() { (1..=12).collect() } else { selected };
    let mut failed = Vec::new();
    for id in ids {
        let o = run(id);
        println!("{}", o.line());
        if !o.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
