//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use nc_rainbow::reproduce::run_criterion;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for id in 1..=11 {
        let start = Instant::now();
        let o = run_criterion(id, false);
        println!(
            "criterion {:>2} {} {:<30} ({:.2?}) {}",
            o.id,
            if o.passed { "PASS" } else { "FAIL" },
            o.title,
            start.elapsed(),
            o.detail
        );
        if !o.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
