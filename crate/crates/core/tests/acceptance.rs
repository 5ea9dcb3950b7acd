//! Runs every numbered criterion of the verification suite and prints one
//! pass/fail line per criterion. Built without the libtest harness so the
//! lines are always shown.

use std::process::ExitCode;

use antipodal::verify::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for &(id, name) in CRITERIA {
        let start = std::time::Instant::now();
        let e = run_criterion(id);
        println!(
            "criterion {id}: {} - {name}: {} [{:.1}s]",
            if e.pass { "PASS" } else { "FAIL" },
            e.actual,
            start.elapsed().as_secs_f64()
        );
        for f in &e.failures {
            println!("    {f}");
        }
        if !e.pass {
            failed.push(id);
        }
    }
    println!("{} passed, {} failed", CRITERIA.len() - failed.len(), failed.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
