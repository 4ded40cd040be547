//! One pass/fail line per acceptance criterion.
//!
//! Tolerances are pinned: every check compares exact rationals or integers,
//! so the numeric tolerance is zero. Time limits are per criterion and
//! printed beside the wall time.

use std::process::ExitCode;

use medgraph::suites::{run_suite, SUITE_NAMES};

fn main() -> ExitCode {
    // cargo passes libtest flags; honour a name filter and ignore the rest
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    let mut ran = 0;
    for name in SUITE_NAMES {
        if filter.as_deref().is_some_and(|f| !name.contains(f)) {
            continue;
        }
        let report = run_suite(name).expect("known suite");
        for check in report.checks.iter().filter(|c| c.criterion.is_some()) {
            println!("{}", check.line());
            ran += 1;
            if !check.passed {
                failed += 1;
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
