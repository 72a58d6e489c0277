//! One line per acceptance criterion; failing claims are listed under it.

use std::process::ExitCode;

use autoratio::claims::{run_criterion, SuiteOptions, CRITERIA};

fn main() -> ExitCode {
    let quick = std::env::var_os("AUTORATIO_QUICK").is_some();
    let verbose = std::env::var_os("AUTORATIO_VERBOSE").is_some();
    let opts = SuiteOptions {
        quick,
        ..SuiteOptions::default()
    };
    let mut all = true;
    for n in CRITERIA {
        let result = run_criterion(n, &opts);
        println!("{result}");
        for row in result.rows.iter().filter(|r| verbose || !r.passed) {
            println!(
                "    {}: expected {}, computed {}",
                row.claim, row.expected, row.computed
            );
        }
        all &= result.passed();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
