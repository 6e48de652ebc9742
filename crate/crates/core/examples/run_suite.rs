//! Runs a suite file (the bundled one by default) and prints every report with its notes.

use std::path::PathBuf;
use std::process::ExitCode;

use simdim::verify::{all_passed, load_suite, run_suite};

fn main() -> ExitCode {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("suites/desk.suite"));
    let suite = match load_suite(&path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let reports = run_suite(&suite, true);
    for r in &reports {
        println!("{r}  [{:.2?}]", r.elapsed);
        for n in r.notes.iter().chain(&r.failures) {
            println!("    {n}");
        }
    }
    if all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
