//! Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
//! any criterion fails. `cargo test --test acceptance -- 12` runs a subset.

use digitlang::repro::{run_criterion, ReproOptions, CRITERIA};

fn main() {
    let wanted: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let opts = ReproOptions::default();
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        if !wanted.is_empty() && !wanted.contains(&id) {
            continue;
        }
        let r = run_criterion(id, &opts);
        println!("{r} ({} ms)", r.elapsed_ms);
        if !r.passed {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
