//! Acceptance battery. Runs without the libtest harness so every criterion's
//! pass/fail line reaches the output; exits nonzero if any criterion fails.

use gconvex::acceptance::{self, Criterion, DEFAULT_SEED};

fn main() {
    let criteria: [fn() -> Criterion; 8] = [
        acceptance::criterion_1,
        acceptance::criterion_2,
        acceptance::criterion_3,
        || acceptance::criterion_4(DEFAULT_SEED),
        || acceptance::criterion_5(DEFAULT_SEED),
        || acceptance::criterion_6(DEFAULT_SEED),
        || acceptance::criterion_7(DEFAULT_SEED),
        acceptance::criterion_8,
    ];
    let mut failed = Vec::new();
    for run in criteria {
        let c = run();
        println!("{c}");
        for line in &c.details {
            println!("    {line}");
        }
        if !c.passed {
            failed.push(c.id);
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
